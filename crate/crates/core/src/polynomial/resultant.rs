use super::mpoly::MPoly;
use super::roots::sylvester;
use super::PolyError;

/// Sylvester resultant in the named variable, rows of `p` first.
pub fn resultant(p: &MPoly, q: &MPoly, var: char) -> Result<MPoly, PolyError> {
    let v = p.var_index(var)?;
    q.var_index(var)?;
    resultant_at(p, q, v)
}

pub fn resultant_at(p: &MPoly, q: &MPoly, v: usize) -> Result<MPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Ok(MPoly::zero(p.field(), p.vars()));
    }
    let a = p.to_univariate(v);
    let b = q.to_univariate(v);
    if a.len() == 1 && b.len() == 1 {
        return Ok(MPoly::one(p.field(), p.vars()));
    }
    determinant(sylvester(&a, &b, &MPoly::zero(p.field(), p.vars())))
}

/// Fraction-free (Bareiss) determinant over a polynomial ring.
pub fn determinant(mut m: Vec<Vec<MPoly>>) -> Result<MPoly, PolyError> {
    let n = m.len();
    let field = m[0][0].field().clone();
    let vars = m[0][0].vars().to_vec();
    let mut sign = false;
    let mut prev = MPoly::one(&field, &vars);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(MPoly::zero(&field, &vars));
        };
        if piv != k {
            m.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_divide(&prev)?;
            }
            m[i][k] = MPoly::zero(&field, &vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}

use crate::homogeneous::{cs_polynomial, hom_type, CatalogName, HomFoliation, HomType};
use crate::numeric::{ratio, rat, NumberField, Rational};
use crate::polynomial::UPoly;

use super::ClassError;

/// One of the five convex homogeneous classes of degree four.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// 1 to 5.
    pub index: usize,
    pub representative: CatalogName,
    pub hom_type: HomType,
    /// Coefficients of the monic Camacho–Sad polynomial, constant term first.
    pub cs: Vec<Rational>,
}

impl TableRow {
    pub fn cs_text(&self) -> String {
        let field = NumberField::rationals();
        let p = UPoly::new(&field, self.cs.iter().map(|c| field.rat(c.clone())).collect());
        p.to_mpoly(&crate::homogeneous::LAMBDA, 0).to_string()
    }
}

fn product(factors: &[(Rational, u32)]) -> Vec<Rational> {
    // prod (λ + c)^e
    let q = NumberField::rationals();
    let mut out = UPoly::constant(q.one());
    for (c, e) in factors {
        let lin = UPoly::new(&q, vec![q.rat(c.clone()), q.one()]);
        out = out.mul(&lin.pow(*e));
    }
    out.as_qpoly().expect("rational").coeffs().to_vec()
}

fn times(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let q = NumberField::rationals();
    let lift = |v: &[Rational]| UPoly::new(&q, v.iter().map(|c| q.rat(c.clone())).collect());
    lift(a).mul(&lift(b)).as_qpoly().expect("rational").coeffs().to_vec()
}

/// The types and Camacho–Sad polynomials of the five classes.
pub fn table1() -> Vec<TableRow> {
    let one = rat(1);
    let row = |index, representative, radial: &[(u32, u32)], cs: Vec<Rational>| TableRow {
        index,
        representative,
        hom_type: HomType::from_counts(4, radial, &[]),
        cs,
    };
    let quadratic = vec![ratio(9, 13), rat(2), rat(1)];
    vec![
        row(1, CatalogName::Omega(1), &[(3, 2)], product(&[(-one.clone(), 2), (ratio(1, 3), 3)])),
        row(2, CatalogName::Omega(2), &[(2, 3)], product(&[(-one.clone(), 3), (rat(1), 2)])),
        row(
            3,
            CatalogName::Omega(3),
            &[(1, 1), (2, 1), (3, 1)],
            times(&product(&[(-one.clone(), 3)]), &quadratic),
        ),
        row(4, CatalogName::Omega(4), &[(1, 2), (2, 2)], product(&[(-one.clone(), 4), (rat(3), 1)])),
        row(5, CatalogName::Omega(5), &[(1, 3), (3, 1)], product(&[(-one, 4), (rat(3), 1)])),
    ]
}

/// Coefficients of the Camacho–Sad polynomial when they are rational.
pub fn cs_coefficients(h: &HomFoliation) -> Result<Option<Vec<Rational>>, ClassError> {
    let p = cs_polynomial(h)?;
    let u = UPoly::from_mpoly(&p, 0)?;
    Ok(u.as_qpoly().map(|q| q.coeffs().to_vec()))
}

/// The invariant pair of a homogeneous foliation and the rows sharing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatch {
    pub hom_type: HomType,
    pub cs: Option<Vec<Rational>>,
    /// Indices of the matching rows; a convex class has exactly one.
    pub rows: Vec<usize>,
}

impl ClassMatch {
    pub fn unique(&self) -> Option<usize> {
        match self.rows.as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }
}

/// Both the type and the Camacho–Sad polynomial are compared, since rows 4 and 5 share the
/// latter.
pub fn classify_convex(h: &HomFoliation) -> Result<ClassMatch, ClassError> {
    let hom_type = hom_type(h)?;
    let cs = cs_coefficients(h)?;
    let rows = table1()
        .into_iter()
        .filter(|r| r.hom_type == hom_type && cs.as_ref() == Some(&r.cs))
        .map(|r| r.index)
        .collect();
    Ok(ClassMatch { hom_type, cs, rows })
}

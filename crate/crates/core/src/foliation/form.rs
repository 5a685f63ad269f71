use crate::numeric::NumberField;
use crate::polynomial::{gcd::gcd_all, MPoly};

use super::{FoliationError, XY, XYZ};

/// A foliation of the projective plane given by `a dx + b dy + c dz` with
/// `x a + y b + z c = 0` and coprime coefficients of degree `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjFoliation {
    a: MPoly,
    b: MPoly,
    c: MPoly,
    degree: u32,
}

/// Whether the line at infinity is invariant for a foliation built from affine data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfinityCase {
    Invariant,
    /// The top graded part was radial, so a factor `z` was removed.
    NotInvariant,
}

/// The field containing all of the given polynomials' coefficients.
pub(crate) fn joint_field<'a>(
    polys: impl IntoIterator<Item = &'a MPoly>,
) -> Result<NumberField, FoliationError> {
    let mut field: Option<NumberField> = None;
    for p in polys {
        let f = p.field();
        match &field {
            None => field = Some(f.clone()),
            Some(g) if g.is_rational() => field = Some(f.clone()),
            Some(g) if f.is_rational() || g == f => {}
            Some(g) => {
                return Err(FoliationError::FieldMismatch(
                    g.label().to_string(),
                    f.label().to_string(),
                ))
            }
        }
    }
    Ok(field.unwrap_or_else(NumberField::rationals))
}

/// The larger of two fields, one of which must be the rationals unless they coincide.
pub(crate) fn larger_field(a: &NumberField, b: &NumberField) -> Result<NumberField, FoliationError> {
    if a.is_rational() || a == b {
        Ok(b.clone())
    } else if b.is_rational() {
        Ok(a.clone())
    } else {
        Err(FoliationError::FieldMismatch(a.label().to_string(), b.label().to_string()))
    }
}

fn into_ring(p: &MPoly, field: &NumberField, vars: &[char]) -> Result<MPoly, FoliationError> {
    let p = if p.vars() == vars {
        p.clone()
    } else if p.nvars() == vars.len() {
        p.rename(vars)
    } else {
        p.with_vars(vars)?
    };
    Ok(p.promote(field)?)
}

impl ProjFoliation {
    pub fn new(a: MPoly, b: MPoly, c: MPoly) -> Result<Self, FoliationError> {
        let field = joint_field([&a, &b, &c])?;
        let [a, b, c] = [a, b, c].map(|p| into_ring(&p, &field, &XYZ));
        let (a, b, c) = (a?, b?, c?);
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(FoliationError::ZeroForm);
        }
        let degs: Vec<u32> = [&a, &b, &c]
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                if p.is_homogeneous() {
                    Ok(p.total_degree().unwrap())
                } else {
                    Err(FoliationError::NotHomogeneous)
                }
            })
            .collect::<Result<_, _>>()?;
        if degs.iter().any(|&e| e != degs[0]) || degs[0] == 0 {
            return Err(FoliationError::NotHomogeneous);
        }
        let x = MPoly::var_at(&field, &XYZ, 0);
        let y = MPoly::var_at(&field, &XYZ, 1);
        let z = MPoly::var_at(&field, &XYZ, 2);
        if !(&(&(&x * &a) + &(&y * &b)) + &(&z * &c)).is_zero() {
            return Err(FoliationError::EulerViolated);
        }
        let g = gcd_all([&a, &b, &c]).expect("nonempty");
        if !g.is_constant() {
            return Err(FoliationError::CommonFactor(g.normalize().to_string()));
        }
        Ok(ProjFoliation {
            a,
            b,
            c,
            degree: degs[0] - 1,
        })
    }

    pub fn a(&self) -> &MPoly {
        &self.a
    }

    pub fn b(&self) -> &MPoly {
        &self.b
    }

    pub fn c(&self) -> &MPoly {
        &self.c
    }

    pub fn coefficients(&self) -> [&MPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &NumberField {
        [&self.a, &self.b, &self.c]
            .into_iter()
            .find(|p| !p.is_zero())
            .expect("nonzero form")
            .field()
    }

    /// `x a + y b + z c`, which is zero for every constructed foliation.
    pub fn euler_residual(&self) -> MPoly {
        let f = self.field().clone();
        let v = |i| MPoly::var_at(&f, &XYZ, i);
        &(&(&v(0) * &self.a) + &(&v(1) * &self.b)) + &(&v(2) * &self.c)
    }

    /// The same foliation with coefficients in a larger field.
    pub fn promote(&self, field: &NumberField) -> Result<Self, FoliationError> {
        if self.field() == field {
            return Ok(self.clone());
        }
        Ok(ProjFoliation {
            a: self.a.promote(field)?,
            b: self.b.promote(field)?,
            c: self.c.promote(field)?,
            degree: self.degree,
        })
    }

    /// The affine form `A dx + B dy` in the chart `z = 1`.
    pub fn affine_form(&self) -> (MPoly, MPoly) {
        let restrict = |p: &MPoly| {
            p.dehomogenize('z')
                .expect("z is a variable")
                .with_vars(&XY)
                .expect("x, y remain")
        };
        (restrict(&self.a), restrict(&self.b))
    }

    /// Pulls the foliation back by an invertible linear change of the homogeneous coordinates.
    pub fn linear_pullback(&self, m: &[Vec<crate::numeric::AlgNum>]) -> Result<Self, FoliationError> {
        let map = crate::polynomial::AffineMap::linear(m.to_vec())?;
        let coeffs = map.pullback_form(&[self.a.clone(), self.b.clone(), self.c.clone()])?;
        let [a, b, c]: [MPoly; 3] = coeffs.try_into().expect("three coefficients");
        ProjFoliation::new(a, b, c)
    }
}

/// Homogenizes the affine form `A dx + B dy` to a foliation of the projective plane.
pub fn make_foliation(a: &MPoly, b: &MPoly) -> Result<ProjFoliation, FoliationError> {
    Ok(make_foliation_with_case(a, b)?.0)
}

/// As [`make_foliation`], also reporting whether the line at infinity is invariant.
pub fn make_foliation_with_case(
    a: &MPoly,
    b: &MPoly,
) -> Result<(ProjFoliation, InfinityCase), FoliationError> {
    if a.is_zero() && b.is_zero() {
        return Err(FoliationError::ZeroForm);
    }
    let field = joint_field([a, b])?;
    let a = into_ring(a, &field, &XY)?;
    let b = into_ring(b, &field, &XY)?;
    let g = gcd_all([&a, &b]).expect("nonempty");
    if !g.is_constant() {
        return Err(FoliationError::CommonFactor(g.normalize().to_string()));
    }
    let n = a
        .total_degree()
        .into_iter()
        .chain(b.total_degree())
        .max()
        .expect("nonzero form");
    let x2 = MPoly::var_at(&field, &XY, 0);
    let y2 = MPoly::var_at(&field, &XY, 1);
    let top = &(&x2 * &a.homogeneous_part(n)) + &(&y2 * &b.homogeneous_part(n));
    let ah = a.homogenize('z', n)?;
    let bh = b.homogenize('z', n)?;
    let x = MPoly::var_at(&field, &XYZ, 0);
    let y = MPoly::var_at(&field, &XYZ, 1);
    let z = MPoly::var_at(&field, &XYZ, 2);
    let radial = -&(&(&x * &ah) + &(&y * &bh));
    if top.is_zero() {
        let c = radial.exact_divide(&z)?;
        Ok((ProjFoliation::new(ah, bh, c)?, InfinityCase::NotInvariant))
    } else {
        Ok((
            ProjFoliation::new(&z * &ah, &z * &bh, radial)?,
            InfinityCase::Invariant,
        ))
    }
}

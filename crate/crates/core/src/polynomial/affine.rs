use crate::numeric::{AlgNum, NumberField};

use super::mpoly::MPoly;
use super::PolyError;

/// An invertible affine map `p -> M p + t` on 2- or 3-space, with a recorded scalar multiplier.
///
/// Pulling back replaces coordinate `i` by the `i`-th component of the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    matrix: Vec<Vec<AlgNum>>,
    translation: Vec<AlgNum>,
    scalar: AlgNum,
}

fn det(m: &[Vec<AlgNum>]) -> AlgNum {
    match m.len() {
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
                &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
            };
            &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2)))
                + &(&m[0][2] * &minor(1, 2, 0, 1))
        }
        _ => unreachable!("dimension checked at construction"),
    }
}

impl AffineMap {
    pub fn new(matrix: Vec<Vec<AlgNum>>, translation: Vec<AlgNum>) -> Result<Self, PolyError> {
        let n = matrix.len();
        if !(n == 2 || n == 3) || matrix.iter().any(|r| r.len() != n) || translation.len() != n {
            return Err(PolyError::ArityMismatch(n, translation.len()));
        }
        if det(&matrix).is_zero() {
            return Err(PolyError::SingularMap);
        }
        let scalar = matrix[0][0].field().one();
        Ok(AffineMap {
            matrix,
            translation,
            scalar,
        })
    }

    pub fn linear(matrix: Vec<Vec<AlgNum>>) -> Result<Self, PolyError> {
        let field = matrix[0][0].field().clone();
        let n = matrix.len();
        Self::new(matrix, vec![field.zero(); n])
    }

    pub fn identity(field: &NumberField, n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Self::linear(matrix).expect("identity is invertible")
    }

    /// Records the multiplier applied by [`AffineMap::scaled_pullback_form`].
    pub fn with_scalar(mut self, scalar: AlgNum) -> Self {
        self.scalar = scalar;
        self
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<AlgNum>] {
        &self.matrix
    }

    pub fn translation(&self) -> &[AlgNum] {
        &self.translation
    }

    pub fn scalar(&self) -> &AlgNum {
        &self.scalar
    }

    pub fn determinant(&self) -> AlgNum {
        det(&self.matrix)
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap, PolyError> {
        let n = self.dim();
        if other.dim() != n {
            return Err(PolyError::ArityMismatch(n, other.dim()));
        }
        let zero = self.scalar.field().zero();
        let matrix: Vec<Vec<AlgNum>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(zero.clone(), |acc, k| {
                            &acc + &(&self.matrix[i][k] * &other.matrix[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        let translation = (0..n)
            .map(|i| {
                (0..n).fold(self.translation[i].clone(), |acc, k| {
                    &acc + &(&self.matrix[i][k] * &other.translation[k])
                })
            })
            .collect();
        AffineMap::new(matrix, translation)
    }

    /// The components of the map as polynomials in the ring of `like`.
    pub fn components(&self, field: &NumberField, vars: &[char]) -> Vec<MPoly> {
        (0..self.dim())
            .map(|i| {
                let mut p = MPoly::constant(field, vars, self.translation[i].clone());
                for j in 0..self.dim() {
                    p = &p + &MPoly::var_at(field, vars, j).scale(&self.matrix[i][j]);
                }
                p
            })
            .collect()
    }

    fn check_arity(&self, p: &MPoly) -> Result<(), PolyError> {
        if p.nvars() != self.dim() {
            return Err(PolyError::ArityMismatch(self.dim(), p.nvars()));
        }
        Ok(())
    }

    fn target_field(&self, p: &MPoly) -> NumberField {
        if p.field().is_rational() {
            self.scalar.field().clone()
        } else {
            p.field().clone()
        }
    }

    /// `p ∘ φ`.
    pub fn pullback_poly(&self, p: &MPoly) -> Result<MPoly, PolyError> {
        self.check_arity(p)?;
        let comps = self.components(&self.target_field(p), p.vars());
        p.compose(&comps)
    }

    /// Pullback of the 1-form `sum_i coeffs[i] d(x_i)`: new coefficient `j` is `sum_i (c_i ∘ φ) M_ij`.
    pub fn pullback_form(&self, coeffs: &[MPoly]) -> Result<Vec<MPoly>, PolyError> {
        if coeffs.len() != self.dim() {
            return Err(PolyError::ArityMismatch(self.dim(), coeffs.len()));
        }
        let composed: Vec<MPoly> = coeffs
            .iter()
            .map(|c| self.pullback_poly(c))
            .collect::<Result<_, _>>()?;
        let field = composed[0].field().clone();
        let vars = composed[0].vars().to_vec();
        Ok((0..self.dim())
            .map(|j| {
                composed
                    .iter()
                    .enumerate()
                    .fold(MPoly::zero(&field, &vars), |acc, (i, c)| {
                        &acc + &c.scale(&self.matrix[i][j])
                    })
            })
            .collect())
    }

    /// The pullback multiplied by the recorded scalar.
    pub fn scaled_pullback_form(&self, coeffs: &[MPoly]) -> Result<Vec<MPoly>, PolyError> {
        Ok(self
            .pullback_form(coeffs)?
            .into_iter()
            .map(|c| c.scale(&self.scalar))
            .collect())
    }
}

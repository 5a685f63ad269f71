use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::algnum::AlgNum;
use super::qpoly::QPoly;
use super::rational::{format_rational, Rational};
use super::NumericError;

/// How irreducibility of the minimal polynomial was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Degree 1, or degree 2–3 with no rational root.
    Checked,
    /// Degree at least 4; trusted as given.
    Asserted,
}

#[derive(Debug)]
struct FieldData {
    minpoly: Vec<Rational>,
    generator: char,
    label: String,
    irreducibility: Irreducibility,
}

/// A simple extension `Q[t]/(m(t))`, shared by reference between its elements.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// Builds `Q(g)` from the coefficients of a monic minimal polynomial, constant term first.
    pub fn new(minpoly: Vec<Rational>, generator: char) -> Result<Self, NumericError> {
        let label = if minpoly.len() == 2 {
            "Q".to_string()
        } else {
            format!("Q({generator})")
        };
        Self::with_label(minpoly, generator, label)
    }

    pub fn with_label(
        minpoly: Vec<Rational>,
        generator: char,
        label: impl Into<String>,
    ) -> Result<Self, NumericError> {
        let p = QPoly::new(minpoly);
        let degree = match p.degree() {
            None | Some(0) => return Err(NumericError::ConstantMinimalPolynomial),
            Some(d) => d,
        };
        if !p.leading().unwrap().is_one() {
            return Err(NumericError::NonMonic);
        }
        let irreducibility = match degree {
            1 => Irreducibility::Checked,
            2 | 3 => {
                if let Some(r) = p.rational_roots().first() {
                    return Err(NumericError::ReducibleAtSmallDegree(format_rational(r)));
                }
                Irreducibility::Checked
            }
            _ => Irreducibility::Asserted,
        };
        Ok(NumberField(Arc::new(FieldData {
            minpoly: p.coeffs().to_vec(),
            generator,
            label: label.into(),
            irreducibility,
        })))
    }

    /// The field of rationals, presented as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        NumberField(Arc::new(FieldData {
            minpoly: vec![Rational::zero(), Rational::one()],
            generator: 't',
            label: "Q".to_string(),
            irreducibility: Irreducibility::Checked,
        }))
    }

    /// `Q(g)` with `g^2 = n`.
    pub fn quadratic(n: i64, generator: char) -> Result<Self, NumericError> {
        Self::new(
            vec![Rational::from_integer((-n).into()), Rational::zero(), Rational::one()],
            generator,
        )
    }

    /// `Q(g)` with `g^2 + g + 1 = 0`, a primitive cube root of unity.
    pub fn cube_roots_of_unity(generator: char) -> Self {
        Self::new(vec![Rational::one(), Rational::one(), Rational::one()], generator)
            .expect("t^2 + t + 1 is irreducible")
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.0.minpoly
    }

    pub fn generator_symbol(&self) -> char {
        self.0.generator
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.0.irreducibility
    }

    pub fn zero(&self) -> AlgNum {
        AlgNum::from_rational(self, Rational::zero())
    }

    pub fn one(&self) -> AlgNum {
        AlgNum::from_rational(self, Rational::one())
    }

    pub fn int(&self, n: i64) -> AlgNum {
        AlgNum::from_rational(self, Rational::from_integer(n.into()))
    }

    pub fn rat(&self, q: Rational) -> AlgNum {
        AlgNum::from_rational(self, q)
    }

    /// The class of `t`.
    pub fn generator(&self) -> AlgNum {
        AlgNum::from_power_basis(self, vec![Rational::zero(), Rational::one()])
    }

    /// The defining equation in the CLI declaration syntax.
    pub fn declaration(&self) -> String {
        let g = self.0.generator;
        let mut out = String::new();
        for (i, c) in self.0.minpoly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => g.to_string(),
                _ => format!("{g}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&abs), mono));
            }
        }
        format!("field {}: {} = 0", self.0.label, out)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.declaration())
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

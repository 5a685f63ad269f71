//! Named foliations, written with exactly the displayed coefficients.

use std::fmt;
use std::str::FromStr;

use crate::foliation::{make_foliation, ProjFoliation, XY};
use crate::numeric::NumberField;
use crate::polynomial::MPoly;

use super::{HomError, HomFoliation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// `(x^d - x) dy - (y^d - y) dx`.
    Fermat(u32),
    /// `(2x^3 - y^3 - 1) y dx + (2y^3 - x^3 - 1) x dy`.
    Hesse,
    /// `(d-1) y^d dx + x (x^(d-1) - d y^(d-1)) dy`.
    H0(u32),
    /// `y^d dx - x^d dy`.
    H1(u32),
    /// `y^d dx + x^d (x dy - y dx)`.
    F1(u32),
    /// `x^d dx + y^d (x dy - y dx)`.
    F2(u32),
    /// The five convex homogeneous foliations of degree four, numbered 1 to 5.
    Omega(u8),
    /// `sum_{i > nu} C(d,i) x^(d-i) y^i dx - sum_{i <= nu} C(d,i) x^(d-i) y^i dy`.
    Omega3Family { degree: u32, nu: u32 },
    /// `y^5 dx + 2x^3 (3x^2 - 5y^2) dy`.
    Example5,
}

impl CatalogName {
    pub const ALL_FIXED: [CatalogName; 7] = [
        CatalogName::Hesse,
        CatalogName::Omega(1),
        CatalogName::Omega(2),
        CatalogName::Omega(3),
        CatalogName::Omega(4),
        CatalogName::Omega(5),
        CatalogName::Example5,
    ];

    pub fn is_homogeneous(self) -> bool {
        !matches!(
            self,
            CatalogName::Fermat(_) | CatalogName::Hesse | CatalogName::F1(_) | CatalogName::F2(_)
        )
    }

    fn validate(self) -> Result<Self, HomError> {
        let bad = |msg: String| Err(HomError::BadParams(msg));
        match self {
            CatalogName::Fermat(d)
            | CatalogName::H0(d)
            | CatalogName::H1(d)
            | CatalogName::F1(d)
            | CatalogName::F2(d)
                if d < 2 =>
            {
                bad(format!("{self}: the degree must be at least 2"))
            }
            CatalogName::Omega(i) if !(1..=5).contains(&i) => {
                bad(format!("omega{i}: the index must be 1 to 5"))
            }
            CatalogName::Omega3Family { degree, nu } if degree < 3 || nu < 1 || nu + 2 > degree => {
                bad(format!("{self}: need 1 <= nu <= d - 2"))
            }
            _ => Ok(self),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Fermat(d) => write!(f, "fermat({d})"),
            CatalogName::Hesse => f.write_str("hesse"),
            CatalogName::H0(d) => write!(f, "h0({d})"),
            CatalogName::H1(d) => write!(f, "h1({d})"),
            CatalogName::F1(d) => write!(f, "f1({d})"),
            CatalogName::F2(d) => write!(f, "f2({d})"),
            CatalogName::Omega(i) => write!(f, "omega{i}"),
            CatalogName::Omega3Family { degree, nu } => write!(f, "omega3({degree},{nu})"),
            CatalogName::Example5 => f.write_str("example5"),
        }
    }
}

/// Accepts `name`, or `name(args)` for the families; families default to degree 4.
impl FromStr for CatalogName {
    type Err = HomError;

    fn from_str(s: &str) -> Result<Self, HomError> {
        let s = s.trim();
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(HomError::BadParams(s.to_string())),
            None => (s, None),
        };
        let nums: Vec<u32> = match args {
            None => Vec::new(),
            Some(a) => a
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| HomError::BadParams(s.to_string()))?,
        };
        let one = |default: u32| -> Result<u32, HomError> {
            match nums.as_slice() {
                [] => Ok(default),
                [d] => Ok(*d),
                _ => Err(HomError::BadParams(s.to_string())),
            }
        };
        let none = || -> Result<(), HomError> {
            if nums.is_empty() {
                Ok(())
            } else {
                Err(HomError::BadParams(s.to_string()))
            }
        };
        let name = match head {
            "fermat" => CatalogName::Fermat(one(4)?),
            "hesse" => {
                none()?;
                CatalogName::Hesse
            }
            "h0" => CatalogName::H0(one(4)?),
            "h1" => CatalogName::H1(one(4)?),
            "f1" => CatalogName::F1(one(4)?),
            "f2" => CatalogName::F2(one(4)?),
            "omega3" if !nums.is_empty() => match nums.as_slice() {
                [degree, nu] => CatalogName::Omega3Family {
                    degree: *degree,
                    nu: *nu,
                },
                _ => return Err(HomError::BadParams(s.to_string())),
            },
            "omega1" | "omega2" | "omega3" | "omega4" | "omega5" => {
                none()?;
                CatalogName::Omega(head.as_bytes()[5] - b'0')
            }
            "example5" => {
                none()?;
                CatalogName::Example5
            }
            _ => return Err(HomError::UnknownName(head.to_string())),
        };
        name.validate()
    }
}

/// A catalog foliation: its affine coefficients, the projective foliation and, when the data
/// are homogeneous, the homogeneous foliation.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub a: MPoly,
    pub b: MPoly,
    pub foliation: ProjFoliation,
    pub hom: Option<HomFoliation>,
}

struct Builder {
    field: NumberField,
}

impl Builder {
    fn poly(&self, terms: &[(i64, [u32; 2])]) -> MPoly {
        let t: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, &e[..])).collect();
        MPoly::from_int_terms(&self.field, &XY, &t)
    }

    fn mono(&self, c: i64, i: u32, j: u32) -> MPoly {
        self.poly(&[(c, [i, j])])
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k as i64).fold(1, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// The named foliation over `field`.
pub fn catalog(name: CatalogName, field: &NumberField) -> Result<CatalogEntry, HomError> {
    let name = name.validate()?;
    let k = Builder {
        field: field.clone(),
    };
    let (a, b) = match name {
        CatalogName::Fermat(d) => (
            k.poly(&[(-1, [0, d]), (1, [0, 1])]),
            k.poly(&[(1, [d, 0]), (-1, [1, 0])]),
        ),
        CatalogName::Hesse => (
            // (2x^3 - y^3 - 1) y
            k.poly(&[(2, [3, 1]), (-1, [0, 4]), (-1, [0, 1])]),
            // (2y^3 - x^3 - 1) x
            k.poly(&[(2, [1, 3]), (-1, [4, 0]), (-1, [1, 0])]),
        ),
        CatalogName::H0(d) => (
            k.mono(d as i64 - 1, 0, d),
            k.poly(&[(1, [d, 0]), (-(d as i64), [1, d - 1])]),
        ),
        CatalogName::H1(d) => (k.mono(1, 0, d), k.mono(-1, d, 0)),
        CatalogName::F1(d) => (
            k.poly(&[(1, [0, d]), (-1, [d, 1])]),
            k.mono(1, d + 1, 0),
        ),
        CatalogName::F2(d) => (
            k.poly(&[(1, [d, 0]), (-1, [0, d + 1])]),
            k.mono(1, 1, d),
        ),
        CatalogName::Omega(1) => (k.mono(1, 0, 4), k.mono(-1, 4, 0)),
        CatalogName::Omega(2) => (
            // y^3 (2x - y), x^3 (x - 2y)
            k.poly(&[(2, [1, 3]), (-1, [0, 4])]),
            k.poly(&[(1, [4, 0]), (-2, [3, 1])]),
        ),
        CatalogName::Omega(3) => (
            // y^2 (6x^2 + 4xy + y^2), -x^3 (x + 4y)
            k.poly(&[(6, [2, 2]), (4, [1, 3]), (1, [0, 4])]),
            k.poly(&[(-1, [4, 0]), (-4, [3, 1])]),
        ),
        CatalogName::Omega(4) => (
            // y^3 (4x + y), x^3 (x + 4y)
            k.poly(&[(4, [1, 3]), (1, [0, 4])]),
            k.poly(&[(1, [4, 0]), (4, [3, 1])]),
        ),
        CatalogName::Omega(5) => (
            // y^2 (6x^2 + 4xy + y^2), 3x^4
            k.poly(&[(6, [2, 2]), (4, [1, 3]), (1, [0, 4])]),
            k.mono(3, 4, 0),
        ),
        CatalogName::Omega(_) => unreachable!("validated"),
        CatalogName::Omega3Family { degree: d, nu } => {
            let a: Vec<(i64, [u32; 2])> =
                (nu + 1..=d).map(|i| (binomial(d, i), [d - i, i])).collect();
            let b: Vec<(i64, [u32; 2])> =
                (0..=nu).map(|i| (-binomial(d, i), [d - i, i])).collect();
            (k.poly(&a), k.poly(&b))
        }
        CatalogName::Example5 => (
            k.mono(1, 0, 5),
            // 2x^3 (3x^2 - 5y^2)
            k.poly(&[(6, [5, 0]), (-10, [3, 2])]),
        ),
    };
    let foliation = make_foliation(&a, &b)?;
    let hom = if name.is_homogeneous() {
        Some(HomFoliation::new(a.clone(), b.clone())?)
    } else {
        None
    };
    Ok(CatalogEntry {
        name,
        a,
        b,
        foliation,
        hom,
    })
}

/// Looks a foliation up by its textual name, as accepted by [`CatalogName::from_str`].
pub fn catalog_by_name(name: &str, field: &NumberField) -> Result<CatalogEntry, HomError> {
    catalog(name.parse()?, field)
}

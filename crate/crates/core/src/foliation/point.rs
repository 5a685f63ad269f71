use std::cmp::Ordering;
use std::fmt;

use crate::numeric::{AlgNum, NumberField};
use crate::polynomial::MPoly;

use super::{FoliationError, XYZ};

// Index of the first nonzero entry, or `None` for the zero vector.
fn first_nonzero(v: &[AlgNum; 3]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

fn normalized(v: [AlgNum; 3]) -> Option<[AlgNum; 3]> {
    let k = first_nonzero(&v)?;
    let inv = v[k].inverse().ok()?;
    Some(v.map(|c| &c * &inv))
}

/// A point `[x:y:z]` of the projective plane, scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: [AlgNum; 3],
}

impl ProjPoint {
    pub fn new(x: AlgNum, y: AlgNum, z: AlgNum) -> Result<Self, FoliationError> {
        let coords = normalized([x, y, z]).ok_or(FoliationError::ZeroVector)?;
        Ok(ProjPoint { coords })
    }

    /// The point `[x:y:1]` of the affine chart `z = 1`.
    pub fn affine(x: AlgNum, y: AlgNum) -> Self {
        let one = x.field().one();
        Self::new(x, y, one).expect("z = 1 is nonzero")
    }

    pub fn origin(field: &NumberField) -> Self {
        Self::affine(field.zero(), field.zero())
    }

    pub fn coords(&self) -> &[AlgNum; 3] {
        &self.coords
    }

    pub fn field(&self) -> &NumberField {
        self.coords
            .iter()
            .map(|c| c.field())
            .find(|f| !f.is_rational())
            .unwrap_or_else(|| self.coords[0].field())
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine coordinates `(x/z, y/z)` when the point is finite.
    pub fn affine_coords(&self) -> Option<(AlgNum, AlgNum)> {
        if self.is_at_infinity() {
            return None;
        }
        let z = &self.coords[2];
        Some((&self.coords[0] / z, &self.coords[1] / z))
    }

    pub fn chart(&self) -> Chart {
        Chart::containing(self)
    }

    /// The point with its coordinates in `field` (coordinates must be rational or already there).
    pub fn promote(&self, field: &NumberField) -> Result<Self, FoliationError> {
        let c = self
            .coords
            .iter()
            .map(|x| x.promote(field))
            .collect::<Result<Vec<_>, _>>()
            .map_err(crate::polynomial::PolyError::from)?;
        let [x, y, z]: [AlgNum; 3] = c.try_into().expect("three coordinates");
        ProjPoint::new(x, y, z)
    }
}

/// Points sort by chart (`z = 1`, then `x = 1`, then `y = 1`) and then by coordinates.
impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.chart()
            .cmp(&other.chart())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// The three standard affine charts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    /// `z = 1` with coordinates `(x, y)`.
    Z,
    /// `x = 1` with coordinates `(y, z)`.
    X,
    /// `y = 1` with coordinates `(x, z)`.
    Y,
}

impl Chart {
    /// The first of `z = 1`, `x = 1`, `y = 1` containing the point.
    pub fn containing(p: &ProjPoint) -> Chart {
        if !p.coords[2].is_zero() {
            Chart::Z
        } else if !p.coords[0].is_zero() {
            Chart::X
        } else {
            Chart::Y
        }
    }

    /// Indices of the two local coordinates and of the coordinate set to 1.
    pub fn indices(self) -> (usize, usize, usize) {
        match self {
            Chart::Z => (0, 1, 2),
            Chart::X => (1, 2, 0),
            Chart::Y => (0, 2, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Chart::Z => "z=1",
            Chart::X => "x=1",
            Chart::Y => "y=1",
        }
    }

    /// Local coordinates of a point of the chart.
    pub fn local_coords(self, p: &ProjPoint) -> (AlgNum, AlgNum) {
        let (i, j, k) = self.indices();
        let c = p.coords();
        (&c[i] / &c[k], &c[j] / &c[k])
    }
}

/// A line `a*x + b*y + c*z = 0`, scaled so its first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Line {
    coeffs: [AlgNum; 3],
}

impl Line {
    pub fn new(a: AlgNum, b: AlgNum, c: AlgNum) -> Result<Self, FoliationError> {
        let coeffs = normalized([a, b, c]).ok_or(FoliationError::ZeroVector)?;
        Ok(Line { coeffs })
    }

    pub fn infinity(field: &NumberField) -> Self {
        Line {
            coeffs: [field.zero(), field.zero(), field.one()],
        }
    }

    /// The line with equation given by a nonzero linear form in `x, y, z`.
    pub fn from_form(form: &MPoly) -> Result<Self, FoliationError> {
        if form.total_degree() != Some(1) || !form.is_homogeneous() || form.nvars() != 3 {
            return Err(FoliationError::NotALine(form.to_string()));
        }
        let c = |i: usize| {
            let mut e = vec![0; 3];
            e[i] = 1;
            form.coefficient(&e)
        };
        Line::new(c(0), c(1), c(2))
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, FoliationError> {
        let (u, v) = (p.coords(), q.coords());
        let cross = |i: usize, j: usize| &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
        Line::new(cross(1, 2), cross(2, 0), cross(0, 1))
    }

    pub fn coeffs(&self) -> &[AlgNum; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> &NumberField {
        self.coeffs
            .iter()
            .map(|c| c.field())
            .find(|f| !f.is_rational())
            .unwrap_or_else(|| self.coeffs[0].field())
    }

    pub fn is_infinity(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[1].is_zero()
    }

    /// The defining linear form in the variables `x, y, z`.
    pub fn form(&self) -> MPoly {
        let field = self.field().clone();
        MPoly::from_terms(
            &field,
            &XYZ,
            (0..3).map(|i| {
                let mut e = vec![0; 3];
                e[i] = 1;
                (e, self.coeffs[i].clone())
            }),
        )
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let c = p.coords();
        (0..3)
            .fold(self.coeffs[0].field().zero(), |acc, i| &acc + &(&self.coeffs[i] * &c[i]))
            .is_zero()
    }

    /// Direction vector of the line in the local coordinates of a chart.
    pub fn direction_in(&self, chart: Chart) -> (AlgNum, AlgNum) {
        let (i, j, _) = chart.indices();
        (self.coeffs[j].clone(), -&self.coeffs[i])
    }

    /// Parses `a,b,c` as the coefficients of `a*x + b*y + c*z`.
    pub fn parse_coefficients(text: &str, field: &NumberField) -> Result<Self, FoliationError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(FoliationError::NotALine(text.to_string()));
        }
        let mut c = Vec::new();
        for p in parts {
            c.push(crate::text::parse_scalar(p, field).map_err(|_| FoliationError::NotALine(text.to_string()))?);
        }
        let [a, b, cc]: [AlgNum; 3] = c.try_into().expect("three coefficients");
        Line::new(a, b, cc)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form())
    }
}

//! The generalized Hénon map family: iteration, Jacobian, inversion,
//! fixed-point shifting, companion-form parameter extraction, and the
//! two-dimensional (B = 0) limit.

use crate::polyroots;
use crate::vec3::det3;
use thiserror::Error;

/// Residual bound for accepting a diagonal fixed point.
pub const FIXED_POINT_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum MapError {
    #[error("nonlinearity term y^{i}·z^{j} has total degree {} < 2", i + j)]
    InvalidTerm { i: u32, j: u32 },
    #[error("non-finite coefficient for term y^{i}·z^{j}")]
    NonFiniteCoefficient { i: u32, j: u32 },
    #[error("map is not invertible: B = 0")]
    NotInvertible,
    #[error("fixed-point equation is identically satisfied (degenerate family)")]
    DegenerateFamily,
    #[error("{zeta} is not a diagonal fixed point (residual {residual:e})")]
    NotAFixedPoint { zeta: f64, residual: f64 },
    #[error("no real fixed points: discriminant {d} <= 0")]
    NoRealFixedPoints { d: f64 },
    #[error("linear part is singular (det = 0)")]
    SingularLinearPart,
}

/// A point of phase space. Orbit drivers never store non-finite states;
/// overflow is reported as an escape outcome instead.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct State {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl State {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        State { x, y, z }
    }

    pub const fn origin() -> Self {
        State::new(0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Euclidean distance to the origin.
    #[inline]
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// One monomial `coeff · y^py · z^pz`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Term {
    py: u32,
    pz: u32,
    coeff: f64,
}

#[inline(always)]
fn powi(base: f64, exp: u32) -> f64 {
    // z^0 = 1 even at z = 0
    match exp {
        0 => 1.0,
        1 => base,
        2 => base * base,
        3 => base * base * base,
        n => base.powi(n as i32),
    }
}

fn eval_terms(terms: &[Term], y: f64, z: f64) -> f64 {
    let mut acc = 0.0;
    for t in terms {
        acc += t.coeff * powi(y, t.py) * powi(z, t.pz);
    }
    acc
}

fn grad_terms(terms: &[Term], y: f64, z: f64) -> (f64, f64) {
    let mut gy = 0.0;
    let mut gz = 0.0;
    for t in terms {
        if t.py >= 1 {
            gy += t.coeff * t.py as f64 * powi(y, t.py - 1) * powi(z, t.pz);
        }
        if t.pz >= 1 {
            gz += t.coeff * t.pz as f64 * powi(y, t.py) * powi(z, t.pz - 1);
        }
    }
    (gy, gz)
}

fn collect_terms(
    terms: impl IntoIterator<Item = ((u32, u32), f64)>,
    min_degree: u32,
) -> Result<Vec<Term>, MapError> {
    let mut out: Vec<Term> = Vec::new();
    for ((i, j), coeff) in terms {
        if !coeff.is_finite() {
            return Err(MapError::NonFiniteCoefficient { i, j });
        }
        if i + j < min_degree {
            return Err(MapError::InvalidTerm { i, j });
        }
        if coeff == 0.0 {
            continue;
        }
        match out.iter_mut().find(|t| t.py == i && t.pz == j) {
            Some(t) => t.coeff += coeff,
            None => out.push(Term { py: i, pz: j, coeff }),
        }
    }
    out.retain(|t| t.coeff != 0.0);
    out.sort_by_key(|t| (t.py, t.pz));
    Ok(out)
}

/// Polynomial nonlinearity with every term of total degree >= 2, so that
/// f(0,0) = 0 and f'(0,0) = 0 hold exactly.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PolyNonlinearity {
    terms: Vec<Term>,
}

impl PolyNonlinearity {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), f64)>) -> Result<Self, MapError> {
        Ok(PolyNonlinearity {
            terms: collect_terms(terms, 2)?,
        })
    }

    pub fn zero() -> Self {
        PolyNonlinearity { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn eval(&self, y: f64, z: f64) -> f64 {
        eval_terms(&self.terms, y, z)
    }

    /// (∂f/∂y, ∂f/∂z) at (y, z).
    #[inline]
    pub fn grad(&self, y: f64, z: f64) -> (f64, f64) {
        grad_terms(&self.terms, y, z)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.terms.iter().map(|t| ((t.py, t.pz), t.coeff))
    }
}

impl std::fmt::Display for PolyNonlinearity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let c = t.coeff;
            if k == 0 {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else if c < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let unit_coeff = a == 1.0 && (t.py > 0 || t.pz > 0);
            if !unit_coeff {
                write!(f, "{a}")?;
            }
            match t.py {
                0 => {}
                1 => write!(f, "y")?,
                n => write!(f, "y^{n}")?,
            }
            match t.pz {
                0 => {}
                1 => write!(f, "z")?,
                n => write!(f, "z^{n}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in (y, z) with constant and linear terms permitted.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RawPolynomial {
    terms: Vec<Term>,
}

impl RawPolynomial {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), f64)>) -> Result<Self, MapError> {
        Ok(RawPolynomial {
            terms: collect_terms(terms, 0)?,
        })
    }

    #[inline]
    pub fn eval(&self, y: f64, z: f64) -> f64 {
        eval_terms(&self.terms, y, z)
    }

    #[inline]
    pub fn grad(&self, y: f64, z: f64) -> (f64, f64) {
        grad_terms(&self.terms, y, z)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.terms.iter().map(|t| ((t.py, t.pz), t.coeff))
    }
}

/// The map x' = y, y' = z, z' = B·x + A·z + C·y + f(y,z) with f of degree >= 2.
/// The origin is a fixed point by construction and det(DT) = B everywhere.
#[derive(Clone, Debug, PartialEq)]
pub struct HenonMap {
    a: f64,
    b: f64,
    c: f64,
    nonlinearity: PolyNonlinearity,
}

impl HenonMap {
    pub fn new(a: f64, b: f64, c: f64, nonlinearity: PolyNonlinearity) -> Self {
        HenonMap {
            a,
            b,
            c,
            nonlinearity,
        }
    }

    pub fn linear(a: f64, b: f64, c: f64) -> Self {
        HenonMap::new(a, b, c, PolyNonlinearity::zero())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn nonlinearity(&self) -> &PolyNonlinearity {
        &self.nonlinearity
    }

    /// B = 0 reduces the dynamics to the planar (y, z) subsystem.
    pub fn is_two_dimensional(&self) -> bool {
        self.b == 0.0
    }

    /// One forward iterate. The result may be non-finite under overflow;
    /// orbit drivers translate that into an escape outcome.
    #[inline]
    pub fn step(&self, s: State) -> State {
        State {
            x: s.y,
            y: s.z,
            z: self.b * s.x + self.a * s.z + self.c * s.y + self.nonlinearity.eval(s.y, s.z),
        }
    }

    /// Derivative matrix at `s`, rows (0,1,0), (0,0,1), (B, C+f_y, A+f_z).
    pub fn jacobian(&self, s: State) -> [[f64; 3]; 3] {
        let (fy, fz) = self.nonlinearity.grad(s.y, s.z);
        [
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [self.b, self.c + fy, self.a + fz],
        ]
    }

    /// Derivative of the planar (y, z) subsystem, for the B = 0 mode.
    pub fn jacobian2d(&self, s: State) -> [[f64; 2]; 2] {
        let (fy, fz) = self.nonlinearity.grad(s.y, s.z);
        [[0.0, 1.0], [self.c + fy, self.a + fz]]
    }

    /// Algebraic inverse of `step`; requires B != 0.
    pub fn inverse_step(&self, s: State) -> Result<State, MapError> {
        if self.b == 0.0 {
            return Err(MapError::NotInvertible);
        }
        let x = (s.z - self.a * s.y - self.c * s.x - self.nonlinearity.eval(s.x, s.y)) / self.b;
        Ok(State {
            x,
            y: s.x,
            z: s.y,
        })
    }
}

/// The family before centering: x' = y, y' = z, z' = B·x + f(y,z) with an
/// arbitrary polynomial f.
#[derive(Clone, Debug, PartialEq)]
pub struct RawHenonMap {
    pub b: f64,
    pub f: RawPolynomial,
}

impl RawHenonMap {
    pub fn new(b: f64, f: RawPolynomial) -> Self {
        RawHenonMap { b, f }
    }
}

/// All real solutions of ζ = B·ζ + f(ζ,ζ), sorted ascending. These are the
/// fixed points of the raw map on the diagonal x = y = z.
pub fn diagonal_fixed_points(raw: &RawHenonMap) -> Result<Vec<f64>, MapError> {
    // g(ζ) = B·ζ + f(ζ,ζ) − ζ as a univariate polynomial
    let max_deg = raw.f.terms().map(|((i, j), _)| i + j).max().unwrap_or(0) as usize;
    let mut coeffs = vec![0.0; max_deg.max(1) + 1];
    coeffs[1] = raw.b - 1.0;
    for ((i, j), c) in raw.f.terms() {
        coeffs[(i + j) as usize] += c;
    }
    if coeffs.iter().all(|&c| c == 0.0) {
        return Err(MapError::DegenerateFamily);
    }
    let mut roots = polyroots::real_roots(&coeffs);
    // Newton polish against the fixed-point residual
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let g = raw.b * *r + raw.f.eval(*r, *r) - *r;
            let (gy, gz) = raw.f.grad(*r, *r);
            let dg = raw.b + gy + gz - 1.0;
            if dg.abs() < 1e-300 {
                break;
            }
            *r -= g / dg;
        }
    }
    roots.retain(|&r| {
        let res = raw.b * r + raw.f.eval(r, r) - r;
        res.abs() < FIXED_POINT_TOL * (1.0 + r.abs())
    });
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9 * (1.0 + a.abs()));
    Ok(roots)
}

fn binom(n: u32, k: u32) -> f64 {
    let mut acc = 1.0;
    for m in 0..k {
        acc = acc * (n - m) as f64 / (m + 1) as f64;
    }
    acc
}

/// Move the diagonal fixed point ζ of `raw` to the origin. The returned map
/// has A = ∂f/∂z(ζ,ζ), C = ∂f/∂y(ζ,ζ), the same B, and the Taylor remainder
/// of f about (ζ,ζ) with constant and linear parts removed.
pub fn shift_to_origin(raw: &RawHenonMap, zeta: f64) -> Result<HenonMap, MapError> {
    let residual = raw.b * zeta + raw.f.eval(zeta, zeta) - zeta;
    if residual.abs() >= FIXED_POINT_TOL * (1.0 + zeta.abs()) {
        return Err(MapError::NotAFixedPoint {
            zeta,
            residual: residual.abs(),
        });
    }
    // binomial expansion of each c·y^i·z^j about (ζ, ζ)
    let mut shifted: Vec<((u32, u32), f64)> = Vec::new();
    for ((i, j), c) in raw.f.terms() {
        for a in 0..=i {
            for b in 0..=j {
                let coeff =
                    c * binom(i, a) * binom(j, b) * powi(zeta, i - a) * powi(zeta, j - b);
                shifted.push(((a, b), coeff));
            }
        }
    }
    let (cy, cz) = raw.f.grad(zeta, zeta);
    let tail = shifted.into_iter().filter(|((a, b), _)| a + b >= 2);
    Ok(HenonMap::new(cz, raw.b, cy, PolyNonlinearity::new(tail)?))
}

/// Result of rewriting the 2D Hénon map y' = z, z' = M + C·y − z² in the
/// centered form y' = z, z' = A·z + C·y − z².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Henon2d {
    pub a: f64,
    pub c: f64,
    /// the two fixed points y± = z± of the standard form
    pub fixed_points: (f64, f64),
    pub discriminant: f64,
}

impl Henon2d {
    /// The centered 2D family as a B = 0 member of the 3D family.
    pub fn to_map(&self) -> HenonMap {
        let f = PolyNonlinearity::new([((0, 2), -1.0)]).expect("degree-2 term");
        HenonMap::new(self.a, 0.0, self.c, f)
    }
}

/// Shift the 2D Hénon map's fixed point y⁺ to the origin: A = −2y⁺ with
/// y± = (C−1 ± √D)/2, D = (C−1)² + 4M. Requires D > 0.
pub fn henon2d_normalize(m: f64, c: f64) -> Result<Henon2d, MapError> {
    let d = (c - 1.0) * (c - 1.0) + 4.0 * m;
    if d <= 0.0 {
        return Err(MapError::NoRealFixedPoints { d });
    }
    let y_plus = 0.5 * (c - 1.0 + d.sqrt());
    let y_minus = 0.5 * (c - 1.0 - d.sqrt());
    Ok(Henon2d {
        a: -2.0 * y_plus,
        c,
        fixed_points: (y_plus, y_minus),
        discriminant: d,
    })
}

/// Extract the Hénon-form parameters (A, B, C) of an arbitrary nonsingular
/// 3×3 linear part: A = tr D, B = det D, C = −(sum of principal 2×2 minors),
/// so the companion matrix shares the characteristic polynomial
/// λ³ − Aλ² − Cλ − B.
pub fn companion_params(d: &[[f64; 3]; 3]) -> Result<(f64, f64, f64), MapError> {
    let det = det3(d);
    if det == 0.0 {
        return Err(MapError::SingularLinearPart);
    }
    let trace = d[0][0] + d[1][1] + d[2][2];
    let minors = (d[0][0] * d[1][1] - d[0][1] * d[1][0])
        + (d[0][0] * d[2][2] - d[0][2] * d[2][0])
        + (d[1][1] * d[2][2] - d[1][2] * d[2][1]);
    Ok((trace, det, -minors))
}

/// The companion matrix with rows (0,1,0), (0,0,1), (B,C,A).
pub fn companion_matrix(a: f64, b: f64, c: f64) -> [[f64; 3]; 3] {
    [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [b, c, a]]
}

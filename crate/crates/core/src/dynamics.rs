//! Reeb flows of `α_ε` on the A_n link: closed form, RK4 cross-check,
//! orbit classification and exact nondegeneracy of return maps.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Angle, Rational};
use crate::geometry::{eval_f, LinkParams, PointC3};

/// Which of the two simple orbits: `γ₊` runs in the `w₁` line, `γ₋` in the `w₂` line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plus,
    Minus,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Minus, Family::Plus];

    /// `1 ± ε`.
    pub fn stretch(self, eps: &Rational) -> Rational {
        match self {
            Family::Plus => Rational::one() + eps,
            Family::Minus => Rational::one() - eps,
        }
    }

    /// `1 ∓ ε`.
    pub fn counter_stretch(self, eps: &Rational) -> Rational {
        match self {
            Family::Plus => Rational::one() - eps,
            Family::Minus => Rational::one() + eps,
        }
    }

    /// Complex coordinate carrying the orbit.
    pub fn coordinate(self) -> usize {
        match self {
            Family::Plus => 1,
            Family::Minus => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
        })
    }
}

/// A period `coeff · π`, with its double approximation for display.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Period {
    pub pi_coeff: Rational,
    pub approx: f64,
}

impl Period {
    fn new(pi_coeff: Rational) -> Self {
        let approx = pi_coeff.to_f64() * std::f64::consts::PI;
        Period { pi_coeff, approx }
    }

    pub fn as_angle(&self) -> Angle {
        Angle::pi_times(self.pi_coeff.clone())
    }
}

/// `γ±^N` with its period, start point and free-homotopy bookkeeping.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitDescriptor {
    pub family: Family,
    pub iterate: u64,
    /// Total period `Nπ/(1 ± ε)` of the iterate.
    pub period: Period,
    pub start: PointC3,
    /// `N mod (n+1)`; `H₁(L) = ℤ/(n+1)`.
    pub homotopy_class: u64,
    pub contractible: bool,
}

impl OrbitDescriptor {
    pub fn new(params: &LinkParams, family: Family, iterate: u64) -> Result<Self> {
        if iterate == 0 {
            return Err(Error::Domain("orbit iterate must be at least 1".into()));
        }
        let period = Period::new(iterate_period_coeff(params.eps(), family, iterate));
        let mut w = [Complex64::new(0.0, 0.0); 3];
        w[family.coordinate()] = Complex64::new(1.0, 0.0);
        let order = u64::from(params.n()) + 1;
        Ok(OrbitDescriptor {
            family,
            iterate,
            period,
            start: PointC3(w),
            homotopy_class: iterate % order,
            contractible: iterate.is_multiple_of(order),
        })
    }

    pub fn iterate(&self, params: &LinkParams, n_fold: u64) -> Result<Self> {
        Self::new(params, self.family, self.iterate * n_fold)
    }
}

/// Coefficient of π in the period of `γ±^N`: `N/(1 ± ε)`.
pub fn iterate_period_coeff(eps: &Rational, family: Family, iterate: u64) -> Rational {
    Rational::from_integer(iterate as i64) / family.stretch(eps)
}

/// Angular speeds of the three coordinate rotations of the Reeb flow:
/// `(4/(n+1), 2(1+ε), 2(1−ε))`.
pub fn reeb_speeds(params: &LinkParams) -> [Rational; 3] {
    let eps = params.eps();
    [
        Rational::new(4, i64::from(params.n()) + 1),
        Rational::from_integer(2) * (Rational::one() + eps),
        Rational::from_integer(2) * (Rational::one() - eps),
    ]
}

fn speeds_f64(params: &LinkParams) -> [f64; 3] {
    let e = params.eps_f64();
    [4.0 / f64::from(params.n() + 1), 2.0 * (1.0 + e), 2.0 * (1.0 - e)]
}

/// The Reeb field `(4i/(n+1) w₀, 2i(1+ε) w₁, 2i(1−ε) w₂)` as complex components.
pub fn reeb_eps_complex(params: &LinkParams, p: &PointC3) -> [Complex64; 3] {
    let s = speeds_f64(params);
    let i = Complex64::i();
    [i * s[0] * p.0[0], i * s[1] * p.0[1], i * s[2] * p.0[2]]
}

/// `φ_t(w) = (e^{4it/(n+1)} w₀, e^{2i(1+ε)t} w₁, e^{2i(1−ε)t} w₂)`.
pub fn flow_closed_form(params: &LinkParams, p: &PointC3, t: f64) -> PointC3 {
    let s = speeds_f64(params);
    PointC3(std::array::from_fn(|j| Complex64::from_polar(1.0, s[j] * t) * p.0[j]))
}

/// Classical RK4 for `ẇ = R_{α_ε}(w)` with step at most `dt`, landing exactly on `t`.
pub fn flow_rk4(params: &LinkParams, p: &PointC3, t: f64, dt: f64) -> Result<PointC3> {
    if dt.is_nan() || dt <= 0.0 {
        return Err(Error::Precondition(format!("step must be positive, got {dt}")));
    }
    if t == 0.0 {
        return Ok(*p);
    }
    let steps = (t.abs() / dt).ceil().max(1.0) as u64;
    let h = t / steps as f64;
    let field = |w: &[Complex64; 3]| reeb_eps_complex(params, &PointC3(*w));
    let axpy = |w: &[Complex64; 3], k: &[Complex64; 3], a: f64| -> [Complex64; 3] {
        std::array::from_fn(|j| w[j] + k[j] * a)
    };
    let mut w = p.0;
    for _ in 0..steps {
        let k1 = field(&w);
        let k2 = field(&axpy(&w, &k1, h / 2.0));
        let k3 = field(&axpy(&w, &k2, h / 2.0));
        let k4 = field(&axpy(&w, &k3, h));
        for j in 0..3 {
            w[j] += (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) * (h / 6.0);
        }
    }
    Ok(PointC3(w))
}

/// A candidate periodic trajectory that is not an orbit of the link.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RejectedCandidate {
    pub start: PointC3,
    #[serde(serialize_with = "serialize_complex")]
    pub f_value: Complex64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimpleOrbits {
    pub orbits: Vec<OrbitDescriptor>,
    pub rejected: Vec<RejectedCandidate>,
}

/// The simple periodic orbits of `R_{α_ε}`.
///
/// With ε nonresonant the only closed trajectories of the diagonal flow lie in
/// the coordinate lines. The `w₀` line meets S⁵ at points with `f = w₀^{n+1} ≠ 0`,
/// so it is rejected.
pub fn enumerate_simple_orbits(params: &LinkParams) -> Result<SimpleOrbits> {
    let mut orbits = Vec::with_capacity(2);
    for family in [Family::Plus, Family::Minus] {
        let orbit = OrbitDescriptor::new(params, family, 1)?;
        return_map(params, &orbit)?;
        orbits.push(orbit);
    }
    let start = PointC3::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let f_value = eval_f(params, &start);
    let rejected = vec![RejectedCandidate {
        start,
        f_value,
        reason: format!("f(1,0,0) = {} != 0: the w0 circle is not on the link", f_value.re),
    }];
    Ok(SimpleOrbits { orbits, rejected })
}

/// Linearized return map `dφ_T` of an orbit, `T` the orbit's total period.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReturnMapResult {
    pub eigen_angles: [Angle; 3],
    #[serde(serialize_with = "serialize_complex3")]
    pub eigenvalues: [Complex64; 3],
    /// Coordinate along the orbit; its eigenvalue is exactly 1.
    pub orbit_direction: usize,
    #[serde(serialize_with = "serialize_complex2")]
    pub xi_eigenvalues: [Complex64; 2],
    pub min_distance_to_one: f64,
}

pub fn return_map(params: &LinkParams, orbit: &OrbitDescriptor) -> Result<ReturnMapResult> {
    let duration = orbit.period.as_angle();
    let speeds = reeb_speeds(params);
    let eigen_angles: [Angle; 3] = std::array::from_fn(|j| duration.scale(&speeds[j]));
    let orbit_direction = orbit.family.coordinate();
    if !eigen_angles[orbit_direction].is_resonant() {
        return Err(Error::Internal(format!(
            "{} iterate {} does not close: orbit angle {}",
            orbit.family, orbit.iterate, eigen_angles[orbit_direction]
        )));
    }
    let xi: Vec<usize> = (0..3).filter(|&j| j != orbit_direction).collect();
    for &j in &xi {
        if eigen_angles[j].is_resonant() {
            return Err(Error::DegenerateOrbit(format!(
                "({}, N = {}): return map has eigenvalue 1 on xi (coordinate {j}, angle {})",
                orbit.family, orbit.iterate, eigen_angles[j]
            )));
        }
    }
    let eigenvalues: [Complex64; 3] =
        std::array::from_fn(|j| Complex64::from_polar(1.0, eigen_angles[j].radians()));
    let xi_eigenvalues = [eigenvalues[xi[0]], eigenvalues[xi[1]]];
    let min_distance_to_one = xi_eigenvalues
        .iter()
        .map(|z| (z - Complex64::new(1.0, 0.0)).norm())
        .fold(f64::INFINITY, f64::min);
    Ok(ReturnMapResult { eigen_angles, eigenvalues, orbit_direction, xi_eigenvalues, min_distance_to_one })
}

/// Reeb field of `α₁ = (i/4) Σ a_j (z_j dz̄_j − z̄_j dz_j)` on a Brieskorn manifold:
/// `R = 2i (z_j / a_j)_j`.
pub fn brieskorn_reeb_field(exponents: &[u32], z: &[Complex64]) -> Vec<Complex64> {
    exponents
        .iter()
        .zip(z)
        .map(|(&a, &zj)| Complex64::i() * 2.0 * zj / f64::from(a))
        .collect()
}

/// Flow of [`brieskorn_reeb_field`]: `z_j ↦ e^{2it/a_j} z_j`.
pub fn brieskorn_flow(exponents: &[u32], z: &[Complex64], t: f64) -> Vec<Complex64> {
    exponents
        .iter()
        .zip(z)
        .map(|(&a, &zj)| Complex64::from_polar(1.0, 2.0 * t / f64::from(a)) * zj)
        .collect()
}

/// Coefficient of π in the common period of every orbit of the Brieskorn flow: `lcm(a)`.
pub fn brieskorn_common_period(exponents: &[u32]) -> Rational {
    let l = exponents
        .iter()
        .fold(1u64, |acc, &a| num_integer::lcm(acc, u64::from(a)));
    Rational::from_integer(l as i64)
}

fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn serialize_complex3<S: Serializer>(z: &[Complex64; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    z.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>().serialize(s)
}

fn serialize_complex2<S: Serializer>(z: &[Complex64; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    z.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>().serialize(s)
}

//! The lens space `L(n+1, n) = S³/A_n` and its map onto the link.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::forms::IdentityCheck;
use crate::geometry::{Mat6, PointC3};

/// The cyclic group `A_n ≅ ℤ_{n+1}` acting on ℂ² by
/// `(u, v) ↦ (e^{2πi/(n+1)} u, e^{2πin/(n+1)} v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicAction {
    n: u32,
}

impl CyclicAction {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("A_n needs n >= 1".into()));
        }
        Ok(CyclicAction { n })
    }

    pub fn order(&self) -> u32 {
        self.n + 1
    }

    /// Generator phases in turns: `(1/(n+1), n/(n+1))`.
    pub fn phases(&self) -> [Rational; 2] {
        let order = i64::from(self.order());
        [Rational::new(1, order), Rational::new(i64::from(self.n), order)]
    }

    /// `det g = e^{2πi(φ₁+φ₂)}` is 1 iff the phase sum is an integer. Exact.
    pub fn determinant_is_one(&self) -> bool {
        let [a, b] = self.phases();
        (a + b).is_integer()
    }

    /// Diagonal entries of `g^k`.
    pub fn power(&self, k: i64) -> [Complex64; 2] {
        self.phases().map(|phase| Complex64::from_polar(1.0, 2.0 * PI * k as f64 * phase.to_f64()))
    }

    pub fn generator(&self) -> [Complex64; 2] {
        self.power(1)
    }

    pub fn apply(&self, k: i64, u: Complex64, v: Complex64) -> (Complex64, Complex64) {
        let [a, b] = self.power(k);
        (a * u, b * v)
    }
}

/// `φ̃(u, v) = (uv, (i/√2)u^{n+1}, (i/√2)v^{n+1})`, invariant under `A_n`.
pub fn phi_tilde(n: u32, u: Complex64, v: Complex64) -> PointC3 {
    let c = Complex64::new(0.0, FRAC_1_SQRT_2);
    PointC3::new(u * v, c * u.powu(n + 1), c * v.powu(n + 1))
}

fn psi_complex() -> [[Complex64; 3]; 3] {
    let s = FRAC_1_SQRT_2;
    let zero = Complex64::new(0.0, 0.0);
    [
        [Complex64::new(1.0, 0.0), zero, zero],
        [zero, Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
        [zero, Complex64::new(0.0, -s), Complex64::new(0.0, s)],
    ]
}

/// `Ψ(w) = (w₀, (w₁ + w₂)/√2, (−iw₁ + iw₂)/√2)`; pulls `z₀^{n+1} + z₁² + z₂²`
/// back to `w₀^{n+1} + 2w₁w₂`.
pub fn psi_coordinate_change(w: &PointC3) -> PointC3 {
    let m = psi_complex();
    let z = m.map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum());
    PointC3(z)
}

/// `Ψ` as a real 6×6 matrix in `(x₀, y₀, x₁, y₁, x₂, y₂)`.
pub fn psi_real_matrix() -> Mat6 {
    let m = psi_complex();
    Mat6::from_fn(|r, c| {
        let entry = m[r / 2][c / 2];
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => entry.re,
            (0, 1) => -entry.im,
            _ => entry.im,
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LensOrbitKind {
    Gamma1,
    Gamma2,
}

impl LensOrbitKind {
    pub const ALL: [LensOrbitKind; 2] = [LensOrbitKind::Gamma1, LensOrbitKind::Gamma2];
}

impl fmt::Display for LensOrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LensOrbitKind::Gamma1 => "gamma1",
            LensOrbitKind::Gamma2 => "gamma2",
        })
    }
}

/// An iterate of one of the two simple Reeb orbits of `λ_{a₁,a₂}` on the lens space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LensOrbit {
    pub which: LensOrbitKind,
    pub a1: Rational,
    pub a2: Rational,
    pub iterate: u64,
    /// Exact coefficient of π in the period.
    pub period_pi_coeff: Rational,
    pub period: f64,
}

impl LensOrbit {
    /// Period `2a_jπN/(n+1)`.
    pub fn new(n: u32, a1: Rational, a2: Rational, which: LensOrbitKind, iterate: u64) -> Result<Self> {
        if !a1.is_positive() || !a2.is_positive() {
            return Err(Error::Domain(format!("lens weights must be positive, got {a1}, {a2}")));
        }
        if iterate == 0 {
            return Err(Error::Domain("iterate must be at least 1".into()));
        }
        let own = match which {
            LensOrbitKind::Gamma1 => &a1,
            LensOrbitKind::Gamma2 => &a2,
        };
        let period_pi_coeff =
            Rational::from_integer(2 * iterate as i64) * own / Rational::from_integer(i64::from(n) + 1);
        let period = period_pi_coeff.to_f64() * PI;
        Ok(LensOrbit { which, a1, a2, iterate, period_pi_coeff, period })
    }

    /// Image of the orbit's starting point under `φ̃`.
    pub fn start(&self, n: u32) -> PointC3 {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match self.which {
            LensOrbitKind::Gamma1 => phi_tilde(n, one, zero),
            LensOrbitKind::Gamma2 => phi_tilde(n, zero, one),
        }
    }
}

/// Left side of `2|z₀|² + 4^{1/(n+1)}(|z₁|^{4/(n+1)} + |z₂|^{4/(n+1)}) = 1`.
pub fn lens_hypersurface_lhs(n: u32, z: &PointC3) -> f64 {
    let e = 4.0 / f64::from(n + 1);
    let c = 4f64.powf(1.0 / f64::from(n + 1));
    2.0 * z.0[0].norm_sqr() + c * (z.0[1].norm().powf(e) + z.0[2].norm().powf(e))
}

/// Evaluates the hypersurface equation at `φ̃(u, v)` for `(u, v) ∈ S³`.
pub fn check_lens_hypersurface(n: u32, u: Complex64, v: Complex64, tol: f64) -> Result<IdentityCheck> {
    let r = u.norm_sqr() + v.norm_sqr();
    if (r - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!("(u, v) is not on S^3: |u|^2 + |v|^2 = {r}")));
    }
    let z = phi_tilde(n, u, v);
    let residual = (lens_hypersurface_lhs(n, &z) - 1.0).abs();
    Ok(IdentityCheck::below(
        "lens_hypersurface",
        vec![u.re, u.im, v.re, v.im],
        residual,
        tol,
    ))
}

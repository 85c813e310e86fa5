//! Conley–Zehnder indices, exactly.
//!
//! Two routes compute `μ_CZ(γ±^N)`: counting crossings of a direct sum of
//! rotation blocks ([`cz_link_via_crossing`]) and the closed floor formula
//! ([`cz_link_closed_form`]). Neither uses floating point.

use serde::{Deserialize, Serialize};

use crate::dynamics::{iterate_period_coeff, reeb_speeds, Family};
use crate::error::{Error, Result};
use crate::exact::{floor_div, to_i64, Angle, Rational};
use crate::geometry::LinkParams;
use crate::lens::LensOrbitKind;

/// The path `t ↦ e^{i·speed·t}` in `Sp(2) ≅ U(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationBlock {
    pub speed: Rational,
}

impl RotationBlock {
    pub fn new(speed: Rational) -> Self {
        RotationBlock { speed }
    }

    pub fn is_constant(&self) -> bool {
        self.speed.is_zero()
    }
}

/// A direct sum of rotation blocks over `[0, duration]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationPath {
    pub blocks: Vec<RotationBlock>,
    pub duration: Angle,
}

impl RotationPath {
    pub fn new(blocks: Vec<RotationBlock>, duration: Angle) -> Self {
        RotationPath { blocks, duration }
    }

    pub fn from_speeds(speeds: &[Rational], duration: Angle) -> Self {
        let blocks = speeds.iter().cloned().map(RotationBlock::new).collect();
        RotationPath { blocks, duration }
    }

    /// Endpoint angle of every block.
    pub fn end_angles(&self) -> Vec<Angle> {
        self.blocks.iter().map(|b| self.duration.scale(&b.speed)).collect()
    }

    /// Starts at the identity (always) and ends without eigenvalue 1.
    pub fn in_sigma_star(&self) -> bool {
        self.blocks
            .iter()
            .zip(self.end_angles())
            .all(|(b, a)| !b.is_constant() && !a.is_resonant())
    }

    /// `self ⊕ other`; both paths must share the time interval.
    pub fn direct_sum(&self, other: &RotationPath) -> Result<RotationPath> {
        if self.duration != other.duration {
            return Err(Error::Domain(format!(
                "direct sum needs equal durations, got {} and {}",
                self.duration, other.duration
            )));
        }
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        Ok(RotationPath { blocks, duration: self.duration.clone() })
    }

    /// Pointwise product with the loop `t ↦ e^{2πik t/T}` acting on block `index`
    /// (a loop of Maslov index `k`).
    pub fn with_loop(&self, index: usize, k: i64) -> Result<RotationPath> {
        if index >= self.blocks.len() {
            return Err(Error::Domain(format!("block {index} out of range")));
        }
        let loop_speed = Rational::from_integer(2 * k) / self.duration.coeff();
        let mut blocks = self.blocks.clone();
        blocks[index].speed = &blocks[index].speed + &loop_speed;
        Ok(RotationPath { blocks, duration: self.duration.clone() })
    }
}

/// Index of one rotation block over `[0, T]`.
///
/// For speed `ω > 0` with end angle `θ = ωT`: `θ/π` if `θ ∈ 2πℤ`, otherwise
/// `2⌊θ/2π⌋ + 1`. Negative speeds give the negated value at `|ω|`.
pub fn cz_rotation(block: &RotationBlock, duration: &Angle) -> Result<i64> {
    if !duration.coeff().is_positive() {
        return Err(Error::Domain(format!("duration must be positive, got {duration}")));
    }
    if block.is_constant() {
        return Err(Error::NotAdmissible("constant block has eigenvalue 1 throughout".into()));
    }
    let theta = duration.scale(&block.speed.abs());
    let magnitude = if theta.is_resonant() {
        to_i64(theta.coeff().numer())?
    } else {
        2 * to_i64(&theta.full_turns())? + 1
    };
    Ok(if block.speed.is_negative() { -magnitude } else { magnitude })
}

/// Sum of block indices (additivity under direct sums).
pub fn cz_path(path: &RotationPath) -> Result<i64> {
    path.blocks.iter().try_fold(0i64, |acc, b| Ok(acc + cz_rotation(b, &path.duration)?))
}

/// Linearized flow `Φ = diag(e^{4it/(n+1)}, e^{2i(1+ε)t}, e^{2i(1−ε)t})` over the
/// period of `γ±^N`.
pub fn link_flow_path(params: &LinkParams, family: Family, iterate: u64) -> RotationPath {
    let duration = Angle::pi_times(iterate_period_coeff(params.eps(), family, iterate));
    RotationPath::from_speeds(&reeb_speeds(params), duration)
}

/// The non-constant part `e^{4it}` of the flow on the symplectic complement `ξ^ω`.
pub fn xi_complement_path(params: &LinkParams, family: Family, iterate: u64) -> RotationPath {
    let duration = Angle::pi_times(iterate_period_coeff(params.eps(), family, iterate));
    RotationPath::from_speeds(&[Rational::from_integer(4)], duration)
}

/// `μ(Φ) − μ(Φ_{ξ^ω})` by crossing counts.
///
/// The orbit-direction block of `Φ` closes up and takes the `T/π` branch; the
/// constant block of `Φ_{ξ^ω}` is not indexed and contributes 0.
pub fn cz_link_via_crossing(params: &LinkParams, family: Family, iterate: u64) -> Result<i64> {
    if iterate == 0 {
        return Err(Error::Domain("iterate must be at least 1".into()));
    }
    let full = link_flow_path(params, family, iterate);
    let complement = xi_complement_path(params, family, iterate);
    let angles = full.end_angles();
    let along = family.coordinate();
    if !angles[along].is_resonant() {
        return Err(Error::Internal(format!("({family}, N = {iterate}) does not close")));
    }
    for (j, angle) in angles.iter().enumerate() {
        if j != along && angle.is_resonant() {
            return Err(Error::DegenerateOrbit(format!(
                "({family}, N = {iterate}): block {j} ends at angle {angle} in 2πℤ"
            )));
        }
    }
    if !complement.in_sigma_star() {
        return Err(Error::DegenerateOrbit(format!(
            "({family}, N = {iterate}): complement block ends at {} in 2πℤ",
            complement.end_angles()[0]
        )));
    }
    Ok(cz_path(&full)? - cz_path(&complement)?)
}

/// Arguments `(2N/((n+1)(1±ε)), N(1∓ε)/(1±ε), 2N/(1±ε))` of the closed formula.
pub fn floor_arguments(n: u32, eps: &Rational, family: Family, iterate: u64) -> [Rational; 3] {
    let stretch = family.stretch(eps);
    let big_n = Rational::from_integer(iterate as i64);
    let two_n = Rational::from_integer(2 * iterate as i64);
    let order = Rational::from_integer(i64::from(n) + 1);
    [
        &two_n / (&order * &stretch),
        &big_n * family.counter_stretch(eps) / &stretch,
        &two_n / &stretch,
    ]
}

/// First `(family, N)` with `N ≤ n_max` at which some floor argument is an integer.
pub fn first_resonance(n: u32, eps: &Rational, n_max: u64) -> Option<(Family, u64)> {
    (1..=n_max).find_map(|iterate| {
        Family::ALL.into_iter().find_map(|family| {
            floor_arguments(n, eps, family, iterate)
                .iter()
                .any(Rational::is_integer)
                .then_some((family, iterate))
        })
    })
}

/// `2(⌊2N/((n+1)(1±ε))⌋ + ⌊N(1∓ε)/(1±ε)⌋ − ⌊2N/(1±ε)⌋) + 2N + 1`.
pub fn cz_link_closed_form(params: &LinkParams, family: Family, iterate: u64) -> Result<i64> {
    if iterate == 0 {
        return Err(Error::Domain("iterate must be at least 1".into()));
    }
    let eps = params.eps();
    let stretch = family.stretch(eps);
    let big_n = Rational::from_integer(iterate as i64);
    let two_n = Rational::from_integer(2 * iterate as i64);
    let order = Rational::from_integer(i64::from(params.n()) + 1);
    let terms = [
        (two_n.clone(), &order * &stretch),
        (&big_n * family.counter_stretch(eps), stretch.clone()),
        (two_n, stretch),
    ];
    let mut floors = [0i64; 3];
    for (slot, (num, den)) in floors.iter_mut().zip(&terms) {
        if (num / den).is_integer() {
            return Err(Error::DegenerateOrbit(format!(
                "({family}, N = {iterate}): floor argument {} is an integer",
                num / den
            )));
        }
        *slot = to_i64(&floor_div(num, den)?)?;
    }
    let n = iterate as i64;
    Ok(2 * (floors[0] + floors[1] - floors[2]) + 2 * n + 1)
}

/// `2⌊2N/((n+1)(1±ε))⌋ + 1`, offered for `0 < ε < 1/N`.
///
/// The other two floors of the closed formula always cancel against `2N`
/// (they are `N ∓ x` and `2N ∓ x` for the same `x`), so outside resonance the
/// two agree for every ε; the bound only fences the regime the formula is
/// stated for.
pub fn cz_link_simplified(params: &LinkParams, family: Family, iterate: u64) -> Result<i64> {
    if iterate == 0 {
        return Err(Error::Domain("iterate must be at least 1".into()));
    }
    let eps = params.eps();
    if eps.is_zero() {
        return Err(Error::DegenerateOrbit("eps = 0".into()));
    }
    let bound = Rational::new(1, iterate as i64);
    if eps >= &bound {
        return Err(Error::Regime(format!("simplified index needs eps < {bound}, got {eps}")));
    }
    let [arg, _, _] = floor_arguments(params.n(), eps, family, iterate);
    if arg.is_integer() {
        return Err(Error::DegenerateOrbit(format!(
            "({family}, N = {iterate}): floor argument {arg} is an integer"
        )));
    }
    Ok(2 * to_i64(&arg.floor())? + 1)
}

fn lens_weights<'a>(a1: &'a Rational, a2: &'a Rational, which: LensOrbitKind) -> (&'a Rational, &'a Rational) {
    match which {
        LensOrbitKind::Gamma1 => (a1, a2),
        LensOrbitKind::Gamma2 => (a2, a1),
    }
}

fn check_lens_input(a1: &Rational, a2: &Rational, iterate: u64) -> Result<()> {
    if !a1.is_positive() || !a2.is_positive() {
        return Err(Error::Domain(format!("lens weights must be positive, got {a1}, {a2}")));
    }
    if iterate == 0 {
        return Err(Error::Domain("iterate must be at least 1".into()));
    }
    Ok(())
}

/// Transverse rotation of `γ^N` on `L(n+1, n)` in turns:
/// `N(a_own + a_other)/((n+1) a_other)`.
pub fn lens_transverse_turns(n: u32, a1: &Rational, a2: &Rational, which: LensOrbitKind, iterate: u64) -> Rational {
    let (own, other) = lens_weights(a1, a2, which);
    Rational::from_integer(iterate as i64) * (own + other)
        / (Rational::from_integer(i64::from(n) + 1) * other)
}

/// Index of `γ₁^N` (or `γ₂^N`) for `λ_{a₁,a₂}` on the lens space `L(n+1, n)`:
/// `2⌊N(a₁ + a₂)/((n+1)a₂)⌋ + 1` (weights swapped for `γ₂`).
///
/// Over `N` periods `2πa₁N/(n+1)` the flow turns the transverse `v`-line by
/// `2πN a₁/((n+1)a₂)` and the deck transformation closing the orbit adds
/// `2πN/(n+1)`.
pub fn cz_lens(n: u32, a1: &Rational, a2: &Rational, which: LensOrbitKind, iterate: u64) -> Result<i64> {
    check_lens_input(a1, a2, iterate)?;
    let turns = lens_transverse_turns(n, a1, a2, which, iterate);
    if turns.is_integer() {
        return Err(Error::DegenerateOrbit(format!(
            "({which}, N = {iterate}): transverse rotation {turns} turns is an integer"
        )));
    }
    Ok(2 * to_i64(&turns.floor())? + 1)
}

/// The split-floor variant `2(⌊N/(n+1)⌋ + ⌊N a₁/((n+1)a₂)⌋) + 1`.
///
/// It differs from [`cz_lens`] whenever the two fractional parts add past 1,
/// and puts `2n` generators in degree 1.
pub fn cz_lens_split_floor(n: u32, a1: &Rational, a2: &Rational, which: LensOrbitKind, iterate: u64) -> Result<i64> {
    check_lens_input(a1, a2, iterate)?;
    let (own, other) = lens_weights(a1, a2, which);
    let order = Rational::from_integer(i64::from(n) + 1);
    let big_n = Rational::from_integer(iterate as i64);
    let second = &big_n * own / (&order * other);
    if second.is_integer() {
        return Err(Error::DegenerateOrbit(format!("({which}, N = {iterate}): resonant weights")));
    }
    let first = to_i64(&floor_div(&big_n, &order)?)?;
    Ok(2 * (first + to_i64(&second.floor())?) + 1)
}

/// Smallest-denominator `ε ∈ (0, 1/(10·n_max))` with no resonance for `N ≤ n_max`.
pub fn choose_eps(n: u32, n_max: u64) -> Result<Rational> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let scale = 10 * n_max as i64;
    let mut den = scale + 1;
    loop {
        // p/den < 1/scale  <=>  p·scale < den
        let mut num = 1;
        while num * scale < den {
            if num_integer::gcd(num, den) == 1 {
                let eps = Rational::new(num, den);
                if first_resonance(n, &eps, n_max).is_none() {
                    return Ok(eps);
                }
            }
            num += 1;
        }
        den += 1;
    }
}

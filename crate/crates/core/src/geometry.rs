//! Concrete geometry of ℂ³ ≅ ℝ⁶ around the A_n link
//! `L = {w₀^{n+1} + 2w₁w₂ = 0} ∩ S⁵`.
//!
//! Real coordinates are ordered `(x₀, y₀, x₁, y₁, x₂, y₂)` with `w_j = x_j + i y_j`.
//! This is the only place where complex displays are translated to real ones.

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cz;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lens::phi_tilde;

pub type Vec6 = SVector<f64, 6>;
pub type Mat6 = SMatrix<f64, 6, 6>;

/// Tolerance for the on-link precondition of pointwise checks.
pub const ONLINK_PRECONDITION_TOL: f64 = 1e-9;

/// A problem instance: the A_n link with perturbation parameter ε.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkParams {
    n: u32,
    eps: Rational,
    #[serde(skip)]
    eps_f64: f64,
    certified_up_to: Option<u64>,
}

impl LinkParams {
    /// Accepts `n ≥ 1` and `0 ≤ ε < 1`. `ε = 0` is the unperturbed form, whose
    /// orbits are all degenerate; that is reported by the orbit layer.
    pub fn new(n: u32, eps: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if eps.is_negative() || eps >= Rational::one() {
            return Err(Error::Domain(format!("eps must lie in [0, 1), got {eps}")));
        }
        let eps_f64 = eps.to_f64();
        Ok(LinkParams { n, eps, eps_f64, certified_up_to: None })
    }

    /// Like [`LinkParams::new`], additionally certifying that no orbit `γ±^N`
    /// with `N ≤ n_max` is degenerate at this ε.
    pub fn certified(n: u32, eps: Rational, n_max: u64) -> Result<Self> {
        let mut params = Self::new(n, eps)?;
        if params.eps.is_zero() {
            return Err(Error::DegenerateOrbit(
                "eps = 0: every Reeb orbit of the unperturbed form is degenerate".into(),
            ));
        }
        if let Some((family, iterate)) = cz::first_resonance(n, &params.eps, n_max) {
            return Err(Error::DegenerateOrbit(format!(
                "eps = {} is resonant at ({family}, N = {iterate})",
                params.eps
            )));
        }
        params.certified_up_to = Some(n_max);
        Ok(params)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    pub fn eps_f64(&self) -> f64 {
        self.eps_f64
    }

    /// Largest iterate for which nonresonance was certified, if any.
    pub fn certified_up_to(&self) -> Option<u64> {
        self.certified_up_to
    }

    /// Brieskorn exponents `(n+1, 2, 2)`.
    pub fn exponents(&self) -> [u32; 3] {
        [self.n + 1, 2, 2]
    }
}

/// A point of ℂ³ in double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointC3(pub [Complex64; 3]);

impl PointC3 {
    pub fn new(w0: Complex64, w1: Complex64, w2: Complex64) -> Self {
        PointC3([w0, w1, w2])
    }

    pub fn origin() -> Self {
        PointC3([Complex64::new(0.0, 0.0); 3])
    }

    pub fn to_real(&self) -> Vec6 {
        let w = &self.0;
        Vec6::new(w[0].re, w[0].im, w[1].re, w[1].im, w[2].re, w[2].im)
    }

    pub fn from_real(v: &Vec6) -> Self {
        PointC3([
            Complex64::new(v[0], v[1]),
            Complex64::new(v[2], v[3]),
            Complex64::new(v[4], v[5]),
        ])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn dist(&self, other: &PointC3) -> f64 {
        (self.to_real() - other.to_real()).norm()
    }
}

impl Serialize for PointC3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self.to_real();
        <[f64; 6]>::serialize(&[r[0], r[1], r[2], r[3], r[4], r[5]], serializer)
    }
}

impl<'de> Deserialize<'de> for PointC3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let a = <[f64; 6]>::deserialize(deserializer)?;
        Ok(PointC3::from_real(&Vec6::from_column_slice(&a)))
    }
}

/// `f(w) = w₀^{n+1} + 2w₁w₂`.
pub fn eval_f(params: &LinkParams, p: &PointC3) -> Complex64 {
    eval_f_n(params.n, p)
}

pub fn eval_f_n(n: u32, p: &PointC3) -> Complex64 {
    let w = &p.0;
    w[0].powu(n + 1) + 2.0 * w[1] * w[2]
}

/// Holomorphic partials `∂f/∂w_j = ((n+1)w₀ⁿ, 2w₂, 2w₁)`.
pub fn f_partials(n: u32, p: &PointC3) -> [Complex64; 3] {
    let w = &p.0;
    [f64::from(n + 1) * w[0].powu(n), 2.0 * w[2], 2.0 * w[1]]
}

/// Real differentials `(d Re f, d Im f)` as covectors on ℝ⁶.
pub fn df_real(n: u32, p: &PointC3) -> (Vec6, Vec6) {
    let g = f_partials(n, p);
    let mut re = Vec6::zeros();
    let mut im = Vec6::zeros();
    for j in 0..3 {
        re[2 * j] = g[j].re;
        re[2 * j + 1] = -g[j].im;
        im[2 * j] = g[j].im;
        im[2 * j + 1] = g[j].re;
    }
    (re, im)
}

/// `df(v)` for a real tangent vector `v`.
pub fn df_apply(n: u32, p: &PointC3, v: &Vec6) -> Complex64 {
    let (re, im) = df_real(n, p);
    Complex64::new(re.dot(v), im.dot(v))
}

/// `ρ = (|w|² − 1)/4`.
pub fn eval_rho(p: &PointC3) -> f64 {
    (p.norm_sqr() - 1.0) / 4.0
}

pub fn drho(p: &PointC3) -> Vec6 {
    p.to_real() / 2.0
}

/// `H(w) = |w|² + ε(|w₁|² − |w₂|²)`.
pub fn eval_h(params: &LinkParams, p: &PointC3) -> f64 {
    let w = &p.0;
    p.norm_sqr() + params.eps_f64 * (w[1].norm_sqr() - w[2].norm_sqr())
}

pub fn dh(params: &LinkParams, p: &PointC3) -> Vec6 {
    let e = params.eps_f64;
    let weights = [1.0, 1.0 + e, 1.0 - e];
    let r = p.to_real();
    Vec6::from_fn(|k, _| 2.0 * weights[k / 2] * r[k])
}

/// Wirtinger coefficients `∂H/∂w̄_j`, i.e. the coefficients of `dw̄_j` in `dH`.
pub fn dh_dwbar(params: &LinkParams, p: &PointC3) -> [Complex64; 3] {
    let e = params.eps_f64;
    let w = &p.0;
    [w[0], (1.0 + e) * w[1], (1.0 - e) * w[2]]
}

/// Weighted scaling `σ_λ(z) = (λ^{2/(n+1)} z₀, λz₁, λz₂)`; `f(σ_λ z) = λ² f(z)`.
pub fn weighted_scale(n: u32, z: &PointC3, lambda: f64) -> PointC3 {
    let w = &z.0;
    let s0 = lambda.powf(2.0 / f64::from(n + 1));
    PointC3([s0 * w[0], lambda * w[1], lambda * w[2]])
}

/// Moves `z ≠ 0` along its weighted ray onto the unit sphere.
pub fn project_to_link(n: u32, z: &PointC3) -> Result<PointC3> {
    if z.norm_sqr() == 0.0 {
        return Err(Error::Sampling("cannot rescale the origin".into()));
    }
    let radius2 = |lambda: f64| weighted_scale(n, z, lambda).norm_sqr();
    let (mut lo, mut hi) = (1.0_f64, 1.0_f64);
    let mut guard = 0;
    while radius2(lo) > 1.0 {
        lo /= 2.0;
        guard += 1;
        if guard > 2000 {
            return Err(Error::Sampling("bisection bracket (lower) not found".into()));
        }
    }
    while radius2(hi) < 1.0 {
        hi *= 2.0;
        guard += 1;
        if guard > 2000 {
            return Err(Error::Sampling("bisection bracket (upper) not found".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if radius2(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = weighted_scale(n, z, lo);
    let b = weighted_scale(n, z, hi);
    let best = if (a.norm_sqr() - 1.0).abs() <= (b.norm_sqr() - 1.0).abs() { a } else { b };
    if (best.norm_sqr() - 1.0).abs() > 1e-12 {
        return Err(Error::Sampling(format!(
            "bisection did not converge: | |p|^2 - 1 | = {:e}",
            (best.norm_sqr() - 1.0).abs()
        )));
    }
    Ok(best)
}

/// Uniform sample on S³ ⊂ ℂ² from four standard normals.
pub fn sample_s3(rng: &mut ChaCha8Rng) -> (Complex64, Complex64) {
    loop {
        let g: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return (Complex64::new(g[0], g[1]) / norm, Complex64::new(g[2], g[3]) / norm);
        }
    }
}

/// Sampled points on the link, deterministic per seed.
///
/// `(u, v)` uniform on S³ is pushed through `φ̃` onto `f⁻¹(0)` and then moved
/// onto S⁵ along the weighted ray, which stays inside `f⁻¹(0)`.
pub fn sample_link(params: &LinkParams, count: usize, seed: u64) -> Result<Vec<PointC3>> {
    if count == 0 {
        return Err(Error::Precondition("sample count must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (u, v) = sample_s3(&mut rng);
            project_to_link(params.n, &phi_tilde(params.n, u, v))
        })
        .collect()
}

/// Random points of ℂ³ with standard normal coordinates.
pub fn sample_c3(count: usize, seed: u64) -> Vec<PointC3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g: [f64; 6] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
            PointC3::from_real(&Vec6::from_column_slice(&g))
        })
        .collect()
}

/// Residuals `(|f(p)|, ||p|² − 1|)`.
pub fn onlink_residuals(params: &LinkParams, p: &PointC3) -> (f64, f64) {
    (eval_f(params, p).norm(), (p.norm_sqr() - 1.0).abs())
}

pub fn is_on_link(params: &LinkParams, p: &PointC3, tol: f64) -> bool {
    let (rf, rs) = onlink_residuals(params, p);
    rf < tol && rs < tol
}

/// An orthonormal basis of `T_p L`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangentFrame {
    pub base: PointC3,
    #[serde(serialize_with = "serialize_vecs")]
    pub vectors: [Vec6; 3],
}

fn serialize_vecs<S: Serializer>(vecs: &[Vec6; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<f64>> = vecs.iter().map(|v| v.iter().copied().collect()).collect();
    rows.serialize(s)
}

/// Gram–Schmidt step with one re-orthogonalization pass.
fn orthogonalize(v: &Vec6, basis: &[Vec6]) -> Vec6 {
    let mut r = *v;
    for _ in 0..2 {
        for b in basis {
            r -= b * b.dot(&r);
        }
    }
    r
}

/// Orthonormal basis of the kernel of the Jacobian of `(Re f, Im f, ρ)` at `p`.
pub fn tangent_frame(params: &LinkParams, p: &PointC3) -> Result<TangentFrame> {
    let (dre, dim) = df_real(params.n, p);
    let normals_raw = [dre, dim, drho(p)];
    let scale = normals_raw.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
    let mut normals: Vec<Vec6> = Vec::with_capacity(3);
    for g in &normals_raw {
        let r = orthogonalize(g, &normals);
        let norm = r.norm();
        if norm < 1e-10 * scale {
            return Err(Error::DegeneratePoint(format!(
                "Jacobian of (Re f, Im f, rho) has rank < 3 at {:?}",
                p.to_real().as_slice()
            )));
        }
        normals.push(r / norm);
    }
    if !is_on_link(params, p, ONLINK_PRECONDITION_TOL) {
        return Err(Error::Precondition(format!(
            "point is not on the link: (|f|, ||p|^2-1|) = {:?}",
            onlink_residuals(params, p)
        )));
    }
    let mut basis = normals.clone();
    let mut tangents = Vec::with_capacity(3);
    for _ in 0..3 {
        let best = (0..6)
            .map(|i| orthogonalize(&Vec6::ith(i, 1.0), &basis))
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .expect("six candidates");
        let t = best / best.norm();
        basis.push(t);
        tangents.push(t);
    }
    Ok(TangentFrame { base: *p, vectors: [tangents[0], tangents[1], tangents[2]] })
}

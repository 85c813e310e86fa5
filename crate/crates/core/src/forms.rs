//! Contact forms, Reeb and Liouville fields, and checks of their identities.
//!
//! Complex displays are translated to real coordinates `(x₀, y₀, x₁, y₁, x₂, y₂)`
//! here and nowhere else:
//!
//! * `(i/4)·c·(z dz̄ − z̄ dz) = (c/2)(x dy − y dx)`, so every form in play is an
//!   "angular" form `Σ c_j (x_j dy_j − y_j dx_j)` with differential `Σ 2c_j dx_j∧dy_j`.
//! * A 2-form is a matrix `Ω` with `ω(u, v) = uᵀΩv`; `dx∧dy` is `[[0, 1], [−1, 0]]`.
//! * `a∧b` for covectors is `abᵀ − baᵀ`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::Tolerances;
use crate::dynamics::{brieskorn_reeb_field, reeb_eps_complex};
use crate::error::{Error, Result};
use crate::geometry::{
    df_apply, df_real, dh, drho, eval_h, is_on_link, onlink_residuals, tangent_frame, LinkParams, Mat6, PointC3,
    Vec6, ONLINK_PRECONDITION_TOL,
};
use crate::lens::psi_real_matrix;

/// Which side of the threshold passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// Residual-style: pass iff `value < threshold`.
    Below,
    /// Nonvanishing-style: pass iff `value > threshold`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub point: Vec<f64>,
    pub value: f64,
    pub threshold: f64,
    pub bound: Bound,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn below(name: &str, point: Vec<f64>, value: f64, threshold: f64) -> Self {
        IdentityCheck { name: name.into(), point, value, threshold, bound: Bound::Below, pass: value < threshold }
    }

    pub fn above(name: &str, point: Vec<f64>, value: f64, threshold: f64) -> Self {
        IdentityCheck { name: name.into(), point, value, threshold, bound: Bound::Above, pass: value > threshold }
    }
}

fn point_vec(p: &PointC3) -> Vec<f64> {
    p.to_real().iter().copied().collect()
}

/// Multiplication by `i` on ℝ⁶.
pub fn complex_structure(v: &Vec6) -> Vec6 {
    Vec6::new(-v[1], v[0], -v[3], v[2], -v[5], v[4])
}

pub fn complex_to_real(z: &[Complex64; 3]) -> Vec6 {
    PointC3(*z).to_real()
}

/// `Σ c_j (x_j dy_j − y_j dx_j)` on ℂ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularForm {
    pub weights: [f64; 3],
}

impl AngularForm {
    pub fn value(&self, p: &PointC3) -> Vec6 {
        let r = p.to_real();
        Vec6::from_fn(|k, _| {
            let c = self.weights[k / 2];
            if k % 2 == 0 {
                -c * r[k + 1]
            } else {
                c * r[k - 1]
            }
        })
    }

    /// The constant 2-form `Σ 2c_j dx_j∧dy_j`.
    pub fn differential(&self) -> Mat6 {
        symplectic_matrix(&self.weights.map(|c| 2.0 * c))
    }
}

/// `Σ s_j dx_j∧dy_j` as a matrix.
pub fn symplectic_matrix(scales: &[f64]) -> Mat6 {
    let mut m = Mat6::zeros();
    for (j, &s) in scales.iter().enumerate() {
        m[(2 * j, 2 * j + 1)] = s;
        m[(2 * j + 1, 2 * j)] = -s;
    }
    m
}

/// `(i/4)Σ(z dz̄ − z̄ dz)`.
pub fn alpha0() -> AngularForm {
    AngularForm { weights: [0.5; 3] }
}

/// `α₁ = (i/4)Σ a_j(z dz̄ − z̄ dz)` with `a = (n+1, 2, 2)`. `Ψ` is unitary and
/// treats `w₁, w₂` alike, so the coefficients read the same in `w`.
pub fn alpha1(n: u32) -> AngularForm {
    AngularForm { weights: [f64::from(n + 1) / 2.0, 1.0, 1.0] }
}

/// `λ = Ψ*α₁/2`, the numerator of `α_ε`.
pub fn lambda(n: u32) -> AngularForm {
    AngularForm { weights: [f64::from(n + 1) / 4.0, 0.5, 0.5] }
}

/// `ω₁ = dλ`.
pub fn omega1(n: u32) -> Mat6 {
    lambda(n).differential()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormTag {
    Alpha0,
    Alpha1,
    AlphaEps,
}

/// A 1-form and its differential evaluated at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct FormValue {
    pub tag: FormTag,
    pub covector: Vec6,
    pub differential: Mat6,
}

impl FormValue {
    pub fn apply(&self, v: &Vec6) -> f64 {
        self.covector.dot(v)
    }

    pub fn d_apply(&self, u: &Vec6, v: &Vec6) -> f64 {
        u.dot(&(self.differential * v))
    }
}

/// `a∧b` as a matrix.
pub fn wedge(a: &Vec6, b: &Vec6) -> Mat6 {
    a * b.transpose() - b * a.transpose()
}

pub fn eval_form(params: &LinkParams, tag: FormTag, p: &PointC3) -> FormValue {
    let (covector, differential) = match tag {
        FormTag::Alpha0 => (alpha0().value(p), alpha0().differential()),
        FormTag::Alpha1 => (alpha1(params.n()).value(p), alpha1(params.n()).differential()),
        FormTag::AlphaEps => {
            let lam = lambda(params.n());
            let h = eval_h(params, p);
            let value = lam.value(p);
            let d = lam.differential() / h - wedge(&dh(params, p), &value) / (h * h);
            (value / h, d)
        }
    };
    FormValue { tag, covector, differential }
}

/// `α_ε` by the second route: pull `α₁` back through the real matrix of `Ψ`
/// and divide by `2H`.
pub fn alpha_eps_via_pullback(params: &LinkParams, p: &PointC3) -> Vec6 {
    let m = psi_real_matrix();
    let z = PointC3::from_real(&(m * p.to_real()));
    let a_z = alpha1(params.n()).value(&z);
    m.transpose() * a_z / (2.0 * eval_h(params, p))
}

/// Central-difference exterior derivative of a covector field:
/// `M_kl = ∂_k β_l − ∂_l β_k`.
pub fn fd_exterior_derivative<F>(beta: F, p: &DVector<f64>, h: f64) -> DMatrix<f64>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    let d = p.len();
    let mut jac = DMatrix::zeros(d, d);
    for k in 0..d {
        let mut plus = p.clone();
        let mut minus = p.clone();
        plus[k] += h;
        minus[k] -= h;
        let diff = (beta(&plus) - beta(&minus)) / (2.0 * h);
        jac.row_mut(k).copy_from(&diff.transpose());
    }
    &jac - jac.transpose()
}

/// Largest entry of `α_ε`'s analytic differential minus its finite-difference one.
pub fn dalpha_eps_fd_residual(params: &LinkParams, p: &PointC3, h: f64) -> f64 {
    let beta = |x: &DVector<f64>| {
        let q = PointC3::from_real(&Vec6::from_column_slice(x.as_slice()));
        DVector::from_column_slice(eval_form(params, FormTag::AlphaEps, &q).covector.as_slice())
    };
    let fd = fd_exterior_derivative(beta, &DVector::from_column_slice(p.to_real().as_slice()), h);
    let analytic = eval_form(params, FormTag::AlphaEps, p).differential;
    (fd - DMatrix::from_column_slice(6, 6, analytic.as_slice())).amax()
}

/// `R_{α_ε} = (4i/(n+1) w₀, 2i(1+ε) w₁, 2i(1−ε) w₂)` as a real 6-vector.
pub fn eval_reeb_eps(params: &LinkParams, p: &PointC3) -> Vec6 {
    complex_to_real(&reeb_eps_complex(params, p))
}

/// `R_{α₁} = (2i z_j / a_j)` with `a = (n+1, 2, 2)`.
pub fn eval_reeb_alpha1(n: u32, p: &PointC3) -> Vec6 {
    let r = brieskorn_reeb_field(&[n + 1, 2, 2], &p.0);
    complex_to_real(&[r[0], r[1], r[2]])
}

/// The vector fields whose identities are checked.
#[derive(Debug, Clone, PartialEq)]
pub enum VectorFieldSpec {
    ReebAlpha1 { n: u32 },
    ReebEps(LinkParams),
    /// `½` radial, Liouville for `ω₁`.
    LiouvilleOmega1,
    /// `Y₀ = ½(u∂_u + ū∂_ū + v∂_v + v̄∂_v̄)` on ℂ² minus the origin.
    LiouvilleC2,
    /// `Y = ∇ρ`, Liouville for `ω_{ℂ³}`.
    RadialC3,
    /// `X_H = −R_{α_ε}`.
    Hamiltonian(LinkParams),
}

impl VectorFieldSpec {
    pub fn name(&self) -> &'static str {
        match self {
            VectorFieldSpec::ReebAlpha1 { .. } => "reeb_alpha1",
            VectorFieldSpec::ReebEps(_) => "reeb_eps",
            VectorFieldSpec::LiouvilleOmega1 => "liouville_omega1",
            VectorFieldSpec::LiouvilleC2 => "liouville_c2",
            VectorFieldSpec::RadialC3 => "radial_c3",
            VectorFieldSpec::Hamiltonian(_) => "hamiltonian",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            VectorFieldSpec::LiouvilleC2 => 4,
            _ => 6,
        }
    }

    pub fn eval(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        if x.len() != self.dim() {
            return Err(Error::Precondition(format!(
                "{} lives on R^{}, got a point of R^{}",
                self.name(),
                self.dim(),
                x.len()
            )));
        }
        let as_point = || PointC3::from_real(&Vec6::from_column_slice(x.as_slice()));
        let six = |v: Vec6| DVector::from_column_slice(v.as_slice());
        Ok(match self {
            VectorFieldSpec::ReebAlpha1 { n } => six(eval_reeb_alpha1(*n, &as_point())),
            VectorFieldSpec::ReebEps(params) => six(eval_reeb_eps(params, &as_point())),
            VectorFieldSpec::Hamiltonian(params) => six(-eval_reeb_eps(params, &as_point())),
            VectorFieldSpec::LiouvilleC2 => {
                if x.norm() == 0.0 {
                    return Err(Error::Domain("Y0 is defined away from the origin".into()));
                }
                x / 2.0
            }
            VectorFieldSpec::LiouvilleOmega1 | VectorFieldSpec::RadialC3 => x / 2.0,
        })
    }
}

/// A constant symplectic form on ℝ^{2k}.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantForm {
    pub name: &'static str,
    pub matrix: DMatrix<f64>,
}

impl ConstantForm {
    fn from_scales(name: &'static str, scales: &[f64]) -> Self {
        let d = 2 * scales.len();
        let mut matrix = DMatrix::zeros(d, d);
        for (j, &s) in scales.iter().enumerate() {
            matrix[(2 * j, 2 * j + 1)] = s;
            matrix[(2 * j + 1, 2 * j)] = -s;
        }
        ConstantForm { name, matrix }
    }

    pub fn omega1(n: u32) -> Self {
        Self::from_scales("omega1", &lambda(n).weights.map(|c| 2.0 * c))
    }

    /// `Σ dx∧dy = d((i/4)Σ(z dz̄ − z̄ dz))`.
    pub fn omega_c3() -> Self {
        Self::from_scales("omega_c3", &[1.0; 3])
    }

    /// `d((i/2)Σ(u dū − ū du)) = 2Σ dx∧dy`.
    pub fn omega_c2() -> Self {
        Self::from_scales("omega_c2", &[2.0; 2])
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// `L_X ω = d(ι_X ω)` (Cartan, `ω` closed) by central differences, compared to `ω`.
/// The residual is the largest `|(L_X ω − ω)(e_k, e_l)|`.
pub fn check_liouville(field: &VectorFieldSpec, form: &ConstantForm, p: &[f64], tol: &Tolerances) -> Result<IdentityCheck> {
    if field.dim() != form.dim() || p.len() != form.dim() {
        return Err(Error::Precondition(format!(
            "dimension mismatch: field {}, form {}, point {}",
            field.dim(),
            form.dim(),
            p.len()
        )));
    }
    let x = DVector::from_column_slice(p);
    field.eval(&x)?;
    let omega_t = form.matrix.transpose();
    let contraction = |y: &DVector<f64>| &omega_t * field.eval(y).expect("dimension checked");
    let lie = fd_exterior_derivative(contraction, &x, tol.fd_step);
    let residual = (lie - &form.matrix).amax();
    Ok(IdentityCheck::below(
        &format!("liouville:{}:{}", field.name(), form.name),
        p.to_vec(),
        residual,
        tol.liouville,
    ))
}

fn require_on_link(params: &LinkParams, p: &PointC3) -> Result<()> {
    if is_on_link(params, p, ONLINK_PRECONDITION_TOL) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "point is not on the link: (|f|, ||p|^2-1|) = {:?}",
            onlink_residuals(params, p)
        )))
    }
}

/// `α_ε(R) = 1`, `ι_R dα_ε = 0` on `T_pL`, and `R` tangent to the link.
pub fn check_reeb_defining(params: &LinkParams, p: &PointC3, tol: &Tolerances) -> Result<Vec<IdentityCheck>> {
    require_on_link(params, p)?;
    let frame = tangent_frame(params, p)?;
    let form = eval_form(params, FormTag::AlphaEps, p);
    let r = eval_reeb_eps(params, p);
    let normalization = (form.apply(&r) - 1.0).abs();
    let kernel = frame.vectors.iter().map(|v| form.d_apply(&r, v).abs()).fold(0.0, f64::max);
    let (dre, dim) = df_real(params.n(), p);
    let tangency = [dre.dot(&r), dim.dot(&r), drho(p).dot(&r)]
        .iter()
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    let pt = point_vec(p);
    Ok(vec![
        IdentityCheck::below("reeb_normalization", pt.clone(), normalization, tol.identity),
        IdentityCheck::below("reeb_kernel", pt.clone(), kernel, tol.identity),
        IdentityCheck::below("reeb_tangency", pt, tangency, tol.identity),
    ])
}

/// `α₁(R_{α₁}) = 1` and `ι_{R_{α₁}} dα₁ = 0` on `T_pL`.
pub fn check_reeb_alpha1(params: &LinkParams, p: &PointC3, tol: &Tolerances) -> Result<Vec<IdentityCheck>> {
    require_on_link(params, p)?;
    let frame = tangent_frame(params, p)?;
    let form = eval_form(params, FormTag::Alpha1, p);
    let r = eval_reeb_alpha1(params.n(), p);
    let kernel = frame.vectors.iter().map(|v| form.d_apply(&r, v).abs()).fold(0.0, f64::max);
    let pt = point_vec(p);
    Ok(vec![
        IdentityCheck::below("reeb_alpha1_normalization", pt.clone(), (form.apply(&r) - 1.0).abs(), tol.identity),
        IdentityCheck::below("reeb_alpha1_kernel", pt, kernel, tol.identity),
    ])
}

/// `ω₁(−R_{α_ε}, e_k) = dH(e_k)` for the six coordinate vectors.
pub fn check_hamiltonian_identity(params: &LinkParams, p: &PointC3, tol: &Tolerances) -> IdentityCheck {
    let lhs = (-eval_reeb_eps(params, p)).transpose() * omega1(params.n());
    let residual = (lhs.transpose() - dh(params, p)).amax();
    IdentityCheck::below("hamiltonian_field", point_vec(p), residual, tol.identity)
}

/// Orthonormal basis of `ξ_p = ker α ∩ T_pL`.
pub fn contact_plane(params: &LinkParams, tag: FormTag, p: &PointC3) -> Result<[Vec6; 2]> {
    let frame = tangent_frame(params, p)?;
    let form = eval_form(params, tag, p);
    let t = &frame.vectors;
    let mut plane: Vec<Vec6> = Vec::with_capacity(2);
    // Project each frame vector off the α-dual direction inside T_pL.
    let dual: Vec6 = t.iter().map(|v| v * form.apply(v)).sum();
    if dual.norm() == 0.0 {
        return Err(Error::DegeneratePoint("contact form vanishes on T_pL".into()));
    }
    let dual = dual / dual.norm();
    let mut candidates: Vec<Vec6> = t.iter().map(|v| v - dual * dual.dot(v)).collect();
    candidates.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    for c in candidates {
        let mut r = c;
        for q in &plane {
            r -= q * q.dot(&r);
        }
        if r.norm() > 1e-8 && plane.len() < 2 {
            plane.push(r / r.norm());
        }
    }
    match plane.as_slice() {
        [a, b] => Ok([*a, *b]),
        _ => Err(Error::Internal("could not extract a 2-dimensional contact plane".into())),
    }
}

/// `(α∧dα)(t₁, t₂, t₃)` on the orthonormal tangent frame, and `|dα(e₁, e₂)|` on `ξ_p`.
pub fn check_contact_condition(
    params: &LinkParams,
    p: &PointC3,
    tag: FormTag,
    tol: &Tolerances,
) -> Result<Vec<IdentityCheck>> {
    require_on_link(params, p)?;
    let frame = tangent_frame(params, p)?;
    let form = eval_form(params, tag, p);
    let [t1, t2, t3] = &frame.vectors;
    let volume = form.apply(t1) * form.d_apply(t2, t3) - form.apply(t2) * form.d_apply(t1, t3)
        + form.apply(t3) * form.d_apply(t1, t2);
    let [e1, e2] = contact_plane(params, tag, p)?;
    let pairing = form.d_apply(&e1, &e2);
    let label = match tag {
        FormTag::Alpha0 => "alpha0",
        FormTag::Alpha1 => "alpha1",
        FormTag::AlphaEps => "alpha_eps",
    };
    let pt = point_vec(p);
    Ok(vec![
        IdentityCheck::above(&format!("contact_volume:{label}"), pt.clone(), volume.abs(), tol.volume),
        IdentityCheck::above(&format!("contact_plane_pairing:{label}"), pt, pairing.abs(), tol.volume),
    ])
}

/// `max |α_b(v)|` over an orthonormal basis `v` of `ker α_a ∩ T_pL`.
pub fn kernel_mismatch(params: &LinkParams, p: &PointC3, a: FormTag, b: FormTag) -> Result<f64> {
    let plane = contact_plane(params, a, p)?;
    let form = eval_form(params, b, p);
    Ok(plane.iter().map(|v| form.apply(v).abs()).fold(0.0, f64::max))
}

/// `ω₁(u, v)`.
pub fn omega1_pair(n: u32, u: &Vec6, v: &Vec6) -> f64 {
    u.dot(&(omega1(n) * v))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymplecticBasisReport {
    pub point: Vec<f64>,
    /// `X̃₁, Ỹ₁, X̃₂, Ỹ₂` as real 6-vectors.
    pub basis: [[f64; 6]; 4],
    /// `ω₁`-Gram matrix, row-major.
    pub gram: [[f64; 4]; 4],
    /// Largest deviation from `[[0, 1], [−1, 0]] ⊕ [[0, 1], [−1, 0]]`.
    pub standard_residual: f64,
    /// Largest deviation from the symmetric `[[0, 1], [1, 0]]` blocks, for comparison only.
    pub symmetric_display_residual: f64,
    /// `max |ω₁(b, v)|` over the basis `b` and `v ∈ ξ_p`. Report-only.
    pub xi_orthogonality_residual: f64,
    pub pass: bool,
}

/// Builds `X₁ = (w̄₀ⁿ, w̄₁, w̄₂)`, `Y₁ = iX₁`, `X₂ = R_ε`, `Y₂ = w`, normalizes the
/// first pair, projects the second off it and normalizes by its own pairing.
pub fn check_symplectic_basis(params: &LinkParams, p: &PointC3, tol: &Tolerances) -> Result<SymplecticBasisReport> {
    require_on_link(params, p)?;
    let n = params.n();
    let w = &p.0;
    let x1 = complex_to_real(&[w[0].conj().powu(n), w[1].conj(), w[2].conj()]);
    let y1 = complex_structure(&x1);
    let s = omega1_pair(n, &x1, &y1);
    if s <= 0.0 {
        return Err(Error::Normalization(format!("omega1(X1, Y1) = {s} is not positive")));
    }
    let (x1, y1) = (x1 / s.sqrt(), y1 / s.sqrt());
    let project = |v: Vec6| v - x1 * omega1_pair(n, &v, &y1) + y1 * omega1_pair(n, &v, &x1);
    let x2 = project(eval_reeb_eps(params, p));
    let y2 = project(p.to_real());
    let t = omega1_pair(n, &x2, &y2);
    if t.abs() < 1e-12 {
        return Err(Error::Normalization(format!("omega1(X2, Y2) = {t} vanishes after projection")));
    }
    let (x2, y2) = (x2 / t.abs().sqrt(), y2 * t.signum() / t.abs().sqrt());
    let basis = [x1, y1, x2, y2];
    let mut gram = [[0.0; 4]; 4];
    for (a, row) in gram.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = omega1_pair(n, &basis[a], &basis[b]);
        }
    }
    let block = |a: usize, b: usize, lower: f64| match (a / 2 == b / 2, a % 2, b % 2) {
        (true, 0, 1) => 1.0,
        (true, 1, 0) => lower,
        _ => 0.0,
    };
    let deviation = |lower: f64| {
        (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .map(|(a, b)| (gram[a][b] - block(a, b, lower)).abs())
            .fold(0.0, f64::max)
    };
    let standard_residual = deviation(-1.0);
    let symmetric_display_residual = deviation(1.0);
    let plane = contact_plane(params, FormTag::AlphaEps, p)?;
    let xi_orthogonality_residual = basis
        .iter()
        .flat_map(|b| plane.iter().map(move |v| omega1_pair(n, b, v).abs()))
        .fold(0.0, f64::max);
    Ok(SymplecticBasisReport {
        point: point_vec(p),
        basis: basis.map(|v| [v[0], v[1], v[2], v[3], v[4], v[5]]),
        gram,
        standard_residual,
        symmetric_display_residual,
        xi_orthogonality_residual,
        pass: standard_residual < tol.gram,
    })
}

/// `|df(Y)|` for the radial field `Y = ∇ρ` at a point of `f⁻¹(0)`, where it equals
/// `|(1 − n) w₁w₂|`. Report-only: `Y` is tangent to the hypersurface only for `n = 1`.
pub fn radial_tangency(n: u32, p: &PointC3) -> IdentityCheck {
    let y = p.to_real() / 2.0;
    let value = df_apply(n, p, &y).norm();
    IdentityCheck::below("radial_tangency", point_vec(p), value, f64::INFINITY)
}

/// The predicted value `|(1 − n) w₁w₂|` of [`radial_tangency`] on `f⁻¹(0)`.
pub fn radial_tangency_predicted(n: u32, p: &PointC3) -> f64 {
    (f64::from(n) - 1.0) * (p.0[1] * p.0[2]).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::geometry::{eval_f, sample_c3, sample_link};

    fn params(n: u32) -> LinkParams {
        LinkParams::new(n, Rational::new(1, 1000)).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn reeb_field_examples() {
        let pr = params(2);
        let r = eval_reeb_eps(&pr, &PointC3::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)));
        assert!((r - Vec6::new(0.0, 0.0, 0.0, 2.002, 0.0, 0.0)).norm() < 1e-15);
        let r = eval_reeb_eps(&params(1), &PointC3::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
        assert!((r - Vec6::new(0.0, 2.0, 0.0, 0.0, 0.0, 0.0)).norm() < 1e-15);
        assert_eq!(eval_reeb_eps(&pr, &PointC3::origin()), Vec6::zeros());
    }

    #[test]
    fn reeb_defining_at_orbit_point_and_off_link() {
        let pr = params(2);
        let tol = Tolerances::default();
        let checks = check_reeb_defining(&pr, &PointC3::new(c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)), &tol).unwrap();
        assert!(checks[0].value < 1e-12);
        assert!(checks.iter().all(|ch| ch.pass));
        let far = PointC3::new(c(0.0, 0.0), c(0.0, 2.0), c(0.0, 0.0));
        assert!(matches!(check_reeb_defining(&pr, &far, &tol), Err(Error::Precondition(_))));
    }

    #[test]
    fn alpha_eps_two_routes_agree() {
        for n in 1..=4 {
            let pr = params(n);
            for p in sample_link(&pr, 20, u64::from(n)).unwrap() {
                let a = eval_form(&pr, FormTag::AlphaEps, &p).covector;
                assert!((a - alpha_eps_via_pullback(&pr, &p)).amax() < 1e-10);
            }
        }
    }

    #[test]
    fn dalpha_matches_finite_differences() {
        let pr = params(3);
        for p in sample_c3(5, 11) {
            assert!(dalpha_eps_fd_residual(&pr, &p, 1e-5) < 1e-7);
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let pr = params(2);
        let tol = Tolerances::default();
        assert_eq!(check_hamiltonian_identity(&pr, &PointC3::origin(), &tol).value, 0.0);
        for p in sample_c3(10, 3) {
            assert!(check_hamiltonian_identity(&pr, &p, &tol).pass);
        }
    }

    #[test]
    fn liouville_fields() {
        let tol = Tolerances::default();
        let p6: Vec<f64> = sample_c3(1, 5)[0].to_real().iter().copied().collect();
        for (field, form) in [
            (VectorFieldSpec::LiouvilleOmega1, ConstantForm::omega1(2)),
            (VectorFieldSpec::RadialC3, ConstantForm::omega_c3()),
        ] {
            assert!(check_liouville(&field, &form, &p6, &tol).unwrap().pass);
        }
        let p4 = [0.3, -0.2, 0.5, 0.1];
        assert!(check_liouville(&VectorFieldSpec::LiouvilleC2, &ConstantForm::omega_c2(), &p4, &tol).unwrap().pass);
        assert!(matches!(
            check_liouville(&VectorFieldSpec::LiouvilleC2, &ConstantForm::omega_c2(), &[0.0; 4], &tol),
            Err(Error::Domain(_))
        ));
        assert!(check_liouville(&VectorFieldSpec::LiouvilleC2, &ConstantForm::omega_c3(), &p6, &tol).is_err());
        // R is not Liouville.
        let reeb = VectorFieldSpec::ReebEps(params(2));
        assert!(!check_liouville(&reeb, &ConstantForm::omega1(2), &p6, &tol).unwrap().pass);
    }

    #[test]
    fn contact_condition_and_kernels() {
        let pr = params(2);
        let tol = Tolerances::default();
        for p in sample_link(&pr, 30, 9).unwrap() {
            for tag in [FormTag::Alpha0, FormTag::Alpha1, FormTag::AlphaEps] {
                assert!(check_contact_condition(&pr, &p, tag, &tol).unwrap().iter().all(|ch| ch.pass));
            }
            assert!(kernel_mismatch(&pr, &p, FormTag::Alpha1, FormTag::AlphaEps).unwrap() < 1e-9);
            assert!(kernel_mismatch(&pr, &p, FormTag::AlphaEps, FormTag::Alpha1).unwrap() < 1e-9);
            let r = eval_reeb_eps(&pr, &p);
            assert!(dh(&pr, &p).dot(&r).abs() < 1e-12);
            assert!(check_reeb_alpha1(&pr, &p, &tol).unwrap().iter().all(|ch| ch.pass));
        }
    }

    #[test]
    fn reeb_rotates_f() {
        // d(Ψ*f)(R) = 4i·Ψ*f everywhere.
        let pr = params(3);
        for p in sample_c3(10, 1) {
            let lhs = df_apply(3, &p, &eval_reeb_eps(&pr, &p));
            assert!((lhs - c(0.0, 4.0) * eval_f(&pr, &p)).norm() < 1e-12);
        }
    }

    #[test]
    fn symplectic_basis_is_standard() {
        let pr = params(2);
        let tol = Tolerances::default();
        for p in sample_link(&pr, 20, 4).unwrap() {
            let rep = check_symplectic_basis(&pr, &p, &tol).unwrap();
            assert!(rep.pass, "{rep:?}");
            assert!(rep.symmetric_display_residual > 1.0);
        }
    }

    #[test]
    fn radial_field_tangency() {
        for n in 1..=3 {
            let pr = params(n);
            for p in sample_link(&pr, 10, 2).unwrap() {
                let check = radial_tangency(n, &p);
                assert!((check.value - radial_tangency_predicted(n, &p)).abs() < 1e-12);
                if n == 1 {
                    assert!(check.value < 1e-12);
                }
            }
        }
    }
}

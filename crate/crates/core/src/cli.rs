//! The four commands behind the `reebcz` binary.
//!
//! Each command returns its exit code and the text it would print, so the
//! binary stays a thin argument parser and tests can drive commands directly.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::config::Tolerances;
use crate::cz::{choose_eps, cz_link_closed_form, cz_link_simplified, cz_link_via_crossing};
use crate::dynamics::{enumerate_simple_orbits, flow_closed_form, flow_rk4, Family, OrbitDescriptor};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::forms::{
    check_contact_condition, check_hamiltonian_identity, check_liouville, check_reeb_alpha1, check_reeb_defining,
    check_symplectic_basis, eval_reeb_eps, kernel_mismatch, radial_tangency, radial_tangency_predicted,
    ConstantForm, FormTag, IdentityCheck, VectorFieldSpec,
};
use crate::geometry::{
    df_apply, dh, eval_f, eval_f_n, eval_h, onlink_residuals, sample_c3, sample_link, sample_s3, LinkParams,
    PointC3,
};
use crate::lens::{check_lens_hypersurface, phi_tilde, psi_coordinate_change, CyclicAction};
use crate::ranks::{check_thm_pattern, lens_orbit_table, tally_ranks_with_shift, RankTable};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            other => Err(Error::Domain(format!("unknown format {other:?}; expected json, csv or md"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: u32,
    /// `"p/q"` or `"auto"`.
    pub eps: String,
    pub n_max: u64,
    pub degree_max: i64,
    pub degree_shift: i64,
    pub a1: String,
    pub a2: String,
    pub samples: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 2,
            eps: "1/1000".into(),
            n_max: 7,
            degree_max: 41,
            degree_shift: 0,
            a1: "1".into(),
            a2: "1001/1000".into(),
            samples: 1000,
            seed: 0,
            tolerances: Tolerances::default(),
            format: OutputFormat::Md,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        let t = &self.tolerances;
        let all = [t.identity, t.onlink, t.ode, t.liouville, t.volume, t.gram, t.fd_step];
        if all.iter().any(|x| x.is_nan() || *x <= 0.0) {
            return Err(Error::Domain("tolerances must be positive".into()));
        }
        Ok(())
    }

    /// Resolves `eps`, running [`choose_eps`] for `"auto"` with cutoff `cutoff`.
    pub fn link_params(&self, cutoff: u64) -> Result<LinkParams> {
        self.validate()?;
        let eps = if self.eps.trim() == "auto" {
            choose_eps(self.n, cutoff.max(1))?
        } else {
            self.eps.parse()?
        };
        LinkParams::new(self.n, eps)
    }

    pub fn lens_weights(&self) -> Result<(Rational, Rational)> {
        Ok((self.a1.parse()?, self.a2.parse()?))
    }
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CommandOutput { code, stdout, stderr: String::new() }
    }

    fn from_error(err: &Error) -> Self {
        CommandOutput { code: err.exit_code(), stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn run(body: impl FnOnce() -> Result<CommandOutput>) -> CommandOutput {
    body().unwrap_or_else(|e| CommandOutput::from_error(&e))
}

/// Sizes the global rayon pool from `REEBCZ_THREADS`, if set.
pub fn configure_threads() {
    if let Some(k) = std::env::var("REEBCZ_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // A second call finds the pool already built; that is fine.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CzRow {
    pub family: Family,
    #[serde(rename = "N")]
    pub iterate: u64,
    pub mu_crossing: i64,
    pub mu_closed: i64,
    /// `None` outside the simplified formula's regime.
    pub mu_simplified: Option<i64>,
    pub homotopy_class: u64,
    pub contractible: bool,
}

pub fn cz_rows(params: &LinkParams, n_max: u64) -> Result<Vec<CzRow>> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        for iterate in 1..=n_max {
            let orbit = OrbitDescriptor::new(params, family, iterate)?;
            let mu_simplified = match cz_link_simplified(params, family, iterate) {
                Ok(mu) => Some(mu),
                Err(Error::Regime(_)) => None,
                Err(e) => return Err(e),
            };
            rows.push(CzRow {
                family,
                iterate,
                mu_crossing: cz_link_via_crossing(params, family, iterate)?,
                mu_closed: cz_link_closed_form(params, family, iterate)?,
                mu_simplified,
                homotopy_class: orbit.homotopy_class,
                contractible: orbit.contractible,
            });
        }
    }
    Ok(rows)
}

fn opt(x: Option<i64>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// `(family, N, μ_crossing, μ_closed, μ_simplified, class, contractible)` for `N ≤ n_max`.
pub fn cmd_cz_table(config: &RunConfig) -> CommandOutput {
    run(|| {
        let params = config.link_params(config.n_max)?;
        let rows = cz_rows(&params, config.n_max)?;
        let agree = rows.iter().all(|r| r.mu_crossing == r.mu_closed);
        let mut out = String::new();
        match config.format {
            OutputFormat::Json => {
                let v = json!({
                    "schema": SCHEMA_VERSION,
                    "n": params.n(),
                    "eps": params.eps(),
                    "rows": rows,
                    "crossing_equals_closed": agree,
                });
                out = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
            }
            OutputFormat::Csv => {
                out.push_str("family,N,mu_crossing,mu_closed,mu_simplified,homotopy_class,contractible\n");
                for r in &rows {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.family,
                        r.iterate,
                        r.mu_crossing,
                        r.mu_closed,
                        r.mu_simplified.map_or(String::new(), |v| v.to_string()),
                        r.homotopy_class,
                        r.contractible
                    );
                }
            }
            OutputFormat::Md => {
                let _ = writeln!(out, "n = {}, eps = {}\n", params.n(), params.eps());
                out.push_str("| family |   N | mu_crossing | mu_closed | mu_simplified | class | contractible |\n");
                out.push_str("|--------|----:|------------:|----------:|--------------:|------:|--------------|\n");
                for r in &rows {
                    let _ = writeln!(
                        out,
                        "| {:<6} | {:>3} | {:>11} | {:>9} | {:>13} | {:>5} | {:<12} |",
                        r.family.to_string(),
                        r.iterate,
                        r.mu_crossing,
                        r.mu_closed,
                        opt(r.mu_simplified),
                        r.homotopy_class,
                        r.contractible
                    );
                }
            }
        }
        let code = if agree { 0 } else { 1 };
        Ok(CommandOutput::ok(code, out))
    })
}

fn render_table(table: &RankTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => table.to_json(),
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Md => table.to_markdown(),
    }
}

/// Rank table with its certificates; exit 1 when the expected pattern fails.
pub fn cmd_sh_ranks(config: &RunConfig) -> CommandOutput {
    run(|| {
        // The tally walks iterates until the index passes the window; an index of
        // D needs at most N ≈ (n+1)(D+1)/4 iterates.
        let cutoff = (u64::from(config.n) + 1) * (config.degree_max.max(0) as u64 + 3) / 2;
        let params = config.link_params(cutoff)?;
        let table = tally_ranks_with_shift(&params, config.degree_max, config.degree_shift)?;
        let pattern = check_thm_pattern(&table, config.n)?;
        let out = match config.format {
            OutputFormat::Json => {
                let v = json!({
                    "schema": SCHEMA_VERSION,
                    "n": params.n(),
                    "eps": params.eps(),
                    "table": table,
                    "pattern_ok": pattern,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
            OutputFormat::Csv => render_table(&table, OutputFormat::Csv),
            OutputFormat::Md => format!(
                "n = {}, eps = {}\n\n{}pattern (rank n at 1, n+1 at odd d >= 3): {}\n",
                params.n(),
                params.eps(),
                table.to_markdown(),
                if pattern { "OK" } else { "FAILED" }
            ),
        };
        Ok(CommandOutput::ok(if pattern { 0 } else { 1 }, out))
    })
}

/// Side-by-side link and lens tables; exit 1 when they differ.
pub fn cmd_lens_compare(config: &RunConfig) -> CommandOutput {
    run(|| {
        let cutoff = (u64::from(config.n) + 1) * (config.degree_max.max(0) as u64 + 3) / 2;
        let params = config.link_params(cutoff)?;
        let (a1, a2) = config.lens_weights()?;
        let link = tally_ranks_with_shift(&params, config.degree_max, 0)?;
        let lens = lens_orbit_table(config.n, &a1, &a2, config.degree_max)?;
        let equal = link.same_ranks(&lens);
        let out = match config.format {
            OutputFormat::Json => {
                let v = json!({
                    "schema": SCHEMA_VERSION,
                    "n": params.n(),
                    "eps": params.eps(),
                    "a1": a1,
                    "a2": a2,
                    "link_table": link,
                    "lens_table": lens,
                    "equal": equal,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
            OutputFormat::Csv => {
                let mut s = String::from("degree,link_rank,lens_rank\n");
                for d in 0..=config.degree_max {
                    let _ = writeln!(s, "{d},{},{}", link.rank(d), lens.rank(d));
                }
                s
            }
            OutputFormat::Md => {
                let mut s = format!(
                    "n = {}, eps = {}, a1 = {a1}, a2 = {a2}\n\n| degree | link | lens |\n|-------:|-----:|-----:|\n",
                    params.n(),
                    params.eps()
                );
                for d in 0..=config.degree_max {
                    let _ = writeln!(s, "| {d:>6} | {:>4} | {:>4} |", link.rank(d), lens.rank(d));
                }
                let _ = writeln!(s, "\nequal: {equal}");
                s
            }
        };
        Ok(CommandOutput::ok(if equal { 0 } else { 1 }, out))
    })
}

/// Aggregate of one named identity over all sample points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    /// Report-only checks never affect the exit status.
    pub asserted: bool,
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    /// Largest residual for `below` checks, smallest value for `above` checks.
    pub worst: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: RunConfig,
    pub eps: Rational,
    pub checks: Vec<CheckSummary>,
    /// First failures of asserted checks, at most [`MAX_LISTED_FAILURES`].
    pub failures: Vec<IdentityCheck>,
    /// Gram matrix of the symplectic basis at the first sample.
    pub gram_example: [[f64; 4]; 4],
    pub status: i32,
}

pub const MAX_LISTED_FAILURES: usize = 20;

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Collector {
    groups: Vec<(String, bool, Vec<IdentityCheck>)>,
}

impl Collector {
    fn add(&mut self, asserted: bool, checks: Vec<IdentityCheck>) {
        for c in checks {
            match self.groups.iter_mut().find(|g| g.0 == c.name) {
                Some(g) => g.2.push(c),
                None => self.groups.push((c.name.clone(), asserted, vec![c])),
            }
        }
    }

    fn finish(self) -> (Vec<CheckSummary>, Vec<IdentityCheck>) {
        let mut summaries = Vec::new();
        let mut failures = Vec::new();
        for (name, asserted, checks) in self.groups {
            let passed = checks.iter().filter(|c| c.pass).count();
            let above = checks.first().is_some_and(|c| c.bound == crate::forms::Bound::Above);
            let values = checks.iter().map(|c| c.value);
            let worst = if above { values.fold(f64::INFINITY, f64::min) } else { values.fold(0.0, f64::max) };
            if asserted {
                failures.extend(checks.iter().filter(|c| !c.pass).take(MAX_LISTED_FAILURES).cloned());
            }
            summaries.push(CheckSummary {
                name,
                asserted,
                count: checks.len(),
                passed,
                failed: checks.len() - passed,
                worst,
                threshold: checks[0].threshold,
            });
        }
        failures.truncate(MAX_LISTED_FAILURES);
        (summaries, failures)
    }
}

fn pt(p: &PointC3) -> Vec<f64> {
    p.to_real().iter().copied().collect()
}

fn per_point<F>(points: &[PointC3], f: F) -> Result<Vec<IdentityCheck>>
where
    F: Fn(&PointC3) -> Result<Vec<IdentityCheck>> + Sync + Send,
{
    let chunks: Vec<Vec<IdentityCheck>> = points.par_iter().map(f).collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// Runs every identity sweep and returns the report (status 0 iff all asserted checks pass).
pub fn verify(config: &RunConfig) -> Result<VerificationReport> {
    let params = config.link_params(100)?;
    if params.eps().is_zero() {
        return Err(Error::DegenerateOrbit("eps = 0: the Reeb flow has no isolated orbits".into()));
    }
    let tol = config.tolerances;
    let n = params.n();
    let link = sample_link(&params, config.samples, config.seed)?;
    let c3 = sample_c3(config.samples, config.seed ^ 0x5eed);
    let mut col = Collector::default();

    col.add(
        true,
        link.iter()
            .map(|p| {
                let (rf, rs) = onlink_residuals(&params, p);
                IdentityCheck::below("sample_on_link", pt(p), rf.max(rs), tol.onlink)
            })
            .collect(),
    );
    col.add(true, per_point(&link, |p| check_reeb_defining(&params, p, &tol))?);
    col.add(true, per_point(&link, |p| check_reeb_alpha1(&params, p, &tol))?);
    for tag in [FormTag::Alpha0, FormTag::AlphaEps] {
        col.add(true, per_point(&link, |p| check_contact_condition(&params, p, tag, &tol))?);
    }
    col.add(
        true,
        per_point(&link, |p| {
            let mismatch = kernel_mismatch(&params, p, FormTag::Alpha1, FormTag::AlphaEps)?
                .max(kernel_mismatch(&params, p, FormTag::AlphaEps, FormTag::Alpha1)?);
            let dh_r = dh(&params, p).dot(&eval_reeb_eps(&params, p)).abs();
            Ok(vec![
                IdentityCheck::below("kernel_alpha1_equals_kernel_alpha_eps", pt(p), mismatch, tol.identity),
                IdentityCheck::below("h_constant_along_reeb", pt(p), dh_r, tol.identity),
            ])
        })?,
    );
    col.add(true, c3.iter().map(|p| check_hamiltonian_identity(&params, p, &tol)).collect());
    col.add(
        true,
        c3.iter()
            .map(|p| {
                let lhs = df_apply(n, p, &eval_reeb_eps(&params, p));
                let rhs = Complex64::new(0.0, 4.0) * eval_f(&params, p);
                let residual = (lhs - rhs).norm() / rhs.norm().max(1.0);
                IdentityCheck::below("reeb_rotates_f", pt(p), residual, tol.identity)
            })
            .collect(),
    );

    // Liouville identities.
    let omega1 = ConstantForm::omega1(n);
    let omega_c3 = ConstantForm::omega_c3();
    let omega_c2 = ConstantForm::omega_c2();
    col.add(
        true,
        per_point(&c3, |p| {
            let x = pt(p);
            Ok(vec![
                check_liouville(&VectorFieldSpec::LiouvilleOmega1, &omega1, &x, &tol)?,
                check_liouville(&VectorFieldSpec::RadialC3, &omega_c3, &x, &tol)?,
            ])
        })?,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xc2);
    let c2: Vec<[f64; 4]> = (0..config.samples)
        .map(|_| std::array::from_fn(|_| StandardNormal.sample(&mut rng)))
        .collect();
    col.add(
        true,
        c2.iter()
            .map(|x| check_liouville(&VectorFieldSpec::LiouvilleC2, &omega_c2, x, &tol))
            .collect::<Result<_>>()?,
    );

    // φ̃, Ψ and the lens hypersurface.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x53);
    let s3: Vec<(Complex64, Complex64)> = (0..config.samples).map(|_| sample_s3(&mut rng)).collect();
    let action = CyclicAction::new(n)?;
    let mut lens_checks = Vec::with_capacity(3 * s3.len());
    for &(u, v) in &s3 {
        let z = phi_tilde(n, u, v);
        let (gu, gv) = action.apply(1, u, v);
        let point = vec![u.re, u.im, v.re, v.im];
        lens_checks.push(IdentityCheck::below("phi_tilde_on_hypersurface", point.clone(), eval_f_n(n, &z).norm(), tol.onlink));
        lens_checks.push(IdentityCheck::below(
            "phi_tilde_invariance",
            point,
            phi_tilde(n, gu, gv).dist(&z),
            tol.onlink,
        ));
        lens_checks.push(check_lens_hypersurface(n, u, v, tol.onlink.max(1e-10))?);
    }
    col.add(true, lens_checks);
    col.add(
        true,
        c3.iter()
            .map(|w| {
                let z = psi_coordinate_change(w);
                let zf = z.0[0].powu(n + 1) + z.0[1] * z.0[1] + z.0[2] * z.0[2];
                let wf = eval_f_n(n, w);
                let residual = (zf - wf).norm() / wf.norm().max(1.0);
                IdentityCheck::below("psi_pullback", pt(w), residual, tol.onlink)
            })
            .collect(),
    );

    // Flow: simple orbits over one period, then random link points.
    let mut flow_checks = Vec::new();
    for orbit in enumerate_simple_orbits(&params)?.orbits {
        let t = orbit.period.approx;
        let end = flow_rk4(&params, &orbit.start, t, t / 1e4)?;
        flow_checks.push(IdentityCheck::below(
            "rk4_matches_closed_form",
            pt(&orbit.start),
            end.dist(&flow_closed_form(&params, &orbit.start, t)),
            tol.ode,
        ));
        flow_checks.push(IdentityCheck::below("rk4_closes_orbit", pt(&orbit.start), end.dist(&orbit.start), tol.ode));
    }
    let flow_points = &link[..link.len().min(16)];
    let period = std::f64::consts::PI / (1.0 - params.eps_f64());
    flow_checks.extend(per_point(flow_points, |p| {
        let end = flow_rk4(&params, p, period, period / 1e4)?;
        let exact = flow_closed_form(&params, p, period);
        Ok(vec![
            IdentityCheck::below("rk4_matches_closed_form", pt(p), end.dist(&exact), tol.ode),
            IdentityCheck::below("rk4_conserves_norm", pt(p), (end.norm_sqr() - p.norm_sqr()).abs(), tol.ode),
            IdentityCheck::below(
                "rk4_conserves_h",
                pt(p),
                (eval_h(&params, &end) - eval_h(&params, p)).abs(),
                tol.ode,
            ),
            IdentityCheck::below("flow_stays_on_link", pt(p), eval_f(&params, &exact).norm(), tol.identity),
        ])
    })?);
    col.add(true, flow_checks);

    // Symplectic basis: the antisymmetric Gram form is asserted, the rest is reported.
    let bases: Vec<_> = link.par_iter().map(|p| check_symplectic_basis(&params, p, &tol)).collect::<Result<_>>()?;
    col.add(
        true,
        bases
            .iter()
            .map(|b| IdentityCheck::below("symplectic_basis_standard_form", b.point.clone(), b.standard_residual, tol.gram))
            .collect(),
    );
    col.add(
        false,
        bases
            .iter()
            .flat_map(|b| {
                [
                    IdentityCheck::below(
                        "symplectic_basis_symmetric_display",
                        b.point.clone(),
                        b.symmetric_display_residual,
                        tol.gram,
                    ),
                    IdentityCheck::below(
                        "symplectic_basis_xi_orthogonality",
                        b.point.clone(),
                        b.xi_orthogonality_residual,
                        tol.gram,
                    ),
                ]
            })
            .collect(),
    );
    col.add(
        false,
        link.iter()
            .flat_map(|p| {
                let check = radial_tangency(n, p);
                let gap = (check.value - radial_tangency_predicted(n, p)).abs();
                [check, IdentityCheck::below("radial_tangency_minus_prediction", pt(p), gap, tol.identity)]
            })
            .collect(),
    );

    let (checks, failures) = col.finish();
    let status = if checks.iter().any(|c| c.asserted && c.failed > 0) { 1 } else { 0 };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        config: config.clone(),
        eps: params.eps().clone(),
        checks,
        failures,
        gram_example: bases[0].gram,
        status,
    })
}

fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        OutputFormat::Csv => {
            let mut s = String::from("name,asserted,count,passed,failed,worst,threshold\n");
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{:e},{:e}",
                    c.name, c.asserted, c.count, c.passed, c.failed, c.worst, c.threshold
                );
            }
            s
        }
        OutputFormat::Md => {
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(4);
            let mut s = format!(
                "n = {}, eps = {}, samples = {}, seed = {}\n\n| {:<width$} | kind     | passed      | worst     | threshold |\n|{}|----------|-------------|-----------|-----------|\n",
                report.config.n,
                report.eps,
                report.config.samples,
                report.config.seed,
                "check",
                "-".repeat(width + 2),
            );
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "| {:<width$} | {:<8} | {:>5}/{:<5} | {:>9.2e} | {:>9.1e} |",
                    c.name,
                    if c.asserted { "asserted" } else { "report" },
                    c.passed,
                    c.count,
                    c.worst,
                    c.threshold
                );
            }
            let _ = writeln!(s, "\nstatus: {}", if report.status == 0 { "OK" } else { "FAILED" });
            s
        }
    }
}

/// Identity sweeps; exit 1 if an asserted check fails, 3 on sampling failure.
pub fn cmd_verify(config: &RunConfig) -> CommandOutput {
    run(|| {
        let report = verify(config)?;
        Ok(CommandOutput::ok(report.status, render_report(&report, config.format)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig { samples: 20, ..RunConfig::default() }
    }

    #[test]
    fn cz_table_example() {
        let out = cmd_cz_table(&RunConfig { format: OutputFormat::Csv, ..config() });
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("minus,7,9,9,9,1,false"));
        assert!(out.stdout.contains("plus,3,3,3,3,0,true"));
    }

    #[test]
    fn degenerate_eps_exits_two() {
        let out = cmd_cz_table(&RunConfig { eps: "0".into(), n_max: 1, ..config() });
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("degenerate"));
    }

    #[test]
    fn auto_eps() {
        let out = cmd_cz_table(&RunConfig { n: 4, eps: "auto".into(), n_max: 10, format: OutputFormat::Csv, ..config() });
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("minus,10,9,9,9,0,true"));
    }

    #[test]
    fn lens_compare_resonant() {
        let out = cmd_lens_compare(&RunConfig { a2: "1".into(), degree_max: 6, ..config() });
        assert_eq!(out.code, 2);
    }

    #[test]
    fn verify_small() {
        let report = verify(&config()).unwrap();
        assert_eq!(report.status, 0, "{:#?}", report.failures);
        assert!(report.check("radial_tangency").unwrap().worst > 1e-3);
    }

    #[test]
    fn invalid_tolerance_is_rejected() {
        let mut c = config();
        c.tolerances.identity = 0.0;
        assert_eq!(cmd_verify(&c).code, 2);
    }
}

use serde::{Deserialize, Serialize};

/// Floating-point tolerances used by the numerical cross-checks.
///
/// Nothing in the index engine reads these: index computations are exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Identities that hold analytically and are evaluated without finite differences.
    pub identity: f64,
    /// On-link predicate for sampled points (`|f|` and `||p|^2 - 1|`).
    pub onlink: f64,
    /// Integrator agreement and conservation.
    pub ode: f64,
    /// Identities whose evaluation goes through a finite-difference derivative.
    pub liouville: f64,
    /// Lower bound on contact volumes.
    pub volume: f64,
    /// Gram-matrix entries of the symplectic basis.
    pub gram: f64,
    /// Central finite-difference step.
    pub fd_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            identity: 1e-9,
            onlink: 1e-12,
            ode: 1e-6,
            liouville: 1e-7,
            volume: 1e-6,
            gram: 1e-8,
            fd_step: 1e-5,
        }
    }
}

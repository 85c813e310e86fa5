//! Conley–Zehnder indices of Reeb orbits on the link of the `A_n` singularity.
//!
//! The link `L = {w₀^{n+1} + 2w₁w₂ = 0} ∩ S⁵` carries the perturbed contact form
//! `α_ε = λ/H`, `H = |w|² + ε(|w₁|² − |w₂|²)`, whose only simple Reeb orbits are
//! `γ₊` in the `w₁` line and `γ₋` in the `w₂` line. This crate
//!
//! * computes `μ_CZ(γ±^N)` exactly, by crossing counts and by a closed floor formula ([`cz`]),
//! * tallies the indices into graded ranks and compares with the lens space `L(n+1, n)` ([`ranks`], [`lens`]),
//! * checks the underlying differential-geometric identities numerically ([`forms`], [`dynamics`]).
//!
//! ```
//! use reebcz::{cz_link_closed_form, Family, LinkParams, Rational};
//!
//! let params = LinkParams::new(2, Rational::new(1, 1000)).unwrap();
//! let minus: Vec<i64> = (1..=7)
//!     .map(|k| cz_link_closed_form(&params, Family::Minus, k).unwrap())
//!     .collect();
//! assert_eq!(minus, [1, 3, 5, 5, 7, 9, 9]);
//! ```

pub mod cli;
pub mod config;
pub mod cz;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod forms;
pub mod geometry;
pub mod lens;
pub mod ranks;

pub use config::Tolerances;
pub use cz::{
    choose_eps, cz_lens, cz_lens_split_floor, cz_link_closed_form, cz_link_simplified, cz_link_via_crossing,
    cz_path, cz_rotation, first_resonance, RotationBlock, RotationPath,
};
pub use dynamics::{enumerate_simple_orbits, flow_closed_form, flow_rk4, return_map, Family, OrbitDescriptor};
pub use error::{Error, Result};
pub use exact::{floor_div, is_resonant, Angle, Rational};
pub use forms::{IdentityCheck, VectorFieldSpec};
pub use geometry::{eval_f, eval_h, sample_link, tangent_frame, LinkParams, PointC3};
pub use lens::{phi_tilde, psi_coordinate_change, CyclicAction, LensOrbitKind};
pub use ranks::{check_thm_pattern, conjugacy_class_count, lens_orbit_table, tally_ranks, RankTable};

//! The perturbed Reeb flow: simple orbits, RK4 against the closed form, return maps.

use reebcz::dynamics::brieskorn_common_period;
use reebcz::geometry::eval_h;
use reebcz::{enumerate_simple_orbits, flow_closed_form, flow_rk4, return_map, LinkParams, Rational};

fn main() -> reebcz::Result<()> {
    let params = LinkParams::new(2, Rational::new(1, 1000))?;
    let simple = enumerate_simple_orbits(&params)?;
    for orbit in &simple.orbits {
        let t = orbit.period.approx;
        let end = flow_rk4(&params, &orbit.start, t, t / 1e4)?;
        let rm = return_map(&params, orbit)?;
        println!(
            "{}: period ({})π ≈ {:.6}, rk4 vs closed form {:.1e}, ΔH {:.1e}, ξ-eigenvalues at distance {:.4} from 1",
            orbit.family,
            orbit.period.pi_coeff,
            t,
            end.dist(&flow_closed_form(&params, &orbit.start, t)),
            (eval_h(&params, &end) - eval_h(&params, &orbit.start)).abs(),
            rm.min_distance_to_one
        );
    }
    for r in &simple.rejected {
        println!("rejected: {}", r.reason);
    }
    // Unperturbed Brieskorn flow: every orbit closes at the common period.
    println!("common period of the (3, 2, 2) flow: ({})π", brieskorn_common_period(&[3, 2, 2]));
    Ok(())
}

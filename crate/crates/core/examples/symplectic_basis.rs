//! Gram matrix of the symplectic basis at a sampled link point, and the
//! tangency defect of the radial field on the hypersurface.

use reebcz::config::Tolerances;
use reebcz::forms::{check_symplectic_basis, radial_tangency};
use reebcz::{sample_link, LinkParams, Rational};

fn main() -> reebcz::Result<()> {
    let params = LinkParams::new(2, Rational::new(1, 1000))?;
    let p = sample_link(&params, 1, 3)?[0];
    let rep = check_symplectic_basis(&params, &p, &Tolerances::default())?;
    for row in rep.gram {
        println!("{:>8.4} {:>8.4} {:>8.4} {:>8.4}", row[0], row[1], row[2], row[3]);
    }
    println!(
        "standard form residual {:.1e}, symmetric display residual {:.2}",
        rep.standard_residual, rep.symmetric_display_residual
    );
    for n in 1..=4 {
        let params = LinkParams::new(n, Rational::new(1, 1000))?;
        let q = sample_link(&params, 1, 3)?[0];
        println!("n = {n}: |df(Y)| = {:.3e}", radial_tangency(n, &q).value);
    }
    Ok(())
}

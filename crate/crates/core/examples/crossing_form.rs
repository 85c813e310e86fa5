//! The index of rotation paths and the decomposition μ(Φ) − μ(Φ on ξ^ω) for one orbit.

use reebcz::cz::{link_flow_path, xi_complement_path};
use reebcz::{cz_path, cz_rotation, Angle, Family, LinkParams, Rational, RotationBlock};

fn main() -> reebcz::Result<()> {
    for (speed, t) in [(1, Rational::new(1, 2)), (1, Rational::from_integer(2)), (4, Rational::one())] {
        let block = RotationBlock::new(Rational::from_integer(speed));
        let t = Angle::pi_times(t);
        println!("e^{{{speed}it}} on [0, {t}]: μ = {}", cz_rotation(&block, &t)?);
    }

    let params = LinkParams::new(2, Rational::new(1, 1000))?;
    for k in 1..=4 {
        let full = link_flow_path(&params, Family::Minus, k);
        let complement = xi_complement_path(&params, Family::Minus, k);
        let angles: Vec<String> = full.end_angles().iter().map(ToString::to_string).collect();
        println!(
            "minus^{k}: end angles [{}], μ(Φ) = {}, μ(Φ_ξω) = {}, μ = {}",
            angles.join(", "),
            cz_path(&full)?,
            cz_path(&complement)?,
            cz_path(&full)? - cz_path(&complement)?
        );
    }
    Ok(())
}

//! Conley-Zehnder indices of the first iterates of both orbit families.
//!
//! `cargo run --example cz_table -- 2 1/1000 7`

use reebcz::{cz_link_closed_form, cz_link_simplified, cz_link_via_crossing, Family, LinkParams};

fn main() -> reebcz::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(2, |s| s.parse().expect("n"));
    let eps = args.get(1).map_or("1/1000", String::as_str).parse()?;
    let n_max: u64 = args.get(2).map_or(7, |s| s.parse().expect("N_max"));

    let params = LinkParams::certified(n, eps, n_max)?;
    println!("n = {n}, eps = {}", params.eps());
    println!("{:>6} {:>4} {:>9} {:>7} {:>11}", "family", "N", "crossing", "closed", "simplified");
    for family in Family::ALL {
        for k in 1..=n_max {
            let simplified = cz_link_simplified(&params, family, k).map_or("-".to_string(), |m| m.to_string());
            println!(
                "{:>6} {:>4} {:>9} {:>7} {:>11}",
                family.to_string(),
                k,
                cz_link_via_crossing(&params, family, k)?,
                cz_link_closed_form(&params, family, k)?,
                simplified
            );
        }
    }
    Ok(())
}

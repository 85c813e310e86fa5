//! Ranks of the lens space L(n+1, n) against those of the link, plus the
//! split-floor variant of the lens index that overcounts degree 1.
//!
//! `cargo run --example lens_compare -- 2 1 1001/1000`

use reebcz::cz::cz_lens_split_floor;
use reebcz::{lens_orbit_table, tally_ranks, LensOrbitKind, LinkParams, Rational};

fn main() -> reebcz::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(2, |s| s.parse().expect("n"));
    let a1: Rational = args.get(1).map_or("1", String::as_str).parse()?;
    let a2: Rational = args.get(2).map_or("1001/1000", String::as_str).parse()?;
    let degree_max = 15;

    let link = tally_ranks(&LinkParams::new(n, Rational::new(1, 1000))?, degree_max)?;
    let lens = lens_orbit_table(n, &a1, &a2, degree_max)?;
    println!("degree  link  lens");
    for d in 0..=degree_max {
        println!("{d:>6} {:>5} {:>5}", link.rank(d), lens.rank(d));
    }
    println!("equal: {}", link.same_ranks(&lens));

    let split_degree_one = LensOrbitKind::ALL
        .into_iter()
        .flat_map(|w| (1..=u64::from(n)).map(move |k| (w, k)))
        .filter(|&(w, k)| matches!(cz_lens_split_floor(n, &a1, &a2, w, k), Ok(1)))
        .count();
    println!("split-floor formula: {split_degree_one} generators in degree 1 (combined floor: {})", lens.rank(1));
    Ok(())
}

//! Graded ranks from the index tally, with the lacunarity certificate.
//!
//! `cargo run --example sh_ranks -- 3 21`

use reebcz::{check_thm_pattern, choose_eps, conjugacy_class_count, tally_ranks, LinkParams};

fn main() -> reebcz::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(2, |s| s.parse().expect("n"));
    let degree_max: i64 = args.get(1).map_or(15, |s| s.parse().expect("D"));

    // Enough iterates to pass the degree window.
    let cutoff = (u64::from(n) + 1) * (degree_max as u64 + 3) / 2;
    let params = LinkParams::certified(n, choose_eps(n, cutoff)?, cutoff)?;
    let table = tally_ranks(&params, degree_max)?;
    print!("{}", table.to_markdown());
    println!(
        "expected pattern: {}; conjugacy classes of A_{n}: {}",
        check_thm_pattern(&table, n)?,
        conjugacy_class_count(n)?
    );
    println!("free homotopy classes realized: {:?}", table.homotopy_classes_realized());
    Ok(())
}

//! Runs the full identity sweep and prints the summary table.
//!
//! `cargo run --release --example verify_identities -- 3 500`

use reebcz::cli::{cmd_verify, RunConfig};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = RunConfig {
        n: args.first().map_or(2, |s| s.parse().expect("n")),
        samples: args.get(1).map_or(300, |s| s.parse().expect("samples")),
        ..RunConfig::default()
    };
    let out = cmd_verify(&config);
    print!("{}{}", out.stdout, out.stderr);
    std::process::exit(out.code);
}

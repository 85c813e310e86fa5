use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reebcz::cli::{cmd_cz_table, cmd_lens_compare, cmd_sh_ranks, cmd_verify, configure_threads, OutputFormat, RunConfig};
use reebcz::Tolerances;

#[derive(Parser)]
#[command(name = "reebcz", version, about = "Conley-Zehnder indices and rank tables for the A_n link")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index table for both orbit families up to --n-max.
    CzTable(Flags),
    /// Graded ranks up to --degree-max with lacunarity certificates.
    ShRanks(Flags),
    /// Numerical identity sweeps at seeded sample points.
    Verify(Flags),
    /// Link and lens-space rank tables side by side.
    LensCompare(Flags),
}

#[derive(Args)]
struct Flags {
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Perturbation as p/q, or "auto" for a certified choice.
    #[arg(long, default_value = "1/1000")]
    eps: String,
    #[arg(long, default_value_t = 7)]
    n_max: u64,
    #[arg(long, default_value_t = 41)]
    degree_max: i64,
    /// Constant added to every index to form the degree.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    degree_shift: i64,
    #[arg(long, default_value = "1")]
    a1: String,
    #[arg(long, default_value = "1001/1000")]
    a2: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol_identity: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_onlink: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol_ode: f64,
    #[arg(long, default_value = "md", value_parser = ["json", "csv", "md"])]
    format: String,
}

impl Flags {
    fn into_config(self) -> RunConfig {
        RunConfig {
            n: self.n,
            eps: self.eps,
            n_max: self.n_max,
            degree_max: self.degree_max,
            degree_shift: self.degree_shift,
            a1: self.a1,
            a2: self.a2,
            samples: self.samples,
            seed: self.seed,
            tolerances: Tolerances {
                identity: self.tol_identity,
                onlink: self.tol_onlink,
                ode: self.tol_ode,
                ..Tolerances::default()
            },
            format: self.format.parse::<OutputFormat>().expect("clap restricts the values"),
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let output = match Cli::parse().command {
        Command::CzTable(f) => cmd_cz_table(&f.into_config()),
        Command::ShRanks(f) => cmd_sh_ranks(&f.into_config()),
        Command::Verify(f) => cmd_verify(&f.into_config()),
        Command::LensCompare(f) => cmd_lens_compare(&f.into_config()),
    };
    let _ = std::io::stdout().write_all(output.stdout.as_bytes());
    let _ = std::io::stderr().write_all(output.stderr.as_bytes());
    ExitCode::from(output.code as u8)
}

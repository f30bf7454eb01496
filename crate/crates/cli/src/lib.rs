//! Shared plumbing for the workbench binaries: flag structs and report
//! printing with the exit-code contract (0 all pass, 1 any fail, 2 bad
//! configuration).

use clap::Args;
use dvlab::report::{Config, SuiteReport};

#[derive(Args, Clone, Debug)]
pub struct CommonFlags {
    /// Seed for every randomized sweep; identical seeds reproduce reports.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampling prime for finite-field runs.
    #[arg(long, default_value_t = 10007)]
    pub prime: u64,
    /// Sample count for randomized sweeps.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Search bound for the lattice enumeration.
    #[arg(long, default_value_t = 120)]
    pub bound: u64,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["json", "csv", "text"])]
    pub format: String,
}

impl CommonFlags {
    pub fn to_config(&self) -> Config {
        Config {
            seed: self.seed,
            prime: self.prime,
            samples: self.samples,
            bound: self.bound,
        }
    }
}

pub fn emit(report: &SuiteReport, format: &str) -> i32 {
    match format {
        "json" => print!("{}", report.to_json()),
        "csv" => print!("{}", report.to_csv()),
        _ => print!("{}", report.to_text()),
    }
    if report.failures() == 0 {
        0
    } else {
        1
    }
}

//! Suite runner: `dv check --case <model>` for the per-model assertion
//! sweeps, `dv run <suite>` for any named suite including `all`.

use clap::{Parser, Subcommand};
use dvlab::report::run_suite;
use dvlab_cli::{emit, CommonFlags};

#[derive(Parser)]
#[command(name = "dv", about = "Debarre-Voisin workbench suite runner")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the assertion sweep for one model.
    Check {
        #[arg(long, value_parser = ["sl3", "sp4", "sl2", "g2sl3"])]
        case: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Run a named suite.
    Run {
        #[arg(value_parser = dvlab::report::SUITES)]
        suite: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
}

fn main() {
    let cli = Cli::parse();
    let (name, flags) = match &cli.cmd {
        Cmd::Check { case, flags } => (case.clone(), flags.clone()),
        Cmd::Run { suite, flags } => (suite.clone(), flags.clone()),
    };
    let default_format = matches!(&cli.cmd, Cmd::Check { .. });
    match run_suite(&name, &flags.to_config()) {
        Ok(report) => {
            let fmt = if default_format && flags.format == "text" {
                "json"
            } else {
                flags.format.as_str()
            };
            std::process::exit(emit(&report, fmt));
        }
        Err(e) => {
            eprintln!("configuration error: {e}");
            std::process::exit(2);
        }
    }
}

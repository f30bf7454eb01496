//! Lattice and cone arithmetic: the movable/nef table, the minimal-norm
//! table, and the Heegner nonemptiness sweep.

use clap::{Parser, Subcommand};
use dvlab::periods::{heegner_nonempty, minimal_norm_table};
use dvlab::report::{run_suite, table1_csv, Config};
use dvlab_cli::{emit, CommonFlags};

#[derive(Parser)]
#[command(name = "periods", about = "Period-domain arithmetic tables")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The movable/nef classes table for the listed half-degrees.
    Table1 {
        /// Comma-separated values of e.
        #[arg(long, default_value = "1,3,5,9,11,15", value_delimiter = ',')]
        e: Vec<u64>,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// The minimal-norm vector table per discriminant class.
    Table2 {
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Heegner-divisor nonemptiness for 1 <= e <= max.
    Heegner {
        #[arg(long, default_value_t = 30)]
        max: i64,
        #[command(flatten)]
        flags: CommonFlags,
    },
}

fn main() {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Table1 { e, flags } => {
            if flags.format == "csv" {
                print!("{}", table1_csv(&e));
                std::process::exit(0);
            }
            match run_suite("table1", &flags.to_config()) {
                Ok(r) => std::process::exit(emit(&r, &flags.format)),
                Err(err) => {
                    eprintln!("configuration error: {err}");
                    std::process::exit(2);
                }
            }
        }
        Cmd::Table2 { flags } => {
            let cfg: Config = flags.to_config();
            match minimal_norm_table(cfg.bound) {
                Ok(table) => {
                    if flags.format == "json" {
                        let rows: Vec<serde_json::Value> = table
                            .iter()
                            .map(|t| {
                                serde_json::json!({
                                    "class": t.a,
                                    "e": t.e,
                                    "vector": [t.vector.0, t.vector.1],
                                })
                            })
                            .collect();
                        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                    } else {
                        println!("a,e,p,q");
                        for t in &table {
                            println!("±{},{},{},{}", t.a, t.e, t.vector.0, t.vector.1);
                        }
                    }
                    std::process::exit(0);
                }
                Err(e) => {
                    eprintln!("search failed: {e}");
                    std::process::exit(1);
                }
            }
        }
        Cmd::Heegner { max, flags } => {
            if flags.format == "json" {
                let rows: Vec<serde_json::Value> = (1..=max)
                    .map(|e| serde_json::json!({"e": e, "nonempty": heegner_nonempty(e)}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!("e,nonempty");
                for e in 1..=max {
                    println!("{e},{}", heegner_nonempty(e));
                }
            }
            std::process::exit(0);
        }
    }
}

//! Emit the 120 coefficients of a named trivector in the fixed
//! lexicographic index order, one per line.

use clap::Parser;

#[derive(Parser)]
#[command(name = "trivector", about = "Print a model trivector's coefficients")]
struct Cli {
    /// Which invariant trivector to build.
    #[arg(value_parser = ["sl3", "sp4", "sl2", "g2sl3"])]
    name: String,
    /// Print the coefficient vector, one entry per line.
    #[arg(long)]
    emit: bool,
    /// Print the form as a JSON object {degree, ambient_dim, coeffs}.
    #[arg(long)]
    json: bool,
}

fn main() {
    let cli = Cli::parse();
    let form = match cli.name.as_str() {
        "sl3" => dvlab::zoo::sl3_sigma0(),
        "sp4" => dvlab::zoo::sp4_sigma0().sigma,
        "g2sl3" => dvlab::zoo::g2sl3_sigma0().sigma,
        "sl2" => dvlab::zoo::sl2_sigma0().sigma,
        _ => unreachable!(),
    };
    if cli.json {
        println!("{}", form.to_json());
    } else if cli.emit {
        use dvlab::field::Field;
        for c in &form.coeffs {
            println!("{}", c.render());
        }
    } else {
        use dvlab::field::Field;
        let nonzero = form.coeffs.iter().filter(|c| !c.is_zero()).count();
        println!(
            "{}: alternating 3-form on a 10-space, {} of 120 coefficients nonzero (--emit to print)",
            cli.name, nonzero
        );
    }
}

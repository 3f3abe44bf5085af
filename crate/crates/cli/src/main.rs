use clap::{Parser, Subcommand};

use polysign_cli::run::{render_text, run_analyze, run_budan, run_isolate};

/// Exact sign-based root bounds for polynomials with rational coefficients.
#[derive(Parser)]
#[command(name = "polysign", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign counts, root-count bounds, and zero-block analysis.
    Analyze {
        /// Expression ("3x^4 - x") or descending coefficients ("[3, 0, 0, -1, 0]").
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Also report exact signed root counts from the built-in oracle.
        #[arg(long)]
        exact: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Variation-difference root bound for the interval (a, b].
    Budan {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Left endpoint; must not be a root.
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Right endpoint.
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Isolate every real root into its own interval or exact point.
    Isolate {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Refine isolating intervals to at most this width, e.g. "1/8".
        #[arg(long, allow_hyphen_values = true)]
        width: Option<String>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let (result, json) = match &cli.command {
        Command::Analyze { poly, exact, json } => (run_analyze(poly, *exact), *json),
        Command::Budan { poly, a, b, json } => (run_budan(poly, a, b), *json),
        Command::Isolate { poly, width, json } => (run_isolate(poly, width.as_deref()), *json),
    };
    match result {
        Ok(doc) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("document serializes")
                );
            } else {
                print!("{}", render_text(&doc));
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

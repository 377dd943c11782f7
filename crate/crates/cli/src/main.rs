use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dunkl_cli::{commands, Output};

#[derive(Parser)]
#[command(
    name = "dunkl",
    version,
    about = "Exact one-dimensional Dunkl calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_n, or the generalized H^mu_n when --mu is given.
    #[command(alias = "genhermite")]
    Hermite {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the intertwining operator V_mu to a polynomial.
    Intertwine {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// monomial, hermite, boson or integral
        #[arg(long, default_value = "monomial")]
        method: String,
        /// Coefficients, lowest degree first, e.g. "-2,0,4"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
        /// Evaluation point for --method integral
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
        /// Quadrature nodes for --method integral
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// Apply a single operator (derivative, mul-x, reflection, projector, dunkl,
    /// number-op, a-squared, b-op, gauged-hamiltonian).
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        /// lemmas, basis, intertwine, oscillator, quadrature or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
        /// Comma-separated rationals; defaults to a certification sample sized to max-degree
        #[arg(long, allow_hyphen_values = true)]
        mu_samples: Option<String>,
    },
    /// Print the Gauss-Jacobi rule for the integral representation.
    Quadrature {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        nodes: usize,
        /// Print the rule as JSON instead of CSV
        #[arg(long)]
        emit_rule: bool,
    },
    /// Compare the quadrature realization with the exact one.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        max_degree: usize,
        /// Comma-separated evaluation points (default -1,-0.5,0,0.5,1)
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
}

fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Hermite { n, mu, json } => commands::cmd_hermite(n, mu.as_deref(), json),
        Command::Intertwine {
            mu,
            method,
            poly,
            json,
            x0,
            nodes,
        } => commands::cmd_intertwine(&mu, &method, &poly, json, x0.as_deref(), nodes),
        Command::Apply { op, mu, poly, json } => {
            commands::cmd_apply(&op, mu.as_deref(), &poly, json)
        }
        Command::Verify {
            suite,
            max_degree,
            mu_samples,
        } => commands::cmd_verify(&suite, max_degree, mu_samples.as_deref()),
        Command::Quadrature {
            mu,
            nodes,
            emit_rule,
        } => commands::cmd_quadrature(&mu, nodes, emit_rule),
        Command::Compare {
            mu,
            max_degree,
            grid,
        } => commands::cmd_compare(&mu, max_degree, grid.as_deref()),
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

//! `poncelet` — Poncelet polygons on the pencil x² + k y² + c k z² = 0
//! in PG(2,p): relation tables, coefficient sets, integer polynomials,
//! geometric traces, and a cross-method verification sweep.

mod commands;
mod output;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(name = "poncelet", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The (p-1)x(p-1) relation table: which pairs (O_alpha, O_beta) carry
    /// an n-gon, rows indexed by the inner conic
    Table {
        /// Odd prime order of the plane
        #[arg(long)]
        p: u64,
        /// Pencil parameter override (validated; default: smallest valid)
        #[arg(long)]
        c: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Recompute the table geometrically and fail on any difference
        #[arg(long)]
        oracle: bool,
    },
    /// The Poncelet coefficients for n-gons: all k with (O_k, O_1)
    /// carrying an n-sided polygon, by every applicable method
    Coeffs {
        #[arg(long)]
        p: u64,
        /// Polygon length; must divide p + 1
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The integer Poncelet polynomial P_n of degree phi(n)/2
    Poly {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Trace one polygon: vertices on O_beta, sides tangent to O_alpha
    Trace {
        #[arg(long)]
        p: u64,
        /// Inner conic index
        #[arg(long)]
        alpha: u64,
        /// Outer conic index
        #[arg(long)]
        beta: u64,
        /// Start vertex "x,y,z" on O_beta (default: its smallest point)
        #[arg(long)]
        start: Option<String>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-validate tracer, iteration, polynomial roots and the series
    /// criterion over all odd primes p <= p-max and all n <= n-max
    Verify {
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { p, c, format, oracle } => commands::cmd_table(p, c, format, oracle),
        Command::Coeffs { p, n, c, format } => commands::cmd_coeffs(p, n, c, format),
        Command::Poly { n, format } => commands::cmd_poly(n, format),
        Command::Trace {
            p,
            alpha,
            beta,
            start,
            c,
            format,
        } => commands::cmd_trace(p, alpha, beta, start.as_deref(), c, format),
        Command::Verify { p_max, n_max, format } => commands::cmd_verify(p_max, n_max, format),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

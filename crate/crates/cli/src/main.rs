//! Command-line front end: build/verify campaigns with deterministic
//! JSON reports.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 usage or configuration error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "hopfkit")]
#[command(about = "Exact verification of structure-constant Hopf algebras and their orders")]
#[command(version)]
struct Cli {
    /// Worker threads for the verification suites (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the JSON report to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Include per-stage timings in the report (makes output nondeterministic)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build A_p and H_p and run the full Hopf verification campaign:
    /// axiom suite, dual-table coincidence, representations and
    /// characters, self-duality, automorphism group
    VerifyHopf {
        /// The odd prime p
        #[arg(long)]
        p: u32,
        /// Corrupt one summand of the comultiplication twist
        /// (omega-a0a0 | omega-a0a1 | omega-a1a0 | omega-a1a1) and run
        /// only the axiom suite; failures are expected
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Build the canonical order Y of H_p and run the order campaign:
    /// order suite, integrals, product identity, forced elements,
    /// characters, intersection with the group-like part
    VerifyOrder {
        /// The odd prime p
        #[arg(long)]
        p: u32,
    },
    /// Build the order H((alpha)) of KC_p and run the order campaign
    Larson {
        /// The odd prime p
        #[arg(long)]
        p: u32,
        /// Generator of the principal ideal, as an element literal over
        /// the tower Q(ζ_{4p})(t), t² = ζ_p − 1 (e.g. `z^4-1`, `1`, `t`)
        #[arg(long)]
        alpha: String,
    },
    /// Check the quadratic descent data (w, d) over Q(ζ_n): the unit and
    /// integrality conditions, semilinear axioms, and proof witnesses
    Descent {
        /// Conductor n of the base cyclotomic field (p | n)
        #[arg(long)]
        n: u32,
        /// The odd prime p
        #[arg(long)]
        p: u32,
        /// The unit w as an element literal (defaults to the bundled
        /// p = 7, n = 28 instance)
        #[arg(long)]
        w: Option<String>,
        /// Read the literal of 1/w from a file instead
        #[arg(long)]
        w_file: Option<PathBuf>,
        /// The element d with ½(d+t) integral (default `1`)
        #[arg(long, default_value = "1")]
        d: String,
        /// Sign convention: paper-theorem | paper-example | either
        #[arg(long, default_value = "either")]
        convention: String,
        /// Run the full invariant-lattice computation (expensive)
        #[arg(long)]
        full_invariant_lattice: bool,
        /// Run the ambient axiom suite before the order work (expensive
        /// at p = 7)
        #[arg(long)]
        verify_ambient: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().is_err() {
            eprintln!("warning: thread pool already initialized");
        }
    }
    let outcome = match &cli.command {
        Command::VerifyHopf { p, mutate } => commands::verify_hopf(*p, mutate.as_deref(), cli.timings),
        Command::VerifyOrder { p } => commands::verify_order(*p, cli.timings),
        Command::Larson { p, alpha } => commands::larson(*p, alpha, cli.timings),
        Command::Descent {
            n,
            p,
            w,
            w_file,
            d,
            convention,
            full_invariant_lattice,
            verify_ambient,
        } => commands::descent(commands::DescentArgs {
            n: *n,
            p: *p,
            w: w.clone(),
            w_file: w_file.clone(),
            d: d.clone(),
            convention: convention.clone(),
            full_invariant_lattice: *full_invariant_lattice,
            verify_ambient: *verify_ambient,
            timings: cli.timings,
        }),
    };
    match outcome {
        Ok(doc) => {
            let all_passed = doc.all_passed();
            if let Err(err) = output::emit(&doc, cli.out.as_deref()) {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

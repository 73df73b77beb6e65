//! Command-line surface over the algebra library.
//!
//! Exit codes: 0 on success, 1 when a validation fails or a suite finds a
//! counterexample, 2 on usage errors (unknown flags, bad syntax, configs
//! that do not fit the requested operation).

use cartan_core::config::{bracket_elements, AlgebraConfig};
use cartan_core::configfile::{load_config, parse_window};
use cartan_core::probe::{default_multipliers, ideal_closure};
use cartan_core::suites::{run_suite, Suite};
use cartan_core::textform::parse_element;
use cartan_core::{AlgebraElement, Element, Error, Monomial, WittVector};
use clap::{Parser, Subcommand};
use std::fmt::Write as _;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cartan",
    about = "Exact constructions of graded Lie algebras of Witt, Special, Hamiltonian and Contact type",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the numbered admissibility conditions of a config.
    Validate {
        /// Config file path or preset:NAME
        config: String,
    },
    /// Bracket two elements and print the result in canonical form.
    Bracket {
        config: String,
        a: String,
        b: String,
    },
    /// Print the bracket of every ordered pair of window basis elements.
    #[command(name = "structure-constants")]
    StructureConstants {
        config: String,
        /// Window spec, e.g. "alpha=-1..1;deg=1"
        #[arg(long)]
        window: String,
    },
    /// Run a named property suite with seeded sampling.
    Verify {
        config: String,
        /// One of: jacobi, skew, leibniz, oracle-3.8, oracle-3.12,
        /// oracle-4.78, oracle-5.21, oracle-5.26, central-1,
        /// restriction-5.40
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long = "rng-seed", default_value_t = 0)]
        rng_seed: u64,
    },
    /// Run the strict windowed ideal-closure probe from a seed element.
    Probe {
        config: String,
        #[arg(long = "seed-element")]
        seed_element: String,
        #[arg(long)]
        window: String,
        /// Extra multiplier elements; defaults to all window symbols of
        /// degree at most one.
        #[arg(long = "multiplier")]
        multipliers: Vec<String>,
        /// Sweep cap before giving up on saturation.
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, code)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(output.as_bytes()) {
                // a closed pipe is the consumer's choice, not a failure
                if e.kind() != ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Loaded {
    Valid(AlgebraConfig),
    Invalid(String),
}

/// Loads and builds a config; violations become printable output with
/// exit code 1.
fn validated_config(spec: &str) -> Result<Loaded, Error> {
    let cfg = load_config(spec)?.build()?;
    let violations = cfg.validate();
    if violations.is_empty() {
        Ok(Loaded::Valid(cfg))
    } else {
        let mut out = String::new();
        for v in &violations {
            writeln!(out, "{v}").expect("string write");
        }
        Ok(Loaded::Invalid(out))
    }
}

fn run(command: Command) -> Result<(String, ExitCode), Error> {
    let mut out = String::new();
    match command {
        Command::Validate { config } => {
            match validated_config(&config)? {
                Loaded::Valid(_) => {
                    writeln!(out, "ok").expect("string write");
                    Ok((out, ExitCode::SUCCESS))
                }
                Loaded::Invalid(report) => Ok((report, ExitCode::from(1))),
            }
        }
        Command::Bracket { config, a, b } => {
            let cfg = match validated_config(&config)? {
                Loaded::Valid(cfg) => cfg,
                Loaded::Invalid(report) => return Ok((report, ExitCode::from(1))),
            };
            let a = parse_element(&a, &cfg)?;
            let b = parse_element(&b, &cfg)?;
            let result = bracket_elements(&a, &b, &cfg)?;
            writeln!(out, "{result}").expect("string write");
            Ok((out, ExitCode::SUCCESS))
        }
        Command::StructureConstants { config, window } => {
            let cfg = match validated_config(&config)? {
                Loaded::Valid(cfg) => cfg,
                Loaded::Invalid(report) => return Ok((report, ExitCode::from(1))),
            };
            let window = parse_window(&window, cfg.rank())?;
            let basis = window_basis(&cfg, &window);
            for lhs in &basis {
                for rhs in &basis {
                    let result = bracket_elements(lhs, rhs, &cfg)?;
                    writeln!(out, "{lhs} | {rhs} | {result}").expect("string write");
                }
            }
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Verify {
            config,
            suite,
            samples,
            rng_seed,
        } => {
            let suite = Suite::from_name(&suite)
                .ok_or_else(|| Error::Argument(format!("unknown suite {suite:?}")))?;
            let cfg = match validated_config(&config)? {
                Loaded::Valid(cfg) => cfg,
                Loaded::Invalid(report) => return Ok((report, ExitCode::from(1))),
            };
            let run = run_suite(suite, &cfg, samples, rng_seed)?;
            writeln!(out, "{run}").expect("string write");
            Ok((
                out,
                if run.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            ))
        }
        Command::Probe {
            config,
            seed_element,
            window,
            multipliers,
            cap,
        } => {
            let cfg = match validated_config(&config)? {
                Loaded::Valid(cfg) => cfg,
                Loaded::Invalid(report) => return Ok((report, ExitCode::from(1))),
            };
            let window = parse_window(&window, cfg.rank())?;
            let seed = parse_element(&seed_element, &cfg)?;
            let mults = if multipliers.is_empty() {
                default_multipliers(&cfg, &window)
            } else {
                multipliers
                    .iter()
                    .map(|m| parse_element(m, &cfg))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let report = ideal_closure(&cfg, &seed, &window, &mults, cap)?;
            write!(out, "{report}").expect("string write");
            Ok((out, ExitCode::SUCCESS))
        }
    }
}

/// Basis elements of the window in a fixed order: symbols in every field
/// component for the vector-field families, symbols themselves otherwise.
fn window_basis(cfg: &AlgebraConfig, window: &cartan_core::Window) -> Vec<Element> {
    let symbols: Vec<Monomial> = window.monomials(cfg.kinds());
    if cfg.uses_vector_fields() {
        let n = cfg.vars();
        let mut out = Vec::with_capacity(symbols.len() * n);
        for p in 0..n {
            for m in &symbols {
                out.push(Element::Vector(WittVector::from_term(
                    n,
                    p,
                    AlgebraElement::monomial(m.clone()),
                )));
            }
        }
        out
    } else {
        symbols
            .into_iter()
            .map(|m| Element::Scalar(AlgebraElement::monomial(m)))
            .collect()
    }
}

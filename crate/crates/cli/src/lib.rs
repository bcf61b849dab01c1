//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! [`run`] returns the rendered output and the exit code so the binary stays
//! a thin wrapper and tests can drive every subcommand in-process.

pub mod report;
pub mod verify;

use clap::{Parser, Subcommand};
use wreathvar_core::{
    chain_analysis, generates, lambda_bound, lambda_general_bound, liebeck_class, min_t0, nu,
    nu_general, parse_descriptor, separation_gap, Cardinal, ChainShape,
};

pub use wreathvar_core::{AbelianDescriptor, Error};

/// Exit code for a verify suite that found a mismatch.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "wreathvar", version, about = "Varieties generated by wreath products of abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether A Wr B generates var(A)·var(B); B is the active group.
    Decide {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Analyse the chain var(A Wr B^s), s = 1, 2, ...
    Chain {
        a: String,
        b: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        s_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Nilpotency class of C_{p^u} wr (C_{p^k1} + C_{p^k2} + ...).
    Class {
        p: u64,
        u: u32,
        ks: Vec<u32>,
    },
    /// Evaluate one of the class bounds.
    #[command(subcommand)]
    Bounds(Bound),
    /// Run an oracle-versus-formula suite.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        /// Size limit: largest group order (liebeck, identities), subset budget
        /// (lambda) or table size (houghton).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Bound {
    /// nu(p, t) for C_{p^u} wr (t-1 copies of C_{p^k}).
    Nu { p: u64, u: u32, k: u32, t: u32 },
    /// Upper bound on the class of t-generated groups in var(A Wr B), A and B p-groups.
    Lambda { a: String, b: String, t: u32 },
    /// nu(p, r, t) for the layer shape (k, d, l).
    NuGeneral {
        p: u64,
        u: u32,
        k: u32,
        d: u32,
        r: u64,
        t: u64,
        #[arg(required = true)]
        l: Vec<u64>,
    },
    /// Bound on lambda(A_p, B_{s,p}, t) for the layer shape (k, d, l).
    LambdaGeneral {
        p: u64,
        u: u32,
        k: u32,
        d: u32,
        s: u64,
        t: u64,
        #[arg(required = true)]
        l: Vec<u64>,
    },
    /// The separation gap for the layer shape (k, d, l).
    Gap {
        p: u64,
        k: u32,
        d: u32,
        #[arg(required = true)]
        l: Vec<u64>,
    },
    /// Least t0 with nu(p, t0) above the bound, for top layer rank mu.
    T0 { p: u64, k: u32, mu: u64 },
}

/// Rendered command output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialise") + "\n"
}

fn descriptor(label: &str, text: &str) -> Result<AbelianDescriptor, Outcome> {
    parse_descriptor(text).map_err(|e| Outcome::usage(format!("group {label} ({text:?}): {e}")))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    match dispatch(command) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Decide { a, b, json } => {
            let (ad, bd) = (descriptor("A", &a)?, descriptor("B", &b)?);
            let v = generates(&ad, &bd);
            Ok(Outcome::ok(if json {
                pretty(&report::verdict_json(&v))
            } else {
                report::verdict_text(&ad, &bd, &v)
            }))
        }
        Command::Chain { a, b, s_max, json } => {
            let (ad, bd) = (descriptor("A", &a)?, descriptor("B", &b)?);
            let r = chain_analysis(&ad, &bd, s_max);
            Ok(Outcome::ok(if json {
                pretty(&report::chain_json(&r))
            } else {
                report::chain_text(&ad, &bd, &r)
            }))
        }
        Command::Class { p, u, ks } => {
            let c = liebeck_class(p, u, &ks).map_err(Outcome::usage)?;
            Ok(Outcome::ok(format!("{c}\n")))
        }
        Command::Bounds(bound) => {
            let value = match bound {
                Bound::Nu { p, u, k, t } => nu(p, u, k, t),
                Bound::Lambda { a, b, t } => {
                    let (ad, bd) = (descriptor("A", &a)?, descriptor("B", &b)?);
                    lambda_bound(&ad, &bd, t)
                }
                Bound::NuGeneral { p, u, k, d, r, t, l } => {
                    ChainShape::new(k, d, l).and_then(|s| nu_general(p, u, &s, r, t))
                }
                Bound::LambdaGeneral { p, u, k, d, s, t, l } => {
                    ChainShape::new(k, d, l).and_then(|shape| lambda_general_bound(p, u, &shape, s, t))
                }
                Bound::Gap { p, k, d, l } => {
                    ChainShape::new(k, d, l).and_then(|s| separation_gap(p, &s))
                }
                Bound::T0 { p, k, mu } => min_t0(p, k, Cardinal::Finite(mu)).map(Into::into),
            }
            .map_err(Outcome::usage)?;
            Ok(Outcome::ok(format!("{value}\n")))
        }
        Command::Verify { suite, budget, json } => {
            let budget = budget.unwrap_or_else(|| suite.default_budget());
            let report = verify::run(suite, budget).map_err(Outcome::usage)?;
            let stdout = if json {
                pretty(&report.to_json())
            } else {
                report.to_table()
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code: if report.passed() { 0 } else { EXIT_MISMATCH },
            })
        }
    }
}

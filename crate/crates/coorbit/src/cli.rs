//! Argument parsing and output handling.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::commands::{self, Request, Response};
use crate::error::{CliError, EXIT_OK, EXIT_USAGE};
use crate::report::render_pretty;

#[derive(Debug, Parser)]
#[command(name = "coorbit", version, about = "Coadjoint orbits of sym(n) ⋊ GL₊(n) and their quantization")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Matrix size (default 2).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Degree bound.
    #[arg(long, global = true)]
    pub deg: Option<u32>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// JSON request document; `-` reads standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Indented JSON, or a text table for `verify`.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Work budget for products in U_h, in term operations.
    #[arg(long, global = true)]
    pub cap_terms: Option<usize>,
    /// Normal-form residual tolerance.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// First polynomial (JSON or a constant).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Second polynomial (JSON or a constant).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub g: Option<String>,
    /// Comma-separated check names or ids for `verify`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub only: Option<Vec<String>>,
    #[arg(long, global = true, hide = true)]
    pub inject_fault: Option<String>,
}

#[derive(Debug, Clone, Copy, Subcommand, PartialEq, Eq)]
pub enum Verb {
    /// Basis of the Lie algebra and its structure constants.
    Basis,
    /// Product of two group elements.
    GroupMul,
    /// Adjoint action on the Lie algebra.
    Adjoint,
    /// Coadjoint action on the dual.
    Coadjoint,
    /// Normal form (I, H) of a point with c positive definite.
    NormalForm,
    /// Semiinvariant polynomials, or invariant values at a point.
    Invariants,
    /// Measured weights of the semiinvariants.
    SemiCheck,
    /// Certificate that only constants are invariant.
    NoInvariants,
    /// Generators of the ideal of an orbit.
    OrbitIdeal,
    /// Vanishing and Jacobian rank of the orbit ideal.
    Regularity,
    /// PBW normal form in U_h.
    Pbw,
    /// Symmetrization of a polynomial into U_h.
    Sym,
    /// Star product on an orbit.
    Star,
    /// Runs the verification checks and prints a report.
    Verify,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

fn read_input(path: &PathBuf) -> Result<Value, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

pub fn dispatch(verb: Verb, req: &Request) -> Result<Response, CliError> {
    match verb {
        Verb::Basis => commands::basis(req),
        Verb::GroupMul => commands::group_mul(req),
        Verb::Adjoint => commands::adjoint(req),
        Verb::Coadjoint => commands::coadjoint(req),
        Verb::NormalForm => commands::normal_form_verb(req),
        Verb::Invariants => commands::invariants(req),
        Verb::SemiCheck => commands::semi_check(req),
        Verb::NoInvariants => commands::no_invariants(req),
        Verb::OrbitIdeal => commands::orbit_ideal_verb(req),
        Verb::Regularity => commands::regularity(req),
        Verb::Pbw => commands::pbw(req),
        Verb::Sym => commands::sym(req),
        Verb::Star => commands::star(req),
        Verb::Verify => commands::verify(req),
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let g = &cli.global;
    let req = Request {
        n: g.n,
        deg: g.deg,
        seed: g.seed,
        input: g.input.as_ref().map(read_input).transpose()?,
        cap_terms: g.cap_terms,
        tolerance: g.tolerance,
        f: g.f.clone(),
        g: g.g.clone(),
        only: g.only.clone(),
        fault: g.inject_fault.clone(),
    };
    let response = dispatch(cli.verb, &req)?;
    let code = response.exit_code();
    let text = match response {
        Response::Report(r) if g.pretty => render_pretty(&r),
        Response::Report(r) => serde_json::to_string(&r)? + "\n",
        Response::Document { value, .. } if g.pretty => serde_json::to_string_pretty(&value)? + "\n",
        Response::Document { value, .. } => serde_json::to_string(&value)? + "\n",
    };
    match &g.output {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok((String::new(), code))
        }
        None => Ok((text, code)),
    }
}

fn error_outcome(e: &CliError) -> Outcome {
    let doc = serde_json::to_string(&e.document()).expect("error document serializes");
    Outcome { stdout: doc + "\n", exit_code: e.exit_code() }
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { stdout: e.to_string(), exit_code: EXIT_OK };
            }
            let out = error_outcome(&CliError::Usage(e.to_string().trim().to_string()));
            debug_assert_eq!(out.exit_code, EXIT_USAGE);
            return out;
        }
    };
    match execute(&cli) {
        Ok((stdout, exit_code)) => Outcome { stdout, exit_code },
        Err(e) => error_outcome(&e),
    }
}

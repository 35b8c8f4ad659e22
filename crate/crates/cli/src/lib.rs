//! Command-line front end for `lascoux-core`.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! malformed input.

pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lascoux_core::bijections::{crowd, rho, rho_inv, uncrowd};
use lascoux_core::expansion::{classify, expand_in_atoms, expand_in_qgroth, expansion_json};
use lascoux_core::genfun::{demazure_atom, grothendieck, lascoux_atom, lenart_expansion, qsym_grothendieck, schur};
use lascoux_core::genomic::enumerate_genomic_fillings;
use lascoux_core::operators::{key_polynomial, lascoux_atom_op, lascoux_polynomial};
use lascoux_core::polynomial::{from_json, parse_polynomial, to_json};
use lascoux_core::{BPolynomial, LenartPair, Partition, SetFilling, SetTableau, WeakComposition};
use serde_json::{json, Value};

use verify::{run_check, Bounds, Check};

#[derive(Parser, Debug)]
#[command(name = "lascoux", version, about = "Lascoux atoms, set-valued fillings and their polynomials")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Fillings,
    Operators,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Basis {
    Lascoux,
    Qgroth,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The Lascoux atom L_γ from set-valued skyline fillings.
    Atom {
        gamma: WeakComposition,
        /// Set β = 0, giving the Demazure atom A_γ.
        #[arg(long)]
        beta0: bool,
    },
    /// The key polynomial κ_γ.
    Key { gamma: WeakComposition },
    /// The Lascoux polynomial Ω_γ.
    LascouxPoly { gamma: WeakComposition },
    /// The Lascoux atom from fillings or from operators.
    LascouxAtom {
        gamma: WeakComposition,
        #[arg(long, value_enum, default_value = "fillings")]
        method: Method,
    },
    /// The Grothendieck polynomial G_λ.
    Grothendieck {
        lambda: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// The quasisymmetric Grothendieck polynomial 𝒢_α.
    Qgroth {
        alpha: WeakComposition,
        #[arg(long)]
        vars: usize,
    },
    /// The Schur polynomial s_λ.
    Schur {
        lambda: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// The coefficients g_{λ,μ} of G_λ in Schur polynomials.
    Lenart {
        lambda: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// Expand a polynomial (text or JSON) in Lascoux atoms or in 𝒢_α.
    Expand {
        #[arg(long, value_enum)]
        basis: Basis,
        /// Pad the input to this many variables.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Report whether a polynomial is symmetric, quasisymmetric or neither.
    Classify {
        #[arg(long)]
        vars: Option<usize>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Skyline filling JSON to reverse tableau JSON.
    Rho {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Reverse tableau JSON to skyline filling JSON.
    RhoInv {
        /// Rows of the filling; defaults to the largest entry.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Set-valued tableau JSON to a pair (T, U).
    Uncrowd {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Pair (T, U) JSON back to a set-valued tableau.
    Crowd {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Count genomic fillings of δ/γ with content λ*.
    GenomicCount { gamma: WeakComposition, lambda: Partition, delta: WeakComposition },
    /// Run a verification check.
    Verify {
        check: Check,
        #[arg(long)]
        max_boxes: Option<usize>,
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, env = "LASCOUX_JOBS")]
        jobs: Option<usize>,
    },
}

/// Input errors map to exit code 2.
#[derive(Debug)]
struct Malformed(anyhow::Error);

impl std::fmt::Display for Malformed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Malformed {}

fn malformed(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(Malformed(e.into()))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}")).map_err(malformed)
    }
}

fn read_json(path: &str, stdin: &mut dyn Read) -> anyhow::Result<Value> {
    let text = read_input(path, stdin)?;
    serde_json::from_str(&text).map_err(|e| malformed(anyhow!("invalid JSON: {e}")))
}

fn read_polynomial(path: &str, vars: Option<usize>, stdin: &mut dyn Read) -> anyhow::Result<BPolynomial> {
    let text = read_input(path, stdin)?;
    let trimmed = text.trim();
    let p: BPolynomial = if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| malformed(anyhow!("invalid JSON: {e}")))?;
        from_json(&v).map_err(malformed)?
    } else {
        parse_polynomial(trimmed).map_err(malformed)?
    };
    match vars {
        Some(n) => p.with_nvars(n).map_err(malformed),
        None => Ok(p),
    }
}

fn emit_polynomial(out: &mut dyn Write, json: bool, p: &BPolynomial) -> anyhow::Result<()> {
    if json {
        writeln!(out, "{}", to_json(p))?;
    } else {
        writeln!(out, "{p}")?;
    }
    Ok(())
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Atom { gamma, beta0 } => {
            let p = if beta0 { demazure_atom(&gamma) } else { lascoux_atom(&gamma) };
            emit_polynomial(out, json, &p)?;
        }
        Command::Key { gamma } => emit_polynomial(out, json, &key_polynomial(&gamma))?,
        Command::LascouxPoly { gamma } => emit_polynomial(out, json, &lascoux_polynomial(&gamma))?,
        Command::LascouxAtom { gamma, method } => {
            let p = match method {
                Method::Fillings => lascoux_atom(&gamma),
                Method::Operators => lascoux_atom_op(&gamma),
            };
            emit_polynomial(out, json, &p)?;
        }
        Command::Grothendieck { lambda, vars } => emit_polynomial(out, json, &grothendieck(&lambda, vars))?,
        Command::Qgroth { alpha, vars } => {
            emit_polynomial(out, json, &qsym_grothendieck(&alpha, vars).map_err(malformed)?)?
        }
        Command::Schur { lambda, vars } => emit_polynomial(out, json, &schur(&lambda, vars))?,
        Command::Lenart { lambda, vars } => {
            let e = lenart_expansion(&lambda, vars);
            if json {
                let v: Vec<Value> = e.iter().map(|(mu, g)| json!({ "mu": mu.trimmed(), "g": g })).collect();
                writeln!(out, "{}", Value::Array(v))?;
            } else {
                for (mu, g) in e.iter().rev() {
                    writeln!(out, "{} {g}", mu.trimmed())?;
                }
            }
        }
        Command::Expand { basis, vars, input } => {
            let f = read_polynomial(&input, vars, stdin)?;
            let coeffs = match basis {
                Basis::Lascoux => expand_in_atoms(&f).coeffs,
                Basis::Qgroth => expand_in_qgroth(&f).map_err(malformed)?,
            };
            writeln!(out, "{}", expansion_json(&coeffs))?;
        }
        Command::Classify { vars, input } => {
            let f = read_polynomial(&input, vars, stdin)?;
            let c = classify(&f);
            let sign = if c.positive { "positive" } else { "signed" };
            if json {
                let v = json!({
                    "class": c.symmetry.name(),
                    "positive": c.positive,
                    "expansion": c.expansion.to_json(),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{} {sign}", c.symmetry.name())?;
            }
        }
        Command::Rho { input } => {
            let f = SetFilling::from_json(&read_json(&input, stdin)?).map_err(malformed)?;
            writeln!(out, "{}", rho(&f).map_err(malformed)?.to_json())?;
        }
        Command::RhoInv { rows, input } => {
            let t = SetTableau::from_json(&read_json(&input, stdin)?).map_err(malformed)?;
            let rows = rows.unwrap_or_else(|| t.max_entry());
            writeln!(out, "{}", rho_inv(&t, rows).map_err(malformed)?.to_json())?;
        }
        Command::Uncrowd { input } => {
            let t = SetTableau::from_json(&read_json(&input, stdin)?).map_err(malformed)?;
            writeln!(out, "{}", uncrowd(&t).map_err(malformed)?.to_json())?;
        }
        Command::Crowd { input } => {
            let p = LenartPair::from_json(&read_json(&input, stdin)?).map_err(malformed)?;
            writeln!(out, "{}", crowd(&p).map_err(malformed)?.to_json())?;
        }
        Command::GenomicCount { gamma, lambda, delta } => {
            let fillings = enumerate_genomic_fillings(&gamma, &lambda, &delta).map_err(malformed)?;
            if json {
                let v: Vec<Value> = fillings.iter().map(|f| f.to_json()).collect();
                writeln!(out, "{}", json!({ "count": fillings.len(), "fillings": v }))?;
            } else {
                writeln!(out, "{}", fillings.len())?;
            }
        }
        Command::Verify { check, max_boxes, max_parts, vars, jobs } => {
            let bounds = Bounds { max_boxes, max_parts, vars };
            let report = match jobs {
                Some(0) => bail!(Malformed(anyhow!("--jobs must be positive"))),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .context("building the thread pool")?
                    .install(|| run_check(check, bounds)),
                None => run_check(check, bounds),
            };
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{report}")?;
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<Malformed>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

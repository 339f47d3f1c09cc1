//! Command line front end.
//!
//! Exit status: 0 on success, 1 on a domain error (valid syntax, but the
//! input violates a mathematical precondition), 2 on usage or parse errors.

pub mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{cl_wk, poincare_fixed_det, poincare_std_sublocus, poincare_sym, PoincarePolynomial};
use crate::bundles::{
    classify_elliptic, classify_p1, parse_elliptic, parse_gzero, parse_p1_twist, parse_twist,
    ParseError, Verdict,
};
use crate::strata::{
    contains, delta_class, diagonal_class, enumerate_strata, DiagonalSpec, StrataError,
    WeightTuple,
};

pub use expr::{parse_ring_expr, ExprError, RingExpr};

#[derive(Debug, Parser)]
#[command(name = "wobbly", version, about = "Very stable and wobbly bundles on curves of genus 0 and 1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a bundle is very stable or wobbly for a twist.
    Classify {
        #[arg(long)]
        genus: u32,
        /// `O(d1)+O(d2)+…` (genus 0) or an elliptic descriptor (genus 1).
        #[arg(long, allow_hyphen_values = true)]
        bundle: String,
        /// An integer `t` (genus 0) or `L deg @ x,y` (genus 1).
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a ring expression in H*(Sym^n X).
    Ring {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Betti numbers.
    Betti(BettiArgs),
    /// List the strata of Sym^h X, or test containment of two strata.
    Strata {
        #[arg(long)]
        h: u32,
        /// Two partitions `λ μ`: is W(λ) contained in W(μ)?
        #[arg(long, num_args = 2, value_names = ["INNER", "OUTER"])]
        contains: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// The closed-form class δ_s in H*(Sym^h X).
    Delta {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
    /// The class of a diagonal morphism with multiplicities N and weights I.
    Diag {
        #[arg(long)]
        h: u32,
        #[arg(long = "N")]
        n: String,
        #[arg(long = "I")]
        i: String,
        #[arg(long)]
        json: bool,
    },
    /// The Betti-type count for the rank-2 wobbly loci in genus g >= 2.
    Clwk {
        #[arg(long)]
        g: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run one query per line of a file (each line a JSON array of
    /// arguments) and print a JSON array of results in input order.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("target").required(true).multiple(false).args(["sym", "std_sublocus", "fixed_det"])))]
struct BettiArgs {
    #[arg(long)]
    genus: u32,
    /// Sym^n of a genus-g curve.
    #[arg(long)]
    sym: Option<u32>,
    /// The sublocus X × Sym^{h-s} X (genus 1).
    #[arg(long, num_args = 2, value_names = ["H", "S"])]
    std_sublocus: Option<Vec<u32>>,
    /// The fixed-determinant sublocus (genus 1).
    #[arg(long, num_args = 2, value_names = ["H", "S"])]
    fixed_det: Option<Vec<u32>>,
    #[arg(long)]
    json: bool,
}

/// Why a query failed.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => Failure::Usage(e.to_string()),
            ParseError::Invalid { .. } => Failure::Domain(e.to_string()),
        }
    }
}

impl From<StrataError> for Failure {
    fn from(e: StrataError) -> Self {
        match e {
            StrataError::BadPartition(_) => Failure::Usage(e.to_string()),
            other => domain(other),
        }
    }
}

/// A successful answer, rendered as text or JSON.
struct Answer {
    text: String,
    json: Value,
}

fn answer(text: impl Into<String>, json: impl Serialize) -> Result<Answer, Failure> {
    Ok(Answer {
        text: text.into(),
        json: serde_json::to_value(json).expect("plain data serialises"),
    })
}

fn verdict_answer(bundle: String, twist: String, v: Verdict) -> Result<Answer, Failure> {
    let text = format!("bundle: {bundle}\ntwist: {twist}\nverdict: {v}");
    answer(text, v)
}

fn poincare_answer(p: PoincarePolynomial) -> Result<Answer, Failure> {
    answer(p.to_comma_list(), p.to_record())
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--{flag}: expected comma-separated non-negative integers, got '{text}'")))
}

fn pair(v: &[u32]) -> (u32, u32) {
    (v[0], v[1])
}

/// Run a parsed command. Returns the answer and whether JSON was requested.
fn execute(command: Command) -> Result<(Answer, bool), Failure> {
    match command {
        Command::Classify {
            genus,
            bundle,
            twist,
            json,
        } => {
            let a = match genus {
                0 => {
                    let e = parse_gzero(&bundle)?;
                    let t = parse_p1_twist(&twist)?;
                    verdict_answer(e.to_string(), t.to_string(), classify_p1(&e, t))?
                }
                1 => {
                    let e = parse_elliptic(&bundle)?;
                    let l = parse_twist(&twist)?;
                    verdict_answer(e.to_string(), l.to_string(), classify_elliptic(&e, &l))?
                }
                g => return Err(Failure::Domain(format!("classify supports genus 0 and 1, got {g}"))),
            };
            Ok((a, json))
        }
        Command::Ring { n, expr, json } => {
            if n == 0 {
                return Err(Failure::Domain("--n must be at least 1".into()));
            }
            let tree = parse_ring_expr(&expr).map_err(|e| Failure::Usage(e.to_string()))?;
            let value = tree.eval(n).map_err(domain)?;
            let text = value.to_string();
            let degree = value.homogeneous_degree();
            Ok((answer(text.clone(), json!({"n": n, "value": text, "degree": degree}))?, json))
        }
        Command::Betti(args) => {
            let needs_elliptic = |what: &str| {
                if args.genus == 1 {
                    Ok(())
                } else {
                    Err(Failure::Domain(format!("--{what} is defined for genus 1 only")))
                }
            };
            let p = if let Some(n) = args.sym {
                poincare_sym(args.genus, n)
            } else if let Some(v) = &args.std_sublocus {
                needs_elliptic("std-sublocus")?;
                let (h, s) = pair(v);
                poincare_std_sublocus(h, s).map_err(domain)?
            } else {
                needs_elliptic("fixed-det")?;
                let (h, s) = pair(args.fixed_det.as_deref().expect("clap group"));
                poincare_fixed_det(h, s).map_err(domain)?
            };
            Ok((poincare_answer(p)?, args.json))
        }
        Command::Strata { h, contains: pair_arg, json } => {
            if h == 0 {
                return Err(Failure::Domain("--h must be at least 1".into()));
            }
            if let Some(v) = pair_arg {
                let inner: WeightTuple = v[0].parse()?;
                let outer: WeightTuple = v[1].parse()?;
                for p in [&inner, &outer] {
                    if p.total() != h {
                        return Err(Failure::Domain(format!(
                            "partition {p} has total weight {}, expected {h}",
                            p.total()
                        )));
                    }
                }
                let c = contains(&inner, &outer)?;
                let record = json!({"inner": inner, "outer": outer, "contains": c});
                return Ok((answer(c.to_string(), record)?, json));
            }
            let strata = enumerate_strata(h);
            let text = strata
                .iter()
                .map(|s| {
                    format!(
                        "({}) dim={} standard={} class={} poincare={}",
                        s.partition,
                        s.dim,
                        s.standard,
                        s.class.as_ref().map_or("-".to_string(), ToString::to_string),
                        s.poincare.to_comma_list()
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok((answer(text, &strata)?, json))
        }
        Command::Delta { h, s, json } => {
            let c = delta_class(s, h)?.to_string();
            Ok((answer(c.clone(), json!({"class": c}))?, json))
        }
        Command::Diag { h, n, i, json } => {
            let spec = DiagonalSpec::new(parse_list("N", &n)?, parse_list("I", &i)?)?;
            if spec.total_weight() != h {
                return Err(Failure::Domain(format!(
                    "sum of n_l * i_l is {}, but --h is {h}",
                    spec.total_weight()
                )));
            }
            let c = diagonal_class(&spec)?.to_string();
            Ok((answer(c.clone(), json!({"class": c}))?, json))
        }
        Command::Clwk { g, k, lambda, json } => {
            let v = cl_wk(g, k, lambda).map_err(domain)?.to_string();
            Ok((answer(v.clone(), json!({"value": v}))?, json))
        }
        Command::Batch { .. } => Err(Failure::Usage("batch cannot be nested".into())),
    }
}

fn render(a: &Answer, json: bool) -> String {
    if json {
        serde_json::to_string(&a.json).expect("json value")
    } else {
        a.text.clone()
    }
}

/// One line of a batch file: a JSON array of arguments, for example
/// `["delta", "--h", "4", "--s", "2"]`.
fn batch_line(line: &str) -> Value {
    let words: Vec<String> = match serde_json::from_str(line) {
        Ok(w) => w,
        Err(e) => return json!({"exit": 2, "error": format!("expected a JSON array of strings: {e}")}),
    };
    let argv = std::iter::once("wobbly".to_string()).chain(words);
    match Cli::try_parse_from(argv) {
        Err(e) => json!({"exit": 2, "error": e.to_string().trim_end()}),
        Ok(cli) => match execute(cli.command) {
            Ok((a, _)) => json!({"exit": 0, "result": a.json}),
            Err(f) => json!({"exit": f.code(), "error": f.message()}),
        },
    }
}

fn run_batch(file: &PathBuf) -> Result<String, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect();
    let results: Vec<Value> = lines
        .par_iter()
        .map(|&(i, l)| {
            let mut v = batch_line(l);
            v["line"] = json!(i + 1);
            v
        })
        .collect();
    Ok(serde_json::to_string(&results).expect("json value"))
}

/// Parse `args` (including the program name), run the query, and write the
/// answer to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Batch { file } => run_batch(&file),
        other => execute(other).map(|(a, json)| render(&a, json)),
    };
    match result {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

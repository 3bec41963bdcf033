//! `parheis`: command-line front end for the partition and Heisenberg category engine.

#![forbid(unsafe_code)]

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use parheis::heis::{parse_heis_morphism, parse_word, HeisMorphism};
use parheis::par::{parse_morphism, ParMorphism};
use parheis::psi::{check_faithful, leading_term, psi, LeadingTermCheck};
use parheis::rep::{bee_rank, check_actcom, equivariant_dim, eval_heis, heis_route, phi, RepMatrix};
use parheis::suite::{run_suite, SuiteName, SuiteParams};
use parheis::symfunc::{
    kdelta_embed, kdelta_multiplicative, stirling_normal_order_check, LeadingClassCheck, Partition, SymFuncElem,
};
use parheis::TPolynomial;

#[derive(Parser)]
#[command(
    name = "parheis",
    version,
    about = "Exact computations in Par(t), the Heisenberg category and their Grothendieck rings"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    /// Upper (left) operand.
    #[arg(long)]
    lhs: PathBuf,
    /// Lower (right) operand.
    #[arg(long)]
    rhs: PathBuf,
    /// Specialize `t` to this integer.
    #[arg(long)]
    t: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two partition morphisms, `lhs ∘ rhs`.
    Compose(Pair),
    /// Tensor two partition morphisms, `lhs ⊗ rhs`.
    Tensor(Pair),
    /// Image of a partition morphism in the Heisenberg category.
    Psi {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        t: Option<i64>,
    },
    /// Normal form of a Heisenberg diagram word or morphism.
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Leading term of the image of each diagram of a partition morphism.
    LeadingTerm {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check that images of all diagrams `k → l` have distinct leading terms.
    CheckFaithful {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Compare the image of a Young symmetrizer with the diagonal idempotent.
    Filtration {
        #[arg(long)]
        lambda: String,
    },
    /// Matrix of a partition morphism on tensor powers of the permutation module.
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Matrix of a Heisenberg morphism or word on modules over `S_n`, bubbles at `t = n`.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compare both routes from a partition morphism to a matrix over `S_n`.
    Actcom {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Rank of the diagram images `k → l` over `S_n`.
    Bee {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Grothendieck ring computations.
    K0 {
        /// Symmetric function whose Kronecker image to compute.
        #[arg(long = "in", conflicts_with = "stirling")]
        input: Option<PathBuf>,
        /// Use the multiplicative extension from `p_n ↦ p_n⁺ p_n⁻`.
        #[arg(long, requires = "input")]
        multiplicative: bool,
        /// Check the normal ordering of `(p₁⁺ p₁⁻)^k`.
        #[arg(long)]
        stirling: Option<usize>,
    },
    /// Run a named verification suite.
    Suite {
        name: String,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run even when the oracle exceeds the size guard.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] parheis::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(parheis::Error::Parse(_)) | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// `a..b` and `a..=b` are both inclusive; a single number is a one-point range.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad range bound `{x}`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_par(path: &Path) -> CliResult<ParMorphism> {
    Ok(parse_morphism(&read(path)?)?)
}

/// A `.heis` file holds either a morphism in normal form or a diagram word.
fn read_heis(path: &Path) -> CliResult<HeisMorphism> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.contains(':') {
        let body: String = text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join(" ");
        Ok(parse_word(&body)?.normalize()?)
    } else {
        Ok(parse_heis_morphism(&text)?)
    }
}

fn specialize_par(f: &ParMorphism, t: Option<i64>) -> ParMorphism {
    let Some(t) = t else { return f.clone() };
    let mut out = ParMorphism::zero(f.source(), f.target());
    for (d, c) in f.specialize(t) {
        out.add_term(d, &TPolynomial::constant(c));
    }
    out
}

fn matrix_json(m: &RepMatrix) -> Value {
    let rows: Vec<&[i64]> = if m.cols == 0 { vec![&[]; m.rows] } else { m.data.chunks(m.cols).collect() };
    json!({ "rows": m.rows, "cols": m.cols, "data": rows })
}

/// Output of one command: the text form, the JSON form and whether a check passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

impl Outcome {
    fn shown(text: impl ToString, json: Value) -> Self {
        Self { text: text.to_string(), json, pass: true }
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    Ok(match command {
        Command::Compose(p) => {
            let f = read_par(&p.lhs)?.compose(&read_par(&p.rhs)?)?;
            let f = specialize_par(&f, p.t);
            Outcome::shown(&f, json!({ "morphism": f.to_string() }))
        }
        Command::Tensor(p) => {
            let f = specialize_par(&read_par(&p.lhs)?.tensor(&read_par(&p.rhs)?), p.t);
            Outcome::shown(&f, json!({ "morphism": f.to_string() }))
        }
        Command::Psi { input, t } => {
            let image = psi(&read_par(&input)?)?;
            let image = t.map_or(image.clone(), |t| image.at_t(t));
            Outcome::shown(&image, json!({ "morphism": image.to_string() }))
        }
        Command::Normalize { input } => {
            let f = read_heis(&input)?;
            Outcome::shown(&f, json!({ "morphism": f.to_string() }))
        }
        Command::LeadingTerm { input } => {
            let f = read_par(&input)?;
            let mut text = Vec::new();
            let mut records = Vec::new();
            let mut pass = true;
            for (d, _) in f.terms() {
                let check = LeadingTermCheck::new(d)?;
                let lead = leading_term(d)?;
                pass &= check.passes();
                text.push(format!("{d}: degree {} blocks {}\n{lead}", check.degree, check.block_count));
                records.push(json!({
                    "diagram": d.to_string(),
                    "degree": check.degree,
                    "blocks": check.block_count,
                    "leading_term": lead.to_string(),
                    "pass": check.passes(),
                }));
            }
            Outcome { text: text.join("\n"), json: json!({ "terms": records, "pass": pass }), pass }
        }
        Command::CheckFaithful { k, l } => {
            let pass = check_faithful(k, l)?;
            let verdict = if pass { "distinct leading terms" } else { "leading terms collide" };
            Outcome { text: format!("{k} -> {l}: {verdict}"), json: json!({ "k": k, "l": l, "pass": pass }), pass }
        }
        Command::Filtration { lambda } => {
            let lambda = Partition::parse(&lambda)?;
            let check = LeadingClassCheck::new(&lambda)?;
            let class: Vec<String> = check.class.iter().map(|((a, b), c)| format!("({a}, {b}, {c})")).collect();
            let pass = check.passes();
            Outcome {
                text: format!(
                    "congruence below degree {}: {}\nclass of the top part:\n{}\nmatches the Kronecker image: {}",
                    lambda.size(),
                    check.congruent,
                    class.join("\n"),
                    check.class == check.kronecker
                ),
                json: json!({
                    "lambda": lambda.to_string(),
                    "congruent": check.congruent,
                    "class": class,
                    "matches_kronecker": check.class == check.kronecker,
                    "pass": pass,
                }),
                pass,
            }
        }
        Command::Phi { n, input } => {
            let m = phi(n, &read_par(&input)?);
            Outcome::shown(&m, json!({ "n": n, "matrix": matrix_json(&m) }))
        }
        Command::Eval { n, input } => {
            let f = read_heis(&input)?.at_t(n as i64);
            let m = eval_heis(n, &f)?;
            Outcome::shown(&m, json!({ "n": n, "matrix": matrix_json(&m) }))
        }
        Command::Actcom { n, input } => {
            let f = read_par(&input)?;
            let pass = check_actcom(n, &f)?;
            let (lhs, rhs) = (heis_route(n, &f)?, phi(n, &f));
            Outcome {
                text: format!("n = {n}: {}", if pass { "routes agree" } else { "routes differ" }),
                json: json!({ "n": n, "pass": pass, "heis": matrix_json(&lhs), "phi": matrix_json(&rhs) }),
                pass,
            }
        }
        Command::Bee { n, k, l } => {
            let (rank, diagrams) = bee_rank(n, k, l);
            let eq = equivariant_dim(n, k, l);
            Outcome::shown(
                format!("rank {rank} of {diagrams} diagrams; equivariant dimension {eq}"),
                json!({ "n": n, "k": k, "l": l, "rank": rank, "diagrams": diagrams, "equivariant_dim": eq }),
            )
        }
        Command::K0 { input, multiplicative, stirling } => match (input, stirling) {
            (Some(path), _) => {
                let f = SymFuncElem::parse(read(&path)?.trim())?;
                let image = if multiplicative { kdelta_multiplicative(&f)? } else { kdelta_embed(&f)? };
                Outcome::shown(&image, json!({ "input": f.to_string(), "image": image.to_string() }))
            }
            (None, Some(k)) => {
                let pass = stirling_normal_order_check(k)?;
                Outcome { text: format!("normal order of (p1+ p1-)^{k}: {pass}"), json: json!({ "k": k, "pass": pass }), pass }
            }
            (None, None) => return Err(CliError::Usage("k0 needs --in or --stirling".into())),
        },
        Command::Suite { name, n, max_size, seed, force } => {
            let name: SuiteName = name.parse()?;
            let report = run_suite(name, &SuiteParams { n, max_size, seed, force })?;
            let json = serde_json::to_value(&report).expect("report serializes");
            Outcome { text: report.to_string(), json, pass: report.pass }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json value serializes"));
            } else {
                println!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

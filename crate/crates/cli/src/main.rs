use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rzcert::basisops::{check_e_prop, check_t_prop};
use rzcert::families::{self, alt_runs_triangle, parse_family, FamilyId, Multiset};
use rzcert::suite::{run_suite, SuiteOptions, DEFAULT_COUNT, DEFAULT_SEED, SUITE_NAMES};
use rzcert::theorems::{self, Baseline, BaselineDiff, Certificate, MthmInstance, CLAIM_IDS};
use rzcert::{rat, Error, Rational, Scalar, UniPoly};

/// Exact generation and verification of real-rooted polynomial families.
#[derive(Parser, Debug)]
#[command(name = "rzcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a member of a polynomial family.
    Gen(GenArgs),
    /// Run one claim verifier and print its certificate.
    Check(CheckArgs),
    /// Run a named batch of checks.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_parser = FamilyId::NAMES)]
    family: String,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    q: Option<Rational>,
    #[arg(long, value_parser = parse_multiset)]
    multiset: Option<Multiset>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_parser = CLAIM_IDS)]
    claim: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    q: Option<Rational>,
    /// Sets q = -t.
    #[arg(long)]
    t: Option<u64>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    w: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    xi: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = parse_multiset)]
    multiset: Option<Multiset>,
    /// Polynomial as ascending coefficients, e.g. "0,1,1" for x + x^2.
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    f: Option<UniPoly>,
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    u: Option<UniPoly>,
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    v: Option<UniPoly>,
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    p: Option<UniPoly>,
    #[command(flatten)]
    baseline: BaselineArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(value_parser = SUITE_NAMES)]
    name: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_COUNT)]
    count: usize,
    #[command(flatten)]
    baseline: BaselineArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct BaselineArgs {
    /// Compare certificate digests against a stored baseline.
    #[arg(long)]
    baseline: Option<PathBuf>,
    /// Store certificate digests as a new baseline.
    #[arg(long)]
    write_baseline: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_canonical(s).ok_or_else(|| format!("expected num/den, got {s:?}"))
}

fn parse_poly(s: &str) -> Result<UniPoly, String> {
    UniPoly::from_canonical(s).map_err(|e| e.to_string())
}

fn parse_multiset(s: &str) -> Result<Multiset, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Claim does not hold: exit 1.
    Claim,
    /// Bad or inapplicable parameters: exit 2.
    Usage(String),
    /// Internal error: exit 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotApplicable(_)
            | Error::InvalidW(_)
            | Error::InvalidMultiset(_)
            | Error::Parse(_)
            | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
        Command::Suite(args) => cmd_suite(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Internal(e.to_string()))
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let family = parse_family(&args.family, args.q.as_ref(), args.multiset.as_ref())?;
    let n = args.n;
    let text = match family {
        FamilyId::QEulerianSymbolic => {
            let a = families::q_eulerian(n);
            match args.output.format {
                None => a.to_canonical_json(),
                Some(Format::Json) => json!({ "family": family.name(), "n": n, "coefficients": serde_json::from_str::<serde_json::Value>(&a.to_canonical_json()).expect("valid json") })
                    .to_string(),
                // rows: power of x; columns: power of q
                Some(Format::Tsv) => a
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| tsv_row(k, c.coeffs()))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Some(Format::Pretty) => a
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("({})*x^{k}", c.to_string().replace('x', "q")))
                    .collect::<Vec<_>>()
                    .join(" + "),
            }
        }
        _ => {
            let member = |k: usize| -> Result<UniPoly, Failure> {
                Ok(family.member(k)?.expect("univariate family"))
            };
            let p = member(n)?;
            match args.output.format {
                None => p.to_canonical(),
                Some(Format::Json) => {
                    let mut obj = json!({ "family": family.name(), "n": n, "coefficients": p.to_canonical() });
                    if let Some(q) = &args.q {
                        obj["q"] = json!(q.to_canonical());
                    }
                    if let Some(m) = &args.multiset {
                        obj["multiset"] = json!(m.to_string());
                    }
                    obj.to_string()
                }
                Some(Format::Tsv) => match family {
                    FamilyId::AltRuns => (1..=n.max(1))
                        .map(|row| {
                            let cells: Vec<String> =
                                (0..row).map(|k| alt_runs_triangle(row, k).to_string()).collect();
                            format!("{row}\t{}", cells.join("\t"))
                        })
                        .collect::<Vec<_>>()
                        .join("\n"),
                    FamilyId::CompositionGF(_) => tsv_row(p.coeffs().len().saturating_sub(1), p.coeffs()),
                    _ => {
                        let first = usize::from(matches!(family, FamilyId::KFactorialStirling));
                        let rows = (first..=n).map(|k| member(k).map(|q| tsv_row(k, q.coeffs())));
                        rows.collect::<Result<Vec<_>, _>>()?.join("\n")
                    }
                },
                Some(Format::Pretty) => p.to_string(),
            }
        }
    };
    emit(&args.output, &text)
}

fn tsv_row(label: usize, coeffs: &[Rational]) -> String {
    let cells: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("{label}\t{}", cells.join("\t"))
}

fn need<T: Clone>(value: &Option<T>, flag: &str, claim: &str) -> Result<T, Failure> {
    value.clone().ok_or_else(|| Failure::Usage(format!("claim {claim} requires --{flag}")))
}

fn run_check(args: &CheckArgs) -> Result<Certificate, Failure> {
    let claim = args.claim.as_str();
    let n = || need(&args.n, "n", claim);
    let q = || -> Result<Rational, Failure> {
        match (&args.q, args.t) {
            (Some(q), _) => Ok(q.clone()),
            (None, Some(t)) => Ok(-rat(t as i64)),
            (None, None) => Err(Failure::Usage(format!("claim {claim} requires --q or --t"))),
        }
    };
    let cert = match claim {
        "mthm" | "mthm-ab" => {
            let inst = match &args.f {
                Some(f) => MthmInstance::new(f.clone(), need(&args.u, "u", claim)?, need(&args.v, "v", claim)?),
                None => {
                    // A_{n+1}(x;q) = (nx + q) A_n(x;q) + x(1-x) A_n'(x;q)
                    let (n, q) = (n()?, q()?);
                    let u = UniPoly::new(vec![q.clone(), rat(n as i64)]);
                    MthmInstance::new(families::q_eulerian_at(n, &q), u, UniPoly::from_ints(&[0, 1, -1]))
                }
            };
            if claim == "mthm" {
                theorems::check_mthm(&inst)?
            } else {
                theorems::check_mthm_ab(&inst)?
            }
        }
        "corollary" => theorems::check_corollary(
            &need(&args.f, "f", claim)?,
            &need(&args.a, "a", claim)?,
            &need(&args.b, "b", claim)?,
        )?,
        "eprop" => theorems::check_eprop(n()?, &q()?)?,
        "q-frobenius" => theorems::verify_q_frobenius(n()?),
        "simion" => theorems::check_simion(&need(&args.multiset, "multiset", claim)?)?,
        "fn-relation" => theorems::verify_fn_relation(n()?)?,
        "bona-wilf" => theorems::check_bona_wilf(n()?)?,
        "knuth" => theorems::verify_knuth_identity(n()?, &need(&args.w, "w", claim)?)?,
        "t-prop" => check_t_prop(&need(&args.p, "p", claim)?, &need(&args.xi, "xi", claim)?)?,
        "e-prop-op" => check_e_prop(&need(&args.p, "p", claim)?, &need(&args.alpha, "alpha", claim)?)?,
        other => return Err(Failure::Usage(format!("unknown claim {other:?}"))),
    };
    Ok(cert)
}

fn apply_baseline(args: &BaselineArgs, certs: &[&Certificate]) -> Result<bool, Failure> {
    if let Some(path) = &args.write_baseline {
        Baseline::from_certificates(certs.iter().copied()).save(path)?;
    }
    let Some(path) = &args.baseline else {
        return Ok(true);
    };
    let diffs = Baseline::load(path)?.compare(certs.iter().copied());
    for d in &diffs {
        match d {
            BaselineDiff::Missing(key) => eprintln!("baseline: no entry for {key}"),
            BaselineDiff::Changed { key, expected, actual } => {
                eprintln!("baseline: digest changed for {key}: expected {expected}, got {actual}")
            }
        }
    }
    Ok(diffs.is_empty())
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let cert = run_check(&args)?;
    let text = match args.output.format.unwrap_or(Format::Pretty) {
        Format::Json => cert.to_json_string(),
        Format::Tsv => cert.to_tsv(),
        Format::Pretty => cert.to_pretty(),
    };
    emit(&args.output, &text)?;
    let baseline_ok = apply_baseline(&args.baseline, &[&cert])?;
    if cert.holds && baseline_ok {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn cmd_suite(args: SuiteArgs) -> Result<(), Failure> {
    let report = run_suite(&args.name, SuiteOptions { seed: args.seed, count: args.count })?;
    let text = match args.output.format.unwrap_or(Format::Pretty) {
        Format::Json => report.to_json().to_string(),
        Format::Tsv => report.to_tsv(),
        Format::Pretty => report.to_pretty(),
    };
    emit(&args.output, &text)?;
    let baseline_ok = apply_baseline(&args.baseline, &report.certificates().collect::<Vec<_>>())?;
    if report.all_pass() && baseline_ok {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

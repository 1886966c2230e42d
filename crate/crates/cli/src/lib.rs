//! The `arith-tutte` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when an identity or axiom
//! fails (the report is still printed), 2 for unreadable input or bad usage.

use std::io::Write;
use std::path::{Path, PathBuf};

use arith_tutte::constructors::MatroidSpec;
use arith_tutte::corpus::{run_check, verify_all, CheckRecord, Corpus, VerifyOptions};
use arith_tutte::io::{axiom_report_json, parse_spec, ReportDocument};
use arith_tutte::matroid::MultiplicityMatroid;
use arith_tutte::poly::LaurentPoly;
use arith_tutte::report::IdentityId;
use arith_tutte::tutte::{
    arithmetic_tutte, characteristic, classical_tutte, multivariate_z, ZVars,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "arith-tutte",
    version,
    about = "Arithmetic Tutte polynomials and their convolution identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one polynomial of a matroid.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        poly: PolyKind,
        #[arg(long)]
        json: bool,
    },
    /// Check identities on a matroid, or on a pair sharing a matroid.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Second multiplicity for product identities; defaults to the input itself.
        #[arg(long)]
        with: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        identity: IdentityChoice,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Check the matroid and arithmetic axioms.
    Axioms {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every identity on the built-in seeded corpus.
    Corpus {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Skip corpus entries with more than this many elements.
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Debug, Args)]
struct RunFlags {
    #[arg(long)]
    json: bool,
    /// Check ground sets above 10 elements at random points instead of exactly.
    #[arg(long)]
    fast: bool,
    /// Record elapsed milliseconds per check.
    #[arg(long)]
    timings: bool,
}

impl RunFlags {
    fn options(&self, seed: u64) -> VerifyOptions {
        let base = if self.fast {
            VerifyOptions::fast()
        } else {
            VerifyOptions::default()
        };
        VerifyOptions { seed, ..base }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyKind {
    Z,
    Tutte,
    ArithTutte,
    Char,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityChoice {
    All,
    ProductMv,
    ProductUv,
    SingleMv,
    SingleUv,
    Dupont,
    BackmanLenz,
    Mixed,
    Char,
    Kook,
}

impl IdentityChoice {
    fn identities(self) -> Vec<IdentityId> {
        match self {
            IdentityChoice::All => IdentityId::ALL.to_vec(),
            IdentityChoice::ProductMv => vec![IdentityId::ProductMultivariate],
            IdentityChoice::ProductUv => vec![IdentityId::ProductUnivariate],
            IdentityChoice::SingleMv => vec![IdentityId::SingleMultivariate],
            IdentityChoice::SingleUv => vec![IdentityId::SingleUnivariate],
            IdentityChoice::Dupont => vec![IdentityId::Dupont],
            IdentityChoice::BackmanLenz => vec![IdentityId::BackmanLenz],
            IdentityChoice::Mixed => vec![IdentityId::MixedTutte],
            IdentityChoice::Char => vec![IdentityId::CharConvolution],
            IdentityChoice::Kook => vec![IdentityId::ClassicalKook],
        }
    }
}

/// Failure to produce a result at all; maps to exit code 2.
struct InputError(String);

fn load(path: &Path) -> Result<MultiplicityMatroid, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let spec: MatroidSpec =
        parse_spec(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    spec.build()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), InputError> {
    writeln!(out, "{text}").map_err(|e| InputError(format!("cannot write output: {e}")))
}

fn compute(
    out: &mut dyn Write,
    input: &Path,
    kind: PolyKind,
    json: bool,
) -> Result<i32, InputError> {
    let m = load(input)?;
    let (name, poly): (&str, LaurentPoly) = match kind {
        PolyKind::Z => ("z", multivariate_z(&m, ZVars::QV)),
        PolyKind::Tutte => ("tutte", classical_tutte(&m)),
        PolyKind::ArithTutte => ("arith-tutte", arithmetic_tutte(&m)),
        PolyKind::Char => ("char", characteristic(&m)),
    };
    let text = if json {
        let doc = json!({"poly": name, "value": poly.canonical_string()});
        serde_json::to_string_pretty(&doc).expect("JSON values serialize")
    } else {
        poly.canonical_string()
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn human_records(out: &mut dyn Write, records: &[CheckRecord]) -> Result<(), InputError> {
    let doc = ReportDocument::from_records(records, false);
    for e in &doc.entries {
        let verdict = if e.equal { "equal" } else { "NOT equal" };
        let subject = e.matroid.as_deref().unwrap_or("-");
        match (&e.lhs, e.points) {
            (Some(lhs), _) => {
                emit(out, &format!("{subject} {}: {verdict}", e.identity))?;
                emit(out, &format!("  lhs  = {lhs}"))?;
                if let Some(r) = &e.rhs1 {
                    emit(out, &format!("  rhs1 = {r}"))?;
                }
                if let Some(r) = &e.rhs2 {
                    emit(out, &format!("  rhs2 = {r}"))?;
                }
            }
            (None, points) => emit(
                out,
                &format!(
                    "{subject} {}: {verdict} at {} random points (sampled)",
                    e.identity,
                    points.unwrap_or(0)
                ),
            )?,
        }
    }
    Ok(())
}

fn verify(
    out: &mut dyn Write,
    input: &Path,
    with: Option<&Path>,
    choice: IdentityChoice,
    run: &RunFlags,
) -> Result<i32, InputError> {
    let m1 = load(input)?;
    let m2 = match with {
        Some(p) => load(p)?,
        None => m1.clone(),
    };
    let options = run.options(0);
    let subject = input.display().to_string();
    let mut records = Vec::new();
    for id in choice.identities() {
        let check = run_check(id, &m1, &m2, &options).map_err(|e| InputError(e.to_string()))?;
        records.push(CheckRecord {
            subject: subject.clone(),
            check,
        });
    }
    let doc = ReportDocument::from_records(&records, run.timings);
    if run.json {
        emit(out, &doc.to_json())?;
    } else {
        human_records(out, &records)?;
    }
    Ok(if doc.pass { EXIT_OK } else { EXIT_FALSE })
}

fn axioms(out: &mut dyn Write, input: &Path, json: bool) -> Result<i32, InputError> {
    let m = load(input)?;
    let report = m.check_axioms();
    if json {
        let text = serde_json::to_string_pretty(&axiom_report_json(&report))
            .expect("JSON values serialize");
        emit(out, &text)?;
    } else {
        let line = |name: &str, v: Option<String>| match v {
            None => format!("{name}: holds"),
            Some(w) => format!("{name}: FAILS {w}"),
        };
        emit(
            out,
            &line("matroid", report.matroid.as_ref().map(|v| v.to_string())),
        )?;
        for (i, a) in [
            &report.axiom1,
            &report.axiom2,
            &report.axiom3,
            &report.axiom4,
        ]
        .into_iter()
        .enumerate()
        {
            let name = format!("axiom ({})", i + 1);
            emit(out, &line(&name, a.as_ref().map(|v| v.to_string())))?;
        }
        let verdict = if report.all_hold() {
            "arithmetic matroid"
        } else {
            "not an arithmetic matroid"
        };
        emit(out, verdict)?;
    }
    Ok(if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_FALSE
    })
}

fn corpus(
    out: &mut dyn Write,
    seed: u64,
    max_n: Option<usize>,
    run: &RunFlags,
) -> Result<i32, InputError> {
    let mut corpus = Corpus::default_with_seed(seed);
    if let Some(k) = max_n {
        corpus = corpus.with_max_size(k);
    }
    let report = verify_all(&corpus, &run.options(seed));
    let doc = ReportDocument::from_corpus(&report, Some(seed), run.timings);
    if run.json {
        emit(out, &doc.to_json())?;
    } else {
        for e in &doc.entries {
            let verdict = if e.equal { "equal" } else { "NOT equal" };
            let subject = e.matroid.as_deref().unwrap_or("-");
            emit(out, &format!("{subject} {} {verdict}", e.identity))?;
        }
        for e in &doc.errors {
            emit(out, &format!("{} error: {}", e.matroid, e.error))?;
        }
        let failed = doc.entries.iter().filter(|e| !e.equal).count();
        emit(
            out,
            &format!(
                "{} checks, {failed} failed, {} errors: {}",
                doc.entries.len(),
                doc.errors.len(),
                if doc.pass { "PASS" } else { "FAIL" }
            ),
        )?;
    }
    Ok(if doc.pass { EXIT_OK } else { EXIT_FALSE })
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { input, poly, json } => compute(out, input, *poly, *json),
        Command::Verify {
            input,
            with,
            identity,
            run,
        } => verify(out, input, with.as_deref(), *identity, run),
        Command::Axioms { input, json } => axioms(out, input, *json),
        Command::Corpus { seed, max_n, run } => corpus(out, *seed, *max_n, run),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

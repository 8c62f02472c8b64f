//! `altext`: construct, verify and classify extending structures.
//!
//! Exit codes: 0 pass, 1 fail (witness printed), 2 input error,
//! 3 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use altext_core::classify::classify_extensions;
use altext_core::complements::{enumerate_deformations, factorization_index};
use altext_core::flag::enumerate_flags;
use altext_core::io::{self, render, Document};
use altext_core::registry::Registry;
use altext_core::report::{ConditionOutcome, Report, REPORT_SCHEMA};
use altext_core::sample;
use altext_core::unified::{extract_datum, unified_product};
use altext_core::{Error, Field, Result, Verdict};

#[derive(Parser)]
#[command(name = "altext", version, about = "Extending structures of alternative algebras over exact fields")]
struct Cli {
    /// Worker threads for parallel enumerations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Largest search space an enumeration may visit.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
    /// Seed for the samplers.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Side file receiving the printed-condition vs oracle discrepancy log.
    #[arg(long)]
    discrepancy_log: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure with the named checker.
    Check {
        kind: CheckKind,
        /// Input documents (`deformation` takes a matched pair and a map).
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Build or take apart unified products.
    Unified {
        #[command(subcommand)]
        cmd: UnifiedCmd,
    },
    /// Classify datums over a finite field.
    Classify {
        #[command(subcommand)]
        cmd: ClassifyCmd,
    },
    /// Deformation maps of a matched pair.
    Complements {
        #[command(subcommand)]
        cmd: ComplementsCmd,
    },
    /// Codimension-one extensions.
    Flag {
        #[command(subcommand)]
        cmd: FlagCmd,
    },
    /// Write a seeded random document.
    Sample {
        kind: SampleKind,
        /// `n,m`: dimensions of A and V.
        #[arg(long, default_value = "2,2", value_parser = parse_dims)]
        dims: (usize, usize),
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Alternative,
    Prealternative,
    Bimodule,
    Datum,
    Predatum,
    Matched,
    Crossed,
    Deformation,
    Flag,
    Preflag,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Alternative => "alternative",
            CheckKind::Prealternative => "prealternative",
            CheckKind::Bimodule => "bimodule",
            CheckKind::Datum => "datum",
            CheckKind::Predatum => "predatum",
            CheckKind::Matched => "matched",
            CheckKind::Crossed => "crossed",
            CheckKind::Deformation => "deformation",
            CheckKind::Flag => "flag",
            CheckKind::Preflag => "preflag",
        }
    }
}

#[derive(Subcommand)]
enum UnifiedCmd {
    /// Unified product of a datum over the given algebra.
    Build {
        alg: PathBuf,
        datum: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Datum of an algebra relative to a closed block of basis vectors.
    Extract {
        alg: PathBuf,
        /// Basis indices of the subalgebra: `a..b` or `i,j,k`.
        #[arg(long, value_parser = parse_indices)]
        sub: Indices,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Valid datums on `(A, V)` up to equivalence and cohomology.
    Extensions {
        alg: PathBuf,
        /// Dimension of V.
        #[arg(long, default_value_t = 1)]
        vdim: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ComplementsCmd {
    /// Every deformation map of a matched pair.
    Enumerate {
        pair: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Number of equivalence classes of deformation maps.
    Index {
        pair: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum FlagCmd {
    /// Every flag datum on an algebra.
    Enumerate {
        alg: PathBuf,
        /// Print only the number of flag datums.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    /// Mixed valid/invalid datum candidate.
    Datum,
    /// Datum with alternative unified product.
    ValidDatum,
    /// Datum carrying a mixed bimodule candidate and zero other maps.
    Bimodule,
    /// Mixed pre-datum candidate (`n, m <= 2`).
    Predatum,
}

fn parse_dims(s: &str) -> std::result::Result<(usize, usize), String> {
    let (n, m) = s.split_once(',').ok_or("expected n,m")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(n)?, p(m)?))
}

/// One `--sub` value; a bare `Vec` would make clap expect repeated values.
#[derive(Clone)]
struct Indices(Vec<usize>);

fn parse_indices(s: &str) -> std::result::Result<Indices, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        let b: usize = b.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        return Ok(Indices((a..b).collect()));
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad index {t:?}")))
        .collect::<std::result::Result<_, _>>()
        .map(Indices)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn witness_line(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail(w) => format!("FAIL {} at {:?}: defect [{}]", w.kind, w.args, w.defect.join(", ")),
    }
}

fn human_report(name: &str, r: &Report) -> String {
    let mut out = format!("check {name}: {}\n", if r.is_pass() { "PASS" } else { "FAIL" });
    out.push_str(&format!("oracle: {}\n", witness_line(&r.oracle)));
    if !r.conditions.is_empty() {
        let count = |p: fn(&ConditionOutcome) -> bool| r.conditions.iter().filter(|c| p(&c.outcome)).count();
        out.push_str(&format!(
            "printed conditions: {} pass, {} fail, {} skipped-ambiguous\n",
            count(ConditionOutcome::is_pass),
            count(ConditionOutcome::is_fail),
            count(ConditionOutcome::is_skipped)
        ));
        for c in &r.conditions {
            match &c.outcome {
                ConditionOutcome::Pass => {}
                ConditionOutcome::Fail { witness } => out.push_str(&format!(
                    "  {} fail at {:?}: defect [{}]\n",
                    c.id,
                    witness.args,
                    witness.defect.join(", ")
                )),
                ConditionOutcome::SkippedAmbiguous { reason } => {
                    out.push_str(&format!("  {} skipped-ambiguous: {reason}\n", c.id))
                }
            }
        }
    }
    out.push_str(&format!("discrepancies: {}\n", r.discrepancies().len()));
    out
}

fn run_check(kind: CheckKind, files: &[PathBuf], common: &Common) -> Result<u8> {
    let docs = files.iter().map(io::read_file).collect::<Result<Vec<_>>>()?;
    let name = kind.name();
    let report = Registry::standard().run(name, docs)?;
    let discrepancies = report.discrepancies();
    if let Some(path) = &common.discrepancy_log {
        let log = json!({ "schema": REPORT_SCHEMA, "checker": name, "discrepancies": discrepancies });
        std::fs::write(path, render(&log))?;
    }
    if common.json {
        let doc = json!({
            "schema": REPORT_SCHEMA,
            "checker": name,
            "report": report,
            "discrepancies": discrepancies,
        });
        print!("{}", render(&doc));
    } else {
        print!("{}", human_report(name, &report));
    }
    Ok(if report.is_pass() { 0 } else { 1 })
}

fn doc_value(doc: &Document) -> Value {
    serde_json::from_str(&io::serialize(doc)).expect("serializer emits JSON")
}

fn run_unified(cmd: &UnifiedCmd) -> Result<u8> {
    match cmd {
        UnifiedCmd::Build { alg, datum, output } => {
            let a = io::read_file(alg)?.into_algebra()?;
            let d = io::read_file(datum)?.into_datum()?;
            if a.field() != d.field() {
                return Err(Error::FieldMismatch { expected: a.field(), found: d.field() });
            }
            if &a != d.alg() {
                return Err(Error::Schema {
                    path: "datum.tensors.mul".into(),
                    msg: "differs from the given algebra".into(),
                });
            }
            emit(&io::serialize(&Document::Algebra(unified_product(&d))), output.as_deref())?;
        }
        UnifiedCmd::Extract { alg, sub, output } => {
            let e = io::read_file(alg)?.into_algebra()?;
            let (d, _) = extract_datum(&e, &sub.0)?;
            emit(&io::serialize(&Document::Datum(d)), output.as_deref())?;
        }
    }
    Ok(0)
}

fn finite(f: Field) -> Result<()> {
    if f.is_finite() {
        Ok(())
    } else {
        Err(Error::InfiniteField)
    }
}

fn run_classify(cmd: &ClassifyCmd) -> Result<u8> {
    let ClassifyCmd::Extensions { alg, vdim, common } = cmd;
    let a = io::read_file(alg)?.into_algebra()?;
    finite(a.field())?;
    let c = classify_extensions(&a, *vdim, common.budget as u128)?;
    if common.json {
        let reps: Vec<Value> =
            c.representatives().into_iter().map(|d| doc_value(&Document::Datum(d.clone()))).collect();
        let doc = json!({
            "schema": "classification/v1",
            "datums": c.datums.len(),
            "equivalence_classes": c.equivalence_count(),
            "cohomology_classes": c.cohomology_count(),
            "equivalence_class_sizes": c.equivalence.iter().map(Vec::len).collect::<Vec<_>>(),
            "representatives": reps,
        });
        print!("{}", render(&doc));
    } else {
        println!("valid datums: {}", c.datums.len());
        println!("equivalence classes: {}", c.equivalence_count());
        println!("cohomology classes: {}", c.cohomology_count());
        for (i, d) in c.representatives().into_iter().enumerate() {
            let coords: Vec<String> = d.coords().iter().map(ToString::to_string).collect();
            println!("  [{i}] size {}: ({})", c.equivalence[i].len(), coords.join(" "));
        }
    }
    Ok(0)
}

fn run_complements(cmd: &ComplementsCmd) -> Result<u8> {
    match cmd {
        ComplementsCmd::Enumerate { pair, common } => {
            let mp = io::read_file(pair)?.into_matched_pair()?;
            let rs = enumerate_deformations(&mp, common.budget as u128)?;
            if common.json {
                let maps: Vec<Value> = rs.iter().map(|r| doc_value(&Document::LinMap(r.clone()))).collect();
                print!("{}", render(&json!({ "schema": "deformations/v1", "count": rs.len(), "maps": maps })));
            } else {
                println!("deformation maps: {}", rs.len());
                for r in &rs {
                    let m: Vec<String> = r.matrix().iter().map(ToString::to_string).collect();
                    println!("  r = [{}]", m.join(" "));
                }
            }
        }
        ComplementsCmd::Index { pair, common } => {
            let mp = io::read_file(pair)?.into_matched_pair()?;
            let fi = factorization_index(&mp, common.budget as u128)?;
            if common.json {
                let doc = json!({
                    "schema": "factorization-index/v1",
                    "deformations": fi.deformations.len(),
                    "index": fi.index(),
                    "classes": fi.classes,
                });
                print!("{}", render(&doc));
            } else {
                println!("deformation maps: {}", fi.deformations.len());
                println!("factorization index: {}", fi.index());
            }
        }
    }
    Ok(0)
}

fn run_flag(cmd: &FlagCmd) -> Result<u8> {
    let FlagCmd::Enumerate { alg, count, common } = cmd;
    let a = io::read_file(alg)?.into_algebra()?;
    finite(a.field())?;
    let flags = enumerate_flags(&a, common.budget as u128)?;
    match (common.json, count) {
        (true, true) => print!("{}", render(&json!({ "schema": "flags/v1", "count": flags.len() }))),
        (true, false) => {
            let docs: Vec<Value> = flags.iter().map(|f| doc_value(&Document::Flag(f.clone()))).collect();
            print!("{}", render(&json!({ "schema": "flags/v1", "count": flags.len(), "flags": docs })));
        }
        (false, true) => println!("{}", flags.len()),
        (false, false) => {
            for f in &flags {
                let coords: Vec<String> = f.coords().iter().map(ToString::to_string).collect();
                println!("({})", coords.join(" "));
            }
        }
    }
    Ok(0)
}

fn run_sample(kind: SampleKind, dims: (usize, usize), output: Option<&Path>, common: &Common) -> Result<u8> {
    let f = Field::Prime(5);
    let (n, m) = dims;
    let mut rng = sample::seeded(common.seed);
    let doc = match kind {
        SampleKind::Datum => Document::Datum(sample::datum_candidate(f, n, m, &mut rng)),
        SampleKind::ValidDatum => Document::Datum(sample::valid_datum(f, n, m, &mut rng)),
        SampleKind::Bimodule => Document::Datum(altext_core::unified::ExtendingDatum::from_bimodule(
            &sample::bimodule_candidate(f, n, m, &mut rng),
        )),
        SampleKind::Predatum => {
            if n > 2 || m > 2 {
                return Err(Error::DimensionMismatch("pre-datum samplers need n, m <= 2".into()));
            }
            Document::PreDatum(sample::pre_datum_candidate(f, n, m, &mut rng))
        }
    };
    emit(&io::serialize(&doc), output)?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Check { kind, files, common } => run_check(*kind, files, common),
        Command::Unified { cmd } => run_unified(cmd),
        Command::Classify { cmd } => run_classify(cmd),
        Command::Complements { cmd } => run_complements(cmd),
        Command::Flag { cmd } => run_flag(cmd),
        Command::Sample { kind, dims, output, common } => run_sample(*kind, *dims, output.as_deref(), common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is built once");
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

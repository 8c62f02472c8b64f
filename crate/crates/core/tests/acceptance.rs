//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Runs without the libtest harness so the lines always print;
//! exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use altext_core::algebra::{alt_of, is_alternative, is_pre_alternative, Verdict};
use altext_core::bimodule::{is_bimodule, semidirect};
use altext_core::cayley_dickson::{octonions, sedenions};
use altext_core::complements::{
    enumerate_deformations, equivalence_matrix, factorization_index, graph_closed, is_complement, is_deformation,
    isomorphism_matrix, r_deform,
};
use altext_core::flag::{check_flag, enumerate_flags, enumerate_flags_raw};
use altext_core::io::{self, render, Document};
use altext_core::linear::{nth_tuple, pow_count, LinearMap};
use altext_core::pre_unified::{alt_collapse, check_pre_datum, pre_unified_product};
use altext_core::products::MatchedPair;
use altext_core::report::{Discrepancy, Report, REPORT_SCHEMA};
use altext_core::sample::{self, seeded};
use altext_core::unified::{check_datum, extract_datum, unified_product, ExtendingDatum};
use altext_core::Witness;
use serde_json::json;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ms(d: Duration) -> String {
    format!("{:.0} ms", d.as_secs_f64() * 1e3)
}

fn criterion_1() -> Outcome {
    let f = common::f5();
    let oct = common::read_fixture("octonions.alg").into_algebra().unwrap();
    let sed = common::read_fixture("sedenions.alg").into_algebra().unwrap();
    let generated = oct == octonions(f) && sed == sedenions(f);
    let t = Instant::now();
    let o = is_alternative(&oct);
    let to = t.elapsed();
    let t = Instant::now();
    let s = is_alternative(&sed);
    let ts = t.elapsed();
    let golden: Witness = serde_json::from_value(common::goldens()["sedenion_witness"].clone()).unwrap();
    let witness_ok = matches!(&s, Verdict::Fail(w) if *w == golden);
    let fast = to < Duration::from_secs(1) && ts < Duration::from_secs(1);
    outcome(
        generated && o.is_pass() && witness_ok && fast,
        format!(
            "octonions {} in {}; sedenions fail at {} {:?} (recorded witness {}) in {}",
            if o.is_pass() { "pass" } else { "FAIL" },
            ms(to),
            golden.kind,
            golden.args,
            if witness_ok { "reproduced" } else { "NOT reproduced" },
            ms(ts)
        ),
    )
}

fn criterion_2() -> Outcome {
    let f = common::f5();
    let mut rng = seeded(2);
    let t = Instant::now();
    let (mut valid, mut invalid, mut exceptions) = (0, 0, 0);
    for (n, m) in [(2, 1), (2, 2), (3, 2)] {
        for _ in 0..170 {
            let b = sample::bimodule_candidate(f, n, m, &mut rng);
            let lhs = is_bimodule(&b).is_pass();
            let rhs = is_alternative(&semidirect(&b)).is_pass();
            exceptions += usize::from(lhs != rhs);
            if rhs {
                valid += 1;
            } else {
                invalid += 1;
            }
        }
    }
    let el = t.elapsed();
    outcome(
        exceptions == 0 && valid > 0 && invalid > 0 && el < Duration::from_secs(30),
        format!(
            "{} candidates ({valid} bimodules, {invalid} not), {exceptions} exceptions, {}",
            valid + invalid,
            ms(el)
        ),
    )
}

/// The criterion-3 population, shared with criteria 5 and 9.
fn datum_population(seed: u64, count: usize) -> Vec<ExtendingDatum> {
    let mut rng = seeded(seed);
    (0..count).map(|_| sample::datum_candidate(common::f5(), 2, 2, &mut rng)).collect()
}

fn log_path(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write_log(name: &str, subject: &str, log: &[Discrepancy]) -> std::path::PathBuf {
    let path = log_path(name);
    let doc = json!({ "schema": REPORT_SCHEMA, "checker": subject, "discrepancies": log });
    std::fs::write(&path, render(&doc)).unwrap();
    path
}

fn criterion_3(datums: &[ExtendingDatum], reports: &[Report]) -> Outcome {
    let mut disagreements = 0;
    let mut log = Vec::new();
    for r in reports {
        disagreements += usize::from(r.is_pass() != r.printed_verdict());
        log.extend(r.discrepancies());
    }
    let skipped: usize = reports.iter().map(|r| r.skipped().count()).sum();
    let path = write_log("acceptance-unified-discrepancies.json", "datum", &log);
    let logged: usize = reports.iter().filter(|r| !r.discrepancies().is_empty()).count();
    let valid = reports.iter().filter(|r| r.is_pass()).count();
    let complete = logged == disagreements && skipped == 0;
    outcome(
        complete && log.is_empty() && valid > 0 && valid < datums.len(),
        format!(
            "{} datums ({valid} valid), {disagreements} oracle/printed disagreements, log {} entries at {}",
            datums.len(),
            log.len(),
            path.display()
        ),
    )
}

fn criterion_4() -> Outcome {
    let f = common::f5();
    let mut rng = seeded(4);
    let dims = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)];
    let mut mismatches = 0;
    for i in 0..200 {
        let (n, m) = dims[i % dims.len()];
        let d = sample::valid_datum(f, n, m, &mut rng);
        let first: Vec<usize> = (0..n).collect();
        let (back, _) = extract_datum(&unified_product(&d), &first).unwrap();
        let same = back.alg().product().data() == d.alg().product().data()
            && back.maps().as_array().iter().zip(d.maps().as_array()).all(|(a, b)| a.data() == b.data())
            && back == d;
        mismatches += usize::from(!same);
    }
    let oct = octonions(f);
    let (over_h, p) = extract_datum(&oct, &[0, 1, 2, 3]).unwrap();
    let rebuilt = unified_product(&over_h).change_basis(&p.inverse().unwrap()).unwrap();
    let octonion_ok = rebuilt.product().data() == oct.product().data();
    outcome(
        mismatches == 0 && octonion_ok,
        format!(
            "200 valid datums, {mismatches} mismatches; octonions rebuilt from quaternions {}",
            if octonion_ok { "exactly" } else { "INEXACTLY" }
        ),
    )
}

fn criterion_5(datums: &[ExtendingDatum], reports: &[Report]) -> Outcome {
    let valid: Vec<_> = datums.iter().zip(reports).filter(|(_, r)| r.is_pass()).map(|(d, _)| d).collect();
    let failures = valid.iter().filter(|d| !is_bimodule(&d.bimodule()).is_pass()).count();
    outcome(!valid.is_empty() && failures == 0, format!("{} valid datums, {failures} without a bimodule", valid.len()))
}

fn deformation_suite(name: &str, mp: &MatchedPair) -> Result<String, String> {
    let f = mp.a.field();
    let (n, m) = (mp.a.dim(), mp.b.dim());
    let budget = 1 << 20;
    let rs = enumerate_deformations(mp, budget).map_err(|e| e.to_string())?;
    let elements = f.elements().unwrap();
    let mut brute = Vec::new();
    for idx in 0..pow_count(f.order().unwrap(), n * m) {
        let r = LinearMap::from_matrix(f, mp.b.space(), mp.a.space(), nth_tuple(&elements, n * m, idx)).unwrap();
        let pass = is_deformation(mp, &r).unwrap().is_pass();
        if pass != graph_closed(mp, &r).unwrap() {
            return Err(format!("{name}: deformation test and graph closure disagree"));
        }
        if pass {
            brute.push(r);
        }
    }
    if rs != brute {
        return Err(format!("{name}: enumeration differs from brute force"));
    }
    if !rs.iter().any(LinearMap::is_zero) {
        return Err(format!("{name}: r = 0 missing"));
    }
    for r in &rs {
        let ok = graph_closed(mp, r).unwrap()
            && is_complement(mp, r).unwrap()
            && is_alternative(&r_deform(mp, r).unwrap()).is_pass();
        if !ok {
            return Err(format!("{name}: a deformation map fails closure/alternativity/complement"));
        }
    }
    let fi = factorization_index(mp, budget).unwrap();
    let key = f.to_string();
    let want_maps = common::golden_u64(&["deformations", &key, name, "maps"]) as usize;
    let want_index = common::golden_u64(&["deformations", &key, name, "index"]) as usize;
    if (fi.deformations.len(), fi.index()) != (want_maps, want_index) {
        return Err(format!("{name}: {} maps / index {} vs golden {want_maps} / {want_index}", rs.len(), fi.index()));
    }
    if equivalence_matrix(mp, &rs, budget).unwrap() != isomorphism_matrix(mp, &rs, budget).unwrap() {
        return Err(format!("{name}: sigma-equivalence differs from isomorphism search"));
    }
    Ok(format!("{name}/{key}: {} maps, index {}", rs.len(), fi.index()))
}

fn criterion_6() -> Outcome {
    let runs = [
        deformation_suite("idempotent", &common::idempotent_pair(common::f5())),
        deformation_suite("upper_triangular", &common::upper_triangular_pair(common::f3())),
    ];
    let pass = runs.iter().all(Result::is_ok);
    let detail: Vec<String> = runs.into_iter().map(|r| r.unwrap_or_else(|e| e)).collect();
    outcome(pass, detail.join("; "))
}

fn criterion_7() -> Outcome {
    let f = common::f3();
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, a) in common::flag_algebras(f) {
        let flags = enumerate_flags(&a, 1 << 24).unwrap();
        let want = common::golden_u64(&["flags", "F3", name]) as usize;
        let exhaustive = enumerate_flags_raw(&a, 1 << 24).unwrap() == flags;
        let hand = a.dim() > 0 || flags.len() == 3;
        let reports: Vec<Report> = flags.iter().map(check_flag).collect();
        let oracle = reports.iter().all(Report::is_pass);
        let skipped =
            reports.iter().all(|r| ["C6", "C7"].iter().all(|c| r.condition(c).is_some_and(|o| o.is_skipped())));
        pass &= flags.len() == want && exhaustive && hand && oracle && skipped;
        notes.push(format!("{name}: {} (golden {want})", flags.len()));
    }
    for field in [f, common::f5()] {
        let t = Instant::now();
        let mut total = 0;
        for a in sample::alternative_pool(field, 2) {
            total += enumerate_flags(&a, 1 << 30).unwrap().len();
        }
        let el = t.elapsed();
        pass &= el < Duration::from_secs(300);
        notes.push(format!("dim-2 pool over {field}: {total} flag datums in {}", ms(el)));
    }
    outcome(pass, notes.join(", "))
}

fn criterion_8() -> Outcome {
    let f = common::f5();
    let mut rng = seeded(8);
    let (mut valid, mut total, mut thm_fail) = (0, 0, 0);
    for i in 0..300 {
        let p = sample::pre_algebra_candidate(f, 1 + i % 2, &mut rng);
        total += 1;
        if is_pre_alternative(&p).is_pass() {
            valid += 1;
            thm_fail += usize::from(!is_alternative(&alt_of(&p)).is_pass());
        }
    }
    for _ in 0..50 {
        let d = sample::valid_pre_datum(f, 2, 1, &mut rng);
        let e = pre_unified_product(&d);
        total += 1;
        if is_pre_alternative(&e).is_pass() {
            valid += 1;
            thm_fail += usize::from(!is_alternative(&alt_of(&e)).is_pass());
        }
    }
    let dims = [(1, 1), (2, 1), (1, 2), (2, 2)];
    let mut collapse_fail = 0;
    for i in 0..200 {
        let (n, m) = dims[i % dims.len()];
        let d = sample::random_pre_datum(f, n, m, &mut rng);
        let lhs = alt_of(&pre_unified_product(&d));
        let rhs = unified_product(&alt_collapse(&d));
        collapse_fail += usize::from(lhs.product().data() != rhs.product().data());
    }
    let mut log = Vec::new();
    let mut valid_pd = 0;
    for _ in 0..200 {
        let r = check_pre_datum(&sample::pre_datum_candidate(f, 2, 1, &mut rng));
        valid_pd += usize::from(r.is_pass());
        log.extend(r.discrepancies());
    }
    let path = write_log("acceptance-pre-unified-discrepancies.json", "predatum", &log);
    outcome(
        valid > 0 && thm_fail == 0 && collapse_fail == 0 && path.exists(),
        format!(
            "{valid}/{total} valid pre-algebras, {thm_fail} with non-alternative sum; \
             200 alt-collapse checks, {collapse_fail} mismatches; \
             pre-unified log: {} entries over 200 candidates ({valid_pd} valid) at {}",
            log.len(),
            path.display()
        ),
    )
}

fn report_bytes(seed: u64) -> String {
    let reports: Vec<Report> = datum_population(seed, 60).iter().map(check_datum).collect();
    render(&serde_json::to_value(&reports).unwrap())
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut files = 0;
    for entry in std::fs::read_dir(common::fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap() == "goldens.json" {
            continue;
        }
        files += 1;
        let text = std::fs::read_to_string(&path).unwrap();
        let same = io::parse(&text).map(|d: Document| io::serialize(&d) == text).unwrap_or(false);
        if !same {
            bad.push(path.display().to_string());
        }
    }
    let (a, b) = (report_bytes(99), report_bytes(99));
    let deterministic = a == b;
    outcome(
        bad.is_empty() && files > 0 && deterministic,
        format!(
            "{files} golden files, {} not byte-identical; equal-seed report runs {} ({} bytes)",
            bad.len(),
            if deterministic { "byte-identical" } else { "DIFFER" },
            a.len()
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    // libtest-style filtering: `cargo test -- name` skips this target
    // unless the filter matches it.
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return;
    }
    let datums = datum_population(3, 1000);
    let reports: Vec<Report> = datums.iter().map(check_datum).collect();
    let criteria: Vec<Criterion> = vec![
        ("alternativity oracle", Box::new(criterion_1)),
        ("bimodule biconditional", Box::new(criterion_2)),
        ("unified-product concordance", Box::new(|| criterion_3(&datums, &reports))),
        ("extraction round trip", Box::new(criterion_4)),
        ("valid datums carry bimodules", Box::new(|| criterion_5(&datums, &reports))),
        ("deformation suite", Box::new(criterion_6)),
        ("flag suite", Box::new(criterion_7)),
        ("pre-alternative suite", Box::new(criterion_8)),
        ("io determinism", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {} [{name}]: {} ({}; {})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            ms(t.elapsed())
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

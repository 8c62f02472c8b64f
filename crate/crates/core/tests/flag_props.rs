//! Flag datums: the coordinate bijection with `dim V = 1` datums, and the
//! printed C- and P-conditions against the oracle.

mod common;

use altext_core::bimodule::is_bimodule;
use altext_core::flag::{
    check_flag, check_pre_flag, datum_to_flag, enumerate_flags, flag_coord_len, flag_to_datum, pre_flag_to_datum,
    FlagDatum, PreFlagDatum,
};
use altext_core::pre_unified::check_pre_datum;
use altext_core::report::{Discrepancy, DiscrepancyKind, Report};
use altext_core::sample::{self, seeded};
use altext_core::unified::check_datum;
use altext_core::{LinearFunctional, LinearMap};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn random_flag(n: usize, rng: &mut ChaCha8Rng) -> FlagDatum {
    let f = common::f5();
    let alg = sample::alternative_algebra(f, n, rng);
    let theta: Vec<_> = (0..flag_coord_len(n)).map(|_| sample::scalar(f, rng)).collect();
    FlagDatum::from_coords(alg, &theta).unwrap()
}

fn random_pre_flag(n: usize, rng: &mut ChaCha8Rng) -> PreFlagDatum {
    let f = common::f5();
    let p = sample::rota_baxter_pre_algebra(f, n, rng);
    let a = p.space().clone();
    let mut out = PreFlagDatum::zero(p);
    // Zero maps keep a valid share; drawing every map makes nearly all invalid.
    if rand::Rng::gen_bool(rng, 0.3) {
        return out;
    }
    let mut func = || LinearFunctional::new(f, &a, (0..n).map(|_| sample::scalar(f, rng)).collect()).unwrap();
    (out.lambda_prec, out.lambda_succ, out.mu_prec, out.mu_succ) = (func(), func(), func(), func());
    let mut map = || -> LinearMap { sample::linear(f, &a, &a, rng) };
    (out.d_lt, out.d_gt, out.t_lt, out.t_gt) = (map(), map(), map(), map());
    out.x0 = (0..n).map(|_| sample::scalar(f, rng)).collect();
    out.y0 = (0..n).map(|_| sample::scalar(f, rng)).collect();
    out.k0 = sample::scalar(f, rng);
    out.l0 = sample::scalar(f, rng);
    out
}

/// Parseable printed conditions never fail on an oracle pass; an oracle
/// failure that every parseable condition misses needs a skipped condition.
fn necessary(report: &Report) -> bool {
    report.discrepancies().iter().all(|x| x.kind == DiscrepancyKind::PrintedPasses)
        && (report.discrepancies().is_empty() || report.skipped().next().is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flags_and_line_datums_correspond(seed in any::<u64>(), n in 0usize..4) {
        let mut rng = seeded(seed);
        let fl = random_flag(n, &mut rng);
        let d = flag_to_datum(&fl);
        prop_assert_eq!(datum_to_flag(&d).unwrap(), fl.clone());
        prop_assert_eq!(FlagDatum::from_coords(fl.alg.clone(), &fl.coords()).unwrap(), fl.clone());
        let d2 = flag_to_datum(&datum_to_flag(&d).unwrap());
        prop_assert_eq!(&d2, &d);
        prop_assert_eq!(check_flag(&fl).is_pass(), check_datum(&d).is_pass());
    }

    #[test]
    fn flag_to_datum_is_injective(seed in any::<u64>(), n in 1usize..3) {
        let mut rng = seeded(seed);
        let f1 = random_flag(n, &mut rng);
        let mut theta = f1.coords();
        sample::perturb(&mut theta, &mut rng);
        let f2 = FlagDatum::from_coords(f1.alg.clone(), &theta).unwrap();
        prop_assert_ne!(flag_to_datum(&f1), flag_to_datum(&f2));
    }

    #[test]
    fn line_datums_are_flags(seed in any::<u64>(), n in 0usize..3) {
        let d = sample::datum_candidate(common::f5(), n, 1, &mut seeded(seed));
        let fl = datum_to_flag(&d).unwrap();
        prop_assert_eq!(flag_to_datum(&fl).coords(), d.coords());
    }

    #[test]
    fn printed_flag_conditions_are_necessary(seed in any::<u64>(), n in 1usize..3) {
        let report = check_flag(&random_flag(n, &mut seeded(seed)));
        prop_assert!(necessary(&report), "{:?}", report.discrepancies());
    }

    #[test]
    fn pre_flags_match_their_datums(seed in any::<u64>(), n in 1usize..3) {
        let pf = random_pre_flag(n, &mut seeded(seed));
        let report = check_pre_flag(&pf);
        prop_assert_eq!(report.is_pass(), check_pre_datum(&pre_flag_to_datum(&pf)).is_pass());
        prop_assert!(necessary(&report), "{:?}", report.discrepancies());
    }
}

/// Every valid flag over every pool algebra of dimension at most 2 over F5:
/// the datum carries a bimodule, and no parseable C-condition fails. The
/// log is written as an artifact.
#[test]
fn c_conditions_over_small_pool() {
    let f = common::f5();
    let algebras: Vec<_> = (0..=2).flat_map(|n| sample::alternative_pool(f, n)).collect();
    let log: Vec<Discrepancy> = algebras
        .par_iter()
        .flat_map_iter(|a| enumerate_flags(a, 1 << 30).unwrap())
        .flat_map_iter(|fl| {
            let d = flag_to_datum(&fl);
            assert!(is_bimodule(&d.bimodule()).is_pass());
            let report = check_flag(&fl);
            assert!(report.is_pass());
            report.discrepancies()
        })
        .collect();
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("flag-discrepancies.json");
    std::fs::write(&path, serde_json::to_string_pretty(&log).unwrap()).unwrap();
    assert_eq!(log, vec![]);
}

//! Bimodules and pre-bimodules against their semidirect products.

mod common;

use altext_core::algebra::{is_alternative, is_pre_alternative, Verdict};
use altext_core::bimodule::{
    bimodule_defect, bimodule_report, is_bimodule, is_pre_bimodule, pre_bimodule_report, pre_semidirect, semidirect,
    Bimodule, PreBimodule,
};
use altext_core::sample::{self, seeded};
use altext_core::vector;
use altext_core::Space;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn dims() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2)), Just((2, 2)), Just((3, 1)), Just((3, 2))]
}

/// Pre-bimodules over Rota-Baxter pre-algebras: the actions of a valid
/// pre-datum, zero and adjoint actions, and uniform ones.
fn pre_bimodule_candidate(n: usize, m: usize, rng: &mut ChaCha8Rng) -> PreBimodule {
    let f = common::f5();
    match rng.gen_range(0..4) {
        0 => {
            let d = sample::valid_pre_datum(f, n, m, rng);
            let mp = d.maps();
            PreBimodule::new(
                d.prealg().clone(),
                d.ext().clone(),
                mp.prec_l.clone(),
                mp.succ_l.clone(),
                mp.prec_r.clone(),
                mp.succ_r.clone(),
            )
            .unwrap()
        }
        1 => PreBimodule::zero(sample::rota_baxter_pre_algebra(f, n, rng), &Space::numbered("u", m)),
        2 => PreBimodule::adjoint(sample::rota_baxter_pre_algebra(f, n, rng)),
        _ => {
            let p = sample::rota_baxter_pre_algebra(f, n, rng);
            let (a, v) = (p.space().clone(), Space::numbered("u", m));
            let mut draw_l = || sample::bilinear(f, &a, &v, &v, rng);
            let (pl, sl) = (draw_l(), draw_l());
            let mut draw_r = || sample::bilinear(f, &v, &a, &v, rng);
            let (pr, sr) = (draw_r(), draw_r());
            PreBimodule::new(p, v, pl, sl, pr, sr).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bimodule_iff_semidirect_alternative(seed in any::<u64>(), (n, m) in dims()) {
        let b = sample::bimodule_candidate(common::f5(), n, m, &mut seeded(seed));
        prop_assert_eq!(is_bimodule(&b).is_pass(), is_alternative(&semidirect(&b)).is_pass());
    }

    #[test]
    fn semidirect_restricts_to_the_algebra(seed in any::<u64>(), (n, m) in dims()) {
        let b = sample::bimodule_candidate(common::f5(), n, m, &mut seeded(seed));
        let first: Vec<usize> = (0..n).collect();
        let a = semidirect(&b).restrict(&first).unwrap().relabel(b.alg().space()).unwrap();
        prop_assert_eq!(&a, b.alg());
    }

    #[test]
    fn bimodule_witnesses_replay(seed in any::<u64>(), (n, m) in dims()) {
        let b = sample::bimodule_candidate(common::f5(), n, m, &mut seeded(seed));
        if let Verdict::Fail(w) = is_bimodule(&b) {
            if let Some(d) = bimodule_defect(&b, &w.kind, &w.args) {
                prop_assert!(!vector::is_zero(&d));
                prop_assert_eq!(w.defect, d.iter().map(ToString::to_string).collect::<Vec<_>>());
            } else {
                prop_assert!(!is_alternative(b.alg()).is_pass());
            }
        }
    }

    #[test]
    fn printed_bimodule_conditions_concur(seed in any::<u64>(), (n, m) in dims()) {
        let b = sample::bimodule_candidate(common::f5(), n, m, &mut seeded(seed));
        prop_assert_eq!(bimodule_report(&b).discrepancies(), vec![]);
    }

    #[test]
    fn adjoint_bimodules_pass(seed in any::<u64>(), n in 1usize..5) {
        let a = sample::alternative_algebra(common::f5(), n, &mut seeded(seed));
        prop_assert!(is_bimodule(&Bimodule::adjoint(a)).is_pass());
    }

    #[test]
    fn pre_bimodule_iff_pre_semidirect(seed in any::<u64>(), (n, m) in (1usize..3, 1usize..3)) {
        let b = pre_bimodule_candidate(n, m, &mut seeded(seed));
        prop_assert_eq!(is_pre_bimodule(&b).is_pass(), is_pre_alternative(&pre_semidirect(&b)).is_pass());
    }

    #[test]
    fn pre_bimodules_collapse_to_bimodules(seed in any::<u64>(), (n, m) in (1usize..3, 1usize..3)) {
        let b = pre_bimodule_candidate(n, m, &mut seeded(seed));
        if is_pre_bimodule(&b).is_pass() {
            prop_assert!(is_bimodule(&b.alt_collapse()).is_pass());
        }
    }

    #[test]
    fn printed_pre_bimodule_conditions_concur(seed in any::<u64>(), (n, m) in (1usize..3, 1usize..3)) {
        let b = pre_bimodule_candidate(n, m, &mut seeded(seed));
        prop_assert_eq!(pre_bimodule_report(&b).discrepancies(), vec![]);
    }
}

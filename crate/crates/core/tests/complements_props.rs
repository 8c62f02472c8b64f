//! Deformation maps of valid matched pairs: the identity agrees with graph
//! closure, and σ-equivalence refines isomorphism of r-deformed algebras.

mod common;

use altext_core::algebra::is_alternative;
use altext_core::complements::{
    classes, deformation_report, deformations_equivalent, enumerate_deformations, equivalence_matrix,
    factorization_index, graph_closed, is_complement, is_deformation, is_equivalence_relation, isomorphism_matrix,
    r_deform, sigma_holds, sigma_report,
};
use altext_core::linear::all_linear_maps;
use altext_core::sample::{self, seeded};
use proptest::prelude::*;

const BUDGET: u128 = 1 << 26;

fn dims() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn characterizations_agree(seed in any::<u64>(), (n, m) in dims()) {
        let mp = sample::valid_matched_pair(common::f5(), n, m, &mut seeded(seed));
        let found = enumerate_deformations(&mp, BUDGET).unwrap();
        let all = all_linear_maps(mp.a.field(), mp.b.space(), mp.a.space()).unwrap();
        let mut brute = Vec::new();
        for r in &all {
            let deformation = is_deformation(&mp, r).unwrap().is_pass();
            prop_assert_eq!(deformation, graph_closed(&mp, r).unwrap());
            // Every graph is a linear complement of A; closure decides the rest.
            prop_assert!(is_complement(&mp, r).unwrap());
            prop_assert_eq!(deformation_report(&mp, r).unwrap().discrepancies(), vec![]);
            if deformation {
                prop_assert!(is_alternative(&r_deform(&mp, r).unwrap()).is_pass());
                brute.push(r.clone());
            }
        }
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn equivalence_refines_isomorphism(seed in any::<u64>(), (n, m) in dims()) {
        let mp = sample::valid_matched_pair(common::f5(), n, m, &mut seeded(seed));
        let index = factorization_index(&mp, BUDGET).unwrap();
        let rs = &index.deformations;
        let eq = equivalence_matrix(&mp, rs, BUDGET).unwrap();
        let iso = isomorphism_matrix(&mp, rs, BUDGET).unwrap();
        prop_assert!(is_equivalence_relation(&eq));
        prop_assert!(is_equivalence_relation(&iso));
        prop_assert_eq!(&index.classes, &classes(&eq));
        prop_assert!(index.index() >= 1);
        for i in 0..rs.len() {
            for j in 0..rs.len() {
                prop_assert!(!eq[i][j] || iso[i][j]);
            }
        }
    }

    #[test]
    fn sigma_witnesses_check_out(seed in any::<u64>(), (n, m) in dims()) {
        let mp = sample::valid_matched_pair(common::f5(), n, m, &mut seeded(seed));
        let rs = enumerate_deformations(&mp, BUDGET).unwrap();
        for r in &rs {
            for r2 in &rs {
                if let Some(sigma) = deformations_equivalent(&mp, r, r2, BUDGET).unwrap() {
                    prop_assert!(sigma_holds(&mp, r, r2, &sigma).unwrap().is_pass());
                    prop_assert_eq!(sigma.rank(), m);
                    let report = sigma_report(&mp, r, r2, &sigma).unwrap();
                    prop_assert!(report.discrepancies().is_empty() || report.skipped().next().is_some());
                }
            }
        }
    }
}

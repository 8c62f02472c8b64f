//! The alternativity oracle: agreement of the two renderings, witness
//! replay, density of the basis check, and the pre-alternative layer.

mod common;

use altext_core::algebra::{
    alt_of, alternative_defect, associator, equiv_check_assoc_form, is_alternative, is_pre_alternative,
    pre_alternative_defect, Algebra, PreAlgebra, Verdict,
};
use altext_core::sample::{self, seeded};
use altext_core::vector;
use altext_core::{BilinearMap, Scalar};
use proptest::prelude::*;

fn replay(defect: &[Scalar]) -> Vec<String> {
    defect.iter().map(ToString::to_string).collect()
}

fn dense(alg: &Algebra, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Scalar> {
    (0..alg.dim()).map(|_| sample::scalar(alg.field(), rng)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn renderings_agree_with_witness(seed in any::<u64>(), n in 1usize..5) {
        let alg = common::algebra_candidate(n, &mut seeded(seed));
        prop_assert_eq!(is_alternative(&alg), equiv_check_assoc_form(&alg));
    }

    #[test]
    fn witnesses_replay(seed in any::<u64>(), n in 1usize..5) {
        let alg = common::algebra_candidate(n, &mut seeded(seed));
        if let Verdict::Fail(w) = is_alternative(&alg) {
            let d = alternative_defect(&alg, &w.kind, &w.args).unwrap();
            prop_assert!(!vector::is_zero(&d));
            prop_assert_eq!(replay(&d), w.defect);
        }
    }

    /// A pass on basis triples implies `(x,x,y) = (y,x,x) = 0` on dense
    /// vectors; a failure is seen by `(x,x,z)` or `(x,z,z)` at sums of the
    /// witness's basis vectors.
    #[test]
    fn basis_check_is_sufficient(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = seeded(seed);
        let alg = common::algebra_candidate(n, &mut rng);
        let f = alg.field();
        match is_alternative(&alg) {
            Verdict::Pass => {
                for _ in 0..50 {
                    let (x, y) = (dense(&alg, &mut rng), dense(&alg, &mut rng));
                    prop_assert!(vector::is_zero(&associator(&alg, &x, &x, &y).unwrap()));
                    prop_assert!(vector::is_zero(&associator(&alg, &y, &x, &x).unwrap()));
                }
            }
            Verdict::Fail(w) => {
                let e = |i: usize| vector::basis(f, n, i);
                let [i, j, k] = <[usize; 3]>::try_from(w.args.as_slice()).unwrap();
                let (a, b, z) = match w.kind.as_str() {
                    "left-alternative" => (e(i), e(j), e(k)),
                    _ => (e(j), e(k), e(i)),
                };
                let s = vector::add(&a, &b);
                let cubic = |x: &[Scalar]| {
                    if w.kind == "left-alternative" {
                        associator(&alg, x, x, &z).unwrap()
                    } else {
                        associator(&alg, &z, x, x).unwrap()
                    }
                };
                prop_assert!([a.as_slice(), b.as_slice(), s.as_slice()].iter().any(|x| !vector::is_zero(&cubic(x))));
            }
        }
    }

    #[test]
    fn pool_algebras_pass(seed in any::<u64>(), n in 1usize..5) {
        let alg = sample::alternative_algebra(common::f5(), n, &mut seeded(seed));
        prop_assert!(is_alternative(&alg).is_pass());
    }

    #[test]
    fn alt_of_is_additive(seed in any::<u64>(), n in 1usize..3) {
        let mut rng = seeded(seed);
        let f = common::f5();
        let p = sample::pre_algebra_candidate(f, n, &mut rng);
        let s = p.space().clone();
        let delta = sample::bilinear(f, &s, &s, &s, &mut rng);
        let shifted = PreAlgebra::new(p.prec().add(&delta).unwrap(), p.succ().clone()).unwrap();
        let expected = alt_of(&p).product().add(&delta).unwrap();
        prop_assert_eq!(alt_of(&shifted).product().clone(), expected);
        let swapped = PreAlgebra::new(p.succ().clone(), p.prec().clone()).unwrap();
        prop_assert_eq!(alt_of(&swapped), alt_of(&p));
    }

    #[test]
    fn pre_alternative_implies_alternative(seed in any::<u64>(), n in 1usize..3) {
        let p = sample::pre_algebra_candidate(common::f5(), n, &mut seeded(seed));
        if is_pre_alternative(&p).is_pass() {
            prop_assert!(is_alternative(&alt_of(&p)).is_pass());
        }
    }

    #[test]
    fn pre_witnesses_replay(seed in any::<u64>(), n in 1usize..3) {
        let p = sample::pre_algebra_candidate(common::f5(), n, &mut seeded(seed));
        if let Verdict::Fail(w) = is_pre_alternative(&p) {
            let d = pre_alternative_defect(&p, &w.kind, &w.args).unwrap();
            prop_assert_eq!(replay(&d), w.defect);
        }
    }

    #[test]
    fn rota_baxter_pre_algebras_pass(seed in any::<u64>(), n in 1usize..3) {
        let p = sample::rota_baxter_pre_algebra(common::f5(), n, &mut seeded(seed));
        prop_assert!(is_pre_alternative(&p).is_pass());
    }
}

#[test]
fn zero_product_pre_algebra_is_pre_alternative() {
    let f = common::f5();
    let s = altext_core::Space::numbered("x", 3);
    let z = BilinearMap::zero(f, &s, &s, &s);
    assert!(is_pre_alternative(&PreAlgebra::new(z.clone(), z).unwrap()).is_pass());
}

//! Fixture constructors and golden values shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use altext_core::algebra::Algebra;
use altext_core::cayley_dickson::{octonions, quaternions, sedenions};
use altext_core::flag::{enumerate_flags, FlagDatum, PreFlagDatum};
use altext_core::io::{self, Document};
use altext_core::library;
use altext_core::linear::LinearMap;
use altext_core::products::{extract_matched, CrossedSystem, MatchedPair};
use altext_core::sample;
use altext_core::unified::extract_datum;
use altext_core::Field;
use serde_json::Value;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

/// Characteristic 3 is not readable from documents; these fixtures live in code.
pub fn f3() -> Field {
    Field::prime_allowing_char3(3).unwrap()
}

/// `k × k` split as two lines spanned by orthogonal idempotents.
pub fn idempotent_pair(f: Field) -> MatchedPair {
    MatchedPair::zero(library::ground(f), library::ground(f))
}

/// Upper triangular 2×2 matrices split as span(E11, E12) ⊕ span(E22).
pub fn upper_triangular_pair(f: Field) -> MatchedPair {
    extract_matched(&library::upper_triangular(f), &[0, 1]).unwrap()
}

/// Algebras whose flag datums are counted in the goldens, by name.
pub fn flag_algebras(f: Field) -> Vec<(&'static str, Algebra)> {
    vec![("zero0", library::zero(f, 0)), ("zero1", library::zero(f, 1)), ("ground", library::ground(f))]
}

/// Every generated fixture file with its document.
pub fn generated() -> Vec<(&'static str, Document)> {
    let f = f5();
    let mut rng = sample::seeded(2026);
    let nonzero = |c: Vec<altext_core::Scalar>| c.iter().filter(|x| !x.is_zero()).count();
    let datum = std::iter::repeat_with(|| sample::valid_datum(f, 2, 2, &mut rng))
        .find(|d| !d.alg().product().is_zero() && nonzero(d.coords()) >= 8)
        .unwrap();
    let pre_datum = std::iter::repeat_with(|| sample::valid_pre_datum(f, 2, 1, &mut rng))
        .find(|d| !d.prealg().prec().is_zero() && nonzero(d.coords()) >= 4)
        .unwrap();
    let pre_alg = std::iter::repeat_with(|| sample::rota_baxter_pre_algebra(f, 2, &mut rng))
        .find(|p| !p.prec().is_zero() && !p.succ().is_zero())
        .unwrap();
    let (over_quaternions, _) = extract_datum(&octonions(f), &[0, 1, 2, 3]).unwrap();
    let ground = library::ground(f);
    let first_flag = enumerate_flags(&ground, 1 << 20)
        .unwrap()
        .into_iter()
        .find(|fl| fl != &FlagDatum::zero(ground.clone()))
        .unwrap();
    let mp = idempotent_pair(f);
    let mut r = LinearMap::zero(f, mp.b.space(), mp.a.space());
    r.set(0, 0, f.one());
    let mut crossed = CrossedSystem::zero(library::ground(f), library::zero(f, 1));
    crossed.cocycle.set(0, 0, 0, f.from_i64(2));
    vec![
        ("octonions.alg", Document::Algebra(octonions(f))),
        ("sedenions.alg", Document::Algebra(sedenions(f))),
        ("quaternions.alg", Document::Algebra(quaternions(f))),
        ("upper_triangular.alg", Document::Algebra(library::upper_triangular(f))),
        ("point.alg", Document::Algebra(library::zero(f, 0))),
        ("line_zero.alg", Document::Algebra(library::zero(f, 1))),
        ("ground.alg", Document::Algebra(ground)),
        ("datum_base.alg", Document::Algebra(datum.alg().clone())),
        ("datum.ext", Document::Datum(datum)),
        ("octonions_over_quaternions.ext", Document::Datum(over_quaternions)),
        ("rota_baxter.palg", Document::PreAlgebra(pre_alg)),
        ("predatum.pext", Document::PreDatum(pre_datum.clone())),
        ("idempotent.mp", Document::MatchedPair(mp)),
        ("upper_triangular.mp", Document::MatchedPair(upper_triangular_pair(f))),
        ("idempotent_shift.lin", Document::LinMap(r)),
        ("crossed.cs", Document::Crossed(crossed)),
        ("ground.flag", Document::Flag(first_flag)),
        ("zero.preflag", Document::PreFlag(PreFlagDatum::zero(pre_datum.prealg().clone()))),
    ]
}

pub fn goldens() -> Value {
    let text = std::fs::read_to_string(fixtures_dir().join("goldens.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn golden_u64(path: &[&str]) -> u64 {
    let g = goldens();
    let mut v = &g;
    for key in path {
        v = &v[*key];
    }
    v.as_u64().unwrap_or_else(|| panic!("golden {path:?} missing"))
}

pub fn read_fixture(name: &str) -> Document {
    io::read_file(fixtures_dir().join(name)).unwrap()
}

/// Algebras of dimension `n` over F5: pool algebras in a random basis,
/// one-coordinate perturbations of them, and uniform tables.
pub fn algebra_candidate(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Algebra {
    use rand::Rng;
    let f = f5();
    let roll = rng.gen_range(0..3);
    if roll == 2 {
        let s = altext_core::Space::numbered("x", n);
        return Algebra::new(sample::bilinear(f, &s, &s, &s, rng)).unwrap();
    }
    let a = sample::alternative_algebra(f, n, rng);
    if roll == 0 || n == 0 {
        return a;
    }
    let mut data = a.product().data().to_vec();
    sample::perturb(&mut data, rng);
    let s = a.space().clone();
    Algebra::new(altext_core::BilinearMap::from_dense(f, &s, &s, &s, data).unwrap()).unwrap()
}

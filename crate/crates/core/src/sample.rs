//! Seeded samplers over a finite field. Every sampler draws from a
//! caller-supplied `ChaCha8Rng`, so equal seeds give equal streams.
//!
//! Valid objects come from constructions that are valid by the oracle
//! (restriction of alternative algebras to closed blocks, block-triangular
//! changes of basis, semidirect products); invalid ones come from
//! perturbing a single coordinate or from uniform draws.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, PreAlgebra};
use crate::bilinear::BilinearMap;
use crate::bimodule::Bimodule;
use crate::cayley_dickson::quaternions;
use crate::error::{within_budget, Error, Result};
use crate::field::{Field, Scalar};
use crate::library;
use crate::linear::{nth_tuple, pow_count, LinearMap};
use crate::pre_unified::{extract_pre_datum, PreExtendingDatum};
use crate::products::{extract_matched, CrossedSystem, MatchedPair, PreMatchedPair};
use crate::space::Space;
use crate::unified::{extract_datum, unified_product, ExtendingDatum};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn order(f: Field) -> u64 {
    f.order().expect("samplers need a finite field")
}

pub fn scalar(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    f.residue(rng.gen_range(0..order(f)))
}

fn nonzero(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    f.residue(rng.gen_range(1..order(f)))
}

pub fn bilinear(f: Field, l: &Space, r: &Space, o: &Space, rng: &mut ChaCha8Rng) -> BilinearMap {
    let data = (0..l.dim() * r.dim() * o.dim()).map(|_| scalar(f, rng)).collect();
    BilinearMap::from_dense(f, l, r, o, data).expect("sized")
}

pub fn linear(f: Field, src: &Space, dst: &Space, rng: &mut ChaCha8Rng) -> LinearMap {
    let m = (0..src.dim() * dst.dim()).map(|_| scalar(f, rng)).collect();
    LinearMap::from_matrix(f, src, dst, m).expect("sized")
}

/// Uniform over `GL(space)` by rejection.
pub fn invertible(f: Field, space: &Space, rng: &mut ChaCha8Rng) -> LinearMap {
    loop {
        let m = linear(f, space, space, rng);
        if m.rank() == space.dim() {
            return m;
        }
    }
}

/// `[[Q, R], [0, S]]` on `space = A ⊕ V` with `dim A = n`; keeps the first
/// `n` coordinates a closed block under any change of basis it drives.
pub fn block_triangular(f: Field, space: &Space, n: usize, rng: &mut ChaCha8Rng) -> LinearMap {
    block_matrix(f, space, n, true, rng)
}

/// `[[Q, 0], [0, S]]`; keeps both coordinate blocks closed.
pub fn block_diagonal(f: Field, space: &Space, n: usize, rng: &mut ChaCha8Rng) -> LinearMap {
    block_matrix(f, space, n, false, rng)
}

// Draw order Q, S, R is load-bearing: seeded fixtures depend on it.
fn block_matrix(f: Field, space: &Space, n: usize, triangular: bool, rng: &mut ChaCha8Rng) -> LinearMap {
    let dim = space.dim();
    let a = Space::numbered("a", n);
    let v = Space::numbered("v", dim - n);
    let q = invertible(f, &a, rng);
    let s = invertible(f, &v, rng);
    let r = if triangular { linear(f, &v, &a, rng) } else { LinearMap::zero(f, &v, &a) };
    let mut out = LinearMap::zero(f, space, space);
    for i in 0..dim {
        for j in 0..dim {
            let c = match (i < n, j < n) {
                (true, true) => q.get(i, j).clone(),
                (true, false) => r.get(i, j - n).clone(),
                (false, false) => s.get(i - n, j - n).clone(),
                (false, true) => continue,
            };
            out.set(i, j, c);
        }
    }
    out
}

/// Adds a nonzero scalar to one coordinate.
pub fn perturb(coords: &mut [Scalar], rng: &mut ChaCha8Rng) {
    if coords.is_empty() {
        return;
    }
    let f = coords[0].field();
    let i = rng.gen_range(0..coords.len());
    coords[i] += &nonzero(f, rng);
}

/// Alternative algebras of dimension `dim` in their standard bases.
pub fn alternative_pool(f: Field, dim: usize) -> Vec<Algebra> {
    let mut out = library::associative_of_dim(f, dim);
    if dim == 4 {
        out.push(quaternions(f));
    }
    out
}

fn closed_subsets(e: &Algebra, n: usize) -> Vec<Vec<usize>> {
    let dim = e.dim();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        if e.check_closed(&pick).is_ok() {
            out.push(pick.clone());
        }
        // next n-subset in lexicographic order
        let Some(i) = (0..n).rev().find(|&i| pick[i] < dim - n + i) else { break };
        pick[i] += 1;
        for j in i + 1..n {
            pick[j] = pick[j - 1] + 1;
        }
    }
    out
}

/// A random algebra from the pool in a random basis.
pub fn alternative_algebra(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Algebra {
    let pool = alternative_pool(f, n);
    let a = pool.choose(rng).expect("pool is never empty");
    a.change_basis(&invertible(f, a.space(), rng)).expect("invertible")
}

/// A datum whose unified product is alternative: a pool algebra of
/// dimension `n + m`, restricted to a random closed block of size `n`, in a
/// random block-triangular basis.
pub fn valid_datum(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> ExtendingDatum {
    let pool: Vec<(Algebra, Vec<Vec<usize>>)> = alternative_pool(f, n + m)
        .into_iter()
        .map(|e| {
            let subs = closed_subsets(&e, n);
            (e, subs)
        })
        .filter(|(_, subs)| !subs.is_empty())
        .collect();
    let (e, subs) = pool.choose(rng).expect("zero algebra is always in the pool");
    let sub = subs.choose(rng).expect("nonempty");
    let (d0, _) = extract_datum(e, sub).expect("closed block");
    let e1 = unified_product(&d0);
    let e2 = e1.change_basis(&block_triangular(f, e1.space(), n, rng)).expect("invertible");
    let first: Vec<usize> = (0..n).collect();
    extract_datum(&e2, &first).expect("block stays closed").0
}

/// A matched pair whose bicrossed product is alternative: a pool algebra of
/// dimension `n + m` split into two closed coordinate blocks, in a random
/// block-diagonal basis.
pub fn valid_matched_pair(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> MatchedPair {
    let pool: Vec<(Algebra, Vec<Vec<usize>>)> = alternative_pool(f, n + m)
        .into_iter()
        .map(|e| {
            let subs: Vec<Vec<usize>> = closed_subsets(&e, n)
                .into_iter()
                .filter(|s| {
                    let rest: Vec<usize> = (0..n + m).filter(|i| !s.contains(i)).collect();
                    e.check_closed(&rest).is_ok()
                })
                .collect();
            (e, subs)
        })
        .filter(|(_, subs)| !subs.is_empty())
        .collect();
    let (e, subs) = pool.choose(rng).expect("zero algebra splits");
    let sub = subs.choose(rng).expect("nonempty");
    let (d0, _) = extract_datum(e, sub).expect("closed block");
    let e1 = unified_product(&d0);
    let e2 = e1.change_basis(&block_diagonal(f, e1.space(), n, rng)).expect("invertible");
    let first: Vec<usize> = (0..n).collect();
    extract_matched(&e2, &first).expect("both blocks stay closed")
}

/// Mixed matched-pair candidates: valid, one-coordinate perturbations, and
/// uniform cross maps over alternative algebras.
pub fn matched_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> MatchedPair {
    let roll = rng.gen_range(0..10);
    let mut mp = valid_matched_pair(f, n, m, rng);
    if roll < 4 {
        return mp;
    }
    let (sa, sb) = (mp.a.space().clone(), mp.b.space().clone());
    if roll < 8 {
        let target = match rng.gen_range(0..4) {
            0 => &mut mp.act_l,
            1 => &mut mp.act_r,
            2 => &mut mp.coact_r,
            _ => &mut mp.coact_l,
        };
        let (l, r, o) = (target.left().clone(), target.right().clone(), target.out().clone());
        let mut data = target.data().to_vec();
        perturb(&mut data, rng);
        *target = BilinearMap::from_dense(f, &l, &r, &o, data).expect("sized");
        return mp;
    }
    MatchedPair::new(
        mp.a.clone(),
        mp.b.clone(),
        bilinear(f, &sa, &sb, &sb, rng),
        bilinear(f, &sb, &sa, &sb, rng),
        bilinear(f, &sb, &sa, &sa, rng),
        bilinear(f, &sa, &sb, &sa, rng),
    )
    .expect("shapes")
}

/// Crossed systems over alternative `A, B`: the trivial one (a direct
/// product), or with some of the three maps drawn uniformly.
pub fn crossed_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> CrossedSystem {
    let a = alternative_algebra(f, n, rng);
    let b = alternative_algebra(f, m, rng);
    let mut c = CrossedSystem::zero(a, b);
    let (sa, sb) = (c.a.space().clone(), c.b.space().clone());
    if rng.gen_bool(0.5) {
        c.cocycle = bilinear(f, &sb, &sb, &sa, rng);
    }
    if rng.gen_bool(0.3) {
        c.coact_r = bilinear(f, &sb, &sa, &sa, rng);
    }
    if rng.gen_bool(0.3) {
        c.coact_l = bilinear(f, &sa, &sb, &sa, rng);
    }
    c
}

/// Pre-matched pairs over Rota-Baxter pre-algebras (`n, m <= 2`): zero cross
/// maps or uniform ones.
pub fn pre_matched_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> PreMatchedPair {
    let mut pm = PreMatchedPair::zero(rota_baxter_pre_algebra(f, n, rng), rota_baxter_pre_algebra(f, m, rng));
    if rng.gen_bool(0.3) {
        return pm;
    }
    let (sa, sb) = (pm.a.space().clone(), pm.b.space().clone());
    for t in [&mut pm.prec_l, &mut pm.succ_l] {
        *t = bilinear(f, &sa, &sb, &sb, rng);
    }
    for t in [&mut pm.prec_r, &mut pm.succ_r] {
        *t = bilinear(f, &sb, &sa, &sb, rng);
    }
    for t in [&mut pm.lt_l, &mut pm.gt_l] {
        *t = bilinear(f, &sa, &sb, &sa, rng);
    }
    for t in [&mut pm.lt_r, &mut pm.gt_r] {
        *t = bilinear(f, &sb, &sa, &sa, rng);
    }
    pm
}

/// Mixed valid/invalid datum candidates at `(n, m)`.
pub fn datum_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> ExtendingDatum {
    let roll = rng.gen_range(0..20);
    if roll < 8 {
        return valid_datum(f, n, m, rng);
    }
    if roll < 11 {
        let b = valid_datum(f, n, m, rng).bimodule();
        return ExtendingDatum::from_bimodule(&b);
    }
    let base = if roll < 17 {
        valid_datum(f, n, m, rng)
    } else {
        ExtendingDatum::zero(alternative_algebra(f, n, rng), &Space::numbered("u", m))
    };
    let mut coords = base.coords();
    if roll < 17 {
        perturb(&mut coords, rng);
    } else {
        coords.iter_mut().for_each(|c| *c = scalar(f, rng));
    }
    ExtendingDatum::from_coords(base.alg().clone(), base.ext(), &coords).expect("sized")
}

/// Mixed valid/invalid bimodule candidates at `(n, m)`, including a few over
/// non-alternative algebras.
pub fn bimodule_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Bimodule {
    let v = Space::numbered("u", m);
    let roll = rng.gen_range(0..20);
    if roll < 7 {
        return valid_datum(f, n, m, rng).bimodule();
    }
    if roll < 8 {
        return Bimodule::zero(alternative_algebra(f, n, rng), &v);
    }
    if roll < 9 && n == m {
        return Bimodule::adjoint(alternative_algebra(f, n, rng));
    }
    if roll < 15 {
        let b = valid_datum(f, n, m, rng).bimodule();
        let (mut l, mut r) = (b.act_l().data().to_vec(), b.act_r().data().to_vec());
        if rng.gen_bool(0.5) {
            perturb(&mut l, rng);
        } else {
            perturb(&mut r, rng);
        }
        let a = b.alg().clone();
        let l = BilinearMap::from_dense(f, a.space(), &v, &v, l).expect("sized");
        let r = BilinearMap::from_dense(f, &v, a.space(), &v, r).expect("sized");
        return Bimodule::new(a, v, l, r).expect("shapes");
    }
    let a = if roll < 19 {
        alternative_algebra(f, n, rng)
    } else {
        let s = Space::numbered("x", n);
        Algebra::new(bilinear(f, &s, &s, &s, rng)).expect("square")
    };
    let l = bilinear(f, a.space(), &v, &v, rng);
    let r = bilinear(f, &v, a.space(), &v, rng);
    Bimodule::new(a, v, l, r).expect("shapes")
}

/// Every Rota-Baxter operator of weight zero on `alg`:
/// `R(x)R(y) = R(R(x)y + xR(y))`. Exhaustive over `End(A)`.
pub fn rota_baxter_operators(alg: &Algebra, budget: u128) -> Result<Vec<LinearMap>> {
    let f = alg.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let n = alg.dim();
    let total = pow_count(q, n * n);
    within_budget(total, budget)?;
    let elements = f.elements().expect("finite");
    let s = alg.space();
    let mut out = Vec::new();
    for idx in 0..total {
        let r = LinearMap::from_matrix(f, s, s, nth_tuple(&elements, n * n, idx))?;
        if is_rota_baxter(alg, &r) {
            out.push(r);
        }
    }
    Ok(out)
}

pub fn is_rota_baxter(alg: &Algebra, r: &LinearMap) -> bool {
    let n = alg.dim();
    let cols: Vec<_> = (0..n).map(|i| r.column(i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let ei = crate::vector::basis(alg.field(), n, i);
            let ej = crate::vector::basis(alg.field(), n, j);
            let lhs = alg.mul(&cols[i], &cols[j]).expect("sized");
            let inner =
                crate::vector::add(&alg.mul(&cols[i], &ej).expect("sized"), &alg.mul(&ei, &cols[j]).expect("sized"));
            lhs == r.apply(&inner).expect("sized")
        })
    })
}

/// `x ≺ y = x R(y)`, `x ≻ y = R(x) y`.
pub fn pre_from_rota_baxter(alg: &Algebra, r: &LinearMap) -> PreAlgebra {
    let f = alg.field();
    let s = alg.space();
    let n = alg.dim();
    let mut prec = BilinearMap::zero(f, s, s, s);
    let mut succ = BilinearMap::zero(f, s, s, s);
    for i in 0..n {
        let ei = crate::vector::basis(f, n, i);
        let ri = r.column(i);
        for j in 0..n {
            let ej = crate::vector::basis(f, n, j);
            let rj = r.column(j);
            let p = alg.mul(&ei, &rj).expect("sized");
            let q = alg.mul(&ri, &ej).expect("sized");
            for k in 0..n {
                prec.set(i, j, k, p[k].clone());
                succ.set(i, j, k, q[k].clone());
            }
        }
    }
    PreAlgebra::new(prec, succ).expect("same shape")
}

/// A pre-algebra in a new basis (columns of `basis`).
pub fn pre_change_basis(p: &PreAlgebra, basis: &LinearMap) -> Result<PreAlgebra> {
    let prec = Algebra::new(p.prec().clone())?.change_basis(basis)?;
    let succ = Algebra::new(p.succ().clone())?.change_basis(basis)?;
    PreAlgebra::new(prec.product().clone(), succ.product().clone())
}

/// Componentwise product of two pre-algebras on `P ⊕ Q`.
pub fn pre_direct_product(p: &PreAlgebra, q: &PreAlgebra) -> Result<PreAlgebra> {
    let prec = Algebra::new(p.prec().clone())?.direct_product(&Algebra::new(q.prec().clone())?)?;
    let succ = Algebra::new(p.succ().clone())?.direct_product(&Algebra::new(q.succ().clone())?)?;
    PreAlgebra::new(prec.product().clone(), succ.product().clone())
}

/// Pre-alternative algebras of dimension `n <= 2` from Rota-Baxter
/// operators on pool algebras, in a random basis.
pub fn rota_baxter_pre_algebra(f: Field, n: usize, rng: &mut ChaCha8Rng) -> PreAlgebra {
    let pool = alternative_pool(f, n);
    let a = pool.choose(rng).expect("nonempty");
    let ops = rota_baxter_operators(a, 1 << 20).expect("small dimension");
    let r = ops.choose(rng).expect("zero is always Rota-Baxter");
    let p = pre_from_rota_baxter(a, r);
    pre_change_basis(&p, &invertible(f, p.space(), rng)).expect("invertible")
}

/// Mixed pre-algebra candidates of dimension `n <= 2`.
pub fn pre_algebra_candidate(f: Field, n: usize, rng: &mut ChaCha8Rng) -> PreAlgebra {
    let roll = rng.gen_range(0..10);
    if roll < 5 {
        return rota_baxter_pre_algebra(f, n, rng);
    }
    let s = Space::numbered("x", n);
    if roll < 8 {
        let p = rota_baxter_pre_algebra(f, n, rng);
        let (mut prec, mut succ) = (p.prec().data().to_vec(), p.succ().data().to_vec());
        if rng.gen_bool(0.5) {
            perturb(&mut prec, rng);
        } else {
            perturb(&mut succ, rng);
        }
        let prec = BilinearMap::from_dense(f, &s, &s, &s, prec).expect("sized");
        let succ = BilinearMap::from_dense(f, &s, &s, &s, succ).expect("sized");
        return PreAlgebra::new(prec, succ).expect("same shape");
    }
    PreAlgebra::new(bilinear(f, &s, &s, &s, rng), bilinear(f, &s, &s, &s, rng)).expect("same shape")
}

/// A pre-datum whose pre-unified product is pre-alternative: the direct
/// product of two Rota-Baxter pre-algebras in a random block-triangular basis.
pub fn valid_pre_datum(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> PreExtendingDatum {
    let e = pre_direct_product(&rota_baxter_pre_algebra(f, n, rng), &rota_baxter_pre_algebra(f, m, rng))
        .expect("disjoint labels");
    let e = pre_change_basis(&e, &block_triangular(f, e.space(), n, rng)).expect("invertible");
    let first: Vec<usize> = (0..n).collect();
    extract_pre_datum(&e, &first).expect("block stays closed").0
}

/// Uniformly random pre-datum over a random pre-algebra candidate.
pub fn random_pre_datum(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> PreExtendingDatum {
    let p = pre_algebra_candidate(f, n, rng);
    let v = Space::numbered("u", m);
    let len = PreExtendingDatum::zero(p.clone(), &v).coords().len();
    let coords: Vec<Scalar> = (0..len).map(|_| scalar(f, rng)).collect();
    PreExtendingDatum::from_coords(p, &v, &coords).expect("sized")
}

/// Mixed valid/invalid pre-datum candidates at `(n, m)` with `n, m <= 2`.
pub fn pre_datum_candidate(f: Field, n: usize, m: usize, rng: &mut ChaCha8Rng) -> PreExtendingDatum {
    let roll = rng.gen_range(0..10);
    if roll < 5 {
        return valid_pre_datum(f, n, m, rng);
    }
    if roll < 8 {
        let d = valid_pre_datum(f, n, m, rng);
        let mut coords = d.coords();
        perturb(&mut coords, rng);
        return PreExtendingDatum::from_coords(d.prealg().clone(), d.ext(), &coords).expect("sized");
    }
    random_pre_datum(f, n, m, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{alt_of, is_alternative, is_pre_alternative};
    use crate::pre_unified::pre_unified_product;

    #[test]
    fn valid_datums_are_valid() {
        let f = Field::Prime(5);
        let mut rng = seeded(7);
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            for _ in 0..10 {
                let d = valid_datum(f, n, m, &mut rng);
                assert_eq!((d.alg().dim(), d.ext().dim()), (n, m));
                assert!(is_alternative(&unified_product(&d)).is_pass());
            }
        }
    }

    #[test]
    fn rota_baxter_gives_pre_alternative() {
        let f = Field::Prime(5);
        for n in 1..=2 {
            for a in alternative_pool(f, n) {
                for r in rota_baxter_operators(&a, 1 << 20).unwrap() {
                    let p = pre_from_rota_baxter(&a, &r);
                    assert!(is_pre_alternative(&p).is_pass());
                    assert!(is_alternative(&alt_of(&p)).is_pass());
                }
            }
        }
    }

    #[test]
    fn valid_pre_datums_are_valid() {
        let f = Field::Prime(5);
        let mut rng = seeded(11);
        for _ in 0..10 {
            let d = valid_pre_datum(f, 2, 1, &mut rng);
            assert!(is_pre_alternative(&pre_unified_product(&d)).is_pass());
        }
    }

    #[test]
    fn valid_matched_pairs_are_valid() {
        let f = Field::Prime(5);
        let mut rng = seeded(13);
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for _ in 0..10 {
                let mp = valid_matched_pair(f, n, m, &mut rng);
                assert!(is_alternative(&crate::products::bicrossed_product(&mp)).is_pass());
            }
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let f = Field::Prime(5);
        let a: Vec<_> = (0..5).scan(seeded(3), |r, _| Some(datum_candidate(f, 2, 2, r).coords())).collect();
        let b: Vec<_> = (0..5).scan(seeded(3), |r, _| Some(datum_candidate(f, 2, 2, r).coords())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn candidates_are_mixed() {
        let f = Field::Prime(5);
        let mut rng = seeded(5);
        let verdicts: Vec<bool> =
            (0..60).map(|_| is_alternative(&unified_product(&datum_candidate(f, 2, 2, &mut rng))).is_pass()).collect();
        assert!(verdicts.iter().any(|&v| v) && verdicts.iter().any(|&v| !v));
    }
}

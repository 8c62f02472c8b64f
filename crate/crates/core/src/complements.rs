//! Deformation maps `r: B → A` of a matched pair, the deformed algebras
//! `B_r`, their equivalence, and the factorization index.

use rayon::prelude::*;

use crate::algebra::{Algebra, Verdict, Witness};
use crate::bilinear::BilinearMap;
use crate::error::{ensure_field, within_budget, Error, Result};
use crate::linear::{self, general_linear_group, gl_order, nth_tuple, pow_count, LinearMap};
use crate::printed::{self, catalog, Signature, Sort};
use crate::products::{bicrossed_product, matched_signature, MatchedPair};
use crate::report::Report;
use crate::vector::{self, Vector};

pub const DEFORMATION: &str = "deformation";
pub const SIGMA_EQUIVALENCE: &str = "sigma-equivalence";

fn check_r(mp: &MatchedPair, r: &LinearMap) -> Result<()> {
    ensure_field(mp.a.field(), r.field())?;
    if (r.src().dim(), r.dst().dim()) != (mp.b.dim(), mp.a.dim()) {
        return Err(Error::dims("a deformation map goes B → A"));
    }
    Ok(())
}

/// `r(u∘v) − r(u)∘r(v) − u⊲r(v) − r(u)⊳v + r(r(u)▷v + u◁r(v))` at basis
/// vectors `u, v` of `B`.
fn deformation_defect(mp: &MatchedPair, r: &LinearMap, u: usize, v: usize) -> Vector {
    let f = mp.a.field();
    let m = mp.b.dim();
    let (eu, ev) = (vector::basis(f, m, u), vector::basis(f, m, v));
    let (ru, rv) = (r.column(u), r.column(v));
    let mut out = r.apply_unchecked(mp.b.basis_product(u, v));
    vector::sub_assign(&mut out, &mp.a.mul_unchecked(&ru, &rv));
    vector::sub_assign(&mut out, &mp.coact_r.apply_unchecked(&eu, &rv));
    vector::sub_assign(&mut out, &mp.coact_l.apply_unchecked(&ru, &ev));
    let inner = vector::add(&mp.act_l.apply_unchecked(&ru, &ev), &mp.act_r.apply_unchecked(&eu, &rv));
    vector::add_assign(&mut out, &r.apply_unchecked(&inner));
    out
}

/// The deformation identity on all basis pairs of `B`.
pub fn is_deformation(mp: &MatchedPair, r: &LinearMap) -> Result<Verdict> {
    check_r(mp, r)?;
    let m = mp.b.dim();
    for u in 0..m {
        for v in 0..m {
            let d = deformation_defect(mp, r, u, v);
            if !vector::is_zero(&d) {
                return Ok(Verdict::Fail(Witness::new(DEFORMATION, vec![u, v], &d)));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `u ∘_r v = u∘v + r(u)▷v + u◁r(v)` on the space of `B`.
pub fn r_deform(mp: &MatchedPair, r: &LinearMap) -> Result<Algebra> {
    check_r(mp, r)?;
    let f = mp.a.field();
    let m = mp.b.dim();
    let sb = mp.b.space();
    let mut t = BilinearMap::zero(f, sb, sb, sb);
    for u in 0..m {
        for v in 0..m {
            let (eu, ev) = (vector::basis(f, m, u), vector::basis(f, m, v));
            let mut w = mp.b.basis_product(u, v).to_vec();
            vector::add_assign(&mut w, &mp.act_l.apply_unchecked(&r.column(u), &ev));
            vector::add_assign(&mut w, &mp.act_r.apply_unchecked(&eu, &r.column(v)));
            for (k, c) in w.into_iter().enumerate() {
                t.set(u, v, k, c);
            }
        }
    }
    Algebra::new(t)
}

/// `f_r(u) = (r(u), u)` as vectors of `A ⊕ B`.
fn graph_basis(mp: &MatchedPair, r: &LinearMap) -> Vec<Vector> {
    let f = mp.a.field();
    let m = mp.b.dim();
    (0..m)
        .map(|u| {
            let mut g = r.column(u);
            g.extend(vector::basis(f, m, u));
            g
        })
        .collect()
}

/// Whether `Im(f_r)` is closed under the bicrossed product, tested
/// directly: every product `(a, b)` of graph vectors has `a = r(b)`.
pub fn graph_closed(mp: &MatchedPair, r: &LinearMap) -> Result<bool> {
    check_r(mp, r)?;
    let e = bicrossed_product(mp);
    let n = mp.a.dim();
    let g = graph_basis(mp, r);
    Ok(g.iter().all(|x| {
        g.iter().all(|y| {
            let w = e.mul_unchecked(x, y);
            r.apply_unchecked(&w[n..]) == w[..n]
        })
    }))
}

/// `A ∩ Im(f_r) = 0` and `A + Im(f_r) = A ⊕ B`, by a rank count.
pub fn is_complement(mp: &MatchedPair, r: &LinearMap) -> Result<bool> {
    check_r(mp, r)?;
    let f = mp.a.field();
    let (n, m) = (mp.a.dim(), mp.b.dim());
    let mut rows: Vec<_> = (0..n).flat_map(|i| vector::basis(f, n + m, i)).collect();
    rows.extend(graph_basis(mp, r).into_iter().flatten());
    Ok(linear::rank(&rows, n + m, n + m) == n + m)
}

/// Every deformation map, in coordinate order (row-major matrix entries,
/// last fastest).
pub fn enumerate_deformations(mp: &MatchedPair, budget: u128) -> Result<Vec<LinearMap>> {
    let f = mp.a.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let (n, m) = (mp.a.dim(), mp.b.dim());
    let total = pow_count(q, n * m);
    within_budget(total, budget)?;
    let elements = f.elements().expect("finite");
    (0..total)
        .into_par_iter()
        .map(|idx| LinearMap::from_matrix(f, mp.b.space(), mp.a.space(), nth_tuple(&elements, n * m, idx)))
        .filter(|r| r.as_ref().map_or(true, |r| is_deformation(mp, r).is_ok_and(|v| v.is_pass())))
        .collect()
}

/// `σ(u∘v) − σ(u)∘σ(v) − σ(u)◁r′(σ(v)) − r′(σ(u))▷σ(v) + σ(u◁r(v)) + σ(r(u)▷v)`
fn sigma_defect(mp: &MatchedPair, r: &LinearMap, r2: &LinearMap, sigma: &LinearMap, u: usize, v: usize) -> Vector {
    let f = mp.a.field();
    let m = mp.b.dim();
    let (eu, ev) = (vector::basis(f, m, u), vector::basis(f, m, v));
    let (su, sv) = (sigma.column(u), sigma.column(v));
    let mut out = sigma.apply_unchecked(mp.b.basis_product(u, v));
    vector::sub_assign(&mut out, &mp.b.mul_unchecked(&su, &sv));
    vector::sub_assign(&mut out, &mp.act_r.apply_unchecked(&su, &r2.apply_unchecked(&sv)));
    vector::sub_assign(&mut out, &mp.act_l.apply_unchecked(&r2.apply_unchecked(&su), &sv));
    vector::add_assign(&mut out, &sigma.apply_unchecked(&mp.act_r.apply_unchecked(&eu, &r.column(v))));
    vector::add_assign(&mut out, &sigma.apply_unchecked(&mp.act_l.apply_unchecked(&r.column(u), &ev)));
    out
}

/// The equivalence identity for a given automorphism `σ` of `B`.
pub fn sigma_holds(mp: &MatchedPair, r: &LinearMap, r2: &LinearMap, sigma: &LinearMap) -> Result<Verdict> {
    check_r(mp, r)?;
    check_r(mp, r2)?;
    let m = mp.b.dim();
    if (sigma.src().dim(), sigma.dst().dim()) != (m, m) || sigma.rank() != m {
        return Err(Error::dims("σ must be an automorphism of B"));
    }
    for u in 0..m {
        for v in 0..m {
            let d = sigma_defect(mp, r, r2, sigma, u, v);
            if !vector::is_zero(&d) {
                return Ok(Verdict::Fail(Witness::new(SIGMA_EQUIVALENCE, vec![u, v], &d)));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn automorphisms(mp: &MatchedPair, budget: u128) -> Result<Vec<LinearMap>> {
    let f = mp.a.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    within_budget(gl_order(q, mp.b.dim()), budget)?;
    let mut gl = general_linear_group(f, mp.b.space())?;
    let id = LinearMap::identity(f, mp.b.space());
    if let Some(pos) = gl.iter().position(|s| *s == id) {
        gl[..=pos].rotate_right(1);
    }
    Ok(gl)
}

/// First `σ ∈ GL(B)` (identity first) satisfying the equivalence identity.
pub fn deformations_equivalent(
    mp: &MatchedPair,
    r: &LinearMap,
    r2: &LinearMap,
    budget: u128,
) -> Result<Option<LinearMap>> {
    let gl = automorphisms(mp, budget)?;
    Ok(first_sigma(mp, r, r2, &gl))
}

fn first_sigma(mp: &MatchedPair, r: &LinearMap, r2: &LinearMap, gl: &[LinearMap]) -> Option<LinearMap> {
    gl.iter().find(|s| matches!(sigma_holds(mp, r, r2, s), Ok(Verdict::Pass))).cloned()
}

/// `rel[i][j]`: `rs[i] ∼ rs[j]` by the σ search.
pub fn equivalence_matrix(mp: &MatchedPair, rs: &[LinearMap], budget: u128) -> Result<Vec<Vec<bool>>> {
    let gl = automorphisms(mp, budget)?;
    let k = rs.len();
    within_budget((k as u128 * k as u128).saturating_mul(gl.len() as u128), budget)?;
    Ok((0..k)
        .into_par_iter()
        .map(|i| (0..k).map(|j| first_sigma(mp, &rs[i], &rs[j], &gl).is_some()).collect())
        .collect())
}

/// `rel[i][j]`: `B_{rs[i]} ≅ B_{rs[j]}` by an independent isomorphism
/// search.
pub fn isomorphism_matrix(mp: &MatchedPair, rs: &[LinearMap], budget: u128) -> Result<Vec<Vec<bool>>> {
    let algs = rs.iter().map(|r| r_deform(mp, r)).collect::<Result<Vec<_>>>()?;
    let k = rs.len();
    (0..k)
        .into_par_iter()
        .map(|i| (0..k).map(|j| Ok(algs[i].find_isomorphism(&algs[j], budget)?.is_some())).collect())
        .collect()
}

/// Whether `rel` is reflexive, symmetric and transitive.
pub fn is_equivalence_relation(rel: &[Vec<bool>]) -> bool {
    let k = rel.len();
    (0..k).all(|i| rel[i][i])
        && (0..k).all(|i| (0..k).all(|j| rel[i][j] == rel[j][i]))
        && (0..k).all(|i| (0..k).all(|j| !rel[i][j] || (0..k).all(|l| !rel[j][l] || rel[i][l])))
}

/// Classes of a relation as sorted index lists, ordered by least member.
pub fn classes(rel: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let k = rel.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for i in 0..k {
        if seen[i] {
            continue;
        }
        let class: Vec<usize> = (i..k).filter(|&j| !seen[j] && (j == i || rel[i][j])).collect();
        for &j in &class {
            seen[j] = true;
        }
        out.push(class);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationIndex {
    pub deformations: Vec<LinearMap>,
    /// Indices into `deformations`.
    pub classes: Vec<Vec<usize>>,
}

impl FactorizationIndex {
    pub fn index(&self) -> usize {
        self.classes.len()
    }
}

/// Deformation maps modulo σ-equivalence.
pub fn factorization_index(mp: &MatchedPair, budget: u128) -> Result<FactorizationIndex> {
    let deformations = enumerate_deformations(mp, budget)?;
    let rel = equivalence_matrix(mp, &deformations, budget)?;
    Ok(FactorizationIndex { classes: classes(&rel), deformations })
}

pub fn deformation_signature(mp: &MatchedPair, r: &LinearMap) -> Signature {
    let mut sig = matched_signature(mp);
    sig.map("r", Sort::V, Sort::A, r);
    sig
}

/// The deformation identity with the printed condition, advisory.
pub fn deformation_report(mp: &MatchedPair, r: &LinearMap) -> Result<Report> {
    Ok(Report::new(
        "deformation",
        is_deformation(mp, r)?,
        printed::evaluate_all(catalog::DEFORMATION, &deformation_signature(mp, r)),
    ))
}

/// The σ identity with the printed display, advisory.
pub fn sigma_report(mp: &MatchedPair, r: &LinearMap, r2: &LinearMap, sigma: &LinearMap) -> Result<Report> {
    let mut sig = deformation_signature(mp, r);
    sig.map("r'", Sort::V, Sort::A, r2).map("\\sigma", Sort::V, Sort::V, sigma).op(
        "\\cdot",
        Sort::V,
        Sort::V,
        Sort::V,
        mp.b.product(),
    );
    Ok(Report::new(
        "sigma-equivalence",
        sigma_holds(mp, r, r2, sigma)?,
        printed::evaluate_all(catalog::SIGMA_EQUIVALENCE, &sig),
    ))
}

//! Extending datums, the unified product on `A ⊕ V`, extraction of a datum
//! from an ambient algebra, and morphism pairs `(r, s)` between datums.

use rayon::prelude::*;

use crate::algebra::{is_alternative, Algebra, Verdict, Witness};
use crate::bilinear::BilinearMap;
use crate::bimodule::Bimodule;
use crate::blocks::{slice, Block, BlockSum};
use crate::error::{ensure_field, within_budget, Error, Result};
use crate::field::{Field, Scalar};
use crate::linear::{all_linear_maps, general_linear_group, gl_order, pow_count, LinearMap};
use crate::printed::{self, catalog, Signature, Sort};
use crate::report::Report;
use crate::space::{direct_sum_space, Space};
use crate::vector;

/// The six maps of a datum, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumMaps {
    /// `▷: A×V→V`
    pub act_l: BilinearMap,
    /// `◁: V×A→V`
    pub act_r: BilinearMap,
    /// `⊳: A×V→A`
    pub coact_l: BilinearMap,
    /// `⊲: V×A→A`
    pub coact_r: BilinearMap,
    /// `∗: V×V→V`
    pub vmul: BilinearMap,
    /// `ω: V×V→A`
    pub cocycle: BilinearMap,
}

pub const MAP_NAMES: [&str; 6] = ["act_l", "act_r", "coact_l", "coact_r", "vmul", "cocycle"];

/// `(left, right, out)` blocks of each map, in [`MAP_NAMES`] order.
pub const MAP_BLOCKS: [(Block, Block, Block); 6] = [
    (Block::A, Block::V, Block::V),
    (Block::V, Block::A, Block::V),
    (Block::A, Block::V, Block::A),
    (Block::V, Block::A, Block::A),
    (Block::V, Block::V, Block::V),
    (Block::V, Block::V, Block::A),
];

fn block_dim(b: Block, n: usize, m: usize) -> usize {
    match b {
        Block::A => n,
        Block::V => m,
    }
}

/// Number of structure constants of each map for `dim A = n`, `dim V = m`.
pub fn tensor_sizes(n: usize, m: usize) -> [usize; 6] {
    MAP_BLOCKS.map(|(l, r, o)| block_dim(l, n, m) * block_dim(r, n, m) * block_dim(o, n, m))
}

impl DatumMaps {
    pub fn zero(field: Field, a: &Space, v: &Space) -> Self {
        let pick = |b: Block| if b == Block::A { a } else { v };
        let [act_l, act_r, coact_l, coact_r, vmul, cocycle] =
            MAP_BLOCKS.map(|(l, r, o)| BilinearMap::zero(field, pick(l), pick(r), pick(o)));
        DatumMaps { act_l, act_r, coact_l, coact_r, vmul, cocycle }
    }

    pub fn as_array(&self) -> [&BilinearMap; 6] {
        [&self.act_l, &self.act_r, &self.coact_l, &self.coact_r, &self.vmul, &self.cocycle]
    }

    fn into_array(self) -> [BilinearMap; 6] {
        [self.act_l, self.act_r, self.coact_l, self.coact_r, self.vmul, self.cocycle]
    }

    pub fn from_array([act_l, act_r, coact_l, coact_r, vmul, cocycle]: [BilinearMap; 6]) -> Self {
        DatumMaps { act_l, act_r, coact_l, coact_r, vmul, cocycle }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendingDatum {
    alg: Algebra,
    ext: Space,
    maps: DatumMaps,
}

impl ExtendingDatum {
    /// Checks every map's shape against `(A, V)` and relabels it onto them.
    pub fn new(alg: Algebra, ext: Space, maps: DatumMaps) -> Result<Self> {
        let (n, m) = (alg.dim(), ext.dim());
        let a = alg.space().clone();
        let pick = |b: Block| if b == Block::A { &a } else { &ext };
        let mut out = Vec::with_capacity(6);
        for ((map, (l, r, o)), name) in maps.into_array().into_iter().zip(MAP_BLOCKS).zip(MAP_NAMES) {
            let want = (block_dim(l, n, m), block_dim(r, n, m), block_dim(o, n, m));
            if (map.left().dim(), map.right().dim(), map.out().dim()) != want {
                return Err(Error::dims(format!("{name} must have shape {want:?}")));
            }
            ensure_field(alg.field(), map.field())?;
            out.push(map.relabel(pick(l), pick(r), pick(o))?);
        }
        let maps = DatumMaps::from_array(out.try_into().expect("six maps"));
        Ok(ExtendingDatum { alg, ext, maps })
    }

    pub fn zero(alg: Algebra, ext: &Space) -> Self {
        let maps = DatumMaps::zero(alg.field(), alg.space(), ext);
        ExtendingDatum { alg, ext: ext.clone(), maps }
    }

    /// The datum with only `▷, ◁` nonzero.
    pub fn from_bimodule(b: &Bimodule) -> Self {
        let mut d = Self::zero(b.alg().clone(), b.rep());
        d.maps.act_l = b.act_l().clone();
        d.maps.act_r = b.act_r().clone();
        d
    }

    /// `(A, V, ▷, ◁)`.
    pub fn bimodule(&self) -> Bimodule {
        Bimodule::new(self.alg.clone(), self.ext.clone(), self.maps.act_l.clone(), self.maps.act_r.clone())
            .expect("shapes checked at construction")
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn ext(&self) -> &Space {
        &self.ext
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn maps(&self) -> &DatumMaps {
        &self.maps
    }

    pub fn act_l(&self) -> &BilinearMap {
        &self.maps.act_l
    }

    pub fn act_r(&self) -> &BilinearMap {
        &self.maps.act_r
    }

    pub fn coact_l(&self) -> &BilinearMap {
        &self.maps.coact_l
    }

    pub fn coact_r(&self) -> &BilinearMap {
        &self.maps.coact_r
    }

    pub fn vmul(&self) -> &BilinearMap {
        &self.maps.vmul
    }

    pub fn cocycle(&self) -> &BilinearMap {
        &self.maps.cocycle
    }

    /// Dense structure constants of the six maps, concatenated in
    /// [`MAP_NAMES`] order.
    pub fn coords(&self) -> Vec<Scalar> {
        self.maps.as_array().iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    /// Inverse of [`ExtendingDatum::coords`].
    pub fn from_coords(alg: Algebra, ext: &Space, coords: &[Scalar]) -> Result<Self> {
        let (n, m) = (alg.dim(), ext.dim());
        let sizes = tensor_sizes(n, m);
        if coords.len() != sizes.iter().sum::<usize>() {
            return Err(Error::dims(format!(
                "expected {} coordinates, got {}",
                sizes.iter().sum::<usize>(),
                coords.len()
            )));
        }
        let a = alg.space().clone();
        let pick = |b: Block| if b == Block::A { &a } else { ext };
        let mut rest = coords;
        let mut maps = Vec::with_capacity(6);
        for ((l, r, o), size) in MAP_BLOCKS.into_iter().zip(sizes) {
            let (chunk, tail) = rest.split_at(size);
            rest = tail;
            maps.push(BilinearMap::from_dense(alg.field(), pick(l), pick(r), pick(o), chunk.to_vec())?);
        }
        let maps = DatumMaps::from_array(maps.try_into().expect("six maps"));
        Ok(ExtendingDatum { alg, ext: ext.clone(), maps })
    }
}

/// `(x,u)•(y,v) = (x∘y + u⊲y + x⊳v + ω(u,v), u∗v + x▷v + u◁y)` on
/// `direct_sum_space(A, V)`.
pub fn unified_product(d: &ExtendingDatum) -> Algebra {
    let mut s = BlockSum::new(d.field(), d.alg.space(), &d.ext).expect("prefixed labels are unique");
    s.add(Block::A, Block::A, Block::A, d.alg.product());
    for (m, (l, r, o)) in d.maps.as_array().into_iter().zip(MAP_BLOCKS) {
        s.add(l, r, o, m);
    }
    Algebra::new(s.finish()).expect("square tensor")
}

/// Registers the datum's symbols, each operator suffixed with `prime`.
pub(crate) fn add_datum_symbols(sig: &mut Signature, d: &ExtendingDatum, prime: &str) {
    use Sort::{A, V};
    let p = |s: &str| format!("{s}{prime}");
    sig.op(&p("\\circ"), A, A, A, d.alg.product())
        .op(&p("\\cdot"), A, A, A, d.alg.product())
        .op(&p("\\trr"), A, V, V, d.act_l())
        .op(&p("\\trl"), V, A, V, d.act_r())
        .op(&p("\\ppl"), A, V, A, d.coact_l())
        .op(&p("\\ppr"), V, A, A, d.coact_r())
        .op(&p("*"), V, V, V, d.vmul())
        .call2(&p("\\omega"), V, V, A, d.cocycle());
}

pub fn datum_signature(d: &ExtendingDatum) -> Signature {
    let mut sig = Signature::new(d.field(), d.alg.dim(), d.ext.dim());
    add_datum_symbols(&mut sig, d, "");
    sig
}

/// Oracle: the unified product is alternative. The printed list A1–A19 is
/// evaluated alongside, advisory.
pub fn check_datum(d: &ExtendingDatum) -> Report {
    Report::new(
        "datum",
        is_alternative(&unified_product(d)),
        printed::evaluate_all(catalog::UNIFIED, &datum_signature(d)),
    )
}

fn strip_common_prefix(s: &Space, prefix: &str) -> Result<Space> {
    if s.labels().iter().all(|l| l.starts_with(prefix)) {
        s.strip_prefix(prefix)
    } else {
        Ok(s.clone())
    }
}

/// Validates an index set and returns it with its ascending complement.
pub(crate) fn split_indices(dim: usize, sub: &[usize]) -> Result<Vec<usize>> {
    let mut seen = vec![false; dim];
    for &i in sub {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::dims(format!("index {i} repeated")));
        }
    }
    Ok((0..dim).filter(|&i| !seen[i]).collect())
}

/// The permutation `P: E' → E` sending the `j`-th new basis vector to
/// `e_{order[j]}`, with `E'` labelled in the new order.
pub(crate) fn permutation(field: Field, e: &Space, order: &[usize]) -> Result<LinearMap> {
    let src = e.select(order)?;
    let mut p = LinearMap::zero(field, &src, e);
    for (j, &i) in order.iter().enumerate() {
        p.set(i, j, field.one());
    }
    Ok(p)
}

/// Reads a datum off `e` with `A = span(sub)` and `V` the remaining basis
/// vectors, projecting onto `A` along `V`. Also returns the reordering
/// `P: A ⊕ V → E`; the unified product of the datum is `e` in that basis.
pub fn extract_datum(e: &Algebra, sub: &[usize]) -> Result<(ExtendingDatum, LinearMap)> {
    let rest = split_indices(e.dim(), sub)?;
    e.check_closed(sub)?;
    let f = e.field();
    let order: Vec<usize> = sub.iter().chain(&rest).copied().collect();
    let p = permutation(f, e.space(), &order)?;
    let a_space = strip_common_prefix(&e.space().select(sub)?, "A.")?;
    let v_space = strip_common_prefix(&e.space().select(&rest)?, "V.")?;
    let alg = e.restrict(sub)?.relabel(&a_space)?;
    let n = order.len();
    let mut data = Vec::with_capacity(n * n * n);
    for &i in &order {
        for &j in &order {
            let col = e.basis_product(i, j);
            data.extend(order.iter().map(|&k| col[k].clone()));
        }
    }
    let sum = direct_sum_space(&a_space, &v_space)?;
    let t = BilinearMap::from_dense(f, &sum, &sum, &sum, data)?;
    let maps = MAP_BLOCKS.map(|(l, r, o)| slice(&t, &a_space, &v_space, l, r, o));
    let d = ExtendingDatum::new(alg, v_space, DatumMaps::from_array(maps))?;
    Ok((d, p))
}

/// `φ(x, u) = (x + r(u), s(u))` between unified products over the same
/// `(A, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismPair {
    /// `V → A`
    pub r: LinearMap,
    /// `V → V`
    pub s: LinearMap,
}

impl MorphismPair {
    pub fn new(r: LinearMap, s: LinearMap) -> Result<Self> {
        if r.src().dim() != s.src().dim() || s.src().dim() != s.dst().dim() {
            return Err(Error::dims("need r: V→A and s: V→V"));
        }
        ensure_field(r.field(), s.field())?;
        Ok(MorphismPair { r, s })
    }

    /// `(0, id)`
    pub fn identity(d: &ExtendingDatum) -> Self {
        MorphismPair {
            r: LinearMap::zero(d.field(), d.ext(), d.alg.space()),
            s: LinearMap::identity(d.field(), d.ext()),
        }
    }

    /// The block matrix `[[I, R], [0, S]]` on `A ⊕ V`.
    pub fn phi(&self, d: &ExtendingDatum) -> Result<LinearMap> {
        let (n, m) = (d.alg.dim(), d.ext.dim());
        if (self.r.src().dim(), self.r.dst().dim(), self.s.src().dim()) != (m, n, m) {
            return Err(Error::dims("morphism pair does not match the datum"));
        }
        let f = d.field();
        let e = direct_sum_space(d.alg.space(), &d.ext)?;
        let mut phi = LinearMap::zero(f, &e, &e);
        for i in 0..n {
            phi.set(i, i, f.one());
        }
        for j in 0..m {
            for i in 0..n {
                phi.set(i, n + j, self.r.get(i, j).clone());
            }
            for i in 0..m {
                phi.set(n + i, n + j, self.s.get(i, j).clone());
            }
        }
        Ok(phi)
    }

    pub fn is_invertible(&self) -> bool {
        self.s.rank() == self.s.src().dim()
    }

    pub fn is_stabilizing(&self) -> bool {
        self.s == LinearMap::identity(self.s.field(), self.s.src())
    }
}

pub const MORPHISM: &str = "morphism";

/// First basis pair `(i, j)` with `φ(e_i e_j) ≠ φ(e_i)φ(e_j)`.
pub(crate) fn homomorphism_witness(e1: &Algebra, e2: &Algebra, phi: &LinearMap) -> Option<Witness> {
    let n = e1.dim();
    let images: Vec<_> = (0..n).map(|i| phi.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply_unchecked(e1.basis_product(i, j));
            let rhs = e2.mul_unchecked(&images[i], &images[j]);
            let d = vector::sub(&lhs, &rhs);
            if !vector::is_zero(&d) {
                return Some(Witness::new(MORPHISM, vec![i, j], &d));
            }
        }
    }
    None
}

fn same_frame(d: &ExtendingDatum, d2: &ExtendingDatum) -> Result<()> {
    ensure_field(d.field(), d2.field())?;
    if d.alg.product().data() != d2.alg.product().data() || d.ext.dim() != d2.ext.dim() {
        return Err(Error::dims("datums must share A and dim V"));
    }
    Ok(())
}

/// Oracle: `φ` is an algebra map `unified_product(d) → unified_product(d2)`.
pub fn morphism_holds(d: &ExtendingDatum, d2: &ExtendingDatum, m: &MorphismPair) -> Result<Verdict> {
    same_frame(d, d2)?;
    let phi = m.phi(d)?;
    Ok(match homomorphism_witness(&unified_product(d), &unified_product(d2), &phi) {
        None => Verdict::Pass,
        Some(w) => Verdict::Fail(w),
    })
}

pub fn morphism_signature(d: &ExtendingDatum, d2: &ExtendingDatum, m: &MorphismPair) -> Signature {
    let mut sig = datum_signature(d);
    add_datum_symbols(&mut sig, d2, "'");
    sig.map("r", Sort::V, Sort::A, &m.r).map("s", Sort::V, Sort::V, &m.s);
    sig
}

/// The morphism oracle with the printed morphism conditions, advisory.
pub fn morphism_report(d: &ExtendingDatum, d2: &ExtendingDatum, m: &MorphismPair) -> Result<Report> {
    let oracle = morphism_holds(d, d2, m)?;
    let sig = morphism_signature(d, d2, m);
    Ok(Report::new("morphism", oracle, printed::evaluate_all(catalog::MORPHISM, &sig)))
}

fn require(ok: bool, kind: &str) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness { kind: kind.into(), args: Vec::new(), defect: Vec::new() })
    }
}

/// Morphism with `s` invertible, against the printed equivalence list.
pub fn equivalence_report(d: &ExtendingDatum, d2: &ExtendingDatum, m: &MorphismPair) -> Result<Report> {
    let oracle = morphism_holds(d, d2, m)?.and_then(|| require(m.is_invertible(), "s-invertible"));
    let sig = morphism_signature(d, d2, m);
    Ok(Report::new("equivalence", oracle, printed::evaluate_all(catalog::EQUIVALENCE, &sig)))
}

/// Morphism with `s = id`, against the printed cohomology list.
pub fn cohomology_report(d: &ExtendingDatum, d2: &ExtendingDatum, m: &MorphismPair) -> Result<Report> {
    let oracle = morphism_holds(d, d2, m)?.and_then(|| require(m.is_stabilizing(), "s-identity"));
    let sig = morphism_signature(d, d2, m);
    Ok(Report::new("cohomology", oracle, printed::evaluate_all(catalog::COHOMOLOGY, &sig)))
}

/// The datum `d′` making `φ` an isomorphism `A♮_d V → A♮_{d′} V`:
/// `a •′ b = φ(φ⁻¹a • φ⁻¹b)`. Needs `s` invertible.
pub fn transport(d: &ExtendingDatum, m: &MorphismPair) -> Result<ExtendingDatum> {
    let phi = m.phi(d)?;
    let phi_inv = phi.inverse().ok_or_else(|| Error::dims("s must be invertible"))?;
    let moved = unified_product(d).change_basis(&phi_inv)?;
    let sub: Vec<usize> = (0..d.alg.dim()).collect();
    let (mut out, _) = extract_datum(&moved, &sub)?;
    out.alg = d.alg.clone();
    Ok(out)
}

fn search(d: &ExtendingDatum, d2: &ExtendingDatum, ss: Vec<LinearMap>, budget: u128) -> Result<Option<MorphismPair>> {
    same_frame(d, d2)?;
    let f = d.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let (n, m) = (d.alg.dim(), d.ext.dim());
    within_budget(pow_count(q, n * m).saturating_mul(ss.len() as u128), budget)?;
    let rs = all_linear_maps(f, &d.ext, d.alg.space())?;
    let (e1, e2) = (unified_product(d), unified_product(d2));
    let pairs: Vec<(usize, usize)> = (0..ss.len()).flat_map(|i| (0..rs.len()).map(move |j| (i, j))).collect();
    let found = pairs.par_iter().find_first(|&&(i, j)| {
        let pair = MorphismPair { r: rs[j].clone(), s: ss[i].clone() };
        let phi = pair.phi(d).expect("shapes match");
        homomorphism_witness(&e1, &e2, &phi).is_none()
    });
    Ok(found.map(|&(i, j)| MorphismPair { r: rs[j].clone(), s: ss[i].clone() }))
}

/// Exhaustive search for `(r, s)` with `s` invertible and `φ` a morphism
/// `d → d2`; search size `p^(nm)·|GL(V)|`.
pub fn equivalent_datums(d: &ExtendingDatum, d2: &ExtendingDatum, budget: u128) -> Result<Option<MorphismPair>> {
    let q = d.field().order().ok_or(Error::InfiniteField)?;
    let (n, m) = (d.alg.dim(), d.ext.dim());
    within_budget(pow_count(q, n * m).saturating_mul(gl_order(q, m)), budget)?;
    let mut ss = general_linear_group(d.field(), &d.ext)?;
    // Put the identity first so a datum is found equivalent to itself via (0, id).
    let id = LinearMap::identity(d.field(), &d.ext);
    if let Some(pos) = ss.iter().position(|s| *s == id) {
        ss[..=pos].rotate_right(1);
    }
    search(d, d2, ss, budget)
}

/// As [`equivalent_datums`] with `s = id`; search size `p^(nm)`.
pub fn cohomologous_datums(d: &ExtendingDatum, d2: &ExtendingDatum, budget: u128) -> Result<Option<MorphismPair>> {
    search(d, d2, vec![LinearMap::identity(d.field(), &d.ext)], budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{octonions, quaternions};
    use crate::library;

    fn f5() -> Field {
        Field::Prime(5)
    }

    #[test]
    fn zero_datum_is_direct_sum() {
        let a = library::matrix_units(f5(), 2);
        let d = ExtendingDatum::zero(a.clone(), &Space::numbered("u", 2));
        let e = unified_product(&d);
        assert_eq!(e.restrict(&[0, 1, 2, 3]).unwrap().product().data(), a.product().data());
        let r = check_datum(&d);
        assert!(r.is_pass());
        assert!(r.conditions.iter().all(|c| c.outcome.is_pass()), "{:?}", r.conditions);
    }

    #[test]
    fn bimodule_datum_is_semidirect() {
        let b = Bimodule::adjoint(library::dual_numbers(f5()));
        let d = ExtendingDatum::from_bimodule(&b);
        assert_eq!(unified_product(&d).product().data(), crate::bimodule::semidirect(&b).product().data());
    }

    #[test]
    fn octonions_over_quaternions_round_trip() {
        let o = octonions(Field::Rationals);
        let (d, p) = extract_datum(&o, &[0, 1, 2, 3]).unwrap();
        assert_eq!(d.alg().product().data(), quaternions(Field::Rationals).product().data());
        assert_eq!(unified_product(&d).product().data(), o.product().data());
        assert_eq!(p, LinearMap::identity(Field::Rationals, o.space()));
        assert!(check_datum(&d).is_pass());
    }

    #[test]
    fn extraction_with_reordering() {
        let o = octonions(Field::Rationals);
        let sub = [0, 4];
        let (d, p) = extract_datum(&o, &sub).unwrap();
        let reordered = o.change_basis(&p).unwrap();
        assert_eq!(unified_product(&d).product().data(), reordered.product().data());
    }

    #[test]
    fn unclosed_span_is_rejected() {
        let o = octonions(Field::Rationals);
        assert!(matches!(extract_datum(&o, &[1]), Err(Error::NotASubalgebra(1, 1))));
        assert!(matches!(extract_datum(&o, &[9]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn coords_round_trip() {
        let a = library::dual_numbers(f5());
        let v = Space::numbered("u", 1);
        let n: usize = tensor_sizes(2, 1).iter().sum();
        let coords: Vec<_> = (0..n).map(|i| f5().from_i64(i as i64)).collect();
        let d = ExtendingDatum::from_coords(a.clone(), &v, &coords).unwrap();
        assert_eq!(d.coords(), coords);
        assert!(ExtendingDatum::from_coords(a, &v, &coords[1..]).is_err());
    }

    #[test]
    fn identity_morphism_and_transport() {
        let f = f5();
        let a = library::ground(f);
        let v = Space::numbered("u", 1);
        let mut d = ExtendingDatum::zero(a.clone(), &v);
        d.maps.vmul.set(0, 0, 0, f.one());
        let id = MorphismPair::identity(&d);
        assert!(morphism_holds(&d, &d, &id).unwrap().is_pass());
        let m = MorphismPair::new(
            LinearMap::from_matrix(f, &v, a.space(), vec![f.from_i64(2)]).unwrap(),
            LinearMap::from_matrix(f, &v, &v, vec![f.from_i64(3)]).unwrap(),
        )
        .unwrap();
        let d2 = transport(&d, &m).unwrap();
        assert!(morphism_holds(&d, &d2, &m).unwrap().is_pass());
        assert!(equivalence_report(&d, &d2, &m).unwrap().is_pass());
        assert!(!cohomology_report(&d, &d2, &m).unwrap().is_pass());
        let found = equivalent_datums(&d, &d2, 1_000).unwrap().unwrap();
        assert!(morphism_holds(&d, &d2, &found).unwrap().is_pass());
        assert_eq!(equivalent_datums(&d, &d, 1_000).unwrap(), Some(id));
        let zero_s = MorphismPair::new(m.r.clone(), LinearMap::zero(f, &v, &v)).unwrap();
        assert!(!morphism_holds(&d, &d2, &zero_s).unwrap().is_pass());
        assert!(matches!(equivalent_datums(&d, &d2, 3), Err(Error::BudgetExceeded { .. })));
    }
}

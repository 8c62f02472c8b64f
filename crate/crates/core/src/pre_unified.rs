//! Pre-alternative extending datums and the two-product unified product
//! `≪, ≫` on `A ⊕ V`.

use crate::algebra::{alt_of, is_pre_alternative, PreAlgebra};
use crate::bilinear::BilinearMap;
use crate::bimodule::PreBimodule;
use crate::blocks::{slice, Block, BlockSum};
use crate::error::{ensure_field, Error, Result};
use crate::field::{Field, Scalar};
use crate::linear::LinearMap;
use crate::printed::{self, catalog, Signature, Sort};
use crate::report::Report;
use crate::space::{direct_sum_space, Space};
use crate::unified::{permutation, split_indices, DatumMaps, ExtendingDatum};

/// The twelve maps of a pre-alternative datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreDatumMaps {
    /// `x ≺ v: A×V→V`
    pub prec_l: BilinearMap,
    /// `x ≻ v: A×V→V`
    pub succ_l: BilinearMap,
    /// `u ≺ y: V×A→V`
    pub prec_r: BilinearMap,
    /// `u ≻ y: V×A→V`
    pub succ_r: BilinearMap,
    /// `x < v: A×V→A`
    pub lt_l: BilinearMap,
    /// `x > v: A×V→A`
    pub gt_l: BilinearMap,
    /// `u < y: V×A→A`
    pub lt_r: BilinearMap,
    /// `u > y: V×A→A`
    pub gt_r: BilinearMap,
    /// `u < v: V×V→V`
    pub vmul_lt: BilinearMap,
    /// `u > v: V×V→V`
    pub vmul_gt: BilinearMap,
    /// `ω_≺: V×V→A`
    pub cocycle_prec: BilinearMap,
    /// `ω_≻: V×V→A`
    pub cocycle_succ: BilinearMap,
}

pub const PRE_MAP_NAMES: [&str; 12] = [
    "prec_l",
    "succ_l",
    "prec_r",
    "succ_r",
    "lt_l",
    "gt_l",
    "lt_r",
    "gt_r",
    "vmul_lt",
    "vmul_gt",
    "cocycle_prec",
    "cocycle_succ",
];

pub const PRE_MAP_BLOCKS: [(Block, Block, Block); 12] = {
    use Block::{A, V};
    [
        (A, V, V),
        (A, V, V),
        (V, A, V),
        (V, A, V),
        (A, V, A),
        (A, V, A),
        (V, A, A),
        (V, A, A),
        (V, V, V),
        (V, V, V),
        (V, V, A),
        (V, V, A),
    ]
};

/// Which of the two products each map feeds, `true` for `≪`.
const FEEDS_LL: [bool; 12] = [true, false, true, false, true, false, true, false, true, false, true, false];

impl PreDatumMaps {
    pub fn zero(field: Field, a: &Space, v: &Space) -> Self {
        let pick = |b: Block| if b == Block::A { a } else { v };
        Self::from_array(PRE_MAP_BLOCKS.map(|(l, r, o)| BilinearMap::zero(field, pick(l), pick(r), pick(o))))
    }

    pub fn as_array(&self) -> [&BilinearMap; 12] {
        [
            &self.prec_l,
            &self.succ_l,
            &self.prec_r,
            &self.succ_r,
            &self.lt_l,
            &self.gt_l,
            &self.lt_r,
            &self.gt_r,
            &self.vmul_lt,
            &self.vmul_gt,
            &self.cocycle_prec,
            &self.cocycle_succ,
        ]
    }

    fn into_array(self) -> [BilinearMap; 12] {
        [
            self.prec_l,
            self.succ_l,
            self.prec_r,
            self.succ_r,
            self.lt_l,
            self.gt_l,
            self.lt_r,
            self.gt_r,
            self.vmul_lt,
            self.vmul_gt,
            self.cocycle_prec,
            self.cocycle_succ,
        ]
    }

    pub fn from_array(
        [prec_l, succ_l, prec_r, succ_r, lt_l, gt_l, lt_r, gt_r, vmul_lt, vmul_gt, cocycle_prec, cocycle_succ]: [BilinearMap;
            12],
    ) -> Self {
        PreDatumMaps {
            prec_l,
            succ_l,
            prec_r,
            succ_r,
            lt_l,
            gt_l,
            lt_r,
            gt_r,
            vmul_lt,
            vmul_gt,
            cocycle_prec,
            cocycle_succ,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreExtendingDatum {
    prealg: PreAlgebra,
    ext: Space,
    maps: PreDatumMaps,
}

fn block_dim(b: Block, n: usize, m: usize) -> usize {
    if b == Block::A {
        n
    } else {
        m
    }
}

impl PreExtendingDatum {
    pub fn new(prealg: PreAlgebra, ext: Space, maps: PreDatumMaps) -> Result<Self> {
        let (n, m) = (prealg.dim(), ext.dim());
        let a = prealg.space().clone();
        let pick = |b: Block| if b == Block::A { &a } else { &ext };
        let mut out = Vec::with_capacity(12);
        for ((map, (l, r, o)), name) in maps.into_array().into_iter().zip(PRE_MAP_BLOCKS).zip(PRE_MAP_NAMES) {
            let want = (block_dim(l, n, m), block_dim(r, n, m), block_dim(o, n, m));
            if (map.left().dim(), map.right().dim(), map.out().dim()) != want {
                return Err(Error::dims(format!("{name} must have shape {want:?}")));
            }
            ensure_field(prealg.field(), map.field())?;
            out.push(map.relabel(pick(l), pick(r), pick(o))?);
        }
        let maps = PreDatumMaps::from_array(out.try_into().expect("twelve maps"));
        Ok(PreExtendingDatum { prealg, ext, maps })
    }

    pub fn zero(prealg: PreAlgebra, ext: &Space) -> Self {
        let maps = PreDatumMaps::zero(prealg.field(), prealg.space(), ext);
        PreExtendingDatum { prealg, ext: ext.clone(), maps }
    }

    /// The datum with only the four actions nonzero.
    pub fn from_pre_bimodule(b: &PreBimodule) -> Self {
        let mut d = Self::zero(b.prealg().clone(), b.rep());
        d.maps.prec_l = b.prec_l().clone();
        d.maps.succ_l = b.succ_l().clone();
        d.maps.prec_r = b.prec_r().clone();
        d.maps.succ_r = b.succ_r().clone();
        d
    }

    pub fn prealg(&self) -> &PreAlgebra {
        &self.prealg
    }

    pub fn ext(&self) -> &Space {
        &self.ext
    }

    pub fn field(&self) -> Field {
        self.prealg.field()
    }

    pub fn maps(&self) -> &PreDatumMaps {
        &self.maps
    }

    pub fn maps_mut(&mut self) -> &mut PreDatumMaps {
        &mut self.maps
    }

    /// Dense structure constants of the twelve maps in [`PRE_MAP_NAMES`]
    /// order.
    pub fn coords(&self) -> Vec<Scalar> {
        self.maps.as_array().iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn from_coords(prealg: PreAlgebra, ext: &Space, coords: &[Scalar]) -> Result<Self> {
        let (n, m) = (prealg.dim(), ext.dim());
        let a = prealg.space().clone();
        let pick = |b: Block| if b == Block::A { &a } else { ext };
        let total: usize =
            PRE_MAP_BLOCKS.iter().map(|&(l, r, o)| block_dim(l, n, m) * block_dim(r, n, m) * block_dim(o, n, m)).sum();
        if coords.len() != total {
            return Err(Error::dims(format!("expected {total} coordinates, got {}", coords.len())));
        }
        let mut rest = coords;
        let mut maps = Vec::with_capacity(12);
        for (l, r, o) in PRE_MAP_BLOCKS {
            let size = block_dim(l, n, m) * block_dim(r, n, m) * block_dim(o, n, m);
            let (chunk, tail) = rest.split_at(size);
            rest = tail;
            maps.push(BilinearMap::from_dense(prealg.field(), pick(l), pick(r), pick(o), chunk.to_vec())?);
        }
        let maps = PreDatumMaps::from_array(maps.try_into().expect("twelve maps"));
        Ok(PreExtendingDatum { prealg, ext: ext.clone(), maps })
    }
}

/// `(x,u) ≪ (y,v) = (x≺y + x<v + u<y + ω_≺(u,v), u<v + x≺v + u≺y)` and the
/// `≫` twin with `≻, >, ω_≻`.
pub fn pre_unified_product(d: &PreExtendingDatum) -> PreAlgebra {
    let f = d.field();
    let a = d.prealg.space();
    let mut ll = BlockSum::new(f, a, &d.ext).expect("prefixed labels are unique");
    let mut gg = BlockSum::new(f, a, &d.ext).expect("prefixed labels are unique");
    ll.add(Block::A, Block::A, Block::A, d.prealg.prec());
    gg.add(Block::A, Block::A, Block::A, d.prealg.succ());
    for ((m, (l, r, o)), to_ll) in d.maps.as_array().into_iter().zip(PRE_MAP_BLOCKS).zip(FEEDS_LL) {
        if to_ll {
            ll.add(l, r, o, m);
        } else {
            gg.add(l, r, o, m);
        }
    }
    PreAlgebra::new(ll.finish(), gg.finish()).expect("square tensors")
}

fn sum(a: &BilinearMap, b: &BilinearMap) -> BilinearMap {
    a.add(b).expect("same shape")
}

/// The datum of `Alt(A)` obtained by summing `≺+≻`, `<+>` and `ω_≺+ω_≻`.
pub fn alt_collapse(d: &PreExtendingDatum) -> ExtendingDatum {
    let m = &d.maps;
    ExtendingDatum::new(
        alt_of(&d.prealg),
        d.ext.clone(),
        DatumMaps {
            act_l: sum(&m.prec_l, &m.succ_l),
            act_r: sum(&m.prec_r, &m.succ_r),
            coact_l: sum(&m.lt_l, &m.gt_l),
            coact_r: sum(&m.lt_r, &m.gt_r),
            vmul: sum(&m.vmul_lt, &m.vmul_gt),
            cocycle: sum(&m.cocycle_prec, &m.cocycle_succ),
        },
    )
    .expect("shapes preserved")
}

/// `≺, ≻, <, >` by argument sorts; `∘ = ≺+≻` and `⋄ = <+>` on mixed sorts;
/// `ω_< = ω_≺`, `ω_> = ω_≻`, `ω_⋄` their sum.
pub(crate) fn add_pre_symbols(sig: &mut Signature, d: &PreExtendingDatum) {
    use Sort::{A, V};
    let (p, m) = (&d.prealg, &d.maps);
    sig.op("\\prec", A, A, A, p.prec())
        .op("\\succ", A, A, A, p.succ())
        .op_sum("\\circ", A, A, A, &[p.prec(), p.succ()])
        .op("\\prec", A, V, V, &m.prec_l)
        .op("\\succ", A, V, V, &m.succ_l)
        .op("\\prec", V, A, V, &m.prec_r)
        .op("\\succ", V, A, V, &m.succ_r)
        .op_sum("\\circ", A, V, V, &[&m.prec_l, &m.succ_l])
        .op_sum("\\circ", V, A, V, &[&m.prec_r, &m.succ_r])
        .op("<", A, V, A, &m.lt_l)
        .op(">", A, V, A, &m.gt_l)
        .op("<", V, A, A, &m.lt_r)
        .op(">", V, A, A, &m.gt_r)
        .op("<", V, V, V, &m.vmul_lt)
        .op(">", V, V, V, &m.vmul_gt)
        .op_sum("\\diamond", A, V, A, &[&m.lt_l, &m.gt_l])
        .op_sum("\\diamond", V, A, A, &[&m.lt_r, &m.gt_r])
        .op_sum("\\diamond", V, V, V, &[&m.vmul_lt, &m.vmul_gt]);
    for name in ["\\omega_\\prec", "\\omega_<"] {
        sig.call2(name, V, V, A, &m.cocycle_prec);
    }
    for name in ["\\omega_\\succ", "\\omega_>"] {
        sig.call2(name, V, V, A, &m.cocycle_succ);
    }
    sig.call2("\\omega_\\diamond", V, V, A, &sum(&m.cocycle_prec, &m.cocycle_succ));
}

pub fn pre_datum_signature(d: &PreExtendingDatum) -> Signature {
    let mut sig = Signature::new(d.field(), d.prealg.dim(), d.ext.dim());
    add_pre_symbols(&mut sig, d);
    sig
}

/// Oracle: the pre-unified product is pre-alternative. The printed list
/// is evaluated alongside, advisory.
pub fn check_pre_datum(d: &PreExtendingDatum) -> Report {
    Report::new(
        "predatum",
        is_pre_alternative(&pre_unified_product(d)),
        printed::evaluate_all(catalog::PRE_UNIFIED, &pre_datum_signature(d)),
    )
}

fn strip_common_prefix(s: &Space, prefix: &str) -> Result<Space> {
    if s.labels().iter().all(|l| l.starts_with(prefix)) {
        s.strip_prefix(prefix)
    } else {
        Ok(s.clone())
    }
}

/// As [`crate::unified::extract_datum`] for both products at once.
pub fn extract_pre_datum(e: &PreAlgebra, sub: &[usize]) -> Result<(PreExtendingDatum, LinearMap)> {
    let rest = split_indices(e.dim(), sub)?;
    e.check_closed(sub)?;
    let f = e.field();
    let order: Vec<usize> = sub.iter().chain(&rest).copied().collect();
    let p = permutation(f, e.space(), &order)?;
    let a_space = strip_common_prefix(&e.space().select(sub)?, "A.")?;
    let v_space = strip_common_prefix(&e.space().select(&rest)?, "V.")?;
    let prealg = e.restrict(sub)?.relabel(&a_space)?;
    let sum_space = direct_sum_space(&a_space, &v_space)?;
    let reorder = |m: &BilinearMap| -> Result<BilinearMap> {
        let mut data = Vec::with_capacity(order.len().pow(3));
        for &i in &order {
            for &j in &order {
                let col = m.column(i, j);
                data.extend(order.iter().map(|&k| col[k].clone()));
            }
        }
        BilinearMap::from_dense(f, &sum_space, &sum_space, &sum_space, data)
    };
    let (ll, gg) = (reorder(e.prec())?, reorder(e.succ())?);
    let mut maps = Vec::with_capacity(12);
    for ((l, r, o), to_ll) in PRE_MAP_BLOCKS.into_iter().zip(FEEDS_LL) {
        maps.push(slice(if to_ll { &ll } else { &gg }, &a_space, &v_space, l, r, o));
    }
    let maps = PreDatumMaps::from_array(maps.try_into().expect("twelve maps"));
    Ok((PreExtendingDatum::new(prealg, v_space, maps)?, p))
}

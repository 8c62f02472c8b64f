//! Crossed products and bicrossed products of alternative algebras, and
//! bicrossed products of pre-alternative algebras.

use crate::algebra::{alt_of, is_alternative, is_pre_alternative, Algebra, PreAlgebra};
use crate::bilinear::BilinearMap;
use crate::blocks::{Block, BlockSum};
use crate::error::{ensure_field, Error, Result};
use crate::pre_unified::{add_pre_symbols, extract_pre_datum, PreDatumMaps, PreExtendingDatum};
use crate::printed::{self, catalog, Signature, Sort};
use crate::report::Report;
use crate::unified::{datum_signature, extract_datum, split_indices, DatumMaps, ExtendingDatum};

fn check_shape(m: &BilinearMap, want: (usize, usize, usize), name: &str) -> Result<()> {
    if (m.left().dim(), m.right().dim(), m.out().dim()) != want {
        return Err(Error::dims(format!("{name} must have shape {want:?}")));
    }
    Ok(())
}

/// `(x,u)(y,v) = (x∘y + u⊲y + x⊳v + ω(u,v), u∗v)` on `A ⊕ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    pub a: Algebra,
    pub b: Algebra,
    /// `⊲: B×A→A`
    pub coact_r: BilinearMap,
    /// `⊳: A×B→A`
    pub coact_l: BilinearMap,
    /// `ω: B×B→A`
    pub cocycle: BilinearMap,
}

impl CrossedSystem {
    pub fn new(
        a: Algebra,
        b: Algebra,
        coact_r: BilinearMap,
        coact_l: BilinearMap,
        cocycle: BilinearMap,
    ) -> Result<Self> {
        let (n, m) = (a.dim(), b.dim());
        check_shape(&coact_r, (m, n, n), "coact_r")?;
        check_shape(&coact_l, (n, m, n), "coact_l")?;
        check_shape(&cocycle, (m, m, n), "cocycle")?;
        for t in [&coact_r, &coact_l, &cocycle] {
            ensure_field(a.field(), t.field())?;
        }
        ensure_field(a.field(), b.field())?;
        Ok(CrossedSystem { a, b, coact_r, coact_l, cocycle })
    }

    pub fn zero(a: Algebra, b: Algebra) -> Self {
        let f = a.field();
        let (sa, sb) = (a.space().clone(), b.space().clone());
        CrossedSystem {
            coact_r: BilinearMap::zero(f, &sb, &sa, &sa),
            coact_l: BilinearMap::zero(f, &sa, &sb, &sa),
            cocycle: BilinearMap::zero(f, &sb, &sb, &sa),
            a,
            b,
        }
    }

    /// The datum with `▷ = ◁ = 0` and `∗` the product of `B`.
    pub fn embed(&self) -> ExtendingDatum {
        let mut maps = DatumMaps::zero(self.a.field(), self.a.space(), self.b.space());
        maps.coact_r = self.coact_r.clone();
        maps.coact_l = self.coact_l.clone();
        maps.cocycle = self.cocycle.clone();
        maps.vmul = self.b.product().clone();
        ExtendingDatum::new(self.a.clone(), self.b.space().clone(), maps).expect("shapes checked")
    }
}

pub fn crossed_product(c: &CrossedSystem) -> Algebra {
    let mut s = BlockSum::new(c.a.field(), c.a.space(), c.b.space()).expect("prefixed labels are unique");
    s.add(Block::A, Block::A, Block::A, c.a.product())
        .add(Block::V, Block::A, Block::A, &c.coact_r)
        .add(Block::A, Block::V, Block::A, &c.coact_l)
        .add(Block::V, Block::V, Block::A, &c.cocycle)
        .add(Block::V, Block::V, Block::V, c.b.product());
    Algebra::new(s.finish()).expect("square tensor")
}

/// Oracle: the crossed product is alternative. `A` is closed by block
/// structure; `B` is closed only when `ω = 0`, so it is not asserted.
pub fn check_crossed(c: &CrossedSystem) -> Report {
    let e = crossed_product(c);
    debug_assert!(e.check_closed(&(0..c.a.dim()).collect::<Vec<_>>()).is_ok());
    Report::new("crossed", is_alternative(&e), printed::evaluate_all(catalog::CROSSED, &datum_signature(&c.embed())))
}

/// `(x,u)(y,v) = (x∘y + u⊲y + x⊳v, u∗v + x▷v + u◁y)` on `A ⊕ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub a: Algebra,
    pub b: Algebra,
    /// `▷: A×B→B`
    pub act_l: BilinearMap,
    /// `◁: B×A→B`
    pub act_r: BilinearMap,
    /// `⊲: B×A→A`
    pub coact_r: BilinearMap,
    /// `⊳: A×B→A`
    pub coact_l: BilinearMap,
}

impl MatchedPair {
    pub fn new(
        a: Algebra,
        b: Algebra,
        act_l: BilinearMap,
        act_r: BilinearMap,
        coact_r: BilinearMap,
        coact_l: BilinearMap,
    ) -> Result<Self> {
        let (n, m) = (a.dim(), b.dim());
        check_shape(&act_l, (n, m, m), "act_l")?;
        check_shape(&act_r, (m, n, m), "act_r")?;
        check_shape(&coact_r, (m, n, n), "coact_r")?;
        check_shape(&coact_l, (n, m, n), "coact_l")?;
        for t in [&act_l, &act_r, &coact_r, &coact_l] {
            ensure_field(a.field(), t.field())?;
        }
        ensure_field(a.field(), b.field())?;
        let (sa, sb) = (a.space().clone(), b.space().clone());
        Ok(MatchedPair {
            act_l: act_l.relabel(&sa, &sb, &sb)?,
            act_r: act_r.relabel(&sb, &sa, &sb)?,
            coact_r: coact_r.relabel(&sb, &sa, &sa)?,
            coact_l: coact_l.relabel(&sa, &sb, &sa)?,
            a,
            b,
        })
    }

    pub fn zero(a: Algebra, b: Algebra) -> Self {
        let f = a.field();
        let (sa, sb) = (a.space().clone(), b.space().clone());
        MatchedPair {
            act_l: BilinearMap::zero(f, &sa, &sb, &sb),
            act_r: BilinearMap::zero(f, &sb, &sa, &sb),
            coact_r: BilinearMap::zero(f, &sb, &sa, &sa),
            coact_l: BilinearMap::zero(f, &sa, &sb, &sa),
            a,
            b,
        }
    }

    /// The datum with `ω = 0` and `∗` the product of `B`.
    pub fn embed(&self) -> ExtendingDatum {
        ExtendingDatum::new(
            self.a.clone(),
            self.b.space().clone(),
            DatumMaps {
                act_l: self.act_l.clone(),
                act_r: self.act_r.clone(),
                coact_l: self.coact_l.clone(),
                coact_r: self.coact_r.clone(),
                vmul: self.b.product().clone(),
                cocycle: BilinearMap::zero(self.a.field(), self.b.space(), self.b.space(), self.a.space()),
            },
        )
        .expect("shapes checked")
    }
}

pub fn bicrossed_product(m: &MatchedPair) -> Algebra {
    let mut s = BlockSum::new(m.a.field(), m.a.space(), m.b.space()).expect("prefixed labels are unique");
    s.add(Block::A, Block::A, Block::A, m.a.product())
        .add(Block::V, Block::A, Block::A, &m.coact_r)
        .add(Block::A, Block::V, Block::A, &m.coact_l)
        .add(Block::V, Block::V, Block::V, m.b.product())
        .add(Block::A, Block::V, Block::V, &m.act_l)
        .add(Block::V, Block::A, Block::V, &m.act_r);
    Algebra::new(s.finish()).expect("square tensor")
}

/// The datum symbols with `∘` also naming the product of `B`.
pub fn matched_signature(m: &MatchedPair) -> Signature {
    let mut sig = datum_signature(&m.embed());
    sig.op("\\circ", Sort::V, Sort::V, Sort::V, m.b.product());
    sig
}

/// Oracle: the bicrossed product is alternative.
pub fn check_matched(m: &MatchedPair) -> Report {
    Report::new(
        "matched",
        is_alternative(&bicrossed_product(m)),
        printed::evaluate_all(catalog::MATCHED, &matched_signature(m)),
    )
}

/// The matched pair of `e = span(sub) ⊕ span(rest)` when both spans are
/// subalgebras.
pub fn extract_matched(e: &Algebra, sub: &[usize]) -> Result<MatchedPair> {
    let rest = split_indices(e.dim(), sub)?;
    e.check_closed(&rest)?;
    let (d, _) = extract_datum(e, sub)?;
    debug_assert!(d.cocycle().is_zero());
    let b = Algebra::new(d.vmul().clone())?;
    MatchedPair::new(d.alg().clone(), b, d.act_l().clone(), d.act_r().clone(), d.coact_r().clone(), d.coact_l().clone())
}

/// Two pre-alternative algebras with the eight cross maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreMatchedPair {
    pub a: PreAlgebra,
    pub b: PreAlgebra,
    /// `x ≺ v, x ≻ v: A×B→B`
    pub prec_l: BilinearMap,
    pub succ_l: BilinearMap,
    /// `u ≺ y, u ≻ y: B×A→B`
    pub prec_r: BilinearMap,
    pub succ_r: BilinearMap,
    /// `x < v, x > v: A×B→A`
    pub lt_l: BilinearMap,
    pub gt_l: BilinearMap,
    /// `u < y, u > y: B×A→A`
    pub lt_r: BilinearMap,
    pub gt_r: BilinearMap,
}

impl PreMatchedPair {
    pub fn zero(a: PreAlgebra, b: PreAlgebra) -> Self {
        let f = a.field();
        let (sa, sb) = (a.space().clone(), b.space().clone());
        let ab_b = BilinearMap::zero(f, &sa, &sb, &sb);
        let ba_b = BilinearMap::zero(f, &sb, &sa, &sb);
        let ab_a = BilinearMap::zero(f, &sa, &sb, &sa);
        let ba_a = BilinearMap::zero(f, &sb, &sa, &sa);
        PreMatchedPair {
            prec_l: ab_b.clone(),
            succ_l: ab_b,
            prec_r: ba_b.clone(),
            succ_r: ba_b,
            lt_l: ab_a.clone(),
            gt_l: ab_a,
            lt_r: ba_a.clone(),
            gt_r: ba_a,
            a,
            b,
        }
    }

    /// The pre-datum with `<, >` on `B` its two products and `ω = 0`.
    pub fn embed(&self) -> Result<PreExtendingDatum> {
        let f = self.a.field();
        let (sa, sb) = (self.a.space(), self.b.space());
        let zero_w = BilinearMap::zero(f, sb, sb, sa);
        PreExtendingDatum::new(
            self.a.clone(),
            sb.clone(),
            PreDatumMaps {
                prec_l: self.prec_l.clone(),
                succ_l: self.succ_l.clone(),
                prec_r: self.prec_r.clone(),
                succ_r: self.succ_r.clone(),
                lt_l: self.lt_l.clone(),
                gt_l: self.gt_l.clone(),
                lt_r: self.lt_r.clone(),
                gt_r: self.gt_r.clone(),
                vmul_lt: self.b.prec().clone(),
                vmul_gt: self.b.succ().clone(),
                cocycle_prec: zero_w.clone(),
                cocycle_succ: zero_w,
            },
        )
    }

    /// The alternative matched pair of the summed maps over `Alt(A)`,
    /// `Alt(B)`.
    pub fn alt_collapse(&self) -> Result<MatchedPair> {
        MatchedPair::new(
            alt_of(&self.a),
            alt_of(&self.b),
            self.prec_l.add(&self.succ_l)?,
            self.prec_r.add(&self.succ_r)?,
            self.lt_r.add(&self.gt_r)?,
            self.lt_l.add(&self.gt_l)?,
        )
    }
}

/// `≪`: `(x≺y + x<v + u<y, u≺v + x≺v + u≺y)` and `≫` with `≻, >`.
pub fn pre_bicrossed_product(pm: &PreMatchedPair) -> PreAlgebra {
    let f = pm.a.field();
    let build =
        |aa: &BilinearMap, bb: &BilinearMap, l: &BilinearMap, r: &BilinearMap, cl: &BilinearMap, cr: &BilinearMap| {
            let mut s = BlockSum::new(f, pm.a.space(), pm.b.space()).expect("prefixed labels are unique");
            s.add(Block::A, Block::A, Block::A, aa)
                .add(Block::V, Block::V, Block::V, bb)
                .add(Block::A, Block::V, Block::V, l)
                .add(Block::V, Block::A, Block::V, r)
                .add(Block::A, Block::V, Block::A, cl)
                .add(Block::V, Block::A, Block::A, cr);
            s.finish()
        };
    PreAlgebra::new(
        build(pm.a.prec(), pm.b.prec(), &pm.prec_l, &pm.prec_r, &pm.lt_l, &pm.lt_r),
        build(pm.a.succ(), pm.b.succ(), &pm.succ_l, &pm.succ_r, &pm.gt_l, &pm.gt_r),
    )
    .expect("square tensors")
}

/// The pre-datum symbols with `≺, ≻, ∘` also naming the products of `B`.
pub fn pre_matched_signature(pm: &PreMatchedPair) -> Result<Signature> {
    use Sort::V;
    let d = pm.embed()?;
    let mut sig = Signature::new(pm.a.field(), pm.a.dim(), pm.b.dim());
    add_pre_symbols(&mut sig, &d);
    sig.op("\\prec", V, V, V, pm.b.prec()).op("\\succ", V, V, V, pm.b.succ()).op_sum(
        "\\circ",
        V,
        V,
        V,
        &[pm.b.prec(), pm.b.succ()],
    );
    Ok(sig)
}

/// Oracle: the pre-bicrossed product is pre-alternative.
pub fn check_pre_matched(pm: &PreMatchedPair) -> Result<Report> {
    let sig = pre_matched_signature(pm)?;
    Ok(Report::new(
        "prematched",
        is_pre_alternative(&pre_bicrossed_product(pm)),
        printed::evaluate_all(catalog::PRE_MATCHED, &sig),
    ))
}

/// The pre-matched pair of `e = span(sub) ⊕ span(rest)` when both spans
/// are closed under both products.
pub fn extract_pre_matched(e: &PreAlgebra, sub: &[usize]) -> Result<PreMatchedPair> {
    let rest = split_indices(e.dim(), sub)?;
    e.check_closed(&rest)?;
    let (d, _) = extract_pre_datum(e, sub)?;
    let m = d.maps();
    let b = PreAlgebra::new(m.vmul_lt.clone(), m.vmul_gt.clone())?;
    Ok(PreMatchedPair {
        prec_l: m.prec_l.clone(),
        succ_l: m.succ_l.clone(),
        prec_r: m.prec_r.clone(),
        succ_r: m.succ_r.clone(),
        lt_l: m.lt_l.clone(),
        gt_l: m.gt_l.clone(),
        lt_r: m.lt_r.clone(),
        gt_r: m.gt_r.clone(),
        a: d.prealg().clone(),
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::octonions;
    use crate::field::Field;
    use crate::library;
    use crate::pre_unified::pre_unified_product;
    use crate::space::Space;
    use crate::unified::unified_product;

    fn f5() -> Field {
        Field::Prime(5)
    }

    #[test]
    fn zero_crossed_is_direct_product() {
        let c = CrossedSystem::zero(library::dual_numbers(f5()), library::ground(f5()));
        let e = crossed_product(&c);
        let direct = c.a.direct_product(&c.b).unwrap();
        assert_eq!(e.product().data(), direct.product().data());
        assert_eq!(e.product().data(), unified_product(&c.embed()).product().data());
        assert!(check_crossed(&c).is_pass());
    }

    #[test]
    fn zero_matched_pair_passes() {
        let m = MatchedPair::zero(library::matrix_units(f5(), 2), library::ground(f5()));
        let r = check_matched(&m);
        assert!(r.is_pass());
        assert!(r.condition("matched-7").unwrap().is_skipped());
        assert!(r.discrepancies().is_empty(), "{:?}", r.discrepancies());
    }

    #[test]
    fn octonions_factor_over_complementary_blocks() {
        // The complement of the quaternions in the octonions is not closed.
        let o = octonions(Field::Rationals);
        assert!(extract_matched(&o, &[0, 1, 2, 3]).is_err());
        let e = library::dual_numbers(f5()).direct_product(&library::ground(f5())).unwrap();
        let m = extract_matched(&e, &[0, 1]).unwrap();
        assert_eq!(bicrossed_product(&m).product().data(), e.product().data());
        assert!(check_matched(&m).is_pass());
    }

    #[test]
    fn pre_matched_zero_and_collapse() {
        let a = PreAlgebra::zero(f5(), &Space::numbered("e", 1));
        let b = PreAlgebra::zero(f5(), &Space::numbered("f", 1));
        let mut pm = PreMatchedPair::zero(a, b);
        pm.gt_r.set(0, 0, 0, f5().one());
        pm.prec_l.set(0, 0, 0, f5().from_i64(2));
        let pre = pre_bicrossed_product(&pm);
        assert_eq!(pre.prec().data(), pre_unified_product(&pm.embed().unwrap()).prec().data());
        let alt = bicrossed_product(&pm.alt_collapse().unwrap());
        assert_eq!(alt_of(&pre).product().data(), alt.product().data());
        let back = extract_pre_matched(&pre, &[0]).unwrap();
        assert_eq!(pre_bicrossed_product(&back).succ().data(), pre.succ().data());
        check_pre_matched(&pm).unwrap();
    }
}

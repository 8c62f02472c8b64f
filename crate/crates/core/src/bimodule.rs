//! Bimodules over alternative and pre-alternative algebras and their
//! semidirect products.

use crate::algebra::{alt_of, is_alternative, is_pre_alternative, Algebra, PreAlgebra, Verdict, Witness};
use crate::bilinear::BilinearMap;
use crate::blocks::{Block, BlockSum};
use crate::error::{ensure_field, Error, Result};
use crate::printed::{self, catalog, Signature, Sort};
use crate::report::Report;
use crate::space::Space;
use crate::vector::{self, Vector};

/// Identities checked by [`is_bimodule`], each with args `[x, y, v]`:
///
/// 1. `(x∘y)▷v − x▷(y▷v) + (y∘x)▷v − y▷(x▷v)`
/// 2. `(v◁x)◁y − v◁(x∘y) + (v◁y)◁x − v◁(y∘x)`
/// 3. `(x▷v)◁y − x▷(v◁y) + (v◁x)◁y − v◁(x∘y)`
/// 4. `(x∘y)▷v − x▷(y▷v) + (x▷v)◁y − x▷(v◁y)`
pub const BIMODULE_IDENTITIES: [&str; 4] = ["bimodule-1", "bimodule-2", "bimodule-3", "bimodule-4"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    alg: Algebra,
    rep: Space,
    act_l: BilinearMap,
    act_r: BilinearMap,
}

impl Bimodule {
    /// `act_l` is `▷: A×V→V`, `act_r` is `◁: V×A→V`.
    pub fn new(alg: Algebra, rep: Space, act_l: BilinearMap, act_r: BilinearMap) -> Result<Self> {
        let (n, m) = (alg.dim(), rep.dim());
        if (act_l.left().dim(), act_l.right().dim(), act_l.out().dim()) != (n, m, m)
            || (act_r.left().dim(), act_r.right().dim(), act_r.out().dim()) != (m, n, m)
        {
            return Err(Error::dims("bimodule actions must be A×V→V and V×A→V"));
        }
        ensure_field(alg.field(), act_l.field())?;
        ensure_field(alg.field(), act_r.field())?;
        let a = alg.space().clone();
        let act_l = act_l.relabel(&a, &rep, &rep)?;
        let act_r = act_r.relabel(&rep, &a, &rep)?;
        Ok(Bimodule { alg, rep, act_l, act_r })
    }

    pub fn zero(alg: Algebra, rep: &Space) -> Self {
        let f = alg.field();
        let a = alg.space().clone();
        Bimodule {
            act_l: BilinearMap::zero(f, &a, rep, rep),
            act_r: BilinearMap::zero(f, rep, &a, rep),
            rep: rep.clone(),
            alg,
        }
    }

    /// `A` acting on itself by left and right multiplication.
    pub fn adjoint(alg: Algebra) -> Self {
        let m = alg.product().clone();
        let rep = alg.space().clone();
        Bimodule { act_l: m.clone(), act_r: m, rep, alg }
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn rep(&self) -> &Space {
        &self.rep
    }

    /// `▷`
    pub fn act_l(&self) -> &BilinearMap {
        &self.act_l
    }

    /// `◁`
    pub fn act_r(&self) -> &BilinearMap {
        &self.act_r
    }
}

fn bimodule_values(b: &Bimodule, x: usize, y: usize, v: usize) -> [Vector; 4] {
    let f = b.alg.field();
    let (m, l, r) = (b.alg.product(), &b.act_l, &b.act_r);
    let ev = vector::basis(f, b.rep.dim(), v);
    let xy = m.column(x, y);
    let yx = m.column(y, x);
    let y_v = l.apply_left_basis(y, &ev);
    let x_v = l.apply_left_basis(x, &ev);
    let v_x = r.apply_right_basis(&ev, x);
    let v_y = r.apply_right_basis(&ev, y);
    let xy_v = l.apply_unchecked(xy, &ev);
    let x_yv = l.apply_left_basis(x, &y_v);
    let v_xy = r.apply_unchecked(&ev, xy);
    let v_yx = r.apply_unchecked(&ev, yx);
    let xv_y = r.apply_right_basis(&x_v, y);
    let x_vy = l.apply_left_basis(x, &v_y);
    let vx_y = r.apply_right_basis(&v_x, y);
    let combine = |plus: &[&Vector], minus: &[&Vector]| {
        let mut acc = vector::zeros(f, b.rep.dim());
        plus.iter().for_each(|t| vector::add_assign(&mut acc, t));
        minus.iter().for_each(|t| vector::sub_assign(&mut acc, t));
        acc
    };
    [
        combine(&[&xy_v, &l.apply_unchecked(yx, &ev)], &[&x_yv, &l.apply_left_basis(y, &x_v)]),
        combine(&[&vx_y, &r.apply_right_basis(&v_y, x)], &[&v_xy, &v_yx]),
        combine(&[&xv_y, &vx_y], &[&x_vy, &v_xy]),
        combine(&[&xy_v, &xv_y], &[&x_yv, &x_vy]),
    ]
}

/// `A` alternative and the four bimodule identities on all basis triples
/// `(x, y, v)`, lexicographically.
pub fn is_bimodule(b: &Bimodule) -> Verdict {
    is_alternative(&b.alg).and_then(|| {
        let (n, m) = (b.alg.dim(), b.rep.dim());
        for x in 0..n {
            for y in 0..n {
                for v in 0..m {
                    for (name, d) in BIMODULE_IDENTITIES.iter().zip(bimodule_values(b, x, y, v)) {
                        if !vector::is_zero(&d) {
                            return Verdict::Fail(Witness::new(*name, vec![x, y, v], &d));
                        }
                    }
                }
            }
        }
        Verdict::Pass
    })
}

/// Value of a named bimodule identity at `[x, y, v]`.
pub fn bimodule_defect(b: &Bimodule, kind: &str, args: &[usize]) -> Option<Vector> {
    let [x, y, v] = <[usize; 3]>::try_from(args).ok()?;
    if x >= b.alg.dim() || y >= b.alg.dim() || v >= b.rep.dim() {
        return None;
    }
    let pos = BIMODULE_IDENTITIES.iter().position(|&s| s == kind)?;
    Some(bimodule_values(b, x, y, v)[pos].clone())
}

/// `A ⊕ V` with `(x,u)(y,v) = (x∘y, x▷v + u◁y)`.
pub fn semidirect(b: &Bimodule) -> Algebra {
    let f = b.alg.field();
    let mut s = BlockSum::new(f, b.alg.space(), &b.rep).expect("prefixed labels are unique");
    s.add(Block::A, Block::A, Block::A, b.alg.product()).add(Block::A, Block::V, Block::V, &b.act_l).add(
        Block::V,
        Block::A,
        Block::V,
        &b.act_r,
    );
    Algebra::new(s.finish()).expect("square tensor")
}

pub fn bimodule_signature(b: &Bimodule) -> Signature {
    let mut sig = Signature::new(b.alg.field(), b.alg.dim(), b.rep.dim());
    sig.op("\\circ", Sort::A, Sort::A, Sort::A, b.alg.product()).op("\\trr", Sort::A, Sort::V, Sort::V, &b.act_l).op(
        "\\trl",
        Sort::V,
        Sort::A,
        Sort::V,
        &b.act_r,
    );
    sig
}

/// Identity-level verdict plus the printed conditions, advisory.
pub fn bimodule_report(b: &Bimodule) -> Report {
    let sig = bimodule_signature(b);
    Report::new("bimodule", is_bimodule(b), printed::evaluate_all(catalog::BIMODULE, &sig))
}

/// A pre-alternative algebra with `≺, ≻` acting on `V` from both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreBimodule {
    prealg: PreAlgebra,
    rep: Space,
    /// `x ≺ v`
    prec_l: BilinearMap,
    /// `x ≻ v`
    succ_l: BilinearMap,
    /// `v ≺ x`
    prec_r: BilinearMap,
    /// `v ≻ x`
    succ_r: BilinearMap,
}

impl PreBimodule {
    pub fn new(
        prealg: PreAlgebra,
        rep: Space,
        prec_l: BilinearMap,
        succ_l: BilinearMap,
        prec_r: BilinearMap,
        succ_r: BilinearMap,
    ) -> Result<Self> {
        let (n, m) = (prealg.dim(), rep.dim());
        for l in [&prec_l, &succ_l] {
            if (l.left().dim(), l.right().dim(), l.out().dim()) != (n, m, m) {
                return Err(Error::dims("left pre-actions must be A×V→V"));
            }
            ensure_field(prealg.field(), l.field())?;
        }
        for r in [&prec_r, &succ_r] {
            if (r.left().dim(), r.right().dim(), r.out().dim()) != (m, n, m) {
                return Err(Error::dims("right pre-actions must be V×A→V"));
            }
            ensure_field(prealg.field(), r.field())?;
        }
        let a = prealg.space().clone();
        Ok(PreBimodule {
            prec_l: prec_l.relabel(&a, &rep, &rep)?,
            succ_l: succ_l.relabel(&a, &rep, &rep)?,
            prec_r: prec_r.relabel(&rep, &a, &rep)?,
            succ_r: succ_r.relabel(&rep, &a, &rep)?,
            prealg,
            rep,
        })
    }

    pub fn zero(prealg: PreAlgebra, rep: &Space) -> Self {
        let f = prealg.field();
        let a = prealg.space().clone();
        let l = BilinearMap::zero(f, &a, rep, rep);
        let r = BilinearMap::zero(f, rep, &a, rep);
        PreBimodule { prec_l: l.clone(), succ_l: l, prec_r: r.clone(), succ_r: r, rep: rep.clone(), prealg }
    }

    /// `A` acting on itself through its own two products.
    pub fn adjoint(prealg: PreAlgebra) -> Self {
        let (p, s) = (prealg.prec().clone(), prealg.succ().clone());
        PreBimodule { prec_l: p.clone(), succ_l: s.clone(), prec_r: p, succ_r: s, rep: prealg.space().clone(), prealg }
    }

    pub fn prealg(&self) -> &PreAlgebra {
        &self.prealg
    }

    pub fn rep(&self) -> &Space {
        &self.rep
    }

    pub fn prec_l(&self) -> &BilinearMap {
        &self.prec_l
    }

    pub fn succ_l(&self) -> &BilinearMap {
        &self.succ_l
    }

    pub fn prec_r(&self) -> &BilinearMap {
        &self.prec_r
    }

    pub fn succ_r(&self) -> &BilinearMap {
        &self.succ_r
    }

    /// The bimodule of `Alt(A)` on `V` obtained by summing the actions.
    pub fn alt_collapse(&self) -> Bimodule {
        Bimodule {
            alg: alt_of(&self.prealg),
            rep: self.rep.clone(),
            act_l: self.prec_l.add(&self.succ_l).expect("same shape"),
            act_r: self.prec_r.add(&self.succ_r).expect("same shape"),
        }
    }
}

/// `A ⊕ V` with `(x,u)≺(y,v) = (x≺y, x≺v + u≺y)` and the same for `≻`.
pub fn pre_semidirect(b: &PreBimodule) -> PreAlgebra {
    let f = b.prealg.field();
    let a = b.prealg.space();
    let build = |inner: &BilinearMap, l: &BilinearMap, r: &BilinearMap| {
        let mut s = BlockSum::new(f, a, &b.rep).expect("prefixed labels are unique");
        s.add(Block::A, Block::A, Block::A, inner).add(Block::A, Block::V, Block::V, l).add(
            Block::V,
            Block::A,
            Block::V,
            r,
        );
        s.finish()
    };
    PreAlgebra::new(build(b.prealg.prec(), &b.prec_l, &b.prec_r), build(b.prealg.succ(), &b.succ_l, &b.succ_r))
        .expect("square tensors")
}

/// Oracle: the pre-semidirect product is pre-alternative.
pub fn is_pre_bimodule(b: &PreBimodule) -> Verdict {
    is_pre_alternative(&pre_semidirect(b))
}

pub fn pre_bimodule_signature(b: &PreBimodule) -> Signature {
    let p = &b.prealg;
    let mut sig = Signature::new(p.field(), p.dim(), b.rep.dim());
    use Sort::{A, V};
    sig.op("\\prec", A, A, A, p.prec())
        .op("\\succ", A, A, A, p.succ())
        .op("\\prec", A, V, V, &b.prec_l)
        .op("\\succ", A, V, V, &b.succ_l)
        .op("\\prec", V, A, V, &b.prec_r)
        .op("\\succ", V, A, V, &b.succ_r)
        .op_sum("\\circ", A, A, A, &[p.prec(), p.succ()])
        .op_sum("\\circ", A, V, V, &[&b.prec_l, &b.succ_l])
        .op_sum("\\circ", V, A, V, &[&b.prec_r, &b.succ_r]);
    sig
}

pub fn pre_bimodule_report(b: &PreBimodule) -> Report {
    let sig = pre_bimodule_signature(b);
    Report::new("prebimodule", is_pre_bimodule(b), printed::evaluate_all(catalog::PRE_BIMODULE, &sig))
}

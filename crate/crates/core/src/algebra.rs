//! Algebras and pre-algebras as structure constants, associators, and the
//! alternative / pre-alternative identity checkers.
//!
//! Every checker works on basis triples only: the identities are trilinear,
//! so vanishing on a basis is equivalent to vanishing everywhere. Failures
//! carry the lexicographically first violating triple.

use serde::{Deserialize, Serialize};

use crate::bilinear::BilinearMap;
use crate::error::{ensure_field, Error, Result};
use crate::field::{Field, Scalar};
use crate::linear::{self, LinearMap};
use crate::space::{direct_sum_with, Space};
use crate::vector::{self, Vector};

/// A failing instance of a named condition: the basis indices it was
/// evaluated at and the nonzero value it produced there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub args: Vec<usize>,
    pub defect: Vec<String>,
}

impl Witness {
    pub fn new(kind: impl Into<String>, args: Vec<usize>, defect: &[Scalar]) -> Self {
        Witness { kind: kind.into(), args, defect: defect.iter().map(ToString::to_string).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// `self` if it fails, otherwise the result of `next`.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }
}

pub const LEFT_ALTERNATIVE: &str = "left-alternative";
pub const RIGHT_ALTERNATIVE: &str = "right-alternative";

/// A based vector space with one bilinear product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    mul: BilinearMap,
}

impl Algebra {
    pub fn new(mul: BilinearMap) -> Result<Self> {
        if mul.left() != mul.right() || mul.left() != mul.out() {
            if mul.left().dim() != mul.right().dim() || mul.left().dim() != mul.out().dim() {
                return Err(Error::dims("algebra product must be V x V -> V"));
            }
            let s = mul.left().clone();
            return Ok(Algebra { mul: mul.relabel(&s, &s, &s)? });
        }
        Ok(Algebra { mul })
    }

    pub fn zero(field: Field, space: &Space) -> Self {
        Algebra { mul: BilinearMap::zero(field, space, space, space) }
    }

    pub fn from_triples(
        field: Field,
        space: &Space,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        Algebra::new(BilinearMap::from_triples(field, space, space, space, triples)?)
    }

    pub fn space(&self) -> &Space {
        self.mul.left()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn product(&self) -> &BilinearMap {
        &self.mul
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.mul.apply(u, v)
    }

    pub(crate) fn mul_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.mul.apply_unchecked(u, v)
    }

    /// `e_i e_j`
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.mul.column(i, j)
    }

    pub fn relabel(&self, space: &Space) -> Result<Algebra> {
        Algebra::new(self.mul.relabel(space, space, space)?)
    }

    /// The same algebra written in a new basis whose vectors are the columns
    /// of `basis` (in old coordinates). `basis` must be invertible.
    pub fn change_basis(&self, basis: &LinearMap) -> Result<Algebra> {
        let inv = basis.inverse().ok_or_else(|| Error::dims("change of basis must be invertible"))?;
        let n = self.dim();
        let f = self.field();
        let cols: Vec<Vector> = (0..n).map(|i| basis.column(i)).collect();
        let mut data = Vec::with_capacity(n * n * n);
        for a in &cols {
            for b in &cols {
                let p = self.mul_unchecked(a, b);
                data.extend(inv.apply_unchecked(&p));
            }
        }
        Algebra::new(BilinearMap::from_dense(f, basis.src(), basis.src(), basis.src(), data)?)
    }

    /// Whether the span of the given basis vectors is closed under the
    /// product; `Err` names the first offending pair.
    pub fn check_closed(&self, indices: &[usize]) -> Result<()> {
        for &i in indices {
            if i >= self.dim() {
                return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
            }
        }
        for &i in indices {
            for &j in indices {
                let p = self.basis_product(i, j);
                if p.iter().enumerate().any(|(k, c)| !c.is_zero() && !indices.contains(&k)) {
                    return Err(Error::NotASubalgebra(i, j));
                }
            }
        }
        Ok(())
    }

    /// Restriction to a closed coordinate block.
    pub fn restrict(&self, indices: &[usize]) -> Result<Algebra> {
        self.check_closed(indices)?;
        let space = self.space().select(indices)?;
        let mut triples = Vec::new();
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for (c, &k) in indices.iter().enumerate() {
                    triples.push((a, b, c, self.mul.get(i, j, k).clone()));
                }
            }
        }
        Algebra::from_triples(self.field(), &space, triples)
    }

    /// `A × B` with componentwise product.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        ensure_field(self.field(), other.field())?;
        let space = direct_sum_with(self.space(), "L", other.space(), "R")?;
        let n = self.dim();
        let mut triples = self.mul.triples();
        triples.extend(other.mul.triples().into_iter().map(|(i, j, k, v)| (i + n, j + n, k + n, v)));
        Algebra::from_triples(self.field(), &space, triples)
    }

    /// Whether `map` is an algebra homomorphism `self -> other`.
    pub fn is_homomorphism(&self, other: &Algebra, map: &LinearMap) -> bool {
        let n = self.dim();
        let images: Vec<Vector> = (0..n).map(|i| map.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = map.apply_unchecked(self.basis_product(i, j));
                let rhs = other.mul_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// First invertible `σ` with `σ: self -> other` an isomorphism, by
    /// exhaustive search over `GL` of a finite field.
    pub fn find_isomorphism(&self, other: &Algebra, budget: u128) -> Result<Option<LinearMap>> {
        if self.dim() != other.dim() {
            return Ok(None);
        }
        let q = self.field().order().ok_or(Error::InfiniteField)?;
        crate::error::within_budget(linear::pow_count(q, self.dim() * self.dim()), budget)?;
        for candidate in linear::Tuples::new(self.field(), self.dim() * self.dim())? {
            let map = LinearMap::from_matrix(self.field(), self.space(), other.space(), candidate)?;
            if map.rank() == self.dim() && self.is_homomorphism(other, &map) {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }
}

/// `(x∘y)∘z − x∘(y∘z)`
pub fn associator(alg: &Algebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
    let xy = alg.mul(x, y)?;
    let yz = alg.mul(y, z)?;
    let left = alg.mul(&xy, z)?;
    let right = alg.mul(x, &yz)?;
    Ok(vector::sub(&left, &right))
}

/// Lazily computed associators of basis triples.
struct AssociatorTable<'a> {
    alg: &'a Algebra,
    cache: Vec<Option<Vector>>,
}

impl<'a> AssociatorTable<'a> {
    fn new(alg: &'a Algebra) -> Self {
        let n = alg.dim();
        AssociatorTable { alg, cache: vec![None; n * n * n] }
    }

    fn get(&mut self, i: usize, j: usize, k: usize) -> &Vector {
        let n = self.alg.dim();
        let slot = (i * n + j) * n + k;
        if self.cache[slot].is_none() {
            let m = self.alg.product();
            let left = m.apply_right_basis(m.column(i, j), k);
            let right = m.apply_left_basis(i, m.column(j, k));
            self.cache[slot] = Some(vector::sub(&left, &right));
        }
        self.cache[slot].as_ref().unwrap()
    }
}

fn sum_into(a: &Vector, b: &Vector) -> Vector {
    vector::add(a, b)
}

/// Both linearized alternative identities
/// `(x,y,z) + (y,x,z) = 0` and `(x,y,z) + (x,z,y) = 0`, written out as
/// products, on every basis triple.
pub fn is_alternative(alg: &Algebra) -> Verdict {
    let n = alg.dim();
    let m = alg.product();
    let f = alg.field();
    // (a∘b)∘c and a∘(b∘c) on basis vectors
    let ll = |a: usize, b: usize, c: usize| m.apply_right_basis(m.column(a, b), c);
    let rr = |a: usize, b: usize, c: usize| m.apply_left_basis(a, m.column(b, c));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut d = vector::zeros(f, n);
                vector::add_assign(&mut d, &ll(i, j, k));
                vector::sub_assign(&mut d, &rr(i, j, k));
                let base = d.clone();
                vector::add_assign(&mut d, &ll(j, i, k));
                vector::sub_assign(&mut d, &rr(j, i, k));
                if !vector::is_zero(&d) {
                    return Verdict::Fail(Witness::new(LEFT_ALTERNATIVE, vec![i, j, k], &d));
                }
                let mut d = base;
                vector::add_assign(&mut d, &ll(i, k, j));
                vector::sub_assign(&mut d, &rr(i, k, j));
                if !vector::is_zero(&d) {
                    return Verdict::Fail(Witness::new(RIGHT_ALTERNATIVE, vec![i, j, k], &d));
                }
            }
        }
    }
    Verdict::Pass
}

/// The same condition rendered as antisymmetry of the associator:
/// `(x,y,z) = −(y,x,z)` and `(x,y,z) = −(x,z,y)`.
pub fn equiv_check_assoc_form(alg: &Algebra) -> Verdict {
    let n = alg.dim();
    let mut table = AssociatorTable::new(alg);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = table.get(i, j, k).clone();
                let d = sum_into(&a, table.get(j, i, k));
                if !vector::is_zero(&d) {
                    return Verdict::Fail(Witness::new(LEFT_ALTERNATIVE, vec![i, j, k], &d));
                }
                let d = sum_into(&a, table.get(i, k, j));
                if !vector::is_zero(&d) {
                    return Verdict::Fail(Witness::new(RIGHT_ALTERNATIVE, vec![i, j, k], &d));
                }
            }
        }
    }
    Verdict::Pass
}

/// Value of a named alternative identity at a basis triple.
pub fn alternative_defect(alg: &Algebra, kind: &str, args: &[usize]) -> Option<Vector> {
    let [i, j, k] = <[usize; 3]>::try_from(args).ok()?;
    let n = alg.dim();
    if i >= n || j >= n || k >= n {
        return None;
    }
    let f = alg.field();
    let e = |a: usize| vector::basis(f, n, a);
    let a = associator(alg, &e(i), &e(j), &e(k)).ok()?;
    let b = match kind {
        LEFT_ALTERNATIVE => associator(alg, &e(j), &e(i), &e(k)).ok()?,
        RIGHT_ALTERNATIVE => associator(alg, &e(i), &e(k), &e(j)).ok()?,
        _ => return None,
    };
    Some(vector::add(&a, &b))
}

/// A based vector space with two products `≺` and `≻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreAlgebra {
    prec: BilinearMap,
    succ: BilinearMap,
}

pub const PRE_ALTERNATIVE_IDENTITIES: [&str; 4] = ["pre-alt-1", "pre-alt-2", "pre-alt-3", "pre-alt-4"];

impl PreAlgebra {
    /// `prec` is `≺`, `succ` is `≻`.
    pub fn new(prec: BilinearMap, succ: BilinearMap) -> Result<Self> {
        let p = Algebra::new(prec)?;
        let s = Algebra::new(succ)?;
        if p.dim() != s.dim() {
            return Err(Error::dims("both products must live on one space"));
        }
        ensure_field(p.field(), s.field())?;
        let space = p.space().clone();
        Ok(PreAlgebra { prec: p.mul, succ: s.mul.relabel(&space, &space, &space)? })
    }

    pub fn zero(field: Field, space: &Space) -> Self {
        let z = BilinearMap::zero(field, space, space, space);
        PreAlgebra { prec: z.clone(), succ: z }
    }

    pub fn space(&self) -> &Space {
        self.prec.left()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn field(&self) -> Field {
        self.prec.field()
    }

    /// `≺`
    pub fn prec(&self) -> &BilinearMap {
        &self.prec
    }

    /// `≻`
    pub fn succ(&self) -> &BilinearMap {
        &self.succ
    }

    pub fn relabel(&self, space: &Space) -> Result<PreAlgebra> {
        PreAlgebra::new(self.prec.relabel(space, space, space)?, self.succ.relabel(space, space, space)?)
    }

    pub fn check_closed(&self, indices: &[usize]) -> Result<()> {
        Algebra { mul: self.prec.clone() }.check_closed(indices)?;
        Algebra { mul: self.succ.clone() }.check_closed(indices)
    }

    pub fn restrict(&self, indices: &[usize]) -> Result<PreAlgebra> {
        let p = Algebra { mul: self.prec.clone() }.restrict(indices)?;
        let s = Algebra { mul: self.succ.clone() }.restrict(indices)?;
        PreAlgebra::new(p.mul, s.mul)
    }
}

/// The associated algebra: `x∘y = x≺y + x≻y`.
pub fn alt_of(p: &PreAlgebra) -> Algebra {
    Algebra { mul: p.prec.add(&p.succ).expect("same shape") }
}

/// Values of the four pre-alternative identities at one basis triple, with
/// `∘ = ≺ + ≻`:
///
/// 1. `(x∘y)≻z − x≻(y≻z) + (y∘x)≻z − y≻(x≻z)`
/// 2. `(x≺y)≺z − x≺(y∘z) + (x≺z)≺y − x≺(z∘y)`
/// 3. `(x≻y)≺z − x≻(y≺z) + (y≺x)≺z − y≺(x∘z)`
/// 4. `(x≻y)≺z − x≻(y≺z) + (x∘z)≻y − x≻(z≻y)`
fn pre_alternative_values(p: &PreAlgebra, circ: &BilinearMap, i: usize, j: usize, k: usize) -> [Vector; 4] {
    let (pr, su) = (&p.prec, &p.succ);
    // outer(inner(e_a, e_b), e_c)
    let l = |outer: &BilinearMap, inner: &BilinearMap, a: usize, b: usize, c: usize| {
        outer.apply_right_basis(inner.column(a, b), c)
    };
    // outer(e_a, inner(e_b, e_c))
    let r = |outer: &BilinearMap, inner: &BilinearMap, a: usize, b: usize, c: usize| {
        outer.apply_left_basis(a, inner.column(b, c))
    };
    let combine = |terms: [(Vector, bool); 4]| {
        let mut acc = vector::zeros(p.field(), p.dim());
        for (t, plus) in terms {
            if plus {
                vector::add_assign(&mut acc, &t);
            } else {
                vector::sub_assign(&mut acc, &t);
            }
        }
        acc
    };
    [
        combine([
            (l(su, circ, i, j, k), true),
            (r(su, su, i, j, k), false),
            (l(su, circ, j, i, k), true),
            (r(su, su, j, i, k), false),
        ]),
        combine([
            (l(pr, pr, i, j, k), true),
            (r(pr, circ, i, j, k), false),
            (l(pr, pr, i, k, j), true),
            (r(pr, circ, i, k, j), false),
        ]),
        combine([
            (l(pr, su, i, j, k), true),
            (r(su, pr, i, j, k), false),
            (l(pr, pr, j, i, k), true),
            (r(pr, circ, j, i, k), false),
        ]),
        combine([
            (l(pr, su, i, j, k), true),
            (r(su, pr, i, j, k), false),
            (l(su, circ, i, k, j), true),
            (r(su, su, i, k, j), false),
        ]),
    ]
}

pub fn is_pre_alternative(p: &PreAlgebra) -> Verdict {
    let n = p.dim();
    let circ = p.prec.add(&p.succ).expect("same shape");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let values = pre_alternative_values(p, &circ, i, j, k);
                for (name, v) in PRE_ALTERNATIVE_IDENTITIES.iter().zip(values.iter()) {
                    if !vector::is_zero(v) {
                        return Verdict::Fail(Witness::new(*name, vec![i, j, k], v));
                    }
                }
            }
        }
    }
    Verdict::Pass
}

/// Value of a named pre-alternative identity at a basis triple.
pub fn pre_alternative_defect(p: &PreAlgebra, kind: &str, args: &[usize]) -> Option<Vector> {
    let [i, j, k] = <[usize; 3]>::try_from(args).ok()?;
    let n = p.dim();
    if i >= n || j >= n || k >= n {
        return None;
    }
    let pos = PRE_ALTERNATIVE_IDENTITIES.iter().position(|&s| s == kind)?;
    let circ = p.prec.add(&p.succ).expect("same shape");
    Some(pre_alternative_values(p, &circ, i, j, k)[pos].clone())
}

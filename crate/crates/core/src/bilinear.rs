use crate::error::{ensure_field, Error, Result};
use crate::field::{fma, Field, Scalar};
use crate::space::Space;
use crate::vector::{self, Vector};

/// Structure constants of a bilinear map `left x right -> out`.
///
/// Dense in memory: entry `(i, j, k)` is the `k`-th coordinate of
/// `m(e_i, f_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    left: Space,
    right: Space,
    out: Space,
    field: Field,
    data: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(field: Field, left: &Space, right: &Space, out: &Space) -> Self {
        BilinearMap {
            left: left.clone(),
            right: right.clone(),
            out: out.clone(),
            field,
            data: vector::zeros(field, left.dim() * right.dim() * out.dim()),
        }
    }

    /// From sparse `(i, j, k, value)` triples; repeated slots accumulate.
    pub fn from_triples(
        field: Field,
        left: &Space,
        right: &Space,
        out: &Space,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zero(field, left, right, out);
        for (i, j, k, v) in triples {
            ensure_field(field, v.field())?;
            for (idx, dim) in [(i, left.dim()), (j, right.dim()), (k, out.dim())] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            let slot = m.slot(i, j, k);
            m.data[slot] += &v;
        }
        Ok(m)
    }

    /// From a dense entry list in `(i, j, k)` order.
    pub fn from_dense(field: Field, left: &Space, right: &Space, out: &Space, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != left.dim() * right.dim() * out.dim() {
            return Err(Error::dims("dense tensor length"));
        }
        for s in &data {
            ensure_field(field, s.field())?;
        }
        Ok(BilinearMap { left: left.clone(), right: right.clone(), out: out.clone(), field, data })
    }

    #[inline]
    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right.dim() + j) * self.out.dim() + k
    }

    pub fn left(&self) -> &Space {
        &self.left
    }

    pub fn right(&self) -> &Space {
        &self.right
    }

    pub fn out(&self) -> &Space {
        &self.out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.slot(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let s = self.slot(i, j, k);
        self.data[s] = value;
    }

    /// `m(e_i, f_j)` as a slice of the tensor.
    #[inline]
    pub fn column(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.out.dim();
        let s = (i * self.right.dim() + j) * n;
        &self.data[s..s + n]
    }

    /// Nonzero entries as `(i, j, k, value)` in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                for k in 0..self.out.dim() {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn same_shape(&self, other: &BilinearMap) -> bool {
        self.left.dim() == other.left.dim()
            && self.right.dim() == other.right.dim()
            && self.out.dim() == other.out.dim()
    }

    /// Entrywise sum.
    pub fn add(&self, other: &BilinearMap) -> Result<BilinearMap> {
        if !self.same_shape(other) {
            return Err(Error::dims("sum of bilinear maps with different shapes"));
        }
        ensure_field(self.field, other.field)?;
        let mut out = self.clone();
        vector::add_assign(&mut out.data, &other.data);
        Ok(out)
    }

    /// `Σ u_i v_j m(e_i, f_j)`
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.left.dim() || v.len() != self.right.dim() {
            return Err(Error::dims(format!(
                "apply on ({}, {}) with vectors of length ({}, {})",
                self.left.dim(),
                self.right.dim(),
                u.len(),
                v.len()
            )));
        }
        for s in u.iter().chain(v) {
            ensure_field(self.field, s.field())?;
        }
        Ok(self.apply_unchecked(u, v))
    }

    pub(crate) fn apply_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.out.dim());
        self.accumulate(&mut out, u, v);
        out
    }

    /// `acc += m(u, v)`
    pub(crate) fn accumulate(&self, acc: &mut [Scalar], u: &[Scalar], v: &[Scalar]) {
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                let col = self.column(i, j);
                for (a, t) in acc.iter_mut().zip(col) {
                    if !t.is_zero() {
                        fma(a, &c, t);
                    }
                }
            }
        }
    }

    /// `m(e_i, v)`
    pub(crate) fn apply_left_basis(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.out.dim());
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                vector::axpy(&mut out, vj, self.column(i, j));
            }
        }
        out
    }

    /// `m(u, f_j)`
    pub(crate) fn apply_right_basis(&self, u: &[Scalar], j: usize) -> Vector {
        let mut out = vector::zeros(self.field, self.out.dim());
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                vector::axpy(&mut out, ui, self.column(i, j));
            }
        }
        out
    }

    /// Same structure constants on relabelled spaces of equal dimensions.
    pub fn relabel(&self, left: &Space, right: &Space, out: &Space) -> Result<BilinearMap> {
        BilinearMap::from_dense(self.field, left, right, out, self.data.clone())
    }
}

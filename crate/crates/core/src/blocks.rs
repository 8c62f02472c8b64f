//! Assembling and slicing bilinear maps on a direct sum `A ⊕ V`.
//!
//! The `A`-block occupies indices `[0, dim A)`, the `V`-block the rest.

use crate::bilinear::BilinearMap;
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::space::{direct_sum_space, Space};
use crate::vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    V,
}

/// Accumulates block tensors into one tensor `E × E → E`.
pub struct BlockSum {
    field: Field,
    a: Space,
    v: Space,
    e: Space,
    data: Vec<Scalar>,
}

impl BlockSum {
    pub fn new(field: Field, a: &Space, v: &Space) -> Result<Self> {
        let e = direct_sum_space(a, v)?;
        Self::with_space(field, a, v, e)
    }

    /// As [`BlockSum::new`] with an explicit (already labelled) total space.
    pub fn with_space(field: Field, a: &Space, v: &Space, e: Space) -> Result<Self> {
        assert_eq!(e.dim(), a.dim() + v.dim());
        let n = e.dim();
        Ok(BlockSum { field, a: a.clone(), v: v.clone(), e, data: vector::zeros(field, n * n * n) })
    }

    fn range(&self, b: Block) -> (usize, usize) {
        match b {
            Block::A => (0, self.a.dim()),
            Block::V => (self.a.dim(), self.v.dim()),
        }
    }

    /// Adds `m` into the `(l, r) → o` block. Shapes must match the blocks.
    pub fn add(&mut self, l: Block, r: Block, o: Block, m: &BilinearMap) -> &mut Self {
        let (lo, ln) = self.range(l);
        let (ro, rn) = self.range(r);
        let (oo, on) = self.range(o);
        assert_eq!((m.left().dim(), m.right().dim(), m.out().dim()), (ln, rn, on), "block shape");
        let n = self.e.dim();
        for i in 0..ln {
            for j in 0..rn {
                for (k, val) in m.column(i, j).iter().enumerate() {
                    if !val.is_zero() {
                        let slot = ((lo + i) * n + (ro + j)) * n + oo + k;
                        self.data[slot] += val;
                    }
                }
            }
        }
        self
    }

    pub fn space(&self) -> &Space {
        &self.e
    }

    pub fn finish(self) -> BilinearMap {
        BilinearMap::from_dense(self.field, &self.e, &self.e, &self.e, self.data).expect("consistent shape")
    }
}

/// The `(l, r) → o` block of a tensor on `A ⊕ V` with `dim A = n`.
pub fn slice(m: &BilinearMap, a: &Space, v: &Space, l: Block, r: Block, o: Block) -> BilinearMap {
    let n = a.dim();
    assert_eq!(m.out().dim(), n + v.dim());
    let pick = |b: Block| match b {
        Block::A => (0, a),
        Block::V => (n, v),
    };
    let (lo, ls) = pick(l);
    let (ro, rs) = pick(r);
    let (oo, os) = pick(o);
    let mut out = BilinearMap::zero(m.field(), ls, rs, os);
    for i in 0..ls.dim() {
        for j in 0..rs.dim() {
            let col = m.column(lo + i, ro + j);
            for k in 0..os.dim() {
                let val = &col[oo + k];
                if !val.is_zero() {
                    out.set(i, j, k, val.clone());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_then_slice_round_trips() {
        let f = Field::Prime(5);
        let a = Space::numbered("x", 2);
        let v = Space::numbered("u", 1);
        let m = BilinearMap::from_triples(f, &a, &v, &v, [(1, 0, 0, f.from_i64(3))]).unwrap();
        let mut s = BlockSum::new(f, &a, &v).unwrap();
        s.add(Block::A, Block::V, Block::V, &m);
        let t = s.finish();
        assert_eq!(t.get(1, 2, 2), &f.from_i64(3));
        assert_eq!(slice(&t, &a, &v, Block::A, Block::V, Block::V), m);
        assert!(slice(&t, &a, &v, Block::V, Block::A, Block::V).is_zero());
    }
}

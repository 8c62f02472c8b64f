//! Exhaustive classification of extending datums over a finite field up to
//! equivalence (`s` invertible) and cohomology (`s = id`).

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{is_alternative, Algebra};
use crate::error::{within_budget, Error, Result};
use crate::flag::{enumerate_flags, flag_to_datum};
use crate::linear::{general_linear_group, nth_tuple, pow_count, LinearMap};
use crate::space::Space;
use crate::unified::{tensor_sizes, transport, unified_product, ExtendingDatum, MorphismPair};
use crate::vector;

#[derive(Clone, Debug)]
pub struct Classification {
    /// Every valid datum, sorted by coordinates.
    pub datums: Vec<ExtendingDatum>,
    /// Equivalence classes as index lists, ordered by least member.
    pub equivalence: Vec<Vec<usize>>,
    /// Cohomology classes, same layout.
    pub cohomology: Vec<Vec<usize>>,
}

impl Classification {
    pub fn equivalence_count(&self) -> usize {
        self.equivalence.len()
    }

    pub fn cohomology_count(&self) -> usize {
        self.cohomology.len()
    }

    /// The least datum of each equivalence class.
    pub fn representatives(&self) -> Vec<&ExtendingDatum> {
        self.equivalence.iter().map(|c| &self.datums[c[0]]).collect()
    }

    pub fn cohomology_representatives(&self) -> Vec<&ExtendingDatum> {
        self.cohomology.iter().map(|c| &self.datums[c[0]]).collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    /// The smaller root wins, so roots are least members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
    }

    fn classes(mut self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = self.find(i);
            by_root[r].push(i);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Every valid datum on `(alg, V)` with `dim V = vdim`: staged flag
/// enumeration for `vdim = 1`, raw coordinate scan otherwise.
pub fn valid_datums(alg: &Algebra, vdim: usize, budget: u128) -> Result<Vec<ExtendingDatum>> {
    let f = alg.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let mut out: Vec<ExtendingDatum> = if vdim == 1 {
        enumerate_flags(alg, budget)?.iter().map(flag_to_datum).collect()
    } else {
        let v = Space::numbered("u", vdim);
        let len: usize = tensor_sizes(alg.dim(), vdim).iter().sum();
        let total = pow_count(q, len);
        within_budget(total, budget)?;
        let elements = f.elements().expect("finite");
        (0..total)
            .into_par_iter()
            .filter_map(|idx| {
                let d = ExtendingDatum::from_coords(alg.clone(), &v, &nth_tuple(&elements, len, idx)).expect("sized");
                is_alternative(&unified_product(&d)).is_pass().then_some(d)
            })
            .collect()
    };
    out.sort_by_cached_key(|d| vector::residues(&d.coords()));
    Ok(out)
}

fn orbits(datums: &[ExtendingDatum], moves: &[MorphismPair]) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<Vec<u32>, usize> =
        datums.iter().enumerate().map(|(i, d)| (vector::residues(&d.coords()), i)).collect();
    let edges: Vec<Vec<usize>> = datums
        .par_iter()
        .map(|d| {
            moves
                .iter()
                .map(|m| {
                    let moved = transport(d, m)?;
                    index
                        .get(&vector::residues(&moved.coords()))
                        .copied()
                        .ok_or_else(|| Error::dims("transport left the set of valid datums"))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut uf = UnionFind((0..datums.len()).collect());
    for (i, targets) in edges.iter().enumerate() {
        for &j in targets {
            uf.union(i, j);
        }
    }
    Ok(uf.classes())
}

/// Generators of the `(r, id)` group: one unit entry in `r` each.
fn shear_moves(alg: &Algebra, v: &Space) -> Vec<MorphismPair> {
    let f = alg.field();
    let (n, m) = (alg.dim(), v.dim());
    let mut out = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            let mut r = LinearMap::zero(f, v, alg.space());
            r.set(i, j, f.one());
            out.push(MorphismPair { r, s: LinearMap::identity(f, v) });
        }
    }
    out
}

/// All valid datums with their classes under `(r, s)` with `s` invertible
/// and under `(r, id)`. Orbits are merged by union-find over a generating
/// set of moves; every class is labelled by its least member.
pub fn classify_extensions(alg: &Algebra, vdim: usize, budget: u128) -> Result<Classification> {
    let f = alg.field();
    let datums = valid_datums(alg, vdim, budget)?;
    let v = datums.first().map_or_else(|| Space::numbered("u", vdim), |d| d.ext().clone());
    let shears = shear_moves(alg, &v);
    let mut all_moves = shears.clone();
    for s in general_linear_group(f, &v)? {
        all_moves.push(MorphismPair { r: LinearMap::zero(f, &v, alg.space()), s });
    }
    within_budget((datums.len() as u128).saturating_mul(all_moves.len() as u128), budget)?;
    let cohomology = orbits(&datums, &shears)?;
    let equivalence = orbits(&datums, &all_moves)?;
    Ok(Classification { datums, equivalence, cohomology })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::library;
    use crate::unified::{cohomologous_datums, equivalent_datums};

    #[test]
    fn zero_algebra_line() {
        let f = Field::Prime(5);
        let c = classify_extensions(&library::zero(f, 0), 1, 1_000).unwrap();
        assert_eq!(c.datums.len(), 5);
        assert_eq!(c.equivalence_count(), 2);
        assert_eq!(c.cohomology_count(), 5);
    }

    #[test]
    fn orbits_agree_with_pairwise_search() {
        let f = Field::Prime(5);
        let c = classify_extensions(&library::ground(f), 1, 1 << 20).unwrap();
        assert!(c.equivalence_count() <= c.cohomology_count());
        let eq_class = |i: usize| c.equivalence.iter().position(|cl| cl.contains(&i)).unwrap();
        let co_class = |i: usize| c.cohomology.iter().position(|cl| cl.contains(&i)).unwrap();
        let k = c.datums.len().min(12);
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (&c.datums[i], &c.datums[j]);
                assert_eq!(equivalent_datums(a, b, 1_000).unwrap().is_some(), eq_class(i) == eq_class(j));
                assert_eq!(cohomologous_datums(a, b, 1_000).unwrap().is_some(), co_class(i) == co_class(j));
            }
        }
    }

    #[test]
    fn raw_scan_matches_flag_staging() {
        let f = Field::Prime(5);
        let a = library::ground(f);
        let staged = valid_datums(&a, 1, 1 << 20).unwrap();
        let v = staged[0].ext().clone();
        let len: usize = tensor_sizes(1, 1).iter().sum();
        let elements = f.elements().unwrap();
        let mut raw: Vec<_> = (0..pow_count(5, len))
            .map(|i| ExtendingDatum::from_coords(a.clone(), &v, &nth_tuple(&elements, len, i)).unwrap())
            .filter(|d| is_alternative(&unified_product(d)).is_pass())
            .collect();
        raw.sort_by_cached_key(|d| vector::residues(&d.coords()));
        assert_eq!(raw, staged);
    }
}

//! Linear maps, functionals, exact Gaussian elimination and finite-field
//! enumeration helpers.

use crate::error::{ensure_field, Error, Result};
use crate::field::{fma, Field, Scalar};
use crate::space::Space;
use crate::vector::{self, Vector};

/// A linear map `src -> dst` stored as a row-major `dst.dim x src.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    src: Space,
    dst: Space,
    field: Field,
    matrix: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(field: Field, src: &Space, dst: &Space) -> Self {
        LinearMap { src: src.clone(), dst: dst.clone(), field, matrix: vector::zeros(field, src.dim() * dst.dim()) }
    }

    pub fn identity(field: Field, space: &Space) -> Self {
        let mut m = Self::zero(field, space, space);
        for i in 0..space.dim() {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows (`dst.dim` rows of `src.dim` entries).
    pub fn from_matrix(field: Field, src: &Space, dst: &Space, matrix: Vec<Scalar>) -> Result<Self> {
        if matrix.len() != src.dim() * dst.dim() {
            return Err(Error::dims(format!(
                "matrix has {} entries, expected {}x{}",
                matrix.len(),
                dst.dim(),
                src.dim()
            )));
        }
        for s in &matrix {
            ensure_field(field, s.field())?;
        }
        Ok(LinearMap { src: src.clone(), dst: dst.clone(), field, matrix })
    }

    pub fn src(&self) -> &Space {
        &self.src
    }

    pub fn dst(&self) -> &Space {
        &self.dst
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrix(&self) -> &[Scalar] {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.matrix[row * self.src.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        let n = self.src.dim();
        self.matrix[row * n + col] = value;
    }

    /// Image of basis vector `col`.
    pub fn column(&self, col: usize) -> Vector {
        (0..self.dst.dim()).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.src.dim() {
            return Err(Error::dims(format!("vector of length {} for source dim {}", v.len(), self.src.dim())));
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Scalar]) -> Vector {
        let n = self.src.dim();
        (0..self.dst.dim())
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    fma(&mut acc, &self.matrix[r * n + c], x);
                }
                acc
            })
            .collect()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.dst.dim() != self.src.dim() {
            return Err(Error::dims("composition of incompatible maps"));
        }
        let (rows, mid, cols) = (self.dst.dim(), self.src.dim(), other.src.dim());
        let mut out = LinearMap::zero(self.field, &other.src, &self.dst);
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = self.field.zero();
                for k in 0..mid {
                    fma(&mut acc, self.get(r, k), other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.src.dim() != other.src.dim() || self.dst.dim() != other.dst.dim() {
            return Err(Error::dims("sum of maps with different shapes"));
        }
        let mut out = self.clone();
        vector::add_assign(&mut out.matrix, &other.matrix);
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix, self.dst.dim(), self.src.dim())
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.src.dim();
        if n != self.dst.dim() {
            return None;
        }
        let inv = invert(self.field, &self.matrix, n)?;
        Some(LinearMap { src: self.dst.clone(), dst: self.src.clone(), field: self.field, matrix: inv })
    }
}

/// A linear form `src -> K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFunctional {
    src: Space,
    field: Field,
    coeffs: Vec<Scalar>,
}

impl LinearFunctional {
    pub fn zero(field: Field, src: &Space) -> Self {
        LinearFunctional { src: src.clone(), field, coeffs: vector::zeros(field, src.dim()) }
    }

    pub fn new(field: Field, src: &Space, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != src.dim() {
            return Err(Error::dims("functional length differs from source dim"));
        }
        for s in &coeffs {
            ensure_field(field, s.field())?;
        }
        Ok(LinearFunctional { src: src.clone(), field, coeffs })
    }

    pub fn src(&self) -> &Space {
        &self.src
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn apply(&self, v: &[Scalar]) -> Scalar {
        vector::dot(&self.coeffs, v, self.field)
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Scalar], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                m.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = m[r * cols + c].inv().expect("pivot is nonzero");
        for k in 0..cols {
            m[r * cols + k] = &m[r * cols + k] * &inv;
        }
        for i in 0..rows {
            if i == r || m[i * cols + c].is_zero() {
                continue;
            }
            let factor = m[i * cols + c].clone();
            for k in 0..cols {
                let t = &factor * &m[r * cols + k];
                m[i * cols + k] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Scalar], rows: usize, cols: usize) -> usize {
    let mut work = m.to_vec();
    rref(&mut work, rows, cols).len()
}

/// Inverse of a square row-major matrix.
pub fn invert(field: Field, m: &[Scalar], n: usize) -> Option<Vec<Scalar>> {
    let cols = 2 * n;
    let mut aug = vector::zeros(field, n * cols);
    for i in 0..n {
        for j in 0..n {
            aug[i * cols + j] = m[i * n + j].clone();
        }
        aug[i * cols + n + i] = field.one();
    }
    let pivots = rref(&mut aug, n, cols);
    if pivots.iter().take(n).any(|&c| c >= n) {
        return None;
    }
    let mut inv = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            inv.push(aug[i * cols + n + j].clone());
        }
    }
    Some(inv)
}

/// `Σ coeffs[i] * x_i = rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineEquation {
    pub coeffs: Vec<Scalar>,
    pub rhs: Scalar,
}

/// The solution set of an affine system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    NoSolution,
    Affine { basepoint: Vector, nullspace: Vec<Vector> },
}

impl Solution {
    /// Number of points over a finite field (`None` for infinite sets).
    pub fn count(&self, field: Field) -> Option<u128> {
        match self {
            Solution::NoSolution => Some(0),
            Solution::Affine { nullspace, .. } => {
                let q = field.order()? as u128;
                q.checked_pow(nullspace.len() as u32)
            }
        }
    }

    /// Every point of the solution set over a finite field, in the order of
    /// the nullspace coefficient tuples.
    pub fn points(&self, field: Field) -> Result<Vec<Vector>> {
        match self {
            Solution::NoSolution => Ok(Vec::new()),
            Solution::Affine { basepoint, nullspace } => {
                let mut out = Vec::new();
                for coeffs in Tuples::new(field, nullspace.len())? {
                    let mut p = basepoint.clone();
                    for (c, n) in coeffs.iter().zip(nullspace) {
                        vector::axpy(&mut p, c, n);
                    }
                    out.push(p);
                }
                Ok(out)
            }
        }
    }
}

/// Exact Gaussian elimination over `nvars` unknowns.
pub fn solve_linear(field: Field, nvars: usize, equations: &[AffineEquation]) -> Solution {
    let rows = equations.len();
    let cols = nvars + 1;
    let mut m = Vec::with_capacity(rows * cols);
    for eq in equations {
        debug_assert_eq!(eq.coeffs.len(), nvars);
        m.extend(eq.coeffs.iter().cloned());
        m.push(eq.rhs.clone());
    }
    let pivots = rref(&mut m, rows, cols);
    if pivots.last() == Some(&nvars) {
        return Solution::NoSolution;
    }
    let mut basepoint = vector::zeros(field, nvars);
    for (r, &c) in pivots.iter().enumerate() {
        basepoint[c] = m[r * cols + nvars].clone();
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vector::zeros(field, nvars);
            v[f] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r * cols + f];
            }
            v
        })
        .collect();
    Solution::Affine { basepoint, nullspace }
}

/// All tuples in `F_p^len`, lexicographic with the last coordinate fastest.
pub struct Tuples {
    elements: Vec<Scalar>,
    digits: Vec<usize>,
    done: bool,
}

impl Tuples {
    pub fn new(field: Field, len: usize) -> Result<Self> {
        let elements = field.elements().ok_or(Error::InfiniteField)?;
        Ok(Tuples { elements, digits: vec![0; len], done: false })
    }
}

impl Iterator for Tuples {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&d| self.elements[d].clone()).collect();
        let q = self.elements.len();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < q {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// The `index`-th tuple of [`Tuples`] order over `elements`, last
/// coordinate fastest.
pub fn nth_tuple(elements: &[Scalar], len: usize, mut index: u128) -> Vector {
    let q = elements.len() as u128;
    let mut out = vec![elements[0].clone(); len];
    for slot in out.iter_mut().rev() {
        *slot = elements[(index % q) as usize].clone();
        index /= q;
    }
    out
}

/// `q^n`, saturating.
pub fn pow_count(q: u64, n: usize) -> u128 {
    (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// `|GL(n, q)| = Π_{i<n} (q^n - q^i)`, saturating.
pub fn gl_order(q: u64, n: usize) -> u128 {
    let qn = pow_count(q, n);
    (0..n).fold(1u128, |acc, i| acc.saturating_mul(qn - pow_count(q, i)))
}

/// Every invertible map `space -> space` over a finite field.
pub fn general_linear_group(field: Field, space: &Space) -> Result<Vec<LinearMap>> {
    let n = space.dim();
    let mut out = Vec::new();
    for entries in Tuples::new(field, n * n)? {
        if rank(&entries, n, n) == n {
            out.push(LinearMap::from_matrix(field, space, space, entries)?);
        }
    }
    Ok(out)
}

/// Every linear map `src -> dst` over a finite field.
pub fn all_linear_maps(field: Field, src: &Space, dst: &Space) -> Result<Vec<LinearMap>> {
    Tuples::new(field, src.dim() * dst.dim())?.map(|entries| LinearMap::from_matrix(field, src, dst, entries)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    #[test]
    fn trivial_identity_equation() {
        let f = Field::Rationals;
        let eqs = [AffineEquation { coeffs: vec![q(0)], rhs: q(0) }];
        assert_eq!(solve_linear(f, 1, &eqs), Solution::Affine { basepoint: vec![q(0)], nullspace: vec![vec![q(1)]] });
    }

    #[test]
    fn two_by_two() {
        let f = Field::Rationals;
        let eqs = [
            AffineEquation { coeffs: vec![q(1), q(1)], rhs: q(1) },
            AffineEquation { coeffs: vec![q(1), q(-1)], rhs: q(1) },
        ];
        assert_eq!(solve_linear(f, 2, &eqs), Solution::Affine { basepoint: vec![q(1), q(0)], nullspace: vec![] });
    }

    #[test]
    fn inconsistent() {
        let f = Field::Rationals;
        let eqs = [AffineEquation { coeffs: vec![q(1)], rhs: q(0) }, AffineEquation { coeffs: vec![q(1)], rhs: q(1) }];
        assert_eq!(solve_linear(f, 1, &eqs), Solution::NoSolution);
    }

    #[test]
    fn gl_counts_match_formula() {
        let f = Field::Prime(5);
        for n in 0..=2 {
            let g = general_linear_group(f, &Space::numbered("e", n)).unwrap();
            assert_eq!(g.len() as u128, gl_order(5, n));
        }
        assert_eq!(gl_order(3, 2), 48);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::Rationals;
        let s = Space::numbered("e", 2);
        let m = LinearMap::from_matrix(f, &s, &s, vec![q(1), q(2), q(3), q(4)]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(f, &s));
        let singular = LinearMap::from_matrix(f, &s, &s, vec![q(1), q(2), q(2), q(4)]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn tuples_enumerate_everything() {
        let f = Field::Prime(5);
        assert_eq!(Tuples::new(f, 3).unwrap().count(), 125);
        assert_eq!(Tuples::new(f, 0).unwrap().count(), 1);
        assert!(Tuples::new(Field::Rationals, 1).is_err());
    }
}

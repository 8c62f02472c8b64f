//! Coordinate vectors as plain `Vec<Scalar>`.

use crate::field::{fma, Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zeros(field: Field, dim: usize) -> Vector {
    vec![field.zero(); dim]
}

pub fn basis(field: Field, dim: usize, i: usize) -> Vector {
    let mut v = zeros(field, dim);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn add_assign(a: &mut [Scalar], b: &[Scalar]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn sub_assign(a: &mut [Scalar], b: &[Scalar]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

/// `a += c * b`
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        fma(x, c, y);
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: Field) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        fma(&mut acc, x, y);
    }
    acc
}

/// Residues of a finite-field vector, used as hash keys.
pub fn residues(v: &[Scalar]) -> Vec<u32> {
    v.iter().map(|s| s.residue_value().expect("finite field scalar")).collect()
}

//! Cayley–Dickson doubling.
//!
//! Starting from the ground field (dimension 1, trivial conjugation), each
//! doubling step builds pairs `(a, b)` with
//!
//! ```text
//! (a, b)(c, d) = (ac − d̄b, da + bc̄),     conj(a, b) = (ā, −b).
//! ```
//!
//! Three doublings give the octonions (alternative, not associative); four
//! give the sedenions (not alternative). The multiplication tables used by
//! the octonion and sedenion fixtures are generated here rather than typed
//! in by hand.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::space::Space;
use crate::vector::{self, Vector};

fn conj(x: &[Scalar]) -> Vector {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = conj(&x[..h]);
    out.extend(x[h..].iter().map(|s| -s));
    out
}

fn mul(x: &[Scalar], y: &[Scalar]) -> Vector {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = vector::sub(&mul(a, c), &mul(&conj(d), b));
    let second = vector::add(&mul(d, a), &mul(b, &conj(c)));
    let mut out = first;
    out.extend(second);
    out
}

/// Product of two elements of the `2^level`-dimensional doubling.
pub fn cd_multiply(x: &[Scalar], y: &[Scalar]) -> Vector {
    assert_eq!(x.len(), y.len());
    assert!(x.len().is_power_of_two());
    mul(x, y)
}

/// Structure constants of the `level`-fold doubling, basis `e0 .. e_{2^level - 1}`
/// with `e0` the unit.
pub fn cayley_dickson(field: Field, level: u32) -> Result<Algebra> {
    let n = 1usize << level;
    let space = Space::numbered("e", n);
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = mul(&vector::basis(field, n, i), &vector::basis(field, n, j));
            for (k, v) in p.into_iter().enumerate() {
                if !v.is_zero() {
                    triples.push((i, j, k, v));
                }
            }
        }
    }
    Algebra::from_triples(field, &space, triples)
}

pub fn quaternions(field: Field) -> Algebra {
    cayley_dickson(field, 2).expect("valid construction")
}

pub fn octonions(field: Field) -> Algebra {
    cayley_dickson(field, 3).expect("valid construction")
}

pub fn sedenions(field: Field) -> Algebra {
    cayley_dickson(field, 4).expect("valid construction")
}

//! Small named algebras used as fixtures and as seeds for the samplers.

use crate::algebra::Algebra;
use crate::field::Field;
use crate::space::Space;

pub fn zero(field: Field, dim: usize) -> Algebra {
    Algebra::zero(field, &Space::numbered("e", dim))
}

/// The ground field as a 1-dimensional algebra, `e·e = e`.
pub fn ground(field: Field) -> Algebra {
    Algebra::from_triples(field, &Space::numbered("e", 1), [(0, 0, 0, field.one())]).expect("valid")
}

/// `K[t]/t^n` with basis `1, t, .., t^{n-1}`.
pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                triples.push((i, j, i + j, field.one()));
            }
        }
    }
    Algebra::from_triples(field, &Space::numbered("t", n), triples).expect("valid")
}

/// Dual numbers `K[t]/t²`.
pub fn dual_numbers(field: Field) -> Algebra {
    truncated_polynomial(field, 2)
}

/// `K[t]/t^{n+1}` without its unit: the basis `t, .., t^n` with
/// `t^i t^j = t^{i+j}`. Nilpotent and associative.
pub fn nilpotent_chain(field: Field, n: usize) -> Algebra {
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j + 1 < n {
                triples.push((i, j, i + j + 1, field.one()));
            }
        }
    }
    Algebra::from_triples(field, &Space::numbered("n", n), triples).expect("valid")
}

/// `M_n(K)` on matrix units `E_ij` (index `i*n + j`), `E_ij E_kl = δ_jk E_il`.
pub fn matrix_units(field: Field, n: usize) -> Algebra {
    let space = Space::new((0..n).flat_map(|i| (0..n).map(move |j| format!("E{i}{j}")))).expect("unique");
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                triples.push((i * n + j, j * n + l, i * n + l, field.one()));
            }
        }
    }
    Algebra::from_triples(field, &space, triples).expect("valid")
}

/// Upper triangular 2×2 matrices on `E11, E12, E22`.
pub fn upper_triangular(field: Field) -> Algebra {
    let space = Space::new(["E11", "E12", "E22"]).expect("unique");
    let one = field.one();
    Algebra::from_triples(
        field,
        &space,
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 2, 1, one.clone()), (2, 2, 2, one)],
    )
    .expect("valid")
}

/// `K^n` with componentwise product.
pub fn diagonal(field: Field, n: usize) -> Algebra {
    Algebra::from_triples(field, &Space::numbered("d", n), (0..n).map(|i| (i, i, i, field.one()))).expect("valid")
}

/// Associative (hence alternative) algebras of dimension `dim` assembled
/// from the pieces above. Deterministic order.
pub fn associative_of_dim(field: Field, dim: usize) -> Vec<Algebra> {
    let mut out: Vec<Algebra> = Vec::new();
    let mut push = |a: Algebra| {
        if a.dim() == dim && !out.contains(&a) {
            out.push(a);
        }
    };
    push(zero(field, dim));
    if dim >= 1 {
        push(diagonal(field, dim));
        push(truncated_polynomial(field, dim));
        push(nilpotent_chain(field, dim));
    }
    if dim >= 2 {
        push(ground(field).direct_product(&zero(field, dim - 1)).unwrap());
        push(dual_numbers(field).direct_product(&zero(field, dim - 2)).unwrap());
        push(dual_numbers(field).direct_product(&diagonal(field, dim - 2)).unwrap());
        push(nilpotent_chain(field, 2).direct_product(&ground(field)).unwrap());
    }
    if dim >= 3 {
        push(upper_triangular(field).direct_product(&zero(field, dim - 3)).unwrap());
        push(upper_triangular(field).direct_product(&diagonal(field, dim - 3)).unwrap());
        push(truncated_polynomial(field, 3).direct_product(&zero(field, dim - 3)).unwrap());
    }
    if dim >= 4 {
        push(matrix_units(field, 2).direct_product(&zero(field, dim - 4)).unwrap());
        push(
            dual_numbers(field)
                .direct_product(&dual_numbers(field))
                .unwrap()
                .direct_product(&zero(field, dim - 4))
                .unwrap(),
        );
    }
    out
}

//! Flag datums: extending structures with `dim V = 1`, their conversion to
//! general datums, verification, and staged exhaustive enumeration.

use rayon::prelude::*;

use crate::algebra::{is_alternative, is_pre_alternative, Algebra, PreAlgebra};
use crate::bilinear::BilinearMap;
use crate::error::{ensure_field, within_budget, Error, Result};
use crate::field::{fma, Field, Scalar};
use crate::linear::{nth_tuple, pow_count, solve_linear, AffineEquation, LinearFunctional, LinearMap};
use crate::pre_unified::{pre_unified_product, PreExtendingDatum};
use crate::printed::{self, catalog, Signature, Sort};
use crate::report::Report;
use crate::space::Space;
use crate::unified::{unified_product, DatumMaps, ExtendingDatum};
use crate::vector::{self, Vector};

/// The line `V = K u`.
pub fn line() -> Space {
    Space::new(["u"]).expect("one label")
}

/// `x•u = T(x) + λ(x)u`, `u•x = D(x) + μ(x)u`, `u•u = x0 + k0·u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagDatum {
    pub alg: Algebra,
    pub lambda: LinearFunctional,
    pub mu: LinearFunctional,
    pub d: LinearMap,
    pub t: LinearMap,
    pub x0: Vector,
    pub k0: Scalar,
}

impl FlagDatum {
    pub fn zero(alg: Algebra) -> Self {
        let (f, a) = (alg.field(), alg.space().clone());
        FlagDatum {
            lambda: LinearFunctional::zero(f, &a),
            mu: LinearFunctional::zero(f, &a),
            d: LinearMap::zero(f, &a, &a),
            t: LinearMap::zero(f, &a, &a),
            x0: vector::zeros(f, a.dim()),
            k0: f.zero(),
            alg,
        }
    }

    /// `(λ, μ, D, T, x0, k0)` flattened, maps row-major.
    pub fn coords(&self) -> Vector {
        let mut out = Vec::new();
        out.extend(self.lambda.coeffs().iter().cloned());
        out.extend(self.mu.coeffs().iter().cloned());
        out.extend(self.d.matrix().iter().cloned());
        out.extend(self.t.matrix().iter().cloned());
        out.extend(self.x0.iter().cloned());
        out.push(self.k0.clone());
        out
    }

    /// Inverse of [`FlagDatum::coords`].
    pub fn from_coords(alg: Algebra, theta: &[Scalar]) -> Result<Self> {
        let n = alg.dim();
        if theta.len() != flag_coord_len(n) {
            return Err(Error::dims(format!("expected {} flag coordinates", flag_coord_len(n))));
        }
        let (f, a) = (alg.field(), alg.space().clone());
        let l = Layout::new(n);
        Ok(FlagDatum {
            lambda: LinearFunctional::new(f, &a, theta[l.lambda..l.mu].to_vec())?,
            mu: LinearFunctional::new(f, &a, theta[l.mu..l.d].to_vec())?,
            d: LinearMap::from_matrix(f, &a, &a, theta[l.d..l.t].to_vec())?,
            t: LinearMap::from_matrix(f, &a, &a, theta[l.t..l.x0].to_vec())?,
            x0: theta[l.x0..l.k0].to_vec(),
            k0: theta[l.k0].clone(),
            alg,
        })
    }
}

/// `2n + 2n² + n + 1`
pub fn flag_coord_len(n: usize) -> usize {
    3 * n + 2 * n * n + 1
}

#[derive(Clone, Copy)]
struct Layout {
    lambda: usize,
    mu: usize,
    d: usize,
    t: usize,
    x0: usize,
    k0: usize,
}

impl Layout {
    fn new(n: usize) -> Self {
        Layout { lambda: 0, mu: n, d: 2 * n, t: 2 * n + n * n, x0: 2 * n + 2 * n * n, k0: 3 * n + 2 * n * n }
    }
}

pub fn flag_to_datum(f: &FlagDatum) -> ExtendingDatum {
    let (fld, a) = (f.alg.field(), f.alg.space().clone());
    let u = line();
    let n = a.dim();
    let mut act_l = BilinearMap::zero(fld, &a, &u, &u);
    let mut act_r = BilinearMap::zero(fld, &u, &a, &u);
    let mut coact_l = BilinearMap::zero(fld, &a, &u, &a);
    let mut coact_r = BilinearMap::zero(fld, &u, &a, &a);
    for i in 0..n {
        act_l.set(i, 0, 0, f.lambda.coeffs()[i].clone());
        act_r.set(0, i, 0, f.mu.coeffs()[i].clone());
        for k in 0..n {
            coact_l.set(i, 0, k, f.t.get(k, i).clone());
            coact_r.set(0, i, k, f.d.get(k, i).clone());
        }
    }
    let mut vmul = BilinearMap::zero(fld, &u, &u, &u);
    vmul.set(0, 0, 0, f.k0.clone());
    let mut cocycle = BilinearMap::zero(fld, &u, &u, &a);
    for (k, c) in f.x0.iter().enumerate() {
        cocycle.set(0, 0, k, c.clone());
    }
    ExtendingDatum::new(f.alg.clone(), u, DatumMaps { act_l, act_r, coact_l, coact_r, vmul, cocycle })
        .expect("flag shapes")
}

/// Reads `(λ, μ, D, T, x0, k0)` off a datum with `dim V = 1`.
pub fn datum_to_flag(d: &ExtendingDatum) -> Result<FlagDatum> {
    if d.ext().dim() != 1 {
        return Err(Error::dims("a flag datum needs dim V = 1"));
    }
    let mut f = FlagDatum::zero(d.alg().clone());
    let n = d.alg().dim();
    let fld = d.field();
    let lambda = (0..n).map(|i| d.act_l().get(i, 0, 0).clone()).collect();
    let mu = (0..n).map(|i| d.act_r().get(0, i, 0).clone()).collect();
    f.lambda = LinearFunctional::new(fld, d.alg().space(), lambda)?;
    f.mu = LinearFunctional::new(fld, d.alg().space(), mu)?;
    for i in 0..n {
        for k in 0..n {
            f.t.set(k, i, d.coact_l().get(i, 0, k).clone());
            f.d.set(k, i, d.coact_r().get(0, i, k).clone());
        }
    }
    f.x0 = (0..n).map(|k| d.cocycle().get(0, 0, k).clone()).collect();
    f.k0 = d.vmul().get(0, 0, 0).clone();
    Ok(f)
}

pub fn flag_signature(f: &FlagDatum) -> Signature {
    let mut sig = Signature::new(f.alg.field(), f.alg.dim(), 1);
    sig.op("\\circ", Sort::A, Sort::A, Sort::A, f.alg.product())
        .functional("\\lambda", Sort::A, &f.lambda)
        .functional("\\mu", Sort::A, &f.mu)
        .map("D", Sort::A, Sort::A, &f.d)
        .map("T", Sort::A, Sort::A, &f.t)
        .vector("x_0", Sort::A, &f.x0)
        .scalar("k_0", &f.k0);
    sig
}

/// Oracle: the unified product of the induced datum is alternative. The
/// printed C1–C13 are evaluated alongside, advisory.
pub fn check_flag(f: &FlagDatum) -> Report {
    Report::new(
        "flag",
        is_alternative(&unified_product(&flag_to_datum(f))),
        printed::evaluate_all(catalog::FLAG, &flag_signature(f)),
    )
}

/// Dense `A ⊕ Ku` tensor built straight from flag coordinates, with the
/// linearized alternative identities grouped by how many `u` they involve.
struct FlagFrame {
    field: Field,
    n: usize,
    a: Vec<Scalar>,
    layout: Layout,
    /// Basis triples of `A ⊕ Ku` by number of `u` entries.
    triples: [Vec<(usize, usize, usize)>; 4],
}

impl FlagFrame {
    fn new(alg: &Algebra) -> Self {
        let n = alg.dim();
        let mut triples: [Vec<(usize, usize, usize)>; 4] = Default::default();
        for i in 0..=n {
            for j in 0..=n {
                for k in 0..=n {
                    let c = [i, j, k].iter().filter(|&&x| x == n).count();
                    triples[c].push((i, j, k));
                }
            }
        }
        FlagFrame { field: alg.field(), n, a: alg.product().data().to_vec(), layout: Layout::new(n), triples }
    }

    fn tensor(&self, theta: &[Scalar]) -> Vec<Scalar> {
        let (n, l) = (self.n, self.layout);
        let e = n + 1;
        let mut t = vector::zeros(self.field, e * e * e);
        let at = |i: usize, j: usize, k: usize| (i * e + j) * e + k;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t[at(i, j, k)] = self.a[(i * n + j) * n + k].clone();
                }
            }
            for k in 0..n {
                t[at(i, n, k)] = theta[l.t + k * n + i].clone();
                t[at(n, i, k)] = theta[l.d + k * n + i].clone();
            }
            t[at(i, n, n)] = theta[l.lambda + i].clone();
            t[at(n, i, n)] = theta[l.mu + i].clone();
        }
        for k in 0..n {
            t[at(n, n, k)] = theta[l.x0 + k].clone();
        }
        t[at(n, n, n)] = theta[l.k0].clone();
        t
    }

    /// `(e_i e_j) e_k − e_i (e_j e_k)`
    fn associator(&self, t: &[Scalar], i: usize, j: usize, k: usize) -> Vector {
        let e = self.n + 1;
        let mut out = vector::zeros(self.field, e);
        for l in 0..e {
            let c = &t[(i * e + j) * e + l];
            if !c.is_zero() {
                for (m, o) in out.iter_mut().enumerate() {
                    fma(o, c, &t[(l * e + k) * e + m]);
                }
            }
            let c = -&t[(j * e + k) * e + l];
            if !c.is_zero() {
                for (m, o) in out.iter_mut().enumerate() {
                    fma(o, &c, &t[(i * e + l) * e + m]);
                }
            }
        }
        out
    }

    /// Both linearized identities on every triple with `u_count` entries `u`.
    fn defects(&self, theta: &[Scalar], classes: &[usize]) -> Vector {
        let t = self.tensor(theta);
        let mut out = Vec::new();
        for &c in classes {
            for &(i, j, k) in &self.triples[c] {
                let ijk = self.associator(&t, i, j, k);
                out.extend(vector::add(&ijk, &self.associator(&t, j, i, k)));
                out.extend(vector::add(&ijk, &self.associator(&t, i, k, j)));
            }
        }
        out
    }
}

/// Equations `F(y) = 0` for `F` affine, read off by evaluating at `0` and
/// at the unit vectors.
fn probe_affine(field: Field, nvars: usize, f: impl Fn(&[Scalar]) -> Vector) -> Vec<AffineEquation> {
    let zero = vector::zeros(field, nvars);
    let base = f(&zero);
    let cols: Vec<Vector> = (0..nvars).map(|k| vector::sub(&f(&vector::basis(field, nvars, k)), &base)).collect();
    (0..base.len())
        .map(|r| AffineEquation { coeffs: cols.iter().map(|c| c[r].clone()).collect(), rhs: -&base[r] })
        .filter(|eq| !(eq.rhs.is_zero() && eq.coeffs.iter().all(Scalar::is_zero)))
        .collect()
}

/// Every valid flag datum of `alg` over a finite field, sorted by
/// coordinates.
///
/// Characters first: for fixed `(λ, μ)` the identities with one `u` are
/// affine in `(D, T)`; for fixed `(λ, μ, D, T, k0)` the rest are affine in
/// `x0`. Each candidate is then re-checked by the oracle. `budget` bounds
/// the number of `(λ, μ)` cells plus `(D, T, k0)` cells visited.
pub fn enumerate_flags(alg: &Algebra, budget: u128) -> Result<Vec<FlagDatum>> {
    let field = alg.field();
    let q = field.order().ok_or(Error::InfiniteField)?;
    let n = alg.dim();
    let cells = pow_count(q, 2 * n);
    within_budget(cells, budget)?;
    if !is_alternative(alg).is_pass() {
        return Ok(Vec::new());
    }
    let frame = FlagFrame::new(alg);
    let l = frame.layout;
    let elements = field.elements().expect("finite");
    let dt_len = 2 * n * n;

    // Stage 1: (λ, μ) cells with their affine (D, T) solution sets.
    let stage1: Vec<(Vector, crate::linear::Solution)> = (0..cells)
        .into_par_iter()
        .filter_map(|idx| {
            let lm = nth_tuple(&elements, 2 * n, idx);
            let mut theta = vector::zeros(field, flag_coord_len(n));
            theta[..2 * n].clone_from_slice(&lm);
            let eqs = probe_affine(field, dt_len, |y| {
                let mut th = theta.clone();
                th[l.d..l.x0].clone_from_slice(y);
                frame.defects(&th, &[1])
            });
            match solve_linear(field, dt_len, &eqs) {
                crate::linear::Solution::NoSolution => None,
                s => Some((lm, s)),
            }
        })
        .collect();
    let visited: u128 = stage1.iter().map(|(_, s)| s.count(field).unwrap_or(u128::MAX).saturating_mul(q as u128)).sum();
    within_budget(cells.saturating_add(visited), budget)?;

    // Stage 2: for each (λ, μ, D, T) and k0, the remaining identities in x0.
    let mut partial = Vec::new();
    for (lm, s) in &stage1 {
        for y in s.points(field)? {
            let mut theta = vector::zeros(field, flag_coord_len(n));
            theta[..2 * n].clone_from_slice(lm);
            theta[l.d..l.x0].clone_from_slice(&y);
            partial.push(theta);
        }
    }
    let found: Vec<Vec<Vector>> = partial
        .par_iter()
        .map(|theta| {
            let mut out = Vec::new();
            for k0 in &elements {
                let mut th = theta.clone();
                th[l.k0] = k0.clone();
                let eqs = probe_affine(field, n, |x0| {
                    let mut t2 = th.clone();
                    t2[l.x0..l.k0].clone_from_slice(x0);
                    frame.defects(&t2, &[2, 3])
                });
                for x0 in solve_linear(field, n, &eqs).points(field).expect("finite field") {
                    let mut t2 = th.clone();
                    t2[l.x0..l.k0].clone_from_slice(&x0);
                    out.push(t2);
                }
            }
            out
        })
        .collect();
    let mut thetas: Vec<Vector> = found.into_iter().flatten().collect();
    thetas.sort_by_key(|t| vector::residues(t));
    thetas
        .into_par_iter()
        .map(|t| FlagDatum::from_coords(alg.clone(), &t))
        .filter(|f| f.as_ref().map_or(true, check_flag_oracle))
        .collect()
}

fn check_flag_oracle(f: &FlagDatum) -> bool {
    is_alternative(&unified_product(&flag_to_datum(f))).is_pass()
}

/// Brute force over all `p^(2n + 2n² + n + 1)` flag datums, oracle-filtered,
/// in coordinate order.
pub fn enumerate_flags_raw(alg: &Algebra, budget: u128) -> Result<Vec<FlagDatum>> {
    let field = alg.field();
    let q = field.order().ok_or(Error::InfiniteField)?;
    let len = flag_coord_len(alg.dim());
    let total = pow_count(q, len);
    within_budget(total, budget)?;
    let elements = field.elements().expect("finite");
    let frame = FlagFrame::new(alg);
    let all = [0, 1, 2, 3];
    (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let theta = nth_tuple(&elements, len, idx);
            vector::is_zero(&frame.defects(&theta, &all)).then_some(theta)
        })
        .map(|t| FlagDatum::from_coords(alg.clone(), &t))
        .filter(|f| f.as_ref().map_or(true, check_flag_oracle))
        .collect()
}

/// `x≪u = D_<(x) + λ_≺(x)u`, `x≫u = D_>(x) + λ_≻(x)u`,
/// `u≪x = T_<(x) + μ_≺(x)u`, `u≫x = T_>(x) + μ_≻(x)u`,
/// `u≪u = y0 + l0·u`, `u≫u = x0 + k0·u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreFlagDatum {
    pub prealg: PreAlgebra,
    pub lambda_prec: LinearFunctional,
    pub lambda_succ: LinearFunctional,
    pub mu_prec: LinearFunctional,
    pub mu_succ: LinearFunctional,
    pub d_lt: LinearMap,
    pub d_gt: LinearMap,
    pub t_lt: LinearMap,
    pub t_gt: LinearMap,
    pub x0: Vector,
    pub y0: Vector,
    pub k0: Scalar,
    pub l0: Scalar,
}

impl PreFlagDatum {
    pub fn zero(prealg: PreAlgebra) -> Self {
        let (f, a) = (prealg.field(), prealg.space().clone());
        let func = LinearFunctional::zero(f, &a);
        let map = LinearMap::zero(f, &a, &a);
        PreFlagDatum {
            lambda_prec: func.clone(),
            lambda_succ: func.clone(),
            mu_prec: func.clone(),
            mu_succ: func,
            d_lt: map.clone(),
            d_gt: map.clone(),
            t_lt: map.clone(),
            t_gt: map,
            x0: vector::zeros(f, a.dim()),
            y0: vector::zeros(f, a.dim()),
            k0: f.zero(),
            l0: f.zero(),
            prealg,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.prealg.dim();
        let f = self.prealg.field();
        for l in [&self.lambda_prec, &self.lambda_succ, &self.mu_prec, &self.mu_succ] {
            ensure_field(f, l.field())?;
            if l.src().dim() != n {
                return Err(Error::dims("functionals must be defined on A"));
            }
        }
        for m in [&self.d_lt, &self.d_gt, &self.t_lt, &self.t_gt] {
            ensure_field(f, m.field())?;
            if (m.src().dim(), m.dst().dim()) != (n, n) {
                return Err(Error::dims("maps must be A→A"));
            }
        }
        if self.x0.len() != n || self.y0.len() != n {
            return Err(Error::dims("x0 and y0 must lie in A"));
        }
        Ok(())
    }
}

pub fn pre_flag_to_datum(f: &PreFlagDatum) -> PreExtendingDatum {
    let mut d = PreExtendingDatum::zero(f.prealg.clone(), &line());
    let n = f.prealg.dim();
    let m = d.maps_mut();
    for i in 0..n {
        m.prec_l.set(i, 0, 0, f.lambda_prec.coeffs()[i].clone());
        m.succ_l.set(i, 0, 0, f.lambda_succ.coeffs()[i].clone());
        m.prec_r.set(0, i, 0, f.mu_prec.coeffs()[i].clone());
        m.succ_r.set(0, i, 0, f.mu_succ.coeffs()[i].clone());
        for k in 0..n {
            m.lt_l.set(i, 0, k, f.d_lt.get(k, i).clone());
            m.gt_l.set(i, 0, k, f.d_gt.get(k, i).clone());
            m.lt_r.set(0, i, k, f.t_lt.get(k, i).clone());
            m.gt_r.set(0, i, k, f.t_gt.get(k, i).clone());
        }
        m.cocycle_prec.set(0, 0, i, f.y0[i].clone());
        m.cocycle_succ.set(0, 0, i, f.x0[i].clone());
    }
    m.vmul_lt.set(0, 0, 0, f.l0.clone());
    m.vmul_gt.set(0, 0, 0, f.k0.clone());
    d
}

pub fn pre_flag_signature(f: &PreFlagDatum) -> Signature {
    use Sort::A;
    let p = &f.prealg;
    let mut sig = Signature::new(p.field(), p.dim(), 1);
    sig.op("\\prec", A, A, A, p.prec())
        .op("\\succ", A, A, A, p.succ())
        .op_sum("\\circ", A, A, A, &[p.prec(), p.succ()])
        .functional("\\lambda_\\prec", A, &f.lambda_prec)
        .functional("\\lambda_\\succ", A, &f.lambda_succ)
        .functional("\\mu_\\prec", A, &f.mu_prec)
        .functional("\\mu_\\succ", A, &f.mu_succ)
        .map("D_<", A, A, &f.d_lt)
        .map("D_>", A, A, &f.d_gt)
        .map("T_<", A, A, &f.t_lt)
        .map("T_>", A, A, &f.t_gt)
        .vector("x_0", A, &f.x0)
        .vector("y_0", A, &f.y0)
        .scalar("k_0", &f.k0)
        .scalar("l_0", &f.l0);
    sig
}

/// Oracle: the pre-unified product of the induced datum is pre-alternative.
/// The printed P1–P11 are evaluated alongside, advisory.
pub fn check_pre_flag(f: &PreFlagDatum) -> Report {
    Report::new(
        "preflag",
        is_pre_alternative(&pre_unified_product(&pre_flag_to_datum(f))),
        printed::evaluate_all(catalog::PRE_FLAG, &pre_flag_signature(f)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::is_bimodule;
    use crate::cayley_dickson::octonions;
    use crate::library;

    #[test]
    fn zero_flag_passes_and_skips_broken_conditions() {
        let f = FlagDatum::zero(library::dual_numbers(Field::Prime(5)));
        let r = check_flag(&f);
        assert!(r.is_pass());
        for id in ["C5", "C6", "C7"] {
            assert!(r.condition(id).unwrap().is_skipped(), "{id}");
        }
        for id in ["C1", "C2", "C3", "C4", "C8", "C9", "C10", "C11", "C12", "C13"] {
            assert!(r.condition(id).unwrap().is_pass(), "{id}");
        }
    }

    #[test]
    fn adjoined_idempotent_on_octonions() {
        let mut f = FlagDatum::zero(octonions(Field::Rationals));
        f.k0 = Field::Rationals.one();
        assert!(check_flag(&f).is_pass());
    }

    #[test]
    fn datum_round_trip() {
        let fld = Field::Prime(5);
        let alg = library::dual_numbers(fld);
        let theta: Vec<_> = (0..flag_coord_len(2)).map(|i| fld.from_i64(i as i64)).collect();
        let f = FlagDatum::from_coords(alg, &theta).unwrap();
        assert_eq!(f.coords(), theta);
        assert_eq!(datum_to_flag(&flag_to_datum(&f)).unwrap(), f);
    }

    #[test]
    fn frame_tensor_matches_unified_product() {
        let fld = Field::Prime(5);
        let alg = library::dual_numbers(fld);
        let theta: Vec<_> = (0..flag_coord_len(2)).map(|i| fld.from_i64(3 * i as i64 + 1)).collect();
        let f = FlagDatum::from_coords(alg.clone(), &theta).unwrap();
        let frame = FlagFrame::new(&alg);
        assert_eq!(frame.tensor(&theta), unified_product(&flag_to_datum(&f)).product().data());
    }

    #[test]
    fn zero_dim_algebra_has_p_flags() {
        for p in [3, 5] {
            let fld = Field::prime_allowing_char3(p).unwrap();
            let flags = enumerate_flags(&library::zero(fld, 0), 1_000).unwrap();
            assert_eq!(flags.len(), p as usize);
        }
    }

    #[test]
    fn staged_matches_brute_force_in_dim_one() {
        for (p, alg) in [
            (3, library::ground(Field::Prime(3))),
            (5, library::ground(Field::Prime(5))),
            (5, library::zero(Field::Prime(5), 1)),
        ] {
            let staged = enumerate_flags(&alg, 1 << 20).unwrap();
            let raw = enumerate_flags_raw(&alg, 1 << 20).unwrap();
            assert_eq!(staged, raw, "p = {p}");
            assert!(!staged.is_empty());
            for f in &staged {
                assert!(is_bimodule(&flag_to_datum(f).bimodule()).is_pass());
            }
        }
    }

    #[test]
    fn pre_flag_zero_passes() {
        let p = PreAlgebra::zero(Field::Prime(5), &Space::numbered("e", 1));
        let r = check_pre_flag(&PreFlagDatum::zero(p));
        assert!(r.is_pass());
        assert!(r.discrepancies().is_empty());
        for id in ["P3", "P5", "P6"] {
            assert!(r.condition(id).unwrap().is_skipped(), "{id}");
        }
    }
}

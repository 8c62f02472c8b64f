//! Advisory evaluation of printed condition lists.
//!
//! A condition is LaTeX source over the sorts `A`, `V` and the scalars `K`.
//! Variables `x, y, z` range over a basis of `A` and `u, v, w` over a basis
//! of `V`. Every other symbol is resolved against a [`Signature`] by name and
//! argument sorts; anything unresolvable (unknown symbol, sort clash,
//! juxtaposed vectors, unparenthesized operator chain) makes the whole
//! condition `SkippedAmbiguous` with the reason. Parsed conditions pass iff
//! `lhs − rhs` vanishes on every basis assignment.

// Verbatim condition table, one entry per block.
#[rustfmt::skip]
pub mod catalog;
pub mod parse;

use std::collections::HashMap;

use crate::algebra::Witness;
use crate::bilinear::BilinearMap;
use crate::field::{Field, Scalar};
use crate::linear::{LinearFunctional, LinearMap};
use crate::report::{ConditionOutcome, ConditionResult};
use crate::vector::{self, Vector};

pub use parse::{normalize, parse_equation, Equation, Expr, ParseError};

/// One printed condition: an identifier and one or more equations.
#[derive(Clone, Copy, Debug)]
pub struct Printed {
    pub id: &'static str,
    pub equations: &'static [&'static str],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    A,
    V,
    K,
}

impl Sort {
    fn of_variable(name: &str) -> Option<Sort> {
        match name {
            "x" | "y" | "z" => Some(Sort::A),
            "u" | "v" | "w" => Some(Sort::V),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
struct Unary {
    map: LinearMap,
    out: Sort,
    inverse: Option<LinearMap>,
}

#[derive(Clone, Debug)]
struct Binary {
    map: BilinearMap,
    out: Sort,
}

/// Interpretation of the symbols a condition list may mention.
#[derive(Clone, Debug)]
pub struct Signature {
    field: Field,
    dim_a: usize,
    dim_v: usize,
    ops: HashMap<(String, Sort, Sort), Binary>,
    calls2: HashMap<(String, Sort, Sort), Binary>,
    calls1: HashMap<(String, Sort), Unary>,
    constants: HashMap<String, (Sort, Vector)>,
}

impl Signature {
    pub fn new(field: Field, dim_a: usize, dim_v: usize) -> Self {
        Signature {
            field,
            dim_a,
            dim_v,
            ops: HashMap::new(),
            calls2: HashMap::new(),
            calls1: HashMap::new(),
            constants: HashMap::new(),
        }
    }

    fn dim(&self, s: Sort) -> usize {
        match s {
            Sort::A => self.dim_a,
            Sort::V => self.dim_v,
            Sort::K => 1,
        }
    }

    fn check_shape(&self, m: &BilinearMap, l: Sort, r: Sort, out: Sort) {
        assert_eq!(
            (m.left().dim(), m.right().dim(), m.out().dim()),
            (self.dim(l), self.dim(r), self.dim(out)),
            "signature shape"
        );
    }

    /// Infix operator `sym` on `(l, r)`.
    pub fn op(&mut self, sym: &str, l: Sort, r: Sort, out: Sort, m: &BilinearMap) -> &mut Self {
        self.check_shape(m, l, r, out);
        self.ops.insert((sym.to_string(), l, r), Binary { map: m.clone(), out });
        self
    }

    /// Infix operator interpreted as the entrywise sum of several tensors.
    pub fn op_sum(&mut self, sym: &str, l: Sort, r: Sort, out: Sort, ms: &[&BilinearMap]) -> &mut Self {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = acc.add(m).expect("same shape");
        }
        self.op(sym, l, r, out, &acc)
    }

    /// Two-argument function such as `\omega(u, v)`.
    pub fn call2(&mut self, name: &str, l: Sort, r: Sort, out: Sort, m: &BilinearMap) -> &mut Self {
        self.check_shape(m, l, r, out);
        self.calls2.insert((name.to_string(), l, r), Binary { map: m.clone(), out });
        self
    }

    /// Linear map `name: src → dst`; `name^{-1}` resolves when invertible.
    pub fn map(&mut self, name: &str, src: Sort, dst: Sort, m: &LinearMap) -> &mut Self {
        assert_eq!((m.src().dim(), m.dst().dim()), (self.dim(src), self.dim(dst)), "signature shape");
        let inverse = if src == dst { m.inverse() } else { None };
        self.calls1.insert((name.to_string(), src), Unary { map: m.clone(), out: dst, inverse });
        self
    }

    /// Linear functional `name: A → K` (or `V → K`).
    pub fn functional(&mut self, name: &str, src: Sort, f: &LinearFunctional) -> &mut Self {
        let k = crate::space::Space::numbered("k", 1);
        let m = LinearMap::from_matrix(self.field, f.src(), &k, f.coeffs().to_vec()).expect("shape");
        self.map(name, src, Sort::K, &m)
    }

    pub fn vector(&mut self, name: &str, sort: Sort, v: &[Scalar]) -> &mut Self {
        assert_eq!(v.len(), self.dim(sort));
        self.constants.insert(name.to_string(), (sort, v.to_vec()));
        self
    }

    pub fn scalar(&mut self, name: &str, s: &Scalar) -> &mut Self {
        self.constants.insert(name.to_string(), (Sort::K, vec![s.clone()]));
        self
    }
}

/// A condition after parsing and type checking.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub id: String,
    equations: Vec<(Equation, Sort)>,
    /// Free variables in alphabetical order; witness args follow this order.
    pub variables: Vec<String>,
}

fn infer(e: &Expr, sig: &Signature) -> Result<Sort, String> {
    match e {
        Expr::Num(_) => Ok(Sort::K),
        Expr::Name(n) => {
            if let Some(s) = Sort::of_variable(n) {
                return Ok(s);
            }
            sig.constants.get(n).map(|(s, _)| *s).ok_or_else(|| format!("unknown symbol {n}"))
        }
        Expr::Call { name, power, inverse, args } => match args.as_slice() {
            [a] => {
                let s = infer(a, sig)?;
                let u = sig.calls1.get(&(name.clone(), s)).ok_or_else(|| format!("unknown map {name} on {s:?}"))?;
                if *inverse {
                    if u.inverse.is_none() {
                        return Err(format!("{name}^{{-1}} undefined"));
                    }
                    return Ok(s);
                }
                if *power > 1 && u.out != s {
                    return Err(format!("power of {name}: {s:?} → {:?}", u.out));
                }
                Ok(u.out)
            }
            [a, b] => {
                if *power != 1 || *inverse {
                    return Err(format!("exponent on two-argument {name}"));
                }
                let (sa, sb) = (infer(a, sig)?, infer(b, sig)?);
                sig.calls2
                    .get(&(name.clone(), sa, sb))
                    .map(|b| b.out)
                    .ok_or_else(|| format!("unknown function {name} on ({sa:?}, {sb:?})"))
            }
            _ => Err(format!("{name} with {} arguments", args.len())),
        },
        Expr::Op { sym, lhs, rhs } => {
            let (sl, sr) = (infer(lhs, sig)?, infer(rhs, sig)?);
            sig.ops
                .get(&(sym.clone(), sl, sr))
                .map(|b| b.out)
                .ok_or_else(|| format!("operator {sym} undefined on ({sl:?}, {sr:?})"))
        }
        Expr::Juxt(fs) => {
            let mut vector_sort = None;
            for f in fs {
                let s = infer(f, sig)?;
                if s != Sort::K {
                    if vector_sort.is_some() {
                        return Err("juxtaposition of two vectors".into());
                    }
                    vector_sort = Some(s);
                }
            }
            Ok(vector_sort.unwrap_or(Sort::K))
        }
        Expr::Sum(ts) => {
            let mut sort = None;
            for (_, t) in ts {
                let s = infer(t, sig)?;
                match sort {
                    None => sort = Some(s),
                    Some(prev) if prev != s => return Err(format!("sum of {prev:?} and {s:?}")),
                    _ => {}
                }
            }
            Ok(sort.expect("nonempty sum"))
        }
    }
}

/// Parses and type checks a printed condition.
pub fn compile(p: &Printed, sig: &Signature) -> Result<Compiled, String> {
    let mut equations = Vec::new();
    let mut variables: Vec<String> = Vec::new();
    for raw in p.equations {
        for text in normalize(raw) {
            let eq = parse_equation(&text).map_err(|e| format!("parse: {e}"))?;
            let (sl, sr) = (infer(&eq.lhs, sig)?, infer(&eq.rhs, sig)?);
            // a literal 0 side adopts the other side's sort
            let sort = match (&eq.lhs, &eq.rhs, sl, sr) {
                (_, Expr::Num(0), s, _) | (Expr::Num(0), _, _, s) => s,
                (_, _, a, b) if a == b => a,
                (_, _, a, b) => return Err(format!("equation sides {a:?} and {b:?}")),
            };
            let mut names = Vec::new();
            eq.lhs.names(&mut names);
            eq.rhs.names(&mut names);
            for n in names {
                if Sort::of_variable(&n).is_some() && !variables.contains(&n) {
                    variables.push(n);
                }
            }
            equations.push((eq, sort));
        }
    }
    if equations.is_empty() {
        return Err("no equation".into());
    }
    variables.sort();
    Ok(Compiled { id: p.id.to_string(), equations, variables })
}

struct Env<'a> {
    sig: &'a Signature,
    vars: &'a [String],
    values: &'a [usize],
}

impl Env<'_> {
    fn eval(&self, e: &Expr) -> (Sort, Vector) {
        let sig = self.sig;
        let f = sig.field;
        match e {
            Expr::Num(n) => (Sort::K, vec![f.from_i64(*n)]),
            Expr::Name(n) => {
                if let Some(s) = Sort::of_variable(n) {
                    let pos = self.vars.iter().position(|v| v == n).expect("bound variable");
                    return (s, vector::basis(f, sig.dim(s), self.values[pos]));
                }
                sig.constants[n].clone()
            }
            Expr::Call { name, power, inverse, args } => {
                if args.len() == 1 {
                    let (s, mut val) = self.eval(&args[0]);
                    let u = &sig.calls1[&(name.clone(), s)];
                    if *inverse {
                        return (s, u.inverse.as_ref().expect("checked").apply_unchecked(&val));
                    }
                    for _ in 0..*power {
                        val = u.map.apply_unchecked(&val);
                    }
                    (u.out, val)
                } else {
                    let (sa, a) = self.eval(&args[0]);
                    let (sb, b) = self.eval(&args[1]);
                    let m = &sig.calls2[&(name.clone(), sa, sb)];
                    (m.out, m.map.apply_unchecked(&a, &b))
                }
            }
            Expr::Op { sym, lhs, rhs } => {
                let (sa, a) = self.eval(lhs);
                let (sb, b) = self.eval(rhs);
                let m = &sig.ops[&(sym.clone(), sa, sb)];
                (m.out, m.map.apply_unchecked(&a, &b))
            }
            Expr::Juxt(fs) => {
                let mut coeff = f.one();
                let mut vec_part: Option<(Sort, Vector)> = None;
                for x in fs {
                    let (s, v) = self.eval(x);
                    if s == Sort::K {
                        coeff = &coeff * &v[0];
                    } else {
                        vec_part = Some((s, v));
                    }
                }
                match vec_part {
                    Some((s, v)) => (s, vector::scale(&coeff, &v)),
                    None => (Sort::K, vec![coeff]),
                }
            }
            Expr::Sum(ts) => {
                let mut acc: Option<(Sort, Vector)> = None;
                for (plus, t) in ts {
                    let (s, v) = self.eval(t);
                    let v = if *plus { v } else { vector::scale(&-f.one(), &v) };
                    acc = Some(match acc {
                        None => (s, v),
                        Some((s0, a)) => (s0, vector::add(&a, &v)),
                    });
                }
                acc.expect("nonempty sum")
            }
        }
    }
}

impl Compiled {
    fn defects(&self, sig: &Signature, values: &[usize]) -> Vec<Vector> {
        let env = Env { sig, vars: &self.variables, values };
        self.equations
            .iter()
            .map(|(eq, sort)| {
                let zero_side = || vector::zeros(sig.field, sig.dim(*sort));
                let l = if eq.lhs == Expr::Num(0) { zero_side() } else { env.eval(&eq.lhs).1 };
                let r = if eq.rhs == Expr::Num(0) { zero_side() } else { env.eval(&eq.rhs).1 };
                vector::sub(&l, &r)
            })
            .collect()
    }

    /// `lhs − rhs` of the first equation that fails at `args`, else of the
    /// first equation. `None` if `args` has the wrong length or range.
    pub fn defect_at(&self, sig: &Signature, args: &[usize]) -> Option<Vector> {
        if args.len() != self.variables.len() {
            return None;
        }
        for (v, &a) in self.variables.iter().zip(args) {
            if a >= sig.dim(Sort::of_variable(v).expect("variable")) {
                return None;
            }
        }
        let ds = self.defects(sig, args);
        ds.iter().find(|d| !vector::is_zero(d)).or(ds.first()).cloned()
    }

    /// First failing basis assignment in lexicographic order.
    pub fn evaluate(&self, sig: &Signature) -> ConditionOutcome {
        let dims: Vec<usize> =
            self.variables.iter().map(|v| sig.dim(Sort::of_variable(v).expect("variable"))).collect();
        if dims.contains(&0) {
            return ConditionOutcome::Pass;
        }
        let mut values = vec![0usize; dims.len()];
        loop {
            for d in self.defects(sig, &values) {
                if !vector::is_zero(&d) {
                    return ConditionOutcome::Fail { witness: Witness::new(self.id.clone(), values.clone(), &d) };
                }
            }
            // odometer, last variable fastest
            let mut k = dims.len();
            loop {
                if k == 0 {
                    return ConditionOutcome::Pass;
                }
                k -= 1;
                values[k] += 1;
                if values[k] < dims[k] {
                    break;
                }
                values[k] = 0;
            }
        }
    }
}

/// Evaluates one printed condition.
pub fn evaluate(p: &Printed, sig: &Signature) -> ConditionResult {
    let outcome = match compile(p, sig) {
        Ok(c) => c.evaluate(sig),
        Err(reason) => ConditionOutcome::SkippedAmbiguous { reason },
    };
    ConditionResult { id: p.id.to_string(), outcome }
}

/// Evaluates a whole list in order.
pub fn evaluate_all(list: &[Printed], sig: &Signature) -> Vec<ConditionResult> {
    list.iter().map(|p| evaluate(p, sig)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    fn alt_sig(a: &crate::Algebra) -> Signature {
        let mut s = Signature::new(a.field(), a.dim(), 0);
        s.op("\\circ", Sort::A, Sort::A, Sort::A, a.product());
        s
    }

    const LEFT: Printed = Printed {
        id: "left",
        equations: &[r"(x \circ y) \circ z - x\circ(y \circ z) + (y\circ x)\circ z - y\circ (x \circ z) = 0,"],
    };

    #[test]
    fn printed_alternative_law_matches_checker() {
        let f = Field::Rationals;
        let o = crate::cayley_dickson::octonions(f);
        assert_eq!(evaluate(&LEFT, &alt_sig(&o)).outcome, ConditionOutcome::Pass);
        let s = crate::cayley_dickson::sedenions(f);
        let r = evaluate(&LEFT, &alt_sig(&s));
        let ConditionOutcome::Fail { witness } = r.outcome else { panic!() };
        let expected = crate::algebra::alternative_defect(&s, crate::algebra::LEFT_ALTERNATIVE, &witness.args).unwrap();
        assert_eq!(witness.defect, expected.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    #[test]
    fn unknown_symbols_are_skipped() {
        let a = library::dual_numbers(Field::Prime(5));
        let p = Printed { id: "c", equations: &[r"\nu(x) = 0"] };
        assert!(matches!(evaluate(&p, &alt_sig(&a)).outcome, ConditionOutcome::SkippedAmbiguous { .. }));
        let p = Printed { id: "c", equations: &[r"x \trr y = 0"] };
        assert!(matches!(evaluate(&p, &alt_sig(&a)).outcome, ConditionOutcome::SkippedAmbiguous { .. }));
    }

    #[test]
    fn scalars_functionals_and_powers() {
        let f = Field::Prime(7);
        let a = library::truncated_polynomial(f, 2);
        let mut sig = alt_sig(&a);
        let space = a.space().clone();
        // D = multiplication by t: 1 ↦ t, t ↦ 0
        let mut d = LinearMap::zero(f, &space, &space);
        d.set(1, 0, f.one());
        sig.map("D", Sort::A, Sort::A, &d);
        let lam = LinearFunctional::new(f, &space, vec![f.one(), f.zero()]).unwrap();
        sig.functional("\\lambda", Sort::A, &lam);
        sig.scalar("k_0", &f.from_i64(3));
        sig.vector("x_0", Sort::A, &[f.zero(), f.one()]);
        let ok = Printed {
            id: "ok",
            equations: &[r"D^2(x) = 0,\quad 2\lambda(x \circ y) = \lambda(x)\lambda(y) + \lambda(y)\lambda(x)"],
        };
        assert_eq!(evaluate(&ok, &sig).outcome, ConditionOutcome::Pass);
        let bad = Printed { id: "bad", equations: &[r"k_0 x_0 = D(x)"] };
        let ConditionOutcome::Fail { witness } = evaluate(&bad, &sig).outcome else { panic!() };
        assert_eq!(witness.args, vec![0]);
        assert_eq!(witness.defect, vec!["0", "2"]);
    }
}

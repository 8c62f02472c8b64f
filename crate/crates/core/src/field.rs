//! Exact scalars over either the rationals or a prime field.
//!
//! A [`Scalar`] carries enough of its field to do arithmetic on its own, so
//! tensors can be plain `Vec<Scalar>`. Mixing scalars from different fields is
//! an internal error and panics; every public constructor that reads external
//! data checks fields up front and reports [`Error::FieldMismatch`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `F_p` for a prime `p >= 5`. Characteristic 2 and 3 are rejected.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) || p < 5 {
            return Err(Error::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// `F_p` allowing characteristic 3.
    ///
    /// Only reachable programmatically; the document parser never calls it.
    /// The linearized alternative identities still characterize alternativity
    /// in characteristic 3 because 2 is invertible there.
    pub fn prime_allowing_char3(p: u32) -> Result<Self> {
        if p == 3 {
            return Ok(Field::Prime(3));
        }
        Self::prime(p)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p as u64),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let p = *p as i64;
                Scalar::Residue { value: n.rem_euclid(p) as u32, modulus: p as u32 }
            }
        }
    }

    /// Residue `value mod p`; panics on the rationals.
    pub fn residue(&self, value: u64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Residue { value: (value % *p as u64) as u32, modulus: *p },
            Field::Rationals => panic!("residue() on the rationals"),
        }
    }

    /// All elements of a finite field in canonical order `0, 1, .., p-1`.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p as u64).map(|v| self.residue(v)).collect()),
            Field::Rationals => None,
        }
    }

    /// Parses a scalar literal (`-3`, `2/4`) into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::BadScalar(text.to_string()))?;
        let den = BigInt::from_str(den).map_err(|_| Error::BadScalar(text.to_string()))?;
        if den.is_zero() {
            return Err(Error::BadScalar(text.to_string()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |v: &BigInt| -> u64 {
                    let r = ((v % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits")
                };
                let d = reduce(&den);
                if d == 0 {
                    return Err(Error::BadScalar(text.to_string()));
                }
                let n = self.residue(reduce(&num));
                Ok(&n * &self.residue(d).inv().expect("nonzero residue"))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix('F')
                    .and_then(|rest| rest.parse::<u32>().ok())
                    .ok_or_else(|| Error::BadField(s.to_string()))?;
                Field::prime(p)
            }
        }
    }
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                let p = *modulus as u64;
                // Fermat: a^(p-2)
                let mut base = *value as u64;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Residue { value: acc as u32, modulus: *modulus }
            }
        })
    }

    /// Canonical residue, `None` over the rationals.
    pub fn residue_value(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[inline]
fn check_moduli(a: u32, b: u32) {
    assert_eq!(a, b, "scalar arithmetic across different prime fields");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                check_moduli(*modulus, *m2);
                let s = *a as u64 + *b as u64;
                let p = *modulus as u64;
                Scalar::Residue { value: (if s >= p { s - p } else { s }) as u32, modulus: *modulus }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => panic!("scalar arithmetic across fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                check_moduli(*modulus, *m2);
                let p = *modulus as u64;
                let s = *a as u64 + p - *b as u64;
                Scalar::Residue { value: (if s >= p { s - p } else { s }) as u32, modulus: *modulus }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => panic!("scalar arithmetic across fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                check_moduli(*modulus, *m2);
                Scalar::Residue { value: ((*a as u64 * *b as u64) % *modulus as u64) as u32, modulus: *modulus }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => panic!("scalar arithmetic across fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Residue { value, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                check_moduli(*modulus, *m2);
                let s = *value as u64 + *b as u64;
                let p = *modulus as u64;
                *value = (if s >= p { s - p } else { s }) as u32;
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => panic!("scalar arithmetic across fields"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

/// `acc += a * b`, the inner step of every contraction.
#[inline]
pub(crate) fn fma(acc: &mut Scalar, a: &Scalar, b: &Scalar) {
    match (&mut *acc, a, b) {
        (Scalar::Residue { value, modulus }, Scalar::Residue { value: x, .. }, Scalar::Residue { value: y, .. }) => {
            let p = *modulus as u64;
            *value = ((*value as u64 + (*x as u64 * *y as u64) % p) % p) as u32;
        }
        _ => {
            let prod = a * b;
            *acc += &prod;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_characteristic() {
        assert!(matches!(Field::prime(2), Err(Error::BadPrime(2))));
        assert!(matches!(Field::prime(3), Err(Error::BadPrime(3))));
        assert!(matches!(Field::prime(9), Err(Error::BadPrime(9))));
        assert_eq!(Field::prime(5).unwrap(), Field::Prime(5));
        assert_eq!(Field::prime_allowing_char3(3).unwrap(), Field::Prime(3));
        assert!(Field::prime_allowing_char3(2).is_err());
    }

    #[test]
    fn parse_canonicalizes() {
        let q = Field::Rationals;
        assert_eq!(q.parse_scalar("2/4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("-6/-3").unwrap().to_string(), "2");
        assert_eq!(q.parse_scalar("3/-6").unwrap().to_string(), "-1/2");
        let f5 = Field::Prime(5);
        assert_eq!(f5.parse_scalar("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse_scalar("1/2").unwrap().to_string(), "3");
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    #[test]
    fn field_names_round_trip() {
        for f in [Field::Rationals, Field::Prime(5), Field::Prime(101)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!(matches!("F3".parse::<Field>(), Err(Error::BadPrime(3))));
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn residue_inverse() {
        let f7 = Field::Prime(7);
        for v in 1..7 {
            let a = f7.residue(v);
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert!(f7.zero().inv().is_none());
    }
}

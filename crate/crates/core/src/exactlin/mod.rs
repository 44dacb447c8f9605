//! Exact scalar arithmetic over prime fields and the rationals.
//!
//! A [`Field`] value describes the active base field and owns all
//! arithmetic; a [`Scalar`] is a bare element. Prime field elements are
//! kept canonical in `[0, p)`, rationals are arbitrary precision and
//! always reduced. Nothing here rounds.

mod matrix;

pub use matrix::{LinSolution, Matrix, Rref};

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// An element of the active base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Canonical representative in `[0, p)`; the modulus lives in [`Field`].
    Fp(u64),
    Rat(BigRational),
}

/// Base field descriptor: a prime field `F_p` with `p < 2^31`, or the
/// rationals. All scalar operations go through this type so the modulus
/// is never duplicated into the elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Fp(u64),
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Prime field of order `p`. Fails unless `p` is a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Fp(p))
    }

    pub fn rational() -> Self {
        Field::Rational
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Fp(p) => *p,
            Field::Rational => 0,
        }
    }

    /// Number of elements for finite fields, `None` over the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Fp(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Fp(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Fp(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp((n.rem_euclid(*p as i64)) as u64),
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            // p < 2^31 so the product fits in a u64
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Fp(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i64, *p as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Scalar::Fp(s0.rem_euclid(*p as i64) as u64)
            }
            (Field::Rational, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Canonical text form: residue for `F_p`, reduced fraction for the
    /// rationals. Round-trips through [`Field::parse_scalar`].
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Fp(x) => x.to_string(),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("cannot parse scalar {s:?}"));
        match self {
            Field::Fp(p) => {
                let v: i64 = s.parse().map_err(|_| bad())?;
                Ok(Scalar::Fp(v.rem_euclid(*p as i64) as u64))
            }
            Field::Rational => {
                if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(Scalar::Rat(BigRational::from_integer(n)))
                }
            }
        }
    }

    /// Uniform random element (small numerators/denominators over the
    /// rationals, so witnesses stay readable).
    pub fn random(&self, rng: &mut impl rand::Rng) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp(rng.gen_range(0..*p)),
            Field::Rational => {
                let n = rng.gen_range(-9i64..=9);
                let d = rng.gen_range(1i64..=4);
                Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
        }
    }

    /// The `idx`-th field element under a fixed enumeration; only
    /// available over finite fields. Used by exhaustive searches.
    pub fn element(&self, idx: u64) -> Scalar {
        match self {
            Field::Fp(p) => {
                assert!(idx < *p);
                Scalar::Fp(idx)
            }
            Field::Rational => panic!("cannot enumerate the rationals"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "F{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl Field {
    pub fn parse_descriptor(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rational") {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix('F') {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad field descriptor {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::Invalid(format!("bad field descriptor {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_is_canonical() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, Scalar::Fp(2));
        assert_eq!(f.add(&a, &f.from_i64(3)), Scalar::Fp(0));
        assert_eq!(f.inv(&Scalar::Fp(2)), Scalar::Fp(3));
        assert_eq!(f.mul(&Scalar::Fp(2), &Scalar::Fp(3)), Scalar::Fp(1));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::rational();
        let third = f.parse_scalar("1/3").unwrap();
        let sum = f.add(&f.add(&third, &third), &third);
        assert!(f.is_one(&sum));
        assert_eq!(f.format_scalar(&third), "1/3");
        assert_eq!(f.format_scalar(&f.neg(&third)), "-1/3");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn field_inverse_round_trip() {
        let f = Field::prime(97).unwrap();
        for x in 1..97u64 {
            let inv = f.inv(&Scalar::Fp(x));
            assert!(f.is_one(&f.mul(&Scalar::Fp(x), &inv)));
        }
    }
}

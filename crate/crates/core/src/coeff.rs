//! Exact coefficient arithmetic over Q, Z, and prime fields F_p.
//!
//! A [`Coeff`] is a bare value; all arithmetic goes through the owning
//! [`CoeffDomain`] so that F_p elements know their modulus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Rational,
    Integer,
    Prime(u64),
}

/// A coefficient value; the variant must match the domain that operates on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Int(BigInt),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn fp_reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    r.to_u64().expect("residue fits in u64")
}

fn fp_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl CoeffDomain {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoeffDomain::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffDomain::Integer)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoeffDomain::Prime(p) => Some(*p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffDomain::Rational => Coeff::Rat(BigRational::zero()),
            CoeffDomain::Integer => Coeff::Int(BigInt::zero()),
            CoeffDomain::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffDomain::Rational => Coeff::Rat(BigRational::one()),
            CoeffDomain::Integer => Coeff::Int(BigInt::one()),
            CoeffDomain::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            CoeffDomain::Rational => Coeff::Rat(BigRational::from_integer(v.clone())),
            CoeffDomain::Integer => Coeff::Int(v.clone()),
            CoeffDomain::Prime(p) => Coeff::Fp(fp_reduce_bigint(v, *p)),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_bigint(&BigInt::from(v))
    }

    /// Interprets the literal n/d. Over Z this requires d | n; over F_p it
    /// requires p not to divide d.
    pub fn ratio(&self, n: &BigInt, d: &BigInt) -> Result<Coeff> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            CoeffDomain::Rational => Ok(Coeff::Rat(BigRational::new(n.clone(), d.clone()))),
            CoeffDomain::Integer => {
                let (q, r) = n.div_rem(d);
                if r.is_zero() {
                    Ok(Coeff::Int(q))
                } else {
                    Err(Error::CoefficientNotInDomain(format!("{n}/{d} over Z")))
                }
            }
            CoeffDomain::Prime(_) => {
                let nc = self.from_bigint(n);
                let dc = self.from_bigint(d);
                self.div(&nc, &dc)
            }
        }
    }

    fn expect_match<'a>(&self, c: &'a Coeff) -> &'a Coeff {
        let ok = matches!(
            (self, c),
            (CoeffDomain::Rational, Coeff::Rat(_))
                | (CoeffDomain::Integer, Coeff::Int(_))
                | (CoeffDomain::Prime(_), Coeff::Fp(_))
        );
        assert!(ok, "coefficient {c:?} does not belong to domain {self:?}");
        c
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.expect_match(a), self.expect_match(b)) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = self.modulus().unwrap();
                Coeff::Fp(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let nb = self.neg(b);
        self.add(a, &nb)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match self.expect_match(a) {
            Coeff::Rat(x) => Coeff::Rat(-x),
            Coeff::Int(x) => Coeff::Int(-x),
            Coeff::Fp(x) => {
                let p = self.modulus().unwrap();
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.expect_match(a), self.expect_match(b)) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = self.modulus().unwrap();
                Coeff::Fp((*x as u128 * *y as u128 % p as u128) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.expect_match(a) {
            Coeff::Rat(x) => Ok(Coeff::Rat(x.recip())),
            Coeff::Int(x) => {
                if x.abs().is_one() {
                    Ok(Coeff::Int(x.clone()))
                } else {
                    Err(Error::CoefficientNotInDomain(format!("1/{x} over Z")))
                }
            }
            Coeff::Fp(x) => {
                let p = self.modulus().unwrap();
                Ok(Coeff::Fp(fp_pow(*x, p - 2, p)))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        match (self.expect_match(a), self.expect_match(b)) {
            (Coeff::Int(x), Coeff::Int(y)) => {
                if y.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Ok(Coeff::Int(q))
                } else {
                    Err(Error::CoefficientNotInDomain(format!("{x}/{y} over Z")))
                }
            }
            _ => {
                let bi = self.inv(b)?;
                Ok(self.mul(a, &bi))
            }
        }
    }

    /// Maps a coefficient from another domain into this one where a canonical
    /// map exists: Z -> Q, Z -> F_p, Q -> F_p (denominator prime to p),
    /// Q -> Z (integral values only), plus the identity.
    pub fn convert(&self, c: &Coeff) -> Result<Coeff> {
        match (c, self) {
            (Coeff::Int(_), CoeffDomain::Integer)
            | (Coeff::Rat(_), CoeffDomain::Rational)
            | (Coeff::Fp(_), CoeffDomain::Prime(_)) => Ok(c.clone()),
            (Coeff::Int(v), CoeffDomain::Rational) => {
                Ok(Coeff::Rat(BigRational::from_integer(v.clone())))
            }
            (Coeff::Int(v), CoeffDomain::Prime(p)) => Ok(Coeff::Fp(fp_reduce_bigint(v, *p))),
            (Coeff::Rat(v), CoeffDomain::Integer) => {
                if v.is_integer() {
                    Ok(Coeff::Int(v.to_integer()))
                } else {
                    Err(Error::CoefficientNotInDomain(format!("{v} over Z")))
                }
            }
            (Coeff::Rat(v), CoeffDomain::Prime(_)) => self.ratio(v.numer(), v.denom()),
            (Coeff::Fp(_), _) => Err(Error::CoefficientNotInDomain(
                "F_p values do not lift canonically".into(),
            )),
        }
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Int(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Int(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// True for values printed with a leading minus sign (never for F_p).
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_negative(),
            Coeff::Int(x) => x.is_negative(),
            Coeff::Fp(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rat(x) => Coeff::Rat(x.abs()),
            Coeff::Int(x) => Coeff::Int(x.abs()),
            Coeff::Fp(x) => Coeff::Fp(*x),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Int(x) => write!(f, "{x}"),
            Coeff::Fp(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(CoeffDomain::prime(2).is_ok());
        assert!(CoeffDomain::prime(3).is_ok());
        assert!(CoeffDomain::prime(5).is_ok());
        assert_eq!(CoeffDomain::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(CoeffDomain::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn fp_field_ops() {
        let f5 = CoeffDomain::prime(5).unwrap();
        let a = f5.from_i64(7);
        assert_eq!(a, Coeff::Fp(2));
        let b = f5.from_i64(-1);
        assert_eq!(b, Coeff::Fp(4));
        assert_eq!(f5.add(&a, &b), Coeff::Fp(1));
        assert_eq!(f5.mul(&a, &b), Coeff::Fp(3));
        let inv = f5.inv(&a).unwrap();
        assert_eq!(f5.mul(&a, &inv), Coeff::Fp(1));
    }

    #[test]
    fn integer_division_is_exact_only() {
        let z = CoeffDomain::Integer;
        let six = z.from_i64(6);
        let three = z.from_i64(3);
        let four = z.from_i64(4);
        assert_eq!(z.div(&six, &three).unwrap(), z.from_i64(2));
        assert!(z.div(&six, &four).is_err());
        assert!(z
            .ratio(&BigInt::from(1), &BigInt::from(2))
            .is_err());
    }

    #[test]
    fn rational_literals_reduce() {
        let q = CoeffDomain::Rational;
        let half = q.ratio(&BigInt::from(2), &BigInt::from(4)).unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = q.ratio(&BigInt::from(1), &BigInt::from(-2)).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
    }

    #[test]
    fn conversions() {
        let z = CoeffDomain::Integer;
        let q = CoeffDomain::Rational;
        let f3 = CoeffDomain::prime(3).unwrap();
        let v = z.from_i64(-4);
        assert_eq!(q.convert(&v).unwrap().to_string(), "-4");
        assert_eq!(f3.convert(&v).unwrap(), Coeff::Fp(2));
        let half = q.ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f3.convert(&half).unwrap(), Coeff::Fp(2));
        assert!(z.convert(&half).is_err());
        let third = q.ratio(&BigInt::from(1), &BigInt::from(3)).unwrap();
        assert!(f3.convert(&third).is_err());
    }
}

//! Exact coefficient rings: the rationals and prime fields `F_p`.
//!
//! All generators in this crate have integer coefficients, so working over
//! `F_p` instead of its algebraic closure does not change any dimension.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffRing {
    Rational,
    Prime(u64),
}

/// A ring element. `Mod` values are always reduced into `[0, p)` for the
/// prime of the ring they were produced by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u64),
}

pub fn is_prime(p: u64) -> bool {
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

impl CoeffRing {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return invalid(format!("{p} is not prime"));
        }
        if p > u32::MAX as u64 {
            return invalid(format!("prime {p} too large; products must fit in 64 bits"));
        }
        Ok(CoeffRing::Prime(p))
    }

    /// `0` means the rationals.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(CoeffRing::Rational)
        } else {
            CoeffRing::prime(p)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffRing::Rational => 0,
            CoeffRing::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rat(BigRational::zero()),
            CoeffRing::Prime(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rat(BigRational::one()),
            CoeffRing::Prime(_) => Coeff::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rat(BigRational::from_integer(v.into())),
            CoeffRing::Prime(p) => Coeff::Mod(v.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rat(BigRational::from_integer(v.clone())),
            CoeffRing::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coeff::Mod(r.to_u64().expect("residue fits"))
            }
        }
    }

    /// Maps a rational into the ring. Fails in `F_p` when `p` divides the
    /// denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Coeff> {
        match self {
            CoeffRing::Rational => Ok(Coeff::Rat(v.clone())),
            CoeffRing::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                match self.inv(&den) {
                    Some(d) => Ok(self.mul(&num, &d)),
                    None => invalid(format!("denominator of {v} vanishes in characteristic {}", self.characteristic())),
                }
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(q) => q.is_zero(),
            Coeff::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(q) => q.is_one(),
            Coeff::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffRing::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoeffRing::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod((x + y) % p),
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffRing::Rational, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoeffRing::Prime(p), Coeff::Mod(x)) => Coeff::Mod((p - x) % p),
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffRing::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoeffRing::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod(x * y % p),
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (CoeffRing::Rational, Coeff::Rat(x)) => Some(Coeff::Rat(x.recip())),
            (CoeffRing::Prime(p), Coeff::Mod(x)) => Some(Coeff::Mod(pow_mod(*x, p - 2, *p))),
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `binom(n, k)` mapped into the ring. In `F_p` this uses Lucas' theorem.
    pub fn binomial(&self, n: u64, k: u64) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rat(BigRational::from_integer(binomial_int(n, k))),
            CoeffRing::Prime(p) => Coeff::Mod(binomial_mod_lucas(n, k, *p)),
        }
    }

    /// Whether a coefficient is compatible with this ring.
    pub fn owns(&self, a: &Coeff) -> bool {
        match (self, a) {
            (CoeffRing::Rational, Coeff::Rat(_)) => true,
            (CoeffRing::Prime(p), Coeff::Mod(v)) => v < p,
            _ => false,
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Rational => write!(f, "Q"),
            CoeffRing::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl Coeff {
    /// Whether printing needs a leading minus sign (always false in `F_p`).
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_negative(),
            Coeff::Mod(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rat(q) => Coeff::Rat(q.abs()),
            Coeff::Mod(v) => Coeff::Mod(*v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Exact `binom(n, k)`; zero when `k > n`.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    if n <= 62 {
        return BigInt::from(num_integer::binomial(n, k));
    }
    BigInt::from(num_integer::binomial(BigUint::from(n), BigUint::from(k)))
}

/// `binom(n, k) mod p` from the base-`p` digits of `n` and `k`.
pub fn binomial_mod_lucas(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binomial_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc % p
}

/// `binom(n, k) mod p` for digits `k <= n < p`.
fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 0..k {
        num = num * ((n - j) % p) % p;
        den = den * ((j + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(CoeffRing::prime(2).is_ok());
        assert!(CoeffRing::prime(7919).is_ok());
        assert!(CoeffRing::prime(1).is_err());
        assert!(CoeffRing::prime(9).is_err());
        assert_eq!(CoeffRing::from_characteristic(0).unwrap(), CoeffRing::Rational);
    }

    #[test]
    fn lucas_matches_direct_evaluation() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..=40u64 {
                for k in 0..=n {
                    let direct = binomial_int(n, k).mod_floor(&BigInt::from(p)).to_u64().unwrap();
                    assert_eq!(binomial_mod_lucas(n, k, p), direct, "binom({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn field_ops() {
        let f5 = CoeffRing::Prime(5);
        let three = f5.from_i64(3);
        assert_eq!(f5.mul(&three, &f5.inv(&three).unwrap()), f5.one());
        assert_eq!(f5.from_i64(-1), Coeff::Mod(4));
        assert!(f5.inv(&f5.zero()).is_none());
        let q = CoeffRing::Rational;
        let half = q.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(q.add(&half, &half), q.one());
        assert!(CoeffRing::Prime(2)
            .from_rational(&BigRational::new(1.into(), 2.into()))
            .is_err());
        assert_eq!(half.to_string(), "1/2");
    }
}

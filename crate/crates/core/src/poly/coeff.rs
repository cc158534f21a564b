use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational numbers, the default coefficient field.
pub type Rational = BigRational;

/// Field operations needed by polynomial arithmetic and division.
///
/// Values never need a global context: a prime-field element carries its
/// modulus, so constants are derived from existing values via [`Coeff::one_like`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, rhs: &Self) -> Self;
    /// True when the value is an integer (always true in a prime field).
    fn is_integral(&self) -> bool;
    /// Sign and magnitude used by the canonical text rendering.
    fn sign_magnitude(&self) -> (bool, String);
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn sign_magnitude(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// Element of GF(p) for a machine-word prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i128, modulus: u64) -> Self {
        let p = modulus as i128;
        Fp { value: value.rem_euclid(p) as u64, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Image of a rational under reduction mod p; `None` when p divides the denominator.
    pub fn from_rational(r: &Rational, modulus: u64) -> Option<Self> {
        let p = BigInt::from(modulus);
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        if den == 0 {
            return None;
        }
        let n = Fp { value: num, modulus };
        let d = Fp { value: den, modulus };
        Some(n.div(&d))
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Representative in (-p/2, p/2], so small integers render as themselves.
    fn symmetric(&self) -> i128 {
        if self.value > self.modulus / 2 {
            self.value as i128 - self.modulus as i128
        } else {
            self.value as i128
        }
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(rhs.value != 0, "division by zero in GF(p)");
        self.mul(&rhs.pow(self.modulus - 2))
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn sign_magnitude(&self) -> (bool, String) {
        let s = self.symmetric();
        (s < 0, s.unsigned_abs().to_string())
    }
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let p = 101;
        let a = Fp::new(7, p);
        let b = Fp::new(-3, p);
        assert_eq!(b.value(), 98);
        assert_eq!(a.add(&b), Fp::new(4, p));
        assert_eq!(a.div(&a), a.one_like());
        assert_eq!(a.mul(&a.div(&b)), Fp::new(49, p).div(&b));
        assert_eq!(b.sign_magnitude(), (true, "3".to_string()));
    }

    #[test]
    fn rational_reduction_mod_p() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let h = Fp::from_rational(&half, 7).unwrap();
        assert_eq!(h.mul(&Fp::new(2, 7)), Fp::new(1, 7));
        assert!(Fp::from_rational(&half, 2).is_none());
        assert_eq!(Fp::from_rational(&rational(-1), 7), Some(Fp::new(6, 7)));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
    }
}

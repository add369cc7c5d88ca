//! Prime fields GF(p) for primes below 2^32.
//!
//! Elements are canonical residues stored as `u64` in `0..p`. All products
//! go through `u128`, so no modulus below 2^32 can overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::field::{FieldOps, Rational, RingOps};
use crate::error::{Error, Result};

/// Deterministic primality test by trial division, valid for any `u64`
/// below 2^32 (the divisor scan stops at the square root, which fits in
/// `u32` for that range).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Descriptor for the field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds GF(p). Fails with [`Error::BadPrime`] unless `p` is a prime
    /// strictly below 2^32.
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1u64 << 32) {
            return Err(Error::BadPrime(p, "modulus must be below 2^32".into()));
        }
        if !is_prime(p) {
            return Err(Error::BadPrime(p, "modulus is not prime".into()));
        }
        Ok(PrimeField { p })
    }

    /// The modulus.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        r.to_u64().expect("residue fits in u64")
    }

    /// Reduces a rational number mod p. Fails with [`Error::BadPrime`] if p
    /// divides the denominator.
    pub fn from_rational(&self, q: &Rational) -> Result<u64> {
        let den = self.from_bigint(q.denom());
        if den == 0 {
            return Err(Error::BadPrime(
                self.p,
                format!("denominator of {} vanishes mod p", q),
            ));
        }
        let num = self.from_bigint(q.numer());
        let inv = self.inv(&den)?;
        Ok(self.mul(&num, &inv))
    }

    /// Modular exponentiation.
    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl RingOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i128;
        let r = (n as i128).rem_euclid(p);
        r as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Result<u64> {
        self.div(a, b)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FieldOps for PrimeField {
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // p is prime, so a^(p-2) is the inverse by Fermat's little theorem.
        Ok(self.pow(*a, self.p - 2))
    }
}

/// Reduces a rational to a residue, reporting which prime was at fault on
/// failure. Convenience wrapper used by the probe code.
pub fn rational_mod_p(field: &PrimeField, q: &Rational) -> Result<u64> {
    field.from_rational(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::ratio;

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(10007));
        assert!(is_prime(4294967291)); // largest prime below 2^32
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4294967295));
        assert!(!is_prime(10007 * 3));
    }

    #[test]
    fn constructor_rejects_non_primes_and_large_moduli() {
        assert!(PrimeField::new(10).is_err());
        assert!(PrimeField::new(1u64 << 33).is_err());
        assert!(PrimeField::new(10007).is_ok());
    }

    #[test]
    fn field_axioms_small() {
        let f = PrimeField::new(7).unwrap();
        for a in 0..7u64 {
            for b in 0..7u64 {
                assert_eq!(f.add(&a, &b), (a + b) % 7);
                assert_eq!(f.mul(&a, &b), (a * b) % 7);
            }
            if a != 0 {
                let inv = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &inv), 1);
            }
        }
    }

    #[test]
    fn rational_reduction() {
        let f = PrimeField::new(10007).unwrap();
        let q = ratio(1, 2);
        let r = f.from_rational(&q).unwrap();
        assert_eq!(f.mul(&r, &2), 1);
        // denominator divisible by p is rejected
        let bad = ratio(1, 10007);
        assert!(f.from_rational(&bad).is_err());
        // negative numerators land in canonical range
        let neg = f.from_rational(&ratio(-3, 1)).unwrap();
        assert_eq!(neg, 10007 - 3);
    }

    #[test]
    fn negation_wraps() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.neg(&2), 3);
        assert_eq!(f.from_i64(-7), 3);
    }
}

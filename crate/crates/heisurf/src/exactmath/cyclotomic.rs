//! Cyclotomic fields Q(zeta_n).
//!
//! Elements are represented on the power basis 1, z, ..., z^(phi(n)-1)
//! with rational coordinates, where z stands for a primitive n-th root of
//! unity and phi(n) is the degree of the n-th cyclotomic polynomial.
//! Reduction modulo that polynomial keeps representatives canonical, so
//! equality is coordinate-wise equality.

use num_traits::{One, Signed, Zero};

use super::field::{rat, FieldOps, Rational, RingOps, Sign};
use crate::error::{Error, Result};

/// Dense univariate polynomial utilities over the rationals. Index k holds
/// the coefficient of z^k.
fn trim(p: &mut Vec<Rational>) {
    while p.len() > 0 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if degree(a).is_none() || degree(b).is_none() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder by a polynomial with invertible leading
/// coefficient. Returns (quotient, remainder).
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = degree(den).expect("division by the zero polynomial");
    let lc = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    trim(&mut rem);
    let mut quo = vec![Rational::zero(); num.len().saturating_sub(dd)];
    while let Some(dr) = degree(&rem) {
        if dr < dd {
            break;
        }
        let factor = &rem[dr] / &lc;
        let shift = dr - dd;
        for (j, c) in den.iter().enumerate() {
            if !c.is_zero() {
                let t = &factor * c;
                rem[shift + j] -= t;
            }
        }
        if quo.len() <= shift {
            quo.resize(shift + 1, Rational::zero());
        }
        quo[shift] += factor;
        trim(&mut rem);
    }
    trim(&mut quo);
    (quo, rem)
}

/// The n-th cyclotomic polynomial as a dense coefficient vector (monic,
/// integer coefficients, index k holds the coefficient of z^k).
///
/// Computed by exact division: z^n - 1 divided by the product of the d-th
/// cyclotomic polynomials over the proper divisors d of n.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let n = n as usize;
    let mut num = vec![Rational::zero(); n + 1];
    num[0] = -Rational::one();
    num[n] = Rational::one();
    let mut result = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d as u32);
            let (q, r) = poly_divmod(&result, &phi_d);
            assert!(degree(&r).is_none(), "cyclotomic division must be exact");
            result = q;
        }
    }
    result
}

/// Element of a cyclotomic field: coordinates on the power basis, always
/// exactly phi(n) entries long.
pub type CycElem = Vec<Rational>;

/// Descriptor for Q(zeta_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    /// Builds Q(zeta_n) for `n >= 1`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn new(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let phi = degree(&modulus).expect("cyclotomic polynomial is nonzero");
        CyclotomicField { n, phi, modulus }
    }

    /// Order of the root of unity.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Reduces an arbitrary dense polynomial in z (index = power) to the
    /// canonical power-basis representative.
    pub fn reduce(&self, raw: &[Rational]) -> CycElem {
        let mut work: Vec<Rational> = raw.to_vec();
        if work.len() < self.phi {
            work.resize(self.phi, Rational::zero());
        }
        // Eliminate powers z^i with i >= phi using the monic modulus.
        for i in (self.phi..work.len()).rev() {
            if work[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut work[i], Rational::zero());
            for (j, m) in self.modulus.iter().take(self.phi).enumerate() {
                let t = &c * m;
                work[i - self.phi + j] -= t;
            }
        }
        work.truncate(self.phi);
        work
    }

    /// The basis element zeta^k for any integer k (negative powers wrap).
    pub fn zeta_pow(&self, k: i64) -> CycElem {
        let k = k.rem_euclid(self.n as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        self.reduce(&raw)
    }

    /// Embeds a rational number.
    pub fn embed(&self, q: &Rational) -> CycElem {
        let mut out = vec![Rational::zero(); self.phi];
        out[0] = q.clone();
        out
    }

    /// Returns the rational value if the element lies in the prime field.
    pub fn as_rational(&self, a: &CycElem) -> Option<Rational> {
        if a.iter().skip(1).all(|c| c.is_zero()) {
            Some(a[0].clone())
        } else {
            None
        }
    }
}

impl RingOps for CyclotomicField {
    type Elem = CycElem;

    fn zero(&self) -> CycElem {
        vec![Rational::zero(); self.phi]
    }

    fn one(&self) -> CycElem {
        self.embed(&Rational::one())
    }

    fn from_i64(&self, n: i64) -> CycElem {
        self.embed(&rat(n))
    }

    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &CycElem) -> CycElem {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let prod = poly_mul(a, b);
        self.reduce(&prod)
    }

    fn is_zero(&self, a: &CycElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    fn exact_div(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        self.div(a, b)
    }

    fn format(&self, a: &CycElem) -> String {
        let parts: Vec<(usize, &Rational)> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if parts.is_empty() {
            return "0".to_string();
        }
        let monomial = |k: usize, c: &Rational, lead: bool| -> String {
            let mut s = String::new();
            let (mag, neg) = if c.is_negative() {
                (-c, true)
            } else {
                (c.clone(), false)
            };
            if lead {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if k == 0 {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                s.push_str(&format!("zeta({})", self.n));
                if k > 1 {
                    s.push_str(&format!("^{}", k));
                }
            }
            s
        };
        if parts.len() == 1 {
            let (k, c) = parts[0];
            return monomial(k, c, true);
        }
        let mut s = String::from("(");
        for (idx, (k, c)) in parts.iter().enumerate() {
            s.push_str(&monomial(*k, c, idx == 0));
        }
        s.push(')');
        s
    }

    fn split_sign(&self, a: &CycElem) -> (Sign, CycElem) {
        match a.iter().find(|c| !c.is_zero()) {
            Some(first) if first.is_negative() => (Sign::Minus, self.neg(a)),
            _ => (Sign::Plus, a.clone()),
        }
    }
}

impl FieldOps for CyclotomicField {
    fn inv(&self, a: &CycElem) -> Result<CycElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid in Q[z]: s*a + t*modulus = gcd. The modulus is
        // irreducible, so the gcd is a nonzero constant and s/gcd inverts a.
        let mut r0: Vec<Rational> = self.modulus.clone();
        let mut r1: Vec<Rational> = a.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while degree(&r1).map_or(false, |d| d > 0) {
            let (q, r) = poly_divmod(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let mut s_next = s0.clone();
            s_next.resize(s_next.len().max(qs.len()), Rational::zero());
            for (i, c) in qs.iter().enumerate() {
                s_next[i] -= c;
            }
            trim(&mut s_next);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        let g = match degree(&r1) {
            Some(0) => r1[0].clone(),
            // a is a nonzero multiple of the irreducible modulus only if it
            // is zero in the field, which was excluded above.
            _ => unreachable!("gcd with an irreducible modulus is constant"),
        };
        let scaled: Vec<Rational> = s1.iter().map(|c| c / &g).collect();
        Ok(self.reduce(&scaled))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &[Rational]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        p.iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn cyclotomic_polynomial_table() {
        assert_eq!(coeffs(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn reduction_examples() {
        let f3 = CyclotomicField::new(3);
        // z^2 + z + 1 reduces to zero
        let raw = vec![rat(1), rat(1), rat(1)];
        assert!(f3.is_zero(&f3.reduce(&raw)));

        let f4 = CyclotomicField::new(4);
        // z^2 = -1
        assert_eq!(f4.zeta_pow(2), f4.from_i64(-1));

        let f6 = CyclotomicField::new(6);
        // z^3 = -1
        assert_eq!(f6.zeta_pow(3), f6.from_i64(-1));
    }

    #[test]
    fn root_of_unity_relations() {
        for n in 2..=12u32 {
            let f = CyclotomicField::new(n);
            // zeta^n = 1
            let mut p = f.one();
            for _ in 0..n {
                p = f.mul(&p, &f.zeta_pow(1));
            }
            assert_eq!(p, f.one(), "zeta({})^{} != 1", n, n);
            // sum over all n-th roots vanishes
            let s = f.sum((0..n as i64).map(|k| f.zeta_pow(k)));
            assert!(f.is_zero(&s), "root sum for n = {} is nonzero", n);
        }
    }

    #[test]
    fn inverses() {
        for n in [3u32, 4, 5, 8, 12] {
            let f = CyclotomicField::new(n);
            let a = f.add(&f.one(), &f.zeta_pow(1));
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), f.one(), "n = {}", n);
            // zeta^-1 agrees with zeta^(n-1)
            let zi = f.inv(&f.zeta_pow(1)).unwrap();
            assert_eq!(zi, f.zeta_pow(n as i64 - 1));
        }
    }

    #[test]
    fn formatting() {
        let f4 = CyclotomicField::new(4);
        assert_eq!(f4.format(&f4.zeta_pow(1)), "zeta(4)");
        assert_eq!(f4.format(&f4.neg(&f4.zeta_pow(1))), "-zeta(4)");
        assert_eq!(f4.format(&f4.from_i64(0)), "0");
        let f8 = CyclotomicField::new(8);
        let two_z3 = f8.mul(&f8.from_i64(2), &f8.zeta_pow(3));
        assert_eq!(f8.format(&two_z3), "2*zeta(8)^3");
        let mixed = f8.sub(&f8.one(), &f8.zeta_pow(3));
        assert_eq!(f8.format(&mixed), "(1 - zeta(8)^3)");
    }

    #[test]
    fn sign_split_uses_first_nonzero_coordinate() {
        let f3 = CyclotomicField::new(3);
        let a = f3.sub(&f3.zeta_pow(1), &f3.one()); // -1 + zeta
        let (sign, mag) = f3.split_sign(&a);
        assert_eq!(sign, Sign::Minus);
        assert_eq!(mag, f3.sub(&f3.one(), &f3.zeta_pow(1)));
    }
}

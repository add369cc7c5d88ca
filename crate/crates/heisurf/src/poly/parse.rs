//! Parser for the polynomial text grammar.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' uint)? | '(' expr ')'
//! coeff  := uint ('/' uint)? | 'zeta(' uint ')' ('^' uint)?
//! ```
//!
//! Whitespace is insignificant everywhere between tokens. A leading unary
//! minus before the first term (also inside parentheses) is accepted.
//! Errors carry the byte offset of the offending input.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactmath::{CyclotomicField, FieldOps, PrimeField, Rationals};

use super::ring::{MultiPoly, PolyRing};

/// Conversion of grammar literals into coefficients; implemented per field
/// so the same parser serves rational, prime-field, and cyclotomic rings.
pub trait CoeffFromLiteral: FieldOps {
    /// Builds `num / den`; `den` comes from the grammar as an unsigned
    /// integer so it is nonnegative, but may be zero (an error).
    fn coeff_from_fraction(&self, num: &BigInt, den: &BigInt, offset: usize)
        -> Result<Self::Elem>;

    /// Builds `zeta(order)^power`.
    fn coeff_zeta(&self, order: u32, power: u32, offset: usize) -> Result<Self::Elem>;
}

fn zero_denominator(offset: usize) -> Error {
    Error::SyntaxError {
        offset,
        message: "zero denominator in coefficient".into(),
    }
}

fn no_zeta_here(offset: usize) -> Error {
    Error::SyntaxError {
        offset,
        message: "zeta(...) literals require cyclotomic coefficients".into(),
    }
}

impl CoeffFromLiteral for Rationals {
    fn coeff_from_fraction(
        &self,
        num: &BigInt,
        den: &BigInt,
        offset: usize,
    ) -> Result<BigRational> {
        use num_traits::Zero;
        if den.is_zero() {
            return Err(zero_denominator(offset));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn coeff_zeta(&self, _order: u32, _power: u32, offset: usize) -> Result<BigRational> {
        Err(no_zeta_here(offset))
    }
}

impl CoeffFromLiteral for PrimeField {
    fn coeff_from_fraction(&self, num: &BigInt, den: &BigInt, offset: usize) -> Result<u64> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        use num_traits::Zero;
        if den.is_zero() {
            return Err(zero_denominator(offset));
        }
        if d == 0 {
            return Err(Error::BadPrime(
                self.modulus(),
                "denominator vanishes modulo p".into(),
            ));
        }
        self.div(&n, &d)
    }

    fn coeff_zeta(&self, _order: u32, _power: u32, offset: usize) -> Result<u64> {
        Err(no_zeta_here(offset))
    }
}

impl CoeffFromLiteral for CyclotomicField {
    fn coeff_from_fraction(
        &self,
        num: &BigInt,
        den: &BigInt,
        offset: usize,
    ) -> Result<Vec<BigRational>> {
        use num_traits::Zero;
        if den.is_zero() {
            return Err(zero_denominator(offset));
        }
        Ok(self.embed(&BigRational::new(num.clone(), den.clone())))
    }

    fn coeff_zeta(&self, order: u32, power: u32, _offset: usize) -> Result<Vec<BigRational>> {
        let n = self.order();
        if order == 0 || n % order != 0 {
            return Err(Error::BadZetaOrder {
                found: order,
                ambient: n,
            });
        }
        let step = (n / order) as i64;
        Ok(self.zeta_pow(step * power as i64))
    }
}

struct Parser<'a, F: FieldOps + Clone + PartialEq> {
    input: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing<F>>,
}

impl<'a, F> Parser<'a, F>
where
    F: CoeffFromLiteral + Clone + PartialEq,
{
    fn new(ring: &'a Arc<PolyRing<F>>, input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
            ring,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::SyntaxError {
            offset,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.bump() {
            Some(got) if got == c => Ok(()),
            Some(got) => Err(self.error(
                at,
                format!("expected `{}`, found `{}`", c as char, got as char),
            )),
            None => Err(self.error(at, format!("expected `{}`, found end of input", c as char))),
        }
    }

    /// Unsigned decimal integer, arbitrary precision.
    fn parse_uint_big(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, "expected an unsigned integer"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("digits are ascii");
        Ok(text.parse::<BigInt>().expect("digits parse as an integer"))
    }

    /// Unsigned integer that must fit the given bound.
    fn parse_uint_bounded(&mut self, bound: u64, what: &str) -> Result<u64> {
        use num_traits::ToPrimitive;
        self.skip_ws();
        let at = self.pos;
        let big = self.parse_uint_big()?;
        match big.to_u64() {
            Some(v) if v <= bound => Ok(v),
            _ => Err(self.error(at, format!("{} exceeds the supported bound {}", what, bound))),
        }
    }

    fn parse_identifier(&mut self) -> (usize, String) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() {
            let c = self.input[self.pos];
            let ok = if self.pos == start {
                c.is_ascii_alphabetic() || c == b'_'
            } else {
                c.is_ascii_alphanumeric() || c == b'_'
            };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.input[start..self.pos])
            .expect("identifiers are ascii")
            .to_string();
        (start, name)
    }

    /// Optional `^ uint` suffix, bounded for exponent vectors.
    fn parse_power_suffix(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.bump();
            Ok(self.parse_uint_bounded(u16::MAX as u64, "exponent")? as u32)
        } else {
            Ok(1)
        }
    }

    fn parse_factor(&mut self) -> Result<MultiPoly<F>> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint_big()?;
                let den = if self.peek() == Some(b'/') {
                    self.bump();
                    self.skip_ws();
                    self.parse_uint_big()?
                } else {
                    BigInt::from(1)
                };
                let coeff = self
                    .ring
                    .field()
                    .coeff_from_fraction(&num, &den, at)?;
                Ok(self.ring.constant(coeff))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let (start, name) = self.parse_identifier();
                if name == "zeta" && self.peek() == Some(b'(') {
                    self.bump();
                    let order = self.parse_uint_bounded(u32::MAX as u64, "zeta order")? as u32;
                    self.expect(b')')?;
                    let power = self.parse_power_suffix()?;
                    let coeff = self.ring.field().coeff_zeta(order, power, start)?;
                    return Ok(self.ring.constant(coeff));
                }
                match self.ring.var_index(&name) {
                    Some(idx) => {
                        let power = self.parse_power_suffix()?;
                        Ok(self.ring.var(idx).pow(power))
                    }
                    None => Err(Error::UnknownVariable {
                        name,
                        offset: start,
                    }),
                }
            }
            Some(c) => Err(self.error(at, format!("unexpected character `{}`", c as char))),
            None => Err(self.error(at, "unexpected end of input")),
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly<F>> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_expr(&mut self) -> Result<MultiPoly<F>> {
        let mut negate_first = false;
        if self.peek() == Some(b'-') {
            self.bump();
            negate_first = true;
        }
        let first = self.parse_term()?;
        let mut acc = if negate_first { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_complete(&mut self) -> Result<MultiPoly<F>> {
        let poly = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.input.len() {
            return Err(self.error(self.pos, "trailing input after expression"));
        }
        Ok(poly)
    }
}

impl<F: CoeffFromLiteral + Clone + PartialEq> PolyRing<F> {
    /// Parses a polynomial in this ring from the text grammar.
    pub fn parse(self: &Arc<Self>, input: &str) -> Result<MultiPoly<F>> {
        Parser::new(self, input).parse_complete()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, RingOps};
    use crate::poly::display::canonical_string;
    use crate::poly::ring::MonomialOrder;

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars, MonomialOrder::Grevlex)
    }

    #[test]
    fn parse_basic() {
        let r = qring(&["x1", "x2"]);
        let f = r.parse("x1^2 - 2*x2 + 1/3").unwrap();
        let expect = r
            .var_named("x1")
            .pow(2)
            .sub(&r.var_named("x2").scale(&rat(2)))
            .add(&r.constant(ratio(1, 3)));
        assert_eq!(f, expect);
    }

    #[test]
    fn whitespace_is_insignificant() {
        let r = qring(&["x1", "x2"]);
        let a = r.parse("x1^2-2*x2").unwrap();
        let b = r.parse("  x1 ^ 2  -  2 * x2 ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn leading_minus_and_parens() {
        let r = qring(&["x", "y"]);
        let f = r.parse("-x + (y - 1)*(y + 1)").unwrap();
        let expect = r
            .var_named("y")
            .pow(2)
            .sub(&r.var_named("x"))
            .sub(&r.one_poly());
        assert_eq!(f, expect);
        let g = r.parse("(-1 + y)").unwrap();
        assert_eq!(g, r.var_named("y").sub(&r.one_poly()));
    }

    #[test]
    fn round_trip_canonical_output() {
        let r = qring(&["x1", "x2", "lambda"]);
        for text in [
            "x1^3 + x2^3 - 3*lambda*x1*x2",
            "-1/2*x1^2 + x2",
            "0",
            "lambda^4 - 2*lambda^2 + 1",
        ] {
            let p = r.parse(text).unwrap();
            let s = canonical_string(&p);
            let q = r.parse(&s).unwrap();
            assert_eq!(p, q, "round trip failed for `{}` -> `{}`", text, s);
        }
    }

    #[test]
    fn error_offsets() {
        let r = qring(&["x"]);
        match r.parse("x + %") {
            Err(Error::SyntaxError { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match r.parse("x + yz") {
            Err(Error::UnknownVariable { name, offset }) => {
                assert_eq!(name, "yz");
                assert_eq!(offset, 4);
            }
            other => panic!("expected unknown variable, got {:?}", other),
        }
        assert!(r.parse("").is_err());
        assert!(r.parse("x x").is_err());
        assert!(r.parse("1/0").is_err());
    }

    #[test]
    fn prime_field_literals() {
        let f = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f, &["x"], MonomialOrder::Grevlex);
        let p = r.parse("10*x + 3/4").unwrap();
        // 10 = 3 mod 7 and 3/4 = 3 * 2 = 6 mod 7
        assert_eq!(canonical_string(&p), "3*x + 6");
    }

    #[test]
    fn zeta_literals() {
        let f = CyclotomicField::new(6);
        let r = PolyRing::new(f.clone(), &["x"], MonomialOrder::Grevlex);
        // zeta(2) embeds as zeta(6)^3 = -1
        let p = r.parse("zeta(2)*x").unwrap();
        assert_eq!(p, r.var_named("x").neg());
        let q = r.parse("zeta(6)^3*x + zeta(3)").unwrap();
        let expect = r
            .var_named("x")
            .neg()
            .add(&r.constant(f.zeta_pow(2)));
        assert_eq!(q, expect);
        match r.parse("zeta(5)") {
            Err(Error::BadZetaOrder { found, ambient }) => {
                assert_eq!((found, ambient), (5, 6));
            }
            other => panic!("expected BadZetaOrder, got {:?}", other),
        }
        // zeta over the rationals is rejected
        let rq = qring(&["x"]);
        assert!(rq.parse("zeta(3)").is_err());
    }

    #[test]
    fn cyclotomic_round_trip() {
        let f = CyclotomicField::new(8);
        let r = PolyRing::new(f.clone(), &["x", "y"], MonomialOrder::Grevlex);
        let p = r
            .var_named("x")
            .scale(&f.sub(&f.one(), &f.zeta_pow(3)))
            .add(&r.var_named("y").scale(&f.mul(&f.from_i64(2), &f.zeta_pow(1))));
        let s = canonical_string(&p);
        assert_eq!(s, "(1 - zeta(8)^3)*x + 2*zeta(8)*y");
        assert_eq!(r.parse(&s).unwrap(), p);
    }
}

//! Canonical text form for polynomials.
//!
//! The canonical form lists terms in descending graded reverse
//! lexicographic order (regardless of the ring's working order), joins
//! them with binary `+` / `-`, omits unit coefficients and `^1` powers,
//! and writes variable factors in table order. The output re-parses to an
//! equal polynomial.

use crate::exactmath::{FieldOps, Sign};

use super::ring::{cmp_monomials, Monomial, MonomialOrder, MultiPoly};

/// Renders one monomial ("x1^2*x2" style); empty for the constant monomial.
fn monomial_string<F: FieldOps + Clone + PartialEq>(
    p: &MultiPoly<F>,
    m: &Monomial,
) -> String {
    let ring = p.ring();
    let mut parts = Vec::new();
    for (v, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(ring.var_name(v).to_string());
        } else {
            parts.push(format!("{}^{}", ring.var_name(v), e));
        }
    }
    parts.join("*")
}

/// Canonical string for a polynomial. The zero polynomial prints as "0".
pub fn canonical_string<F: FieldOps + Clone + PartialEq>(p: &MultiPoly<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.ring().field();
    let mut terms: Vec<&(Monomial, F::Elem)> = p.terms().iter().collect();
    terms.sort_by(|a, b| cmp_monomials(MonomialOrder::Grevlex, &b.0, &a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let (sign, mag) = field.split_sign(c);
        if i == 0 {
            if sign == Sign::Minus {
                out.push('-');
            }
        } else {
            out.push_str(match sign {
                Sign::Plus => " + ",
                Sign::Minus => " - ",
            });
        }
        let mono = monomial_string(p, m);
        if mono.is_empty() {
            out.push_str(&field.format(&mag));
        } else if field.is_one(&mag) {
            out.push_str(&mono);
        } else {
            out.push_str(&field.format(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, CyclotomicField, Rationals, RingOps};
    use crate::poly::ring::PolyRing;

    #[test]
    fn rational_examples() {
        let r = PolyRing::new(Rationals, &["x1", "x2"], MonomialOrder::Grevlex);
        let x1 = r.var_named("x1");
        let x2 = r.var_named("x2");
        assert_eq!(canonical_string(&r.zero_poly()), "0");
        assert_eq!(canonical_string(&r.int(-7)), "-7");
        let f = x1.pow(2).sub(&x2.scale(&rat(2)));
        assert_eq!(canonical_string(&f), "x1^2 - 2*x2");
        let g = x2.pow(3).scale(&ratio(-1, 2)).add(&x1.mul(&x2));
        assert_eq!(canonical_string(&g), "-1/2*x2^3 + x1*x2");
        let h = x1.mul(&x2).neg().add(&r.int(1));
        assert_eq!(canonical_string(&h), "-x1*x2 + 1");
    }

    #[test]
    fn grevlex_output_even_for_lex_rings() {
        let r = PolyRing::new(Rationals, &["x", "y"], MonomialOrder::Lex);
        let f = r.var_named("x").add(&r.var_named("y").pow(3));
        // lex leading term is x, but canonical output sorts by grevlex
        assert_eq!(canonical_string(&f), "y^3 + x");
    }

    #[test]
    fn cyclotomic_coefficients() {
        let f = CyclotomicField::new(3);
        let r = PolyRing::new(f.clone(), &["x"], MonomialOrder::Grevlex);
        let x = r.var_named("x");
        let zeta = r.constant(f.zeta_pow(1));
        let p = x.mul(&zeta);
        assert_eq!(canonical_string(&p), "zeta(3)*x");
        let q = x.scale(&f.add(&f.one(), &f.zeta_pow(1)));
        assert_eq!(canonical_string(&q), "(1 + zeta(3))*x");
        let neg = x.scale(&f.neg(&f.zeta_pow(1)));
        assert_eq!(canonical_string(&neg), "-zeta(3)*x");
    }
}

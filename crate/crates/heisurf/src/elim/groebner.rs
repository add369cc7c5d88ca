//! Buchberger's algorithm and projective emptiness certificates.
//!
//! The basis returned by [`groebner`] is fully reduced (monic generators,
//! no term of any generator divisible by the leading term of another), so
//! it is the unique reduced basis for the ring's monomial order and makes
//! a deterministic test target.
//!
//! The pair queue is bounded. The default bound is 100000 pairs and can be
//! overridden through the `HEISURF_PAIR_LIMIT` environment variable; the
//! bound turns runaway eliminations into a clean
//! [`Error::ResourceLimit`] instead of an unbounded computation.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactmath::FieldOps;
use crate::poly::{Monomial, MultiPoly};

/// Default bound on the number of critical pairs examined.
pub const DEFAULT_PAIR_LIMIT: usize = 100_000;

/// Environment variable overriding the pair bound.
pub const PAIR_LIMIT_ENV: &str = "HEISURF_PAIR_LIMIT";

/// The active pair bound: the environment override if set and parseable,
/// otherwise the default.
pub fn pair_limit_from_env() -> usize {
    std::env::var(PAIR_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_PAIR_LIMIT)
}

fn monomial_divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

fn monomial_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn monomial_sum_is_lcm(a: &Monomial, b: &Monomial) -> bool {
    // The lcm equals the product exactly when the supports are disjoint.
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// Remainder of `f` on full division by `basis`: no term of the result is
/// divisible by any basis leading term.
pub fn normal_form<F: FieldOps + Clone + PartialEq>(
    f: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
) -> MultiPoly<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut work = f.clone();
    let mut rem = ring.zero_poly();
    'outer: while let Some((lm, lc)) = work.leading_term() {
        let lm = lm.clone();
        let lc = lc.clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading_term().expect("nonzero");
            if monomial_divides(gm, &lm) {
                let qm: Monomial = lm.iter().zip(gm).map(|(&a, &b)| a - b).collect();
                let qc = field.div(&lc, gc).expect("leading coefficient nonzero");
                work = work.sub(&g.mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        // No reducer: move the leading term to the remainder.
        let t = ring.monomial(lm, lc);
        rem = rem.add(&t);
        work = work.sub(&t);
    }
    rem
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial<F: FieldOps + Clone + PartialEq>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
) -> MultiPoly<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = monomial_lcm(fm, gm);
    let fq: Monomial = lcm.iter().zip(fm).map(|(&a, &b)| a - b).collect();
    let gq: Monomial = lcm.iter().zip(gm).map(|(&a, &b)| a - b).collect();
    let finv = field.inv(fc).expect("leading coefficient nonzero");
    let ginv = field.inv(gc).expect("leading coefficient nonzero");
    f.mul_term(&fq, &finv).sub(&g.mul_term(&gq, &ginv))
}

/// Buchberger's algorithm with the environment-controlled pair bound.
pub fn groebner<F: FieldOps + Clone + PartialEq>(
    gens: &[MultiPoly<F>],
) -> Result<Vec<MultiPoly<F>>> {
    groebner_with_limit(gens, pair_limit_from_env())
}

/// Buchberger's algorithm with an explicit bound on examined pairs.
///
/// Critical pairs are selected by smallest lcm total degree, ties broken
/// by the pair indices, and pruned with the product and chain criteria.
/// Returns the unique reduced basis for the ring's order.
///
/// # Panics
///
/// Panics if `gens` is empty (there is no ring to work in).
pub fn groebner_with_limit<F: FieldOps + Clone + PartialEq>(
    gens: &[MultiPoly<F>],
    pair_limit: usize,
) -> Result<Vec<MultiPoly<F>>> {
    assert!(!gens.is_empty(), "empty generator list");
    let ring = gens[0].ring().clone();
    let mut basis: Vec<MultiPoly<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut examined = 0usize;

    while !pairs.is_empty() {
        examined += 1;
        if examined > pair_limit {
            return Err(Error::ResourceLimit(format!(
                "Buchberger pair bound of {} exceeded",
                pair_limit
            )));
        }
        // Normal selection: smallest lcm degree, then smallest indices.
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let lcm = monomial_lcm(
                    basis[i].leading_monomial().unwrap(),
                    basis[j].leading_monomial().unwrap(),
                );
                let deg: u64 = lcm.iter().map(|&e| e as u64).sum();
                (deg, i, j)
            })
            .map(|(pos, _)| pos)
            .expect("nonempty queue");
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));

        let (lmi, lmj) = (
            basis[i].leading_monomial().unwrap().clone(),
            basis[j].leading_monomial().unwrap().clone(),
        );
        if monomial_sum_is_lcm(&lmi, &lmj) {
            continue; // product criterion
        }
        let lcm = monomial_lcm(&lmi, &lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && monomial_divides(basis[k].leading_monomial().unwrap(), &lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            let t = basis.len();
            basis.push(r.monic());
            for k in 0..t {
                pairs.push((k, t));
            }
        }
    }

    // Minimize: drop generators whose leading term another one divides.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && monomial_divides(
                    basis[j].leading_monomial().unwrap(),
                    basis[i].leading_monomial().unwrap(),
                )
                && (basis[i].leading_monomial() != basis[j].leading_monomial() || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly<F>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // Inter-reduce to the unique reduced basis.
    let mut reduced: Vec<MultiPoly<F>> = minimal.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<MultiPoly<F>> = reduced
                .iter()
                .enumerate()
                .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
                .collect();
            let nf = normal_form(&reduced[i], &others).monic();
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|g| !g.is_zero());
    // Deterministic presentation: descending leading monomials.
    let ring2 = ring;
    reduced.sort_by(|a, b| {
        crate::poly::cmp_monomials(
            ring2.order(),
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
        )
    });
    Ok(reduced)
}

/// Certificate produced by [`is_projectively_empty`].
#[derive(Debug, Clone)]
pub struct EmptinessCertificate<F: FieldOps> {
    /// True when the projective zero set (over the algebraic closure) is
    /// empty.
    pub empty: bool,
    /// For each queried variable, the exponent k such that the variable to
    /// the k-th power appears as a basis leading term, when one exists.
    pub pure_power_exponents: Vec<Option<u16>>,
    /// The reduced basis the certificate was read from.
    pub basis: Vec<MultiPoly<F>>,
}

/// Decides whether a homogeneous ideal cuts out the empty set in the
/// projective space on the listed variables, by checking that the reduced
/// basis contains a pure power of every one of them among its leading
/// terms.
///
/// Fails with [`Error::DegreeMismatch`] if a generator is not homogeneous
/// with respect to the projective variables.
pub fn is_projectively_empty<F: FieldOps + Clone + PartialEq>(
    gens: &[MultiPoly<F>],
    projective_vars: &[usize],
) -> Result<EmptinessCertificate<F>> {
    assert!(!gens.is_empty(), "empty generator list");
    let ring = gens[0].ring().clone();
    let weights: Vec<u64> = (0..ring.num_vars())
        .map(|v| if projective_vars.contains(&v) { 1 } else { 0 })
        .collect();
    for g in gens {
        if !g.is_homogeneous(&weights) {
            return Err(Error::DegreeMismatch(format!(
                "generator {} is not homogeneous in the projective variables",
                g
            )));
        }
    }
    let basis = groebner(gens)?;
    let exps: Vec<Option<u16>> = projective_vars
        .iter()
        .map(|&v| {
            basis
                .iter()
                .filter_map(|g| {
                    let lm = g.leading_monomial()?;
                    let pure = lm
                        .iter()
                        .enumerate()
                        .all(|(w, &e)| w == v || e == 0);
                    if pure && lm[v] > 0 {
                        Some(lm[v])
                    } else {
                        None
                    }
                })
                .min()
        })
        .collect();
    let empty = !exps.is_empty() && exps.iter().all(|e| e.is_some());
    Ok(EmptinessCertificate {
        empty,
        pure_power_exponents: exps,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{canonical_string, qring, MonomialOrder, PolyRing};
    use crate::exactmath::Rationals;

    #[test]
    fn lex_elimination_produces_the_eliminant() {
        // Ring ordered with y2 above y1 so lex elimination removes y2.
        let r = PolyRing::new(Rationals, &["y2", "y1"], MonomialOrder::Lex);
        let gens = vec![
            r.parse("y1^2 - y2").unwrap(),
            r.parse("y2^2 - y1").unwrap(),
        ];
        let gb = groebner_with_limit(&gens, 1000).unwrap();
        let strings: Vec<String> = gb.iter().map(canonical_string).collect();
        assert!(strings.contains(&"-y1^2 + y2".to_string()), "{:?}", strings);
        assert!(strings.contains(&"y1^4 - y1".to_string()), "{:?}", strings);
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn basis_is_reduced_and_spolys_vanish() {
        let r = qring(&["x", "y", "z"]);
        let gens = vec![
            r.parse("x^2 + y^2 + z^2 - 1").unwrap(),
            r.parse("x*y - z").unwrap(),
            r.parse("x - y").unwrap(),
        ];
        let gb = groebner_with_limit(&gens, 10_000).unwrap();
        for g in &gb {
            use crate::exactmath::RingOps as _;
            assert!(g
                .leading_coeff()
                .map(|c| r.field().is_one(c))
                .unwrap_or(false));
            for h in &gb {
                if g != h {
                    for (m, _) in g.terms() {
                        assert!(
                            !super::monomial_divides(h.leading_monomial().unwrap(), m),
                            "basis is not reduced"
                        );
                    }
                }
            }
        }
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j]);
                assert!(normal_form(&s, &gb).is_zero(), "S-polynomial survives");
            }
        }
    }

    #[test]
    fn ideal_membership_via_normal_form() {
        let r = qring(&["x", "y"]);
        let gens = vec![r.parse("x^2 - y").unwrap(), r.parse("y^2 - x").unwrap()];
        let gb = groebner_with_limit(&gens, 1000).unwrap();
        // x^4 - x lies in the ideal (substitute y = x^2 into y^2 - x).
        let member = r.parse("x^4 - x").unwrap();
        assert!(normal_form(&member, &gb).is_zero());
        let non_member = r.parse("x + 1").unwrap();
        assert!(!normal_form(&non_member, &gb).is_zero());
    }

    #[test]
    fn emptiness_certificates() {
        let r = qring(&["x", "y"]);
        // The irrelevant ideal is projectively empty.
        let full = vec![r.var_named("x"), r.var_named("y")];
        let cert = is_projectively_empty(&full, &[0, 1]).unwrap();
        assert!(cert.empty);
        assert_eq!(cert.pure_power_exponents, vec![Some(1), Some(1)]);

        // x^2 + y^2 and x*y only vanish together at the origin.
        let origin_only = vec![r.parse("x^2 + y^2").unwrap(), r.parse("x*y").unwrap()];
        let cert2 = is_projectively_empty(&origin_only, &[0, 1]).unwrap();
        assert!(cert2.empty);

        // x*y alone cuts out the two coordinate points.
        let axes = vec![r.parse("x*y").unwrap()];
        let cert3 = is_projectively_empty(&axes, &[0, 1]).unwrap();
        assert!(!cert3.empty);

        // Non-homogeneous input is rejected.
        let bad = vec![r.parse("x^2 + y").unwrap()];
        assert!(is_projectively_empty(&bad, &[0, 1]).is_err());
    }

    #[test]
    fn pair_limit_is_enforced() {
        let r = qring(&["x", "y", "z"]);
        let gens = vec![
            r.parse("x^3 - 2*x*y").unwrap(),
            r.parse("x^2*y - 2*y^2 + x*z").unwrap(),
            r.parse("z^2*x - y^3").unwrap(),
        ];
        match groebner_with_limit(&gens, 1) {
            Err(Error::ResourceLimit(_)) => {}
            other => panic!("expected a resource limit error, got {:?}", other),
        }
        assert!(groebner_with_limit(&gens, 100_000).is_ok());
    }

    #[test]
    fn env_override_parses() {
        // Only the parsing logic; the environment itself is exercised in
        // the CLI integration tests to avoid cross-test races.
        assert_eq!(DEFAULT_PAIR_LIMIT, 100_000);
        assert_eq!(PAIR_LIMIT_ENV, "HEISURF_PAIR_LIMIT");
    }
}

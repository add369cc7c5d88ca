//! The verification suite: a named check for every reproduced formula,
//! certificate, and harness behavior, plus the runner that executes a
//! filtered selection in parallel and assembles a report.
//!
//! Comparison checks carry both sides in canonical text and pass exactly
//! when the strings agree. Certificate checks leave `expected` empty and
//! put their witness summary in `actual`. All randomness is derived from
//! the configured seed, so a report is byte-identical across runs with
//! the same seed and prime.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use heisurf::elim::{
    groebner, is_projectively_empty, normal_form, random_rank_probe, s_polynomial,
};
use heisurf::exactmath::{
    as_scalar_identity, det_bareiss, det_cofactor, rat, ratio, FieldOps, Matrix, PrimeField,
    Rationals, RingOps,
};
use heisurf::heis::{spans_equal, HeisType, Representation};
use heisurf::poly::{qring, MultiPoly};
use heisurf::report::{Check, CheckStatus, VerificationReport};
use heisurf::surfaces::{
    ac3_family, ac3_smoothness, beta_identities_hold, beta_map, bilinear_invariant_space,
    chpp_base_point_resultant, chpp_discriminant, chpp_family, chpp_invariant_forms,
    chpp_singular_fiber_quartic, hesse3_family, hesse3_lambda_dictionary, hesse_duality_membership,
    hesse_duality_sampled, hesse_duality_symbolic, hesse_gradient_identity,
    hesse_smoothness_verdict, invariant_cubic_character_split, numeric_invariants,
    parse_octic_text, pp4_branch_locus, pp4_family, pp4_gamma, pp4_minor_dictionary_holds,
    pp4_pencil_poly, pp4_pp_crosscheck, quartic4_eigenspace_pair, quartic4_family,
    quartic4_smoothness, star3_system_from_octic, translation_invariant_cubics,
    verify_family_equivariance, zeuthen_segre_count, FamilyName,
};

use crate::glob::glob_match;

/// Default seed for the randomized checks.
pub const DEFAULT_SEED: u64 = 42;
/// Default probe prime.
pub const DEFAULT_PRIME: u64 = 10007;

/// The synthetic octic shipped with the repository, embedded so the
/// binary is self-contained.
const DENSE_OCTIC: &str = include_str!("../../heisurf/tests/fixtures/dense_octic.txt");
const DEGENERATE_OCTIC: &str = "vars: c0 c1 c2 c3 x1 x2 x3 x4\nx1^8\n";

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub prime: u64,
}

struct Outcome {
    status: CheckStatus,
    expected: Option<String>,
    actual: Option<String>,
}

impl Outcome {
    /// A comparison check: passes exactly when the canonical strings
    /// agree.
    fn compare(expected: String, actual: String) -> Self {
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Outcome {
            status,
            expected: Some(expected),
            actual: Some(actual),
        }
    }

    /// A certificate check: carries its witness summary in `actual`.
    fn certificate(ok: bool, witness: String) -> Self {
        Outcome {
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            expected: None,
            actual: Some(witness),
        }
    }

    fn skipped() -> Self {
        Outcome {
            status: CheckStatus::Skipped,
            expected: None,
            actual: None,
        }
    }
}

type CheckFn = fn(&SuiteConfig) -> heisurf::Result<Outcome>;

struct CheckDef {
    id: &'static str,
    anchor: &'static str,
    run: CheckFn,
}

/// Compares a list of polynomials against display strings parsed into
/// the same ring, reporting both sides canonically.
fn compare_polys<F: FieldOps + Clone + PartialEq>(
    expected: &[MultiPoly<F>],
    actual: &[MultiPoly<F>],
) -> Outcome {
    let join = |ps: &[MultiPoly<F>]| {
        ps.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    };
    Outcome::compare(join(expected), join(actual))
}

// ---------------------------------------------------------------------
// Group representation checks

fn heis_relations(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let mut verified = 0usize;
    let mut failed = Vec::new();
    for d1 in 1u32..=8 {
        for d2 in d1..=8 {
            if d2 % d1 != 0 || d1 * d2 > 8 {
                continue;
            }
            let rep = Representation::new(HeisType::new(d1, d2))?;
            if rep.verify_relations().all_ok() {
                verified += 1;
            } else {
                failed.push(format!("({d1},{d2})"));
            }
        }
    }
    Ok(Outcome::certificate(
        failed.is_empty() && verified == 10,
        format!(
            "{verified} types verified{}",
            if failed.is_empty() {
                String::new()
            } else {
                format!("; failures at {}", failed.join(", "))
            }
        ),
    ))
}

fn heis_center_minus_identity(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ty = HeisType::new(1, 2);
    let rep = Representation::new(ty)?;
    let g1 = ty.character_gen(1);
    let g2 = ty.translation_gen(1);
    let gamma = ty.compose(&ty.compose(&ty.compose(&g1, &g2), &g1), &g2);
    let m = rep.matrix(&gamma);
    let field = rep.field().clone();
    let minus_one = field.neg(&field.one());
    let ok = as_scalar_identity(&field, &m) == Some(minus_one);
    Ok(Outcome::certificate(
        ok,
        "g1 g2 g1 g2 acts as -1 times the identity".into(),
    ))
}

// ---------------------------------------------------------------------
// Trisection family checks

fn chpp_disc_routes(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let d = chpp_discriminant();
    Ok(Outcome::compare(
        d.determinant.to_string(),
        d.resultant.to_string(),
    ))
}

fn chpp_disc_lambda0(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let d = chpp_discriminant();
    let at0 = d.at_lambda(&rat(0));
    let expected = at0.ring().parse("81*x1^2*x2^2").expect("display parses");
    Ok(compare_polys(&[expected], &[at0]))
}

fn chpp_invariants_basis(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let (module, basis) = chpp_invariant_forms()?;
    let ring = module.ring().clone();
    let displayed = [
        ring.parse("x1*y1^3 + x2*y2^3").expect("display parses"),
        ring.parse("x1*y1*y2^2 + x2*y1^2*y2").expect("display parses"),
    ];
    let ok = basis.len() == 2 && spans_equal(&displayed, &basis);
    Ok(Outcome::certificate(
        ok,
        format!(
            "dimension {} space spanning both displayed forms: {}",
            basis.len(),
            spans_equal(&displayed, &basis)
        ),
    ))
}

fn chpp_fiber_quartic(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let q = chpp_singular_fiber_quartic(None)?;
    let ring = q.ring().clone();
    let expected = ring
        .parse("lambda*z^4 + (3 - lambda^2)*z^2 + lambda")
        .expect("display parses");
    let z = ring.var_index("z").expect("fiber variable");
    if !q.is_even_in(z) {
        return Ok(Outcome::certificate(false, "not even in z".into()));
    }
    Ok(compare_polys(&[expected], &[q]))
}

fn chpp_fiber_numeric(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    match chpp_singular_fiber_quartic(Some(&rat(0))) {
        Err(heisurf::Error::LambdaZero) => {}
        _ => {
            return Ok(Outcome::certificate(
                false,
                "parameter zero was not rejected".into(),
            ))
        }
    }
    let q = chpp_singular_fiber_quartic(Some(&rat(1)))?;
    let expected = q.ring().parse("z^4 + 2*z^2 + 1").expect("display parses");
    Ok(compare_polys(&[expected], &[q]))
}

fn chpp_basepoints(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let r = chpp_base_point_resultant();
    let expected = r
        .ring()
        .parse("y1^4*(lambda^2 - 1)*(lambda^2 - 1)")
        .expect("display parses");
    Ok(compare_polys(&[expected], &[r]))
}

fn chpp_equivariance(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = verify_family_equivariance(&chpp_family(None))?;
    Ok(Outcome::certificate(
        ok,
        "both generators fix the equation".into(),
    ))
}

// ---------------------------------------------------------------------
// Determinantal family checks

fn pp4_equivariance(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = verify_family_equivariance(&pp4_family(None))?;
    Ok(Outcome::certificate(
        ok,
        "translation permutes the equations cyclically; the character scales them by (1, e^2, e)"
            .into(),
    ))
}

fn pp4_minors(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = pp4_minor_dictionary_holds()?;
    Ok(Outcome::certificate(
        ok,
        "ordered minors equal (F2, -F3, F1); s1 F1 + s2 F2 + s3 F3 = 0".into(),
    ))
}

fn pp4_pencil_matrix(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let p = pp4_pencil_poly()?;
    let e = |s: &str| p.ring.parse(s).expect("display parses");
    let displayed = vec![
        e("s2*t - s3*s"),
        e("1/2*mu*s1*s"),
        e("-1/2*mu*s1*t"),
        e("1/2*mu*s1*s"),
        e("-s1*t"),
        e("1/2*mu*(s2*t - s3*s)"),
        e("-1/2*mu*s1*t"),
        e("1/2*mu*(s2*t - s3*s)"),
        e("s1*s"),
    ];
    let mut actual = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            actual.push(p.conic_matrix[[i, j]].clone());
        }
    }
    Ok(compare_polys(&displayed, &actual))
}

fn pp4_pencil_cubic(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let p = pp4_pencil_poly()?;
    let target = p.coefficient(3).ring().clone();
    let e = |s: &str| target.parse(s).expect("display parses");
    let displayed = vec![
        e("1/4*mu^2*(s3^3 - s1^3)"),
        e("1/4*mu^3*s1^2*s3 - 3/4*mu^2*s2*s3^2 + s1^2*s3"),
        e("-1/4*mu^3*s1^2*s2 + 3/4*mu^2*s2^2*s3 - s1^2*s2"),
        e("1/4*mu^2*(s1^3 - s2^3)"),
    ];
    let actual: Vec<_> = (0..4).rev().map(|k| p.coefficient(k)).collect();
    Ok(compare_polys(&displayed, &actual))
}

fn pp4_pencil_mu0(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let p = pp4_pencil_poly()?;
    let mu = p.ring.var_index("mu").expect("parameter variable");
    let at0 = p.poly.substitute(&[(mu, p.ring.zero_poly())]);
    let expected = p
        .ring
        .parse("s1^2*s*t*(s3*s - s2*t)")
        .expect("display parses");
    Ok(compare_polys(&[expected], &[at0]))
}

const SEXTIC_DISPLAY: &str = "-27*mu^8*(s1^6 + s2^6 + s3^6) \
     + mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)*(s1^3*s2^3 + s1^3*s3^3 + s2^3*s3^3) \
     + mu^4*(18*mu^6 + 144*mu^3 + 288)*s1*s2*s3*(s1^3 + s2^3 + s3^3) \
     + (mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256)*s1^2*s2^2*s3^2";

fn pp4_branch_sextic(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    let expected = b.ring.parse(SEXTIC_DISPLAY).expect("display parses");
    Ok(compare_polys(&[expected], &[b.sextic]))
}

fn pp4_branch_coefficients(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    let ring = b.ring.clone();
    let idx = |n: &str| ring.var_index(n).expect("coordinate");
    let coeff = |e1: u16, e2: u16, e3: u16| {
        b.sextic
            .coefficient_of(idx("s1"), e1)
            .coefficient_of(idx("s2"), e2)
            .coefficient_of(idx("s3"), e3)
    };
    let e = |s: &str| ring.parse(s).expect("display parses");
    let displayed = vec![
        e("-27*mu^8"),
        e("mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)"),
        e("mu^4*(18*mu^6 + 144*mu^3 + 288)"),
        e("mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256"),
    ];
    let actual = vec![coeff(6, 0, 0), coeff(3, 3, 0), coeff(4, 1, 1), coeff(2, 2, 2)];
    Ok(compare_polys(&displayed, &actual))
}

fn pp4_branch_misprint(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    let ring = b.ring.clone();
    let idx = |n: &str| ring.var_index(n).expect("coordinate");
    let coeff = |e1: u16, e2: u16, e3: u16| {
        b.sextic
            .coefficient_of(idx("s1"), e1)
            .coefficient_of(idx("s2"), e2)
            .coefficient_of(idx("s3"), e3)
    };
    let corrected = ring
        .parse("mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)")
        .expect("display parses");
    let cubic_pair = coeff(3, 0, 3);
    let stray = coeff(1, 0, 1);
    let ok = cubic_pair == corrected && stray.is_zero();
    Ok(Outcome::certificate(
        ok,
        format!(
            "coefficient of the s1^3 s3^3 pair is {cubic_pair}; the displayed degree-2 slot has coefficient {stray}"
        ),
    ))
}

fn pp4_branch_charts(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    Ok(Outcome::certificate(
        b.charts_agree,
        "charts s1, s2, s3 nonzero produce the same sextic".into(),
    ))
}

fn pp4_branch_cyclic(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    Ok(Outcome::certificate(
        b.cyclically_invariant,
        "fixed by the substitution s1 -> s2 -> s3 -> s1".into(),
    ))
}

fn pp4_branch_mu0(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = pp4_branch_locus()?;
    let mu = b.ring.var_index("mu").expect("parameter variable");
    let at0 = b.sextic.substitute(&[(mu, b.ring.zero_poly())]);
    let expected = b.ring.parse("256*s1^2*s2^2*s3^2").expect("display parses");
    Ok(compare_polys(&[expected], &[at0]))
}

fn pp4_branch_crosscheck(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = pp4_pp_crosscheck()?;
    Ok(Outcome::certificate(
        ok,
        "negating the parameter and scaling by -1/27 round-trips and is not the identity".into(),
    ))
}

fn pp4_gamma_components(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let g = pp4_gamma()?;
    let e = |s: &str| g.ring.parse(s).expect("display parses");
    let displayed = vec![
        e("-lambda*mu*s2"),
        e("lambda*mu*s3"),
        e("lambda^2*s3"),
        e("0"),
        e("-lambda^2*s2"),
        e("-mu^2*s1"),
        e("-lambda*mu*s1"),
        e("mu^2*s2"),
        e("0"),
        e("0"),
        e("-mu^2*s3"),
        e("lambda*mu*s1"),
        e("-lambda*mu*s3"),
        e("lambda^2*s1"),
        e("-lambda*mu*s2"),
    ];
    if !g.proportionality_ok {
        return Ok(Outcome::certificate(
            false,
            "wedge proportionality failed".into(),
        ));
    }
    Ok(compare_polys(&displayed, &g.components))
}

fn pp4_gamma_dictionary(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let g = pp4_gamma()?;
    let ok = g.dictionary_holds()?;
    Ok(Outcome::certificate(
        ok,
        "slot dictionary (a, b, c, d, e) = (-lambda mu, lambda mu, lambda^2, 0, -mu^2)".into(),
    ))
}

// ---------------------------------------------------------------------
// Plane cubic pencil checks

fn hesse_gradient(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    Ok(Outcome::certificate(
        hesse_gradient_identity(),
        "3*q_j equals the j-th partial derivative of the cubic, symbolically".into(),
    ))
}

fn hesse_smooth_verdicts(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let samples = [(rat(0), "smooth"), (rat(1), "smooth"), (ratio(-1, 2), "singular")];
    let mut actual = Vec::new();
    for (m, _) in &samples {
        actual.push(if hesse_smoothness_verdict(m)? {
            "smooth"
        } else {
            "singular"
        });
    }
    let expected: Vec<&str> = samples.iter().map(|(_, v)| *v).collect();
    Ok(Outcome::compare(expected.join(", "), actual.join(", ")))
}

fn hesse_dual_symbolic(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = hesse_duality_symbolic()?;
    Ok(Outcome::certificate(
        ok,
        "the composed sextic is divisible by the cubic with the parameter symbolic".into(),
    ))
}

fn hesse_dual_membership(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let params = [rat(0), rat(1), rat(2), rat(-1)];
    let mut ok = true;
    for m in &params {
        ok &= hesse_duality_membership(m)?;
    }
    Ok(Outcome::certificate(
        ok,
        "reduction to zero at parameters 0, 1, 2, -1".into(),
    ))
}

fn hesse_dual_sampled(cfg: &SuiteConfig) -> heisurf::Result<Outcome> {
    let sample = hesse_duality_sampled(cfg.prime, 100, cfg.seed)?;
    Ok(Outcome::certificate(
        sample.passed(100),
        format!(
            "{} curve points tested, {} failures",
            sample.points, sample.failures
        ),
    ))
}

fn hesse_cubics_split(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let (module, invariant) = translation_invariant_cubics()?;
    let ring = module.ring().clone();
    let e = |s: &str| ring.parse(s).expect("display parses");
    let full = [
        e("y1^3 + y2^3 + y3^3"),
        e("y1*y2*y3"),
        e("y1^2*y2 + y2^2*y3 + y3^2*y1"),
        e("y1^2*y3 + y2^2*y1 + y3^2*y2"),
    ];
    let mut ok = invariant.len() == 4 && spans_equal(&full, &invariant);
    let split = invariant_cubic_character_split()?;
    let mut dims = Vec::new();
    for (power, basis) in &split {
        dims.push(format!("e^{power}: {}", basis.len()));
        let want: &[MultiPoly<_>] = match power {
            0 => &full[0..2],
            2 => &full[2..3],
            1 => &full[3..4],
            _ => &[],
        };
        ok &= spans_equal(want, basis);
    }
    ok &= split.iter().map(|(_, b)| b.len()).collect::<Vec<_>>() == vec![2, 1, 1];
    Ok(Outcome::certificate(
        ok,
        format!(
            "translation-invariant dimension {}; character split {}",
            invariant.len(),
            dims.join(", ")
        ),
    ))
}

fn hesse_bilinear(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let (module, basis) = bilinear_invariant_space()?;
    let ring = module.ring().clone();
    let displayed = [ring
        .parse("y1*x1 + y2*x2 + y3*x3")
        .expect("display parses")];
    let ok = basis.len() == 1 && spans_equal(&displayed, &basis);
    Ok(Outcome::certificate(
        ok,
        format!("dimension {} spanned by the coordinate pairing", basis.len()),
    ))
}

fn hesse3_equivariance(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = verify_family_equivariance(&hesse3_family(None))?;
    Ok(Outcome::certificate(
        ok,
        "both generators fix the pairing and the symmetric cubic".into(),
    ))
}

fn hesse3_lambda(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = hesse3_lambda_dictionary(&rat(0))
        && hesse3_lambda_dictionary(&rat(1))
        && hesse3_lambda_dictionary(&ratio(-2, 3));
    Ok(Outcome::certificate(
        ok,
        "family parameter equals six times the pencil parameter at 0, 1, -2/3".into(),
    ))
}

fn ac3_equivariance(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = verify_family_equivariance(&ac3_family())?;
    Ok(Outcome::certificate(
        ok,
        "the cyclic cubic is a character eigenvector of eigenvalue e^2".into(),
    ))
}

fn ac3_smooth(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    if !ac3_smoothness()? {
        return Ok(Outcome::certificate(false, "gradient ideal not empty".into()));
    }
    // Recompute the certificate to report the pure-power exponents.
    let ring = qring(&["y1", "y2", "y3"]);
    let cubic = ring
        .parse("y1^2*y2 + y2^2*y3 + y3^2*y1")
        .expect("fixed cubic parses");
    let partials: Vec<_> = (0..3).map(|v| cubic.partial_derivative(v)).collect();
    let cert = is_projectively_empty(&partials, &[0, 1, 2])?;
    let exps: Vec<String> = cert
        .pure_power_exponents
        .iter()
        .map(|e| match e {
            Some(k) => k.to_string(),
            None => "-".into(),
        })
        .collect();
    Ok(Outcome::certificate(
        cert.empty,
        format!("pure powers of each coordinate at exponents ({})", exps.join(", ")),
    ))
}

// ---------------------------------------------------------------------
// Quadric pencil family checks

fn quartic4_equivariance(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ok = verify_family_equivariance(&quartic4_family(None))?;
    Ok(Outcome::certificate(
        ok,
        "translation swaps the two quadrics; the character fixes one and negates the other".into(),
    ))
}

fn quartic4_eigenspaces(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let pair = quartic4_eigenspace_pair()?;
    let ring = pair.ring().clone();
    let e = |s: &str| ring.parse(s).expect("display parses");
    let ok = pair.module_dim == 10
        && pair.commuting_power == 2
        && pair.space_plus.len() == 2
        && pair.space_minus.len() == 2
        && pair.translation_swaps
        && pair.contains_plus(&e("y1^2 + y3^2"))
        && pair.contains_plus(&e("y2*y4"))
        && pair.contains_minus(&e("y2^2 + y4^2"))
        && pair.contains_minus(&e("y1*y3"));
    Ok(Outcome::certificate(
        ok,
        format!(
            "dimensions ({}, {}) of {}; translation swap: {}",
            pair.space_plus.len(),
            pair.space_minus.len(),
            pair.module_dim,
            pair.translation_swaps
        ),
    ))
}

fn quartic4_smooth(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let smooth2 = quartic4_smoothness(&rat(2))?;
    let smooth0 = quartic4_smoothness(&rat(0))?;
    Ok(Outcome::certificate(
        smooth2 && !smooth0,
        format!("parameter 2: smooth = {smooth2}; parameter 0: smooth = {smooth0}"),
    ))
}

fn beta_identities(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let b = beta_map();
    Ok(Outcome::certificate(
        beta_identities_hold(&b),
        "contraction, correction, and pencil-membership identities all hold".into(),
    ))
}

fn star3_dense(cfg: &SuiteConfig) -> heisurf::Result<Outcome> {
    let octic = parse_octic_text(DENSE_OCTIC, "dense_octic.txt")?;
    let field = PrimeField::new(cfg.prime)?;
    let system = star3_system_from_octic(&octic, &field)?;
    let report = random_rank_probe(&system, cfg.prime, 20, cfg.seed)?;
    let ok = report.max_rank == 3;
    let at = report
        .witness
        .as_ref()
        .map(|w| format!(" at sample {}", w.sample_index))
        .unwrap_or_default();
    Ok(Outcome::certificate(
        ok,
        format!("max rank {} of 3 over 20 samples{at}", report.max_rank),
    ))
}

fn star3_degenerate(cfg: &SuiteConfig) -> heisurf::Result<Outcome> {
    let octic = parse_octic_text(DEGENERATE_OCTIC, "degenerate_octic")?;
    let field = PrimeField::new(cfg.prime)?;
    let system = star3_system_from_octic(&octic, &field)?;
    let report = random_rank_probe(&system, cfg.prime, 20, cfg.seed)?;
    let ok = report.max_rank <= 2;
    Ok(Outcome::certificate(
        ok,
        format!(
            "max rank {} of 3; independence claim reported unverified",
            report.max_rank
        ),
    ))
}

fn star3_external(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    Ok(Outcome::skipped())
}

// ---------------------------------------------------------------------
// Numeric invariant checks

fn invariant_quad(name: FamilyName) -> String {
    let n = numeric_invariants(name);
    let c2 = n
        .c2_sheaf
        .map(|v| v.to_string())
        .unwrap_or_else(|| "-".into());
    format!(
        "({}, {}, {}, {})",
        n.k_squared, n.k_squared_cover, n.chi, c2
    )
}

fn invariants_chpp(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    Ok(Outcome::compare(
        "(5, 20, 1, -)".into(),
        invariant_quad(FamilyName::Chpp),
    ))
}

fn invariants_pp4(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    Ok(Outcome::compare(
        "(6, 54, 1, 18)".into(),
        invariant_quad(FamilyName::Pp4),
    ))
}

fn invariants_ksq_rule(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in [
        FamilyName::Chpp,
        FamilyName::Pp4,
        FamilyName::Hesse3,
        FamilyName::Ac3,
    ] {
        let n = numeric_invariants(name);
        ok &= n.k_squared == n.delta + 3;
        parts.push(format!("{}: {} = {} + 3", name.as_str(), n.k_squared, n.delta));
    }
    Ok(Outcome::certificate(ok, parts.join("; ")))
}

fn invariants_cover(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let mut ok = true;
    for name in FamilyName::all() {
        let n = numeric_invariants(name);
        ok &= n.cover_relations_hold();
        ok &= n.chi == 1 + n.p_g - n.q;
        if let Some(c2) = n.c2_sheaf {
            ok &= c2 == n.delta * n.delta * (n.k_squared - 4);
        }
    }
    Ok(Outcome::certificate(
        ok,
        "delta-squared scaling of the self-intersection and Euler characteristic on all five families"
            .into(),
    ))
}

fn invariants_zeuthen(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    Ok(Outcome::compare(
        "12".into(),
        zeuthen_segre_count(4, 4).to_string(),
    ))
}

// ---------------------------------------------------------------------
// Infrastructure checks

fn infra_bareiss(cfg: &SuiteConfig) -> heisurf::Result<Outcome> {
    let field = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xB4E1);
    let mut agreements = 0usize;
    for case in 0..200usize {
        let n = 1 + case % 4;
        let m = Matrix::from_fn(n, n, |_, _| {
            ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
        });
        let b = det_bareiss(&field, &m)?;
        let c = det_cofactor(&field, &m);
        if b == c {
            agreements += 1;
        }
    }
    Ok(Outcome::certificate(
        agreements == 200,
        format!("{agreements} of 200 random determinants agree"),
    ))
}

fn infra_roundtrip(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let mut polys: Vec<MultiPoly<Rationals>> = Vec::new();
    let b = pp4_branch_locus()?;
    polys.push(b.sextic.clone());
    let g = pp4_gamma()?;
    polys.push(g.components[0].clone());
    polys.push(chpp_discriminant().determinant.clone());
    let bm = beta_map();
    polys.push(bm.beta_tilde[0].clone());
    polys.push(bm.quartic.clone());
    polys.push(parse_octic_text(DENSE_OCTIC, "dense_octic.txt")?.poly);
    let mut ok = true;
    for p in &polys {
        let text = p.to_string();
        let back = p.ring().parse(&text)?;
        ok &= &back == p;
    }
    Ok(Outcome::certificate(
        ok,
        format!("{} suite polynomials round-tripped", polys.len()),
    ))
}

fn infra_groebner(_: &SuiteConfig) -> heisurf::Result<Outcome> {
    let ring = qring(&["y1", "y2", "y3"]);
    let cubic = ring
        .parse("y1^2*y2 + y2^2*y3 + y3^2*y1")
        .expect("fixed cubic parses");
    let gens: Vec<_> = (0..3).map(|v| cubic.partial_derivative(v)).collect();
    let basis = groebner(&gens)?;
    let mut ok = !basis.is_empty();
    let mut pairs = 0usize;
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            ok &= normal_form(&s, &basis).is_zero();
            pairs += 1;
        }
    }
    Ok(Outcome::certificate(
        ok,
        format!(
            "{} basis elements; {pairs} S-polynomials reduce to zero",
            basis.len()
        ),
    ))
}

// ---------------------------------------------------------------------
// The check table and runner

fn defs() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "ac3.family.equivariance",
            anchor: "the cyclic cubic family is an eigenvector system of both generators",
            run: ac3_equivariance,
        },
        CheckDef {
            id: "ac3.smooth.certificate",
            anchor: "gradient ideal of the cyclic cubic is projectively empty, with pure-power certificate",
            run: ac3_smooth,
        },
        CheckDef {
            id: "beta.identities",
            anchor: "contraction, correction, and pencil-membership identities of the cubic map",
            run: beta_identities,
        },
        CheckDef {
            id: "chpp.basepoints.resultant",
            anchor: "base points of the derived quadric pair occur exactly at parameters 1 and -1",
            run: chpp_basepoints,
        },
        CheckDef {
            id: "chpp.disc.lambda0",
            anchor: "trisection discriminant specialized at parameter zero",
            run: chpp_disc_lambda0,
        },
        CheckDef {
            id: "chpp.disc.routes",
            anchor: "determinant and resultant routes to the trisection discriminant agree",
            run: chpp_disc_routes,
        },
        CheckDef {
            id: "chpp.family.equivariance",
            anchor: "the bidegree (3,1) equation is invariant under both generators",
            run: chpp_equivariance,
        },
        CheckDef {
            id: "chpp.fiber.numeric",
            anchor: "singular fiber quartic at parameter one; parameter zero is rejected",
            run: chpp_fiber_numeric,
        },
        CheckDef {
            id: "chpp.fiber.quartic",
            anchor: "cleared singular fiber quartic, even in the fiber coordinate",
            run: chpp_fiber_quartic,
        },
        CheckDef {
            id: "chpp.invariants.basis",
            anchor: "invariant bidegree (3,1) forms: dimension two with the displayed basis",
            run: chpp_invariants_basis,
        },
        CheckDef {
            id: "heis.center.minus-identity",
            anchor: "the composite g1 g2 g1 g2 of the type (1,2) generators is minus the identity",
            run: heis_center_minus_identity,
        },
        CheckDef {
            id: "heis.relations.exhaustive",
            anchor: "defining commutator relations of the finite Heisenberg groups up to order 8",
            run: heis_relations,
        },
        CheckDef {
            id: "hesse.bilinear.trivial",
            anchor: "the invariant bilinear pairing is unique up to scale",
            run: hesse_bilinear,
        },
        CheckDef {
            id: "hesse.cubics.split",
            anchor: "translation-invariant cubics: dimension four, character split (2, 1, 1)",
            run: hesse_cubics_split,
        },
        CheckDef {
            id: "hesse.dual.membership",
            anchor: "dual sextic composed with the gradient reduces to zero modulo the cubic at four parameters",
            run: hesse_dual_membership,
        },
        CheckDef {
            id: "hesse.dual.sampled",
            anchor: "composed dual sextic vanishes at 100 random curve points over the probe prime",
            run: hesse_dual_sampled,
        },
        CheckDef {
            id: "hesse.dual.symbolic",
            anchor: "composed dual sextic is divisible by the cubic, symbolically in the parameter",
            run: hesse_dual_symbolic,
        },
        CheckDef {
            id: "hesse.gradient.identity",
            anchor: "three times each auxiliary quadric is a partial derivative of the cubic",
            run: hesse_gradient,
        },
        CheckDef {
            id: "hesse.smooth.verdicts",
            anchor: "pencil member is smooth iff twice the parameter avoids the cube roots of -1",
            run: hesse_smooth_verdicts,
        },
        CheckDef {
            id: "hesse3.family.equivariance",
            anchor: "pairing and symmetric cubic are invariant under both generators",
            run: hesse3_equivariance,
        },
        CheckDef {
            id: "hesse3.lambda.dictionary",
            anchor: "family parameter is six times the pencil parameter",
            run: hesse3_lambda,
        },
        CheckDef {
            id: "infra.bareiss.cofactor",
            anchor: "fraction-free determinant agrees with cofactor expansion on 200 random matrices",
            run: infra_bareiss,
        },
        CheckDef {
            id: "infra.groebner.confluence",
            anchor: "every S-polynomial of a computed basis reduces to zero",
            run: infra_groebner,
        },
        CheckDef {
            id: "infra.parse.roundtrip",
            anchor: "canonical serialization and the parser are mutually inverse on suite polynomials",
            run: infra_roundtrip,
        },
        CheckDef {
            id: "invariants.chpp",
            anchor: "numeric invariant quadruple of the trisection family",
            run: invariants_chpp,
        },
        CheckDef {
            id: "invariants.cover",
            anchor: "delta-squared covering relations for self-intersection and Euler characteristic",
            run: invariants_cover,
        },
        CheckDef {
            id: "invariants.ksq.rule",
            anchor: "canonical self-intersection equals the Pfaffian plus three on four families",
            run: invariants_ksq_rule,
        },
        CheckDef {
            id: "invariants.pp4",
            anchor: "numeric invariant quadruple of the determinantal family",
            run: invariants_pp4,
        },
        CheckDef {
            id: "invariants.zeuthen",
            anchor: "singular member count of the fiber pencil from the blown-up Euler number",
            run: invariants_zeuthen,
        },
        CheckDef {
            id: "pp4.branch.charts",
            anchor: "all three affine charts produce the same branch sextic",
            run: pp4_branch_charts,
        },
        CheckDef {
            id: "pp4.branch.coefficients",
            anchor: "the four printed coefficient families of the branch sextic, term by term",
            run: pp4_branch_coefficients,
        },
        CheckDef {
            id: "pp4.branch.crosscheck",
            anchor: "companion normalization of the sextic (parameter negated, scaled by -1/27) round-trips",
            run: pp4_branch_crosscheck,
        },
        CheckDef {
            id: "pp4.branch.cyclic",
            anchor: "branch sextic is invariant under the cyclic coordinate rotation",
            run: pp4_branch_cyclic,
        },
        CheckDef {
            id: "pp4.branch.misprint",
            anchor: "middle symmetric term of the printed sextic: the degree-2 monomial cannot occur in a degree-6 form and is read as the cubic-cubic pair",
            run: pp4_branch_misprint,
        },
        CheckDef {
            id: "pp4.branch.mu0",
            anchor: "branch sextic at parameter zero",
            run: pp4_branch_mu0,
        },
        CheckDef {
            id: "pp4.branch.sextic",
            anchor: "branch sextic of the degree-4 cover, with the corrected middle term",
            run: pp4_branch_sextic,
        },
        CheckDef {
            id: "pp4.family.equivariance",
            anchor: "translation permutes the three equations cyclically; the character scales them by (1, e^2, e)",
            run: pp4_equivariance,
        },
        CheckDef {
            id: "pp4.gamma.components",
            anchor: "fifteen wedge coordinates of the auxiliary vector match the display",
            run: pp4_gamma_components,
        },
        CheckDef {
            id: "pp4.gamma.dictionary",
            anchor: "coefficient dictionary of the auxiliary vector",
            run: pp4_gamma_dictionary,
        },
        CheckDef {
            id: "pp4.minors.dictionary",
            anchor: "2x2 minors reproduce the three equations with documented signs; the sum relation holds",
            run: pp4_minors,
        },
        CheckDef {
            id: "pp4.pencil.cubic",
            anchor: "four coefficients of the determinant cubic of the conic pencil",
            run: pp4_pencil_cubic,
        },
        CheckDef {
            id: "pp4.pencil.matrix",
            anchor: "symmetric matrix of the conic pencil on the first chart",
            run: pp4_pencil_matrix,
        },
        CheckDef {
            id: "pp4.pencil.mu0",
            anchor: "determinant cubic of the pencil at parameter zero",
            run: pp4_pencil_mu0,
        },
        CheckDef {
            id: "quartic4.eigenspaces",
            anchor: "the two joint quadric eigenspaces are two-dimensional, swapped by translation, and contain the family pair",
            run: quartic4_eigenspaces,
        },
        CheckDef {
            id: "quartic4.family.equivariance",
            anchor: "translation swaps the two quadrics; the character fixes one and negates the other",
            run: quartic4_equivariance,
        },
        CheckDef {
            id: "quartic4.smooth.split",
            anchor: "the quadric pencil curve is smooth at parameter 2 and singular at parameter 0",
            run: quartic4_smooth,
        },
        CheckDef {
            id: "star3.harness.degenerate",
            anchor: "for a pure eighth power the independence claim is reported unverified",
            run: star3_degenerate,
        },
        CheckDef {
            id: "star3.harness.dense",
            anchor: "the three composed conditions are independent for the shipped synthetic octic: rank 3 within 20 samples",
            run: star3_dense,
        },
        CheckDef {
            id: "star3.rank.external",
            anchor: "independence of the composed conditions for a published octic needs an external input file; run probe-rank --octic FILE",
            run: star3_external,
        },
    ]
}

fn run_one(def: &CheckDef, cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let outcome = match catch_unwind(AssertUnwindSafe(|| (def.run)(cfg))) {
        Ok(Ok(o)) => o,
        Ok(Err(e)) => Outcome {
            status: CheckStatus::Fail,
            expected: None,
            actual: Some(format!("error: {e}")),
        },
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Outcome {
                status: CheckStatus::Fail,
                expected: None,
                actual: Some(format!("panic: {msg}")),
            }
        }
    };
    Check {
        actual: outcome.actual,
        elapsed_ms: start.elapsed().as_millis() as u64,
        expected: outcome.expected,
        id: def.id.to_string(),
        paper_anchor: def.anchor.to_string(),
        status: outcome.status,
    }
}

/// Runs every check whose id matches the filter (all of them when the
/// filter is absent) and assembles the sorted report.
pub fn run_suite(filter: Option<&str>, seed: u64, prime: u64) -> VerificationReport {
    let cfg = SuiteConfig { seed, prime };
    let all = defs();
    let selected: Vec<&CheckDef> = all
        .iter()
        .filter(|d| filter.map_or(true, |f| glob_match(f, d.id)))
        .collect();
    let checks: Vec<Check> = selected.par_iter().map(|d| run_one(d, &cfg)).collect();
    let mut report = VerificationReport::new(seed, prime, env!("CARGO_PKG_VERSION"));
    report.checks = checks;
    report.sort_checks();
    report
}

/// Ids of every suite check, sorted; used by tests and documentation.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = defs().iter().map(|d| d.id).collect();
    ids.sort_unstable();
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted_in_the_table() {
        let ids = check_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup, "duplicate check id");
        assert!(ids.len() >= 25, "suite must stay at 25 checks or more");
    }

    #[test]
    fn empty_filter_gives_empty_passing_report() {
        let report = run_suite(Some("no.such.check"), DEFAULT_SEED, DEFAULT_PRIME);
        assert!(report.checks.is_empty());
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn single_fast_check_passes() {
        let report = run_suite(Some("invariants.*"), DEFAULT_SEED, DEFAULT_PRIME);
        assert_eq!(report.checks.len(), 5);
        assert_eq!(report.failures(), 0);
    }
}

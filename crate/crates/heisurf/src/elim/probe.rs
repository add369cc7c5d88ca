//! Randomized Jacobian rank probe over prime fields.
//!
//! The probe draws sample points with per-sample deterministic RNG streams
//! (ChaCha8 keyed by the seed, one stream per sample index), evaluates the
//! Jacobian of a system at each point, and records the ranks seen. Systems
//! provide their Jacobian through the [`RankProbeSystem`] trait: plain
//! polynomial systems evaluate precomputed symbolic partials, while
//! composed systems (too large to expand) can push dual numbers through
//! their evaluation graph instead, which yields exact derivatives without
//! symbolic expansion.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::exactmath::{Matrix, PrimeField, Rationals, RingOps};
use crate::poly::{Monomial, MultiPoly};

/// Dual number a + b*eps with eps^2 = 0 over GF(p); the eps part carries
/// one directional derivative through arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dual {
    pub val: u64,
    pub eps: u64,
}

impl Dual {
    pub fn constant(v: u64) -> Self {
        Dual { val: v, eps: 0 }
    }

    /// The variable being differentiated: value v, derivative 1.
    pub fn seeded(v: u64) -> Self {
        Dual { val: v, eps: 1 }
    }

    pub fn add(self, other: Dual, f: &PrimeField) -> Dual {
        Dual {
            val: f.add(&self.val, &other.val),
            eps: f.add(&self.eps, &other.eps),
        }
    }

    pub fn mul(self, other: Dual, f: &PrimeField) -> Dual {
        Dual {
            val: f.mul(&self.val, &other.val),
            eps: f.add(
                &f.mul(&self.val, &other.eps),
                &f.mul(&self.eps, &other.val),
            ),
        }
    }

    pub fn scale(self, c: u64, f: &PrimeField) -> Dual {
        Dual {
            val: f.mul(&self.val, &c),
            eps: f.mul(&self.eps, &c),
        }
    }

    pub fn pow(self, mut e: u16, f: &PrimeField) -> Dual {
        let mut acc = Dual::constant(1);
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(base, f);
            }
        }
        acc
    }
}

/// A polynomial with coefficients already reduced mod p, kept sparse for
/// fast repeated evaluation.
#[derive(Debug, Clone)]
pub struct FpPoly {
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
    max_deg: Vec<u16>,
}

impl FpPoly {
    /// Reduces a rational-coefficient polynomial mod p. Fails with a
    /// bad-prime error if p divides any coefficient denominator.
    pub fn from_poly(p: &MultiPoly<Rationals>, field: &PrimeField) -> Result<FpPoly> {
        let nvars = p.ring().num_vars();
        let mut terms = Vec::with_capacity(p.num_terms());
        let mut max_deg = vec![0u16; nvars];
        for (m, c) in p.terms() {
            let r = field.from_rational(c)?;
            if r == 0 {
                continue;
            }
            for (v, &e) in m.iter().enumerate() {
                max_deg[v] = max_deg[v].max(e);
            }
            terms.push((m.clone(), r));
        }
        Ok(FpPoly {
            nvars,
            terms,
            max_deg,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    /// Plain evaluation at a point (one residue per ring variable).
    pub fn eval(&self, field: &PrimeField, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.nvars, "point length mismatch");
        // Per-variable power tables make dense polynomials cheap.
        let tables: Vec<Vec<u64>> = (0..self.nvars)
            .map(|v| {
                let mut t = Vec::with_capacity(self.max_deg[v] as usize + 1);
                t.push(1u64 % field.modulus());
                for k in 1..=self.max_deg[v] as usize {
                    let prev = t[k - 1];
                    t.push(field.mul(&prev, &point[v]));
                }
                t
            })
            .collect();
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &tables[v][e as usize]);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Evaluation over dual numbers; the eps part of the result is the
    /// directional derivative determined by the eps parts of the inputs.
    pub fn eval_dual(&self, field: &PrimeField, point: &[Dual]) -> Dual {
        assert_eq!(point.len(), self.nvars, "point length mismatch");
        let tables: Vec<Vec<Dual>> = (0..self.nvars)
            .map(|v| {
                let mut t = Vec::with_capacity(self.max_deg[v] as usize + 1);
                t.push(Dual::constant(1 % field.modulus()));
                for k in 1..=self.max_deg[v] as usize {
                    let prev = t[k - 1];
                    t.push(prev.mul(point[v], field));
                }
                t
            })
            .collect();
        let mut acc = Dual::constant(0);
        for (m, c) in &self.terms {
            let mut t = Dual::constant(*c);
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(tables[v][e as usize], field);
                }
            }
            acc = acc.add(t, field);
        }
        acc
    }
}

/// A system exposing Jacobian evaluations at prime-field points.
pub trait RankProbeSystem: Sync {
    /// Number of ambient variables that receive random values.
    fn ambient_vars(&self) -> usize;

    /// Number of equations (Jacobian rows).
    fn rows(&self) -> usize;

    /// Number of differentiation variables (Jacobian columns).
    fn cols(&self) -> usize;

    /// The Jacobian matrix at a point, as rows of residues.
    fn jacobian_at(&self, field: &PrimeField, point: &[u64]) -> Vec<Vec<u64>>;
}

/// A plain polynomial system with a chosen set of differentiation
/// variables; partial derivatives are expanded symbolically once and then
/// evaluated per sample.
pub struct PolySystem {
    nvars: usize,
    partials: Vec<Vec<FpPoly>>,
}

impl PolySystem {
    /// Precomputes the Jacobian entries of `polys` with respect to `wrt`.
    ///
    /// # Panics
    ///
    /// Panics if `polys` is empty or a `wrt` index is out of range.
    pub fn new(
        polys: &[MultiPoly<Rationals>],
        wrt: &[usize],
        field: &PrimeField,
    ) -> Result<PolySystem> {
        assert!(!polys.is_empty(), "empty system");
        let nvars = polys[0].ring().num_vars();
        for &v in wrt {
            assert!(v < nvars, "differentiation variable out of range");
        }
        let mut partials = Vec::with_capacity(polys.len());
        for p in polys {
            let mut row = Vec::with_capacity(wrt.len());
            for &v in wrt {
                row.push(FpPoly::from_poly(&p.partial_derivative(v), field)?);
            }
            partials.push(row);
        }
        Ok(PolySystem { nvars, partials })
    }
}

impl RankProbeSystem for PolySystem {
    fn ambient_vars(&self) -> usize {
        self.nvars
    }

    fn rows(&self) -> usize {
        self.partials.len()
    }

    fn cols(&self) -> usize {
        self.partials.first().map_or(0, |r| r.len())
    }

    fn jacobian_at(&self, field: &PrimeField, point: &[u64]) -> Vec<Vec<u64>> {
        self.partials
            .iter()
            .map(|row| row.iter().map(|p| p.eval(field, point)).collect())
            .collect()
    }
}

/// Location and rank of the best sample seen by a probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankWitness {
    pub sample_index: u64,
    pub point: Vec<u64>,
    pub rank: usize,
}

/// Outcome of a randomized rank probe.
#[derive(Debug, Clone)]
pub struct RankProbeReport {
    pub prime: u64,
    pub seed: u64,
    pub samples: u64,
    /// Largest Jacobian rank observed.
    pub max_rank: usize,
    /// First sample attaining the maximum (None when `samples == 0`).
    pub witness: Option<RankWitness>,
    /// How many samples attained each rank.
    pub rank_histogram: BTreeMap<usize, u64>,
}

fn sample_point(seed: u64, index: u64, nvars: usize, p: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    (0..nvars).map(|_| rng.gen_range(0..p)).collect()
}

/// Runs the probe: `samples` deterministic random points, Jacobian rank at
/// each, largest rank and a witness reported. Samples run in parallel;
/// the result depends only on (system, prime, samples, seed).
pub fn random_rank_probe<S: RankProbeSystem>(
    system: &S,
    prime: u64,
    samples: u64,
    seed: u64,
) -> Result<RankProbeReport> {
    let field = PrimeField::new(prime)?;
    let nvars = system.ambient_vars();
    let ranks: Vec<usize> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let point = sample_point(seed, i, nvars, prime);
            let jac = system.jacobian_at(&field, &point);
            let m = Matrix::from_rows(jac);
            crate::exactmath::rank(&field, &m)
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for &r in &ranks {
        *histogram.entry(r).or_insert(0u64) += 1;
    }
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let witness = ranks
        .iter()
        .position(|&r| r == max_rank)
        .map(|idx| RankWitness {
            sample_index: idx as u64,
            point: sample_point(seed, idx as u64, nvars, prime),
            rank: max_rank,
        })
        .filter(|_| samples > 0);
    Ok(RankProbeReport {
        prime,
        seed,
        samples,
        max_rank,
        witness,
        rank_histogram: histogram,
    })
}

/// Probe for a plain polynomial system by symbolic partials.
pub fn random_rank_probe_polys(
    polys: &[MultiPoly<Rationals>],
    wrt: &[usize],
    prime: u64,
    samples: u64,
    seed: u64,
) -> Result<RankProbeReport> {
    let field = PrimeField::new(prime)?;
    let system = PolySystem::new(polys, wrt, &field)?;
    random_rank_probe(&system, prime, samples, seed)
}

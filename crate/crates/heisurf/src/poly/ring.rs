//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! A [`PolyRing`] fixes the coefficient field, the variable table, and the
//! monomial order; polynomials hold an `Arc` of their ring. Terms are kept
//! sorted in descending ring order with no zero coefficients, so the
//! leading term is always `terms[0]` and equality is structural.
//!
//! Mixing polynomials from different rings (different variable tables,
//! orders, or coefficient contexts) is a caller bug and panics.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{FieldOps, RingOps};

/// Exponent vector; index = position in the ring's variable table.
pub type Monomial = Vec<u16>;

/// Monomial orders supported by the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher total degree wins; on equal
    /// degree the exponent vector whose last differing entry is smaller
    /// wins.
    Grevlex,
    /// Lexicographic with respect to the variable table: the first
    /// differing entry decides, larger exponent wins.
    Lex,
}

/// Compares monomials `a` and `b` under the given order.
///
/// # Panics
///
/// Panics if the exponent vectors have different lengths.
pub fn cmp_monomials(order: MonomialOrder, a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    assert_eq!(a.len(), b.len(), "monomials from different rings");
    match order {
        MonomialOrder::Lex => {
            for (x, y) in a.iter().zip(b) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        }
        MonomialOrder::Grevlex => {
            let da: u64 = a.iter().map(|&e| e as u64).sum();
            let db: u64 = b.iter().map(|&e| e as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                other => return other,
            }
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // smaller trailing exponent means larger monomial
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        }
    }
}

/// A polynomial ring: coefficient field descriptor, variable table, and
/// monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing<F: FieldOps> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: FieldOps + Clone + PartialEq> PolyRing<F> {
    /// Builds a ring with the given variable table (which also fixes the
    /// lex precedence: earlier entries rank higher).
    ///
    /// # Panics
    ///
    /// Panics on duplicate variable names, empty names, names that are not
    /// identifiers, or the reserved name `zeta`.
    pub fn new(field: F, vars: &[&str], order: MonomialOrder) -> Arc<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            assert!(!v.is_empty(), "empty variable name");
            assert!(
                v.chars().next().map_or(false, |c| c.is_ascii_alphabetic() || c == '_')
                    && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
                "variable name `{}` is not an identifier",
                v
            );
            assert!(*v != "zeta", "`zeta` is reserved for root-of-unity literals");
            assert!(seen.insert(v.to_string()), "duplicate variable `{}`", v);
        }
        Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    /// Index of a variable by name.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn cmp(&self, a: &[u16], b: &[u16]) -> std::cmp::Ordering {
        cmp_monomials(self.order, a, b)
    }
}

/// Sparse multivariate polynomial. Terms are sorted descending in the
/// ring's monomial order and carry no zero coefficients.
#[derive(Debug, Clone)]
pub struct MultiPoly<F: FieldOps> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: FieldOps + Clone + PartialEq> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.terms == other.terms
    }
}

/// Ring construction helpers. All constructors return polynomials that own
/// an `Arc` of the ring.
impl<F: FieldOps + Clone + PartialEq> PolyRing<F> {
    pub fn zero_poly(self: &Arc<Self>) -> MultiPoly<F> {
        MultiPoly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one_poly(self: &Arc<Self>) -> MultiPoly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> MultiPoly<F> {
        if self.field.is_zero(&c) {
            return self.zero_poly();
        }
        MultiPoly {
            ring: self.clone(),
            terms: vec![(vec![0; self.vars.len()], c)],
        }
    }

    pub fn int(self: &Arc<Self>, n: i64) -> MultiPoly<F> {
        self.constant(self.field.from_i64(n))
    }

    /// The variable with the given table index.
    ///
    /// # Panics
    ///
    /// Panics if the index is out of range.
    pub fn var(self: &Arc<Self>, idx: usize) -> MultiPoly<F> {
        assert!(idx < self.vars.len(), "variable index out of range");
        let mut m = vec![0u16; self.vars.len()];
        m[idx] = 1;
        MultiPoly {
            ring: self.clone(),
            terms: vec![(m, self.field.one())],
        }
    }

    /// The variable with the given name.
    ///
    /// # Panics
    ///
    /// Panics if the name is not in the table.
    pub fn var_named(self: &Arc<Self>, name: &str) -> MultiPoly<F> {
        let idx = self
            .var_index(name)
            .unwrap_or_else(|| panic!("unknown variable `{}`", name));
        self.var(idx)
    }

    /// A single term `c * x^m`.
    pub fn monomial(self: &Arc<Self>, m: Monomial, c: F::Elem) -> MultiPoly<F> {
        assert_eq!(m.len(), self.vars.len(), "exponent vector length mismatch");
        if self.field.is_zero(&c) {
            return self.zero_poly();
        }
        MultiPoly {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    pub fn from_terms(self: &Arc<Self>, terms: Vec<(Monomial, F::Elem)>) -> MultiPoly<F> {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.len(), self.vars.len(), "exponent vector length mismatch");
        }
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = self.field.add(lc, &c);
                    if self.field.is_zero(lc) {
                        merged.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        merged.push((m, c));
                    }
                }
            }
        }
        MultiPoly {
            ring: self.clone(),
            terms: merged,
        }
    }
}

impl<F: FieldOps + Clone + PartialEq> MultiPoly<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.compatible(other),
            "polynomials belong to different rings"
        );
    }

    /// Leading term under the ring order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> F::Elem {
        let field = self.ring.field();
        self.terms
            .iter()
            .find(|(m, _)| m.iter().all(|&e| e == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let field = self.ring.field();
        let mut out: Vec<(Monomial, F::Elem)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let field = self.ring.field();
        if self.is_zero() || other.is_zero() {
            return self.ring.zero_poly();
        }
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma
                    .iter()
                    .zip(mb)
                    .map(|(&x, &y)| {
                        x.checked_add(y).expect("monomial exponent overflow")
                    })
                    .collect();
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let terms: Vec<(Monomial, F::Elem)> = acc.into_iter().collect();
        self.ring.from_terms(terms)
    }

    /// Multiplies by a field scalar.
    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero_poly();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), field.mul(x, c)))
                .collect(),
        }
    }

    /// Multiplies by a bare term `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) || self.is_zero() {
            return self.ring.zero_poly();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| {
                    let nm: Monomial = tm
                        .iter()
                        .zip(m)
                        .map(|(&x, &y)| x.checked_add(y).expect("monomial exponent overflow"))
                        .collect();
                    (nm, field.mul(tc, c))
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one_poly();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Total degree (None for the zero polynomial).
    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().map(|&e| e as u64).sum())
            .max()
    }

    /// Highest exponent of one variable (None for the zero polynomial).
    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m[var]).max()
    }

    /// Weighted degree of each term must agree; returns that degree. The
    /// zero polynomial counts as homogeneous of every degree (returns
    /// `Some(0)`).
    ///
    /// # Panics
    ///
    /// Panics if the weight vector length differs from the variable count.
    pub fn homogeneous_degree(&self, weights: &[u64]) -> Option<u64> {
        assert_eq!(weights.len(), self.ring.num_vars(), "weight vector length");
        let mut degs = self.terms.iter().map(|(m, _)| {
            m.iter()
                .zip(weights)
                .map(|(&e, &w)| e as u64 * w)
                .sum::<u64>()
        });
        match degs.next() {
            None => Some(0),
            Some(d0) => {
                if degs.all(|d| d == d0) {
                    Some(d0)
                } else {
                    None
                }
            }
        }
    }

    /// True if the polynomial is homogeneous for the given weights.
    pub fn is_homogeneous(&self, weights: &[u64]) -> bool {
        self.homogeneous_degree(weights).is_some()
    }

    /// Partial derivative with respect to one variable.
    ///
    /// # Panics
    ///
    /// Panics if the variable index is out of range.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.num_vars(), "variable index out of range");
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m[var];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm[var] = e - 1;
            let nc = field.mul(c, &field.from_i64(e as i64));
            if !field.is_zero(&nc) {
                terms.push((nm, nc));
            }
        }
        // Dropping terms cannot disturb the sort order.
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Simultaneously substitutes polynomials for the listed variables.
    /// Variables not listed are left in place; the replacements must live
    /// in the same ring.
    ///
    /// # Panics
    ///
    /// Panics on out-of-range indices, duplicated indices, or replacements
    /// from another ring.
    pub fn substitute(&self, assignments: &[(usize, MultiPoly<F>)]) -> Self {
        let nv = self.ring.num_vars();
        let mut repl: Vec<Option<&MultiPoly<F>>> = vec![None; nv];
        for (idx, p) in assignments {
            assert!(*idx < nv, "variable index out of range");
            assert!(repl[*idx].is_none(), "duplicate substitution target");
            self.check_compatible(p);
            repl[*idx] = Some(p);
        }
        // Precompute the powers of each replacement up to its largest use.
        let mut powers: Vec<Vec<MultiPoly<F>>> = vec![Vec::new(); nv];
        for v in 0..nv {
            if let Some(p) = repl[v] {
                let maxe = self.degree_in(v).unwrap_or(0);
                let mut tower = Vec::with_capacity(maxe as usize + 1);
                tower.push(self.ring.one_poly());
                for _ in 0..maxe {
                    let next = tower.last().unwrap().mul(p);
                    tower.push(next);
                }
                powers[v] = tower;
            }
        }
        let mut acc = self.ring.zero_poly();
        for (m, c) in &self.terms {
            let mut kept = vec![0u16; nv];
            let mut factor = self.ring.one_poly();
            for v in 0..nv {
                if m[v] == 0 {
                    continue;
                }
                if repl[v].is_some() {
                    factor = factor.mul(&powers[v][m[v] as usize]);
                } else {
                    kept[v] = m[v];
                }
            }
            acc = acc.add(&factor.mul_term(&kept, c));
        }
        acc
    }

    /// Evaluates at a full point (one field element per variable).
    ///
    /// # Panics
    ///
    /// Panics if the point length differs from the variable count.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.ring.num_vars(), "point length mismatch");
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut p = field.one();
                let mut base = point[v].clone();
                let mut k = e;
                while k > 0 {
                    if k & 1 == 1 {
                        p = field.mul(&p, &base);
                    }
                    k >>= 1;
                    if k > 0 {
                        base = field.mul(&base, &base);
                    }
                }
                t = field.mul(&t, &p);
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Exact division: returns q with `self = q * divisor`, or
    /// [`Error::ExactDivisionFailed`] when no such polynomial exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_compatible(divisor);
        let field = self.ring.field();
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let mut qm = vec![0u16; self.ring.num_vars()];
            for v in 0..self.ring.num_vars() {
                if rm[v] < dm[v] {
                    return Err(Error::ExactDivisionFailed(format!(
                        "leading term not divisible while reducing {}",
                        crate::poly::display::canonical_string(self)
                    )));
                }
                qm[v] = rm[v] - dm[v];
            }
            let qc = field.div(rc, &dc).expect("divisor leading coeff nonzero");
            let sub = divisor.mul_term(&qm, &qc);
            rem = rem.sub(&sub);
            quo_terms.push((qm, qc));
        }
        Ok(self.ring.from_terms(quo_terms))
    }

    /// Views the polynomial as univariate in `var`: index k of the result
    /// holds the coefficient (a polynomial free of `var`) of `var^k`.
    pub fn as_univariate(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m[var] as usize;
            let mut nm = m.clone();
            nm[var] = 0;
            buckets[e].push((nm, c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| self.ring.from_terms(b))
            .collect()
    }

    /// Rebuilds a polynomial from univariate coefficients in `var`.
    ///
    /// # Panics
    ///
    /// Panics if any coefficient still involves `var`.
    pub fn from_univariate(ring: &Arc<PolyRing<F>>, var: usize, coeffs: &[Self]) -> Self {
        let mut acc = ring.zero_poly();
        for (k, c) in coeffs.iter().enumerate() {
            assert!(
                c.degree_in(var).unwrap_or(0) == 0,
                "coefficient involves the carrier variable"
            );
            let mut m = vec![0u16; ring.num_vars()];
            m[var] = u16::try_from(k).expect("power fits in u16");
            acc = acc.add(&c.mul_term(&m, &ring.field().one()));
        }
        acc
    }

    /// Coefficient of `var^power` viewed univariately.
    pub fn coefficient_of(&self, var: usize, power: u16) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m[var] == power {
                let mut nm = m.clone();
                nm[var] = 0;
                terms.push((nm, c.clone()));
            }
        }
        self.ring.from_terms(terms)
    }

    /// Splits off the monomial content: the largest monomial dividing
    /// every term. Returns (content monomial, primitive part).
    pub fn monomial_content(&self) -> (Monomial, Self) {
        let nv = self.ring.num_vars();
        if self.is_zero() {
            return (vec![0; nv], self.clone());
        }
        let mut content = self.terms[0].0.clone();
        for (m, _) in &self.terms[1..] {
            for v in 0..nv {
                content[v] = content[v].min(m[v]);
            }
        }
        let prim = MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let nm: Monomial = m.iter().zip(&content).map(|(&x, &y)| x - y).collect();
                    (nm, c.clone())
                })
                .collect(),
        };
        (content, prim)
    }

    /// True if every term has an even exponent of `var`.
    pub fn is_even_in(&self, var: usize) -> bool {
        self.terms.iter().all(|(m, _)| m[var] % 2 == 0)
    }

    /// Divides every coefficient by a scalar.
    pub fn scale_div(&self, c: &F::Elem) -> Result<Self> {
        let field = self.ring.field();
        let inv = field.inv(c)?;
        Ok(self.scale(&inv))
    }

    /// Monic rescaling (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let lc = lc.clone();
                self.scale_div(&lc).expect("leading coefficient nonzero")
            }
        }
    }

    /// Maps the polynomial into another ring, matching variables by name
    /// and converting coefficients through `conv`. The target ring must
    /// contain every variable that actually occurs.
    ///
    /// # Panics
    ///
    /// Panics if an occurring variable is missing from the target ring.
    pub fn embed_into<G, C>(&self, target: &Arc<PolyRing<G>>, conv: C) -> MultiPoly<G>
    where
        G: FieldOps + Clone + PartialEq,
        C: Fn(&F::Elem) -> G::Elem,
    {
        let nv = self.ring.num_vars();
        let map: Vec<Option<usize>> = (0..nv)
            .map(|v| target.var_index(self.ring.var_name(v)))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = vec![0u16; target.num_vars()];
            for v in 0..nv {
                if m[v] > 0 {
                    let tv = map[v].unwrap_or_else(|| {
                        panic!(
                            "target ring lacks variable `{}`",
                            self.ring.var_name(v)
                        )
                    });
                    nm[tv] = m[v];
                }
            }
            terms.push((nm, conv(c)));
        }
        target.from_terms(terms)
    }
}

/// The polynomial ring itself is a ring: this lets matrices with
/// polynomial entries reuse the generic fraction-free linear algebra.
impl<F: FieldOps + Clone + PartialEq> RingOps for Arc<PolyRing<F>> {
    type Elem = MultiPoly<F>;

    fn zero(&self) -> MultiPoly<F> {
        self.zero_poly()
    }

    fn one(&self) -> MultiPoly<F> {
        self.one_poly()
    }

    fn from_i64(&self, n: i64) -> MultiPoly<F> {
        self.int(n)
    }

    fn add(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.add(b)
    }

    fn neg(&self, a: &MultiPoly<F>) -> MultiPoly<F> {
        a.neg()
    }

    fn mul(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.mul(b)
    }

    fn is_zero(&self, a: &MultiPoly<F>) -> bool {
        a.is_zero()
    }

    fn exact_div(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        a.exact_div(b)
    }

    fn format(&self, a: &MultiPoly<F>) -> String {
        crate::poly::display::canonical_string(a)
    }
}

impl<F: FieldOps + Clone + PartialEq> std::fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::poly::display::canonical_string(self))
    }
}

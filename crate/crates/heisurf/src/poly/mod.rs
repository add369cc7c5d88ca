//! Sparse multivariate polynomial arithmetic, parsing, and canonical
//! output over the exact coefficient fields of [`crate::exactmath`].

pub mod display;
mod parse;
mod ring;

pub use display::canonical_string;
pub use parse::CoeffFromLiteral;
pub use ring::{cmp_monomials, Monomial, MonomialOrder, MultiPoly, PolyRing};

use crate::exactmath::Rationals;
use std::sync::Arc;

/// Shorthand for the most common ring: rationals with grevlex order.
pub fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
    PolyRing::new(Rationals, vars, MonomialOrder::Grevlex)
}

/// Shorthand for a rational lex-ordered ring (used for elimination).
pub fn qring_lex(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
    PolyRing::new(Rationals, vars, MonomialOrder::Lex)
}

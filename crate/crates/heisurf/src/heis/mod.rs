//! Finite Heisenberg groups and their representations.
//!
//! A type (d1, d2) with d1 dividing d2 fixes the abelian group
//! H = Z/d1 x Z/d2. The associated Heisenberg group is generated by
//! translations of H, characters of H, and scalars: on the function space
//! V of H, translations permute the delta = d1*d2 basis vectors,
//! characters scale them by roots of unity of order dividing n = d2, and
//! the two kinds of generators commute up to the pairing character value.
//! Elements are stored as (translation part, character part, scalar
//! exponent) triples; [`HeisType::compose`] implements the resulting group
//! law on those triples.

mod module;
mod rep;

pub use module::{
    apply_action, character_projection_dim, commuting_translation_power, eigenspace_basis,
    spans_equal, EigenConstraint, GradedModule,
};
pub use rep::{RelationCheck, RelationReport, Representation};

use crate::error::{Error, Result};

/// Heisenberg type (d1, d2) with d1 | d2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeisType {
    d1: u32,
    d2: u32,
}

/// Element of the Heisenberg group of a fixed type, written as
/// scalar * translation * character. The translation exponents live in
/// Z/d1 x Z/d2, the character exponents likewise, and the scalar exponent
/// is a power of the primitive n-th root of unity with n = d2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeisElement {
    pub t: (u32, u32),
    pub chi: (u32, u32),
    pub scalar: u32,
}

impl HeisType {
    /// Builds a type; `d1` must divide `d2` and both must be positive.
    ///
    /// # Panics
    ///
    /// Panics if the divisibility or positivity constraint fails.
    pub fn new(d1: u32, d2: u32) -> Self {
        assert!(d1 >= 1 && d2 >= 1, "type entries must be positive");
        assert!(d2 % d1 == 0, "d1 must divide d2");
        HeisType { d1, d2 }
    }

    pub fn d1(&self) -> u32 {
        self.d1
    }

    pub fn d2(&self) -> u32 {
        self.d2
    }

    /// Order of the underlying abelian group (and of the representation).
    pub fn delta(&self) -> u32 {
        self.d1 * self.d2
    }

    /// Exponent of the group; the order of the relevant root of unity.
    pub fn exponent(&self) -> u32 {
        self.d2
    }

    fn reduce_pair(&self, p: (i64, i64)) -> (u32, u32) {
        (
            p.0.rem_euclid(self.d1 as i64) as u32,
            p.1.rem_euclid(self.d2 as i64) as u32,
        )
    }

    /// Exponent (base the primitive n-th root) of the pairing value
    /// chi_c(t) between a character and a group point.
    pub fn pairing_exponent(&self, chi: (u32, u32), t: (u32, u32)) -> u32 {
        let n = self.d2 as u64;
        let step = (self.d2 / self.d1) as u64;
        let e = (step * chi.0 as u64 * t.0 as u64 + chi.1 as u64 * t.1 as u64) % n;
        e as u32
    }

    pub fn identity(&self) -> HeisElement {
        HeisElement {
            t: (0, 0),
            chi: (0, 0),
            scalar: 0,
        }
    }

    /// Group law for elements written scalar * translation * character:
    /// moving b's translation past a's character costs the pairing value.
    pub fn compose(&self, a: &HeisElement, b: &HeisElement) -> HeisElement {
        let n = self.d2;
        let t = self.reduce_pair((a.t.0 as i64 + b.t.0 as i64, a.t.1 as i64 + b.t.1 as i64));
        let chi = self.reduce_pair((
            a.chi.0 as i64 + b.chi.0 as i64,
            a.chi.1 as i64 + b.chi.1 as i64,
        ));
        let pairing = self.pairing_exponent(a.chi, b.t);
        let scalar =
            ((a.scalar as i64 + b.scalar as i64 - pairing as i64).rem_euclid(n as i64)) as u32;
        HeisElement { t, chi, scalar }
    }

    pub fn inverse(&self, a: &HeisElement) -> HeisElement {
        let n = self.d2 as i64;
        let t = self.reduce_pair((-(a.t.0 as i64), -(a.t.1 as i64)));
        let chi = self.reduce_pair((-(a.chi.0 as i64), -(a.chi.1 as i64)));
        let pairing = self.pairing_exponent(a.chi, a.t) as i64;
        let scalar = (-(a.scalar as i64) - pairing).rem_euclid(n) as u32;
        HeisElement { t, chi, scalar }
    }

    pub fn pow(&self, a: &HeisElement, k: i64) -> HeisElement {
        let mut acc = self.identity();
        if k >= 0 {
            for _ in 0..k {
                acc = self.compose(&acc, a);
            }
        } else {
            let inv = self.inverse(a);
            for _ in 0..(-k) {
                acc = self.compose(&acc, &inv);
            }
        }
        acc
    }

    /// Translation generator along the first or second factor of H.
    ///
    /// # Panics
    ///
    /// Panics unless `which` is 0 or 1.
    pub fn translation_gen(&self, which: usize) -> HeisElement {
        let t = match which {
            0 => (1 % self.d1, 0),
            1 => (0, 1 % self.d2),
            _ => panic!("generator index must be 0 or 1"),
        };
        HeisElement {
            t,
            chi: (0, 0),
            scalar: 0,
        }
    }

    /// Character generator dual to the first or second factor of H.
    ///
    /// # Panics
    ///
    /// Panics unless `which` is 0 or 1.
    pub fn character_gen(&self, which: usize) -> HeisElement {
        let chi = match which {
            0 => (1 % self.d1, 0),
            1 => (0, 1 % self.d2),
            _ => panic!("generator index must be 0 or 1"),
        };
        HeisElement {
            t: (0, 0),
            chi,
            scalar: 0,
        }
    }

    /// The scalar generator (primitive n-th root of unity times identity).
    pub fn center_gen(&self) -> HeisElement {
        HeisElement {
            t: (0, 0),
            chi: (0, 0),
            scalar: 1 % self.d2,
        }
    }

    /// Enumerates all group points of H in basis order.
    pub fn group_points(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.delta() as usize);
        for a in 0..self.d1 {
            for b in 0..self.d2 {
                out.push((a, b));
            }
        }
        out
    }

    /// Basis index of a group point.
    pub fn point_index(&self, p: (u32, u32)) -> usize {
        (p.0 * self.d2 + p.1) as usize
    }
}

/// Checks a dimension bound for representation-space constructions.
pub(crate) fn check_delta_bound(t: &HeisType, bound: u32) -> Result<()> {
    if t.delta() > bound {
        return Err(Error::BoundExceeded(format!(
            "type ({}, {}) has order {} above the bound {}",
            t.d1,
            t.d2,
            t.delta(),
            bound
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law_round_trips() {
        let t = HeisType::new(2, 4);
        let a = HeisElement {
            t: (1, 3),
            chi: (1, 2),
            scalar: 1,
        };
        let b = HeisElement {
            t: (1, 1),
            chi: (0, 3),
            scalar: 2,
        };
        let ab = t.compose(&a, &b);
        let id = t.identity();
        assert_eq!(t.compose(&a, &t.inverse(&a)), id);
        assert_eq!(t.compose(&t.inverse(&a), &a), id);
        assert_eq!(t.compose(&ab, &t.inverse(&b)), a);
        // associativity on a few triples
        let c = t.center_gen();
        assert_eq!(
            t.compose(&t.compose(&a, &b), &c),
            t.compose(&a, &t.compose(&b, &c))
        );
    }

    #[test]
    fn pairing_exponent_matches_orders() {
        let t = HeisType::new(1, 3);
        // chi = (0,1) evaluated on t = (0,1) is the primitive cube root.
        assert_eq!(t.pairing_exponent((0, 1), (0, 1)), 1);
        assert_eq!(t.pairing_exponent((0, 2), (0, 2)), 1); // 4 mod 3
        let s = HeisType::new(2, 2);
        // first-factor character on first-factor point: zeta_2 = zeta_2^1
        assert_eq!(s.pairing_exponent((1, 0), (1, 0)), 1);
        assert_eq!(s.pairing_exponent((1, 0), (0, 1)), 0);
    }

    #[test]
    fn generator_orders() {
        let t = HeisType::new(2, 4);
        assert_eq!(t.pow(&t.translation_gen(1), 4), t.identity());
        assert_ne!(t.pow(&t.translation_gen(1), 2), t.identity());
        assert_eq!(t.pow(&t.character_gen(0), 2), t.identity());
        assert_eq!(t.pow(&t.center_gen(), 4), t.identity());
    }

    #[test]
    fn commutator_is_central() {
        let ty = HeisType::new(1, 4);
        let tr = ty.translation_gen(1);
        let ch = ty.character_gen(1);
        // [chi, t] = chi t chi^-1 t^-1 is a pure scalar.
        let comm = ty.compose(
            &ty.compose(&ch, &tr),
            &ty.compose(&ty.inverse(&ch), &ty.inverse(&tr)),
        );
        assert_eq!(comm.t, (0, 0));
        assert_eq!(comm.chi, (0, 0));
        assert_ne!(comm.scalar, 0);
    }

    #[test]
    fn point_indexing() {
        let t = HeisType::new(2, 4);
        let pts = t.group_points();
        assert_eq!(pts.len(), 8);
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(t.point_index(*p), i);
        }
    }

    #[test]
    #[should_panic(expected = "d1 must divide d2")]
    fn invalid_type_panics() {
        let _ = HeisType::new(2, 3);
    }
}

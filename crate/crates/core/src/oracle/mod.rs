//! Brute-force computations in small finite groups.
//!
//! Everything here works on concrete elements: wreath products of finite
//! abelian groups, subgroup closure, lower central series, identity and
//! discrimination checks. Costs are bounded by an explicit [`Budget`].

mod abelian;
mod series;
mod subgroup;
mod table;
mod word;
mod wreath;

use std::fmt::Debug;
use std::hash::Hash;

pub use abelian::FiniteAbelianGroup;
pub use series::{max_class_t_generated, nilpotency_class, LowerCentralSeries};
pub use subgroup::{generated_subgroup, normal_closure, Subgroup};
pub use table::TableGroup;
pub use word::{discriminate, eval_word, holds_identity, IdentityMode, IdentityOutcome, Word};
pub use wreath::{WreathElement, WreathProduct};

/// Limits on brute-force work. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest group (or element universe) that may be built or enumerated.
    pub elements: u64,
    /// Largest number of tuples or subsets that may be enumerated.
    pub tuples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: 1 << 24,
            tuples: 1 << 20,
        }
    }
}

/// A finite group given by its operations.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// A generating set of the whole group.
    fn generators(&self) -> Vec<Self::Elem>;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    /// `g^-1 a g`.
    fn conjugate(&self, a: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(g), &self.mul(a, g))
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let mut base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub(crate) fn check_budget(what: &'static str, needed: u128, budget: u64) -> crate::Result<()> {
    if needed > budget as u128 {
        Err(crate::Error::Budget {
            what,
            needed,
            budget: budget as u128,
        })
    } else {
        Ok(())
    }
}

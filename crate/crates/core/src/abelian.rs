//! Direct-sum descriptors of abelian groups.
//!
//! A descriptor records a free rank, a multiset of primary cyclic summands
//! `C_{p^k}` with cardinal multiplicities, and the set of primes at which the
//! torsion part has unbounded element orders. Canonical form is a sorted map,
//! so structural equality is group isomorphism for groups of bounded exponent.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

use crate::cardinal::{Cardinal, ExtNat};
use crate::error::{Error, Result};
use crate::primes::{factorize, is_prime, valuation};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianDescriptor {
    free_rank: Cardinal,
    summands: BTreeMap<(u64, u32), Cardinal>,
    unbounded: BTreeSet<u64>,
}

impl AbelianDescriptor {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds a canonical descriptor from cyclic groups of arbitrary order.
    ///
    /// Composite orders are split into primary parts; order-1 entries and
    /// zero multiplicities vanish. `unbounded_primes` lists primes with
    /// unbounded torsion.
    pub fn canonicalize(
        raw: &[(u64, Cardinal)],
        free_rank: Cardinal,
        unbounded_primes: &[u64],
    ) -> Result<Self> {
        let mut d = AbelianDescriptor {
            free_rank,
            ..Self::default()
        };
        for &(order, mult) in raw {
            if order == 0 {
                return Err(Error::ZeroOrder);
            }
            for (p, k) in factorize(order) {
                d.add_summand(p, k, mult);
            }
        }
        for &p in unbounded_primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            d.unbounded.insert(p);
        }
        Ok(d)
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: u64) -> Self {
        Self::canonicalize(&[(n, Cardinal::ONE)], Cardinal::ZERO, &[]).expect("n > 0")
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: Cardinal) -> Self {
        AbelianDescriptor {
            free_rank: rank,
            ..Self::default()
        }
    }

    /// `mult` copies of `C_{p^k}`.
    pub fn primary(p: u64, k: u32, mult: Cardinal) -> Self {
        assert!(is_prime(p) && k >= 1);
        let mut d = Self::default();
        d.add_summand(p, k, mult);
        d
    }

    fn add_summand(&mut self, p: u64, k: u32, mult: Cardinal) {
        if mult.is_zero() || k == 0 {
            return;
        }
        let entry = self.summands.entry((p, k)).or_insert(Cardinal::ZERO);
        *entry = *entry + mult;
    }

    pub fn free_rank(&self) -> Cardinal {
        self.free_rank
    }

    /// Summand multiplicities keyed by `(p, k)` for `C_{p^k}`, sorted.
    pub fn summands(&self) -> &BTreeMap<(u64, u32), Cardinal> {
        &self.summands
    }

    pub fn multiplicity(&self, p: u64, k: u32) -> Cardinal {
        self.summands.get(&(p, k)).copied().unwrap_or(Cardinal::ZERO)
    }

    pub fn unbounded_primes(&self) -> &BTreeSet<u64> {
        &self.unbounded
    }

    pub fn unbounded_torsion(&self) -> bool {
        !self.unbounded.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank.is_zero() && self.summands.is_empty() && self.unbounded.is_empty()
    }

    pub fn has_finite_exponent(&self) -> bool {
        self.free_rank.is_zero() && self.unbounded.is_empty()
    }

    /// True for finite groups: bounded, with finitely many summands.
    pub fn is_finite(&self) -> bool {
        self.has_finite_exponent() && self.summands.values().all(|c| c.is_finite())
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.free_rank.is_finite()
            && self.unbounded.is_empty()
            && self.summands.values().all(|c| c.is_finite())
    }

    /// Primes occurring in the torsion summands, sorted.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.summands.keys().map(|&(p, _)| p).collect()
    }

    /// Order of a finite group, `None` otherwise.
    pub fn order(&self) -> Option<BigUint> {
        if !self.is_finite() {
            return None;
        }
        let mut n = BigUint::one();
        for (&(p, k), &c) in &self.summands {
            let c = c.finite().expect("finite") as u32;
            n *= BigUint::from(p).pow(k * c);
        }
        Some(n)
    }

    pub fn exponent(&self) -> ExtNat {
        if !self.has_finite_exponent() {
            return ExtNat::Inf;
        }
        self.summands
            .keys()
            .fold(ExtNat::one(), |acc, &(p, k)| {
                acc.lcm(&ExtNat::Finite(BigUint::from(p).pow(k)))
            })
    }

    fn require_finite_exponent(&self) -> Result<()> {
        if self.has_finite_exponent() {
            Ok(())
        } else {
            Err(Error::InfiniteExponent)
        }
    }

    /// Largest `k` with `p^k` dividing the exponent.
    pub fn k_of(&self, p: u64) -> Result<u32> {
        self.require_finite_exponent()?;
        Ok(self
            .summands
            .keys()
            .filter(|&&(q, _)| q == p)
            .map(|&(_, k)| k)
            .max()
            .unwrap_or(0))
    }

    /// The p-primary component.
    pub fn primary_component(&self, p: u64) -> Result<Self> {
        self.require_finite_exponent()?;
        Ok(AbelianDescriptor {
            summands: self
                .summands
                .iter()
                .filter(|(&(q, _), _)| q == p)
                .map(|(&key, &c)| (key, c))
                .collect(),
            ..Self::default()
        })
    }

    /// `B[s]`: the subgroup generated by elements whose order divides `s`.
    pub fn bounded_subgroup(&self, s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::NonPositive { what: "s" });
        }
        self.require_finite_exponent()?;
        let mut d = Self::default();
        for (&(p, k), &c) in &self.summands {
            d.add_summand(p, k.min(valuation(s, p)), c);
        }
        Ok(d)
    }

    /// Rank of `B[p^k]/B[p^(k-1)]`: the number of summands `C_{p^j}` with `j >= k`.
    pub fn layer_rank(&self, p: u64, k: u32) -> Result<Cardinal> {
        if k == 0 {
            return Err(Error::NonPositive { what: "k" });
        }
        self.require_finite_exponent()?;
        Ok(self
            .summands
            .iter()
            .filter(|(&(q, j), _)| q == p && j >= k)
            .map(|(_, &c)| c)
            .sum())
    }

    /// `B[p^k]/B[p^(k-1)]` as an elementary abelian descriptor.
    pub fn layer_quotient(&self, p: u64, k: u32) -> Result<Self> {
        let mu = self.layer_rank(p, k)?;
        let mut d = Self::default();
        d.add_summand(p, 1, mu);
        Ok(d)
    }

    /// Multiplicity of the top summand `C_{p^k}` with `k = k_of(p)`.
    pub fn top_layer_multiplicity(&self, p: u64) -> Result<Cardinal> {
        let k = self.k_of(p)?;
        if k == 0 {
            return Err(Error::PrimeNotDividing { p });
        }
        Ok(self.multiplicity(p, k))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut d = self.clone();
        d.free_rank = d.free_rank + other.free_rank;
        for (&(p, k), &c) in &other.summands {
            d.add_summand(p, k, c);
        }
        d.unbounded.extend(other.unbounded.iter().copied());
        d
    }

    /// Direct sum of `c` copies.
    pub fn direct_power(&self, c: Cardinal) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NonPositive { what: "power" });
        }
        Ok(AbelianDescriptor {
            free_rank: self.free_rank * c,
            summands: self.summands.iter().map(|(&key, &m)| (key, m * c)).collect(),
            unbounded: self.unbounded.clone(),
        })
    }

    /// Exponents of the cyclic summands at `p`, descending, with multiplicity.
    /// Infinite multiplicities repeat forever.
    pub fn exponent_sequence(&self, p: u64) -> impl Iterator<Item = u32> + '_ {
        self.summands
            .iter()
            .rev()
            .filter(move |(&(q, _), _)| q == p)
            .flat_map(|(&(_, k), &c)| {
                let n = c.finite().map_or(usize::MAX, |n| n as usize);
                std::iter::repeat_n(k, n)
            })
    }

    /// Orders of the cyclic summands of a finite group, in canonical order.
    pub fn cyclic_orders(&self) -> Option<Vec<u64>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = Vec::new();
        for (&(p, k), &c) in &self.summands {
            let n = p.checked_pow(k)?;
            out.extend(std::iter::repeat_n(n, c.finite()? as usize));
        }
        Some(out)
    }
}

/// Partitions of `n` into non-increasing positive parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n`, up to isomorphism.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianDescriptor> {
    let mut groups = vec![AbelianDescriptor::trivial()];
    for (p, a) in factorize(n) {
        let mut next = Vec::new();
        for g in &groups {
            for parts in partitions(a) {
                let mut h = g.clone();
                for k in parts {
                    h.add_summand(p, k, Cardinal::ONE);
                }
                next.push(h);
            }
        }
        groups = next;
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use Cardinal::{Finite, Inf};

    fn desc(entries: &[((u64, u32), Cardinal)]) -> AbelianDescriptor {
        let mut d = AbelianDescriptor::trivial();
        for &((p, k), c) in entries {
            d.add_summand(p, k, c);
        }
        d
    }

    #[test]
    fn canonicalize_examples() {
        let d = AbelianDescriptor::canonicalize(&[(6, Finite(1))], Finite(0), &[]).unwrap();
        assert_eq!(d, desc(&[((2, 1), Finite(1)), ((3, 1), Finite(1))]));
        let d = AbelianDescriptor::canonicalize(&[(4, Inf), (4, Finite(2))], Finite(0), &[])
            .unwrap();
        assert_eq!(d, desc(&[((2, 2), Inf)]));
        let d = AbelianDescriptor::canonicalize(&[(1, Finite(5))], Finite(0), &[]).unwrap();
        assert!(d.is_trivial());
        assert_eq!(
            AbelianDescriptor::canonicalize(&[(0, Finite(1))], Finite(0), &[]),
            Err(Error::ZeroOrder)
        );
        assert_eq!(
            AbelianDescriptor::canonicalize(&[], Finite(0), &[4]),
            Err(Error::NotPrime(4))
        );
    }

    #[test]
    fn exponent_examples() {
        let d = desc(&[((2, 2), Inf), ((3, 1), Finite(5))]);
        assert_eq!(d.exponent(), ExtNat::from(12));
        assert_eq!(AbelianDescriptor::free(Finite(1)).exponent(), ExtNat::Inf);
        assert_eq!(AbelianDescriptor::trivial().exponent(), ExtNat::from(1));
        assert_eq!(d.k_of(2), Ok(2));
        assert_eq!(d.k_of(5), Ok(0));
        let u = AbelianDescriptor::canonicalize(&[], Finite(0), &[2]).unwrap();
        assert_eq!(u.k_of(2), Err(Error::InfiniteExponent));
        assert_eq!(u.exponent(), ExtNat::Inf);
    }

    #[test]
    fn primary_component_examples() {
        let d = desc(&[((2, 1), Inf), ((3, 2), Finite(1))]);
        assert_eq!(d.primary_component(3).unwrap(), desc(&[((3, 2), Finite(1))]));
        assert!(d.primary_component(7).unwrap().is_trivial());
        let p = desc(&[((2, 2), Finite(1)), ((2, 1), Inf)]);
        assert_eq!(p.primary_component(2).unwrap(), p);
    }

    #[test]
    fn bounded_subgroup_examples() {
        let d = desc(&[((2, 3), Finite(3))]);
        assert_eq!(d.bounded_subgroup(4).unwrap(), desc(&[((2, 2), Finite(3))]));
        assert!(d.bounded_subgroup(1).unwrap().is_trivial());
        assert_eq!(d.bounded_subgroup(0), Err(Error::NonPositive { what: "s" }));
        let d = desc(&[((2, 1), Inf), ((3, 2), Finite(2))]);
        assert_eq!(
            d.bounded_subgroup(6).unwrap(),
            desc(&[((2, 1), Inf), ((3, 1), Finite(2))])
        );
    }

    #[test]
    fn layer_examples() {
        for p in [2, 3, 5] {
            let d = desc(&[((p, 2), Finite(1)), ((p, 1), Inf)]);
            assert_eq!(d.layer_quotient(p, 2).unwrap(), desc(&[((p, 1), Finite(1))]));
            assert_eq!(d.layer_quotient(p, 1).unwrap(), desc(&[((p, 1), Inf)]));
            assert!(d.layer_quotient(p, 3).unwrap().is_trivial());
            assert_eq!(d.top_layer_multiplicity(p), Ok(Finite(1)));
        }
        let d = desc(&[((3, 2), Finite(4))]);
        assert_eq!(d.layer_quotient(3, 2).unwrap(), desc(&[((3, 1), Finite(4))]));
        assert_eq!(d.layer_quotient(3, 0), Err(Error::NonPositive { what: "k" }));
        assert_eq!(
            desc(&[((2, 2), Inf), ((2, 1), Inf)]).top_layer_multiplicity(2),
            Ok(Inf)
        );
        assert_eq!(desc(&[((5, 3), Finite(7))]).top_layer_multiplicity(5), Ok(Finite(7)));
        assert_eq!(
            desc(&[((5, 3), Finite(7))]).top_layer_multiplicity(2),
            Err(Error::PrimeNotDividing { p: 2 })
        );
    }

    #[test]
    fn sums_and_powers() {
        let c2 = desc(&[((2, 1), Finite(1))]);
        assert_eq!(c2.direct_power(Inf).unwrap(), desc(&[((2, 1), Inf)]));
        assert_eq!(c2.direct_sum(&AbelianDescriptor::trivial()), c2);
        let d = desc(&[((2, 2), Finite(1)), ((2, 1), Finite(3))]);
        assert_eq!(
            d.direct_power(Finite(2)).unwrap(),
            desc(&[((2, 2), Finite(2)), ((2, 1), Finite(6))])
        );
        assert!(d.direct_power(Finite(0)).is_err());
    }

    #[test]
    fn groups_of_small_order() {
        let counts: Vec<usize> = (1..=16).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(abelian_groups_of_order(72).len(), 6);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn exponent_sequence_descends() {
        let d = desc(&[((2, 3), Finite(2)), ((2, 1), Inf), ((3, 1), Finite(1))]);
        let ks: Vec<u32> = d.exponent_sequence(2).take(5).collect();
        assert_eq!(ks, vec![3, 3, 1, 1, 1]);
        assert_eq!(d.exponent_sequence(3).collect::<Vec<_>>(), vec![1]);
    }
}

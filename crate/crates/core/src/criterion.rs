//! Deciding whether `A Wr B` generates `var(A)·var(B)`, and the chain of
//! varieties `var(A Wr B^s)` when it does not.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_bigint::BigUint;

use crate::abelian::AbelianDescriptor;
use crate::cardinal::{Cardinal, ExtNat};
use crate::error::{Error, Result};
use crate::nilpotency::{lambda_general_bound, liebeck_class, nu_general, separation_gap, ChainShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    NonFiniteExponent,
    FiniteCoprime,
    FiniteAllLayersInfinite,
    Blocked,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::NonFiniteExponent => "NON_FINITE_EXPONENT",
            CaseTag::FiniteCoprime => "FINITE_COPRIME",
            CaseTag::FiniteAllLayersInfinite => "FINITE_ALL_LAYERS_INFINITE",
            CaseTag::Blocked => "BLOCKED",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A prime at which the top layer of the active group is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub p: u64,
    /// `k(B, p)`.
    pub k: u32,
    /// Rank of `B[p^k]/B[p^(k-1)]`, always finite.
    pub layer_rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub generates: bool,
    pub case: CaseTag,
    /// Non-empty exactly when `generates` is false; sorted by prime.
    pub witnesses: Vec<Witness>,
    pub exponent_a: ExtNat,
    pub exponent_b: ExtNat,
}

/// Houghton's criterion for finite groups: coprime exponents.
pub fn generates_finite(m: &BigUint, n: &BigUint) -> bool {
    m.gcd(n) == BigUint::from(1u8)
}

/// Decides whether `A Wr B` generates `var(A)·var(B)`. `B` is the active group.
///
/// With both exponents finite the answer is yes iff, for every prime `p`
/// dividing both, `B` has infinitely many summands of the top order `p^k(B,p)`.
pub fn generates(a: &AbelianDescriptor, b: &AbelianDescriptor) -> Verdict {
    let exponent_a = a.exponent();
    let exponent_b = b.exponent();
    if !exponent_a.is_finite() || !exponent_b.is_finite() {
        return Verdict {
            generates: true,
            case: CaseTag::NonFiniteExponent,
            witnesses: Vec::new(),
            exponent_a,
            exponent_b,
        };
    }
    let shared: Vec<u64> = a.primes().intersection(&b.primes()).copied().collect();
    let mut witnesses = Vec::new();
    for &p in &shared {
        let k = b.k_of(p).expect("finite exponent");
        match b.multiplicity(p, k) {
            Cardinal::Inf => {}
            Cardinal::Finite(layer_rank) => witnesses.push(Witness { p, k, layer_rank }),
        }
    }
    let case = if shared.is_empty() {
        CaseTag::FiniteCoprime
    } else if witnesses.is_empty() {
        CaseTag::FiniteAllLayersInfinite
    } else {
        CaseTag::Blocked
    };
    Verdict {
        generates: witnesses.is_empty(),
        case,
        witnesses,
        exponent_a,
        exponent_b,
    }
}

/// Which family of groups a pair falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// One of the groups has infinite exponent.
    NonFiniteExponent,
    /// Both groups finitely generated of finite exponent, i.e. finite.
    FinitelyGenerated,
    /// Both groups are p-groups for one prime p.
    PrimePower,
    /// Finite exponents with several primes involved.
    CompositeExponent,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::NonFiniteExponent => "non-finite exponent",
            Branch::FinitelyGenerated => "finite groups",
            Branch::PrimePower => "abelian p-groups",
            Branch::CompositeExponent => "composite exponents",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: CaseTag,
    pub branch: Branch,
    pub explanation: String,
}

pub fn classify(a: &AbelianDescriptor, b: &AbelianDescriptor) -> Classification {
    let verdict = generates(a, b);
    let branch = if verdict.case == CaseTag::NonFiniteExponent {
        Branch::NonFiniteExponent
    } else if a.is_finite() && b.is_finite() {
        Branch::FinitelyGenerated
    } else if a.primes().union(&b.primes()).count() <= 1 {
        Branch::PrimePower
    } else {
        Branch::CompositeExponent
    };
    let explanation = match branch {
        Branch::NonFiniteExponent => {
            let which = if !verdict.exponent_a.is_finite() { "A" } else { "B" };
            format!("{which} is not of finite exponent, so the wreath product generates the product variety")
        }
        Branch::FinitelyGenerated => format!(
            "finite groups: generates iff exponents {} and {} are coprime",
            verdict.exponent_a, verdict.exponent_b
        ),
        Branch::PrimePower | Branch::CompositeExponent => {
            if verdict.generates {
                match verdict.case {
                    CaseTag::FiniteCoprime => "exponents are coprime".to_string(),
                    _ => "every shared prime has an infinite top layer in B".to_string(),
                }
            } else {
                let parts: Vec<String> = verdict
                    .witnesses
                    .iter()
                    .map(format_layer)
                    .collect();
                format!("main criterion, {}", parts.join("; "))
            }
        }
    };
    Classification {
        case: verdict.case,
        branch,
        explanation,
    }
}

/// Describes a witness as `prime p, |B[p^k]/B[p^(k-1)]| = p^rank (finite)`.
pub fn format_layer(w: &Witness) -> String {
    let p = BigUint::from(w.p);
    let size = match u32::try_from(w.layer_rank) {
        Ok(r) if r <= 64 => p.pow(r).to_string(),
        _ => format!("{}^{}", w.p, w.layer_rank),
    };
    format!(
        "blocking prime {}, |B[{}]/B[{}]| = {size} (finite)",
        w.p,
        p.pow(w.k),
        p.pow(w.k - 1)
    )
}

/// Shape of `B_p` relevant to the separation argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// `B_p` is a finite group.
    FiniteComponent,
    Shape(ChainShape),
}

/// Splits an infinite `B_p` with finite top layer into its finite leading
/// layers `l_0..l_(d-1)` and the first order `p^(k-d)` occurring infinitely often.
pub fn separating_parameters(b: &AbelianDescriptor, p: u64) -> Result<Separation> {
    let k = b.k_of(p)?;
    if k == 0 {
        return Err(Error::PrimeNotDividing { p });
    }
    let b_p = b.primary_component(p)?;
    if b_p.is_finite() {
        return Ok(Separation::FiniteComponent);
    }
    if b.multiplicity(p, k).is_infinite() {
        return Err(Error::NoSeparation { p });
    }
    let mut l = Vec::new();
    for i in 0..k {
        match b.multiplicity(p, k - i) {
            Cardinal::Finite(n) => l.push(n),
            Cardinal::Inf => return Ok(Separation::Shape(ChainShape::new(k, i, l)?)),
        }
    }
    unreachable!("an infinite bounded p-group has an infinite multiplicity")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alternative {
    Collapses,
    StrictChain,
}

impl Alternative {
    pub fn as_str(self) -> &'static str {
        match self {
            Alternative::Collapses => "COLLAPSES",
            Alternative::StrictChain => "STRICT_CHAIN",
        }
    }
}

/// Evidence that `var(A Wr B^s)` is properly contained in `var(A Wr B^(s+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A `t`-generated group of class `nu` lies in the larger variety while
    /// every `t`-generated group of the smaller one has class at most `lambda`.
    Gap {
        p: u64,
        nu: BigInt,
        lambda: BigInt,
        gap: BigInt,
    },
    /// The finite groups `A_p wr B_p^s` and `A_p wr B_p^(s+1)` have different classes.
    ClassDifference {
        p: u64,
        class_s: BigInt,
        class_next: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub s: u32,
    pub witness_t: u64,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub alternative: Alternative,
    pub per_prime: Vec<(u64, Separation)>,
    pub steps: Vec<ChainStep>,
}

/// Either all `var(A Wr B^s)` coincide with `var(A)·var(B)`, or they form a
/// strictly increasing chain; certificates are produced for `s = 1..=s_max`.
pub fn chain_analysis(a: &AbelianDescriptor, b: &AbelianDescriptor, s_max: u32) -> ChainReport {
    let verdict = generates(a, b);
    if verdict.generates {
        return ChainReport {
            alternative: Alternative::Collapses,
            per_prime: Vec::new(),
            steps: Vec::new(),
        };
    }
    let per_prime: Vec<(u64, Separation)> = verdict
        .witnesses
        .iter()
        .map(|w| {
            let sep = separating_parameters(b, w.p).expect("witness has a finite top layer");
            (w.p, sep)
        })
        .collect();

    let infinite = per_prime.iter().find_map(|(p, sep)| match sep {
        Separation::Shape(shape) => Some((*p, shape)),
        Separation::FiniteComponent => None,
    });
    let steps = match infinite {
        Some((p, shape)) => {
            let u = a.k_of(p).expect("finite exponent");
            let gap = separation_gap(p, shape).expect("l[0] >= 1");
            (1..=s_max)
                .map(|s| {
                    let sum: u64 = shape.l.iter().sum();
                    let t = (s as u64 + 1) * sum + 2;
                    let nu = nu_general(p, u, shape, s as u64 + 1, t).expect("t is large enough");
                    let lambda = lambda_general_bound(p, u, shape, s as u64, t).expect("t is large enough");
                    debug_assert_eq!(&nu - &lambda, gap);
                    ChainStep {
                        s,
                        witness_t: t,
                        certificate: Certificate::Gap {
                            p,
                            nu,
                            lambda,
                            gap: gap.clone(),
                        },
                    }
                })
                .collect()
        }
        None => {
            let p = verdict.witnesses[0].p;
            let b_p = b.primary_component(p).expect("finite exponent");
            let u = a.k_of(p).expect("finite exponent");
            let rank = b_p.exponent_sequence(p).count() as u64;
            let class_of = |s: u32| {
                let power = b_p.direct_power(Cardinal::Finite(s as u64)).expect("s >= 1");
                let ks: Vec<u32> = power.exponent_sequence(p).collect();
                liebeck_class(p, u, &ks).expect("valid p-group parameters")
            };
            (1..=s_max)
                .map(|s| ChainStep {
                    s,
                    // C_{p^u} wr B_p^(s+1) is generated by one base and (s+1)·rank tops
                    witness_t: 1 + (s as u64 + 1) * rank,
                    certificate: Certificate::ClassDifference {
                        p,
                        class_s: class_of(s),
                        class_next: class_of(s + 1),
                    },
                })
                .collect()
        }
    };
    ChainReport {
        alternative: Alternative::StrictChain,
        per_prime,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbelianDescriptor as D;
    use Cardinal::{Finite, Inf};

    fn nice(p: u64) -> D {
        D::primary(p, 2, Finite(1)).direct_sum(&D::primary(p, 1, Inf))
    }

    #[test]
    fn coprime_cycles_generate() {
        let v = generates(&D::cyclic(4), &D::cyclic(9));
        assert!(v.generates);
        assert_eq!(v.case, CaseTag::FiniteCoprime);
        assert!(!generates(&D::cyclic(6), &D::cyclic(10)).generates);
        assert!(generates_finite(&4u32.into(), &9u32.into()));
        assert!(!generates_finite(&6u32.into(), &10u32.into()));
        assert!(generates_finite(&1u32.into(), &10u32.into()));
    }

    #[test]
    fn nice_example_is_blocked() {
        for p in [2, 3, 5] {
            let v = generates(&D::cyclic(p), &nice(p));
            assert!(!v.generates);
            assert_eq!(v.case, CaseTag::Blocked);
            assert_eq!(v.witnesses, vec![Witness { p, k: 2, layer_rank: 1 }]);
        }
    }

    #[test]
    fn theorem_cases() {
        let v = generates(&D::free(Finite(1)), &D::cyclic(2));
        assert!(v.generates);
        assert_eq!(v.case, CaseTag::NonFiniteExponent);
        let v = generates(&D::cyclic(3), &D::primary(3, 1, Inf));
        assert!(v.generates);
        assert_eq!(v.case, CaseTag::FiniteAllLayersInfinite);
        for i in [Finite(1), Finite(4), Inf] {
            let b = nice(2).direct_sum(&D::primary(3, 1, i));
            assert!(!generates(&D::cyclic(2), &b).generates);
        }
    }

    #[test]
    fn classify_routes() {
        assert_eq!(classify(&D::cyclic(4), &D::cyclic(6)).branch, Branch::FinitelyGenerated);
        assert_eq!(classify(&D::cyclic(4), &nice(2)).branch, Branch::PrimePower);
        assert_eq!(
            classify(&D::free(Finite(1)), &nice(2)).branch,
            Branch::NonFiniteExponent
        );
        let b = nice(2).direct_sum(&D::primary(3, 1, Inf));
        let c = classify(&D::cyclic(2), &b);
        assert_eq!(c.branch, Branch::CompositeExponent);
        assert_eq!(c.case, CaseTag::Blocked);
        assert!(c.explanation.contains("|B[4]/B[2]| = 2 (finite)"), "{}", c.explanation);
    }

    #[test]
    fn separating_parameter_examples() {
        assert_eq!(
            separating_parameters(&nice(2), 2),
            Ok(Separation::Shape(ChainShape::new(2, 1, vec![1]).unwrap()))
        );
        let b = D::primary(2, 3, Finite(2))
            .direct_sum(&D::primary(2, 2, Finite(3)))
            .direct_sum(&D::primary(2, 1, Inf));
        assert_eq!(
            separating_parameters(&b, 2),
            Ok(Separation::Shape(ChainShape::new(3, 2, vec![2, 3]).unwrap()))
        );
        let gap = D::primary(2, 3, Finite(2)).direct_sum(&D::primary(2, 1, Inf));
        assert_eq!(
            separating_parameters(&gap, 2),
            Ok(Separation::Shape(ChainShape::new(3, 2, vec![2, 0]).unwrap()))
        );
        assert_eq!(separating_parameters(&D::cyclic(4), 2), Ok(Separation::FiniteComponent));
        assert_eq!(
            separating_parameters(&D::primary(2, 1, Inf), 2),
            Err(Error::NoSeparation { p: 2 })
        );
    }

    #[test]
    fn chain_of_c2_wr_c2_powers() {
        let r = chain_analysis(&D::cyclic(2), &D::cyclic(2), 3);
        assert_eq!(r.alternative, Alternative::StrictChain);
        let classes: Vec<BigInt> = r
            .steps
            .iter()
            .map(|st| match &st.certificate {
                Certificate::ClassDifference { class_s, .. } => class_s.clone(),
                other => panic!("{other:?}"),
            })
            .collect();
        assert_eq!(classes, vec![2.into(), 3.into(), 4.into()]);
        assert_eq!(r.steps[0].witness_t, 3);
    }

    #[test]
    fn chain_with_infinite_component() {
        let r = chain_analysis(&D::cyclic(2), &nice(2), 2);
        assert_eq!(r.alternative, Alternative::StrictChain);
        assert_eq!(
            r.per_prime,
            vec![(2, Separation::Shape(ChainShape::new(2, 1, vec![1]).unwrap()))]
        );
        for st in &r.steps {
            assert_eq!(st.witness_t, (st.s as u64 + 1) + 2);
            match &st.certificate {
                Certificate::Gap { gap, nu, lambda, .. } => {
                    assert_eq!(*gap, BigInt::from(1));
                    assert_eq!(nu - lambda, *gap);
                }
                other => panic!("{other:?}"),
            }
        }
        let r = chain_analysis(&D::cyclic(2), &D::cyclic(3), 3);
        assert_eq!(r.alternative, Alternative::Collapses);
        assert!(r.steps.is_empty());
    }
}

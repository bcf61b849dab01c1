//! Closed-form nilpotency classes of wreath products of abelian p-groups,
//! together with the upper bounds and separation quantities built on them.
//!
//! All values are exact big integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::AbelianDescriptor;
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::primes::is_prime;

fn pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `(u-1)(p-1)p^(k-1)`, the contribution of the passive group's exponent.
fn passive_term(p: u64, u: u32, k: u32) -> BigInt {
    if k == 0 {
        return BigInt::zero();
    }
    BigInt::from(u - 1) * BigInt::from(p - 1) * pow(p, k - 1)
}

/// Parameters of `C_{p^u} wr (C_{p^k1} + C_{p^k2} + ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFormulaInput {
    pub p: u64,
    pub u: u32,
    /// Non-increasing; zero entries stand for trivial summands.
    pub ks: Vec<u32>,
}

impl ClassFormulaInput {
    pub fn new(p: u64, u: u32, ks: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        if u < 1 {
            return Err(Error::NonPositive { what: "u" });
        }
        if ks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition("ks must be non-increasing".into()));
        }
        Ok(ClassFormulaInput { p, u, ks })
    }

    /// Liebeck's class of the direct wreath product. A trivial active group
    /// leaves the abelian passive group, of class 1.
    pub fn class(&self) -> BigInt {
        let k1 = self.ks.first().copied().unwrap_or(0);
        if k1 == 0 {
            return BigInt::one();
        }
        let sum: BigInt = self.ks.iter().map(|&k| pow(self.p, k) - 1).sum();
        sum + passive_term(self.p, self.u, k1) + 1
    }
}

/// Nilpotency class of `C_{p^u} wr (sum of C_{p^ki})`.
pub fn liebeck_class(p: u64, u: u32, ks: &[u32]) -> Result<BigInt> {
    Ok(ClassFormulaInput::new(p, u, ks.to_vec())?.class())
}

/// The common prime of a pair of p-group descriptors of finite exponent.
fn common_prime(a: &AbelianDescriptor, b: &AbelianDescriptor) -> Result<u64> {
    if !a.has_finite_exponent() || !b.has_finite_exponent() {
        return Err(Error::InfiniteExponent);
    }
    let mut primes = a.primes();
    primes.extend(b.primes());
    match primes.len() {
        1 => Ok(*primes.first().unwrap()),
        _ => Err(Error::NotPGroup),
    }
}

/// Upper bound for the largest class of a `t`-generated group in
/// `var(A_p Wr B_p)`.
///
/// The `k_i` run over the summand exponents of `B_p` in descending order;
/// past the last summand they are 0.
pub fn lambda_bound(a_p: &AbelianDescriptor, b_p: &AbelianDescriptor, t: u32) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::NonPositive { what: "t" });
    }
    let p = common_prime(a_p, b_p)?;
    let u = a_p.k_of(p)?;
    let k = b_p.k_of(p)?;
    if u == 0 {
        return Err(Error::Precondition("passive group is trivial".into()));
    }
    if k == 0 {
        return Err(Error::Precondition("active group is trivial".into()));
    }
    let sum: BigInt = b_p
        .exponent_sequence(p)
        .take(t as usize)
        .map(|ki| pow(p, ki) - 1)
        .sum();
    Ok(sum + passive_term(p, u, k) + 1)
}

/// `nu(p, t)`: class of `C_{p^u} wr (t-1 copies of C_{p^k})`, as the formula
/// reads (for `t = 1` the empty sum leaves the passive term).
pub fn nu(p: u64, u: u32, k: u32, t: u32) -> Result<BigInt> {
    check_prime(p)?;
    if u < 1 || k < 1 || t < 1 {
        return Err(Error::NonPositive { what: "u, k and t" });
    }
    Ok(BigInt::from(t - 1) * (pow(p, k) - 1) + passive_term(p, u, k) + 1)
}

/// Least integer `t0 > (p^(k-1) - 1)/(p^k - p^(k-1)) + mu + 1`.
pub fn min_t0(p: u64, k: u32, mu: Cardinal) -> Result<u64> {
    check_prime(p)?;
    if k < 1 {
        return Err(Error::NonPositive { what: "k" });
    }
    let mu = mu
        .finite()
        .ok_or_else(|| Error::Precondition("top layer must be finite".into()))?;
    let t0: BigInt = t0_threshold(p, k, mu).floor().to_integer() + 1;
    t0.to_u64()
        .ok_or_else(|| Error::Precondition("t0 out of range".into()))
}

/// The rational threshold `(p^(k-1) - 1)/(p^k - p^(k-1)) + mu + 1`.
pub fn t0_threshold(p: u64, k: u32, mu: u64) -> BigRational {
    BigRational::new(pow(p, k - 1) - 1, pow(p, k) - pow(p, k - 1))
        + BigRational::from_integer(BigInt::from(mu) + 1)
}

/// Layer shape of an infinite `B_p` with finite top layer: `l[i]` copies of
/// `C_{p^(k-i)}` for `i < d`, followed by infinitely many `C_{p^(k-d)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainShape {
    pub k: u32,
    pub d: u32,
    pub l: Vec<u64>,
}

impl ChainShape {
    pub fn new(k: u32, d: u32, l: Vec<u64>) -> Result<Self> {
        if d < 1 || d > k {
            return Err(Error::Precondition(format!("need 1 <= d <= k, got d = {d}, k = {k}")));
        }
        if l.len() != d as usize {
            return Err(Error::Precondition(format!("l has {} entries, expected d = {d}", l.len())));
        }
        Ok(ChainShape { k, d, l })
    }

    pub fn total(&self) -> BigInt {
        self.l.iter().map(|&x| BigInt::from(x)).sum()
    }

    fn weighted(&self, p: u64) -> BigInt {
        self.l
            .iter()
            .enumerate()
            .map(|(i, &li)| BigInt::from(li) * (pow(p, self.k - i as u32) - 1))
            .sum()
    }

    fn floor_term(&self, p: u64) -> BigInt {
        pow(p, self.k - self.d) - 1
    }
}

/// `nu(p, r, t)`: class of the `t`-generated group built from `r` copies of
/// the finite layers plus `t - r*sum(l) - 1` cycles of order `p^(k-d)`.
pub fn nu_general(p: u64, u: u32, shape: &ChainShape, r: u64, t: u64) -> Result<BigInt> {
    check_prime(p)?;
    if u < 1 {
        return Err(Error::NonPositive { what: "u" });
    }
    let rl = BigInt::from(r) * shape.total();
    let t = BigInt::from(t);
    if t <= &rl + 1 {
        return Err(Error::Precondition(format!("t must exceed r*sum(l) + 1 = {}", rl + 1)));
    }
    Ok(BigInt::from(r) * shape.weighted(p)
        + (t - rl - 1) * shape.floor_term(p)
        + passive_term(p, u, shape.k)
        + 1)
}

/// Upper bound for `lambda(A_p, B_{s,p}, t)` where `B_{s,p}` is `s` copies of
/// a `B_p` of the given shape.
pub fn lambda_general_bound(p: u64, u: u32, shape: &ChainShape, s: u64, t: u64) -> Result<BigInt> {
    check_prime(p)?;
    if u < 1 {
        return Err(Error::NonPositive { what: "u" });
    }
    let sl = BigInt::from(s) * shape.total();
    let t = BigInt::from(t);
    if t <= sl {
        return Err(Error::Precondition(format!("t must exceed s*sum(l) = {sl}")));
    }
    Ok(BigInt::from(s) * shape.weighted(p)
        + (t - sl) * shape.floor_term(p)
        + passive_term(p, u, shape.k)
        + 1)
}

/// `nu(p, s+1, t) - lambda_bound(s, t)`, independent of `s`, `t` and `u`.
pub fn separation_gap(p: u64, shape: &ChainShape) -> Result<BigInt> {
    check_prime(p)?;
    if shape.l.first().is_none_or(|&l0| l0 == 0) {
        return Err(Error::Precondition("l[0] must be at least 1".into()));
    }
    let floor = pow(p, shape.k - shape.d);
    let sum: BigInt = shape
        .l
        .iter()
        .enumerate()
        .map(|(i, &li)| BigInt::from(li) * (pow(p, shape.k - i as u32) - &floor))
        .sum();
    Ok(sum - floor + 1)
}

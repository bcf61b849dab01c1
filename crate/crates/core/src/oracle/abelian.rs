use crate::abelian::AbelianDescriptor;
use crate::error::{Error, Result};

use super::FiniteGroup;

/// `C_{n_1} x ... x C_{n_r}` with elements encoded as mixed-radix indices;
/// component 0 is the least significant digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    order: u64,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if let Some(&n) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::Precondition(format!("cyclic factor of order {n}")));
        }
        let order = orders
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n as u64))
            .filter(|&n| n <= u32::MAX as u64)
            .ok_or_else(|| Error::Precondition("group too large".into()))?;
        Ok(FiniteAbelianGroup { orders, order })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            orders: Vec::new(),
            order: 1,
        }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 1 {
            Ok(Self::trivial())
        } else {
            Self::new(vec![n])
        }
    }

    /// The finite group described by `d`.
    pub fn from_descriptor(d: &AbelianDescriptor) -> Result<Self> {
        let orders = d
            .cyclic_orders()
            .ok_or_else(|| Error::Precondition(format!("{d} is not a finite group")))?;
        let orders = orders
            .into_iter()
            .map(|n| u32::try_from(n).map_err(|_| Error::Precondition("cyclic factor too large".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Least common multiple of the cyclic orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.orders.iter().fold(1u64, |acc, &n| acc.lcm(&(n as u64)))
    }

    pub fn index(&self, residues: &[u32]) -> u32 {
        assert_eq!(residues.len(), self.orders.len());
        let mut idx = 0u64;
        for (&r, &n) in residues.iter().zip(&self.orders).rev() {
            idx = idx * n as u64 + (r % n) as u64;
        }
        idx as u32
    }

    pub fn residues(&self, mut idx: u32) -> Vec<u32> {
        self.orders
            .iter()
            .map(|&n| {
                let r = idx % n;
                idx /= n;
                r
            })
            .collect()
    }

    pub fn add(&self, mut x: u32, mut y: u32) -> u32 {
        let (mut out, mut place) = (0u32, 1u32);
        for &n in &self.orders {
            let r = (x % n + y % n) % n;
            out += r * place;
            place = place.wrapping_mul(n);
            x /= n;
            y /= n;
        }
        out
    }

    pub fn neg(&self, mut x: u32) -> u32 {
        let (mut out, mut place) = (0u32, 1u32);
        for &n in &self.orders {
            let r = (n - x % n) % n;
            out += r * place;
            place = place.wrapping_mul(n);
            x /= n;
        }
        out
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    /// Index of the i-th standard generator.
    pub fn basis(&self, i: usize) -> u32 {
        self.orders[..i].iter().product()
    }
}

impl FiniteGroup for FiniteAbelianGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.add(*a, *b)
    }

    fn inv(&self, a: &u32) -> u32 {
        self.neg(*a)
    }

    fn generators(&self) -> Vec<u32> {
        (0..self.orders.len()).map(|i| self.basis(i)).collect()
    }
}

use std::collections::HashMap;

use crate::error::Result;

use super::{check_budget, generated_subgroup, Budget, FiniteGroup};

/// A finite group stored as a multiplication table over element indices.
#[derive(Clone, Debug)]
pub struct TableGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
}

impl TableGroup {
    /// Tabulates `group`; also returns the elements in index order.
    pub fn from_group<G: FiniteGroup>(group: &G, budget: &Budget) -> Result<(Self, Vec<G::Elem>)> {
        let elements = generated_subgroup(group, &group.generators(), budget.elements as usize)?
            .into_elements();
        let n = elements.len();
        check_budget("multiplication table entries", (n as u128) * (n as u128), budget.elements)?;
        let index: HashMap<&G::Elem, u32> =
            elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mut mul = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                mul.push(index[&group.mul(x, y)]);
            }
        }
        let inv = elements.iter().map(|x| index[&group.inv(x)]).collect();
        let gens = group.generators().iter().map(|g| index[g]).collect();
        Ok((TableGroup { n, mul, inv, gens }, elements))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Subgroup generated by `gens`, as a bitset over element indices.
    pub fn closure_bits(&self, gens: &[u32]) -> Vec<u64> {
        let mut bits = vec![0u64; self.n.div_ceil(64)];
        bits[0] |= 1;
        let mut stack = vec![0u32];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul[x as usize * self.n + g as usize];
                let (w, b) = (y as usize / 64, y % 64);
                if bits[w] & (1 << b) == 0 {
                    bits[w] |= 1 << b;
                    stack.push(y);
                }
            }
        }
        bits
    }
}

impl FiniteGroup for TableGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul[*a as usize * self.n + *b as usize]
    }

    fn inv(&self, a: &u32) -> u32 {
        self.inv[*a as usize]
    }

    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }
}

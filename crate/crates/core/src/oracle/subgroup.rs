use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

use super::FiniteGroup;

/// Elements of a subgroup in breadth-first discovery order.
#[derive(Clone, Debug)]
pub struct Subgroup<E> {
    elements: Vec<E>,
    members: HashSet<E>,
}

impl<E: Clone + Eq + std::hash::Hash> Subgroup<E> {
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.members.contains(e)
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }
}

/// Closure of `gens` under right multiplication. In a finite group this is
/// the generated subgroup.
pub fn generated_subgroup<G: FiniteGroup>(
    group: &G,
    gens: &[G::Elem],
    cap: usize,
) -> Result<Subgroup<G::Elem>> {
    if cap == 0 {
        return Err(Error::NonPositive { what: "cap" });
    }
    let e = group.identity();
    let gens: Vec<&G::Elem> = gens.iter().filter(|g| **g != e).collect();
    let mut members = HashSet::from([e.clone()]);
    let mut elements = vec![e.clone()];
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = group.mul(&x, g);
            if !members.contains(&y) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded { cap });
                }
                members.insert(y.clone());
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(Subgroup { elements, members })
}

/// A normal closure together with a generating set for it.
pub type NormalClosure<E> = (Subgroup<E>, Vec<E>);

/// Normal closure of `seeds` in the group generated by `ambient`. Returns the
/// subgroup and a generating set for it.
pub fn normal_closure<G: FiniteGroup>(
    group: &G,
    seeds: &[G::Elem],
    ambient: &[G::Elem],
    cap: usize,
) -> Result<NormalClosure<G::Elem>> {
    let mut gens: Vec<G::Elem> = Vec::new();
    for s in seeds {
        if !group.is_identity(s) && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut sub = generated_subgroup(group, &gens, cap)?;
    let mut i = 0;
    while i < gens.len() {
        for g in ambient {
            let c = group.conjugate(&gens[i], g);
            if !sub.contains(&c) {
                gens.push(c);
                sub = generated_subgroup(group, &gens, cap)?;
            }
        }
        i += 1;
    }
    Ok((sub, gens))
}

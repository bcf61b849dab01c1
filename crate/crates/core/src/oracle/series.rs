use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{check_budget, generated_subgroup, normal_closure, Budget, FiniteGroup, TableGroup};

/// Orders `|γ_1|, |γ_2|, ...` of the lower central series down to the trivial
/// group; `class` is the least `c` with `γ_(c+1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralSeries {
    pub class: usize,
    pub orders: Vec<usize>,
}

const MAX_SERIES_LENGTH: usize = 4096;

/// Lower central series of the subgroup generated by `gens`.
///
/// `γ_(i+1)` is the normal closure of `[x, g]` over generators `x` of `γ_i`
/// and `g` of the group.
pub fn nilpotency_class<G: FiniteGroup>(
    group: &G,
    gens: &[G::Elem],
    budget: &Budget,
) -> Result<LowerCentralSeries> {
    let cap = budget.elements as usize;
    let gens: Vec<G::Elem> = gens.iter().filter(|g| !group.is_identity(g)).cloned().collect();
    let whole = generated_subgroup(group, &gens, cap)?;
    let mut orders = vec![whole.order()];
    let mut current = gens.clone();
    while *orders.last().unwrap() > 1 {
        if orders.len() > MAX_SERIES_LENGTH {
            return Err(Error::NotNilpotent(MAX_SERIES_LENGTH));
        }
        let mut comms = Vec::new();
        for x in &current {
            for g in &gens {
                let c = group.commutator(x, g);
                if !group.is_identity(&c) && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let (next, next_gens) = normal_closure(group, &comms, &gens, cap)?;
        if next.order() == *orders.last().unwrap() {
            return Err(Error::NotNilpotent(orders.len()));
        }
        orders.push(next.order());
        current = next_gens;
    }
    Ok(LowerCentralSeries {
        class: orders.len() - 1,
        orders,
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Largest class of a subgroup generated by `t` elements.
///
/// Enumerates all `t`-element subsets (fewer generators never give a larger
/// subgroup), caching classes by generated subgroup.
pub fn max_class_t_generated<G: FiniteGroup>(group: &G, t: usize, budget: &Budget) -> Result<usize> {
    if t == 0 {
        return Err(Error::NonPositive { what: "t" });
    }
    let (table, _) = TableGroup::from_group(group, budget)?;
    let n = table.order();
    let t = t.min(n);
    check_budget("generator subsets", binomial(n as u64, t as u64), budget.tuples)?;

    let mut cache: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut best = 0;
    let mut combo: Vec<u32> = (0..t as u32).collect();
    loop {
        let bits = table.closure_bits(&combo);
        let class = match cache.get(&bits) {
            Some(&c) => c,
            None => {
                let c = nilpotency_class(&table, &combo, budget)?.class;
                cache.insert(bits, c);
                c
            }
        };
        best = best.max(class);

        // next combination in lexicographic order
        let mut i = t;
        while i > 0 && combo[i - 1] as usize == n - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        combo[i - 1] += 1;
        for j in i..t {
            combo[j] = combo[j - 1] + 1;
        }
    }
    Ok(best)
}

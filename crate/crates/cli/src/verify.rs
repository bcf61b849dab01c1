//! Oracle-versus-formula suites behind `wreathvar verify`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};
use wreathvar_core::abelian::{abelian_groups_of_order, partitions};
use wreathvar_core::oracle::{
    holds_identity, max_class_t_generated, nilpotency_class, Budget, FiniteAbelianGroup,
    FiniteGroup, IdentityMode, Word, WreathProduct,
};
use wreathvar_core::primes::is_prime;
use wreathvar_core::{generates, lambda_bound, liebeck_class, AbelianDescriptor, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Liebeck,
    Lambda,
    Identities,
    Houghton,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Liebeck => "liebeck",
            Suite::Lambda => "lambda",
            Suite::Identities => "identities",
            Suite::Houghton => "houghton",
        }
    }

    /// Default size limit: largest group order for the oracle suites.
    pub fn default_budget(self) -> u64 {
        match self {
            Suite::Liebeck => 4096,
            Suite::Lambda => 1 << 20,
            Suite::Identities => 256,
            Suite::Houghton => 30,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub instance: String,
    pub formula: String,
    pub oracle: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({"instance": r.instance, "formula": r.formula, "oracle": r.oracle, "match": r.ok}))
            .collect();
        json!({"suite": self.suite.name(), "passed": self.passed(), "rows": rows})
    }

    pub fn to_table(&self) -> String {
        let w = self.rows.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
        let mut out = format!("{:<w$}  {:>10}  {:>10}  match\n", "instance", "formula", "oracle");
        for r in &self.rows {
            out += &format!(
                "{:<w$}  {:>10}  {:>10}  {}\n",
                r.instance,
                r.formula,
                r.oracle,
                if r.ok { "yes" } else { "NO" }
            );
        }
        let bad = self.rows.iter().filter(|r| !r.ok).count();
        out += &format!("{}: {} instances, {} mismatches\n", self.suite.name(), self.rows.len(), bad);
        out
    }
}

pub fn run(suite: Suite, budget: u64) -> Result<SuiteReport> {
    let rows = match suite {
        Suite::Liebeck => liebeck_rows(budget)?,
        Suite::Lambda => lambda_rows(budget)?,
        Suite::Identities => identity_rows(budget)?,
        Suite::Houghton => houghton_rows(budget),
    };
    Ok(SuiteReport { suite, rows })
}

fn wreath(a: &[u32], b: &[u32], budget: &Budget) -> Result<WreathProduct> {
    WreathProduct::new(FiniteAbelianGroup::new(a.to_vec())?, FiniteAbelianGroup::new(b.to_vec())?, budget)
}

/// `(p, u, ks)` for every `C_{p^u} wr (sum of C_{p^ki})` of order at most `max_order`.
pub fn liebeck_instances(max_order: u64) -> Vec<(u64, u32, Vec<u32>)> {
    let fits = |p: u64, e: u32| p.checked_pow(e).is_some_and(|n| n <= max_order);
    let mut out = Vec::new();
    let mut p = 2u64;
    // smallest instance for p is C_p wr C_p of order p^(p+1)
    while fits(p, p as u32 + 1) {
        let mut e = 1u32;
        while let Some(nb) = p.checked_pow(e).and_then(|nb| u32::try_from(nb).ok()) {
            if !fits(p, nb + e) {
                break;
            }
            let mut u = 1u32;
            while nb.checked_mul(u).is_some_and(|x| fits(p, x + e)) {
                for ks in partitions(e) {
                    out.push((p, u, ks));
                }
                u += 1;
            }
            e += 1;
        }
        p += 1;
        while !is_prime(p) {
            p += 1;
        }
    }
    out
}

fn liebeck_rows(max_order: u64) -> Result<Vec<Row>> {
    let budget = Budget {
        elements: max_order.max(1 << 16),
        ..Budget::default()
    };
    liebeck_instances(max_order)
        .into_iter()
        .map(|(p, u, ks)| {
            let a = [(p as u32).pow(u)];
            let b: Vec<u32> = ks.iter().map(|&k| (p as u32).pow(k)).collect();
            let g = wreath(&a, &b, &budget)?;
            let oracle = nilpotency_class(&g, &g.generators(), &budget)?.class;
            let formula = liebeck_class(p, u, &ks)?;
            Ok(Row {
                instance: format!("C{} wr {}", a[0], join_cycles(&b)),
                formula: formula.to_string(),
                oracle: oracle.to_string(),
                ok: formula == BigInt::from(oracle),
            })
        })
        .collect()
}

fn join_cycles(orders: &[u32]) -> String {
    let parts: Vec<String> = orders.iter().map(|n| format!("C{n}")).collect();
    format!("({})", parts.join(" + "))
}

fn lambda_rows(tuple_budget: u64) -> Result<Vec<Row>> {
    let budget = Budget {
        tuples: tuple_budget,
        ..Budget::default()
    };
    let cases: [(u32, &[u32], u32); 4] = [(2, &[2], 3), (4, &[2], 3), (2, &[4], 2), (2, &[2, 2], 3)];
    let mut rows = Vec::new();
    for (a, b, t_max) in cases {
        let g = wreath(&[a], b, &budget)?;
        let ad = AbelianDescriptor::cyclic(a as u64);
        let bd = b
            .iter()
            .fold(AbelianDescriptor::trivial(), |acc, &n| acc.direct_sum(&AbelianDescriptor::cyclic(n as u64)));
        for t in 1..=t_max {
            let oracle = max_class_t_generated(&g, t as usize, &budget)?;
            let bound = lambda_bound(&ad, &bd, t)?;
            rows.push(Row {
                instance: format!("C{a} wr {}, t = {t}", join_cycles(b)),
                formula: format!("<= {bound}"),
                oracle: oracle.to_string(),
                ok: BigInt::from(oracle) <= bound,
            });
        }
    }
    Ok(rows)
}

/// Non-trivial finite abelian `A`, `B` (up to isomorphism) with `|A wr B| <= max_order`.
pub fn small_wreath_pairs(max_order: u64) -> Vec<(FiniteAbelianGroup, FiniteAbelianGroup)> {
    let mut out = Vec::new();
    for nb in 2..=max_order {
        for na in 2..=max_order {
            let order = (na as u128).checked_pow(nb as u32).map(|x| x * nb as u128);
            if order.is_none_or(|o| o > max_order as u128) {
                break;
            }
            for bd in abelian_groups_of_order(nb) {
                for ad in abelian_groups_of_order(na) {
                    out.push((
                        FiniteAbelianGroup::from_descriptor(&ad).expect("finite"),
                        FiniteAbelianGroup::from_descriptor(&bd).expect("finite"),
                    ));
                }
            }
        }
        if 2u128.pow(nb as u32) * (nb as u128) > max_order as u128 {
            break;
        }
    }
    out
}

fn identity_rows(max_order: u64) -> Result<Vec<Row>> {
    let budget = Budget::default();
    let mut rows = Vec::new();
    for (a, b) in small_wreath_pairs(max_order) {
        let name = format!(
            "{} wr {}",
            join_cycles(a.orders()),
            join_cycles(b.orders())
        );
        let mn = a.exponent() * b.exponent();
        let g = WreathProduct::new(a, b, &budget)?;
        let laws = [
            ("[[x1,x2],[x3,x4]]".to_string(), Word::metabelian()),
            (format!("x1^{mn}"), Word::var(1).pow(mn as i64)),
        ];
        for (label, law) in laws {
            let outcome = holds_identity(&g, &law, IdentityMode::Exhaustive, &budget)?;
            rows.push(Row {
                instance: format!("{name}: {label}"),
                formula: "holds".into(),
                oracle: if outcome.holds() { "holds" } else { "fails" }.into(),
                ok: outcome.holds(),
            });
        }
    }
    Ok(rows)
}

fn houghton_rows(max: u64) -> Vec<Row> {
    let mut rows = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            let coprime = m.gcd(&n) == 1;
            let v = generates(&AbelianDescriptor::cyclic(m), &AbelianDescriptor::cyclic(n));
            rows.push(Row {
                instance: format!("C{m} wr C{n}"),
                formula: coprime.to_string(),
                oracle: v.generates.to_string(),
                ok: coprime == v.generates,
            });
        }
    }
    rows
}

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::{check_budget, generated_subgroup, Budget, FiniteGroup};

/// A group word in variables `x_1, x_2, ...`, kept as a term so that nested
/// commutators stay visible to the identity checker.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    Var(usize),
    Pow(Box<Word>, i64),
    Product(Vec<Word>),
    /// `[a, b] = a^-1 b^-1 a b`.
    Commutator(Box<Word>, Box<Word>),
}

impl Word {
    pub fn var(i: usize) -> Word {
        assert!(i >= 1, "variables are numbered from 1");
        Word::Var(i)
    }

    pub fn pow(self, e: i64) -> Word {
        Word::Pow(Box::new(self), e)
    }

    pub fn inv(self) -> Word {
        self.pow(-1)
    }

    pub fn product(words: Vec<Word>) -> Word {
        Word::Product(words)
    }

    pub fn comm(a: Word, b: Word) -> Word {
        Word::Commutator(Box::new(a), Box::new(b))
    }

    /// `[[x1, x2], [x3, x4]]`.
    pub fn metabelian() -> Word {
        Word::comm(
            Word::comm(Word::var(1), Word::var(2)),
            Word::comm(Word::var(3), Word::var(4)),
        )
    }

    /// The word spelled as freely reduced `(variable, exponent)` syllables.
    pub fn letters(&self) -> Vec<(usize, i64)> {
        let mut raw = Vec::new();
        self.spell(&mut raw);
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (v, e) in raw {
            match out.last_mut() {
                Some((w, f)) if *w == v => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ if e != 0 => out.push((v, e)),
                _ => {}
            }
        }
        out
    }

    fn spell(&self, out: &mut Vec<(usize, i64)>) {
        match self {
            Word::Var(i) => out.push((*i, 1)),
            Word::Pow(w, e) => {
                let mut inner = Vec::new();
                w.spell(&mut inner);
                if *e < 0 {
                    inner = inner.into_iter().rev().map(|(v, x)| (v, -x)).collect();
                }
                for _ in 0..e.unsigned_abs() {
                    out.extend_from_slice(&inner);
                }
            }
            Word::Product(ws) => ws.iter().for_each(|w| w.spell(out)),
            Word::Commutator(a, b) => {
                Word::Pow(a.clone(), -1).spell(out);
                Word::Pow(b.clone(), -1).spell(out);
                a.spell(out);
                b.spell(out);
            }
        }
    }

    /// The word with the given syllables.
    pub fn from_letters(letters: &[(usize, i64)]) -> Word {
        Word::Product(letters.iter().map(|&(v, e)| Word::var(v).pow(e)).collect())
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        let mut vars = BTreeSet::new();
        self.collect_vars(&mut vars);
        vars
    }

    fn collect_vars(&self, vars: &mut BTreeSet<usize>) {
        match self {
            Word::Var(i) => {
                vars.insert(*i);
            }
            Word::Pow(w, _) => w.collect_vars(vars),
            Word::Product(ws) => ws.iter().for_each(|w| w.collect_vars(vars)),
            Word::Commutator(a, b) => {
                a.collect_vars(vars);
                b.collect_vars(vars);
            }
        }
    }

    /// Largest variable index, 0 for the empty word.
    pub fn arity(&self) -> usize {
        self.variables().last().copied().unwrap_or(0)
    }
}

/// Evaluates `w` with `x_i = assignment[i - 1]`.
pub fn eval_word<G: FiniteGroup>(w: &Word, group: &G, assignment: &[G::Elem]) -> Result<G::Elem> {
    Ok(match w {
        Word::Var(i) => assignment.get(i - 1).cloned().ok_or(Error::Unassigned(*i))?,
        Word::Pow(w, e) => group.pow(&eval_word(w, group, assignment)?, *e),
        Word::Product(ws) => {
            let mut acc = group.identity();
            for w in ws {
                acc = group.mul(&acc, &eval_word(w, group, assignment)?);
            }
            acc
        }
        Word::Commutator(a, b) => group.commutator(
            &eval_word(a, group, assignment)?,
            &eval_word(b, group, assignment)?,
        ),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityMode {
    Exhaustive,
    /// Random assignments from a seeded generator; can only refute.
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityOutcome<E> {
    Holds,
    Counterexample(Vec<E>),
}

impl<E> IdentityOutcome<E> {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityOutcome::Holds)
    }
}

/// Values taken by a subword, each with one partial assignment producing it.
type ValueTable<E> = Vec<(E, BTreeMap<usize, E>)>;

struct ValueSets<'a, G: FiniteGroup> {
    group: &'a G,
    elements: &'a [G::Elem],
    budget: &'a Budget,
}

impl<G: FiniteGroup> ValueSets<'_, G> {
    fn insert(
        seen: &mut HashMap<G::Elem, ()>,
        out: &mut ValueTable<G::Elem>,
        v: G::Elem,
        partial: impl FnOnce() -> BTreeMap<usize, G::Elem>,
    ) {
        if seen.insert(v.clone(), ()).is_none() {
            out.push((v, partial()));
        }
    }

    /// Subwords on disjoint variables take independent values, so the value
    /// set of a product or commutator is the image of the product of the
    /// value sets. Shared variables fall back to enumerating assignments.
    fn values(&self, w: &Word) -> Result<ValueTable<G::Elem>> {
        match w {
            Word::Var(i) => Ok(self
                .elements
                .iter()
                .map(|e| (e.clone(), BTreeMap::from([(*i, e.clone())])))
                .collect()),
            Word::Pow(inner, e) => {
                let mut seen = HashMap::new();
                let mut out = Vec::new();
                for (v, partial) in self.values(inner)? {
                    Self::insert(&mut seen, &mut out, self.group.pow(&v, *e), || partial);
                }
                Ok(out)
            }
            Word::Product(ws) if disjoint(ws.iter()) => {
                let mut acc: ValueTable<G::Elem> = vec![(self.group.identity(), BTreeMap::new())];
                for w in ws {
                    acc = self.combine(&acc, &self.values(w)?, |a, b| self.group.mul(a, b))?;
                }
                Ok(acc)
            }
            Word::Commutator(a, b) if disjoint([a.as_ref(), b.as_ref()].into_iter()) => {
                let (va, vb) = (self.values(a)?, self.values(b)?);
                self.combine(&va, &vb, |x, y| self.group.commutator(x, y))
            }
            _ => self.enumerate(w),
        }
    }

    fn combine(
        &self,
        left: &ValueTable<G::Elem>,
        right: &ValueTable<G::Elem>,
        op: impl Fn(&G::Elem, &G::Elem) -> G::Elem,
    ) -> Result<ValueTable<G::Elem>> {
        check_budget(
            "value pairs",
            left.len() as u128 * right.len() as u128,
            self.budget.tuples,
        )?;
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (x, px) in left {
            for (y, py) in right {
                Self::insert(&mut seen, &mut out, op(x, y), || {
                    let mut p = px.clone();
                    p.extend(py.iter().map(|(k, v)| (*k, v.clone())));
                    p
                });
            }
        }
        Ok(out)
    }

    fn enumerate(&self, w: &Word) -> Result<ValueTable<G::Elem>> {
        let vars: Vec<usize> = w.variables().into_iter().collect();
        let n = self.elements.len();
        check_budget(
            "assignments",
            (n as u128).saturating_pow(vars.len() as u32),
            self.budget.tuples,
        )?;
        let mut assignment = vec![self.group.identity(); w.arity()];
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for_each_tuple(n, vars.len(), |idx| {
            for (&v, &i) in vars.iter().zip(idx) {
                assignment[v - 1] = self.elements[i].clone();
            }
            let value = eval_word(w, self.group, &assignment)?;
            Self::insert(&mut seen, &mut out, value, || {
                vars.iter().map(|&v| (v, assignment[v - 1].clone())).collect()
            });
            Ok(false)
        })?;
        Ok(out)
    }
}

fn disjoint<'a>(words: impl Iterator<Item = &'a Word>) -> bool {
    let mut seen = BTreeSet::new();
    for w in words {
        for v in w.variables() {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    true
}

/// Visits all `len`-tuples over `0..n` in lexicographic order until `f`
/// returns `true`.
fn for_each_tuple(n: usize, len: usize, mut f: impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    if n == 0 {
        return Ok(false);
    }
    let mut idx = vec![0usize; len];
    loop {
        if f(&idx)? {
            return Ok(true);
        }
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(false);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < n {
                break;
            }
            idx[i] = 0;
        }
    }
}

fn all_elements<G: FiniteGroup>(group: &G, budget: &Budget) -> Result<Vec<G::Elem>> {
    Ok(generated_subgroup(group, &group.generators(), budget.elements as usize)?.into_elements())
}

/// Checks the law `w = 1` in `group`.
pub fn holds_identity<G: FiniteGroup>(
    group: &G,
    w: &Word,
    mode: IdentityMode,
    budget: &Budget,
) -> Result<IdentityOutcome<G::Elem>> {
    let elements = all_elements(group, budget)?;
    let arity = w.arity();
    match mode {
        IdentityMode::Exhaustive => {
            let sets = ValueSets {
                group,
                elements: &elements,
                budget,
            };
            for (v, partial) in sets.values(w)? {
                if !group.is_identity(&v) {
                    let assignment = (1..=arity)
                        .map(|i| partial.get(&i).cloned().unwrap_or_else(|| group.identity()))
                        .collect();
                    return Ok(IdentityOutcome::Counterexample(assignment));
                }
            }
            Ok(IdentityOutcome::Holds)
        }
        IdentityMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let assignment: Vec<G::Elem> = (0..arity)
                    .map(|_| elements[rng.random_range(0..elements.len())].clone())
                    .collect();
                if !group.is_identity(&eval_word(w, group, &assignment)?) {
                    return Ok(IdentityOutcome::Counterexample(assignment));
                }
            }
            Ok(IdentityOutcome::Holds)
        }
    }
}

/// Finds one assignment at which every word of `words` is non-trivial.
pub fn discriminate<G: FiniteGroup>(
    group: &G,
    words: &[Word],
    budget: &Budget,
) -> Result<Option<Vec<G::Elem>>> {
    let elements = all_elements(group, budget)?;
    let d = words.iter().map(Word::arity).max().unwrap_or(0);
    check_budget(
        "assignments",
        (elements.len() as u128).saturating_pow(d as u32),
        budget.tuples,
    )?;
    let mut found = None;
    let mut assignment = vec![group.identity(); d];
    for_each_tuple(elements.len(), d, |idx| {
        for (slot, &i) in assignment.iter_mut().zip(idx) {
            *slot = elements[i].clone();
        }
        for w in words {
            if group.is_identity(&eval_word(w, group, &assignment)?) {
                return Ok(false);
            }
        }
        found = Some(assignment.clone());
        Ok(true)
    })?;
    Ok(found)
}

use crate::error::{Error, Result};

use super::{check_budget, Budget, FiniteAbelianGroup, FiniteGroup};

const TABLE_LIMIT: u64 = 1024;

/// Addition in a finite abelian group, tabulated when the group is small.
#[derive(Clone, Debug)]
struct Arith {
    group: FiniteAbelianGroup,
    n: u32,
    add: Option<Vec<u32>>,
    neg: Option<Vec<u32>>,
}

impl Arith {
    fn new(group: FiniteAbelianGroup) -> Self {
        let n = group.order() as u32;
        let (add, neg) = if group.order() <= TABLE_LIMIT {
            let add = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| group.add(x, y))
                .collect();
            let neg = (0..n).map(|x| group.neg(x)).collect();
            (Some(add), Some(neg))
        } else {
            (None, None)
        };
        Arith { group, n, add, neg }
    }

    #[inline]
    fn add(&self, x: u32, y: u32) -> u32 {
        match &self.add {
            Some(t) => t[(x * self.n + y) as usize],
            None => self.group.add(x, y),
        }
    }

    #[inline]
    fn neg(&self, x: u32) -> u32 {
        match &self.neg {
            Some(t) => t[x as usize],
            None => self.group.neg(x),
        }
    }
}

/// An element `(b, f)` of `A wr B`: `top` indexes `b` in `B`, `base[g]` is
/// the index of `f(g)` in `A` for each element `g` of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub top: u32,
    pub base: Box<[u32]>,
}

/// The (direct = cartesian, since `B` is finite) wreath product `A wr B`,
/// with `B` acting on the base group by translation.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    a: Arith,
    b: Arith,
}

impl WreathProduct {
    /// Fails when `|A|^|B| * |B|` exceeds `budget.elements`.
    pub fn new(a: FiniteAbelianGroup, b: FiniteAbelianGroup, budget: &Budget) -> Result<Self> {
        let order = Self::order_of(&a, &b).unwrap_or(u128::MAX);
        check_budget("wreath product order", order, budget.elements)?;
        Ok(WreathProduct {
            a: Arith::new(a),
            b: Arith::new(b),
        })
    }

    /// `|A|^|B| * |B|`, or `None` on overflow.
    pub fn order_of(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> Option<u128> {
        let nb = u32::try_from(b.order()).ok()?;
        (a.order() as u128).checked_pow(nb)?.checked_mul(b.order() as u128)
    }

    pub fn order(&self) -> u128 {
        Self::order_of(&self.a.group, &self.b.group).expect("checked at construction")
    }

    pub fn passive(&self) -> &FiniteAbelianGroup {
        &self.a.group
    }

    pub fn active(&self) -> &FiniteAbelianGroup {
        &self.b.group
    }

    pub fn element(&self, top: u32, base: Vec<u32>) -> Result<WreathElement> {
        if top >= self.b.n || base.len() != self.b.n as usize || base.iter().any(|&x| x >= self.a.n) {
            return Err(Error::Precondition("element out of range".into()));
        }
        Ok(WreathElement {
            top,
            base: base.into_boxed_slice(),
        })
    }

    /// `(b, 0)`.
    pub fn top_element(&self, b: u32) -> WreathElement {
        WreathElement {
            top: b,
            base: vec![0; self.b.n as usize].into_boxed_slice(),
        }
    }

    /// `(0, f)` with `f` equal to `a` at `at` and zero elsewhere.
    pub fn base_element(&self, a: u32, at: u32) -> WreathElement {
        let mut base = vec![0; self.b.n as usize];
        base[at as usize] = a;
        WreathElement {
            top: 0,
            base: base.into_boxed_slice(),
        }
    }
}

impl FiniteGroup for WreathProduct {
    type Elem = WreathElement;

    fn identity(&self) -> WreathElement {
        self.top_element(0)
    }

    fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        let shift = self.b.neg(x.top);
        let base = (0..self.b.n)
            .map(|g| {
                let src = self.b.add(g, shift);
                self.a.add(x.base[g as usize], y.base[src as usize])
            })
            .collect();
        WreathElement {
            top: self.b.add(x.top, y.top),
            base,
        }
    }

    fn inv(&self, x: &WreathElement) -> WreathElement {
        let base = (0..self.b.n)
            .map(|g| self.a.neg(x.base[self.b.add(g, x.top) as usize]))
            .collect();
        WreathElement {
            top: self.b.neg(x.top),
            base,
        }
    }

    /// Generators of `B` with zero base, then generators of `A` placed at the
    /// identity of `B`.
    fn generators(&self) -> Vec<WreathElement> {
        let tops = self.b.group.generators().into_iter().map(|b| self.top_element(b));
        let bases = self.a.group.generators().into_iter().map(|a| self.base_element(a, 0));
        tops.chain(bases).collect()
    }
}

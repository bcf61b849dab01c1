//! Benchmark fixtures shared by the criterion benches.

use wreathvar_core::oracle::{Budget, FiniteAbelianGroup, WreathProduct};

/// `C_n wr (C_{m_1} x ... x C_{m_r})`.
pub fn wreath(n: u32, active: &[u32]) -> WreathProduct {
    WreathProduct::new(
        FiniteAbelianGroup::cyclic(n).expect("n >= 1"),
        FiniteAbelianGroup::new(active.to_vec()).expect("orders >= 2"),
        &Budget::default(),
    )
    .expect("within budget")
}

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::macaulay::binom;

/// Graded Betti numbers `β_{i,j}` keyed by homological degree `i` and
/// internal degree `j`; absent keys are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(u32, u32), BigUint>,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Total Betti numbers `β_i = sum_j β_{i,j}`, up to the last nonzero one.
    pub fn totals(&self) -> Vec<BigUint> {
        let mut out: Vec<BigUint> = Vec::new();
        for (&(i, _), v) in &self.entries {
            let i = i as usize;
            if out.len() <= i {
                out.resize(i + 1, BigUint::zero());
            }
            out[i] += v;
        }
        out
    }
}

/// Eliahou–Kervaire: `β_{i,i+j}(I) = sum_{u in G(I), deg u = j} C(m(u) - 1, i)`
/// for a stable ideal `I`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let mut table = BettiTable::default();
    for u in ideal.gens() {
        let m = u.max_index().map_or(1, |i| i as u32 + 1);
        for i in 0..m {
            *table.entries.entry((i, i + u.degree())).or_default() += binom(i64::from(m) - 1, i);
        }
    }
    Ok(table)
}

impl MonomialIdeal {
    pub fn ek_betti(&self) -> Result<BettiTable> {
        ek_betti(self)
    }
}

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::macaulay::mg_growth;
use crate::monomial::slice_dim;

/// Values `H(0), ..., H(D)` of a Hilbert function in `n` variables.
///
/// Every analysis over a table is certified up to `D` only. The table is
/// tail-certified when `H(D) = H(D-1)^{MG(n-1)}`: growth is then minimal
/// from `D - 1` on and the function extends uniquely past `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunctionTable {
    n: usize,
    values: Vec<BigUint>,
    tail_certified: bool,
}

impl HilbertFunctionTable {
    pub fn new(n: usize, values: Vec<BigUint>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        for (t, v) in values.iter().enumerate() {
            if *v > BigUint::from(slice_dim(n, t as u32)) {
                return Err(Error::ValueExceedsSlice { degree: t as u32 });
            }
        }
        let tail_certified = match values.len() {
            0 | 1 => false,
            len => mg_growth(&values[len - 2], (n - 1) as u32) == values[len - 1],
        };
        Ok(Self { n, values, tail_certified })
    }

    pub fn from_u64s(n: usize, values: &[u64]) -> Result<Self> {
        Self::new(n, values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The certification degree `D`. Panics on an empty table.
    pub fn degree(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn value(&self, t: u32) -> Option<&BigUint> {
        self.values.get(t as usize)
    }

    pub fn tail_certified(&self) -> bool {
        self.tail_certified
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v == &BigUint::default())
    }

    /// Macaulay's bound `H(t+1) >= H(t)^{MG(n-1)}` at every step.
    pub fn is_feasible(&self) -> bool {
        let d = (self.n - 1) as u32;
        self.values.windows(2).all(|w| w[1] >= mg_growth(&w[0], d))
    }

    /// The table cut down to degrees `0..=d`.
    pub fn truncated(&self, d: u32) -> Result<Self> {
        let end = (d as usize + 1).min(self.values.len());
        Self::new(self.n, self.values[..end].to_vec())
    }

    /// Extends by minimal growth up to degree `d`.
    pub fn extended(&self, d: u32) -> Result<Self> {
        let mut values = self.values.clone();
        while values.len() <= d as usize {
            let last = values.last().cloned().unwrap_or_default();
            values.push(mg_growth(&last, (self.n - 1) as u32));
        }
        Self::new(self.n, values)
    }
}

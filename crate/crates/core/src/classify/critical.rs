use alloc::{vec, vec::Vec};
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::HilbertFunctionTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::macaulay::{binom, MacaulayRep, MacaulayTerm};
use crate::monomial::Monomial;

/// A critical type `(a_1, ..., a_s)`: `0 < a_1 <= ... <= a_s`, `1 <= s <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CriticalType {
    n: usize,
    entries: Vec<u32>,
}

impl CriticalType {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidType("a type needs at least one entry"));
        }
        if entries.len() > n {
            return Err(Error::TypeTooLong { entries, n });
        }
        if entries[0] == 0 {
            return Err(Error::InvalidType("entries must be positive"));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidType("entries must be weakly increasing"));
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last(&self) -> u32 {
        *self.entries.last().expect("nonempty")
    }

    /// The critical function `sum_j C(t - a_j + n - j, n - j)`.
    pub fn value(&self, t: u32) -> BigUint {
        critical_sum(self.n, &self.entries, t)
    }

    pub fn table(&self, degree: u32) -> HilbertFunctionTable {
        HilbertFunctionTable::new(self.n, (0..=degree).map(|t| self.value(t)).collect())
            .expect("critical values fit their slices")
    }

    /// The universal lexsegment ideal with this Hilbert function:
    /// `(x_1^{b_1+1}, x_1^{b_1} x_2^{b_2+1}, ...)` with `b_i = a_i - a_{i-1}`,
    /// `a_0 = 1`.
    pub fn universal_lex_ideal(&self) -> MonomialIdeal {
        let mut prefix = vec![0u32; self.n];
        let mut gens = Vec::with_capacity(self.len());
        let mut prev = 1;
        for (i, &a) in self.entries.iter().enumerate() {
            let b = a - prev;
            prev = a;
            let mut g = prefix.clone();
            g[i] = b + 1;
            gens.push(Monomial::new(g));
            prefix[i] = b;
        }
        MonomialIdeal::new(self.n, gens).expect("ambient matches")
    }

    /// `a-bar`: the identity when `s < n`; for `s = n` the truncation
    /// `(a_1, ..., a_{σ-1}, a_σ - 1)` with `σ = min{k <= n-1 : a_k = a_{n-1}}`.
    pub fn bar(&self) -> Result<CriticalType> {
        let entries = self.bar_entries()?;
        if entries.last() == Some(&0) {
            return Err(Error::DegenerateBar);
        }
        Ok(CriticalType { n: self.n, entries })
    }

    fn bar_entries(&self) -> Result<Vec<u32>> {
        if self.len() < self.n {
            return Ok(self.entries.clone());
        }
        if self.n < 2 {
            return Err(Error::DegenerateBar);
        }
        let pivot = self.entries[self.n - 2];
        let sigma = self.entries.iter().position(|&a| a == pivot).expect("present");
        let mut out = self.entries[..=sigma].to_vec();
        out[sigma] -= 1;
        Ok(out)
    }

    /// Whether a window match against `table` extends past its degree:
    /// the table is tail-certified and `a_s < D`.
    pub fn is_certified_by(&self, table: &HilbertFunctionTable) -> bool {
        table.tail_certified() && self.last() < table.degree()
    }
}

impl fmt::Display for CriticalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// `sum_{j=1..s} C(t - a_j + n - j, n - j)` for any entry list.
pub(crate) fn critical_sum(n: usize, entries: &[u32], t: u32) -> BigUint {
    entries.iter().enumerate().map(|(i, &a)| critical_term(n, i, a, t)).sum()
}

/// The summand of zero-based position `i`.
pub(crate) fn critical_term(n: usize, i: usize, a: u32, t: u32) -> BigUint {
    let k = (n - 1 - i) as i64;
    binom(i64::from(t) - i64::from(a) + k, k as u32)
}

pub fn critical_value(ty: &CriticalType, t: u32) -> BigUint {
    ty.value(t)
}

pub fn universal_lex_of_type(ty: &CriticalType) -> MonomialIdeal {
    ty.universal_lex_ideal()
}

pub fn bar_type(ty: &CriticalType) -> Result<CriticalType> {
    ty.bar()
}

/// Greedy peeling: each round takes the first degree with positive residual
/// as the next entry and subtracts its summand.
///
/// A match on `0..=D` only claims the infinite function when
/// [`CriticalType::is_certified_by`] holds.
pub fn detect_critical(table: &HilbertFunctionTable) -> Option<CriticalType> {
    let n = table.n();
    let mut residual: Vec<BigUint> = table.values().to_vec();
    let mut entries = Vec::new();
    while let Some(a) = residual.iter().position(|v| !v.is_zero()) {
        if entries.len() == n {
            return None;
        }
        let i = entries.len();
        for (t, r) in residual.iter_mut().enumerate() {
            let term = critical_term(n, i, a as u32, t as u32);
            if *r < term {
                return None;
            }
            *r -= term;
        }
        entries.push(a as u32);
    }
    CriticalType::new(n, entries).ok()
}

/// The `(n-1)`-th Macaulay representation of `H(t)` for the critical
/// function of `ty`, read off the type (through `a-bar` when `s = n`).
pub fn rep_of_critical_value(ty: &CriticalType, t: u32) -> Result<MacaulayRep> {
    let n = ty.n();
    if n < 2 {
        return Err(Error::InvalidType("representations need at least two variables"));
    }
    if t < ty.last() {
        return Err(Error::BelowLastEntry { degree: t, last: ty.last() });
    }
    let entries = ty.bar_entries()?;
    let terms = entries
        .iter()
        .enumerate()
        .map(|(i, &b)| MacaulayTerm { offset: u64::from(t - b), index: (n - 1 - i) as u32 })
        .collect();
    Ok(MacaulayRep::from_terms((n - 1) as u32, terms).expect("well-shaped by construction"))
}

/// Reads a type off the `(n-1)`-th Macaulay representation of `dim`:
/// the term of index `n - j` is `C(d - a_j + n - j, n - j)`.
pub fn type_from_dimension(dim: &BigUint, d: u32, n: usize) -> Option<CriticalType> {
    if dim.is_zero() || n < 2 {
        return None;
    }
    let rep = MacaulayRep::new(dim, (n - 1) as u32).ok()?;
    let mut entries = Vec::with_capacity(rep.len());
    for term in rep.terms() {
        let a = i64::from(d) - term.offset as i64;
        if a <= 0 {
            return None;
        }
        entries.push(a as u32);
    }
    CriticalType::new(n, entries).ok()
}

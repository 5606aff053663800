use alloc::{vec, vec::Vec};
use core::fmt;

use num_bigint::BigUint;

use super::critical::{critical_term, CriticalType};
use super::HilbertFunctionTable;
use crate::error::{Error, Result};
use crate::macaulay::mg_growth;

/// Default budget of candidate types examined by [`detect_segmentwise`].
pub const DEFAULT_SEARCH_CAP: usize = 1_000_000;

/// A segmentation `0 = s_0 < s_1 < ... < s_{l-1}` (last segment open-ended)
/// with one critical type per segment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentwiseSpec {
    /// Interior breakpoints `s_1, ..., s_{l-1}`.
    pub breakpoints: Vec<u32>,
    pub segment_types: Vec<CriticalType>,
    /// Whether the source table was tail-certified, so the open last segment
    /// is a claim about the whole function rather than the window `0..=D`.
    pub tail_certified: bool,
}

impl SegmentwiseSpec {
    /// Number of segments `l`.
    pub fn segments(&self) -> usize {
        self.segment_types.len()
    }

    /// Checks both conditions of the definition against `table` on `0..=D`.
    pub fn matches(&self, table: &HilbertFunctionTable) -> bool {
        let n = table.n();
        let d = table.degree();
        let values = table.values();
        let mut starts = vec![0u32];
        starts.extend(&self.breakpoints);
        for (j, ty) in self.segment_types.iter().enumerate() {
            let lo = starts[j];
            let hi = starts.get(j + 1).copied().unwrap_or(d).min(d);
            if (lo..=hi).any(|t| ty.value(t) != values[t as usize]) {
                return false;
            }
        }
        self.breakpoints.iter().all(|&s| {
            s >= 1 && s <= d && mg_growth(&values[s as usize - 1], (n - 1) as u32) == values[s as usize]
        })
    }
}

impl fmt::Display for SegmentwiseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("breakpoints [")?;
        for (i, s) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]; types [")?;
        for (i, t) in self.segment_types.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

pub fn detect_segmentwise(table: &HilbertFunctionTable) -> Result<Option<SegmentwiseSpec>> {
    detect_segmentwise_with_cap(table, DEFAULT_SEARCH_CAP)
}

/// Segmentwise-critical detection on the window `0..=D`.
///
/// A window `[lo, hi]` is valid when some type with entries `<= hi` (and at
/// most `n` of them) matches `H` on it; the open last window `[lo, D]` only
/// admits entries `< D`. Interior breakpoints `s` must glue by minimal growth,
/// `H(s-1)^{MG(n-1)} = H(s)`. Among valid segmentations the one with fewest
/// segments wins, then the lexicographically earliest breakpoints; each
/// window takes its first matching type in (length, lex) search order.
pub fn detect_segmentwise_with_cap(
    table: &HilbertFunctionTable,
    cap: usize,
) -> Result<Option<SegmentwiseSpec>> {
    if table.len() < 2 {
        return Ok(None);
    }
    let n = table.n();
    let d = table.degree();
    let values = table.values();
    let mut search = WindowSearch { n, values, budget: cap, cap };

    let glues = |s: u32| mg_growth(&values[s as usize - 1], (n - 1) as u32) == values[s as usize];

    // best[lo]: cheapest segmentation of [lo, infinity) as (breakpoints, types).
    let mut best: Vec<Option<(Vec<u32>, Vec<CriticalType>)>> = vec![None; d as usize + 1];
    for lo in (0..=d).rev() {
        let mut choice: Option<(Vec<u32>, Vec<CriticalType>)> = None;
        if d >= 1 {
            if let Some(ty) = search.find(lo, d, d - 1)? {
                choice = Some((vec![], vec![ty]));
            }
        }
        for hi in lo + 1..=d {
            let Some((tail_bps, tail_types)) = &best[hi as usize] else {
                continue;
            };
            if !glues(hi) {
                continue;
            }
            let segments = tail_types.len() + 1;
            let mut bps = vec![hi];
            bps.extend(tail_bps);
            let better = match &choice {
                None => true,
                Some((cb, ct)) => segments < ct.len() || (segments == ct.len() && bps < *cb),
            };
            if !better {
                continue;
            }
            if let Some(ty) = search.find(lo, hi, hi)? {
                let mut types = vec![ty];
                types.extend(tail_types.iter().cloned());
                choice = Some((bps, types));
            }
        }
        best[lo as usize] = choice;
    }
    Ok(best[0].take().map(|(breakpoints, segment_types)| SegmentwiseSpec {
        breakpoints,
        segment_types,
        tail_certified: table.tail_certified(),
    }))
}

struct WindowSearch<'a> {
    n: usize,
    values: &'a [BigUint],
    budget: usize,
    cap: usize,
}

impl WindowSearch<'_> {
    /// First type (shortest, then lex smallest) with entries `<= bound`
    /// matching the values on `[lo, hi]`.
    fn find(&mut self, lo: u32, hi: u32, bound: u32) -> Result<Option<CriticalType>> {
        let target = &self.values[lo as usize..=hi as usize];
        let mut partial = vec![BigUint::default(); target.len()];
        for len in 1..=self.n {
            let mut entries = Vec::with_capacity(len);
            if self.extend(lo, target, bound, len, &mut entries, &mut partial)? {
                return Ok(Some(CriticalType::new(self.n, entries).expect("valid by construction")));
            }
        }
        Ok(None)
    }

    /// Depth-first search over weakly increasing entries; partial sums may
    /// never exceed the target since every summand is nonnegative.
    fn extend(
        &mut self,
        lo: u32,
        target: &[BigUint],
        bound: u32,
        len: usize,
        entries: &mut Vec<u32>,
        partial: &mut Vec<BigUint>,
    ) -> Result<bool> {
        if entries.len() == len {
            return Ok(partial.as_slice() == target);
        }
        let i = entries.len();
        let start = entries.last().copied().unwrap_or(1);
        for a in start..=bound {
            if self.budget == 0 {
                return Err(Error::SearchCap { cap: self.cap });
            }
            self.budget -= 1;
            let terms: Vec<BigUint> =
                (0..target.len()).map(|k| critical_term(self.n, i, a, lo + k as u32)).collect();
            if partial.iter().zip(&terms).zip(target).any(|((p, t), h)| p + t > *h) {
                continue;
            }
            for (p, t) in partial.iter_mut().zip(&terms) {
                *p += t;
            }
            entries.push(a);
            let found = self.extend(lo, target, bound, len, entries, partial)?;
            if found {
                return Ok(true);
            }
            entries.pop();
            for (p, t) in partial.iter_mut().zip(&terms) {
                *p -= t;
            }
        }
        Ok(false)
    }
}

//! Exact binomials and the Macaulay-representation operators.
//!
//! For positive integers `a` and `d` the `d`-th Macaulay representation is
//! the unique expansion
//!
//! ```text
//! a = C(a(d) + d, d) + C(a(d-1) + d-1, d-1) + ... + C(a(k) + k, k)
//! ```
//!
//! with `a(d) >= a(d-1) >= ... >= a(k) >= 0` and `k >= 1`. The operators
//! [`mg_growth`], [`shrink`] and [`plus`] all act termwise on it.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(m, k)`, zero whenever `m < k` (in particular for every negative `m`).
pub fn binom(m: i64, k: u32) -> BigUint {
    if m < 0 || (m as u64) < u64::from(k) {
        return BigUint::zero();
    }
    let m = m as u64;
    let k = u64::from(k).min(m - u64::from(k));
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc == C(m, i) here, so the division is exact.
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// One summand `C(offset + index, index)` of a Macaulay representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MacaulayTerm {
    /// `a(j)`.
    pub offset: u64,
    /// `j`.
    pub index: u32,
}

impl MacaulayTerm {
    pub fn value(&self) -> BigUint {
        binom(self.top(), self.index)
    }

    fn top(&self) -> i64 {
        (self.offset + u64::from(self.index)) as i64
    }
}

/// The `d`-th Macaulay representation of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    d: u32,
    terms: Vec<MacaulayTerm>,
}

impl MacaulayRep {
    /// Greedy decomposition of `a` at top index `d`.
    pub fn new(a: &BigUint, d: u32) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NonPositive);
        }
        assert!(d >= 1, "Macaulay representations need d >= 1");
        let mut rest = a.clone();
        let mut terms = Vec::new();
        let mut index = d;
        while !rest.is_zero() {
            debug_assert!(index >= 1);
            let top = largest_top(&rest, index);
            rest -= binom(top as i64, index);
            terms.push(MacaulayTerm { offset: top - u64::from(index), index });
            index -= 1;
        }
        Ok(Self { d, terms })
    }

    /// Builds a representation from explicit terms, checking the shape
    /// constraints (consecutive indices from `d` down, weakly decreasing
    /// offsets). Returns `None` when they fail.
    pub fn from_terms(d: u32, terms: Vec<MacaulayTerm>) -> Option<Self> {
        if terms.is_empty() || terms.len() > d as usize {
            return None;
        }
        let shaped = terms.iter().enumerate().all(|(i, t)| t.index == d - i as u32)
            && terms.windows(2).all(|w| w[0].offset >= w[1].offset);
        shaped.then_some(Self { d, terms })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &[MacaulayTerm] {
        &self.terms
    }

    /// Number of summands.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The offsets `(a(d), ..., a(k))`.
    pub fn offsets(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.offset).collect()
    }

    pub fn value(&self) -> BigUint {
        self.terms.iter().map(MacaulayTerm::value).sum()
    }

    /// Sum of `C(a(j) + j + shift, j)`.
    fn shifted_value(&self, shift: i64) -> BigUint {
        self.terms.iter().map(|t| binom(t.top() + shift, t.index)).sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({},{})", t.offset + u64::from(t.index), t.index)?;
        }
        Ok(())
    }
}

/// Largest `m` with `C(m, k) <= a`, for `a >= 1` and `k >= 1`.
fn largest_top(a: &BigUint, k: u32) -> u64 {
    let k64 = u64::from(k);
    let fits = |m: u64| binom(m as i64, k) <= *a;
    let mut lo = k64;
    let mut step = 1u64;
    while fits(lo + step) {
        lo += step;
        step *= 2;
    }
    // C(lo, k) <= a < C(lo + step, k)
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn macaulay_rep(a: &BigUint, d: u32) -> Result<MacaulayRep> {
    MacaulayRep::new(a, d)
}

/// `a^{MG(d)}`: every `C(a(j) + j, j)` becomes `C(a(j) + j + 1, j)`, and
/// `0^{MG(d)} = 0`. `d = 0` is one-variable growth, the identity.
pub fn mg_growth(a: &BigUint, d: u32) -> BigUint {
    if a.is_zero() || d == 0 {
        return a.clone();
    }
    MacaulayRep::new(a, d).expect("positive").shifted_value(1)
}

/// `a_{<d>}`: every `C(a(j) + j, j)` becomes `C(a(j) + j - 1, j)`, and
/// `0_{<d>} = 0`.
pub fn shrink(a: &BigUint, d: u32) -> BigUint {
    if a.is_zero() || d == 0 {
        return a.clone();
    }
    MacaulayRep::new(a, d).expect("positive").shifted_value(-1)
}

/// `a^+` in `n` variables.
///
/// With `s` the length of the `(n-1)`-th representation, this is
/// `a^{MG(n-1)}` when `s >= n - 2` and otherwise adds the `n - s - 2` ones
/// `C(n-s-1, n-s-1) + ... + C(2, 2)`. `0^+ = 0`.
pub fn plus(a: &BigUint, n: usize) -> BigUint {
    assert!(n >= 2, "a^+ needs at least two variables");
    if a.is_zero() {
        return BigUint::zero();
    }
    let d = (n - 1) as u32;
    let s = MacaulayRep::new(a, d).expect("positive").len();
    let grown = mg_growth(a, d);
    if s + 2 >= n {
        grown
    } else {
        grown + BigUint::from(n - s - 2)
    }
}

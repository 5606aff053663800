//! Monomial ideals of `K[x_1, ..., x_n]`, stored by their minimal
//! generators `G(I)`.

mod betti;
mod enumerate;
mod lex;
mod saturation;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

pub use betti::{ek_betti, BettiTable};
pub use enumerate::{enumerate_ideals_with_hf, DEFAULT_STATE_CAP};
pub use lex::{
    is_gotzmann_space, is_trivially_gotzmann, lexify, GotzmannReport, Lexification, DEFAULT_DEGREE_CAP,
};

use crate::classify::{CriticalType, HilbertFunctionTable};
use crate::error::{Error, Result};
use crate::macaulay::binom;
use crate::monomial::{enumerate_degree, Monomial, MonomialSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    /// Minimal generators, sorted by degree and then decreasing lex order.
    gens: Vec<Monomial>,
}

/// Drops every monomial divisible by another one in the list.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, gens)
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|m| m.n() != n) {
            return Err(Error::AmbientMismatch { left: n, right: bad.n() });
        }
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        all.dedup();
        // A divisor has degree at most that of its multiple, so scanning in
        // degree order against the kept prefix is enough.
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        Ok(Self { n, gens: kept })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self { n, gens: alloc::vec![Monomial::one(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I_d` as a monomial space.
    pub fn slice(&self, d: u32) -> MonomialSpace {
        let members = enumerate_degree(self.n, d).into_iter().filter(|m| self.contains(m));
        MonomialSpace::new(self.n, d, members).expect("degree-d members")
    }

    /// `H(I, t)` for `0 <= t <= d`, by counting monomials.
    pub fn hilbert(&self, d: u32) -> HilbertFunctionTable {
        let values = (0..=d).map(|t| BigUint::from(self.slice_count(t))).collect();
        HilbertFunctionTable::new(self.n, values).expect("counts fit their slices")
    }

    pub(crate) fn slice_count(&self, d: u32) -> usize {
        if self.is_zero() {
            return 0;
        }
        enumerate_degree(self.n, d).iter().filter(|m| self.contains(m)).count()
    }

    /// The stable-ideal formula `sum_u C(t - deg u + n - m(u), n - m(u))`.
    pub fn hilbert_stable(&self, d: u32) -> Result<HilbertFunctionTable> {
        if !self.is_stable() {
            return Err(Error::NotStable);
        }
        let n = self.n as i64;
        let values = (0..=d)
            .map(|t| {
                self.gens
                    .iter()
                    .map(|u| {
                        // m(1) is undefined; the unit ideal behaves like m = 1.
                        let m = u.max_index().map_or(1, |i| i as i64 + 1);
                        binom(i64::from(t) - i64::from(u.degree()) + n - m, (n - m) as u32)
                    })
                    .sum()
            })
            .collect();
        HilbertFunctionTable::new(self.n, values)
    }

    /// For each `u` in `G(I)` and each `i < m(u)`: `x_i u / x_{m(u)}` lies in `I`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let Some(last) = u.max_index() else {
                return true;
            };
            let base = u.div_var(last).expect("x_m(u) divides u");
            (0..last).all(|i| self.contains(&base.mul_var(i)))
        })
    }

    /// Every degree slice up to the top generator degree is an initial lex
    /// segment (later slices inherit this from `A_1 * L` being lexsegment).
    pub fn is_lexsegment(&self) -> bool {
        let Some(top) = self.max_degree() else {
            return true;
        };
        (0..=top).all(|d| {
            let mut seen_gap = false;
            for m in enumerate_degree(self.n, d) {
                match (self.contains(&m), seen_gap) {
                    (true, true) => return false,
                    (false, _) => seen_gap = true,
                    (true, false) => {}
                }
            }
            true
        })
    }

    /// Lexsegment with `1 <= |G(I)| <= n` generators of positive degree.
    pub fn is_universal_lexsegment(&self) -> bool {
        !self.is_zero() && !self.is_unit() && self.gens.len() <= self.n && self.is_lexsegment()
    }

    /// The critical type `(a_1, ..., a_s)` when the generators are exactly
    /// `x_1^{b_1+1}, x_1^{b_1} x_2^{b_2+1}, ..., x_1^{b_1} ... x_s^{b_s+1}`.
    pub fn universal_type(&self) -> Option<CriticalType> {
        if self.is_zero() || self.is_unit() || self.gens.len() > self.n {
            return None;
        }
        let s = self.gens.len();
        let mut b = Vec::with_capacity(s);
        let mut sorted = self.gens.clone();
        sorted.sort_by_key(|g| g.max_index());
        for (i, g) in sorted.iter().enumerate() {
            if g.max_index() != Some(i) || g.exponents()[i] == 0 {
                return None;
            }
            b.push(g.exponents()[i] - 1);
            if g.exponents()[..i] != b[..i] {
                return None;
            }
        }
        let mut prev = 1;
        let entries = b
            .iter()
            .map(|&bi| {
                prev += bi;
                prev
            })
            .collect();
        CriticalType::new(self.n, entries).ok()
    }

    /// Applies a variable permutation to every generator.
    pub fn permuted(&self, images: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.permuted(images))).expect("same ambient")
    }

    /// `I : x_i`.
    pub fn colon_var(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.colon_var(i))).expect("same ambient")
    }

    /// `I ∩ J` via pairwise lcm.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let lcms = self.gens.iter().flat_map(|u| other.gens.iter().map(move |v| u.lcm(v)));
        MonomialIdeal::new(self.n, lcms)
    }

    /// Number of generators in each degree, indexed by degree.
    pub fn gens_by_degree(&self) -> Vec<usize> {
        let top = self.max_degree().map_or(0, |d| d as usize + 1);
        let mut counts = alloc::vec![0; top];
        for g in &self.gens {
            counts[g.degree() as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

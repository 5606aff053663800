use alloc::vec::Vec;

use num_bigint::BigUint;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::macaulay::mg_growth;
use crate::monomial::{lex_top, MonomialSpace};

/// Default degree bound for [`lexify`].
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// `I^lex` together with the degree at which its construction stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexification {
    pub ideal: MonomialIdeal,
    /// First `k >= max deg G(I)` with `H(k+1) = H(k)^{MG(n-1)}`; neither
    /// `I^lex` nor the Hilbert function changes shape past it.
    pub stop_degree: u32,
}

/// Builds `I^lex` slice by slice: degree `k` is the top `H(I, k)`
/// monomials, and new generators are those outside `A_1` times the
/// previous slice. Stops once `k` is past every generator of `I` and growth
/// from `k` to `k + 1` is minimal, since both ideals then grow minimally
/// forever after.
pub fn lexify(ideal: &MonomialIdeal, cap: u32) -> Result<Lexification> {
    let n = ideal.n();
    let Some(top) = ideal.max_degree() else {
        return Ok(Lexification { ideal: ideal.clone(), stop_degree: 0 });
    };
    let mut gens = Vec::new();
    let mut prev = MonomialSpace::empty(n, 0);
    let mut k = 0u32;
    let mut h = ideal.slice_count(0);
    loop {
        if k > cap {
            return Err(Error::DegreeCap { cap });
        }
        let slice = lex_top(n, k, h).expect("H(I, k) fits the slice");
        let grown = if k == 0 { MonomialSpace::empty(n, 0) } else { prev.multiply() };
        gens.extend(slice.members().iter().filter(|m| !grown.contains(m)).cloned());
        let next = ideal.slice_count(k + 1);
        if k >= top && BigUint::from(next) == mg_growth(&BigUint::from(h), (n - 1) as u32) {
            let ideal = MonomialIdeal::new(n, gens).expect("same ambient");
            return Ok(Lexification { ideal, stop_degree: k });
        }
        prev = slice;
        h = next;
        k += 1;
    }
}

/// `dim A_1 V = dim A_1 Lex(V)`, the right side read off minimal growth.
pub fn is_gotzmann_space(v: &MonomialSpace) -> bool {
    let grown = BigUint::from(v.multiply().dim());
    grown == mg_growth(&BigUint::from(v.dim()), (v.n() - 1) as u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotzmannReport {
    pub is_gotzmann: bool,
    pub lex: MonomialIdeal,
    /// `|G(I)|` split by degree.
    pub gens_by_degree: Vec<usize>,
    /// `|G(I^lex)|` split by degree.
    pub lex_gens_by_degree: Vec<usize>,
    /// Lowest degree whose slice is not a Gotzmann space, among degrees up
    /// to the certification degree.
    pub first_non_gotzmann_slice: Option<u32>,
    pub certification_degree: u32,
}

impl MonomialIdeal {
    pub fn lexify(&self, cap: u32) -> Result<MonomialIdeal> {
        lexify(self, cap).map(|l| l.ideal)
    }

    /// Gotzmann when `|G(I)| = |G(I^lex)|`.
    pub fn is_gotzmann(&self, cap: u32) -> Result<GotzmannReport> {
        let Lexification { ideal: lex, stop_degree } = lexify(self, cap)?;
        let first_non_gotzmann_slice = (0..=stop_degree).find(|&k| !is_gotzmann_space(&self.slice(k)));
        Ok(GotzmannReport {
            is_gotzmann: self.num_gens() == lex.num_gens(),
            gens_by_degree: self.gens_by_degree(),
            lex_gens_by_degree: lex.gens_by_degree(),
            lex,
            first_non_gotzmann_slice,
            certification_degree: stop_degree + 1,
        })
    }

    pub fn is_trivially_gotzmann(&self) -> Option<Vec<usize>> {
        is_trivially_gotzmann(self)
    }
}

/// A permutation `images` (variable `i` goes to `images[i]`) turning `I`
/// into a lexsegment ideal, trying permutations in lex order. Meant for
/// small `n`: the search is over all `n!` relabelings.
pub fn is_trivially_gotzmann(ideal: &MonomialIdeal) -> Option<Vec<usize>> {
    let mut perm: Vec<usize> = (0..ideal.n()).collect();
    loop {
        if ideal.permuted(&perm).is_lexsegment() {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

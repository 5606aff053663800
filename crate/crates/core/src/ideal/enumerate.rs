use alloc::vec::Vec;

use super::MonomialIdeal;
use crate::classify::HilbertFunctionTable;
use crate::error::{Error, Result};
use crate::monomial::{enumerate_degree, Monomial, MonomialSpace};

/// Default budget of partial slices visited by [`enumerate_ideals_with_hf`].
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Every monomial ideal generated in degrees `<= D` whose Hilbert function
/// agrees with `table` on `0..=D`.
///
/// Slices are chosen degree by degree: slice `t` must contain `A_1` times
/// slice `t - 1` and have `H(t)` members. Results come in construction
/// order, where each degree's extra monomials are taken as combinations in
/// decreasing lex order. Tables violating Macaulay's bound give no ideals.
pub fn enumerate_ideals_with_hf(
    table: &HilbertFunctionTable,
    d: u32,
    cap: usize,
) -> Result<Vec<MonomialIdeal>> {
    let d = d.min(table.degree());
    let mut walk = Walk {
        n: table.n(),
        d,
        targets: table.values()[..=d as usize]
            .iter()
            .map(|v| usize::try_from(v).expect("bounded by a slice size"))
            .collect(),
        budget: cap,
        cap,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    walk.degree(0, &MonomialSpace::empty(table.n(), 0))?;
    Ok(walk.out)
}

struct Walk {
    n: usize,
    d: u32,
    targets: Vec<usize>,
    budget: usize,
    cap: usize,
    /// Slices fixed so far, one per degree.
    chosen: Vec<MonomialSpace>,
    out: Vec<MonomialIdeal>,
}

impl Walk {
    fn degree(&mut self, t: u32, forced: &MonomialSpace) -> Result<()> {
        if t > self.d {
            let gens = self.chosen.iter().flat_map(|s| s.members().iter().cloned());
            self.out.push(MonomialIdeal::new(self.n, gens).expect("same ambient"));
            return Ok(());
        }
        let target = self.targets[t as usize];
        if forced.dim() > target {
            return Ok(());
        }
        let free: Vec<Monomial> =
            enumerate_degree(self.n, t).into_iter().filter(|m| !forced.contains(m)).collect();
        let extra = target - forced.dim();
        let mut picks: Vec<usize> = (0..extra).collect();
        loop {
            if self.budget == 0 {
                return Err(Error::StateCap { cap: self.cap });
            }
            self.budget -= 1;
            let members = forced.members().iter().cloned().chain(picks.iter().map(|&i| free[i].clone()));
            let slice = MonomialSpace::new(self.n, t, members).expect("degree-t monomials");
            let next = slice.multiply();
            self.chosen.push(slice);
            self.degree(t + 1, &next)?;
            self.chosen.pop();
            if !next_combination(&mut picks, free.len()) {
                return Ok(());
            }
        }
    }
}

/// Advances `picks` (strictly increasing indices below `len`) to the next
/// combination in lex order.
fn next_combination(picks: &mut [usize], len: usize) -> bool {
    let k = picks.len();
    let Some(i) = (0..k).rev().find(|&i| picks[i] < len - k + i) else {
        return false;
    };
    picks[i] += 1;
    for j in i + 1..k {
        picks[j] = picks[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn run(n: usize, h: &[u64]) -> Vec<String> {
        let t = HilbertFunctionTable::from_u64s(n, h).unwrap();
        enumerate_ideals_with_hf(&t, t.degree(), DEFAULT_STATE_CAP)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(run(2, &[0, 1, 2, 3, 4]), ["(x1)", "(x2)"]);
        assert_eq!(run(2, &[0, 0, 1, 2, 3]), ["(x1^2)", "(x1*x2)", "(x2^2)"]);
        // a linear form already spans two quadrics
        assert!(run(2, &[0, 1, 1]).is_empty());
        assert_eq!(run(2, &[0, 1, 3]), ["(x1, x2^2)", "(x2, x1^2)"]);
    }

    #[test]
    fn counts_match_subsets_of_a_full_slice() {
        // every 2-subset of the six quadrics, then all of degree 3
        assert_eq!(run(3, &[0, 0, 2, 10]).len(), 15);
        assert_eq!(run(3, &[0, 0, 0]).len(), 1);
    }

    #[test]
    fn every_result_has_the_table() {
        let t = HilbertFunctionTable::from_u64s(3, &[0, 0, 2, 6, 11]).unwrap();
        let all = enumerate_ideals_with_hf(&t, 4, DEFAULT_STATE_CAP).unwrap();
        assert!(!all.is_empty());
        for i in &all {
            assert_eq!(i.hilbert(4), t, "{i}");
            assert!(i.max_degree().unwrap() <= 4);
        }
    }

    #[test]
    fn cap_fails_loudly() {
        let t = HilbertFunctionTable::from_u64s(3, &[0, 0, 2, 10]).unwrap();
        assert_eq!(enumerate_ideals_with_hf(&t, 3, 5), Err(Error::StateCap { cap: 5 }));
    }

    #[test]
    fn combinations_in_order() {
        let mut p = vec![0, 1];
        let mut n = 1;
        while next_combination(&mut p, 4) {
            n += 1;
        }
        assert_eq!(n, 6);
        let mut e: Vec<usize> = vec![];
        assert!(!next_combination(&mut e, 3));
    }
}

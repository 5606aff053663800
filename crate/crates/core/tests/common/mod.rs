#![allow(dead_code)]

use std::collections::BTreeSet;

use gotzmann_core::classify::HilbertFunctionTable;
use gotzmann_core::macaulay::mg_growth;
use gotzmann_core::monomial::{enumerate_degree, slice_dim};
use gotzmann_core::polyspace::{CanonicalCriticalSpec, Polynomial};
use gotzmann_core::{Monomial, MonomialIdeal};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| mono(g))).unwrap()
}

pub fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_int_terms(n, terms).unwrap()
}

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn as_u64s(h: &HilbertFunctionTable) -> Vec<u64> {
    h.values().iter().map(|v| u64::try_from(v).unwrap()).collect()
}

/// Whether every `u` in the degree-`d` set has `x_i u / x_{m(u)}` in the set
/// for each `i < m(u)`; the degreewise form of stability.
fn slice_is_stable(slice: &BTreeSet<Monomial>) -> bool {
    slice.iter().all(|u| {
        let Some(m) = u.max_index() else {
            return true;
        };
        let base = u.div_var(m).unwrap();
        (0..m).all(|i| slice.contains(&base.mul_var(i)))
    })
}

/// All stable monomial ideals in `n` variables generated in degrees
/// `1..=top`, by choosing degreewise stable slices that contain `A_1` times
/// the previous slice.
pub fn stable_ideals(n: usize, top: u32) -> Vec<MonomialIdeal> {
    fn go(
        n: usize,
        t: u32,
        top: u32,
        forced: BTreeSet<Monomial>,
        chosen: &mut Vec<Monomial>,
        out: &mut Vec<MonomialIdeal>,
    ) {
        if t > top {
            out.push(MonomialIdeal::new(n, chosen.iter().cloned()).unwrap());
            return;
        }
        let free: Vec<Monomial> =
            enumerate_degree(n, t).into_iter().filter(|m| !forced.contains(m)).collect();
        for mask in 0u64..1 << free.len() {
            let mut slice = forced.clone();
            let mut added = Vec::new();
            for (i, m) in free.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    slice.insert(m.clone());
                    added.push(m.clone());
                }
            }
            if !slice_is_stable(&slice) {
                continue;
            }
            let next: BTreeSet<Monomial> =
                slice.iter().flat_map(|u| (0..n).map(move |i| u.mul_var(i))).collect();
            let len = chosen.len();
            chosen.extend(added);
            go(n, t + 1, top, next, chosen, out);
            chosen.truncate(len);
        }
    }
    let mut out = Vec::new();
    go(n, 1, top, BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Every table `H(0..=D)` with `H(0) = 0` that some monomial ideal attains
/// (lex slices nest, i.e. `H(t+1) >= H(t)^{MG(n-1)}`) and that is
/// tail-certified.
pub fn certified_feasible_tables(n: usize, d: u32) -> Vec<HilbertFunctionTable> {
    fn go(n: usize, d: u32, values: &mut Vec<BigUint>, out: &mut Vec<HilbertFunctionTable>) {
        let t = values.len() as u32;
        if t > d {
            let table = HilbertFunctionTable::new(n, values.clone()).unwrap();
            if table.tail_certified() {
                out.push(table);
            }
            return;
        }
        let floor = mg_growth(values.last().unwrap(), (n - 1) as u32);
        let floor = u64::try_from(&floor).unwrap();
        for v in floor..=slice_dim(n, t) as u64 {
            values.push(BigUint::from(v));
            go(n, d, values, out);
            values.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut vec![BigUint::from(0u32)], &mut out);
    out
}

/// A random nonzero homogeneous form of degree `e` in `x_{from+1}, ..., x_n`
/// with coefficients in `-2..=2`.
pub fn random_form(rng: &mut impl Rng, n: usize, from: usize, e: u32) -> Polynomial {
    loop {
        let terms = enumerate_degree(n - from, e).into_iter().map(|m| {
            let mut exps = vec![0; from];
            exps.extend_from_slice(m.exponents());
            let c: i64 = rng.gen_range(-2..=2);
            (Monomial::new(exps), BigRational::from_integer(BigInt::from(c)))
        });
        let f = Polynomial::from_terms(n, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random canonical critical specification with `n <= max_n` and factor
/// degrees at most `max_deg`.
pub fn random_spec(rng: &mut impl Rng, max_n: usize, max_deg: u32) -> CanonicalCriticalSpec {
    let n = rng.gen_range(1..=max_n);
    let s = rng.gen_range(1..=n);
    let factors = (0..s)
        .map(|i| {
            let e = if i + 1 == s { rng.gen_range(1..=max_deg) } else { rng.gen_range(0..=max_deg) };
            random_form(rng, n, i, e)
        })
        .collect();
    CanonicalCriticalSpec::new(n, factors).unwrap()
}

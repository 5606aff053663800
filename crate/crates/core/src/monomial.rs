//! Monomials, the lexicographic order and monomial subspaces of `A_d`.
//!
//! The derived `Ord` on [`Monomial`] compares exponent vectors
//! lexicographically, which is exactly `<_lex` induced by
//! `x_1 > x_2 > ... > x_n`.

use alloc::{collections::BTreeSet, vec, vec::Vec};
use core::{cmp::Ordering, fmt, ops::Mul};

use crate::error::{Error, Result};
use crate::macaulay::binom;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// `x_{i+1}` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exponents[i] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Zero-based index of the last variable dividing `self` (`m(u) - 1`).
    /// `None` for the constant monomial.
    pub fn max_index(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[i] += 1;
        m
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponents[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exponents[i] -= 1;
        Some(m)
    }

    /// `self / x_i` if divisible, else `self`: the generator of `(u) : x_i`.
    pub fn colon_var(&self, i: usize) -> Monomial {
        self.div_var(i).unwrap_or_else(|| self.clone())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.max(b)).collect() }
    }

    /// `pi(u) = x_{pi(1)}^{a_1} ... x_{pi(n)}^{a_n}`; `images[i]` is the
    /// zero-based image of variable `i`.
    pub fn permuted(&self, images: &[usize]) -> Monomial {
        let mut exponents = vec![0; self.n()];
        for (i, &e) in self.exponents.iter().enumerate() {
            exponents[images[i]] = e;
        }
        Monomial { exponents }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&rhs.exponents).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Lex comparison; errors when the ambient dimensions differ.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.n() != v.n() {
        return Err(Error::AmbientMismatch { left: u.n(), right: v.n() });
    }
    Ok(u.cmp(v))
}

/// `dim A_d = C(d + n - 1, n - 1)` as a machine integer.
pub fn slice_dim(n: usize, d: u32) -> usize {
    let c = binom(i64::from(d) + n as i64 - 1, n as u32 - 1);
    usize::try_from(c).expect("slice dimension fits in memory")
}

/// All monomials of degree `d` in `n` variables, in decreasing lex order.
pub fn enumerate_degree(n: usize, d: u32) -> Vec<Monomial> {
    assert!(n >= 1, "need at least one variable");
    fn go(i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = rest;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=rest).rev() {
            cur[i] = e;
            go(i + 1, rest - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::with_capacity(slice_dim(n, d));
    go(0, d, &mut vec![0; n], &mut out);
    out
}

/// A set of distinct monomials of one degree, spanning a subspace of `A_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialSpace {
    n: usize,
    degree: u32,
    members: BTreeSet<Monomial>,
}

impl MonomialSpace {
    pub fn new(n: usize, degree: u32, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        let members: BTreeSet<Monomial> = members.into_iter().collect();
        for m in &members {
            if m.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: m.n() });
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: m.degree() });
            }
        }
        Ok(Self { n, degree, members })
    }

    pub fn empty(n: usize, degree: u32) -> Self {
        Self { n, degree, members: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    pub fn members(&self) -> &BTreeSet<Monomial> {
        &self.members
    }

    /// Members in decreasing lex order.
    pub fn iter_desc(&self) -> impl Iterator<Item = &Monomial> {
        self.members.iter().rev()
    }

    /// `A_1 * V`.
    pub fn multiply(&self) -> MonomialSpace {
        let members = self.members.iter().flat_map(|u| (0..self.n).map(move |i| u.mul_var(i))).collect();
        MonomialSpace { n: self.n, degree: self.degree + 1, members }
    }

    /// Whether the members form an initial segment of `A_d` under lex.
    pub fn is_lexsegment(&self) -> bool {
        enumerate_degree(self.n, self.degree).iter().take(self.dim()).all(|m| self.members.contains(m))
    }
}

/// `Lex(V)` for any `V` of dimension `count`: the top `count` monomials.
pub fn lex_top(n: usize, d: u32, count: usize) -> Result<MonomialSpace> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    let available = slice_dim(n, d);
    if count > available {
        return Err(Error::CountExceedsSlice { count, degree: d, available });
    }
    let members = enumerate_degree(n, d).into_iter().take(count).collect();
    Ok(MonomialSpace { n, degree: d, members })
}

pub fn multiply_space(v: &MonomialSpace) -> MonomialSpace {
    v.multiply()
}

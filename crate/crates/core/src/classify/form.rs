use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::critical::{type_from_dimension, CriticalType};
use super::HilbertFunctionTable;

/// The decomposition `P(t) = sum_{j=1..s} C(t - a_j + n - j, n - j)` of a
/// Hilbert polynomial, `1 <= s <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GotzmannForm {
    ty: CriticalType,
}

/// Which hypothesis of Gotzmann's criticality criterion a form meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormCondition {
    /// `n - s >= 2`.
    SatisfiedI,
    /// `s = n - 1` and `a_{n-1} - a_1 <= 1`.
    SatisfiedII,
    NotSatisfied,
}

impl FormCondition {
    pub fn is_satisfied(self) -> bool {
        self != FormCondition::NotSatisfied
    }
}

impl fmt::Display for FormCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormCondition::SatisfiedI => "satisfied (i)",
            FormCondition::SatisfiedII => "satisfied (ii)",
            FormCondition::NotSatisfied => "not satisfied",
        })
    }
}

impl GotzmannForm {
    /// `None` unless `1 <= s <= n - 1`.
    pub fn new(ty: CriticalType) -> Option<Self> {
        (ty.len() < ty.n()).then_some(Self { ty })
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn entries(&self) -> &[u32] {
        self.ty.entries()
    }

    /// The critical type with the same entries.
    pub fn critical_type(&self) -> &CriticalType {
        &self.ty
    }

    /// `P(t)` evaluated as a polynomial, so `C(x, k)` is
    /// `x (x-1) ... (x-k+1) / k!` even for `x < k`.
    pub fn polynomial_value(&self, t: i64) -> BigInt {
        let n = self.n() as i64;
        self.entries()
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let k = n - 1 - i as i64;
                binom_poly(t - i64::from(a) + k, k as u32)
            })
            .sum()
    }

    pub fn conditions(&self) -> FormCondition {
        prop_a1_conditions(self)
    }
}

impl fmt::Display for GotzmannForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ty.fmt(f)
    }
}

/// The binomial polynomial `C(x, k)` at any integer `x`.
pub fn binom_poly(x: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    for i in 0..i64::from(k) {
        num *= x - i;
        den *= (i + 1) as u64;
    }
    num / BigInt::from(den)
}

/// Reads the form off the `(n-1)`-th Macaulay representations of `H(D-1)`
/// and `H(D)`; both must give the same type of length at most `n - 1`.
pub fn gotzmann_form(table: &HilbertFunctionTable) -> Option<GotzmannForm> {
    if table.len() < 2 || table.n() < 2 {
        return None;
    }
    let d = table.degree();
    let n = table.n();
    let at = |t: u32| type_from_dimension(&table.values()[t as usize], t, n);
    let last = at(d)?;
    let before = at(d - 1)?;
    if last != before {
        return None;
    }
    GotzmannForm::new(last)
}

pub fn prop_a1_conditions(form: &GotzmannForm) -> FormCondition {
    let n = form.n();
    let a: &[u32] = form.entries();
    let s = a.len();
    if n - s >= 2 {
        FormCondition::SatisfiedI
    } else if s == n - 1 && a[s - 1] - a[0] <= 1 {
        FormCondition::SatisfiedII
    } else {
        FormCondition::NotSatisfied
    }
}

/// Degrees `t <= D` where the table and the form's critical function differ.
pub fn critical_mismatches(form: &GotzmannForm, table: &HilbertFunctionTable) -> Vec<u32> {
    (0..table.len() as u32).filter(|&t| form.critical_type().value(t) != table.values()[t as usize]).collect()
}

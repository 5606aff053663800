//! Classification of Hilbert functions: critical functions and their types,
//! segmentwise critical functions, the Peeva-type growth condition and
//! Gotzmann forms of Hilbert polynomials.

mod critical;
mod form;
mod segmentwise;
mod table;

pub use critical::{
    bar_type, critical_value, detect_critical, rep_of_critical_value, type_from_dimension,
    universal_lex_of_type, CriticalType,
};
pub use form::{
    binom_poly, critical_mismatches, gotzmann_form, prop_a1_conditions, FormCondition, GotzmannForm,
};
pub use segmentwise::{detect_segmentwise, detect_segmentwise_with_cap, SegmentwiseSpec, DEFAULT_SEARCH_CAP};
pub use table::HilbertFunctionTable;

use crate::macaulay::{mg_growth, plus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeevaOutcome {
    Pass,
    /// First `k` with `H(k)^{MG(n-1)} < H(k+1)` and `H(k+2) > H(k+1)^+`.
    Fail {
        k: u32,
    },
}

impl PeevaOutcome {
    pub fn passed(self) -> bool {
        self == PeevaOutcome::Pass
    }
}

/// For `1 <= k <= D - 2`: whenever growth from `k` to `k + 1` is not
/// minimal, `H(k + 2) <= H(k + 1)^+` must hold.
pub fn peeva_check(table: &HilbertFunctionTable) -> PeevaOutcome {
    let n = table.n();
    if n < 2 {
        return PeevaOutcome::Pass;
    }
    let h = table.values();
    let d = (n - 1) as u32;
    for k in 1..h.len().saturating_sub(2) {
        if mg_growth(&h[k], d) < h[k + 1] && h[k + 2] > plus(&h[k + 1], n) {
            return PeevaOutcome::Fail { k: k as u32 };
        }
    }
    PeevaOutcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peeva_examples() {
        let h = HilbertFunctionTable::from_u64s(3, &[0, 0, 1, 10, 15, 21]).unwrap();
        assert_eq!(peeva_check(&h), PeevaOutcome::Fail { k: 1 });
        let h = CriticalType::new(3, vec![2, 2]).unwrap().table(6);
        assert_eq!(peeva_check(&h), PeevaOutcome::Pass);
        let h = HilbertFunctionTable::from_u64s(3, &[0; 6]).unwrap();
        assert_eq!(peeva_check(&h), PeevaOutcome::Pass);
    }
}

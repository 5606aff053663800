use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Macaulay representations are defined for positive integers only")]
    NonPositive,
    #[error("ambient dimension mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("at least one variable is required")]
    NoVariables,
    #[error("monomial of degree {found} in a space of degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("requested {count} monomials but degree {degree} has only {available}")]
    CountExceedsSlice { count: usize, degree: u32, available: usize },
    #[error("H({degree}) exceeds the dimension of the degree-{degree} component")]
    ValueExceedsSlice { degree: u32 },
    #[error("ideal is not stable")]
    NotStable,
    #[error("degree cap {cap} reached before the Hilbert function stabilized")]
    DegreeCap { cap: u32 },
    #[error("enumeration state cap {cap} exceeded")]
    StateCap { cap: usize },
    #[error("search cap {cap} exceeded")]
    SearchCap { cap: usize },
    #[error("invalid critical type: {0}")]
    InvalidType(&'static str),
    #[error("type {entries:?} has length {len} > {n} variables", len = entries.len())]
    TypeTooLong { entries: alloc::vec::Vec<u32>, n: usize },
    #[error("degenerate truncation: the lowered entry would be zero")]
    DegenerateBar,
    #[error("degree {degree} is below the last type entry {last}")]
    BelowLastEntry { degree: u32, last: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("factor f_{index} must be a nonzero polynomial in x_{index}, ..., x_n")]
    SupportViolation { index: usize },
    #[error("the last factor must have positive degree")]
    ConstantLastFactor,
    #[error("factor count {count} must lie in 1..={n}")]
    FactorCount { count: usize, n: usize },
}

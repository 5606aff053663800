//! Combinatorics of Gotzmann ideals in `K[x_1, ..., x_n]`.
//!
//! The crate covers Macaulay representations and minimal growth
//! ([`macaulay`]), monomials and lexsegment spaces ([`monomial`]), monomial
//! ideals with their Hilbert functions, lexification and saturation
//! ([`ideal`]), exact polynomial spans for canonical critical ideals
//! ([`polyspace`]) and the classification of Hilbert functions as critical,
//! segmentwise critical or Peeva-inflexible ([`classify`]).
//!
//! Everything is `no_std` with `alloc`; IO and file formats live in the
//! companion `gotzmann` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod classify;
mod error;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod polyspace;

pub use crate::{
    classify::{
        CriticalType, FormCondition, GotzmannForm, HilbertFunctionTable, PeevaOutcome, SegmentwiseSpec,
    },
    error::{Error, Result},
    ideal::{BettiTable, GotzmannReport, MonomialIdeal},
    macaulay::{binom, MacaulayRep},
    monomial::{Monomial, MonomialSpace},
    polyspace::{CanonicalCriticalSpec, Polynomial},
};

//! Exact polynomial spans over the rationals: sparse polynomials, canonical
//! critical ideals and graded dimensions `dim_K I_t` by exact elimination.

mod canonical;
mod polynomial;
mod rank;

pub use canonical::{
    build_canonical, redundant_generators, verify_canonical, CanonicalCriticalSpec, CanonicalIdeal,
    CanonicalReport,
};
pub use polynomial::{product, Polynomial};
pub use rank::{exact_rank, graded_dim, graded_dim_with, tail_ring_dim, RankMethod};

use alloc::vec::Vec;

/// Whether two homogeneous generating sets span the same degree-`t` space.
pub fn same_graded_piece(a: &[Polynomial], b: &[Polynomial], t: u32) -> bool {
    let mut both: Vec<Polynomial> = a.to_vec();
    both.extend_from_slice(b);
    let union = graded_dim(&both, t);
    union == graded_dim(a, t) && union == graded_dim(b, t)
}

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::polynomial::{product, Polynomial};
use super::rank::graded_dim;
use crate::classify::CriticalType;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Factors `f_1, ..., f_s` of a canonical critical ideal
/// `(f_1 x_1, f_1 f_2 x_2, ..., f_1 ... f_{s-1} x_{s-1}, f_1 ... f_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCriticalSpec {
    n: usize,
    factors: Vec<Polynomial>,
}

impl CanonicalCriticalSpec {
    /// Requires `1 <= s <= n`, each `f_i` nonzero, homogeneous and free of
    /// `x_1, ..., x_{i-1}`, and `deg f_s >= 1`.
    pub fn new(n: usize, factors: Vec<Polynomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        if factors.is_empty() || factors.len() > n {
            return Err(Error::FactorCount { count: factors.len(), n });
        }
        for (i, f) in factors.iter().enumerate() {
            if f.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: f.n() });
            }
            if f.is_zero() || !f.supported_from(i) {
                return Err(Error::SupportViolation { index: i + 1 });
            }
            if f.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        if factors.last().and_then(Polynomial::homogeneous_degree) == Some(0) {
            return Err(Error::ConstantLastFactor);
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn s(&self) -> usize {
        self.factors.len()
    }

    /// `a_i = deg(f_1 ... f_i x_i)` for `i < s` and `a_s = deg(f_1 ... f_s)`.
    pub fn critical_type(&self) -> CriticalType {
        let s = self.s();
        let mut total = 0;
        let entries = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                total += f.homogeneous_degree().expect("validated");
                if i + 1 < s {
                    total + 1
                } else {
                    total
                }
            })
            .collect();
        CriticalType::new(self.n, entries).expect("positive and weakly increasing")
    }
}

/// The generators of the canonical critical ideal and its critical type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalIdeal {
    pub gens: Vec<Polynomial>,
    pub critical_type: CriticalType,
}

pub fn build_canonical(spec: &CanonicalCriticalSpec) -> CanonicalIdeal {
    let n = spec.n;
    let s = spec.s();
    let gens = (0..s)
        .map(|i| {
            let head = product(n, &spec.factors[..=i]);
            if i + 1 < s {
                head.mul_monomial(&Monomial::var(n, i))
            } else {
                head
            }
        })
        .collect();
    CanonicalIdeal { gens, critical_type: spec.critical_type() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReport {
    pub critical_type: CriticalType,
    /// `dim_K I_t` for `0 <= t <= D`.
    pub dims: Vec<usize>,
    pub expected: Vec<BigUint>,
    pub first_discrepancy: Option<u32>,
    /// Indices of generators lying in the span of the others in their own
    /// degree (none for a minimal generating set).
    pub redundant: Vec<usize>,
}

impl CanonicalReport {
    pub fn passed(&self) -> bool {
        self.first_discrepancy.is_none() && self.redundant.is_empty()
    }
}

/// Compares `dim_K I_t` with the critical function of the expected type for
/// `t <= D`, and checks minimal generation: dropping any single generator
/// lowers the dimension in that generator's degree by one.
pub fn verify_canonical(spec: &CanonicalCriticalSpec, d: u32) -> CanonicalReport {
    let CanonicalIdeal { gens, critical_type } = build_canonical(spec);
    let dims: Vec<usize> = (0..=d).map(|t| graded_dim(&gens, t)).collect();
    let expected: Vec<BigUint> = (0..=d).map(|t| critical_type.value(t)).collect();
    let first_discrepancy = (0..=d).find(|&t| BigUint::from(dims[t as usize]) != expected[t as usize]);
    let redundant = redundant_generators(&gens);
    CanonicalReport { critical_type, dims, expected, first_discrepancy, redundant }
}

/// Generators `g` with `g` in the span of the other generators' multiples
/// in degree `deg g`.
pub fn redundant_generators(gens: &[Polynomial]) -> Vec<usize> {
    (0..gens.len())
        .filter(|&i| {
            let t = gens[i].homogeneous_degree().expect("homogeneous generators");
            let others: Vec<Polynomial> =
                gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            graded_dim(&others, t) == graded_dim(gens, t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::binom;
    use alloc::string::{String, ToString};

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    fn shown(c: &CanonicalIdeal) -> Vec<String> {
        c.gens.iter().map(ToString::to_string).collect()
    }

    fn j_prime() -> CanonicalCriticalSpec {
        CanonicalCriticalSpec::new(
            3,
            vec![poly(3, &[(1, &[1, 0, 0])]), poly(3, &[(1, &[0, 4, 1]), (1, &[0, 0, 5])])],
        )
        .unwrap()
    }

    fn j() -> CanonicalCriticalSpec {
        CanonicalCriticalSpec::new(
            3,
            vec![poly(3, &[(1, &[2, 0, 0])]), Polynomial::one(3), poly(3, &[(1, &[0, 0, 2])])],
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let c = build_canonical(&j_prime());
        assert_eq!(shown(&c), ["x1^2", "x1*x2^4*x3 + x1*x3^5"]);
        assert_eq!(c.critical_type.to_string(), "(2,6)");
        let c = build_canonical(&j());
        assert_eq!(shown(&c), ["x1^3", "x1^2*x2", "x1^2*x3^2"]);
        assert_eq!(c.critical_type.to_string(), "(3,3,4)");
        let spec = CanonicalCriticalSpec::new(2, vec![poly(2, &[(1, &[1, 0]), (1, &[0, 1])])]).unwrap();
        let c = build_canonical(&spec);
        assert_eq!(shown(&c), ["x1 + x2"]);
        assert_eq!(c.critical_type.to_string(), "(1)");
    }

    #[test]
    fn spec_validation() {
        let x1 = poly(3, &[(1, &[1, 0, 0])]);
        assert_eq!(
            CanonicalCriticalSpec::new(3, vec![x1.clone(), x1.clone()]),
            Err(Error::SupportViolation { index: 2 })
        );
        assert_eq!(
            CanonicalCriticalSpec::new(3, vec![x1.clone(), Polynomial::one(3)]),
            Err(Error::ConstantLastFactor)
        );
        assert_eq!(CanonicalCriticalSpec::new(3, vec![]), Err(Error::FactorCount { count: 0, n: 3 }));
        let mixed = poly(3, &[(1, &[0, 1, 0]), (1, &[0, 0, 2])]);
        assert_eq!(CanonicalCriticalSpec::new(3, vec![mixed]), Err(Error::NotHomogeneous));
    }

    #[test]
    fn verify_examples() {
        let r = verify_canonical(&j_prime(), 8);
        assert!(r.passed());
        assert_eq!((r.dims[2], r.dims[6], r.dims[7]), (1, 16, 23));
        let r = verify_canonical(&j(), 6);
        assert!(r.passed());
        assert_eq!((r.dims[4], r.dims[5]), (6, 10));
        let spec = CanonicalCriticalSpec::new(3, vec![poly(3, &[(1, &[1, 0, 0])])]).unwrap();
        let r = verify_canonical(&spec, 3);
        assert!(r.passed());
        for t in 0..=3 {
            assert_eq!(BigUint::from(r.dims[t as usize]), binom(t + 1, 2));
        }
    }

    #[test]
    fn redundancy_is_detected() {
        let gens = [poly(2, &[(1, &[1, 0])]), poly(2, &[(1, &[2, 0]), (1, &[1, 1])])];
        assert_eq!(redundant_generators(&gens), [1]);
    }
}

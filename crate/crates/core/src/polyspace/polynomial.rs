use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A sparse polynomial over the rationals; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Monomial::one(n))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: m.n() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Integer coefficients, handy in tests and examples.
    pub fn from_int_terms(n: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_terms(
            n,
            terms
                .iter()
                .map(|&(c, e)| (Monomial::new(e.to_vec()), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Whether no term involves `x_1, ..., x_i` (zero-based `i` excluded).
    pub fn supported_from(&self, i: usize) -> bool {
        self.terms.keys().all(|m| m.exponents()[..i].iter().all(|&e| e == 0))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(u, c)| (u * m, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(u, d)| (u.clone(), d * c)).collect() }
    }

    /// Terms in decreasing lex order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = Polynomial::zero(self.n);
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u * v, c * d);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.iter_desc().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The product of all factors, `1` for an empty list.
pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
    factors.into_iter().fold(Polynomial::one(n), |acc, f| &acc * f)
}

pub(crate) fn integer_row(p: &Polynomial) -> Vec<(Monomial, BigInt)> {
    let den = p.terms.values().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    p.terms
        .iter()
        .map(|(m, c)| (m.clone(), (c * BigRational::from_integer(den.clone())).to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    #[test]
    fn products() {
        let a = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&a * &b, poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(&a * &Polynomial::one(2), a);
        let f = poly(3, &[(1, &[0, 4, 0]), (1, &[0, 0, 4])]);
        let x3 = Polynomial::monomial(Monomial::var(3, 2));
        assert_eq!((&f * &x3).to_string(), "x2^4*x3 + x3^5");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.to_string(), "0");
        assert!(d.is_homogeneous());
        assert_eq!(d.homogeneous_degree(), None);
    }

    #[test]
    fn display() {
        let p = Polynomial::from_terms(
            3,
            [
                (Monomial::new(vec![2, 0, 0]), BigRational::one()),
                (Monomial::new(vec![0, 1, 1]), BigRational::new(BigInt::from(-1), BigInt::from(2))),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "x1^2 - 1/2*x2*x3");
        assert_eq!(poly(2, &[(-3, &[0, 0])]).to_string(), "-3");
        assert_eq!(poly(2, &[(-1, &[0, 1]), (2, &[1, 0])]).to_string(), "2*x1 - x2");
    }

    #[test]
    fn homogeneity_and_support() {
        let p = poly(3, &[(1, &[0, 2, 0]), (1, &[0, 1, 2])]);
        assert!(!p.is_homogeneous());
        let p = poly(3, &[(1, &[0, 2, 0]), (1, &[0, 1, 1])]);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!(p.supported_from(1));
        assert!(!p.supported_from(2));
    }

    #[test]
    fn integer_rows_clear_denominators() {
        let p = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![1, 0]), BigRational::new(BigInt::from(1), BigInt::from(2))),
                (Monomial::new(vec![0, 1]), BigRational::new(BigInt::from(1), BigInt::from(3))),
            ],
        )
        .unwrap();
        let row = integer_row(&p);
        assert_eq!(row[0].1, BigInt::from(2));
        assert_eq!(row[1].1, BigInt::from(3));
    }
}

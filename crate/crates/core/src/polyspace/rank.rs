use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::polynomial::{integer_row, Polynomial};
use crate::monomial::{enumerate_degree, Monomial};

/// How [`graded_dim_with`] computes ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankMethod {
    /// Fraction-free elimination over the integers.
    #[default]
    Exact,
    /// Elimination modulo a prime `p < 2^63`. Faster, but the rank can drop
    /// for unlucky primes; falls back to `Exact` when `p` divides a
    /// denominator.
    Modular(u64),
}

/// `dim_K I_t` for the ideal generated by homogeneous `gens`, exactly.
pub fn graded_dim(gens: &[Polynomial], t: u32) -> usize {
    graded_dim_with(gens, t, RankMethod::Exact)
}

pub fn graded_dim_with(gens: &[Polynomial], t: u32, method: RankMethod) -> usize {
    let rows = spanning_rows(gens, t);
    if let RankMethod::Modular(p) = method {
        if let Some(r) = modular_rank(&rows, p) {
            return r;
        }
    }
    exact_rank(rows)
}

/// Rows `m * g` for each generator `g` of degree at most `t` and each
/// monomial `m` of degree `t - deg g`, in generator order and then
/// decreasing lex order of `m`.
pub(crate) fn spanning_rows(gens: &[Polynomial], t: u32) -> Vec<Polynomial> {
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.homogeneous_degree() else {
            continue;
        };
        if e > t {
            continue;
        }
        for m in enumerate_degree(g.n(), t - e) {
            rows.push(g.mul_monomial(&m));
        }
    }
    rows
}

type SparseRow = Vec<(usize, BigInt)>;

/// Columns are monomials of degree `t` in decreasing lex order.
fn column_index(rows: &[Polynomial]) -> BTreeMap<Monomial, usize> {
    let Some(first) = rows.first() else {
        return BTreeMap::new();
    };
    let t = first.terms().keys().next().map_or(0, Monomial::degree);
    enumerate_degree(first.n(), t).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Rank by incremental row echelon form: each new row is reduced against
/// the stored pivots in fraction-free steps and divided by its content.
pub fn exact_rank(rows: Vec<Polynomial>) -> usize {
    let columns = column_index(&rows);
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for p in rows {
        let mut row: SparseRow = integer_row(&p).into_iter().map(|(m, c)| (columns[&m], c)).collect();
        row.sort_by_key(|&(c, _)| c);
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    row = eliminate(&row, pivot);
                    normalize(&mut row);
                }
                None => {
                    normalize(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `p_lead * row - r_lead * pivot`, which clears the shared leading column.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let (r, p) = (&row[0].1, &pivot[0].1);
    let g = r.gcd(p);
    let (a, b) = (p / &g, r / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = pivot.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, &a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &a * &row[i - 1].1 - &b * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let content = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, c) in row.iter_mut() {
        *c /= &content;
    }
}

fn modular_rank(rows: &[Polynomial], p: u64) -> Option<usize> {
    let columns = column_index(rows);
    let modulus = BigInt::from(p);
    let to_mod = |c: &num_rational::BigRational| -> Option<u64> {
        let num = c.numer().mod_floor(&modulus).to_u64()?;
        let den = c.denom().mod_floor(&modulus).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(mul_mod(num, inv_mod(den, p), p))
    };
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for poly in rows {
        let mut row = Vec::with_capacity(poly.terms().len());
        for (m, c) in poly.terms() {
            let v = to_mod(c)?;
            if v != 0 {
                row.push((columns[m], v));
            }
        }
        row.sort_by_key(|&(c, _)| c);
        while let Some(&(lead, lv)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                let inv = inv_mod(lv, p);
                for (_, v) in row.iter_mut() {
                    *v = mul_mod(*v, inv, p);
                }
                pivots.insert(lead, row);
                break;
            };
            // pivot rows are monic, so subtract lv times the pivot
            let mut acc: BTreeMap<usize, u64> = row.iter().copied().collect();
            for &(c, v) in pivot {
                let e = acc.entry(c).or_insert(0);
                *e = (*e + p - mul_mod(lv, v, p)) % p;
            }
            row = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
    }
    Some(pivots.len())
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat inversion; p is assumed prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

/// `dim K[x_j, ..., x_n]_d` with `j` zero-based, under the binomial
/// convention (zero for negative `d`).
pub fn tail_ring_dim(n: usize, j: usize, d: i64) -> BigUint {
    crate::macaulay::binom(d + (n - j) as i64 - 1, (n - j - 1) as u32)
}

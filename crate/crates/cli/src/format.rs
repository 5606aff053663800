//! Text formats shared by every verb.
//!
//! Ideals and factor lists start with an `n=<int>` header followed by
//! generators, one per line or separated by commas, optionally wrapped in
//! parentheses. Tables take the same header and then either `H(t)=v` lines
//! or a comma list of values. Lines starting with `#` are comments.

use std::str::FromStr;

use gotzmann_core::{HilbertFunctionTable, Monomial, MonomialIdeal, Polynomial};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::CliError;

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

/// `x1^2*x3` in `n = 3` variables; `1` is the constant monomial.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial, CliError> {
    parse_monomial_at(text, n, 0)
}

fn parse_monomial_at(text: &str, n: usize, line: usize) -> Result<Monomial, CliError> {
    let text = text.trim();
    let mut exps = vec![0u32; n];
    if text == "1" {
        return Ok(Monomial::new(exps));
    }
    if text.is_empty() {
        return Err(parse_err(line, "empty monomial"));
    }
    for factor in text.split('*') {
        let (i, e) = parse_factor(factor.trim(), n, line)?;
        exps[i] += e;
    }
    Ok(Monomial::new(exps))
}

/// `x<i>` or `x<i>^<e>`, giving the zero-based index and the exponent.
fn parse_factor(factor: &str, n: usize, line: usize) -> Result<(usize, u32), CliError> {
    let body = factor
        .strip_prefix('x')
        .ok_or_else(|| parse_err(line, format!("expected a variable x<i>, found `{factor}`")))?;
    let (index, exp) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    let i: usize = index.parse().map_err(|_| parse_err(line, format!("malformed variable `{factor}`")))?;
    if i == 0 || i > n {
        return Err(parse_err(line, format!("variable x{i} outside x1..x{n}")));
    }
    let e = match exp {
        None => 1,
        Some(e) => e.parse().map_err(|_| parse_err(line, format!("malformed exponent in `{factor}`")))?,
    };
    Ok((i - 1, e))
}

/// Signed sum of `<coef>*<monomial>` terms, e.g. `x1^2 - 1/2*x2*x3`.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial, CliError> {
    parse_polynomial_at(text, n, 0)
}

fn parse_polynomial_at(text: &str, n: usize, line: usize) -> Result<Polynomial, CliError> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(parse_err(line, "empty polynomial"));
    }
    if text == "0" {
        return Ok(Polynomial::zero(n));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = text.as_bytes();
    for end in 1..=bytes.len() {
        if end == bytes.len() || matches!(bytes[end], b'+' | b'-') && bytes[end - 1] != b'^' {
            terms.push(parse_term(&text[start..end], n, line)?);
            start = end;
        }
    }
    Polynomial::from_terms(n, terms).map_err(|e| parse_err(line, e.to_string()))
}

fn parse_term(text: &str, n: usize, line: usize) -> Result<(Monomial, BigRational), CliError> {
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    if body.is_empty() {
        return Err(parse_err(line, format!("dangling sign in `{text}`")));
    }
    let mut coef = BigRational::from_integer(BigInt::from(1));
    let mut exps = vec![0u32; n];
    for factor in body.split('*') {
        if factor.starts_with('x') {
            let (i, e) = parse_factor(factor, n, line)?;
            exps[i] += e;
        } else {
            let c = BigRational::from_str(factor)
                .map_err(|_| parse_err(line, format!("malformed coefficient `{factor}`")))?;
            coef *= c;
        }
    }
    if negative {
        coef = -coef;
    }
    Ok((Monomial::new(exps), coef))
}

/// Non-comment lines with their one-based line numbers.
type Lines<'a> = Vec<(usize, &'a str)>;

/// Splits off the `n=<int>` header, returning `n` and the remaining lines.
fn header(text: &str) -> Result<(usize, Lines<'_>), CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or_else(|| parse_err(1, "missing `n=<int>` header"))?;
    let n = first
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(line, format!("expected `n=<positive int>`, found `{first}`")))?;
    Ok((n, lines.collect()))
}

/// Items separated by newlines or commas, with one optional layer of
/// parentheses around each line.
fn items<'a>(lines: Lines<'a>) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    lines
        .into_iter()
        .flat_map(|(line, l)| {
            let l = l.strip_prefix('(').unwrap_or(l);
            let l = l.strip_suffix(')').unwrap_or(l);
            l.split(',').map(move |s| (line, s.trim()))
        })
        .filter(|(_, s)| !s.is_empty())
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, CliError> {
    let (n, lines) = header(text)?;
    let gens = items(lines).map(|(line, s)| parse_monomial_at(s, n, line)).collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::new(n, gens).map_err(|e| parse_err(0, e.to_string()))
}

/// Factors `f_1, ..., f_s` of a canonical critical ideal, one per line.
pub fn parse_factors(text: &str) -> Result<(usize, Vec<Polynomial>), CliError> {
    let (n, lines) = header(text)?;
    let factors =
        lines.iter().map(|&(line, l)| parse_polynomial_at(l, n, line)).collect::<Result<Vec<_>, _>>()?;
    Ok((n, factors))
}

pub fn parse_table(text: &str) -> Result<HilbertFunctionTable, CliError> {
    let (n, lines) = header(text)?;
    let mut values: Vec<BigUint> = Vec::new();
    for (line, item) in items(lines) {
        let value = match item.strip_prefix("H(") {
            Some(rest) => {
                let (t, v) = rest
                    .split_once(")=")
                    .ok_or_else(|| parse_err(line, format!("expected `H(t)=v`, found `{item}`")))?;
                let t: usize =
                    t.trim().parse().map_err(|_| parse_err(line, format!("malformed degree `{t}`")))?;
                if t != values.len() {
                    return Err(parse_err(line, format!("expected H({}), found H({t})", values.len())));
                }
                v
            }
            None => item,
        };
        let v = BigUint::from_str(value.trim())
            .map_err(|_| parse_err(line, format!("malformed value `{value}`")))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(parse_err(0, "empty table"));
    }
    HilbertFunctionTable::new(n, values).map_err(|e| parse_err(0, e.to_string()))
}

/// `(v0,v1,...)`.
pub fn table_values(table: &HilbertFunctionTable) -> String {
    let values: Vec<String> = table.values().iter().map(ToString::to_string).collect();
    format!("({})", values.join(","))
}

/// The ideal in the input format accepted by [`parse_ideal`].
pub fn ideal_file(ideal: &MonomialIdeal) -> String {
    format!("n={}\n{ideal}\n", ideal.n())
}

/// The table in the input format accepted by [`parse_table`].
pub fn table_file(table: &HilbertFunctionTable) -> String {
    let mut out = format!("n={}\n", table.n());
    for (t, v) in table.values().iter().enumerate() {
        out.push_str(&format!("H({t})={v}\n"));
    }
    out
}

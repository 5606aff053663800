//! Command-line front end for `gotzmann-core`: text formats, verb dispatch
//! and reports in text or JSON.

pub mod error;
pub mod format;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gotzmann_core::classify::{
    critical_mismatches, detect_critical, detect_segmentwise_with_cap, gotzmann_form, peeva_check,
    DEFAULT_SEARCH_CAP,
};
use gotzmann_core::ideal::{enumerate_ideals_with_hf, lexify, DEFAULT_DEGREE_CAP, DEFAULT_STATE_CAP};
use gotzmann_core::macaulay::{macaulay_rep, mg_growth, plus, shrink};
use gotzmann_core::polyspace::{build_canonical, verify_canonical};
use gotzmann_core::{CanonicalCriticalSpec, CriticalType, HilbertFunctionTable, MonomialIdeal, PeevaOutcome};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "gotzmann",
    version,
    about = "Gotzmann ideals, lexification and Hilbert function classification"
)]
pub struct Cli {
    /// Print a JSON report `{verb, input, degree, result}` instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file; standard input when omitted.
    pub input: Option<PathBuf>,
    /// Degree bound D. Defaults to the largest generator degree plus n + 2
    /// for ideals and to the last degree of a table.
    #[arg(long)]
    pub degree: Option<u32>,
    /// Budget for the verb's search: the degree cap for lexify and gotzmann,
    /// the state cap for enumerate, the candidate-type cap for classify.
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Hilbert function H(0..=D) of the ideal.
    Hilbert(Common),
    /// The lexsegment ideal with the same Hilbert function.
    Lexify(Common),
    /// Compare |G(I)| with |G(I^lex)| and check saturation.
    Gotzmann(Common),
    /// Eliahou-Kervaire graded Betti numbers of a stable ideal.
    Betti(Common),
    /// The saturation I : m^infinity.
    Saturate(Common),
    /// Critical, segmentwise critical and Peeva-type checks.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Read a Hilbert function table instead of an ideal.
        #[arg(long)]
        table: bool,
    },
    /// Verify the canonical critical ideal built from factors f_1, ..., f_s.
    Canonical(Common),
    /// Macaulay representation arithmetic.
    Macaulay {
        #[command(subcommand)]
        op: MacaulayOp,
    },
    /// All monomial ideals generated in degrees <= D with the given table.
    Enumerate(Common),
    /// A variable permutation making the ideal lexsegment.
    TrivialGotzmann(Common),
    /// Gotzmann form of the Hilbert polynomial and its critical conditions.
    GotzmannForm {
        #[command(flatten)]
        common: Common,
        /// Read a Hilbert function table instead of an ideal.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum MacaulayOp {
    /// The d-th Macaulay representation of a.
    Rep { a: BigUint, d: u32 },
    /// a^<d>, the minimal growth.
    Growth { a: BigUint, d: u32 },
    /// a_<d>, the inverse of minimal growth.
    Shrink { a: BigUint, d: u32 },
    /// a^+ for n variables.
    Plus { a: BigUint, n: usize },
}

/// Outcome of one verb: the JSON fields plus the text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub verb: &'static str,
    pub input: Value,
    /// Degree bound the result is certified up to; null for verbs without one.
    pub degree: Option<u32>,
    pub result: Value,
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "verb": self.verb,
            "input": self.input,
            "degree": self.degree,
            "result": self.result,
        })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values")
        } else {
            self.text.clone()
        }
    }
}

/// Runs `verb`, reading input from its file or else from `stdin`.
pub fn run(verb: &Verb, stdin: impl Read) -> Result<Report, CliError> {
    match verb {
        Verb::Hilbert(c) => hilbert(c, &read_ideal(c, stdin)?),
        Verb::Lexify(c) => lexify_verb(c, &read_ideal(c, stdin)?),
        Verb::Gotzmann(c) => gotzmann(c, &read_ideal(c, stdin)?),
        Verb::Betti(c) => betti(&read_ideal(c, stdin)?),
        Verb::Saturate(c) => saturate(&read_ideal(c, stdin)?),
        Verb::Classify { common, table } => {
            let (input, h) = read_table_or_ideal(common, *table, stdin)?;
            classify(common, input, &h)
        }
        Verb::Canonical(c) => canonical(c, &read_input(c, stdin)?),
        Verb::Macaulay { op } => macaulay(op),
        Verb::Enumerate(c) => {
            let h = format::parse_table(&read_input(c, stdin)?)?;
            enumerate(c, &h)
        }
        Verb::TrivialGotzmann(c) => trivial_gotzmann(&read_ideal(c, stdin)?),
        Verb::GotzmannForm { common, table } => {
            let (input, h) = read_table_or_ideal(common, *table, stdin)?;
            form_verb(input, &h)
        }
    }
}

fn read_input(common: &Common, mut stdin: impl Read) -> Result<String, CliError> {
    match &common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(text)
        }
    }
}

fn read_ideal(common: &Common, stdin: impl Read) -> Result<MonomialIdeal, CliError> {
    format::parse_ideal(&read_input(common, stdin)?)
}

/// The table to classify with its JSON echo: read directly, or the Hilbert
/// function of an ideal up to the degree bound.
fn read_table_or_ideal(
    common: &Common,
    is_table: bool,
    stdin: impl Read,
) -> Result<(Value, HilbertFunctionTable), CliError> {
    let text = read_input(common, stdin)?;
    if is_table {
        let h = format::parse_table(&text)?;
        let h = match common.degree {
            Some(d) => h.truncated(d)?,
            None => h,
        };
        Ok((table_json(&h), h))
    } else {
        let ideal = format::parse_ideal(&text)?;
        let h = ideal.hilbert(degree_bound(common, &ideal));
        Ok((ideal_json(&ideal), h))
    }
}

pub fn default_degree(ideal: &MonomialIdeal) -> u32 {
    ideal.max_degree().unwrap_or(0) + ideal.n() as u32 + 2
}

fn degree_bound(common: &Common, ideal: &MonomialIdeal) -> u32 {
    common.degree.unwrap_or_else(|| default_degree(ideal))
}

fn degree_cap(common: &Common) -> u32 {
    common.cap.map_or(DEFAULT_DEGREE_CAP, |c| u32::try_from(c).unwrap_or(u32::MAX))
}

fn usize_cap(common: &Common, default: usize) -> usize {
    common.cap.map_or(default, |c| usize::try_from(c).unwrap_or(usize::MAX))
}

/// Integers that fit in 64 bits as JSON numbers, larger ones as strings.
fn big_json(v: &BigUint) -> Value {
    u64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from)
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "n": ideal.n(),
        "gens": ideal.gens().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
        "text": ideal.to_string(),
    })
}

fn table_json(h: &HilbertFunctionTable) -> Value {
    json!({
        "n": h.n(),
        "values": h.values().iter().map(big_json).collect::<Vec<_>>(),
        "tail_certified": h.tail_certified(),
    })
}

fn type_json(ty: &CriticalType) -> Value {
    json!(ty.entries())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hilbert(common: &Common, ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let d = degree_bound(common, ideal);
    let h = ideal.hilbert(d);
    let text = format!("H = {}\ntail certified: {}\n", format::table_values(&h), yes_no(h.tail_certified()));
    Ok(Report { verb: "hilbert", input: ideal_json(ideal), degree: Some(d), result: table_json(&h), text })
}

fn lexify_verb(common: &Common, ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let lex = lexify(ideal, degree_cap(common))?;
    let d = lex.stop_degree + 1;
    let text =
        format!("I^lex = {}\ngenerators: {}\ncertification degree: {d}\n", lex.ideal, lex.ideal.num_gens());
    let result = json!({
        "lex": ideal_json(&lex.ideal),
        "num_gens": lex.ideal.num_gens(),
        "stop_degree": lex.stop_degree,
    });
    Ok(Report { verb: "lexify", input: ideal_json(ideal), degree: Some(d), result, text })
}

fn gotzmann(common: &Common, ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let report = ideal.is_gotzmann(degree_cap(common))?;
    let sat = ideal.saturate();
    let saturated = sat == *ideal;
    let slice = report.first_non_gotzmann_slice.map_or("none".to_string(), |k| k.to_string());
    let text = format!(
        "gotzmann: {}\n|G(I)| = {} by degree {:?}\n|G(I^lex)| = {} by degree {:?}\nI^lex = {}\n\
         first non-Gotzmann slice: {slice}\nsaturated: {}\nI^sat = {sat}\ncertification degree: {}\n",
        report.is_gotzmann,
        ideal.num_gens(),
        report.gens_by_degree,
        report.lex.num_gens(),
        report.lex_gens_by_degree,
        report.lex,
        yes_no(saturated),
        report.certification_degree,
    );
    let result = json!({
        "is_gotzmann": report.is_gotzmann,
        "num_gens": ideal.num_gens(),
        "lex_num_gens": report.lex.num_gens(),
        "gens_by_degree": report.gens_by_degree,
        "lex_gens_by_degree": report.lex_gens_by_degree,
        "lex": ideal_json(&report.lex),
        "first_non_gotzmann_slice": report.first_non_gotzmann_slice,
        "saturated": saturated,
        "saturation": ideal_json(&sat),
    });
    Ok(Report {
        verb: "gotzmann",
        input: ideal_json(ideal),
        degree: Some(report.certification_degree),
        result,
        text,
    })
}

fn betti(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let table = ideal.ek_betti()?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for ((i, j), v) in &table.entries {
        text.push_str(&format!("beta_{{{i},{j}}} = {v}\n"));
        entries.push(json!({ "i": i, "j": j, "value": big_json(v) }));
    }
    let totals = table.totals();
    let shown: Vec<String> = totals.iter().map(ToString::to_string).collect();
    text.push_str(&format!("totals: ({})\n", shown.join(", ")));
    let result = json!({
        "entries": entries,
        "totals": totals.iter().map(big_json).collect::<Vec<_>>(),
    });
    Ok(Report { verb: "betti", input: ideal_json(ideal), degree: None, result, text })
}

fn saturate(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let sat = ideal.saturate();
    let text = format!("I^sat = {sat}\nsaturated: {}\n", yes_no(sat == *ideal));
    let result = json!({ "saturation": ideal_json(&sat), "saturated": sat == *ideal });
    Ok(Report { verb: "saturate", input: ideal_json(ideal), degree: None, result, text })
}

fn classify(common: &Common, input: Value, h: &HilbertFunctionTable) -> Result<Report, CliError> {
    let critical = detect_critical(h);
    let segmentwise = detect_segmentwise_with_cap(h, usize_cap(common, DEFAULT_SEARCH_CAP))?;
    let peeva = peeva_check(h);
    let mut text = match (&critical, &segmentwise) {
        (Some(ty), _) => format!("critical; type {ty}\n"),
        (None, Some(spec)) => format!("segmentwise critical; {spec}\n"),
        (None, None) => "not segmentwise critical\n".to_string(),
    };
    text.push_str(&match peeva {
        PeevaOutcome::Pass => "peeva condition: pass\n".to_string(),
        PeevaOutcome::Fail { k } => format!("peeva condition: fails at k={k}\n"),
    });
    text.push_str(&format!(
        "H = {}\ntail certified: {}\n",
        format::table_values(h),
        yes_no(h.tail_certified())
    ));
    let result = json!({
        "critical": critical.as_ref().map(type_json),
        "critical_certified": critical.as_ref().map(|ty| ty.is_certified_by(h)),
        "segmentwise": segmentwise.as_ref().map(|s| json!({
            "breakpoints": s.breakpoints,
            "types": s.segment_types.iter().map(type_json).collect::<Vec<_>>(),
            "tail_certified": s.tail_certified,
        })),
        "peeva": match peeva {
            PeevaOutcome::Pass => json!({ "passed": true }),
            PeevaOutcome::Fail { k } => json!({ "passed": false, "k": k }),
        },
        "table": table_json(h),
    });
    Ok(Report { verb: "classify", input, degree: Some(h.degree()), result, text })
}

fn canonical(common: &Common, text: &str) -> Result<Report, CliError> {
    let (n, factors) = format::parse_factors(text)?;
    let spec = CanonicalCriticalSpec::new(n, factors)?;
    let ty = spec.critical_type();
    let d = common.degree.unwrap_or(ty.last() + 2);
    let gens = build_canonical(&spec).gens;
    let report = verify_canonical(&spec, d);
    let dims: Vec<String> = report.dims.iter().map(ToString::to_string).collect();
    let expected: Vec<String> = report.expected.iter().map(ToString::to_string).collect();
    let mut out = format!("type {ty}\n");
    for (i, g) in gens.iter().enumerate() {
        out.push_str(&format!("g{} = {g}\n", i + 1));
    }
    out.push_str(&format!(
        "dims     ({})\nexpected ({})\nminimal generators: {}\nresult: {}\n",
        dims.join(","),
        expected.join(","),
        yes_no(report.redundant.is_empty()),
        if report.passed() { "pass" } else { "fail" },
    ));
    let input = json!({
        "n": n,
        "factors": spec.factors().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    let result = json!({
        "type": type_json(&ty),
        "generators": gens.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "dims": report.dims,
        "expected": report.expected.iter().map(big_json).collect::<Vec<_>>(),
        "first_discrepancy": report.first_discrepancy,
        "redundant": report.redundant,
        "passed": report.passed(),
    });
    Ok(Report { verb: "canonical", input, degree: Some(d), result, text: out })
}

fn macaulay(op: &MacaulayOp) -> Result<Report, CliError> {
    let (input, value, text) = match op {
        MacaulayOp::Rep { a, d } => {
            let rep = macaulay_rep(a, *d)?;
            let terms: Vec<Value> = rep
                .terms()
                .iter()
                .map(|t| json!({ "top": t.offset + u64::from(t.index), "index": t.index }))
                .collect();
            (json!({ "op": "rep", "a": big_json(a), "d": d }), json!(terms), rep.to_string())
        }
        MacaulayOp::Growth { a, d } => {
            let v = mg_growth(a, *d);
            (json!({ "op": "growth", "a": big_json(a), "d": d }), big_json(&v), v.to_string())
        }
        MacaulayOp::Shrink { a, d } => {
            let v = shrink(a, *d);
            (json!({ "op": "shrink", "a": big_json(a), "d": d }), big_json(&v), v.to_string())
        }
        MacaulayOp::Plus { a, n } => {
            if *n < 2 {
                return Err(CliError::Parse { line: 0, message: "a^+ needs n >= 2".into() });
            }
            let v = plus(a, *n);
            (json!({ "op": "plus", "a": big_json(a), "n": n }), big_json(&v), v.to_string())
        }
    };
    Ok(Report { verb: "macaulay", input, degree: None, result: value, text: text + "\n" })
}

fn enumerate(common: &Common, h: &HilbertFunctionTable) -> Result<Report, CliError> {
    let d = common.degree.unwrap_or(h.degree()).min(h.degree());
    let ideals = enumerate_ideals_with_hf(h, d, usize_cap(common, DEFAULT_STATE_CAP))?;
    let mut text = format!("{} ideals\n", ideals.len());
    let mut rows = Vec::new();
    let mut all = true;
    for ideal in &ideals {
        let is_gotzmann = ideal.is_gotzmann(DEFAULT_DEGREE_CAP)?.is_gotzmann;
        all &= is_gotzmann;
        text.push_str(&format!("{ideal}  gotzmann: {is_gotzmann}\n"));
        rows.push(json!({ "ideal": ideal_json(ideal), "is_gotzmann": is_gotzmann }));
    }
    text.push_str(&format!("all gotzmann: {all}\n"));
    let result = json!({ "ideals": rows, "count": ideals.len(), "all_gotzmann": all });
    Ok(Report { verb: "enumerate", input: table_json(h), degree: Some(d), result, text })
}

fn trivial_gotzmann(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let perm = ideal.is_trivially_gotzmann();
    let text = match &perm {
        Some(p) => {
            let maps: Vec<String> =
                p.iter().enumerate().map(|(i, &j)| format!("x{} -> x{}", i + 1, j + 1)).collect();
            format!("trivially gotzmann: {}\n", maps.join(", "))
        }
        None => "trivially gotzmann: none\n".to_string(),
    };
    let result = json!({
        "permutation": perm.as_ref().map(|p| p.iter().map(|&j| j + 1).collect::<Vec<_>>()),
    });
    Ok(Report { verb: "trivial-gotzmann", input: ideal_json(ideal), degree: None, result, text })
}

fn form_verb(input: Value, h: &HilbertFunctionTable) -> Result<Report, CliError> {
    let form = gotzmann_form(h);
    let (text, result) = match &form {
        Some(form) => {
            let condition = form.conditions();
            let mismatches = critical_mismatches(form, h);
            let text =
                format!("gotzmann form {form}; {condition}\ncritical function mismatches: {mismatches:?}\n");
            let result = json!({
                "form": type_json(form.critical_type()),
                "condition": condition.to_string(),
                "mismatches": mismatches,
            });
            (text, result)
        }
        None => ("gotzmann form: none\n".to_string(), json!({ "form": null })),
    };
    Ok(Report { verb: "gotzmann-form", input, degree: Some(h.degree()), result, text })
}

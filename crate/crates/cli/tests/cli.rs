use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use gotzmann::format::{parse_ideal, parse_monomial, parse_table};
use gotzmann::{run, Cli, Report};
use gotzmann_core::ideal::is_gotzmann_space;
use gotzmann_core::macaulay::mg_growth;
use gotzmann_core::monomial::lex_top;
use num_bigint::BigUint;

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    path.display().to_string()
}

fn report(args: &[&str], stdin: &str) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("gotzmann").chain(args.iter().copied())).unwrap();
    run(&cli.verb, stdin.as_bytes()).unwrap()
}

fn binary(args: &[&str], stdin: &str) -> (i32, String, String) {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_gotzmann"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn macaulay_growth_of_seven() {
    assert_eq!(report(&["macaulay", "growth", "7", "2"], "").text.trim(), "12");
    assert_eq!(report(&["macaulay", "shrink", "12", "2"], "").text.trim(), "7");
    assert_eq!(report(&["macaulay", "rep", "7", "2"], "").text.trim(), "C(4,2) + C(1,1)");
}

#[test]
fn classify_segmentwise_table() {
    let r = report(&["classify", "--table", &data("segmentwise.txt")], "");
    assert_eq!(
        r.text.lines().next().unwrap(),
        "segmentwise critical; breakpoints [5]; types [(3,3,4),(2,6)]"
    );
    assert_eq!(r.degree, Some(8));
    assert_eq!(r.result["segmentwise"]["breakpoints"], serde_json::json!([5]));
}

#[test]
fn saturate_example_ideal() {
    let r = report(&["saturate", &data("gotzmann_not_critical.txt")], "");
    assert_eq!(r.text.lines().next().unwrap(), "I^sat = (x1^2, x1*x2, x2^2)");
    assert_eq!(r.result["saturated"], false);
}

/// The generator counts come from the lexify pipeline. They are checked
/// against an independent argument first: `I` is generated in degree 3 and
/// `I_3` is a Gotzmann space, so `I^lex` is generated by the 7-element
/// lexsegment of degree 3 and no generators appear later.
#[test]
fn gotzmann_example_counts() {
    let ideal = parse_ideal(&std::fs::read_to_string(data("gotzmann_not_critical.txt")).unwrap()).unwrap();
    let slice = ideal.slice(3);
    assert_eq!(slice.dim(), 7);
    assert_eq!(BigUint::from(slice.multiply().dim()), mg_growth(&BigUint::from(7u32), 2));
    assert!(is_gotzmann_space(&slice));
    let expected_lex: Vec<_> = lex_top(3, 3, 7).unwrap().members().iter().cloned().collect();

    let r = report(&["gotzmann", &data("gotzmann_not_critical.txt")], "");
    assert_eq!(r.result["is_gotzmann"], true);
    assert_eq!(r.result["num_gens"], 7);
    assert_eq!(r.result["lex_num_gens"], 7);
    let lex = parse_ideal(&format!("n=3\n{}", r.result["lex"]["text"].as_str().unwrap())).unwrap();
    let mut gens = lex.gens().to_vec();
    gens.sort();
    assert_eq!(gens, expected_lex);
    assert_eq!(r.result["saturated"], false);
    assert_eq!(r.result["saturation"]["text"], "(x1^2, x1*x2, x2^2)");
    assert!(r.text.contains("|G(I)| = 7"));
    assert!(r.text.contains("|G(I^lex)| = 7"));
}

#[test]
fn saturation_of_example_is_not_gotzmann() {
    let r = report(&["gotzmann"], "n=3\n(x1^2, x1*x2, x2^2)\n");
    assert_eq!(r.result["is_gotzmann"], false);
    assert_eq!(r.result["num_gens"], 3);
    assert_eq!(r.result["lex_num_gens"], 4);
}

#[test]
fn canonical_from_file() {
    let r = report(&["canonical", &data("canonical.txt")], "");
    assert_eq!(r.result["type"], serde_json::json!([2, 5]));
    assert_eq!(r.result["passed"], true);
    assert_eq!(r.degree, Some(7));
}

#[test]
fn json_schema_is_shared_by_all_verbs() {
    let ex = data("gotzmann_not_critical.txt");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["hilbert", &ex], ""),
        (vec!["lexify", &ex], ""),
        (vec!["gotzmann", &ex], ""),
        (vec!["betti"], "n=2\nx1^2\nx1*x2\nx2^2\n"),
        (vec!["saturate", &ex], ""),
        (vec!["classify", &ex], ""),
        (vec!["canonical"], "n=2\nx1\nx2\n"),
        (vec!["macaulay", "plus", "7", "3"], ""),
        (vec!["enumerate"], "n=2\n0,0,1,3,4\n"),
        (vec!["trivial-gotzmann", &ex], ""),
        (vec!["gotzmann-form", "--table"], "n=3\n0,1,3,6,10,15,21\n"),
    ];
    for (args, stdin) in cases {
        let v = report(&args, stdin).to_json();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["degree", "input", "result", "verb"], "{args:?}");
        assert_eq!(v["verb"], args[0]);
    }
}

#[test]
fn printed_ideals_and_tables_round_trip() {
    let ex = data("gotzmann_not_critical.txt");
    let lex = report(&["lexify", &ex], "");
    let text = lex.text.lines().next().unwrap().strip_prefix("I^lex = ").unwrap();
    let reparsed = parse_ideal(&format!("n=3\n{text}")).unwrap();
    assert_eq!(reparsed.to_string(), text);
    assert_eq!(reparsed.num_gens(), 7);

    let h = report(&["hilbert", &ex], "");
    let values = h.text.lines().next().unwrap().strip_prefix("H = ").unwrap();
    let table = parse_table(&format!("n=3\n{values}")).unwrap();
    assert_eq!(table.degree(), 3 + 3 + 2);
    assert_eq!(gotzmann::format::table_values(&table), values);
}

#[test]
fn monomial_syntax() {
    assert_eq!(parse_monomial("x1^2*x3", 3).unwrap().exponents(), [2, 0, 1]);
    assert_eq!(parse_monomial("1", 2).unwrap().exponents(), [0, 0]);
    assert!(parse_monomial("x4", 3).is_err());
}

#[test]
fn exit_codes() {
    let (code, out, _) = binary(&["macaulay", "growth", "7", "2"], "");
    assert_eq!((code, out.as_str()), (0, "12\n"));
    let (code, out, _) = binary(&["gotzmann", "--json"], "n=3\n(x1^2, x1*x2, x2^2)\n");
    assert_eq!(code, 0, "a negative answer is still a successful analysis");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["is_gotzmann"], false);
    assert_eq!(v["degree"], 4);
    let (code, _, err) = binary(&["hilbert"], "n=3\nx4\n");
    assert_eq!(code, 2);
    assert!(err.contains("x4"));
    let (code, _, _) = binary(&["hilbert", "/nonexistent/ideal.txt"], "");
    assert_eq!(code, 2);
    let (code, _, err) = binary(&["enumerate", "--cap", "3"], "n=3\n0,0,2,10\n");
    assert_eq!(code, 1);
    assert!(err.contains("cap 3"));
    let (code, _, _) = binary(&["betti"], "n=2\nx2^2\n");
    assert_eq!(code, 1);
}

use std::process::{Command, Output};

use serde_json::Value;

fn ccc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccc")).args(args).output().expect("spawn ccc")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = ccc(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn energy_row<'a>(text: &'a str, name: &str) -> Vec<&'a str> {
    text.lines()
        .find(|l| l.split_whitespace().next() == Some(name))
        .unwrap_or_else(|| panic!("no {name} row in\n{text}"))
        .split_whitespace()
        .collect()
}

#[test]
fn dihedral_adjacency_spectrum() {
    let text = ok(&["spectra", "--family", "d2n", "--n", "5", "--matrix", "A"]);
    assert!(text.contains("1^1, 0^1, -1^1 | AGREE"), "{text}");
}

#[test]
fn empty_dicyclic_graph() {
    let text = ok(&["spectra", "--family", "q4m", "--m", "2", "--matrix", "L"]);
    assert!(text.contains("0^3 | AGREE"), "{text}");
}

#[test]
fn abelian_umeta_is_rejected() {
    let out = ccc(&["spectra", "--family", "u", "--n", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("abelian"));
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["spectra", "--family", "d2n", "--n", "2"][..],
        &["energies", "--family", "q4m"],
        &["spectra", "--family", "x", "--n", "3"],
        &["table", "--family", "d2n", "--n-from", "9", "--n-to", "4"],
    ] {
        assert_eq!(ccc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn semidihedral_16_energies() {
    let text = ok(&["energies", "--family", "sd8n", "--n", "2"]);
    assert_eq!(energy_row(&text, "E")[1], "4");
    assert_eq!(energy_row(&text, "LE")[1], "36/5");
    assert_eq!(energy_row(&text, "LE+")[1], "28/5");
}

#[test]
fn v16_is_all_equal() {
    let text = ok(&["energies", "--family", "v8n", "--n", "2"]);
    for row in ["E", "LE", "LE+"] {
        assert_eq!(energy_row(&text, row)[1..3], ["6", "6"], "{row}");
    }
    assert_eq!(energy_row(&text, "ordering")[1], "AllEqual");
}

#[test]
fn d6_energies_vanish() {
    let text = ok(&["energies", "--family", "d2n", "--n", "3"]);
    for row in ["E", "LE", "LE+"] {
        assert_eq!(energy_row(&text, row)[1], "0");
    }
}

#[test]
fn approx_adds_a_decimal_column() {
    let text = ok(&["--approx", "energies", "--family", "d2n", "--n", "5"]);
    assert!(energy_row(&text, "LE").iter().any(|c| c.starts_with("2.666")), "{text}");
}

#[test]
fn json_rationals_are_strings() {
    let text = ok(&["--format", "json", "energies", "--family", "d2n", "--n", "5"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let rendered = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(rendered, text);
    assert!(text.contains("\"8/3\""));
    assert!(!text.contains("2.66"));
}

#[test]
fn verify_exit_codes_follow_the_census() {
    assert_eq!(ccc(&["verify", "--families", "d2n", "--max-n", "6"]).status.code(), Some(0));
    let out = ccc(&["verify", "--families", "d2n", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("D14 Classification"));
    assert_eq!(
        ccc(&["verify", "--families", "q4m,sd8n", "--max-n", "10", "--max-m", "10"]).status.code(),
        Some(0)
    );
}

#[test]
fn verify_um2_flag() {
    let out = ccc(&["verify", "--families", "u", "--max-n", "4", "--max-m", "5", "--include-u-m2"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    for n in 2..=4 {
        assert!(text.contains(&format!("U({n},2) FormulaDiscrepancy")), "{text}");
    }
    let out = ccc(&["verify", "--families", "u", "--max-n", "4", "--max-m", "5"]);
    assert!(!stdout(&out).contains("FormulaDiscrepancy"));
}

#[test]
fn verify_json_lists_mismatches() {
    let out = ccc(&["--format", "json", "verify", "--families", "d2n", "--max-n", "8"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["instances_checked"], 6);
    let cats: Vec<&str> = v["mismatches"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["category"].as_str().unwrap())
        .collect();
    assert_eq!(cats, ["Classification", "Classification"]);
}

#[test]
fn table_csv() {
    let text = ok(&["--format", "csv", "table", "--family", "d2n", "--n-from", "3", "--n-to", "14"]);
    assert!(!text.contains('\r'));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[..4], ["group", "n", "m", "shape"]);
    assert_eq!(header.last().unwrap(), "closed_form");
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(&rows[2][0], "D10");
    assert_eq!(&rows[11][0], "D28");
    assert_eq!(&rows[11][14], "DISAGREE");
}

#[test]
fn table_markdown_and_m_ranges() {
    let text = ok(&["--format", "md", "table", "--family", "q4m", "--m-from", "2", "--m-to", "8"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2 + 7);
    assert!(lines.iter().all(|l| l.starts_with('|') && l.ends_with('|')));
    let text = ok(&["--format", "csv", "table", "--family", "u", "--n-from", "2", "--n-to", "3", "--m-from", "3", "--m-to", "5"]);
    assert_eq!(text.lines().count(), 1 + 6);
}

#[test]
fn graph_outputs() {
    let edges = ok(&["graph", "--family", "sd8n", "--n", "3"]);
    assert_eq!(edges.lines().count(), 12);
    let json = ok(&["--format", "json", "graph", "--family", "sd8n", "--n", "3"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let degree_sum: usize = v["adjacency"].as_array().unwrap().iter().map(|a| a.as_array().unwrap().len()).sum();
    assert_eq!(degree_sum, 24);
    assert_eq!(ccc(&["--format", "md", "graph", "--family", "sd8n", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--families", "all", "--max-n", "10", "--max-m", "8"];
    assert_eq!(ccc(&args).stdout, ccc(&args).stdout);
}

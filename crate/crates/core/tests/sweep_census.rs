//! Census of disagreements between brute force and the closed forms.
//!
//! The closed-form tables are transcribed verbatim, so the sweep reports
//! the statements that brute force contradicts. These tests pin that census.

use std::collections::BTreeSet;

use ccc_core::verify::{check_conjectures, instances, sweep_specs, Category, SweepOptions};
use ccc_core::{sweep, Family, GroupSpec};

fn pairs(report: &ccc_core::SweepReport) -> BTreeSet<(String, Category)> {
    report
        .mismatches
        .iter()
        .map(|m| (m.spec.to_string(), m.category))
        .collect()
}

#[test]
fn dihedral_up_to_30() {
    let report = sweep(&[Family::Dihedral], 30, 0, false);
    assert_eq!(report.instances_checked, 28);
    assert!(report.conjecture_violations.is_empty());

    let mut expected: BTreeSet<(String, Category)> = (7..=29)
        .step_by(2)
        .map(|n| (format!("D{}", 2 * n), Category::Classification))
        .collect();
    expected.insert(("D16".into(), Category::Classification));
    expected.insert(("D20".into(), Category::Classification));
    expected.insert(("D28".into(), Category::Ordering));
    assert_eq!(pairs(&report), expected);
}

#[test]
fn dihedral_classification_details() {
    let report = sweep(&[Family::Dihedral], 14, 0, false);
    let detail = |name: &str| {
        report
            .mismatches
            .iter()
            .find(|m| m.spec.to_string() == name)
            .map(|m| m.detail.clone())
            .unwrap()
    };
    assert!(detail("D14").starts_with("closed none, computed borderL"));
    assert!(detail("D16").starts_with("closed hyperL, computed none"));
    assert!(detail("D20").starts_with("closed hyperL, computed borderL"));
    assert!(detail("D28").starts_with("closed EltQltL, computed EeqQltL"));
}

#[test]
fn umeta_up_to_10() {
    let report = sweep(&[Family::UMeta], 10, 10, false);
    assert_eq!(report.instances_checked, 9 * 8);
    for m in &report.mismatches {
        let (n, mm) = (m.spec.n().unwrap(), m.spec.m().unwrap());
        assert!(mm == 6 || mm == 10 || (n, mm) == (4, 5), "{} {}", m.spec, m.category);
    }
    for n in 2..=10 {
        for m in [6, 10] {
            let name = GroupSpec::umeta(n, m).unwrap().to_string();
            for category in [
                Category::Shape,
                Category::SpectrumA,
                Category::SpectrumL,
                Category::SpectrumQ,
                Category::Energy,
            ] {
                assert!(pairs(&report).contains(&(name.clone(), category)), "{name} {category}");
            }
        }
    }
    assert!(pairs(&report).contains(&("U(4,5)".into(), Category::Classification)));
    assert_eq!(report.count(Category::Numeric), 0);
    assert_eq!(report.count(Category::Integrality), 0);
    assert_eq!(report.count(Category::Presentation), 0);
}

#[test]
fn families_without_structural_errata() {
    let report = sweep(&[Family::Dicyclic, Family::SemiDihedral], 30, 30, false);
    assert!(report.mismatches.is_empty(), "{}", report.to_text());
    let report = sweep(&[Family::VGroup], 30, 0, false);
    let specs: Vec<String> = report.mismatches.iter().map(|m| m.spec.to_string()).collect();
    assert_eq!(specs, ["V32"]);
    assert_eq!(report.mismatches[0].category, Category::Classification);
}

#[test]
fn abelian_umeta_is_reported_for_every_n() {
    let report = sweep(&[Family::UMeta], 12, 2, true);
    assert_eq!(report.instances_checked, 11);
    assert_eq!(report.count(Category::FormulaDiscrepancy), 11);
    let flagged: Vec<u32> = report
        .mismatches
        .iter()
        .filter(|m| m.category == Category::FormulaDiscrepancy)
        .map(|m| m.spec.n().unwrap())
        .collect();
    assert_eq!(flagged, (2..=12).collect::<Vec<_>>());
}

#[test]
fn conjectures_up_to_20() {
    let report = check_conjectures(&Family::ALL, 20, 20);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    let all_equal: BTreeSet<String> = report.all_equal().iter().map(|s| s.to_string()).collect();
    for name in ["D6", "D8", "D12", "Q8", "Q12", "V16", "SD24"] {
        assert!(all_equal.contains(name), "{name}");
    }
    for n in 2..=20 {
        for m in [3, 4, 6] {
            assert!(all_equal.contains(&format!("U({n},{m})")), "U({n},{m})");
        }
    }
    assert_eq!(all_equal.len(), 7 + 19 * 3);
}

#[test]
fn reports_are_byte_identical() {
    let specs = instances(&Family::ALL, 14, 10, true);
    let options = SweepOptions {
        include_um2: true,
        numeric_cap: 512,
    };
    let a = serde_json::to_string(&sweep_specs(&specs, &options)).unwrap();
    let b = serde_json::to_string(&sweep_specs(&specs, &options)).unwrap();
    assert_eq!(a, b);
}

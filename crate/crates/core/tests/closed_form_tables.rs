use ccc_core::closed_forms::{closed_energies_with, closed_spectrum_with};
use ccc_core::rational::{frac, int};
use ccc_core::verify::brute_force;
use ccc_core::{
    classify_closed, closed_energies, closed_spectrum, energy_ordering, expected_shape,
    spectra_of_union, EnergyOrdering, EnergyReport, EvalMode, GroupSpec, MatrixKind,
};

fn sweep_range() -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    specs.extend((3..=60).map(|n| GroupSpec::dihedral(n).unwrap()));
    specs.extend((2..=30).map(|m| GroupSpec::dicyclic(m).unwrap()));
    specs.extend((2..=12).flat_map(|n| (3..=12).map(move |m| GroupSpec::umeta(n, m).unwrap())));
    specs.extend((2..=30).map(|n| GroupSpec::vgroup(n).unwrap()));
    specs.extend((2..=30).map(|n| GroupSpec::semidihedral(n).unwrap()));
    specs
}

/// The spectrum and energy rows agree with the stated structures everywhere;
/// this checks the transcription, not the structures themselves.
#[test]
fn tables_are_consistent_with_the_stated_structures() {
    for spec in sweep_range() {
        let shape = expected_shape(&spec, EvalMode::Strict).unwrap();
        let from_shape = spectra_of_union(&shape);
        for kind in MatrixKind::ALL {
            assert_eq!(
                &closed_spectrum(&spec, kind).unwrap(),
                from_shape.get(kind),
                "{spec} {kind}"
            );
        }
        assert_eq!(
            closed_energies(&spec).unwrap(),
            EnergyReport::from_shape(&shape).unwrap(),
            "{spec}"
        );
    }
}

#[test]
fn formal_m2_rows_describe_two_cliques() {
    for n in 2..=12u32 {
        let spec = GroupSpec::umeta(n, 2).unwrap();
        let shape = expected_shape(&spec, EvalMode::Formal).unwrap();
        assert_eq!(shape.to_string(), format!("2K{n}"));
        let s = spectra_of_union(&shape);
        for kind in MatrixKind::ALL {
            assert_eq!(
                &closed_spectrum_with(&spec, kind, EvalMode::Formal).unwrap(),
                s.get(kind)
            );
        }
        assert_eq!(
            closed_energies_with(&spec, EvalMode::Formal).unwrap(),
            EnergyReport::from_shape(&shape).unwrap()
        );
    }
}

fn triple(spec: GroupSpec) -> (ccc_core::Rational, ccc_core::Rational, ccc_core::Rational) {
    let r = closed_energies(&spec).unwrap();
    (r.energy, r.laplacian_energy, r.signless_laplacian_energy)
}

#[test]
fn published_values() {
    let d10 = triple(GroupSpec::dihedral(5).unwrap());
    assert_eq!((d10.1, d10.2), (frac(8, 3), frac(8, 3)));
    assert_eq!(triple(GroupSpec::dihedral(10).unwrap()).2, frac(22, 3));
    assert_eq!(triple(GroupSpec::dicyclic(2).unwrap()), (int(0), int(0), int(0)));
    assert_eq!(triple(GroupSpec::dicyclic(5).unwrap()), (int(8), int(10), frac(22, 3)));
    let q28 = triple(GroupSpec::dicyclic(7).unwrap());
    assert_eq!((q28.0, q28.2), (int(12), int(12)));
    let u25 = triple(GroupSpec::umeta(2, 5).unwrap());
    assert_eq!((u25.1, u25.2), (int(10), frac(22, 3)));
    let u27 = triple(GroupSpec::umeta(2, 7).unwrap());
    assert_eq!((u27.0, u27.2), (int(12), int(12)));
    assert_eq!(triple(GroupSpec::vgroup(2).unwrap()), (int(6), int(6), int(6)));
    let sd16 = triple(GroupSpec::semidihedral(2).unwrap());
    assert_eq!((sd16.0, sd16.2), (int(4), frac(28, 5)));
    assert_eq!(triple(GroupSpec::semidihedral(3).unwrap()), (int(12), int(12), int(12)));
    assert_eq!(triple(GroupSpec::semidihedral(5).unwrap()).2, int(22));
}

#[test]
fn published_values_hold_for_brute_force() {
    for (spec, e, le, lq) in [
        (GroupSpec::dihedral(5).unwrap(), int(2), frac(8, 3), frac(8, 3)),
        (GroupSpec::dicyclic(5).unwrap(), int(8), int(10), frac(22, 3)),
        (GroupSpec::umeta(2, 5).unwrap(), int(8), int(10), frac(22, 3)),
        (GroupSpec::semidihedral(2).unwrap(), int(4), frac(36, 5), frac(28, 5)),
    ] {
        let r = brute_force(&spec).unwrap().report;
        assert_eq!((r.energy, r.laplacian_energy, r.signless_laplacian_energy), (e, le, lq), "{spec}");
    }
}

/// All-equal cases as listed: D6, D8, D12, Q8, Q12, U(n,2..4), V16, SD24.
#[test]
fn all_equal_table_rows() {
    let listed = |spec: &GroupSpec| match spec.to_string().as_str() {
        "D6" | "D8" | "D12" | "Q8" | "Q12" | "V16" | "SD24" => true,
        _ => matches!(spec.m(), Some(3) | Some(4)) && spec.n().is_some(),
    };
    for spec in sweep_range() {
        let all_equal = energy_ordering(&spec).unwrap() == EnergyOrdering::AllEqual;
        assert_eq!(all_equal, listed(&spec), "{spec}");
    }
}

#[test]
fn classification_rows_spot_checks() {
    let flags = |spec: GroupSpec| classify_closed(&spec).unwrap().to_string();
    assert_eq!(flags(GroupSpec::dicyclic(5).unwrap()), "borderL");
    assert_eq!(flags(GroupSpec::umeta(2, 5).unwrap()), "borderL");
    assert_eq!(flags(GroupSpec::semidihedral(5).unwrap()), "hyperL,borderQ");
    assert_eq!(flags(GroupSpec::umeta(3, 7).unwrap()), "hyperL,hyperQ");
    assert_eq!(flags(GroupSpec::vgroup(4).unwrap()), "hyperL");
    assert_eq!(flags(GroupSpec::dihedral(9).unwrap()), "none");
}

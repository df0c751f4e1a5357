//! Cross-validation of the brute-force route against the closed forms.
//!
//! For each group the harness builds the graph from the group arithmetic,
//! recognizes its shape, derives spectra and energies from that shape, and
//! compares every intermediate result with the formula tables. Failures are
//! collected, never raised, so one sweep yields the full discrepancy census.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ccc::{build_ccc, complete_union_shape, expected_shape, CccGraph, UnionShape};
use crate::closed_forms::{
    classify_closed, classify_from_energies, closed_energies, closed_energies_with,
    closed_spectrum, energy_ordering, EnergyOrdering,
};
use crate::error::{Error, Result};
use crate::groups::{validate_presentation, Family, GroupSpec};
use crate::spectra::{
    numeric_cross_check_against, numeric_vertex_cap, spectra_of_union, EnergyReport, MatrixKind,
    Spectra,
};
use crate::EvalMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Category {
    Presentation,
    Construction,
    Shape,
    SpectrumA,
    SpectrumL,
    SpectrumQ,
    Energy,
    Ordering,
    Classification,
    Integrality,
    Numeric,
    FormulaDiscrepancy,
}

impl Category {
    fn spectrum(kind: MatrixKind) -> Self {
        match kind {
            MatrixKind::A => Category::SpectrumA,
            MatrixKind::L => Category::SpectrumL,
            MatrixKind::Q => Category::SpectrumQ,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub spec: GroupSpec,
    pub category: Category,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConjectureKind {
    /// `E <= LE`.
    #[serde(rename = "E-LE")]
    ELe,
    /// `LE⁺ <= LE`.
    #[serde(rename = "LEplus-LE")]
    LePlusLe,
}

impl fmt::Display for ConjectureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureKind::ELe => "E-LE",
            ConjectureKind::LePlusLe => "LEplus-LE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConjectureViolation {
    pub spec: GroupSpec,
    pub which: ConjectureKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances_checked: usize,
    /// Instances whose graph went through the floating-point oracle.
    pub numeric_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub conjecture_violations: Vec<ConjectureViolation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.conjecture_violations.is_empty()
    }

    pub fn count(&self, category: Category) -> usize {
        self.mismatches.iter().filter(|m| m.category == category).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instances checked: {}\nnumeric oracle: {} checked\nmismatches: {}\n",
            self.instances_checked,
            self.numeric_checked,
            self.mismatches.len()
        );
        for m in &self.mismatches {
            out.push_str(&format!("  {} {}: {}\n", m.spec, m.category, m.detail));
        }
        out.push_str(&format!(
            "conjecture violations: {}\n",
            self.conjecture_violations.len()
        ));
        for v in &self.conjecture_violations {
            out.push_str(&format!("  {} {}: {}\n", v.spec, v.which, v.detail));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub include_um2: bool,
    /// Graphs with more vertices than this skip the numeric oracle.
    pub numeric_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            include_um2: false,
            numeric_cap: numeric_vertex_cap(),
        }
    }
}

/// Every legal spec of the given families up to the bounds, in sorted order.
///
/// `UMeta` uses `m >= 3` unless `include_um2` is set.
pub fn instances(families: &[Family], max_n: u32, max_m: u32, include_um2: bool) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    for &family in families {
        match family {
            Family::Dihedral => specs.extend((3..=max_n).filter_map(|n| GroupSpec::dihedral(n).ok())),
            Family::Dicyclic => specs.extend((2..=max_m).filter_map(|m| GroupSpec::dicyclic(m).ok())),
            Family::UMeta => {
                let m_min = if include_um2 { 2 } else { 3 };
                for n in 2..=max_n {
                    specs.extend((m_min..=max_m).filter_map(|m| GroupSpec::umeta(n, m).ok()));
                }
            }
            Family::VGroup => specs.extend((2..=max_n).filter_map(|n| GroupSpec::vgroup(n).ok())),
            Family::SemiDihedral => {
                specs.extend((2..=max_n).filter_map(|n| GroupSpec::semidihedral(n).ok()))
            }
        }
    }
    specs.sort();
    specs.dedup();
    specs
}

pub fn sweep(families: &[Family], max_n: u32, max_m: u32, include_um2: bool) -> SweepReport {
    let options = SweepOptions {
        include_um2,
        ..SweepOptions::default()
    };
    sweep_specs(&instances(families, max_n, max_m, include_um2), &options)
}

/// Checks the given specs concurrently; the report does not depend on
/// scheduling order.
pub fn sweep_specs(specs: &[GroupSpec], options: &SweepOptions) -> SweepReport {
    let outcomes: Vec<InstanceOutcome> = specs
        .par_iter()
        .filter(|spec| options.include_um2 || !is_abelian_umeta(spec))
        .map(|spec| check_instance(spec, options))
        .collect();

    let mut report = SweepReport {
        instances_checked: outcomes.len(),
        numeric_checked: outcomes.iter().filter(|o| o.numeric_checked).count(),
        mismatches: outcomes.iter().flat_map(|o| o.mismatches.clone()).collect(),
        conjecture_violations: outcomes
            .iter()
            .flat_map(|o| o.conjecture_violations.clone())
            .collect(),
    };
    report.mismatches.sort();
    report.conjecture_violations.sort();
    report
}

fn is_abelian_umeta(spec: &GroupSpec) -> bool {
    spec.family() == Family::UMeta && spec.m() == Some(2)
}

/// Everything the brute-force route produces for one group.
#[derive(Debug, Clone)]
pub struct BruteForce {
    pub graph: CccGraph,
    pub shape: UnionShape,
    pub spectra: Spectra,
    pub report: EnergyReport,
}

impl BruteForce {
    pub fn ordering(&self) -> Option<EnergyOrdering> {
        EnergyOrdering::from_energies(&self.report)
    }
}

pub fn brute_force(spec: &GroupSpec) -> Result<BruteForce> {
    let graph = build_ccc(spec)?;
    let shape = complete_union_shape(&graph)?;
    let spectra = spectra_of_union(&shape);
    let report = EnergyReport::from_spectra(&spectra, graph.vertex_count() as u64, graph.edge_count() as u64)?;
    Ok(BruteForce {
        graph,
        shape,
        spectra,
        report,
    })
}

#[derive(Debug, Clone, Default)]
pub struct InstanceOutcome {
    pub mismatches: Vec<Mismatch>,
    pub conjecture_violations: Vec<ConjectureViolation>,
    pub numeric_checked: bool,
}

pub fn check_instance(spec: &GroupSpec, options: &SweepOptions) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let flag = |category: Category, detail: String| Mismatch {
        spec: *spec,
        category,
        detail,
    };

    let presentation = validate_presentation(spec);
    for violation in &presentation.violations {
        out.mismatches.push(flag(Category::Presentation, violation.to_string()));
    }

    let bf = match brute_force(spec) {
        Ok(bf) => bf,
        Err(Error::AbelianGroup(_)) => {
            let detail = match (
                expected_shape(spec, EvalMode::Formal),
                closed_energies_with(spec, EvalMode::Formal),
            ) {
                (Ok(shape), Ok(r)) => format!(
                    "group is abelian, so the graph has no vertices; the closed form describes {shape} with E={}, LE={}, LE⁺={}",
                    r.energy, r.laplacian_energy, r.signless_laplacian_energy
                ),
                (Err(e), _) | (_, Err(e)) => format!("group is abelian; closed form: {e}"),
            };
            out.mismatches.push(flag(Category::FormulaDiscrepancy, detail));
            return out;
        }
        Err(e) => {
            out.mismatches.push(flag(Category::Construction, e.to_string()));
            return out;
        }
    };

    match expected_shape(spec, EvalMode::Strict) {
        Ok(expected) if expected == bf.shape => {}
        Ok(expected) => out.mismatches.push(flag(
            Category::Shape,
            format!("expected {expected}, built {}", bf.shape),
        )),
        Err(e) => out.mismatches.push(flag(Category::Shape, e.to_string())),
    }

    for kind in MatrixKind::ALL {
        let computed = bf.spectra.get(kind);
        match closed_spectrum(spec, kind) {
            Ok(closed) if &closed == computed => {}
            Ok(closed) => out.mismatches.push(flag(
                Category::spectrum(kind),
                format!("closed {{{closed}}}, computed {{{computed}}}"),
            )),
            Err(e) => out.mismatches.push(flag(Category::spectrum(kind), e.to_string())),
        }
    }

    if !bf.spectra.is_super_integral() {
        out.mismatches.push(flag(
            Category::Integrality,
            "a spectrum has a non-integer eigenvalue".into(),
        ));
    }

    match closed_energies(spec) {
        Ok(closed) if closed == bf.report => {}
        Ok(closed) => out.mismatches.push(flag(
            Category::Energy,
            energy_difference(&closed, &bf.report),
        )),
        Err(e) => out.mismatches.push(flag(Category::Energy, e.to_string())),
    }

    let computed_ordering = bf.ordering();
    match energy_ordering(spec) {
        Ok(closed) if Some(closed) == computed_ordering => {}
        Ok(closed) => out.mismatches.push(flag(
            Category::Ordering,
            format!(
                "closed {closed}, computed {} (E={}, LE={}, LE⁺={})",
                computed_ordering.map_or("no pattern".to_string(), |o| o.to_string()),
                bf.report.energy,
                bf.report.laplacian_energy,
                bf.report.signless_laplacian_energy
            ),
        )),
        Err(e) => out.mismatches.push(flag(Category::Ordering, e.to_string())),
    }

    let computed_class = classify_from_energies(&bf.report);
    match classify_closed(spec) {
        Ok(closed) if closed == computed_class => {}
        Ok(closed) => out.mismatches.push(flag(
            Category::Classification,
            format!(
                "closed {closed}, computed {computed_class} (2(|V|-1)={}, E={}, LE={}, LE⁺={})",
                bf.report.complete_graph_energy(),
                bf.report.energy,
                bf.report.laplacian_energy,
                bf.report.signless_laplacian_energy
            ),
        )),
        Err(e) => out.mismatches.push(flag(Category::Classification, e.to_string())),
    }

    if bf.graph.vertex_count() <= options.numeric_cap {
        out.numeric_checked = true;
        if let Err(e) = numeric_cross_check_against(&bf.graph, &bf.spectra, options.numeric_cap) {
            out.mismatches.push(flag(Category::Numeric, e.to_string()));
        }
    }

    out.conjecture_violations = conjecture_violations(spec, &bf.report);
    out
}

fn energy_difference(closed: &EnergyReport, computed: &EnergyReport) -> String {
    let mut parts = Vec::new();
    if closed.vertex_count != computed.vertex_count {
        parts.push(format!("|V| closed {} computed {}", closed.vertex_count, computed.vertex_count));
    }
    if closed.edge_count != computed.edge_count {
        parts.push(format!("|e| closed {} computed {}", closed.edge_count, computed.edge_count));
    }
    for (name, c, b) in [
        ("E", closed.energy, computed.energy),
        ("LE", closed.laplacian_energy, computed.laplacian_energy),
        ("LE⁺", closed.signless_laplacian_energy, computed.signless_laplacian_energy),
    ] {
        if c != b {
            parts.push(format!("{name} closed {c} computed {b}"));
        }
    }
    parts.join("; ")
}

fn conjecture_violations(spec: &GroupSpec, r: &EnergyReport) -> Vec<ConjectureViolation> {
    let mut found = Vec::new();
    if r.energy > r.laplacian_energy {
        found.push(ConjectureViolation {
            spec: *spec,
            which: ConjectureKind::ELe,
            detail: format!("E={} > LE={}", r.energy, r.laplacian_energy),
        });
    }
    if r.signless_laplacian_energy > r.laplacian_energy {
        found.push(ConjectureViolation {
            spec: *spec,
            which: ConjectureKind::LePlusLe,
            detail: format!("LE⁺={} > LE={}", r.signless_laplacian_energy, r.laplacian_energy),
        });
    }
    found
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Equality {
    #[serde(rename = "E=LE")]
    EEqLe,
    #[serde(rename = "LEplus=LE")]
    LePlusEqLe,
    #[serde(rename = "E=LEplus")]
    EEqLePlus,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EqualityCase {
    pub spec: GroupSpec,
    pub relation: Equality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub instances_checked: usize,
    pub violations: Vec<ConjectureViolation>,
    pub equalities: Vec<EqualityCase>,
}

impl ConjectureReport {
    /// Specs with `E = LE = LE⁺`.
    pub fn all_equal(&self) -> Vec<GroupSpec> {
        let mut specs: Vec<GroupSpec> = self
            .equalities
            .iter()
            .filter(|c| c.relation == Equality::EEqLe)
            .map(|c| c.spec)
            .filter(|spec| {
                self.equalities.contains(&EqualityCase {
                    spec: *spec,
                    relation: Equality::LePlusEqLe,
                })
            })
            .collect();
        specs.sort();
        specs
    }
}

/// `E <= LE` and `LE⁺ <= LE` for every legal spec in range (`UMeta` from
/// `m = 3`), with every equality recorded.
pub fn check_conjectures(families: &[Family], max_n: u32, max_m: u32) -> ConjectureReport {
    check_conjectures_specs(&instances(families, max_n, max_m, false))
}

pub fn check_conjectures_specs(specs: &[GroupSpec]) -> ConjectureReport {
    let results: Vec<(GroupSpec, Result<EnergyReport>)> = specs
        .par_iter()
        .map(|spec| (*spec, brute_force(spec).map(|bf| bf.report)))
        .collect();
    let mut report = ConjectureReport {
        instances_checked: 0,
        violations: Vec::new(),
        equalities: Vec::new(),
    };
    for (spec, energies) in results {
        let Ok(r) = energies else { continue };
        report.instances_checked += 1;
        report.violations.extend(conjecture_violations(&spec, &r));
        for (relation, holds) in [
            (Equality::EEqLe, r.energy == r.laplacian_energy),
            (Equality::LePlusEqLe, r.signless_laplacian_energy == r.laplacian_energy),
            (Equality::EEqLePlus, r.energy == r.signless_laplacian_energy),
        ] {
            if holds {
                report.equalities.push(EqualityCase { spec, relation });
            }
        }
    }
    report.violations.sort();
    report.equalities.sort();
    report
}

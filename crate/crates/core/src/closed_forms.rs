//! Closed-form spectra, energies, orderings and classifications.
//!
//! Everything here is a pure function of the group parameters, written case
//! by case exactly as the published tables state them, including the small
//! parameter exceptions. Overlapping case labels are resolved by evaluating
//! guards top to bottom. Nothing in this module consults a graph, so it can
//! be compared against the brute-force route in [`crate::verify`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{Family, GroupSpec};
use crate::rational::{frac, int, Rational};
use crate::spectra::{mean_degree, EnergyReport, MatrixKind, Spectrum};
use crate::EvalMode;

/// The five relative orders of `E`, `LE` and `LE⁺` that occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EnergyOrdering {
    /// `E = LE⁺ = LE`
    AllEqual,
    /// `LE⁺ < E < LE`
    QltEltL,
    /// `E < LE⁺ < LE`
    EltQltL,
    /// `E = LE⁺ < LE`
    EeqQltL,
    /// `E < LE⁺ = LE`
    EltQeqL,
}

impl EnergyOrdering {
    /// Exact comparison of three energies; `None` if they fit no pattern.
    pub fn from_energies(report: &EnergyReport) -> Option<Self> {
        let (e, le, lq) = (
            report.energy,
            report.laplacian_energy,
            report.signless_laplacian_energy,
        );
        if e == le && le == lq {
            Some(EnergyOrdering::AllEqual)
        } else if lq < e && e < le {
            Some(EnergyOrdering::QltEltL)
        } else if e < lq && lq < le {
            Some(EnergyOrdering::EltQltL)
        } else if e == lq && lq < le {
            Some(EnergyOrdering::EeqQltL)
        } else if e < lq && lq == le {
            Some(EnergyOrdering::EltQeqL)
        } else {
            None
        }
    }

    pub fn relation(self) -> &'static str {
        match self {
            EnergyOrdering::AllEqual => "E = LE⁺ = LE",
            EnergyOrdering::QltEltL => "LE⁺ < E < LE",
            EnergyOrdering::EltQltL => "E < LE⁺ < LE",
            EnergyOrdering::EeqQltL => "E = LE⁺ < LE",
            EnergyOrdering::EltQeqL => "E < LE⁺ = LE",
        }
    }
}

impl fmt::Display for EnergyOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Hyper- and borderenergetic flags for `E`, `LE` and `LE⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Classification {
    pub hyper_e: bool,
    pub border_e: bool,
    pub hyper_l: bool,
    pub border_l: bool,
    pub hyper_q: bool,
    pub border_q: bool,
}

impl Classification {
    pub const NONE: Classification = Classification {
        hyper_e: false,
        border_e: false,
        hyper_l: false,
        border_l: false,
        hyper_q: false,
        border_q: false,
    };

    const HYPER_L: Classification = Classification {
        hyper_l: true,
        ..Self::NONE
    };

    const HYPER_LQ: Classification = Classification {
        hyper_l: true,
        hyper_q: true,
        ..Self::NONE
    };

    const BORDER_L: Classification = Classification {
        border_l: true,
        ..Self::NONE
    };

    pub fn flags(&self) -> Vec<&'static str> {
        [
            (self.hyper_e, "hyperE"),
            (self.border_e, "borderE"),
            (self.hyper_l, "hyperL"),
            (self.border_l, "borderL"),
            (self.hyper_q, "hyperQ"),
            (self.border_q, "borderQ"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags = self.flags();
        if flags.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&flags.join(","))
        }
    }
}

/// Compares each energy with `2(|V| - 1)`, the energy of `K_|V|`.
pub fn classify_from_energies(report: &EnergyReport) -> Classification {
    let k = report.complete_graph_energy();
    Classification {
        hyper_e: report.energy > k,
        border_e: report.energy == k,
        hyper_l: report.laplacian_energy > k,
        border_l: report.laplacian_energy == k,
        hyper_q: report.signless_laplacian_energy > k,
        border_q: report.signless_laplacian_energy == k,
    }
}

struct Params {
    n: i64,
    m: i64,
}

fn params(spec: &GroupSpec, mode: EvalMode) -> Result<Params> {
    if spec.family() == Family::UMeta && spec.m() == Some(2) && mode == EvalMode::Strict {
        return Err(Error::UnsupportedParams {
            spec: *spec,
            reason: "U(n,2) is abelian; its graph has no vertices".into(),
        });
    }
    Ok(Params {
        n: spec.n().unwrap_or(0) as i64,
        m: spec.m().unwrap_or(0) as i64,
    })
}

fn signed_spectrum(spec: &GroupSpec, rows: Vec<(Rational, i64)>) -> Result<Spectrum> {
    Spectrum::from_signed(rows).map_err(|(value, mult)| Error::UnsupportedParams {
        spec: *spec,
        reason: format!("net multiplicity {mult} for eigenvalue {value}"),
    })
}

pub fn closed_spectrum(spec: &GroupSpec, which: MatrixKind) -> Result<Spectrum> {
    closed_spectrum_with(spec, which, EvalMode::Strict)
}

pub fn closed_spectrum_with(spec: &GroupSpec, which: MatrixKind, mode: EvalMode) -> Result<Spectrum> {
    use MatrixKind::{A, L, Q};
    let Params { n, m } = params(spec, mode)?;
    let r = |v: i64, k: i64| (int(v), k);
    let rows = match (spec.family(), which) {
        (Family::Dihedral, A) if n % 2 == 1 => vec![r(-1, (n - 3) / 2), r(0, 1), r((n - 3) / 2, 1)],
        (Family::Dihedral, L) if n % 2 == 1 => vec![r(0, 2), r((n - 1) / 2, (n - 3) / 2)],
        (Family::Dihedral, Q) if n % 2 == 1 => {
            vec![r(0, 1), r(n - 3, 1), r((n - 5) / 2, (n - 3) / 2)]
        }
        (Family::Dihedral, A) if n % 4 == 0 => vec![r(-1, n / 2 - 2), r(0, 2), r(n / 2 - 2, 1)],
        (Family::Dihedral, L) if n % 4 == 0 => vec![r(0, 3), r(n / 2 - 1, n / 2 - 2)],
        (Family::Dihedral, Q) if n % 4 == 0 => {
            vec![r(0, 2), r(n - 4, 1), r(n / 2 - 3, n / 2 - 2)]
        }
        (Family::Dihedral, A) => vec![r(-1, n / 2 - 1), r(1, 1), r(n / 2 - 2, 1)],
        (Family::Dihedral, L) => vec![r(0, 2), r(2, 1), r(n / 2 - 1, n / 2 - 2)],
        (Family::Dihedral, Q) => vec![r(2, 1), r(0, 1), r(n - 4, 1), r(n / 2 - 3, n / 2 - 2)],

        (Family::Dicyclic, A) if m % 2 == 1 => vec![r(-1, m - 1), r(1, 1), r(m - 2, 1)],
        (Family::Dicyclic, L) if m % 2 == 1 => vec![r(0, 2), r(2, 1), r(m - 1, m - 2)],
        (Family::Dicyclic, Q) if m % 2 == 1 => {
            vec![r(2, 1), r(0, 1), r(2 * m - 4, 1), r(m - 3, m - 2)]
        }
        (Family::Dicyclic, A) => vec![r(-1, m - 2), r(0, 2), r(m - 2, 1)],
        (Family::Dicyclic, L) => vec![r(0, 3), r(m - 1, m - 2)],
        (Family::Dicyclic, Q) => vec![r(0, 2), r(2 * m - 4, 1), r(m - 3, m - 2)],

        (Family::UMeta, A) if m % 2 == 1 => vec![
            r(-1, (n * (m + 1) - 4) / 2),
            r((n * (m - 1) - 2) / 2, 1),
            r(n - 1, 1),
        ],
        (Family::UMeta, L) if m % 2 == 1 => vec![
            r(0, 2),
            r(n * (m - 1) / 2, (n * (m - 1) - 2) / 2),
            r(n, n - 1),
        ],
        (Family::UMeta, Q) if m % 2 == 1 => vec![
            r(n * (m - 1) - 2, 1),
            r((n * (m - 1) - 4) / 2, (n * (m - 1) - 2) / 2),
            r(2 * n - 2, 1),
            r(n - 2, n - 1),
        ],
        (Family::UMeta, A) => vec![
            r(-1, (n * (m + 2) - 6) / 2),
            r((n * (m - 2) - 2) / 2, 1),
            r(n - 1, 2),
        ],
        (Family::UMeta, L) => vec![
            r(0, 3),
            r(n * (m - 2) / 2, (n * (m - 2) - 2) / 2),
            r(n, 2 * n - 2),
        ],
        (Family::UMeta, Q) => vec![
            r(n * (m - 2) - 2, 1),
            r((n * (m - 2) - 4) / 2, (n * (m - 2) - 2) / 2),
            r(2 * n - 2, 2),
            r(n - 2, 2 * n - 2),
        ],

        (Family::VGroup, A) if n % 2 == 1 => vec![r(-1, 2 * n - 2), r(0, 2), r(2 * n - 2, 1)],
        (Family::VGroup, L) if n % 2 == 1 => vec![r(0, 3), r(2 * n - 1, 2 * n - 2)],
        (Family::VGroup, Q) if n % 2 == 1 => {
            vec![r(0, 2), r(4 * n - 4, 1), r(2 * n - 3, 2 * n - 2)]
        }
        (Family::VGroup, A) => vec![r(-1, 2 * n - 1), r(1, 2), r(2 * n - 3, 1)],
        (Family::VGroup, L) => vec![r(0, 3), r(2, 2), r(2 * n - 2, 2 * n - 3)],
        (Family::VGroup, Q) => vec![r(2, 2), r(0, 2), r(4 * n - 6, 1), r(2 * n - 4, 2 * n - 3)],

        (Family::SemiDihedral, A) if n % 2 == 1 => vec![r(-1, 2 * n), r(3, 1), r(2 * n - 3, 1)],
        (Family::SemiDihedral, L) if n % 2 == 1 => vec![r(0, 2), r(4, 3), r(2 * n - 2, 2 * n - 3)],
        (Family::SemiDihedral, Q) if n % 2 == 1 => {
            vec![r(6, 1), r(2, 3), r(4 * n - 6, 1), r(2 * n - 4, 2 * n - 3)]
        }
        (Family::SemiDihedral, A) => vec![r(-1, 2 * n - 2), r(0, 2), r(2 * n - 2, 1)],
        (Family::SemiDihedral, L) => vec![r(0, 3), r(2 * n - 1, 2 * n - 2)],
        (Family::SemiDihedral, Q) => vec![r(0, 2), r(4 * n - 4, 1), r(2 * n - 3, 2 * n - 2)],
    };
    signed_spectrum(spec, rows)
}

/// Vertex and edge counts as stated alongside each structure.
fn closed_counts(spec: &GroupSpec, p: &Params) -> (i64, i64) {
    let Params { n, m } = *p;
    match spec.family() {
        Family::Dihedral if n % 2 == 1 => ((n + 1) / 2, (n - 1) * (n - 3) / 8),
        Family::Dihedral if n % 4 == 0 => (n / 2 + 1, (n - 2) * (n - 4) / 8),
        Family::Dihedral => (n / 2 + 1, ((n - 2) * (n - 4) + 8) / 8),
        Family::Dicyclic if m % 2 == 1 => (m + 1, ((m - 1) * (m - 2) + 2) / 2),
        Family::Dicyclic => (m + 1, (m - 1) * (m - 2) / 2),
        Family::UMeta if m % 2 == 1 => (
            n * (m + 1) / 2,
            (n * n * (m - 1) * (m - 1) - 2 * n * (m - 2 * n + 1)) / 8,
        ),
        Family::UMeta => (
            n * (m + 2) / 2,
            (n * n * (m - 2) * (m - 2) - 2 * n * (m - 4 * n + 2)) / 8,
        ),
        Family::VGroup if n % 2 == 1 => (2 * n + 1, (2 * n - 1) * (2 * n - 2) / 2),
        Family::VGroup => (2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 4) / 2),
        Family::SemiDihedral if n % 2 == 1 => (2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 12) / 2),
        Family::SemiDihedral => (2 * n + 1, (2 * n - 1) * (2 * n - 2) / 2),
    }
}

/// `(E, LE, LE⁺)` from the energy case tables.
fn closed_energy_triple(spec: &GroupSpec, p: &Params) -> (Rational, Rational, Rational) {
    let Params { n, m } = *p;
    match spec.family() {
        Family::Dihedral if n % 2 == 1 => (
            int(n - 3),
            frac(2 * (n - 1) * (n - 3), n + 1),
            frac((n - 3) * (n + 3), n + 1),
        ),
        Family::Dihedral if n % 4 == 0 => {
            let lq = if n == 4 || n == 8 {
                frac((n - 4) * (n + 6), n + 2)
            } else {
                frac(2 * (n - 2) * (n - 4), n + 2)
            };
            (int(n - 4), frac(3 * (n - 2) * (n - 4), n + 2), lq)
        }
        Family::Dihedral => {
            let le = if n == 6 {
                int(4)
            } else {
                frac((n - 4) * (3 * n - 10), n + 2)
            };
            let lq = if n == 6 {
                int(4)
            } else if n == 10 {
                frac(22, 3)
            } else {
                frac(2 * (n - 2) * (n - 6), n + 2)
            };
            (int(n - 2), le, lq)
        }

        Family::Dicyclic if m % 2 == 1 => {
            let le = if m == 3 {
                int(4)
            } else {
                frac(2 * (m - 2) * (3 * m - 5), m + 1)
            };
            let lq = if m == 3 {
                int(4)
            } else if m == 5 {
                frac(22, 3)
            } else {
                frac(4 * (m - 1) * (m - 3), m + 1)
            };
            (int(2 * m - 2), le, lq)
        }
        Family::Dicyclic => {
            let lq = if m == 2 || m == 4 {
                frac(2 * (m - 2) * (m + 3), m + 1)
            } else {
                frac(4 * (m - 1) * (m - 2), m + 1)
            };
            (int(2 * m - 4), frac(6 * (m - 1) * (m - 2), m + 1), lq)
        }

        Family::UMeta if m % 2 == 1 => {
            let le = if m == 3 {
                int(4 * (n - 1))
            } else if m == 5 {
                frac(2 * (2 * n - 1) * (n + 3), 3)
            } else {
                frac(
                    m * m * n * n - 4 * m * n * n + m * m * n + 3 * n * n - 2 * m * n - 2 * m
                        + 5 * n
                        - 2,
                    m + 1,
                )
            };
            let lq = if m == 3 {
                int(4 * (n - 1))
            } else if m == 5 && n == 2 {
                frac(22, 3)
            } else if m == 5 {
                frac(2 * (2 * n + 3) * (n - 1), 3)
            } else {
                frac(n * n * (m - 1) * (m - 3), m + 1)
            };
            (int(n * (m + 1) - 4), le, lq)
        }
        Family::UMeta => {
            let e = if m == 2 {
                int(4 * (n - 1))
            } else {
                int(n * (m + 2) - 6)
            };
            let le = if m == 2 {
                int(4 * (n - 1))
            } else if m == 4 {
                int(6 * (n - 1))
            } else {
                frac(
                    2 * m * m * n * n - 12 * m * n * n + m * m * n + 16 * n * n - 4 * m * n
                        - 2 * m
                        + 12 * n
                        - 4,
                    m + 2,
                )
            };
            let lq = if m == 2 {
                int(4 * (n - 1))
            } else if m == 4 {
                int(6 * (n - 1))
            } else if m == 6 {
                int(2 * (n + 2) * (n - 1))
            } else {
                frac(2 * n * n * (m - 2) * (m - 4), m + 2)
            };
            (e, le, lq)
        }

        Family::VGroup if n % 2 == 1 => (
            int(4 * n - 4),
            frac(6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1),
            frac(4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1),
        ),
        Family::VGroup => {
            if n == 2 {
                (int(4 * n - 2), int(6), int(6))
            } else {
                (
                    int(4 * n - 2),
                    frac(2 * (2 * n - 3) * (5 * n - 7), n + 1),
                    frac(16 * (n - 1) * (n - 2), n + 1),
                )
            }
        }

        Family::SemiDihedral if n % 2 == 1 => {
            let le = if n == 3 {
                int(12)
            } else {
                frac(2 * (2 * n - 3) * (5 * n - 11), n + 1)
            };
            let lq = if n == 3 {
                int(12)
            } else if n == 5 {
                int(22)
            } else {
                frac(16 * (n - 1) * (n - 3), n + 1)
            };
            (int(4 * n), le, lq)
        }
        Family::SemiDihedral => {
            let lq = if n == 2 {
                frac(28, 5)
            } else {
                frac(4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1)
            };
            (int(4 * n - 4), frac(6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1), lq)
        }
    }
}

pub fn closed_energies(spec: &GroupSpec) -> Result<EnergyReport> {
    closed_energies_with(spec, EvalMode::Strict)
}

pub fn closed_energies_with(spec: &GroupSpec, mode: EvalMode) -> Result<EnergyReport> {
    let p = params(spec, mode)?;
    let (v, e) = closed_counts(spec, &p);
    let (energy, laplacian_energy, signless_laplacian_energy) = closed_energy_triple(spec, &p);
    Ok(EnergyReport {
        vertex_count: v as u64,
        edge_count: e as u64,
        mean_degree: mean_degree(v as u64, e as u64)?,
        energy,
        laplacian_energy,
        signless_laplacian_energy,
    })
}

pub fn energy_ordering(spec: &GroupSpec) -> Result<EnergyOrdering> {
    energy_ordering_with(spec, EvalMode::Strict)
}

pub fn energy_ordering_with(spec: &GroupSpec, mode: EvalMode) -> Result<EnergyOrdering> {
    use EnergyOrdering::*;
    let Params { n, m } = params(spec, mode)?;
    let ordering = match spec.family() {
        Family::Dihedral => match n {
            3 | 4 | 6 => AllEqual,
            5 => EltQeqL,
            10 => QltEltL,
            _ => EltQltL,
        },
        Family::Dicyclic => match m {
            2 | 3 => AllEqual,
            5 => QltEltL,
            7 => EeqQltL,
            _ => EltQltL,
        },
        Family::UMeta => {
            if matches!(m, 2..=4) {
                AllEqual
            } else if (m == 5 && (n == 2 || n == 3)) || (m == 6 && n == 2) {
                QltEltL
            } else if m == 7 && n == 2 {
                EeqQltL
            } else if (m == 5 && n >= 4) || (m >= 6 && n >= 3) || (m >= 8 && n >= 2) {
                EltQltL
            } else {
                return Err(Error::UnsupportedParams {
                    spec: *spec,
                    reason: "outside every listed ordering case".into(),
                });
            }
        }
        Family::VGroup if n == 2 => AllEqual,
        Family::VGroup => EltQltL,
        Family::SemiDihedral if n == 3 => AllEqual,
        Family::SemiDihedral => EltQltL,
    };
    Ok(ordering)
}

pub fn classify_closed(spec: &GroupSpec) -> Result<Classification> {
    classify_closed_with(spec, EvalMode::Strict)
}

pub fn classify_closed_with(spec: &GroupSpec, mode: EvalMode) -> Result<Classification> {
    let Params { n, m } = params(spec, mode)?;
    let none = Classification::NONE;
    let class = match spec.family() {
        Family::Dihedral => match n {
            _ if n % 2 == 1 => none,
            4 | 6 => none,
            8 | 10 | 12 | 14 => Classification::HYPER_L,
            _ => Classification::HYPER_LQ,
        },
        Family::Dicyclic => match m {
            2..=4 => none,
            5 => Classification::BORDER_L,
            6 | 7 => Classification::HYPER_L,
            _ => Classification::HYPER_LQ,
        },
        Family::UMeta => match (m, n) {
            (2..=4, _) | (6, 2) => none,
            (5, 2) => Classification::BORDER_L,
            (5, 3) | (6, 3) | (7, 2) => Classification::HYPER_L,
            _ => Classification::HYPER_LQ,
        },
        Family::VGroup => match n {
            2 => none,
            3 | 4 => Classification::HYPER_L,
            _ => Classification::HYPER_LQ,
        },
        Family::SemiDihedral => match n {
            2 | 3 => none,
            5 => Classification {
                hyper_l: true,
                border_q: true,
                ..none
            },
            _ => Classification::HYPER_LQ,
        },
    };
    Ok(class)
}

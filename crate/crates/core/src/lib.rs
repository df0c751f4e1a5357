//! Commuting conjugacy class graphs of five finite group families.
//!
//! The crate builds the commuting conjugacy class graph (CCC) of the dihedral
//! groups `D2n`, the dicyclic groups `Q4m`, the metacyclic groups `U(n,m)`, the
//! groups `V8n` and the semidihedral groups `SD8n` by brute force, and checks
//! the closed-form spectra, energies, energy orderings and (hyper/border)
//! energetic classifications for these graphs against that brute force.
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`groups`] | normal-form element arithmetic, centers, conjugacy classes |
//! | [`ccc`] | graph construction and union-of-cliques shape recognition |
//! | [`spectra`] | exact spectra and energies, floating-point cross-check |
//! | [`closed_forms`] | the published formula tables, evaluated independently |
//! | [`verify`] | sweep harness comparing the two routes |
//!
//! All energies are exact rationals ([`Rational`]); floating point only ever
//! appears in the independent numeric oracle.

pub mod ccc;
pub mod closed_forms;
pub mod groups;
pub mod rational;
pub mod spectra;
pub mod verify;

mod error;

pub use ccc::{build_ccc, complete_union_shape, expected_shape, CccGraph, UnionShape};
pub use closed_forms::{
    classify_closed, classify_from_energies, closed_energies, closed_spectrum, energy_ordering,
    Classification, EnergyOrdering,
};
pub use error::{Error, Result};
pub use groups::{validate_presentation, ConjugacyClass, Element, Family, GroupSpec};
pub use rational::Rational;
pub use spectra::{spectra_of_union, EnergyReport, MatrixKind, Spectra, Spectrum};
pub use verify::{check_conjectures, sweep, SweepReport};

/// How closed-form tables treat parameters whose group is abelian.
///
/// `Strict` refuses them (`UMeta` with `m = 2` has no non-central classes, so
/// its graph does not exist). `Formal` evaluates the printed rows anyway, which
/// is how the sweep records the disagreement instead of hiding it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMode {
    #[default]
    Strict,
    Formal,
}

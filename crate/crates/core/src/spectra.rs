//! Exact spectra and energies of disjoint unions of complete graphs.
//!
//! `K_k` has adjacency spectrum `{(k-1)^1, (-1)^{k-1}}`, Laplacian spectrum
//! `{0^1, k^{k-1}}` and signless Laplacian spectrum `{(2k-2)^1, (k-2)^{k-1}}`.
//! Spectra of a disjoint union are multiset unions, so every eigenvalue here
//! is an integer and every energy is an exact rational.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ccc::{complete_union_shape, CccGraph, UnionShape};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

pub const NUMERIC_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_NUMERIC_VERTEX_CAP: usize = 512;
pub const NUMERIC_CAP_ENV: &str = "CCC_MAX_NUMERIC_VERTICES";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Adjacency.
    A,
    /// Laplacian `D - A`.
    L,
    /// Signless Laplacian `D + A`.
    Q,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        })
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            other => Err(format!("unknown matrix {other:?} (expected A, L or Q)")),
        }
    }
}

/// Eigenvalue multiset in canonical form: values strictly decreasing,
/// multiplicities positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<SpectrumEntry>", into = "Vec<SpectrumEntry>")]
pub struct Spectrum {
    entries: Vec<(Rational, u64)>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumEntry {
    #[serde(with = "rational::as_string")]
    value: Rational,
    mult: u64,
}

impl From<Vec<SpectrumEntry>> for Spectrum {
    fn from(entries: Vec<SpectrumEntry>) -> Self {
        Spectrum::from_pairs(entries.into_iter().map(|e| (e.value, e.mult)))
    }
}

impl From<Spectrum> for Vec<SpectrumEntry> {
    fn from(s: Spectrum) -> Self {
        s.entries
            .into_iter()
            .map(|(value, mult)| SpectrumEntry { value, mult })
            .collect()
    }
}

impl Spectrum {
    pub fn from_pairs<I: IntoIterator<Item = (Rational, u64)>>(pairs: I) -> Self {
        let mut raw: Vec<(Rational, u64)> = pairs.into_iter().filter(|&(_, k)| k > 0).collect();
        raw.sort_by_key(|&(v, _)| std::cmp::Reverse(v));
        let mut entries: Vec<(Rational, u64)> = Vec::with_capacity(raw.len());
        for (value, mult) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == value => last.1 += mult,
                _ => entries.push((value, mult)),
            }
        }
        Spectrum { entries }
    }

    /// Merges signed multiplicities. Returns the first eigenvalue whose net
    /// multiplicity is negative as the error.
    pub fn from_signed<I: IntoIterator<Item = (Rational, i64)>>(
        pairs: I,
    ) -> std::result::Result<Self, (Rational, i64)> {
        let mut net: Vec<(Rational, i64)> = Vec::new();
        for (value, mult) in pairs {
            match net.iter_mut().find(|(v, _)| *v == value) {
                Some(slot) => slot.1 += mult,
                None => net.push((value, mult)),
            }
        }
        if let Some(&bad) = net.iter().find(|&&(_, k)| k < 0) {
            return Err(bad);
        }
        Ok(Self::from_pairs(net.into_iter().map(|(v, k)| (v, k as u64))))
    }

    pub fn entries(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    /// Total multiplicity, i.e. the matrix dimension.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, value: Rational) -> u64 {
        self.entries
            .iter()
            .find(|(v, _)| *v == value)
            .map_or(0, |&(_, k)| k)
    }

    /// Sum of eigenvalues counted with multiplicity (the trace).
    pub fn sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|&(v, k)| v * int(k as i64))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }

    /// Eigenvalues listed with repetition, descending.
    pub fn expanded(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k as usize))
            .collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (value, mult)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{value}^{mult}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectra {
    pub a: Spectrum,
    pub l: Spectrum,
    pub q: Spectrum,
}

impl Spectra {
    pub fn get(&self, kind: MatrixKind) -> &Spectrum {
        match kind {
            MatrixKind::A => &self.a,
            MatrixKind::L => &self.l,
            MatrixKind::Q => &self.q,
        }
    }

    pub fn is_super_integral(&self) -> bool {
        is_super_integral(&self.a, &self.l, &self.q)
    }
}

pub fn spectra_of_union(shape: &UnionShape) -> Spectra {
    let mut a = Vec::new();
    let mut l = Vec::new();
    let mut q = Vec::new();
    for part in shape.parts() {
        let (count, k) = (part.count, part.size as i64);
        let band = count * (part.size - 1);
        a.push((int(k - 1), count));
        a.push((int(-1), band));
        l.push((int(0), count));
        l.push((int(k), band));
        q.push((int(2 * k - 2), count));
        q.push((int(k - 2), band));
    }
    Spectra {
        a: Spectrum::from_pairs(a),
        l: Spectrum::from_pairs(l),
        q: Spectrum::from_pairs(q),
    }
}

pub fn edge_count(shape: &UnionShape) -> u64 {
    shape.edge_count()
}

/// `E = Σ |λ|` over the adjacency spectrum.
pub fn energy(a: &Spectrum) -> Rational {
    a.entries
        .iter()
        .map(|&(v, k)| v.abs() * int(k as i64))
        .fold(Rational::zero(), |acc, x| acc + x)
}

pub fn mean_degree(vertex_count: u64, edge_count: u64) -> Result<Rational> {
    if vertex_count == 0 {
        return Err(Error::ZeroVertices);
    }
    Ok(Rational::new(2 * edge_count as i64, vertex_count as i64))
}

fn deviation_energy(s: &Spectrum, vertex_count: u64, edge_count: u64) -> Result<Rational> {
    let mean = mean_degree(vertex_count, edge_count)?;
    Ok(s.entries
        .iter()
        .map(|&(v, k)| (v - mean).abs() * int(k as i64))
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// `LE = Σ |μ - 2|e|/|V||` over the Laplacian spectrum.
pub fn laplacian_energy(l: &Spectrum, vertex_count: u64, edge_count: u64) -> Result<Rational> {
    deviation_energy(l, vertex_count, edge_count)
}

/// `LE⁺ = Σ |q - 2|e|/|V||` over the signless Laplacian spectrum.
pub fn signless_laplacian_energy(
    q: &Spectrum,
    vertex_count: u64,
    edge_count: u64,
) -> Result<Rational> {
    deviation_energy(q, vertex_count, edge_count)
}

pub fn is_super_integral(a: &Spectrum, l: &Spectrum, q: &Spectrum) -> bool {
    a.is_integral() && l.is_integral() && q.is_integral()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub vertex_count: u64,
    pub edge_count: u64,
    #[serde(with = "rational::as_string")]
    pub mean_degree: Rational,
    #[serde(with = "rational::as_string")]
    pub energy: Rational,
    #[serde(with = "rational::as_string")]
    pub laplacian_energy: Rational,
    #[serde(with = "rational::as_string")]
    pub signless_laplacian_energy: Rational,
}

impl EnergyReport {
    pub fn from_spectra(spectra: &Spectra, vertex_count: u64, edge_count: u64) -> Result<Self> {
        Ok(EnergyReport {
            vertex_count,
            edge_count,
            mean_degree: mean_degree(vertex_count, edge_count)?,
            energy: energy(&spectra.a),
            laplacian_energy: laplacian_energy(&spectra.l, vertex_count, edge_count)?,
            signless_laplacian_energy: signless_laplacian_energy(
                &spectra.q,
                vertex_count,
                edge_count,
            )?,
        })
    }

    pub fn from_shape(shape: &UnionShape) -> Result<Self> {
        Self::from_spectra(&spectra_of_union(shape), shape.vertex_count(), shape.edge_count())
    }

    /// `2(|V| - 1)`, the common value of all three energies of `K_|V|`.
    pub fn complete_graph_energy(&self) -> Rational {
        int(2 * (self.vertex_count as i64 - 1))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericReport {
    pub vertex_count: usize,
    /// Largest absolute deviation per matrix, in `A, L, Q` order.
    pub max_deviation: [f64; 3],
}

impl NumericReport {
    pub fn worst(&self) -> f64 {
        self.max_deviation.iter().copied().fold(0.0, f64::max)
    }
}

/// Vertex cap for the numeric oracle, from `CCC_MAX_NUMERIC_VERTICES`.
pub fn numeric_vertex_cap() -> usize {
    std::env::var(NUMERIC_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_NUMERIC_VERTEX_CAP)
}

/// Floating-point eigenvalues of the graph's matrices against the exact
/// spectra of its recognized shape.
pub fn numeric_cross_check(g: &CccGraph) -> Result<NumericReport> {
    let shape = complete_union_shape(g)?;
    numeric_cross_check_against(g, &spectra_of_union(&shape), numeric_vertex_cap())
}

pub fn numeric_cross_check_against(
    g: &CccGraph,
    exact: &Spectra,
    cap: usize,
) -> Result<NumericReport> {
    let k = g.vertex_count();
    if k > cap {
        return Err(Error::VertexCapExceeded { vertices: k, cap });
    }
    let adj = DMatrix::from_fn(k, k, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    let degrees = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(k, |i, _| g.degree(i) as f64));
    let matrices = [adj.clone(), &degrees - &adj, &degrees + &adj];

    let mut max_deviation = [0.0; 3];
    for (slot, (kind, matrix)) in MatrixKind::ALL.into_iter().zip(matrices).enumerate() {
        let mut numeric: Vec<f64> = SymmetricEigen::new(matrix).eigenvalues.iter().copied().collect();
        numeric.sort_by(|x, y| y.total_cmp(x));
        let expected: Vec<f64> = exact.get(kind).expanded().iter().map(rational::approx).collect();
        if expected.len() != numeric.len() {
            return Err(Error::MismatchBeyondTolerance {
                which: kind,
                exact: expected.len() as f64,
                numeric: numeric.len() as f64,
                deviation: f64::INFINITY,
            });
        }
        let mut worst = (0.0_f64, 0.0, 0.0);
        for (&e, &x) in expected.iter().zip(&numeric) {
            let deviation = (e - x).abs();
            if deviation > worst.0 || deviation.is_nan() {
                worst = (deviation, e, x);
            }
        }
        if worst.0.is_nan() || worst.0 > NUMERIC_TOLERANCE {
            return Err(Error::MismatchBeyondTolerance {
                which: kind,
                exact: worst.1,
                numeric: worst.2,
                deviation: worst.0,
            });
        }
        max_deviation[slot] = worst.0;
    }
    Ok(NumericReport {
        vertex_count: k,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ccc::build_ccc;
    use crate::groups::GroupSpec;
    use crate::rational::frac;

    fn shape(parts: &[(u64, u64)]) -> UnionShape {
        UnionShape::from_parts(parts.iter().copied())
    }

    fn spectrum(pairs: &[(i64, u64)]) -> Spectrum {
        Spectrum::from_pairs(pairs.iter().map(|&(v, k)| (int(v), k)))
    }

    #[test]
    fn d10_union_spectra() {
        let s = spectra_of_union(&shape(&[(1, 2), (1, 1)]));
        assert_eq!(s.a, spectrum(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(s.a.to_string(), "1^1, 0^1, -1^1");
        assert_eq!(s.l, spectrum(&[(2, 1), (0, 2)]));
    }

    #[test]
    fn edgeless_spectra_are_zero() {
        let s = spectra_of_union(&shape(&[(3, 1)]));
        for kind in MatrixKind::ALL {
            assert_eq!(s.get(kind), &spectrum(&[(0, 3)]));
        }
        let r = EnergyReport::from_shape(&shape(&[(3, 1)])).unwrap();
        assert_eq!(r.laplacian_energy, int(0));
        assert_eq!(r.signless_laplacian_energy, int(0));
    }

    #[test]
    fn sd24_signless_spectrum() {
        let s = spectra_of_union(&shape(&[(2, 4)]));
        assert_eq!(s.q, spectrum(&[(6, 2), (2, 6)]));
        assert_eq!(energy(&s.a), int(12));
    }

    #[test]
    fn edge_counts() {
        assert_eq!(edge_count(&shape(&[(1, 2), (1, 1)])), 1);
        assert_eq!(edge_count(&shape(&[(1, 4), (1, 2)])), 7);
        assert_eq!(edge_count(&shape(&[(2, 4)])), 12);
    }

    #[test]
    fn energies_of_d10() {
        let s = spectra_of_union(&shape(&[(1, 2), (1, 1)]));
        assert_eq!(energy(&s.a), int(2));
        assert_eq!(laplacian_energy(&s.l, 3, 1).unwrap(), frac(8, 3));
        assert_eq!(signless_laplacian_energy(&s.q, 3, 1).unwrap(), frac(8, 3));
    }

    #[test]
    fn u25_laplacian_energy() {
        let s = spectra_of_union(&shape(&[(1, 4), (1, 2)]));
        assert_eq!(s.l, spectrum(&[(4, 3), (2, 1), (0, 2)]));
        assert_eq!(laplacian_energy(&s.l, 6, 7).unwrap(), int(10));
    }

    #[test]
    fn zero_vertices_is_an_error() {
        assert_eq!(laplacian_energy(&Spectrum::default(), 0, 0), Err(Error::ZeroVertices));
    }

    #[test]
    fn signless_energy_examples() {
        // D20: K2 ⊔ K4; SD16: 2K1 ⊔ K3.
        let d20 = EnergyReport::from_shape(&shape(&[(1, 2), (1, 4)])).unwrap();
        assert_eq!(d20.signless_laplacian_energy, frac(22, 3));
        let sd16 = EnergyReport::from_shape(&shape(&[(2, 1), (1, 3)])).unwrap();
        assert_eq!(sd16.signless_laplacian_energy, frac(28, 5));
        assert_eq!(sd16.laplacian_energy, frac(36, 5));
    }

    #[test]
    fn super_integrality() {
        let s = spectra_of_union(&shape(&[(1, 2), (1, 1)]));
        assert!(s.is_super_integral());
        assert!(spectra_of_union(&shape(&[(2, 4)])).is_super_integral());
        let half = Spectrum::from_pairs([(frac(3, 2), 1)]);
        assert!(!is_super_integral(&s.a, &s.l, &half));
    }

    #[test]
    fn signed_multiplicities_cancel() {
        let s = Spectrum::from_signed([(int(2), 3), (int(2), -1), (int(0), 0)]).unwrap();
        assert_eq!(s, spectrum(&[(2, 2)]));
        assert_eq!(Spectrum::from_signed([(int(1), -1)]), Err((int(1), -1)));
    }

    #[test]
    fn spectrum_json_shape() {
        let s = Spectrum::from_pairs([(frac(-1, 2), 2), (int(3), 1)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[{"value":"3","mult":1},{"value":"-1/2","mult":2}]"#);
        assert_eq!(serde_json::from_str::<Spectrum>(&json).unwrap(), s);
    }

    #[test]
    fn numeric_oracle_on_small_graphs() {
        for spec in [
            GroupSpec::dihedral(5).unwrap(),
            GroupSpec::dicyclic(2).unwrap(),
            GroupSpec::vgroup(2).unwrap(),
        ] {
            let g = build_ccc(&spec).unwrap();
            let report = numeric_cross_check(&g).unwrap();
            assert!(report.worst() < NUMERIC_TOLERANCE, "{spec}");
        }
    }

    #[test]
    fn numeric_oracle_detects_wrong_spectrum() {
        let g = build_ccc(&GroupSpec::dihedral(5).unwrap()).unwrap();
        let mut wrong = spectra_of_union(&shape(&[(1, 2), (1, 1)]));
        wrong.l = spectrum(&[(3, 1), (0, 2)]);
        let err = numeric_cross_check_against(&g, &wrong, 512).unwrap_err();
        assert!(matches!(err, Error::MismatchBeyondTolerance { which: MatrixKind::L, .. }));
    }

    #[test]
    fn numeric_cap_is_enforced() {
        let g = build_ccc(&GroupSpec::dihedral(9).unwrap()).unwrap();
        let exact = spectra_of_union(&complete_union_shape(&g).unwrap());
        assert_eq!(
            numeric_cross_check_against(&g, &exact, 2),
            Err(Error::VertexCapExceeded { vertices: 5, cap: 2 })
        );
    }
}

//! Commuting conjugacy class graphs and their union-of-cliques shape.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{ConjugacyClass, Element, Family, GroupSpec};
use crate::EvalMode;

/// How adjacency between two classes is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdjacencyScan {
    /// Test one fixed representative of each class against every member of
    /// the other. Exact for conjugacy classes: if `x'` and `y'` commute, so
    /// do their conjugates by any `g`, and some `g` moves `x'` to the
    /// representative.
    #[default]
    Representative,
    /// Test every member pair. Kept to certify the representative scan.
    Full,
}

/// Undirected simple graph whose vertices are the non-central classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CccGraph {
    spec: GroupSpec,
    vertices: Vec<ConjugacyClass>,
    adjacency: Vec<bool>,
}

pub fn build_ccc(spec: &GroupSpec) -> Result<CccGraph> {
    build_ccc_with(spec, AdjacencyScan::default())
}

pub fn build_ccc_with(spec: &GroupSpec, scan: AdjacencyScan) -> Result<CccGraph> {
    let vertices: Vec<ConjugacyClass> = spec
        .conjugacy_classes()
        .into_iter()
        .filter(|class| !class.is_central())
        .collect();
    if vertices.is_empty() {
        return Err(Error::AbelianGroup(*spec));
    }
    let k = vertices.len();
    let mut adjacency = vec![false; k * k];
    for i in 0..k {
        for j in (i + 1)..k {
            let (x, y) = (&vertices[i], &vertices[j]);
            let edge = match scan {
                AdjacencyScan::Representative => {
                    y.members.iter().any(|&q| spec.commutes(x.representative, q))
                        || x.members.iter().any(|&p| spec.commutes(p, y.representative))
                }
                AdjacencyScan::Full => x
                    .members
                    .iter()
                    .any(|&p| y.members.iter().any(|&q| spec.commutes(p, q))),
            };
            adjacency[i * k + j] = edge;
            adjacency[j * k + i] = edge;
        }
    }
    Ok(CccGraph {
        spec: *spec,
        vertices,
        adjacency,
    })
}

impl CccGraph {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex classes, ordered by representative.
    pub fn vertices(&self) -> &[ConjugacyClass] {
        &self.vertices
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.vertices.len() + j]
    }

    /// Row-major `k x k` adjacency matrix.
    pub fn adjacency_matrix(&self) -> &[bool] {
        &self.adjacency
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let k = self.vertices.len();
        (0..k).filter(move |&j| self.adjacency[i * k + j])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// One `"u v"` line per edge, 0-based.
    pub fn to_edge_list(&self) -> String {
        self.edges()
            .into_iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect()
    }

    pub fn to_adjacency_list(&self) -> AdjacencyList {
        AdjacencyList {
            spec: self.spec,
            vertices: self
                .vertices
                .iter()
                .map(|class| VertexLabel {
                    representative: class.representative,
                    class_size: class.len(),
                })
                .collect(),
            adjacency: (0..self.vertex_count())
                .map(|i| self.neighbors(i).collect())
                .collect(),
        }
    }
}

/// Serializable adjacency-list form of a [`CccGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyList {
    pub spec: GroupSpec,
    pub vertices: Vec<VertexLabel>,
    pub adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub representative: Element,
    pub class_size: usize,
}

/// `count` disjoint copies of `K_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    pub count: u64,
    pub size: u64,
}

/// A disjoint union of complete graphs, `l_1 K_{m_1} ⊔ l_2 K_{m_2} ⊔ ...`.
///
/// Always canonical: sizes strictly decreasing, no zero counts or sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Part>", into = "Vec<Part>")]
pub struct UnionShape {
    parts: Vec<Part>,
}

impl UnionShape {
    /// Canonicalizes arbitrary `(count, size)` pairs.
    pub fn from_parts<I: IntoIterator<Item = (u64, u64)>>(parts: I) -> Self {
        let mut merged: Vec<Part> = Vec::new();
        let mut raw: Vec<(u64, u64)> = parts
            .into_iter()
            .filter(|&(count, size)| count > 0 && size > 0)
            .collect();
        raw.sort_by_key(|&(_, size)| std::cmp::Reverse(size));
        for (count, size) in raw {
            match merged.last_mut() {
                Some(last) if last.size == size => last.count += count,
                _ => merged.push(Part { count, size }),
            }
        }
        UnionShape { parts: merged }
    }

    /// One copy of `K_s` for each listed size.
    pub fn from_sizes<I: IntoIterator<Item = u64>>(sizes: I) -> Self {
        Self::from_parts(sizes.into_iter().map(|s| (1, s)))
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn vertex_count(&self) -> u64 {
        self.parts.iter().map(|p| p.count * p.size).sum()
    }

    pub fn component_count(&self) -> u64 {
        self.parts.iter().map(|p| p.count).sum()
    }

    pub fn edge_count(&self) -> u64 {
        self.parts
            .iter()
            .map(|p| p.count * p.size * (p.size - 1) / 2)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl From<Vec<Part>> for UnionShape {
    fn from(parts: Vec<Part>) -> Self {
        Self::from_parts(parts.into_iter().map(|p| (p.count, p.size)))
    }
}

impl From<UnionShape> for Vec<Part> {
    fn from(shape: UnionShape) -> Self {
        shape.parts
    }
}

impl fmt::Display for UnionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊔ ")?;
            }
            if part.count > 1 {
                write!(f, "{}", part.count)?;
            }
            write!(f, "K{}", part.size)?;
        }
        Ok(())
    }
}

/// Recognizes the graph as a disjoint union of cliques.
pub fn complete_union_shape(g: &CccGraph) -> Result<UnionShape> {
    shape_of_adjacency(g.vertex_count(), g.adjacency_matrix())
}

/// As [`complete_union_shape`] for any row-major symmetric adjacency matrix.
pub fn shape_of_adjacency(vertex_count: usize, adjacency: &[bool]) -> Result<UnionShape> {
    assert_eq!(adjacency.len(), vertex_count * vertex_count);
    let mut seen = vec![false; vertex_count];
    let mut sizes = Vec::new();
    for start in 0..vertex_count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..vertex_count {
                if adjacency[u * vertex_count + v] && !seen[v] {
                    seen[v] = true;
                    component.push(v);
                    queue.push_back(v);
                }
            }
        }
        component.sort_unstable();
        let complete = component.iter().all(|&u| {
            component
                .iter()
                .all(|&v| u == v || adjacency[u * vertex_count + v])
        });
        if !complete {
            return Err(Error::NotUnionOfCliques { component });
        }
        sizes.push(component.len() as u64);
    }
    Ok(UnionShape::from_sizes(sizes))
}

/// The shape predicted for each family and parity.
///
/// In `Formal` mode `UMeta` with `m = 2` yields `2K_n` (the `K_0` part is
/// dropped); in `Strict` mode it is rejected as abelian.
pub fn expected_shape(spec: &GroupSpec, mode: EvalMode) -> Result<UnionShape> {
    let n = spec.n().unwrap_or(0) as u64;
    let m = spec.m().unwrap_or(0) as u64;
    let parts: Vec<(u64, u64)> = match spec.family() {
        Family::Dihedral if n % 2 == 1 => vec![(1, 1), (1, (n - 1) / 2)],
        Family::Dihedral if n.is_multiple_of(4) => vec![(2, 1), (1, n / 2 - 1)],
        Family::Dihedral => vec![(1, 2), (1, n / 2 - 1)],
        Family::Dicyclic if m % 2 == 1 => vec![(1, 2), (1, m - 1)],
        Family::Dicyclic => vec![(2, 1), (1, m - 1)],
        Family::UMeta if m == 2 && mode == EvalMode::Strict => {
            return Err(Error::AbelianGroup(*spec))
        }
        Family::UMeta if m % 2 == 1 => vec![(1, n * (m - 1) / 2), (1, n)],
        Family::UMeta => vec![(1, n * (m - 2) / 2), (2, n)],
        Family::VGroup if n % 2 == 1 => vec![(2, 1), (1, 2 * n - 1)],
        Family::VGroup => vec![(2, 2), (1, 2 * n - 2)],
        Family::SemiDihedral if n % 2 == 1 => vec![(1, 4), (1, 2 * n - 2)],
        Family::SemiDihedral => vec![(2, 1), (1, 2 * n - 1)],
    };
    Ok(UnionShape::from_parts(parts))
}

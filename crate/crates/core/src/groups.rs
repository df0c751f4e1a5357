//! The five group families, represented by normal-form exponent pairs.
//!
//! Every element is written uniquely as `x^a y^b` with `a` reduced modulo the
//! order of `x` and `b` modulo the range of `y`. Multiplication moves `y^b`
//! past `x^c` with a per-family commutation law:
//!
//! ```text
//! Dihedral       y^b x^c = x^{c(-1)^b} y^b                   (y^2 = 1)
//! Dicyclic       y^b x^c = x^{c(-1)^b} y^b                   (y^2 = x^m)
//! UMeta          y^b x^c = x^c y^{b(-1)^c}
//! VGroup         y^b x^c = x^{c(-1)^b} y^{b(-1)^c}
//! SemiDihedral   y^b x^c = x^{c(2n-1)^b} y^b
//! ```
//!
//! None of these laws is trusted: [`validate_presentation`] checks closure,
//! associativity, inverses, generation and every defining relation before the
//! arithmetic is used anywhere else.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Above this order the Cayley table is not materialized and associativity is
/// checked on a seeded random sample of triples.
pub const CAYLEY_TABLE_MAX_ORDER: usize = 200;
const SAMPLED_TRIPLES: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Dihedral,
    Dicyclic,
    UMeta,
    VGroup,
    SemiDihedral,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Dihedral,
        Family::Dicyclic,
        Family::UMeta,
        Family::VGroup,
        Family::SemiDihedral,
    ];

    /// Short name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::Dihedral => "d2n",
            Family::Dicyclic => "q4m",
            Family::UMeta => "u",
            Family::VGroup => "v8n",
            Family::SemiDihedral => "sd8n",
        }
    }

    pub fn uses_n(self) -> bool {
        self != Family::Dicyclic
    }

    pub fn uses_m(self) -> bool {
        matches!(self, Family::Dicyclic | Family::UMeta)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "d2n" | "d" | "dihedral" => Ok(Family::Dihedral),
            "q4m" | "q" | "dicyclic" => Ok(Family::Dicyclic),
            "u" | "unm" | "umeta" => Ok(Family::UMeta),
            "v8n" | "v" | "vgroup" => Ok(Family::VGroup),
            "sd8n" | "sd" | "semidihedral" => Ok(Family::SemiDihedral),
            other => Err(format!(
                "unknown family {other:?} (expected d2n, q4m, u, v8n or sd8n)"
            )),
        }
    }
}

/// A validated member of one of the five families.
///
/// `n` is meaningful for every family except `Dicyclic`; `m` only for
/// `Dicyclic` and `UMeta`. Unused parameters are stored as zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct GroupSpec {
    family: Family,
    n: u32,
    m: u32,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
}

impl From<GroupSpec> for RawSpec {
    fn from(spec: GroupSpec) -> Self {
        RawSpec {
            family: spec.family,
            n: spec.n(),
            m: spec.m(),
        }
    }
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        GroupSpec::new(raw.family, raw.n, raw.m)
    }
}

impl GroupSpec {
    /// Validates parameters against the lower bounds of each presentation.
    pub fn new(family: Family, n: Option<u32>, m: Option<u32>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidParams { family, reason };
        let need = |value: Option<u32>, name: &str, min: u32| -> Result<u32> {
            match value {
                None => Err(invalid(format!("parameter {name} is required"))),
                Some(v) if v < min => Err(invalid(format!("{name} must be at least {min}, got {v}"))),
                Some(v) => Ok(v),
            }
        };
        let forbid = |value: Option<u32>, name: &str| -> Result<()> {
            match value {
                Some(_) => Err(invalid(format!("parameter {name} does not apply"))),
                None => Ok(()),
            }
        };
        let (n, m) = match family {
            Family::Dihedral => {
                forbid(m, "m")?;
                (need(n, "n", 3)?, 0)
            }
            Family::Dicyclic => {
                forbid(n, "n")?;
                (0, need(m, "m", 2)?)
            }
            Family::UMeta => (need(n, "n", 2)?, need(m, "m", 2)?),
            Family::VGroup | Family::SemiDihedral => {
                forbid(m, "m")?;
                (need(n, "n", 2)?, 0)
            }
        };
        Ok(GroupSpec { family, n, m })
    }

    pub fn dihedral(n: u32) -> Result<Self> {
        Self::new(Family::Dihedral, Some(n), None)
    }

    pub fn dicyclic(m: u32) -> Result<Self> {
        Self::new(Family::Dicyclic, None, Some(m))
    }

    pub fn umeta(n: u32, m: u32) -> Result<Self> {
        Self::new(Family::UMeta, Some(n), Some(m))
    }

    pub fn vgroup(n: u32) -> Result<Self> {
        Self::new(Family::VGroup, Some(n), None)
    }

    pub fn semidihedral(n: u32) -> Result<Self> {
        Self::new(Family::SemiDihedral, Some(n), None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> Option<u32> {
        self.family.uses_n().then_some(self.n)
    }

    pub fn m(&self) -> Option<u32> {
        self.family.uses_m().then_some(self.m)
    }

    /// Order of the generator `x`, i.e. the modulus of the `a` exponent.
    pub fn x_order(&self) -> u32 {
        match self.family {
            Family::Dihedral => self.n,
            Family::Dicyclic => 2 * self.m,
            Family::UMeta | Family::VGroup => 2 * self.n,
            Family::SemiDihedral => 4 * self.n,
        }
    }

    /// Number of distinct `b` exponents in the normal form.
    pub fn y_range(&self) -> u32 {
        match self.family {
            Family::Dihedral | Family::Dicyclic | Family::SemiDihedral => 2,
            Family::UMeta => self.m,
            Family::VGroup => 4,
        }
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::Dihedral => 2 * self.n as usize,
            Family::Dicyclic => 4 * self.m as usize,
            Family::UMeta => 2 * (self.n as usize) * (self.m as usize),
            Family::VGroup | Family::SemiDihedral => 8 * self.n as usize,
        }
    }

    pub fn is_canonical(&self, p: Element) -> bool {
        p.a < self.x_order() && p.b < self.y_range()
    }

    pub fn element(&self, a: u32, b: u32) -> Result<Element> {
        let p = Element { a, b };
        if self.is_canonical(p) {
            Ok(p)
        } else {
            Err(Error::NonCanonical { spec: *self, a, b })
        }
    }

    pub fn x(&self) -> Element {
        Element { a: 1, b: 0 }
    }

    pub fn y(&self) -> Element {
        Element { a: 0, b: 1 }
    }

    /// All elements in lexicographic `(a, b)` order.
    pub fn elements(&self) -> Vec<Element> {
        let yr = self.y_range();
        (0..self.x_order())
            .flat_map(|a| (0..yr).map(move |b| Element { a, b }))
            .collect()
    }

    /// Position of `p` in [`GroupSpec::elements`].
    pub fn index_of(&self, p: Element) -> usize {
        p.a as usize * self.y_range() as usize + p.b as usize
    }

    /// Product `p * q` in normal form.
    ///
    /// Panics if either operand is not canonical for this group.
    pub fn multiply(&self, p: Element, q: Element) -> Element {
        assert!(
            self.is_canonical(p) && self.is_canonical(q),
            "non-canonical operand for {self}: {p} * {q}"
        );
        self.multiply_unchecked(p, q)
    }

    fn multiply_unchecked(&self, p: Element, q: Element) -> Element {
        let (a1, b1, a2, b2) = (p.a as i64, p.b as i64, q.a as i64, q.b as i64);
        let (a, b) = match self.family {
            Family::Dihedral => (a1 + parity_sign(b1) * a2, b1 + b2),
            Family::Dicyclic => {
                let carry = if b1 + b2 >= 2 { self.m as i64 } else { 0 };
                (a1 + parity_sign(b1) * a2 + carry, b1 + b2)
            }
            Family::UMeta => (a1 + a2, b1 * parity_sign(a2) + b2),
            Family::VGroup => (a1 + parity_sign(b1) * a2, b1 * parity_sign(a2) + b2),
            Family::SemiDihedral => {
                let twist = if b1 == 1 { 2 * self.n as i64 - 1 } else { 1 };
                (a1 + a2 * twist, b1 + b2)
            }
        };
        Element {
            a: a.rem_euclid(self.x_order() as i64) as u32,
            b: b.rem_euclid(self.y_range() as i64) as u32,
        }
    }

    pub fn inverse(&self, p: Element) -> Element {
        assert!(self.is_canonical(p), "non-canonical operand for {self}: {p}");
        let (a, b) = (p.a as i64, p.b as i64);
        let (ia, ib) = match self.family {
            Family::Dihedral | Family::VGroup => {
                // x^a y^b * x^c y^d = x^{a + c(-1)^b} ..., and c has the parity of a.
                (-a * parity_sign(b), -b * parity_sign(a))
            }
            Family::Dicyclic => {
                if b == 0 {
                    (-a, 0)
                } else {
                    (a + self.m as i64, 1)
                }
            }
            Family::UMeta => (-a, -b * parity_sign(a)),
            Family::SemiDihedral => {
                // (2n-1)^2 = 1 mod 4n, so the twist is its own inverse.
                if b == 0 {
                    (-a, 0)
                } else {
                    (-a * (2 * self.n as i64 - 1), 1)
                }
            }
        };
        Element {
            a: ia.rem_euclid(self.x_order() as i64) as u32,
            b: ib.rem_euclid(self.y_range() as i64) as u32,
        }
    }

    /// `p^k` for any integer `k` (negative powers go through the inverse).
    pub fn pow(&self, p: Element, k: i64) -> Element {
        let base = if k < 0 { self.inverse(p) } else { p };
        let mut acc = Element::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(acc, base);
        }
        acc
    }

    pub fn commutes(&self, p: Element, q: Element) -> bool {
        self.multiply(p, q) == self.multiply(q, p)
    }

    /// `g^{-1} p g`.
    pub fn conjugate(&self, p: Element, g: Element) -> Element {
        self.multiply(self.multiply(self.inverse(g), p), g)
    }

    /// Elements commuting with every element, found by exhaustive check.
    pub fn center(&self) -> Vec<Element> {
        let elements = self.elements();
        elements
            .iter()
            .copied()
            .filter(|&z| elements.iter().all(|&g| self.commutes(z, g)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Conjugation orbits, ordered by their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let elements = self.elements();
        let inverses: Vec<Element> = elements.iter().map(|&g| self.inverse(g)).collect();
        let mut assigned = vec![false; elements.len()];
        let mut classes = Vec::new();
        for &p in &elements {
            if assigned[self.index_of(p)] {
                continue;
            }
            let orbit: BTreeSet<Element> = elements
                .iter()
                .zip(&inverses)
                .map(|(&g, &g_inv)| self.multiply(self.multiply(g_inv, p), g))
                .collect();
            for &q in &orbit {
                assigned[self.index_of(q)] = true;
            }
            // Iteration is in lexicographic order, so p is the orbit minimum.
            classes.push(ConjugacyClass {
                representative: p,
                members: orbit.into_iter().collect(),
            });
        }
        classes
    }

    /// The defining relations of the family's presentation, as `lhs = rhs`.
    pub fn relations(&self) -> Vec<Relation> {
        use Generator::{X, Y};
        let n = self.n as i64;
        let m = self.m as i64;
        let rel = |text: String, lhs: Vec<(Generator, i64)>, rhs: Vec<(Generator, i64)>| Relation {
            text,
            lhs,
            rhs,
        };
        match self.family {
            Family::Dihedral => vec![
                rel(format!("x^{n} = 1"), vec![(X, n)], vec![]),
                rel("y^2 = 1".into(), vec![(Y, 2)], vec![]),
                rel("yxy = x^-1".into(), vec![(Y, 1), (X, 1), (Y, 1)], vec![(X, -1)]),
            ],
            Family::Dicyclic => vec![
                rel(format!("x^{} = 1", 2 * m), vec![(X, 2 * m)], vec![]),
                rel(format!("x^{m} = y^2"), vec![(X, m)], vec![(Y, 2)]),
                rel(
                    "y^-1 x y = x^-1".into(),
                    vec![(Y, -1), (X, 1), (Y, 1)],
                    vec![(X, -1)],
                ),
            ],
            Family::UMeta => vec![
                rel(format!("x^{} = 1", 2 * n), vec![(X, 2 * n)], vec![]),
                rel(format!("y^{m} = 1"), vec![(Y, m)], vec![]),
                rel(
                    "x^-1 y x = y^-1".into(),
                    vec![(X, -1), (Y, 1), (X, 1)],
                    vec![(Y, -1)],
                ),
            ],
            Family::VGroup => vec![
                rel(format!("x^{} = 1", 2 * n), vec![(X, 2 * n)], vec![]),
                rel("y^4 = 1".into(), vec![(Y, 4)], vec![]),
                rel(
                    "yx = x^-1 y^-1".into(),
                    vec![(Y, 1), (X, 1)],
                    vec![(X, -1), (Y, -1)],
                ),
                rel(
                    "y^-1 x = x^-1 y".into(),
                    vec![(Y, -1), (X, 1)],
                    vec![(X, -1), (Y, 1)],
                ),
            ],
            Family::SemiDihedral => vec![
                rel(format!("x^{} = 1", 4 * n), vec![(X, 4 * n)], vec![]),
                rel("y^2 = 1".into(), vec![(Y, 2)], vec![]),
                rel(
                    format!("yxy = x^{}", 2 * n - 1),
                    vec![(Y, 1), (X, 1), (Y, 1)],
                    vec![(X, 2 * n - 1)],
                ),
            ],
        }
    }

    /// Evaluates a word `g1^k1 g2^k2 ...` in the generators.
    pub fn evaluate(&self, word: &[(Generator, i64)]) -> Element {
        word.iter().fold(Element::IDENTITY, |acc, &(g, k)| {
            let base = match g {
                Generator::X => self.x(),
                Generator::Y => self.y(),
            };
            self.multiply(acc, self.pow(base, k))
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Dihedral => write!(f, "D{}", self.order()),
            Family::Dicyclic => write!(f, "Q{}", self.order()),
            Family::UMeta => write!(f, "U({},{})", self.n, self.m),
            Family::VGroup => write!(f, "V{}", self.order()),
            Family::SemiDihedral => write!(f, "SD{}", self.order()),
        }
    }
}

fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The normal form `x^a y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    pub a: u32,
    pub b: u32,
}

impl Element {
    pub const IDENTITY: Element = Element { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        Element { a, b }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("1"),
            (a, 0) => write!(f, "x^{a}"),
            (0, b) => write!(f, "y^{b}"),
            (a, b) => write!(f, "x^{a}y^{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub representative: Element,
    /// Sorted, and always containing `representative` as its first entry.
    pub members: Vec<Element>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Singleton classes are exactly the central elements.
    pub fn is_central(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

#[derive(Debug, Clone)]
pub struct Relation {
    pub text: String,
    pub lhs: Vec<(Generator, i64)>,
    pub rhs: Vec<(Generator, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomViolation {
    OrderMismatch { expected: usize, found: usize },
    IdentityFails { element: Element },
    NotAssociative { p: Element, q: Element, r: Element },
    MissingInverse { element: Element },
    RelationFails { relation: String },
    NotGenerated { reached: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::OrderMismatch { expected, found } => {
                write!(f, "order {found}, expected {expected}")
            }
            AxiomViolation::IdentityFails { element } => {
                write!(f, "identity law fails at {element}")
            }
            AxiomViolation::NotAssociative { p, q, r } => {
                write!(f, "({p} {q}) {r} != {p} ({q} {r})")
            }
            AxiomViolation::MissingInverse { element } => write!(f, "{element} has no inverse"),
            AxiomViolation::RelationFails { relation } => write!(f, "relation {relation} fails"),
            AxiomViolation::NotGenerated { reached } => {
                write!(f, "x and y generate only {reached} elements")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub spec: GroupSpec,
    pub order: usize,
    /// Whether associativity was checked on every triple (`false`: sampled).
    pub exhaustive: bool,
    pub violations: Vec<AxiomViolation>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the normal-form arithmetic really is the presented group.
pub fn validate_presentation(spec: &GroupSpec) -> PresentationReport {
    let elements = spec.elements();
    let order = elements.len();
    let mut violations = Vec::new();

    let distinct: BTreeSet<Element> = elements.iter().copied().collect();
    if order != spec.order() || distinct.len() != order {
        violations.push(AxiomViolation::OrderMismatch {
            expected: spec.order(),
            found: distinct.len(),
        });
    }

    for &p in &elements {
        if spec.multiply(Element::IDENTITY, p) != p || spec.multiply(p, Element::IDENTITY) != p {
            violations.push(AxiomViolation::IdentityFails { element: p });
        }
        let inv = spec.inverse(p);
        let two_sided = spec.multiply(p, inv) == Element::IDENTITY
            && spec.multiply(inv, p) == Element::IDENTITY;
        if !two_sided && !elements.iter().any(|&q| spec.multiply(p, q) == Element::IDENTITY) {
            violations.push(AxiomViolation::MissingInverse { element: p });
        }
    }

    let exhaustive = order <= CAYLEY_TABLE_MAX_ORDER;
    if let Some(bad) = if exhaustive {
        associativity_exhaustive(spec, &elements)
    } else {
        associativity_sampled(spec, &elements)
    } {
        violations.push(bad);
    }

    for relation in spec.relations() {
        if spec.evaluate(&relation.lhs) != spec.evaluate(&relation.rhs) {
            violations.push(AxiomViolation::RelationFails {
                relation: relation.text,
            });
        }
    }

    let reached = generated_subgroup_size(spec);
    if reached != spec.order() {
        violations.push(AxiomViolation::NotGenerated { reached });
    }

    PresentationReport {
        spec: *spec,
        order,
        exhaustive,
        violations,
    }
}

fn associativity_exhaustive(spec: &GroupSpec, elements: &[Element]) -> Option<AxiomViolation> {
    let order = elements.len();
    let table: Vec<usize> = elements
        .iter()
        .flat_map(|&p| elements.iter().map(move |&q| spec.index_of(spec.multiply(p, q))))
        .collect();
    for i in 0..order {
        for j in 0..order {
            let ij = table[i * order + j];
            for k in 0..order {
                if table[ij * order + k] != table[i * order + table[j * order + k]] {
                    return Some(AxiomViolation::NotAssociative {
                        p: elements[i],
                        q: elements[j],
                        r: elements[k],
                    });
                }
            }
        }
    }
    None
}

fn associativity_sampled(spec: &GroupSpec, elements: &[Element]) -> Option<AxiomViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(elements.len() as u64);
    for _ in 0..SAMPLED_TRIPLES {
        let p = elements[rng.gen_range(0..elements.len())];
        let q = elements[rng.gen_range(0..elements.len())];
        let r = elements[rng.gen_range(0..elements.len())];
        let left = spec.multiply(spec.multiply(p, q), r);
        let right = spec.multiply(p, spec.multiply(q, r));
        if left != right {
            return Some(AxiomViolation::NotAssociative { p, q, r });
        }
    }
    None
}

fn generated_subgroup_size(spec: &GroupSpec) -> usize {
    let mut seen = BTreeSet::from([Element::IDENTITY]);
    let mut queue = VecDeque::from([Element::IDENTITY]);
    while let Some(p) = queue.pop_front() {
        for g in [spec.x(), spec.y()] {
            let next = spec.multiply(p, g);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

//! The combinatorial hypergraph core.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{self, NormSpec, Point};

/// A finite hypergraph H = (V, E). Vertices are indices 0..n-1; an
/// optional embedding attaches a point of R^d to each vertex. Edges are
/// stored as sorted index sequences with set semantics: duplicates are
/// merged at construction, first occurrence order is kept.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    embedding: Option<Vec<Point>>,
}

/// One invariant violation found by [`validate_parts`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Violation {
    EdgeTooSmall { edge: usize, size: usize },
    IndexOutOfRange { edge: usize, vertex: usize },
    DuplicateEdge { edge: usize },
    EmbeddingLengthMismatch { expected: usize, actual: usize },
    EmbeddingDimMismatch { vertex: usize },
    NonFiniteCoordinate { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeTooSmall { edge, size } => {
                write!(f, "edge {edge} has size {size} < 2")
            }
            Violation::IndexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge} references out-of-range vertex {vertex}")
            }
            Violation::DuplicateEdge { edge } => write!(f, "edge {edge} duplicates an earlier edge"),
            Violation::EmbeddingLengthMismatch { expected, actual } => {
                write!(f, "embedding has {actual} points, expected {expected}")
            }
            Violation::EmbeddingDimMismatch { vertex } => {
                write!(f, "embedding point {vertex} has inconsistent dimension")
            }
            Violation::NonFiniteCoordinate { vertex } => {
                write!(f, "embedding point {vertex} has a non-finite coordinate")
            }
        }
    }
}

/// Report every invariant violation in raw hypergraph data. Edges here
/// are taken as given (after within-edge dedup) so duplicate edges are
/// visible, unlike in [`Hypergraph::new`] which merges them.
pub fn validate_parts(
    n: usize,
    edges: &[Vec<usize>],
    embedding: Option<&[Point]>,
) -> Vec<Violation> {
    let mut report = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (idx, e) in edges.iter().enumerate() {
        let set: BTreeSet<usize> = e.iter().copied().collect();
        if set.len() < 2 {
            report.push(Violation::EdgeTooSmall {
                edge: idx,
                size: set.len(),
            });
        }
        for &v in &set {
            if v >= n {
                report.push(Violation::IndexOutOfRange { edge: idx, vertex: v });
            }
        }
        let key: Vec<usize> = set.into_iter().collect();
        if !seen.insert(key) {
            report.push(Violation::DuplicateEdge { edge: idx });
        }
    }
    if let Some(pts) = embedding {
        if pts.len() != n {
            report.push(Violation::EmbeddingLengthMismatch {
                expected: n,
                actual: pts.len(),
            });
        }
        let d = pts.first().map(|p| p.dim()).unwrap_or(0);
        for (v, p) in pts.iter().enumerate() {
            if p.dim() != d {
                report.push(Violation::EmbeddingDimMismatch { vertex: v });
            }
            if p.coords().iter().any(|c| !c.is_finite()) {
                report.push(Violation::NonFiniteCoordinate { vertex: v });
            }
        }
    }
    report
}

impl Hypergraph {
    /// Construct a hypergraph, normalizing edges to sorted sequences and
    /// merging duplicates. Errors on any other invariant violation.
    pub fn new(
        n: usize,
        edges: Vec<Vec<usize>>,
        embedding: Option<Vec<Point>>,
    ) -> Result<Self> {
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for e in &edges {
            let set: BTreeSet<usize> = e.iter().copied().collect();
            let sorted: Vec<usize> = set.into_iter().collect();
            if seen.insert(sorted.clone()) {
                normalized.push(sorted);
            }
        }
        let violations = validate_parts(n, &normalized, embedding.as_deref());
        if let Some(v) = violations.first() {
            return Err(Error::invalid(format!("malformed hypergraph: {v}")));
        }
        Ok(Hypergraph {
            n,
            edges: normalized,
            embedding,
        })
    }

    /// A graph (2-uniform hypergraph) from index pairs.
    pub fn from_pairs(
        n: usize,
        pairs: &[(usize, usize)],
        embedding: Option<Vec<Point>>,
    ) -> Result<Self> {
        Hypergraph::new(n, pairs.iter().map(|&(i, j)| vec![i, j]).collect(), embedding)
    }

    /// The unit-distance graph on a finite point set.
    pub fn unit_distance(points: Vec<Point>, norm: NormSpec, tol: f64) -> Result<Self> {
        let pairs = geometry::unit_distance_pairs(&points, norm, tol)?;
        Hypergraph::from_pairs(points.len(), &pairs, Some(points))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn embedding(&self) -> Option<&[Point]> {
        self.embedding.as_deref()
    }

    pub fn dim(&self) -> Option<usize> {
        self.embedding
            .as_ref()
            .and_then(|e| e.first().map(|p| p.dim()))
    }

    /// Drop the geometric embedding, keeping the combinatorics.
    pub fn without_embedding(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.clone(),
            embedding: None,
        }
    }

    /// True iff every edge has cardinality exactly m.
    pub fn is_uniform(&self, m: usize) -> bool {
        self.edges.iter().all(|e| e.len() == m)
    }

    /// The common edge cardinality, if the hypergraph is uniform and has
    /// at least one edge.
    pub fn uniformity(&self) -> Option<usize> {
        let m = self.edges.first()?.len();
        self.is_uniform(m).then_some(m)
    }

    /// The subhypergraph induced by U: vertex set U reindexed 0..|U|-1,
    /// edges exactly those lying inside U. Returns the new hypergraph
    /// together with the map new index -> original index.
    pub fn induced(&self, u: &[usize]) -> Result<(Hypergraph, Vec<usize>)> {
        let set: BTreeSet<usize> = u.iter().copied().collect();
        if set.len() < 2 {
            return Err(Error::invalid("induced vertex set must have >= 2 vertices"));
        }
        if let Some(&v) = set.iter().find(|&&v| v >= self.n) {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        let new_to_old: Vec<usize> = set.iter().copied().collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| set.contains(v)))
            .map(|e| e.iter().map(|&v| old_to_new[v]).collect())
            .collect();
        let embedding = self
            .embedding
            .as_ref()
            .map(|pts| new_to_old.iter().map(|&v| pts[v].clone()).collect());
        Ok((
            Hypergraph::new(new_to_old.len(), edges, embedding)?,
            new_to_old,
        ))
    }

    /// Diameter of the embedding under `norm`; 0.0 when unembedded.
    pub fn diameter(&self, norm: NormSpec) -> Result<f64> {
        let Some(pts) = &self.embedding else {
            return Ok(0.0);
        };
        let mut diam: f64 = 0.0;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                diam = diam.max(geometry::distance(&pts[i], &pts[j], norm)?);
            }
        }
        Ok(diam)
    }
}

/// How translate offsets are chosen for [`disjoint_translates`].
#[derive(Clone, Debug)]
pub enum OffsetRule {
    /// t_i = i * (diameter + 1) along the first coordinate axis. Keeps
    /// copies disjoint for any embedded input.
    AxisSpaced { norm: NormSpec },
    /// Explicit translation vectors, one per copy.
    Explicit(Vec<Point>),
}

impl Default for OffsetRule {
    fn default() -> Self {
        OffsetRule::AxisSpaced {
            norm: NormSpec::L2,
        }
    }
}

/// k vertex-disjoint copies of a hypergraph. Copy i owns the index
/// range [i*n, (i+1)*n).
#[derive(Clone, Debug)]
pub struct DisjointTranslates {
    pub copies: Vec<Hypergraph>,
    pub offsets: Option<Vec<Point>>,
}

/// Build k disjoint translated copies of H. Each copy is structurally
/// isomorphic to H; embedded copies are translated per the offset rule
/// and checked for pairwise point disjointness.
pub fn disjoint_translates(
    h: &Hypergraph,
    k: usize,
    rule: &OffsetRule,
    tol: f64,
) -> Result<DisjointTranslates> {
    if k < 1 {
        return Err(Error::invalid("k must be >= 1"));
    }
    let offsets: Option<Vec<Point>> = match (&h.embedding, rule) {
        (None, _) => None,
        (Some(_), OffsetRule::AxisSpaced { norm }) => {
            let d = h.dim().unwrap();
            let step = h.diameter(*norm)? + 1.0;
            Some(
                (0..k)
                    .map(|i| {
                        let mut v = vec![0.0; d];
                        v[0] = i as f64 * step;
                        Point(v)
                    })
                    .collect(),
            )
        }
        (Some(_), OffsetRule::Explicit(vs)) => {
            if vs.len() != k {
                return Err(Error::invalid(format!(
                    "offset rule supplies {} vectors for k = {k}",
                    vs.len()
                )));
            }
            Some(vs.clone())
        }
    };

    let mut copies = Vec::with_capacity(k);
    for i in 0..k {
        let embedding = match (&h.embedding, &offsets) {
            (Some(pts), Some(offs)) => Some(geometry::translate(pts, &offs[i])?),
            _ => None,
        };
        copies.push(Hypergraph {
            n: h.n,
            edges: h.edges.clone(),
            embedding,
        });
    }

    // Translates must not share points.
    if h.embedding.is_some() {
        for i in 0..k {
            for j in (i + 1)..k {
                let a = copies[i].embedding().unwrap();
                let b = copies[j].embedding().unwrap();
                for p in a {
                    for q in b {
                        if geometry::distance(p, q, NormSpec::L2)? <= tol {
                            return Err(Error::invalid(format!(
                                "translates {i} and {j} overlap"
                            )));
                        }
                    }
                }
            }
        }
    }

    Ok(DisjointTranslates {
        copies,
        offsets,
    })
}

/// A total coloring of vertices 0..n-1 with colors 1..=m.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Coloring {
    pub m: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(m: usize, colors: Vec<usize>) -> Result<Self> {
        if m < 1 {
            return Err(Error::invalid("color count m must be >= 1"));
        }
        if let Some(&c) = colors.iter().find(|&&c| c < 1 || c > m) {
            return Err(Error::invalid(format!(
                "color {c} outside {{1,...,{m}}}"
            )));
        }
        Ok(Coloring { m, colors })
    }

    pub fn constant(n: usize) -> Self {
        Coloring {
            m: 1,
            colors: vec![1; n],
        }
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let set: BTreeSet<usize> = self.colors.iter().copied().collect();
        set.len()
    }
}

//! Congruence-closed edge families on finite point sets: instantiating
//! gon families over a finite window, product colorings, gon
//! augmentation, m-sets-with-a-unit-pair hypergraphs, and heuristic
//! witness search.

mod builtin;
mod witness;

pub use builtin::{builtin_points, BuiltinPointSet};
pub use witness::{witness_search, Witness, WitnessOptions, WitnessStrategy};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{self, NormSpec, Point};
use crate::hypergraph::Hypergraph;
use crate::tiling::PeriodicColoring;

/// Cap on the number of m-subsets any enumeration here will walk.
const SUBSET_CAP: u64 = 2_000_000;

/// A finite set of gons (point sets of equal cardinality m).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GonSet {
    d: usize,
    m: usize,
    gons: Vec<Vec<Point>>,
}

impl GonSet {
    pub fn new(d: usize, m: usize, gons: Vec<Vec<Point>>) -> Result<Self> {
        if d < 1 {
            return Err(Error::invalid("dimension must be >= 1"));
        }
        if m < 2 {
            return Err(Error::invalid("gon cardinality must be >= 2"));
        }
        for (gi, gon) in gons.iter().enumerate() {
            if gon.len() != m {
                return Err(Error::invalid(format!(
                    "gon {gi} has {} points, expected {m}",
                    gon.len()
                )));
            }
            for p in gon {
                geometry::check_dims(d, p.dim())?;
            }
            for i in 0..gon.len() {
                for j in (i + 1)..gon.len() {
                    if gon[i] == gon[j] {
                        return Err(Error::invalid(format!(
                            "gon {gi} repeats a point"
                        )));
                    }
                }
            }
        }
        Ok(GonSet { d, m, gons })
    }

    /// The single 2-gon {0, e1}: all its Euclidean congruent copies are
    /// exactly the unit-distance pairs.
    pub fn unit_segment(d: usize) -> Result<Self> {
        let mut e1 = vec![0.0; d];
        e1[0] = 1.0;
        GonSet::new(d, 2, vec![vec![Point::origin(d), Point(e1)]])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gons(&self) -> &[Vec<Point>] {
        &self.gons
    }

    /// Every gon contains at least one pair at Euclidean distance 1.
    pub fn is_unit(&self, tol: f64) -> Result<bool> {
        for gon in &self.gons {
            let has_unit = geometry::unit_distance_pairs(gon, NormSpec::L2, tol)
                .map(|p| !p.is_empty())
                .unwrap_or(false);
            if !has_unit {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Which congruence notion matches gons against candidate subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CongruenceMode {
    /// Full Euclidean congruence (isometries of L2). Requires the L2
    /// norm; for other norms the isometry group is norm-dependent and
    /// not implemented.
    Euclidean,
    /// Congruence up to translation only, valid under every norm.
    Translation,
}

/// Is X a translate of T? Complete over all anchor choices.
pub fn translation_congruent(xs: &[Point], t: &[Point], tol: f64) -> Result<bool> {
    if xs.len() != t.len() {
        return Ok(false);
    }
    if xs.is_empty() {
        return Ok(true);
    }
    for anchor in t {
        let v = Point(xs[0].sub(anchor)?);
        let shifted = geometry::translate(t, &v)?;
        if points_set_equal(xs, &shifted, tol)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Set equality of point lists within tol, by greedy distinct matching.
fn points_set_equal(a: &[Point], b: &[Point], tol: f64) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for p in a {
        for (j, q) in b.iter().enumerate() {
            if !used[j] && geometry::distance(p, q, NormSpec::L2)? <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// The hypergraph H(M)|_F: vertices are the points of F, edges exactly
/// the m-subsets of F congruent (per mode) to some gon in M.
pub fn instantiate(
    m_set: &GonSet,
    f: &[Point],
    norm: NormSpec,
    mode: CongruenceMode,
    tol: f64,
) -> Result<Hypergraph> {
    if tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if mode == CongruenceMode::Euclidean && !norm.is_euclidean() {
        return Err(Error::invalid(
            "euclidean-congruence mode requires the L2 norm",
        ));
    }
    for p in f {
        geometry::check_dims(m_set.d, p.dim())?;
    }
    let m = m_set.m;
    if binomial(f.len() as u64, m as u64) > SUBSET_CAP {
        return Err(Error::resource(format!(
            "instantiation would enumerate more than {SUBSET_CAP} subsets"
        )));
    }
    let mut edges = Vec::new();
    for combo in (0..f.len()).combinations(m) {
        let subset: Vec<Point> = combo.iter().map(|&i| f[i].clone()).collect();
        let mut matched = false;
        for gon in &m_set.gons {
            matched = match mode {
                CongruenceMode::Euclidean => {
                    geometry::congruent_euclidean(&subset, gon, tol)?.is_some()
                }
                CongruenceMode::Translation => translation_congruent(&subset, gon, tol)?,
            };
            if matched {
                break;
            }
        }
        if matched {
            edges.push(combo);
        }
    }
    Hypergraph::new(f.len(), edges, Some(f.to_vec()))
}

/// A coloring of points of R^d by tuples of small integers.
pub trait PointColoring: Sync {
    fn color(&self, x: &Point) -> Result<Vec<u32>>;
}

impl PointColoring for PeriodicColoring {
    fn color(&self, x: &Point) -> Result<Vec<u32>> {
        self.color_point(x)
    }
}

/// Colors every point the same; forbids nothing. Useful as a degenerate
/// product component.
pub struct ConstantColoring(pub u32);

impl PointColoring for ConstantColoring {
    fn color(&self, _x: &Point) -> Result<Vec<u32>> {
        Ok(vec![self.0])
    }
}

/// Colors x by inner(x / scale). If the inner coloring forbids distance
/// 1, this forbids distance `scale`.
pub struct ScaledColoring<C> {
    pub inner: C,
    pub scale: f64,
}

impl<C: PointColoring> PointColoring for ScaledColoring<C> {
    fn color(&self, x: &Point) -> Result<Vec<u32>> {
        let scaled = Point(x.coords().iter().map(|c| c / self.scale).collect());
        self.inner.color(&scaled)
    }
}

/// The product coloring ψ(r) = (φ_1(r), ..., φ_n(r)). If component i
/// forbids distance d_i, the product forbids every d_i simultaneously;
/// its color count on any finite set is at most the product of the
/// component counts.
pub struct ProductColoring {
    components: Vec<Box<dyn PointColoring>>,
}

impl ProductColoring {
    pub fn new(components: Vec<Box<dyn PointColoring>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("product needs at least one component"));
        }
        Ok(ProductColoring { components })
    }
}

impl PointColoring for ProductColoring {
    fn color(&self, x: &Point) -> Result<Vec<u32>> {
        let mut tuple = Vec::new();
        for c in &self.components {
            tuple.extend(c.color(x)?);
        }
        Ok(tuple)
    }
}

/// Spot-check a point coloring against one forbidden distance: sample
/// pairs (x, x + dist * u) with x uniform in [0, extent)^d and u a
/// random L2 unit direction, and count monochromatic pairs.
pub fn sample_distance_violations(
    coloring: &dyn PointColoring,
    d: usize,
    dist: f64,
    extent: f64,
    samples: u64,
    seed: u64,
) -> Result<(u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut checked = 0;
    for _ in 0..samples {
        let x = Point((0..d).map(|_| rng.gen_range(0.0..extent)).collect());
        let g: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let len = NormSpec::L2.eval(&g);
        if len < 1e-9 {
            continue;
        }
        let y = Point(
            x.coords()
                .iter()
                .zip(&g)
                .map(|(xi, gi)| xi + dist * gi / len)
                .collect(),
        );
        checked += 1;
        if coloring.color(&x)? == coloring.color(&y)? {
            violations += 1;
        }
    }
    Ok((violations, checked))
}

/// One step of gon augmentation: S_{j+1} = S_j ∪ {X ∪ {z} : z ∈ F_j,
/// X ∈ M}. Output gons have cardinality m + 1; duplicates are merged.
/// If some z collides with a point of M, F_j is first translated clear
/// along the first axis.
pub fn augment_gons(
    sj: &GonSet,
    m_set: &GonSet,
    fj: &[Point],
    tol: f64,
) -> Result<GonSet> {
    if sj.m != m_set.m + 1 {
        return Err(Error::invalid(format!(
            "S_j gons have cardinality {}, expected {}",
            sj.m,
            m_set.m + 1
        )));
    }
    geometry::check_dims(sj.d, m_set.d)?;
    for z in fj {
        geometry::check_dims(sj.d, z.dim())?;
    }
    if fj.is_empty() {
        return Ok(sj.clone());
    }

    let collides = fj.iter().any(|z| {
        m_set
            .gons
            .iter()
            .flatten()
            .any(|p| geometry::distance(z, p, NormSpec::L2).map(|d| d <= tol).unwrap_or(false))
    });
    let cleared: Vec<Point> = if collides {
        let max_x_m = m_set
            .gons
            .iter()
            .flatten()
            .map(|p| p.coords()[0])
            .fold(f64::NEG_INFINITY, f64::max);
        let min_x_f = fj
            .iter()
            .map(|p| p.coords()[0])
            .fold(f64::INFINITY, f64::min);
        let mut shift = vec![0.0; sj.d];
        shift[0] = max_x_m - min_x_f + 1.0;
        geometry::translate(fj, &Point(shift))?
    } else {
        fj.to_vec()
    };

    let mut gons = sj.gons.clone();
    for x in &m_set.gons {
        for z in &cleared {
            let mut gon = x.clone();
            gon.push(z.clone());
            let duplicate = gons
                .iter()
                .map(|g| points_set_equal(g, &gon, tol))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .any(|eq| eq);
            if !duplicate {
                gons.push(gon);
            }
        }
    }
    GonSet::new(sj.d, sj.m, gons)
}

/// The m-sets-with-a-unit-pair hypergraph on P: edges are exactly the
/// m-subsets of P containing at least one pair at distance 1 ± tol
/// under the given norm. The 2-case coincides with the unit-distance
/// graph.
pub fn gm_hypergraph(
    points: &[Point],
    norm: NormSpec,
    m: usize,
    tol: f64,
) -> Result<Hypergraph> {
    if m < 2 {
        return Err(Error::invalid("m must be >= 2"));
    }
    if m > points.len() {
        return Err(Error::invalid(format!(
            "m = {m} exceeds |P| = {}",
            points.len()
        )));
    }
    if binomial(points.len() as u64, m as u64) > SUBSET_CAP {
        return Err(Error::resource(format!(
            "enumeration would exceed {SUBSET_CAP} subsets"
        )));
    }
    let pairs = geometry::unit_distance_pairs(points, norm, tol)?;
    let pair_masks: Vec<u128> = pairs
        .iter()
        .map(|&(i, j)| (1u128 << i) | (1u128 << j))
        .collect();
    let mut edges = Vec::new();
    for combo in (0..points.len()).combinations(m) {
        let mask = combo.iter().fold(0u128, |acc, &i| acc | (1u128 << i));
        if pair_masks.iter().any(|&pm| pm & !mask == 0) {
            edges.push(combo);
        }
    }
    Hypergraph::new(points.len(), edges, Some(points.to_vec()))
}

/// Widen every edge of H0 by all t-subsets of the remaining vertices:
/// edges become {e ∪ T : e ∈ E, T ⊆ V∖e, |T| = t}.
///
/// The chromatic number can only drop: every widened edge contains an
/// original edge. Equality with χ(H0) is a statement about colorings of
/// all of R^d, not of a finite vertex set, so callers should report
/// both numbers rather than assert equality.
pub fn augment_t(h0: &Hypergraph, t: usize) -> Result<Hypergraph> {
    if t == 0 {
        return Ok(h0.clone());
    }
    let n = h0.n();
    let max_edge = h0.edges().iter().map(|e| e.len()).max().unwrap_or(0);
    if t > n - max_edge {
        return Err(Error::invalid(format!(
            "t = {t} exceeds n - max edge size = {}",
            n - max_edge
        )));
    }
    let mut total: u64 = 0;
    for e in h0.edges() {
        total = total.saturating_add(binomial((n - e.len()) as u64, t as u64));
    }
    if total > SUBSET_CAP {
        return Err(Error::resource(format!(
            "augmentation would enumerate more than {SUBSET_CAP} edges"
        )));
    }
    let mut edges = Vec::new();
    for e in h0.edges() {
        let in_e: Vec<bool> = {
            let mut flags = vec![false; n];
            for &v in e {
                flags[v] = true;
            }
            flags
        };
        let outside: Vec<usize> = (0..n).filter(|&v| !in_e[v]).collect();
        for extra in outside.into_iter().combinations(t) {
            let mut edge = e.clone();
            edge.extend(extra);
            edges.push(edge);
        }
    }
    Hypergraph::new(n, edges, h0.embedding().map(|e| e.to_vec()))
}

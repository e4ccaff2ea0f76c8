//! Points, norms, and congruence testing for finite point sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A position in R^d. Coordinates are dimensionless; distance 1 is the
/// forbidden distance everywhere in this crate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("point must have dimension >= 1"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("point coordinates must be finite"));
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn origin(d: usize) -> Self {
        Point(vec![0.0; d])
    }

    /// Componentwise difference x - y.
    pub fn sub(&self, other: &Point) -> Result<Vec<f64>> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a - b)
            .collect())
    }

    pub fn add(&self, v: &Point) -> Result<Point> {
        check_dims(self.dim(), v.dim())?;
        Ok(Point(
            self.0.iter().zip(&v.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl From<Vec<f64>> for Point {
    fn from(coords: Vec<f64>) -> Self {
        Point(coords)
    }
}

pub fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(a, b));
    }
    Ok(())
}

/// Which norm measures distance. Equivalence constants relative to the
/// max norm are derived from the kind and the ambient dimension.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "p")]
pub enum NormSpec {
    Lp(f64),
    Linf,
}

impl NormSpec {
    pub const L1: NormSpec = NormSpec::Lp(1.0);
    pub const L2: NormSpec = NormSpec::Lp(2.0);

    pub fn validate(&self) -> Result<()> {
        match self {
            NormSpec::Lp(p) if !(p.is_finite() && *p >= 1.0) => {
                Err(Error::invalid(format!("Lp norm requires p >= 1, got {p}")))
            }
            _ => Ok(()),
        }
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, NormSpec::Lp(p) if *p == 2.0)
    }

    /// ||u|| for a coordinate vector u.
    pub fn eval(&self, u: &[f64]) -> f64 {
        match self {
            NormSpec::Linf => u.iter().fold(0.0, |m, c| m.max(c.abs())),
            NormSpec::Lp(p) if *p == 1.0 => u.iter().map(|c| c.abs()).sum(),
            NormSpec::Lp(p) if *p == 2.0 => u.iter().map(|c| c * c).sum::<f64>().sqrt(),
            NormSpec::Lp(p) => u
                .iter()
                .map(|c| c.abs().powf(*p))
                .sum::<f64>()
                .powf(1.0 / *p),
        }
    }

    /// Tightest constants (c, C) with c*||u||_inf <= ||u|| <= C*||u||_inf
    /// in dimension d. For Lp these are (1, d^(1/p)); for Linf (1, 1).
    pub fn equivalence_constants(&self, d: usize) -> Result<(f64, f64)> {
        if d == 0 {
            return Err(Error::invalid("dimension must be >= 1"));
        }
        self.validate()?;
        Ok(match self {
            NormSpec::Linf => (1.0, 1.0),
            NormSpec::Lp(p) => (1.0, (d as f64).powf(1.0 / p)),
        })
    }
}

/// ||x - y|| under the given norm.
pub fn distance(x: &Point, y: &Point, norm: NormSpec) -> Result<f64> {
    norm.validate()?;
    Ok(norm.eval(&x.sub(y)?))
}

/// All index pairs {i, j}, i < j, with | ||p_i - p_j|| - 1 | <= tol.
pub fn unit_distance_pairs(
    points: &[Point],
    norm: NormSpec,
    tol: f64,
) -> Result<Vec<(usize, usize)>> {
    if points.is_empty() {
        return Err(Error::invalid("point sequence must be nonempty"));
    }
    if tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let d = points[0].dim();
    for p in points {
        check_dims(d, p.dim())?;
    }
    let mut pairs = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let dist = distance(&points[i], &points[j], norm)?;
            if (dist - 1.0).abs() <= tol {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// Pointwise translation by v. Pairwise distances are preserved under
/// every norm.
pub fn translate(points: &[Point], v: &Point) -> Result<Vec<Point>> {
    points.iter().map(|p| p.add(v)).collect()
}

/// Euclidean congruence test: find a bijection X -> Y preserving all
/// pairwise distances within tol, or report that none exists.
///
/// For subsets of Euclidean space a pairwise-distance-preserving
/// bijection extends to an isometry of R^d, so this test is sound and
/// complete for congruence under the L2 norm.
///
/// Returns `perm` with `perm[i]` the index in Y matched to X\[i\].
pub fn congruent_euclidean(
    xs: &[Point],
    ys: &[Point],
    tol: f64,
) -> Result<Option<Vec<usize>>> {
    if tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if xs.len() != ys.len() {
        return Ok(None);
    }
    if xs.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let d = xs[0].dim();
    for p in xs.iter().chain(ys.iter()) {
        check_dims(d, p.dim())?;
    }

    let n = xs.len();
    let dx = distance_matrix(xs)?;
    let dy = distance_matrix(ys)?;

    // Prune candidates by each point's sorted distance row.
    let rows_x: Vec<Vec<f64>> = (0..n).map(|i| sorted_row(&dx, i)).collect();
    let rows_y: Vec<Vec<f64>> = (0..n).map(|j| sorted_row(&dy, j)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| rows_match(&rows_x[i], &rows_y[j], tol))
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }

    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(0, &mut perm, &mut used, &candidates, &dx, &dy, tol) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

fn assign(
    i: usize,
    perm: &mut [usize],
    used: &mut [bool],
    candidates: &[Vec<usize>],
    dx: &[Vec<f64>],
    dy: &[Vec<f64>],
    tol: f64,
) -> bool {
    if i == perm.len() {
        return true;
    }
    'cand: for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        for prev in 0..i {
            if (dx[i][prev] - dy[j][perm[prev]]).abs() > tol {
                continue 'cand;
            }
        }
        perm[i] = j;
        used[j] = true;
        if assign(i + 1, perm, used, candidates, dx, dy, tol) {
            return true;
        }
        used[j] = false;
        perm[i] = usize::MAX;
    }
    false
}

fn distance_matrix(pts: &[Point]) -> Result<Vec<Vec<f64>>> {
    let n = pts.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance(&pts[i], &pts[j], NormSpec::L2)?;
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    Ok(m)
}

fn sorted_row(m: &[Vec<f64>], i: usize) -> Vec<f64> {
    let mut row: Vec<f64> = (0..m.len()).filter(|&j| j != i).map(|j| m[i][j]).collect();
    row.sort_by(|a, b| a.partial_cmp(b).unwrap());
    row
}

fn rows_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

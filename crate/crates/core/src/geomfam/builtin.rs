//! Curated point sets with known unit-distance structure.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Named point sets used as witnesses and test corpora.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltinPointSet {
    /// 7 points in the plane with 11 unit pairs and chromatic number 4.
    MoserSpindle,
    /// 10 points in the plane with 18 unit pairs and chromatic number 4.
    Golomb,
    /// d + 1 points pairwise at distance 1 in R^d.
    UnitSimplex(usize),
    /// Unit triangular lattice points within the given radius of the origin.
    TriangularLattice(f64),
    /// The w x h integer grid in the plane.
    IntegerGrid(usize, usize),
}

pub fn builtin_points(which: &BuiltinPointSet) -> Result<Vec<Point>> {
    match which {
        BuiltinPointSet::MoserSpindle => Ok(moser_spindle()),
        BuiltinPointSet::Golomb => Ok(golomb()),
        BuiltinPointSet::UnitSimplex(d) => unit_simplex(*d),
        BuiltinPointSet::TriangularLattice(radius) => triangular_lattice(*radius),
        BuiltinPointSet::IntegerGrid(w, h) => integer_grid(*w, *h),
    }
}

/// Two unit rhombi hinged at the origin, tips one apart. The hinge
/// angle θ satisfies cos θ = 5/6 so the two tips (each at distance √3
/// from the hinge) land exactly distance 1 apart.
fn moser_spindle() -> Vec<Point> {
    let theta = (5.0f64 / 6.0).acos();
    let mut pts = vec![Point(vec![0.0, 0.0])];
    for angle in [-theta / 2.0, theta / 2.0] {
        let (s, c) = angle.sin_cos();
        let u = (c, s);
        let perp = (-s, c);
        let half = 3f64.sqrt() / 2.0;
        pts.push(Point(vec![half * u.0 + 0.5 * perp.0, half * u.1 + 0.5 * perp.1]));
        pts.push(Point(vec![half * u.0 - 0.5 * perp.0, half * u.1 - 0.5 * perp.1]));
        pts.push(Point(vec![3f64.sqrt() * u.0, 3f64.sqrt() * u.1]));
    }
    pts
}

/// Unit hexagon with center, plus a concentric unit triangle whose
/// vertices each sit at distance 1 from one hexagon vertex.
fn golomb() -> Vec<Point> {
    let mut pts = vec![Point(vec![0.0, 0.0])];
    for k in 0..6 {
        let a = std::f64::consts::FRAC_PI_3 * k as f64;
        pts.push(Point(vec![a.cos(), a.sin()]));
    }
    // Triangle circumradius 1/√3 (side 1); phase chosen so each vertex
    // is distance 1 from the hexagon vertex two sectors away.
    let r = 1.0 / 3f64.sqrt();
    let phi = (r / 2.0).acos();
    for k in 0..3 {
        let a = phi + 2.0 * std::f64::consts::FRAC_PI_3 * k as f64;
        pts.push(Point(vec![r * a.cos(), r * a.sin()]));
    }
    pts
}

/// Regular simplex with unit edge length: d scaled coordinate vectors
/// plus one point on the diagonal.
fn unit_simplex(d: usize) -> Result<Vec<Point>> {
    if d < 1 {
        return Err(Error::invalid("unit-simplex requires d >= 1"));
    }
    let a = 1.0 / 2f64.sqrt();
    let mut pts = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut coords = vec![0.0; d];
        coords[i] = a;
        pts.push(Point(coords));
    }
    let c = (a + ((d as f64 + 1.0) / 2.0).sqrt()) / d as f64;
    pts.push(Point(vec![c; d]));
    Ok(pts)
}

fn triangular_lattice(radius: f64) -> Result<Vec<Point>> {
    if !(radius.is_finite() && radius >= 0.0) {
        return Err(Error::invalid("radius must be nonnegative"));
    }
    let bound = radius.ceil() as i64 + 1;
    let mut pts = Vec::new();
    for i in -bound..=bound {
        for j in -bound..=bound {
            let x = i as f64 + j as f64 * 0.5;
            let y = j as f64 * 3f64.sqrt() / 2.0;
            if (x * x + y * y).sqrt() <= radius + 1e-9 {
                pts.push(Point(vec![x, y]));
            }
        }
    }
    Ok(pts)
}

fn integer_grid(w: usize, h: usize) -> Result<Vec<Point>> {
    if w == 0 || h == 0 {
        return Err(Error::invalid("grid dimensions must be positive"));
    }
    let mut pts = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            pts.push(Point(vec![x as f64, y as f64]));
        }
    }
    Ok(pts)
}

impl FromStr for BuiltinPointSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "moser-spindle" {
            return Ok(BuiltinPointSet::MoserSpindle);
        }
        if s == "golomb" {
            return Ok(BuiltinPointSet::Golomb);
        }
        if let Some(args) = parse_call(s, "unit-simplex") {
            let d = args
                .parse()
                .map_err(|_| Error::invalid(format!("bad unit-simplex dimension: {args}")))?;
            return Ok(BuiltinPointSet::UnitSimplex(d));
        }
        if let Some(args) = parse_call(s, "triangular-lattice") {
            let r = args
                .parse()
                .map_err(|_| Error::invalid(format!("bad lattice radius: {args}")))?;
            return Ok(BuiltinPointSet::TriangularLattice(r));
        }
        if let Some(args) = parse_call(s, "integer-grid") {
            let parts: Vec<&str> = args.split(',').map(str::trim).collect();
            if parts.len() == 2 {
                let w = parts[0].parse();
                let h = parts[1].parse();
                if let (Ok(w), Ok(h)) = (w, h) {
                    return Ok(BuiltinPointSet::IntegerGrid(w, h));
                }
            }
            return Err(Error::invalid(format!("bad grid size: {args}")));
        }
        Err(Error::invalid(format!("unknown point set: {s}")))
    }
}

fn parse_call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::{chromatic_number, SolveOptions};
    use crate::geometry::{unit_distance_pairs, NormSpec};
    use crate::hypergraph::Hypergraph;

    const TOL: f64 = 1e-9;

    fn chi_of(points: Vec<Point>) -> (usize, usize) {
        let pairs = unit_distance_pairs(&points, NormSpec::L2, TOL).unwrap();
        let h = Hypergraph::from_pairs(points.len(), &pairs, None).unwrap();
        let out = chromatic_number(&h, &SolveOptions::default()).unwrap();
        (pairs.len(), out.chi)
    }

    #[test]
    fn moser_spindle_shape() {
        let pts = builtin_points(&BuiltinPointSet::MoserSpindle).unwrap();
        assert_eq!(pts.len(), 7);
        let (pairs, chi) = chi_of(pts);
        assert_eq!(pairs, 11);
        assert_eq!(chi, 4);
    }

    #[test]
    fn golomb_shape() {
        let pts = builtin_points(&BuiltinPointSet::Golomb).unwrap();
        assert_eq!(pts.len(), 10);
        let (pairs, chi) = chi_of(pts);
        assert_eq!(pairs, 18);
        assert_eq!(chi, 4);
    }

    #[test]
    fn unit_simplex_3() {
        let pts = builtin_points(&BuiltinPointSet::UnitSimplex(3)).unwrap();
        assert_eq!(pts.len(), 4);
        let (pairs, chi) = chi_of(pts);
        assert_eq!(pairs, 6);
        assert_eq!(chi, 4);
    }

    #[test]
    fn grid_2x2_is_a_4_cycle() {
        let pts = builtin_points(&BuiltinPointSet::IntegerGrid(2, 2)).unwrap();
        assert_eq!(pts.len(), 4);
        let (pairs, chi) = chi_of(pts);
        assert_eq!(pairs, 4);
        assert_eq!(chi, 2);
    }

    #[test]
    fn triangular_lattice_radius_1() {
        let pts = builtin_points(&BuiltinPointSet::TriangularLattice(1.0)).unwrap();
        assert_eq!(pts.len(), 7); // hexagon plus center
    }

    #[test]
    fn parse_names() {
        assert_eq!(
            "moser-spindle".parse::<BuiltinPointSet>().unwrap(),
            BuiltinPointSet::MoserSpindle
        );
        assert_eq!(
            "unit-simplex(3)".parse::<BuiltinPointSet>().unwrap(),
            BuiltinPointSet::UnitSimplex(3)
        );
        assert_eq!(
            "integer-grid(3,4)".parse::<BuiltinPointSet>().unwrap(),
            BuiltinPointSet::IntegerGrid(3, 4)
        );
        assert!("nonsense".parse::<BuiltinPointSet>().is_err());
    }
}

//! File formats: JSON for point sets, hypergraphs, colorings, and gon
//! sets, plus a DIMACS-style hypergraph format for interop with
//! external solvers (coordinates are not representable there and are
//! dropped on write).

use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::geomfam::GonSet;
use crate::hypergraph::{Coloring, Hypergraph};

/// {"d": int, "points": [[real,...],...]}
#[derive(Debug, Serialize, Deserialize)]
pub struct PointSetFile {
    pub d: usize,
    pub points: Vec<Vec<f64>>,
}

impl PointSetFile {
    pub fn from_points(points: &[Point]) -> Result<Self> {
        let d = points
            .first()
            .map(|p| p.dim())
            .ok_or_else(|| Error::invalid("empty point set"))?;
        Ok(PointSetFile {
            d,
            points: points.iter().map(|p| p.coords().to_vec()).collect(),
        })
    }

    pub fn into_points(self) -> Result<Vec<Point>> {
        self.points
            .into_iter()
            .map(|coords| {
                if coords.len() != self.d {
                    return Err(Error::Format(format!(
                        "point has dimension {}, header says {}",
                        coords.len(),
                        self.d
                    )));
                }
                Point::new(coords)
            })
            .collect()
    }
}

/// {"d": int|null, "vertices": [[real,...],...]|null, "edges": [[int,...],...]}
#[derive(Debug, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub d: Option<usize>,
    pub vertices: Option<Vec<Vec<f64>>>,
    pub edges: Vec<Vec<usize>>,
}

impl HypergraphFile {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphFile {
            d: h.dim(),
            vertices: h
                .embedding()
                .map(|pts| pts.iter().map(|p| p.coords().to_vec()).collect()),
            edges: h.edges().to_vec(),
        }
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        let embedding = match self.vertices {
            Some(coords) => Some(
                coords
                    .into_iter()
                    .map(Point::new)
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let n = match &embedding {
            Some(pts) => pts.len(),
            // Unembedded: vertex count is implied by the largest index.
            None => self
                .edges
                .iter()
                .flatten()
                .max()
                .map(|&v| v + 1)
                .unwrap_or(0),
        };
        Hypergraph::new(n, self.edges, embedding)
    }
}

/// {"m": int, "colors": [int,...]}, colors 1-based.
pub type ColoringFile = Coloring;

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let data = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&data)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut data = serde_json::to_string_pretty(value)?;
    data.push('\n');
    std::fs::write(path, data)?;
    Ok(())
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    if path.extension().and_then(|e| e.to_str()) == Some("dimacs") {
        let file = std::fs::File::open(path)?;
        return read_dimacs(std::io::BufReader::new(file));
    }
    read_json::<HypergraphFile>(path)?.into_hypergraph()
}

pub fn write_hypergraph(path: &Path, h: &Hypergraph) -> Result<()> {
    write_json(path, &HypergraphFile::from_hypergraph(h))
}

pub fn read_points(path: &Path) -> Result<Vec<Point>> {
    read_json::<PointSetFile>(path)?.into_points()
}

pub fn write_points(path: &Path, points: &[Point]) -> Result<()> {
    write_json(path, &PointSetFile::from_points(points)?)
}

pub fn read_gonset(path: &Path) -> Result<GonSet> {
    let raw: GonSetFile = read_json(path)?;
    raw.into_gonset()
}

pub fn write_gonset(path: &Path, gons: &GonSet) -> Result<()> {
    write_json(path, &GonSetFile::from_gonset(gons))
}

/// {"d": int, "m": int, "gons": [[[real,...],...],...]}
#[derive(Debug, Serialize, Deserialize)]
pub struct GonSetFile {
    pub d: usize,
    pub m: usize,
    pub gons: Vec<Vec<Vec<f64>>>,
}

impl GonSetFile {
    pub fn from_gonset(g: &GonSet) -> Self {
        GonSetFile {
            d: g.d(),
            m: g.m(),
            gons: g
                .gons()
                .iter()
                .map(|gon| gon.iter().map(|p| p.coords().to_vec()).collect())
                .collect(),
        }
    }

    pub fn into_gonset(self) -> Result<GonSet> {
        let gons = self
            .gons
            .into_iter()
            .map(|gon| gon.into_iter().map(Point::new).collect())
            .collect::<Result<Vec<Vec<Point>>>>()?;
        GonSet::new(self.d, self.m, gons)
    }
}

/// DIMACS-style hypergraph: `c` comments, `p edge <n> <edges>`, then
/// one `e v1 v2 ...` line per edge with 1-based vertex indices.
pub fn write_dimacs<W: Write>(mut w: W, h: &Hypergraph) -> Result<()> {
    writeln!(w, "p edge {} {}", h.n(), h.edges().len())?;
    for e in h.edges() {
        write!(w, "e")?;
        for &v in e {
            write!(w, " {}", v + 1)?;
        }
        writeln!(w)?;
    }
    Ok(())
}

pub fn read_dimacs<R: BufRead>(r: R) -> Result<Hypergraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for line in r.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "edge" {
                return Err(Error::Format(format!("bad problem line: {line}")));
            }
            n = Some(
                parts[1]
                    .parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad vertex count: {}", parts[1])))?,
            );
        } else if let Some(rest) = line.strip_prefix("e ") {
            let edge = rest
                .split_whitespace()
                .map(|tok| {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| Error::Format(format!("bad vertex index: {tok}")))?;
                    if v == 0 {
                        return Err(Error::Format("vertex indices are 1-based".into()));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<usize>>>()?;
            edges.push(edge);
        } else {
            return Err(Error::Format(format!("unrecognized line: {line}")));
        }
    }
    let n = n.ok_or_else(|| Error::Format("missing problem line".into()))?;
    Hypergraph::new(n, edges, None)
}

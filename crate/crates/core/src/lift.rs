//! Raising uniformity by one while preserving the chromatic number.
//!
//! From an m-uniform hypergraph H with chromatic number k, build the
//! (m+1)-uniform hypergraph on k disjoint copies of V(H) whose edges
//! are e ∪ {v} with e an edge of copy i and v a vertex of copy j > i.
//! The result has the same chromatic number as H.

use crate::chroma::{self, SolveOptions};
use crate::error::{Error, Result};
use crate::hypergraph::{disjoint_translates, Coloring, Hypergraph, OffsetRule};

pub const DEFAULT_EDGE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct LiftOptions {
    /// Recompute χ(H) and reject a caller-supplied k that disagrees.
    pub verify_k: bool,
    /// Refuse to materialize more edges than this.
    pub edge_cap: u64,
    pub solve: SolveOptions,
    pub offset: OffsetRule,
    pub tol: f64,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions {
            verify_k: false,
            edge_cap: DEFAULT_EDGE_CAP,
            solve: SolveOptions::default(),
            offset: OffsetRule::default(),
            tol: crate::DEFAULT_TOL,
        }
    }
}

/// One application of the uniformity-raising construction.
#[derive(Clone, Debug)]
pub struct LiftResult {
    pub original: Hypergraph,
    pub lifted: Hypergraph,
    /// Number of disjoint copies, equal to χ(original).
    pub k: usize,
    /// Lifted vertex index -> (copy index 0-based, original vertex).
    pub copy_map: Vec<(usize, usize)>,
    /// Solver nodes spent computing or verifying k.
    pub solver_nodes: u64,
}

/// Expected lifted edge count: |E| * n * k(k-1)/2.
pub fn lifted_edge_count(n_edges: u64, n: u64, k: u64) -> u64 {
    n_edges * n * k * (k - 1) / 2
}

pub fn lift(h: &Hypergraph, k: Option<usize>, opts: &LiftOptions) -> Result<LiftResult> {
    let Some(_m) = h.uniformity() else {
        return Err(Error::invalid(
            "lift requires a uniform hypergraph with at least one edge",
        ));
    };
    let mut solver_nodes = 0;
    let k = match k {
        Some(k) => {
            if k < 1 {
                return Err(Error::invalid("k must be >= 1"));
            }
            if opts.verify_k {
                let out = chroma::chromatic_number(h, &opts.solve)?;
                solver_nodes += out.nodes;
                if out.chi != k {
                    return Err(Error::Inconsistent(format!(
                        "supplied k = {k} but χ(H) = {}",
                        out.chi
                    )));
                }
            }
            k
        }
        None => {
            let out = chroma::chromatic_number(h, &opts.solve)?;
            solver_nodes += out.nodes;
            out.chi
        }
    };

    let n = h.n();
    let expected_edges = lifted_edge_count(h.edges().len() as u64, n as u64, k as u64);
    if expected_edges > opts.edge_cap {
        return Err(Error::resource(format!(
            "lift would create {expected_edges} edges, cap is {}",
            opts.edge_cap
        )));
    }

    let translates = disjoint_translates(h, k, &opts.offset, opts.tol)?;
    let embedding = translates.copies[0].embedding().map(|_| {
        translates
            .copies
            .iter()
            .flat_map(|c| c.embedding().unwrap().iter().cloned())
            .collect::<Vec<_>>()
    });

    // Copies in increasing i, edges in stored order, attachment copies
    // then attachment vertices in increasing index. This order makes
    // output files byte-reproducible.
    let mut edges = Vec::with_capacity(expected_edges as usize);
    for i in 0..k {
        for e in h.edges() {
            for j in (i + 1)..k {
                for v in 0..n {
                    let mut lifted_edge: Vec<usize> = e.iter().map(|&w| i * n + w).collect();
                    lifted_edge.push(j * n + v);
                    edges.push(lifted_edge);
                }
            }
        }
    }

    let copy_map: Vec<(usize, usize)> = (0..k * n).map(|x| (x / n, x % n)).collect();
    let lifted = Hypergraph::new(k * n, edges, embedding)?;
    debug_assert_eq!(lifted.edges().len() as u64, expected_edges);

    Ok(LiftResult {
        original: h.clone(),
        lifted,
        k,
        copy_map,
        solver_nodes,
    })
}

/// The iterated construction: lift until the target uniformity.
#[derive(Debug, Default)]
pub struct LiftChain {
    pub stages: Vec<LiftResult>,
    /// Set when a size cap stopped the chain early; `stages` then holds
    /// the partial chain.
    pub truncated: Option<Error>,
}

pub fn iterated_lift(h: &Hypergraph, target_m: usize, opts: &LiftOptions) -> Result<LiftChain> {
    let Some(m0) = h.uniformity() else {
        return Err(Error::invalid(
            "iterated lift requires a uniform hypergraph with at least one edge",
        ));
    };
    if target_m < m0 {
        return Err(Error::invalid(format!(
            "target uniformity {target_m} is below the input's {m0}"
        )));
    }
    let mut chain = LiftChain::default();
    // χ is preserved at each stage, so it is computed once up front and
    // reused as k for every lift.
    let chi0 = chroma::chromatic_number(h, &opts.solve)?;
    let mut current = h.clone();
    for _ in m0..target_m {
        let stage_opts = LiftOptions {
            verify_k: false,
            ..opts.clone()
        };
        match lift(&current, Some(chi0.chi), &stage_opts) {
            Ok(result) => {
                current = result.lifted.clone();
                chain.stages.push(result);
            }
            Err(e @ Error::Resource(_)) | Err(e @ Error::BudgetExhausted { .. }) => {
                chain.truncated = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(chain)
}

/// Push a proper coloring of the original through a lift: every lifted
/// vertex takes its original vertex's color.
pub fn extend_coloring(phi: &Coloring, result: &LiftResult) -> Result<Coloring> {
    if !chroma::is_proper(&result.original, phi)? {
        return Err(Error::invalid(
            "coloring is not proper for the original hypergraph",
        ));
    }
    let colors = result
        .copy_map
        .iter()
        .map(|&(_, v)| phi.colors[v])
        .collect();
    Coloring::new(phi.m, colors)
}

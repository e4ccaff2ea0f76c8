//! Exact hypergraph coloring: proper-coloring checks, k-colorability,
//! and chromatic number by branch and bound.
//!
//! Vertices are packed into 128-bit masks, which caps solvable
//! instances at 128 vertices; the constructions in this crate stay far
//! below that.

use crate::error::{Error, Result};
use crate::hypergraph::{Coloring, Hypergraph};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;
const MAX_VERTICES: usize = 128;

/// Knobs for the exact solver.
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Hard cap on explored search nodes before giving up with
    /// [`Error::BudgetExhausted`].
    pub node_budget: u64,
    /// Cap candidate colors at 1 + max color used so far. Sound: never
    /// changes the reported answer, only prunes color permutations.
    pub symmetry_breaking: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            symmetry_breaking: true,
        }
    }
}

/// Outcome of a k-colorability decision.
#[derive(Clone, Debug)]
pub struct KColorOutcome {
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

/// Outcome of an exact chromatic-number computation.
#[derive(Clone, Debug)]
pub struct ChiOutcome {
    pub chi: usize,
    pub witness: Coloring,
    pub nodes: u64,
}

/// First edge on which phi is constant, or None if phi is proper.
pub fn first_monochromatic_edge<'a>(
    h: &'a Hypergraph,
    phi: &Coloring,
) -> Result<Option<&'a [usize]>> {
    if phi.colors.len() != h.n() {
        return Err(Error::invalid(format!(
            "coloring covers {} vertices, hypergraph has {}",
            phi.colors.len(),
            h.n()
        )));
    }
    for e in h.edges() {
        let c = phi.colors[e[0]];
        if e[1..].iter().all(|&v| phi.colors[v] == c) {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// True iff no edge of H is monochromatic under phi.
pub fn is_proper(h: &Hypergraph, phi: &Coloring) -> Result<bool> {
    Ok(first_monochromatic_edge(h, phi)?.is_none())
}

struct Instance {
    n: usize,
    /// Edges as vertex bitmasks.
    edge_masks: Vec<u128>,
    /// Incident edge indices per vertex.
    incidence: Vec<Vec<usize>>,
    /// Vertex order: descending edge-degree, ties by index.
    order: Vec<usize>,
}

impl Instance {
    fn build(h: &Hypergraph) -> Result<Instance> {
        let n = h.n();
        if n > MAX_VERTICES {
            return Err(Error::resource(format!(
                "solver supports at most {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut edge_masks = Vec::with_capacity(h.edges().len());
        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in h.edges().iter().enumerate() {
            let mut mask = 0u128;
            for &v in e {
                mask |= 1u128 << v;
                incidence[v].push(idx);
            }
            edge_masks.push(mask);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(incidence[v].len()), v));
        Ok(Instance {
            n,
            edge_masks,
            incidence,
            order,
        })
    }
}

struct Search<'a> {
    inst: &'a Instance,
    k: usize,
    symmetry_breaking: bool,
    color_of: Vec<usize>,
    /// Vertices holding each color, as bitmasks.
    color_masks: Vec<u128>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Would coloring v with c make some incident edge monochromatic?
    fn conflicts(&self, v: usize, c: usize) -> bool {
        let vbit = 1u128 << v;
        for &ei in &self.inst.incidence[v] {
            let others = self.inst.edge_masks[ei] & !vbit;
            if others & !self.color_masks[c] == 0 {
                return true;
            }
        }
        false
    }

    fn dive(&mut self, pos: usize, max_used: usize) -> Result<bool> {
        if pos == self.inst.n {
            return Ok(true);
        }
        let v = self.inst.order[pos];
        let limit = if self.symmetry_breaking {
            self.k.min(max_used + 1)
        } else {
            self.k
        };
        for c in 0..limit {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted { nodes: self.nodes });
            }
            if self.conflicts(v, c) {
                continue;
            }
            self.color_of[v] = c;
            self.color_masks[c] |= 1u128 << v;
            if self.dive(pos + 1, max_used.max(c + 1))? {
                return Ok(true);
            }
            self.color_masks[c] &= !(1u128 << v);
            self.color_of[v] = usize::MAX;
        }
        Ok(false)
    }
}

/// Exhaustive k-colorability decision. Returns a proper coloring with
/// at most k colors if one exists. Deterministic for fixed input.
pub fn k_colorable(h: &Hypergraph, k: usize, opts: &SolveOptions) -> Result<KColorOutcome> {
    if k < 1 {
        return Err(Error::invalid("k must be >= 1"));
    }
    let inst = Instance::build(h)?;
    let mut search = Search {
        inst: &inst,
        k,
        symmetry_breaking: opts.symmetry_breaking,
        color_of: vec![usize::MAX; inst.n],
        color_masks: vec![0u128; k],
        nodes: 0,
        budget: opts.node_budget,
    };
    let found = search.dive(0, 0)?;
    let witness = if found {
        Some(Coloring::new(
            k,
            search.color_of.iter().map(|&c| c + 1).collect(),
        )?)
    } else {
        None
    };
    Ok(KColorOutcome {
        witness,
        nodes: search.nodes,
    })
}

/// Greedy coloring in the given vertex order: each vertex takes the
/// least color keeping every fully-colored edge non-monochromatic.
/// The color count is an upper bound on the chromatic number.
pub fn greedy_upper_bound(h: &Hypergraph, order: &[usize]) -> Result<(usize, Coloring)> {
    let n = h.n();
    {
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
            return Err(Error::invalid("order must be a permutation of the vertices"));
        }
    }
    if n == 0 {
        return Ok((1, Coloring { m: 1, colors: vec![] }));
    }
    let inst = Instance::build(h)?;
    let mut color_of = vec![usize::MAX; n];
    let mut color_masks: Vec<u128> = Vec::new();
    let mut used = 0usize;
    for &v in order {
        let vbit = 1u128 << v;
        let mut chosen = None;
        for c in 0..=used {
            if c == color_masks.len() {
                color_masks.push(0);
            }
            let mono = inst.incidence[v].iter().any(|&ei| {
                let others = inst.edge_masks[ei] & !vbit;
                others & !color_masks[c] == 0
            });
            if !mono {
                chosen = Some(c);
                break;
            }
        }
        // A fresh color can never complete a monochromatic edge.
        let c = chosen.expect("greedy always finds a color");
        color_of[v] = c;
        color_masks[c] |= vbit;
        used = used.max(c + 1);
    }
    let coloring = Coloring::new(used.max(1), color_of.iter().map(|&c| c + 1).collect())?;
    Ok((used.max(1), coloring))
}

/// Degree-descending vertex order, the solver's default.
pub fn degree_order(h: &Hypergraph) -> Vec<usize> {
    let mut deg = vec![0usize; h.n()];
    for e in h.edges() {
        for &v in e {
            deg[v] += 1;
        }
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    order
}

/// Exact chromatic number with a proper witness coloring. Starts from a
/// greedy upper bound and descends until k-colorability first fails.
pub fn chromatic_number(h: &Hypergraph, opts: &SolveOptions) -> Result<ChiOutcome> {
    if h.edges().is_empty() {
        return Ok(ChiOutcome {
            chi: 1,
            witness: Coloring::constant(h.n()),
            nodes: 0,
        });
    }
    let (ub, greedy_witness) = greedy_upper_bound(h, &degree_order(h))?;
    let mut best = ub;
    let mut witness = greedy_witness;
    let mut nodes = 0;
    // Any edge forces at least 2 colors, so never probe k = 1.
    while best > 2 {
        let outcome = k_colorable(h, best - 1, opts)?;
        nodes += outcome.nodes;
        match outcome.witness {
            Some(w) => {
                best -= 1;
                witness = w;
            }
            None => break,
        }
    }
    Ok(ChiOutcome {
        chi: best,
        witness,
        nodes,
    })
}

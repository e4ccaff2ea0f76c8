//! Shared test helpers: brute-force oracles independent of the solver
//! path, and seeded random instance generators.

#![allow(dead_code)]

use chromalift::chroma::is_proper;
use chromalift::geometry::{self, NormSpec, Point};
use chromalift::hypergraph::{Coloring, Hypergraph};
use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Brute-force chromatic number: enumerate all m^n colorings for
/// m = 1, 2, ... until a proper one appears.
pub fn brute_force_chi(h: &Hypergraph) -> usize {
    let n = h.n();
    if n == 0 {
        return 1;
    }
    for m in 1..=n {
        if brute_force_k_colorable(h, m) {
            return m;
        }
    }
    unreachable!("every hypergraph on n vertices is n-colorable");
}

/// Brute-force k-colorability by full enumeration in base-k counting.
pub fn brute_force_k_colorable(h: &Hypergraph, k: usize) -> bool {
    let n = h.n();
    let mut colors = vec![1usize; n];
    loop {
        let phi = Coloring {
            m: k,
            colors: colors.clone(),
        };
        if is_proper(h, &phi).unwrap() {
            return true;
        }
        let mut i = 0;
        while i < n {
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
    }
}

/// Euclidean congruence by checking all |X|! bijections directly.
pub fn brute_force_congruent(xs: &[Point], ys: &[Point], tol: f64) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let n = xs.len();
    (0..n).permutations(n).any(|perm| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let dx = geometry::distance(&xs[i], &xs[j], NormSpec::L2).unwrap();
                let dy = geometry::distance(&ys[perm[i]], &ys[perm[j]], NormSpec::L2).unwrap();
                (dx - dy).abs() <= tol
            })
        })
    })
}

/// A random point-set pair for congruence testing: half the time ys is a
/// shuffled rigid (possibly reflected) image of xs, half the time an
/// independent draw.
pub fn random_congruence_pair(rng: &mut ChaCha8Rng, max_n: usize) -> (Vec<Point>, Vec<Point>) {
    let n = rng.gen_range(1..=max_n);
    let draw = |rng: &mut ChaCha8Rng| {
        Point(vec![rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)])
    };
    let xs: Vec<Point> = (0..n).map(|_| draw(rng)).collect();
    let ys: Vec<Point> = if rng.gen_bool(0.5) {
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let reflect = rng.gen_bool(0.5);
        let (s, c) = angle.sin_cos();
        let mut ys: Vec<Point> = xs
            .iter()
            .map(|p| {
                let (x, y) = (p.coords()[0], p.coords()[1]);
                let y = if reflect { -y } else { y };
                Point(vec![c * x - s * y + 1.0, s * x + c * y + 2.0])
            })
            .collect();
        for i in (1..ys.len()).rev() {
            ys.swap(i, rng.gen_range(0..=i));
        }
        ys
    } else {
        (0..n).map(|_| draw(rng)).collect()
    };
    (xs, ys)
}

/// A random hypergraph with n in 2..=max_n, edge sizes in 2..=max_size.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, max_n: usize, max_size: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_n);
    let n_edges = rng.gen_range(0..=2 * n);
    let mut edges = Vec::new();
    for _ in 0..n_edges {
        let size = rng.gen_range(2..=max_size.min(n));
        let mut pool: Vec<usize> = (0..n).collect();
        for i in (1..pool.len()).rev() {
            pool.swap(i, rng.gen_range(0..=i));
        }
        pool.truncate(size);
        edges.push(pool);
    }
    Hypergraph::new(n, edges, None).unwrap()
}

/// A random m-uniform hypergraph with at least one edge.
pub fn random_uniform_hypergraph(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    m: usize,
) -> Hypergraph {
    let n = rng.gen_range(m.max(2)..=max_n.max(m));
    let n_edges = rng.gen_range(1..=(n + 2));
    let mut edges = Vec::new();
    for _ in 0..n_edges {
        let mut pool: Vec<usize> = (0..n).collect();
        for i in (1..pool.len()).rev() {
            pool.swap(i, rng.gen_range(0..=i));
        }
        pool.truncate(m);
        edges.push(pool);
    }
    Hypergraph::new(n, edges, None).unwrap()
}

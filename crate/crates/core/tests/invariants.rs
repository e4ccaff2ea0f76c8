//! Property suites for the geometric and combinatorial invariants.

mod common;

use chromalift::chroma::{self, SolveOptions};
use chromalift::geometry::{self, NormSpec, Point};
use chromalift::geomfam::{self, CongruenceMode, GonSet};
use chromalift::hypergraph::{disjoint_translates, Coloring, Hypergraph, OffsetRule};
use chromalift::lift::{self, LiftOptions};
use chromalift::tiling;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NORMS: [NormSpec; 4] = [NormSpec::L1, NormSpec::L2, NormSpec::Lp(3.0), NormSpec::Linf];

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

proptest! {
    #[test]
    fn triangle_inequality(
        a in prop::collection::vec(coord(), 1..5),
        b in prop::collection::vec(coord(), 1..5),
        c in prop::collection::vec(coord(), 1..5),
    ) {
        let d = a.len().min(b.len()).min(c.len());
        let (a, b, c) = (
            Point(a[..d].to_vec()),
            Point(b[..d].to_vec()),
            Point(c[..d].to_vec()),
        );
        for norm in NORMS {
            let ab = geometry::distance(&a, &b, norm).unwrap();
            let bc = geometry::distance(&b, &c, norm).unwrap();
            let ac = geometry::distance(&a, &c, norm).unwrap();
            prop_assert!(ac <= ab + bc + 1e-12);
        }
    }

    #[test]
    fn norm_equivalence_bounds(u in prop::collection::vec(coord(), 1..6)) {
        let linf = NormSpec::Linf.eval(&u);
        for norm in NORMS {
            let (c, cc) = norm.equivalence_constants(u.len()).unwrap();
            let val = norm.eval(&u);
            prop_assert!(c * linf <= val + 1e-9);
            prop_assert!(val <= cc * linf + 1e-9);
        }
    }

    #[test]
    fn congruence_reflexive_and_symmetric(
        coords in prop::collection::vec(prop::collection::vec(coord(), 2), 1..5),
    ) {
        let xs: Vec<Point> = coords.iter().cloned().map(Point).collect();
        let id = geometry::congruent_euclidean(&xs, &xs, 1e-9).unwrap();
        prop_assert!(id.is_some());
        // A rigid motion of xs must be congruent in both directions.
        let ys: Vec<Point> = xs
            .iter()
            .map(|p| {
                let (x, y) = (p.coords()[0], p.coords()[1]);
                let (s, c) = 0.7f64.sin_cos();
                Point(vec![c * x - s * y + 3.0, s * x + c * y - 1.0])
            })
            .collect();
        let fwd = geometry::congruent_euclidean(&xs, &ys, 1e-6).unwrap();
        let bwd = geometry::congruent_euclidean(&ys, &xs, 1e-6).unwrap();
        prop_assert!(fwd.is_some());
        prop_assert!(bwd.is_some());
    }

    #[test]
    fn induced_composition(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_hypergraph(&mut rng, 8, 3);
        let n = h.n();
        if n < 3 {
            return Ok(());
        }
        let u: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        if u.len() < 2 {
            return Ok(());
        }
        let (h_u, map_u) = h.induced(&u).unwrap();
        let u2: Vec<usize> = (0..h_u.n()).filter(|_| rng.gen_bool(0.7)).collect();
        if u2.len() < 2 {
            return Ok(());
        }
        let (h_uu, _) = h_u.induced(&u2).unwrap();
        // Composing restrictions equals restricting by the preimage.
        let composed: Vec<usize> = u2.iter().map(|&v| map_u[v]).collect();
        let (direct, _) = h.induced(&composed).unwrap();
        prop_assert_eq!(h_uu.edges(), direct.edges());
    }
}

#[test]
fn congruence_matches_factorial_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..60 {
        let (xs, ys) = common::random_congruence_pair(&mut rng, 5);
        let fast = geometry::congruent_euclidean(&xs, &ys, 1e-6).unwrap().is_some();
        let brute = common::brute_force_congruent(&xs, &ys, 1e-6);
        assert_eq!(fast, brute);
    }
}

#[test]
fn translation_preserves_unit_pairs() {
    let pts = geomfam::builtin_points(&geomfam::BuiltinPointSet::MoserSpindle).unwrap();
    for norm in NORMS {
        let before = geometry::unit_distance_pairs(&pts, norm, 1e-9).unwrap();
        let moved = geometry::translate(&pts, &Point(vec![10.0, -4.0])).unwrap();
        let after = geometry::unit_distance_pairs(&moved, norm, 1e-9).unwrap();
        assert_eq!(before, after);
    }
}

#[test]
fn induced_edge_count_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let h = common::random_hypergraph(&mut rng, 10, 4);
        let u: Vec<usize> = (0..h.n()).filter(|_| rng.gen_bool(0.6)).collect();
        if u.len() < 2 {
            continue;
        }
        let (sub, _) = h.induced(&u).unwrap();
        let expected = h
            .edges()
            .iter()
            .filter(|e| e.iter().all(|v| u.contains(v)))
            .count();
        assert_eq!(sub.edges().len(), expected);
    }
}

#[test]
fn translates_are_vertex_disjoint_and_chi_preserving() {
    let pts = geomfam::builtin_points(&geomfam::BuiltinPointSet::MoserSpindle).unwrap();
    let h = Hypergraph::unit_distance(pts, NormSpec::L2, 1e-9).unwrap();
    let t = disjoint_translates(&h, 4, &OffsetRule::default(), 1e-9).unwrap();
    assert_eq!(t.copies.len(), 4);
    let opts = SolveOptions::default();
    let chi = chroma::chromatic_number(&h, &opts).unwrap().chi;
    for copy in &t.copies {
        // Each copy's unit pairs are preserved by the translation.
        let pairs =
            geometry::unit_distance_pairs(copy.embedding().unwrap(), NormSpec::L2, 1e-9)
                .unwrap();
        assert_eq!(pairs.len(), 11);
        assert_eq!(chroma::chromatic_number(copy, &opts).unwrap().chi, chi);
    }
}

#[test]
fn chi_monotone_under_induction() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let opts = SolveOptions::default();
    for _ in 0..20 {
        let h = common::random_hypergraph(&mut rng, 7, 3);
        let chi = chroma::chromatic_number(&h, &opts).unwrap().chi;
        let u: Vec<usize> = (0..h.n()).filter(|_| rng.gen_bool(0.7)).collect();
        if u.len() < 2 {
            continue;
        }
        let (sub, _) = h.induced(&u).unwrap();
        let chi_sub = chroma::chromatic_number(&sub, &opts).unwrap().chi;
        assert!(chi_sub <= chi);
    }
}

#[test]
fn adding_an_edge_never_decreases_chi() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let opts = SolveOptions::default();
    for _ in 0..20 {
        let h = common::random_hypergraph(&mut rng, 7, 3);
        let chi = chroma::chromatic_number(&h, &opts).unwrap().chi;
        let mut edges = h.edges().to_vec();
        let i = rng.gen_range(0..h.n());
        let j = (i + 1 + rng.gen_range(0..h.n() - 1)) % h.n();
        if i == j {
            continue;
        }
        edges.push(vec![i, j]);
        let h2 = Hypergraph::new(h.n(), edges, None).unwrap();
        let chi2 = chroma::chromatic_number(&h2, &opts).unwrap().chi;
        assert!(chi2 >= chi);
    }
}

#[test]
fn lift_cardinality_and_uniformity() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let opts = LiftOptions::default();
    for _ in 0..15 {
        let m = rng.gen_range(2..=3);
        let h = common::random_uniform_hypergraph(&mut rng, 6, m);
        let r = lift::lift(&h, None, &opts).unwrap();
        let k = r.k as u64;
        assert_eq!(r.lifted.n(), r.k * h.n());
        assert_eq!(
            r.lifted.edges().len() as u64,
            lift::lifted_edge_count(h.edges().len() as u64, h.n() as u64, k)
        );
        assert!(r.lifted.is_uniform(m + 1));
        // Every lifted edge is e ∪ {v} with e inside copy i, v in copy j > i.
        for e in r.lifted.edges() {
            let copies: Vec<usize> = e.iter().map(|&v| r.copy_map[v].0).collect();
            let max_copy = *copies.iter().max().unwrap();
            let attachment = copies.iter().filter(|&&c| c == max_copy).count();
            assert_eq!(attachment, 1, "exactly one vertex comes from the later copy");
            assert!(copies.iter().filter(|&&c| c != max_copy).all(|&c| c == copies[0]));
        }
    }
}

#[test]
fn extend_coloring_proper_over_random_proper_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let solve = SolveOptions::default();
    let opts = LiftOptions::default();
    for _ in 0..10 {
        let h = common::random_uniform_hypergraph(&mut rng, 5, 2);
        let r = lift::lift(&h, None, &opts).unwrap();
        // Random proper colorings found by coloring with headroom.
        let chi = chroma::chromatic_number(&h, &solve).unwrap().chi;
        let phi = chroma::k_colorable(&h, chi + 1, &solve)
            .unwrap()
            .witness
            .unwrap();
        let psi = lift::extend_coloring(&phi, &r).unwrap();
        assert!(chroma::is_proper(&r.lifted, &psi).unwrap());
    }
}

#[test]
fn lifted_k_minus_1_colorings_all_fail_brute_force() {
    // kn <= 12 keeps full enumeration feasible: K2 gives kn = 4.
    let h = Hypergraph::from_pairs(2, &[(0, 1)], None).unwrap();
    let r = lift::lift(&h, None, &LiftOptions::default()).unwrap();
    assert!(!common::brute_force_k_colorable(&r.lifted, r.k - 1));
    // And an odd cycle: k = 3, n = 3, kn = 9.
    let c3 = Hypergraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)], None).unwrap();
    let r3 = lift::lift(&c3, None, &LiftOptions::default()).unwrap();
    assert!(!common::brute_force_k_colorable(&r3.lifted, r3.k - 1));
}

#[test]
fn tiling_same_cell_pairs_below_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for norm in NORMS {
        for d in 1..=3usize {
            let pc = tiling::tiling_params(norm, d, 0.99).unwrap();
            for _ in 0..2000 {
                let cell: Vec<f64> = (0..d)
                    .map(|_| (rng.gen_range(0..pc.m) as f64) * pc.eps)
                    .collect();
                let x = Point(
                    cell.iter()
                        .map(|c| c + rng.gen_range(0.0..pc.eps))
                        .collect(),
                );
                let y = Point(
                    cell.iter()
                        .map(|c| c + rng.gen_range(0.0..pc.eps))
                        .collect(),
                );
                assert!(geometry::distance(&x, &y, norm).unwrap() < 1.0);
            }
        }
    }
}

#[test]
fn tiling_cross_cell_same_color_above_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for norm in NORMS {
        for d in 1..=3usize {
            let pc = tiling::tiling_params(norm, d, 0.99).unwrap();
            for _ in 0..2000 {
                let x = Point((0..d).map(|_| rng.gen_range(0.0..pc.eps)).collect());
                // Same color, q >= 1 full periods away along a random axis,
                // plus in-cell jitter on the partner.
                let axis = rng.gen_range(0..d);
                let q = rng.gen_range(1..=2) as f64;
                let mut y: Vec<f64> = (0..d)
                    .map(|i| {
                        (x.coords()[i] / pc.eps).floor() * pc.eps
                            + rng.gen_range(0.0..pc.eps)
                    })
                    .collect();
                y[axis] += q * pc.period();
                let y = Point(y);
                assert_eq!(
                    pc.color_point(&x).unwrap(),
                    pc.color_point(&y).unwrap()
                );
                assert!(geometry::distance(&x, &y, norm).unwrap() > 1.0);
            }
        }
    }
}

#[test]
fn tiling_color_count_and_periodicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for (norm, d) in [(NormSpec::L2, 2usize), (NormSpec::L1, 2), (NormSpec::Linf, 3)] {
        let pc = tiling::tiling_params(norm, d, 0.99).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..20_000 {
            let x = Point((0..d).map(|_| rng.gen_range(0.0..pc.period())).collect());
            seen.insert(pc.color_point(&x).unwrap());
            // Periodicity along each axis, away from cell boundaries.
            let margin = 1e-6;
            let frac = x
                .coords()
                .iter()
                .map(|c| (c / pc.eps).fract())
                .fold(f64::INFINITY, f64::min);
            if frac > margin && frac < 1.0 - margin {
                for axis in 0..d {
                    let mut shifted = x.coords().to_vec();
                    shifted[axis] += pc.period();
                    assert_eq!(
                        pc.color_point(&x).unwrap(),
                        pc.color_point(&Point(shifted)).unwrap()
                    );
                }
            }
        }
        assert_eq!(seen.len() as u64, pc.color_count());
    }
}

#[test]
fn instantiate_single_2gon_matches_distance_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..10 {
        let len = rng.gen_range(0.5..3.0);
        let gon = GonSet::new(
            2,
            2,
            vec![vec![Point(vec![0.0, 0.0]), Point(vec![len, 0.0])]],
        )
        .unwrap();
        // Points snapped to multiples of len/2 so exact matches occur.
        let f: Vec<Point> = (0..8)
            .map(|_| {
                Point(vec![
                    rng.gen_range(-4i32..4) as f64 * len / 2.0,
                    rng.gen_range(-4i32..4) as f64 * len / 2.0,
                ])
            })
            .collect();
        let mut f = f;
        f.dedup_by(|a, b| a == b);
        let h = geomfam::instantiate(&gon, &f, NormSpec::L2, CongruenceMode::Euclidean, 1e-9)
            .unwrap();
        let mut expected = Vec::new();
        for i in 0..f.len() {
            for j in (i + 1)..f.len() {
                let dist = geometry::distance(&f[i], &f[j], NormSpec::L2).unwrap();
                if (dist - len).abs() <= 1e-9 {
                    expected.push(vec![i, j]);
                }
            }
        }
        assert_eq!(h.edges().len(), expected.len());
    }
}

#[test]
fn instantiate_is_translation_invariant() {
    let pts = geomfam::builtin_points(&geomfam::BuiltinPointSet::MoserSpindle).unwrap();
    let seg = GonSet::unit_segment(2).unwrap();
    for mode in [CongruenceMode::Euclidean, CongruenceMode::Translation] {
        let norm = if mode == CongruenceMode::Euclidean {
            NormSpec::L2
        } else {
            NormSpec::L1
        };
        let h = geomfam::instantiate(&seg, &pts, norm, mode, 1e-9).unwrap();
        let moved = geometry::translate(&pts, &Point(vec![-3.0, 7.5])).unwrap();
        let h2 = geomfam::instantiate(&seg, &moved, norm, mode, 1e-9).unwrap();
        // Point order is unchanged, so isomorphism is edge-set equality.
        assert_eq!(h.edges(), h2.edges());
    }
}

#[test]
fn gm_containment_and_chi_bound() {
    let pts = geomfam::builtin_points(&geomfam::BuiltinPointSet::MoserSpindle).unwrap();
    let ud = geomfam::gm_hypergraph(&pts, NormSpec::L2, 2, 1e-9).unwrap();
    let g3 = geomfam::gm_hypergraph(&pts, NormSpec::L2, 3, 1e-9).unwrap();
    for e in g3.edges() {
        let contains_pair = ud
            .edges()
            .iter()
            .any(|pair| pair.iter().all(|v| e.contains(v)));
        assert!(contains_pair);
    }
    let opts = SolveOptions::default();
    let chi_ud = chroma::chromatic_number(&ud, &opts).unwrap().chi;
    let chi_g3 = chroma::chromatic_number(&g3, &opts).unwrap().chi;
    assert!(chi_g3 <= chi_ud);
}

#[test]
fn solver_witnesses_are_always_proper() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    let opts = SolveOptions::default();
    for _ in 0..25 {
        let h = common::random_hypergraph(&mut rng, 8, 4);
        let out = chroma::chromatic_number(&h, &opts).unwrap();
        assert!(chroma::is_proper(&h, &out.witness).unwrap());
        assert!(out.witness.used() <= out.chi);
    }
}

#[test]
fn coloring_pushforward_through_induced_map() {
    // Colorings pull back through the recorded index maps.
    let pts = geomfam::builtin_points(&geomfam::BuiltinPointSet::MoserSpindle).unwrap();
    let h = Hypergraph::unit_distance(pts, NormSpec::L2, 1e-9).unwrap();
    let opts = SolveOptions::default();
    let full = chroma::chromatic_number(&h, &opts).unwrap();
    let (sub, map) = h.induced(&[0, 1, 2, 3]).unwrap();
    let restricted = Coloring::new(
        full.witness.m,
        map.iter().map(|&v| full.witness.colors[v]).collect(),
    )
    .unwrap();
    assert!(chroma::is_proper(&sub, &restricted).unwrap());
}

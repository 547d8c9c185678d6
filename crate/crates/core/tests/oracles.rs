//! Cross-checks against independent, naive implementations and known counts.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cyclesat::bounds::sat_bounds;
use cyclesat::blocks::BlockDecomposition;
use cyclesat::canon::{canonical_code, exhaustive_code};
use cyclesat::constructions::{expand_vertex, expand_vertices, isaacs_snark};
use cyclesat::cycles::{circumference, exists_path_at_least, has_cycle_at_least};
use cyclesat::enumerate::{all_connected_graphs, graphs};
use cyclesat::saturation::{is_c_ge_r_saturated, is_c_ge_r_free, is_saturated, sat_oracle};
use cyclesat::Graph;

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Longest cycle by Held-Karp over vertex subsets, anchored at each subset's
/// smallest vertex.
fn naive_circumference(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let mut dp = vec![0u32; 1 << n];
        dp[1 << s] = 1 << s;
        for mask in 0..(1usize << n) {
            if dp[mask] == 0 || mask & ((1 << s) - 1) != 0 {
                continue;
            }
            for v in 0..n {
                if dp[mask] >> v & 1 == 0 {
                    continue;
                }
                for &w in g.neighbors(v) {
                    if w > s && mask >> w & 1 == 0 {
                        dp[mask | 1 << w] |= 1 << w;
                    }
                    if w == s && mask.count_ones() >= 3 {
                        best = best.max(mask.count_ones() as usize);
                    }
                }
            }
        }
    }
    best
}

#[test]
fn circumference_matches_held_karp() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..300 {
        let n = rng.gen_range(3..=12);
        let p = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        let c = circumference(&g).unwrap();
        assert_eq!(c, naive_circumference(&g), "trial {trial}: {:?}", g.edges().collect::<Vec<_>>());
        for r in 3..=n + 1 {
            assert_eq!(has_cycle_at_least(&g, r).unwrap(), c >= r);
        }
        let dec = BlockDecomposition::of(&g);
        let per_block = dec
            .blocks
            .iter()
            .map(|b| naive_circumference(&g.induced(&b.vertices)))
            .max()
            .unwrap_or(0);
        assert_eq!(c, per_block);
    }
}

#[test]
fn path_existence_is_monotone() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(4..=11);
        let g = random_graph(&mut rng, n, 0.4);
        let (u, v) = (0, n - 1);
        let found: Vec<bool> = (0..n + 1)
            .map(|l| exists_path_at_least(&g, u, v, l).unwrap().is_some())
            .collect();
        assert!(found.windows(2).all(|w| w[0] >= w[1]));
        for (l, &f) in found.iter().enumerate() {
            if f {
                let p = exists_path_at_least(&g, u, v, l).unwrap().unwrap();
                assert!(g.is_path(&p) && p.len() > l && p[0] == u && *p.last().unwrap() == v);
            }
        }
    }
}

#[test]
fn graph_counts() {
    let all = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &want) in all.iter().enumerate() {
        let total: usize = (0..=n * n.saturating_sub(1) / 2).map(|m| graphs(n, m).unwrap().len()).sum();
        assert_eq!(total, want, "n = {n}");
    }
    assert_eq!(all_connected_graphs(7).unwrap().len(), 853);
    assert_eq!(all_connected_graphs(8).unwrap().len(), 11117);
}

#[test]
fn canonical_code_agrees_with_exhaustive_search() {
    for n in 1..=6 {
        let mut seen = BTreeMap::new();
        for m in 0..=n * (n - 1) / 2 {
            for g in graphs(n, m).unwrap() {
                let e = exhaustive_code(&g).unwrap();
                let c = canonical_code(&g).unwrap();
                assert!(seen.insert(e, c).is_none(), "two representatives share an exhaustive code");
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..40 {
        let n = rng.gen_range(5..=8);
        let a = random_graph(&mut rng, n, 0.5);
        let b = random_graph(&mut rng, n, 0.5);
        assert_eq!(
            canonical_code(&a).unwrap() == canonical_code(&b).unwrap(),
            exhaustive_code(&a).unwrap() == exhaustive_code(&b).unwrap()
        );
    }
}

#[test]
fn path_test_agrees_with_definition() {
    for n in 1..=7 {
        for g in all_connected_graphs(n).unwrap() {
            let c = circumference(&g).unwrap();
            for r in 4..=7 {
                let by_definition = c < r
                    && g
                        .non_edges()
                        .into_iter()
                        .all(|(u, v)| circumference(&g.with_edge(u, v).unwrap()).unwrap() >= r);
                assert_eq!(is_saturated(&g, r).unwrap(), by_definition);
            }
        }
    }
}

#[test]
fn oracle_witnesses_recheck() {
    for (n, r) in [(6, 4), (7, 5), (7, 6), (8, 6)] {
        let res = sat_oracle(n, r, 28).unwrap();
        assert_eq!(res.erdos_gallai_violations, 0);
        for w in &res.witnesses {
            let g = cyclesat::graph6::parse(w).unwrap();
            assert_eq!(g.size(), res.sat_value);
            assert!(is_c_ge_r_saturated(&g, r).unwrap().is_saturated());
            for (u, v) in g.non_edges() {
                assert!(!is_c_ge_r_free(&g.with_edge(u, v).unwrap(), r).unwrap());
            }
        }
    }
}

#[test]
fn bounds_agree_with_oracle() {
    for r in 3..=8 {
        for n in r..=8 {
            let b = sat_bounds(n, r).unwrap();
            let v = sat_oracle(n, r, 28).unwrap().sat_value;
            assert!(b.lower <= v, "n={n} r={r}: lower {} > {v}", b.lower);
            if let Some(u) = b.upper {
                assert!(v <= u);
            }
            if let Some(e) = b.exact {
                assert_eq!(e, v, "n={n} r={r}");
            }
        }
    }
}

#[test]
fn snark_distances_and_expansions() {
    let j5 = isaacs_snark(5).unwrap();
    assert_eq!(j5.distance(2, 14), Some(2));
    let one = expand_vertex(&j5, 2).unwrap();
    assert!(is_saturated(&one, one.order()).unwrap());
    let two = expand_vertices(&j5, &[2, 14]).unwrap();
    assert_eq!(two.order(), 24);
    assert!(two.is_regular(3));
}

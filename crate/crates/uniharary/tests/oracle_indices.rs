//! Index implementations against independent oracles on random inputs.

mod common;

use common::{brute_force_h_a, floyd_warshall, random_unicyclic};
use proptest::prelude::*;
use rand::prelude::*;
use rand::Rng as _;
use uniharary::graph::Graph;
use uniharary::indices::{additively_weighted_harary, classical_indices};
use uniharary::rational::Rational;

#[test]
fn h_a_matches_oracle_on_random_unicyclic_graphs() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..300 {
        let n = rng.gen_range(3..=12);
        let g = random_unicyclic(n, &mut rng);
        assert_eq!(additively_weighted_harary(&g).unwrap(), brute_force_h_a(&g));
    }
}

#[test]
fn classical_indices_match_oracle_sums() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let g = random_unicyclic(n, &mut rng);
        let d = floyd_warshall(&g);
        let mut harary = Rational::zero();
        let mut wiener = 0u64;
        for u in 0..n {
            for v in (u + 1)..n {
                harary += Rational::new(1, d[u][v] as i64).unwrap();
                wiener += d[u][v] as u64;
            }
        }
        let report = classical_indices(&g).unwrap();
        assert_eq!(report.harary, harary);
        assert_eq!(report.wiener, wiener);
        assert_eq!(report.h_a, brute_force_h_a(&g));
    }
}

proptest! {
    /// BFS distances agree with Floyd–Warshall on arbitrary graphs
    /// (connected or not) with n <= 10.
    #[test]
    fn bfs_matches_floyd_warshall(n in 1usize..=10, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let bfs = g.distances();
        let fw = floyd_warshall(&g);
        for u in 0..n {
            for v in 0..n {
                let expected = (fw[u][v] < common::UNREACHED).then_some(fw[u][v]);
                prop_assert_eq!(bfs.get(u, v), expected);
            }
        }
    }

    /// Distance-matrix invariants: symmetry, zero diagonal, d = 1 exactly on
    /// edges, triangle inequality.
    #[test]
    fn distance_matrix_invariants(n in 2usize..=9, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_unicyclic(n.max(3), &mut rng);
        let n = g.vertex_count();
        let d = g.distances();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == Some(1), g.has_edge(u, v));
                for w in 0..n {
                    let (duv, duw, dwv) = (
                        d.get(u, v).unwrap(),
                        d.get(u, w).unwrap(),
                        d.get(w, v).unwrap(),
                    );
                    prop_assert!(duv <= duw + dwv);
                }
            }
        }
    }
}

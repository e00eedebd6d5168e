//! Seeded graph corpora for sweeps and searches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_alliance::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid random graph")
}

/// `count` random graphs for each order, edge densities uniform in
/// `[0.15, 0.85)`. The same seed always yields the same list.
pub fn random_corpus(seed: u64, orders: impl IntoIterator<Item = usize>, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in orders {
        for _ in 0..count {
            let p = rng.gen_range(0.15..0.85);
            out.push(random_graph(&mut rng, n, p));
        }
    }
    out
}

/// Every labelled graph on `n` vertices, `2^(n(n-1)/2)` of them.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=8).contains(&n), "exhaustive corpus is limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid graph")
    })
}

/// A 7-vertex graph whose polynomial `x^7 + 5x^6 + 6x^5 + x^4 + 3x^3 + x^2`
/// is not unimodal.
pub fn seven_vertex_example() -> Graph {
    Graph::new(
        7,
        &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 6), (3, 4), (4, 5), (4, 6), (5, 6)],
    )
    .expect("valid graph")
}

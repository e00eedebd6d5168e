#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_alliance::families::FamilySpec;
use strong_alliance::Graph;

/// G(n, p) with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// `count` graphs per order with densities drawn from `[0.15, 0.85)`.
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

/// Every valid family instance on at most `max_n` vertices.
pub fn family_instances(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(FamilySpec::Empty { n });
        out.push(FamilySpec::Complete { n });
        if n >= 2 {
            out.push(FamilySpec::Path { n });
            out.push(FamilySpec::Star { n });
        }
        if n >= 3 {
            out.push(FamilySpec::Cycle { n });
        }
        for m in 1..=max_n - n {
            out.push(FamilySpec::CompleteBipartite { n, m });
        }
        for t in 3..=max_n.saturating_sub(n) {
            if n >= 3 {
                out.push(FamilySpec::DoubleStar { r: n, t });
            }
        }
    }
    out
}

/// All labelled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

mod common;

use strong_alliance::enumerate::{compute_polynomial, compute_polynomial_oracle, count_connected_subsets};
use strong_alliance::{family_graph, VertexSet};

#[test]
fn engines_agree_on_small_families() {
    for spec in common::family_instances(12) {
        let g = family_graph(spec).unwrap();
        assert_eq!(
            compute_polynomial(&g).unwrap(),
            compute_polynomial_oracle(&g).unwrap(),
            "{spec}"
        );
    }
}

#[test]
fn engines_agree_on_random_graphs() {
    for g in common::random_corpus(11, 4..=10, 60) {
        assert_eq!(compute_polynomial(&g).unwrap(), compute_polynomial_oracle(&g).unwrap(), "{g:?}");
    }
}

#[test]
fn engines_agree_on_every_graph_up_to_five_vertices() {
    for n in 1..=5 {
        for g in common::all_graphs(n) {
            assert_eq!(compute_polynomial(&g).unwrap(), compute_polynomial_oracle(&g).unwrap(), "{g:?}");
        }
    }
}

fn reachable_within(g: &strong_alliance::Graph, s: VertexSet) -> bool {
    // plain DFS over an explicit stack, independent of the bitmask BFS
    let members: Vec<usize> = s.iter().collect();
    let Some(&start) = members.first() else { return false };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &u in &members {
            if !seen[u] && g.has_edge(u, v) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    members.iter().all(|&v| seen[v])
}

#[test]
fn connected_subset_test_matches_search() {
    for g in common::random_corpus(5, [6, 8, 10], 4) {
        let n = g.order();
        let mut connected = 0u64;
        for bits in 1..1u64 << n {
            let s = VertexSet::from_bits(bits);
            let expected = reachable_within(&g, s);
            assert_eq!(g.is_connected_subset(s).unwrap(), expected, "{g:?} {s:?}");
            connected += expected as u64;
        }
        assert_eq!(count_connected_subsets(&g).unwrap(), connected);
    }
}

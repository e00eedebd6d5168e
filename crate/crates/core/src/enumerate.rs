//! Exact computation of the strong alliance polynomial.
//!
//! Two independent engines:
//!
//! * [`compute_polynomial_oracle`] walks all `2^n - 1` nonempty subsets and
//!   applies the full predicate (defense condition plus connectivity).
//! * [`compute_polynomial`] enumerates only connected vertex subsets. Each
//!   connected set is generated exactly once, from its smallest vertex, by
//!   rooted expansion: a node holds the current set, the extension frontier,
//!   and an excluded set. Branch `i` adds the `i`-th frontier vertex and
//!   excludes the earlier ones, so the branches partition the supersets.
//!
//! The search forest is exposed as [`SearchTask`]s (one per root plus one
//! per first expansion choice) so that callers can farm subtrees out to
//! workers and add up the resulting [`Tally`]s.

use alloc::vec::Vec;
use core::ops::ControlFlow;
use core::time::Duration;

use num_bigint::BigUint;

use crate::alliance::is_strong_alliance_connected;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::polynomial::AlliancePolynomial;

/// Vertex cap for the full-subset oracle.
pub const ORACLE_MAX_VERTICES: usize = 24;

/// Largest order enumerated without an explicit size override or budget.
pub const UNBUDGETED_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("graph has {n} vertices; the {engine} engine accepts at most {max}")]
    TooLarge { n: usize, max: usize, engine: Engine },
    #[error("enumeration interrupted after {visited} subsets")]
    Interrupted { visited: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Oracle,
    Connected,
}

impl core::fmt::Display for Engine {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Engine::Oracle => "oracle",
            Engine::Connected => "connected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationStats {
    pub subsets_visited: u64,
    pub alliances_found: u64,
    /// Left at zero by this crate; filled in by callers that own a clock.
    pub elapsed: Duration,
    pub engine: Engine,
}

/// Per-cardinality alliance counts plus the number of subsets examined.
///
/// Counts fit in `u64`: no cardinality class of a 64-vertex graph exceeds
/// `C(64, 32) < 2^64`, and the total is below `2^64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub counts: [u64; MAX_VERTICES + 1],
    pub visited: u64,
}

impl Default for Tally {
    fn default() -> Self {
        Tally {
            counts: [0; MAX_VERTICES + 1],
            visited: 0,
        }
    }
}

impl Tally {
    pub fn merge(&mut self, other: &Tally) {
        for (a, b) in self.counts.iter_mut().zip(other.counts.iter()) {
            *a += b;
        }
        self.visited += other.visited;
    }

    pub fn alliances(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> AlliancePolynomial {
        AlliancePolynomial::from_coeffs(self.counts.iter().map(|&c| BigUint::from(c)).collect())
    }
}

/// Full subset sweep. Slow but obviously correct; used as the reference.
pub fn compute_polynomial_oracle(g: &Graph) -> Result<AlliancePolynomial, EnumerationError> {
    let n = g.order();
    if n > ORACLE_MAX_VERTICES {
        return Err(EnumerationError::TooLarge {
            n,
            max: ORACLE_MAX_VERTICES,
            engine: Engine::Oracle,
        });
    }
    let mut counts = alloc::vec![0u64; n + 1];
    for bits in 1..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        if is_strong_alliance_connected(g, s).expect("subset of a valid graph") {
            counts[s.len()] += 1;
        }
    }
    Ok(AlliancePolynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect()))
}

/// Connected-subset engine, refusing graphs above [`UNBUDGETED_MAX_VERTICES`].
pub fn compute_polynomial(g: &Graph) -> Result<AlliancePolynomial, EnumerationError> {
    if g.order() > UNBUDGETED_MAX_VERTICES {
        return Err(EnumerationError::TooLarge {
            n: g.order(),
            max: UNBUDGETED_MAX_VERTICES,
            engine: Engine::Connected,
        });
    }
    compute_polynomial_with(g, |_| false).map(|(p, _)| p)
}

/// Connected-subset engine without a size limit. `interrupt` is polled with
/// the running visit count every [`POLL_INTERVAL`] subsets; returning `true`
/// abandons the computation.
pub fn compute_polynomial_with(
    g: &Graph,
    mut interrupt: impl FnMut(u64) -> bool,
) -> Result<(AlliancePolynomial, EnumerationStats), EnumerationError> {
    let mut total = Tally::default();
    for task in SearchTask::roots(g) {
        let t = task.tally(g, &mut interrupt)?;
        total.merge(&t);
    }
    let stats = EnumerationStats {
        subsets_visited: total.visited,
        alliances_found: total.alliances(),
        elapsed: Duration::ZERO,
        engine: Engine::Connected,
    };
    Ok((total.to_polynomial(), stats))
}

/// Number of nonempty vertex subsets inducing a connected subgraph.
pub fn count_connected_subsets(g: &Graph) -> Result<u64, EnumerationError> {
    if g.order() > ORACLE_MAX_VERTICES {
        return Err(EnumerationError::TooLarge {
            n: g.order(),
            max: ORACLE_MAX_VERTICES,
            engine: Engine::Connected,
        });
    }
    let mut count = 0u64;
    for task in SearchTask::roots(g) {
        let _ = task.for_each(g, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
    }
    Ok(count)
}

/// How often the interrupt callback is polled.
pub const POLL_INTERVAL: u64 = 1 << 14;

/// A subtree of the connected-subset search forest.
///
/// The task emits `set` and every connected superset reachable by adding
/// frontier vertices while avoiding `excluded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchTask {
    set: u64,
    frontier: u64,
    excluded: u64,
}

impl SearchTask {
    /// One task per root vertex, each covering all connected sets whose
    /// smallest vertex is that root.
    pub fn roots(g: &Graph) -> impl Iterator<Item = SearchTask> + '_ {
        (0..g.order()).map(move |r| {
            let below = (1u64 << r) - 1;
            SearchTask {
                set: 1 << r,
                frontier: g.adjacency()[r] & !below,
                excluded: below,
            }
        })
    }

    /// Finer decomposition: for each root, a leaf task emitting only `{r}`
    /// and one task per first expansion choice. Together they cover the
    /// same sets as [`SearchTask::roots`], each exactly once.
    pub fn split(g: &Graph) -> Vec<SearchTask> {
        let adj = g.adjacency();
        let mut tasks = Vec::new();
        for root in Self::roots(g) {
            tasks.push(SearchTask {
                frontier: 0,
                ..root
            });
            let mut rest = root.frontier;
            let mut excluded = root.excluded;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                let bit = 1u64 << u;
                rest &= !bit;
                let set = root.set | bit;
                tasks.push(SearchTask {
                    set,
                    frontier: rest | (adj[u] & !set & !excluded),
                    excluded,
                });
                excluded |= bit;
            }
        }
        tasks
    }

    pub fn set(&self) -> VertexSet {
        VertexSet::from_bits(self.set)
    }

    /// Calls `visit` on every set of the subtree, stopping early on `Break`.
    pub fn for_each(
        &self,
        g: &Graph,
        visit: &mut impl FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        expand(g.adjacency(), self.set, self.frontier, self.excluded, visit)
    }

    /// Counts the strong alliances in this subtree.
    pub fn tally(
        &self,
        g: &Graph,
        interrupt: &mut impl FnMut(u64) -> bool,
    ) -> Result<Tally, EnumerationError> {
        let adj = g.adjacency();
        // v is defended iff 2·δ_S(v) ≥ δ(v)
        let degree: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
        let mut tally = Tally::default();
        let flow = self.for_each(g, &mut |s| {
            tally.visited += 1;
            if tally.visited % POLL_INTERVAL == 0 && interrupt(tally.visited) {
                return ControlFlow::Break(());
            }
            let bits = s.bits();
            if s.iter().all(|v| 2 * (adj[v] & bits).count_ones() >= degree[v]) {
                tally.counts[s.len()] += 1;
            }
            ControlFlow::Continue(())
        });
        match flow {
            ControlFlow::Continue(()) => Ok(tally),
            ControlFlow::Break(()) => Err(EnumerationError::Interrupted {
                visited: tally.visited,
            }),
        }
    }
}

fn expand(
    adj: &[u64],
    set: u64,
    frontier: u64,
    mut excluded: u64,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    visit(VertexSet::from_bits(set))?;
    let mut rest = frontier;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        let bit = 1u64 << u;
        rest &= !bit;
        let grown = set | bit;
        let next = rest | (adj[u] & !grown & !excluded);
        expand(adj, grown, next, excluded, visit)?;
        excluded |= bit;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &edges)
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    fn seven_vertex_example() -> Graph {
        let one_based = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 7), (4, 5), (5, 6), (5, 7), (6, 7)];
        let edges: Vec<_> = one_based.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        graph(7, &edges)
    }

    fn poly(c: &[u64]) -> AlliancePolynomial {
        AlliancePolynomial::from_u64s(c)
    }

    #[test]
    fn oracle_fixtures() {
        assert_eq!(compute_polynomial_oracle(&cycle(4)).unwrap(), poly(&[0, 0, 4, 4, 1]));
        assert_eq!(compute_polynomial_oracle(&path(4)).unwrap(), poly(&[0, 0, 3, 2, 1]));
        assert_eq!(
            compute_polynomial_oracle(&seven_vertex_example()).unwrap(),
            poly(&[0, 0, 1, 3, 1, 6, 5, 1])
        );
        assert!(matches!(
            compute_polynomial_oracle(&Graph::edgeless(25).unwrap()),
            Err(EnumerationError::TooLarge { engine: Engine::Oracle, .. })
        ));
    }

    #[test]
    fn connected_engine_examples() {
        assert_eq!(compute_polynomial(&Graph::edgeless(3).unwrap()).unwrap(), poly(&[0, 3]));
        let k4_minus_pm = Graph::complete(4).unwrap().delete_edges(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(compute_polynomial(&k4_minus_pm).unwrap(), poly(&[0, 0, 4, 4, 1]));
        // double star S_{3,3}: centers 0 and 3
        let s33 = graph(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        assert_eq!(compute_polynomial(&s33).unwrap(), poly(&[0, 0, 0, 2, 4, 4, 1]));
        let two_p2 = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(compute_polynomial(&two_p2).unwrap(), poly(&[0, 0, 2]));
        assert_eq!(
            compute_polynomial(&seven_vertex_example()).unwrap(),
            poly(&[0, 0, 1, 3, 1, 6, 5, 1])
        );
    }

    #[test]
    fn size_limits() {
        let big = Graph::edgeless(21).unwrap();
        assert!(matches!(
            compute_polynomial(&big),
            Err(EnumerationError::TooLarge { max: UNBUDGETED_MAX_VERTICES, .. })
        ));
        let (p, stats) = compute_polynomial_with(&big, |_| false).unwrap();
        assert_eq!(p, poly(&[0, 21]));
        assert_eq!(stats.alliances_found, 21);
        assert_eq!(stats.subsets_visited, 21);

        let k64 = Graph::complete(64).unwrap();
        assert!(matches!(
            compute_polynomial_with(&k64, |_| true),
            Err(EnumerationError::Interrupted { visited: POLL_INTERVAL })
        ));
    }

    #[test]
    fn connected_subset_counts() {
        assert_eq!(count_connected_subsets(&Graph::complete(3).unwrap()), Ok(7));
        assert_eq!(count_connected_subsets(&path(3)), Ok(6));
        assert_eq!(count_connected_subsets(&cycle(4)), Ok(13));
    }

    #[test]
    fn each_connected_set_emitted_once() {
        let g = seven_vertex_example();
        let mut seen = BTreeSet::new();
        for task in SearchTask::roots(&g) {
            let _ = task.for_each(&g, &mut |s| {
                assert!(seen.insert(s.bits()), "{s:?} emitted twice");
                ControlFlow::Continue(())
            });
        }
        let brute: BTreeSet<u64> = (1..1u64 << 7)
            .filter(|&b| g.is_connected_subset(VertexSet::from_bits(b)).unwrap())
            .collect();
        assert_eq!(seen, brute);
    }

    #[test]
    fn split_tasks_cover_the_same_sets() {
        let g = seven_vertex_example();
        let mut whole = Tally::default();
        for t in SearchTask::roots(&g) {
            whole.merge(&t.tally(&g, &mut |_| false).unwrap());
        }
        let mut parts = Tally::default();
        for t in SearchTask::split(&g) {
            parts.merge(&t.tally(&g, &mut |_| false).unwrap());
        }
        assert_eq!(whole, parts);
        assert_eq!(parts.visited, count_connected_subsets(&g).unwrap());
    }

    #[test]
    fn stats_invariant() {
        let (p, stats) = compute_polynomial_with(&cycle(6), |_| false).unwrap();
        assert_eq!(BigUint::from(stats.alliances_found), p.evaluate_at_one());
        assert_eq!(stats.engine, Engine::Connected);
    }
}

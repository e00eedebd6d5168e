//! The defensive k-alliance condition and the strong alliance number.
//!
//! A nonempty set `S` is a defensive k-alliance when every `v ∈ S` satisfies
//! `δ_S(v) ≥ δ_S̄(v) + k`. The strong case is `k = 0`. Only alliances whose
//! induced subgraph is connected are counted by the polynomial.

use crate::graph::{Graph, GraphError, VertexSet};

/// The `k` in the defensive k-alliance condition, bounded by the maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefenseLevel(i32);

impl DefenseLevel {
    pub const STRONG: DefenseLevel = DefenseLevel(0);

    /// Validates `|k| ≤ Δ(g)`.
    pub fn new(k: i32, g: &Graph) -> Result<Self, AllianceError> {
        let max_degree = g.max_degree() as i32;
        if i64::from(k).abs() > i64::from(max_degree) {
            return Err(AllianceError::LevelOutOfRange { k, max_degree });
        }
        Ok(DefenseLevel(k))
    }

    pub fn get(self) -> i32 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AllianceError {
    #[error("defense level {k} outside [-{max_degree}, {max_degree}]")]
    LevelOutOfRange { k: i32, max_degree: i32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Tests the k-alliance condition on every member of `s`. Connectivity of
/// `s` is not required.
pub fn is_defensive_alliance(
    g: &Graph,
    s: VertexSet,
    k: DefenseLevel,
) -> Result<bool, AllianceError> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(GraphError::EmptySet.into());
    }
    let outside = s.complement(g.order());
    for v in s {
        let inside = g.degree_in_set(v, s)? as i64;
        let external = g.degree_in_set(v, outside)? as i64;
        if inside < external + k.get() as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership test for the sets counted by the strong alliance polynomial:
/// a strong defensive alliance whose induced subgraph is connected.
pub fn is_strong_alliance_connected(g: &Graph, s: VertexSet) -> Result<bool, AllianceError> {
    Ok(is_defensive_alliance(g, s, DefenseLevel::STRONG)? && g.is_connected_subset(s)?)
}

/// Minimum cardinality of a connected strong defensive alliance.
///
/// Searches cardinalities upward and stops at the first hit. Every component
/// is itself an alliance, so the search always terminates.
pub fn strong_alliance_number(g: &Graph) -> usize {
    let n = g.order();
    for k in 1..=n {
        if KSubsets::new(n, k).any(|s| is_strong_alliance_connected(g, s).unwrap_or(false)) {
            return k;
        }
    }
    unreachable!("a connected component is always a strong alliance")
}

/// All `k`-element subsets of `0..n` in increasing bit order (Gosper's hack).
#[derive(Debug, Clone)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 64 && k <= n);
        let next = match k {
            0 => Some(0),
            64 => Some(u64::MAX),
            _ => Some((1u64 << k) - 1),
        };
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        KSubsets { next, limit }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        self.next = if current == 0 || current == self.limit {
            None
        } else {
            let lowest = current & current.wrapping_neg();
            let ripple = current.checked_add(lowest);
            match ripple {
                Some(ripple) if ripple != 0 => {
                    let ones = ((current ^ ripple) >> 2) >> lowest.trailing_zeros();
                    let candidate = ripple | ones;
                    (candidate & !self.limit == 0).then_some(candidate)
                }
                _ => None,
            }
        };
        Some(VertexSet::from_bits(current))
    }
}

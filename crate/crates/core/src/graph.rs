//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitmasks so that vertex subsets fit in one machine word.

use alloc::vec::Vec;
use core::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set has members outside 0..{n}")]
    SetOutOfRange { n: usize },
    #[error("permutation is not a bijection on 0..{n}")]
    InvalidPermutation { n: usize },
}

/// A set of vertices, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Complement relative to the vertex set `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut graph = Self::edgeless(n)?;
        for &(u, v) in edges {
            graph.check_pair(u, v)?;
            graph.adjacency[u] |= 1 << v;
            graph.adjacency[v] |= 1 << u;
        }
        graph.recount();
        Ok(graph)
    }

    /// Like [`Graph::new`] but rejects repeated edges.
    pub fn new_strict(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut graph = Self::edgeless(n)?;
        for &(u, v) in edges {
            graph.check_pair(u, v)?;
            if graph.adjacency[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            graph.adjacency[u] |= 1 << v;
            graph.adjacency[v] |= 1 << u;
        }
        graph.recount();
        Ok(graph)
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            adjacency: alloc::vec![0; n],
            edge_count: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut graph = Self::edgeless(n)?;
        let full = VertexSet::full(n).bits();
        for (v, row) in graph.adjacency.iter_mut().enumerate() {
            *row = full & !(1 << v);
        }
        graph.recount();
        Ok(graph)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        Self::edgeless(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::NotAnEdge(u, v));
                }
            }
        }
        let mut graph = Graph {
            adjacency: rows,
            edge_count: 0,
        };
        graph.recount();
        Ok(graph)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    fn recount(&mut self) {
        let degree_sum: usize = self.adjacency.iter().map(|r| r.count_ones() as usize).sum();
        self.edge_count = degree_sum / 2;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adjacency[v])
    }

    /// Raw adjacency rows, one bitmask per vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adjacency
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adjacency[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, &row)| {
            let above = if u + 1 >= MAX_VERTICES { 0 } else { row >> (u + 1) << (u + 1) };
            VertexSet(above).iter().map(move |v| (u, v))
        })
    }

    /// Checks that `s` only names vertices of this graph.
    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.bits() & !self.vertices().bits() != 0 {
            return Err(GraphError::SetOutOfRange { n: self.order() });
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.order() });
        }
        Ok(())
    }

    /// `|N(v) ∩ s|`, the number of neighbours of `v` inside `s`.
    pub fn degree_in_set(&self, v: usize, s: VertexSet) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok((self.adjacency[v] & s.bits()).count_ones() as usize)
    }

    /// Whether the subgraph induced by `s` is connected.
    pub fn is_connected_subset(&self, s: VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        let start = s.min().ok_or(GraphError::EmptySet)?;
        Ok(self.reach_within(start, s) == s)
    }

    /// Vertices of `within` reachable from `start` without leaving `within`.
    fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adjacency[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.min() {
            let comp = self.reach_within(v, left);
            left = VertexSet(left.bits() & !comp.bits());
            out.push(comp);
        }
        out
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let offset = self.order();
        let n = offset + other.order();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = self.adjacency.clone();
        rows.extend(other.adjacency.iter().map(|&r| r << offset));
        Ok(Graph {
            adjacency: rows,
            edge_count: self.edge_count + other.edge_count,
        })
    }

    /// Removes the listed edges; every pair must currently be an edge.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = self.adjacency.clone();
        for &(u, v) in edges {
            self.check_pair(u, v)?;
            if rows[u] >> v & 1 == 0 {
                return Err(GraphError::NotAnEdge(u, v));
            }
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
        }
        let mut graph = Graph {
            adjacency: rows,
            edge_count: 0,
        };
        graph.recount();
        Ok(graph)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let image: VertexSet = perm.iter().copied().filter(|&v| v < n).collect();
        if perm.len() != n || image != self.vertices() {
            return Err(GraphError::InvalidPermutation { n });
        }
        let mut rows = alloc::vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph {
            adjacency: rows,
            edge_count: self.edge_count,
        })
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let members: Vec<usize> = s.iter().collect();
        let rows = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(v, u))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_adjacency(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

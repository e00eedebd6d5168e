//! Strong alliance polynomials of simple graphs.
//!
//! A set `S` of vertices is a strong defensive alliance when every member
//! has at least as many neighbours inside `S` as outside it. The strong
//! alliance polynomial `a(G;x) = Σ a_k x^k` counts, in `a_k`, the strong
//! alliances of cardinality `k` whose induced subgraph is connected.
//!
//! This crate is `no_std` (it needs `alloc`) and holds the algorithmic core:
//!
//! * [`graph`]: bitmask graphs on up to 64 vertices.
//! * [`alliance`]: the defensive k-alliance predicate and the alliance number.
//! * [`polynomial`]: exact polynomials with big-integer coefficients.
//! * [`enumerate`]: a full-subset oracle and a connected-subset enumerator.
//! * [`families`]: closed forms for paths, cycles, complete and bipartite
//!   graphs, stars, double stars, and complete graphs minus a matching.
//! * [`analysis`]: unimodality, log-concavity and coefficient checks.
//!
//! ```
//! use strong_alliance::{enumerate::compute_polynomial, graph::Graph};
//!
//! let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! let p = compute_polynomial(&c4).unwrap();
//! assert_eq!(p.to_string(), "x^4 + 4x^3 + 4x^2");
//! ```

#![no_std]

extern crate alloc;

pub mod alliance;
pub mod analysis;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod polynomial;

pub use alliance::{DefenseLevel, is_defensive_alliance, is_strong_alliance_connected, strong_alliance_number};
pub use analysis::{AllianceReport, SequenceVerdict, TheoremChecks, build_report, sequence_verdict};
pub use enumerate::{compute_polynomial, compute_polynomial_oracle, count_connected_subsets};
pub use families::{FamilySpec, family_graph, family_polynomial};
pub use graph::{Graph, GraphError, VertexSet};
pub use polynomial::AlliancePolynomial;

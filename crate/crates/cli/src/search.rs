//! Search for graphs whose polynomial is not unimodal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use strong_alliance::analysis::sequence_verdict;
use strong_alliance::enumerate::compute_polynomial;
use strong_alliance::families::FamilySpec;
use strong_alliance::{family_graph, Graph};

use crate::corpus;
use crate::json::PolynomialJson;

/// Largest order the search accepts.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusKind {
    #[default]
    Random,
    PathsCycles,
}

impl std::str::FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random" => Ok(CorpusKind::Random),
            "paths-cycles" => Ok(CorpusKind::PathsCycles),
            _ => Err(format!("unknown corpus `{s}` (expected random or paths-cycles)")),
        }
    }
}

/// Graphs of order `min_n..=max_n`: `count` seeded random graphs per order,
/// or every path and cycle.
pub fn build_corpus(kind: CorpusKind, min_n: usize, max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    match kind {
        CorpusKind::Random => corpus::random_corpus(seed, min_n.max(1)..=max_n, count),
        CorpusKind::PathsCycles => (min_n.max(1)..=max_n)
            .flat_map(|n| {
                let mut specs = Vec::new();
                if n >= 2 {
                    specs.push(FamilySpec::Path { n });
                }
                if n >= 3 {
                    specs.push(FamilySpec::Cycle { n });
                }
                specs
            })
            .map(|spec| family_graph(spec).expect("valid spec"))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub graph6: String,
    pub polynomial: PolynomialJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub examined: usize,
    pub findings: Vec<Finding>,
}

/// Examines `graphs` in order and reports the non-unimodal ones, in the
/// same order. Graphs above [`MAX_ORDER`] must be filtered out by the caller.
pub fn search(graphs: &[Graph]) -> SearchResult {
    let findings = graphs
        .par_iter()
        .filter_map(|g| {
            let p = compute_polynomial(g).expect("search graphs are small");
            let verdict = sequence_verdict(&p).expect("nonzero");
            (!verdict.unimodal).then(|| Finding {
                n: g.order(),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
                graph6: crate::graph6::encode(g).expect("small graph"),
                polynomial: (&p).into(),
            })
        })
        .collect();
    SearchResult {
        examined: graphs.len(),
        findings,
    }
}

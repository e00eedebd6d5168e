//! Closed-form and coefficient sweeps checked against enumeration.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use strong_alliance::analysis::TheoremChecks;
use strong_alliance::enumerate::{compute_polynomial_oracle, EnumerationError, ORACLE_MAX_VERTICES};
use strong_alliance::families::{double_star_printed_form, family_polynomial, FamilySpec};
use strong_alliance::polynomial::SignedPolynomial;
use strong_alliance::{family_graph, AlliancePolynomial, Graph};

use crate::corpus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sweep {
    /// Every closed form against enumeration of the family graph.
    Families,
    /// Complete bipartite graphs.
    Knm,
    DoubleStar,
    /// `K_n` minus a matching against `K_n`.
    KnMinusEdges,
    /// Coefficient theorems on small graphs.
    Theorem26,
}

impl Sweep {
    pub const ALL: [Sweep; 5] = [
        Sweep::Families,
        Sweep::Knm,
        Sweep::DoubleStar,
        Sweep::KnMinusEdges,
        Sweep::Theorem26,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sweep::Families => "families",
            Sweep::Knm => "knm",
            Sweep::DoubleStar => "double_star",
            Sweep::KnMinusEdges => "kn_minus_edges",
            Sweep::Theorem26 => "theorem26",
        }
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Sweep::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| format!("unknown sweep `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest vertex count of a swept instance.
    pub max_n: usize,
    /// Use the literal double-star exponent instead of the corrected one.
    pub printed_form: bool,
    /// Seed and per-order size of the random part of `theorem26`.
    pub seed: u64,
    pub count: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            printed_form: false,
            seed: 0,
            count: 50,
        }
    }
}

/// One swept instance. `expected` is what the formula or theorem predicts,
/// `actual` what enumeration found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub sweep: Sweep,
    pub printed_form: bool,
    pub passed: usize,
    pub failed: usize,
    pub instances: Vec<Outcome>,
}

impl Summary {
    pub fn first_failure(&self) -> Option<&Outcome> {
        self.instances.iter().find(|o| !o.pass)
    }
}

/// Runs `sweep`; instances come back sorted by their parameters.
pub fn run(sweep: Sweep, cfg: &SweepConfig) -> Result<Summary, EnumerationError> {
    if cfg.max_n > ORACLE_MAX_VERTICES {
        return Err(EnumerationError::TooLarge {
            n: cfg.max_n,
            max: ORACLE_MAX_VERTICES,
            engine: strong_alliance::enumerate::Engine::Oracle,
        });
    }
    let instances: Vec<Outcome> = match sweep {
        Sweep::Families => family_sweep(family_instances(cfg.max_n), false),
        Sweep::Knm => family_sweep(
            family_instances(cfg.max_n)
                .into_iter()
                .filter(|s| matches!(s, FamilySpec::CompleteBipartite { .. }))
                .collect(),
            false,
        ),
        Sweep::DoubleStar => family_sweep(
            family_instances(cfg.max_n)
                .into_iter()
                .filter(|s| matches!(s, FamilySpec::DoubleStar { .. }))
                .collect(),
            cfg.printed_form,
        ),
        Sweep::KnMinusEdges => kn_minus_edges(cfg.max_n),
        Sweep::Theorem26 => coefficient_sweep(cfg),
    };
    let passed = instances.iter().filter(|o| o.pass).count();
    Ok(Summary {
        sweep,
        printed_form: cfg.printed_form && sweep == Sweep::DoubleStar,
        failed: instances.len() - passed,
        passed,
        instances,
    })
}

/// Path, cycle, complete, complete bipartite, star, double star and empty
/// instances on at most `max_n` vertices, sorted.
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
        out.extend((1..=max_n - n).map(|m| FamilySpec::CompleteBipartite { n, m }));
        if n >= 3 {
            out.extend((3..=max_n.saturating_sub(n)).map(|t| FamilySpec::DoubleStar { r: n, t }));
        }
    }
    out.sort();
    out
}

fn oracle(g: &Graph) -> AlliancePolynomial {
    compute_polynomial_oracle(g).expect("sweeps stay within the oracle cap")
}

fn family_sweep(specs: Vec<FamilySpec>, printed_form: bool) -> Vec<Outcome> {
    specs
        .into_par_iter()
        .map(|spec| {
            let formula = match spec {
                FamilySpec::DoubleStar { r, t } if printed_form => {
                    double_star_printed_form(r, t).expect("valid double star")
                }
                _ => SignedPolynomial::from(&family_polynomial(spec).expect("closed form exists")),
            };
            let enumerated = SignedPolynomial::from(&oracle(&family_graph(spec).expect("valid spec")));
            Outcome {
                instance: spec.to_string(),
                pass: formula == enumerated,
                expected: formula.to_string(),
                actual: enumerated.to_string(),
            }
        })
        .collect()
}

fn kn_minus_edges(max_n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for n in 3..=max_n {
        let rs: Vec<usize> = if n % 2 == 0 { (0..=n / 2).collect() } else { vec![1] };
        cases.extend(rs.into_iter().map(|r| (n, r)));
    }
    cases
        .into_par_iter()
        .map(|(n, r)| {
            let kn = family_polynomial(FamilySpec::Complete { n }).expect("complete graph");
            let spec = FamilySpec::CompleteMinusMatching { n, r };
            let p = oracle(&family_graph(spec).expect("valid spec"));
            let (expected, pass) = if n % 2 == 0 && r < n / 2 {
                (format!("= {kn}"), p == kn)
            } else if n % 2 == 0 {
                let low = p.min_support().expect("nonzero");
                (format!("!= {kn}, lowest power {}", n / 2), p != kn && low == n / 2)
            } else {
                (format!("!= {kn}"), p != kn)
            };
            Outcome {
                instance: spec.to_string(),
                expected,
                actual: p.to_string(),
                pass,
            }
        })
        .collect()
}

/// Exhaustive up to 5 vertices, then `count` seeded random graphs per order
/// up to `min(max_n, 8)`.
fn coefficient_sweep(cfg: &SweepConfig) -> Vec<Outcome> {
    let top = cfg.max_n.min(8);
    let mut graphs: Vec<Graph> = (1..=top.min(5)).flat_map(corpus::all_graphs).collect();
    graphs.extend(corpus::random_corpus(cfg.seed, 6..=top, cfg.count));
    graphs
        .into_par_iter()
        .map(|g| {
            let p = oracle(&g);
            let failing: Vec<&str> = TheoremChecks::evaluate(&g, &p)
                .entries()
                .into_iter()
                .filter(|&(_, ok)| !ok)
                .map(|(name, _)| name)
                .collect();
            Outcome {
                instance: crate::graph6::encode(&g).expect("small graph"),
                expected: "all checks hold".into(),
                actual: if failing.is_empty() {
                    format!("all checks hold for {p}")
                } else {
                    format!("{} fail for {p}", failing.join(", "))
                },
                pass: failing.is_empty(),
            }
        })
        .collect()
}

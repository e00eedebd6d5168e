//! Coefficient-sequence diagnostics and graph-vs-polynomial consistency checks.
//!
//! Sequences are examined over the window `[min_support, degree]`. Zeros
//! inside the window count as values, so a window with an interior zero is
//! never log-concave (the condition is the strict `a_i² > a_{i-1}·a_{i+1}`).

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumerate::{compute_polynomial_with, EnumerationError, ORACLE_MAX_VERTICES};
use crate::graph::{Graph, VertexSet};
use crate::polynomial::{AlliancePolynomial, PolynomialError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceVerdict {
    pub unimodal: bool,
    /// Cardinality of the first maximum, present iff `unimodal`.
    pub mode_index: Option<usize>,
    pub mode_unique: bool,
    pub log_concave: bool,
}

/// Classifies the coefficient window of a nonzero polynomial.
pub fn sequence_verdict(p: &AlliancePolynomial) -> Result<SequenceVerdict, PolynomialError> {
    let start = p.min_support()?;
    let window = &p.coeffs()[start..];
    Ok(window_verdict(window, start))
}

fn window_verdict(window: &[BigUint], offset: usize) -> SequenceVerdict {
    let mut peak = 0;
    while peak + 1 < window.len() && window[peak] <= window[peak + 1] {
        peak += 1;
    }
    let mut end = peak;
    while end + 1 < window.len() && window[end] >= window[end + 1] {
        end += 1;
    }
    let unimodal = end + 1 == window.len();

    let max = window.iter().max().expect("nonempty window");
    let first_max = window.iter().position(|c| c == max).expect("max is present");
    let mode_unique = unimodal && window.iter().filter(|&c| c == max).count() == 1;

    let log_concave = window
        .windows(3)
        .all(|w| &w[1] * &w[1] > &w[0] * &w[2]);

    SequenceVerdict {
        unimodal,
        mode_index: unimodal.then_some(offset + first_max),
        mode_unique,
        log_concave,
    }
}

/// Agreement between polynomial-side and graph-side readings of the
/// coefficient theorems. Every field is `true` when the two sides agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TheoremChecks {
    /// `a_2 ≤ m`.
    pub a2_le_m: bool,
    /// `a_2 = m` exactly when every degree is at most 2.
    pub a2_eq_m_iff_maxdeg_le_2: bool,
    /// `a_n = 1` exactly when the graph is connected.
    pub an_eq_1_iff_connected: bool,
    /// `a_2 = 1` exactly when a single edge has both endpoint degrees ≤ 2.
    pub a2_eq_1_iff_unique_light_edge: bool,
    /// For every `k`: `a_k = 0` exactly when every connected `k`-subset has
    /// a member with `δ_S(v) ≤ ⌊(δ(v)−1)/2⌋`. Evaluated by a full subset
    /// sweep, so only present for graphs within the oracle cap.
    pub ak_zero_iff_weak_member: Option<bool>,
}

impl TheoremChecks {
    pub const NAMES: [&'static str; 5] = [
        "a2_le_m",
        "a2_eq_m_iff_maxdeg_le_2",
        "an_eq_1_iff_connected",
        "a2_eq_1_iff_unique_light_edge",
        "ak_zero_iff_weak_member",
    ];

    /// `(name, value)` pairs for the checks that were evaluated.
    pub fn entries(&self) -> Vec<(&'static str, bool)> {
        let mut out = alloc::vec![
            (Self::NAMES[0], self.a2_le_m),
            (Self::NAMES[1], self.a2_eq_m_iff_maxdeg_le_2),
            (Self::NAMES[2], self.an_eq_1_iff_connected),
            (Self::NAMES[3], self.a2_eq_1_iff_unique_light_edge),
        ];
        if let Some(v) = self.ak_zero_iff_weak_member {
            out.push((Self::NAMES[4], v));
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.entries().iter().all(|&(_, v)| v)
    }

    /// Evaluates every check for `g` against its polynomial `p`.
    pub fn evaluate(g: &Graph, p: &AlliancePolynomial) -> TheoremChecks {
        let m = BigUint::from(g.size());
        let a2 = p.coeff(2);
        let light_edges = light_edges(g).len();
        TheoremChecks {
            a2_le_m: a2 <= m,
            a2_eq_m_iff_maxdeg_le_2: (a2 == m) == (g.max_degree() <= 2),
            an_eq_1_iff_connected: p.coeff(g.order()).is_one() == g.is_connected(),
            a2_eq_1_iff_unique_light_edge: a2.is_one() == (light_edges == 1),
            ak_zero_iff_weak_member: (g.order() <= ORACLE_MAX_VERTICES).then(|| {
                let every_set_weak = sizes_with_only_weak_sets(g);
                (1..=g.order()).all(|k| p.coeff(k).is_zero() == every_set_weak[k])
            }),
        }
    }
}

/// Edges whose endpoints both have degree at most 2.
pub fn light_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| g.degree(u) <= 2 && g.degree(v) <= 2)
        .collect()
}

/// `δ_S(v) ≤ ⌊(δ(v) − 1)/2⌋`.
pub fn is_weak_member(g: &Graph, v: usize, s: VertexSet) -> bool {
    let inside = (g.adjacency()[v] & s.bits()).count_ones() as i64;
    inside <= (g.degree(v) as i64 - 1).div_euclid(2)
}

/// Entry `k` is true when every connected `k`-subset contains a weak member.
/// Plain sweep over all subsets; `g` must be within the oracle cap.
pub fn sizes_with_only_weak_sets(g: &Graph) -> Vec<bool> {
    let n = g.order();
    assert!(n <= ORACLE_MAX_VERTICES);
    let mut all_weak = alloc::vec![true; n + 1];
    for bits in 1..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        let k = s.len();
        if !all_weak[k] || !g.is_connected_subset(s).expect("valid subset") {
            continue;
        }
        if !s.iter().any(|v| is_weak_member(g, v, s)) {
            all_weak[k] = false;
        }
    }
    all_weak
}

/// Whether `p = c·x` correctly forces `g` to be the edgeless graph on `c`
/// vertices. Polynomials of any other shape make no claim and pass.
pub fn check_empty_characterization(p: &AlliancePolynomial, g: &Graph) -> bool {
    if p.degree() != Some(1) || !p.coeff(0).is_zero() {
        return true;
    }
    p.coeff(1) == BigUint::from(g.order()) && g.size() == 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllianceReport {
    pub polynomial: AlliancePolynomial,
    pub alliance_number: usize,
    pub total_alliances: BigUint,
    pub verdict: SequenceVerdict,
    pub checks: TheoremChecks,
}

impl AllianceReport {
    /// Derives the report from an already computed polynomial of `g`.
    pub fn from_polynomial(g: &Graph, polynomial: AlliancePolynomial) -> AllianceReport {
        let alliance_number = polynomial
            .min_support()
            .expect("graph polynomials are never zero");
        let verdict = sequence_verdict(&polynomial).expect("nonzero");
        AllianceReport {
            alliance_number,
            total_alliances: polynomial.evaluate_at_one(),
            verdict,
            checks: TheoremChecks::evaluate(g, &polynomial),
            polynomial,
        }
    }
}

/// Computes the polynomial of `g` with the connected engine and analyses it.
pub fn build_report(g: &Graph) -> Result<AllianceReport, EnumerationError> {
    let polynomial = crate::enumerate::compute_polynomial(g)?;
    Ok(AllianceReport::from_polynomial(g, polynomial))
}

/// As [`build_report`] without the default size limit.
pub fn build_report_with(
    g: &Graph,
    interrupt: impl FnMut(u64) -> bool,
) -> Result<AllianceReport, EnumerationError> {
    let (polynomial, _) = compute_polynomial_with(g, interrupt)?;
    Ok(AllianceReport::from_polynomial(g, polynomial))
}

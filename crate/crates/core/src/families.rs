//! Named graph families: graph constructors and closed-form polynomials.
//!
//! The constructors and the formulas are deliberately separate code paths
//! so that one can be checked against enumeration of the other.
//!
//! Binomial terms `C(z, y)` with a non-integer `y` are zero; this lets the
//! even and odd cases of the star, bipartite and double-star formulas share
//! one expression.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::{Graph, GraphError};
use crate::polynomial::{AlliancePolynomial, SignedPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `E_n`, no edges.
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{n,m}`.
    CompleteBipartite { n: usize, m: usize },
    /// `S_n = K_{n-1,1}`, `n` vertices in total.
    Star { n: usize },
    /// `S_{r,t}`: stars on `r` and `t` vertices with their centers joined.
    DoubleStar { r: usize, t: usize },
    /// `K_n` with `r` pairwise disjoint edges removed.
    CompleteMinusMatching { n: usize, r: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("parameters out of range for {0}")]
    OutOfRange(String),
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("cannot parse family spec `{0}`")]
    Syntax(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FamilySpec {
    pub const KINDS: [&'static str; 8] = [
        "empty",
        "path",
        "cycle",
        "complete",
        "complete_bipartite",
        "star",
        "double_star",
        "complete_minus_matching",
    ];

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Star { .. } => "star",
            FamilySpec::DoubleStar { .. } => "double_star",
            FamilySpec::CompleteMinusMatching { .. } => "complete_minus_matching",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Empty { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::CompleteMinusMatching { n, .. } => n,
            FamilySpec::CompleteBipartite { n, m } => n + m,
            FamilySpec::DoubleStar { r, t } => r + t,
        }
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::Empty { n } | FamilySpec::Complete { n } => n >= 1,
            FamilySpec::Path { n } | FamilySpec::Star { n } => n >= 2,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::CompleteBipartite { n, m } => n >= 1 && m >= 1,
            FamilySpec::DoubleStar { r, t } => r >= 3 && t >= 3,
            FamilySpec::CompleteMinusMatching { n, r } => n >= 3 && r <= n / 2,
        };
        if !ok {
            return Err(FamilyError::OutOfRange(alloc::format!("{self}")));
        }
        if self.vertex_count() > crate::graph::MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.vertex_count()).into());
        }
        Ok(())
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Empty { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n } => alloc::vec![n],
            FamilySpec::CompleteBipartite { n, m } => alloc::vec![n, m],
            FamilySpec::DoubleStar { r, t } => alloc::vec![r, t],
            FamilySpec::CompleteMinusMatching { n, r } => alloc::vec![n, r],
        }
    }
}

/// `kind:p1[,p2]`, e.g. `path:4` or `complete_bipartite:3,5`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind())?;
        for (i, p) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let syntax = || FamilyError::Syntax(s.into());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(syntax)?;
        let params = rest
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| syntax())?;
        let spec = match (kind.trim(), params.as_slice()) {
            ("empty", &[n]) => FamilySpec::Empty { n },
            ("path", &[n]) => FamilySpec::Path { n },
            ("cycle", &[n]) => FamilySpec::Cycle { n },
            ("complete", &[n]) => FamilySpec::Complete { n },
            ("complete_bipartite", &[n, m]) => FamilySpec::CompleteBipartite { n, m },
            ("star", &[n]) => FamilySpec::Star { n },
            ("double_star", &[r, t]) => FamilySpec::DoubleStar { r, t },
            ("complete_minus_matching", &[n, r]) => FamilySpec::CompleteMinusMatching { n, r },
            _ => return Err(syntax()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the graph described by `spec`.
///
/// Labelling: stars put the center at 0; `K_{n,m}` uses `0..n` and
/// `n..n+m`; `S_{r,t}` has centers 0 and `r`; the removed matching of
/// `complete_minus_matching` is `{0,1}, {2,3}, …`.
pub fn family_graph(spec: FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n = spec.vertex_count();
    match spec {
        FamilySpec::Empty { .. } => {}
        FamilySpec::Path { n } => edges.extend((1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { n } => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete { .. } => return Ok(Graph::complete(n)?),
        FamilySpec::CompleteBipartite { n, m } => {
            edges.extend((0..n).flat_map(|u| (n..n + m).map(move |v| (u, v))));
        }
        FamilySpec::Star { n } => edges.extend((1..n).map(|leaf| (0, leaf))),
        FamilySpec::DoubleStar { r, t } => {
            edges.extend((1..r).map(|leaf| (0, leaf)));
            edges.extend((r + 1..r + t).map(|leaf| (r, leaf)));
            edges.push((0, r));
        }
        FamilySpec::CompleteMinusMatching { n, r } => {
            let matching: Vec<_> = (0..r).map(|i| (2 * i, 2 * i + 1)).collect();
            return Ok(Graph::complete(n)?.delete_edges(&matching)?);
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `C(top, y)·x^e` with `y = y2/2` and `e = e2/2`; zero when `y` is not an
/// integer (or negative).
fn half_term(top: usize, y2: isize, e2: isize) -> AlliancePolynomial {
    if y2 < 0 || y2 % 2 != 0 {
        return AlliancePolynomial::zero();
    }
    assert!(e2 >= 0 && e2 % 2 == 0, "integral binomial with fractional exponent");
    AlliancePolynomial::monomial(binomial(top, (y2 / 2) as usize), (e2 / 2) as usize)
}

fn path_poly(n: usize) -> AlliancePolynomial {
    AlliancePolynomial::from_coeffs((0..=n).map(|i| BigUint::from(if i >= 2 { n + 1 - i } else { 0 })).collect())
}

fn cycle_poly(n: usize) -> AlliancePolynomial {
    let coeffs = (0..=n)
        .map(|i| match i {
            _ if i == n => BigUint::one(),
            2.. => BigUint::from(n),
            _ => BigUint::default(),
        })
        .collect();
    AlliancePolynomial::from_coeffs(coeffs)
}

/// `Σ_{k ≥ ⌈(n+1)/2⌉} C(n,k) x^k`; the zero polynomial for `n = 0`.
fn complete_poly(n: usize) -> AlliancePolynomial {
    if n == 0 {
        return AlliancePolynomial::zero();
    }
    let low = (n + 2) / 2;
    AlliancePolynomial::from_coeffs(
        (0..=n)
            .map(|k| if k >= low { binomial(n, k) } else { BigUint::default() })
            .collect(),
    )
}

/// `a(K_n;x) + C(n, n/2) x^{n/2}`, i.e. the subsets of an `n`-vertex side
/// with at least half of it present.
fn half_side(n: usize) -> AlliancePolynomial {
    &complete_poly(n) + &half_term(n, n as isize, n as isize)
}

fn complete_bipartite_poly(n: usize, m: usize) -> AlliancePolynomial {
    &half_side(n) * &half_side(m)
}

fn star_poly(n: usize) -> AlliancePolynomial {
    // x·a(K_{n-1};x) + C(n-1, (n-1)/2) x^{(n+1)/2}
    let lead = complete_poly(n - 1).shift(1);
    &lead + &half_term(n - 1, n as isize - 1, n as isize + 1)
}

/// Case 3 factor of the double star: both centers present, `C(r-1, r/2-1) x^{r/2} + a(S_r;x)`.
fn double_star_factor(r: usize) -> AlliancePolynomial {
    &half_term(r - 1, r as isize - 2, r as isize) + &star_poly(r)
}

/// The double-star closed form with the subtracted star terms at exponent
/// `(r+1)/2` (and `(t+1)/2`), which matches exhaustive enumeration.
fn double_star_poly(r: usize, t: usize) -> AlliancePolynomial {
    double_star_signed(r, t, 1)
        .to_unsigned()
        .expect("corrected double-star form has non-negative coefficients")
}

/// The literal form that subtracts `C(r-1,(r-1)/2) x^{(r-1)/2}`. It has
/// negative coefficients whenever `r` or `t` is odd.
pub fn double_star_printed_form(r: usize, t: usize) -> Result<SignedPolynomial, FamilyError> {
    FamilySpec::DoubleStar { r, t }.validate()?;
    Ok(double_star_signed(r, t, -1))
}

/// `a(S_r) + a(S_t) − C(r−1,(r−1)/2)x^{(r+s)/2} − C(t−1,(t−1)/2)x^{(t+s)/2} + F_r·F_t`
/// with `s = exponent_shift`.
fn double_star_signed(r: usize, t: usize, exponent_shift: isize) -> SignedPolynomial {
    let one_center = |q: usize| {
        let star = SignedPolynomial::from(&star_poly(q));
        let q = q as isize;
        let dropped = SignedPolynomial::from(&half_term(q as usize - 1, q - 1, q + exponent_shift));
        star.sub(&dropped)
    };
    let both = SignedPolynomial::from(&(&double_star_factor(r) * &double_star_factor(t)));
    &(&one_center(r) + &one_center(t)) + &both
}

/// Closed-form polynomial for `spec`.
///
/// `complete_minus_matching` only has a closed form for even `n` and
/// `r ≤ n/2 − 1`, where it equals `a(K_n;x)`.
pub fn family_polynomial(spec: FamilySpec) -> Result<AlliancePolynomial, FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Empty { n } => AlliancePolynomial::monomial(BigUint::from(n), 1),
        FamilySpec::Path { n } => path_poly(n),
        FamilySpec::Cycle { n } => cycle_poly(n),
        FamilySpec::Complete { n } => complete_poly(n),
        FamilySpec::CompleteBipartite { n, m } => complete_bipartite_poly(n, m),
        FamilySpec::Star { n } => star_poly(n),
        FamilySpec::DoubleStar { r, t } => double_star_poly(r, t),
        FamilySpec::CompleteMinusMatching { n, r } => {
            if n % 2 == 1 || r >= n / 2 {
                return Err(FamilyError::NoClosedForm(alloc::format!("{spec}")));
            }
            complete_poly(n)
        }
    })
}

/// Like [`family_polynomial`] but evaluating the double star with the
/// literal subtracted exponent. Other families are unchanged.
pub fn family_polynomial_signed(
    spec: FamilySpec,
    printed_form: bool,
) -> Result<SignedPolynomial, FamilyError> {
    match spec {
        FamilySpec::DoubleStar { r, t } if printed_form => double_star_printed_form(r, t),
        _ => Ok(SignedPolynomial::from(&family_polynomial(spec)?)),
    }
}

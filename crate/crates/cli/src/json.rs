//! JSON encodings of polynomials and reports.
//!
//! Coefficients are decimal strings so that arbitrarily large values survive
//! any JSON reader:
//!
//! ```json
//! {"degree": 4, "coeffs": {"2": "4", "3": "4", "4": "1"}}
//! ```

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use strong_alliance::analysis::{sequence_verdict, SequenceVerdict, TheoremChecks};
use strong_alliance::polynomial::SignedPolynomial;
use strong_alliance::{AlliancePolynomial, AllianceReport};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
    #[error("bad coefficient entry {key:?}: {value:?}")]
    Coefficient { key: String, value: String },
    #[error("declared degree {declared:?} but coefficients give {actual:?}")]
    Degree {
        declared: Option<usize>,
        actual: Option<usize>,
    },
    #[error("field `{0}` is inconsistent with the polynomial")]
    Inconsistent(&'static str),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("missing check `{0}`")]
    MissingCheck(&'static str),
}

/// Wire form of a polynomial. Signed coefficients are accepted so that the
/// same shape carries the literal double-star formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: Option<usize>,
    #[serde(with = "ordered_coeffs")]
    pub coeffs: BTreeMap<usize, String>,
}

mod ordered_coeffs {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::ser::SerializeMap;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<usize, String>, s: S) -> Result<S::Ok, S::Error> {
        let mut out = s.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            out.serialize_entry(&k.to_string(), v)?;
        }
        out.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, String>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let k = k.parse().map_err(|_| D::Error::custom(format!("bad power {k:?}")))?;
                Ok((k, v))
            })
            .collect()
    }
}

impl PolynomialJson {
    pub fn from_signed(p: &SignedPolynomial) -> Self {
        PolynomialJson {
            degree: p.coeffs().len().checked_sub(1),
            coeffs: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
                .map(|(k, c)| (k, c.to_string()))
                .collect(),
        }
    }

    pub fn to_signed(&self) -> Result<SignedPolynomial, JsonError> {
        let len = self.coeffs.keys().next_back().map_or(0, |k| k + 1);
        let mut coeffs = vec![BigInt::default(); len];
        for (&k, v) in &self.coeffs {
            let bad = || JsonError::Coefficient {
                key: k.to_string(),
                value: v.clone(),
            };
            let c: BigInt = v.parse().map_err(|_| bad())?;
            if c == BigInt::default() {
                return Err(bad());
            }
            coeffs[k] = c;
        }
        let p = SignedPolynomial::from_coeffs(coeffs);
        let actual = p.coeffs().len().checked_sub(1);
        if actual != self.degree {
            return Err(JsonError::Degree {
                declared: self.degree,
                actual,
            });
        }
        Ok(p)
    }

    pub fn to_polynomial(&self) -> Result<AlliancePolynomial, JsonError> {
        self.to_signed()?.to_unsigned().ok_or_else(|| {
            let (key, value) = self
                .coeffs
                .iter()
                .find(|(_, v)| v.starts_with('-'))
                .map(|(k, v)| (k.to_string(), v.clone()))
                .unwrap_or_default();
            JsonError::Coefficient { key, value }
        })
    }
}

impl From<&AlliancePolynomial> for PolynomialJson {
    fn from(p: &AlliancePolynomial) -> Self {
        PolynomialJson::from_signed(&SignedPolynomial::from(p))
    }
}

/// Wire form of an [`AllianceReport`]. `mode_unique` is not stored; it is
/// recomputed from the polynomial on the way back in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub polynomial: PolynomialJson,
    pub alliance_number: usize,
    pub count: String,
    pub unimodal: bool,
    pub log_concave: bool,
    pub mode: Option<usize>,
    pub checks: BTreeMap<String, bool>,
}

impl From<&AllianceReport> for ReportJson {
    fn from(r: &AllianceReport) -> Self {
        ReportJson {
            polynomial: (&r.polynomial).into(),
            alliance_number: r.alliance_number,
            count: r.total_alliances.to_string(),
            unimodal: r.verdict.unimodal,
            log_concave: r.verdict.log_concave,
            mode: r.verdict.mode_index,
            checks: r
                .checks
                .entries()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }
}

impl ReportJson {
    /// Rebuilds the report, rejecting fields that contradict the polynomial.
    pub fn to_report(&self) -> Result<AllianceReport, JsonError> {
        let polynomial = self.polynomial.to_polynomial()?;
        let verdict: SequenceVerdict =
            sequence_verdict(&polynomial).map_err(|_| JsonError::Inconsistent("polynomial"))?;
        if polynomial.min_support().ok() != Some(self.alliance_number) {
            return Err(JsonError::Inconsistent("alliance_number"));
        }
        let count: BigUint = self
            .count
            .parse()
            .map_err(|_| JsonError::Inconsistent("count"))?;
        if count != polynomial.evaluate_at_one() {
            return Err(JsonError::Inconsistent("count"));
        }
        if verdict.unimodal != self.unimodal {
            return Err(JsonError::Inconsistent("unimodal"));
        }
        if verdict.log_concave != self.log_concave {
            return Err(JsonError::Inconsistent("log_concave"));
        }
        if verdict.mode_index != self.mode {
            return Err(JsonError::Inconsistent("mode"));
        }
        Ok(AllianceReport {
            alliance_number: self.alliance_number,
            total_alliances: count,
            verdict,
            checks: checks_from_map(&self.checks)?,
            polynomial,
        })
    }
}

fn checks_from_map(map: &BTreeMap<String, bool>) -> Result<TheoremChecks, JsonError> {
    if let Some(unknown) = map.keys().find(|k| !TheoremChecks::NAMES.contains(&k.as_str())) {
        return Err(JsonError::UnknownCheck(unknown.clone()));
    }
    let get = |i: usize| {
        let name = TheoremChecks::NAMES[i];
        map.get(name).copied().ok_or(JsonError::MissingCheck(name))
    };
    Ok(TheoremChecks {
        a2_le_m: get(0)?,
        a2_eq_m_iff_maxdeg_le_2: get(1)?,
        an_eq_1_iff_connected: get(2)?,
        a2_eq_1_iff_unique_light_edge: get(3)?,
        ak_zero_iff_weak_member: map.get(TheoremChecks::NAMES[4]).copied(),
    })
}

pub fn report_to_string(r: &AllianceReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serializes")
}

pub fn report_from_str(s: &str) -> Result<AllianceReport, JsonError> {
    serde_json::from_str::<ReportJson>(s)?.to_report()
}

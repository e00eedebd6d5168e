//! Dense polynomials with arbitrary-precision non-negative coefficients.
//!
//! Coefficient `k` of a graph's alliance polynomial counts the connected
//! strong alliances of cardinality `k`. The type itself is a general
//! semiring value (the constant `1` is representable) so that closed forms
//! can be assembled from sums and products.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolynomialError {
    #[error("the zero polynomial has no support")]
    ZeroPolynomial,
    #[error("malformed term `{0}`")]
    MalformedTerm(String),
    #[error("negative coefficient in `{0}`")]
    NegativeCoefficient(String),
    #[error("empty polynomial text")]
    Empty,
}

/// `a_0 + a_1 x + … + a_d x^d` with no trailing zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlliancePolynomial {
    coeffs: Vec<BigUint>,
}

impl AlliancePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigUint::one(), 0)
    }

    /// `c·x^k`.
    pub fn monomial(c: BigUint, k: usize) -> Self {
        let mut coeffs = alloc::vec![BigUint::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from `a_0, a_1, …`; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlliancePolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `(k, a_k)` for every nonzero coefficient, ascending in `k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `p(1)`, the sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest `k` with `a_k > 0`; for a graph polynomial this is the
    /// multiplicity of the root at zero.
    pub fn min_support(&self) -> Result<usize, PolynomialError> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        AlliancePolynomial { coeffs }
    }
}

impl Add for &AlliancePolynomial {
    type Output = AlliancePolynomial;

    fn add(self, rhs: &AlliancePolynomial) -> AlliancePolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        AlliancePolynomial { coeffs }
    }
}

impl Add for AlliancePolynomial {
    type Output = AlliancePolynomial;

    fn add(self, rhs: AlliancePolynomial) -> AlliancePolynomial {
        &self + &rhs
    }
}

impl Mul for &AlliancePolynomial {
    type Output = AlliancePolynomial;

    fn mul(self, rhs: &AlliancePolynomial) -> AlliancePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return AlliancePolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        AlliancePolynomial::from_coeffs(coeffs)
    }
}

impl Mul for AlliancePolynomial {
    type Output = AlliancePolynomial;

    fn mul(self, rhs: AlliancePolynomial) -> AlliancePolynomial {
        &self * &rhs
    }
}

impl core::iter::Sum for AlliancePolynomial {
    fn sum<I: Iterator<Item = AlliancePolynomial>>(iter: I) -> Self {
        iter.fold(AlliancePolynomial::zero(), |acc, p| &acc + &p)
    }
}

fn write_term<C: fmt::Display + PartialEq + One>(
    f: &mut impl fmt::Write,
    c: &C,
    k: usize,
) -> fmt::Result {
    let unit = c.is_one();
    match k {
        0 => write!(f, "{c}"),
        1 if unit => f.write_str("x"),
        1 => write!(f, "{c}x"),
        _ if unit => write!(f, "x^{k}"),
        _ => write!(f, "{c}x^{k}"),
    }
}

/// Canonical text form, descending powers: `x^4 + 4x^3 + 4x^2`.
impl fmt::Display for AlliancePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write_term(f, c, k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlliancePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlliancePolynomial({self})")
    }
}

/// Accepts the canonical form and a few variants: any term order,
/// `c*x^k`, `c x^k`, and repeated powers (summed).
impl FromStr for AlliancePolynomial {
    type Err = PolynomialError;

    fn from_str(s: &str) -> Result<Self, PolynomialError> {
        let text = s.trim();
        if text.is_empty() {
            return Err(PolynomialError::Empty);
        }
        if text.contains('-') {
            return Err(PolynomialError::NegativeCoefficient(text.into()));
        }
        let mut coeffs: Vec<BigUint> = Vec::new();
        for raw in text.split('+') {
            let (c, k) = parse_term(raw)?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigUint::zero());
            }
            coeffs[k] += c;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

fn parse_term(raw: &str) -> Result<(BigUint, usize), PolynomialError> {
    let malformed = || PolynomialError::MalformedTerm(raw.trim().into());
    let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if term.is_empty() {
        return Err(malformed());
    }
    let Some(x_at) = term.find('x') else {
        return Ok((parse_digits(&term).ok_or_else(malformed)?, 0));
    };
    let (head, tail) = term.split_at(x_at);
    let head = match head.strip_suffix('*') {
        Some("") => return Err(malformed()),
        Some(h) => h,
        None => head,
    };
    let c = if head.is_empty() {
        BigUint::one()
    } else {
        parse_digits(head).ok_or_else(malformed)?
    };
    let k = match &tail[1..] {
        "" => 1,
        power => power
            .strip_prefix('^')
            .filter(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|p| p.parse::<usize>().ok())
            .ok_or_else(malformed)?,
    };
    Ok((c, k))
}

fn parse_digits(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

/// Polynomial with signed coefficients. Only needed to evaluate closed
/// forms whose intermediate (or literal) values can go negative.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedPolynomial {
    coeffs: Vec<BigInt>,
}

impl SignedPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SignedPolynomial { coeffs }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self - rhs`.
    pub fn sub(&self, rhs: &SignedPolynomial) -> SignedPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        SignedPolynomial::from_coeffs(coeffs)
    }

    /// Converts back when every coefficient is non-negative.
    pub fn to_unsigned(&self) -> Option<AlliancePolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_biguint())
            .collect::<Option<Vec<_>>>()?;
        Some(AlliancePolynomial::from_coeffs(coeffs))
    }
}

impl From<&AlliancePolynomial> for SignedPolynomial {
    fn from(p: &AlliancePolynomial) -> Self {
        SignedPolynomial {
            coeffs: p.coeffs.iter().map(|c| BigInt::from(c.clone())).collect(),
        }
    }
}

impl Add for &SignedPolynomial {
    type Output = SignedPolynomial;

    fn add(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        SignedPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl fmt::Display for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.sign() == Sign::Minus;
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            write_term(&mut out, c.magnitude(), k)?;
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[u64]) -> AlliancePolynomial {
        AlliancePolynomial::from_u64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[0, 0, 1]) + &p(&[0, 2]), p(&[0, 2, 1]));
        // E_2 + E_3 = E_5
        assert_eq!(&p(&[0, 2]) + &p(&[0, 3]), p(&[0, 5]));
        let q = p(&[0, 1, 7]);
        assert_eq!(&q + &AlliancePolynomial::zero(), q);
    }

    #[test]
    fn mul_examples() {
        let half = p(&[0, 2, 1]);
        assert_eq!(&half * &half, p(&[0, 0, 4, 4, 1]));
        let q = p(&[0, 3, 0, 9]);
        assert_eq!(&q * &AlliancePolynomial::one(), q);
        assert!((&q * &AlliancePolynomial::zero()).is_zero());
    }

    #[test]
    fn evaluate_and_support() {
        let c4 = p(&[0, 0, 4, 4, 1]);
        assert_eq!(c4.evaluate_at_one(), BigUint::from(9u32));
        assert_eq!(p(&[0, 6]).evaluate_at_one(), BigUint::from(6u32));
        assert_eq!(p(&[0, 0, 0, 4, 1]).evaluate_at_one(), BigUint::from(5u32));

        assert_eq!(p(&[0, 0, 3, 2, 1]).min_support(), Ok(2));
        assert_eq!(p(&[0, 0, 0, 10, 5, 1]).min_support(), Ok(3));
        assert_eq!(p(&[0, 4]).min_support(), Ok(1));
        assert_eq!(
            AlliancePolynomial::zero().min_support(),
            Err(PolynomialError::ZeroPolynomial)
        );
    }

    #[test]
    fn format_examples() {
        assert_eq!(p(&[0, 0, 4, 4, 1]).to_string(), "x^4 + 4x^3 + 4x^2");
        assert_eq!(p(&[0, 3]).to_string(), "3x");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(AlliancePolynomial::one().to_string(), "1");
        assert_eq!(AlliancePolynomial::zero().to_string(), "0");
        assert_eq!(p(&[2, 0, 1]).to_string(), "x^2 + 2");
    }

    #[test]
    fn parse_examples() {
        assert_eq!("x^4 + 4x^3 + 4x^2".parse(), Ok(p(&[0, 0, 4, 4, 1])));
        assert_eq!("3x".parse(), Ok(p(&[0, 3])));
        assert_eq!("4*x^2+x".parse(), Ok(p(&[0, 1, 4])));
        assert_eq!("x + x".parse(), Ok(p(&[0, 2])));
        assert_eq!("0".parse(), Ok(AlliancePolynomial::zero()));
        let big: AlliancePolynomial = "123456789012345678901234567890x^3".parse().unwrap();
        assert_eq!(big.coeff(3).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "x^4 - 2x".parse::<AlliancePolynomial>(),
            Err(PolynomialError::NegativeCoefficient("x^4 - 2x".into()))
        );
        assert!(matches!("".parse::<AlliancePolynomial>(), Err(PolynomialError::Empty)));
        for bad in ["x^", "2y", "x^a", "3x + ", "x^2^3", "*x", "1.5x"] {
            assert!(
                matches!(bad.parse::<AlliancePolynomial>(), Err(PolynomialError::MalformedTerm(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn signed_display_and_conversion() {
        let s = SignedPolynomial::from_coeffs(
            [0i64, -4, 4, 2, 4, 4, 1].iter().map(|&c| BigInt::from(c)).collect(),
        );
        assert_eq!(s.to_string(), "x^6 + 4x^5 + 4x^4 + 2x^3 + 4x^2 - 4x");
        assert!(s.to_unsigned().is_none());
        let q = p(&[0, 0, 1, 3]);
        assert_eq!(SignedPolynomial::from(&q).to_unsigned(), Some(q.clone()));
        let neg = SignedPolynomial::from_coeffs(alloc::vec![BigInt::from(-1)]);
        assert_eq!(neg.to_string(), "-1");
        assert!(SignedPolynomial::from(&q).sub(&SignedPolynomial::from(&q)).is_zero());
    }
}

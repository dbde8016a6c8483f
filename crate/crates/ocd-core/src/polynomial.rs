//! The ocd polynomial of a graph: coefficient `i` counts the
//! outer-connected dominating sets of cardinality `i`.
//!
//! Coefficients are arbitrary-precision; near n = 60 a single count can
//! reach C(60,30) and the total 2^60, so fixed-width integers would
//! silently saturate. JSON carries coefficients as decimal strings for the
//! same reason: consumers with 53-bit number types must not corrupt counts.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolynomialError {
    #[error("polynomial needs at least one vertex")]
    NoVertices,
    #[error("expected {expected} coefficients for n={n}, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("coeff[0] must be zero: the empty set dominates nothing")]
    NonzeroEmptySetCount,
    #[error("coeff[n] must be one: the full vertex set is always an ocd-set")]
    FullSetCountNotOne,
    #[error("coefficients sum to more than 2^n subsets")]
    SumExceedsSubsetCount,
    #[error("coeff[{index}] is not a decimal integer: {text:?}")]
    InvalidCoefficient { index: usize, text: String },
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

/// Coefficient vector of the ocd polynomial, indexed by set size `0..=n`.
///
/// Valid instances always satisfy `coeff[0] = 0` and `coeff[n] = 1`: the
/// empty set never dominates a nonempty graph, and `S = V` always
/// qualifies. Immutable value type.
#[derive(Clone, PartialEq, Eq)]
pub struct OcdPolynomial {
    n: usize,
    coeff: Vec<BigUint>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    coeffs: Vec<String>,
}

impl OcdPolynomial {
    /// Builds a polynomial from per-size counts, checking the invariants.
    pub fn new(n: usize, coeff: Vec<BigUint>) -> Result<Self, PolynomialError> {
        Self::validate(n, &coeff)?;
        Ok(OcdPolynomial { n, coeff })
    }

    /// Constructor for the engines and family formulas, whose outputs are
    /// valid by construction (and cross-checked by the oracle tests).
    pub(crate) fn from_counts_unchecked(n: usize, coeff: Vec<BigUint>) -> Self {
        debug_assert!(Self::validate(n, &coeff).is_ok());
        OcdPolynomial { n, coeff }
    }

    fn validate(n: usize, coeff: &[BigUint]) -> Result<(), PolynomialError> {
        if n == 0 {
            return Err(PolynomialError::NoVertices);
        }
        if coeff.len() != n + 1 {
            return Err(PolynomialError::WrongLength {
                n,
                expected: n + 1,
                got: coeff.len(),
            });
        }
        if !coeff[0].is_zero() {
            return Err(PolynomialError::NonzeroEmptySetCount);
        }
        if !coeff[n].is_one() {
            return Err(PolynomialError::FullSetCountNotOne);
        }
        let total: BigUint = coeff.iter().sum();
        if total > BigUint::one() << n {
            return Err(PolynomialError::SumExceedsSubsetCount);
        }
        Ok(())
    }

    /// Vertex count of the source graph; the polynomial has degree `n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of ocd-sets of cardinality `i`, or `None` when `i > n`.
    pub fn coefficient(&self, i: usize) -> Option<&BigUint> {
        self.coeff.get(i)
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeff
    }

    /// Smallest `i` with a nonzero coefficient: the outer-connected
    /// domination number. Always exists because `coeff[n] = 1`.
    pub fn min_degree(&self) -> usize {
        self.coeff
            .iter()
            .position(|c| !c.is_zero())
            .expect("coeff[n] is one")
    }

    /// Exact evaluation at `x` by Horner's rule.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeff.iter().rev() {
            acc = acc * x + BigInt::from(c.clone());
        }
        acc
    }

    /// Total number of ocd-sets, i.e. the evaluation at 1.
    pub fn total_count(&self) -> BigUint {
        self.coeff.iter().sum()
    }

    /// JSON object `{"n": .., "coeffs": ["..", ..]}` with decimal-string
    /// coefficients, index = power.
    pub fn to_json(&self) -> String {
        let doc = PolynomialJson {
            n: self.n,
            coeffs: self.coeff.iter().map(BigUint::to_string).collect(),
        };
        serde_json::to_string(&doc).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PolynomialError> {
        let doc: PolynomialJson =
            serde_json::from_str(text).map_err(|e| PolynomialError::Json(e.to_string()))?;
        let mut coeff = Vec::with_capacity(doc.coeffs.len());
        for (index, text) in doc.coeffs.iter().enumerate() {
            let ok = !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit());
            let value = if ok {
                BigUint::parse_bytes(text.as_bytes(), 10)
            } else {
                None
            };
            coeff.push(value.ok_or_else(|| PolynomialError::InvalidCoefficient {
                index,
                text: text.clone(),
            })?);
        }
        Self::new(doc.n, coeff)
    }
}

impl fmt::Display for OcdPolynomial {
    /// Renders descending powers, omitting zero terms: `x^4 + 4x^3 + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for power in (0..=self.n).rev() {
            let c = &self.coeff[power];
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c.is_one(), power) {
                (_, 0) => write!(f, "{c}")?,
                (true, 1) => f.write_str("x")?,
                (false, 1) => write!(f, "{c}x")?,
                (true, _) => write!(f, "x^{power}")?,
                (false, _) => write!(f, "{c}x^{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OcdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OcdPolynomial({self})")
    }
}

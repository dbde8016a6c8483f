//! Named parametric graph families with closed-form ocd polynomials.
//!
//! Every formula here is gated by the test suite on equality with the
//! brute-force engine over all small parameters; none is trusted on its
//! own.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};
use crate::polynomial::OcdPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {requirement}")]
    ParameterOutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("{family} with {n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { family: &'static str, n: usize },
}

/// A named parametric family. `Star(m)` has `m` leaves and `m + 1` vertices
/// (center 0); `CompleteBipartite(a, b)` has contiguous parts `0..a` and
/// `a..a+b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Complete(_) => "complete",
            GraphFamily::Empty(_) => "empty",
            GraphFamily::Path(_) => "path",
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Star(_) => "star",
            GraphFamily::CompleteBipartite(_, _) => "kab",
        }
    }

    /// Total vertex count of the instance.
    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphFamily::Complete(n)
            | GraphFamily::Empty(n)
            | GraphFamily::Path(n)
            | GraphFamily::Cycle(n) => n,
            GraphFamily::Star(leaves) => leaves + 1,
            GraphFamily::CompleteBipartite(a, b) => a + b,
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let out_of_range = |requirement| FamilyError::ParameterOutOfRange {
            family: self.name(),
            requirement,
        };
        match *self {
            GraphFamily::Complete(n) | GraphFamily::Empty(n) | GraphFamily::Path(n) => {
                if n < 1 {
                    return Err(out_of_range("n >= 1"));
                }
            }
            GraphFamily::Cycle(n) => {
                if n < 3 {
                    return Err(out_of_range("n >= 3"));
                }
            }
            GraphFamily::Star(leaves) => {
                if leaves < 1 {
                    return Err(out_of_range("leaves >= 1"));
                }
            }
            GraphFamily::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(out_of_range("a >= 1 and b >= 1"));
                }
            }
        }
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(FamilyError::TooManyVertices {
                family: self.name(),
                n,
            });
        }
        Ok(())
    }

    /// Builds the canonical labeled instance: paths and cycles numbered
    /// along the walk, star center 0, bipartite parts contiguous.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let n = self.vertex_count();
        let edges: Vec<(usize, usize)> = match *self {
            GraphFamily::Complete(k) => (0..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect(),
            GraphFamily::Empty(_) => Vec::new(),
            GraphFamily::Path(k) => (0..k - 1).map(|i| (i, i + 1)).collect(),
            GraphFamily::Cycle(k) => (0..k - 1)
                .map(|i| (i, i + 1))
                .chain(std::iter::once((k - 1, 0)))
                .collect(),
            GraphFamily::Star(leaves) => (1..=leaves).map(|v| (0, v)).collect(),
            GraphFamily::CompleteBipartite(a, b) => (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                .collect(),
        };
        Ok(Graph::from_edges(n, edges).expect("family parameters validated"))
    }

    /// The closed-form ocd polynomial of the instance.
    pub fn polynomial(&self) -> Result<OcdPolynomial, FamilyError> {
        self.validate()?;
        let n = self.vertex_count();
        let mut coeff = vec![BigUint::zero(); n + 1];
        coeff[n] = BigUint::one();
        match *self {
            // Every nonempty S dominates K_n, and its complement induces a
            // smaller complete graph, which is connected: (1+x)^n - 1.
            GraphFamily::Complete(k) => {
                for (i, c) in coeff.iter_mut().enumerate().skip(1) {
                    *c = binomial(k, i);
                }
            }
            // Isolated vertices are dominated only by membership, so only
            // S = V qualifies.
            GraphFamily::Empty(_) => {}
            // Connected complements of a path are intervals. Intervals of
            // length >= 3 trap their middle vertex; length-2 intervals need
            // neighbors on both sides, leaving the n-3 interior positions;
            // every singleton survives.
            GraphFamily::Path(k) => {
                if k >= 2 {
                    coeff[k - 1] = BigUint::from(k);
                }
                if k >= 3 {
                    coeff[k - 2] = BigUint::from(k - 3);
                }
            }
            // Complements of a cycle are arcs; all n arcs of length 1 and
            // of length 2 survive, longer arcs trap a middle vertex.
            GraphFamily::Cycle(k) => {
                coeff[k - 1] = BigUint::from(k);
                coeff[k - 2] = BigUint::from(k);
            }
            // Any complement with two or more vertices is connected only if
            // it holds the center plus a leaf, and that leaf's sole
            // neighbor is then inside; only singletons survive. The same
            // expression covers Star(1) = K2.
            GraphFamily::Star(_) => {
                coeff[n - 1] = BigUint::from(n);
            }
            // A complement meeting both parts induces a connected complete
            // bipartite graph; each of its A-vertices needs a B-vertex
            // outside and vice versa, forcing i < a and j < b.
            GraphFamily::CompleteBipartite(a, b) => {
                coeff[n - 1] = BigUint::from(n);
                for i in 1..a {
                    for j in 1..b {
                        coeff[n - i - j] += binomial(a, i) * binomial(b, j);
                    }
                }
            }
        }
        Ok(OcdPolynomial::from_counts_unchecked(n, coeff))
    }
}

/// Exact C(n, k) by the multiplicative formula; every intermediate
/// division is exact.
fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ocd_polynomial_bruteforce;

    #[test]
    fn builds_canonical_instances() {
        let p4 = GraphFamily::Path(4).build().unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            GraphFamily::Cycle(3).build().unwrap(),
            GraphFamily::Complete(3).build().unwrap()
        );
        assert_eq!(
            GraphFamily::Star(1).build().unwrap(),
            GraphFamily::Complete(2).build().unwrap()
        );
        let k23 = GraphFamily::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(0, 1));
        assert!(k23.has_edge(0, 2));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            GraphFamily::Path(0).build(),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GraphFamily::Cycle(2).polynomial(),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GraphFamily::Star(0).build(),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GraphFamily::CompleteBipartite(0, 3).build(),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GraphFamily::Empty(70).build(),
            Err(FamilyError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn closed_forms_match_spot_values() {
        assert_eq!(
            GraphFamily::Path(5).polynomial().unwrap().to_string(),
            "x^5 + 5x^4 + 2x^3"
        );
        assert_eq!(
            GraphFamily::Cycle(4).polynomial().unwrap().to_string(),
            "x^4 + 4x^3 + 4x^2"
        );
        assert_eq!(
            GraphFamily::Complete(4).polynomial().unwrap().to_string(),
            "x^4 + 4x^3 + 6x^2 + 4x"
        );
        assert_eq!(GraphFamily::Path(1).polynomial().unwrap().to_string(), "x");
        assert_eq!(
            GraphFamily::Empty(3).polynomial().unwrap().to_string(),
            "x^3"
        );
        assert_eq!(
            GraphFamily::Star(4).polynomial().unwrap().to_string(),
            "x^5 + 5x^4"
        );
    }

    #[test]
    fn cross_family_identities() {
        assert_eq!(
            GraphFamily::Cycle(3).polynomial().unwrap(),
            GraphFamily::Complete(3).polynomial().unwrap()
        );
        assert_eq!(
            GraphFamily::Star(1).polynomial().unwrap(),
            GraphFamily::Complete(2).polynomial().unwrap()
        );
        assert_eq!(
            GraphFamily::Path(2).polynomial().unwrap(),
            GraphFamily::Complete(2).polynomial().unwrap()
        );
        for b in 1..=8 {
            assert_eq!(
                GraphFamily::CompleteBipartite(1, b).polynomial().unwrap(),
                GraphFamily::Star(b).polynomial().unwrap(),
                "b={b}"
            );
        }
    }

    #[test]
    fn formulas_match_oracle_on_small_parameters() {
        let mut instances = vec![];
        for n in 1..=8 {
            instances.push(GraphFamily::Complete(n));
            instances.push(GraphFamily::Empty(n));
            instances.push(GraphFamily::Path(n));
            if n >= 3 {
                instances.push(GraphFamily::Cycle(n));
            }
            instances.push(GraphFamily::Star(n));
            for a in 1..n {
                instances.push(GraphFamily::CompleteBipartite(a, n - a));
            }
        }
        for family in instances {
            let claimed = family.polynomial().unwrap();
            let (oracle, _) = ocd_polynomial_bruteforce(&family.build().unwrap()).unwrap();
            assert_eq!(claimed, oracle, "{family:?}");
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }
}

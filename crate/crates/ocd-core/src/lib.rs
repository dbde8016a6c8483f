//! Exact outer-connected domination polynomials for small simple graphs.
//!
//! A set S of vertices is an outer-connected dominating set (ocd-set) when
//! S dominates the graph and either S = V or the subgraph induced by V \ S
//! is connected. The ocd polynomial collects, per cardinality, the exact
//! number of such sets. This crate provides the graph primitives, a
//! brute-force oracle, an output-sensitive engine that enumerates connected
//! complements, and verified closed forms for the standard families.
//!
//! ```
//! use ocd_core::{GraphFamily, ocd_polynomial_fast};
//!
//! let p4 = GraphFamily::Path(4).build().unwrap();
//! let (poly, stats) = ocd_polynomial_fast(&p4);
//! assert_eq!(poly.to_string(), "x^4 + 4x^3 + x^2");
//! assert_eq!(poly.min_degree(), 2);
//! assert_eq!(stats.ocd_sets_found, 6);
//! ```

#![forbid(unsafe_code)]

pub mod engine;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod polynomial;

pub use engine::{
    BRUTE_FORCE_MAX_VERTICES, ConnectedSubgraphs, EngineError, EngineKind, EnumerationStats,
    SetVerdict, check_set, connected_induced_subgraphs, min_ocd_number, ocd_polynomial_bruteforce,
    ocd_polynomial_fast,
};
pub use families::{FamilyError, GraphFamily};
pub use graph::{Graph, GraphError, MAX_VERTICES, ParseError, VertexSet, parse_edge_list};
pub use graph6::{GRAPH6_MAX_VERTICES, Graph6Error, parse_graph6, to_graph6};
pub use polynomial::{OcdPolynomial, PolynomialError};

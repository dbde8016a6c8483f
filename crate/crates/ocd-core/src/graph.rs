//! Simple undirected graphs on at most 64 vertices, stored as per-vertex
//! neighbor bitsets, plus the set predicates the counting engines build on.

use std::fmt;

use rand::Rng;
use thiserror::Error;

/// Largest vertex count the `u64` bitset representation supports.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
const fn low_mask(n: usize) -> u64 {
    if n >= 64 { u64::MAX } else { (1u64 << n) - 1 }
}

/// A subset of the vertices `0..n`, packed into a `u64`.
///
/// All set operations are exact; `complement` needs the universe size `n`
/// because the bitset itself does not carry it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn empty() -> Self {
        Self::EMPTY
    }

    /// The full universe `{0, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut set = Self::empty();
        for v in indices {
            set.insert(v);
        }
        set
    }

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= bit(v);
    }

    /// Copy of `self` with `v` added.
    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !bit(v);
    }

    /// Cardinality.
    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement with respect to the universe `{0, ..., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(!self.0 & low_mask(n))
    }

    /// Smallest member, if any.
    #[inline]
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates over members in increasing order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

/// Set difference.
impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Errors raised while constructing a [`Graph`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// A simple undirected graph with at least one and at most 64 vertices.
///
/// `adj[v]` is the open neighborhood N(v); no self-loops, symmetric by
/// construction. Immutable once built, so shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::empty(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Samples G(n, p): each of the C(n,2) possible edges independently
    /// present with probability `p`.
    pub fn random_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(v)
    }

    #[inline]
    pub fn is_isolated(&self, v: usize) -> bool {
        self.neighbors(v).is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for u in (self.adj[v] & VertexSet::full(v)).iter() {
                out.push((u, v));
            }
        }
        out.sort_unstable();
        out
    }

    /// The full vertex set V.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// True iff the subgraph induced by `c` is connected. Singletons are
    /// connected; the empty set counts as connected by convention (callers
    /// handle S = V before ever reaching this case).
    pub fn is_connected_induced(&self, c: VertexSet) -> bool {
        debug_assert!(c.is_subset_of(self.vertex_set()));
        let Some(start) = c.lowest() else {
            return true;
        };
        let mut component = VertexSet::singleton(start);
        let mut frontier = component;
        while !frontier.is_empty() {
            let mut reached = VertexSet::empty();
            for v in frontier.iter() {
                reached |= self.adj[v];
            }
            frontier = (reached & c) - component;
            component |= frontier;
        }
        component == c
    }

    /// True iff every vertex outside `s` has a neighbor in `s`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertex_set()));
        (self.vertex_set() - s)
            .iter()
            .all(|v| !(self.adj[v] & s).is_empty())
    }

    /// True iff `s` is an outer-connected dominating set: `s` dominates and
    /// either `s = V` or the subgraph induced by `V \ s` is connected.
    pub fn is_ocd_set(&self, s: VertexSet) -> bool {
        self.is_dominating(s)
            && (s == self.vertex_set() || self.is_connected_induced(self.vertex_set() - s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ n: {}, edges: {:?} }}", self.n, self.edges())
    }
}

/// Errors raised by [`parse_edge_list`], each tagged with a 1-based line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: expected header \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected edge \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: invalid integer {token:?}")]
    InvalidInteger { line: usize, token: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected data after {expected} edges")]
    TrailingData { line: usize, expected: usize },
}

fn parse_int(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::InvalidInteger {
        line,
        token: token.to_string(),
    })
}

/// Parses the plain edge-list format: a header line `n m`, then `m` lines
/// `u v` with 0-based endpoints. Lines starting with `#` and blank lines are
/// skipped. Duplicate edges collapse; self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(ParseError::MalformedHeader { line: header_line });
    }
    let n = parse_int(tokens[0], header_line)?;
    let m = parse_int(tokens[1], header_line)?;
    if n == 0 {
        return Err(ParseError::Graph {
            line: header_line,
            source: GraphError::NoVertices,
        });
    }
    if n > MAX_VERTICES {
        return Err(ParseError::Graph {
            line: header_line,
            source: GraphError::TooManyVertices { n },
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(ParseError::MissingEdges {
            expected: m,
            found: edges.len(),
        })?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::MalformedEdge { line });
        }
        let u = parse_int(tokens[0], line)?;
        let v = parse_int(tokens[1], line)?;
        if u >= n || v >= n {
            let w = if u >= n { u } else { v };
            return Err(ParseError::Graph {
                line,
                source: GraphError::VertexOutOfRange { v: w, n },
            });
        }
        if u == v {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop { v: u },
            });
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingData { line, expected: m });
    }

    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn parse_p3() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_k1() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_collapses_duplicate_edges() {
        let g = parse_edge_list("3 2\n0 1\n0 1").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(g.is_isolated(2));
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = parse_edge_list("# a path\n\n3 2\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_rejects_malformed_header() {
        assert_eq!(
            parse_edge_list("3\n0 1"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
    }

    #[test]
    fn parse_rejects_non_integer_with_line_number() {
        assert_eq!(
            parse_edge_list("3 2\n0 1\nx 2"),
            Err(ParseError::InvalidInteger {
                line: 3,
                token: "x".to_string()
            })
        );
    }

    #[test]
    fn parse_rejects_out_of_range_vertex() {
        assert_eq!(
            parse_edge_list("3 1\n0 7"),
            Err(ParseError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { v: 7, n: 3 }
            })
        );
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            parse_edge_list("3 1\n1 1"),
            Err(ParseError::Graph {
                line: 2,
                source: GraphError::SelfLoop { v: 1 }
            })
        );
    }

    #[test]
    fn parse_rejects_null_graph() {
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(ParseError::Graph {
                source: GraphError::NoVertices,
                ..
            })
        ));
    }

    #[test]
    fn parse_rejects_missing_and_trailing_edges() {
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(ParseError::MissingEdges {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(ParseError::TrailingData {
                line: 3,
                expected: 1
            })
        );
    }

    #[test]
    fn adjacency_is_symmetric_after_parse() {
        let g = parse_edge_list("5 4\n0 2\n0 4\n1 3\n3 4").unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn connectivity_on_small_graphs() {
        let p3 = path(3);
        assert!(!p3.is_connected_induced(VertexSet::from_indices([0, 2])));
        assert!(p3.is_connected_induced(VertexSet::singleton(1)));
        assert!(p3.is_connected_induced(VertexSet::empty()));
        let c4 = cycle(4);
        assert!(c4.is_connected_induced(VertexSet::from_indices([0, 1, 2])));
        assert!(c4.is_connected_induced(c4.vertex_set()));
    }

    #[test]
    fn every_singleton_is_connected() {
        let g = parse_edge_list("6 3\n0 2\n2 4\n1 5").unwrap();
        for v in g.vertices() {
            assert!(g.is_connected_induced(VertexSet::singleton(v)));
        }
    }

    #[test]
    fn domination_on_p3() {
        let p3 = path(3);
        assert!(p3.is_dominating(VertexSet::singleton(1)));
        assert!(!p3.is_dominating(VertexSet::singleton(0)));
        assert!(!p3.is_dominating(VertexSet::empty()));
        assert!(p3.is_dominating(p3.vertex_set()));
    }

    #[test]
    fn ocd_predicate_on_p4() {
        let p4 = path(4);
        // {1,2} dominates but splits the complement into {0} and {3}.
        assert!(p4.is_dominating(VertexSet::from_indices([1, 2])));
        assert!(!p4.is_ocd_set(VertexSet::from_indices([1, 2])));
        assert!(p4.is_ocd_set(VertexSet::from_indices([0, 3])));
        assert!(p4.is_ocd_set(p4.vertex_set()));
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_indices([0, 2, 5]);
        let b = VertexSet::from_indices([2, 3]);
        assert_eq!(a | b, VertexSet::from_indices([0, 2, 3, 5]));
        assert_eq!(a & b, VertexSet::singleton(2));
        assert_eq!(a - b, VertexSet::from_indices([0, 5]));
        assert_eq!(a.complement(6), VertexSet::from_indices([1, 3, 4]));
        assert_eq!(a.len(), 3);
        assert_eq!(a.lowest(), Some(0));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(a.to_string(), "{0, 2, 5}");
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flags| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if flags[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn ocd_sets_are_dominating(g in arb_graph(8), bits in any::<u64>()) {
            let s = VertexSet::from_bits(bits) & g.vertex_set();
            if g.is_ocd_set(s) {
                prop_assert!(g.is_dominating(s));
            }
        }

        #[test]
        fn random_gnp_is_simple_and_symmetric(n in 1usize..=16, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let g = Graph::random_gnp(&mut rng, n, 0.4).unwrap();
            for v in g.vertices() {
                prop_assert!(!g.has_edge(v, v));
                for u in g.neighbors(v).iter() {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }
}

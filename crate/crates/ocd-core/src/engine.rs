//! The two counting engines and the set checker.
//!
//! The brute-force engine scans all 2^n subsets and applies the ocd
//! predicate directly; it is the oracle everything else is measured
//! against. The fast engine walks the complement side instead: apart from
//! S = V, a set S is an ocd-set exactly when C = V \ S induces a nonempty
//! connected subgraph and every vertex of C keeps a neighbor outside C
//! (that neighbor is the dominator of the trapped-otherwise vertex).

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::polynomial::OcdPolynomial;

/// Hard guard for the exhaustive engine: 2^25 predicate evaluations.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 25;

/// Which counting engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Brute,
    Fast,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(
        "n={n} exceeds the brute-force guard of {BRUTE_FORCE_MAX_VERTICES} vertices; use the fast engine"
    )]
    TooLargeForBruteForce { n: usize },
}

/// Work counters for one engine run. `elapsed` is informational only;
/// everything else is deterministic for a fixed graph.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnumerationStats {
    /// Subsets examined: 2^n for the brute engine, connected complement
    /// candidates visited for the fast engine.
    pub candidates_visited: u64,
    /// Total ocd-sets found, over all cardinalities.
    pub ocd_sets_found: u64,
    pub elapsed: Duration,
}

/// Counts ocd-sets by testing every subset of V. Guarded at n <= 25.
pub fn ocd_polynomial_bruteforce(
    g: &Graph,
) -> Result<(OcdPolynomial, EnumerationStats), EngineError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(EngineError::TooLargeForBruteForce { n });
    }
    let start = Instant::now();
    let mut counts = vec![0u64; n + 1];
    for bits in 0..1u64 << n {
        let s = VertexSet::from_bits(bits);
        if g.is_ocd_set(s) {
            counts[s.len()] += 1;
        }
    }
    let stats = EnumerationStats {
        candidates_visited: 1u64 << n,
        ocd_sets_found: counts.iter().sum(),
        elapsed: start.elapsed(),
    };
    debug_assert!(stats.ocd_sets_found <= stats.candidates_visited);
    let coeff = counts.into_iter().map(BigUint::from).collect();
    Ok((OcdPolynomial::from_counts_unchecked(n, coeff), stats))
}

struct Frame {
    set: u64,
    /// Union of the neighborhoods of `set`.
    nbrs: u64,
    /// Vertices this subtree must never touch: everything below the anchor
    /// plus all earlier-branched siblings along the path from the anchor.
    forbidden: u64,
}

/// Streams every nonempty vertex set whose induced subgraph is connected,
/// each exactly once, in a fixed depth-first order.
///
/// For each anchor vertex r in increasing order the walk grows components
/// from `{r}` using only vertices above r, branching on frontier vertices
/// in index order; a subtree branching on v forbids all smaller pending
/// candidates, so every connected set is emitted exactly once, from its
/// minimum vertex.
pub struct ConnectedSubgraphs<'g> {
    graph: &'g Graph,
    stack: Vec<Frame>,
}

/// See [`ConnectedSubgraphs`].
pub fn connected_induced_subgraphs(g: &Graph) -> ConnectedSubgraphs<'_> {
    let mut stack = Vec::with_capacity(g.n());
    for r in (0..g.n()).rev() {
        stack.push(Frame {
            set: VertexSet::singleton(r).bits(),
            nbrs: g.neighbors(r).bits(),
            forbidden: VertexSet::full(r).bits(),
        });
    }
    ConnectedSubgraphs { graph: g, stack }
}

impl Iterator for ConnectedSubgraphs<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let Frame {
            set,
            nbrs,
            forbidden,
        } = self.stack.pop()?;
        let candidates = nbrs & !set & !forbidden;
        // Push children highest-first so the smallest branch pops next,
        // reproducing the recursive pre-order. The child branching on v
        // forbids every candidate below v (its earlier siblings).
        let mut rest = candidates;
        while rest != 0 {
            let v = 63 - rest.leading_zeros() as usize;
            rest &= !(1u64 << v);
            self.stack.push(Frame {
                set: set | 1 << v,
                nbrs: nbrs | self.graph.neighbors(v).bits(),
                forbidden: forbidden | (candidates & ((1 << v) - 1)),
            });
        }
        Some(VertexSet::from_bits(set))
    }
}

/// True iff adding `added` to `set` leaves some member with no neighbor
/// outside `set`. Only `added` and its neighbors can newly lose their last
/// outside neighbor, so the check is local.
#[inline]
fn traps_a_vertex(g: &Graph, set: u64, added: usize) -> bool {
    let adj_added = g.neighbors(added).bits();
    if adj_added & !set == 0 {
        return true;
    }
    let mut inside = adj_added & set;
    while inside != 0 {
        let w = inside.trailing_zeros() as usize;
        inside &= inside - 1;
        if g.neighbors(w).bits() & !set == 0 {
            return true;
        }
    }
    false
}

/// Per-anchor result of the pruned counting walk.
struct AnchorTally {
    visited: u64,
    /// `accepted[k]` counts accepted complements C with |S| = n - |C| = k.
    accepted: Vec<u64>,
}

fn count_walk(g: &Graph, set: u64, nbrs: u64, forbidden: u64, added: usize, tally: &mut AnchorTally) {
    tally.visited += 1;
    // A vertex with no neighbor outside C can never regain one as C grows,
    // so the whole subtree is rejected and the walk cuts it off here. This
    // is what keeps dense cores cheap: a star on m leaves has 2^m connected
    // subgraphs but only O(m) survive the first trapped leaf.
    if traps_a_vertex(g, set, added) {
        return;
    }
    tally.accepted[g.n() - set.count_ones() as usize] += 1;
    let candidates = nbrs & !set & !forbidden;
    let mut pending = candidates;
    let mut forbid = forbidden;
    while pending != 0 {
        let v = pending.trailing_zeros() as usize;
        pending &= pending - 1;
        count_walk(
            g,
            set | 1 << v,
            nbrs | g.neighbors(v).bits(),
            forbid,
            v,
            tally,
        );
        forbid |= 1 << v;
    }
}

fn anchored_tally(g: &Graph, r: usize) -> AnchorTally {
    let mut tally = AnchorTally {
        visited: 0,
        accepted: vec![0u64; g.n() + 1],
    };
    count_walk(
        g,
        VertexSet::singleton(r).bits(),
        g.neighbors(r).bits(),
        VertexSet::full(r).bits(),
        r,
        &mut tally,
    );
    tally
}

/// Counts ocd-sets by enumerating connected complements. Produces the
/// identical polynomial to [`ocd_polynomial_bruteforce`] (enforced by the
/// acceptance suite) with output-sensitive cost; anchors run as
/// independent parallel tasks and merge by elementwise addition.
pub fn ocd_polynomial_fast(g: &Graph) -> (OcdPolynomial, EnumerationStats) {
    let n = g.n();
    let start = Instant::now();
    let mut counts = vec![0u64; n + 1];
    counts[n] = 1; // S = V, the branch the complement walk never sees
    let mut visited = 0u64;
    for tally in (0..n)
        .into_par_iter()
        .map(|r| anchored_tally(g, r))
        .collect::<Vec<_>>()
    {
        visited += tally.visited;
        for (total, part) in counts.iter_mut().zip(&tally.accepted) {
            *total += part;
        }
    }
    let stats = EnumerationStats {
        candidates_visited: visited,
        ocd_sets_found: counts.iter().sum(),
        elapsed: start.elapsed(),
    };
    debug_assert!(stats.ocd_sets_found <= stats.candidates_visited);
    let coeff = counts.into_iter().map(BigUint::from).collect();
    (OcdPolynomial::from_counts_unchecked(n, coeff), stats)
}

/// The outer-connected domination number: the least size of an ocd-set.
pub fn min_ocd_number(g: &Graph, engine: EngineKind) -> Result<usize, EngineError> {
    let polynomial = match engine {
        EngineKind::Brute => ocd_polynomial_bruteforce(g)?.0,
        EngineKind::Fast => ocd_polynomial_fast(g).0,
    };
    Ok(polynomial.min_degree())
}

/// Outcome of [`check_set`]: the two defining conditions, their
/// conjunction, and a concrete witness for whichever condition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetVerdict {
    pub dominating: bool,
    /// True iff `s = V` or the complement induces a connected subgraph.
    pub outer_connected: bool,
    pub ocd: bool,
    /// A vertex outside `s` with no neighbor in `s`, when domination fails.
    pub undominated: Option<usize>,
    /// Two complement vertices in different components, when outer
    /// connectivity fails.
    pub split_pair: Option<(usize, usize)>,
}

/// Evaluates both ocd conditions on `s` and reports witnesses for failures.
pub fn check_set(g: &Graph, s: VertexSet) -> SetVerdict {
    let complement = g.vertex_set() - s;
    let undominated = complement
        .iter()
        .find(|&v| (g.neighbors(v) & s).is_empty());

    // The S = V branch comes first; connectivity of the empty complement
    // never enters the verdict.
    let outer_connected = complement.is_empty() || g.is_connected_induced(complement);
    let mut split_pair = None;
    if !outer_connected {
        let start = complement.lowest().expect("complement is nonempty");
        let mut component = VertexSet::singleton(start);
        let mut frontier = component;
        while !frontier.is_empty() {
            let mut reached = VertexSet::empty();
            for v in frontier.iter() {
                reached |= g.neighbors(v);
            }
            frontier = (reached & complement) - component;
            component |= frontier;
        }
        let outside = complement - component;
        split_pair = Some((start, outside.lowest().expect("complement is disconnected")));
    }

    let dominating = undominated.is_none();
    SetVerdict {
        dominating,
        outer_connected,
        ocd: dominating && outer_connected,
        undominated,
        split_pair,
    }
}

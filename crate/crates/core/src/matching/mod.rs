//! Perfect matchings: existence, exhaustive enumeration, counting and the
//! per-edge statistics built on them.
//!
//! A perfect matching is a set of edge *ids*, so parallel edges give
//! distinct matchings. The 0-vertex graph has exactly one perfect matching,
//! the empty one.

mod blossom;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Dense, EdgeId, MultiGraph};

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerfectMatching {
    edges: Vec<EdgeId>,
}

impl PerfectMatching {
    pub fn new(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        PerfectMatching { edges }
    }

    /// Edge ids in ascending order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True iff every vertex of `g` is covered by exactly one of the edges.
    pub fn covers_exactly_once(&self, g: &MultiGraph) -> bool {
        let mut hits: BTreeMap<_, usize> = g.vertices().map(|v| (v, 0)).collect();
        for &e in &self.edges {
            let Ok((a, b)) = g.endpoints(e) else {
                return false;
            };
            *hits.get_mut(&a).expect("vertex") += 1;
            *hits.get_mut(&b).expect("vertex") += 1;
        }
        hits.values().all(|&h| h == 1)
    }
}

/// Result of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCensus {
    pub count: u64,
    /// All matchings in canonical (lexicographic) order, when materialised.
    pub matchings: Option<Vec<PerfectMatching>>,
    /// Number of perfect matchings containing each edge; every edge of the
    /// graph has an entry.
    pub per_edge_counts: BTreeMap<EdgeId, u64>,
}

impl MatchingCensus {
    pub fn matchings(&self) -> &[PerfectMatching] {
        self.matchings.as_deref().unwrap_or(&[])
    }
}

pub fn has_perfect_matching(g: &MultiGraph) -> bool {
    if g.vertex_count() % 2 == 1 {
        return false;
    }
    let d = g.dense();
    blossom::has_perfect_matching(&d.simple_adj, &vec![true; d.len()])
}

/// Existence test on the subgraph induced by the `free` vertices of `d`.
pub(crate) fn residual_has_perfect_matching(d: &Dense, free: &[bool]) -> bool {
    blossom::has_perfect_matching(&d.simple_adj, free)
}

/// A maximum matching as edge ids (ascending).
pub fn maximum_matching(g: &MultiGraph) -> Vec<EdgeId> {
    let d = g.dense();
    let mate = blossom::maximum_matching(&d.simple_adj, &vec![true; d.len()]);
    let mut out: Vec<EdgeId> = (0..d.len())
        .filter(|&v| mate[v] != usize::MAX && v < mate[v])
        .map(|v| {
            d.incidence[v]
                .iter()
                .find(|&&(w, _)| w == mate[v])
                .map(|&(_, pos)| d.edges[pos].2)
                .expect("matched pair is adjacent")
        })
        .collect();
    out.sort_unstable();
    out
}

fn check_limit(g: &MultiGraph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        return Err(Error::Scale {
            what: "perfect-matching enumeration",
            limit,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

/// Depth-first walk over all perfect matchings. Branches on the lowest
/// uncovered vertex, tries its edges by ascending id and prunes any branch
/// whose residual graph has no perfect matching.
fn walk(d: &Dense, visit: &mut impl FnMut(&[usize])) {
    let n = d.len();
    let mut free = vec![true; n];
    if !blossom::has_perfect_matching(&d.simple_adj, &free) {
        return;
    }
    let mut chosen = Vec::with_capacity(n / 2);
    descend(d, &mut free, &mut chosen, 0, visit);
}

fn descend(
    d: &Dense,
    free: &mut [bool],
    chosen: &mut Vec<usize>,
    from: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    let Some(v) = (from..d.len()).find(|&v| free[v]) else {
        visit(chosen);
        return;
    };
    free[v] = false;
    for &(w, pos) in &d.incidence[v] {
        if !free[w] {
            continue;
        }
        free[w] = false;
        if blossom::has_perfect_matching(&d.simple_adj, free) {
            chosen.push(pos);
            descend(d, free, chosen, v + 1, visit);
            chosen.pop();
        }
        free[w] = true;
    }
    free[v] = true;
}

pub fn enumerate_perfect_matchings(g: &MultiGraph) -> Result<MatchingCensus> {
    enumerate_perfect_matchings_within(g, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_perfect_matchings_within(g: &MultiGraph, limit: usize) -> Result<MatchingCensus> {
    check_limit(g, limit)?;
    let d = g.dense();
    let mut per_edge = vec![0u64; d.edges.len()];
    let mut all = Vec::new();
    walk(&d, &mut |chosen| {
        for &pos in chosen {
            per_edge[pos] += 1;
        }
        all.push(PerfectMatching::new(chosen.iter().map(|&p| d.edges[p].2)));
    });
    all.sort();
    Ok(MatchingCensus {
        count: all.len() as u64,
        matchings: Some(all),
        per_edge_counts: d
            .edges
            .iter()
            .zip(per_edge)
            .map(|(&(_, _, e), c)| (e, c))
            .collect(),
    })
}

/// Number of perfect matchings, without materialising them.
pub fn count_perfect_matchings(g: &MultiGraph) -> Result<u64> {
    check_limit(g, DEFAULT_ENUMERATION_LIMIT)?;
    let d = g.dense();
    let mut count = 0u64;
    walk(&d, &mut |_| count += 1);
    Ok(count)
}

/// Connected, at least two vertices, and every edge lies in some perfect
/// matching. Decided with one existence test per adjacent pair.
pub fn is_matching_covered(g: &MultiGraph) -> bool {
    if g.vertex_count() < 2 || g.vertex_count() % 2 == 1 || !g.is_connected() {
        return false;
    }
    let d = g.dense();
    let mut free = vec![true; d.len()];
    if !blossom::has_perfect_matching(&d.simple_adj, &free) {
        return false;
    }
    for v in 0..d.len() {
        for &w in &d.simple_adj[v] {
            if w < v {
                continue;
            }
            free[v] = false;
            free[w] = false;
            let ok = blossom::has_perfect_matching(&d.simple_adj, &free);
            free[v] = true;
            free[w] = true;
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Edges lying in exactly one perfect matching.
pub fn solitary_edges(g: &MultiGraph) -> Result<BTreeSet<EdgeId>> {
    let census = enumerate_perfect_matchings(g)?;
    Ok(census
        .per_edge_counts
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(e, _)| e)
        .collect())
}

/// Perfect matchings containing `e`: those of `g` minus both ends of `e`,
/// each extended by `e`.
pub fn matchings_through(g: &MultiGraph, e: EdgeId) -> Result<MatchingCensus> {
    let (a, b) = g.endpoints(e)?;
    let rest = g.delete_vertices(&BTreeSet::from([a, b]))?;
    let inner = enumerate_perfect_matchings(&rest)?;
    let mut per_edge: BTreeMap<EdgeId, u64> = g.edges().map(|(f, _, _)| (f, 0)).collect();
    for (&f, &c) in &inner.per_edge_counts {
        per_edge.insert(f, c);
    }
    per_edge.insert(e, inner.count);
    let mut all: Vec<PerfectMatching> = inner
        .matchings()
        .iter()
        .map(|m| PerfectMatching::new(m.edges().iter().copied().chain([e])))
        .collect();
    all.sort();
    Ok(MatchingCensus {
        count: inner.count,
        matchings: Some(all),
        per_edge_counts: per_edge,
    })
}

/// One matching per line as space-separated ascending edge ids.
pub fn write_matchings(matchings: &[PerfectMatching]) -> String {
    let mut out = String::new();
    for m in matchings {
        let ids: Vec<String> = m.edges().iter().map(|e| e.0.to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).expect("write to string");
    }
    out
}

pub fn read_matchings(text: &str) -> Result<Vec<PerfectMatching>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map(EdgeId).map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("bad edge id {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(PerfectMatching::new)
        })
        .collect()
}

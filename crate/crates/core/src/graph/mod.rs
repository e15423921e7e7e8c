//! Loopless multigraph with stable vertex and edge identifiers.
//!
//! Identifiers are append-only integers. Deleting vertices, contracting a
//! vertex set or splicing never renumbers the survivors, so an edge id read
//! off one graph keeps naming the same edge in every graph derived from it.
//! All set-valued outputs are ordered by ascending id.

mod connectivity;
mod io;
mod iso;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use connectivity::vertex_connectivity_at_least;
pub use io::{read_graph, write_dot, write_graph};
pub use iso::{is_isomorphic, is_isomorphic_within, DEFAULT_ISO_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: BTreeMap<VertexId, Option<String>>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    incidence: BTreeMap<VertexId, BTreeSet<EdgeId>>,
    by_label: HashMap<String, VertexId>,
    next_vertex: u32,
    next_edge: u32,
}

/// An edge cut `∂(X)`: the side `X` and the edges with exactly one end in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub side: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    other_side_len: usize,
}

impl EdgeCut {
    /// A cut is trivial when one of its shores is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.side.len() == 1 || self.other_side_len == 1
    }

    pub fn complement_len(&self) -> usize {
        self.other_side_len
    }
}

/// Injective map between the vertex sets of two graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    pairs: BTreeMap<VertexId, VertexId>,
}

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `from -> to`. Returns false (and leaves the map unchanged) when
    /// either end is already used.
    pub fn insert(&mut self, from: VertexId, to: VertexId) -> bool {
        if self.pairs.contains_key(&from) || self.pairs.values().any(|&v| v == to) {
            return false;
        }
        self.pairs.insert(from, to);
        true
    }

    pub fn get(&self, from: VertexId) -> Option<VertexId> {
        self.pairs.get(&from).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn inverse(&self) -> VertexMap {
        VertexMap {
            pairs: self.pairs.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }
}

impl FromIterator<(VertexId, VertexId)> for VertexMap {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        VertexMap {
            pairs: iter.into_iter().collect(),
        }
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: Option<&str>) -> Result<VertexId> {
        let id = VertexId(self.next_vertex);
        self.insert_vertex(id, label)?;
        Ok(id)
    }

    pub(crate) fn insert_vertex(&mut self, id: VertexId, label: Option<&str>) -> Result<()> {
        if self.vertices.contains_key(&id) {
            return Err(Error::DuplicateId {
                kind: "vertex",
                id: id.0,
            });
        }
        if let Some(l) = label {
            if self.by_label.contains_key(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
            self.by_label.insert(l.to_string(), id);
        }
        self.vertices.insert(id, label.map(str::to_string));
        self.incidence.insert(id, BTreeSet::new());
        self.next_vertex = self.next_vertex.max(id.0 + 1);
        Ok(())
    }

    /// Adds an edge between two existing, distinct vertices. Parallel edges
    /// are allowed and receive distinct ids.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.next_edge);
        self.insert_edge(id, a, b)?;
        Ok(id)
    }

    pub(crate) fn insert_edge(&mut self, id: EdgeId, a: VertexId, b: VertexId) -> Result<()> {
        for v in [a, b] {
            if !self.vertices.contains_key(&v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        if a == b {
            return Err(Error::Loop(a));
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateId {
                kind: "edge",
                id: id.0,
            });
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.edges.insert(id, (a, b));
        self.incidence.get_mut(&a).expect("vertex").insert(id);
        self.incidence.get_mut(&b).expect("vertex").insert(id);
        self.next_edge = self.next_edge.max(id.0 + 1);
        Ok(())
    }

    /// Replaces (or clears) the label of `v`.
    pub fn set_label(&mut self, v: VertexId, label: Option<&str>) -> Result<()> {
        let slot = self.vertices.get(&v).ok_or(Error::UnknownVertex(v))?;
        if let Some(l) = label {
            match self.by_label.get(l) {
                Some(&owner) if owner != v => return Err(Error::DuplicateLabel(l.to_string())),
                _ => {}
            }
        }
        if let Some(old) = slot.clone() {
            self.by_label.remove(&old);
        }
        if let Some(l) = label {
            self.by_label.insert(l.to_string(), v);
        }
        self.vertices.insert(v, label.map(str::to_string));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.keys().copied().collect()
    }

    /// Edges as `(id, a, b)` with `a < b`, ascending by id.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(a, b))| (e, a, b))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// The end of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Result<VertexId> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Ok(b)
        } else if b == v {
            Ok(a)
        } else {
            Err(Error::InvalidParameter(format!(
                "edge {e} is not incident with {v}"
            )))
        }
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.vertices.get(&v).and_then(|l| l.as_deref())
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<VertexId> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Label if present, otherwise the numeric id.
    pub fn display_name(&self, v: VertexId) -> String {
        self.label(v)
            .map_or_else(|| format!("#{}", v.0), str::to_string)
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<&BTreeSet<EdgeId>> {
        self.incidence.get(&v).ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.incident_edges(v)?.len())
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        let inc = self.incident_edges(v)?;
        Ok(inc
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[&e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect())
    }

    /// Edges joining `a` and `b`, ascending.
    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Result<Vec<EdgeId>> {
        let inc = self.incident_edges(a)?;
        self.incident_edges(b)?;
        Ok(inc
            .iter()
            .copied()
            .filter(|e| {
                let (x, y) = self.edges[e];
                (x == a && y == b) || (x == b && y == a)
            })
            .collect())
    }

    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> Result<usize> {
        Ok(self.edges_between(a, b)?.len())
    }

    fn check_proper_subset(&self, x: &BTreeSet<VertexId>) -> Result<()> {
        if let Some(&v) = x.iter().find(|v| !self.vertices.contains_key(v)) {
            return Err(Error::UnknownVertex(v));
        }
        if x.is_empty() {
            return Err(Error::InvalidCut("side is empty"));
        }
        if x.len() == self.vertices.len() {
            return Err(Error::InvalidCut("side is the whole vertex set"));
        }
        Ok(())
    }

    /// `∂(X)`, the edges with exactly one end in `X`.
    pub fn edge_cut(&self, x: &BTreeSet<VertexId>) -> Result<EdgeCut> {
        self.check_proper_subset(x)?;
        let edges = self
            .edges
            .iter()
            .filter(|(_, (a, b))| x.contains(a) != x.contains(b))
            .map(|(&e, _)| e)
            .collect();
        Ok(EdgeCut {
            side: x.clone(),
            edges,
            other_side_len: self.vertices.len() - x.len(),
        })
    }

    /// Shrinks `X` to a single new vertex. Edges inside `X` vanish, edges of
    /// `∂(X)` keep their ids and are re-attached to the new vertex, so its
    /// degree equals `|∂(X)|`. Returns the contracted graph and the new vertex.
    pub fn contract(
        &self,
        x: &BTreeSet<VertexId>,
        label: Option<&str>,
    ) -> Result<(MultiGraph, VertexId)> {
        self.check_proper_subset(x)?;
        let mut out = MultiGraph {
            next_vertex: self.next_vertex,
            next_edge: self.next_edge,
            ..MultiGraph::default()
        };
        for (&v, l) in &self.vertices {
            if !x.contains(&v) {
                out.insert_vertex(v, l.as_deref())?;
            }
        }
        // Labels inside X disappear with their vertices, so the new label
        // may reuse one of them.
        let shrunk = out.add_vertex(label)?;
        for (&e, &(a, b)) in &self.edges {
            match (x.contains(&a), x.contains(&b)) {
                (true, true) => {}
                (true, false) => out.insert_edge(e, shrunk, b)?,
                (false, true) => out.insert_edge(e, a, shrunk)?,
                (false, false) => out.insert_edge(e, a, b)?,
            }
        }
        Ok((out, shrunk))
    }

    /// Removes `S` and every edge incident with it. Surviving ids are kept.
    pub fn delete_vertices(&self, s: &BTreeSet<VertexId>) -> Result<MultiGraph> {
        if let Some(&v) = s.iter().find(|v| !self.vertices.contains_key(v)) {
            return Err(Error::UnknownVertex(v));
        }
        let mut out = MultiGraph {
            next_vertex: self.next_vertex,
            next_edge: self.next_edge,
            ..MultiGraph::default()
        };
        for (&v, l) in &self.vertices {
            if !s.contains(&v) {
                out.insert_vertex(v, l.as_deref())?;
            }
        }
        for (&e, &(a, b)) in &self.edges {
            if !s.contains(&a) && !s.contains(&b) {
                out.insert_edge(e, a, b)?;
            }
        }
        Ok(out)
    }

    /// Same vertices, one edge per adjacent pair (the lowest id survives).
    pub fn simplify(&self) -> MultiGraph {
        let mut out = self.clone();
        let mut seen = BTreeSet::new();
        let dupes: Vec<EdgeId> = self
            .edges
            .iter()
            .filter(|(_, &ends)| !seen.insert(ends))
            .map(|(&e, _)| e)
            .collect();
        for e in dupes {
            let (a, b) = out.edges.remove(&e).expect("edge");
            out.incidence.get_mut(&a).expect("vertex").remove(&e);
            out.incidence.get_mut(&b).expect("vertex").remove(&e);
        }
        out
    }

    /// Connected components as vertex sets, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v).expect("vertex") {
                    if seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The 0-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// 2-colourability; parallel edges are irrelevant.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A proper 2-colouring as the set of colour-0 vertices, if one exists.
    pub fn bipartition(&self) -> Option<BTreeSet<VertexId>> {
        let mut colour: BTreeMap<VertexId, bool> = BTreeMap::new();
        for start in self.vertices() {
            if colour.contains_key(&start) {
                continue;
            }
            colour.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[&v];
                for w in self.neighbors(v).expect("vertex") {
                    match colour.get(&w) {
                        Some(&cw) if cw == cv => return None,
                        Some(_) => {}
                        None => {
                            colour.insert(w, !cv);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        Some(
            colour
                .into_iter()
                .filter(|&(_, c)| !c)
                .map(|(v, _)| v)
                .collect(),
        )
    }

    /// Compact index view used by the algorithms.
    pub(crate) fn dense(&self) -> Dense {
        Dense::new(self)
    }
}

/// Vertices renumbered `0..n` in ascending id order, with per-vertex
/// incidence sorted by edge id.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<VertexId>,
    pub index: HashMap<VertexId, usize>,
    /// `(a, b, id)` in ascending id order.
    pub edges: Vec<(usize, usize, EdgeId)>,
    /// `(neighbour, position in edges)` per vertex, ascending edge id.
    pub incidence: Vec<Vec<(usize, usize)>>,
    /// Distinct neighbours per vertex.
    pub simple_adj: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &MultiGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: HashMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize, EdgeId)> = g
            .edges()
            .map(|(e, a, b)| (index[&a], index[&b], e))
            .collect();
        let mut incidence = vec![Vec::new(); ids.len()];
        for (pos, &(a, b, _)) in edges.iter().enumerate() {
            incidence[a].push((b, pos));
            incidence[b].push((a, pos));
        }
        let simple_adj = incidence
            .iter()
            .map(|inc| {
                let mut ns: Vec<usize> = inc.iter().map(|&(w, _)| w).collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect();
        Dense {
            ids,
            index,
            edges,
            incidence,
            simple_adj,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }
}

//! Graph generators: standard small graphs, wheels, splicing, triangle
//! insertion, and the ladder family `G_t`, `G'_t`, `G''_n` together with its
//! canonical vertex names and reference matchings.
//!
//! Vertex names in the ladder family follow the pattern `u_s^j` (layer `s`,
//! position `j` in 1..=4), `u` and `u'`. A triangle inserted at a vertex
//! named `u_s^j` (or `u`) has corners `x_s^j`, `y_s^j`, `z_s^j` (or `x`, `y`,
//! `z`), where `x` always takes the edge towards `u'`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId, VertexMap};

fn build(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
    let mut g = MultiGraph::new();
    let vs: Vec<VertexId> = (0..n)
        .map(|_| g.add_vertex(None).expect("fresh vertex"))
        .collect();
    for &(a, b) in edges {
        g.add_edge(vs[a], vs[b]).expect("valid edge");
    }
    g
}

pub fn complete_graph(n: usize) -> MultiGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    build(n, &edges)
}

pub fn complete_bipartite(left: usize, right: usize) -> MultiGraph {
    let edges: Vec<_> = (0..left)
        .flat_map(|a| (0..right).map(move |b| (a, left + b)))
        .collect();
    build(left + right, &edges)
}

pub fn cycle(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {n} < 3")));
    }
    Ok(build(
        n,
        &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>(),
    ))
}

pub fn path(n: usize) -> MultiGraph {
    build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// Triangular prism `K_3 □ K_2`.
pub fn prism() -> MultiGraph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// The wheel `W_k`: hub `h` joined to every vertex of the rim cycle
/// `r_0 .. r_{k-1}`.
pub fn wheel(k: usize) -> Result<MultiGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "wheel needs k >= 3, got {k}"
        )));
    }
    let mut g = MultiGraph::new();
    let hub = g.add_vertex(Some("h"))?;
    let rim: Vec<VertexId> = (0..k)
        .map(|i| g.add_vertex(Some(&format!("r_{i}"))))
        .collect::<Result<_>>()?;
    for i in 0..k {
        g.add_edge(rim[i], rim[(i + 1) % k])?;
    }
    for &r in &rim {
        g.add_edge(hub, r)?;
    }
    Ok(g)
}

/// Output of [`splice`].
#[derive(Clone, Debug)]
pub struct Splice {
    pub graph: MultiGraph,
    /// Where each vertex of `h` other than the splice vertex went.
    pub h_vertices: VertexMap,
}

/// `(G(u) ⊙ H(v))_θ`: delete `u` from `g` and `v` from `h`, then for every
/// pair `(e_g, e_h)` of `theta` join the far end of `e_g` to the far end of
/// `e_h`.
///
/// Vertices and edges of `g - u` keep their ids, each joining edge reuses the
/// id of its `g`-side edge, and the rest of `h` receives fresh ids. Labels of
/// `h` are not carried over; use `h_vertices` to relabel.
pub fn splice(
    g: &MultiGraph,
    u: VertexId,
    h: &MultiGraph,
    v: VertexId,
    theta: &[(EdgeId, EdgeId)],
) -> Result<Splice> {
    let star_g = g.incident_edges(u)?;
    let star_h = h.incident_edges(v)?;
    if star_g.len() != star_h.len() {
        return Err(Error::DegreeMismatch(star_g.len(), star_h.len()));
    }
    let left: BTreeSet<EdgeId> = theta.iter().map(|&(a, _)| a).collect();
    let right: BTreeSet<EdgeId> = theta.iter().map(|&(_, b)| b).collect();
    if theta.len() != star_g.len() || &left != star_g || &right != star_h {
        return Err(Error::InvalidBijection(format!(
            "{} pairs for stars of size {}",
            theta.len(),
            star_g.len()
        )));
    }

    let mut out = g.delete_vertices(&BTreeSet::from([u]))?;
    let mut map = VertexMap::new();
    for w in h.vertices().filter(|&w| w != v) {
        let fresh = out.add_vertex(None)?;
        map.insert(w, fresh);
    }
    for (_, a, b) in h.edges() {
        if a != v && b != v {
            out.add_edge(map.get(a).expect("mapped"), map.get(b).expect("mapped"))?;
        }
    }
    for &(eg, eh) in theta {
        let g_end = g.opposite(eg, u)?;
        let h_end = h.opposite(eh, v)?;
        out.insert_edge(eg, g_end, map.get(h_end).expect("mapped"))?;
    }
    Ok(Splice {
        graph: out,
        h_vertices: map,
    })
}

/// Corners of a triangle created by [`triangle_insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleLabels {
    /// Name of the replaced vertex.
    pub host: String,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
}

fn corner_names(host: Option<&str>) -> Option<[String; 3]> {
    let host = host?;
    let letters = ["x", "y", "z"];
    Some(if host == "u" || host.starts_with("u_") {
        letters.map(|l| format!("{l}{}", &host[1..]))
    } else {
        letters.map(|l| format!("{host}.{l}"))
    })
}

/// `G⟨u⟩`: replaces the cubic vertex `u` by a triangle, i.e. splices `g`
/// at `u` with `K_4`. The corners `x`, `y`, `z` take the edges of `order`
/// (default: ascending id) in turn; each edge keeps its id.
pub fn triangle_insert(
    g: &MultiGraph,
    u: VertexId,
    order: Option<[EdgeId; 3]>,
) -> Result<(MultiGraph, TriangleLabels)> {
    let star = g.incident_edges(u)?;
    if star.len() != 3 {
        return Err(Error::WrongDegree {
            vertex: u,
            degree: star.len(),
            expected: 3,
        });
    }
    let order = match order {
        Some(o) => {
            if o.iter().copied().collect::<BTreeSet<_>>() != *star {
                return Err(Error::InvalidBijection(format!(
                    "{o:?} is not an ordering of the edges at {u}"
                )));
            }
            o
        }
        None => {
            let v: Vec<EdgeId> = star.iter().copied().collect();
            [v[0], v[1], v[2]]
        }
    };
    let k4 = complete_graph(4);
    let hub = VertexId(0);
    let spokes: Vec<EdgeId> = (1..4)
        .map(|i| k4.edges_between(hub, VertexId(i)).map(|es| es[0]))
        .collect::<Result<_>>()?;
    let theta: Vec<(EdgeId, EdgeId)> = order.iter().copied().zip(spokes).collect();
    let Splice {
        mut graph,
        h_vertices,
    } = splice(g, u, &k4, hub, &theta)?;
    let corners = [1, 2, 3].map(|i| h_vertices.get(VertexId(i)).expect("corner"));
    if let Some(names) = corner_names(g.label(u)) {
        for (c, name) in corners.iter().zip(&names) {
            graph.set_label(*c, Some(name))?;
        }
    }
    Ok((
        graph,
        TriangleLabels {
            host: g.display_name(u),
            x: corners[0],
            y: corners[1],
            z: corners[2],
        },
    ))
}

pub(crate) fn ladder_name(s: usize, j: usize) -> String {
    format!("u_{s}^{j}")
}

/// `G_t`: `t+1` paths `u_s^1 u_s^2 u_s^3 u_s^4`, rungs `u_s^1 u_{s+1}^1` and
/// `u_s^4 u_{s+1}^3`, and a vertex `u` joined to `u_t^1` and `u_t^4`.
pub fn build_g_t(t: usize) -> Result<MultiGraph> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let mut g = MultiGraph::new();
    let mut at = BTreeMap::new();
    for s in 0..=t {
        for j in 1..=4 {
            at.insert((s, j), g.add_vertex(Some(&ladder_name(s, j)))?);
        }
    }
    let u = g.add_vertex(Some("u"))?;
    for s in 0..=t {
        for j in 1..4 {
            g.add_edge(at[&(s, j)], at[&(s, j + 1)])?;
        }
    }
    for s in 0..t {
        g.add_edge(at[&(s, 1)], at[&(s + 1, 1)])?;
        g.add_edge(at[&(s, 4)], at[&(s + 1, 3)])?;
    }
    g.add_edge(u, at[&(t, 1)])?;
    g.add_edge(u, at[&(t, 4)])?;
    Ok(g)
}

/// Names of `S_level` (level 4 is all of `S`), in insertion order.
fn s_names(t: usize, level: usize) -> Result<Vec<String>> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    if !(1..=4).contains(&level) {
        return Err(Error::InvalidParameter(format!(
            "S level {level} outside 1..=4"
        )));
    }
    let mut names: Vec<String> = (1..=4).map(|j| ladder_name(0, j)).collect();
    for s in 1..=t {
        names.push(ladder_name(s, 2));
        names.push(ladder_name(s, 4));
    }
    names.push("u".into());
    let dropped: &[String] = match level {
        1 => &[ladder_name(t, 2), ladder_name(t, 4), "u".into()],
        2 => &[ladder_name(t, 4), "u".into()],
        3 => &["u".into()],
        _ => &[],
    };
    names.retain(|n| !dropped.contains(n));
    Ok(names)
}

/// `S_level` as vertex ids of [`build_g_t`]`(t)` (equally of
/// [`build_g_prime_t`]`(t)`, which extends it without renumbering).
pub fn s_subset(t: usize, level: usize) -> Result<BTreeSet<VertexId>> {
    let names = s_names(t, level)?;
    let g = build_g_t(t)?;
    names.iter().map(|n| g.vertex_by_label(n)).collect()
}

/// `G'_t`: `G_t` plus a vertex `u'` joined to every vertex of `S`.
pub fn build_g_prime_t(t: usize) -> Result<MultiGraph> {
    let mut g = build_g_t(t)?;
    let apex = g.add_vertex(Some("u'"))?;
    let s: BTreeSet<VertexId> = s_names(t, 4)?
        .iter()
        .map(|n| g.vertex_by_label(n))
        .collect::<Result<_>>()?;
    for v in s {
        g.add_edge(apex, v)?;
    }
    Ok(g)
}

/// `(n, t, i)` with `n = i + 8(t+1)`, `0 < i <= 8`, `n` even and `n > 17`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: usize,
    pub t: usize,
    pub i: usize,
}

impl FamilyParams {
    pub fn from_n(n: usize) -> Result<Self> {
        if n % 2 == 1 || n <= 17 {
            return Err(Error::InvalidParameter(format!(
                "family order must be even and at least 18, got {n}"
            )));
        }
        let fits: Vec<FamilyParams> = (1..)
            .take_while(|t| 8 * (t + 1) < n)
            .map(|t| FamilyParams {
                n,
                t,
                i: n - 8 * (t + 1),
            })
            .filter(|p| p.i <= 8)
            .collect();
        assert_eq!(fits.len(), 1, "parameters for n = {n} are not unique");
        Ok(fits[0])
    }

    /// Which `S_level` receives triangles.
    pub fn level(&self) -> usize {
        self.i / 2
    }

    /// `|E| - |V| + 1 = t + 2 + n/2`.
    pub fn dimension(&self) -> usize {
        self.t + 2 + self.n / 2
    }

    /// `(5n + 8 - i) / 8`.
    pub fn predicted_matchings(&self) -> usize {
        (5 * self.n + 8 - self.i) / 8
    }
}

/// A member `G''_n` with its parameters and inserted triangles.
#[derive(Clone, Debug)]
pub struct Family {
    pub graph: MultiGraph,
    pub params: FamilyParams,
    pub triangles: Vec<TriangleLabels>,
}

impl Family {
    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.graph.vertex_by_label(label)
    }

    pub fn edge(&self, a: &str, b: &str) -> Result<EdgeId> {
        edge_by_labels(&self.graph, a, b)
    }

    /// `X_t = {u_t^1, .., u_t^4, u}`, with any of these vertices that were
    /// replaced by a triangle represented by the three corners.
    pub fn top_layer(&self) -> Result<BTreeSet<VertexId>> {
        let t = self.params.t;
        let mut out = BTreeSet::new();
        for name in (1..=4).map(|j| ladder_name(t, j)).chain(["u".to_string()]) {
            match self.graph.vertex_by_label(&name) {
                Ok(v) => {
                    out.insert(v);
                }
                Err(_) => {
                    let tri = self
                        .triangles
                        .iter()
                        .find(|tr| tr.host == name)
                        .ok_or(Error::UnknownLabel(name))?;
                    out.extend([tri.x, tri.y, tri.z]);
                }
            }
        }
        Ok(out)
    }
}

/// Edge order `[x, y, z]` at a host of `G'_t` following the naming rules:
/// `x` towards `u'`; `y` towards `u_s^{j-1}` for `u_s^2`/`u_s^4`, towards
/// `u_1^1` for `u_0^1`, towards `u_0^2` for `u_0^3`, towards `u_t^1` for `u`.
fn insertion_order(g: &MultiGraph, t: usize, host: &str) -> Result<[EdgeId; 3]> {
    let y_target = match host {
        "u" => ladder_name(t, 1),
        "u_0^1" => ladder_name(1, 1),
        "u_0^3" => ladder_name(0, 2),
        _ => {
            let (s, j) = host
                .strip_prefix("u_")
                .and_then(|rest| rest.split_once('^'))
                .and_then(|(s, j)| Some((s.parse::<usize>().ok()?, j.parse::<usize>().ok()?)))
                .ok_or_else(|| Error::UnknownLabel(host.to_string()))?;
            ladder_name(s, j - 1)
        }
    };
    let x = edge_by_labels(g, host, "u'")?;
    let y = edge_by_labels(g, host, &y_target)?;
    let v = g.vertex_by_label(host)?;
    let z = *g
        .incident_edges(v)?
        .iter()
        .find(|&&e| e != x && e != y)
        .ok_or_else(|| Error::Precondition(format!("{host} is not cubic")))?;
    Ok([x, y, z])
}

/// `G''_n = G'_t⟨S_{i/2}⟩` with canonical corner names.
pub fn build_family(n: usize) -> Result<Family> {
    let params = FamilyParams::from_n(n)?;
    let mut graph = build_g_prime_t(params.t)?;
    let hosts = s_names(params.t, params.level())?;
    // Orders are fixed on G'_t; insertion keeps edge ids, so they stay valid.
    let orders: Vec<[EdgeId; 3]> = hosts
        .iter()
        .map(|h| insertion_order(&graph, params.t, h))
        .collect::<Result<_>>()?;
    let mut triangles = Vec::with_capacity(hosts.len());
    for (host, order) in hosts.iter().zip(orders) {
        let v = graph.vertex_by_label(host)?;
        let (next, tri) = triangle_insert(&graph, v, Some(order))?;
        graph = next;
        triangles.push(tri);
    }
    Ok(Family {
        graph,
        params,
        triangles,
    })
}

/// Triangle insertion at a named vertex of a family member using the same
/// corner-naming rules as [`build_family`].
pub fn family_insert(family: &Family, host: &str) -> Result<(MultiGraph, TriangleLabels)> {
    let order = insertion_order(&family.graph, family.params.t, host)?;
    let v = family.vertex(host)?;
    triangle_insert(&family.graph, v, Some(order))
}

/// `G_0`: `W_5` with triangles inserted at four rim vertices `r_0 .. r_3`.
pub fn build_g0() -> Result<MultiGraph> {
    let mut g = wheel(5)?;
    for i in 0..4 {
        let v = g.vertex_by_label(&format!("r_{i}"))?;
        g = triangle_insert(&g, v, None)?.0;
    }
    Ok(g)
}

/// The unique edge joining two named vertices.
pub fn edge_by_labels(g: &MultiGraph, a: &str, b: &str) -> Result<EdgeId> {
    let es = g.edges_between(g.vertex_by_label(a)?, g.vertex_by_label(b)?)?;
    match es.as_slice() {
        [e] => Ok(*e),
        _ => Err(Error::Precondition(format!(
            "expected exactly one edge {a}{b}, found {}",
            es.len()
        ))),
    }
}

/// Resolves named vertex pairs to edge ids.
pub fn edges_by_labels<S: AsRef<str>>(
    g: &MultiGraph,
    pairs: &[(S, S)],
) -> Result<BTreeSet<EdgeId>> {
    pairs
        .iter()
        .map(|(a, b)| edge_by_labels(g, a.as_ref(), b.as_ref()))
        .collect()
}

/// Named pairs of `M_t`: `M_0` on the layer-0 triangles plus
/// `x_s^4 z_s^4, y_s^4 u_s^3, x_s^2 z_s^2, y_s^2 u_s^1` for `s = 1..=t`.
pub fn canonical_matching_pairs(t: usize) -> Vec<(String, String)> {
    let p = |a: &str, b: &str| (a.to_string(), b.to_string());
    let mut out = vec![
        p("x_0^1", "y_0^1"),
        p("x_0^2", "z_0^2"),
        p("z_0^1", "y_0^2"),
        p("x_0^3", "y_0^3"),
        p("x_0^4", "z_0^4"),
        p("z_0^3", "y_0^4"),
    ];
    for s in 1..=t {
        out.push((format!("x_{s}^4"), format!("z_{s}^4")));
        out.push((format!("y_{s}^4"), format!("u_{s}^3")));
        out.push((format!("x_{s}^2"), format!("z_{s}^2")));
        out.push((format!("y_{s}^2"), format!("u_{s}^1")));
    }
    out
}

/// `M_t` as edge ids of `family`. Only defined when `i = 6`, i.e. every
/// vertex of `S` except `u` carries a triangle.
pub fn canonical_matching(family: &Family) -> Result<BTreeSet<EdgeId>> {
    if family.params.i != 6 {
        return Err(Error::InvalidParameter(format!(
            "M_t is defined on members with i = 6, got i = {} (n = {})",
            family.params.i, family.params.n
        )));
    }
    edges_by_labels(&family.graph, &canonical_matching_pairs(family.params.t))
}

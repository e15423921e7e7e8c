//! Shared corpus and deliberately naive reference implementations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use brickcheck::constructions::{
    complete_bipartite, complete_graph, cycle, path, petersen, prism, wheel,
};
use brickcheck::{EdgeId, MultiGraph, VertexId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every perfect matching, found by testing all `n/2`-subsets of edges.
pub fn naive_perfect_matchings(g: &MultiGraph) -> Vec<BTreeSet<EdgeId>> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Vec::new();
    }
    let edges: Vec<(EdgeId, VertexId, VertexId)> = g.edges().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    subsets(&edges, 0, n / 2, &mut chosen, &mut out);
    out
}

fn subsets(
    edges: &[(EdgeId, VertexId, VertexId)],
    from: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<BTreeSet<EdgeId>>,
) {
    if chosen.len() == k {
        let mut seen = BTreeSet::new();
        for &i in chosen.iter() {
            let (_, a, b) = edges[i];
            if !seen.insert(a) || !seen.insert(b) {
                return;
            }
        }
        out.push(chosen.iter().map(|&i| edges[i].0).collect());
        return;
    }
    for i in from..edges.len() {
        if edges.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        subsets(edges, i + 1, k, chosen, out);
        chosen.pop();
    }
}

/// Vertex connectivity by trying every vertex subset in order of size.
pub fn naive_connectivity(g: &MultiGraph) -> usize {
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    for k in 0..n.saturating_sub(1) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let gone: BTreeSet<VertexId> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            if !g.delete_vertices(&gone).unwrap().is_connected() {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

/// Isomorphism by trying every bijection (tiny graphs only).
pub fn naive_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let gv: Vec<VertexId> = g.vertices().collect();
    let hv: Vec<VertexId> = h.vertices().collect();
    let mut perm: Vec<usize> = (0..hv.len()).collect();
    loop {
        let ok = (0..gv.len()).all(|i| {
            (i..gv.len()).all(|j| {
                g.multiplicity(gv[i], gv[j]).unwrap()
                    == h.multiplicity(hv[perm[i]], hv[perm[j]]).unwrap()
            })
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Connected simple cubic graph on `n` vertices from the pairing model,
/// retrying until the pairing is simple and connected.
pub fn random_cubic(n: usize, seed: u64) -> MultiGraph {
    assert!(n.is_multiple_of(2) && n >= 4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        let distinct: BTreeSet<_> = pairs.iter().collect();
        if pairs.iter().any(|(a, b)| a == b) || distinct.len() != pairs.len() {
            continue;
        }
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex(None).unwrap()).collect();
        for (a, b) in pairs {
            g.add_edge(vs[a], vs[b]).unwrap();
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Rebuilds `g` with vertices inserted in a shuffled order.
pub fn shuffled(g: &MultiGraph, seed: u64) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.shuffle(&mut rng);
    let mut out = MultiGraph::new();
    let mut map = std::collections::BTreeMap::new();
    for v in order {
        map.insert(v, out.add_vertex(None).unwrap());
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(&mut rng);
    for (_, a, b) in edges {
        out.add_edge(map[&a], map[&b]).unwrap();
    }
    out
}

pub fn cube() -> MultiGraph {
    let mut g = MultiGraph::new();
    let vs: Vec<VertexId> = (0..8).map(|_| g.add_vertex(None).unwrap()).collect();
    for a in 0..8usize {
        for bit in [1, 2, 4] {
            let b = a ^ bit;
            if a < b {
                g.add_edge(vs[a], vs[b]).unwrap();
            }
        }
    }
    g
}

/// Named graphs on at most 12 vertices.
pub fn corpus() -> Vec<(String, MultiGraph)> {
    let mut out: Vec<(String, MultiGraph)> = vec![
        ("K4".into(), complete_graph(4)),
        ("K6".into(), complete_graph(6)),
        ("prism".into(), prism()),
        ("C6".into(), cycle(6).unwrap()),
        ("C8".into(), cycle(8).unwrap()),
        ("P4".into(), path(4)),
        ("K33".into(), complete_bipartite(3, 3)),
        ("K24".into(), complete_bipartite(2, 4)),
        ("Q3".into(), cube()),
        ("Petersen".into(), petersen()),
    ];
    for k in [3, 4, 5, 6, 7, 9, 11] {
        out.push((format!("W{k}"), wheel(k).unwrap()));
    }
    for (i, n) in [8, 8, 10, 10, 12, 12].into_iter().enumerate() {
        out.push((format!("cubic{n}#{i}"), random_cubic(n, 1000 + i as u64)));
    }
    out
}

use std::collections::HashMap;

use super::{MultiGraph, VertexMap};
use crate::error::{Error, Result};

/// Default vertex cap for [`is_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 24;

/// Multigraph isomorphism (edge multiplicities preserved) for graphs of at
/// most [`DEFAULT_ISO_LIMIT`] vertices. Returns a witness map from `g` to `h`.
pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Result<Option<VertexMap>> {
    is_isomorphic_within(g, h, DEFAULT_ISO_LIMIT)
}

/// As [`is_isomorphic`] with an explicit vertex cap.
pub fn is_isomorphic_within(
    g: &MultiGraph,
    h: &MultiGraph,
    limit: usize,
) -> Result<Option<VertexMap>> {
    let n = g.vertex_count().max(h.vertex_count());
    if n > limit {
        return Err(Error::Scale {
            what: "isomorphism search",
            limit,
            actual: n,
        });
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let a = Side::new(g);
    let b = Side::new(h);
    let Some((ca, cb)) = refine(&a, &b) else {
        return Ok(None);
    };
    let order = search_order(&a, &ca);
    let mut state = Search {
        a: &a,
        b: &b,
        ca: &ca,
        cb: &cb,
        order: &order,
        map: vec![usize::MAX; a.len()],
        used: vec![false; b.len()],
    };
    if !state.extend(0) {
        return Ok(None);
    }
    Ok(Some(
        state
            .map
            .iter()
            .enumerate()
            .map(|(i, &j)| (a.ids[i], b.ids[j]))
            .collect(),
    ))
}

struct Side {
    ids: Vec<super::VertexId>,
    mult: Vec<Vec<u32>>,
    /// `(neighbour, multiplicity)` for distinct neighbours.
    adj: Vec<Vec<(usize, u32)>>,
}

impl Side {
    fn new(g: &MultiGraph) -> Self {
        let d = g.dense();
        let n = d.len();
        let mut mult = vec![vec![0u32; n]; n];
        for &(x, y, _) in &d.edges {
            mult[x][y] += 1;
            mult[y][x] += 1;
        }
        let adj = (0..n)
            .map(|v| d.simple_adj[v].iter().map(|&w| (w, mult[v][w])).collect())
            .collect();
        Side {
            ids: d.ids,
            mult,
            adj,
        }
    }

    fn len(&self) -> usize {
        self.ids.len()
    }
}

/// Joint colour refinement. Returns `None` as soon as the colour histograms
/// of the two graphs differ.
fn refine(a: &Side, b: &Side) -> Option<(Vec<usize>, Vec<usize>)> {
    let degree = |s: &Side, v: usize| s.adj[v].iter().map(|&(_, m)| m).sum::<u32>() as usize;
    let mut ca: Vec<usize> = (0..a.len()).map(|v| degree(a, v)).collect();
    let mut cb: Vec<usize> = (0..b.len()).map(|v| degree(b, v)).collect();
    let mut classes = 0;
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let mut names: HashMap<(usize, Vec<(usize, u32)>), usize> = HashMap::new();
        let mut recolour = |s: &Side, c: &[usize]| -> Vec<usize> {
            (0..s.len())
                .map(|v| {
                    let mut sig: Vec<(usize, u32)> =
                        s.adj[v].iter().map(|&(w, m)| (c[w], m)).collect();
                    sig.sort_unstable();
                    let next = names.len();
                    *names.entry((c[v], sig)).or_insert(next)
                })
                .collect()
        };
        let na = recolour(a, &ca);
        let nb = recolour(b, &cb);
        ca = na;
        cb = nb;
        if names.len() == classes {
            if histogram(&ca) != histogram(&cb) {
                return None;
            }
            return Some((ca, cb));
        }
        classes = names.len();
    }
}

fn histogram(colours: &[usize]) -> Vec<(usize, usize)> {
    let mut h: HashMap<usize, usize> = HashMap::new();
    for &c in colours {
        *h.entry(c).or_default() += 1;
    }
    let mut v: Vec<_> = h.into_iter().collect();
    v.sort_unstable();
    v
}

/// Rarest colour first, then repeatedly the vertex with most already-placed
/// neighbours, so candidates are constrained early.
fn search_order(a: &Side, colours: &[usize]) -> Vec<usize> {
    let n = a.len();
    let hist: HashMap<usize, usize> = histogram(colours).into_iter().collect();
    let rarity = |v: usize| hist[&colours[v]];
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), rarity(v), v))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
        for &(w, _) in &a.adj[next] {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    a: &'a Side,
    b: &'a Side,
    ca: &'a [usize],
    cb: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // Restrict to images of an already-placed neighbour when possible.
        let anchor = self.a.adj[v]
            .iter()
            .find(|&&(w, _)| self.map[w] != usize::MAX)
            .map(|&(w, _)| self.map[w]);
        let candidates: Vec<usize> = match anchor {
            Some(img) => self.b.adj[img].iter().map(|&(x, _)| x).collect(),
            None => (0..self.b.len()).collect(),
        };
        for c in candidates {
            if self.used[c] || self.cb[c] != self.ca[v] || !self.consistent(depth, v, c) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[c] = false;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, c: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&w| self.a.mult[v][w] == self.b.mult[c][self.map[w]])
    }
}

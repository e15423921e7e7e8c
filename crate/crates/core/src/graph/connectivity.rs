use std::collections::VecDeque;

use super::MultiGraph;
use crate::error::{Error, Result};

/// Unit-capacity residual network over split vertices.
struct FlowNet {
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, a: usize, b: usize, cap: u32) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(cap);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Augments along BFS paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &arc in &self.adj[v] {
                    let w = self.to[arc];
                    if self.cap[arc] > 0 && w != source && via[w] == usize::MAX {
                        via[w] = arc;
                        if w == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = sink;
            while v != source {
                let arc = via[v];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                v = self.to[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally disjoint `s`–`t` paths, capped at `limit`.
fn local_connectivity(adj: &[Vec<usize>], s: usize, t: usize, limit: u32) -> u32 {
    let n = adj.len();
    let mut net = FlowNet::new(2 * n);
    for (v, nbrs) in adj.iter().enumerate() {
        let through = if v == s || v == t { limit } else { 1 };
        net.arc(2 * v, 2 * v + 1, through);
        for &w in nbrs {
            net.arc(2 * v + 1, 2 * w, limit);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// True iff removing fewer than `k` vertices never disconnects the underlying
/// simple graph. Complete graphs `K_m` count as `(m-1)`-connected.
///
/// Uses Menger's theorem: the connectivity of a non-complete graph is the
/// minimum local connectivity over non-adjacent pairs.
pub fn vertex_connectivity_at_least(g: &MultiGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "connectivity order must be positive".into(),
        ));
    }
    let n = g.vertex_count();
    if n <= k {
        return Err(Error::Precondition(format!(
            "{k}-connectivity needs more than {k} vertices, graph has {n}"
        )));
    }
    let dense = g.dense();
    let adj = &dense.simple_adj;
    let limit = k as u32;
    if adj.iter().any(|nbrs| nbrs.len() < k) {
        return Ok(false);
    }
    for s in 0..n {
        for t in s + 1..n {
            if adj[s].binary_search(&t).is_ok() {
                continue;
            }
            if local_connectivity(adj, s, t, limit) < limit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn cycle(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex(None).unwrap()).collect();
        for i in 0..n {
            g.add_edge(vs[i], vs[(i + 1) % n]).unwrap();
        }
        g
    }

    fn complete(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex(None).unwrap()).collect();
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(vs[i], vs[j]).unwrap();
            }
        }
        g
    }

    #[test]
    fn small_cases() {
        assert!(vertex_connectivity_at_least(&complete(4), 3).unwrap());
        assert!(!vertex_connectivity_at_least(&cycle(6), 3).unwrap());
        assert!(vertex_connectivity_at_least(&cycle(6), 2).unwrap());
        assert!(vertex_connectivity_at_least(&complete(5), 4).unwrap());
    }

    #[test]
    fn order_must_exceed_k() {
        assert!(matches!(
            vertex_connectivity_at_least(&complete(3), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn parallel_edges_do_not_help() {
        let mut g = cycle(6);
        let vs: Vec<_> = g.vertices().collect();
        g.add_edge(vs[0], vs[1]).unwrap();
        g.add_edge(vs[0], vs[1]).unwrap();
        assert!(!vertex_connectivity_at_least(&g, 3).unwrap());
    }

    #[test]
    fn disconnected() {
        let mut g = complete(4);
        g.add_vertex(None).unwrap();
        assert!(!vertex_connectivity_at_least(&g, 1).unwrap());
    }
}

//! Edmonds' blossom algorithm (cardinality version) on a simple adjacency
//! list restricted to an `active` vertex mask.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    active: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>], active: &'a [bool]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if !self.active[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.adj.len();
        // Greedy start.
        for v in 0..n {
            if !self.active[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v]
                .iter()
                .find(|&&w| self.active[w] && self.mate[w] == NONE)
            {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for v in 0..n {
            if self.active[v] && self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Maximum matching among active vertices as a mate array (`usize::MAX` for
/// unmatched or inactive vertices).
pub(crate) fn maximum_matching(adj: &[Vec<usize>], active: &[bool]) -> Vec<usize> {
    Blossom::new(adj, active).run()
}

/// Whether the subgraph induced by the active vertices has a perfect matching.
pub(crate) fn has_perfect_matching(adj: &[Vec<usize>], active: &[bool]) -> bool {
    let live = active.iter().filter(|&&a| a).count();
    if live % 2 == 1 {
        return false;
    }
    if live == 0 {
        return true;
    }
    let isolated = (0..adj.len()).any(|v| active[v] && !adj[v].iter().any(|&w| active[w]));
    if isolated {
        return false;
    }
    let mate = maximum_matching(adj, active);
    (0..adj.len()).all(|v| !active[v] || mate[v] != NONE)
}

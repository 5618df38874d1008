//! Maximum cardinality matching in general 2-graphs: Edmonds' blossom
//! algorithm with base contraction, O(V³).
//!
//! Works on any 2-uniform hypergraph; the classes may induce odd cycles
//! across parts (e.g. 3-partite 2-graphs), which is exactly what rules out
//! the bipartite augmenting-path routine.

use std::collections::VecDeque;

use super::graph::FlatGraph;
use super::matching::Matching;
use crate::error::Result;
use crate::hypergraph::KPartiteHypergraph;

const NONE: usize = usize::MAX;

pub(crate) struct BlossomState {
    n: usize,
    adj: Vec<Vec<usize>>,
    pub mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
}

impl BlossomState {
    pub fn new(n: usize, adj: Vec<Vec<usize>>) -> Self {
        let mut s = BlossomState {
            n,
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
        };
        // Deterministic greedy seed matching.
        for v in 0..s.n {
            if s.mate[v] == NONE {
                for i in 0..s.adj[v].len() {
                    let u = s.adj[v][i];
                    if s.mate[u] == NONE {
                        s.mate[v] = u;
                        s.mate[u] = v;
                        break;
                    }
                }
            }
        }
        s
    }

    fn lca(&mut self, a: usize, b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        let mut cur = a;
        loop {
            cur = self.base[cur];
            self.on_path[cur] = true;
            if self.mate[cur] == NONE {
                break;
            }
            cur = self.parent[self.mate[cur]];
        }
        let mut cur = b;
        loop {
            cur = self.base[cur];
            if self.on_path[cur] {
                return cur;
            }
            cur = self.parent[self.mate[cur]];
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

    /// BFS for an augmenting path from `root`; returns its exposed endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        self.in_queue.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..self.n {
            self.base[i] = i;
        }
        self.in_queue[root] = true;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom to its base.
                    let cur_base = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    if !self.in_queue[m] {
                        self.in_queue[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
        NONE
    }

    pub fn solve(&mut self) -> usize {
        for v in 0..self.n {
            if self.mate[v] == NONE {
                let mut u = self.find_path(v);
                while u != NONE {
                    let pv = self.parent[u];
                    let ppv = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = ppv;
                }
            }
        }
        (0..self.n).filter(|&v| self.mate[v] != NONE).count() / 2
    }
}

/// Maximum matching of an arbitrary 2-graph.
pub fn blossom_max_matching(h: &KPartiteHypergraph) -> Result<(usize, Matching)> {
    let g = FlatGraph::from_hypergraph(h)?;
    let mut state = BlossomState::new(g.n, g.adj.clone());
    let size = state.solve();
    let mut edges = Vec::new();
    for v in 0..g.n {
        let u = state.mate[v];
        if u != NONE && v < u {
            edges.push(g.edge(v, u));
        }
    }
    Ok((size, Matching::new(h, edges)?))
}

/// Matching number of a flat graph given by adjacency lists (used internally
/// by the Tutte-Berge machinery, where vertices are already flat).
pub(crate) fn blossom_size_flat(n: usize, adj: Vec<Vec<usize>>) -> usize {
    BlossomState::new(n, adj).solve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete;
    use crate::hypergraph::HypergraphBuilder;

    /// General graph on singleton classes, so any edge set is expressible.
    fn general(n: usize, edges: &[(usize, usize)]) -> KPartiteHypergraph {
        let mut b = HypergraphBuilder::new(vec![1; n], 2).unwrap();
        for &(u, v) in edges {
            b.add_edge_from(&[(u, 0), (v, 0)]).unwrap();
        }
        b.build()
    }

    #[test]
    fn triangle_has_matching_one() {
        let g = general(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(blossom_max_matching(&g).unwrap().0, 1);
    }

    #[test]
    fn five_cycle_has_matching_two() {
        let g = general(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(blossom_max_matching(&g).unwrap().0, 2);
    }

    #[test]
    fn complete_tripartite_pairs() {
        let g = complete(&[2, 2, 2], 2).unwrap();
        assert_eq!(blossom_max_matching(&g).unwrap().0, 3);
    }

    #[test]
    fn petersen_like_blossom_case() {
        // Two triangles joined by a path force blossom contractions.
        let g = general(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)]);
        let brute = brute_force(&g);
        assert_eq!(blossom_max_matching(&g).unwrap().0, brute);
    }

    fn brute_force(h: &KPartiteHypergraph) -> usize {
        fn go(h: &KPartiteHypergraph, start: usize, chosen: &mut Vec<usize>) -> usize {
            let mut best = chosen.len();
            for id in start..h.edge_count() {
                if chosen.iter().all(|&c| h.edge(c).is_disjoint_from(h.edge(id))) {
                    chosen.push(id);
                    best = best.max(go(h, id + 1, chosen));
                    chosen.pop();
                }
            }
            best
        }
        go(h, 0, &mut Vec::new())
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use rand::Rng;
        let mut rng = crate::rng::seeded_rng(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = general(n, &edges);
            assert_eq!(blossom_max_matching(&g).unwrap().0, brute_force(&g));
        }
    }
}

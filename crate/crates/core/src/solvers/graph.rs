//! Flat adjacency view of a 2-uniform hypergraph, shared by the König,
//! blossom and Tutte-Berge routines.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexId};

pub(crate) struct FlatGraph {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    vertex_of: Vec<VertexId>,
}

impl FlatGraph {
    pub fn from_hypergraph(h: &KPartiteHypergraph) -> Result<Self> {
        if h.uniformity() != 2 {
            return Err(Error::input(format!(
                "expected a 2-graph, got uniformity {}",
                h.uniformity()
            )));
        }
        let n = h.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for e in h.edges() {
            let a = h.flat_index(e.vertices()[0]);
            let b = h.flat_index(e.vertices()[1]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let vertex_of = h.vertices().collect();
        Ok(FlatGraph { n, adj, vertex_of })
    }

    pub fn vertex(&self, flat: usize) -> VertexId {
        self.vertex_of[flat]
    }

    pub fn edge(&self, a: usize, b: usize) -> Edge {
        Edge::new(vec![self.vertex_of[a], self.vertex_of[b]])
            .expect("flat pairs come from legal edges")
    }

    /// Pairs `(a, b)` with `a < b`, ascending.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for &b in &self.adj[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

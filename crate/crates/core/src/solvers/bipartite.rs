//! Bipartite maximum matching (augmenting paths) and the König minimum
//! vertex cover read off the final alternating forest.

use super::graph::FlatGraph;
use super::matching::Matching;
use crate::error::{Error, Result};
use crate::hypergraph::{KPartiteHypergraph, VertexSet};

const NONE: usize = usize::MAX;

fn require_bipartite(h: &KPartiteHypergraph) -> Result<()> {
    if h.class_count() != 2 || h.uniformity() != 2 {
        return Err(Error::input(format!(
            "expected a bipartite 2-graph (2 classes, uniformity 2), got {} classes, uniformity {}",
            h.class_count(),
            h.uniformity()
        )));
    }
    Ok(())
}

/// Left-to-right matching over the flat graph. `left` holds the flat ids of
/// class-0 vertices.
fn kuhn(g: &FlatGraph, left: &[usize]) -> Vec<usize> {
    let mut mate = vec![NONE; g.n];
    for &u in left {
        let mut seen = vec![false; g.n];
        augment(g, u, &mut seen, &mut mate);
    }
    mate
}

fn augment(g: &FlatGraph, u: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
    for &v in &g.adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if mate[v] == NONE || augment(g, mate[v], seen, mate) {
            mate[v] = u;
            mate[u] = v;
            return true;
        }
    }
    false
}

/// Maximum matching of a bipartite 2-graph.
pub fn bipartite_max_matching(h: &KPartiteHypergraph) -> Result<(usize, Matching)> {
    require_bipartite(h)?;
    let g = FlatGraph::from_hypergraph(h)?;
    let left: Vec<usize> = (0..h.class_size(0)).collect();
    let mate = kuhn(&g, &left);
    let mut edges = Vec::new();
    for &u in &left {
        if mate[u] != NONE {
            edges.push(g.edge(u, mate[u]));
        }
    }
    let size = edges.len();
    Ok((size, Matching::new(h, edges)?))
}

/// Minimum vertex cover of a bipartite 2-graph via König's construction:
/// alternate from the unmatched left vertices, then take the unreached left
/// side plus the reached right side.
pub fn konig_min_cover(h: &KPartiteHypergraph) -> Result<VertexSet> {
    require_bipartite(h)?;
    let g = FlatGraph::from_hypergraph(h)?;
    let n_left = h.class_size(0);
    let left: Vec<usize> = (0..n_left).collect();
    let mate = kuhn(&g, &left);

    let mut reached = vec![false; g.n];
    let mut stack: Vec<usize> =
        left.iter().copied().filter(|&u| mate[u] == NONE).collect();
    for &u in &stack {
        reached[u] = true;
    }
    while let Some(u) = stack.pop() {
        // u is a left vertex; move along non-matching edges, then back along
        // matching edges.
        for &v in &g.adj[u] {
            if reached[v] || mate[u] == v {
                continue;
            }
            reached[v] = true;
            if mate[v] != NONE && !reached[mate[v]] {
                reached[mate[v]] = true;
                stack.push(mate[v]);
            }
        }
    }

    let mut cover = VertexSet::new();
    for u in 0..g.n {
        let is_left = u < n_left;
        if (is_left && !reached[u] && mate[u] != NONE) || (!is_left && reached[u]) {
            cover.insert(g.vertex(u));
        }
    }
    let matching_size = left.iter().filter(|&&u| mate[u] != NONE).count();
    debug_assert_eq!(cover.len(), matching_size, "König equality");
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::HypergraphBuilder;

    fn bipartite(n1: usize, n2: usize, edges: &[((usize, usize), (usize, usize))]) -> KPartiteHypergraph {
        let mut b = HypergraphBuilder::new(vec![n1, n2], 2).unwrap();
        for &(u, v) in edges {
            b.add_edge_from(&[u, v]).unwrap();
        }
        b.build()
    }

    #[test]
    fn path_cover_is_the_middle_vertex() {
        // a1 - b1 - a2
        let g = bipartite(2, 1, &[((0, 0), (1, 0)), ((0, 1), (1, 0))]);
        let cover = konig_min_cover(&g).unwrap();
        assert_eq!(cover.len(), 1);
        assert!(cover.contains(crate::hypergraph::VertexId::new(1, 0)));
    }

    #[test]
    fn perfect_matching_cover_size() {
        let g = bipartite(3, 3, &[((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))]);
        assert_eq!(bipartite_max_matching(&g).unwrap().0, 3);
        assert_eq!(konig_min_cover(&g).unwrap().len(), 3);
    }

    #[test]
    fn edgeless_cover_is_empty() {
        let g = bipartite(2, 2, &[]);
        assert!(konig_min_cover(&g).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_bipartite_shapes() {
        let tri = crate::constructions::complete(&[1, 1, 1], 2).unwrap();
        assert!(konig_min_cover(&tri).is_err());
        assert!(bipartite_max_matching(&tri).is_err());
    }
}

//! Tutte-Berge deficiency certificates: a vertex set `S` maximizing
//! `c_odd(G−S) − |S|`, tied to the matching number by
//! `ν(G) = (|V| − deficiency) / 2`.

use super::blossom::blossom_size_flat;
use super::graph::FlatGraph;
use crate::error::{Error, Result};
use crate::hypergraph::{KPartiteHypergraph, VertexSet};

/// Exhaustive subset search is used up to this many vertices; beyond it the
/// certificate comes from the Gallai-Edmonds decomposition.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct TutteBergeCertificate {
    pub s: VertexSet,
    pub odd_components: usize,
    pub deficiency: i64,
}

impl TutteBergeCertificate {
    /// Matching number implied by the certificate.
    pub fn matching_number(&self, vertex_count: usize) -> usize {
        ((vertex_count as i64 - self.deficiency) / 2) as usize
    }
}

/// Number of odd components of `G − removed`.
fn count_odd_components(g: &FlatGraph, removed: &[bool]) -> usize {
    let mut seen = vec![false; g.n];
    let mut odd = 0usize;
    for start in 0..g.n {
        if removed[start] || seen[start] {
            continue;
        }
        let mut size = 0usize;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in &g.adj[v] {
                if !removed[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if size % 2 == 1 {
            odd += 1;
        }
    }
    odd
}

fn certificate_exhaustive(g: &FlatGraph) -> (Vec<usize>, usize, i64) {
    let mut best_mask = 0u32;
    let mut best_odd = 0usize;
    let mut best_def = i64::MIN;
    let mut removed = vec![false; g.n];
    for mask in 0u32..(1u32 << g.n) {
        for (i, r) in removed.iter_mut().enumerate() {
            *r = mask >> i & 1 == 1;
        }
        let odd = count_odd_components(g, &removed);
        let def = odd as i64 - mask.count_ones() as i64;
        if def > best_def {
            best_def = def;
            best_odd = odd;
            best_mask = mask;
        }
    }
    let s = (0..g.n).filter(|&i| best_mask >> i & 1 == 1).collect();
    (s, best_odd, best_def)
}

fn adjacency_without(g: &FlatGraph, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n];
    for v in 0..g.n {
        if removed[v] {
            continue;
        }
        adj[v] = g.adj[v].iter().copied().filter(|&u| !removed[u]).collect();
    }
    adj
}

/// Gallai-Edmonds certificate: `D` = vertices missed by some maximum
/// matching, `S = N(D) \ D`.
fn certificate_gallai_edmonds(g: &FlatGraph) -> (Vec<usize>, usize, i64) {
    let nu = blossom_size_flat(g.n, g.adj.clone());
    let mut in_d = vec![false; g.n];
    let mut removed = vec![false; g.n];
    for v in 0..g.n {
        removed[v] = true;
        let nu_minus = blossom_size_flat(g.n, adjacency_without(g, &removed));
        removed[v] = false;
        if nu_minus == nu {
            in_d[v] = true;
        }
    }
    let mut in_s = vec![false; g.n];
    for v in 0..g.n {
        if in_d[v] {
            for &u in &g.adj[v] {
                if !in_d[u] {
                    in_s[u] = true;
                }
            }
        }
    }
    let odd = count_odd_components(g, &in_s);
    let s: Vec<usize> = (0..g.n).filter(|&v| in_s[v]).collect();
    let def = odd as i64 - s.len() as i64;
    (s, odd, def)
}

/// Certificate `S` maximizing `c_odd(G−S) − |S|`. Exhaustive (first maximizer
/// in ascending subset order) up to [`EXHAUSTIVE_VERTEX_LIMIT`] vertices,
/// Gallai-Edmonds beyond that.
pub fn tutte_berge_certificate(h: &KPartiteHypergraph) -> Result<TutteBergeCertificate> {
    let g = FlatGraph::from_hypergraph(h)?;
    if g.n >= usize::BITS as usize {
        return Err(Error::resource(format!("{} vertices is too large for a certificate", g.n)));
    }
    let (s_flat, odd, def) = if g.n <= EXHAUSTIVE_VERTEX_LIMIT {
        certificate_exhaustive(&g)
    } else {
        certificate_gallai_edmonds(&g)
    };
    let nu = blossom_size_flat(g.n, g.adj.clone());
    debug_assert_eq!((g.n as i64 - def) / 2, nu as i64, "Tutte-Berge consistency");
    let s = s_flat.into_iter().map(|i| g.vertex(i)).collect();
    Ok(TutteBergeCertificate { s, odd_components: odd, deficiency: def })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::HypergraphBuilder;

    fn general(n: usize, edges: &[(usize, usize)]) -> KPartiteHypergraph {
        let mut b = HypergraphBuilder::new(vec![1; n], 2).unwrap();
        for &(u, v) in edges {
            b.add_edge_from(&[(u, 0), (v, 0)]).unwrap();
        }
        b.build()
    }

    #[test]
    fn star_certificate() {
        // K_{1,3}: removing the center leaves three odd singletons.
        let g = general(4, &[(0, 1), (0, 2), (0, 3)]);
        let cert = tutte_berge_certificate(&g).unwrap();
        assert_eq!(cert.deficiency, 2);
        assert_eq!(cert.s.len(), 1);
        assert_eq!(cert.matching_number(4), 1);
    }

    #[test]
    fn even_path_has_no_deficiency() {
        let g = general(4, &[(0, 1), (1, 2), (2, 3)]);
        let cert = tutte_berge_certificate(&g).unwrap();
        assert_eq!(cert.deficiency, 0);
        assert_eq!(cert.matching_number(4), 2);
    }

    #[test]
    fn triangle_plus_isolated_vertex() {
        let g = general(4, &[(0, 1), (1, 2), (0, 2)]);
        let cert = tutte_berge_certificate(&g).unwrap();
        assert_eq!(cert.deficiency, 2);
        assert!(cert.s.is_empty(), "S = ∅ exposes two odd components");
        assert_eq!(cert.odd_components, 2);
    }

    #[test]
    fn gallai_edmonds_agrees_with_exhaustive() {
        use rand::Rng;
        let mut rng = crate::rng::seeded_rng(11);
        for _ in 0..100 {
            let n = rng.gen_range(2..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let h = general(n, &edges);
            let g = FlatGraph::from_hypergraph(&h).unwrap();
            let (_, _, def_ex) = certificate_exhaustive(&g);
            let (_, _, def_ge) = certificate_gallai_edmonds(&g);
            assert_eq!(def_ex, def_ge, "deficiency mismatch on {edges:?}");
        }
    }
}

//! Branch-and-bound maximum matching and perfect-matching search for
//! k-partite hypergraphs.
//!
//! Both searches are deterministic: edges are branched in canonical
//! (lexicographic) order, so the witness returned for a given hypergraph is
//! always the same — the lexicographically least optimum.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexSet};

/// A set of pairwise disjoint edges of a host hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates membership in `host` and pairwise disjointness.
    pub fn new(host: &KPartiteHypergraph, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort();
        edges.dedup();
        for e in &edges {
            if !host.contains_edge(e) {
                return Err(Error::input(format!("edge {e} is not in the host hypergraph")));
            }
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if !edges[i].is_disjoint_from(&edges[j]) {
                    let shared = edges[i]
                        .vertices()
                        .iter()
                        .find(|v| edges[j].contains(**v))
                        .expect("non-disjoint edges share a vertex");
                    return Err(Error::input(format!(
                        "edges {} and {} share vertex {shared}",
                        edges[i], edges[j]
                    )));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub(crate) fn from_edge_ids(host: &KPartiteHypergraph, ids: &[usize]) -> Self {
        let mut edges: Vec<Edge> = ids.iter().map(|&id| host.edge(id).clone()).collect();
        edges.sort();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|e| e.vertices().iter().copied()).collect()
    }

    pub fn covers(&self, v: crate::hypergraph::VertexId) -> bool {
        self.edges.iter().any(|e| e.contains(v))
    }

    pub fn is_perfect_in(&self, host: &KPartiteHypergraph) -> bool {
        self.size() * host.uniformity() == host.vertex_count()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Node budget for the exact searches. `None` means unbounded. Node counts
/// are deterministic, unlike wall-clock deadlines, so budgeted runs are
/// reproducible.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget { max_nodes: None }
    }

    pub fn nodes(max: u64) -> Self {
        SearchBudget { max_nodes: Some(max) }
    }
}

struct PackSearch<'a> {
    h: &'a KPartiteHypergraph,
    used: Vec<bool>,
    free_per_class: Vec<usize>,
    free_total: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
}

impl<'a> PackSearch<'a> {
    fn new(h: &'a KPartiteHypergraph, budget: SearchBudget) -> Self {
        PackSearch {
            h,
            used: vec![false; h.vertex_count()],
            free_per_class: h.class_sizes().to_vec(),
            free_total: h.vertex_count(),
            current: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes > cap {
                return Err(Error::resource(format!("search budget of {cap} nodes exhausted")));
            }
        }
        Ok(())
    }

    fn edge_free(&self, id: usize) -> bool {
        self.h.edge(id).vertices().iter().all(|&v| !self.used[self.h.flat_index(v)])
    }

    fn place(&mut self, id: usize) {
        for &v in self.h.edge(id).vertices() {
            self.used[self.h.flat_index(v)] = true;
            self.free_per_class[v.class] -= 1;
        }
        self.free_total -= self.h.uniformity();
        self.current.push(id);
    }

    fn unplace(&mut self, id: usize) {
        for &v in self.h.edge(id).vertices() {
            self.used[self.h.flat_index(v)] = false;
            self.free_per_class[v.class] += 1;
        }
        self.free_total += self.h.uniformity();
        self.current.pop();
    }

    /// Cheap bounds on how many more disjoint edges can be added.
    fn cheap_bound(&self, active_count: usize) -> usize {
        let l = self.h.uniformity();
        let mut ub = (self.free_total / l).min(active_count);
        if l == self.h.class_count() {
            // Every edge takes one vertex from each class.
            ub = ub.min(self.free_per_class.iter().copied().min().unwrap_or(0));
        }
        ub
    }

    /// Maximum-matching search over edge ids `>= start`.
    fn search(&mut self, start: usize) -> Result<()> {
        self.tick()?;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let active: Vec<usize> =
            (start..self.h.edge_count()).filter(|&id| self.edge_free(id)).collect();
        let mut ub = self.cheap_bound(active.len());
        if self.current.len() + ub <= self.best.len() {
            return Ok(());
        }
        ub = ub.min(greedy_cover_bound(self.h, &active));
        if self.current.len() + ub <= self.best.len() {
            return Ok(());
        }
        for idx in 0..active.len() {
            let id = active[idx];
            if !self.edge_free(id) {
                continue;
            }
            self.place(id);
            self.search(id + 1)?;
            self.unplace(id);
        }
        Ok(())
    }
}

/// Size of a greedy vertex cover of the sub-hypergraph on `active` edge ids —
/// an upper bound on its matching number.
fn greedy_cover_bound(h: &KPartiteHypergraph, active: &[usize]) -> usize {
    let mut remaining: Vec<usize> = active.to_vec();
    let mut cover = 0usize;
    let mut counts = vec![0usize; h.vertex_count()];
    while !remaining.is_empty() {
        counts.iter_mut().for_each(|c| *c = 0);
        for &id in &remaining {
            for &v in h.edge(id).vertices() {
                counts[h.flat_index(v)] += 1;
            }
        }
        let mut best_flat = 0usize;
        for (i, &c) in counts.iter().enumerate() {
            if c > counts[best_flat] {
                best_flat = i;
            }
        }
        cover += 1;
        remaining.retain(|&id| {
            h.edge(id).vertices().iter().all(|&v| h.flat_index(v) != best_flat)
        });
    }
    cover
}

/// Maximum matching with an explicit node budget.
pub fn max_matching_budgeted(
    h: &KPartiteHypergraph,
    budget: SearchBudget,
) -> Result<(usize, Matching)> {
    let mut s = PackSearch::new(h, budget);
    s.search(0)?;
    let best = s.best.clone();
    Ok((best.len(), Matching::from_edge_ids(h, &best)))
}

/// Maximum matching; the witness is the lexicographically least one of
/// maximum size.
pub fn max_matching(h: &KPartiteHypergraph) -> (usize, Matching) {
    max_matching_budgeted(h, SearchBudget::unlimited()).expect("unbounded search cannot exhaust")
}

struct PerfectSearch<'a> {
    h: &'a KPartiteHypergraph,
    used: Vec<bool>,
    uncovered: usize,
    chosen: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
}

impl<'a> PerfectSearch<'a> {
    fn edge_free(&self, id: usize) -> bool {
        self.h.edge(id).vertices().iter().all(|&v| !self.used[self.h.flat_index(v)])
    }

    fn search(&mut self) -> Result<bool> {
        self.nodes += 1;
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes > cap {
                return Err(Error::resource(format!("search budget of {cap} nodes exhausted")));
            }
        }
        if self.uncovered == 0 {
            return Ok(true);
        }
        // Fail-first: the uncovered vertex with the fewest available edges.
        let mut pivot: Option<(usize, Vec<usize>)> = None;
        for v in self.h.vertices() {
            let fv = self.h.flat_index(v);
            if self.used[fv] {
                continue;
            }
            let avail: Vec<usize> = self
                .h
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&id| self.edge_free(id))
                .collect();
            if avail.is_empty() {
                return Ok(false); // v can never be covered in this branch
            }
            let better = match &pivot {
                None => true,
                Some((_, cur)) => avail.len() < cur.len(),
            };
            if better {
                pivot = Some((fv, avail));
            }
        }
        let (_, candidates) = pivot.expect("uncovered > 0 means some vertex is free");
        // Residual capacity must still allow a perfect completion.
        let need = self.uncovered / self.h.uniformity();
        if need > 1 {
            let active: Vec<usize> =
                (0..self.h.edge_count()).filter(|&id| self.edge_free(id)).collect();
            if greedy_cover_bound(self.h, &active) < need {
                return Ok(false);
            }
        }
        for id in candidates {
            if !self.edge_free(id) {
                continue;
            }
            for &v in self.h.edge(id).vertices() {
                self.used[self.h.flat_index(v)] = true;
            }
            self.uncovered -= self.h.uniformity();
            self.chosen.push(id);
            if self.search()? {
                return Ok(true);
            }
            self.chosen.pop();
            self.uncovered += self.h.uniformity();
            for &v in self.h.edge(id).vertices() {
                self.used[self.h.flat_index(v)] = false;
            }
        }
        Ok(false)
    }
}

/// Perfect-matching decision with witness, under a node budget.
pub fn has_perfect_matching_budgeted(
    h: &KPartiteHypergraph,
    budget: SearchBudget,
) -> Result<Option<Matching>> {
    // Counting obstructions first.
    if h.vertex_count() % h.uniformity() != 0 {
        return Ok(None);
    }
    if h.uniformity() == h.class_count() && !h.is_balanced() {
        return Ok(None);
    }
    let mut s = PerfectSearch {
        h,
        used: vec![false; h.vertex_count()],
        uncovered: h.vertex_count(),
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    if s.search()? {
        let chosen = s.chosen.clone();
        Ok(Some(Matching::from_edge_ids(h, &chosen)))
    } else {
        Ok(None)
    }
}

/// Perfect-matching decision with witness.
pub fn has_perfect_matching(h: &KPartiteHypergraph) -> Option<Matching> {
    has_perfect_matching_budgeted(h, SearchBudget::unlimited())
        .expect("unbounded search cannot exhaust")
}

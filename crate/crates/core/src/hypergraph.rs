//! Data model for k-partite l-uniform hypergraphs.
//!
//! Vertices live in `k` ordered classes; a set of vertices is *legal* when it
//! takes at most one vertex per class, and an edge is a legal set of exactly
//! `l` vertices. [`KPartiteHypergraph`] is immutable after construction and
//! keeps its edges in canonical sorted order plus per-vertex incidence lists,
//! so degree and neighborhood queries cost `O(deg)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// One vertex, identified by its class and its position within the class.
/// Both indices are 0-based internally; the text format and `Display` are
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub class: usize,
    pub pos: usize,
}

impl VertexId {
    pub fn new(class: usize, pos: usize) -> Self {
        VertexId { class, pos }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.class + 1, self.pos + 1)
    }
}

impl std::str::FromStr for VertexId {
    type Err = Error;

    /// Parses the 1-based `class:pos` token used by the text format.
    fn from_str(s: &str) -> Result<Self> {
        let (c, p) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("vertex token `{s}` is not of the form c:p")))?;
        let class: usize = c
            .parse()
            .map_err(|_| Error::input(format!("bad class index in `{s}`")))?;
        let pos: usize = p
            .parse()
            .map_err(|_| Error::input(format!("bad position in `{s}`")))?;
        if class == 0 || pos == 0 {
            return Err(Error::input(format!("`{s}`: indices are 1-based")));
        }
        Ok(VertexId::new(class - 1, pos - 1))
    }
}

/// A legal tuple of vertices, sorted by class, at most one vertex per class.
///
/// `Edge` does not know about class bounds; a hypergraph validates those when
/// the edge is inserted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    vertices: Vec<VertexId>,
}

impl Edge {
    /// Sorts the vertices by class and rejects tuples that are empty or use a
    /// class twice.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("an edge must contain at least one vertex"));
        }
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0].class == w[1].class {
                return Err(Error::input(format!(
                    "edge uses class {} twice ({} and {})",
                    w[0].class + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(Edge { vertices })
    }

    /// Convenience constructor from `(class, pos)` pairs (0-based).
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Edge::new(pairs.iter().map(|&(c, p)| VertexId::new(c, p)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The edge's vertex in `class`, if it has one (an l-graph with l < k may
    /// skip classes).
    pub fn vertex_in_class(&self, class: usize) -> Option<VertexId> {
        self.vertices.iter().copied().find(|v| v.class == class)
    }

    pub fn is_disjoint_from(&self, other: &Edge) -> bool {
        // Both sides are sorted; merge-walk.
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn meets(&self, set: &VertexSet) -> bool {
        self.vertices.iter().any(|v| set.contains(*v))
    }

    /// Canonical `c:p c:p ...` rendering (1-based), also used as a JSON key.
    pub fn token_string(&self) -> String {
        self.vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the output of [`Edge::token_string`].
    pub fn from_token_string(s: &str) -> Result<Self> {
        let vs: Result<Vec<VertexId>> = s.split_whitespace().map(|t| t.parse()).collect();
        Edge::new(vs?)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.token_string())
    }
}

/// An arbitrary set of vertices (not necessarily legal).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    members: BTreeSet<VertexId>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn from_iter(vs: impl IntoIterator<Item = VertexId>) -> Self {
        VertexSet { members: vs.into_iter().collect() }
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.members.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.members.remove(&v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet { members: self.members.union(&other.members).copied().collect() }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet { members: self.members.difference(&other.members).copied().collect() }
    }

    /// Legal = at most one vertex per class.
    pub fn is_legal(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.members.iter().all(|v| seen.insert(v.class))
    }

    /// Balanced = the same number of members in every one of the
    /// `class_count` classes.
    pub fn is_balanced(&self, class_count: usize) -> bool {
        if class_count == 0 {
            return self.is_empty();
        }
        let mut counts = vec![0usize; class_count];
        for v in &self.members {
            if v.class >= class_count {
                return false;
            }
            counts[v.class] += 1;
        }
        counts.iter().all(|&c| c == counts[0])
    }

    pub fn count_in_class(&self, class: usize) -> usize {
        self.members.iter().filter(|v| v.class == class).count()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::from_iter(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.members.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        )
    }
}

/// Per-class membership constraint for [`KPartiteHypergraph::pattern_degree`].
#[derive(Clone, Debug)]
pub enum ClassConstraint {
    /// No restriction on this coordinate.
    Any,
    /// The edge must use exactly this vertex.
    Fixed(VertexId),
    /// The edge's vertex in this class must lie in the given set.
    In(BTreeSet<VertexId>),
}

/// Bijection between surviving vertices of a hypergraph and their re-indexed
/// images after [`KPartiteHypergraph::remove_vertices`].
#[derive(Clone, Debug, Default)]
pub struct ReindexMap {
    forward: BTreeMap<VertexId, VertexId>,
    backward: BTreeMap<VertexId, VertexId>,
}

impl ReindexMap {
    pub fn identity(h: &KPartiteHypergraph) -> Self {
        let mut m = ReindexMap::default();
        for v in h.vertices() {
            m.insert(v, v);
        }
        m
    }

    fn insert(&mut self, old: VertexId, new: VertexId) {
        self.forward.insert(old, new);
        self.backward.insert(new, old);
    }

    /// New id of a surviving old vertex; `None` if it was removed.
    pub fn new_id(&self, old: VertexId) -> Option<VertexId> {
        self.forward.get(&old).copied()
    }

    pub fn old_id(&self, new: VertexId) -> Option<VertexId> {
        self.backward.get(&new).copied()
    }

    pub fn map_edge(&self, e: &Edge) -> Option<Edge> {
        let vs: Option<Vec<VertexId>> = e.vertices().iter().map(|&v| self.new_id(v)).collect();
        vs.map(|vs| Edge::new(vs).expect("reindexing preserves legality"))
    }

    pub fn map_edge_back(&self, e: &Edge) -> Option<Edge> {
        let vs: Option<Vec<VertexId>> = e.vertices().iter().map(|&v| self.old_id(v)).collect();
        vs.map(|vs| Edge::new(vs).expect("reindexing preserves legality"))
    }

    /// Composition: `self` then `next`.
    pub fn then(&self, next: &ReindexMap) -> ReindexMap {
        let mut out = ReindexMap::default();
        for (&old, &mid) in &self.forward {
            if let Some(new) = next.new_id(mid) {
                out.insert(old, new);
            }
        }
        out
    }
}

/// Immutable k-partite l-uniform hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPartiteHypergraph {
    class_sizes: Vec<usize>,
    uniformity: usize,
    /// Canonical (sorted, deduplicated) edge list; the index of an edge in
    /// this vector is its stable id.
    edges: Vec<Edge>,
    /// Flat vertex index -> ascending ids of incident edges.
    incidence: Vec<Vec<usize>>,
    /// Class -> offset into the flat vertex indexing.
    offsets: Vec<usize>,
}

/// Mutating builder; [`KPartiteHypergraph`] itself is immutable.
#[derive(Clone, Debug)]
pub struct HypergraphBuilder {
    class_sizes: Vec<usize>,
    uniformity: usize,
    edges: BTreeSet<Edge>,
}

impl HypergraphBuilder {
    pub fn new(class_sizes: Vec<usize>, uniformity: usize) -> Result<Self> {
        let k = class_sizes.len();
        if k == 0 {
            return Err(Error::input("a hypergraph needs at least one class"));
        }
        if class_sizes.iter().any(|&n| n == 0) {
            return Err(Error::input("class sizes must be at least 1"));
        }
        if uniformity == 0 || uniformity > k {
            return Err(Error::input(format!(
                "uniformity {uniformity} out of range for {k} classes"
            )));
        }
        Ok(HypergraphBuilder { class_sizes, uniformity, edges: BTreeSet::new() })
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<()> {
        if e.len() != self.uniformity {
            return Err(Error::input(format!(
                "edge {e} has {} vertices, expected {}",
                e.len(),
                self.uniformity
            )));
        }
        for v in e.vertices() {
            if v.class >= self.class_sizes.len() || v.pos >= self.class_sizes[v.class] {
                return Err(Error::input(format!("vertex {v} out of bounds in edge {e}")));
            }
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn add_edge_from(&mut self, pairs: &[(usize, usize)]) -> Result<()> {
        self.add_edge(Edge::from_pairs(pairs)?)
    }

    pub fn build(self) -> KPartiteHypergraph {
        KPartiteHypergraph::from_sorted_edges(
            self.class_sizes,
            self.uniformity,
            self.edges.into_iter().collect(),
        )
    }
}

impl KPartiteHypergraph {
    /// `edges` must already be sorted, deduplicated, legal and in bounds.
    pub(crate) fn from_sorted_edges(
        class_sizes: Vec<usize>,
        uniformity: usize,
        edges: Vec<Edge>,
    ) -> Self {
        let mut offsets = Vec::with_capacity(class_sizes.len());
        let mut total = 0usize;
        for &n in &class_sizes {
            offsets.push(total);
            total += n;
        }
        let mut incidence = vec![Vec::new(); total];
        for (id, e) in edges.iter().enumerate() {
            for v in e.vertices() {
                incidence[offsets[v.class] + v.pos].push(id);
            }
        }
        KPartiteHypergraph { class_sizes, uniformity, edges, incidence, offsets }
    }

    /// Edgeless hypergraph on the given classes.
    pub fn edgeless(class_sizes: Vec<usize>, uniformity: usize) -> Result<Self> {
        Ok(HypergraphBuilder::new(class_sizes, uniformity)?.build())
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.class_sizes[class]
    }

    pub fn vertex_count(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.class < self.class_sizes.len() && v.pos < self.class_sizes[v.class]
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn edge_id(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// All vertices in class-major, position-minor order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.class_sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &n)| (0..n).map(move |p| VertexId::new(c, p)))
    }

    pub fn flat_index(&self, v: VertexId) -> usize {
        self.offsets[v.class] + v.pos
    }

    /// Ids of edges containing `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[usize] {
        &self.incidence[self.flat_index(v)]
    }

    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.incident_edges(v).len()
    }

    fn check_in_bounds(&self, t: &VertexSet) -> Result<()> {
        for v in t.iter() {
            if !self.contains_vertex(v) {
                return Err(Error::input(format!("vertex {v} out of bounds")));
            }
        }
        Ok(())
    }

    /// Number of edges containing every vertex of `t`. Non-legal `t` has
    /// degree 0 by convention; the empty set has degree `|E|`.
    pub fn degree(&self, t: &VertexSet) -> Result<usize> {
        self.check_in_bounds(t)?;
        if t.is_empty() {
            return Ok(self.edge_count());
        }
        if !t.is_legal() || t.len() > self.uniformity {
            return Ok(0);
        }
        // Scan the shortest incidence list among the members.
        let pivot = t
            .iter()
            .min_by_key(|&v| self.vertex_degree(v))
            .expect("t is non-empty");
        let count = self
            .incident_edges(pivot)
            .iter()
            .filter(|&&id| t.iter().all(|v| self.edges[id].contains(v)))
            .count();
        Ok(count)
    }

    /// All legal `l`-subsets of the vertex set, in lexicographic order.
    pub fn legal_l_sets(&self, l: usize) -> Vec<VertexSet> {
        use itertools::Itertools;
        let k = self.class_count();
        let mut out = Vec::new();
        for classes in (0..k).combinations(l) {
            if classes.iter().any(|&c| self.class_sizes[c] == 0) {
                continue;
            }
            let mut stack = vec![Vec::new()];
            for &c in &classes {
                let mut next = Vec::new();
                for prefix in &stack {
                    for p in 0..self.class_sizes[c] {
                        let mut e = prefix.clone();
                        e.push(VertexId::new(c, p));
                        next.push(e);
                    }
                }
                stack = next;
            }
            out.extend(stack.into_iter().map(VertexSet::from_iter));
        }
        out
    }

    /// Minimum degree over all legal `l`-sets (δ_l). Requires `1 <= l <`
    /// uniformity.
    pub fn min_l_degree(&self, l: usize) -> Result<usize> {
        if l == 0 || l >= self.uniformity {
            return Err(Error::input(format!(
                "l = {l} out of range: need 1 <= l < {}",
                self.uniformity
            )));
        }
        let mut min = usize::MAX;
        for t in self.legal_l_sets(l) {
            let d = self.degree(&t)?;
            min = min.min(d);
            if min == 0 {
                break;
            }
        }
        if min == usize::MAX {
            min = 0; // no legal l-set at all (empty classes)
        }
        Ok(min)
    }

    /// `{e \ t : t ⊆ e ∈ E}` as a set of sorted vertex lists; elements may be
    /// empty when `t` is itself an edge. Its cardinality equals `degree(t)`.
    pub fn neighborhood(&self, t: &VertexSet) -> Result<BTreeSet<Vec<VertexId>>> {
        self.check_in_bounds(t)?;
        let mut out = BTreeSet::new();
        if !t.is_legal() || t.len() > self.uniformity {
            return Ok(out);
        }
        if t.is_empty() {
            for e in &self.edges {
                out.insert(e.vertices().to_vec());
            }
            return Ok(out);
        }
        let pivot = t.iter().min_by_key(|&v| self.vertex_degree(v)).expect("non-empty");
        for &id in self.incident_edges(pivot) {
            let e = &self.edges[id];
            if t.iter().all(|v| e.contains(v)) {
                out.insert(e.vertices().iter().copied().filter(|v| !t.contains(*v)).collect());
            }
        }
        Ok(out)
    }

    /// Removes `s`, shrinking classes and re-indexing surviving positions;
    /// surviving edges are exactly those disjoint from `s`. The returned map
    /// is the explicit old-to-new bijection on survivors.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<(KPartiteHypergraph, ReindexMap)> {
        self.check_in_bounds(s)?;
        let mut map = ReindexMap::default();
        let mut new_sizes = vec![0usize; self.class_count()];
        for (c, &n) in self.class_sizes.iter().enumerate() {
            let mut next = 0usize;
            for p in 0..n {
                let v = VertexId::new(c, p);
                if !s.contains(v) {
                    map.insert(v, VertexId::new(c, next));
                    next += 1;
                }
            }
            new_sizes[c] = next;
        }
        let mut new_edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| !e.meets(s))
            .map(|e| map.map_edge(e).expect("survivor edges avoid s"))
            .collect();
        new_edges.sort();
        let h = KPartiteHypergraph::from_sorted_edges(new_sizes, self.uniformity, new_edges);
        Ok((h, map))
    }

    /// Sub-hypergraph induced by `keep` (with re-indexing), i.e. removal of
    /// the complement.
    pub fn induced(&self, keep: &VertexSet) -> Result<(KPartiteHypergraph, ReindexMap)> {
        self.check_in_bounds(keep)?;
        let complement: VertexSet = self.vertices().filter(|&v| !keep.contains(v)).collect();
        self.remove_vertices(&complement)
    }

    /// Down-closure under the coordinatewise position order: for every edge,
    /// decrementing any one coordinate must again give an edge.
    pub fn is_stable(&self) -> bool {
        for e in &self.edges {
            for (i, v) in e.vertices().iter().enumerate() {
                if v.pos == 0 {
                    continue;
                }
                let mut vs = e.vertices().to_vec();
                vs[i] = VertexId::new(v.class, v.pos - 1);
                let dominated = Edge::new(vs).expect("single decrement stays legal");
                if !self.contains_edge(&dominated) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximum degree over legal 2-sets (Δ₂). 0 for an edgeless hypergraph.
    pub fn max_codegree(&self) -> usize {
        let mut counts: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for e in &self.edges {
            let vs = e.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    *counts.entry((vs[i], vs[j])).or_insert(0) += 1;
                }
            }
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// Number of edges whose vertex in class `i` satisfies `constraints[i]`.
    /// An edge with no vertex in a constrained class fails `Fixed`/`In` and
    /// passes `Any`.
    pub fn pattern_degree(&self, constraints: &[ClassConstraint]) -> Result<usize> {
        if constraints.len() != self.class_count() {
            return Err(Error::input(format!(
                "expected {} class constraints, got {}",
                self.class_count(),
                constraints.len()
            )));
        }
        let matches = |e: &Edge| {
            constraints.iter().enumerate().all(|(c, constraint)| match constraint {
                ClassConstraint::Any => true,
                ClassConstraint::Fixed(v) => e.vertex_in_class(c) == Some(*v),
                ClassConstraint::In(set) => {
                    e.vertex_in_class(c).map(|v| set.contains(&v)).unwrap_or(false)
                }
            })
        };
        // Scan the incidence list of a Fixed vertex when there is one.
        let pivot = constraints.iter().find_map(|c| match c {
            ClassConstraint::Fixed(v) => Some(*v),
            _ => None,
        });
        let count = match pivot {
            Some(v) if self.contains_vertex(v) => self
                .incident_edges(v)
                .iter()
                .filter(|&&id| matches(&self.edges[id]))
                .count(),
            Some(v) => return Err(Error::input(format!("vertex {v} out of bounds"))),
            None => self.edges.iter().filter(|e| matches(e)).count(),
        };
        Ok(count)
    }

    /// All vertices as a [`VertexSet`].
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// True when every class has the same size.
    pub fn is_balanced(&self) -> bool {
        self.class_sizes.windows(2).all(|w| w[0] == w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_balanced, complete, Variant};

    fn h3_10_111() -> KPartiteHypergraph {
        // All triples meeting the first vertex of some class, n = 10.
        crate::constructions::build_extremal(
            &crate::constructions::ExtremalSpec::new(3, 3, 10, vec![1, 1, 1], Variant::WHitting)
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn degree_of_u1_vertex_in_h3_10() {
        let h = h3_10_111();
        // Oracle: enumerate the 100 partner pairs of a U1 vertex and count
        // those hitting W2 ∪ W3.
        let mut oracle = 0;
        for y in 0..10 {
            for z in 0..10 {
                if y == 0 || z == 0 {
                    oracle += 1;
                }
            }
        }
        assert_eq!(oracle, 19);
        let t = VertexSet::from_iter([VertexId::new(0, 5)]);
        assert_eq!(h.degree(&t).unwrap(), 19);
    }

    #[test]
    fn degree_of_empty_and_illegal_sets() {
        let h = h3_10_111();
        assert_eq!(h.degree(&VertexSet::new()).unwrap(), h.edge_count());
        let illegal = VertexSet::from_iter([VertexId::new(0, 1), VertexId::new(0, 2)]);
        assert_eq!(h.degree(&illegal).unwrap(), 0);
        let oob = VertexSet::from_iter([VertexId::new(0, 10)]);
        assert!(h.degree(&oob).is_err());
    }

    #[test]
    fn min_degree_examples() {
        let h = h3_10_111();
        // Brute-force the minimum over all 30 vertices.
        let brute = h
            .legal_l_sets(1)
            .into_iter()
            .map(|t| h.degree(&t).unwrap())
            .min()
            .unwrap();
        assert_eq!(brute, 19);
        assert_eq!(h.min_l_degree(1).unwrap(), 19);

        let k2 = complete(&[2, 2, 2], 3).unwrap();
        assert_eq!(k2.min_l_degree(1).unwrap(), 4);

        let empty = KPartiteHypergraph::edgeless(vec![3, 3, 3], 3).unwrap();
        assert_eq!(empty.min_l_degree(1).unwrap(), 0);
        assert!(empty.min_l_degree(0).is_err());
        assert!(empty.min_l_degree(3).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        // Single-edge hypergraph: the neighborhood of the full edge is {∅}.
        let mut b = HypergraphBuilder::new(vec![1, 1, 1], 3).unwrap();
        b.add_edge_from(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        let h = b.build();
        let t = VertexSet::from_iter(h.edges()[0].vertices().iter().copied());
        let nb = h.neighborhood(&t).unwrap();
        assert_eq!(nb.len(), 1);
        assert!(nb.contains(&Vec::new()));

        // H3(3;1,1,1): a W1 vertex sees all 9 pairs of the other classes.
        let h = build_balanced(3, 3, 3, Variant::WHitting).unwrap();
        let w = VertexSet::from_iter([VertexId::new(0, 0)]);
        let nb = h.neighborhood(&w).unwrap();
        assert_eq!(nb.len(), 9);
        assert_eq!(nb.len(), h.degree(&w).unwrap());

        // A vertex in no edge has empty neighborhood.
        let empty = KPartiteHypergraph::edgeless(vec![2, 2, 2], 3).unwrap();
        let t = VertexSet::from_iter([VertexId::new(1, 1)]);
        assert!(empty.neighborhood(&t).unwrap().is_empty());
    }

    #[test]
    fn remove_vertices_examples() {
        let h = complete(&[2, 2, 2], 3).unwrap();
        let (same, _) = h.remove_vertices(&VertexSet::new()).unwrap();
        assert_eq!(same, h);

        let (one_less, map) =
            h.remove_vertices(&VertexSet::from_iter([VertexId::new(2, 0)])).unwrap();
        assert_eq!(one_less.edge_count(), 4);
        assert_eq!(one_less.class_sizes(), &[2, 2, 1]);
        assert_eq!(map.new_id(VertexId::new(2, 1)), Some(VertexId::new(2, 0)));
        assert_eq!(map.new_id(VertexId::new(2, 0)), None);
        assert_eq!(map.old_id(VertexId::new(2, 0)), Some(VertexId::new(2, 1)));

        // Removing all of W from H3(3;1,1,1) leaves nothing.
        let h = build_balanced(3, 3, 3, Variant::WHitting).unwrap();
        let w = VertexSet::from_iter([
            VertexId::new(0, 0),
            VertexId::new(1, 0),
            VertexId::new(2, 0),
        ]);
        let (rest, _) = h.remove_vertices(&w).unwrap();
        assert_eq!(rest.edge_count(), 0);
        assert_eq!(rest.class_sizes(), &[2, 2, 2]);
    }

    #[test]
    fn stability_examples() {
        assert!(complete(&[3, 3, 3], 3).unwrap().is_stable());
        assert!(KPartiteHypergraph::edgeless(vec![2, 2], 2).unwrap().is_stable());

        let mut b = HypergraphBuilder::new(vec![2, 2, 2], 3).unwrap();
        b.add_edge_from(&[(0, 1), (1, 0), (2, 0)]).unwrap();
        let h = b.build();
        assert!(!h.is_stable());
    }

    #[test]
    fn codegree_examples() {
        assert_eq!(complete(&[3, 3, 3], 3).unwrap().max_codegree(), 3);
        let mut b = HypergraphBuilder::new(vec![1, 1, 1], 3).unwrap();
        b.add_edge_from(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(b.build().max_codegree(), 1);
        assert_eq!(KPartiteHypergraph::edgeless(vec![2, 2], 2).unwrap().max_codegree(), 0);
    }

    #[test]
    fn pattern_degree_counts_prescribed_memberships() {
        let h = complete(&[2, 2, 2], 3).unwrap();
        let u: BTreeSet<VertexId> = [VertexId::new(1, 0)].into_iter().collect();
        let constraints = vec![
            ClassConstraint::Fixed(VertexId::new(0, 0)),
            ClassConstraint::In(u),
            ClassConstraint::Any,
        ];
        assert_eq!(h.pattern_degree(&constraints).unwrap(), 2);
    }
}

//! Exact rainbow matchings of a family of hypergraphs — directly by
//! branch-and-bound over colors, or through the color lift — plus the
//! high-degree representative heuristic.

use std::collections::BTreeSet;
use std::fmt;

use super::matching::{has_perfect_matching_budgeted, SearchBudget};
use crate::constructions::lift_family;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexId};

/// A rainbow matching: pairwise disjoint edges tagged with distinct colors,
/// the edge of color `i` belonging to family member `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowMatching {
    /// `(color, edge)` pairs sorted by color; colors are 0-based.
    picks: Vec<(usize, Edge)>,
}

impl RainbowMatching {
    pub fn new(family: &Family, mut picks: Vec<(usize, Edge)>) -> Result<Self> {
        picks.sort();
        for w in picks.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::input(format!("color {} used twice", w[0].0 + 1)));
            }
        }
        for (color, e) in &picks {
            if *color >= family.len() {
                return Err(Error::input(format!("color {} out of range", color + 1)));
            }
            if !family.member(*color).contains_edge(e) {
                return Err(Error::input(format!("edge {e} is not in family member {}", color + 1)));
            }
        }
        for i in 0..picks.len() {
            for j in i + 1..picks.len() {
                if !picks[i].1.is_disjoint_from(&picks[j].1) {
                    let shared = picks[i]
                        .1
                        .vertices()
                        .iter()
                        .find(|v| picks[j].1.contains(**v))
                        .expect("non-disjoint edges share a vertex");
                    return Err(Error::input(format!(
                        "edges of colors {} and {} share vertex {shared}",
                        picks[i].0 + 1,
                        picks[j].0 + 1
                    )));
                }
            }
        }
        Ok(RainbowMatching { picks })
    }

    pub(crate) fn from_sorted_unchecked(picks: Vec<(usize, Edge)>) -> Self {
        RainbowMatching { picks }
    }

    pub fn size(&self) -> usize {
        self.picks.len()
    }

    pub fn picks(&self) -> &[(usize, Edge)] {
        &self.picks
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.picks.iter().map(|(c, _)| *c)
    }
}

impl fmt::Display for RainbowMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.picks
                .iter()
                .map(|(c, e)| format!("{}:{e}", c + 1))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Greedy vertex-cover bound on the matching number of an edge set.
fn cover_bound(edges: &[&Edge], shape: &KPartiteHypergraph) -> usize {
    let mut remaining: Vec<&Edge> = edges.to_vec();
    let mut cover = 0usize;
    let mut counts = vec![0usize; shape.vertex_count()];
    while !remaining.is_empty() {
        counts.iter_mut().for_each(|c| *c = 0);
        for e in &remaining {
            for &v in e.vertices() {
                counts[shape.flat_index(v)] += 1;
            }
        }
        let mut best = 0usize;
        for (i, &c) in counts.iter().enumerate() {
            if c > counts[best] {
                best = i;
            }
        }
        cover += 1;
        remaining.retain(|e| e.vertices().iter().all(|&v| shape.flat_index(v) != best));
    }
    cover
}

struct RainbowSearch<'a> {
    f: &'a Family,
    target: usize,
    used: Vec<bool>,
    picks: Vec<(usize, usize)>,
    nodes: u64,
    budget: SearchBudget,
}

impl<'a> RainbowSearch<'a> {
    fn shape(&self) -> &KPartiteHypergraph {
        self.f.member(0)
    }

    fn edge_free(&self, e: &Edge) -> bool {
        e.vertices().iter().all(|&v| !self.used[self.shape().flat_index(v)])
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

    /// `remaining` — undecided colors, ascending. Returns true when a full
    /// rainbow matching of size `target` has been committed to `picks`.
    fn search(&mut self, remaining: &[usize]) -> Result<bool> {
        self.tick()?;
        let needed = self.target - self.picks.len();
        if needed == 0 {
            return Ok(true);
        }
        if remaining.len() < needed {
            return Ok(false);
        }
        // Surviving edges per color; colors with none are forced drops.
        let mut avail: Vec<(usize, Vec<usize>)> = Vec::with_capacity(remaining.len());
        for &c in remaining {
            let member = self.f.member(c);
            let ids: Vec<usize> = (0..member.edge_count())
                .filter(|&id| self.edge_free(member.edge(id)))
                .collect();
            if !ids.is_empty() {
                avail.push((c, ids));
            }
        }
        if avail.len() < needed {
            return Ok(false);
        }
        // Disjoint-capacity bound over the union of surviving edges.
        let union: BTreeSet<&Edge> = avail
            .iter()
            .flat_map(|(c, ids)| ids.iter().map(|&id| self.f.member(*c).edge(id)))
            .collect();
        let union: Vec<&Edge> = union.into_iter().collect();
        if cover_bound(&union, self.shape()) < needed {
            return Ok(false);
        }
        // Fail-first: branch on the color with the fewest surviving edges.
        let (pivot, ids) = avail
            .iter()
            .min_by_key(|(c, ids)| (ids.len(), *c))
            .map(|(c, ids)| (*c, ids.clone()))
            .expect("avail is non-empty");
        let rest: Vec<usize> = avail.iter().map(|(c, _)| *c).filter(|&c| c != pivot).collect();
        for id in ids {
            let e = self.f.member(pivot).edge(id);
            if !self.edge_free(e) {
                continue;
            }
            let flats: Vec<usize> =
                e.vertices().iter().map(|&v| self.shape().flat_index(v)).collect();
            for &fv in &flats {
                self.used[fv] = true;
            }
            self.picks.push((pivot, id));
            if self.search(&rest)? {
                return Ok(true);
            }
            self.picks.pop();
            for &fv in &flats {
                self.used[fv] = false;
            }
        }
        // Drop the pivot color entirely.
        if rest.len() >= needed {
            return self.search(&rest);
        }
        Ok(false)
    }
}

/// Exhaustive rainbow matching of `target` distinct colors, or `None` when no
/// such matching exists.
pub fn rainbow_matching_budgeted(
    f: &Family,
    target: usize,
    budget: SearchBudget,
) -> Result<Option<RainbowMatching>> {
    if target > f.len() {
        return Err(Error::input(format!(
            "target {target} exceeds the number of colors {}",
            f.len()
        )));
    }
    let mut s = RainbowSearch {
        f,
        target,
        used: vec![false; f.member(0).vertex_count()],
        picks: Vec::new(),
        nodes: 0,
        budget,
    };
    let remaining: Vec<usize> = (0..f.len()).collect();
    if s.search(&remaining)? {
        let picks = s
            .picks
            .iter()
            .map(|&(c, id)| (c, f.member(c).edge(id).clone()))
            .collect();
        Ok(Some(RainbowMatching::new(f, picks)?))
    } else {
        Ok(None)
    }
}

pub fn rainbow_matching(f: &Family, target: usize) -> Result<Option<RainbowMatching>> {
    rainbow_matching_budgeted(f, target, SearchBudget::unlimited())
}

/// Full-size rainbow matching through the color lift: build the lifted
/// (k+1)-graph, search for a perfect matching, strip the color class off the
/// witness. Requires `|F|` to equal every class size.
pub fn rainbow_via_lift_budgeted(
    f: &Family,
    budget: SearchBudget,
) -> Result<Option<RainbowMatching>> {
    if f.class_sizes().iter().any(|&n| n != f.len()) {
        return Err(Error::input(format!(
            "lift solver needs |F| = class size; got |F| = {}, classes {:?}",
            f.len(),
            f.class_sizes()
        )));
    }
    let lift = lift_family(f)?;
    let Some(pm) = has_perfect_matching_budgeted(&lift, budget)? else {
        return Ok(None);
    };
    let mut picks = Vec::with_capacity(pm.size());
    for e in pm.edges() {
        let color = e.vertices()[0].pos; // class 0 is the color class
        let original: Vec<VertexId> = e.vertices()[1..]
            .iter()
            .map(|v| VertexId::new(v.class - 1, v.pos))
            .collect();
        picks.push((color, Edge::new(original)?));
    }
    Ok(Some(RainbowMatching::new(f, picks)?))
}

pub fn rainbow_via_lift(f: &Family) -> Result<Option<RainbowMatching>> {
    rainbow_via_lift_budgeted(f, SearchBudget::unlimited())
}

/// High-degree representative heuristic: take `A_i = {x : d_{F_i}(x) > 2mn}`,
/// pick a system of distinct representatives `v_i ∈ A_i ∩ (V_1 ∪ V_2)` by
/// bipartite matching, then extend edges greedily in reverse color order,
/// each containing its representative and avoiding the earlier
/// representatives and all previously chosen edges.
///
/// Sound but incomplete: any returned matching is valid, `None` proves
/// nothing.
pub fn greedy_rainbow_heuristic(f: &Family) -> Option<RainbowMatching> {
    let shape = f.member(0);
    if shape.class_count() < 2 {
        return None;
    }
    let m = f.len();
    let n = shape.class_sizes().iter().copied().max().unwrap_or(0);
    let threshold = 2 * m * n;

    // Candidate representatives per color, restricted to the first two
    // classes.
    let candidates: Vec<Vec<VertexId>> = f
        .iter()
        .map(|fi| {
            shape
                .vertices()
                .filter(|v| v.class < 2 && fi.vertex_degree(*v) > threshold)
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }

    // System of distinct representatives via augmenting paths.
    let reps = distinct_representatives(shape, &candidates)?;

    // Reverse-order greedy extension.
    let mut chosen: Vec<(usize, Edge)> = Vec::with_capacity(m);
    for color in (0..m).rev() {
        let rep = reps[color];
        let earlier_reps = &reps[..color];
        let member = f.member(color);
        let pick = member.incident_edges(rep).iter().copied().find(|&id| {
            let e = member.edge(id);
            earlier_reps.iter().all(|r| !e.contains(*r))
                && chosen.iter().all(|(_, c)| c.is_disjoint_from(e))
        });
        match pick {
            Some(id) => chosen.push((color, member.edge(id).clone())),
            None => return None,
        }
    }
    RainbowMatching::new(f, chosen).ok()
}

/// Kuhn matching colors -> vertices; `None` unless every color is matched.
fn distinct_representatives(
    shape: &KPartiteHypergraph,
    candidates: &[Vec<VertexId>],
) -> Option<Vec<VertexId>> {
    let m = candidates.len();
    let vcount = shape.vertex_count();
    let mut owner = vec![usize::MAX; vcount];

    fn try_color(
        color: usize,
        shape: &KPartiteHypergraph,
        candidates: &[Vec<VertexId>],
        owner: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for &v in &candidates[color] {
            let fv = shape.flat_index(v);
            if seen[fv] {
                continue;
            }
            seen[fv] = true;
            if owner[fv] == usize::MAX
                || try_color(owner[fv], shape, candidates, owner, seen)
            {
                owner[fv] = color;
                return true;
            }
        }
        false
    }

    for color in 0..m {
        let mut seen = vec![false; vcount];
        if !try_color(color, shape, candidates, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut reps = vec![VertexId::new(0, 0); m];
    for (flat, &color) in owner.iter().enumerate() {
        if color != usize::MAX {
            let v = shape
                .vertices()
                .nth(flat)
                .expect("flat index within bounds");
            reps[color] = v;
        }
    }
    Some(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_balanced, complete, Variant};

    #[test]
    fn two_complete_colors_admit_a_pair() {
        let c = complete(&[2, 2, 2], 3).unwrap();
        let f = Family::uniform(c, 2).unwrap();
        let rm = rainbow_matching(&f, 2).unwrap();
        assert!(rm.is_some());
        assert_eq!(rm.unwrap().size(), 2);
    }

    #[test]
    fn capped_families_have_no_rainbow_pm() {
        for n in 3..=4 {
            let h = build_balanced(3, n, n - 1, Variant::WHitting).unwrap();
            let f = Family::uniform(h, n).unwrap();
            assert!(rainbow_matching(&f, n).unwrap().is_none(), "n = {n}");
            assert!(rainbow_via_lift(&f).unwrap().is_none(), "n = {n} (lift)");
        }
    }

    #[test]
    fn lift_and_direct_agree_on_small_positives() {
        let c = complete(&[2, 2, 2], 3).unwrap();
        let f = Family::uniform(c, 2).unwrap();
        assert!(rainbow_via_lift(&f).unwrap().is_some());
        assert!(rainbow_matching(&f, 2).unwrap().is_some());

        let h = build_balanced(3, 3, 2, Variant::WHitting).unwrap();
        let f = Family::uniform(h, 3).unwrap();
        assert_eq!(
            rainbow_matching(&f, 3).unwrap().is_some(),
            rainbow_via_lift(&f).unwrap().is_some()
        );
    }

    #[test]
    fn single_color_single_edge() {
        let mut b = crate::hypergraph::HypergraphBuilder::new(vec![1, 1, 1], 3).unwrap();
        b.add_edge_from(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        let f = Family::new(vec![b.build()]).unwrap();
        let rm = rainbow_via_lift(&f).unwrap();
        assert_eq!(rm.map(|r| r.size()), Some(1));
    }

    #[test]
    fn heuristic_is_sound_on_dense_families() {
        // Dense enough that degrees clear the 2mn threshold.
        let n = 13;
        let c = complete(&[n, n, n], 3).unwrap();
        let f = Family::uniform(c, 2).unwrap();
        // Threshold 2*2*13 = 52 < 169 = n^2.
        let rm = greedy_rainbow_heuristic(&f);
        assert!(rm.is_some());
        let rm = rm.unwrap();
        assert_eq!(rm.size(), 2);
        // The exact solver agrees that a witness exists.
        assert!(rainbow_matching(&f, 2).unwrap().is_some());
    }

    #[test]
    fn heuristic_declines_without_candidates() {
        // Sparse family: no vertex clears the threshold.
        let h = build_balanced(3, 3, 1, Variant::WHitting).unwrap();
        let f = Family::uniform(h, 2).unwrap();
        assert!(greedy_rainbow_heuristic(&f).is_none());
    }

    #[test]
    fn target_larger_than_family_is_an_input_error() {
        let c = complete(&[2, 2, 2], 3).unwrap();
        let f = Family::uniform(c, 2).unwrap();
        assert!(rainbow_matching(&f, 3).is_err());
    }
}

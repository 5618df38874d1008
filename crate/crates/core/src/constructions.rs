//! Generators for the extremal families: W-hitting graphs `H_{k,l}(n;d)`,
//! their primed both-sides-hitting variants, balanced versions `H_k(n,m)`,
//! star-augmented members, the color-lift of a family, and the closed-form
//! vertex-degree threshold functions.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexId};

/// Which hitting condition the construction's edges satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Every edge meets `W = ∪W_i`.
    WHitting,
    /// Every edge meets both `W` and `V \ W`.
    WAndUHitting,
}

/// Parameters naming one member of the construction zoo. `W_i` always
/// occupies the lowest `d_i` positions of class `i`, which makes outputs
/// reproducible and stable under the position order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub d: Vec<usize>,
    pub variant: Variant,
}

impl ExtremalSpec {
    pub fn new(k: usize, l: usize, n: usize, d: Vec<usize>, variant: Variant) -> Result<Self> {
        if k < 2 {
            return Err(Error::input("extremal construction needs k >= 2"));
        }
        if l < 2 || l > k {
            return Err(Error::input(format!("uniformity {l} out of range 2..={k}")));
        }
        if n == 0 {
            return Err(Error::input("class size must be positive"));
        }
        if d.len() != k {
            return Err(Error::input(format!("expected {k} degree parameters, got {}", d.len())));
        }
        if d.iter().any(|&di| di > n) {
            return Err(Error::input("every d_i must satisfy 0 <= d_i <= n"));
        }
        Ok(ExtremalSpec { k, l, n, d, variant })
    }
}

/// Decomposition `value = 3r + s` with `s ∈ {1,2,3}`, recording which
/// quantity (a class size or a family size) it splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposedQuantity {
    ClassSize,
    FamilySize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdParams {
    pub value: usize,
    pub r: usize,
    pub s: usize,
    pub quantity: DecomposedQuantity,
}

impl ThresholdParams {
    pub fn decompose(value: usize, quantity: DecomposedQuantity) -> Result<Self> {
        if value == 0 {
            return Err(Error::input("cannot decompose 0 as 3r + s with s in 1..=3"));
        }
        let s = match value % 3 {
            0 => 3,
            rem => rem,
        };
        let r = (value - s) / 3;
        Ok(ThresholdParams { value, r, s, quantity })
    }

    /// The piecewise threshold δ(n, r, s).
    pub fn delta(&self, n: usize) -> usize {
        delta_formula(n, self.r, self.s)
    }
}

fn delta_formula(n: usize, r: usize, s: usize) -> usize {
    let n = n as i64;
    let r = r as i64;
    let v = match s {
        1 => n * n - (n - r) * (n - r),
        2 => n * n - (n - r + 1) * (n - r - 1),
        3 => n * n - (n - r) * (n - r - 1),
        _ => unreachable!("s is always in 1..=3"),
    };
    v as usize
}

/// Splits `n = 3r + s` and returns `(r, s, δ(n, r, s))`.
pub fn delta_threshold(n: usize) -> Result<(usize, usize, usize)> {
    let p = ThresholdParams::decompose(n, DecomposedQuantity::ClassSize)?;
    Ok((p.r, p.s, p.delta(n)))
}

/// Minimum vertex degree of the balanced 3-partite construction `H_3(n, m)`.
///
/// For `m ≡ 1 (mod 3)` the branch is `n² − (n − (m−1)/3)²`; see the repo
/// notes on why this branch is cross-checked by brute force rather than
/// taken on faith.
pub fn d3_threshold(n: usize, m: usize) -> Result<usize> {
    if m > n {
        return Err(Error::input(format!("need 0 <= m <= n, got m = {m}, n = {n}")));
    }
    let ni = n as i64;
    let mi = m as i64;
    let v = if m % 3 == 1 {
        let q = (mi - 1) / 3;
        ni * ni - (ni - q) * (ni - q)
    } else {
        ni * ni - (ni - mi / 3) * (ni - (mi + 1) / 3)
    };
    Ok(v as usize)
}

/// Iterates all legal `l`-edges over the classes `sizes`, calling `f` on each.
fn for_each_transversal(sizes: &[usize], l: usize, mut f: impl FnMut(&[VertexId])) {
    let k = sizes.len();
    for classes in (0..k).combinations(l) {
        if classes.iter().any(|&c| sizes[c] == 0) {
            continue;
        }
        for positions in classes.iter().map(|&c| 0..sizes[c]).multi_cartesian_product() {
            let vs: Vec<VertexId> = classes
                .iter()
                .zip(&positions)
                .map(|(&c, &p)| VertexId::new(c, p))
                .collect();
            f(&vs);
        }
    }
}

/// The complete k-partite l-graph on the given classes.
pub fn complete(class_sizes: &[usize], l: usize) -> Result<KPartiteHypergraph> {
    if class_sizes.is_empty() || l == 0 || l > class_sizes.len() {
        return Err(Error::input("bad shape for complete hypergraph"));
    }
    let mut edges = Vec::new();
    for_each_transversal(class_sizes, l, |vs| {
        edges.push(Edge::new(vs.to_vec()).expect("transversals are legal"));
    });
    edges.sort();
    Ok(KPartiteHypergraph::from_sorted_edges(class_sizes.to_vec(), l, edges))
}

/// Builds `H_{k,l}(n; d)` or the primed variant per `spec.variant`, with
/// `W_i` on the lowest positions.
pub fn build_extremal(spec: &ExtremalSpec) -> Result<KPartiteHypergraph> {
    let sizes = vec![spec.n; spec.k];
    let in_w = |v: &VertexId| v.pos < spec.d[v.class];
    let mut edges = Vec::new();
    for_each_transversal(&sizes, spec.l, |vs| {
        let hits_w = vs.iter().any(in_w);
        let keep = match spec.variant {
            Variant::WHitting => hits_w,
            Variant::WAndUHitting => hits_w && vs.iter().any(|v| !in_w(v)),
        };
        if keep {
            edges.push(Edge::new(vs.to_vec()).expect("transversals are legal"));
        }
    });
    edges.sort();
    Ok(KPartiteHypergraph::from_sorted_edges(sizes, spec.l, edges))
}

/// The balanced degree split: `d_i ∈ {⌈m/k⌉, ⌊m/k⌋}`, `Σ d_i = m`, larger
/// parts on the lowest class indices.
pub fn balanced_degrees(k: usize, m: usize) -> Vec<usize> {
    let q = m / k;
    let rem = m % k;
    (0..k).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// `H_k(n, m)` (or the primed variant): the balanced-degree member of the
/// construction family.
pub fn build_balanced(k: usize, n: usize, m: usize, variant: Variant) -> Result<KPartiteHypergraph> {
    if m > k * n {
        return Err(Error::input(format!("need m <= k*n, got m = {m}, k*n = {}", k * n)));
    }
    if m == 0 {
        // Nothing meets an empty W.
        return KPartiteHypergraph::edgeless(vec![n; k], k);
    }
    build_extremal(&ExtremalSpec::new(k, k, n, balanced_degrees(k, m), variant)?)
}

/// A member of the star-augmented family: `H_3(n, m−1)` plus an intersecting
/// family. By default the intersecting family is the star of all legal edges
/// through the first vertex of `U_1`; callers may supply any other edge list,
/// which is validated for pairwise intersection.
pub fn build_star_member(
    n: usize,
    m: usize,
    intersecting: Option<Vec<Edge>>,
) -> Result<KPartiteHypergraph> {
    if m == 0 {
        return Err(Error::input("star member needs m >= 1"));
    }
    let k = 3;
    let d = balanced_degrees(k, m - 1);
    if d[0] >= n {
        return Err(Error::input(format!("no U_1 vertex left for the star: d_1 = {} = n", d[0])));
    }
    let base = build_balanced(k, n, m - 1, Variant::WHitting)?;
    let extra: Vec<Edge> = match intersecting {
        Some(edges) => {
            for (i, e) in edges.iter().enumerate() {
                for f in &edges[i + 1..] {
                    if e.is_disjoint_from(f) {
                        return Err(Error::input(format!(
                            "supplied family is not intersecting: {e} and {f} are disjoint"
                        )));
                    }
                }
            }
            edges
        }
        None => {
            let hub = VertexId::new(0, d[0]);
            let mut star = Vec::new();
            for_each_transversal(&[n; 3], k, |vs| {
                if vs[0] == hub {
                    star.push(Edge::new(vs.to_vec()).expect("transversals are legal"));
                }
            });
            star
        }
    };
    let mut builder = crate::hypergraph::HypergraphBuilder::new(vec![n; k], k)?;
    for e in base.edges() {
        builder.add_edge(e.clone())?;
    }
    for e in extra {
        builder.add_edge(e)?;
    }
    Ok(builder.build())
}

/// The color lift: a new first class `Q = {v_1,…,v_m}` tags each edge of
/// `F_i` with `v_i`, producing a (k+1)-partite (k+1)-graph whose perfect
/// matchings are exactly the rainbow matchings of the family.
pub fn lift_family(family: &Family) -> Result<KPartiteHypergraph> {
    let k = family.class_count();
    if family.uniformity() != k {
        return Err(Error::input("lift needs k-partite k-uniform family members"));
    }
    let m = family.len();
    let mut sizes = Vec::with_capacity(k + 1);
    sizes.push(m);
    sizes.extend_from_slice(family.class_sizes());
    let mut edges = Vec::new();
    for (color, h) in family.iter().enumerate() {
        for e in h.edges() {
            let mut vs = Vec::with_capacity(k + 1);
            vs.push(VertexId::new(0, color));
            vs.extend(e.vertices().iter().map(|v| VertexId::new(v.class + 1, v.pos)));
            edges.push(Edge::new(vs).expect("lifted edges are legal"));
        }
    }
    edges.sort();
    edges.dedup();
    Ok(KPartiteHypergraph::from_sorted_edges(sizes, k + 1, edges))
}

/// Lift of `n` copies of `H_3(n, n)`.
pub fn h13(n: usize) -> Result<KPartiteHypergraph> {
    lift_family(&Family::uniform(build_balanced(3, n, n, Variant::WHitting)?, n)?)
}

/// Lift of `n` copies of `H_3'(n, n)`.
pub fn h13_prime(n: usize) -> Result<KPartiteHypergraph> {
    lift_family(&Family::uniform(build_balanced(3, n, n, Variant::WAndUHitting)?, n)?)
}

/// `H_{3,2}(n; d)` with the balanced split of `n` — the 3-partite 2-graph
/// whose pairs all meet `W`.
pub fn h32(n: usize) -> Result<KPartiteHypergraph> {
    build_extremal(&ExtremalSpec::new(3, 2, n, balanced_degrees(3, n), Variant::WHitting)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::VertexSet;

    #[test]
    fn delta_threshold_paper_values() {
        assert_eq!(delta_threshold(10).unwrap(), (3, 1, 51));
        assert_eq!(delta_threshold(11).unwrap(), (3, 2, 58));
        assert_eq!(delta_threshold(12).unwrap(), (3, 3, 72));
    }

    #[test]
    fn d3_threshold_values() {
        assert_eq!(d3_threshold(10, 3).unwrap(), 19);
        assert_eq!(d3_threshold(10, 2).unwrap(), 10);
        // m ≡ 1 (mod 3) branch, cross-checked by brute force below.
        assert_eq!(d3_threshold(10, 4).unwrap(), 19);
        let h = build_balanced(3, 10, 4, Variant::WHitting).unwrap();
        assert_eq!(h.min_l_degree(1).unwrap(), 19);
    }

    #[test]
    fn extremal_edge_counts() {
        let h = build_extremal(
            &ExtremalSpec::new(3, 3, 3, vec![1, 1, 1], Variant::WHitting).unwrap(),
        )
        .unwrap();
        assert_eq!(h.edge_count(), 27 - 8);

        let hp = build_extremal(
            &ExtremalSpec::new(3, 3, 3, vec![1, 1, 1], Variant::WAndUHitting).unwrap(),
        )
        .unwrap();
        assert_eq!(hp.edge_count(), 27 - 8 - 1);

        let empty = build_extremal(
            &ExtremalSpec::new(3, 3, 4, vec![0, 0, 0], Variant::WHitting).unwrap(),
        )
        .unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn primed_variant_is_subset() {
        for n in 2..=4 {
            for m in 0..=n {
                let h = build_balanced(3, n, m, Variant::WHitting).unwrap();
                let hp = build_balanced(3, n, m, Variant::WAndUHitting).unwrap();
                assert!(hp.edges().iter().all(|e| h.contains_edge(e)));
            }
        }
    }

    #[test]
    fn balanced_splits() {
        assert_eq!(balanced_degrees(3, 3), vec![1, 1, 1]);
        assert_eq!(balanced_degrees(3, 4), vec![2, 1, 1]);
        assert_eq!(balanced_degrees(3, 0), vec![0, 0, 0]);
        assert_eq!(build_balanced(3, 6, 0, Variant::WHitting).unwrap().edge_count(), 0);
        assert_eq!(build_balanced(3, 6, 3, Variant::WHitting).unwrap().edge_count(), 216 - 125);
    }

    #[test]
    fn extremal_outputs_are_stable() {
        for m in 0..=5 {
            let h = build_balanced(3, 5, m, Variant::WHitting).unwrap();
            assert!(h.is_stable(), "H_3(5,{m}) should be stable");
        }
    }

    #[test]
    fn star_member_counts() {
        let h = build_star_member(3, 1, None).unwrap();
        assert_eq!(h.edge_count(), 9);

        let h = build_star_member(4, 2, None).unwrap();
        // H_3(4,1) has 4^3 - 3*4^2 = 16 edges through W, the star adds 16.
        assert_eq!(h.edge_count(), 32);
    }

    #[test]
    fn star_member_rejects_non_intersecting_family() {
        let e1 = Edge::from_pairs(&[(0, 1), (1, 1), (2, 1)]).unwrap();
        let e2 = Edge::from_pairs(&[(0, 2), (1, 2), (2, 2)]).unwrap();
        assert!(build_star_member(3, 1, Some(vec![e1, e2])).is_err());
    }

    #[test]
    fn lift_counts_and_shape() {
        let c = complete(&[2, 2, 2], 3).unwrap();
        let fam = Family::uniform(c, 2).unwrap();
        let lift = lift_family(&fam).unwrap();
        assert_eq!(lift.class_sizes(), &[2, 2, 2, 2]);
        assert_eq!(lift.edge_count(), 16);

        let empty = KPartiteHypergraph::edgeless(vec![2, 2, 2], 3).unwrap();
        let lift = lift_family(&Family::uniform(empty, 1).unwrap()).unwrap();
        assert_eq!(lift.edge_count(), 0);
    }

    #[test]
    fn h13_equals_lift_of_balanced_copies() {
        let n = 3;
        let h = h13(n).unwrap();
        assert_eq!(h.class_sizes(), &[3, 3, 3, 3]);
        let per_color = build_balanced(3, n, n, Variant::WHitting).unwrap().edge_count();
        assert_eq!(h.edge_count(), n * per_color);
    }

    #[test]
    fn h32_pairs_all_meet_w() {
        let h = h32(3).unwrap();
        assert_eq!(h.uniformity(), 2);
        let w: VertexSet = (0..3).map(|c| VertexId::new(c, 0)).collect();
        assert!(h.edges().iter().all(|e| e.meets(&w)));
        // 3 class pairs, each 9 pairs of which 4 avoid W.
        assert_eq!(h.edge_count(), 3 * (9 - 4));
    }
}

//! Dense two-phase tableau simplex, generic over the scalar type.
//!
//! The engine is exact when instantiated at [`crate::Rational`] (the only
//! instantiation the public operations use) and also runs at `f64` for quick
//! approximate solves. It always terminates at a *basic* solution — the
//! number of positive structural variables never exceeds the number of
//! constraint rows — which is the property the sparse-support guarantees
//! downstream rely on.
//!
//! Pivoting: entering column by most-negative reduced cost with lowest-index
//! ties; Bland's rule (lowest-index entering, lowest-basis-index leaving)
//! takes over whenever a run of degenerate pivots exceeds the tableau size,
//! which rules out cycling while keeping the common case fast. All ties are
//! index-based, so solves are deterministic.

use num_traits::{Num, Signed};

/// Scalar bound for the LP engine: exact rationals and floats both qualify.
pub trait Scalar: Num + Signed + Clone + PartialOrd + std::fmt::Debug {}
impl<T: Num + Signed + Clone + PartialOrd + std::fmt::Debug> Scalar for T {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

/// Sparse constraint `Σ coeffs · x  rel  rhs` over variables `x ≥ 0`.
#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coeffs: Vec<(usize, T)>,
    pub rel: Rel,
    pub rhs: T,
}

impl<T> Constraint<T> {
    pub fn new(coeffs: Vec<(usize, T)>, rel: Rel, rhs: T) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpFailure {
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution<T> {
    /// Optimal objective value (for the maximization handed in).
    pub value: T,
    /// Values of the structural variables at the optimal basic solution.
    pub primal: Vec<T>,
}

struct Tableau<T> {
    rows: usize,
    cols: usize, // structural + slack + artificial (rhs kept separately)
    a: Vec<Vec<T>>,
    rhs: Vec<T>,
    obj: Vec<T>, // reduced-cost row, z_j - c_j
    obj_value: T,
    basis: Vec<usize>,
    num_structural: usize,
    artificial_start: usize,
}

impl<T: Scalar> Tableau<T> {
    fn is_artificial(&self, col: usize) -> bool {
        col >= self.artificial_start
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        for x in self.a[row].iter_mut() {
            *x = x.clone() / p.clone();
        }
        self.rhs[row] = self.rhs[row].clone() / p.clone();
        for r in 0..self.rows {
            if r == row || self.a[r][col].is_zero() {
                continue;
            }
            let factor = self.a[r][col].clone();
            for c in 0..self.cols {
                if !self.a[row][c].is_zero() {
                    let delta = factor.clone() * self.a[row][c].clone();
                    self.a[r][c] = self.a[r][c].clone() - delta;
                }
            }
            let delta = factor.clone() * self.rhs[row].clone();
            self.rhs[r] = self.rhs[r].clone() - delta;
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for c in 0..self.cols {
                if !self.a[row][c].is_zero() {
                    let delta = factor.clone() * self.a[row][c].clone();
                    self.obj[c] = self.obj[c].clone() - delta;
                }
            }
            let delta = factor * self.rhs[row].clone();
            self.obj_value = self.obj_value.clone() - delta;
        }
        self.basis[row] = col;
    }

    /// Entering column: most-negative reduced cost (lowest index on ties), or
    /// Bland's lowest-index rule when `bland` is set. Artificials never
    /// re-enter once barred.
    fn entering(&self, bland: bool, bar_artificials: bool) -> Option<usize> {
        let mut best: Option<usize> = None;
        for c in 0..self.cols {
            if bar_artificials && self.is_artificial(c) {
                continue;
            }
            if self.obj[c] < T::zero() {
                if bland {
                    return Some(c);
                }
                best = match best {
                    None => Some(c),
                    Some(b) if self.obj[c] < self.obj[b] => Some(c),
                    other => other,
                };
            }
        }
        best
    }

    /// Leaving row: minimum ratio, ties by lowest basis index (Bland).
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for r in 0..self.rows {
            if self.a[r][col] <= T::zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    // ratio(r) < ratio(b) compared without division:
                    // rhs[r] * a[b][col] < rhs[b] * a[r][col]
                    let lhs = self.rhs[r].clone() * self.a[b][col].clone();
                    let rhs = self.rhs[b].clone() * self.a[r][col].clone();
                    lhs < rhs || (lhs == rhs && self.basis[r] < self.basis[b])
                }
            };
            if better {
                best = Some(r);
            }
        }
        best
    }

    /// Runs pivots to optimality. Returns `Err(Unbounded)` when an improving
    /// column has no positive entry.
    fn optimize(&mut self, bar_artificials: bool) -> Result<(), LpFailure> {
        let mut degenerate_streak = 0usize;
        let bland_trigger = self.rows + self.cols + 16;
        loop {
            let bland = degenerate_streak > bland_trigger;
            let Some(col) = self.entering(bland, bar_artificials) else {
                return Ok(());
            };
            let Some(row) = self.leaving(col) else {
                return Err(LpFailure::Unbounded);
            };
            let degenerate = self.rhs[row].is_zero();
            self.pivot(row, col);
            if degenerate {
                degenerate_streak += 1;
            } else {
                degenerate_streak = 0;
            }
        }
    }

    /// Replaces the reduced-cost row to reflect the objective `c` (dense over
    /// all columns) under the current basis.
    fn price_objective(&mut self, c: &[T]) {
        for col in 0..self.cols {
            self.obj[col] = T::zero() - c[col].clone();
        }
        self.obj_value = T::zero();
        for r in 0..self.rows {
            let cb = c[self.basis[r]].clone();
            if cb.is_zero() {
                continue;
            }
            for col in 0..self.cols {
                if !self.a[r][col].is_zero() {
                    let delta = cb.clone() * self.a[r][col].clone();
                    self.obj[col] = self.obj[col].clone() + delta;
                }
            }
            let delta = cb * self.rhs[r].clone();
            self.obj_value = self.obj_value.clone() + delta;
        }
    }
}

/// Maximizes `objective · x` subject to the constraints and `x ≥ 0`.
///
/// Returns a basic optimal solution: at most (number of constraints) entries
/// of the primal vector are nonzero.
pub fn maximize<T: Scalar>(
    num_vars: usize,
    objective: &[T],
    constraints: &[Constraint<T>],
) -> Result<LpSolution<T>, LpFailure> {
    assert_eq!(objective.len(), num_vars, "objective length must match num_vars");
    let rows = constraints.len();

    // Normalize rhs >= 0, then count slack and artificial columns.
    let mut norm: Vec<(Vec<(usize, T)>, Rel, T)> = Vec::with_capacity(rows);
    for con in constraints {
        let mut coeffs = con.coeffs.clone();
        let mut rel = con.rel;
        let mut rhs = con.rhs.clone();
        if rhs < T::zero() {
            for (_, x) in coeffs.iter_mut() {
                *x = T::zero() - x.clone();
            }
            rhs = T::zero() - rhs;
            rel = match rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
        }
        norm.push((coeffs, rel, rhs));
    }
    let num_slack = norm.iter().filter(|(_, rel, _)| *rel != Rel::Eq).count();
    let num_artificial = norm.iter().filter(|(_, rel, _)| *rel != Rel::Le).count();
    let artificial_start = num_vars + num_slack;
    let cols = artificial_start + num_artificial;

    let mut t = Tableau {
        rows,
        cols,
        a: vec![vec![T::zero(); cols]; rows],
        rhs: Vec::with_capacity(rows),
        obj: vec![T::zero(); cols],
        obj_value: T::zero(),
        basis: vec![0; rows],
        num_structural: num_vars,
        artificial_start,
    };

    let mut next_slack = num_vars;
    let mut next_artificial = artificial_start;
    for (r, (coeffs, rel, rhs)) in norm.into_iter().enumerate() {
        for (j, x) in coeffs {
            assert!(j < num_vars, "constraint references variable {j} out of {num_vars}");
            t.a[r][j] = t.a[r][j].clone() + x;
        }
        t.rhs.push(rhs);
        match rel {
            Rel::Le => {
                t.a[r][next_slack] = T::one();
                t.basis[r] = next_slack;
                next_slack += 1;
            }
            Rel::Ge => {
                t.a[r][next_slack] = T::zero() - T::one();
                next_slack += 1;
                t.a[r][next_artificial] = T::one();
                t.basis[r] = next_artificial;
                next_artificial += 1;
            }
            Rel::Eq => {
                t.a[r][next_artificial] = T::one();
                t.basis[r] = next_artificial;
                next_artificial += 1;
            }
        }
    }

    // Phase 1: drive the artificials to zero.
    if num_artificial > 0 {
        let mut phase1_cost = vec![T::zero(); cols];
        for c in artificial_start..cols {
            phase1_cost[c] = T::zero() - T::one();
        }
        t.price_objective(&phase1_cost);
        t.optimize(false)?;
        if t.obj_value < T::zero() {
            return Err(LpFailure::Infeasible);
        }
        // Pivot any artificial still in the basis out on a structural or
        // slack column; rows with no such column are redundant and inert.
        for r in 0..rows {
            if t.is_artificial(t.basis[r]) {
                if let Some(col) = (0..artificial_start).find(|&c| !t.a[r][c].is_zero()) {
                    t.pivot(r, col);
                }
            }
        }
    }

    // Phase 2: the real objective, artificials barred.
    let mut cost = vec![T::zero(); cols];
    cost[..num_vars].clone_from_slice(objective);
    t.price_objective(&cost);
    t.optimize(true)?;

    let mut primal = vec![T::zero(); num_vars];
    for r in 0..rows {
        if t.basis[r] < t.num_structural {
            primal[t.basis[r]] = t.rhs[r].clone();
        }
    }
    Ok(LpSolution { value: t.obj_value, primal })
}

/// A basic feasible point of the constraint system, `Ok(None)` when the
/// system is infeasible.
pub fn feasible_point<T: Scalar>(
    num_vars: usize,
    constraints: &[Constraint<T>],
) -> Result<Option<Vec<T>>, LpFailure> {
    let zero = vec![T::zero(); num_vars];
    match maximize(num_vars, &zero, constraints) {
        Ok(sol) => Ok(Some(sol.primal)),
        Err(LpFailure::Infeasible) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, ratio_int, Rational};

    fn le(coeffs: Vec<(usize, i64)>, rhs: i64) -> Constraint<Rational> {
        Constraint::new(
            coeffs.into_iter().map(|(j, x)| (j, ratio_int(x))).collect(),
            Rel::Le,
            ratio_int(rhs),
        )
    }

    #[test]
    fn box_maximum() {
        let cons = vec![le(vec![(0, 1)], 1), le(vec![(1, 1)], 1)];
        let sol = maximize(2, &[ratio_int(1), ratio_int(1)], &cons).unwrap();
        assert_eq!(sol.value, ratio_int(2));
        assert_eq!(sol.primal, vec![ratio_int(1), ratio_int(1)]);
    }

    #[test]
    fn triangle_fractional_matching() {
        // Three pairwise-intersecting edges; each vertex row caps two of them.
        let cons = vec![
            le(vec![(0, 1), (1, 1)], 1),
            le(vec![(0, 1), (2, 1)], 1),
            le(vec![(1, 1), (2, 1)], 1),
        ];
        let obj = vec![ratio_int(1); 3];
        let sol = maximize(3, &obj, &cons).unwrap();
        assert_eq!(sol.value, ratio(3, 2));
        assert!(sol.primal.iter().all(|x| *x == ratio(1, 2)));
    }

    #[test]
    fn equality_system_feasible_point_is_basic() {
        // x0 + x1 = 1, x1 + x2 = 1 has the basic point (1, 0, 1).
        let eq = |coeffs: Vec<(usize, i64)>, rhs: i64| {
            Constraint::new(
                coeffs.into_iter().map(|(j, x)| (j, ratio_int(x))).collect::<Vec<_>>(),
                Rel::Eq,
                ratio_int(rhs),
            )
        };
        let cons = vec![eq(vec![(0, 1), (1, 1)], 1), eq(vec![(1, 1), (2, 1)], 1)];
        let point = feasible_point(3, &cons).unwrap().unwrap();
        let nonzero = point.iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
        assert!(nonzero <= 2, "basic point has support at most the row count");
    }

    #[test]
    fn infeasible_and_unbounded_are_reported() {
        let eq = Constraint::new(vec![(0, ratio_int(1))], Rel::Eq, ratio_int(-1));
        assert_eq!(feasible_point(1, &[eq]).unwrap(), None);

        let free: Vec<Constraint<Rational>> = vec![];
        assert_eq!(maximize(1, &[ratio_int(1)], &free), Err(LpFailure::Unbounded));
    }

    #[test]
    fn f64_instantiation_matches_exact_optimum() {
        let cons = vec![
            Constraint::new(vec![(0, 1.0), (1, 1.0)], Rel::Le, 1.0),
            Constraint::new(vec![(0, 1.0), (2, 1.0)], Rel::Le, 1.0),
            Constraint::new(vec![(1, 1.0), (2, 1.0)], Rel::Le, 1.0),
        ];
        let sol = maximize(3, &[1.0, 1.0, 1.0], &cons).unwrap();
        assert!((sol.value - 1.5).abs() < 1e-12);
    }

    #[test]
    fn degenerate_ties_terminate() {
        // Highly degenerate: many rows share the rhs of 0.
        let cons = vec![
            le(vec![(0, 1), (1, -1)], 0),
            le(vec![(1, 1), (2, -1)], 0),
            le(vec![(2, 1), (0, -1)], 0),
            le(vec![(0, 1), (1, 1), (2, 1)], 3),
        ];
        let sol = maximize(3, &[ratio_int(1), ratio_int(0), ratio_int(0)], &cons).unwrap();
        assert_eq!(sol.value, ratio_int(1));
    }
}

//! Dense two-phase simplex on the standard-form conversion of a
//! bounded-variable program.
//!
//! Conversion: every finite lower bound is shifted out (`x = lo + y`),
//! upper-bounded-only variables are negated (`x = hi - y`), free variables
//! are split (`x = y⁺ - y⁻`), finite upper bounds become explicit `≤` rows,
//! and every inequality gains a slack. Phase 1 starts from an all-artificial
//! basis. Pricing is Dantzig's rule with ties broken by lowest index; after
//! [`STALL_THRESHOLD`] consecutive degenerate pivots, Bland's rule takes
//! over until the objective moves again, so the method cannot cycle.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    LinearProgram, LpError, LpSolution, LpStatus, Relation, FEASIBILITY_TOLERANCE,
    OPTIMALITY_TOLERANCE, STALL_THRESHOLD,
};
use crate::math;

/// Matrix entries at or below this magnitude are treated as zero in pivots.
const PIVOT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy)]
enum VarExpr {
    /// `x = lo + y`
    Shifted { col: usize, lo: f64 },
    /// `x = hi - y`
    Negated { col: usize, hi: f64 },
    /// `x = y⁺ - y⁻`
    Split { pos: usize, neg: usize },
}

struct StandardForm {
    cols: usize,
    cost: Vec<f64>,
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    var_map: Vec<VarExpr>,
}

/// `None` when some bound pair has `lo > hi` (trivially infeasible).
fn standardize(p: &LinearProgram) -> Option<StandardForm> {
    let mut cost: Vec<f64> = Vec::new();
    let mut var_map: Vec<VarExpr> = Vec::new();
    let mut cols = 0usize;
    // Finite two-sided bounds become `y ≤ hi - lo` rows.
    let mut upper_rows: Vec<(usize, f64)> = Vec::new();

    for (j, &(lo, hi)) in p.bounds.iter().enumerate() {
        if lo > hi {
            return None;
        }
        let c = p.objective[j];
        if lo.is_finite() {
            let col = cols;
            cols += 1;
            cost.push(c);
            var_map.push(VarExpr::Shifted { col, lo });
            if hi.is_finite() {
                upper_rows.push((col, hi - lo));
            }
        } else if hi.is_finite() {
            let col = cols;
            cols += 1;
            cost.push(-c);
            var_map.push(VarExpr::Negated { col, hi });
        } else {
            let pos = cols;
            let neg = cols + 1;
            cols += 2;
            cost.push(c);
            cost.push(-c);
            var_map.push(VarExpr::Split { pos, neg });
        }
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rhs: Vec<f64> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();

    for constraint in &p.constraints {
        let mut row = vec![0.0; cols];
        let mut shift = 0.0;
        for (j, &a) in constraint.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            match var_map[j] {
                VarExpr::Shifted { col, lo } => {
                    row[col] += a;
                    shift += a * lo;
                }
                VarExpr::Negated { col, hi } => {
                    row[col] -= a;
                    shift += a * hi;
                }
                VarExpr::Split { pos, neg } => {
                    row[pos] += a;
                    row[neg] -= a;
                }
            }
        }
        rows.push(row);
        rhs.push(constraint.rhs - shift);
        relations.push(constraint.relation);
    }
    for (col, ub) in upper_rows {
        let mut row = vec![0.0; cols];
        row[col] = 1.0;
        rows.push(row);
        rhs.push(ub);
        relations.push(Relation::Le);
    }

    // Slack columns.
    let slack_count = relations.iter().filter(|r| **r != Relation::Eq).count();
    let total = cols + slack_count;
    let mut next_slack = cols;
    for (i, relation) in relations.iter().enumerate() {
        rows[i].resize(total, 0.0);
        match relation {
            Relation::Le => {
                rows[i][next_slack] = 1.0;
                next_slack += 1;
            }
            Relation::Ge => {
                rows[i][next_slack] = -1.0;
                next_slack += 1;
            }
            Relation::Eq => {}
        }
    }
    cost.resize(total, 0.0);

    Some(StandardForm {
        cols: total,
        cost,
        rows,
        rhs,
        var_map,
    })
}

struct Tableau {
    /// `m` constraint rows, then the phase-2 cost row, then the phase-1
    /// cost row. Width `n + m + 1`; the last column is the rhs, and the
    /// cost rows hold the negated objective value there.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    n: usize,
    width: usize,
    pivots: usize,
    pivot_cap: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn new(std: &StandardForm) -> Self {
        let m = std.rows.len();
        let n = std.cols;
        let width = n + m + 1;
        let mut rows = vec![vec![0.0; width]; m + 2];
        for i in 0..m {
            let flip = std.rhs[i] < 0.0;
            for j in 0..n {
                rows[i][j] = if flip { -std.rows[i][j] } else { std.rows[i][j] };
            }
            rows[i][n + i] = 1.0;
            rows[i][width - 1] = math::abs(std.rhs[i]);
        }
        // Phase-2 costs: the artificial basis has zero phase-2 cost, so the
        // raw cost row is already reduced.
        for j in 0..n {
            rows[m][j] = std.cost[j];
        }
        // Phase-1 costs reduced against the artificial basis.
        for j in 0..width {
            let mut sum = 0.0;
            for i in 0..m {
                sum += rows[i][j];
            }
            rows[m + 1][j] = -sum;
        }
        for i in 0..m {
            rows[m + 1][n + i] = 0.0;
        }
        let basis: Vec<usize> = (0..m).map(|i| n + i).collect();
        Self {
            rows,
            basis,
            n,
            width,
            pivots: 0,
            pivot_cap: 2000 + 200 * (m + n),
        }
    }

    fn constraint_rows(&self) -> usize {
        self.basis.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for j in 0..self.width {
            self.rows[r][j] /= p;
        }
        self.rows[r][c] = 1.0;
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][c];
            if factor == 0.0 {
                continue;
            }
            for j in 0..self.width {
                self.rows[i][j] -= factor * self.rows[r][j];
            }
            self.rows[i][c] = 0.0;
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Most negative reduced cost below `-OPTIMALITY_TOLERANCE` (Dantzig),
    /// or the first such column under Bland's rule. Columns `>= limit`
    /// never enter.
    fn entering(&self, cost_row: usize, limit: usize, bland: bool) -> Option<usize> {
        let row = &self.rows[cost_row];
        let mut best: Option<(usize, f64)> = None;
        for (j, &v) in row.iter().enumerate().take(limit) {
            if v < -OPTIMALITY_TOLERANCE {
                if bland {
                    return Some(j);
                }
                if best.map_or(true, |(_, bv)| v < bv) {
                    best = Some((j, v));
                }
            }
        }
        best.map(|(j, _)| j)
    }

    /// Minimum-ratio row; ties broken by the smallest basis variable,
    /// which is Bland's leaving rule and keeps everything deterministic.
    fn leaving(&self, col: usize) -> Option<usize> {
        let m = self.constraint_rows();
        let mut pick: Option<(usize, f64)> = None;
        for i in 0..m {
            let a = self.rows[i][col];
            if a > PIVOT_TOLERANCE {
                let ratio = self.rows[i][self.width - 1] / a;
                let better = match pick {
                    None => true,
                    Some((pi, pr)) => {
                        ratio < pr - 1e-12
                            || (ratio <= pr + 1e-12 && self.basis[i] < self.basis[pi])
                    }
                };
                if better {
                    pick = Some((i, ratio));
                }
            }
        }
        pick.map(|(i, _)| i)
    }

    fn run_phase(&mut self, cost_row_offset: usize, limit: usize) -> Result<PhaseEnd, LpError> {
        let mut degenerate_streak = 0usize;
        loop {
            let cost_row = self.constraint_rows() + cost_row_offset;
            let bland = degenerate_streak >= STALL_THRESHOLD;
            let Some(c) = self.entering(cost_row, limit, bland) else {
                return Ok(PhaseEnd::Optimal);
            };
            let Some(r) = self.leaving(c) else {
                return Ok(PhaseEnd::Unbounded);
            };
            let before = self.rows[cost_row][self.width - 1];
            self.pivot(r, c);
            if self.pivots > self.pivot_cap {
                return Err(LpError::Stalled { pivots: self.pivots });
            }
            let after = self.rows[cost_row][self.width - 1];
            if math::abs(after - before) <= 1e-13 * (1.0 + math::abs(before)) {
                degenerate_streak += 1;
            } else {
                degenerate_streak = 0;
            }
        }
    }

    /// Value of the given cost row (the rhs cell stores its negation).
    fn objective(&self, cost_row_offset: usize) -> f64 {
        let row = self.constraint_rows() + cost_row_offset;
        -self.rows[row][self.width - 1]
    }

    /// Pivots basic artificials out after phase 1; drops redundant rows.
    fn purge_artificials(&mut self) {
        let mut i = 0;
        while i < self.constraint_rows() {
            if self.basis[i] < self.n {
                i += 1;
                continue;
            }
            let pivot_col = (0..self.n).find(|&j| math::abs(self.rows[i][j]) > PIVOT_TOLERANCE);
            match pivot_col {
                Some(c) => {
                    // rhs of this row is ~0, so the pivot is degenerate and
                    // feasibility is preserved regardless of sign.
                    self.pivot(i, c);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn standard_solution(&self) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                y[b] = self.rows[i][self.width - 1];
            }
        }
        y
    }
}

pub(super) fn solve(p: &LinearProgram) -> Result<LpSolution, LpError> {
    let Some(std) = standardize(p) else {
        return Ok(LpSolution::non_optimal(LpStatus::Infeasible, p.num_vars()));
    };

    let mut tableau = Tableau::new(&std);
    let rhs_scale = std.rhs.iter().fold(0.0f64, |acc, b| acc.max(math::abs(*b)));

    match tableau.run_phase(1, tableau.width - 1)? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => {
            // Phase-1 objective is bounded below by zero; this is numerical.
            return Err(LpError::Stalled { pivots: tableau.pivots });
        }
    }
    if tableau.objective(1) > FEASIBILITY_TOLERANCE * (1.0 + rhs_scale) {
        return Ok(LpSolution::non_optimal(LpStatus::Infeasible, p.num_vars()));
    }
    tableau.purge_artificials();

    match tableau.run_phase(0, std.cols)? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => {
            return Ok(LpSolution::non_optimal(LpStatus::Unbounded, p.num_vars()));
        }
    }

    let y = tableau.standard_solution();
    let mut x = vec![0.0; p.num_vars()];
    for (j, expr) in std.var_map.iter().enumerate() {
        x[j] = match *expr {
            VarExpr::Shifted { col, lo } => lo + y[col],
            VarExpr::Negated { col, hi } => hi - y[col],
            VarExpr::Split { pos, neg } => y[pos] - y[neg],
        };
    }
    let objective_value: f64 = p.objective.iter().zip(&x).map(|(c, xi)| c * xi).sum();
    let max_primal_residual = p.primal_residual(&x);
    if max_primal_residual > FEASIBILITY_TOLERANCE {
        return Err(LpError::Numerical {
            residual: max_primal_residual,
        });
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        x,
        objective_value,
        max_primal_residual,
    })
}

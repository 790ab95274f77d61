//! Linear and small integer-linear programs.
//!
//! The solver is a dense two-phase simplex method: Dantzig pricing with
//! Bland's rule engaged after a stall of degenerate pivots, so every solve
//! terminates and identical programs yield identical solutions. Integer
//! programs run depth-first branch-and-bound on LP relaxations with
//! most-fractional branching and best-bound pruning; instances are capped
//! at 64 integer variables. No sparse factorizations, no warm starts —
//! everything here is desk scale.

mod branch;
mod simplex;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Primal feasibility tolerance: optimal solutions satisfy every row and
/// bound to within this slack.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-9;
/// Reduced-cost (optimality) tolerance.
pub const OPTIMALITY_TOLERANCE: f64 = 1e-9;
/// Consecutive degenerate pivots tolerated before Bland's rule engages.
pub const STALL_THRESHOLD: usize = 50;
/// Hard cap on integer variables in [`solve_ilp`].
pub const MAX_INTEGER_VARIABLES: usize = 64;
/// Integer feasibility tolerance inside branch-and-bound.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `minimize c·x` subject to linear constraints and per-variable bounds
/// (`±∞` allowed).
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<(f64, f64)>,
}

impl LinearProgram {
    /// A program over `num_vars` free variables with zero objective.
    pub fn new(num_vars: usize) -> Self {
        Self {
            objective: vec![0.0; num_vars],
            constraints: Vec::new(),
            bounds: vec![(f64::NEG_INFINITY, f64::INFINITY); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push_constraint(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    fn validate(&self) -> Result<(), LpError> {
        if self.objective.is_empty() {
            return Err(LpError::EmptyProgram);
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(LpError::NonFiniteObjective);
        }
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(LpError::ArityMismatch {
                row: usize::MAX,
                expected: n,
                got: self.bounds.len(),
            });
        }
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(LpError::ArityMismatch {
                    row,
                    expected: n,
                    got: c.coeffs.len(),
                });
            }
        }
        Ok(())
    }

    /// Worst violation of `x` against all rows and bounds (0 when feasible).
    pub fn primal_residual(&self, x: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for c in &self.constraints {
            let v: f64 = c.coeffs.iter().zip(x).map(|(a, xi)| a * xi).sum();
            let violation = match c.relation {
                Relation::Le => v - c.rhs,
                Relation::Ge => c.rhs - v,
                Relation::Eq => crate::math::abs(v - c.rhs),
            };
            worst = worst.max(violation);
        }
        for (j, &(lo, hi)) in self.bounds.iter().enumerate() {
            worst = worst.max(lo - x[j]);
            worst = worst.max(x[j] - hi);
        }
        worst.max(0.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Meaningful only when `status == Optimal`.
    pub x: Vec<f64>,
    pub objective_value: f64,
    pub max_primal_residual: f64,
}

impl LpSolution {
    pub(crate) fn non_optimal(status: LpStatus, num_vars: usize) -> Self {
        Self {
            status,
            x: vec![0.0; num_vars],
            objective_value: match status {
                LpStatus::Unbounded => f64::NEG_INFINITY,
                _ => f64::NAN,
            },
            max_primal_residual: f64::NAN,
        }
    }
}

/// An integer-program solution; `relaxation_bound` is the optimum of the
/// root LP relaxation (a lower bound on the integer optimum).
#[derive(Clone, Debug, PartialEq)]
pub struct IlpSolution {
    pub status: LpStatus,
    pub x: Vec<f64>,
    pub objective_value: f64,
    pub max_primal_residual: f64,
    pub relaxation_bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpError {
    EmptyProgram,
    NonFiniteObjective,
    ArityMismatch { row: usize, expected: usize, got: usize },
    /// Pivot or node budget exhausted without convergence.
    Stalled { pivots: usize },
    /// An optimal basis was found but the recomputed primal residual
    /// exceeds [`FEASIBILITY_TOLERANCE`].
    Numerical { residual: f64 },
    TooManyIntegerVariables { got: usize, max: usize },
    IntegerVariableOutOfRange { index: usize, num_vars: usize },
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::EmptyProgram => write!(f, "program has no variables"),
            LpError::NonFiniteObjective => write!(f, "objective has a non-finite coefficient"),
            LpError::ArityMismatch { row, expected, got } => {
                write!(f, "row {row} has arity {got}, expected {expected}")
            }
            LpError::Stalled { pivots } => write!(f, "solver stalled after {pivots} pivots"),
            LpError::Numerical { residual } => {
                write!(f, "numerical failure: primal residual {residual:e}")
            }
            LpError::TooManyIntegerVariables { got, max } => {
                write!(f, "{got} integer variables exceed the guard of {max}")
            }
            LpError::IntegerVariableOutOfRange { index, num_vars } => {
                write!(f, "integer variable {index} out of range for {num_vars} variables")
            }
        }
    }
}

impl core::error::Error for LpError {}

/// Solves a linear program. Infeasible and unbounded outcomes are
/// statuses, not errors; only numerical failure (stall) is an `Err`.
pub fn solve_lp(program: &LinearProgram) -> Result<LpSolution, LpError> {
    program.validate()?;
    simplex::solve(program)
}

/// Solves `program` with the listed variables constrained to integers.
/// With an empty `integer_vars` this is exactly [`solve_lp`].
pub fn solve_ilp(program: &LinearProgram, integer_vars: &[usize]) -> Result<IlpSolution, LpError> {
    program.validate()?;
    branch::solve(program, integer_vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn single_lower_bound() {
        // minimize x subject to x ≥ 3
        let mut p = LinearProgram::new(1);
        p.objective = vec![1.0];
        p.push_constraint(vec![1.0], Relation::Ge, 3.0);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_close(s.x[0], 3.0, 1e-9);
        assert_close(s.objective_value, 3.0, 1e-9);
        assert!(s.max_primal_residual <= FEASIBILITY_TOLERANCE);
    }

    #[test]
    fn triangle_vertex_optimum() {
        // minimize -x - 2y over x + y ≤ 1, x ≥ 0, y ≥ 0.
        let mut p = LinearProgram::new(2);
        p.objective = vec![-1.0, -2.0];
        p.bounds = vec![(0.0, f64::INFINITY); 2];
        p.push_constraint(vec![1.0, 1.0], Relation::Le, 1.0);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);

        // Independent oracle: the feasible region is a triangle; enumerate
        // its three vertices and take the best.
        let vertices = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)];
        let oracle = vertices
            .iter()
            .map(|&(x, y)| -x - 2.0 * y)
            .fold(f64::INFINITY, f64::min);
        assert_close(oracle, -2.0, 0.0);

        assert_close(s.objective_value, oracle, 1e-9);
        assert_close(s.x[0], 0.0, 1e-9);
        assert_close(s.x[1], 1.0, 1e-9);
    }

    #[test]
    fn empty_feasible_set() {
        let mut p = LinearProgram::new(1);
        p.objective = vec![1.0];
        p.push_constraint(vec![1.0], Relation::Le, -1.0);
        p.push_constraint(vec![1.0], Relation::Ge, 0.0);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_descent() {
        let mut p = LinearProgram::new(1);
        p.objective = vec![-1.0];
        p.bounds = vec![(0.0, f64::INFINITY)];
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn crossing_bounds_infeasible() {
        let mut p = LinearProgram::new(1);
        p.objective = vec![1.0];
        p.bounds = vec![(1.0, -1.0)];
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn equality_and_free_variables() {
        // minimize x + y subject to x - y = 4, both free; optimum is the
        // whole line, objective unbounded below? No: x + y = (y + 4) + y
        // = 2y + 4 with y free → unbounded.
        let mut p = LinearProgram::new(2);
        p.objective = vec![1.0, 1.0];
        p.push_constraint(vec![1.0, -1.0], Relation::Eq, 4.0);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);

        // Pin y ≥ 0 and it has a vertex at (4, 0).
        p.bounds[1] = (0.0, f64::INFINITY);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_close(s.objective_value, 4.0, 1e-9);
    }

    #[test]
    fn upper_bounded_variable() {
        // maximize x (minimize -x) with -2 ≤ x ≤ 7.5.
        let mut p = LinearProgram::new(1);
        p.objective = vec![-1.0];
        p.bounds = vec![(-2.0, 7.5)];
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_close(s.x[0], 7.5, 1e-9);
    }

    #[test]
    fn residuals_are_recomputed_per_row() {
        let mut p = LinearProgram::new(3);
        p.objective = vec![1.0, 2.0, 0.5];
        p.bounds = vec![(0.0, f64::INFINITY); 3];
        p.push_constraint(vec![1.0, 1.0, 1.0], Relation::Ge, 2.0);
        p.push_constraint(vec![1.0, -1.0, 0.0], Relation::Le, 0.5);
        p.push_constraint(vec![0.0, 1.0, -1.0], Relation::Eq, 0.25);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!(s.max_primal_residual <= FEASIBILITY_TOLERANCE);
        assert_close(s.max_primal_residual, p.primal_residual(&s.x), 0.0);
    }

    #[test]
    fn identical_programs_identical_solutions() {
        let mut p = LinearProgram::new(4);
        p.objective = vec![1.0, -1.0, 2.0, 0.0];
        p.bounds = vec![(0.0, 10.0); 4];
        p.push_constraint(vec![1.0, 1.0, 1.0, 1.0], Relation::Le, 7.0);
        p.push_constraint(vec![1.0, -2.0, 0.0, 1.0], Relation::Ge, -3.0);
        p.push_constraint(vec![0.0, 1.0, 1.0, -1.0], Relation::Eq, 2.0);
        let a = solve_lp(&p).unwrap();
        let b = solve_lp(&p).unwrap();
        assert_eq!(a.x, b.x);
        assert_eq!(a.objective_value, b.objective_value);
    }

    #[test]
    fn ilp_ceiling() {
        // minimize x, x integer, x ≥ 2.5 → 3, relaxation 2.5.
        let mut p = LinearProgram::new(1);
        p.objective = vec![1.0];
        p.push_constraint(vec![1.0], Relation::Ge, 2.5);
        let s = solve_ilp(&p, &[0]).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_close(s.x[0], 3.0, 1e-9);
        assert_close(s.objective_value, 3.0, 1e-9);
        assert_close(s.relaxation_bound, 2.5, 1e-9);
    }

    #[test]
    fn ilp_integrality_gap() {
        // minimize x + y, integers ≥ 0, 2x + 2y ≥ 3 → value 2, relaxation 1.5.
        let mut p = LinearProgram::new(2);
        p.objective = vec![1.0, 1.0];
        p.bounds = vec![(0.0, f64::INFINITY); 2];
        p.push_constraint(vec![2.0, 2.0], Relation::Ge, 3.0);
        let s = solve_ilp(&p, &[0, 1]).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);

        // Exhaustive oracle over the small integer box.
        let mut best = f64::INFINITY;
        for x in 0..=3i64 {
            for y in 0..=3i64 {
                if 2 * x + 2 * y >= 3 {
                    best = best.min((x + y) as f64);
                }
            }
        }
        assert_close(best, 2.0, 0.0);

        assert_close(s.objective_value, best, 1e-9);
        assert_close(s.relaxation_bound, 1.5, 1e-9);
        assert!(s.objective_value >= s.relaxation_bound - 1e-9);
    }

    #[test]
    fn ilp_without_integer_vars_is_lp() {
        let mut p = LinearProgram::new(2);
        p.objective = vec![-1.0, -2.0];
        p.bounds = vec![(0.0, f64::INFINITY); 2];
        p.push_constraint(vec![1.0, 1.0], Relation::Le, 1.0);
        let lp = solve_lp(&p).unwrap();
        let ilp = solve_ilp(&p, &[]).unwrap();
        assert_eq!(lp.x, ilp.x);
        assert_eq!(lp.objective_value, ilp.objective_value);
        assert_eq!(ilp.relaxation_bound, lp.objective_value);
    }

    #[test]
    fn ilp_size_guard() {
        let p = LinearProgram::new(70);
        let vars: alloc::vec::Vec<usize> = (0..70).collect();
        assert_eq!(
            solve_ilp(&p, &vars),
            Err(LpError::TooManyIntegerVariables { got: 70, max: 64 })
        );
    }

    #[test]
    fn ilp_infeasible_status() {
        let mut p = LinearProgram::new(1);
        p.objective = vec![1.0];
        // 0.4 ≤ x ≤ 0.6 contains no integer.
        p.bounds = vec![(0.4, 0.6)];
        let s = solve_ilp(&p, &[0]).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn degenerate_rows_still_terminate() {
        // Heavily redundant constraints around one vertex.
        let mut p = LinearProgram::new(2);
        p.objective = vec![1.0, 1.0];
        p.bounds = vec![(0.0, f64::INFINITY); 2];
        for _ in 0..8 {
            p.push_constraint(vec![1.0, 1.0], Relation::Ge, 1.0);
            p.push_constraint(vec![1.0, 0.0], Relation::Ge, 0.0);
        }
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_close(s.objective_value, 1.0, 1e-9);
    }
}

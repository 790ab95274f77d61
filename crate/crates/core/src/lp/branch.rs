//! Depth-first branch-and-bound over LP relaxations.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    simplex, IlpSolution, LinearProgram, LpError, LpSolution, LpStatus, INTEGRALITY_TOLERANCE,
    MAX_INTEGER_VARIABLES,
};
use crate::math;

/// Node budget; exceeding it is reported as a stall.
const NODE_BUDGET: usize = 100_000;

fn wrap(lp: LpSolution, relaxation_bound: f64) -> IlpSolution {
    IlpSolution {
        status: lp.status,
        x: lp.x,
        objective_value: lp.objective_value,
        max_primal_residual: lp.max_primal_residual,
        relaxation_bound,
    }
}

pub(super) fn solve(p: &LinearProgram, integer_vars: &[usize]) -> Result<IlpSolution, LpError> {
    let mut ints: Vec<usize> = integer_vars.to_vec();
    ints.sort_unstable();
    ints.dedup();
    for &k in &ints {
        if k >= p.num_vars() {
            return Err(LpError::IntegerVariableOutOfRange {
                index: k,
                num_vars: p.num_vars(),
            });
        }
    }
    if ints.len() > MAX_INTEGER_VARIABLES {
        return Err(LpError::TooManyIntegerVariables {
            got: ints.len(),
            max: MAX_INTEGER_VARIABLES,
        });
    }
    if ints.is_empty() {
        let lp = simplex::solve(p)?;
        let bound = lp.objective_value;
        return Ok(wrap(lp, bound));
    }

    let root = simplex::solve(p)?;
    if root.status != LpStatus::Optimal {
        let bound = root.objective_value;
        return Ok(wrap(root, bound));
    }
    let relaxation_bound = root.objective_value;

    // Depth-first: each node is a bounds vector; the floor branch is pushed
    // last so it is explored first.
    let mut stack: Vec<Vec<(f64, f64)>> = vec![p.bounds.clone()];
    let mut incumbent: Option<LpSolution> = None;
    let mut nodes = 0usize;

    while let Some(bounds) = stack.pop() {
        nodes += 1;
        if nodes > NODE_BUDGET {
            return Err(LpError::Stalled { pivots: nodes });
        }
        let mut node = p.clone();
        node.bounds = bounds.clone();
        let sol = simplex::solve(&node)?;
        match sol.status {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => {
                return Ok(wrap(
                    LpSolution::non_optimal(LpStatus::Unbounded, p.num_vars()),
                    relaxation_bound,
                ));
            }
            LpStatus::Optimal => {}
        }
        // Best-bound pruning: a node cannot beat the incumbent by more
        // than the optimality tolerance.
        if let Some(inc) = &incumbent {
            if sol.objective_value >= inc.objective_value - 1e-9 {
                continue;
            }
        }

        // Most-fractional branching variable, lowest index on ties.
        let mut branch: Option<(usize, f64, f64)> = None;
        for &k in &ints {
            let v = sol.x[k];
            let dist = math::abs(v - math::round(v));
            if dist > INTEGRALITY_TOLERANCE && branch.map_or(true, |(_, _, best)| dist > best) {
                branch = Some((k, v, dist));
            }
        }

        match branch {
            None => {
                // Integer-feasible within tolerance: pin the integers to
                // their rounded values and re-solve so the reported vertex
                // is exact in the integer coordinates.
                let mut fixed = node.clone();
                for &k in &ints {
                    let r = math::round(sol.x[k]);
                    fixed.bounds[k] = (r, r);
                }
                let fsol = simplex::solve(&fixed)?;
                if fsol.status == LpStatus::Optimal
                    && incumbent
                        .as_ref()
                        .map_or(true, |inc| fsol.objective_value < inc.objective_value)
                {
                    incumbent = Some(fsol);
                }
            }
            Some((k, v, _)) => {
                let mut up = bounds.clone();
                up[k].0 = math::ceil(v).max(bounds[k].0);
                let mut down = bounds;
                down[k].1 = math::floor(v).min(down[k].1);
                stack.push(up);
                stack.push(down);
            }
        }
    }

    match incumbent {
        Some(sol) => Ok(wrap(sol, relaxation_bound)),
        None => Ok(wrap(
            LpSolution::non_optimal(LpStatus::Infeasible, p.num_vars()),
            relaxation_bound,
        )),
    }
}

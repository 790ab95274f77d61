//! Mass, normal norm, and the flat norm with decomposition certificates.
//!
//! On a complex the mass of a chain is `Σ |c_σ|·vol(σ)` and the normal norm
//! adds the mass of the boundary. The flat norm minimizes
//! `M(R) + M(S)` over decompositions `T = R + ∂S` with `R` an `m`-chain and
//! `S` an `(m+1)`-chain; real mode solves the LP obtained by splitting each
//! coefficient into nonnegative parts, integer mode solves the corresponding
//! ILP over integer multiplicities. Either way the result carries the full
//! certificate `(value, R, S)`, which callers can re-verify independently.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{Chain, ChainError, Coefficient, IntChain, RealChain};
use crate::lp::{
    solve_ilp, solve_lp, LinearProgram, LpError, LpStatus, Relation, MAX_INTEGER_VARIABLES,
};
use crate::math;
use crate::simplicial::SimplicialComplex;

/// Real-mode coefficients at or below this magnitude are dropped from
/// extracted decomposition chains.
const REAL_COEFF_EPSILON: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatMode {
    Real,
    Integer,
}

impl fmt::Display for FlatMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlatMode::Real => write!(f, "real"),
            FlatMode::Integer => write!(f, "integer"),
        }
    }
}

/// Certificate that `‖T‖_F = M(R) + M(S)` with `T = R + ∂S`.
#[derive(Clone, Debug)]
pub struct FlatDecomposition<C: Coefficient> {
    pub value: f64,
    /// The `m`-dimensional remainder.
    pub r: Chain<C>,
    /// The `(m+1)`-dimensional filling; the zero chain when the complex has
    /// no `(m+1)`-simplices.
    pub s: Chain<C>,
}

impl<C: Coefficient> FlatDecomposition<C> {
    /// Re-checks `T = R + ∂S` componentwise against `tol` and that the
    /// stored value matches `M(R) + M(S)`. The input chain may be of either
    /// coefficient mode.
    pub fn verify<T: Coefficient>(
        &self,
        complex: &SimplicialComplex,
        t: &Chain<T>,
        tol: f64,
    ) -> Result<bool, NormError> {
        let reconstructed = if self.s.is_zero() {
            self.r.clone()
        } else {
            self.r.add(&complex.boundary(&self.s)?)?
        };
        let count = complex.simplex_count(t.dim());
        for index in 0..count {
            let got = reconstructed.coefficient(index).to_f64();
            let want = t.coefficient(index).to_f64();
            if math::abs(got - want) > tol {
                return Ok(false);
            }
        }
        let mass_sum = mass(complex, &self.r)? + mass(complex, &self.s)?;
        Ok(math::abs(mass_sum - self.value) <= 1e-9)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NormError {
    Chain(ChainError),
    Lp(LpError),
    /// Integer-mode flat norm would need more integer variables than the
    /// branch-and-bound guard allows; real mode has no such limit.
    IlpSizeGuard { integer_vars: usize, max: usize },
    /// The decomposition LP reported something other than an optimum;
    /// it is feasible and bounded by construction, so this is numerical.
    SolverFailure { status: LpStatus },
}

impl fmt::Display for NormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormError::Chain(e) => write!(f, "{e}"),
            NormError::Lp(e) => write!(f, "{e}"),
            NormError::IlpSizeGuard { integer_vars, max } => write!(
                f,
                "integer-mode flat norm needs {integer_vars} integer variables (guard: {max}); use real mode"
            ),
            NormError::SolverFailure { status } => {
                write!(f, "flat-norm program unexpectedly {status:?}")
            }
        }
    }
}

impl core::error::Error for NormError {}

impl From<ChainError> for NormError {
    fn from(e: ChainError) -> Self {
        NormError::Chain(e)
    }
}

impl From<LpError> for NormError {
    fn from(e: LpError) -> Self {
        NormError::Lp(e)
    }
}

/// Mass `M(T) = Σ |c_σ|·vol(σ)`; zero for the zero chain.
pub fn mass<C: Coefficient>(
    complex: &SimplicialComplex,
    t: &Chain<C>,
) -> Result<f64, ChainError> {
    complex.validate_chain(t)?;
    Ok(t.iter()
        .map(|(index, c)| math::abs(c.to_f64()) * complex.volume(t.dim(), index))
        .sum())
}

/// Normal norm `N(T) = M(T) + M(∂T)`; the boundary term is zero in
/// dimension zero.
pub fn normal_norm<C: Coefficient>(
    complex: &SimplicialComplex,
    t: &Chain<C>,
) -> Result<f64, ChainError> {
    let m = mass(complex, t)?;
    if t.dim() == 0 {
        return Ok(m);
    }
    let b = complex.boundary(t)?;
    Ok(m + mass(complex, &b)?)
}

/// Variable layout of the decomposition program: `r⁺ r⁻ s⁺ s⁻`, each block
/// indexed by canonical simplex order.
struct FlatProgram {
    program: LinearProgram,
    n_r: usize,
    n_s: usize,
}

fn flat_program<C: Coefficient>(
    complex: &SimplicialComplex,
    t: &Chain<C>,
) -> Result<FlatProgram, NormError> {
    let m = t.dim();
    let n_r = complex.simplex_count(m);
    let n_s = complex.simplex_count(m + 1);
    let vars = 2 * (n_r + n_s);
    let mut program = LinearProgram::new(vars);
    for j in 0..n_r {
        let vol = complex.volume(m, j);
        program.objective[j] = vol;
        program.objective[n_r + j] = vol;
    }
    for j in 0..n_s {
        let vol = complex.volume(m + 1, j);
        program.objective[2 * n_r + j] = vol;
        program.objective[2 * n_r + n_s + j] = vol;
    }
    program.bounds = vec![(0.0, f64::INFINITY); vars];

    // One equality per m-simplex: r + ∂s = T.
    let rows = if n_s > 0 {
        complex.coboundary_rows(m + 1)
    } else {
        vec![Vec::new(); n_r]
    };
    for j in 0..n_r {
        let mut coeffs = vec![0.0; vars];
        coeffs[j] = 1.0;
        coeffs[n_r + j] = -1.0;
        for &(tau, sign) in &rows[j] {
            coeffs[2 * n_r + tau] += sign as f64;
            coeffs[2 * n_r + n_s + tau] -= sign as f64;
        }
        program.push_constraint(coeffs, Relation::Eq, t.coefficient(j).to_f64());
    }
    Ok(FlatProgram { program, n_r, n_s })
}

/// Flat norm over real decompositions: the LP relaxation, a true seminorm
/// on real chains and a lower bound for the integer value.
pub fn flat_norm_real<C: Coefficient>(
    complex: &SimplicialComplex,
    t: &Chain<C>,
) -> Result<FlatDecomposition<f64>, NormError> {
    complex.validate_chain(t)?;
    let m = t.dim();
    if complex.simplex_count(m) == 0 || complex.simplex_count(m + 1) == 0 {
        // No filling space: the decomposition is forced to R = T, S = 0.
        let mut r = RealChain::zero(m);
        for (index, c) in t.iter() {
            r.add_term(index, c.to_f64())?;
        }
        let value = mass(complex, &r)?;
        return Ok(FlatDecomposition {
            value,
            r,
            s: RealChain::zero(m + 1),
        });
    }

    let FlatProgram { program, n_r, n_s } = flat_program(complex, t)?;
    let sol = solve_lp(&program)?;
    if sol.status != LpStatus::Optimal {
        return Err(NormError::SolverFailure { status: sol.status });
    }
    let mut r = RealChain::zero(m);
    for j in 0..n_r {
        let v = sol.x[j] - sol.x[n_r + j];
        if math::abs(v) > REAL_COEFF_EPSILON {
            r.add_term(j, v)?;
        }
    }
    let mut s = RealChain::zero(m + 1);
    for j in 0..n_s {
        let v = sol.x[2 * n_r + j] - sol.x[2 * n_r + n_s + j];
        if math::abs(v) > REAL_COEFF_EPSILON {
            s.add_term(j, v)?;
        }
    }
    let value = mass(complex, &r)? + mass(complex, &s)?;
    Ok(FlatDecomposition { value, r, s })
}

/// Flat norm over integer decompositions (rectifiable multiplicities).
/// Subject to the 64-integer-variable guard of [`solve_ilp`]; the
/// certificate identity `T = R + ∂S` holds exactly in integer arithmetic.
pub fn flat_norm_integer(
    complex: &SimplicialComplex,
    t: &IntChain,
) -> Result<FlatDecomposition<i64>, NormError> {
    complex.validate_chain(t)?;
    let m = t.dim();
    if complex.simplex_count(m) == 0 || complex.simplex_count(m + 1) == 0 {
        let r = t.clone();
        let value = mass(complex, &r)?;
        return Ok(FlatDecomposition {
            value,
            r,
            s: IntChain::zero(m + 1),
        });
    }

    let FlatProgram {
        mut program,
        n_r,
        n_s,
    } = flat_program(complex, t)?;
    let vars = program.num_vars();
    if vars > MAX_INTEGER_VARIABLES {
        return Err(NormError::IlpSizeGuard {
            integer_vars: vars,
            max: MAX_INTEGER_VARIABLES,
        });
    }
    // Any optimal decomposition satisfies M(R), M(S) ≤ M(T) because
    // (R = T, S = 0) is feasible; cap the split variables accordingly so
    // branch-and-bound runs over a finite box.
    let total_mass = mass(complex, t)?;
    for j in 0..n_r {
        let cap = math::ceil(total_mass / complex.volume(m, j)) + 1.0;
        program.bounds[j] = (0.0, cap);
        program.bounds[n_r + j] = (0.0, cap);
    }
    for j in 0..n_s {
        let cap = math::ceil(total_mass / complex.volume(m + 1, j)) + 1.0;
        program.bounds[2 * n_r + j] = (0.0, cap);
        program.bounds[2 * n_r + n_s + j] = (0.0, cap);
    }

    let all_vars: Vec<usize> = (0..vars).collect();
    let sol = solve_ilp(&program, &all_vars)?;
    if sol.status != LpStatus::Optimal {
        return Err(NormError::SolverFailure { status: sol.status });
    }
    let as_int = |v: f64| -> i64 { math::round(v) as i64 };
    let mut r = IntChain::zero(m);
    for j in 0..n_r {
        r.add_term(j, as_int(sol.x[j]) - as_int(sol.x[n_r + j]))?;
    }
    let mut s = IntChain::zero(m + 1);
    for j in 0..n_s {
        s.add_term(j, as_int(sol.x[2 * n_r + j]) - as_int(sol.x[2 * n_r + n_s + j]))?;
    }
    let value = mass(complex, &r)? + mass(complex, &s)?;
    let decomposition = FlatDecomposition { value, r, s };
    // The extraction rounds; the identity must still hold exactly.
    if !decomposition.verify(complex, t, 0.0)? {
        return Err(NormError::SolverFailure {
            status: LpStatus::Optimal,
        });
    }
    Ok(decomposition)
}

/// Flat-norm value in the requested mode; integer inputs only, since
/// integer mode has no meaning for real chains.
pub fn flat_norm_value(
    complex: &SimplicialComplex,
    t: &IntChain,
    mode: FlatMode,
) -> Result<f64, NormError> {
    match mode {
        FlatMode::Real => Ok(flat_norm_real(complex, t)?.value),
        FlatMode::Integer => Ok(flat_norm_integer(complex, t)?.value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    fn tri() -> SimplicialComplex {
        SimplicialComplex::build(2, vec![0.0, 0.0, 1.0, 0.0, 0.0, 1.0], &[vec![0, 1, 2]]).unwrap()
    }

    fn edge1() -> SimplicialComplex {
        SimplicialComplex::build(1, vec![0.0, 1.0], &[vec![0, 1]]).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    const SQRT2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn mass_weighted_by_volume() {
        let cx = tri();
        // Edges in canonical order: e01 = 0, e02 = 1, e12 = 2.
        let t = IntChain::from_entries(1, [(0, 2), (2, -3)]).unwrap();
        assert_close(mass(&cx, &t).unwrap(), 2.0 + 3.0 * SQRT2, 1e-12);
        assert_eq!(mass(&cx, &IntChain::zero(1)).unwrap(), 0.0);
        let sigma = IntChain::singleton(2, 0, 1);
        assert_close(mass(&cx, &sigma).unwrap(), 0.5, 1e-15);
    }

    #[test]
    fn normal_norm_adds_boundary_mass() {
        let cx = tri();
        let sigma = IntChain::singleton(2, 0, 1);
        // Oracle: mass(σ) plus the hand-expanded boundary masses.
        let boundary = cx.boundary(&sigma).unwrap();
        let oracle = mass(&cx, &sigma).unwrap() + mass(&cx, &boundary).unwrap();
        assert_close(oracle, 0.5 + 2.0 + SQRT2, 1e-12);
        assert_close(normal_norm(&cx, &sigma).unwrap(), oracle, 1e-12);

        // ∂∂ = 0, so the boundary cycle has no boundary mass of its own.
        assert_close(normal_norm(&cx, &boundary).unwrap(), 2.0 + SQRT2, 1e-12);
        assert_eq!(normal_norm(&cx, &IntChain::zero(1)).unwrap(), 0.0);
    }

    #[test]
    fn normal_norm_of_points_is_mass() {
        let cx = edge1();
        let t = IntChain::from_entries(0, [(0, 2), (1, -5)]).unwrap();
        assert_close(normal_norm(&cx, &t).unwrap(), 7.0, 1e-15);
    }

    /// One-parameter oracle for decompositions on `tri`: with a single
    /// 2-simplex, S = t·σ and R = T - t·∂σ, and the cost is piecewise
    /// linear in t, so scanning integer breakpoints finds the optimum.
    fn tri_flat_oracle(cx: &SimplicialComplex, t: &IntChain) -> f64 {
        let sigma_boundary = cx.boundary(&IntChain::singleton(2, 0, 1)).unwrap();
        let mut best = f64::INFINITY;
        for k in -5..=5i64 {
            let r = t.sub(&sigma_boundary.scale(k).unwrap()).unwrap();
            let cost = mass(cx, &r).unwrap() + (k.abs() as f64) * 0.5;
            best = best.min(cost);
        }
        best
    }

    #[test]
    fn flat_norm_of_boundary_fills_the_triangle() {
        let cx = tri();
        let t = cx.boundary(&IntChain::singleton(2, 0, 1)).unwrap();
        assert_close(tri_flat_oracle(&cx, &t), 0.5, 1e-12);

        let d = flat_norm_real(&cx, &t).unwrap();
        assert_close(d.value, 0.5, 1e-9);
        assert!(d.r.is_zero());
        assert_close(d.s.coefficient(0), 1.0, 1e-9);
        assert!(d.verify(&cx, &t, 1e-9).unwrap());

        let di = flat_norm_integer(&cx, &t).unwrap();
        assert_close(di.value, 0.5, 1e-9);
        assert_eq!(di.s.coefficient(0), 1);
        assert!(di.r.is_zero());
    }

    #[test]
    fn flat_norm_of_single_edge_keeps_the_edge() {
        let cx = tri();
        let t = IntChain::singleton(1, 0, 1); // e01
        assert_close(tri_flat_oracle(&cx, &t), 1.0, 1e-12);
        let d = flat_norm_real(&cx, &t).unwrap();
        assert_close(d.value, 1.0, 1e-9);
        assert!(d.s.is_zero());
        assert_close(d.r.coefficient(0), 1.0, 1e-9);
    }

    #[test]
    fn flat_norm_of_zero_chain() {
        let cx = tri();
        let d = flat_norm_real(&cx, &IntChain::zero(1)).unwrap();
        assert_eq!(d.value, 0.0);
        assert!(d.r.is_zero() && d.s.is_zero());
        let di = flat_norm_integer(&cx, &IntChain::zero(1)).unwrap();
        assert_eq!(di.value, 0.0);
    }

    #[test]
    fn top_dimension_decomposition_is_forced() {
        let cx = tri();
        let sigma = IntChain::singleton(2, 0, 1);
        let d = flat_norm_real(&cx, &sigma).unwrap();
        assert_close(d.value, 0.5, 1e-12);
        assert!(d.s.is_zero());
        assert_eq!(d.s.dim(), 3);
    }

    #[test]
    fn flat_norm_bounded_by_mass() {
        let cx = tri();
        for entries in [
            alloc::vec![(0, 1i64)],
            alloc::vec![(0, 2), (1, -1)],
            alloc::vec![(0, -1), (1, 1), (2, 2)],
        ] {
            let t = IntChain::from_entries(1, entries).unwrap();
            let d = flat_norm_real(&cx, &t).unwrap();
            assert!(d.value <= mass(&cx, &t).unwrap() + 1e-9);
            assert!(d.value <= tri_flat_oracle(&cx, &t) + 1e-9);
        }
    }

    #[test]
    fn real_mode_matches_integer_mode_on_tri() {
        // ∂ on tri is totally unimodular, so the LP has integral vertices.
        let cx = tri();
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                for c in -2..=2i64 {
                    let t = IntChain::from_entries(1, [(0, a), (1, b), (2, c)]).unwrap();
                    let real = flat_norm_real(&cx, &t).unwrap().value;
                    let integer = flat_norm_integer(&cx, &t).unwrap().value;
                    assert!(real <= integer + 1e-9);
                    assert_close(real, integer, 1e-9);
                }
            }
        }
    }

    #[test]
    fn ilp_guard_reports_size() {
        // A 2D strip with enough triangles that 2·(n₁ + n₂) > 64.
        let mut coords = Vec::new();
        let mut tris = Vec::new();
        for i in 0..20 {
            coords.extend_from_slice(&[i as f64, 0.0]);
            coords.extend_from_slice(&[i as f64, 1.0]);
        }
        for i in 0..19usize {
            let a = 2 * i;
            tris.push(alloc::vec![a, a + 1, a + 2]);
            tris.push(alloc::vec![a + 1, a + 2, a + 3]);
        }
        let cx = SimplicialComplex::build(2, coords, &tris).unwrap();
        let t = IntChain::singleton(1, 0, 1);
        match flat_norm_integer(&cx, &t) {
            Err(NormError::IlpSizeGuard { integer_vars, max }) => {
                assert!(integer_vars > max);
                assert_eq!(max, 64);
            }
            other => panic!("expected size guard, got {other:?}"),
        }
        // Real mode handles the same instance.
        assert!(flat_norm_real(&cx, &t).is_ok());
    }
}

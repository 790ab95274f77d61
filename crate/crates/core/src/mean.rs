//! Estimation of the addition-invariant mean.
//!
//! For a bounded function `f` on integer chains, convex weights `λ_i` over
//! shifts `Y_i` flatten the shifted averages: the estimator solves
//! `minimize (u - l)` subject to `l ≤ Σ_i λ_i f(X_j + Y_i) ≤ u` over every
//! probe `X_j`, with `λ` in the simplex. The reported mean is the midrange
//! `(u + l)/2` and `ε = (u - l)/2` is a certified half-oscillation — on the
//! probe set only, never globally. Complex-valued functions run a two-phase
//! LP (real part first, then imaginary subject to the real optimum) so one
//! weight vector serves both components.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{ChainError, IntChain};
use crate::forms::{gk_eval, pair, Cochain, FormError};
use crate::lp::{solve_lp, LinearProgram, LpError, LpStatus, Relation};
use crate::math;
use crate::norms::{FlatMode, NormError};
use crate::scalar::ComplexScalar;
use crate::simplicial::SimplicialComplex;

/// A bounded test function on integer chains.
#[derive(Clone, Debug)]
pub enum FunctionSpec {
    /// `X ↦ c`.
    Constant(ComplexScalar),
    /// `X ↦ (-1)^{Σ coefficients}`.
    Parity,
    /// `X ↦ exp(i·⟨k, X⟩)`.
    Phase(Cochain),
    /// `X ↦ g_k(X)`.
    Gk { k: Cochain, mode: FlatMode },
}

impl FunctionSpec {
    pub fn eval(
        &self,
        complex: &SimplicialComplex,
        x: &IntChain,
    ) -> Result<ComplexScalar, MeanError> {
        match self {
            FunctionSpec::Constant(c) => Ok(*c),
            FunctionSpec::Parity => {
                let odd = x.iter().fold(false, |acc, (_, c)| acc ^ (c & 1 != 0));
                Ok(ComplexScalar::real(if odd { -1.0 } else { 1.0 }))
            }
            FunctionSpec::Phase(k) => Ok(ComplexScalar::unit_phase(pair(complex, k, x)?)),
            FunctionSpec::Gk { k, mode } => Ok(gk_eval(complex, k, x, *mode)?),
        }
    }

    /// Declared uniform bound on `|f|`.
    pub fn bound(&self) -> f64 {
        match self {
            FunctionSpec::Constant(c) => c.modulus(),
            _ => 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftProvenance {
    Enumerated,
    Sampled { seed: u64 },
}

/// A family of shift chains `Y_1..Y_N`: distinct, one dimension, and always
/// containing the zero chain (so the identity average is available).
#[derive(Clone, Debug)]
pub struct ShiftFamily {
    shifts: Vec<IntChain>,
    provenance: ShiftProvenance,
}

impl ShiftFamily {
    pub fn new(shifts: Vec<IntChain>, provenance: ShiftProvenance) -> Result<Self, MeanError> {
        let Some(first) = shifts.first() else {
            return Err(MeanError::EmptyShifts);
        };
        let dim = first.dim();
        let mut seen: Vec<&IntChain> = Vec::with_capacity(shifts.len());
        let mut has_zero = false;
        for shift in &shifts {
            if shift.dim() != dim {
                return Err(MeanError::Chain(ChainError::DimensionMismatch {
                    left: dim,
                    right: shift.dim(),
                }));
            }
            if seen.iter().any(|s| *s == shift) {
                return Err(MeanError::DuplicateShift);
            }
            seen.push(shift);
            has_zero |= shift.is_zero();
        }
        if !has_zero {
            return Err(MeanError::MissingZeroShift);
        }
        Ok(Self { shifts, provenance })
    }

    pub fn shifts(&self) -> &[IntChain] {
        &self.shifts
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.shifts[0].dim()
    }

    pub fn provenance(&self) -> ShiftProvenance {
        self.provenance
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Oscillation-minimizing convex weights.
    Lp,
    /// `λ_i = 1/N`.
    Uniform,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Lp => write!(f, "lp"),
            Strategy::Uniform => write!(f, "uniform"),
        }
    }
}

/// Result of [`estimate_mean`]: the certificate is valid on the supplied
/// probe set, nothing more.
#[derive(Clone, Debug)]
pub struct MeanEstimate {
    pub strategy: Strategy,
    pub lambda: Vec<f64>,
    pub mean: ComplexScalar,
    /// Certified half-oscillation: `|Σλ_i f(X_j+Y_i) - mean| ≤ epsilon`
    /// componentwise for every probe `X_j`.
    pub epsilon: f64,
    pub probe_count: usize,
}

#[derive(Clone, Debug)]
pub enum MeanError {
    Chain(ChainError),
    Form(FormError),
    Norm(NormError),
    Lp(LpError),
    EmptyShifts,
    EmptyProbes,
    DuplicateShift,
    MissingZeroShift,
    /// The oscillation LP cannot be infeasible or unbounded for a bounded
    /// function; getting here is a numerical failure.
    SolverFailure { status: LpStatus },
    /// Post-solve re-evaluation violated the certified band.
    Certificate { residual: f64 },
}

impl fmt::Display for MeanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanError::Chain(e) => write!(f, "{e}"),
            MeanError::Form(e) => write!(f, "{e}"),
            MeanError::Norm(e) => write!(f, "{e}"),
            MeanError::Lp(e) => write!(f, "{e}"),
            MeanError::EmptyShifts => write!(f, "shift family is empty"),
            MeanError::EmptyProbes => write!(f, "probe set is empty"),
            MeanError::DuplicateShift => write!(f, "shift family contains a duplicate chain"),
            MeanError::MissingZeroShift => write!(f, "shift family must contain the zero chain"),
            MeanError::SolverFailure { status } => {
                write!(f, "oscillation program unexpectedly {status:?}")
            }
            MeanError::Certificate { residual } => {
                write!(f, "certificate re-check failed with residual {residual:e}")
            }
        }
    }
}

impl core::error::Error for MeanError {}

impl From<ChainError> for MeanError {
    fn from(e: ChainError) -> Self {
        MeanError::Chain(e)
    }
}

impl From<FormError> for MeanError {
    fn from(e: FormError) -> Self {
        MeanError::Form(e)
    }
}

impl From<NormError> for MeanError {
    fn from(e: NormError) -> Self {
        MeanError::Norm(e)
    }
}

impl From<LpError> for MeanError {
    fn from(e: LpError) -> Self {
        MeanError::Lp(e)
    }
}

/// `f(X_j + Y_i)` for the whole probe × shift grid, memoized per sum chain
/// (sums repeat whenever probe/shift pairs collide).
fn value_grid(
    complex: &SimplicialComplex,
    f: &FunctionSpec,
    shifts: &ShiftFamily,
    probes: &[IntChain],
) -> Result<Vec<Vec<ComplexScalar>>, MeanError> {
    let mut memo: BTreeMap<Vec<(usize, i64)>, ComplexScalar> = BTreeMap::new();
    let mut grid = Vec::with_capacity(probes.len());
    for probe in probes {
        let mut row = Vec::with_capacity(shifts.len());
        for shift in shifts.shifts() {
            let sum = probe.add(shift)?;
            let key = sum.entries();
            let value = match memo.get(&key) {
                Some(v) => *v,
                None => {
                    let v = f.eval(complex, &sum)?;
                    memo.insert(key, v);
                    v
                }
            };
            row.push(value);
        }
        grid.push(row);
    }
    Ok(grid)
}

/// Solves the oscillation LP for one component layout.
///
/// Variables are `[λ_1..λ_N, l, u]` plus optionally a second `(l', u')`
/// pair; see `estimate_mean` for the two phases.
fn oscillation_lp(
    grid: &[Vec<f64>],
    n: usize,
    bound: f64,
) -> Result<(Vec<f64>, f64), MeanError> {
    let vars = n + 2;
    let mut p = LinearProgram::new(vars);
    p.objective[n] = -1.0; // l
    p.objective[n + 1] = 1.0; // u
    p.bounds = vec![(0.0, f64::INFINITY); vars];
    let band = bound + 1.0;
    p.bounds[n] = (-band, band);
    p.bounds[n + 1] = (-band, band);
    let mut simplex_row = vec![0.0; vars];
    for cell in simplex_row.iter_mut().take(n) {
        *cell = 1.0;
    }
    p.push_constraint(simplex_row, Relation::Eq, 1.0);
    for row in grid {
        let mut lower = vec![0.0; vars];
        let mut upper = vec![0.0; vars];
        lower[..n].copy_from_slice(row);
        upper[..n].copy_from_slice(row);
        lower[n] = -1.0;
        p.push_constraint(lower, Relation::Ge, 0.0);
        upper[n + 1] = -1.0;
        p.push_constraint(upper, Relation::Le, 0.0);
    }
    let sol = solve_lp(&p)?;
    if sol.status != LpStatus::Optimal {
        return Err(MeanError::SolverFailure { status: sol.status });
    }
    Ok((sol.x[..n].to_vec(), sol.objective_value))
}

/// Two-phase LP: minimize the imaginary oscillation subject to the real
/// oscillation staying within `re_cap` of its optimum.
fn oscillation_lp_two_phase(
    re: &[Vec<f64>],
    im: &[Vec<f64>],
    n: usize,
    bound: f64,
    re_opt: f64,
) -> Result<Vec<f64>, MeanError> {
    let vars = n + 4; // λ, l_re, u_re, l_im, u_im
    let (l_re, u_re, l_im, u_im) = (n, n + 1, n + 2, n + 3);
    let mut p = LinearProgram::new(vars);
    p.objective[l_im] = -1.0;
    p.objective[u_im] = 1.0;
    p.bounds = vec![(0.0, f64::INFINITY); vars];
    let band = bound + 1.0;
    for v in [l_re, u_re, l_im, u_im] {
        p.bounds[v] = (-band, band);
    }
    let mut simplex_row = vec![0.0; vars];
    for cell in simplex_row.iter_mut().take(n) {
        *cell = 1.0;
    }
    p.push_constraint(simplex_row, Relation::Eq, 1.0);
    for (re_row, im_row) in re.iter().zip(im) {
        for (values, l, u) in [(re_row, l_re, u_re), (im_row, l_im, u_im)] {
            let mut lower = vec![0.0; vars];
            let mut upper = vec![0.0; vars];
            lower[..n].copy_from_slice(values);
            upper[..n].copy_from_slice(values);
            lower[l] = -1.0;
            p.push_constraint(lower, Relation::Ge, 0.0);
            upper[u] = -1.0;
            p.push_constraint(upper, Relation::Le, 0.0);
        }
    }
    let mut cap = vec![0.0; vars];
    cap[u_re] = 1.0;
    cap[l_re] = -1.0;
    p.push_constraint(cap, Relation::Le, re_opt + 1e-9);
    let sol = solve_lp(&p)?;
    if sol.status != LpStatus::Optimal {
        return Err(MeanError::SolverFailure { status: sol.status });
    }
    Ok(sol.x[..n].to_vec())
}

/// Estimates the invariant mean of `f` with convex weights over `shifts`,
/// certifying the oscillation on `probes`.
pub fn estimate_mean(
    complex: &SimplicialComplex,
    f: &FunctionSpec,
    shifts: &ShiftFamily,
    probes: &[IntChain],
    strategy: Strategy,
) -> Result<MeanEstimate, MeanError> {
    if probes.is_empty() {
        return Err(MeanError::EmptyProbes);
    }
    for probe in probes {
        if probe.dim() != shifts.dim() {
            return Err(MeanError::Chain(ChainError::DimensionMismatch {
                left: shifts.dim(),
                right: probe.dim(),
            }));
        }
    }
    let grid = value_grid(complex, f, shifts, probes)?;
    let n = shifts.len();
    let re: Vec<Vec<f64>> = grid
        .iter()
        .map(|row| row.iter().map(|v| v.re).collect())
        .collect();
    let im: Vec<Vec<f64>> = grid
        .iter()
        .map(|row| row.iter().map(|v| v.im).collect())
        .collect();
    let has_imaginary = im.iter().flatten().any(|v| *v != 0.0);

    let mut lambda = match strategy {
        Strategy::Uniform => vec![1.0 / n as f64; n],
        Strategy::Lp => {
            let (lambda_re, re_opt) = oscillation_lp(&re, n, f.bound())?;
            if has_imaginary {
                oscillation_lp_two_phase(&re, &im, n, f.bound(), re_opt)?
            } else {
                lambda_re
            }
        }
    };

    // Clean the weights: clip solver fuzz, renormalize to the simplex.
    let mut total = 0.0;
    for weight in &mut lambda {
        if *weight < 0.0 {
            *weight = 0.0;
        }
        total += *weight;
    }
    if total <= 0.0 {
        return Err(MeanError::SolverFailure {
            status: LpStatus::Optimal,
        });
    }
    for weight in &mut lambda {
        *weight /= total;
    }

    // Bands from direct evaluation under the cleaned weights, so the
    // certificate is checked against what is actually reported.
    let averages: Vec<ComplexScalar> = grid
        .iter()
        .map(|row| {
            row.iter()
                .zip(&lambda)
                .fold(ComplexScalar::ZERO, |acc, (v, w)| acc.add(v.scale(*w)))
        })
        .collect();
    let (mut lo_re, mut hi_re) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut lo_im, mut hi_im) = (f64::INFINITY, f64::NEG_INFINITY);
    for a in &averages {
        lo_re = lo_re.min(a.re);
        hi_re = hi_re.max(a.re);
        lo_im = lo_im.min(a.im);
        hi_im = hi_im.max(a.im);
    }
    let mean = ComplexScalar::new((lo_re + hi_re) / 2.0, (lo_im + hi_im) / 2.0);
    let epsilon = f64::max((hi_re - lo_re) / 2.0, (hi_im - lo_im) / 2.0);

    let worst = averages
        .iter()
        .map(|a| f64::max(math::abs(a.re - mean.re), math::abs(a.im - mean.im)))
        .fold(0.0, f64::max);
    if worst > epsilon + 1e-9 {
        return Err(MeanError::Certificate {
            residual: worst - epsilon,
        });
    }

    Ok(MeanEstimate {
        strategy,
        lambda,
        mean,
        epsilon,
        probe_count: probes.len(),
    })
}

#[derive(Clone, Debug)]
pub struct ShiftInvarianceReport {
    pub original: MeanEstimate,
    pub shifted: MeanEstimate,
    /// `|mean₁ - mean₂|` (complex modulus).
    pub mean_difference: f64,
    /// `ε₁ + ε₂ + tol`.
    pub tolerance: f64,
    pub pass: bool,
}

/// Compares the estimated mean of `f` with that of `f(· + y)` on the same
/// shifts and strategy (implemented by translating the probes by `y`).
pub fn check_shift_invariance(
    complex: &SimplicialComplex,
    f: &FunctionSpec,
    shifts: &ShiftFamily,
    probes: &[IntChain],
    y: &IntChain,
    strategy: Strategy,
    tol: f64,
) -> Result<ShiftInvarianceReport, MeanError> {
    let original = estimate_mean(complex, f, shifts, probes, strategy)?;
    let translated: Vec<IntChain> = probes
        .iter()
        .map(|p| p.add(y))
        .collect::<Result<_, _>>()?;
    let shifted = estimate_mean(complex, f, shifts, &translated, strategy)?;
    let mean_difference = original.mean.sub(shifted.mean).modulus();
    let tolerance = original.epsilon + shifted.epsilon + tol;
    Ok(ShiftInvarianceReport {
        pass: mean_difference <= tolerance,
        mean_difference,
        tolerance,
        original,
        shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    fn edge1() -> SimplicialComplex {
        SimplicialComplex::build(1, vec![0.0, 1.0], &[vec![0, 1]]).unwrap()
    }

    fn edge_chain(c: i64) -> IntChain {
        IntChain::singleton(1, 0, c)
    }

    fn edge_probes(range: core::ops::RangeInclusive<i64>) -> Vec<IntChain> {
        range.map(edge_chain).collect()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn constant_function_is_exact() {
        let cx = edge1();
        let f = FunctionSpec::Constant(ComplexScalar::real(7.0));
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        for strategy in [Strategy::Lp, Strategy::Uniform] {
            let e = estimate_mean(&cx, &f, &shifts, &edge_probes(-3..=3), strategy).unwrap();
            assert_close(e.mean.re, 7.0, 1e-12);
            assert_close(e.mean.im, 0.0, 1e-12);
            assert!(e.epsilon <= 1e-12);
            assert_close(e.lambda.iter().sum::<f64>(), 1.0, 1e-12);
        }
    }

    #[test]
    fn parity_cancels_with_unit_shift() {
        let cx = edge1();
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let e = estimate_mean(
            &cx,
            &FunctionSpec::Parity,
            &shifts,
            &edge_probes(-3..=3),
            Strategy::Lp,
        )
        .unwrap();
        // f(X) + f(X+e) = 0 identically, so λ = (1/2, 1/2) flattens exactly.
        assert_close(e.lambda[0], 0.5, 1e-9);
        assert_close(e.lambda[1], 0.5, 1e-9);
        assert_close(e.mean.re, 0.0, 1e-9);
        assert!(e.epsilon <= 1e-9);
    }

    #[test]
    fn quarter_turn_phase_cancels_uniformly() {
        let cx = edge1();
        let k = Cochain::from_entries(1, [(0, core::f64::consts::FRAC_PI_2)]);
        let shifts = ShiftFamily::new(
            (0..4).map(edge_chain).collect(),
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let e = estimate_mean(
            &cx,
            &FunctionSpec::Phase(k),
            &shifts,
            &edge_probes(-4..=4),
            Strategy::Uniform,
        )
        .unwrap();
        // ¼·i^c·(1 + i + i² + i³) = 0 for every probe.
        assert_close(e.mean.re, 0.0, 1e-9);
        assert_close(e.mean.im, 0.0, 1e-9);
        assert!(e.epsilon <= 1e-9);
    }

    #[test]
    fn degenerate_shift_family_reports_raw_oscillation() {
        let cx = edge1();
        let shifts =
            ShiftFamily::new(vec![IntChain::zero(1)], ShiftProvenance::Enumerated).unwrap();
        let probes = vec![IntChain::zero(1), edge_chain(1)];
        let e = estimate_mean(&cx, &FunctionSpec::Parity, &shifts, &probes, Strategy::Lp)
            .unwrap();
        // Values are {+1, -1}: midrange 0, half-oscillation 1.
        assert_close(e.mean.re, 0.0, 1e-9);
        assert_close(e.epsilon, 1.0, 1e-9);
    }

    #[test]
    fn lp_never_loses_to_uniform() {
        let cx = edge1();
        let k = Cochain::from_entries(1, [(0, 0.7)]);
        let f = FunctionSpec::Phase(k);
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1), edge_chain(3)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let probes = edge_probes(-5..=5);
        let lp = estimate_mean(&cx, &f, &shifts, &probes, Strategy::Lp).unwrap();
        let uniform = estimate_mean(&cx, &f, &shifts, &probes, Strategy::Uniform).unwrap();
        assert!(lp.epsilon <= uniform.epsilon + 1e-9);
    }

    #[test]
    fn enlarging_the_shift_family_cannot_hurt() {
        let cx = edge1();
        let k = Cochain::from_entries(1, [(0, 1.1)]);
        let f = FunctionSpec::Phase(k);
        let probes = edge_probes(-4..=4);
        let small = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(2)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let large = ShiftFamily::new(
            vec![
                IntChain::zero(1),
                edge_chain(2),
                edge_chain(1),
                edge_chain(-1),
            ],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let e_small = estimate_mean(&cx, &f, &small, &probes, Strategy::Lp).unwrap();
        let e_large = estimate_mean(&cx, &f, &large, &probes, Strategy::Lp).unwrap();
        assert!(e_large.epsilon <= e_small.epsilon + 1e-9);
    }

    #[test]
    fn mean_lies_within_observed_range() {
        let cx = edge1();
        let k = Cochain::from_entries(1, [(0, 0.9)]);
        let f = FunctionSpec::Phase(k);
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let probes = edge_probes(-3..=3);
        let e = estimate_mean(&cx, &f, &shifts, &probes, Strategy::Lp).unwrap();
        let mut values = Vec::new();
        for probe in &probes {
            for shift in shifts.shifts() {
                values.push(f.eval(&cx, &probe.add(shift).unwrap()).unwrap());
            }
        }
        let lo = values.iter().map(|v| v.re).fold(f64::INFINITY, f64::min);
        let hi = values.iter().map(|v| v.re).fold(f64::NEG_INFINITY, f64::max);
        assert!(e.mean.re >= lo - 1e-9 && e.mean.re <= hi + 1e-9);
    }

    #[test]
    fn certificate_honesty_re_evaluated() {
        let cx = edge1();
        let k = Cochain::from_entries(1, [(0, 0.3)]);
        let f = FunctionSpec::Phase(k);
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1), edge_chain(2)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let probes = edge_probes(-3..=3);
        let e = estimate_mean(&cx, &f, &shifts, &probes, Strategy::Lp).unwrap();
        for probe in &probes {
            let mut avg = ComplexScalar::ZERO;
            for (shift, weight) in shifts.shifts().iter().zip(&e.lambda) {
                avg = avg.add(f.eval(&cx, &probe.add(shift).unwrap()).unwrap().scale(*weight));
            }
            assert!((avg.re - e.mean.re).abs() <= e.epsilon + 1e-9);
            assert!((avg.im - e.mean.im).abs() <= e.epsilon + 1e-9);
        }
    }

    #[test]
    fn shift_family_validation() {
        assert!(matches!(
            ShiftFamily::new(vec![], ShiftProvenance::Enumerated),
            Err(MeanError::EmptyShifts)
        ));
        assert!(matches!(
            ShiftFamily::new(vec![edge_chain(1)], ShiftProvenance::Enumerated),
            Err(MeanError::MissingZeroShift)
        ));
        assert!(matches!(
            ShiftFamily::new(
                vec![IntChain::zero(1), edge_chain(1), edge_chain(1)],
                ShiftProvenance::Enumerated
            ),
            Err(MeanError::DuplicateShift)
        ));
    }

    #[test]
    fn shift_invariance_constant() {
        let cx = edge1();
        let f = FunctionSpec::Constant(ComplexScalar::new(2.0, -1.0));
        let shifts =
            ShiftFamily::new(vec![IntChain::zero(1)], ShiftProvenance::Enumerated).unwrap();
        let report = check_shift_invariance(
            &cx,
            &f,
            &shifts,
            &edge_probes(-2..=2),
            &edge_chain(5),
            Strategy::Lp,
            1e-9,
        )
        .unwrap();
        assert!(report.pass);
        assert_close(report.mean_difference, 0.0, 1e-12);
    }

    #[test]
    fn shift_invariance_parity_and_phase() {
        let cx = edge1();
        let shifts = ShiftFamily::new(
            vec![IntChain::zero(1), edge_chain(1)],
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let report = check_shift_invariance(
            &cx,
            &FunctionSpec::Parity,
            &shifts,
            &edge_probes(-3..=3),
            &edge_chain(1),
            Strategy::Lp,
            1e-9,
        )
        .unwrap();
        assert!(report.pass);
        assert_close(report.mean_difference, 0.0, 1e-9);

        // Quarter-turn phase: shifting by 2e multiplies f by i² = -1 and
        // the four-shift average still cancels exactly.
        let k = Cochain::from_entries(1, [(0, core::f64::consts::FRAC_PI_2)]);
        let four = ShiftFamily::new(
            (0..4).map(edge_chain).collect(),
            ShiftProvenance::Enumerated,
        )
        .unwrap();
        let report = check_shift_invariance(
            &cx,
            &FunctionSpec::Phase(k),
            &four,
            &edge_probes(-4..=4),
            &edge_chain(2),
            Strategy::Uniform,
            1e-9,
        )
        .unwrap();
        assert!(report.pass);
        assert!(report.mean_difference <= 1e-9);
    }
}

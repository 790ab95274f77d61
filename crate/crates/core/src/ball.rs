//! The compact mass balls `B^m_Λ = {T : M(T) + M(∂T) ≤ Λ}` and the integer
//! cycle lattice `{T : ∂T = 0}`.
//!
//! On a finite complex with integer coefficients the ball is finite — every
//! coefficient satisfies `|c_σ| ≤ Λ/vol(σ)` — so it can be enumerated
//! outright or sampled uniformly by rejection from the coefficient box.
//! The cycle lattice is the integer kernel of the boundary matrix, computed
//! by unimodular column elimination (Hermite style) with primitive basis
//! vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{ChainError, IntChain};
use crate::norms::{mass, normal_norm};
use crate::rng::SplitMix64;
use crate::simplicial::SimplicialComplex;

/// Membership tolerance: chains with `N(T) ≤ Λ + BALL_TOLERANCE` belong.
pub const BALL_TOLERANCE: f64 = 1e-12;
/// Enumeration guard on the number of candidate coefficient tuples.
pub const ENUMERATION_GUARD: u128 = 10_000_000;
/// Sampling aborts when fewer than this fraction of draws is accepted.
pub const MIN_ACCEPTANCE_RATE: f64 = 1e-6;
/// Draws before the acceptance rate is first judged.
const ACCEPTANCE_PROBE: u64 = 1_000_000;

/// The ball `{T ∈ I_m : M(T) + M(∂T) ≤ cap}` over a complex.
#[derive(Clone, Copy, Debug)]
pub struct MassBall {
    pub dim: usize,
    pub cap: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BallError {
    Chain(ChainError),
    /// The candidate box exceeds [`ENUMERATION_GUARD`] tuples.
    SizeGuard { estimated: u128, max: u128 },
    /// Rejection sampling is accepting too rarely; enumerate instead or
    /// shrink the cap.
    LowAcceptance { attempts: u64, accepted: u64 },
    /// The cap must be a finite nonnegative real.
    BadCap { cap: f64 },
    /// Cycle bases live in dimension ≥ 1.
    ZeroDimension,
    /// At least one sample must be requested.
    ZeroCount,
}

impl fmt::Display for BallError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallError::Chain(e) => write!(f, "{e}"),
            BallError::SizeGuard { estimated, max } => {
                write!(f, "ball holds about {estimated} candidate tuples (guard: {max})")
            }
            BallError::LowAcceptance { attempts, accepted } => write!(
                f,
                "rejection sampling accepted {accepted} of {attempts} draws; enumerate or reduce the cap"
            ),
            BallError::BadCap { cap } => write!(f, "cap must be finite and nonnegative, got {cap}"),
            BallError::ZeroDimension => write!(f, "cycle basis requires dimension ≥ 1"),
            BallError::ZeroCount => write!(f, "count must be at least 1"),
        }
    }
}

impl core::error::Error for BallError {}

impl From<ChainError> for BallError {
    fn from(e: ChainError) -> Self {
        BallError::Chain(e)
    }
}

/// Per-coefficient box bounds `|c_j| ≤ (cap + tol)/vol_j`.
fn coefficient_boxes(
    complex: &SimplicialComplex,
    ball: &MassBall,
) -> Result<Vec<i64>, BallError> {
    if !ball.cap.is_finite() || ball.cap < 0.0 {
        return Err(BallError::BadCap { cap: ball.cap });
    }
    let n = complex.simplex_count(ball.dim);
    let mut boxes = Vec::with_capacity(n);
    for j in 0..n {
        let raw = crate::math::floor((ball.cap + BALL_TOLERANCE) / complex.volume(ball.dim, j));
        // Clamp so 2k+1 and the chain arithmetic stay comfortably in range.
        boxes.push(raw.min(1e15) as i64);
    }
    Ok(boxes)
}

/// Enumerates every integer chain in the ball, in lexicographic order of
/// the coefficient vector (canonical simplex index, then coefficient).
/// Includes the zero chain.
pub fn enumerate_ball(
    complex: &SimplicialComplex,
    ball: &MassBall,
) -> Result<Vec<IntChain>, BallError> {
    let boxes = coefficient_boxes(complex, ball)?;
    let mut candidates: u128 = 1;
    for &k in &boxes {
        candidates = candidates.saturating_mul(2 * k as u128 + 1);
        if candidates > ENUMERATION_GUARD {
            return Err(BallError::SizeGuard {
                estimated: candidates,
                max: ENUMERATION_GUARD,
            });
        }
    }

    let n = boxes.len();
    let mut coeffs = vec![0i64; n];
    let mut out = Vec::new();
    // Depth-first over coefficient tuples with prefix-mass pruning: mass is
    // monotone in the prefix and a lower bound for the normal norm.
    fn descend(
        complex: &SimplicialComplex,
        ball: &MassBall,
        boxes: &[i64],
        coeffs: &mut [i64],
        depth: usize,
        prefix_mass: f64,
        out: &mut Vec<IntChain>,
    ) -> Result<(), BallError> {
        if depth == boxes.len() {
            let chain = IntChain::from_entries(
                ball.dim,
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (j, c)),
            )?;
            if normal_norm(complex, &chain)? <= ball.cap + BALL_TOLERANCE {
                out.push(chain);
            }
            return Ok(());
        }
        let k = boxes[depth];
        let vol = complex.volume(ball.dim, depth);
        for c in -k..=k {
            let mass_here = prefix_mass + (c.abs() as f64) * vol;
            if mass_here > ball.cap + BALL_TOLERANCE + 1e-9 {
                continue;
            }
            coeffs[depth] = c;
            descend(complex, ball, boxes, coeffs, depth + 1, mass_here, out)?;
            coeffs[depth] = 0;
        }
        Ok(())
    }
    descend(complex, ball, &boxes, &mut coeffs, 0, 0.0, &mut out)?;
    Ok(out)
}

/// Streaming uniform rejection sampler over a mass ball. Draw order and
/// accept/reject decisions are fully determined by the seed.
pub struct BallSampler<'a> {
    complex: &'a SimplicialComplex,
    ball: MassBall,
    boxes: Vec<i64>,
    rng: SplitMix64,
    attempts: u64,
    accepted: u64,
}

impl<'a> BallSampler<'a> {
    pub fn new(
        complex: &'a SimplicialComplex,
        ball: &MassBall,
        seed: u64,
    ) -> Result<Self, BallError> {
        let boxes = coefficient_boxes(complex, ball)?;
        Ok(Self {
            complex,
            ball: *ball,
            boxes,
            rng: SplitMix64::new(seed),
            attempts: 0,
            accepted: 0,
        })
    }

    pub fn draw(&mut self) -> Result<IntChain, BallError> {
        loop {
            self.attempts += 1;
            if self.attempts >= ACCEPTANCE_PROBE
                && (self.accepted as f64) < MIN_ACCEPTANCE_RATE * self.attempts as f64
            {
                return Err(BallError::LowAcceptance {
                    attempts: self.attempts,
                    accepted: self.accepted,
                });
            }
            let mut chain = IntChain::zero(self.ball.dim);
            for (j, &k) in self.boxes.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                chain.add_term(j, self.rng.int_in(-k, k))?;
            }
            if normal_norm(self.complex, &chain)? <= self.ball.cap + BALL_TOLERANCE {
                self.accepted += 1;
                return Ok(chain);
            }
        }
    }
}

/// Draws `count` i.i.d. chains from the ball by coefficient-box rejection.
pub fn sample_ball(
    complex: &SimplicialComplex,
    ball: &MassBall,
    count: usize,
    seed: u64,
) -> Result<Vec<IntChain>, BallError> {
    if count == 0 {
        return Err(BallError::ZeroCount);
    }
    let mut sampler = BallSampler::new(complex, ball, seed)?;
    (0..count).map(|_| sampler.draw()).collect()
}

/// A primitive integer basis of `ker ∂_m`.
#[derive(Clone, Debug)]
pub struct CycleLattice {
    dim: usize,
    basis: Vec<IntChain>,
}

impl CycleLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntChain] {
        &self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    // Returns (g, x, y) with a·x + b·y = g > 0.
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

fn checked_combine(a: i64, b: i64, c: i64, d: i64) -> Result<i64, BallError> {
    // a·b + c·d with overflow detection.
    let product = (a as i128) * (b as i128) + (c as i128) * (d as i128);
    i64::try_from(product).map_err(|_| BallError::Chain(ChainError::Overflow))
}

/// Integer kernel basis of the boundary matrix `∂_m` via unimodular column
/// operations; basis vectors are primitive (content 1) with positive
/// leading entry, and the output order is deterministic.
pub fn cycle_basis(complex: &SimplicialComplex, m: usize) -> Result<CycleLattice, BallError> {
    if m == 0 {
        return Err(BallError::ZeroDimension);
    }
    let cols = complex.simplex_count(m);
    if cols == 0 {
        return Ok(CycleLattice {
            dim: m,
            basis: Vec::new(),
        });
    }
    let rows = complex.simplex_count(m - 1);

    // Dense copy of ∂_m (rows × cols) and the running unimodular transform.
    let mut b = vec![vec![0i64; cols]; rows];
    for j in 0..cols {
        for (face, sign) in complex.boundary_column(m, j) {
            b[face][j] += sign;
        }
    }
    let mut u = vec![vec![0i64; cols]; cols];
    for (j, row) in u.iter_mut().enumerate() {
        row[j] = 1;
    }

    let column_op = |b: &mut Vec<Vec<i64>>,
                     u: &mut Vec<Vec<i64>>,
                     j1: usize,
                     j2: usize,
                     m11: i64,
                     m21: i64,
                     m12: i64,
                     m22: i64|
     -> Result<(), BallError> {
        // (col j1, col j2) ← (m11·j1 + m21·j2, m12·j1 + m22·j2)
        for row in b.iter_mut().chain(u.iter_mut()) {
            let v1 = row[j1];
            let v2 = row[j2];
            row[j1] = checked_combine(m11, v1, m21, v2)?;
            row[j2] = checked_combine(m12, v1, m22, v2)?;
        }
        Ok(())
    };

    let mut pivot_col = 0usize;
    for row in 0..rows {
        if pivot_col == cols {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot_col..cols).filter(|&j| b[row][j] != 0).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    let j = nonzero[0];
                    if j != pivot_col {
                        for r in b.iter_mut().chain(u.iter_mut()) {
                            r.swap(j, pivot_col);
                        }
                    }
                    pivot_col += 1;
                    break;
                }
                _ => {
                    let j1 = nonzero[0];
                    let j2 = nonzero[1];
                    let a = b[row][j1];
                    let c = b[row][j2];
                    let (g, x, y) = extended_gcd(a, c);
                    // Unimodular: det [[x, -c/g], [y, a/g]] = 1.
                    column_op(&mut b, &mut u, j1, j2, x, y, -c / g, a / g)?;
                }
            }
        }
    }

    let mut basis = Vec::with_capacity(cols - pivot_col);
    for j in pivot_col..cols {
        let mut column: Vec<i64> = (0..cols).map(|i| u[i][j]).collect();
        // Primitive vector with positive leading entry.
        let mut content = 0i64;
        for &v in &column {
            content = extended_gcd(content, v).0;
        }
        if content > 1 {
            for v in &mut column {
                *v /= content;
            }
        }
        if let Some(first) = column.iter().find(|&&v| v != 0) {
            if *first < 0 {
                for v in &mut column {
                    *v = -*v;
                }
            }
        }
        let chain = IntChain::from_entries(
            m,
            column
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i, v)),
        )?;
        debug_assert!(complex.boundary(&chain).map(|b| b.is_zero()).unwrap_or(false));
        basis.push(chain);
    }
    Ok(CycleLattice { dim: m, basis })
}

/// Streaming sampler of bounded-mass integer combinations of basis cycles.
/// The coefficient box `[-⌈cap/min-cycle-mass⌉, +⌈…⌉]` covers the whole
/// mass-`cap` portion of the lattice; draws outside the cap are rejected.
pub struct CycleSampler<'a> {
    complex: &'a SimplicialComplex,
    lattice: &'a CycleLattice,
    cap: f64,
    coefficient_bound: i64,
    rng: SplitMix64,
    attempts: u64,
    accepted: u64,
}

impl<'a> CycleSampler<'a> {
    pub fn new(
        complex: &'a SimplicialComplex,
        lattice: &'a CycleLattice,
        cap: f64,
        seed: u64,
    ) -> Result<Self, BallError> {
        if !cap.is_finite() || cap < 0.0 {
            return Err(BallError::BadCap { cap });
        }
        let mut min_mass = f64::INFINITY;
        for cycle in lattice.basis() {
            min_mass = min_mass.min(mass(complex, cycle)?);
        }
        let coefficient_bound = if lattice.is_empty() {
            0
        } else {
            crate::math::ceil(cap / min_mass).min(1e15) as i64
        };
        Ok(Self {
            complex,
            lattice,
            cap,
            coefficient_bound,
            rng: SplitMix64::new(seed),
            attempts: 0,
            accepted: 0,
        })
    }

    /// Every draw has exactly zero boundary; an empty lattice yields the
    /// zero chain.
    pub fn draw(&mut self) -> Result<IntChain, BallError> {
        if self.lattice.is_empty() {
            return Ok(IntChain::zero(self.lattice.dim));
        }
        loop {
            self.attempts += 1;
            if self.attempts >= ACCEPTANCE_PROBE
                && (self.accepted as f64) < MIN_ACCEPTANCE_RATE * self.attempts as f64
            {
                return Err(BallError::LowAcceptance {
                    attempts: self.attempts,
                    accepted: self.accepted,
                });
            }
            let k = self.coefficient_bound;
            let mut chain = IntChain::zero(self.lattice.dim);
            for cycle in self.lattice.basis() {
                let a = if k == 0 { 0 } else { self.rng.int_in(-k, k) };
                if a != 0 {
                    chain = chain.add(&cycle.scale(a)?)?;
                }
            }
            if mass(self.complex, &chain)? <= self.cap + BALL_TOLERANCE {
                self.accepted += 1;
                return Ok(chain);
            }
        }
    }
}

/// Draws `count` integer combinations of basis cycles with coefficients in
/// `[-⌈cap/min-cycle-mass⌉, +⌈cap/min-cycle-mass⌉]`, rejection-filtered to
/// `M(T) ≤ cap`. Every output has exactly zero boundary. An empty lattice
/// yields `count` copies of the zero chain.
pub fn sample_cycles(
    complex: &SimplicialComplex,
    lattice: &CycleLattice,
    cap: f64,
    count: usize,
    seed: u64,
) -> Result<Vec<IntChain>, BallError> {
    if count == 0 {
        return Err(BallError::ZeroCount);
    }
    let mut sampler = CycleSampler::new(complex, lattice, cap, seed)?;
    (0..count).map(|_| sampler.draw()).collect()
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

    /// 4 vertices, two triangles sharing the diagonal.
    fn square() -> SimplicialComplex {
        SimplicialComplex::build(
            2,
            vec![0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0],
            &[vec![0, 1, 2], vec![1, 2, 3]],
        )
        .unwrap()
    }

    /// Unpruned oracle: walk the whole coefficient box and filter.
    fn brute_force_count(cx: &SimplicialComplex, ball: &MassBall) -> usize {
        let boxes = coefficient_boxes(cx, ball).unwrap();
        let mut count = 0usize;
        let n = boxes.len();
        let mut coeffs = vec![0i64; n];
        fn walk(
            cx: &SimplicialComplex,
            ball: &MassBall,
            boxes: &[i64],
            coeffs: &mut [i64],
            depth: usize,
            count: &mut usize,
        ) {
            if depth == boxes.len() {
                let chain = IntChain::from_entries(
                    ball.dim,
                    coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, c)),
                )
                .unwrap();
                if normal_norm(cx, &chain).unwrap() <= ball.cap + BALL_TOLERANCE {
                    *count += 1;
                }
                return;
            }
            for c in -boxes[depth]..=boxes[depth] {
                coeffs[depth] = c;
                walk(cx, ball, boxes, coeffs, depth + 1, count);
            }
        }
        walk(cx, ball, &boxes, &mut coeffs, 0, &mut count);
        count
    }

    #[test]
    fn edge1_ball_counts() {
        let cx = edge1();
        // N(c·e) = |c| + 2|c| = 3|c| ≤ 6.5 ⇒ c ∈ {-2..2}.
        let chains = enumerate_ball(&cx, &MassBall { dim: 1, cap: 6.5 }).unwrap();
        assert_eq!(chains.len(), 5);
        assert_eq!(chains.len(), brute_force_count(&cx, &MassBall { dim: 1, cap: 6.5 }));

        let zero_only = enumerate_ball(&cx, &MassBall { dim: 1, cap: 0.0 }).unwrap();
        assert_eq!(zero_only.len(), 1);
        assert!(zero_only[0].is_zero());
    }

    #[test]
    fn tri_ball_is_just_zero_at_small_cap() {
        let cx = tri();
        // The cheapest nonzero edge chain costs 1 + 2 = 3 > 1.
        let chains = enumerate_ball(&cx, &MassBall { dim: 1, cap: 1.0 }).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains.len(), brute_force_count(&cx, &MassBall { dim: 1, cap: 1.0 }));
    }

    #[test]
    fn enumeration_matches_brute_force_on_bigger_caps() {
        let cx = tri();
        for cap in [0.0, 1.0, 3.0, 6.5] {
            let ball = MassBall { dim: 1, cap };
            let enumerated = enumerate_ball(&cx, &ball).unwrap();
            assert_eq!(enumerated.len(), brute_force_count(&cx, &ball), "cap {cap}");
            for chain in &enumerated {
                assert!(normal_norm(&cx, chain).unwrap() <= cap + BALL_TOLERANCE);
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic_and_deterministic() {
        let cx = edge1();
        let ball = MassBall { dim: 1, cap: 6.5 };
        let a = enumerate_ball(&cx, &ball).unwrap();
        let b = enumerate_ball(&cx, &ball).unwrap();
        assert_eq!(a, b);
        let coeffs: Vec<i64> = a.iter().map(|c| c.coefficient(0)).collect();
        assert_eq!(coeffs, alloc::vec![-2, -1, 0, 1, 2]);
    }

    #[test]
    fn size_guard_reports_estimate() {
        let cx = edge1();
        let err = enumerate_ball(&cx, &MassBall { dim: 1, cap: 1e8 }).unwrap_err();
        match err {
            BallError::SizeGuard { estimated, max } => {
                assert!(estimated > max);
                assert_eq!(max, ENUMERATION_GUARD);
            }
            other => panic!("expected size guard, got {other:?}"),
        }
    }

    #[test]
    fn sampling_is_deterministic_and_in_ball() {
        let cx = edge1();
        let ball = MassBall { dim: 1, cap: 6.5 };
        let a = sample_ball(&cx, &ball, 300, 12345).unwrap();
        let b = sample_ball(&cx, &ball, 300, 12345).unwrap();
        assert_eq!(a, b);
        for chain in &a {
            assert!(normal_norm(&cx, chain).unwrap() <= 6.5 + BALL_TOLERANCE);
        }
        // Coupon collection: 300 draws over 5 outcomes hit all of them.
        let mut seen = alloc::collections::BTreeSet::new();
        for chain in &a {
            seen.insert(chain.coefficient(0));
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn different_seeds_differ() {
        let cx = edge1();
        let ball = MassBall { dim: 1, cap: 6.5 };
        let a = sample_ball(&cx, &ball, 50, 1).unwrap();
        let b = sample_ball(&cx, &ball, 50, 2).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn negative_cap_rejected() {
        let cx = edge1();
        assert!(matches!(
            enumerate_ball(&cx, &MassBall { dim: 1, cap: -1.0 }),
            Err(BallError::BadCap { .. })
        ));
    }

    #[test]
    fn cycle_ranks() {
        // tri: 3 edges, rank(∂₁) = 2 ⇒ one cycle (the perimeter).
        let lattice = cycle_basis(&tri(), 1).unwrap();
        assert_eq!(lattice.rank(), 1);
        let perimeter = &lattice.basis()[0];
        let expected = tri().boundary(&IntChain::singleton(2, 0, 1)).unwrap();
        assert!(perimeter == &expected || perimeter == &expected.neg().unwrap());

        // A single segment has no cycles.
        assert_eq!(cycle_basis(&edge1(), 1).unwrap().rank(), 0);

        // Square split into two triangles: 5 edges, rank 3 ⇒ two cycles.
        assert_eq!(cycle_basis(&square(), 1).unwrap().rank(), 2);
    }

    #[test]
    fn cycle_basis_boundaries_vanish() {
        let cx = square();
        let lattice = cycle_basis(&cx, 1).unwrap();
        let mut rng = SplitMix64::new(5);
        for cycle in lattice.basis() {
            assert!(cx.boundary(cycle).unwrap().is_zero());
        }
        // Random integer combinations are cycles too.
        for _ in 0..50 {
            let mut combo = IntChain::zero(1);
            for cycle in lattice.basis() {
                combo = combo.add(&cycle.scale(rng.int_in(-10, 10)).unwrap()).unwrap();
            }
            assert!(cx.boundary(&combo).unwrap().is_zero());
        }
    }

    #[test]
    fn cycle_basis_rejects_dimension_zero() {
        assert!(matches!(cycle_basis(&tri(), 0), Err(BallError::ZeroDimension)));
    }

    #[test]
    fn sampled_cycles_have_zero_boundary_and_bounded_mass() {
        let cx = tri();
        let lattice = cycle_basis(&cx, 1).unwrap();
        let samples = sample_cycles(&cx, &lattice, 7.0, 200, 99).unwrap();
        let perimeter_mass = 2.0 + core::f64::consts::SQRT_2;
        for chain in &samples {
            assert!(cx.boundary(chain).unwrap().is_zero());
            assert!(mass(&cx, chain).unwrap() <= 7.0 + BALL_TOLERANCE);
            // Support is c·∂σ with |c|·(2+√2) ≤ 7, i.e. |c| ≤ 2.
            let c = chain.coefficient(0);
            assert!(c.abs() <= 2, "coefficient {c}");
            assert!((mass(&cx, chain).unwrap() - (c.abs() as f64) * perimeter_mass).abs() < 1e-12);
        }
        // Determinism.
        let again = sample_cycles(&cx, &lattice, 7.0, 200, 99).unwrap();
        assert_eq!(samples, again);
    }

    #[test]
    fn empty_lattice_yields_zero_chains() {
        let cx = edge1();
        let lattice = cycle_basis(&cx, 1).unwrap();
        let samples = sample_cycles(&cx, &lattice, 3.0, 4, 0).unwrap();
        assert_eq!(samples.len(), 4);
        assert!(samples.iter().all(IntChain::is_zero));
    }

    #[test]
    fn extended_gcd_identity() {
        for (a, b) in [(12, 18), (-12, 18), (7, 0), (0, -5), (1, 1), (-4, -6)] {
            let (g, x, y) = extended_gcd(a, b);
            assert!(g >= 0);
            assert_eq!(a * x + b * y, g);
            if a != 0 || b != 0 {
                assert_eq!(a % g, 0);
                assert_eq!(b % g, 0);
            }
        }
    }
}

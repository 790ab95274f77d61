//! Discrete differential forms and the unit-modulus functional `g_k`.
//!
//! A [`Cochain`] stores one real value per `m`-simplex — the integral of the
//! represented form over that oriented simplex. The pairing with chains is
//! bilinear, the coboundary is the transpose of the boundary (so the Stokes
//! identity `⟨dk, S⟩ = ⟨k, ∂S⟩` is algebraically exact), and the discrete
//! comass is the largest per-simplex average density `|k(σ)|/vol(σ)`.
//! Smooth forms enter through [`FormField`] evaluators pulled back to each
//! simplex with centroid or second-order quadrature.
//!
//! `g_k(X) = exp(i·∫k⌊X)·exp(i·‖X‖_F)` and its Lipschitz bound
//! `(1 + max{‖k‖, ‖dk‖})·‖X - X̃‖_F` are verified empirically over sampled
//! chains from a mass ball.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ball::{BallError, BallSampler, MassBall};
use crate::chain::{Chain, ChainError, Coefficient, IntChain};
use crate::math;
use crate::norms::{flat_norm_value, FlatMode, NormError};
use crate::scalar::ComplexScalar;
use crate::simplicial::SimplicialComplex;

/// A real value per `m`-simplex; zero values are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    dim: usize,
    values: BTreeMap<usize, f64>,
}

impl Cochain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut out = Self::zero(dim);
        for (index, v) in entries {
            out.add_term(index, v);
        }
        out
    }

    pub fn add_term(&mut self, index: usize, value: f64) {
        let updated = self.values.get(&index).copied().unwrap_or(0.0) + value;
        if updated == 0.0 {
            self.values.remove(&index);
        } else {
            self.values.insert(index, updated);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, index: usize) -> f64 {
        self.values.get(&index).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values.iter().map(|(&i, &v)| (i, v))
    }

    fn validate(&self, complex: &SimplicialComplex) -> Result<(), FormError> {
        let count = complex.simplex_count(self.dim);
        for (index, _) in self.iter() {
            if index >= count {
                return Err(FormError::Chain(ChainError::IndexOutOfRange {
                    dim: self.dim,
                    index,
                    count,
                }));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum FormError {
    Chain(ChainError),
    Norm(NormError),
    Ball(BallError),
    /// Cochain and chain dimensions differ.
    DimensionMismatch { cochain: usize, chain: usize },
    /// Quadrature order not available for this form degree.
    UnsupportedQuadrature { degree: usize, order: QuadratureOrder },
    /// The form degree exceeds the complex's top dimension.
    DegreeTooHigh { degree: usize, top_dim: usize },
    /// The complex has no simplices of the required dimension.
    NoSimplices { dim: usize },
    /// `trials` must be at least one.
    NoTrials,
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::Chain(e) => write!(f, "{e}"),
            FormError::Norm(e) => write!(f, "{e}"),
            FormError::Ball(e) => write!(f, "{e}"),
            FormError::DimensionMismatch { cochain, chain } => {
                write!(f, "cochain dimension {cochain} does not match chain dimension {chain}")
            }
            FormError::UnsupportedQuadrature { degree, order } => {
                write!(f, "no order-{order:?} quadrature for degree-{degree} forms")
            }
            FormError::DegreeTooHigh { degree, top_dim } => {
                write!(f, "form degree {degree} exceeds top dimension {top_dim}")
            }
            FormError::NoSimplices { dim } => {
                write!(f, "complex has no simplices of dimension {dim}")
            }
            FormError::NoTrials => write!(f, "at least one trial is required"),
        }
    }
}

impl core::error::Error for FormError {}

impl From<ChainError> for FormError {
    fn from(e: ChainError) -> Self {
        FormError::Chain(e)
    }
}

impl From<NormError> for FormError {
    fn from(e: NormError) -> Self {
        FormError::Norm(e)
    }
}

impl From<BallError> for FormError {
    fn from(e: BallError) -> Self {
        FormError::Ball(e)
    }
}

/// Bilinear pairing `⟨k, T⟩ = Σ_σ T(σ)·k(σ)`.
pub fn pair<C: Coefficient>(
    complex: &SimplicialComplex,
    k: &Cochain,
    t: &Chain<C>,
) -> Result<f64, FormError> {
    if k.dim() != t.dim() {
        return Err(FormError::DimensionMismatch {
            cochain: k.dim(),
            chain: t.dim(),
        });
    }
    k.validate(complex)?;
    complex.validate_chain(t)?;
    Ok(t.iter().map(|(index, c)| c.to_f64() * k.value(index)).sum())
}

/// Coboundary `(dk)(τ) = k(∂τ)`: the transpose of the boundary matrix
/// applied to `k`. Empty in the top dimension.
pub fn coboundary(complex: &SimplicialComplex, k: &Cochain) -> Result<Cochain, FormError> {
    k.validate(complex)?;
    let up = k.dim() + 1;
    let mut out = Cochain::zero(up);
    for tau in 0..complex.simplex_count(up) {
        let mut total = 0.0;
        for (face, sign) in complex.boundary_column(up, tau) {
            total += sign as f64 * k.value(face);
        }
        out.add_term(tau, total);
    }
    Ok(out)
}

/// Discrete comass: `max_σ |k(σ)| / vol(σ)`, zero for the empty cochain.
pub fn comass(complex: &SimplicialComplex, k: &Cochain) -> Result<f64, FormError> {
    k.validate(complex)?;
    Ok(k.iter()
        .map(|(index, v)| math::abs(v) / complex.volume(k.dim(), index))
        .fold(0.0, f64::max))
}

/// A smooth `m`-form presented as a coefficient evaluator: at a point of
/// `R^n` it fills one coefficient per ascending multi-index
/// `i₁ < … < i_m` (lexicographic order), `C(n, m)` components in total.
/// Evaluators must be deterministic.
pub trait FormField {
    fn degree(&self) -> usize;
    fn components(&self, point: &[f64], out: &mut [f64]);
}

/// A form with constant coefficients.
#[derive(Clone, Debug)]
pub struct ConstantForm {
    degree: usize,
    components: Vec<f64>,
}

impl ConstantForm {
    pub fn new(degree: usize, components: Vec<f64>) -> Self {
        Self { degree, components }
    }
}

impl FormField for ConstantForm {
    fn degree(&self) -> usize {
        self.degree
    }

    fn components(&self, _point: &[f64], out: &mut [f64]) {
        assert_eq!(out.len(), self.components.len(), "component count mismatch");
        out.copy_from_slice(&self.components);
    }
}

/// A form with affine coefficients `a_I(x) = constant_I + gradient_I · x`.
#[derive(Clone, Debug)]
pub struct AffineForm {
    degree: usize,
    constant: Vec<f64>,
    gradient: Vec<Vec<f64>>,
}

impl AffineForm {
    pub fn new(degree: usize, constant: Vec<f64>, gradient: Vec<Vec<f64>>) -> Self {
        assert_eq!(constant.len(), gradient.len(), "component count mismatch");
        Self {
            degree,
            constant,
            gradient,
        }
    }
}

impl FormField for AffineForm {
    fn degree(&self) -> usize {
        self.degree
    }

    fn components(&self, point: &[f64], out: &mut [f64]) {
        assert_eq!(out.len(), self.constant.len(), "component count mismatch");
        for (i, slot) in out.iter_mut().enumerate() {
            let dot: f64 = self.gradient[i].iter().zip(point).map(|(g, x)| g * x).sum();
            *slot = self.constant[i] + dot;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureOrder {
    /// Centroid rule; exact for constant coefficients, any degree.
    One,
    /// 2-point Gauss on edges, 3-point symmetric rule on triangles;
    /// exact for affine coefficients.
    Two,
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Ascending `m`-element subsets of `0..n` in lexicographic order.
fn multi_indices(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, m));
    let mut current: Vec<usize> = (0..m).collect();
    if m > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // Odometer step.
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            if current[pos] < n - (m - pos) {
                current[pos] += 1;
                for later in pos + 1..m {
                    current[later] = current[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if m == 0 {
            return out;
        }
    }
}

/// Quadrature nodes in barycentric coordinates with reference weights
/// summing to the reference simplex volume `1/m!`.
fn quadrature_rule(m: usize, order: QuadratureOrder) -> Option<Vec<(Vec<f64>, f64)>> {
    let reference_volume = 1.0 / math::factorial(m);
    match (m, order) {
        (0, _) => Some(vec![(vec![1.0], 1.0)]),
        (_, QuadratureOrder::One) => {
            let b = 1.0 / (m as f64 + 1.0);
            Some(vec![(vec![b; m + 1], reference_volume)])
        }
        (1, QuadratureOrder::Two) => {
            let offset = 1.0 / (2.0 * math::sqrt(3.0));
            let t1 = 0.5 - offset;
            let t2 = 0.5 + offset;
            Some(vec![
                (vec![1.0 - t1, t1], 0.5),
                (vec![1.0 - t2, t2], 0.5),
            ])
        }
        (2, QuadratureOrder::Two) => {
            // Edge-midpoint rule, degree-2 exact on triangles.
            let w = reference_volume / 3.0;
            Some(vec![
                (vec![0.5, 0.5, 0.0], w),
                (vec![0.5, 0.0, 0.5], w),
                (vec![0.0, 0.5, 0.5], w),
            ])
        }
        _ => None,
    }
}

/// Integrates `field` over every `m`-simplex of the complex:
/// `value(σ) ≈ ∫_σ field`, pulled back through the affine parametrization
/// with the orientation of the canonical ascending vertex tuple.
pub fn discretize_form(
    complex: &SimplicialComplex,
    field: &dyn FormField,
    order: QuadratureOrder,
) -> Result<Cochain, FormError> {
    let m = field.degree();
    if m > complex.top_dim() {
        return Err(FormError::DegreeTooHigh {
            degree: m,
            top_dim: complex.top_dim(),
        });
    }
    let rule = quadrature_rule(m, order).ok_or(FormError::UnsupportedQuadrature {
        degree: m,
        order,
    })?;
    let n = complex.ambient_dim();
    let indices = multi_indices(n, m);
    let mut components = vec![0.0; indices.len()];
    let mut out = Cochain::zero(m);

    for j in 0..complex.simplex_count(m) {
        let tuple = complex.simplex_vertices(m, j).to_vec();
        // Edge matrix G (n×m): columns p_k − p_0.
        let base: Vec<f64> = complex.vertex(tuple[0]).to_vec();
        let edges: Vec<Vec<f64>> = (1..=m)
            .map(|k| {
                let p = complex.vertex(tuple[k]);
                (0..n).map(|c| p[c] - base[c]).collect()
            })
            .collect();
        // det(G_I) for each multi-index: the pullback of dx_I.
        let minors: Vec<f64> = indices
            .iter()
            .map(|index_set| {
                if m == 0 {
                    return 1.0;
                }
                let mut sub = vec![0.0; m * m];
                for (row, &coord) in index_set.iter().enumerate() {
                    for col in 0..m {
                        sub[row * m + col] = edges[col][coord];
                    }
                }
                math::det_in_place(&mut sub, m)
            })
            .collect();

        let mut total = 0.0;
        for (bary, weight) in &rule {
            let mut point = vec![0.0; n];
            for (k, &b) in bary.iter().enumerate() {
                let p = complex.vertex(tuple[k]);
                for c in 0..n {
                    point[c] += b * p[c];
                }
            }
            field.components(&point, &mut components);
            let density: f64 = components.iter().zip(&minors).map(|(a, d)| a * d).sum();
            total += weight * density;
        }
        out.add_term(j, total);
    }
    Ok(out)
}

/// `g_k(X) = exp(i·(⟨k, X⟩ + ‖X‖_F))`; unit modulus by construction.
pub fn gk_eval(
    complex: &SimplicialComplex,
    k: &Cochain,
    x: &IntChain,
    mode: FlatMode,
) -> Result<ComplexScalar, FormError> {
    let pairing = pair(complex, k, x)?;
    let flat = flat_norm_value(complex, x, mode)?;
    Ok(ComplexScalar::unit_phase(pairing + flat))
}

#[derive(Clone, Debug)]
pub struct LipschitzReport {
    /// `1 + max{‖k‖, ‖dk‖}` with discrete comasses.
    pub bound: f64,
    /// Largest observed `|g_k(X+Y) - g_k(X̃+Y)| / ‖X - X̃‖_F`.
    pub max_ratio: f64,
    pub trials: usize,
    /// Trials with `X ≠ X̃` that contributed a ratio.
    pub comparisons: usize,
    pub pass: bool,
}

/// Samples `trials` triples `(X, X̃, Y)` of integer 2-chains with
/// `N(T) ≤ mass_cap` and checks the equicontinuity bound of `g_k`.
pub fn verify_gk_lipschitz(
    complex: &SimplicialComplex,
    k: &Cochain,
    trials: usize,
    seed: u64,
    mass_cap: f64,
    mode: FlatMode,
) -> Result<LipschitzReport, FormError> {
    if trials == 0 {
        return Err(FormError::NoTrials);
    }
    if k.dim() != 2 {
        return Err(FormError::DimensionMismatch {
            cochain: k.dim(),
            chain: 2,
        });
    }
    if complex.simplex_count(2) == 0 {
        return Err(FormError::NoSimplices { dim: 2 });
    }
    k.validate(complex)?;

    let dk = coboundary(complex, k)?;
    let bound = 1.0 + f64::max(comass(complex, k)?, comass(complex, &dk)?);

    let ball = MassBall {
        dim: 2,
        cap: mass_cap,
    };
    let mut sampler = BallSampler::new(complex, &ball, seed)?;
    let mut max_ratio = 0.0f64;
    let mut comparisons = 0usize;
    for _ in 0..trials {
        let x = sampler.draw()?;
        let x_tilde = sampler.draw()?;
        let y = sampler.draw()?;
        let difference = x.sub(&x_tilde)?;
        if difference.is_zero() {
            continue;
        }
        let denominator = flat_norm_value(complex, &difference, mode)?;
        let g1 = gk_eval(complex, k, &x.add(&y)?, mode)?;
        let g2 = gk_eval(complex, k, &x_tilde.add(&y)?, mode)?;
        let ratio = g1.sub(g2).modulus() / denominator;
        max_ratio = max_ratio.max(ratio);
        comparisons += 1;
    }
    Ok(LipschitzReport {
        bound,
        max_ratio,
        trials,
        comparisons,
        pass: max_ratio <= bound + 1e-9,
    })
}

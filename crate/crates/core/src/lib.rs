//! Integral currents discretized as integer chains on finite simplicial complexes.
//!
//! The crate provides:
//!
//! - [`simplicial`]: embedded oriented simplicial complexes with canonical
//!   simplex IDs, signed boundary matrices, and Euclidean simplex volumes;
//! - [`chain`]: sparse chains with integer or real coefficients;
//! - [`lp`]: a dense two-phase simplex solver and a small branch-and-bound
//!   layer for integer programs;
//! - [`norms`]: mass, normal norm, and the flat norm with decomposition
//!   certificates `T = R + ∂S`;
//! - [`forms`]: cochains, chain/cochain pairing, coboundary, comass,
//!   quadrature discretization of smooth forms, and the unit-modulus
//!   functional `g_k(X) = exp(i·∫k⌊X)·exp(i·‖X‖_F)` with its Lipschitz
//!   verification;
//! - [`ball`]: enumeration and seeded sampling of the compact balls
//!   `{T : M(T) + M(∂T) ≤ Λ}` and of the integer cycle lattice;
//! - [`mean`]: an LP estimator for the addition-invariant mean of bounded
//!   functions on integer chains, with certified oscillation on a probe set.
//!
//! The crate is `no_std` (with `alloc`); all floating-point transcendentals
//! go through `libm` so results are bit-identical across platforms. File
//! formats and the command-line front end live in the companion `curr` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod math;

pub mod ball;
pub mod chain;
pub mod forms;
pub mod lp;
pub mod mean;
pub mod norms;
pub mod rng;
pub mod scalar;
pub mod simplicial;

pub use ball::{
    cycle_basis, enumerate_ball, sample_ball, sample_cycles, BallError, BallSampler, CycleLattice,
    CycleSampler, MassBall,
};
pub use chain::{Chain, ChainError, Coefficient, IntChain, RealChain};
pub use forms::{
    coboundary, comass, discretize_form, gk_eval, pair, verify_gk_lipschitz, AffineForm,
    ConstantForm, Cochain, FormError, FormField, LipschitzReport, QuadratureOrder,
};
pub use lp::{solve_ilp, solve_lp, IlpSolution, LinearProgram, LpError, LpSolution, LpStatus, Relation};
pub use mean::{
    check_shift_invariance, estimate_mean, FunctionSpec, MeanError, MeanEstimate,
    ShiftFamily, ShiftInvarianceReport, ShiftProvenance, Strategy,
};
pub use norms::{
    flat_norm_integer, flat_norm_real, flat_norm_value, mass, normal_norm, FlatDecomposition,
    FlatMode, NormError,
};
pub use rng::SplitMix64;
pub use scalar::ComplexScalar;
pub use simplicial::{BuildError, SimplicialComplex, ValidationCheck, ValidationReport};

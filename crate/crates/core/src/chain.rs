//! Sparse chains over the simplices of one dimension.
//!
//! A [`Chain`] is the discrete stand-in for a current: a finitely supported
//! coefficient vector indexed by canonical simplex indices. Integer
//! coefficients model integral currents; real coefficients appear in the
//! flat-norm relaxation. Zero coefficients are never stored, so equal chains
//! compare equal structurally and serialize identically.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Coefficient ring of a chain. Implemented for `i64` (integral currents,
/// overflow-checked) and `f64` (real polyhedral chains).
pub trait Coefficient: Copy + PartialEq + PartialOrd + fmt::Debug {
    const ZERO: Self;

    /// `None` signals integer overflow; `f64` never fails.
    fn add_checked(self, rhs: Self) -> Option<Self>;
    fn neg_checked(self) -> Option<Self>;
    fn mul_checked(self, rhs: Self) -> Option<Self>;
    fn is_zero(self) -> bool;
    fn to_f64(self) -> f64;
}

impl Coefficient for i64 {
    const ZERO: Self = 0;

    fn add_checked(self, rhs: Self) -> Option<Self> {
        self.checked_add(rhs)
    }

    fn neg_checked(self) -> Option<Self> {
        self.checked_neg()
    }

    fn mul_checked(self, rhs: Self) -> Option<Self> {
        self.checked_mul(rhs)
    }

    fn is_zero(self) -> bool {
        self == 0
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Coefficient for f64 {
    const ZERO: Self = 0.0;

    fn add_checked(self, rhs: Self) -> Option<Self> {
        Some(self + rhs)
    }

    fn neg_checked(self) -> Option<Self> {
        Some(-self)
    }

    fn mul_checked(self, rhs: Self) -> Option<Self> {
        Some(self * rhs)
    }

    fn is_zero(self) -> bool {
        self == 0.0
    }

    fn to_f64(self) -> f64 {
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// Two chains of different dimensions were combined.
    DimensionMismatch { left: usize, right: usize },
    /// A coefficient index does not name a simplex of the chain's dimension.
    IndexOutOfRange { dim: usize, index: usize, count: usize },
    /// Integer coefficient arithmetic overflowed 64 bits.
    Overflow,
    /// Boundary requested below dimension zero.
    NoBoundaryBelowDimensionZero,
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::DimensionMismatch { left, right } => {
                write!(f, "chain dimension mismatch: {left} vs {right}")
            }
            ChainError::IndexOutOfRange { dim, index, count } => write!(
                f,
                "coefficient index {index} out of range: complex has {count} simplices of dimension {dim}"
            ),
            ChainError::Overflow => write!(f, "integer coefficient overflow"),
            ChainError::NoBoundaryBelowDimensionZero => {
                write!(f, "no boundary below dimension zero")
            }
        }
    }
}

impl core::error::Error for ChainError {}

/// A sparse chain of a fixed dimension.
///
/// Coefficients are kept in a `BTreeMap` so iteration order is canonical
/// (ascending simplex index) and construction is order-independent.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<C: Coefficient> {
    dim: usize,
    coeffs: BTreeMap<usize, C>,
}

pub type IntChain = Chain<i64>;
pub type RealChain = Chain<f64>;

impl<C: Coefficient> Chain<C> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn singleton(dim: usize, index: usize, coefficient: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coefficient.is_zero() {
            coeffs.insert(index, coefficient);
        }
        Self { dim, coeffs }
    }

    /// Builds a chain from `(index, coefficient)` entries; repeated indices
    /// are accumulated.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self, ChainError>
    where
        I: IntoIterator<Item = (usize, C)>,
    {
        let mut chain = Self::zero(dim);
        for (index, c) in entries {
            chain.add_term(index, c)?;
        }
        Ok(chain)
    }

    /// Adds `coefficient` at `index`, keeping the sparse form canonical.
    pub fn add_term(&mut self, index: usize, coefficient: C) -> Result<(), ChainError> {
        if coefficient.is_zero() {
            return Ok(());
        }
        let current = self.coeffs.get(&index).copied().unwrap_or(C::ZERO);
        let updated = current.add_checked(coefficient).ok_or(ChainError::Overflow)?;
        if updated.is_zero() {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, updated);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, index: usize) -> C {
        self.coeffs.get(&index).copied().unwrap_or(C::ZERO)
    }

    /// Entries in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, C)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn entries(&self) -> Vec<(usize, C)> {
        self.iter().collect()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ChainError> {
        if self.dim != rhs.dim {
            return Err(ChainError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let mut out = self.clone();
        for (index, c) in rhs.iter() {
            out.add_term(index, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ChainError> {
        self.add(&rhs.neg()?)
    }

    pub fn neg(&self) -> Result<Self, ChainError> {
        let mut out = Self::zero(self.dim);
        for (index, c) in self.iter() {
            let negated = c.neg_checked().ok_or(ChainError::Overflow)?;
            out.coeffs.insert(index, negated);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: C) -> Result<Self, ChainError> {
        let mut out = Self::zero(self.dim);
        if factor.is_zero() {
            return Ok(out);
        }
        for (index, c) in self.iter() {
            let scaled = c.mul_checked(factor).ok_or(ChainError::Overflow)?;
            if !scaled.is_zero() {
                out.coeffs.insert(index, scaled);
            }
        }
        Ok(out)
    }
}

impl IntChain {
    /// The same chain with coefficients embedded into the reals.
    pub fn to_real(&self) -> RealChain {
        let mut out = RealChain::zero(self.dim);
        for (index, c) in self.iter() {
            out.coeffs.insert(index, c as f64);
        }
        out
    }
}

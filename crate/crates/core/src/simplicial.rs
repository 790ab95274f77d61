//! Embedded oriented simplicial complexes.
//!
//! A complex is built from vertex coordinates in `R^n` and a list of
//! simplices given as vertex tuples. Every face of a listed simplex is
//! generated automatically. Within each dimension, simplices are stored
//! in ascending-vertex (canonical) orientation and ordered lexicographically
//! by their sorted vertex tuples, so canonical IDs `(dim, index)` are
//! deterministic: the same input always produces the same complex,
//! byte for byte.
//!
//! Boundary matrices are stored implicitly: the face obtained by deleting
//! the vertex at position `i` of an ascending tuple carries sign `(-1)^i`.
//! Volumes are Euclidean, computed with the Gram determinant
//! `vol = sqrt(det(GᵀG)) / m!`; every 0-simplex has volume 1, so the mass
//! of a 0-chain is the sum of absolute coefficients.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{Chain, ChainError, Coefficient};
use crate::math;

/// Simplices with volume below this threshold are rejected as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum BuildError {
    /// Ambient dimension must be a positive integer.
    ZeroAmbientDimension,
    /// Coordinate buffer length is not a multiple of the ambient dimension.
    RaggedCoordinates { len: usize, ambient_dim: usize },
    /// A vertex coordinate is NaN or infinite.
    NonFiniteCoordinate { vertex: usize },
    /// A listed simplex references a vertex that does not exist.
    VertexOutOfRange { vertex: usize, count: usize },
    /// A listed simplex repeats a vertex.
    RepeatedVertex { vertices: Vec<usize> },
    /// The same simplex was listed twice.
    DuplicateSimplex { vertices: Vec<usize> },
    /// An empty vertex tuple was listed.
    EmptySimplex,
    /// A simplex embeds with (numerically) zero volume.
    DegenerateSimplex { vertices: Vec<usize>, volume: f64 },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::ZeroAmbientDimension => write!(f, "ambient dimension must be positive"),
            BuildError::RaggedCoordinates { len, ambient_dim } => write!(
                f,
                "coordinate buffer of length {len} is not a multiple of ambient dimension {ambient_dim}"
            ),
            BuildError::NonFiniteCoordinate { vertex } => {
                write!(f, "vertex {vertex} has a non-finite coordinate")
            }
            BuildError::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex index {vertex} out of range (complex has {count} vertices)")
            }
            BuildError::RepeatedVertex { vertices } => {
                write!(f, "simplex {vertices:?} repeats a vertex")
            }
            BuildError::DuplicateSimplex { vertices } => {
                write!(f, "simplex {vertices:?} listed more than once")
            }
            BuildError::EmptySimplex => write!(f, "empty simplex listed"),
            BuildError::DegenerateSimplex { vertices, volume } => {
                write!(f, "simplex {vertices:?} is degenerate (volume {volume:e})")
            }
        }
    }
}

impl core::error::Error for BuildError {}

/// All simplices of one dimension, flat storage.
#[derive(Clone, Debug)]
struct Level {
    /// Vertices per simplex (`dim + 1`).
    arity: usize,
    /// Ascending vertex tuples, concatenated; tuple `j` occupies
    /// `verts[j*arity .. (j+1)*arity]`. Tuples are in lexicographic order.
    verts: Vec<usize>,
    /// Euclidean volume per simplex.
    volumes: Vec<f64>,
    /// For `dim ≥ 1`: face indices in the level below, stride `arity`;
    /// entry `i` of tuple `j` is the face omitting vertex position `i`,
    /// with implicit sign `(-1)^i`.
    faces: Vec<usize>,
}

impl Level {
    fn len(&self) -> usize {
        if self.arity == 0 {
            0
        } else {
            self.verts.len() / self.arity
        }
    }

    fn tuple(&self, index: usize) -> &[usize] {
        &self.verts[index * self.arity..(index + 1) * self.arity]
    }

    fn face_row(&self, index: usize) -> &[usize] {
        &self.faces[index * self.arity..(index + 1) * self.arity]
    }
}

/// An embedded oriented simplicial complex; immutable after construction.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    ambient_dim: usize,
    /// Flat coordinates, stride `ambient_dim`.
    coords: Vec<f64>,
    levels: Vec<Level>,
}

impl SimplicialComplex {
    /// Builds a complex from flat vertex coordinates (stride `ambient_dim`)
    /// and a list of simplices as vertex tuples (any order, any dimensions).
    /// Faces are generated automatically; every vertex is a 0-simplex.
    pub fn build(
        ambient_dim: usize,
        coords: Vec<f64>,
        simplices: &[Vec<usize>],
    ) -> Result<Self, BuildError> {
        if ambient_dim == 0 {
            return Err(BuildError::ZeroAmbientDimension);
        }
        if coords.len() % ambient_dim != 0 {
            return Err(BuildError::RaggedCoordinates {
                len: coords.len(),
                ambient_dim,
            });
        }
        let vertex_count = coords.len() / ambient_dim;
        if let Some(bad) = coords.iter().position(|c| !c.is_finite()) {
            return Err(BuildError::NonFiniteCoordinate {
                vertex: bad / ambient_dim,
            });
        }

        // Sort each listed tuple, validate, and reject duplicates.
        let mut top_dim = 0usize;
        let mut listed: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for raw in simplices {
            if raw.is_empty() {
                return Err(BuildError::EmptySimplex);
            }
            for &v in raw {
                if v >= vertex_count {
                    return Err(BuildError::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            let mut tuple = raw.clone();
            tuple.sort_unstable();
            if tuple.windows(2).any(|w| w[0] == w[1]) {
                return Err(BuildError::RepeatedVertex { vertices: raw.clone() });
            }
            let dim = tuple.len() - 1;
            top_dim = top_dim.max(dim);
            if !listed.entry(dim).or_default().insert(tuple) {
                return Err(BuildError::DuplicateSimplex { vertices: raw.clone() });
            }
        }

        // Closure: every face of every simplex, top dimension downward.
        // BTreeSet iteration gives the lexicographic canonical order for free.
        let mut sets: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top_dim + 1];
        for (dim, tuples) in listed {
            sets[dim].extend(tuples);
        }
        for dim in (1..=top_dim).rev() {
            let faces: Vec<Vec<usize>> = sets[dim]
                .iter()
                .flat_map(|tuple| {
                    (0..tuple.len()).map(move |omit| {
                        let mut face = tuple.clone();
                        face.remove(omit);
                        face
                    })
                })
                .collect();
            sets[dim - 1].extend(faces);
        }
        // Every vertex is a 0-simplex regardless of incidence.
        sets[0] = (0..vertex_count).map(|v| vec![v]).collect();

        let mut levels: Vec<Level> = Vec::with_capacity(top_dim + 1);
        for (dim, set) in sets.iter().enumerate() {
            let arity = dim + 1;
            let mut verts = Vec::with_capacity(set.len() * arity);
            for tuple in set {
                verts.extend_from_slice(tuple);
            }
            levels.push(Level {
                arity,
                verts,
                volumes: Vec::new(),
                faces: Vec::new(),
            });
        }

        let mut complex = Self {
            ambient_dim,
            coords,
            levels,
        };

        // Face indices via lookup in the (sorted) level below.
        for dim in 1..=top_dim {
            let count = complex.levels[dim].len();
            let mut faces = Vec::with_capacity(count * (dim + 1));
            for j in 0..count {
                let tuple = complex.levels[dim].tuple(j).to_vec();
                for omit in 0..tuple.len() {
                    let mut face = tuple.clone();
                    face.remove(omit);
                    let face_index = complex
                        .lookup(dim - 1, &face)
                        .expect("face closure generated every face");
                    faces.push(face_index);
                }
            }
            complex.levels[dim].faces = faces;
        }

        // Volumes; reject degenerate embeddings.
        for dim in 0..=top_dim {
            let count = complex.levels[dim].len();
            let mut volumes = Vec::with_capacity(count);
            for j in 0..count {
                let vol = complex.simplex_volume(dim, j);
                if dim > 0 && vol <= DEGENERACY_TOLERANCE {
                    return Err(BuildError::DegenerateSimplex {
                        vertices: complex.levels[dim].tuple(j).to_vec(),
                        volume: vol,
                    });
                }
                volumes.push(vol);
            }
            complex.levels[dim].volumes = volumes;
        }

        Ok(complex)
    }

    fn simplex_volume(&self, dim: usize, index: usize) -> f64 {
        if dim == 0 {
            return 1.0;
        }
        let tuple = self.levels[dim].tuple(index);
        let base = self.vertex(tuple[0]);
        let n = self.ambient_dim;
        // Gram matrix of edge vectors from the first vertex.
        let mut gram = vec![0.0; dim * dim];
        let edge = |k: usize| -> Vec<f64> {
            let p = self.vertex(tuple[k + 1]);
            (0..n).map(|c| p[c] - base[c]).collect()
        };
        let edges: Vec<Vec<f64>> = (0..dim).map(edge).collect();
        for a in 0..dim {
            for b in 0..dim {
                gram[a * dim + b] = (0..n).map(|c| edges[a][c] * edges[b][c]).sum();
            }
        }
        let det = math::det_in_place(&mut gram, dim);
        if det <= 0.0 {
            return 0.0;
        }
        math::sqrt(det) / math::factorial(dim)
    }

    /// Binary search for a sorted vertex tuple within one dimension.
    fn lookup(&self, dim: usize, sorted_tuple: &[usize]) -> Option<usize> {
        if dim >= self.levels.len() {
            return None;
        }
        let level = &self.levels[dim];
        if sorted_tuple.len() != level.arity {
            return None;
        }
        let mut lo = 0usize;
        let mut hi = level.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match level.tuple(mid).cmp(sorted_tuple) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Highest dimension with stored simplices.
    pub fn top_dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() / self.ambient_dim
    }

    pub fn vertex(&self, index: usize) -> &[f64] {
        &self.coords[index * self.ambient_dim..(index + 1) * self.ambient_dim]
    }

    /// Number of simplices of `dim`; zero above the top dimension.
    pub fn simplex_count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, Level::len)
    }

    /// Ascending vertex tuple of simplex `(dim, index)`.
    pub fn simplex_vertices(&self, dim: usize, index: usize) -> &[usize] {
        self.levels[dim].tuple(index)
    }

    /// Canonical `(dim, index)` of the simplex on the given vertices, if present.
    pub fn simplex_index(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        if vertices.is_empty() {
            return None;
        }
        let mut tuple = vertices.to_vec();
        tuple.sort_unstable();
        let dim = tuple.len() - 1;
        self.lookup(dim, &tuple).map(|index| (dim, index))
    }

    pub fn volume(&self, dim: usize, index: usize) -> f64 {
        self.levels[dim].volumes[index]
    }

    /// Signed boundary column of simplex `(dim, index)`:
    /// pairs `(face_index, ±1)` in face-position order.
    pub fn boundary_column(&self, dim: usize, index: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let level = &self.levels[dim];
        level
            .face_row(index)
            .iter()
            .enumerate()
            .map(|(pos, &face)| (face, if pos % 2 == 0 { 1 } else { -1 }))
    }

    /// Rows of the boundary matrix from dimension `dim`: for each
    /// `(dim-1)`-simplex, the signed incidences `(cofacet_index, ±1)`.
    pub fn coboundary_rows(&self, dim: usize) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.simplex_count(dim - 1)];
        for j in 0..self.simplex_count(dim) {
            for (face, sign) in self.boundary_column(dim, j) {
                rows[face].push((j, sign));
            }
        }
        rows
    }

    /// Checks that every coefficient index of `chain` names a simplex.
    pub fn validate_chain<C: Coefficient>(&self, chain: &Chain<C>) -> Result<(), ChainError> {
        let count = self.simplex_count(chain.dim());
        for (index, _) in chain.iter() {
            if index >= count {
                return Err(ChainError::IndexOutOfRange {
                    dim: chain.dim(),
                    index,
                    count,
                });
            }
        }
        Ok(())
    }

    /// Boundary of a chain: `∂T`, one dimension down, same coefficient mode.
    pub fn boundary<C: Coefficient>(&self, chain: &Chain<C>) -> Result<Chain<C>, ChainError> {
        if chain.dim() == 0 {
            return Err(ChainError::NoBoundaryBelowDimensionZero);
        }
        self.validate_chain(chain)?;
        let mut out = Chain::zero(chain.dim() - 1);
        for (index, c) in chain.iter() {
            for (face, sign) in self.boundary_column(chain.dim(), index) {
                let signed = if sign > 0 {
                    c
                } else {
                    c.neg_checked().ok_or(ChainError::Overflow)?
                };
                out.add_term(face, signed)?;
            }
        }
        Ok(out)
    }

    /// Diagnostic re-verification of the structural invariants:
    /// `∂∘∂ = 0` per dimension (exact integer arithmetic), strictly positive
    /// volumes, and face-closure consistency.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();

        for dim in 2..=self.top_dim() {
            let mut ok = true;
            let mut detail = String::new();
            'outer: for j in 0..self.simplex_count(dim) {
                // Signed count per (dim-2)-simplex of the double boundary.
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (face, sign) in self.boundary_column(dim, j) {
                    for (sub, sub_sign) in self.boundary_column(dim - 1, face) {
                        *acc.entry(sub).or_insert(0) += sign * sub_sign;
                    }
                }
                for (sub, total) in acc {
                    if total != 0 {
                        ok = false;
                        detail = format!(
                            "∂∂ of simplex ({dim}, {j}) hits ({}, {sub}) with coefficient {total}",
                            dim - 2
                        );
                        break 'outer;
                    }
                }
            }
            checks.push(ValidationCheck {
                name: "boundary_squared_zero",
                dim: Some(dim),
                pass: ok,
                detail,
            });
        }

        for dim in 0..=self.top_dim() {
            let mut ok = true;
            let mut detail = String::new();
            for j in 0..self.simplex_count(dim) {
                let v = self.volume(dim, j);
                let required = if dim == 0 { v == 1.0 } else { v > DEGENERACY_TOLERANCE };
                if !required {
                    ok = false;
                    detail = format!("simplex ({dim}, {j}) has volume {v:e}");
                    break;
                }
            }
            checks.push(ValidationCheck {
                name: "positive_volume",
                dim: Some(dim),
                pass: ok,
                detail,
            });
        }

        for dim in 1..=self.top_dim() {
            let mut ok = true;
            let mut detail = String::new();
            'closure: for j in 0..self.simplex_count(dim) {
                let tuple = self.simplex_vertices(dim, j);
                for (omit, &face_index) in self.levels[dim].face_row(j).iter().enumerate() {
                    if face_index >= self.simplex_count(dim - 1) {
                        ok = false;
                        detail = format!("simplex ({dim}, {j}) points at missing face {face_index}");
                        break 'closure;
                    }
                    let mut expected = tuple.to_vec();
                    expected.remove(omit);
                    if self.simplex_vertices(dim - 1, face_index) != expected.as_slice() {
                        ok = false;
                        detail = format!(
                            "simplex ({dim}, {j}) face {omit} stored as ({}, {face_index}), expected {expected:?}",
                            dim - 1
                        );
                        break 'closure;
                    }
                }
            }
            checks.push(ValidationCheck {
                name: "face_closure",
                dim: Some(dim),
                pass: ok,
                detail,
            });
        }

        let pass = checks.iter().all(|c| c.pass);
        ValidationReport { checks, pass }
    }
}

/// One line of a [`ValidationReport`].
#[derive(Clone, Debug)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub dim: Option<usize>,
    pub pass: bool,
    /// Empty when the check passes.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
    pub pass: bool,
}

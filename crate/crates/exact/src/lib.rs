//! Exact dense linear algebra over the rationals or a prime field:
//! matrices with explicit domain/codomain dimensions, Kronecker calculus in
//! a fixed row-major index order, subspaces with canonical bases, and exact
//! solvers. No floating point anywhere.

pub mod field;
pub mod matrix;
pub mod rref;
pub mod subspace;

pub use field::{format_scalar, parse_scalar, FieldSpec, Rational};
pub use matrix::LinearMap;
pub use rref::{rank, solve, solve_right_inverse, solve_with_certificate, RankCertificate};
pub use subspace::{cokernel_projection, Subspace};

#[derive(Debug, thiserror::Error)]
pub enum ExactError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("entry count {found} does not match {rows}x{cols}")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("characteristic must be 0 or a prime, got {0}")]
    BadCharacteristic(u64),
    #[error("non-canonical scalar '{0}': {1}")]
    NonCanonicalScalar(String, String),
    #[error("column {column} does not lie in the subspace")]
    NotInSubspace { column: usize },
}

/// The kernel of a linear map, as a subspace of its domain.
pub fn kernel_basis(f: &LinearMap) -> Subspace {
    Subspace::kernel_of(f)
}

/// `f ⊗ g` as a Kronecker product in the row-major basis order.
pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> Result<LinearMap, ExactError> {
    f.tensor(g)
}

/// Intersection of two subspaces of the same ambient space.
pub fn subspace_intersection(u: &Subspace, w: &Subspace) -> Result<Subspace, ExactError> {
    u.intersect(w)
}

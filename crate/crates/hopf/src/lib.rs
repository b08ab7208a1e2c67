//! Finite-dimensional bialgebras, comodules, Hopf trimodules, trimodule
//! algebras, and the lax module monads they induce, all over an exact field.
//! Every structure is a bundle of matrices; every law is checked as an exact
//! matrix identity.

pub mod bialgebra;
pub mod comodule;
pub mod dual;
pub mod fixtures;
pub mod monad;
pub mod report;
pub mod trimodule;
pub mod trimodule_algebra;
mod util;

pub use bialgebra::{
    convolution, convolution_unit, find_antipode, find_twisted_antipode, is_semisimple_algebra,
    monoid_bialgebra, op_cop, sweedler_h4, validate_bialgebra, AlgebraFD, BialgebraFD,
    CoalgebraFD, MonoidTable,
};
pub use comodule::{
    cofree_comodule, comodule_hom_space, cotensor, is_injective_comodule, right_coinvariants,
    simple_graded_comodule, tensor_comodules, validate_bicomodule, BicomoduleFD, ComoduleView,
    CotensorSpace, LeftComoduleFD, RightComoduleFD,
};
pub use report::{Check, Report};

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operands live over different base bialgebras")]
    BaseMismatch,
    #[error("not a monoid: {0}")]
    NotAMonoid(String),
    #[error("base bialgebra is not a monoid bialgebra")]
    NotPointed,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("corestriction failed: {0}")]
    Corestriction(String),
    #[error("descent failed: {0}")]
    Descent(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] exact_kernel::ExactError),
}

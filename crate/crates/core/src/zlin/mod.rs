//! Exact integer linear algebra and finitely generated abelian groups.

pub mod exact;
pub mod extension;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod snf;
pub mod sparse;

pub use exact::{kernel_cokernel_sequence, SixTermRecord, SixTermSequence};
pub use extension::{
    resolve_extension, resolve_filtration, split_criterion, Divisible, ExtensionResult,
    GroupValue, SplitCriterion,
};
pub use group::{group_from_presentation, AbelianGroup, Lattice, Presentation, Presented};
pub use hom::{hom_analyze, homology_at, AbelianHom, HomAnalysis, Subquotient};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use sparse::SparseMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZlinError {
    #[error("not in canonical form: {0}")]
    NotCanonical(String),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        what: &'static str,
    },
    #[error("matrix shape {found:?} does not match {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("map is not well defined: {0}")]
    IllDefined(String),
    #[error("maps are not composable")]
    NotComposable,
    #[error("maps do not form a complex")]
    NotAComplex,
    #[error("sequence is not exact: {0}")]
    NotExact(&'static str),
}

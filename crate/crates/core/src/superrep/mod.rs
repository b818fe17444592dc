//! Super vector spaces, their tensor powers, and the periplectic and
//! general linear superalgebras acting on them.

pub mod algebra;
pub mod complex;
pub mod invariants;
pub mod module;
pub mod space;
pub mod symmetrizer;

use thiserror::Error;

use crate::exactla::LinalgError;

pub use algebra::{derivation_extend, AlgebraKind, GeneratorOp, SuperAlgebra};
pub use complex::{AxiomReport, BlockOp, CxBlock, Family, GradedSubspace, Irreducibility, OddOperatorFamily, TwoSidedComplex};
pub use invariants::{insert_invariant, Insertion, Invariant, InvariantMode};
pub use module::{trace_image, young_symmetrizer_image, GradedSubmodule};
pub use space::{koszul_sign, Parity, SuperSpace, TensorAmbient, Weight};
pub use symmetrizer::YoungSymmetrizer;

#[derive(Debug, Error)]
pub enum SuperrepError {
    #[error("ambient dimension {dim} exceeds cap {cap}")]
    Cap { dim: usize, cap: usize },
    #[error("permutation of length {perm} applied to a word of length {word}")]
    LengthMismatch { perm: usize, word: usize },
    #[error("invalid slots ({a}, {b}) for tensor degree {degree}")]
    Slot { a: usize, b: usize, degree: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("operator {op} does not preserve the subspace at weight {weight:?}")]
    NotPreserved { op: String, weight: Weight },
    #[error("degree {degree}: highest weights account for dimension {got}, expected {expected}")]
    Decomposition { degree: usize, expected: u64, got: u64 },
    #[error("weight {0:?} has no partition label after the twist")]
    Label(Weight),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

//! Pieces shared by the periplectic and general linear labs.

use serde::Serialize;
use thiserror::Error;

use crate::exactla::LinalgError;
use crate::partitions::PartitionError;
use crate::superrep::module::GradedSubmodule;
use crate::superrep::{AxiomReport, SuperrepError};
use crate::symfunc::SymfuncError;

#[derive(Debug, Error)]
pub enum LabError {
    /// A parameter constraint of the construction is violated.
    #[error("{0}")]
    Precondition(String),
    /// A trace or evaluation map that must be nonzero vanished.
    #[error("convention check failed: {0}")]
    Convention(String),
    #[error(transparent)]
    Superrep(#[from] SuperrepError),
    #[error(transparent)]
    Symfunc(#[from] SymfuncError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl LabError {
    /// Whether the error is a refusal (bad parameters or resource limits)
    /// rather than a failed check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            LabError::Precondition(_) | LabError::Symfunc(_) | LabError::Superrep(SuperrepError::Cap { .. })
        )
    }
}

/// The three relations of a two-sided complex, as they appear in reports.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomSummary {
    pub sq_zero_phi: bool,
    pub sq_zero_phi_prime: bool,
    pub bracket: bool,
    pub bracket_commutator_form: bool,
    pub degree_shift: bool,
    pub failures: Vec<String>,
}

impl From<AxiomReport> for AxiomSummary {
    fn from(a: AxiomReport) -> Self {
        AxiomSummary {
            sq_zero_phi: a.sq_zero_phi,
            sq_zero_phi_prime: a.sq_zero_phi_prime,
            bracket: a.bracket,
            bracket_commutator_form: a.bracket_commutator_form,
            degree_shift: a.degree_shift,
            failures: a.failures,
        }
    }
}

impl AxiomSummary {
    pub fn passed(&self) -> bool {
        self.sq_zero_phi && self.sq_zero_phi_prime && self.bracket && self.degree_shift
    }
}

/// Per-degree dimensions of the pieces of a subquotient `k / (k ∩ i)`.
#[derive(Clone, Debug, Serialize)]
pub struct Bookkeeping {
    pub schur_dims: Vec<usize>,
    pub kernel_dims: Vec<usize>,
    pub trace_dims: Vec<usize>,
    pub meet_dims: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    /// Alternating sums of the quotient and of `k` minus `k ∩ i` agree.
    pub euler_ok: bool,
}

fn dims_upto(m: &GradedSubmodule, top: usize) -> Vec<usize> {
    let g = m.graded_dims();
    (0..=top).map(|h| g.get(&h).copied().unwrap_or(0)).collect()
}

impl Bookkeeping {
    pub fn new(
        schur: &GradedSubmodule,
        kernel: &GradedSubmodule,
        trace: &GradedSubmodule,
        meet: &GradedSubmodule,
        quotient_dims: &std::collections::BTreeMap<usize, usize>,
        top: usize,
    ) -> Self {
        let quotient_dims: Vec<usize> = (0..=top).map(|h| quotient_dims.get(&h).copied().unwrap_or(0)).collect();
        let kernel_dims = dims_upto(kernel, top);
        let meet_dims = dims_upto(meet, top);
        let alt = |v: &[i64]| v.iter().enumerate().map(|(i, x)| if i % 2 == 0 { *x } else { -x }).sum::<i64>();
        let q: Vec<i64> = quotient_dims.iter().map(|&x| x as i64).collect();
        let d: Vec<i64> = kernel_dims.iter().zip(&meet_dims).map(|(&k, &i)| k as i64 - i as i64).collect();
        Bookkeeping {
            schur_dims: dims_upto(schur, top),
            trace_dims: dims_upto(trace, top),
            euler_ok: alt(&q) == alt(&d),
            kernel_dims,
            meet_dims,
            quotient_dims,
        }
    }
}

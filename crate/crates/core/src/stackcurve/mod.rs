//! Curve-level pipelines: Picard groups and `H^r(X, G_m)` for tame stacky
//! curves given by combinatorial data.

pub mod beta;
pub mod crosscheck;
pub mod descriptor;
pub mod gerbe;
pub mod kummer;
pub mod nodal;
pub mod orbicurve;
pub mod value;

pub use beta::{h2_via_beta_factorization, h2_via_beta_with_transfers, BetaAudit, BetaResult, TransferAudit};
pub use crosscheck::{h2_abelian_crosscheck, order_law_holds, CrosscheckReport, CrosscheckStatus, OddDegreeComparison};
pub use descriptor::{
    validate_descriptor, validate_group, Coarse, CurveDescriptor, Diagnostic, DiagnosticKind, Gerbe, RawCoarse, RawDescriptor,
    RawGroup, RawPoint, StackyPoint,
};
pub use gerbe::{cohomology_cyclic_tower, cohomology_trivial_gerbe, quotient_term, trivial_gerbe_pieces, PieceAudit};
pub use kummer::{gerbe_root_decomposition, kummer_h2, RootDecomposition};
pub use nodal::{cohomology_twisted_nodal, nodal_coarse_picard, node_map};
pub use orbicurve::{cohomology_orbicurve, picard_orbicurve};
pub use value::{AuditEntry, CohomologyValue, PicardValue, Pipeline, UndeterminedReason, Value};

use crate::gcoh::GcohError;
use crate::zlin::ZlinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StackcurveError {
    #[error("invalid descriptor: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Diagnostic>),
    #[error("wrong pipeline: {0}")]
    WrongPipeline(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Group(#[from] GcohError),
    #[error(transparent)]
    Linear(#[from] ZlinError),
}

/// Dispatches `H^r(X, G_m)` to the pipeline matching the descriptor.
pub fn cohomology(desc: &CurveDescriptor, r: u32) -> Result<CohomologyValue, StackcurveError> {
    if matches!(desc.coarse, Coarse::NodalProjective { .. }) {
        return cohomology_twisted_nodal(desc, r);
    }
    if desc.generic_stabilizer.order() == 1 {
        return cohomology_orbicurve(desc, r);
    }
    match desc.gerbe {
        Gerbe::TrivialProduct => cohomology_trivial_gerbe(desc, r),
        Gerbe::CyclicTower => cohomology_cyclic_tower(desc, r),
        Gerbe::Explicit => {
            if r <= 1 {
                gerbe::low_degree(desc, r, Pipeline::MainTheorem)
            } else if r == 2 {
                let b = h2_via_beta_factorization(desc)?;
                Ok(b.value)
            } else {
                Ok(CohomologyValue::undetermined(
                    r,
                    Pipeline::BetaFactorization,
                    UndeterminedReason::Unsupported,
                    "explicit nonabelian gerbes are supported in degree 2 only",
                ))
            }
        }
    }
}

//! Cohomology of finite groups with trivial coefficients.

pub mod bar;
pub mod closed;
pub mod group;
pub mod maps;
pub mod module;
pub mod phi2;

use serde::{Deserialize, Serialize};

pub use bar::{bar_cohomology, oracle_budget, BarClasses, BarComplex, BUDGET_ENV, DEFAULT_ORACLE_BUDGET};
pub use closed::{
    abelian_cohomology, abelian_cohomology_z, check_tame, cyclic_cohomology, cyclic_cohomology_z,
    divisible_cohomology, hom_to_units, PeriodicComplex,
};
pub use group::{FiniteGroup, GroupKind, Subgroup};
pub use maps::{restriction_map, transfer_map, CohomologyMap};
pub use module::ModuleDescriptor;
pub use phi2::{phi2_vanishing_check, random_complex, CochainComplexSpec, Phi2Report};

use crate::zlin::{GroupValue, ZlinError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GcohError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("wild: characteristic {characteristic} divides order {order}")]
    Wild { order: u64, characteristic: u64 },
    #[error("oracle budget exceeded: size {size} > budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("oracle inconsistency: {0}")]
    OracleInconsistent(String),
    #[error(transparent)]
    Linear(#[from] ZlinError),
}

/// Which code path produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    PeriodicResolution,
    BarOracle,
    FallbackLaw,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::PeriodicResolution => "periodic_resolution",
            Provenance::BarOracle => "bar_oracle",
            Provenance::FallbackLaw => "fallback_law",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub provenance: Provenance,
}

/// `H^r(G, M)` by the cheapest applicable method.
pub fn group_cohomology(
    g: &FiniteGroup,
    coeff: &ModuleDescriptor,
    r: u32,
) -> Result<Tagged<GroupValue>, GcohError> {
    if let GroupKind::Cyclic(d) = g.kind() {
        return Ok(Tagged {
            value: cyclic_cohomology(*d, coeff, r)?,
            provenance: Provenance::ClosedForm,
        });
    }
    if coeff.is_divisible() {
        check_tame(g, coeff.characteristic())?;
    }
    if r == 0 {
        return Ok(Tagged {
            value: coeff.value(),
            provenance: Provenance::ClosedForm,
        });
    }
    let (z_degree, fg) = match coeff {
        ModuleDescriptor::FinitelyGenerated { group } => (r, group.clone()),
        _ => (r + 1, crate::zlin::AbelianGroup::free(1)),
    };
    let k = coeff.shift_multiplicity().unwrap_or(1);
    if let Some(f) = g.abelian_invariants() {
        return Ok(Tagged {
            value: abelian_cohomology(&f, &fg, z_degree).power(k).into(),
            provenance: Provenance::PeriodicResolution,
        });
    }
    Ok(Tagged {
        value: bar_cohomology(g, &fg, z_degree)?.power(k).into(),
        provenance: Provenance::BarOracle,
    })
}

/// `H^r(G, M)` computed by the bar oracle whatever the group.
pub fn oracle_cohomology(g: &FiniteGroup, coeff: &ModuleDescriptor, r: u32) -> Result<GroupValue, GcohError> {
    if coeff.is_divisible() {
        check_tame(g, coeff.characteristic())?;
    }
    match coeff {
        ModuleDescriptor::FinitelyGenerated { group } => Ok(bar_cohomology(g, group, r)?.into()),
        _ if r == 0 => Ok(coeff.value()),
        _ => {
            let k = coeff.shift_multiplicity().unwrap_or(1);
            Ok(bar_cohomology(g, &crate::zlin::AbelianGroup::free(1), r + 1)?.power(k).into())
        }
    }
}

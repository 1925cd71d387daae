//! Result types for the curve pipelines.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::zlin::{AbelianGroup, Divisible, ExtensionResult, GroupValue};

/// Which pipeline produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pipeline {
    Orbicurve,
    TwistedNodal,
    TrivialGerbe,
    CyclicTower,
    BetaFactorization,
    /// Low degrees from the general assembly sequence.
    MainTheorem,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::Orbicurve => "orbicurve",
            Pipeline::TwistedNodal => "twisted_nodal",
            Pipeline::TrivialGerbe => "trivial_gerbe",
            Pipeline::CyclicTower => "cyclic_tower",
            Pipeline::BetaFactorization => "beta_factorization",
            Pipeline::MainTheorem => "main_theorem",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UndeterminedReason {
    /// The input is outside what the pipelines cover.
    Unsupported,
    /// The group is only known up to an extension problem.
    ExtensionOpen,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Value {
    Exact { group: AbelianGroup },
    WithSymbolic { value: GroupValue },
    Filtration { extension: ExtensionResult },
    Undetermined { reason: UndeterminedReason, detail: String },
}

/// A labelled intermediate group, kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyValue {
    pub degree: u32,
    pub value: Value,
    pub pipeline: Pipeline,
    pub audit: Vec<AuditEntry>,
    pub notes: Vec<String>,
}

impl CohomologyValue {
    pub fn new(degree: u32, pipeline: Pipeline, value: GroupValue) -> Self {
        let value = if value.divisible.is_empty() {
            Value::Exact { group: value.group }
        } else {
            Value::WithSymbolic { value }
        };
        CohomologyValue {
            degree,
            value,
            pipeline,
            audit: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn exact(degree: u32, pipeline: Pipeline, group: AbelianGroup) -> Self {
        Self::new(degree, pipeline, GroupValue::exact(group))
    }

    pub fn filtration(degree: u32, pipeline: Pipeline, extension: ExtensionResult) -> Self {
        CohomologyValue {
            degree,
            value: Value::Filtration { extension },
            pipeline,
            audit: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn undetermined(degree: u32, pipeline: Pipeline, reason: UndeterminedReason, detail: &str) -> Self {
        CohomologyValue {
            degree,
            value: Value::Undetermined {
                reason,
                detail: detail.into(),
            },
            pipeline,
            audit: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_audit(mut self, label: &str, value: impl fmt::Display) -> Self {
        self.audit.push(AuditEntry {
            label: label.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The group itself when it is known up to isomorphism.
    pub fn group_value(&self) -> Option<GroupValue> {
        match &self.value {
            Value::Exact { group } => Some(GroupValue::exact(group.clone())),
            Value::WithSymbolic { value } => Some(value.clone()),
            Value::Filtration { extension } => extension.group.clone().filter(|_| extension.resolved),
            Value::Undetermined { .. } => None,
        }
    }

    pub fn exact_group(&self) -> Option<AbelianGroup> {
        self.group_value().and_then(|v| v.as_exact().cloned())
    }

    pub fn is_resolved(&self) -> bool {
        self.group_value().is_some()
    }

    pub fn order(&self) -> Option<BigInt> {
        match &self.value {
            Value::Exact { group } => group.order(),
            Value::WithSymbolic { .. } | Value::Undetermined { .. } => None,
            Value::Filtration { extension } => extension.order.clone(),
        }
    }

    pub fn extension(&self) -> Option<&ExtensionResult> {
        match &self.value {
            Value::Filtration { extension } => Some(extension),
            _ => None,
        }
    }

    /// Filtration pieces from the bottom up, or the value as a single piece.
    pub fn pieces(&self) -> Vec<GroupValue> {
        match &self.value {
            Value::Filtration { extension } => extension.filtration.clone(),
            _ => self.group_value().into_iter().collect(),
        }
    }

    /// Whether two values agree as groups, or as filtrations when unresolved.
    pub fn same_as(&self, other: &CohomologyValue) -> bool {
        match (self.group_value(), other.group_value()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => self.pieces() == other.pieces() && self.extension().is_some(),
            _ => false,
        }
    }
}

impl fmt::Display for CohomologyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.group_value() {
            return write!(f, "{v}");
        }
        match &self.value {
            Value::Filtration { extension } => {
                let parts: Vec<String> = extension.filtration.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(" | "))
            }
            Value::Undetermined { detail, .. } => write!(f, "? ({detail})"),
            _ => unreachable!("resolved values are handled above"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardValue {
    pub divisible_part: Option<Divisible>,
    pub discrete_part: AbelianGroup,
    /// Discrete part of `Pic(C)`.
    pub coarse_discrete: AbelianGroup,
    /// Discrete `Pic(Y)` modulo the coarse classes.
    pub quotient: AbelianGroup,
    pub provenance: String,
}

impl PicardValue {
    pub fn value(&self) -> GroupValue {
        GroupValue::new(self.discrete_part.clone(), self.divisible_part.iter().cloned().collect())
    }

    pub fn coarse_value(&self) -> GroupValue {
        GroupValue::new(self.coarse_discrete.clone(), self.divisible_part.iter().cloned().collect())
    }
}

impl fmt::Display for PicardValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::resolve_filtration;

    #[test]
    fn symbolic_values_are_not_exact() {
        let v = CohomologyValue::new(0, Pipeline::Orbicurve, GroupValue::divisible(Divisible::Units));
        assert!(matches!(v.value, Value::WithSymbolic { .. }));
        assert_eq!(v.to_string(), "k*");
        assert_eq!(v.exact_group(), None);
    }

    #[test]
    fn unresolved_filtration_renders_pieces() {
        let z2 = GroupValue::exact(AbelianGroup::cyclic(2));
        let e = resolve_filtration(&[z2.clone(), z2]);
        let v = CohomologyValue::filtration(1, Pipeline::CyclicTower, e);
        assert!(!v.is_resolved());
        assert_eq!(v.to_string(), "[Z/2 | Z/2]");
        assert_eq!(v.order(), Some(BigInt::from(4)));
    }
}

//! One output row per degree.

use serde::Serialize;

use crate::stackcurve::{AuditEntry, CohomologyValue};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub degree: u32,
    /// Canonical group string when resolved, else `[A | B | ...]`.
    pub value: String,
    /// Filtration pieces from the bottom up; a single entry when resolved.
    pub pieces: Vec<String>,
    pub provenance: String,
    pub resolved: bool,
    /// Decimal order when finite and known.
    pub order: Option<String>,
    pub audit: Vec<AuditEntry>,
    pub notes: Vec<String>,
}

impl From<&CohomologyValue> for ResultRecord {
    fn from(v: &CohomologyValue) -> Self {
        ResultRecord {
            degree: v.degree,
            value: v.to_string(),
            pieces: v.pieces().iter().map(ToString::to_string).collect(),
            provenance: v.pipeline.to_string(),
            resolved: v.is_resolved(),
            order: v.order().map(|o| o.to_string()),
            audit: v.audit.clone(),
            notes: v.notes.clone(),
        }
    }
}

/// Pretty JSON with a trailing newline; key order is fixed by the types.
pub fn to_stable_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_group;
    use crate::stackcurve::Pipeline;
    use crate::zlin::AbelianGroup;

    #[test]
    fn exact_record_round_trips() {
        let g = AbelianGroup::from_u64_orders(1, &[2, 6]);
        let r = ResultRecord::from(&CohomologyValue::exact(3, Pipeline::Orbicurve, g.clone()));
        assert_eq!(r.value, "Z^1 + Z/2 + Z/6");
        assert_eq!(parse_group(&r.value).unwrap(), g);
        assert!(r.resolved);
        assert_eq!(r.order, None);
        assert_eq!(r.provenance, "orbicurve");
    }

    #[test]
    fn json_is_stable() {
        let v = CohomologyValue::exact(2, Pipeline::TrivialGerbe, AbelianGroup::cyclic(4)).with_note("n");
        let a = to_stable_json(&ResultRecord::from(&v));
        assert_eq!(a, to_stable_json(&ResultRecord::from(&v.clone())));
        assert!(a.contains("\"order\": \"4\""));
    }
}

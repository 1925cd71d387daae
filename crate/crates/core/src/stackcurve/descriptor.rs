//! Raw and validated curve descriptors.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::gcoh::{FiniteGroup, GroupKind};

/// Finite group data as written in a descriptor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RawGroup {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
}

impl RawGroup {
    pub fn trivial() -> Self {
        RawGroup {
            kind: "trivial".into(),
            ..Default::default()
        }
    }

    pub fn cyclic(order: u64) -> Self {
        RawGroup {
            kind: "cyclic".into(),
            order: Some(order),
            ..Default::default()
        }
    }

    pub fn abelian(factors: &[u64]) -> Self {
        RawGroup {
            kind: "abelian".into(),
            factors: Some(factors.to_vec()),
            ..Default::default()
        }
    }

    pub fn dihedral(order: u64) -> Self {
        RawGroup {
            kind: "dihedral".into(),
            order: Some(order),
            ..Default::default()
        }
    }

    pub fn table(table: Vec<Vec<usize>>, identity: usize) -> Self {
        RawGroup {
            kind: "table".into(),
            table: Some(table),
            identity: Some(identity),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RawCoarse {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genera: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawPoint {
    pub label: String,
    pub index: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizer: Option<RawGroup>,
    /// Images of the elements of the generic stabilizer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub node: bool,
}

impl RawPoint {
    pub fn new(label: &str, index: u64) -> Self {
        RawPoint {
            label: label.into(),
            index,
            stabilizer: None,
            embedding: None,
            node: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawDescriptor {
    pub characteristic: u64,
    pub coarse: RawCoarse,
    pub generic_stabilizer: RawGroup,
    pub stacky_points: Vec<RawPoint>,
    pub gerbe: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    Schema,
    Wild,
    IndexTooSmall,
    DuplicateLabel,
    NotCyclicTower,
    BadEmbedding,
    BadGroup,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            kind,
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coarse {
    Projective { genus: u32 },
    AffineLine,
    /// Normalization genera, one per component, and the total number of nodes.
    NodalProjective { genera: Vec<u32>, node_count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gerbe {
    TrivialProduct,
    CyclicTower,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackyPoint {
    pub label: String,
    pub index: u64,
    /// `None` when a product stabilizer is too large to tabulate.
    pub stabilizer: Option<FiniteGroup>,
    /// `embedding[a]` is the image of element `a` of the generic stabilizer.
    pub embedding: Vec<usize>,
    pub node: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveDescriptor {
    pub characteristic: u64,
    pub coarse: Coarse,
    pub generic_stabilizer: FiniteGroup,
    pub points: Vec<StackyPoint>,
    pub gerbe: Gerbe,
}

impl CurveDescriptor {
    pub fn indices(&self) -> Vec<u64> {
        self.points.iter().map(|p| p.index).collect()
    }

    /// Genus of a smooth coarse curve, `None` for the affine line.
    pub fn genus(&self) -> Option<u32> {
        match &self.coarse {
            Coarse::Projective { genus } => Some(*genus),
            _ => None,
        }
    }

    pub fn is_nodal(&self) -> bool {
        matches!(self.coarse, Coarse::NodalProjective { .. })
    }

    /// The same curve with trivial generic stabilizer.
    pub fn rigidified(&self) -> CurveDescriptor {
        CurveDescriptor {
            characteristic: self.characteristic,
            coarse: self.coarse.clone(),
            generic_stabilizer: FiniteGroup::trivial(),
            points: self
                .points
                .iter()
                .map(|p| StackyPoint {
                    label: p.label.clone(),
                    index: p.index,
                    stabilizer: FiniteGroup::cyclic(p.index).ok(),
                    embedding: vec![0],
                    node: p.node,
                })
                .collect(),
            gerbe: Gerbe::TrivialProduct,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|&k| k <= p / k).all(|k| p % k != 0)
}

/// For a prime `p`, tameness of a product follows from tameness of the factors.
fn is_tame(p: u64, n: u64) -> bool {
    p == 0 || n % p != 0
}

/// Largest order accepted for cyclic and abelian groups.
pub const MAX_ORDER: u64 = 1 << 16;
/// Largest order accepted for groups stored as multiplication tables.
pub const MAX_TABLE_ORDER: u64 = 256;

pub(crate) fn build_group(raw: &RawGroup, path: &str, out: &mut Vec<Diagnostic>) -> Option<FiniteGroup> {
    let bad = |out: &mut Vec<Diagnostic>, m: String| {
        out.push(Diagnostic::new(DiagnosticKind::BadGroup, path, m));
        None
    };
    let need_order = |out: &mut Vec<Diagnostic>| {
        if raw.order.is_none() {
            out.push(Diagnostic::new(DiagnosticKind::Schema, path, format!("kind {} needs order", raw.kind)));
        }
        raw.order
    };
    let res = match raw.kind.as_str() {
        "trivial" => Ok(FiniteGroup::trivial()),
        "cyclic" => {
            let n = need_order(out)?;
            if n > MAX_ORDER {
                return bad(out, format!("order {n} exceeds {MAX_ORDER}"));
            }
            FiniteGroup::cyclic(n)
        }
        "dihedral" => {
            let n = need_order(out)?;
            if n < 2 || n % 2 != 0 {
                return bad(out, format!("dihedral order {n} must be even and at least 2"));
            }
            if n > MAX_TABLE_ORDER {
                return bad(out, format!("order {n} exceeds {MAX_TABLE_ORDER}"));
            }
            FiniteGroup::dihedral((n / 2) as usize)
        }
        "abelian" => match &raw.factors {
            Some(f) => {
                let prod = f.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x).filter(|&p| p <= MAX_ORDER));
                if prod.is_none() {
                    return bad(out, format!("order exceeds {MAX_ORDER}"));
                }
                FiniteGroup::abelian_from_orders(f)
            }
            None => {
                out.push(Diagnostic::new(DiagnosticKind::Schema, path, "kind abelian needs factors"));
                return None;
            }
        },
        "table" => match &raw.table {
            Some(t) if t.len() as u64 > MAX_TABLE_ORDER => {
                return bad(out, format!("table order {} exceeds {MAX_TABLE_ORDER}", t.len()));
            }
            Some(t) => FiniteGroup::from_table(t.clone(), raw.identity.unwrap_or(0)),
            None => {
                out.push(Diagnostic::new(DiagnosticKind::Schema, path, "kind table needs table"));
                return None;
            }
        },
        other => {
            out.push(Diagnostic::new(
                DiagnosticKind::Schema,
                path,
                format!("unknown group kind {other:?}"),
            ));
            return None;
        }
    };
    match res {
        Ok(g) => Some(g),
        Err(e) => bad(out, e.to_string()),
    }
}

fn build_coarse(raw: &RawCoarse, out: &mut Vec<Diagnostic>) -> Option<Coarse> {
    let path = "coarse";
    match raw.kind.as_str() {
        "projective" => match raw.genus {
            Some(genus) => Some(Coarse::Projective { genus }),
            None => {
                out.push(Diagnostic::new(DiagnosticKind::Schema, path, "projective coarse needs genus"));
                None
            }
        },
        "affine_line" => Some(Coarse::AffineLine),
        "nodal_projective" => {
            let genera = raw.genera.clone().or(raw.genus.map(|g| vec![g]));
            match (genera, raw.node_count) {
                (Some(genera), Some(node_count)) if !genera.is_empty() => {
                    if node_count + 1 < genera.len() {
                        out.push(Diagnostic::new(
                            DiagnosticKind::Inconsistent,
                            path,
                            format!("{} components need at least {} nodes to be connected", genera.len(), genera.len() - 1),
                        ));
                        return None;
                    }
                    Some(Coarse::NodalProjective { genera, node_count })
                }
                _ => {
                    out.push(Diagnostic::new(
                        DiagnosticKind::Schema,
                        path,
                        "nodal_projective coarse needs genera and node_count",
                    ));
                    None
                }
            }
        }
        other => {
            out.push(Diagnostic::new(DiagnosticKind::Schema, path, format!("unknown coarse kind {other:?}")));
            None
        }
    }
}

fn build_gerbe(kind: &str, out: &mut Vec<Diagnostic>) -> Option<Gerbe> {
    match kind {
        "trivial_product" => Some(Gerbe::TrivialProduct),
        "cyclic_tower" => Some(Gerbe::CyclicTower),
        "explicit" | "explicit_nonabelian" => Some(Gerbe::Explicit),
        other => {
            out.push(Diagnostic::new(DiagnosticKind::Schema, "gerbe", format!("unknown gerbe kind {other:?}")));
            None
        }
    }
}

fn check_embedding(g0: &FiniteGroup, s: &FiniteGroup, emb: &[usize], index: u64, path: &str, out: &mut Vec<Diagnostic>) {
    let mut fail = |m: String| out.push(Diagnostic::new(DiagnosticKind::BadEmbedding, path, m));
    if emb.len() != g0.order() {
        fail(format!("embedding has {} entries for a group of order {}", emb.len(), g0.order()));
        return;
    }
    if let Some(x) = emb.iter().find(|&&x| x >= s.order()) {
        fail(format!("embedding image {x} is not an element of the stabilizer"));
        return;
    }
    let distinct: BTreeSet<usize> = emb.iter().copied().collect();
    if distinct.len() != emb.len() {
        fail("embedding is not injective".into());
        return;
    }
    for a in g0.elements() {
        for b in g0.elements() {
            if emb[g0.mul(a, b)] != s.mul(emb[a], emb[b]) {
                fail(format!("embedding is not a homomorphism at ({a}, {b})"));
                return;
            }
        }
    }
    if s.order() as u64 != g0.order() as u64 * index {
        fail(format!(
            "stabilizer order {} is not {} times the generic order {}",
            s.order(),
            index,
            g0.order()
        ));
    }
}

/// Powers of an element of order `n` in a cyclic group.
fn cyclic_power_embedding(s: &FiniteGroup, n: usize) -> Option<Vec<usize>> {
    if let GroupKind::Cyclic(m) = s.kind() {
        let step = *m as usize / n;
        return Some((0..n).map(|k| k * step).collect());
    }
    let g = s.elements().find(|&a| s.element_order(a) == n)?;
    Some((0..n).map(|k| s.pow(g, k)).collect())
}

fn build_point(
    raw: &RawPoint,
    i: usize,
    g0: &FiniteGroup,
    gerbe: Gerbe,
    out: &mut Vec<Diagnostic>,
) -> Option<StackyPoint> {
    let path = format!("stacky_points[{i}]");
    let n = g0.order();
    let total = (n as u64).checked_mul(raw.index).filter(|&t| t <= MAX_ORDER);
    let Some(total) = total else {
        out.push(Diagnostic::new(
            DiagnosticKind::BadGroup,
            &path,
            format!("stabilizer order exceeds {MAX_ORDER}"),
        ));
        return None;
    };
    let given = match &raw.stabilizer {
        Some(s) => Some(build_group(s, &format!("{path}.stabilizer"), out)?),
        None => None,
    };
    if let Some(g) = &given {
        if g.order() as u64 != total {
            out.push(Diagnostic::new(
                DiagnosticKind::BadEmbedding,
                &path,
                format!(
                    "stabilizer order {} is not {} times the generic order {}",
                    g.order(),
                    raw.index,
                    n
                ),
            ));
            return None;
        }
    }
    let supplied = given.is_some() || raw.embedding.is_some();
    let (stabilizer, embedding) = match gerbe {
        Gerbe::TrivialProduct => {
            if given.is_some() || raw.embedding.is_some() {
                out.push(Diagnostic::new(
                    DiagnosticKind::Inconsistent,
                    &path,
                    "a trivial product fixes the stabilizer; omit stabilizer and embedding",
                ));
                return None;
            }
            if total <= MAX_TABLE_ORDER {
                let s = g0.direct_product(&FiniteGroup::cyclic(raw.index).ok()?);
                (Some(s), (0..n).collect())
            } else {
                (None, Vec::new())
            }
        }
        Gerbe::CyclicTower => {
            let s = match given {
                Some(g) => g,
                None => FiniteGroup::cyclic(total).ok()?,
            };
            if !s.is_cyclic() {
                out.push(Diagnostic::new(
                    DiagnosticKind::NotCyclicTower,
                    &path,
                    format!("stabilizer must be cyclic of order {total}"),
                ));
                return None;
            }
            let emb = match &raw.embedding {
                Some(e) => e.clone(),
                None => cyclic_power_embedding(&s, n)?,
            };
            (Some(s), emb)
        }
        Gerbe::Explicit => {
            let Some(s) = given else {
                out.push(Diagnostic::new(DiagnosticKind::Schema, &path, "explicit gerbe needs a stabilizer"));
                return None;
            };
            let emb = match &raw.embedding {
                Some(e) => e.clone(),
                None if n == 1 => vec![s.identity()],
                None => {
                    out.push(Diagnostic::new(DiagnosticKind::Schema, &path, "explicit gerbe needs an embedding"));
                    return None;
                }
            };
            (Some(s), emb)
        }
    };
    if supplied {
        let epath = format!("{path}.embedding");
        if n as u64 > MAX_TABLE_ORDER {
            out.push(Diagnostic::new(
                DiagnosticKind::BadEmbedding,
                epath,
                format!("generic stabilizer of order {n} is too large to verify an embedding"),
            ));
            return None;
        }
        let before = out.len();
        check_embedding(g0, stabilizer.as_ref().expect("supplied"), &embedding, raw.index, &epath, out);
        if out.len() > before {
            return None;
        }
    }
    Some(StackyPoint {
        label: raw.label.clone(),
        index: raw.index,
        stabilizer,
        embedding,
        node: raw.node,
    })
}

/// Builds a single group under the same size limits as descriptors.
pub fn validate_group(raw: &RawGroup) -> Result<FiniteGroup, Vec<Diagnostic>> {
    let mut out = Vec::new();
    match build_group(raw, "group", &mut out) {
        Some(g) if out.is_empty() => Ok(g),
        _ => Err(out),
    }
}

/// Checks every invariant of a raw descriptor, collecting all problems.
pub fn validate_descriptor(raw: &RawDescriptor) -> Result<CurveDescriptor, Vec<Diagnostic>> {
    let mut out = Vec::new();
    let p = raw.characteristic;
    if p == 1 || p > u32::MAX as u64 || (p > 1 && !is_prime(p)) {
        out.push(Diagnostic::new(
            DiagnosticKind::Schema,
            "characteristic",
            format!("characteristic {p} is neither 0 nor a prime below 2^32"),
        ));
    }
    let coarse = build_coarse(&raw.coarse, &mut out);
    let gerbe = build_gerbe(&raw.gerbe, &mut out);
    let g0 = build_group(&raw.generic_stabilizer, "generic_stabilizer", &mut out);

    let mut seen = BTreeSet::new();
    for (i, pt) in raw.stacky_points.iter().enumerate() {
        if !seen.insert(pt.label.as_str()) {
            out.push(Diagnostic::new(
                DiagnosticKind::DuplicateLabel,
                format!("stacky_points[{i}].label"),
                format!("label {:?} appears twice", pt.label),
            ));
        }
        if !is_tame(p, pt.index) {
            out.push(Diagnostic::new(
                DiagnosticKind::Wild,
                format!("stacky_points[{i}].index"),
                format!("characteristic {p} divides index {}", pt.index),
            ));
        }
        if pt.node && !matches!(coarse, Some(Coarse::NodalProjective { .. })) {
            out.push(Diagnostic::new(
                DiagnosticKind::Inconsistent,
                format!("stacky_points[{i}].node"),
                "nodes need a nodal coarse curve",
            ));
        }
    }
    if let Some(Coarse::NodalProjective { node_count, .. }) = &coarse {
        let nodes = raw.stacky_points.iter().filter(|p| p.node).count();
        if nodes > *node_count {
            out.push(Diagnostic::new(
                DiagnosticKind::Inconsistent,
                "stacky_points",
                format!("{nodes} stacky nodes but only {node_count} nodes"),
            ));
        }
    }
    if let Some(g) = &g0 {
        if !is_tame(p, g.order() as u64) {
            out.push(Diagnostic::new(
                DiagnosticKind::Wild,
                "generic_stabilizer",
                format!("characteristic {p} divides order {}", g.order()),
            ));
        }
        if gerbe == Some(Gerbe::CyclicTower) && !g.is_cyclic() {
            out.push(Diagnostic::new(
                DiagnosticKind::NotCyclicTower,
                "generic_stabilizer",
                "cyclic tower needs a cyclic generic stabilizer",
            ));
        }
    }

    let mut points = Vec::new();
    if let (Some(g0), Some(gerbe)) = (&g0, gerbe) {
        if gerbe != Gerbe::CyclicTower || g0.is_cyclic() {
            for (i, pt) in raw.stacky_points.iter().enumerate() {
                if pt.index < 2 {
                    out.push(Diagnostic::new(
                        DiagnosticKind::IndexTooSmall,
                        format!("stacky_points[{i}].index"),
                        format!("index {} of point {:?} is below 2", pt.index, pt.label),
                    ));
                    continue;
                }
                if let Some(sp) = build_point(pt, i, g0, gerbe, &mut out) {
                    points.push(sp);
                }
            }
        }
    } else {
        for (i, pt) in raw.stacky_points.iter().enumerate() {
            if pt.index < 2 {
                out.push(Diagnostic::new(
                    DiagnosticKind::IndexTooSmall,
                    format!("stacky_points[{i}].index"),
                    format!("index {} of point {:?} is below 2", pt.index, pt.label),
                ));
            }
        }
    }

    out.dedup();
    if !out.is_empty() {
        return Err(out);
    }
    Ok(CurveDescriptor {
        characteristic: p,
        coarse: coarse.expect("no diagnostics"),
        generic_stabilizer: g0.expect("no diagnostics"),
        points,
        gerbe: gerbe.expect("no diagnostics"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(p: u64, genus: u32, g0: RawGroup, pts: &[u64], gerbe: &str) -> RawDescriptor {
        RawDescriptor {
            characteristic: p,
            coarse: RawCoarse {
                kind: "projective".into(),
                genus: Some(genus),
                ..Default::default()
            },
            generic_stabilizer: g0,
            stacky_points: pts
                .iter()
                .enumerate()
                .map(|(i, &d)| RawPoint::new(&format!("p{i}"), d))
                .collect(),
            gerbe: gerbe.into(),
        }
    }

    fn kinds(e: &[Diagnostic]) -> Vec<DiagnosticKind> {
        e.iter().map(|d| d.kind).collect()
    }

    #[test]
    fn wild_point_is_rejected() {
        let e = validate_descriptor(&raw(2, 0, RawGroup::trivial(), &[2], "trivial_product")).unwrap_err();
        assert!(kinds(&e).contains(&DiagnosticKind::Wild));
    }

    #[test]
    fn genus_one_with_two_points_is_valid() {
        let d = validate_descriptor(&raw(0, 1, RawGroup::trivial(), &[2, 3], "trivial_product")).unwrap();
        assert_eq!(d.indices(), vec![2, 3]);
        assert_eq!(d.genus(), Some(1));
    }

    #[test]
    fn index_one_is_rejected() {
        let e = validate_descriptor(&raw(0, 0, RawGroup::trivial(), &[1], "trivial_product")).unwrap_err();
        assert_eq!(kinds(&e), vec![DiagnosticKind::IndexTooSmall]);
    }

    #[test]
    fn duplicate_labels_and_wildness_are_both_reported() {
        let mut r = raw(3, 0, RawGroup::trivial(), &[3, 2], "trivial_product");
        r.stacky_points[1].label = "p0".into();
        let e = validate_descriptor(&r).unwrap_err();
        let k = kinds(&e);
        assert!(k.contains(&DiagnosticKind::DuplicateLabel));
        assert!(k.contains(&DiagnosticKind::Wild));
    }

    #[test]
    fn tower_needs_cyclic_generic_stabilizer() {
        let e = validate_descriptor(&raw(0, 0, RawGroup::abelian(&[2, 2]), &[2], "cyclic_tower")).unwrap_err();
        assert!(kinds(&e).contains(&DiagnosticKind::NotCyclicTower));
    }

    #[test]
    fn tower_rejects_noncyclic_stabilizer() {
        let mut r = raw(0, 0, RawGroup::cyclic(2), &[2], "cyclic_tower");
        r.stacky_points[0].stabilizer = Some(RawGroup::abelian(&[2, 2]));
        let e = validate_descriptor(&r).unwrap_err();
        assert_eq!(kinds(&e), vec![DiagnosticKind::NotCyclicTower]);
    }

    #[test]
    fn tower_embeds_unique_subgroup() {
        let d = validate_descriptor(&raw(0, 0, RawGroup::cyclic(3), &[3], "cyclic_tower")).unwrap();
        let p = &d.points[0];
        let s = p.stabilizer.as_ref().unwrap();
        assert_eq!(s.order(), 9);
        assert!(p.embedding.iter().all(|&x| s.element_order(x) <= 3));
    }

    #[test]
    fn dihedral_embedding_is_checked() {
        let mut r = raw(0, 0, RawGroup::cyclic(3), &[2], "explicit");
        r.stacky_points[0].stabilizer = Some(RawGroup::dihedral(6));
        r.stacky_points[0].embedding = Some(vec![0, 1, 2]);
        assert!(validate_descriptor(&r).is_ok());
        r.stacky_points[0].embedding = Some(vec![0, 2, 1]);
        assert!(validate_descriptor(&r).is_ok());
        r.stacky_points[0].embedding = Some(vec![0, 3, 1]);
        let e = validate_descriptor(&r).unwrap_err();
        assert_eq!(kinds(&e), vec![DiagnosticKind::BadEmbedding]);
    }

    #[test]
    fn explicit_index_must_match_orders() {
        let mut r = raw(0, 0, RawGroup::cyclic(3), &[3], "explicit");
        r.stacky_points[0].stabilizer = Some(RawGroup::dihedral(6));
        r.stacky_points[0].embedding = Some(vec![0, 1, 2]);
        let e = validate_descriptor(&r).unwrap_err();
        assert_eq!(kinds(&e), vec![DiagnosticKind::BadEmbedding]);
    }
}

//! Descriptor files in JSON syntax.
//!
//! The document is walked by hand so that every schema problem is reported
//! with its path, not just the first one serde would stop at.

use serde_json::{Map, Value};

use crate::stackcurve::{
    validate_descriptor, CurveDescriptor, Diagnostic, DiagnosticKind, RawCoarse, RawDescriptor, RawGroup, RawPoint,
};

struct Walker {
    out: Vec<Diagnostic>,
}

impl Walker {
    fn schema(&mut self, path: &str, msg: impl Into<String>) {
        self.out.push(Diagnostic::new(DiagnosticKind::Schema, path, msg));
    }

    fn object<'a>(&mut self, v: &'a Value, path: &str, allowed: &[&str]) -> Option<&'a Map<String, Value>> {
        let Some(m) = v.as_object() else {
            self.schema(path, "expected an object");
            return None;
        };
        for k in m.keys() {
            if !allowed.contains(&k.as_str()) {
                self.schema(&join(path, k), "unknown key");
            }
        }
        Some(m)
    }

    fn required<'a>(&mut self, m: &'a Map<String, Value>, path: &str, key: &str) -> Option<&'a Value> {
        let v = m.get(key);
        if v.is_none() {
            self.schema(&join(path, key), "missing");
        }
        v
    }

    fn uint(&mut self, v: &Value, path: &str) -> Option<u64> {
        match v.as_u64() {
            Some(n) => Some(n),
            None => {
                self.schema(path, format!("expected a non-negative integer, got {}", short(v)));
                None
            }
        }
    }

    fn usize(&mut self, v: &Value, path: &str) -> Option<usize> {
        let n = self.uint(v, path)?;
        match usize::try_from(n) {
            Ok(n) => Some(n),
            Err(_) => {
                self.schema(path, "integer out of range");
                None
            }
        }
    }

    fn u32(&mut self, v: &Value, path: &str) -> Option<u32> {
        let n = self.uint(v, path)?;
        match u32::try_from(n) {
            Ok(n) => Some(n),
            Err(_) => {
                self.schema(path, "integer out of range");
                None
            }
        }
    }

    fn string(&mut self, v: &Value, path: &str) -> Option<String> {
        match v.as_str() {
            Some(s) => Some(s.to_string()),
            None => {
                self.schema(path, format!("expected a string, got {}", short(v)));
                None
            }
        }
    }

    fn array<'a>(&mut self, v: &'a Value, path: &str) -> Option<&'a Vec<Value>> {
        match v.as_array() {
            Some(a) => Some(a),
            None => {
                self.schema(path, format!("expected an array, got {}", short(v)));
                None
            }
        }
    }

    fn list<T>(&mut self, v: &Value, path: &str, f: impl Fn(&mut Self, &Value, &str) -> Option<T>) -> Option<Vec<T>> {
        let a = self.array(v, path)?;
        let mut res = Vec::with_capacity(a.len());
        let mut ok = true;
        for (i, x) in a.iter().enumerate() {
            match f(self, x, &format!("{path}[{i}]")) {
                Some(y) => res.push(y),
                None => ok = false,
            }
        }
        ok.then_some(res)
    }

    fn optional<T>(
        &mut self,
        m: &Map<String, Value>,
        path: &str,
        key: &str,
        f: impl Fn(&mut Self, &Value, &str) -> Option<T>,
    ) -> Option<T> {
        m.get(key).filter(|v| !v.is_null()).and_then(|v| f(self, v, &join(path, key)))
    }

    fn group(&mut self, v: &Value, path: &str) -> Option<RawGroup> {
        let m = self.object(v, path, &["kind", "order", "factors", "table", "identity"])?;
        let kind = self.required(m, path, "kind").and_then(|k| self.string(k, &join(path, "kind")));
        let order = self.optional(m, path, "order", Self::uint);
        let factors = self.optional(m, path, "factors", |w, v, p| w.list(v, p, Self::uint));
        let table = self.optional(m, path, "table", |w, v, p| w.list(v, p, |w, v, p| w.list(v, p, Self::usize)));
        let identity = self.optional(m, path, "identity", Self::usize);
        Some(RawGroup {
            kind: kind?,
            order,
            factors,
            table,
            identity,
        })
    }

    fn coarse(&mut self, v: &Value, path: &str) -> Option<RawCoarse> {
        let m = self.object(v, path, &["kind", "genus", "genera", "node_count"])?;
        let kind = self.required(m, path, "kind").and_then(|k| self.string(k, &join(path, "kind")));
        let genus = self.optional(m, path, "genus", Self::u32);
        let genera = self.optional(m, path, "genera", |w, v, p| w.list(v, p, Self::u32));
        let node_count = self.optional(m, path, "node_count", Self::usize);
        Some(RawCoarse {
            kind: kind?,
            genus,
            genera,
            node_count,
        })
    }

    fn point(&mut self, v: &Value, path: &str) -> Option<RawPoint> {
        let m = self.object(v, path, &["label", "index", "stabilizer", "embedding", "node"])?;
        let label = self.required(m, path, "label").and_then(|x| self.string(x, &join(path, "label")));
        let index = self.required(m, path, "index").and_then(|x| self.uint(x, &join(path, "index")));
        let stabilizer = self.optional(m, path, "stabilizer", Self::group);
        let embedding = self.optional(m, path, "embedding", |w, v, p| w.list(v, p, Self::usize));
        let node = self.optional(m, path, "node", |w, v, p| match v.as_bool() {
            Some(b) => Some(b),
            None => {
                w.schema(p, "expected a boolean");
                None
            }
        });
        let mut pt = RawPoint::new(&label?, index?);
        pt.stabilizer = stabilizer;
        pt.embedding = embedding;
        pt.node = node.unwrap_or(false);
        Some(pt)
    }

    fn gerbe(&mut self, v: &Value, path: &str) -> Option<String> {
        let m = self.object(v, path, &["kind"])?;
        self.required(m, path, "kind").and_then(|k| self.string(k, &join(path, "kind")))
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn short(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 40 {
        format!("{}...", s.chars().take(37).collect::<String>())
    } else {
        s
    }
}

/// Reads a descriptor file into raw form, reporting every schema problem.
pub fn parse_raw_descriptor(text: &str) -> Result<RawDescriptor, Vec<Diagnostic>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        vec![Diagnostic::new(
            DiagnosticKind::Schema,
            "",
            format!("not valid JSON: {e}"),
        )]
    })?;
    let mut w = Walker { out: Vec::new() };
    let Some(m) = w.object(
        &doc,
        "",
        &["characteristic", "coarse", "generic_stabilizer", "stacky_points", "gerbe"],
    ) else {
        return Err(w.out);
    };
    let characteristic = w.required(m, "", "characteristic").and_then(|v| w.uint(v, "characteristic"));
    let coarse = w.required(m, "", "coarse").and_then(|v| w.coarse(v, "coarse"));
    let generic = w
        .required(m, "", "generic_stabilizer")
        .and_then(|v| w.group(v, "generic_stabilizer"));
    let points = match m.get("stacky_points") {
        None => Some(Vec::new()),
        Some(v) => w.list(v, "stacky_points", Walker::point),
    };
    let gerbe = w.required(m, "", "gerbe").and_then(|v| w.gerbe(v, "gerbe"));
    match (characteristic, coarse, generic, points, gerbe) {
        (Some(characteristic), Some(coarse), Some(generic_stabilizer), Some(stacky_points), Some(gerbe))
            if w.out.is_empty() =>
        {
            Ok(RawDescriptor {
                characteristic,
                coarse,
                generic_stabilizer,
                stacky_points,
                gerbe,
            })
        }
        _ => Err(w.out),
    }
}

/// Parses and validates a descriptor file.
pub fn parse_descriptor(text: &str) -> Result<CurveDescriptor, Vec<Diagnostic>> {
    validate_descriptor(&parse_raw_descriptor(text)?)
}

/// Renders a raw descriptor in the file format.
pub fn descriptor_to_json(raw: &RawDescriptor) -> String {
    let mut v = serde_json::to_value(raw).expect("raw descriptors serialize");
    if let Some(g) = v.get_mut("gerbe") {
        *g = serde_json::json!({ "kind": raw.gerbe });
    }
    serde_json::to_string_pretty(&v).expect("value serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORBI: &str = r#"{
        "characteristic": 0,
        "coarse": {"kind": "projective", "genus": 0},
        "generic_stabilizer": {"kind": "trivial"},
        "stacky_points": [{"label": "a", "index": 2}, {"label": "b", "index": 3}],
        "gerbe": {"kind": "trivial_product"}
    }"#;

    #[test]
    fn reads_an_orbicurve() {
        let d = parse_descriptor(ORBI).unwrap();
        assert_eq!(d.indices(), vec![2, 3]);
        assert_eq!(d.genus(), Some(0));
    }

    #[test]
    fn lists_every_problem() {
        let text = r#"{
            "characteristic": -1,
            "coarse": {"kind": "projective", "genus": 1.5, "colour": "red"},
            "generic_stabilizer": {"kind": "cyclic", "order": "3"},
            "stacky_points": [{"label": 7, "index": 2}, {"index": 2}],
            "extra": true
        }"#;
        let errs = parse_raw_descriptor(text).unwrap_err();
        let paths: Vec<&str> = errs.iter().map(|d| d.path.as_str()).collect();
        for p in [
            "extra",
            "characteristic",
            "coarse.genus",
            "coarse.colour",
            "generic_stabilizer.order",
            "stacky_points[0].label",
            "stacky_points[1].label",
            "gerbe",
        ] {
            assert!(paths.contains(&p), "{p} missing from {paths:?}");
        }
    }

    #[test]
    fn bad_json_is_one_diagnostic() {
        assert_eq!(parse_raw_descriptor("{").unwrap_err().len(), 1);
        assert_eq!(parse_raw_descriptor("[]").unwrap_err().len(), 1);
    }

    #[test]
    fn validation_problems_come_through() {
        let text = ORBI.replace("\"characteristic\": 0", "\"characteristic\": 2");
        let errs = parse_descriptor(&text).unwrap_err();
        assert!(errs.iter().any(|d| d.kind == DiagnosticKind::Wild));
    }

    #[test]
    fn round_trips_through_the_writer() {
        let raw = parse_raw_descriptor(ORBI).unwrap();
        assert_eq!(parse_raw_descriptor(&descriptor_to_json(&raw)).unwrap(), raw);
    }
}

use std::path::PathBuf;

use proptest::prelude::*;
use stackcoh::fixtures;
use stackcoh::io::{descriptor_to_json, parse_descriptor, parse_raw_descriptor};
use stackcoh::stackcurve::validate_descriptor;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn checked_in_files_match_builders() {
    for (name, raw) in fixtures::all() {
        let text = std::fs::read_to_string(dir().join(format!("{name}.json"))).unwrap();
        assert_eq!(text, descriptor_to_json(&raw) + "\n", "{name}");
        assert_eq!(parse_raw_descriptor(&text).unwrap(), raw, "{name}");
        assert_eq!(parse_descriptor(&text).unwrap(), validate_descriptor(&raw).unwrap(), "{name}");
    }
}

#[test]
fn no_stray_files() {
    let names: Vec<String> = fixtures::all().into_iter().map(|(n, _)| format!("{n}.json")).collect();
    for entry in std::fs::read_dir(dir()).unwrap() {
        let f = entry.unwrap().file_name().to_string_lossy().into_owned();
        assert!(names.contains(&f), "unexpected fixture {f}");
    }
}

fn json_value() -> impl Strategy<Value = serde_json::Value> {
    let leaf = prop_oneof![
        Just(serde_json::Value::Null),
        any::<bool>().prop_map(serde_json::Value::from),
        any::<i64>().prop_map(serde_json::Value::from),
        (0u64..10).prop_map(serde_json::Value::from),
        prop::sample::select(vec!["projective", "cyclic", "trivial", "explicit", "x"]).prop_map(serde_json::Value::from),
    ];
    leaf.prop_recursive(4, 32, 6, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..4).prop_map(serde_json::Value::from),
            prop::collection::btree_map(
                prop::sample::select(vec![
                    "characteristic",
                    "coarse",
                    "kind",
                    "genus",
                    "generic_stabilizer",
                    "order",
                    "stacky_points",
                    "label",
                    "index",
                    "gerbe",
                    "table",
                ])
                .prop_map(String::from),
                inner,
                0..5
            )
            .prop_map(|m| serde_json::Value::Object(m.into_iter().collect())),
        ]
    })
}

proptest! {
    #[test]
    fn arbitrary_documents_never_panic(v in json_value()) {
        let _ = parse_descriptor(&v.to_string());
    }

    #[test]
    fn every_problem_has_a_message(v in json_value()) {
        if let Err(d) = parse_descriptor(&v.to_string()) {
            prop_assert!(!d.is_empty());
            prop_assert!(d.iter().all(|x| !x.message.is_empty()));
        }
    }
}

use std::collections::BTreeMap;

use serde_json::Value;
use spherecert::report::{run_suite, Format, Status, Suite, SuiteConfig};

fn config(suite: Suite, samples: usize) -> SuiteConfig {
    let mut c = SuiteConfig::new(suite);
    c.samples = samples;
    c
}

#[test]
fn top_level_field_order() {
    let r = run_suite(&config(Suite::S3Cr, 3)).unwrap();
    let json = r.to_json();
    let keys = ["\"suite\"", "\"seed\"", "\"samples\"", "\"checks\"", "\"summary\""];
    let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
    assert!(json.ends_with("}\n"));

    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["suite"], "s3-cr");
    assert_eq!(v["seed"], 0);
    assert_eq!(v["samples"], 3);
    let check = &v["checks"][0];
    let fields: Vec<&String> = check.as_object().unwrap().keys().collect();
    for k in ["id", "paper_ref", "status", "details", "counterexample"] {
        assert!(fields.iter().any(|f| *f == k), "missing {k}");
    }
}

#[test]
fn counterexamples_are_rational_strings() {
    let r = run_suite(&config(Suite::S7Quat, 2)).unwrap();
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    let failing: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(!failing.is_empty());
    let with_point = failing.iter().find(|c| !c["counterexample"].is_null()).unwrap();
    let pt = with_point["counterexample"].as_array().unwrap();
    assert_eq!(pt.len(), 8);
    for x in pt {
        let s = x.as_str().unwrap();
        let (n, d) = s.split_once('/').unwrap();
        n.parse::<i64>().unwrap();
        assert!(d.parse::<u64>().unwrap() >= 1);
    }
}

#[test]
fn every_id_has_one_reference_and_summary_matches() {
    let r = run_suite(&config(Suite::All, 2)).unwrap();
    let mut refs: BTreeMap<&str, &str> = BTreeMap::new();
    for c in &r.checks {
        assert!(!c.paper_ref.is_empty(), "{} has no reference", c.id);
        assert!(refs.insert(&c.id, &c.paper_ref).is_none(), "duplicate id {}", c.id);
    }
    let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
    let failed = r.checks.iter().filter(|c| c.status == Status::Fail).count();
    assert_eq!(r.summary.total, r.checks.len());
    assert_eq!(r.summary.passed, passed);
    assert_eq!(r.summary.failed, failed);
    assert_eq!(r.exit_code(), if failed == 0 { 0 } else { 1 });
}

#[test]
fn all_is_union_of_suites() {
    let all = run_suite(&config(Suite::All, 2)).unwrap();
    let mut n = 0;
    for s in Suite::ALL.into_iter().filter(|s| *s != Suite::All) {
        let part = run_suite(&config(s, 2)).unwrap();
        for c in &part.checks {
            assert_eq!(all.check(&c.id).map(|x| x.status), Some(c.status), "{}", c.id);
        }
        n += part.checks.len();
    }
    assert_eq!(n, all.checks.len());
}

#[test]
fn text_format_lists_every_check() {
    let r = run_suite(&config(Suite::S3Hopf, 2)).unwrap();
    let text = r.render(Format::Text);
    for c in &r.checks {
        assert!(text.contains(&c.id));
    }
}

#[test]
fn documented_examples() {
    let alg = run_suite(&config(Suite::Algebra, 10)).unwrap();
    let table: Vec<_> = alg.checks.iter().filter(|c| c.id.starts_with("algebra.table.")).collect();
    assert_eq!(table.len(), 64);
    assert!(table.iter().all(|c| c.status == Status::Pass));

    let quat = run_suite(&config(Suite::S7Quat, 3)).unwrap();
    assert_eq!(quat.check("quat.vertical.Y45").unwrap().status, Status::Pass);
    assert_eq!(quat.check("quat.region.tags").unwrap().status, Status::Pass);
}

use std::process::{Command, Output};

use serde_json::Value;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn strip_durations(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("duration");
            m.values_mut().for_each(strip_durations);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_durations),
        _ => {}
    }
}

#[test]
fn chebyshev_suite_passes() {
    let o = skein(&["verify", "chebyshev", "--N", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("PASS"));
}

#[test]
fn frobenius_determinant_reduces_to_one() {
    let o = skein(&["reduce", "--algebra", "bigon", "--ring", "cyclo:3", "a[+,+]^3*a[-,-]^3 - a[+,-]^3*a[-,+]^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1");
}

#[test]
fn triangle_confluence_passes() {
    let o = skein(&["verify", "confluence", "--algebra", "triangle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn reduce_renders_the_bigon_relation() {
    let o = skein(&["reduce", "--algebra", "bigon", "a[+,+]*a[-,-] - 1"]);
    assert_eq!(stdout(&o), "(w^4)*a[-,+]*a[+,-]");
    let o = skein(&["reduce", "--algebra", "bigon", "--json", "a[-,-]*a[+,+]"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn tensor_algebras_from_a_list() {
    let o = skein(&["reduce", "--algebra", "bigon,bigon", "a[+,+]@1*a[-,-]@0 - a[-,-] ox a[+,+]"]);
    assert_eq!(stdout(&o), "0");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(skein(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(skein(&["reduce", "--ring", "cyclo:x", "1"]).status.code(), Some(2));
    let o = skein(&["reduce", "--algebra", "bigon", "a[+,+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 5"));
    assert_eq!(skein(&["reduce", "--algebra", "bigon", "z[+,+]"]).status.code(), Some(2));
}

#[test]
fn json_report_has_checks_with_anchors() {
    let o = skein(&["verify", "frobenius", "--N", "3", "--surface", "triangle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    for r in v["reports"].as_array().unwrap() {
        for c in r["checks"].as_array().unwrap() {
            assert!(c["name"].is_string() && c["anchor"].is_string());
            assert_eq!(c["status"], "PASS");
        }
    }
}

#[test]
fn verify_all_is_deterministic() {
    let run = || {
        let o = skein(&["verify", "all", "--N", "3", "--json"]);
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        strip_durations(&mut v);
        (o.status.code(), serde_json::to_string(&v).unwrap())
    };
    let (c1, a) = run();
    let (c2, b) = run();
    assert_eq!(c1, c2);
    assert_eq!(a, b);
}

#[test]
fn poisson_with_a_hyphenated_orientation() {
    let o = skein(&["verify", "poisson", "--surface", "bigon", "--orientation", "-,+", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bracket_routes_print_normal_forms() {
    let o = skein(&["bracket", "--surface", "bigon", "a[+,+]", "a[-,-]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
    let o = skein(&["bracket", "--surface", "triangle", "--route", "rmatrix", "--orientation", "+,+,+", "g[+,+]", "a[-,-]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(skein(&["bracket", "--surface", "triangle", "--route", "rmatrix", "--orientation", "+,+", "a[+,+]", "a[-,-]"]).status.code(), Some(2));
}

#[test]
fn square_glue_reports_membership() {
    let o = skein(&["glue", "--scenario", "square", "--kernel-degree", "2", "--N", "3", "--json", "--no-basis"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let rows = v["elements"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["element"] == "abar[+,+]"));
    for r in rows {
        assert_eq!(r["defect_zero"], true);
        assert_ne!(r["in_truncated_kernel"], false);
    }
    assert_eq!(v["rank"].as_u64().unwrap() + v["kernel_dim"].as_u64().unwrap(), v["domain_dim"].as_u64().unwrap());
}

#[test]
fn exported_presentation_round_trips() {
    let o = skein(&["reduce", "--algebra", "triangle", "--export"]);
    assert_eq!(o.status.code(), Some(0));
    let path = std::env::temp_dir().join(format!("skein-triangle-{}.json", std::process::id()));
    std::fs::write(&path, stdout(&o)).unwrap();
    let p = path.to_str().unwrap();
    let expr = "b[+,+]*a[-,+]";
    let from_file = skein(&["reduce", "--presentation-file", p, expr]);
    let builtin = skein(&["reduce", "--algebra", "triangle", expr]);
    assert_eq!(stdout(&from_file), stdout(&builtin));
    assert_eq!(skein(&["verify", "confluence", "--presentation-file", p]).status.code(), Some(0));
    std::fs::remove_file(&path).ok();
}

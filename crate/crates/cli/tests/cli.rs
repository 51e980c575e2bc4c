use std::process::{Command, Output};

use serde_json::Value;

fn cubical(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubical")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = cubical(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

/// Just enough of JSON Schema for the report schema: type, required,
/// properties, additionalProperties and minimum.
fn validate(schema: &Value, v: &Value, path: &str) -> Vec<String> {
    let mut errs = Vec::new();
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "boolean" => v.is_boolean(),
            "number" => v.is_number(),
            _ => false,
        });
        if !ok {
            errs.push(format!("{path}: expected {types:?}"));
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), v.as_f64()) {
        if x < min {
            errs.push(format!("{path}: below minimum"));
        }
    }
    if let Some(obj) = v.as_object() {
        for r in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(r.as_str().unwrap()) {
                errs.push(format!("{path}: missing {r}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (k, sub) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(s) => errs.extend(validate(s, sub, &format!("{path}.{k}"))),
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    errs.push(format!("{path}: unexpected {k}"))
                }
                None => {}
            }
        }
    }
    errs
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../report.schema.json")).unwrap()
}

#[test]
fn kleene_counterexample_and_boolean_equality() {
    let o = cubical(&["term-eq", "--rules", "wec", "--sig", "jmr", "--theory", "canonical", "--arity", "1", "x1/\\x1'", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x1↦u"));
    let o = cubical(&["term-eq", "--rules", "wec", "--sig", "jmr", "--theory", "boolean", "--arity", "1", "x1/\\x1'", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn join_associativity() {
    let o = cubical(&["term-eq", "--rules", "w", "--sig", "j", "--arity", "3", "x1\\/(x2\\/x3)", "(x1\\/x2)\\/x3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn term_eq_rejects_bad_input() {
    // contraction is not available
    let o = cubical(&["term-eq", "--rules", "w", "--sig", "j", "--arity", "1", "x1 \\/ x1", "x1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cubical(&["term-eq", "--rules", "w", "--sig", "j", "--arity", "1", "x1 /\\ 1", "x1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cubical(&["term-eq", "--rules", "cw", "--sig", "j", "--arity", "1", "x1", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hom_counts() {
    for (rules, sig, m, n, want) in
        [("w", "∅", "1", "1", "3"), ("wec", "jmr", "1", "1", "6"), ("we", "r", "0", "1", "2"), ("∅", "∅", "0", "1", "2")]
    {
        let o = cubical(&["hom", "--rules", rules, "--sig", sig, m, n, "--count"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want, "{rules} {sig} {m} {n}");
    }
}

#[test]
fn hom_listing_is_sorted_and_stable() {
    let a = stdout(&cubical(&["hom", "--rules", "w", "--sig", "r", "1", "1", "--list"]));
    let b = stdout(&cubical(&["hom", "--rules", "w", "--sig", "r", "1", "1", "--list"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
}

#[test]
fn hom_bound_exceeded() {
    let o = cubical(&["hom", "--rules", "wec", "--sig", "jmr", "2", "2", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn a_homology_passes() {
    let o = cubical(&["experiment", "a-homology", "--rules", "w", "--sig", "∅"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("H0=ℤ, H1=ℤ, H2=ℤ"));
    assert!(out.contains("PASS"));
}

#[test]
fn contraction_collapse_passes() {
    let (code, v) = json(&["experiment", "contraction-collapse", "--rules", "wec", "--sig", "∅"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["terminal"], "north (x,y)");
    assert_eq!(v["results"]["acyclic"], true);
}

#[test]
fn experiment_needs_applicable_category() {
    let o = cubical(&["experiment", "a-homology", "--rules", "wec", "--sig", "∅"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cubical(&["experiment", "coslice-check", "--rules", "w"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table2_human_and_json_agree() {
    let o = cubical(&["experiment", "table2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("st/st/st"));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 20);
    let (code, v) = json(&["experiment", "table2"]);
    assert_eq!(code, 0);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    for (row, line) in rows.iter().zip(text.lines().filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL "))) {
        let verdict = row["verdict"].as_str().unwrap();
        assert!(line.contains(&format!(": {verdict} (published")), "{line}");
        assert_eq!(row["pass"].as_bool().unwrap(), line.starts_with("PASS"));
    }
}

#[test]
fn reports_match_schema() {
    let schema = schema();
    for args in [
        vec!["term-eq", "--rules", "we", "--sig", "j", "--arity", "2", "x1\\/x2", "x2\\/x1"],
        vec!["hom", "--rules", "w", "--sig", "∅", "1", "2", "--list"],
        vec!["axioms", "--rules", "wec", "--sig", "jmr", "--theory", "demorgan"],
        vec!["experiment", "a-poset", "--rules", "we", "--sig", "r"],
        vec!["experiment", "table2"],
        vec!["agreement", "--rules", "w", "--sig", "jm", "--pairs", "50", "--seed", "3"],
    ] {
        let (_, v) = json(&args);
        let errs = validate(&schema, &v, "$");
        assert!(errs.is_empty(), "{args:?}: {errs:?}");
    }
}

#[test]
fn axioms_under_de_morgan_fail_kleene() {
    let o = cubical(&["axioms", "--rules", "wec", "--sig", "jmr", "--theory", "demorgan"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("FAILS")).count(), 1);
    assert!(out.contains("x1↦u, x2↦v"));
}

#[test]
fn custom_algebra_file() {
    let dir = std::env::temp_dir().join(format!("cubical-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("three.json");
    std::fs::write(
        &path,
        r#"{"name":"chain3","carrier":["0","h","1"],"zero":"0","one":"1",
            "join":[["0","h","1"],["h","h","1"],["1","1","1"]],
            "meet":[["0","0","0"],["0","h","h"],["0","h","1"]],
            "rev":["1","h","0"]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = cubical(&["term-eq", "--rules", "wec", "--sig", "jmr", "--theory", "boolean", "--arity", "1", "x1 \\/ x1'", "1", "--algebra", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x1↦h"));
    let o = cubical(&["axioms", "--rules", "wec", "--sig", "jmr", "--algebra", p]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn factorize_reports_blocks() {
    let (code, v) = json(&["factorize", "--rules", "we", "--sig", "r", "--arity", "2", "x2'", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["factorization"]["dropped"], serde_json::json!([1]));
    assert_eq!(v["results"]["is_iso"], false);
    let o = cubical(&["factorize", "--rules", "w", "--sig", "j", "--arity", "1", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn homology_of_json_category_and_dot() {
    let dir = std::env::temp_dir().join(format!("cubical-cli-h-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("square.json");
    // the 4-cycle a,b < c,d
    let mut arrows = vec![];
    let mut comp = vec![];
    for i in 0..4 {
        arrows.push(format!(r#"{{"label":"1{i}","source":{i},"target":{i}}}"#));
        comp.push(format!("[{i},{i},{i}]"));
    }
    let mut k = 4;
    for a in 0..2 {
        for b in 2..4 {
            arrows.push(format!(r#"{{"label":"{a}{b}","source":{a},"target":{b}}}"#));
            comp.push(format!("[{a},{k},{k}]"));
            comp.push(format!("[{k},{b},{k}]"));
            k += 1;
        }
    }
    let text = format!(
        r#"{{"objects":[{{"label":"a","dim":0}},{{"label":"b","dim":0}},{{"label":"c","dim":1}},{{"label":"d","dim":1}}],
            "arrows":[{}],"identities":[0,1,2,3],"composition":[{}]}}"#,
        arrows.join(","),
        comp.join(",")
    );
    std::fs::write(&input, text).unwrap();
    let dot = dir.join("square.dot");
    let o = cubical(&["homology", input.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("H0=ℤ, H1=ℤ"));
    assert!(out.contains("non-aspheric"));
    assert!(std::fs::read_to_string(&dot).unwrap().contains("rank=same"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn agreement_is_seeded() {
    let a = stdout(&cubical(&["agreement", "--rules", "we", "--sig", "jm", "--pairs", "300", "--seed", "9"]));
    let b = stdout(&cubical(&["agreement", "--rules", "we", "--sig", "jm", "--pairs", "300", "--seed", "9"]));
    assert_eq!(a, b);
    assert!(a.contains("0 disagreements"));
}

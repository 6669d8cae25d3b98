use algraph::SimpleGraph;
use algraph_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("algraph").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn json_export_round_trips() {
    let (code, out, _) = call(&["build", "--algebra", "cyclic:6", "--graph", "power", "--format", "json"]);
    assert_eq!(code, 0);
    let g = SimpleGraph::from_json_str(&out).unwrap();
    let mut want = SimpleGraph::complete(6).unwrap();
    want.remove_edge(2, 3);
    want.remove_edge(3, 4);
    assert_eq!(g.edges(), want.edges());
}

#[test]
fn dot_is_byte_stable_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let p = path.to_str().unwrap();
    let args = ["build", "--algebra", "dihedral:8", "--graph", "enhanced", "--out", p];
    assert_eq!(call(&args).0, 0);
    let first = std::fs::read(&path).unwrap();
    assert_eq!(call(&args).0, 0);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("graph \"D8_enhanced\" {\n"));
    assert!(text.ends_with("}\n"));
}

#[test]
fn strict_variant_and_digraphs() {
    let (_, loose, _) = call(&["build", "--algebra", "monosg:4:1", "--graph", "enhanced"]);
    let (_, strict, _) = call(&["build", "--algebra", "monosg:4:1", "--graph", "enhanced", "--variant", "strict"]);
    assert!(loose.contains("\"x^2\" -- \"x^3\";"));
    assert!(!strict.contains("\"x^2\" -- \"x^3\";"));
    let (code, dot, _) = call(&["build", "--algebra", "volkov", "--graph", "power", "--directed"]);
    assert_eq!(code, 0);
    assert!(dot.contains("\"a\" -> \"e\";") && dot.contains("\"b\" -> \"e\";"));
    assert_eq!(dot.matches("->").count(), 2);
    let (code, _, err) = call(&["build", "--algebra", "cyclic:4", "--graph", "power", "--variant", "strict"]);
    assert_eq!(code, 2);
    assert!(err.contains("--variant"));
}

#[test]
fn algebra_files_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    std::fs::write(
        &path,
        r#"{"name":"Z2","size":2,"elements":["0","1"],"operations":[{"name":"mul","arity":2,"table":[0,1,1,0]}]}"#,
    )
    .unwrap();
    let spec = format!("file:{}", path.display());
    let (code, out, _) = call(&["describe", "--algebra", &spec]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["name"], "Z2");
    assert_eq!(v["rank"], 1);
    let q = format!("quasiunary:{spec}");
    let (code, out, _) = call(&["complex", "--algebra", &q]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["facets"], serde_json::json!([[0], [1]]));
}

#[test]
fn classify_reports_labelled_witnesses() {
    let (code, out, _) = call(&["classify", "--algebra", "cyclic:6", "--graph", "power", "--classes", "split,perfect"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["class"], "split");
    assert_eq!(v[1]["verdict"], true);
    let (_, out, _) = call(&["classify", "--algebra", "product:cyclic:2,cyclic:4", "--graph", "power", "--classes", "threshold"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["verdict"], false);
    assert_eq!(v[0]["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn invariants_print_values() {
    let (_, out, _) = call(&["invariant", "--algebra", "cyclic:6", "--graph", "power", "--which", "clique"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 5);
    let (_, out, _) = call(&["invariant", "--algebra", "product:cyclic:2,cyclic:2", "--graph", "generating", "--which", "diameter"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "infinite");
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, _, err) = call(&[
        "verify", "--suite", "mo_equivalence", "--family", "groups", "--max-order", "12", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(err.contains("0 failed"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["total"], v["instances"].as_array().unwrap().len());
}

#[test]
fn f_ratio_csv() {
    let (code, out, err) = call(&["f-ratio", "--max-n", "12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n,phi,f,ratio\n1,1,1,1\n"));
    assert_eq!(out.lines().count(), 13);
    assert!(err.contains("at n = "));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["describe", "--algebra", "file:/definitely/missing.json"]).0, 2);
    assert_eq!(call(&["build", "--algebra", "cyclic:6", "--graph", "nonsense"]).0, 2);
    assert_eq!(call(&["verify", "--family", "groups", "--max-order", "65"]).0, 3);
    assert_eq!(call(&["verify", "--family", "semigroups", "--max-order", "4"]).0, 3);
    assert_eq!(call(&["verify", "--max-order", "0"]).0, 2);
    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let (code, _, err) = call(&["build", "--algebra", "cyclic:3", "--graph", "power", "--bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

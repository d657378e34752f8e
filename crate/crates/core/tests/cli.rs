use std::process::{Command, Output};

fn census(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn psi_weak_z12() {
    let o = census(&[
        "psi",
        "--group",
        "zn:12",
        "--relation",
        "weak",
        "--method",
        "burnside",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x^2+x^3+6x^4+6x^5+7x^6+7x^7+4x^8+4x^9+x^10+x^11 (38 classes)\n"
    );
}

#[test]
fn psi_methods_agree() {
    for method in ["burnside", "oracle", "closed"] {
        let o = census(&["psi", "--group", "dn:3", "--relation", "weak", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("x^2+2x^3+x^4+x^5 "), "{method}");
    }
}

#[test]
fn psi_json_schema() {
    let o = census(&[
        "psi",
        "--group",
        "product:zn:2,zn:2",
        "--relation",
        "equiv",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"], "Z2xZ2");
    assert_eq!(v["relation"], "equiv");
    assert_eq!(v["method"], "burnside");
    assert_eq!(v["poly"], serde_json::json!([[2, "3"], [3, "1"]]));
    assert_eq!(v["count"], "4");
    assert!(v["verdict"].is_null());
}

#[test]
fn table_layouts() {
    let o = census(&["table", "--max-n", "2", "--relation", "weak"]);
    assert_eq!(stdout(&o), "2, x, 1\n");

    let o = census(&["table", "--max-n", "20", "--relation", "equiv", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,label,relation,method,polynomial,count,verdict");
    assert_eq!(lines.len(), 20);
    assert!(lines[11].starts_with("12,Z12,equiv,burnside,"));
    assert!(lines[11].ends_with(",54,match"));
    assert!(lines[17].contains("mismatch"), "{}", lines[17]);

    let o = census(&["table", "--max-n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table",
        "--max-n",
        "16",
        "--relation",
        "weak",
        "--format",
        "csv",
        "--threads",
        "4",
    ];
    assert_eq!(census(&args).stdout, census(&args).stdout);
}

#[test]
fn count_subcommand() {
    let o = census(&["count", "--group", "zn:20", "--relation", "weak"]);
    assert_eq!(stdout(&o), "314\n");
    let o = census(&["count", "--group", "dn:5", "--relation", "equiv", "--method", "closed"]);
    assert_eq!(stdout(&o), "27\n");
}

#[test]
fn verify_suites() {
    let o = census(&["verify", "--suite", "crossmethod", "--max-n", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = census(&["verify", "--suite", "tables", "--max-n", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("DISCREPANCY(paper) tables equiv n=18"));
    assert!(out.contains("PASS tables weak n=20"));

    let o = census(&["verify", "--suite", "closedforms", "--max-n", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("DISCREPANCY(paper) closedforms equiv_dihedral(4) literal"));
}

#[test]
fn exit_codes() {
    let o = census(&["psi", "--group", "zn:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("group must have order ≥ 2"));

    assert_eq!(census(&["psi", "--group", "zn"]).status.code(), Some(2));
    assert_eq!(
        census(&["psi", "--group", "zn:5", "--relation", "strong"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(census(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(census(&["table", "--max-n", "1"]).status.code(), Some(2));
    assert_eq!(
        census(&["psi", "--group", "table-file:/nonexistent/g.txt"])
            .status
            .code(),
        Some(2)
    );

    let o = census(&["psi", "--group", "zn:60", "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("30 blocks"));

    // the literal dihedral formula does not average to an integer
    let o = census(&["psi", "--group", "dn:3", "--method", "closed", "--literal-formulas"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_file_groups() {
    let dir = std::env::temp_dir().join(format!("cayley-census-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("klein.txt");
    std::fs::write(&path, "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let spec = format!("table-file:{}", path.display());
    let o = census(&["psi", "--group", &spec, "--relation", "weak"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "x^2+x^3 (2 classes)\n");

    std::fs::write(&path, "2\n0 1\n0 1\n").unwrap();
    let o = census(&["psi", "--group", &spec]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

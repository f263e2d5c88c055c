use std::process::Command;

fn relalg(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_relalg"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn validate_reports_the_failing_triple() {
    let (code, out) = relalg(&["validate", "data/broken.alg"]);
    assert_eq!(code, 3);
    assert!(out.contains("(a;a);b = {b} != {id} = a;(a;b)"));
    assert_eq!(relalg(&["validate", "catalog:ra17"]).0, 0);
}

#[test]
fn classify_ra18_is_p() {
    let (code, out) = relalg(&["classify", "catalog:ra18"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "P");
    let (code, out) = relalg(&["classify", "catalog:ra17", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ra17: NP-complete"));
}

#[test]
fn solve_worked_instance_is_sat() {
    let (code, out) = relalg(&["solve", "catalog:ra17", "data/example.net"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "sat");
    assert_eq!(v["model"]["nodes"][0], "x1=x3");
}

#[test]
fn budget_exhaustion_exits_with_four() {
    let (code, out) = relalg(&[
        "solve",
        "catalog:ra17",
        "data/ra17_seed7.net",
        "--budget-nodes",
        "0",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    if v["verdict"] == "inconclusive" {
        assert_eq!(code, 4);
    } else {
        assert_eq!(code, 0);
    }
}

#[test]
fn error_exit_codes() {
    assert_eq!(relalg(&["validate", "no/such/file.alg"]).0, 2);
    assert_eq!(relalg(&["catalog", "show", "ra99"]).0, 2);
    assert_eq!(relalg(&["bogus"]).0, 2);
    assert_eq!(
        relalg(&["transform", "add-flexible", "data/split.alg"]).0,
        3
    );
    assert_eq!(relalg(&["gen", "algebra", "--atoms", "2"]).0, 2);
}

#[test]
fn generators_and_transforms_emit_parseable_text() {
    let (code, out) = relalg(&[
        "gen",
        "network",
        "catalog:ra17",
        "--nodes",
        "4",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("../data/ra17_seed7.net"));
    let (code, out) = relalg(&["transform", "add-flexible", "catalog:ra17"]);
    assert_eq!(code, 0);
    let ext = relalg::format::parse_algebra(&out).unwrap();
    assert_eq!(ext.atom_count(), 4);
    let (code, out) = relalg(&[
        "transform",
        "integralize",
        "data/split.alg",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["text"]
        .as_str()
        .unwrap()
        .starts_with("algebra split-integral"));
    let (code, out) = relalg(&["catalog", "list", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ra17\t"));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("relalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.alg");
    let (code, out) = relalg(&[
        "gen",
        "algebra",
        "--atoms",
        "4",
        "--seed",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(relalg::format::parse_algebra(&text).unwrap().validate().ok);
    std::fs::remove_dir_all(&dir).unwrap();
}

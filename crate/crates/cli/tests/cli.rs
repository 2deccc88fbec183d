use std::process::{Command, Output};

use twoknot::FamilyRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoknot")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn alex_ee_member() {
    let v = json(&["alex", "<x,y | xyxYXyxyXY>"]);
    assert_eq!(v["delta"], "t^2-3t+1");
    assert_eq!(v["delta_principal"], true);
    assert_eq!(v["h1"], "Z");
    assert_eq!(v["weights"], serde_json::json!([1, -1]));
    assert_eq!(v["seed"], 0);
    assert!(v["tool_version"].as_str().unwrap().starts_with("twoknot "));
}

#[test]
fn alex_text_and_trefoil() {
    let text = stdout(&["alex", "<x,y | xyxYXY>"]);
    assert!(text.contains("delta:        t^2-t+1"), "{text}");
    assert!(text.contains("H1:           Z"));
}

#[test]
fn alex_unknot_and_rank_error() {
    assert_eq!(json(&["alex", "<x|>"])["delta"], "1");
    let out = run(&["alex", "<x,y|>"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("free rank 2"));
}

#[test]
fn parse_errors_exit_one() {
    assert_eq!(run(&["alex", "<x,y | xz>"]).status.code(), Some(1));
    assert_eq!(run(&["alex", "<x,y | x"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["family", "--grid", "3..1", "0..0"]).status.code(), Some(1));
    assert_eq!(run(&["enum", "<x | x^2>", "--max", "0"]).status.code(), Some(1));
}

#[test]
fn family_single_points() {
    let v = json(&["family", "0", "0"]);
    assert_eq!(v["parity"], "EE");
    assert_eq!(v["delta"], "t^2-3t+1");
    assert_eq!(v["gluck_pi1"], "trivial");
    assert_eq!(v["handle_counts"]["complement"], serde_json::json!([1, 2, 2, 2, 1]));
    assert_eq!(v["spun_obstruction"], "PossiblyOneKnot");

    let v = json(&["family", "1", "0"]);
    assert_eq!(v["parity"], "OE");
    assert_eq!(v["delta"], "t^2-2t+2");
    assert_eq!(v["spun_obstruction"], "NotOneKnot");
}

#[test]
fn family_negative_arguments() {
    let v = json(&["family", "-3", "-1"]);
    assert_eq!(v["p"], -3);
    assert_eq!(v["parity"], "OO");
    assert_eq!(v["delta"], "t^3-2t^2+t-1");
}

#[test]
fn family_grid_json_round_trips() {
    let text = stdout(&["--json", "family", "--grid", "-2..2", "-2..2"]);
    let records: Vec<FamilyRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 25);
    let order: Vec<(i64, i64)> = records.iter().map(|r| (r.p, r.q)).collect();
    let expected: Vec<(i64, i64)> = (-2..=2).flat_map(|p| (-2..=2).map(move |q| (p, q))).collect();
    assert_eq!(order, expected);
    for (line, r) in text.lines().zip(&records) {
        let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
        let obj = v.as_object_mut().unwrap();
        obj.remove("tool_version");
        obj.remove("seed");
        assert_eq!(v, serde_json::to_value(r).unwrap());
    }
}

#[test]
fn family_grid_text_counts_three_classes() {
    let text = stdout(&["family", "--grid", "-2..2", "-2..2"]);
    assert!(text.ends_with("records: 25, distinct delta classes: 3\n"), "{text}");
}

#[test]
fn family_tsv_has_header() {
    let text = stdout(&["--tsv", "family", "--grid", "0..1", "0..0"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("p\tq\tparity"));
    assert!(lines[1].starts_with("0\t0\tEE\t"));
    assert!(lines[2].starts_with("1\t0\tOE\t"));
    assert_eq!(run(&["--tsv", "alex", "<x|>"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "family", "--grid", "-2..2", "-2..2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["gluck", "<x,y | xyxYXyxyXY>", "--kill", "y", "--variant", "double"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn gluck_single_and_double() {
    let v = json(&["gluck", "<x,y | xyxYXyxyXY>", "--kill", "x"]);
    assert_eq!(v["pi1"], "trivial");
    assert_eq!(v["counts_before"], serde_json::json!([1, 2, 2, 2, 1]));
    assert_eq!(v["counts_after"], serde_json::json!([1, 1, 2, 1, 1]));
    assert_eq!(v["chi_before"], 0);
    assert_eq!(v["chi_after"], 2);

    let v = json(&["gluck", "<x,y | xyxYXyxyXY>", "--kill", "x", "--variant", "double", "--framing", "-1"]);
    assert_eq!(v["counts_after"], serde_json::json!([1, 0, 2, 2, 1]));
    assert_eq!(v["chi_after"], 2);
    assert_eq!(v["framing"], -1);
}

#[test]
fn gluck_text_report() {
    let text = stdout(&["gluck", "<x,y | xyxYXY>", "--kill", "y"]);
    assert!(text.contains("pi1:          trivial"), "{text}");
    assert!(text.contains("(1,2,2,2,1) -> (1,1,2,1,1)"));
    assert!(text.contains("chi:          0 -> 2"));
}

#[test]
fn gluck_errors() {
    let out = run(&["gluck", "<x,y | xyxYXyxyXY>", "--kill", "z"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown generator 'z'"));
    assert_eq!(run(&["gluck", "<x,y | xy>", "--kill", "x", "--framing", "2"]).status.code(), Some(1));
    // H1 of the complement is Z^2
    assert_eq!(run(&["gluck", "<x,y,z | xY>", "--kill", "x"]).status.code(), Some(2));
}

#[test]
fn enum_orders() {
    let v = json(&["enum", "<x | x^3>"]);
    assert_eq!(v["status"], "finite");
    assert_eq!(v["order"], 3);
    assert_eq!(json(&["enum", "<x,y | xyxYXyxyXY, x>"])["order"], 1);
    let v = json(&["enum", "<x,y | xyXY>", "--max", "50"]);
    assert_eq!(v["status"], "exceeded");
    assert_eq!(v["order"], serde_json::Value::Null);
    assert_eq!(v["cosets_defined"], 50);
    let v = json(&["--max-cosets", "50", "enum", "<x,y | xyXY>"]);
    assert_eq!(v["status"], "exceeded");
}

#[test]
fn enum_subgroup_index() {
    let v = json(&["enum", "<x,y | x^2, y^3, xyxy>", "--subgroup", "x"]);
    assert_eq!(v["order"], 3);
    let text = stdout(&["enum", "<x,y | x^2, y^3, xyxy>", "--subgroup", "x,y"]);
    assert!(text.contains("result:         index 1"), "{text}");
    assert!(stdout(&["enum", "<x | x^3>"]).contains("result:         order 3"));
}

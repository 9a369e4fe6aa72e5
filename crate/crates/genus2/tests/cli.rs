//! End-to-end checks of the command-line interface: output strings, JSON
//! schema, exit codes and the data-file override.

use std::process::Command;

fn genus2(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_genus2"))
        .args(args)
        .output()
        .expect("run binary");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn reduce_generic() {
    let (stdout, _, code) = genus2(&["reduce", "--algebra", "qt", "O34*O45"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        "q^(1/2)*O4*O345 + q^(-1/2)*O3*O5 - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*O1"
    );
}

#[test]
fn reduce_coordinate_ring() {
    let (stdout, _, code) = genus2(&["reduce", "--algebra", "qt1", "O34*O45"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "O4*O345 + O3*O5 - 2*O1");
}

#[test]
fn mul_and_act() {
    let (stdout, _, code) = genus2(&["mul", "O2", "O1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "q^(1/2)*O1*O2 - (q^(3/4) - q^(-1/4))*O12");
    let (stdout, _, code) = genus2(&["act", "d1", "O6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "O61");
}

#[test]
fn bracket_with_t1_flag() {
    let (stdout, _, code) = genus2(&["bracket", "O2", "O1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1/2*O1*O2 - O12");
    let (stdout, _, code) = genus2(&["bracket", "--t1", "O2", "O1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1/2*O1*O2 - O12");
}

#[test]
fn json_output_schema() {
    let (stdout, _, code) = genus2(&["reduce", "--json", "--algebra", "qt", "O2*O1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    assert_eq!(v["algebra"], "qt");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["monomial"].as_array().unwrap().len(), 15);
    let coeff = terms[0]["coeff"].as_array().unwrap();
    assert!(coeff[0]["q"].is_number());
    assert!(coeff[0]["num"].is_string());
}

#[test]
fn parse_error_exits_2() {
    let (_, stderr, code) = genus2(&["reduce", "O7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("syntax error"), "stderr: {stderr}");
    let (_, _, code) = genus2(&["reduce", "--algebra", "bogus", "O1"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_table_suite() {
    let (stdout, _, code) = genus2(&["verify", "table"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("PASS"));
}

#[test]
fn verify_qdiff_single_relator() {
    let (stdout, _, code) = genus2(&["verify", "qdiff", "--only", "g21"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("PASS"));
}

#[test]
fn sample_small_run() {
    let (stdout, _, code) = genus2(&["sample", "--p", "10007", "--n", "3", "--seed", "5"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("PASS"));
}

#[test]
fn sample_json_report() {
    let (stdout, _, code) =
        genus2(&["sample", "--json", "--p", "10007", "--n", "2", "--seed", "9"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn data_file_override() {
    let dir = std::env::temp_dir().join("genus2-bundle-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("relators.json");
    // Export through the library, then point the CLI at the file.
    let engine = genus2::engine::Engine::new().unwrap();
    let bundle = genus2::bundle::export(&engine);
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let (stdout, _, code) = genus2(&[
        "reduce",
        "--data",
        path.to_str().unwrap(),
        "--algebra",
        "qt1",
        "O34*O45",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "O4*O345 + O3*O5 - 2*O1");
}

#[test]
fn shipped_bundle_matches_embedded_data() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/relators.json"
    ))
    .expect("data/relators.json present");
    let bundle: genus2::bundle::Bundle = serde_json::from_str(&text).unwrap();
    let engine = genus2::engine::Engine::new().unwrap();
    assert_eq!(bundle, genus2::bundle::export(&engine));
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn twocover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twocover")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_json_reports_double_star() {
    let o = twocover(&["analyze", "@DP", "--omega", "all", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let d1 = &v["degrees"][1];
    assert_eq!(d1["alpha"], 1);
    assert_eq!(d1["rho"], 0);
    assert_eq!(d1["tau"], 1);
    assert_eq!(d1["H_cover"], "Z^10+Z_2");
    assert_eq!(d1["H_local_primary"], "Z_2^8+Z_4");
    assert_eq!(v["arrangement"]["lines"], 10);
    assert!(v["identities"].as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn analyze_text_mentions_groups() {
    let o = twocover(&["analyze", &data("DP.arr"), "--omega", "1,2,3,4,5,6,7,8,9,10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("Z^10+Z_2"));
}

#[test]
fn verify_exit_codes() {
    let ok = twocover(&["verify", "@DP", "--omega", "all"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("pass: omega=1111111111"));

    let zero = twocover(&["verify", "@DP", "--omega", "0000000000"]);
    assert_eq!(zero.status.code(), Some(2));
    assert!(stderr(&zero).starts_with("error:"));

    let unknown = twocover(&["verify", "@nonesuch", "--omega", "all"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn scan_generic_three_is_torsion_free() {
    let o = twocover(&["scan", "@generic(3)", "--all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap().split('\t').next(), Some("omega"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r[3] == "0" && r[5] == "false"));
    assert!(stderr(&o).contains("0 identity failures"));
}

#[test]
fn scan_random_is_reproducible() {
    let a = twocover(&["scan", "@DP", "--random", "20", "--seed", "3", "--json"]);
    let b = twocover(&["scan", "@DP", "--random", "20", "--seed", "3", "--json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["identity_failures"], 0);
}

#[test]
fn conjecture_on_double_star() {
    let o = twocover(&["conjecture", "@DP", "--all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("1111111111\ttrue\ttrue"));
    assert!(out.trim_end().ends_with("consistent (1023 classes checked)"));
}

#[test]
fn milnor_files() {
    let generic = twocover(&["milnor", &data("generic4.central"), "--json"]);
    assert!(generic.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&generic)).unwrap();
    assert_eq!(v["eigenspace"][1], 0);

    let odd = twocover(&["milnor", &data("three_planes.central")]);
    assert_eq!(odd.status.code(), Some(2));
    assert!(stderr(&odd).contains("even number of planes"));

    let affine = twocover(&["milnor", &data("DP.arr")]);
    assert_eq!(affine.status.code(), Some(2));
}

#[test]
fn catalog_listing_and_files_agree() {
    let list = twocover(&["catalog"]);
    assert!(stdout(&list).lines().any(|l| l == "@decID"));
    for (name, file) in [("decID", "decID.arr"), ("DP", "DP.arr"), ("cone(decID)", "cone_decID.central")] {
        let printed = stdout(&twocover(&["catalog", name]));
        let stored = std::fs::read_to_string(data(file)).unwrap();
        let body: String = stored.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(printed, body, "{name}");
    }
}

#[test]
fn parse_errors_carry_position() {
    let dir = std::env::temp_dir().join(format!("twocover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.arr");
    std::fs::write(&path, "1 0 0\n0 1 x\n").unwrap();
    let o = twocover(&["analyze", path.to_str().unwrap(), "--omega", "all"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 5"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn homology_of_json_complex() {
    let dir = std::env::temp_dir().join(format!("twocover-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("circle.json");
    std::fs::write(&path, r#"{"ranks": [1, 1, 0], "d1": [[[-1, 1]]], "d2": [], "decorated": true}"#).unwrap();
    let o = twocover(&["homology", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("t=-1: H_0 = Z_2"), "{out}");
    assert!(out.contains("cover: H_1 = Z"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

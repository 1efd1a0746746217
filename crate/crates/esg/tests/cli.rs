//! End-to-end runs of the esg binary: exit codes, JSON outputs that parse
//! back, persisted catalogs, and independence from the thread count.

use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_esg");

const PATH3: &str = "vertices 3\nedge 0 1 +\nedge 1 2 +\n";
const PATH3_SWITCHED: &str = "vertices 3\nedge 0 1 -\nedge 1 2 -\n";
const CYCLE5_ALL_MINUS: &str = "vertices 5\nedge 0 1 -\nedge 1 2 -\nedge 2 3 -\nedge 3 4 -\nedge 0 4 -\n";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn json_stdout(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn spectra_reports_exact_minus2_for_the_all_minus_5_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c5.esg", CYCLE5_ALL_MINUS);
    let v = json_stdout(&run(&["spectra", &file]));
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["trichotomy_vs_minus2"], "equal");
    assert_eq!(v["exact_rational"], true);
    assert_eq!(v["smallest_eig"]["lo"], "-2/1");
    assert_eq!(v["smallest_eig"]["hi"], "-2/1");
}

#[test]
fn canon_and_equiv_agree_on_switched_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.esg", PATH3);
    let b = write(dir.path(), "b.esg", PATH3_SWITCHED);

    let key_a = json_stdout(&run(&["canon", &a]))["key"].clone();
    let key_b = json_stdout(&run(&["canon", &b]))["key"].clone();
    assert_eq!(key_a, key_b);

    let same = run(&["equiv", &a, &b]);
    assert_eq!(same.status.code(), Some(0));
    assert_eq!(json_stdout(&same)["equivalent"], true);

    let triangle = write(
        dir.path(),
        "t.esg",
        "vertices 3\nedge 0 1 +\nedge 1 2 +\nedge 0 2 +\n",
    );
    let different = run(&["equiv", &a, &triangle]);
    assert_eq!(different.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&different.stdout).unwrap();
    assert_eq!(v["equivalent"], false);
}

#[test]
fn classify_emits_certificate_and_reparsable_text() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p3.esg", PATH3);
    let v = json_stdout(&run(&["classify", &file]));
    assert_eq!(v["label"], "TreeLine");
    assert!(v["certificate"]["permutation"].is_array());
    assert!(v["certificate"]["switch_set"].is_array());
    assert!(v["m"].is_array());
    // the emitted representation graph re-parses under the multigraph
    // grammar (edge lines carry no sign and may repeat)
    let h_text = v["h_esg"].as_str().unwrap();
    let h = esg::multigraph::Multigraph::parse_esg(h_text).unwrap();
    assert_eq!(h.to_esg(), h_text);

    let rep = json_stdout(&run(&["represent", &file]));
    assert_eq!(rep["representable"], true);
}

#[test]
fn out_flag_writes_the_same_json_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p3.esg", PATH3);
    let out = dir.path().join("spectra.json");
    let output = run(&["spectra", &file, "--out", out.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    let from_file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(from_file["vertices"], 3);
}

#[test]
fn enumeration_catalog_is_thread_count_independent() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("t1");
    let out4 = dir.path().join("t4");
    let summary1 = json_stdout(&run(&[
        "enumerate-exceptional",
        "--max-vertices",
        "6",
        "--out",
        out1.to_str().unwrap(),
        "--threads",
        "1",
    ]));
    let summary4 = json_stdout(&run(&[
        "enumerate-exceptional",
        "--max-vertices",
        "6",
        "--out",
        out4.to_str().unwrap(),
        "--threads",
        "4",
    ]));
    assert_eq!(summary1, summary4);
    assert_eq!(summary1["summary"][0]["total_classes"], 32);
    assert_eq!(summary1["summary"][0]["unsigned_classes"], 20);

    let catalog1 = std::fs::read(out1.join("exceptional-6.jsonl")).unwrap();
    let catalog4 = std::fs::read(out4.join("exceptional-6.jsonl")).unwrap();
    assert_eq!(catalog1, catalog4);
    for line in String::from_utf8(catalog1).unwrap().lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["n"], 6);
        assert!(record["key"].is_string());
        assert_eq!(record["e8_lines"].as_array().unwrap().len(), 6);
    }
    let csv = std::fs::read_to_string(out1.join("summary.csv")).unwrap();
    assert_eq!(csv, "n,total_classes,unsigned_classes\n6,32,20\n");
}

#[test]
fn verify_campaigns_report_and_exit_zero() {
    let cycles = run(&["verify", "cycles", "--max-len", "5"]);
    assert_eq!(cycles.status.code(), Some(0));
    let v = json_stdout(&cycles);
    assert_eq!(v["campaign"], "cycle_dichotomy");
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    let families = run(&[
        "verify", "families", "--n", "4", "--k", "2", "--l", "2", "--threads", "2",
    ]);
    assert_eq!(families.status.code(), Some(0));
    assert_eq!(json_stdout(&families)["passed"], true);
}

#[test]
fn hoffman_build_and_eig_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "m3.esg", PATH3_SWITCHED);
    let built = json_stdout(&run(&["hoffman", "build", &file, "--parts", "0,1,2"]));
    assert_eq!(built["slim"], 3);
    assert_eq!(built["fat"], 1);
    assert_eq!(built["greater_than_minus3"], true);
    assert_eq!(built["special_esg"].as_str().unwrap(), PATH3_SWITCHED);

    // the emitted Hoffman text feeds straight back into `hoffman eig`
    let hg = write(dir.path(), "m3.hg", built["hoffman_text"].as_str().unwrap());
    let eig = json_stdout(&run(&["hoffman", "eig", &hg]));
    assert_eq!(eig["b_matrix"], built["b_matrix"]);
    assert_eq!(eig["char_poly"], built["char_poly"]);

    // a (+)-edge inside a part violates the partition conditions
    let plus = write(dir.path(), "p3.esg", PATH3);
    let bad = run(&["hoffman", "build", &plus, "--parts", "0,1;2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn bad_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = run(&["spectra", "/definitely/not/here.esg"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());

    let malformed = write(dir.path(), "bad.esg", "vertices 2\nedge 0 7 +\n");
    let parse = run(&["spectra", &malformed]);
    assert_eq!(parse.status.code(), Some(2));

    let unknown_flag = run(&["spectra", "--frobnicate"]);
    assert_eq!(unknown_flag.status.code(), Some(2));

    let bad_parts = write(dir.path(), "g.esg", PATH3);
    let parts = run(&["hoffman", "build", &bad_parts, "--parts", "0,x;1"]);
    assert_eq!(parts.status.code(), Some(2));
}

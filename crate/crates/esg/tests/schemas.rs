//! Every JSON document the binary emits validates against the schemas
//! shipped in schemas/, and the schemas are strict enough to reject
//! malformed documents.

use std::path::Path;
use std::process::Command;

use jsonschema::{Retrieve, Uri, Validator};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_esg");
const SCHEMA_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/schemas");

/// Resolves cross-schema `$ref`s by file name within schemas/.
struct SchemaDirRetriever;

impl Retrieve for SchemaDirRetriever {
    fn retrieve(
        &self,
        uri: &Uri<String>,
    ) -> Result<Value, Box<dyn std::error::Error + Send + Sync>> {
        let name = uri
            .path()
            .as_str()
            .rsplit('/')
            .next()
            .ok_or("empty schema reference")?;
        Ok(schema_value(name))
    }
}

const PATH3: &str = "vertices 3\nedge 0 1 +\nedge 1 2 +\n";
const K4_ALL_MINUS: &str =
    "vertices 4\nedge 0 1 -\nedge 0 2 -\nedge 0 3 -\nedge 1 2 -\nedge 1 3 -\nedge 2 3 -\n";
// a 6-vertex graph with no integral representation; any such graph works
const EXCEPTIONAL: &str = "vertices 6\nedge 0 2 -\nedge 0 3 -\nedge 0 4 -\nedge 0 5 -\nedge 1 3 -\nedge 1 4 -\nedge 1 5 -\nedge 2 3 +\nedge 2 4 +\nedge 2 5 +\nedge 3 4 +\nedge 3 5 +\nedge 4 5 +\n";

fn schema_value(name: &str) -> Value {
    let text = std::fs::read_to_string(format!("{SCHEMA_DIR}/{name}")).expect("schema ships");
    serde_json::from_str(&text).expect("schema is JSON")
}

fn validator(name: &str) -> Validator {
    jsonschema::options()
        .with_retriever(SchemaDirRetriever)
        .build(&schema_value(name))
        .expect("schema compiles")
}

fn check(v: &Validator, instance: &Value) {
    if let Err(error) = v.validate(instance) {
        panic!("schema violation: {error}\ninstance: {instance:#}");
    }
}

fn run_json(dir: &Path, inputs: &[(&str, &str)], args: &[&str]) -> Value {
    let mut full: Vec<String> = Vec::new();
    for arg in args {
        match inputs.iter().find(|(name, _)| name == arg) {
            Some((name, text)) => {
                let path = dir.join(name);
                std::fs::write(&path, text).unwrap();
                full.push(path.to_str().unwrap().to_owned());
            }
            None => full.push((*arg).to_owned()),
        }
    }
    let output = Command::new(BIN).args(&full).output().expect("binary runs");
    assert!(
        output.status.code().is_some_and(|c| c < 2),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn single_graph_reports_validate() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = [
        ("p3.esg", PATH3),
        ("k4m.esg", K4_ALL_MINUS),
        ("exc.esg", EXCEPTIONAL),
        ("empty.esg", "vertices 0\n"),
    ];

    let spectra = validator("spectra.schema.json");
    for file in ["p3.esg", "k4m.esg", "exc.esg", "empty.esg"] {
        check(&spectra, &run_json(dir.path(), &inputs, &["spectra", file]));
    }

    let canon = validator("canon.schema.json");
    check(&canon, &run_json(dir.path(), &inputs, &["canon", "p3.esg"]));

    let equiv = validator("equiv.schema.json");
    check(
        &equiv,
        &run_json(dir.path(), &inputs, &["equiv", "p3.esg", "k4m.esg"]),
    );

    let classification = validator("classification.schema.json");
    check(
        &classification,
        &run_json(dir.path(), &inputs, &["classify", "p3.esg"]),
    );
    check(
        &classification,
        &run_json(dir.path(), &inputs, &["classify", "exc.esg"]),
    );

    let represent = validator("represent.schema.json");
    check(
        &represent,
        &run_json(dir.path(), &inputs, &["represent", "p3.esg"]),
    );
    check(
        &represent,
        &run_json(dir.path(), &inputs, &["represent", "exc.esg"]),
    );
}

#[test]
fn campaign_and_hoffman_reports_validate() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = [("m3.esg", "vertices 3\nedge 0 1 -\nedge 1 2 -\n")];

    let report = validator("report.schema.json");
    check(
        &report,
        &run_json(dir.path(), &inputs, &["verify", "cycles", "--max-len", "4"]),
    );
    check(
        &report,
        &run_json(
            dir.path(),
            &inputs,
            &["verify", "families", "--n", "3", "--k", "1", "--l", "1"],
        ),
    );

    let hoffman = validator("hoffman-eig.schema.json");
    let built = run_json(
        dir.path(),
        &inputs,
        &["hoffman", "build", "m3.esg", "--parts", "0,1,2"],
    );
    check(&hoffman, &built);
    let hg = dir.path().join("m3.hg");
    std::fs::write(&hg, built["hoffman_text"].as_str().unwrap()).unwrap();
    let eig_out = Command::new(BIN)
        .args(["hoffman", "eig", hg.to_str().unwrap()])
        .output()
        .unwrap();
    let eig: Value = serde_json::from_slice(&eig_out.stdout).unwrap();
    check(&hoffman, &eig);
}

#[test]
fn enumeration_outputs_validate() {
    let dir = tempfile::tempdir().unwrap();
    let summary = validator("enumeration-summary.schema.json");
    let record = validator("catalog-record.schema.json");

    // inline mode carries the full catalogs
    let inline = run_json(dir.path(), &[], &["enumerate-exceptional", "--max-vertices", "6"]);
    check(&summary, &inline);

    // directory mode writes JSONL records and a bare summary
    let out = dir.path().join("catalogs");
    let written = run_json(
        dir.path(),
        &[],
        &[
            "enumerate-exceptional",
            "--max-vertices",
            "6",
            "--out",
            out.to_str().unwrap(),
        ],
    );
    check(&summary, &written);
    let jsonl = std::fs::read_to_string(out.join("exceptional-6.jsonl")).unwrap();
    for line in jsonl.lines() {
        check(&record, &serde_json::from_str(line).unwrap());
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let spectra = validator("spectra.schema.json");
    let mut bad = serde_json::json!({
        "vertices": 3,
        "char_poly": ["0", "-2", "0", "1"],
        "smallest_eig": {"lo": "-3/2", "hi": "-3/2"},
        "exact_rational": true,
        "trichotomy_vs_minus2": "greater",
    });
    assert!(spectra.is_valid(&bad));
    bad["trichotomy_vs_minus2"] = "sideways".into();
    assert!(!spectra.is_valid(&bad));
    bad["trichotomy_vs_minus2"] = "equal".into();
    bad["smallest_eig"]["lo"] = "-1.5".into();
    assert!(!spectra.is_valid(&bad));

    let record = validator("catalog-record.schema.json");
    let mut rec = serde_json::json!({
        "n": 6,
        "key": "06:000000000000011",
        "esg_text": "vertices 6\n",
        "unsigned": true,
        "e8_lines": [0, 1, 2, 10, 18, 26],
    });
    assert!(record.is_valid(&rec));
    rec["e8_lines"] = serde_json::json!([0, 1, 2, 10, 18, 200]);
    assert!(!record.is_valid(&rec));
    rec["e8_lines"] = serde_json::json!([0, 1, 2, 10, 18]);
    assert!(!record.is_valid(&rec));
}

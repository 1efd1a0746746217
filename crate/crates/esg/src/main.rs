//! Batch command-line surface: parse signed-graph files, print exact
//! spectral reports as JSON, run enumeration and verification campaigns,
//! and persist catalogs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use esg::classify::classify;
use esg::enumerate::{catalog_jsonl, exceptional_catalogs, summary_csv};
use esg::graph::SignedGraph;
use esg::hoffman::{build_from_partition, HoffmanGraph};
use esg::output::{
    canon_json, classification_json, equiv_json, hoffman_eig_json, represent_json, spectra_json,
};
use esg::verify::{
    verify_hoffman_conjecture, verify_integral_rep_theorem, verify_lemma_cycle,
    verify_minus2_families, verify_theorem11, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "esg",
    about = "Exact spectral classification of edge-signed graphs around smallest eigenvalue -2",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, certified smallest-eigenvalue interval,
    /// and the exact trichotomy against -2
    Spectra {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical switching-class key
    Canon {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide switching equivalence of two graphs (exit 1 when distinct)
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural label with representation and switching certificate
    Classify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-valued integral representation, if one exists
    Represent {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate exceptional switching classes up to a vertex count
    #[command(name = "enumerate-exceptional")]
    EnumerateExceptional {
        #[arg(long, value_parser = clap::value_parser!(u64).range(6..=8))]
        max_vertices: u64,
        /// Directory for per-size JSONL catalogs and the summary CSV
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Exhaustive verification campaigns
    Verify {
        #[command(subcommand)]
        campaign: VerifyCampaign,
    },
    /// Build and examine graphs with fat vertices
    Hoffman {
        #[command(subcommand)]
        action: HoffmanAction,
    },
}

#[derive(Subcommand)]
enum VerifyCampaign {
    /// End-edge modification on tree line graphs strictly lowers the
    /// smallest eigenvalue but keeps it above -2
    Hoffman {
        #[arg(long)]
        max_tree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// The diagonal-modification trichotomy over the full catalog
    Theorem11 {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Signed cycles: above -2 exactly for an odd number of (+)-edges
    Cycles {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// The -2 eigenvector identities of the obstruction families
    Families {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Qualifying diagonal modifications force a D-system embedding
    Integral {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Subcommand)]
enum HoffmanAction {
    /// Build the fat-vertex graph over a signed graph from a partition
    /// ("0,2;1": parts separated by semicolons, vertices by commas)
    Build {
        file: PathBuf,
        #[arg(long)]
        parts: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// B matrix, its characteristic polynomial, and the -3 bound
    Eig {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    SignedGraph::parse_esg(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<(), String> {
    let text = format!("{:#}\n", value);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn set_threads(threads: Option<usize>) -> Result<(), String> {
    if let Some(k) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| format!("cannot size thread pool: {e}"))?;
    }
    Ok(())
}

fn parse_parts(spec: &str) -> Result<Vec<Vec<usize>>, String> {
    spec.split(';')
        .map(|part| {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad vertex index {tok:?} in --parts"))
                })
                .collect()
        })
        .collect()
}

fn report_exit(report: &VerificationReport, out: Option<&Path>) -> Result<u8, String> {
    emit(&report.to_json(), out)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_enumeration(
    max_vertices: usize,
    out: Option<&Path>,
) -> Result<u8, String> {
    let catalogs = exceptional_catalogs(max_vertices).map_err(|e| e.to_string())?;
    let rows: Vec<(usize, usize, usize)> = catalogs
        .iter()
        .map(|(n, entries)| {
            (
                *n,
                entries.len(),
                entries.iter().filter(|e| e.contains_unsigned()).count(),
            )
        })
        .collect();
    let summary: Vec<serde_json::Value> = rows
        .iter()
        .map(|&(n, total, unsigned)| {
            serde_json::json!({"n": n, "total_classes": total, "unsigned_classes": unsigned})
        })
        .collect();
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            for (n, entries) in &catalogs {
                let path = dir.join(format!("exceptional-{n}.jsonl"));
                std::fs::write(&path, catalog_jsonl(*n, entries))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let csv_path = dir.join("summary.csv");
            std::fs::write(&csv_path, summary_csv(&rows))
                .map_err(|e| format!("cannot write {}: {e}", csv_path.display()))?;
            emit(&serde_json::json!({ "summary": summary }), None)?;
        }
        None => {
            let records: serde_json::Map<String, serde_json::Value> = catalogs
                .iter()
                .map(|(n, entries)| {
                    let lines: Vec<serde_json::Value> = catalog_jsonl(*n, entries)
                        .lines()
                        .map(|l| serde_json::from_str(l).expect("own serialization"))
                        .collect();
                    (n.to_string(), serde_json::Value::Array(lines))
                })
                .collect();
            emit(
                &serde_json::json!({ "summary": summary, "catalogs": records }),
                None,
            )?;
        }
    }
    Ok(0)
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectra { file, out } => {
            let g = read_graph(&file)?;
            emit(&spectra_json(&g), out.as_deref())?;
            Ok(0)
        }
        Command::Canon { file, out } => {
            let g = read_graph(&file)?;
            if g.n() > esg::graph::MAX_CANON_VERTICES {
                return Err(format!(
                    "canonical keys support at most {} vertices",
                    esg::graph::MAX_CANON_VERTICES
                ));
            }
            emit(&canon_json(&g), out.as_deref())?;
            Ok(0)
        }
        Command::Equiv { a, b, out } => {
            let ga = read_graph(&a)?;
            let gb = read_graph(&b)?;
            let equivalent = ga
                .switching_equivalent(&gb)
                .map_err(|e| e.to_string())?;
            emit(&equiv_json(&ga, &gb, equivalent), out.as_deref())?;
            Ok(if equivalent { 0 } else { 1 })
        }
        Command::Classify { file, out } => {
            let g = read_graph(&file)?;
            let result = classify(&g).map_err(|e| e.to_string())?;
            emit(&classification_json(&result), out.as_deref())?;
            Ok(0)
        }
        Command::Represent { file, out } => {
            let g = read_graph(&file)?;
            let rep = esg::classify::integral_representation(&g)
                .map_err(|e| e.to_string())?;
            let value = represent_json(rep.as_ref()).map_err(|e| e.to_string())?;
            emit(&value, out.as_deref())?;
            Ok(0)
        }
        Command::EnumerateExceptional {
            max_vertices,
            out,
            threads,
        } => {
            set_threads(threads)?;
            run_enumeration(max_vertices as usize, out.as_deref())
        }
        Command::Verify { campaign } => {
            let (report, out) = match campaign {
                VerifyCampaign::Hoffman {
                    max_tree,
                    out,
                    threads,
                } => {
                    set_threads(threads)?;
                    (
                        verify_hoffman_conjecture(max_tree).map_err(|e| e.to_string())?,
                        out,
                    )
                }
                VerifyCampaign::Theorem11 {
                    max_size,
                    out,
                    threads,
                } => {
                    set_threads(threads)?;
                    (verify_theorem11(max_size).map_err(|e| e.to_string())?, out)
                }
                VerifyCampaign::Cycles {
                    max_len,
                    out,
                    threads,
                } => {
                    set_threads(threads)?;
                    (verify_lemma_cycle(max_len).map_err(|e| e.to_string())?, out)
                }
                VerifyCampaign::Families {
                    n,
                    k,
                    l,
                    out,
                    threads,
                } => {
                    set_threads(threads)?;
                    (
                        verify_minus2_families(n, k, l).map_err(|e| e.to_string())?,
                        out,
                    )
                }
                VerifyCampaign::Integral {
                    max_vertices,
                    out,
                    threads,
                } => {
                    set_threads(threads)?;
                    (
                        verify_integral_rep_theorem(max_vertices).map_err(|e| e.to_string())?,
                        out,
                    )
                }
            };
            report_exit(&report, out.as_deref())
        }
        Command::Hoffman { action } => match action {
            HoffmanAction::Build { file, parts, out } => {
                let g = read_graph(&file)?;
                let partition = parse_parts(&parts)?;
                let h = build_from_partition(&g, &partition).map_err(|e| e.to_string())?;
                let mut value = hoffman_eig_json(&h);
                value["hoffman_text"] = serde_json::Value::String(h.to_text());
                emit(&value, out.as_deref())?;
                Ok(0)
            }
            HoffmanAction::Eig { file, out } => {
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
                let h = HoffmanGraph::parse(&text).map_err(|e| e.to_string())?;
                emit(&hoffman_eig_json(&h), out.as_deref())?;
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

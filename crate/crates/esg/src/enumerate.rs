//! Enumeration of switching classes realizable by root lines in E8,
//! and of the exceptional classes among them (those with no two-valued
//! integral representation).
//!
//! A class is recorded by a set of line indices into the ordered 120-line
//! list. Signs on the lines are immaterial: flipping the sign of one line
//! conjugates the Gram matrix by a diagonal +-1 matrix, which is exactly a
//! switching. Growth is level-synchronous: every (k+1)-set considered
//! extends a stored k-set representative by one line, keeping the Gram
//! graph connected and the Gram matrix nonsingular (a Gram matrix of
//! norm-2 lines is positive semidefinite, so nonsingular means positive
//! definite, i.e. smallest adjacency eigenvalue above -2).

use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

use crate::classify::integral_representation;
use crate::graph::{SignedGraph, SwitchingKey};
use crate::lines::{LineSystem, SystemKind};
use crate::matrix::det_i128;

/// E8 holds at most 8 pairwise independent lines.
pub const GROWTH_MAX_VERTICES: usize = 8;
/// Classes below this size always admit an integral representation.
pub const EXCEPTIONAL_MIN_VERTICES: usize = 6;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum EnumError {
    #[error("requested size {0} outside the supported range {1}..={2}")]
    SizeOutOfRange(usize, usize, usize),
}

/// One switching class, carried by a concrete set of E8 lines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassEntry {
    key: SwitchingKey,
    graph: SignedGraph,
    lines: Vec<u8>,
    unsigned: bool,
}

impl ClassEntry {
    pub fn key(&self) -> &SwitchingKey {
        &self.key
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    /// Indices into the ordered E8 line list whose Gram matrix, with all
    /// signs +1, is A + 2I of the representative graph.
    pub fn lines(&self) -> &[u8] {
        &self.lines
    }

    /// Whether the class contains an all-plus member.
    pub fn contains_unsigned(&self) -> bool {
        self.unsigned
    }
}

fn gram_rows(lines: &[u8], sys: &LineSystem) -> Vec<Vec<i128>> {
    let n = lines.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        2
                    } else {
                        sys.inner_product(lines[i] as usize, lines[j] as usize) as i128
                    }
                })
                .collect()
        })
        .collect()
}

fn lines_connected(lines: &[u8], sys: &LineSystem) -> bool {
    let n = lines.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && sys.inner_product(lines[u] as usize, lines[v] as usize) != 0 {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

fn graph_of_lines(lines: &[u8], sys: &LineSystem) -> SignedGraph {
    let n = lines.len();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match sys.inner_product(lines[i] as usize, lines[j] as usize) {
                1 => plus.push((i, j)),
                -1 => minus.push((i, j)),
                _ => {}
            }
        }
    }
    SignedGraph::new(n, &plus, &minus).expect("gram graph edges are valid")
}

fn entry_for(lines: Vec<u8>, sys: &LineSystem) -> ClassEntry {
    let graph = graph_of_lines(&lines, sys);
    let key = graph.canonical_key().expect("at most 8 vertices");
    let unsigned = graph.contains_unsigned_member();
    ClassEntry {
        key,
        graph,
        lines,
        unsigned,
    }
}

fn extensions(entry: &ClassEntry, sys: &LineSystem) -> Vec<ClassEntry> {
    let mut out = Vec::new();
    for cand in 0..sys.len() as u8 {
        if entry.lines.contains(&cand) {
            continue;
        }
        let mut lines = entry.lines.clone();
        let pos = lines.partition_point(|&l| l < cand);
        lines.insert(pos, cand);
        if !lines_connected(&lines, sys) {
            continue;
        }
        if det_i128(gram_rows(&lines, sys)) == 0 {
            continue;
        }
        out.push(entry_for(lines, sys));
    }
    out
}

/// Merge candidates into one representative per switching class. The
/// representative is the minimum line set over all candidates with the
/// same canonical key, so the result does not depend on the order in
/// which candidates arrive (and hence not on the number of threads).
fn dedup(candidates: Vec<ClassEntry>) -> Vec<ClassEntry> {
    let mut classes: HashMap<SwitchingKey, ClassEntry> = HashMap::new();
    for cand in candidates {
        classes
            .entry(cand.key.clone())
            .and_modify(|held| {
                if cand.lines < held.lines {
                    *held = cand.clone();
                }
            })
            .or_insert(cand);
    }
    let mut out: Vec<ClassEntry> = classes.into_values().collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

fn grow_level(frontier: &[ClassEntry], sys: &LineSystem) -> Vec<ClassEntry> {
    let candidates: Vec<ClassEntry> = frontier
        .par_iter()
        .flat_map_iter(|entry| extensions(entry, sys))
        .collect();
    dedup(candidates)
}

/// All switching classes of connected signed graphs on 1..=`upto`
/// vertices realizable by E8 lines, one level per entry of the result
/// (index k holds the classes on k+1 vertices), each level sorted by
/// canonical key.
pub fn grow_classes(upto: usize) -> Result<Vec<Vec<ClassEntry>>, EnumError> {
    if upto == 0 || upto > GROWTH_MAX_VERTICES {
        return Err(EnumError::SizeOutOfRange(upto, 1, GROWTH_MAX_VERTICES));
    }
    let sys = LineSystem::generate(SystemKind::E8).expect("E8 generates");
    let singles: Vec<ClassEntry> = (0..sys.len() as u8)
        .map(|l| entry_for(vec![l], &sys))
        .collect();
    let mut levels = vec![dedup(singles)];
    while levels.len() < upto {
        let next = grow_level(levels.last().expect("nonempty"), &sys);
        levels.push(next);
    }
    Ok(levels)
}

fn is_exceptional(entry: &ClassEntry) -> bool {
    integral_representation(&entry.graph)
        .expect("frontier entries are connected with smallest eigenvalue above -2")
        .is_none()
}

fn exceptional_filter(level: Vec<ClassEntry>) -> Vec<ClassEntry> {
    let mut out: Vec<ClassEntry> = level
        .into_par_iter()
        .filter(is_exceptional)
        .collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

/// The exceptional switching classes on `n` vertices: realizable by E8
/// lines but admitting no two-valued integral representation. Sorted by
/// canonical key.
pub fn enumerate_exceptional(n: usize) -> Result<Vec<ClassEntry>, EnumError> {
    if !(EXCEPTIONAL_MIN_VERTICES..=GROWTH_MAX_VERTICES).contains(&n) {
        return Err(EnumError::SizeOutOfRange(
            n,
            EXCEPTIONAL_MIN_VERTICES,
            GROWTH_MAX_VERTICES,
        ));
    }
    let levels = grow_classes(n)?;
    Ok(exceptional_filter(
        levels.into_iter().nth(n - 1).expect("level exists"),
    ))
}

/// One exceptional catalog per size from 6 to `max_n`, grown in a single
/// pass.
pub fn exceptional_catalogs(max_n: usize) -> Result<Vec<(usize, Vec<ClassEntry>)>, EnumError> {
    if !(EXCEPTIONAL_MIN_VERTICES..=GROWTH_MAX_VERTICES).contains(&max_n) {
        return Err(EnumError::SizeOutOfRange(
            max_n,
            EXCEPTIONAL_MIN_VERTICES,
            GROWTH_MAX_VERTICES,
        ));
    }
    let levels = grow_classes(max_n)?;
    Ok(levels
        .into_iter()
        .enumerate()
        .filter(|(idx, _)| idx + 1 >= EXCEPTIONAL_MIN_VERTICES)
        .map(|(idx, level)| (idx + 1, exceptional_filter(level)))
        .collect())
}

/// The same catalog, but growing levels 7 and 8 from exceptional parents
/// only: every exceptional class on n+1 vertices extends an exceptional
/// class on n vertices, so the full frontier is not needed past size 6.
pub fn enumerate_exceptional_from_parents(n: usize) -> Result<Vec<ClassEntry>, EnumError> {
    if !(EXCEPTIONAL_MIN_VERTICES..=GROWTH_MAX_VERTICES).contains(&n) {
        return Err(EnumError::SizeOutOfRange(
            n,
            EXCEPTIONAL_MIN_VERTICES,
            GROWTH_MAX_VERTICES,
        ));
    }
    let sys = LineSystem::generate(SystemKind::E8).expect("E8 generates");
    let mut level = enumerate_exceptional(EXCEPTIONAL_MIN_VERTICES)?;
    for _ in EXCEPTIONAL_MIN_VERTICES..n {
        level = exceptional_filter(grow_level(&level, &sys));
    }
    Ok(level)
}

/// One JSON object per class, one class per line.
pub fn catalog_jsonl(n: usize, entries: &[ClassEntry]) -> String {
    let mut out = String::new();
    for entry in entries {
        let record = serde_json::json!({
            "n": n,
            "key": entry.key.hex(),
            "esg_text": entry.graph.to_esg(),
            "unsigned": entry.unsigned,
            "e8_lines": entry.lines,
        });
        out.push_str(&record.to_string());
        out.push('\n');
    }
    out
}

/// Per-size totals as CSV: size, all classes, classes with an all-plus
/// member.
pub fn summary_csv(rows: &[(usize, usize, usize)]) -> String {
    let mut out = String::from("n,total_classes,unsigned_classes\n");
    for &(n, total, unsigned) in rows {
        out.push_str(&format!("{n},{total},{unsigned}\n"));
    }
    out
}

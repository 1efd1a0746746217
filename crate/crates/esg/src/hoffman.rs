//! Graphs with two vertex kinds, slim and fat, where the fat vertices
//! form an independent set. The special matrix B = A_slim - C C^T (C the
//! slim-by-fat incidence) drives the smallest-eigenvalue theory: when its
//! off-diagonal entries stay in {0, +1, -1} they define a signed graph on
//! the slim vertices, and when every slim vertex has exactly one fat
//! neighbor the whole spectrum of B is the signed graph's spectrum
//! shifted down by one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;
use crate::spectra::{shifted_definiteness, Definiteness};

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum HoffmanError {
    #[error("vertex index {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("fat vertices {0} and {1} may not be adjacent")]
    FatFatEdge(usize, usize),
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("special matrix entry at ({0}, {1}) falls outside 0, +1, -1")]
    SpecialEntryOutOfRange(usize, usize),
    #[error("parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("(+)-edge ({0}, {1}) joins two vertices of one part")]
    PlusEdgeInsidePart(usize, usize),
    #[error("(-)-edge ({0}, {1}) crosses two parts")]
    MinusEdgeAcrossParts(usize, usize),
}

/// An unsigned graph on slim vertices 0..slim and fat vertices
/// slim..slim+fat, with no edge between two fat vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoffmanGraph {
    slim: usize,
    fat: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl HoffmanGraph {
    pub fn new(
        slim: usize,
        fat: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, HoffmanError> {
        let n = slim + fat;
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(HoffmanError::VertexOutOfRange(a.max(b), n));
            }
            if a >= slim && b >= slim {
                return Err(HoffmanError::FatFatEdge(a.min(b), a.max(b)));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(HoffmanGraph { slim, fat, edges: set })
    }

    pub fn slim(&self) -> usize {
        self.slim
    }

    pub fn fat(&self) -> usize {
        self.fat
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Fat neighbors of a slim vertex.
    pub fn fat_degree(&self, v: usize) -> usize {
        (self.slim..self.slim + self.fat)
            .filter(|&f| self.is_edge(v, f))
            .count()
    }

    /// B = A_slim - C C^T: entry (u, v) counts slim adjacency minus the
    /// number of common fat neighbors; the diagonal is minus the fat
    /// degree.
    pub fn b_matrix(&self) -> IntMatrix {
        let k = self.slim;
        let mut b = IntMatrix::zeros(k, k);
        for u in 0..k {
            for v in 0..k {
                let common = (self.slim..self.slim + self.fat)
                    .filter(|&f| self.is_edge(u, f) && self.is_edge(v, f))
                    .count() as i64;
                let adj = if u != v && self.is_edge(u, v) { 1 } else { 0 };
                b.set(u, v, BigInt::from(adj - common));
            }
        }
        b
    }

    /// The signed graph read off the off-diagonal of B, defined whenever
    /// those entries stay two-valued.
    pub fn special_graph(&self) -> Result<SignedGraph, HoffmanError> {
        let b = self.b_matrix();
        let k = self.slim;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                let e = b.get(u, v);
                if e == &BigInt::from(1) {
                    plus.push((u, v));
                } else if e == &BigInt::from(-1) {
                    minus.push((u, v));
                } else if e != &BigInt::from(0) {
                    return Err(HoffmanError::SpecialEntryOutOfRange(u, v));
                }
            }
        }
        Ok(SignedGraph::new(k, &plus, &minus).expect("validated entries"))
    }

    /// Whether the smallest eigenvalue of B exceeds `bound`. Exact: with
    /// bound p/q in lowest terms, q > 0, this tests q B - p I for
    /// positive definiteness.
    pub fn smallest_eig_gt(&self, bound: &BigRational) -> bool {
        let b = self.b_matrix();
        let k = self.slim;
        if k == 0 {
            return true;
        }
        let q = bound.denom();
        debug_assert!(q.is_positive());
        let p = bound.numer();
        let mut scaled = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let mut e = b.get(i, j) * q;
                if i == j {
                    e -= p;
                }
                scaled.set(i, j, e);
            }
        }
        shifted_definiteness(&scaled, &BigInt::from(0)) == Definiteness::PositiveDefinite
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "slim {}", self.slim);
        let _ = writeln!(s, "fat {}", self.fat);
        for (a, b) in &self.edges {
            let _ = writeln!(s, "edge {a} {b}");
        }
        s
    }

    /// Parse the `slim <k>` / `fat <l>` / `edge <a> <b>` text form. Fat
    /// vertices are indexed after the slim ones. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, HoffmanError> {
        let mut slim: Option<usize> = None;
        let mut fat: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().expect("nonempty line");
            let mut take_count = |name: &str| -> Result<usize, HoffmanError> {
                tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| {
                        HoffmanError::Malformed(lineno, format!("expected `{name} <count>`"))
                    })
            };
            match head {
                "slim" => {
                    if slim.replace(take_count("slim")?).is_some() {
                        return Err(HoffmanError::Malformed(
                            lineno,
                            "repeated `slim` header".into(),
                        ));
                    }
                }
                "fat" => {
                    if fat.replace(take_count("fat")?).is_some() {
                        return Err(HoffmanError::Malformed(
                            lineno,
                            "repeated `fat` header".into(),
                        ));
                    }
                }
                "edge" => {
                    let a = take_count("edge")?;
                    let b = take_count("edge")?;
                    edges.push((a, b));
                }
                other => {
                    return Err(HoffmanError::Malformed(
                        lineno,
                        format!("unknown directive `{other}`"),
                    ));
                }
            }
            if tokens.next().is_some() {
                return Err(HoffmanError::Malformed(lineno, "trailing tokens".into()));
            }
        }
        let slim = slim.ok_or(HoffmanError::Malformed(0, "missing `slim` header".into()))?;
        let fat = fat.ok_or(HoffmanError::Malformed(0, "missing `fat` header".into()))?;
        HoffmanGraph::new(slim, fat, &edges)
    }
}

/// Whether some vertex partition turns `g` into the special graph of a
/// graph with one fat vertex per part: no (+)-edge may join two vertices
/// lying in a common (-)-component. Equivalently, `g` has no cycle whose
/// edges are all (-) except exactly one.
pub fn admits_fat_partition(g: &SignedGraph) -> bool {
    let comp = minus_components(g);
    g.plus_edges().iter().all(|&(u, v)| comp[u] != comp[v])
}

fn minus_components(g: &SignedGraph) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if comp[v] == usize::MAX && g.sign(u, v) == -1 {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// The coarsest candidate partition: one part per (-)-component.
pub fn minus_component_partition(g: &SignedGraph) -> Vec<Vec<usize>> {
    let comp = minus_components(g);
    let count = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        parts[c].push(v);
    }
    parts
}

/// Build the graph whose special graph is `g`, from a partition of the
/// vertices: slim vertices are those of `g`, one fat vertex per part is
/// joined to that part, slim edges are the (+)-edges of `g` together with
/// the same-part pairs that are not (-)-adjacent. Each (+)-edge must
/// cross parts and each (-)-edge must stay inside one.
pub fn build_from_partition(
    g: &SignedGraph,
    parts: &[Vec<usize>],
) -> Result<HoffmanGraph, HoffmanError> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (p, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(HoffmanError::NotAPartition(format!("part {p} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(HoffmanError::VertexOutOfRange(v, n));
            }
            if owner[v] != usize::MAX {
                return Err(HoffmanError::NotAPartition(format!(
                    "vertex {v} appears twice"
                )));
            }
            owner[v] = p;
        }
    }
    if let Some(v) = owner.iter().position(|&p| p == usize::MAX) {
        return Err(HoffmanError::NotAPartition(format!("vertex {v} unassigned")));
    }
    for &(u, v) in g.plus_edges() {
        if owner[u] == owner[v] {
            return Err(HoffmanError::PlusEdgeInsidePart(u, v));
        }
    }
    for &(u, v) in g.minus_edges() {
        if owner[u] != owner[v] {
            return Err(HoffmanError::MinusEdgeAcrossParts(u, v));
        }
    }
    let mut edges: Vec<(usize, usize)> = g.plus_edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] == owner[v] && g.sign(u, v) == 0 {
                edges.push((u, v));
            }
        }
    }
    for (v, &p) in owner.iter().enumerate() {
        edges.push((v, n + p));
    }
    let h = HoffmanGraph::new(n, parts.len(), &edges)?;
    debug_assert_eq!(h.special_graph().expect("two-valued by construction"), *g);
    Ok(h)
}

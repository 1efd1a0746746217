//! Multigraphs with edge multiplicity up to 2, free-tree and unicyclic
//! enumeration, incidence matrices, and isomorphism-class canonical codes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::ParseError;
use crate::matrix::IntMatrix;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum MultigraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("edge {{{0}, {1}}} has multiplicity above 2")]
    MultiplicityTooHigh(usize, usize),
    #[error("vertex count {0} outside supported range {1}..={2}")]
    BoundExceeded(usize, usize, usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("oriented line-graph identity requires a simple graph")]
    ParallelEdgesUnsupported,
}

/// Undirected multigraph; parallel pairs appear twice in the sorted edge
/// list. Immutable after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// Build from an edge list; a pair listed twice is a double edge, three
    /// or more listings are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, MultigraphError> {
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(MultigraphError::LoopEdge(u));
            }
            if u >= n {
                return Err(MultigraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(MultigraphError::VertexOutOfRange(v, n));
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        for w in list.windows(3) {
            if w[0] == w[2] {
                return Err(MultigraphError::MultiplicityTooHigh(w[0].0, w[0].1));
            }
        }
        Ok(Multigraph { n, edges: list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges with multiplicity: parallel pairs appear twice, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Distinct underlying edges.
    pub fn simple_edges(&self) -> Vec<(usize, usize)> {
        let mut out = self.edges.clone();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = norm(u, v);
        self.edges.iter().filter(|&&x| x == e).count()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_simple() && self.is_connected() && self.edges.len() + 1 == self.n
    }

    /// 2-coloring over the underlying simple graph, or None when an odd
    /// cycle exists. Parallel edges form even cycles and never obstruct.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.simple_edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Vertices of the unique cycle in order, when the graph has exactly one
    /// cycle (a doubled edge counts as a 2-cycle). None for forests or
    /// graphs with several independent cycles.
    pub fn unique_cycle(&self) -> Option<Vec<usize>> {
        if !self.is_connected() || self.edges.len() != self.n {
            return None;
        }
        // exactly one independent cycle; peel leaves to expose it
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        let mut alive = vec![true; self.n];
        while let Some(u) = queue.pop() {
            alive[u] = false;
            for &v in &adj[u] {
                if alive[v] {
                    deg[v] -= 1;
                    if deg[v] == 1 {
                        queue.push(v);
                    }
                }
            }
        }
        let cycle_vertices: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        if cycle_vertices.is_empty() {
            return None;
        }
        if cycle_vertices.len() == 2 {
            return Some(cycle_vertices);
        }
        // walk around the cycle
        let start = cycle_vertices[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = *adj[start].iter().find(|&&v| alive[v])?;
        while cur != start {
            order.push(cur);
            let next = *adj[cur]
                .iter()
                .find(|&&v| alive[v] && v != prev)
                .expect("cycle continues");
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Relabel vertices: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self.edges.iter().map(|&(u, v)| norm(perm[u], perm[v])).collect();
        edges.sort_unstable();
        Multigraph { n: self.n, edges }
    }

    /// Canonical byte code of the isomorphism class (vertex-incremental
    /// minimal encoding over all vertex orders; entries are multiplicities).
    pub fn canonical_code(&self) -> Vec<u8> {
        canonical_multigraph_code(self)
    }

    /// Incidence matrix with one +1 and one -1 per column, columns in edge
    /// order. With `bipartite_orientation`, all +1 entries lie in one color
    /// class, which makes B^T B = A(line graph) + 2I hold with all-(+)
    /// signs; that identity needs simple graphs, so parallel edges are
    /// rejected in that mode.
    pub fn oriented_incidence(
        &self,
        bipartite_orientation: bool,
    ) -> Result<IntMatrix, MultigraphError> {
        let mut m = IntMatrix::zeros(self.n, self.edges.len());
        if bipartite_orientation {
            if !self.is_simple() {
                return Err(MultigraphError::ParallelEdgesUnsupported);
            }
            let color = self.bipartition().ok_or(MultigraphError::NotBipartite)?;
            for (j, &(u, v)) in self.edges.iter().enumerate() {
                let (from, to) = if color[u] == 0 { (u, v) } else { (v, u) };
                m.set(from, j, BigInt::from(1));
                m.set(to, j, BigInt::from(-1));
            }
        } else {
            for (j, &(u, v)) in self.edges.iter().enumerate() {
                m.set(u, j, BigInt::from(1));
                m.set(v, j, BigInt::from(-1));
            }
        }
        Ok(m)
    }

    /// Unoriented incidence: column e_u + e_v per edge, columns in edge
    /// order.
    pub fn unoriented_incidence(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            m.set(u, j, BigInt::from(1));
            m.set(v, j, BigInt::from(1));
        }
        m
    }

    /// Serialize in the `.esg` multigraph grammar.
    pub fn to_esg(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.n);
        let mut i = 0;
        while i < self.edges.len() {
            let (u, v) = self.edges[i];
            if i + 1 < self.edges.len() && self.edges[i + 1] == (u, v) {
                let _ = writeln!(out, "edge {} {} *2", u, v);
                i += 2;
            } else {
                let _ = writeln!(out, "edge {} {}", u, v);
                i += 1;
            }
        }
        out
    }

    /// Parse the `.esg` multigraph grammar: `vertices <n>` then lines
    /// `edge <u> <v>` or `edge <u> <v> *2`, with comments and blank lines as
    /// in the signed format. Repeating a pair (or `*2` plus a repeat) that
    /// exceeds multiplicity 2 is an error.
    pub fn parse_esg(text: &str) -> Result<Multigraph, ParseError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("vertices") => {
                    if n.is_some() {
                        return Err(ParseError::Malformed(
                            lineno,
                            "repeated `vertices` header".into(),
                        ));
                    }
                    let count = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| {
                            ParseError::Malformed(lineno, "expected `vertices <n>`".into())
                        })?;
                    if parts.next().is_some() {
                        return Err(ParseError::Malformed(
                            lineno,
                            "trailing tokens after vertex count".into(),
                        ));
                    }
                    n = Some(count);
                }
                Some("edge") => {
                    let n = n.ok_or(ParseError::ExpectedHeader(lineno))?;
                    let bad = || {
                        ParseError::Malformed(
                            lineno,
                            "expected `edge <u> <v>` or `edge <u> <v> *2`".into(),
                        )
                    };
                    let u = parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                    let v = parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                    let mult = match parts.next() {
                        None => 1,
                        Some("*2") => 2,
                        Some(_) => return Err(bad()),
                    };
                    if parts.next().is_some() {
                        return Err(bad());
                    }
                    if u >= v {
                        return Err(ParseError::Malformed(
                            lineno,
                            format!("edge endpoints must satisfy u < v, got {} {}", u, v),
                        ));
                    }
                    if v >= n {
                        return Err(ParseError::Malformed(
                            lineno,
                            format!("vertex {} out of range for {} vertices", v, n),
                        ));
                    }
                    let existing = edges.iter().filter(|&&e| e == (u, v)).count();
                    if existing + mult > 2 {
                        return Err(ParseError::Malformed(
                            lineno,
                            format!("edge {{{}, {}}} exceeds multiplicity 2", u, v),
                        ));
                    }
                    for _ in 0..mult {
                        edges.push((u, v));
                    }
                }
                Some(other) => {
                    return Err(ParseError::Malformed(
                        lineno,
                        format!("unknown directive `{}`", other),
                    ))
                }
                None => unreachable!("blank lines are skipped"),
            }
        }
        let n = n.ok_or(ParseError::MissingHeader)?;
        edges.sort_unstable();
        Ok(Multigraph { n, edges })
    }
}

/// Vertex-incremental minimal code over all vertex orders; the byte for the
/// pair (placed p, placed d) is the multiplicity. Equal codes iff isomorphic.
fn canonical_multigraph_code(g: &Multigraph) -> Vec<u8> {
    let n = g.n();
    if n <= 1 {
        return Vec::new();
    }
    let mut adj = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] += 1;
        adj[v][u] += 1;
    }
    let mut best: Option<Vec<u8>> = None;
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut cur: Vec<u8> = Vec::with_capacity(n * (n - 1) / 2);

    fn descend(
        n: usize,
        adj: &[Vec<u8>],
        best: &mut Option<Vec<u8>>,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        cur: &mut Vec<u8>,
    ) {
        use std::cmp::Ordering;
        let d = chosen.len();
        if d == n {
            if best.as_ref().map_or(true, |b| cur.as_slice() < b.as_slice()) {
                *best = Some(cur.clone());
            }
            return;
        }
        let pos = cur.len();
        let rel = match best.as_ref() {
            None => Ordering::Less,
            Some(b) => cur.as_slice().cmp(&b[..pos]),
        };
        if rel == Ordering::Greater {
            return;
        }
        let mut cands: Vec<(Vec<u8>, usize)> = Vec::new();
        for v in 0..n {
            if used[v] {
                continue;
            }
            // doubles sort before singles before non-edges
            let seg: Vec<u8> = (0..d).map(|p| 2 - adj[chosen[p]][v]).collect();
            cands.push((seg, v));
        }
        cands.sort();
        for (seg, v) in cands {
            if rel == Ordering::Equal {
                if let Some(b) = best.as_ref() {
                    if seg.as_slice() > &b[pos..pos + d] {
                        break;
                    }
                }
            }
            chosen.push(v);
            used[v] = true;
            cur.extend_from_slice(&seg);
            descend(n, adj, best, chosen, used, cur);
            cur.truncate(pos);
            used[v] = false;
            chosen.pop();
        }
    }

    descend(n, &adj, &mut best, &mut chosen, &mut used, &mut cur);
    best.expect("search visits at least one leaf")
}

pub const TREE_ENUM_MAX: usize = 12;

/// One representative per isomorphism class of free trees on n vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Multigraph>, MultigraphError> {
    if n < 1 || n > TREE_ENUM_MAX {
        return Err(MultigraphError::BoundExceeded(n, 1, TREE_ENUM_MAX));
    }
    if n == 1 {
        return Ok(vec![Multigraph::new(1, &[]).unwrap()]);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // Beyer-Hedetniemi iteration over rooted-tree level sequences, folded to
    // free trees by canonical strings rooted at centers
    let mut level: Vec<usize> = (1..=n).collect();
    loop {
        let edges = edges_from_level_sequence(&level);
        let canon = free_tree_canonical_string(n, &edges);
        if seen.insert(canon) {
            out.push(Multigraph::new(n, &edges).unwrap());
        }
        // successor: find the last entry above 2 and repeat the block that
        // starts at its nearest shallower ancestor position
        let Some(p) = (0..n).rev().find(|&i| level[i] > 2) else {
            break;
        };
        let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).unwrap();
        for i in p..n {
            level[i] = level[i - (p - q)];
        }
    }
    out.sort();
    Ok(out)
}

fn edges_from_level_sequence(level: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(level.len().saturating_sub(1));
    for i in 1..level.len() {
        let parent = (0..i).rev().find(|&j| level[j] + 1 == level[i]).unwrap();
        edges.push((parent, i));
    }
    edges
}

/// Canonical string of a free tree: the minimum AHU string over its one or
/// two centers.
pub fn free_tree_canonical_string(n: usize, edges: &[(usize, usize)]) -> String {
    assert_eq!(edges.len() + 1, n, "not a tree");
    if n == 1 {
        return "()".to_string();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves to find the center(s)
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();

    fn ahu(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| ahu(u, v, adj))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }

    centers
        .iter()
        .map(|&c| ahu(c, usize::MAX, &adj))
        .min()
        .expect("tree has a center")
}

/// One representative per isomorphism class of connected simple graphs with
/// exactly one cycle on n >= 3 vertices.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Multigraph>, MultigraphError> {
    if n < 3 || n > TREE_ENUM_MAX {
        return Err(MultigraphError::BoundExceeded(n, 3, TREE_ENUM_MAX));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for tree in enumerate_trees(n)? {
        for u in 0..n {
            for v in u + 1..n {
                if tree.multiplicity(u, v) > 0 {
                    continue;
                }
                let mut edges = tree.edges().to_vec();
                edges.push((u, v));
                let g = Multigraph::new(n, &edges).unwrap();
                if seen.insert(g.canonical_code()) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One representative per isomorphism class of trees on n vertices with
/// exactly one edge doubled.
pub fn enumerate_trees_one_doubled(n: usize) -> Result<Vec<Multigraph>, MultigraphError> {
    if n < 2 || n > TREE_ENUM_MAX {
        return Err(MultigraphError::BoundExceeded(n, 2, TREE_ENUM_MAX));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for tree in enumerate_trees(n)? {
        for &(u, v) in &tree.simple_edges() {
            let mut edges = tree.edges().to_vec();
            edges.push((u, v));
            let g = Multigraph::new(n, &edges).unwrap();
            if seen.insert(g.canonical_code()) {
                out.push(g);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mg(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Multigraph::new(3, &[(0, 1), (0, 1)]).is_ok());
        assert_eq!(
            Multigraph::new(2, &[(0, 0)]),
            Err(MultigraphError::LoopEdge(0))
        );
        assert_eq!(
            Multigraph::new(2, &[(0, 5)]),
            Err(MultigraphError::VertexOutOfRange(5, 2))
        );
        assert_eq!(
            Multigraph::new(2, &[(0, 1), (1, 0), (0, 1)]),
            Err(MultigraphError::MultiplicityTooHigh(0, 1))
        );
        let d = mg(2, &[(0, 1), (0, 1)]);
        assert_eq!(d.multiplicity(0, 1), 2);
        assert!(!d.is_simple());
        assert_eq!(d.degree(0), 2);
        assert_eq!(d.simple_edges(), vec![(0, 1)]);
    }

    #[test]
    fn connectivity_and_trees() {
        let path = mg(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(path.is_tree());
        assert!(path.is_connected());
        let forest = mg(4, &[(0, 1), (2, 3)]);
        assert!(!forest.is_connected());
        assert_eq!(forest.components(), vec![vec![0, 1], vec![2, 3]]);
        let doubled = mg(3, &[(0, 1), (0, 1), (1, 2)]);
        assert!(!doubled.is_tree());
        assert!(doubled.is_connected());
    }

    #[test]
    fn bipartitions() {
        let even = mg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let color = even.bipartition().unwrap();
        assert_eq!(color[0], color[2]);
        assert_ne!(color[0], color[1]);
        let odd = mg(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(odd.bipartition().is_none());
        let doubled = mg(2, &[(0, 1), (0, 1)]);
        assert!(doubled.bipartition().is_some());
    }

    #[test]
    fn unique_cycles() {
        let c4p = mg(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4)]);
        let cyc = c4p.unique_cycle().unwrap();
        assert_eq!(cyc.len(), 4);
        let set: BTreeSet<_> = cyc.iter().copied().collect();
        assert_eq!(set, BTreeSet::from([0, 1, 2, 3]));
        // consecutive cycle vertices are adjacent
        for i in 0..cyc.len() {
            let (u, v) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            assert_eq!(c4p.multiplicity(u, v), 1);
        }
        let doubled = mg(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(doubled.unique_cycle().unwrap(), vec![0, 1]);
        let tree = mg(3, &[(0, 1), (1, 2)]);
        assert!(tree.unique_cycle().is_none());
        let theta = mg(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]);
        assert!(theta.unique_cycle().is_none());
    }

    #[test]
    fn incidence_matrices() {
        let path = mg(3, &[(0, 1), (1, 2)]);
        let b = path.oriented_incidence(true).unwrap();
        assert_eq!(
            b.gram(),
            IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]])
        );
        // BB^T is the Laplacian
        let lap = b.mul(&b.transpose());
        assert_eq!(
            lap,
            IntMatrix::from_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]])
        );
        let odd = mg(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            odd.oriented_incidence(true),
            Err(MultigraphError::NotBipartite)
        );
        assert!(odd.oriented_incidence(false).is_ok());
        let doubled = mg(2, &[(0, 1), (0, 1)]);
        assert_eq!(
            doubled.oriented_incidence(true),
            Err(MultigraphError::ParallelEdgesUnsupported)
        );
        let unor = doubled.unoriented_incidence();
        assert_eq!(unor.gram(), IntMatrix::from_rows(&[vec![2, 2], vec![2, 2]]));
    }

    #[test]
    fn esg_round_trip() {
        let g = mg(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]);
        let text = g.to_esg();
        assert!(text.contains("edge 0 1 *2"));
        assert_eq!(Multigraph::parse_esg(&text).unwrap(), g);
        let ok = "# tree\nvertices 3\nedge 0 1\nedge 1 2 *2\n";
        let parsed = Multigraph::parse_esg(ok).unwrap();
        assert_eq!(parsed.multiplicity(1, 2), 2);
        assert!(Multigraph::parse_esg("vertices 2\nedge 0 1 *3\n").is_err());
        assert!(Multigraph::parse_esg("vertices 2\nedge 0 1\nedge 0 1 *2\n").is_err());
        assert!(Multigraph::parse_esg("vertices 2\nedge 1 0\n").is_err());
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        let want = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &w) in want.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().len(), w, "n = {}", n);
        }
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(13).is_err());
        // every output is a tree on the right vertex count
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_tree());
            assert_eq!(t.n(), 7);
        }
    }

    fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
        let mut deg = vec![1usize; n];
        for &s in seq {
            deg[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut seq = seq.to_vec();
        for i in 0..n - 2 {
            let leaf = (0..n).find(|&v| deg[v] == 1 && !seq[i..].contains(&v)).unwrap();
            edges.push(norm(leaf, seq[i]));
            deg[leaf] -= 1;
            deg[seq[i]] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        edges.push(norm(rest[0], rest[1]));
        let _ = seq.pop();
        edges
    }

    #[test]
    fn tree_generator_matches_prufer_oracle() {
        for n in 3..=7 {
            let generated: BTreeSet<String> = enumerate_trees(n)
                .unwrap()
                .iter()
                .map(|t| free_tree_canonical_string(n, &t.simple_edges()))
                .collect();
            let mut labeled = BTreeSet::new();
            let total = n.pow(n as u32 - 2);
            for code in 0..total {
                let mut c = code;
                let seq: Vec<usize> = (0..n - 2)
                    .map(|_| {
                        let v = c % n;
                        c /= n;
                        v
                    })
                    .collect();
                let edges = prufer_decode(n, &seq);
                labeled.insert(free_tree_canonical_string(n, &edges));
            }
            assert_eq!(generated, labeled, "n = {}", n);
        }
    }

    #[test]
    fn unicyclic_counts() {
        let want = [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33), (8, 89)];
        for (n, w) in want {
            let list = enumerate_unicyclic(n).unwrap();
            assert_eq!(list.len(), w, "n = {}", n);
            for g in &list {
                assert!(g.is_simple());
                assert!(g.is_connected());
                assert!(g.unique_cycle().is_some());
            }
        }
    }

    #[test]
    fn doubled_tree_counts_by_hand() {
        // 3-path: doubling either edge gives isomorphic graphs
        assert_eq!(enumerate_trees_one_doubled(3).unwrap().len(), 1);
        // 4 vertices: path with end or middle edge doubled, star with any
        assert_eq!(enumerate_trees_one_doubled(4).unwrap().len(), 3);
        assert_eq!(enumerate_trees_one_doubled(2).unwrap().len(), 1);
        for g in enumerate_trees_one_doubled(6).unwrap() {
            assert!(!g.is_simple());
            assert!(g.is_connected());
            assert_eq!(g.edges().len(), 6); // 5 tree edges + 1 duplicate
            assert_eq!(g.unique_cycle().unwrap().len(), 2);
        }
    }

    #[test]
    fn canonical_codes_decide_isomorphism() {
        let path = mg(4, &[(0, 1), (1, 2), (2, 3)]);
        let relabeled = path.relabel(&[2, 0, 3, 1]);
        assert_eq!(path.canonical_code(), relabeled.canonical_code());
        let star = mg(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(path.canonical_code(), star.canonical_code());
        // doubled-edge position matters
        let dbl_end = mg(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]);
        let dbl_mid = mg(4, &[(0, 1), (1, 2), (1, 2), (2, 3)]);
        assert_ne!(dbl_end.canonical_code(), dbl_mid.canonical_code());
        assert_eq!(
            dbl_end.canonical_code(),
            dbl_end.relabel(&[3, 2, 1, 0]).canonical_code()
        );
    }
}

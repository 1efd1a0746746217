//! Edge-signed graphs, switching, and switching-class canonical keys.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::matrix::IntMatrix;
use num_bigint::BigInt;

/// Largest vertex count accepted by the canonical-form search.
pub const MAX_CANON_VERTICES: usize = 10;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices; canonical forms support at most {1}")]
    TooManyVertices(usize, usize),
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    #[error("line {0}: expected `vertices <n>` header before edges")]
    ExpectedHeader(usize),
    #[error("missing `vertices <n>` header")]
    MissingHeader,
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("line {0}: {1}")]
    Invalid(usize, GraphError),
}

/// An edge-signed graph: vertices 0..n with disjoint sets of (+)- and
/// (-)-edges. Immutable after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedGraph {
    n: usize,
    plus: Vec<(usize, usize)>,
    minus: Vec<(usize, usize)>,
}

fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SignedGraph {
    pub fn new(
        n: usize,
        plus: &[(usize, usize)],
        minus: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut check = |u: usize, v: usize| -> Result<(usize, usize), GraphError> {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            let e = norm_edge(u, v);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            Ok(e)
        };
        let mut p = Vec::with_capacity(plus.len());
        for &(u, v) in plus {
            p.push(check(u, v)?);
        }
        let mut m = Vec::with_capacity(minus.len());
        for &(u, v) in minus {
            m.push(check(u, v)?);
        }
        p.sort_unstable();
        m.sort_unstable();
        Ok(SignedGraph { n, plus: p, minus: m })
    }

    /// All-(+) graph on the given underlying edges.
    pub fn all_plus(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, edges, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn plus_edges(&self) -> &[(usize, usize)] {
        &self.plus
    }

    pub fn minus_edges(&self) -> &[(usize, usize)] {
        &self.minus
    }

    pub fn edge_count(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    /// +1, -1, or 0 when the pair is not an edge.
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        let e = norm_edge(u, v);
        if self.plus.binary_search(&e).is_ok() {
            1
        } else if self.minus.binary_search(&e).is_ok() {
            -1
        } else {
            0
        }
    }

    /// Underlying edges, sorted.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<_> = self.plus.iter().chain(self.minus.iter()).copied().collect();
        all.sort_unstable();
        all
    }

    pub fn degree(&self, v: usize) -> usize {
        self.plus
            .iter()
            .chain(self.minus.iter())
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.plus {
            a.set(u, v, BigInt::from(1));
            a.set(v, u, BigInt::from(1));
        }
        for &(u, v) in &self.minus {
            a.set(u, v, BigInt::from(-1));
            a.set(v, u, BigInt::from(-1));
        }
        a
    }

    /// Signed adjacency as a small dense array for search hot paths.
    fn adj_array(&self) -> Vec<Vec<i8>> {
        let mut a = vec![vec![0i8; self.n]; self.n];
        for &(u, v) in &self.plus {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        for &(u, v) in &self.minus {
            a[u][v] = -1;
            a[v][u] = -1;
        }
        a
    }

    /// Switch at every vertex in `w`: an edge flips sign iff exactly one of
    /// its endpoints lies in `w`.
    pub fn switch(&self, w: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut mask = vec![false; self.n];
        for &v in w {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            mask[v] = true;
        }
        Ok(self.switch_mask(&mask))
    }

    fn switch_mask(&self, mask: &[bool]) -> SignedGraph {
        let mut plus = Vec::with_capacity(self.plus.len());
        let mut minus = Vec::with_capacity(self.minus.len());
        for &(u, v) in &self.plus {
            if mask[u] != mask[v] {
                minus.push((u, v));
            } else {
                plus.push((u, v));
            }
        }
        for &(u, v) in &self.minus {
            if mask[u] != mask[v] {
                plus.push((u, v));
            } else {
                minus.push((u, v));
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        SignedGraph { n: self.n, plus, minus }
    }

    /// Relabel vertices: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let map = |&(u, v): &(usize, usize)| norm_edge(perm[u], perm[v]);
        let mut plus: Vec<_> = self.plus.iter().map(map).collect();
        let mut minus: Vec<_> = self.minus.iter().map(map).collect();
        plus.sort_unstable();
        minus.sort_unstable();
        SignedGraph { n: self.n, plus, minus }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.plus.iter().chain(self.minus.iter()) {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
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

    /// True iff some switching removes every (-)-edge; decided per component
    /// by propagating switching states over a spanning tree.
    pub fn contains_unsigned_member(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.plus {
            adj[u].push((v, 1i8));
            adj[v].push((u, 1));
        }
        for &(u, v) in &self.minus {
            adj[u].push((v, -1i8));
            adj[v].push((u, -1));
        }
        let mut state = vec![0i8; self.n];
        for root in 0..self.n {
            if state[root] != 0 {
                continue;
            }
            state[root] = 1;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(v, s) in &adj[u] {
                    let want = state[u] * s;
                    if state[v] == 0 {
                        state[v] = want;
                        stack.push(v);
                    } else if state[v] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical key of the switching class; equal keys iff switching
    /// equivalent (including relabeling).
    pub fn canonical_key(&self) -> Result<SwitchingKey, GraphError> {
        if self.n > MAX_CANON_VERTICES {
            return Err(GraphError::TooManyVertices(self.n, MAX_CANON_VERTICES));
        }
        Ok(SwitchingKey { n: self.n, code: canonical_code(self) })
    }

    /// True iff the switching classes coincide; differing vertex counts
    /// compare unequal rather than erroring.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<bool, GraphError> {
        if self.n != other.n {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }

    /// Serialize to the `.esg` text format.
    pub fn to_esg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.n);
        let mut edges: Vec<(usize, usize, char)> = self
            .plus
            .iter()
            .map(|&(u, v)| (u, v, '+'))
            .chain(self.minus.iter().map(|&(u, v)| (u, v, '-')))
            .collect();
        edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
        for (u, v, s) in edges {
            let _ = writeln!(out, "edge {} {} {}", u, v, s);
        }
        out
    }

    /// Parse the `.esg` text format: optional `#` comment lines and blank
    /// lines, a `vertices <n>` header, then `edge <u> <v> <+|->` lines with
    /// 0-based u < v. Duplicate edges are errors.
    pub fn parse_esg(text: &str) -> Result<SignedGraph, ParseError> {
        let mut n: Option<usize> = None;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        let mut seen = BTreeSet::new();
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
                        ParseError::Malformed(lineno, "expected `edge <u> <v> <+|->`".into())
                    };
                    let u = parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                    let v = parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                    let s = parts.next().ok_or_else(bad)?;
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
                        return Err(ParseError::Invalid(
                            lineno,
                            GraphError::VertexOutOfRange(v, n),
                        ));
                    }
                    if !seen.insert((u, v)) {
                        return Err(ParseError::Invalid(
                            lineno,
                            GraphError::DuplicateEdge(u, v),
                        ));
                    }
                    match s {
                        "+" => plus.push((u, v)),
                        "-" => minus.push((u, v)),
                        _ => {
                            return Err(ParseError::Malformed(
                                lineno,
                                format!("edge sign must be `+` or `-`, got `{}`", s),
                            ))
                        }
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
        plus.sort_unstable();
        minus.sort_unstable();
        Ok(SignedGraph { n, plus, minus })
    }
}

/// Canonical key of a switching class. Equal keys certify switching
/// equivalence within the supported vertex bound.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SwitchingKey {
    n: usize,
    code: Vec<u8>,
}

impl SwitchingKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// Lowercase hex of the code bytes, prefixed by the vertex count.
    pub fn hex(&self) -> String {
        let mut s = format!("{:02x}:", self.n);
        for b in &self.code {
            let _ = write!(s, "{:x}", b);
        }
        s
    }
}

/// Minimal vertex-incremental encoding of the signed adjacency upper
/// triangle over all vertex orders and switching states. The byte at
/// position for pair (p, d), p < d, is 0 for a (+)-edge, 1 for a non-edge,
/// 2 for a (-)-edge, emitted column by column: when vertex number d is
/// placed, the d bytes against already-placed vertices 0..d-1 are appended.
/// Branch-and-bound over placements with the first placed vertex's
/// switching state fixed (a global flip never changes the encoding).
fn canonical_code(g: &SignedGraph) -> Vec<u8> {
    let n = g.n;
    if n <= 1 {
        return Vec::new();
    }
    let adj = g.adj_array();
    let total = n * (n - 1) / 2;
    let mut best: Option<Vec<u8>> = None;
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut state: Vec<i8> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut cur: Vec<u8> = Vec::with_capacity(total);

    struct Ctx<'a> {
        n: usize,
        adj: &'a [Vec<i8>],
        best: &'a mut Option<Vec<u8>>,
    }

    fn descend(
        ctx: &mut Ctx,
        chosen: &mut Vec<usize>,
        state: &mut Vec<i8>,
        used: &mut [bool],
        cur: &mut Vec<u8>,
    ) {
        use std::cmp::Ordering;
        let d = chosen.len();
        if d == ctx.n {
            if ctx.best.as_ref().map_or(true, |b| cur.as_slice() < b.as_slice()) {
                *ctx.best = Some(cur.clone());
            }
            return;
        }
        // the incumbent can change while a subtree is explored, so the
        // relation of the current prefix to it is re-derived at every node
        let pos = cur.len();
        let rel = match ctx.best.as_ref() {
            None => Ordering::Less,
            Some(b) => cur.as_slice().cmp(&b[..pos]),
        };
        if rel == Ordering::Greater {
            return;
        }
        // candidate segments for every unused vertex and switching state
        let mut cands: Vec<(Vec<u8>, usize, i8)> = Vec::new();
        for v in 0..ctx.n {
            if used[v] {
                continue;
            }
            let states: &[i8] = if d == 0 { &[1] } else { &[1, -1] };
            for &sv in states {
                let mut seg = Vec::with_capacity(d);
                for p in 0..d {
                    let val = ctx.adj[chosen[p]][v] * state[p] * sv;
                    seg.push((1 - val) as u8);
                }
                cands.push((seg, v, sv));
            }
        }
        cands.sort();
        for (seg, v, sv) in cands {
            if rel == Ordering::Equal {
                if let Some(b) = ctx.best.as_ref() {
                    if seg.as_slice() > &b[pos..pos + d] {
                        break; // sorted ascending: every later segment is worse
                    }
                }
            }
            chosen.push(v);
            state.push(sv);
            used[v] = true;
            cur.extend_from_slice(&seg);
            descend(ctx, chosen, state, used, cur);
            cur.truncate(pos);
            used[v] = false;
            state.pop();
            chosen.pop();
        }
    }

    let mut ctx = Ctx { n, adj: &adj, best: &mut best };
    descend(&mut ctx, &mut chosen, &mut state, &mut used, &mut cur);
    best.expect("search visits at least one leaf")
}

/// All vertex bijections pi such that relabeling `g` by pi yields a graph
/// differing from `h` only by a switching. Graphs of different sizes or
/// shapes yield an empty list.
pub fn switching_isomorphisms(g: &SignedGraph, h: &SignedGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_switching_isomorphism(g, h, &mut |perm, _| {
        out.push(perm.to_vec());
        true
    });
    out
}

/// One switching isomorphism certificate: (pi, w) with
/// switch(relabel(g, pi), w) == h.
pub fn switching_isomorphism_witness(
    g: &SignedGraph,
    h: &SignedGraph,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut found = None;
    for_each_switching_isomorphism(g, h, &mut |perm, w| {
        found = Some((perm.to_vec(), w.to_vec()));
        false
    });
    found
}

/// Backtracking enumeration; callback returns false to stop early.
pub fn for_each_switching_isomorphism(
    g: &SignedGraph,
    h: &SignedGraph,
    visit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
) {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return;
    }
    let gu = g.adj_array();
    let hu = h.adj_array();
    let gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let hdeg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn place(
        v: usize,
        n: usize,
        gu: &[Vec<i8>],
        hu: &[Vec<i8>],
        gdeg: &[usize],
        hdeg: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        g: &SignedGraph,
        h: &SignedGraph,
        visit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> bool {
        if v == n {
            if let Some(w) = switching_between(&g.relabel(perm), h) {
                return visit(perm, &w);
            }
            return true;
        }
        for t in 0..n {
            if used[t] || gdeg[v] != hdeg[t] {
                continue;
            }
            // underlying adjacency with already-placed vertices must match
            if (0..v).any(|u| (gu[v][u] != 0) != (hu[t][perm[u]] != 0)) {
                continue;
            }
            perm[v] = t;
            used[t] = true;
            let more = place(v + 1, n, gu, hu, gdeg, hdeg, perm, used, g, h, visit);
            used[t] = false;
            perm[v] = usize::MAX;
            if !more {
                return false;
            }
        }
        true
    }

    place(0, n, &gu, &hu, &gdeg, &hdeg, &mut perm, &mut used, g, h, visit);
}

/// If `a` and `b` share the underlying graph and differ only by a switching,
/// return a vertex set w with switch(a, w) == b.
pub fn switching_between(a: &SignedGraph, b: &SignedGraph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.underlying_edges() != b.underlying_edges() {
        return None;
    }
    let n = a.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &a.underlying_edges() {
        // product of the two signs: +1 keeps states equal, -1 flips
        let rel = a.sign(u, v) * b.sign(u, v);
        adj[u].push((v, rel));
        adj[v].push((u, rel));
    }
    let mut state = vec![0i8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        state[root] = 1;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &(v, rel) in &adj[u] {
                let want = state[u] * rel;
                if state[v] == 0 {
                    state[v] = want;
                    stack.push(v);
                } else if state[v] != want {
                    return None;
                }
            }
        }
    }
    Some((0..n).filter(|&v| state[v] == -1).collect())
}

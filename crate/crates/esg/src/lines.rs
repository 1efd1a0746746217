//! The line systems A(n), D(n) and E6/E7/E8: generation, the total order
//! on lines, Gram matrices of signed representatives, and backtracking
//! embedding of a target Gram matrix into a system.

use std::cmp::Ordering;

use num_bigint::BigInt;
use thiserror::Error;

use crate::matrix::IntMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SystemKind {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl std::fmt::Display for SystemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemKind::A(n) => write!(f, "A({})", n),
            SystemKind::D(n) => write!(f, "D({})", n),
            SystemKind::E6 => write!(f, "E6"),
            SystemKind::E7 => write!(f, "E7"),
            SystemKind::E8 => write!(f, "E8"),
        }
    }
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum LineError {
    #[error("invalid parameter for {0}: need {1}")]
    InvalidParameter(SystemKind, String),
    #[error("lines from different systems")]
    MixedSystems,
    #[error("sign vector length {0} does not match line count {1}")]
    SignLengthMismatch(usize, usize),
    #[error("malformed embedding target: {0}")]
    MalformedTarget(String),
}

/// A line of a system, stored as the nonnegative representative vector.
/// E-type coefficients are over the simple roots; A/D-type coefficients
/// are ambient coordinates with exactly two nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootLine {
    kind: SystemKind,
    coeffs: Vec<i64>,
}

impl RootLine {
    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// Gram form of the E8 simple roots: 2 on the diagonal, -1 on the edges
/// of the diagram (the chain 8-7-6-5-4-3-1 with 2 attached to 4).
const E8_EDGES: [(usize, usize); 7] =
    [(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)];

fn cartan_entry(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if E8_EDGES.contains(&(i.min(j), i.max(j))) {
        -1
    } else {
        0
    }
}

fn raw_inner_product(kind: SystemKind, a: &[i64], b: &[i64]) -> i64 {
    match kind {
        SystemKind::A(_) | SystemKind::D(_) => {
            a.iter().zip(b).map(|(x, y)| x * y).sum()
        }
        _ => {
            let mut s = 0;
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in b.iter().enumerate() {
                    if bj != 0 {
                        s += ai * bj * cartan_entry(i, j);
                    }
                }
            }
            s
        }
    }
}

/// Inner product of two line representatives from the same system.
pub fn inner_product(a: &RootLine, b: &RootLine) -> Result<i64, LineError> {
    if a.kind != b.kind {
        return Err(LineError::MixedSystems);
    }
    Ok(raw_inner_product(a.kind, &a.coeffs, &b.coeffs))
}

/// The total order on lines: smaller coefficient sum first; on equal sums,
/// the line with the greater coefficient at the first differing index
/// comes first.
pub fn line_compare(a: &RootLine, b: &RootLine) -> Result<Ordering, LineError> {
    if a.kind != b.kind {
        return Err(LineError::MixedSystems);
    }
    let sa: i64 = a.coeffs.iter().sum();
    let sb: i64 = b.coeffs.iter().sum();
    match sa.cmp(&sb) {
        Ordering::Equal => {}
        other => return Ok(other),
    }
    for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Greater => return Ok(Ordering::Less),
            Ordering::Less => return Ok(Ordering::Greater),
        }
    }
    Ok(Ordering::Equal)
}

/// An immutable generated system: lines in sorted order plus a pairwise
/// inner-product table.
#[derive(Clone, Debug)]
pub struct LineSystem {
    kind: SystemKind,
    lines: Vec<RootLine>,
    ip: Vec<Vec<i8>>,
}

impl LineSystem {
    /// Generate the lines of a system. E8 is the norm-2 closure of the
    /// eight simple roots under adding one simple root at a time; E7 and
    /// E6 are the sublists with the last one or two coefficients zero;
    /// A/D types come directly from their ambient coordinate definitions.
    pub fn generate(kind: SystemKind) -> Result<LineSystem, LineError> {
        let mut lines = match kind {
            SystemKind::A(n) => {
                if n < 1 {
                    return Err(LineError::InvalidParameter(kind, "n >= 1".into()));
                }
                ambient_difference_lines(kind, n + 1)
            }
            SystemKind::D(n) => {
                if n < 4 {
                    return Err(LineError::InvalidParameter(kind, "n >= 4".into()));
                }
                let mut v = ambient_difference_lines(kind, n);
                for i in 0..n {
                    for j in i + 1..n {
                        let mut c = vec![0i64; n];
                        c[i] = 1;
                        c[j] = 1;
                        v.push(RootLine { kind, coeffs: c });
                    }
                }
                v
            }
            SystemKind::E8 | SystemKind::E7 | SystemKind::E6 => {
                let roots = e8_positive_roots();
                roots
                    .into_iter()
                    .filter(|c| match kind {
                        SystemKind::E7 => c[7] == 0,
                        SystemKind::E6 => c[6] == 0 && c[7] == 0,
                        _ => true,
                    })
                    .map(|coeffs| RootLine { kind, coeffs })
                    .collect()
            }
        };
        lines.sort_by(|a, b| line_compare(a, b).expect("single system"));
        let m = lines.len();
        let mut ip = vec![vec![0i8; m]; m];
        for i in 0..m {
            for j in 0..m {
                let v = raw_inner_product(kind, &lines[i].coeffs, &lines[j].coeffs);
                ip[i][j] = i8::try_from(v).expect("inner products are small");
            }
        }
        Ok(LineSystem { kind, lines, ip })
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn lines(&self) -> &[RootLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Inner product of the representatives of lines `i` and `j`.
    pub fn inner_product(&self, i: usize, j: usize) -> i64 {
        self.ip[i][j] as i64
    }

    /// Serialize the line list as a JSON array of coefficient vectors,
    /// in sorted order.
    pub fn to_json(&self) -> String {
        let arr: Vec<Vec<i64>> = self.lines.iter().map(|l| l.coeffs.clone()).collect();
        serde_json::to_string(&arr).expect("plain integer arrays")
    }
}

fn ambient_difference_lines(kind: SystemKind, dim: usize) -> Vec<RootLine> {
    let mut v = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut c = vec![0i64; dim];
            c[i] = 1;
            c[j] = -1;
            v.push(RootLine { kind, coeffs: c });
        }
    }
    v
}

fn e8_positive_roots() -> Vec<Vec<i64>> {
    let norm = |c: &[i64]| raw_inner_product(SystemKind::E8, c, c);
    let mut seen: Vec<Vec<i64>> = Vec::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..8 {
        let mut c = vec![0i64; 8];
        c[i] = 1;
        seen.push(c.clone());
        queue.push(c);
    }
    while let Some(c) = queue.pop() {
        for i in 0..8 {
            let mut d = c.clone();
            d[i] += 1;
            if norm(&d) == 2 && !seen.contains(&d) {
                seen.push(d.clone());
                queue.push(d);
            }
        }
    }
    seen
}

/// Gram matrix of signed line representatives: entry (i, j) is
/// s_i s_j (l_i, l_j). Repeats are the caller's responsibility.
pub fn gram_of_lines(lines: &[RootLine], signs: &[i8]) -> Result<IntMatrix, LineError> {
    if lines.len() != signs.len() {
        return Err(LineError::SignLengthMismatch(signs.len(), lines.len()));
    }
    let n = lines.len();
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = inner_product(&lines[i], &lines[j])?;
            g.set(i, j, BigInt::from(signs[i] as i64 * signs[j] as i64 * v));
        }
    }
    Ok(g)
}

fn target_as_i8(target: &IntMatrix) -> Result<Vec<Vec<i8>>, LineError> {
    let n = target.rows();
    if target.cols() != n {
        return Err(LineError::MalformedTarget("not square".into()));
    }
    let mut t = vec![vec![0i8; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = i64::try_from(target.get(i, j).clone())
                .map_err(|_| LineError::MalformedTarget("entry out of range".into()))?;
            if i == j && v != 2 {
                return Err(LineError::MalformedTarget("diagonal entry not 2".into()));
            }
            if i != j && !(-1..=1).contains(&v) {
                return Err(LineError::MalformedTarget(
                    "off-diagonal entry outside {0, +1, -1}".into(),
                ));
            }
            if target.get(i, j) != target.get(j, i) {
                return Err(LineError::MalformedTarget("not symmetric".into()));
            }
            t[i][j] = v as i8;
        }
    }
    Ok(t)
}

/// Search for distinct lines and signs whose Gram matrix equals `target`.
/// Returns one assignment of (line index, sign) per target index, or None
/// when no embedding exists. The search is exhaustive up to two sound
/// reductions: the first placed vertex takes sign +1 (global negation
/// leaves the Gram unchanged) and is pinned to the first line of the
/// system (each system's symmetry group is transitive on its lines).
pub fn embed_gram(
    target: &IntMatrix,
    system: &LineSystem,
) -> Result<Option<Vec<(usize, i8)>>, LineError> {
    let t = target_as_i8(target)?;
    let n = t.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if n > system.len() {
        return Ok(None);
    }
    // most-constrained-first vertex order: start at a vertex of maximum
    // nonzero degree, then repeatedly take the vertex with the most
    // already-placed nonzero neighbours
    let deg: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && t[i][j] != 0).count())
        .collect();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = (0..n)
                    .filter(|&u| placed[u] && t[v][u] != 0)
                    .count();
                (anchored, deg[v], usize::MAX - v)
            })
            .expect("unplaced vertex remains");
        placed[pick] = true;
        order.push(pick);
    }
    let mut line_of = vec![usize::MAX; n];
    let mut sign_of = vec![0i8; n];
    let mut used = vec![false; system.len()];
    fn dfs(
        k: usize,
        order: &[usize],
        t: &[Vec<i8>],
        sys: &LineSystem,
        line_of: &mut [usize],
        sign_of: &mut [i8],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        let line_candidates = if k == 0 { 0..1 } else { 0..sys.len() };
        for li in line_candidates {
            if used[li] {
                continue;
            }
            let signs: &[i8] = if k == 0 { &[1] } else { &[1, -1] };
            'sign: for &s in signs {
                for &u in &order[..k] {
                    let got = s as i64 * sign_of[u] as i64 * sys.inner_product(li, line_of[u]);
                    if got != t[v][u] as i64 {
                        continue 'sign;
                    }
                }
                line_of[v] = li;
                sign_of[v] = s;
                used[li] = true;
                if dfs(k + 1, order, t, sys, line_of, sign_of, used) {
                    return true;
                }
                used[li] = false;
                line_of[v] = usize::MAX;
                sign_of[v] = 0;
            }
        }
        false
    }
    if dfs(0, &order, &t, system, &mut line_of, &mut sign_of, &mut used) {
        Ok(Some((0..n).map(|v| (line_of[v], sign_of[v])).collect()))
    } else {
        Ok(None)
    }
}

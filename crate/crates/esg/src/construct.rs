//! Builders for the concrete graph families: line graphs of multigraphs,
//! the dagger signing on unicyclic graphs, the doubled-tree extension, the
//! modified adjacency matrix, signed cycles, and the three X families with
//! their eigenvector self-checks.

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;
use crate::multigraph::Multigraph;
use crate::spectra::verify_eigenpair;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ConstructError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not simple unicyclic")]
    NotUnicyclic,
    #[error("cycle has length {0}; at least 4 is required")]
    CycleTooShort(usize),
    #[error("the two edges are not adjacent edges of the cycle")]
    NotCycleLineEdge,
    #[error("graph is not a tree with exactly one doubled edge")]
    NotDoubledTree,
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

/// All-(+) line graph: one vertex per edge of `h` (in sorted edge order,
/// parallel copies separate), adjacent when the edges share an endpoint.
pub fn line_graph(h: &Multigraph) -> Result<SignedGraph, ConstructError> {
    for v in 0..h.n() {
        if h.degree(v) == 0 {
            return Err(ConstructError::IsolatedVertex(v));
        }
    }
    let edges = h.edges();
    let m = edges.len();
    let mut plus = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                plus.push((i, j));
            }
        }
    }
    Ok(SignedGraph::all_plus(m, &plus).expect("valid line graph"))
}

/// The dagger signing: the line graph of a simple unicyclic `h` whose cycle
/// has length >= 4, with the edges from `u` into the maximal clique shared
/// with the adjacent cycle edge `u_prime` turned negative. Vertices follow
/// `h.edges()` order.
pub fn l_dagger(
    h: &Multigraph,
    u: (usize, usize),
    u_prime: (usize, usize),
) -> Result<SignedGraph, ConstructError> {
    if !h.is_simple() {
        return Err(ConstructError::NotUnicyclic);
    }
    let cycle = h.unique_cycle().ok_or(ConstructError::NotUnicyclic)?;
    if cycle.len() < 4 {
        return Err(ConstructError::CycleTooShort(cycle.len()));
    }
    let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let u = norm(u);
    let up = norm(u_prime);
    let mut cycle_edges = Vec::new();
    for i in 0..cycle.len() {
        cycle_edges.push(norm((cycle[i], cycle[(i + 1) % cycle.len()])));
    }
    if u == up || !cycle_edges.contains(&u) || !cycle_edges.contains(&up) {
        return Err(ConstructError::NotCycleLineEdge);
    }
    // adjacent cycle edges share exactly one vertex
    let shared = [u.0, u.1]
        .into_iter()
        .find(|&x| x == up.0 || x == up.1)
        .ok_or(ConstructError::NotCycleLineEdge)?;
    let base = line_graph(h)?;
    let edges = h.edges();
    let iu = edges.iter().position(|&e| e == u).expect("u is an edge");
    // the unique maximal clique of the line graph containing {u, u'} is the
    // star of edges at the shared vertex (h is triangle-free: cycle >= 4)
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &(i, j) in base.plus_edges() {
        let other = if i == iu {
            Some(j)
        } else if j == iu {
            Some(i)
        } else {
            None
        };
        let negate = match other {
            Some(o) => {
                let (a, b) = edges[o];
                a == shared || b == shared
            }
            None => false,
        };
        if negate {
            minus.push((i, j));
        } else {
            plus.push((i, j));
        }
    }
    Ok(SignedGraph::new(base.n(), &plus, &minus).expect("valid signing"))
}

/// Theorem-style doubled-tree extension: for a tree with one doubled edge
/// {v, w}, the matrix M holds the unoriented incidence columns of the
/// underlying tree followed by one extra column e_v - e_w; the returned
/// graph has adjacency M^T M - 2I. The extra column's vertex comes last.
pub fn double_edge_extension(
    h: &Multigraph,
) -> Result<(SignedGraph, IntMatrix), ConstructError> {
    let simple = h.simple_edges();
    let doubled: Vec<(usize, usize)> = simple
        .iter()
        .copied()
        .filter(|&(u, v)| h.multiplicity(u, v) == 2)
        .collect();
    let tree_ok = h.is_connected() && simple.len() + 1 == h.n() && {
        Multigraph::new(h.n(), &simple).map_or(false, |t| t.is_tree())
    };
    if doubled.len() != 1 || !tree_ok {
        return Err(ConstructError::NotDoubledTree);
    }
    let (v, w) = doubled[0];
    let t = h.n();
    let mut m = IntMatrix::zeros(t, t);
    for (j, &(a, b)) in simple.iter().enumerate() {
        m.set(a, j, BigInt::from(1));
        m.set(b, j, BigInt::from(1));
    }
    m.set(v, t - 1, BigInt::from(1));
    m.set(w, t - 1, BigInt::from(-1));
    let gram = m.gram();
    debug_assert_eq!(gram.det(), BigInt::from(4));
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            match i64::try_from(gram.get(i, j).clone()).expect("entries are small") {
                1 => plus.push((i, j)),
                -1 => minus.push((i, j)),
                0 => {}
                other => unreachable!("off-diagonal Gram entry {}", other),
            }
        }
    }
    let g = SignedGraph::new(t, &plus, &minus).expect("valid extension");
    Ok((g, m))
}

/// Adjacency matrix with a -1 placed at the diagonal entry of `v`.
pub fn modified_adjacency(g: &SignedGraph, v: usize) -> Result<IntMatrix, ConstructError> {
    if v >= g.n() {
        return Err(ConstructError::VertexOutOfRange(v, g.n()));
    }
    let mut a = g.adjacency_matrix();
    a.set(v, v, BigInt::from(-1));
    Ok(a)
}

/// Cycle of the given length with `plus_count` consecutive (+)-edges
/// starting at edge {0,1}, the rest (-).
pub fn signed_cycle(len: usize, plus_count: usize) -> Result<SignedGraph, ConstructError> {
    if len < 3 {
        return Err(ConstructError::BadParameter(format!(
            "cycle length {} below 3",
            len
        )));
    }
    if plus_count > len {
        return Err(ConstructError::BadParameter(format!(
            "plus count {} exceeds length {}",
            plus_count, len
        )));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..len {
        let e = if i + 1 < len { (i, i + 1) } else { (0, len - 1) };
        if i < plus_count {
            plus.push(e);
        } else {
            minus.push(e);
        }
    }
    Ok(SignedGraph::new(len, &plus, &minus).expect("valid cycle"))
}

/// An obstruction-family member: a signed graph, a distinguished vertex,
/// and the integer vector that the modified adjacency (a -1 placed on the
/// distinguished diagonal entry) sends to -2 times itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XFamilyInstance {
    graph: SignedGraph,
    distinguished: usize,
    vector: Vec<BigInt>,
}

impl XFamilyInstance {
    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    /// The -2 eigenvector of the modified adjacency.
    pub fn minus2_vector(&self) -> &[BigInt] {
        &self.vector
    }
}

/// First X family: the all-(+) tree consisting of a path e_n ... e_3 with
/// two extra leaves e_1, e_2 at e_3; vertex e_i sits at index i-1. The
/// distinguished vertex is e_n; the defining eigenvector identity at -2
/// is asserted.
pub fn family_x1(n: usize) -> Result<XFamilyInstance, ConstructError> {
    if n < 3 {
        return Err(ConstructError::BadParameter(format!(
            "X1 needs n >= 3, got {}",
            n
        )));
    }
    let mut edges = vec![(0, 2), (1, 2)];
    for j in 3..n {
        edges.push((j - 1, j));
    }
    let g = SignedGraph::all_plus(n, &edges).expect("valid tree");
    let distinguished = n - 1;
    let x: Vec<BigInt> = (1..=n)
        .map(|i| {
            if i <= 2 {
                BigInt::from(-1)
            } else if i % 2 == 1 {
                BigInt::from(2)
            } else {
                BigInt::from(-2)
            }
        })
        .collect();
    let a = modified_adjacency(&g, distinguished)?;
    assert!(
        verify_eigenpair(&a, &x, &BigInt::from(-2)),
        "X1 eigenvector identity failed"
    );
    Ok(XFamilyInstance { graph: g, distinguished, vector: x })
}

fn family_x_cycle(
    cycle_len: usize,
    l: usize,
    minus_edges: &[(usize, usize)],
    e_val: impl Fn(usize) -> i64,
) -> XFamilyInstance {
    // vertices: e_1..e_cycle_len at 0..cycle_len, then f_1..f_l
    let n = cycle_len + l;
    let fi = |j: usize| cycle_len + j - 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for j in 1..cycle_len {
        edges.push((j - 1, j));
    }
    edges.push((0, cycle_len - 1));
    edges.push((0, fi(1)));
    edges.push((cycle_len - 1, fi(1)));
    for j in 2..=l {
        edges.push((fi(j - 1), fi(j)));
    }
    let minus: Vec<(usize, usize)> = minus_edges.to_vec();
    let plus: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| !minus.contains(&(a, b)) && !minus.contains(&(b, a)))
        .collect();
    let g = SignedGraph::new(n, &plus, &minus).expect("valid X graph");
    let distinguished = fi(l);
    let mut x: Vec<BigInt> = (1..=cycle_len).map(|j| BigInt::from(e_val(j))).collect();
    for j in 1..=l {
        x.push(BigInt::from(if j % 2 == 0 { 2 } else { -2 }));
    }
    let a = modified_adjacency(&g, distinguished).expect("vertex in range");
    assert!(
        verify_eigenpair(&a, &x, &BigInt::from(-2)),
        "X family eigenvector identity failed"
    );
    XFamilyInstance { graph: g, distinguished, vector: x }
}

/// Second X family: all-(+) line graph of an odd cycle C_{2k+1} with a
/// pendant path of length l. Cycle vertices e_1..e_{2k+1} at 0..2k, path
/// vertices f_1..f_l after them; distinguished vertex f_l.
pub fn family_x2(k: usize, l: usize) -> Result<XFamilyInstance, ConstructError> {
    if k < 1 || l < 1 {
        return Err(ConstructError::BadParameter(format!(
            "X2 needs k, l >= 1, got k={}, l={}",
            k, l
        )));
    }
    Ok(family_x_cycle(2 * k + 1, l, &[], |j| {
        if j % 2 == 1 {
            1
        } else {
            -1
        }
    }))
}

/// Third X family: the same shape over an even cycle C_{2k+2}, signed in
/// the dagger style: the cycle edge {e_1, e_{2k+2}} and the edge
/// {e_1, f_1} are negative, everything else positive.
pub fn family_x3(k: usize, l: usize) -> Result<XFamilyInstance, ConstructError> {
    if k < 1 || l < 1 {
        return Err(ConstructError::BadParameter(format!(
            "X3 needs k, l >= 1, got k={}, l={}",
            k, l
        )));
    }
    let cycle_len = 2 * k + 2;
    let minus = [(0, cycle_len - 1), (0, cycle_len)];
    Ok(family_x_cycle(cycle_len, l, &minus, |j| {
        if j % 2 == 0 {
            1
        } else {
            -1
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{enumerate_trees, enumerate_trees_one_doubled};
    use crate::poly::IntPoly;
    use crate::spectra::{shifted_definiteness, Definiteness};

    fn mg(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges).unwrap()
    }

    fn cycle_mg(n: usize) -> Multigraph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        mg(n, &edges)
    }

    #[test]
    fn line_graph_basics() {
        let star = mg(4, &[(0, 1), (0, 2), (0, 3)]);
        let lg = line_graph(&star).unwrap();
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.plus_edges().len(), 3); // triangle
        assert!(lg.minus_edges().is_empty());
        let path = mg(4, &[(0, 1), (1, 2), (2, 3)]);
        let lg = line_graph(&path).unwrap();
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.plus_edges(), &[(0, 1), (1, 2)]);
        let dbl = mg(2, &[(0, 1), (0, 1)]);
        let lg = line_graph(&dbl).unwrap();
        assert_eq!(lg.n(), 2);
        assert_eq!(lg.plus_edges(), &[(0, 1)]);
        let isolated = mg(3, &[(0, 1)]);
        assert_eq!(line_graph(&isolated), Err(ConstructError::IsolatedVertex(2)));
        // a line graph of a tree on n vertices has n-1 vertices
        for n in 2..=7 {
            for t in enumerate_trees(n).unwrap() {
                assert_eq!(line_graph(&t).unwrap().n(), n - 1);
            }
        }
        // the line graph of a cycle is the cycle again
        for n in 3..=8 {
            let lc = line_graph(&cycle_mg(n)).unwrap();
            let c = signed_cycle(n, n).unwrap();
            assert!(lc.switching_equivalent(&c).unwrap());
        }
    }

    #[test]
    fn dagger_signing_on_plain_cycles() {
        for len in [4usize, 6] {
            let h = cycle_mg(len);
            let edges = h.edges().to_vec();
            // pick two cycle edges sharing vertex 0
            let u = edges.iter().copied().find(|&(a, _)| a == 0).unwrap();
            let up = edges
                .iter()
                .copied()
                .find(|&e| e != u && (e.0 == 0 || e.1 == 0))
                .unwrap();
            let d = l_dagger(&h, u, up).unwrap();
            assert_eq!(d.minus_edges().len(), 1);
            assert_eq!(d.plus_edges().len(), len - 1);
            let expect = signed_cycle(len, len - 1).unwrap();
            assert!(d.switching_equivalent(&expect).unwrap());
        }
    }

    #[test]
    fn dagger_signing_with_pendant() {
        // C4 with a pendant edge at vertex 0; u, u' the cycle edges at 0
        let h = mg(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]);
        let d = l_dagger(&h, (0, 1), (0, 3)).unwrap();
        // edges of h sorted: (0,1) (0,3) (0,4) (1,2) (2,3); u = (0,1) is 0
        // clique at vertex 0 is {(0,1), (0,3), (0,4)}
        let minus: Vec<(usize, usize)> = d.minus_edges().to_vec();
        assert_eq!(minus, vec![(0, 1), (0, 2)]);
        // all other line-graph adjacencies stay positive
        assert_eq!(d.plus_edges().len(), 6 - 2);
        // the signed graph keeps smallest eigenvalue above -2
        assert_eq!(
            shifted_definiteness(&d.adjacency_matrix(), &BigInt::from(2)),
            Definiteness::PositiveDefinite
        );
        // error paths
        assert_eq!(
            l_dagger(&h, (0, 1), (2, 3)),
            Err(ConstructError::NotCycleLineEdge)
        );
        assert_eq!(
            l_dagger(&h, (0, 1), (0, 4)),
            Err(ConstructError::NotCycleLineEdge)
        );
        let tri = cycle_mg(3);
        assert_eq!(
            l_dagger(&tri, (0, 1), (1, 2)),
            Err(ConstructError::CycleTooShort(3))
        );
        let tree = mg(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            l_dagger(&tree, (0, 1), (1, 2)),
            Err(ConstructError::NotUnicyclic)
        );
    }

    #[test]
    fn dagger_choice_of_edge_pair_is_immaterial() {
        // every adjacent pair of cycle edges yields one switching class
        let instances = [
            cycle_mg(4),
            cycle_mg(5),
            cycle_mg(6),
            mg(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
            mg(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (2, 5)]),
        ];
        for h in &instances {
            let cycle = h.unique_cycle().unwrap();
            if cycle.len() < 4 {
                continue;
            }
            let mut keys = Vec::new();
            for i in 0..cycle.len() {
                let a = cycle[i];
                let b = cycle[(i + 1) % cycle.len()];
                let c = cycle[(i + 2) % cycle.len()];
                let d = l_dagger(h, (a, b), (b, c)).unwrap();
                keys.push(d.canonical_key().unwrap());
                // and in the other order
                let d2 = l_dagger(h, (b, c), (a, b)).unwrap();
                keys.push(d2.canonical_key().unwrap());
            }
            keys.dedup();
            assert_eq!(keys.len(), 1, "dagger classes differ on {:?}", h);
        }
    }

    #[test]
    fn doubled_tree_extension_by_hand() {
        // doubled edge on two vertices: orthogonal columns, no edges
        let d2 = mg(2, &[(0, 1), (0, 1)]);
        let (g, m) = double_edge_extension(&d2).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 2);
        assert_eq!(
            m.gram(),
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]])
        );
        // path 0-1-2 with {0,1} doubled
        let h = mg(3, &[(0, 1), (0, 1), (1, 2)]);
        let (g, m) = double_edge_extension(&h).unwrap();
        assert_eq!(
            m.gram(),
            IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 2, -1], vec![0, -1, 2]])
        );
        assert_eq!(g.plus_edges(), &[(0, 1)]);
        assert_eq!(g.minus_edges(), &[(1, 2)]);
        // errors
        assert_eq!(
            double_edge_extension(&mg(3, &[(0, 1), (1, 2)])),
            Err(ConstructError::NotDoubledTree)
        );
        let two_doubles = mg(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]);
        assert_eq!(
            double_edge_extension(&two_doubles),
            Err(ConstructError::NotDoubledTree)
        );
        let cycle_plus_double = mg(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            double_edge_extension(&cycle_plus_double),
            Err(ConstructError::NotDoubledTree)
        );
    }

    #[test]
    fn doubled_tree_gram_determinant_is_always_4() {
        for t in 2..=6 {
            for h in enumerate_trees_one_doubled(t).unwrap() {
                let (_, m) = double_edge_extension(&h).unwrap();
                assert_eq!(m.gram().det(), BigInt::from(4));
            }
        }
    }

    #[test]
    fn modified_adjacency_matrix() {
        let k2 = SignedGraph::all_plus(2, &[(0, 1)]).unwrap();
        let a = modified_adjacency(&k2, 0).unwrap();
        assert_eq!(a, IntMatrix::from_rows(&[vec![-1, 1], vec![1, 0]]));
        assert!(modified_adjacency(&k2, 2).is_err());
        // zeroing the diagonal back recovers the adjacency matrix
        let mut b = a.clone();
        b.set(0, 0, BigInt::from(0));
        assert_eq!(b, k2.adjacency_matrix());
    }

    #[test]
    fn signed_cycles_and_their_eigenvalues() {
        assert!(signed_cycle(2, 0).is_err());
        assert!(signed_cycle(4, 5).is_err());
        let c = signed_cycle(4, 3).unwrap();
        assert_eq!(c.plus_edges().len(), 3);
        assert_eq!(c.minus_edges().len(), 1);
        assert_eq!(
            c.adjacency_matrix().char_poly(),
            IntPoly::from_i64(&[4, 0, -4, 0, 1])
        );
        // odd number of (+)-edges keeps the smallest eigenvalue above -2,
        // otherwise it is exactly -2
        for len in 3..=12 {
            for plus in 0..=len {
                let g = signed_cycle(len, plus).unwrap();
                let d = shifted_definiteness(&g.adjacency_matrix(), &BigInt::from(2));
                if plus % 2 == 1 {
                    assert_eq!(d, Definiteness::PositiveDefinite, "len {} plus {}", len, plus);
                } else {
                    assert_eq!(
                        d,
                        Definiteness::PositiveSemidefiniteSingular,
                        "len {} plus {}",
                        len,
                        plus
                    );
                }
            }
        }
    }

    #[test]
    fn x_families_pass_their_self_checks() {
        for n in 3..=8 {
            let inst = family_x1(n).unwrap();
            let (g, v) = (inst.graph().clone(), inst.distinguished());
            assert_eq!(g.n(), n);
            assert_eq!(v, n - 1);
            assert!(g.minus_edges().is_empty());
            // deleting the distinguished vertex leaves smallest eig > -2
            let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
            let sub = g.adjacency_matrix().principal_submatrix(&keep);
            assert_eq!(
                shifted_definiteness(&sub, &BigInt::from(2)),
                Definiteness::PositiveDefinite
            );
        }
        for k in 1..=2 {
            for l in 1..=3 {
                let i2 = family_x2(k, l).unwrap();
                let (g2, v2) = (i2.graph().clone(), i2.distinguished());
                assert_eq!(g2.n(), 2 * k + 1 + l);
                assert_eq!(v2, 2 * k + l);
                assert!(g2.minus_edges().is_empty());
                let i3 = family_x3(k, l).unwrap();
                let (g3, v3) = (i3.graph().clone(), i3.distinguished());
                assert_eq!(g3.n(), 2 * k + 2 + l);
                assert_eq!(v3, 2 * k + 1 + l);
                assert_eq!(g3.minus_edges().len(), 2);
                for (g, v) in [(&g2, v2), (&g3, v3)] {
                    let keep: Vec<usize> = (0..g.n()).filter(|&i| i != v).collect();
                    let sub = g.adjacency_matrix().principal_submatrix(&keep);
                    assert_eq!(
                        shifted_definiteness(&sub, &BigInt::from(2)),
                        Definiteness::PositiveDefinite
                    );
                }
            }
        }
        assert!(family_x1(2).is_err());
        assert!(family_x2(0, 1).is_err());
        assert!(family_x3(1, 0).is_err());
    }

    #[test]
    fn x2_is_the_line_graph_of_an_odd_cycle_with_pendant_path() {
        for k in 1..=2 {
            for l in 1..=2 {
                let cl = 2 * k + 1;
                let mut edges: Vec<(usize, usize)> = (0..cl - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, cl - 1));
                edges.push((0, cl)); // pendant path starts at cycle vertex 0
                for j in 1..l {
                    edges.push((cl + j - 1, cl + j));
                }
                let h = mg(cl + l, &edges);
                let lg = line_graph(&h).unwrap();
                let x2 = family_x2(k, l).unwrap();
                assert!(lg.switching_equivalent(x2.graph()).unwrap());
            }
        }
    }

    #[test]
    fn x3_is_the_dagger_signing_of_an_even_cycle_with_pendant_path() {
        for k in 1..=2 {
            for l in 1..=2 {
                let cl = 2 * k + 2;
                let mut edges: Vec<(usize, usize)> = (0..cl - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, cl - 1));
                edges.push((0, cl));
                for j in 1..l {
                    edges.push((cl + j - 1, cl + j));
                }
                let h = mg(cl + l, &edges);
                // u, u' are the two cycle edges meeting at the attach vertex
                let d = l_dagger(&h, (0, 1), (0, cl - 1)).unwrap();
                let x3 = family_x3(k, l).unwrap();
                assert!(d.switching_equivalent(x3.graph()).unwrap());
            }
        }
    }

    #[test]
    fn x3_sign_placement_is_unique_up_to_switching() {
        // over all sign patterns on the X3 shape, the eigenvector identity
        // at -2 picks out exactly one switching class
        for (k, l) in [(1usize, 1usize), (1, 2)] {
            let inst = family_x3(k, l).unwrap();
            let (x3, v) = (inst.graph().clone(), inst.distinguished());
            let x3_key = x3.canonical_key().unwrap();
            let under = x3.underlying_edges();
            let n = x3.n();
            let mut x: Vec<BigInt> = (1..=2 * k + 2)
                .map(|j| BigInt::from(if j % 2 == 0 { 1 } else { -1 }))
                .collect();
            for j in 1..=l {
                x.push(BigInt::from(if j % 2 == 0 { 2 } else { -2 }));
            }
            let mut classes = Vec::new();
            for mask in 0..1u32 << under.len() {
                let minus: Vec<(usize, usize)> = under
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let plus: Vec<(usize, usize)> = under
                    .iter()
                    .copied()
                    .filter(|e| !minus.contains(e))
                    .collect();
                let g = SignedGraph::new(n, &plus, &minus).unwrap();
                let a = modified_adjacency(&g, v).unwrap();
                if verify_eigenpair(&a, &x, &BigInt::from(-2)) {
                    let key = g.canonical_key().unwrap();
                    if !classes.contains(&key) {
                        classes.push(key);
                    }
                }
            }
            assert_eq!(classes, vec![x3_key], "k={} l={}", k, l);
        }
    }

    #[test]
    fn incidence_identities_on_trees_and_even_cycles() {
        let two = BigInt::from(2);
        let mut instances: Vec<Multigraph> = Vec::new();
        for n in 2..=8 {
            instances.extend(enumerate_trees(n).unwrap());
        }
        instances.push(cycle_mg(4));
        instances.push(cycle_mg(6));
        instances.push(cycle_mg(8));
        instances.push(cycle_mg(10));
        for h in &instances {
            let b = h.oriented_incidence(true).unwrap();
            let lg = line_graph(h).unwrap();
            // B^T B = A(line graph) + 2I with all-(+) signs
            assert_eq!(b.gram(), lg.adjacency_matrix().add_diag(&two));
            // B B^T is the Laplacian
            let mut lap = IntMatrix::zeros(h.n(), h.n());
            for v in 0..h.n() {
                lap.set(v, v, BigInt::from(h.degree(v) as i64));
            }
            for &(u, v) in &h.simple_edges() {
                lap.set(u, v, BigInt::from(-1));
                lap.set(v, u, BigInt::from(-1));
            }
            assert_eq!(b.mul(&b.transpose()), lap);
            // nonzero spectra of the two products coincide
            let p1 = b.gram().char_poly();
            let p2 = b.mul(&b.transpose()).char_poly();
            assert_eq!(p1.shift_up(h.n()), p2.shift_up(h.edges().len()));
        }
    }
}

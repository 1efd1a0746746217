//! Exhaustive sweeps over all small signed graphs, used as an independent
//! oracle for the line-growth enumeration and the verification campaigns.

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{SignedGraph, SwitchingKey, MAX_CANON_VERTICES};
use crate::matrix::det_i128;
use crate::spectra::{shifted_definiteness, Definiteness};

/// Sweeping all sign patterns is only tractable for very small graphs.
pub const SWEEP_MAX_VERTICES: usize = 6;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum SweepError {
    #[error("sweep over {0} vertices exceeds the bound {1}")]
    BoundExceeded(usize, usize),
}

/// Positive definiteness of A + 2I through machine-integer leading
/// minors; exact for adjacency matrices of desk-scale graphs.
pub fn shifted_adjacency_positive_definite(g: &SignedGraph) -> bool {
    let n = g.n();
    let a: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 2 } else { g.sign(i, j) as i128 })
                .collect()
        })
        .collect();
    let pd = (1..=n).all(|k| {
        let block: Vec<Vec<i128>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_i128(block) > 0
    });
    debug_assert_eq!(
        pd,
        shifted_definiteness(&g.adjacency_matrix(), &BigInt::from(2))
            == Definiteness::PositiveDefinite
    );
    pd
}

/// One representative per switching class of connected signed graphs on
/// `n` vertices with smallest eigenvalue above -2, sorted by canonical
/// key. Every underlying graph is enumerated; sign patterns are reduced
/// to chord signs over a spanning tree, which meets every switching class.
pub fn lambda_gt_minus2_classes(
    n: usize,
) -> Result<Vec<(SwitchingKey, SignedGraph)>, SweepError> {
    classes_where(n, shifted_adjacency_positive_definite)
}

/// Every switching class of connected signed graphs on `n` vertices,
/// without any eigenvalue filter, sorted by canonical key.
pub fn connected_classes(n: usize) -> Result<Vec<(SwitchingKey, SignedGraph)>, SweepError> {
    classes_where(n, |_| true)
}

fn classes_where(
    n: usize,
    keep: impl Fn(&SignedGraph) -> bool,
) -> Result<Vec<(SwitchingKey, SignedGraph)>, SweepError> {
    if n == 0 || n > SWEEP_MAX_VERTICES.min(MAX_CANON_VERTICES) {
        return Err(SweepError::BoundExceeded(n, SWEEP_MAX_VERTICES));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut classes: std::collections::HashMap<SwitchingKey, SignedGraph> =
        std::collections::HashMap::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let skeleton = SignedGraph::all_plus(n, &edges).expect("valid edge list");
        if !skeleton.is_connected() {
            continue;
        }
        // spanning tree via BFS; tree edges stay (+), chords carry signs
        let mut in_tree = vec![false; edges.len()];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if !in_tree[i] && (seen[u] ^ seen[v]) {
                    in_tree[i] = true;
                    seen[u] = true;
                    seen[v] = true;
                    grew = true;
                }
            }
        }
        let chords: Vec<usize> = (0..edges.len()).filter(|&i| !in_tree[i]).collect();
        for smask in 0u32..1 << chords.len() {
            let minus: Vec<(usize, usize)> = chords
                .iter()
                .enumerate()
                .filter(|(b, _)| smask >> b & 1 == 1)
                .map(|(_, &i)| edges[i])
                .collect();
            let plus: Vec<(usize, usize)> = edges
                .iter()
                .copied()
                .filter(|e| !minus.contains(e))
                .collect();
            let g = SignedGraph::new(n, &plus, &minus).expect("valid signing");
            if !keep(&g) {
                continue;
            }
            let key = g.canonical_key().expect("within canonical bound");
            classes.entry(key).or_insert(g);
        }
    }
    let mut out: Vec<(SwitchingKey, SignedGraph)> = classes.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::signed_cycle;

    #[test]
    fn tiny_levels_by_hand() {
        assert_eq!(lambda_gt_minus2_classes(1).unwrap().len(), 1);
        assert_eq!(lambda_gt_minus2_classes(2).unwrap().len(), 1);
        // on 3 vertices: the path class and the balanced triangle class;
        // the unbalanced triangle sits at exactly -2 and is excluded
        let level3 = lambda_gt_minus2_classes(3).unwrap();
        assert_eq!(level3.len(), 2);
        let path = SignedGraph::all_plus(3, &[(0, 1), (1, 2)]).unwrap();
        let triangle = signed_cycle(3, 3).unwrap();
        let keys: Vec<_> = level3.iter().map(|(k, _)| k.clone()).collect();
        assert!(keys.contains(&path.canonical_key().unwrap()));
        assert!(keys.contains(&triangle.canonical_key().unwrap()));
        let unbalanced = signed_cycle(3, 2).unwrap();
        assert!(!keys.contains(&unbalanced.canonical_key().unwrap()));
        // on 4 vertices: P4, the claw, the balanced paw, the one-(-)
        // 4-cycle, the balanced diamond, the balanced K4
        assert_eq!(lambda_gt_minus2_classes(4).unwrap().len(), 6);
    }

    #[test]
    fn sweep_respects_bounds() {
        assert!(lambda_gt_minus2_classes(0).is_err());
        assert!(lambda_gt_minus2_classes(7).is_err());
        assert!(connected_classes(7).is_err());
    }

    #[test]
    fn unfiltered_classes_by_hand() {
        // one isolated vertex; K2; on 3 vertices the path plus the two
        // triangle classes
        assert_eq!(connected_classes(1).unwrap().len(), 1);
        assert_eq!(connected_classes(2).unwrap().len(), 1);
        assert_eq!(connected_classes(3).unwrap().len(), 3);
        // the filtered list is a sublist of the unfiltered one
        let all4 = connected_classes(4).unwrap();
        for (key, _) in lambda_gt_minus2_classes(4).unwrap() {
            assert!(all4.iter().any(|(k, _)| *k == key));
        }
    }

    #[test]
    fn every_class_member_is_connected_and_above_minus2() {
        for n in 1..=5 {
            for (key, g) in lambda_gt_minus2_classes(n).unwrap() {
                assert!(g.is_connected());
                assert!(shifted_adjacency_positive_definite(&g));
                assert_eq!(g.canonical_key().unwrap(), key);
            }
        }
    }
}

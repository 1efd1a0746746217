//! Stable JSON shapes for the command-line surface. Every builder here
//! returns a `serde_json::Value` so callers can print or embed it.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classify::{representation_graph, ClassificationResult, ClassifyError, RepresentationData};
use crate::graph::SignedGraph;
use crate::hoffman::HoffmanGraph;
use crate::matrix::IntMatrix;
use crate::spectra::{
    default_isolation_width, rational_str, shifted_definiteness, smallest_eig_interval,
    Definiteness,
};

fn poly_coeffs(m: &IntMatrix) -> Vec<String> {
    m.char_poly().coeffs().iter().map(|c| c.to_string()).collect()
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

/// Characteristic polynomial (constant term first), a certified interval
/// for the smallest eigenvalue, and its exact position relative to -2.
pub fn spectra_json(g: &SignedGraph) -> Value {
    let a = g.adjacency_matrix();
    let trichotomy = match shifted_definiteness(&a, &BigInt::from(2)) {
        Definiteness::PositiveDefinite => "greater",
        Definiteness::PositiveSemidefiniteSingular => "equal",
        Definiteness::Indefinite => "less",
    };
    let (eig, exact) = if g.n() == 0 {
        (Value::Null, Value::Null)
    } else {
        let e = smallest_eig_interval(&a, &default_isolation_width());
        (
            json!({
                "lo": rational_str(&e.interval.lo),
                "hi": rational_str(&e.interval.hi),
            }),
            Value::Bool(e.exact_rational),
        )
    };
    json!({
        "vertices": g.n(),
        "char_poly": poly_coeffs(&a),
        "smallest_eig": eig,
        "exact_rational": exact,
        "trichotomy_vs_minus2": trichotomy,
    })
}

/// Canonical key plus the representative's text form.
pub fn canon_json(g: &SignedGraph) -> Value {
    let key = g.canonical_key().expect("within canonical bound");
    json!({
        "vertices": g.n(),
        "key": key.hex(),
        "esg_text": g.to_esg(),
    })
}

/// Equivalence verdict for two graphs.
pub fn equiv_json(a: &SignedGraph, b: &SignedGraph, equivalent: bool) -> Value {
    json!({
        "left_vertices": a.n(),
        "right_vertices": b.n(),
        "equivalent": equivalent,
    })
}

/// Label, representation matrix (row-major), representation multigraph
/// in ".esg" text, the switching certificate, and the E8 line witness
/// for exceptional inputs.
pub fn classification_json(r: &ClassificationResult) -> Value {
    let m = r
        .representation()
        .map(|rep| json!(matrix_rows(rep.matrix())))
        .unwrap_or(Value::Null);
    let h = r
        .rep_graph()
        .map(|h| json!(h.to_esg()))
        .unwrap_or(Value::Null);
    let certificate = r
        .certificate()
        .map(|(pi, w)| json!({ "permutation": pi, "switch_set": w }))
        .unwrap_or(Value::Null);
    let e8 = r
        .e8_witness()
        .map(|lines| {
            json!(lines
                .iter()
                .map(|&(idx, sign)| json!([idx, sign]))
                .collect::<Vec<_>>())
        })
        .unwrap_or(Value::Null);
    json!({
        "label": r.label().to_string(),
        "m": m,
        "h_esg": h,
        "certificate": certificate,
        "e8_lines": e8,
    })
}

/// Integral representation verdict: the matrix and its representation
/// graph when one exists, nulls otherwise.
pub fn represent_json(rep: Option<&RepresentationData>) -> Result<Value, ClassifyError> {
    match rep {
        Some(data) => {
            let h = representation_graph(data)?;
            Ok(json!({
                "representable": true,
                "m": matrix_rows(data.matrix()),
                "h_esg": h.to_esg(),
            }))
        }
        None => Ok(json!({
            "representable": false,
            "m": Value::Null,
            "h_esg": Value::Null,
        })),
    }
}

/// The B matrix, its characteristic polynomial, and whether its smallest
/// eigenvalue exceeds -3.
pub fn hoffman_eig_json(h: &HoffmanGraph) -> Value {
    let b = h.b_matrix();
    let gt = h.smallest_eig_gt(&num_rational::BigRational::from_integer(BigInt::from(-3)));
    let special = h
        .special_graph()
        .map(|s| json!(s.to_esg()))
        .unwrap_or(Value::Null);
    json!({
        "slim": h.slim(),
        "fat": h.fat(),
        "b_matrix": matrix_rows(&b),
        "char_poly": poly_coeffs(&b),
        "greater_than_minus3": gt,
        "special_esg": special,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::construct::signed_cycle;

    #[test]
    fn spectra_shapes() {
        // all-(-) C5 sits exactly at -2
        let v = spectra_json(&signed_cycle(5, 0).unwrap());
        assert_eq!(v["trichotomy_vs_minus2"], "equal");
        assert_eq!(v["smallest_eig"]["lo"], "-2/1");
        assert_eq!(v["exact_rational"], true);
        // char poly of C4 with 3 (+)-edges: x^4 - 4x^2 + 4 ... constant first
        let v = spectra_json(&signed_cycle(4, 3).unwrap());
        assert_eq!(v["char_poly"], json!(["4", "0", "-4", "0", "1"]));
        assert_eq!(v["trichotomy_vs_minus2"], "greater");
        let single = SignedGraph::all_plus(1, &[]).unwrap();
        assert_eq!(spectra_json(&single)["smallest_eig"]["hi"], "0/1");
    }

    use crate::graph::SignedGraph;

    #[test]
    fn classification_shapes() {
        let c5 = signed_cycle(5, 5).unwrap();
        let v = classification_json(&classify(&c5).unwrap());
        assert_eq!(v["label"], "OddUnicyclic");
        assert!(v["m"].is_array());
        assert!(v["h_esg"].as_str().unwrap().starts_with("vertices"));
        assert!(v["certificate"]["permutation"].is_array());
        assert!(v["e8_lines"].is_null());
        let canon = canon_json(&c5);
        assert!(canon["key"].as_str().unwrap().starts_with("05:"));
        let re = SignedGraph::parse_esg(canon["esg_text"].as_str().unwrap()).unwrap();
        assert_eq!(re, c5);
    }

    #[test]
    fn hoffman_shapes() {
        let h = HoffmanGraph::new(2, 1, &[(0, 2), (1, 2)]).unwrap();
        let v = hoffman_eig_json(&h);
        assert_eq!(v["greater_than_minus3"], true);
        assert_eq!(v["b_matrix"], json!([["-1", "-1"], ["-1", "-1"]]));
        assert!(v["special_esg"].as_str().unwrap().contains("edge 0 1 -"));
    }
}

//! Algebra and witness files.
//!
//! Algebra JSON:
//! `{"dim": 3, "field": "Q", "symmetry": "commutative", "products": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}`.
//! Unlisted products are zero; the symmetry completes the table.
//!
//! Witness JSON:
//! `{"dim": 3, "kind": "g_inverse", "entries": [{"row": 1, "col": 1, "value": "t"}], "post_iso": [["1", "0"], ...], "source": "catalog:J(1,0)@3", "target": "catalog:J3@3"}`.
//! Unlisted entries are zero; `field`, `post_iso`, `source` and `target` are optional.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Product, Symmetry};
use crate::degeneration::{Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::exactnum::{FieldKind, Scalar, TPoly};
use crate::linalg::Matrix;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default = "default_field")]
    field: String,
    #[serde(default = "default_symmetry")]
    symmetry: Symmetry,
    products: Vec<ProductEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixEntry {
    row: usize,
    col: usize,
    value: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessFile {
    dim: usize,
    kind: WitnessKind,
    #[serde(default = "default_field")]
    field: String,
    entries: Vec<MatrixEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    post_iso: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<String>,
}

fn default_field() -> String {
    "Q".to_string()
}

fn default_symmetry() -> Symmetry {
    Symmetry::None
}

/// Serializes with object keys in sorted order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))
}

/// The field named by an algebra or witness file, `Q` when absent.
pub fn field_of(s: &str) -> Result<FieldKind> {
    let v: serde_json::Value = from_json(s)?;
    match v.get("field") {
        None => Ok(FieldKind::Q),
        Some(serde_json::Value::String(f)) => f.parse(),
        Some(other) => Err(Error::parse(format!("field must be a string, got {other}"))),
    }
}

fn check_field<F: Scalar>(found: &str) -> Result<()> {
    let kind: FieldKind = found.parse()?;
    // rational files embed into the Gaussian field
    if kind == F::KIND || kind == FieldKind::Q {
        Ok(())
    } else {
        Err(Error::FieldMismatch { expected: F::KIND.to_string(), found: kind.to_string() })
    }
}

/// The strongest symmetry the table satisfies.
pub fn detect_symmetry<F: Scalar>(alg: &Algebra<F>) -> Symmetry {
    let n = alg.dim();
    let pairs = || (1..=n).flat_map(move |i| (1..=n).map(move |j| (i, j)));
    let comm = pairs().all(|(i, j)| (1..=n).all(|k| alg.coeff(i, j, k) == alg.coeff(j, i, k)));
    if comm && !alg.is_abelian() {
        return Symmetry::Commutative;
    }
    let anti =
        pairs().all(|(i, j)| (1..=n).all(|k| *alg.coeff(i, j, k) == -alg.coeff(j, i, k).clone()));
    if anti {
        Symmetry::Anticommutative
    } else if comm {
        Symmetry::Commutative
    } else {
        Symmetry::None
    }
}

pub fn algebra_to_json<F: Scalar>(alg: &Algebra<F>) -> String {
    let symmetry = detect_symmetry(alg);
    let products = alg
        .nonzero_constants()
        .into_iter()
        .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c))
        .filter(|(i, j, _, _)| match symmetry {
            Symmetry::None => true,
            Symmetry::Commutative => i <= j,
            Symmetry::Anticommutative => i < j,
        })
        .map(|(i, j, k, c)| ProductEntry { i, j, k, c: c.to_string() })
        .collect();
    to_sorted_json(&AlgebraFile { dim: alg.dim(), field: F::KIND.to_string(), symmetry, products })
}

pub fn algebra_from_json<F: Scalar>(s: &str) -> Result<Algebra<F>> {
    let file: AlgebraFile = from_json(s)?;
    check_field::<F>(&file.field)?;
    let products = file
        .products
        .into_iter()
        .map(|p| Ok(Product::new(p.i, p.j, p.k, p.c.parse()?)))
        .collect::<Result<Vec<_>>>()?;
    Algebra::new(file.dim, &products, file.symmetry)
}

pub fn witness_to_json<F: Scalar>(w: &Witness<F>) -> String {
    let n = w.dim();
    let mut entries = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let v = w.matrix.get(r, c);
            if !v.is_zero() {
                entries.push(MatrixEntry { row: r + 1, col: c + 1, value: v.to_string() });
            }
        }
    }
    let post_iso = w
        .post_iso
        .as_ref()
        .map(|q| q.row_vecs().map(|row| row.iter().map(F::to_string).collect()).collect());
    to_sorted_json(&WitnessFile {
        dim: n,
        kind: w.kind,
        field: F::KIND.to_string(),
        entries,
        post_iso,
        source: w.source.clone(),
        target: w.target.clone(),
    })
}

pub fn witness_from_json<F: Scalar>(s: &str) -> Result<Witness<F>> {
    let file: WitnessFile = from_json(s)?;
    check_field::<F>(&file.field)?;
    let n = file.dim;
    let mut m = Matrix::from_fn(n, n, |_, _| TPoly::<F>::zero());
    for e in file.entries {
        for index in [e.row, e.col] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, dim: n });
            }
        }
        m.set(e.row - 1, e.col - 1, e.value.parse()?);
    }
    let mut w = Witness::new(file.kind, m)?;
    if let Some(rows) = file.post_iso {
        let rows = rows
            .into_iter()
            .map(|row| row.iter().map(|v| v.parse()).collect::<Result<Vec<F>>>())
            .collect::<Result<Vec<_>>>()?;
        let q = Matrix::from_rows(rows)?;
        if q.rows() != n || q.cols() != n {
            return Err(Error::DimensionMismatch { left: n, right: q.rows().max(q.cols()) });
        }
        w = w.with_post_iso(q);
    }
    w.source = file.source;
    w.target = file.target;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Params};
    use crate::exactnum::{Gaussian, Rational};

    #[test]
    fn algebra_round_trip() {
        for name in ["J3", "n52", "A5", "nu"] {
            let a = catalog::build::<Rational>(name, 5, &Params::new()).unwrap();
            let s = algebra_to_json(&a);
            assert_eq!(algebra_from_json::<Rational>(&s).unwrap(), a, "{s}");
        }
    }

    #[test]
    fn algebra_file_format() {
        let s = r#"{"dim": 3, "field": "Q", "symmetry": "commutative",
                    "products": [{"i": 1, "j": 2, "k": 3, "c": "1/2"}]}"#;
        let a = algebra_from_json::<Rational>(s).unwrap();
        assert_eq!(a.coeff(2, 1, 3), &Rational::ratio(1, 2));
        let conflict = r#"{"dim": 2, "symmetry": "anticommutative",
                    "products": [{"i": 1, "j": 2, "k": 2, "c": "1"}, {"i": 2, "j": 1, "k": 2, "c": "1"}]}"#;
        assert!(matches!(
            algebra_from_json::<Rational>(conflict),
            Err(Error::SymmetryConflict { .. })
        ));
        let qi = r#"{"dim": 1, "field": "Qi", "products": [{"i": 1, "j": 1, "k": 1, "c": "i"}]}"#;
        assert_eq!(field_of(qi).unwrap(), FieldKind::Qi);
        assert!(matches!(algebra_from_json::<Rational>(qi), Err(Error::FieldMismatch { .. })));
        assert_eq!(algebra_from_json::<Gaussian>(qi).unwrap().coeff(1, 1, 1), &Gaussian::i());
        assert!(algebra_from_json::<Rational>("{\"dim\": 2}").is_err());
    }

    #[test]
    fn witness_round_trip() {
        let p = Params::from([("zeta".into(), vec![Rational::from_i64(1), Rational::from_i64(0)])]);
        for (id, n, params) in [("W2", 3, p), ("W3", 5, Params::new()), ("W11", 6, Params::new())] {
            let w = catalog::witness::<Rational>(id, n, &params).unwrap();
            let s = witness_to_json(&w);
            assert_eq!(witness_from_json::<Rational>(&s).unwrap(), w, "{s}");
        }
    }

    #[test]
    fn witness_file_format() {
        let s = r#"{"dim": 2, "kind": "g", "entries": [{"row": 1, "col": 1, "value": "t^-2"},
                    {"row": 2, "col": 2, "value": "1"}], "target": "catalog:a@2"}"#;
        let w = witness_from_json::<Rational>(s).unwrap();
        assert_eq!(w.matrix.get(0, 0), &TPoly::t_pow(-2));
        assert!(w.matrix.get(0, 1).is_zero());
        assert_eq!(w.target.as_deref(), Some("catalog:a@2"));
        assert!(w.post_iso.is_none());
        let bad = r#"{"dim": 1, "kind": "g", "entries": [{"row": 2, "col": 1, "value": "t"}]}"#;
        assert!(matches!(witness_from_json::<Rational>(bad), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn keys_are_sorted() {
        let a = catalog::build::<Rational>("J3", 3, &Params::new()).unwrap();
        let s = algebra_to_json(&a);
        let order: Vec<usize> = ["\"dim\"", "\"field\"", "\"products\"", "\"symmetry\""]
            .iter()
            .map(|k| s.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]), "{s}");
    }
}

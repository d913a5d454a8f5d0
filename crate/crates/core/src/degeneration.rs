//! Parametrized basis changes `g_t`, the transformed structure constants
//! `g_t * A` over the field of rational functions in `t`, and their limits as
//! `t → 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{transform_tensor_with, Algebra};
use crate::error::{Error, Result};
use crate::exactnum::{as_laurent, tmatrix_inverse, to_ratfn, Field, RatFn, Scalar, TPoly};
use crate::invariants::{derivation_dim, invariant_profile};
use crate::linalg::Matrix;

/// Which map a witness matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// The matrix is `g_t`: column `i` is `g_t(e_i)`.
    G,
    /// The matrix is `g_t⁻¹`: column `i` is the new basis vector that plays
    /// the role of `e_i` in the limit.
    GInverse,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::G => "g",
            WitnessKind::GInverse => "g_inverse",
        })
    }
}

impl FromStr for WitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "g" => Ok(WitnessKind::G),
            "g_inverse" => Ok(WitnessKind::GInverse),
            other => Err(Error::parse(format!("unknown witness kind `{other}`"))),
        }
    }
}

/// A matrix over the rational functions in `t`.
pub type RatMatrix<F> = Matrix<RatFn<F>>;

/// A curve of basis changes certifying a degeneration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<F: Scalar> {
    pub kind: WitnessKind,
    pub matrix: Matrix<TPoly<F>>,
    /// Columns are new basis vectors, in limit coordinates, in which the limit
    /// is rewritten before comparison with the target.
    pub post_iso: Option<Matrix<F>>,
    pub source: Option<String>,
    pub target: Option<String>,
}

impl<F: Scalar> Witness<F> {
    pub fn new(kind: WitnessKind, matrix: Matrix<TPoly<F>>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        Ok(Witness { kind, matrix, post_iso: None, source: None, target: None })
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(WitnessKind::G, &vec![0; n])
    }

    /// `t^e · I` with kind `g`.
    pub fn scaling(n: usize, e: i64) -> Self {
        Self::diagonal(WitnessKind::G, &vec![e; n])
    }

    /// `diag(t^{e_1}, ..., t^{e_n})`.
    pub fn diagonal(kind: WitnessKind, exponents: &[i64]) -> Self {
        let n = exponents.len();
        let m =
            Matrix::from_fn(
                n,
                n,
                |r, c| {
                    if r == c {
                        TPoly::t_pow(exponents[r])
                    } else {
                        TPoly::zero()
                    }
                },
            );
        Witness { kind, matrix: m, post_iso: None, source: None, target: None }
    }

    pub fn with_post_iso(mut self, q: Matrix<F>) -> Self {
        self.post_iso = Some(q);
        self
    }

    pub fn with_endpoints(mut self, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self.target = Some(target.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `(g_t, g_t⁻¹)` over the rational-function field.
    pub fn g_pair(&self) -> Result<(RatMatrix<F>, RatMatrix<F>)> {
        let m = to_ratfn(&self.matrix);
        let inv = tmatrix_inverse(&self.matrix)?;
        Ok(match self.kind {
            WitnessKind::G => (m, inv),
            WitnessKind::GInverse => (inv, m),
        })
    }

    /// The same curve stored in the opposite orientation. Fails with
    /// [`Error::NotLaurent`] when the inverse has non-Laurent entries.
    pub fn flipped(&self) -> Result<Self> {
        let inv = as_laurent(&tmatrix_inverse(&self.matrix)?).ok_or(Error::NotLaurent)?;
        let kind = match self.kind {
            WitnessKind::G => WitnessKind::GInverse,
            WitnessKind::GInverse => WitnessKind::G,
        };
        Ok(Witness { kind, matrix: inv, ..self.clone() })
    }

    /// `g_t` at a numeric `t = t0`.
    pub fn g_at(&self, t0: &F) -> Result<Matrix<F>> {
        let (g, _) = self.g_pair()?;
        g.try_map(|f| f.eval(t0))
    }
}

/// Structure constants over the rational functions in `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamAlgebra<F> {
    n: usize,
    c: Vec<RatFn<F>>,
}

impl<F: Scalar> ParamAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coefficient of `e_k` in `e_i · e_j` (1-based).
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &RatFn<F> {
        &self.c[((i - 1) * self.n + (j - 1)) * self.n + (k - 1)]
    }

    /// 1-based positions of entries with a negative valuation.
    pub fn poles(&self) -> Vec<(usize, usize, usize)> {
        self.indexed()
            .filter(|(_, f)| f.valuation().is_some_and(|v| v < 0))
            .map(|(idx, _)| idx)
            .collect()
    }

    fn indexed(&self) -> impl Iterator<Item = ((usize, usize, usize), &RatFn<F>)> {
        let n = self.n;
        self.c
            .iter()
            .enumerate()
            .map(move |(idx, f)| ((idx / (n * n) + 1, (idx / n) % n + 1, idx % n + 1), f))
    }

    /// The entrywise limit at `t = 0`; the error names the first entry (in
    /// index order) without a limit.
    pub fn limit0(&self) -> Result<Algebra<F>> {
        let mut out = Vec::with_capacity(self.c.len());
        for ((i, j, k), f) in self.indexed() {
            out.push(f.limit0().map_err(|_| Error::PoleAt { i, j, k })?);
        }
        Ok(Algebra::from_tensor(self.n, out))
    }

    /// The algebra at a numeric value of `t`.
    pub fn eval(&self, t0: &F) -> Result<Algebra<F>> {
        let c = self.c.iter().map(|f| f.eval(t0)).collect::<Result<Vec<_>>>()?;
        Ok(Algebra::from_tensor(self.n, c))
    }
}

impl<F: Scalar> fmt::Debug for ParamAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .indexed()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j, k), v)| format!("({i},{j},{k}): {v}"))
            .collect();
        write!(f, "ParamAlgebra(dim {}) {{ {} }}", self.n, entries.join(", "))
    }
}

/// `g_t * A` with `(g*λ)(x, y) = g(λ(g⁻¹x, g⁻¹y))`.
pub fn transform<F: Scalar>(alg: &Algebra<F>, w: &Witness<F>) -> Result<ParamAlgebra<F>> {
    if w.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { left: alg.dim(), right: w.dim() });
    }
    let (g, h) = w.g_pair()?;
    let c = transform_tensor_with(alg, |v| RatFn::constant(v.clone()), &h, &g);
    Ok(ParamAlgebra { n: alg.dim(), c })
}

/// One structure constant where the (re-based) limit and the target differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual<F> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub found: F,
    pub expected: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVerdict<F: Scalar> {
    pub limit_exists: bool,
    /// First entry without a limit, 1-based.
    pub pole: Option<(usize, usize, usize)>,
    /// The limit after the optional `post_iso` change of basis.
    pub limit: Option<Algebra<F>>,
    pub limit_equals_target: bool,
    /// The source and target differ in some basis-independent invariant.
    pub proper: bool,
    pub source_der_dim: usize,
    pub target_der_dim: usize,
    pub residuals: Vec<Residual<F>>,
}

impl<F: Scalar> WitnessVerdict<F> {
    pub fn pass(&self) -> bool {
        self.limit_exists && self.limit_equals_target
    }
}

/// Checks that `lim_{t→0} g_t * source`, rewritten by `post_iso`, equals
/// `target` exactly. A missing limit is reported in the verdict.
pub fn verify_witness<F: Scalar>(
    source: &Algebra<F>,
    w: &Witness<F>,
    target: &Algebra<F>,
) -> Result<WitnessVerdict<F>> {
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch { left: source.dim(), right: target.dim() });
    }
    let curve = transform(source, w)?;
    let source_der_dim = derivation_dim(source);
    let target_der_dim = derivation_dim(target);
    let proper = source_der_dim != target_der_dim
        || invariant_profile(source).without_coordinate_data()
            != invariant_profile(target).without_coordinate_data();
    let limit = match curve.limit0() {
        Ok(l) => l,
        Err(Error::PoleAt { i, j, k }) => {
            return Ok(WitnessVerdict {
                limit_exists: false,
                pole: Some((i, j, k)),
                limit: None,
                limit_equals_target: false,
                proper,
                source_der_dim,
                target_der_dim,
                residuals: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let limit = match &w.post_iso {
        Some(q) => limit.in_basis(q)?,
        None => limit,
    };
    let residuals = residuals(&limit, target);
    Ok(WitnessVerdict {
        limit_exists: true,
        pole: None,
        limit_equals_target: residuals.is_empty(),
        limit: Some(limit),
        proper,
        source_der_dim,
        target_der_dim,
        residuals,
    })
}

fn residuals<F: Scalar>(found: &Algebra<F>, expected: &Algebra<F>) -> Vec<Residual<F>> {
    let n = found.dim();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let (a, b) = (found.coeff(i, j, k), expected.coeff(i, j, k));
                if a != b {
                    out.push(Residual { i, j, k, found: a.clone(), expected: b.clone() });
                }
            }
        }
    }
    out
}

/// Whether substituting each `t0` into `g_t * source` agrees with the
/// numeric change of basis by `g_{t0}`.
pub fn numeric_cross_check<F: Scalar>(
    source: &Algebra<F>,
    w: &Witness<F>,
    points: &[F],
) -> Result<bool> {
    let curve = transform(source, w)?;
    for t0 in points {
        let g = w.g_at(t0)?;
        if curve.eval(t0)? != source.apply_basis_change(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The single curve `t ↦ g2_t · q1⁻¹ · g1_t`: first `w1` (with its `post_iso`
/// `q1` folded in), then `w2`. The result keeps `w2`'s `post_iso` and is
/// stored in whichever orientation has Laurent-polynomial entries.
///
/// Each stage of a chain should still be verified on its own: the limit of a
/// product of curves need not be the composite of the stage limits.
pub fn compose_witnesses<F: Scalar>(w1: &Witness<F>, w2: &Witness<F>) -> Result<Witness<F>> {
    if w1.dim() != w2.dim() {
        return Err(Error::DimensionMismatch { left: w1.dim(), right: w2.dim() });
    }
    let (g1, _) = w1.g_pair()?;
    let (g2, _) = w2.g_pair()?;
    let mut g = g1;
    if let Some(q) = &w1.post_iso {
        let q_inv = q.inverse()?.map(|v| RatFn::constant(v.clone()));
        g = q_inv.mul(&g)?;
    }
    let g = g2.mul(&g)?;
    let (kind, matrix) = if let Some(m) = as_laurent(&g) {
        (WitnessKind::G, m)
    } else {
        let inv = g.inverse()?;
        (WitnessKind::GInverse, as_laurent(&inv).ok_or(Error::NotLaurent)?)
    };
    Ok(Witness {
        kind,
        matrix,
        post_iso: w2.post_iso.clone(),
        source: w1.source.clone(),
        target: w2.target.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Product, Symmetry};
    use crate::exactnum::Rational;

    type Q = Rational;

    fn alg(n: usize, prods: &[(usize, usize, usize, i64)], sym: Symmetry) -> Algebra<Q> {
        let ps: Vec<_> =
            prods.iter().map(|&(i, j, k, c)| Product::new(i, j, k, Q::from_i64(c))).collect();
        Algebra::new(n, &ps, sym).unwrap()
    }

    fn tp(s: &str) -> TPoly<Q> {
        s.parse().unwrap()
    }

    fn tmatrix(rows: &[&[&str]]) -> Matrix<TPoly<Q>> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| tp(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_witness_is_constant() {
        let j3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative);
        let curve = transform(&j3, &Witness::identity(3)).unwrap();
        assert_eq!(curve.coeff(1, 2, 3), &RatFn::constant(Q::from_i64(1)));
        let v = verify_witness(&j3, &Witness::identity(3), &j3).unwrap();
        assert!(v.pass());
        assert!(!v.proper);
    }

    #[test]
    fn scaling_multiplies_by_t() {
        let l2 = alg(2, &[(1, 1, 2, 1)], Symmetry::None);
        let curve = transform(&l2, &Witness::scaling(2, -1)).unwrap();
        assert_eq!(curve.coeff(1, 1, 2), &RatFn::from_poly(tp("t")));
        assert_eq!(curve.limit0().unwrap(), Algebra::abelian(2));
    }

    #[test]
    fn pole_location() {
        let p3 = alg(3, &[(1, 2, 2, 1), (1, 3, 3, 1)], Symmetry::Anticommutative);
        let w = Witness::diagonal(WitnessKind::G, &[1, 0, 0]);
        let curve = transform(&p3, &w).unwrap();
        assert_eq!(curve.coeff(1, 2, 2), &RatFn::from_poly(tp("t^-1")));
        assert_eq!(curve.limit0(), Err(Error::PoleAt { i: 1, j: 2, k: 2 }));
        let v = verify_witness(&p3, &w, &p3).unwrap();
        assert!(!v.limit_exists);
        assert_eq!(v.pole, Some((1, 2, 2)));
    }

    #[test]
    fn jzeta_to_j3_by_hand() {
        // J(1, 0): e1e1 = e1, e1e2 = e2. New basis f1 = t e1, f2 = e2 + e3,
        // f3 = t e2. Then f1f1 = t f1, f1f2 = t e2 = f3, f1f3 = t² e2 = t f3.
        let src = alg(3, &[(1, 1, 1, 1), (1, 2, 2, 1)], Symmetry::Commutative);
        let w = Witness::new(
            WitnessKind::GInverse,
            tmatrix(&[&["t", "0", "0"], &["0", "1", "t"], &["0", "1", "0"]]),
        )
        .unwrap();
        let curve = transform(&src, &w).unwrap();
        assert_eq!(curve.coeff(1, 1, 1), &RatFn::from_poly(tp("t")));
        assert_eq!(curve.coeff(1, 2, 3), &RatFn::constant(Q::from_i64(1)));
        assert_eq!(curve.coeff(1, 3, 3), &RatFn::from_poly(tp("t")));
        assert_eq!(curve.poles(), vec![]);
        let j3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative);
        let v = verify_witness(&src, &w, &j3).unwrap();
        assert!(v.pass(), "{v:?}");
        assert!(v.proper);
        assert!(v.source_der_dim < v.target_der_dim);
    }

    #[test]
    fn r2_plus_a1_to_n3() {
        let src = alg(3, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        let w = Witness::new(
            WitnessKind::GInverse,
            tmatrix(&[&["t", "0", "0"], &["0", "1", "t"], &["0", "1", "0"]]),
        )
        .unwrap();
        let n3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Anticommutative);
        assert!(verify_witness(&src, &w, &n3).unwrap().pass());
        let wrong = verify_witness(&src, &w, &Algebra::abelian(3)).unwrap();
        assert!(!wrong.pass());
        assert_eq!(wrong.residuals.len(), 2);
    }

    #[test]
    fn both_orientations_agree() {
        let src = alg(3, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        let w = Witness::new(
            WitnessKind::GInverse,
            tmatrix(&[&["t", "0", "0"], &["0", "1", "t"], &["0", "1", "0"]]),
        )
        .unwrap();
        let flipped = w.flipped().unwrap();
        assert_eq!(flipped.kind, WitnessKind::G);
        assert_eq!(transform(&src, &w).unwrap(), transform(&src, &flipped).unwrap());
    }

    #[test]
    fn numeric_substitution_matches_basis_change() {
        let src = alg(3, &[(1, 2, 2, 1), (1, 3, 3, 2)], Symmetry::Anticommutative);
        let w = Witness::new(
            WitnessKind::G,
            tmatrix(&[&["t^-1", "1", "0"], &["0", "1 + t", "0"], &["t", "0", "t^2"]]),
        )
        .unwrap();
        let curve = transform(&src, &w).unwrap();
        for t0 in [Q::ratio(1, 2), Q::ratio(1, 3)] {
            let g = w.g_at(&t0).unwrap();
            assert_eq!(curve.eval(&t0).unwrap(), src.apply_basis_change(&g).unwrap());
        }
        assert!(numeric_cross_check(&src, &w, &[Q::ratio(1, 2), Q::ratio(1, 3)]).unwrap());
    }

    #[test]
    fn singular_witness() {
        let w = Witness::<Q>::new(WitnessKind::G, tmatrix(&[&["t", "t"], &["1", "1"]])).unwrap();
        assert_eq!(transform(&Algebra::abelian(2), &w), Err(Error::Singular));
    }

    #[test]
    fn composition() {
        let w = Witness::<Q>::diagonal(WitnessKind::GInverse, &[1, 0, 2]);
        let c = compose_witnesses(&Witness::identity(3), &w).unwrap();
        assert_eq!(
            transform(&Algebra::abelian(3), &c).unwrap(),
            transform(&Algebra::abelian(3), &w).unwrap()
        );
        let s = compose_witnesses(&Witness::<Q>::scaling(3, -1), &Witness::scaling(3, -1)).unwrap();
        assert_eq!(s.matrix, Witness::<Q>::scaling(3, -2).matrix);
        assert_eq!(s.kind, WitnessKind::G);
    }
}

//! Finite-dimensional algebras given by structure constants.
//!
//! Indices in products, violations and pole locations are 1-based to match
//! the usual `e_1, ..., e_n` notation. Coordinate vectors are plain slices
//! indexed from 0.

mod identities;
mod series;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};

pub use identities::{Variety, VarietyReport, Violation};
pub use series::{SeriesKind, StructureFlags};

/// Completion applied by [`Algebra::new`] to the listed products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    None,
    Commutative,
    Anticommutative,
}

/// One entry `e_i · e_j ∋ coeff · e_k` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product<F> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: F,
}

impl<F> Product<F> {
    pub fn new(i: usize, j: usize, k: usize, coeff: F) -> Self {
        Product { i, j, k, coeff }
    }
}

/// An `n`-dimensional algebra: `e_i · e_j = Σ_k c[i][j][k] e_k`.
///
/// The tensor is always fully expanded; symmetric completion happens once, at
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra<F> {
    n: usize,
    c: Vec<F>,
}

impl<F: Scalar> Algebra<F> {
    /// Builds an algebra from a product list, completing it according to
    /// `symmetry`. Unlisted products are zero.
    pub fn new(n: usize, products: &[Product<F>], symmetry: Symmetry) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionConstraint {
                name: "algebra".into(),
                n,
                constraint: "n >= 1".into(),
            });
        }
        let mut alg = Self::abelian(n);
        let mut assigned = vec![false; n * n * n];
        let mut assign = |alg: &mut Self, i: usize, j: usize, k: usize, v: F| -> Result<()> {
            let idx = alg.idx(i, j, k);
            if assigned[idx] && alg.c[idx] != v {
                return Err(Error::SymmetryConflict { i: i + 1, j: j + 1, k: k + 1 });
            }
            assigned[idx] = true;
            alg.c[idx] = v;
            Ok(())
        };
        for p in products {
            for index in [p.i, p.j, p.k] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, dim: n });
                }
            }
            let (i, j, k) = (p.i - 1, p.j - 1, p.k - 1);
            match symmetry {
                Symmetry::None => assign(&mut alg, i, j, k, p.coeff.clone())?,
                Symmetry::Commutative => {
                    assign(&mut alg, i, j, k, p.coeff.clone())?;
                    assign(&mut alg, j, i, k, p.coeff.clone())?;
                }
                Symmetry::Anticommutative => {
                    if i == j && !p.coeff.is_zero() {
                        return Err(Error::SymmetryConflict { i: p.i, j: p.j, k: p.k });
                    }
                    assign(&mut alg, i, j, k, p.coeff.clone())?;
                    assign(&mut alg, j, i, k, -p.coeff.clone())?;
                }
            }
        }
        Ok(alg)
    }

    /// The abelian algebra `a_n` (all products zero).
    pub fn abelian(n: usize) -> Self {
        Algebra { n, c: vec![F::zero(); n * n * n] }
    }

    pub(crate) fn from_tensor(n: usize, c: Vec<F>) -> Self {
        debug_assert_eq!(c.len(), n * n * n);
        Algebra { n, c }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// Coefficient of `e_k` in `e_i · e_j` (1-based).
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.idx(i - 1, j - 1, k - 1)]
    }

    /// `e_i · e_j` as a coordinate vector (0-based `i`, `j`).
    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        let start = self.idx(i, j, 0);
        &self.c[start..start + self.n]
    }

    /// The nonzero structure constants as 0-based `(i, j, k, value)`.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.n;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v.clone()))
            .collect()
    }

    /// The nonzero products as a 1-based list, usable with [`Symmetry::None`].
    pub fn products(&self) -> Vec<Product<F>> {
        self.nonzero_constants()
            .into_iter()
            .map(|(i, j, k, v)| Product::new(i + 1, j + 1, k + 1, v))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(F::is_zero)
    }

    /// `u · v` for coordinate vectors.
    pub fn mul(&self, u: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.n];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let w = ui.clone() * vj;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(w.clone() * c);
                    }
                }
            }
        }
        out
    }

    /// `u · e_j`.
    pub(crate) fn mul_right_basis(&self, u: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.n];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(ui.clone() * c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ v · x` (columns are images of basis vectors).
    pub fn left_mult(&self, v: &[F]) -> Matrix<F> {
        let images: Vec<Vec<F>> =
            (0..self.n).map(|j| self.mul(v, &crate::linalg::unit_vector(self.n, j))).collect();
        Matrix::from_fn(self.n, self.n, |r, c| images[c][r].clone())
    }

    /// Matrix of `x ↦ x · v`.
    pub fn right_mult(&self, v: &[F]) -> Matrix<F> {
        let images: Vec<Vec<F>> =
            (0..self.n).map(|j| self.mul(&crate::linalg::unit_vector(self.n, j), v)).collect();
        Matrix::from_fn(self.n, self.n, |r, c| images[c][r].clone())
    }

    /// `g * A` where `g` sends `e_i` to column `i` of `p`:
    /// `(g*λ)(x, y) = g(λ(g⁻¹x, g⁻¹y))`.
    pub fn apply_basis_change(&self, p: &Matrix<F>) -> Result<Self> {
        self.check_square(p)?;
        let inv = p.inverse()?;
        Ok(Self::from_tensor(self.n, transform_tensor(self, &inv, p)))
    }

    /// Structure constants with respect to the basis formed by the columns of
    /// `q` (new basis vector `f_i = q e_i`). Equivalent to
    /// `apply_basis_change(q⁻¹)`.
    pub fn in_basis(&self, q: &Matrix<F>) -> Result<Self> {
        self.check_square(q)?;
        let inv = q.inverse()?;
        Ok(Self::from_tensor(self.n, transform_tensor(self, q, &inv)))
    }

    fn check_square(&self, p: &Matrix<F>) -> Result<()> {
        if !p.is_square() {
            return Err(Error::NotSquare { rows: p.rows(), cols: p.cols() });
        }
        if p.rows() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: p.rows() });
        }
        Ok(())
    }

    /// Block-diagonal direct sum; cross products vanish.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::abelian(n);
        for (i, j, k, v) in self.nonzero_constants() {
            let idx = out.idx(i, j, k);
            out.c[idx] = v;
        }
        let s = self.n;
        for (i, j, k, v) in other.nonzero_constants() {
            let idx = out.idx(i + s, j + s, k + s);
            out.c[idx] = v;
        }
        out
    }

    /// `span{u·v, v·u : u ∈ U, v ∈ V}`.
    pub fn subspace_product(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let mut vectors = Vec::with_capacity(2 * u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                vectors.push(self.mul(a, b));
                vectors.push(self.mul(b, a));
            }
        }
        Subspace::span(self.n, vectors)
    }

    /// One-sided product `span{u·v : u ∈ U, v ∈ V}`.
    pub fn left_product(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let vectors = u.basis().iter().flat_map(|a| v.basis().iter().map(|b| self.mul(a, b)));
        Subspace::span(self.n, vectors.collect::<Vec<_>>())
    }

    fn check_ambient(&self, u: &Subspace<F>) -> Result<()> {
        if u.ambient() != self.n {
            return Err(Error::AmbientMismatch { left: self.n, right: u.ambient() });
        }
        Ok(())
    }

    /// `v · v = v` exactly, with `v ≠ 0`.
    pub fn is_idempotent(&self, v: &[F]) -> bool {
        v.len() == self.n && !v.iter().all(F::is_zero) && self.mul(v, v) == v
    }

    /// Re-expresses the constants in another exact field.
    pub fn map_field<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Algebra<G> {
        Algebra { n: self.n, c: self.c.iter().map(f).collect() }
    }
}

/// `c'[i][j][k] = Σ h[a][i] h[b][j] c[a][b][c] g[k][c]` over any field that
/// scalars embed into. `h` plays `g⁻¹` and `g` plays `g`.
pub(crate) fn transform_tensor_with<F: Scalar, T: Field>(
    alg: &Algebra<F>,
    embed: impl Fn(&F) -> T,
    h: &Matrix<T>,
    g: &Matrix<T>,
) -> Vec<T> {
    let n = alg.dim();
    let row_support: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).filter(|&i| !h.get(a, i).is_zero()).collect()).collect();
    let col_support: Vec<Vec<usize>> =
        (0..n).map(|c| (0..n).filter(|&k| !g.get(k, c).is_zero()).collect()).collect();
    let mut out = vec![T::zero(); n * n * n];
    for (a, b, c, v) in alg.nonzero_constants() {
        let v = embed(&v);
        for &i in &row_support[a] {
            let vi = h.get(a, i).clone() * &v;
            for &j in &row_support[b] {
                let vij = vi.clone() * h.get(b, j);
                for &k in &col_support[c] {
                    let idx = (i * n + j) * n + k;
                    out[idx] = out[idx].clone() + &(vij.clone() * g.get(k, c));
                }
            }
        }
    }
    out
}

fn transform_tensor<F: Scalar>(alg: &Algebra<F>, h: &Matrix<F>, g: &Matrix<F>) -> Vec<F> {
    transform_tensor_with(alg, F::clone, h, g)
}

impl<F: Scalar> fmt::Display for Algebra<F> {
    /// Lists the nonzero products, one per line, as `e_i·e_j = Σ c e_k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for i in 0..self.n {
            for j in 0..self.n {
                let terms: Vec<String> = self
                    .basis_product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            format!("e{}", k + 1)
                        } else {
                            format!("({c}) e{}", k + 1)
                        }
                    })
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "e{}·e{} = {}", i + 1, j + 1, terms.join(" + "))?;
                    any = true;
                }
            }
        }
        if !any {
            writeln!(f, "(abelian, dim {})", self.n)?;
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}) {{ {:?} }}", self.n, self.products())
    }
}

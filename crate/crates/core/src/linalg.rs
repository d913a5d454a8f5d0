//! Exact dense linear algebra: reduced row-echelon form, nullspaces and
//! subspace lattice operations.
//!
//! Elimination is generic over [`Field`], so the same code inverts scalar
//! matrices and matrices over the rational-function field in `t`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { left: cols, right: bad.len() });
        }
        let n_rows = rows.len();
        Ok(Matrix { rows: n_rows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
        })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: rhs.rows });
        }
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] = out.data[idx].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(T::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + &(a.clone() * b)
                    }
                })
            })
            .collect())
    }

    /// Reduced row-echelon form with deterministic pivoting: the pivot of each
    /// column is the first row at or below the current one with a nonzero entry.
    pub fn rref(&self) -> Rref<T> {
        let mut rows: Vec<Vec<T>> =
            self.row_vecs().filter(|r| !r.iter().all(T::is_zero)).map(<[T]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = sparsest_pivot(&rows, rank, col) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for v in rows[rank][col..].iter_mut() {
                    if !v.is_zero() {
                        *v = v.clone() * &inv;
                    }
                }
            }
            let pivot_row = std::mem::take(&mut rows[rank]);
            let support: Vec<usize> =
                (col..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for &c in &support {
                    row[c] -= &(factor.clone() * &pivot_row[c]);
                }
            }
            rows[rank] = pivot_row;
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        let mut matrix = Matrix::zeros(self.rows, self.cols);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                matrix.set(r, c, v);
            }
        }
        Rref { matrix, rank, pivots }
    }

    /// Rank by forward elimination (no back substitution).
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<T>> =
            self.row_vecs().filter(|r| !r.iter().all(T::is_zero)).map(<[T]>::to_vec).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = sparsest_pivot(&rows, rank, col) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = std::mem::take(&mut rows[rank]);
            let inv = pivot_row[col].inv().expect("nonzero pivot");
            let support: Vec<usize> =
                (col + 1..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for row in rows[rank + 1..].iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone() * &inv;
                row[col] = T::zero();
                for &c in &support {
                    row[c] -= &(factor.clone() * &pivot_row[c]);
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<T>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (r, &p) in pivots.iter().enumerate() {
                    let entry = matrix.get(r, free);
                    if !entry.is_zero() {
                        v[p] = -entry.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let reduced = augmented.rref();
        if reduced.pivots.len() < n || reduced.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced.matrix.get(r, n + c).clone()))
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

/// A linear subspace of `F^n`, stored by its canonical RREF basis.
///
/// Because the basis is canonical, two equal subspaces compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_canonical(Matrix::identity(ambient))
    }

    /// The span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: v.len() });
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(rows)?;
        Ok(Self::from_canonical(m.rref().matrix))
    }

    /// Span of the unit vectors `e_i` for the given 0-based indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors = indices.into_iter().map(|i| unit_vector(ambient, i));
        Self::span(ambient, vectors).expect("unit vectors have the ambient length")
    }

    fn from_canonical(m: Matrix<F>) -> Self {
        let ambient = m.cols();
        let basis = m.row_vecs().filter(|r| !r.iter().all(F::is_zero)).map(<[F]>::to_vec).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Vectors annihilating the subspace under the standard pairing.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone()).expect("rectangular");
        Self::span(self.ambient, m.nullspace_basis()).expect("ambient length")
    }

    /// `U ∩ V = ann(ann U + ann V)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        if v.iter().all(F::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).expect("rectangular").rank() == self.basis.len()
    }

    /// Every basis vector of `other` lies in `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }
}

impl<F: Scalar> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}

/// The nullspace of `m` as a subspace of `F^cols`.
/// Among rows `from..` with a nonzero entry in `col`, the one with the fewest
/// nonzero entries (first on ties).
fn sparsest_pivot<T: Field>(rows: &[Vec<T>], from: usize, col: usize) -> Option<usize> {
    (from..rows.len())
        .filter(|&r| !rows[r][col].is_zero())
        .min_by_key(|&r| rows[r][col..].iter().filter(|v| !v.is_zero()).count())
}

pub fn nullspace<F: Scalar>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.cols(), m.nullspace_basis()).expect("vectors have cols entries")
}

pub fn unit_vector<T: Field>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::<Rational>::identity(3);
        let r = id.rref();
        assert_eq!((r.matrix, r.rank), (id, 3));

        let r = m(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);

        let z = Matrix::<Rational>::zeros(2, 5);
        let r = z.rref();
        assert_eq!((r.matrix, r.rank), (z, 0));
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::<Rational>::identity(4)).is_zero());

        let ns = nullspace(&m(&[&[1, 1, 0]]));
        assert_eq!(ns.dim(), 2);
        assert!(ns.contains_vector(&v(&[1, -1, 0])));
        assert!(ns.contains_vector(&v(&[0, 0, 1])));
        assert!(!ns.contains_vector(&v(&[1, 0, 0])));

        assert_eq!(nullspace(&Matrix::<Rational>::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn subspace_examples() {
        let e1 = Subspace::<Rational>::coordinate(3, [0]);
        let e2 = Subspace::coordinate(3, [1]);
        let s = e1.sum(&e2).unwrap();
        assert_eq!(s.dim(), 2);
        let rest = Subspace::coordinate(3, [2]);
        assert_eq!(s.sum(&rest).unwrap(), Subspace::full(3));
        assert!(e1.intersect(&e2).unwrap().is_zero());

        let plane = Subspace::<Rational>::full(2);
        let diag = Subspace::span(2, [v(&[1, 1])]).unwrap();
        assert!(plane.contains(&diag).unwrap());
        assert!(!diag.contains(&plane).unwrap());
        assert_eq!(e1.sum(&Subspace::full(2)), Err(Error::AmbientMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, [v(&[1, 1, 1]), v(&[0, 1, 0])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, [v(&[0, 1, 0])]).unwrap());
    }

    #[test]
    fn inverse_and_singular() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        assert!(matches!(m(&[&[1, 2]]).inverse(), Err(Error::NotSquare { .. })));
    }
}

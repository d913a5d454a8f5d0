use super::{RatFn, Scalar, TPoly};
use crate::error::Result;
use crate::linalg::Matrix;

/// Inverts a square matrix of Laurent polynomials over the rational-function
/// field in `t`. Fails with [`crate::Error::Singular`] when the determinant is
/// the zero function.
pub fn tmatrix_inverse<F: Scalar>(m: &Matrix<TPoly<F>>) -> Result<Matrix<RatFn<F>>> {
    to_ratfn(m).inverse()
}

pub fn to_ratfn<F: Scalar>(m: &Matrix<TPoly<F>>) -> Matrix<RatFn<F>> {
    m.map(|p| RatFn::from_poly(p.clone()))
}

/// The Laurent-polynomial matrix equal to `m`, if every entry has denominator one.
pub fn as_laurent<F: Scalar>(m: &Matrix<RatFn<F>>) -> Option<Matrix<TPoly<F>>> {
    m.try_map(|f| f.as_poly().cloned().ok_or(())).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exactnum::{ratfn, Field, Rational};

    type P = TPoly<Rational>;

    fn pm(rows: &[&[&str]]) -> Matrix<P> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_inverse() {
        let inv =
            tmatrix_inverse(&pm(&[&["t^-1", "0", "0"], &["0", "t^-1", "0"], &["0", "0", "1"]]))
                .unwrap();
        assert_eq!(
            as_laurent(&inv).unwrap(),
            pm(&[&["t", "0", "0"], &["0", "t", "0"], &["0", "0", "1"]])
        );
    }

    #[test]
    fn adjugate_two_by_two() {
        // [[t,0],[1,1]]^-1 = (1/t) [[1,0],[-1,t]]
        let inv = tmatrix_inverse(&pm(&[&["t", "0"], &["1", "1"]])).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratfn("1", "t").unwrap(), RatFn::zero()],
            vec![ratfn("-1", "t").unwrap(), RatFn::one()],
        ])
        .unwrap();
        assert_eq!(inv, expected);
    }

    #[test]
    fn proportional_rows_are_singular() {
        assert_eq!(tmatrix_inverse(&pm(&[&["t", "t"], &["1", "1"]])), Err(Error::Singular));
    }

    #[test]
    fn product_with_inverse_is_identity() {
        let m = pm(&[&["t", "1 + t^2"], &["t^-1", "2"]]);
        let inv = tmatrix_inverse(&m).unwrap();
        assert_eq!(to_ratfn(&m).mul(&inv).unwrap(), Matrix::identity(2));
    }
}

//! Orbit-closure invariants and degeneration obstructions.
//!
//! Every quantity here is upper or lower semicontinuous along degenerations,
//! so comparing them between two algebras can rule a degeneration out. None
//! of them can prove one exists.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Algebra, SeriesKind, Variety};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::{nullspace, Matrix, Subspace};

/// Largest dimension accepted by the exhaustive coordinate-ideal search.
pub const MAX_IDEAL_SEARCH_DIM: usize = 16;

/// The linear system whose solutions are derivations, in the unknowns
/// `d[k][l]` (coefficient of `e_l` in `D e_k`) at column `k*n + l`.
/// Row `(i, j, l)` expresses the `e_l` coordinate of
/// `D(e_i e_j) - D(e_i) e_j - e_i D(e_j)`; zero rows are dropped.
pub fn derivation_system<F: Scalar>(alg: &Algebra<F>) -> Matrix<F> {
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut row = vec![F::zero(); n * n];
                for k in 0..n {
                    let c = alg.basis_product(i, j)[k].clone();
                    if !c.is_zero() {
                        row[k * n + l] += &c;
                    }
                    let c = &alg.basis_product(k, j)[l];
                    if !c.is_zero() {
                        row[i * n + k] -= c;
                    }
                    let c = &alg.basis_product(i, k)[l];
                    if !c.is_zero() {
                        row[j * n + k] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(1, n * n);
    }
    Matrix::from_rows(rows).expect("rows have equal length")
}

/// `Der(A)` as a subspace of `F^{n²}` (see [`derivation_system`] for the
/// coordinate layout).
pub fn derivation_space<F: Scalar>(alg: &Algebra<F>) -> Subspace<F> {
    nullspace(&derivation_system(alg))
}

pub fn derivation_dim<F: Scalar>(alg: &Algebra<F>) -> usize {
    let n = alg.dim();
    n * n - derivation_system(alg).rank()
}

/// The linear map encoded by a length-`n²` derivation vector, as a matrix
/// whose column `k` is `D e_k`.
pub fn derivation_matrix<F: Scalar>(n: usize, d: &[F]) -> Matrix<F> {
    Matrix::from_fn(n, n, |l, k| d[k * n + l].clone())
}

/// Checks `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` on all basis pairs by
/// direct multiplication.
pub fn is_derivation<F: Scalar>(alg: &Algebra<F>, d: &Matrix<F>) -> bool {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let images: Vec<Vec<F>> =
        (0..n).map(|k| (0..n).map(|l| d.get(l, k).clone()).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(alg.basis_product(i, j)).expect("square");
            let a = alg.mul(&images[i], &crate::linalg::unit_vector(n, j));
            let b = alg.mul(&crate::linalg::unit_vector(n, i), &images[j]);
            let rhs: Vec<F> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The two-sided annihilator `{x : x·A = A·x = 0}`.
pub fn annihilator<F: Scalar>(alg: &Algebra<F>) -> Subspace<F> {
    let n = alg.dim();
    let mut rows = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| alg.basis_product(i, j)[k].clone()).collect::<Vec<_>>());
            rows.push((0..n).map(|i| alg.basis_product(j, i)[k].clone()).collect::<Vec<_>>());
        }
    }
    nullspace(&Matrix::from_rows(rows).expect("rows have equal length"))
}

pub fn annihilator_dim<F: Scalar>(alg: &Algebra<F>) -> usize {
    annihilator(alg).dim()
}

/// Whether `span{e_s : s ∈ indices}` (1-based) is an abelian two-sided ideal.
pub fn is_abelian_ideal<F: Scalar>(alg: &Algebra<F>, indices: &[usize]) -> Result<bool> {
    let n = alg.dim();
    for &s in indices {
        if s == 0 || s > n {
            return Err(Error::IndexOutOfRange { index: s, dim: n });
        }
    }
    let u = Subspace::coordinate(n, indices.iter().map(|s| s - 1));
    let full = Subspace::full(n);
    Ok(u.contains(&alg.subspace_product(&full, &u)?)? && alg.subspace_product(&u, &u)?.is_zero())
}

/// The largest abelian ideal spanned by basis vectors.
///
/// Returns its dimension and the lexicographically least maximizing index
/// set (1-based). The answer depends on the basis; it agrees with the true
/// maximal abelian ideal only when some maximal one is coordinate.
pub fn max_abelian_coordinate_ideal<F: Scalar>(alg: &Algebra<F>) -> Result<(usize, Vec<usize>)> {
    let n = alg.dim();
    if n > MAX_IDEAL_SEARCH_DIM {
        return Err(Error::DimensionTooLarge { n, max: MAX_IDEAL_SEARCH_DIM });
    }
    let support = |v: &[F]| -> u32 {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0, |m, (k, _)| m | (1 << k))
    };
    // closure[s]: indices any ideal containing e_s must also contain.
    // commuting[s]: indices t with e_s e_t = e_t e_s = 0.
    let mut closure = vec![0u32; n];
    let mut commuting = vec![0u32; n];
    for s in 0..n {
        for t in 0..n {
            let st = support(alg.basis_product(s, t));
            let ts = support(alg.basis_product(t, s));
            closure[s] |= st | ts;
            if st == 0 && ts == 0 {
                commuting[s] |= 1 << t;
            }
        }
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << n) {
        let ok = (0..n)
            .filter(|s| mask & (1 << s) != 0)
            .all(|s| closure[s] & !mask == 0 && mask & !commuting[s] == 0);
        if !ok {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|s| mask & (1 << s) != 0).map(|s| s + 1).collect();
        let better = match &best {
            None => true,
            Some((d, b)) => set.len() > *d || (set.len() == *d && set < *b),
        };
        if better {
            best = Some((set.len(), set));
        }
    }
    Ok(best.expect("the empty set is always an abelian ideal"))
}

/// Every invariant this crate computes, in one comparable record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub dim: usize,
    pub varieties: BTreeMap<String, bool>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub solvable_index: Option<usize>,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub plenary_dims: Vec<usize>,
    pub dim_der: usize,
    pub dim_ann: usize,
    /// `None` when the dimension exceeds the search bound.
    pub coord_ab_dim: Option<usize>,
}

pub fn invariant_profile<F: Scalar>(alg: &Algebra<F>) -> InvariantProfile {
    let flags = alg.structure_flags();
    InvariantProfile {
        dim: alg.dim(),
        varieties: Variety::ALL.iter().map(|v| (v.name().to_string(), alg.satisfies(*v))).collect(),
        nilpotent: flags.nilpotent,
        nilpotency_class: flags.nilpotency_class,
        solvable: flags.solvable,
        solvable_index: flags.solvable_index,
        lower_central_dims: alg.series_dims(SeriesKind::LowerCentral),
        derived_dims: alg.series_dims(SeriesKind::Derived),
        plenary_dims: alg.series_dims(SeriesKind::Plenary),
        dim_der: derivation_dim(alg),
        dim_ann: annihilator_dim(alg),
        coord_ab_dim: max_abelian_coordinate_ideal(alg).ok().map(|(d, _)| d),
    }
}

impl InvariantProfile {
    /// The profile with basis-dependent entries cleared.
    pub fn without_coordinate_data(mut self) -> Self {
        self.coord_ab_dim = None;
        self
    }
}

/// A reason why `L` cannot properly degenerate to `M`, with the quantities
/// that were compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// `L` is nilpotent and `M` is not; nilpotent algebras form a closed set.
    NilpotencyClosure { source_class: usize },
    /// `dim Der(L) ≥ dim Der(M)`.
    DerDimNonIncreasing { source: usize, target: usize },
    /// `dim ab(L) > dim ab(M)` over coordinate ideals. Both values are
    /// computed in the given bases, so this is only as reliable as the bases
    /// are canonical.
    AbDimDecreasing { source: usize, target: usize },
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::NilpotencyClosure { .. } => "nilpotency_closure",
            Obstruction::DerDimNonIncreasing { .. } => "der_dim_non_increasing",
            Obstruction::AbDimDecreasing { .. } => "ab_dim_decreasing",
        }
    }
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Obstruction::NilpotencyClosure { source_class } => {
                write!(f, "nilpotency_closure (source nilpotent of class {source_class}, target not nilpotent)")
            }
            Obstruction::DerDimNonIncreasing { source, target } => {
                write!(f, "der_dim_non_increasing (dim Der {source} -> {target})")
            }
            Obstruction::AbDimDecreasing { source, target } => {
                write!(f, "ab_dim_decreasing (dim ab {source} -> {target})")
            }
        }
    }
}

/// Necessary-condition checks against a proper degeneration `L → M`. An
/// empty list means no obstruction was found, not that a degeneration exists.
pub fn degeneration_obstructions<F: Scalar>(
    l: &Algebra<F>,
    m: &Algebra<F>,
) -> Result<Vec<Obstruction>> {
    if l.dim() != m.dim() {
        return Err(Error::DimensionMismatch { left: l.dim(), right: m.dim() });
    }
    let mut out = Vec::new();
    let (fl, fm) = (l.structure_flags(), m.structure_flags());
    if let (Some(class), false) = (fl.nilpotency_class, fm.nilpotent) {
        out.push(Obstruction::NilpotencyClosure { source_class: class });
    }
    let (dl, dm) = (derivation_dim(l), derivation_dim(m));
    if dl >= dm {
        out.push(Obstruction::DerDimNonIncreasing { source: dl, target: dm });
    }
    if let (Ok((al, _)), Ok((am, _))) =
        (max_abelian_coordinate_ideal(l), max_abelian_coordinate_ideal(m))
    {
        if al > am {
            out.push(Obstruction::AbDimDecreasing { source: al, target: am });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Product, Symmetry};
    use crate::exactnum::{Field, Rational};

    fn alg(n: usize, prods: &[(usize, usize, usize, i64)], sym: Symmetry) -> Algebra<Rational> {
        let ps: Vec<_> = prods
            .iter()
            .map(|&(i, j, k, c)| Product::new(i, j, k, Rational::from_i64(c)))
            .collect();
        Algebra::new(n, &ps, sym).unwrap()
    }

    #[test]
    fn small_derivation_dims() {
        assert_eq!(derivation_dim(&alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative)), 4);
        assert_eq!(derivation_dim(&Algebra::<Rational>::abelian(4)), 16);
        let r2 = alg(2, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        assert_eq!(derivation_dim(&r2), 2);
        let n51 = alg(5, &[(1, 3, 5, 1), (2, 4, 5, 1)], Symmetry::Anticommutative);
        assert_eq!(derivation_dim(&n51), 15);
    }

    #[test]
    fn r2_derivations_by_hand() {
        // D e1 = b e2, D e2 = d e2: two free parameters.
        let r2 = alg(2, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        let space = derivation_space(&r2);
        assert_eq!(space.dim(), 2);
        for v in space.basis() {
            let d = derivation_matrix(2, v);
            assert!(is_derivation(&r2, &d));
            assert!(d.get(0, 0).is_zero() && d.get(0, 1).is_zero());
        }
        let not_der = Matrix::from_rows(vec![
            vec![Rational::from_i64(1), Rational::from_i64(0)],
            vec![Rational::from_i64(0), Rational::from_i64(0)],
        ])
        .unwrap();
        assert!(!is_derivation(&r2, &not_der));
    }

    #[test]
    fn annihilators() {
        assert_eq!(annihilator_dim(&Algebra::<Rational>::abelian(3)), 3);
        let j3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative);
        assert_eq!(annihilator(&j3), Subspace::coordinate(3, [2]));
        let p3 = alg(3, &[(1, 2, 2, 1), (1, 3, 3, 1)], Symmetry::Anticommutative);
        assert_eq!(annihilator_dim(&p3), 0);
    }

    #[test]
    fn abelian_ideals() {
        let n51 = alg(5, &[(1, 3, 5, 1), (2, 4, 5, 1)], Symmetry::Anticommutative);
        let (d, set) = max_abelian_coordinate_ideal(&n51).unwrap();
        assert_eq!(d, 3);
        assert_eq!(set, vec![1, 2, 5]);
        assert!(is_abelian_ideal(&n51, &[3, 4, 5]).unwrap());
        assert!(!is_abelian_ideal(&n51, &[1, 3, 5]).unwrap());
        assert!(!is_abelian_ideal(&n51, &[1, 2]).unwrap());
        assert_eq!(
            max_abelian_coordinate_ideal(&Algebra::<Rational>::abelian(4)).unwrap(),
            (4, vec![1, 2, 3, 4])
        );
        let r2a3 = alg(5, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        assert_eq!(max_abelian_coordinate_ideal(&r2a3).unwrap(), (4, vec![2, 3, 4, 5]));
        let big = Algebra::<Rational>::abelian(17);
        assert_eq!(
            max_abelian_coordinate_ideal(&big),
            Err(Error::DimensionTooLarge { n: 17, max: 16 })
        );
    }

    #[test]
    fn obstructions() {
        let j1 = alg(3, &[(1, 1, 1, 1)], Symmetry::Commutative);
        let j3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative);
        let obs = degeneration_obstructions(&j3, &j1).unwrap();
        assert!(obs.iter().any(|o| o.kind() == "nilpotency_closure"));
        let same = degeneration_obstructions(&j1, &j1).unwrap();
        assert!(same.contains(&Obstruction::DerDimNonIncreasing { source: 4, target: 4 }));
        assert!(degeneration_obstructions(&j1, &Algebra::abelian(4)).is_err());
        // a genuine degeneration is not obstructed
        assert!(degeneration_obstructions(&j3, &Algebra::abelian(3)).unwrap().is_empty());
    }

    #[test]
    fn profile_of_abelian() {
        let p = invariant_profile(&Algebra::<Rational>::abelian(3));
        assert_eq!(p.dim_der, 9);
        assert_eq!(p.nilpotency_class, Some(1));
        assert_eq!(p.coord_ab_dim, Some(3));
        assert_eq!(p.dim_ann, 3);
    }
}

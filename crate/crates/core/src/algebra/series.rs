use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `g⁽¹⁾ = A·A`, `g⁽ᵏ⁺¹⁾ = g⁽ᵏ⁾·g⁽ᵏ⁾`.
    Derived,
    /// `g¹ = A`, `gᵏ⁺¹ = A·gᵏ + gᵏ·A`.
    LowerCentral,
    /// `A¹ = A`, `Aᵏ = Σ_{i+j=k} Aⁱ·Aʲ`.
    Plenary,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Derived => "derived",
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::Plenary => "plenary",
        })
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "derived" => Ok(SeriesKind::Derived),
            "lower_central" | "lower-central" => Ok(SeriesKind::LowerCentral),
            "plenary" => Ok(SeriesKind::Plenary),
            other => Err(Error::parse(format!("unknown series `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StructureFlags {
    pub nilpotent: bool,
    /// Number of nonzero terms of the lower central series, when it reaches 0.
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    /// Length of the derived series, when it reaches 0.
    pub solvable_index: Option<usize>,
}

impl<F: Scalar> Algebra<F> {
    /// The terms of the series, stopping once a term is zero or repeats the
    /// previous one (the repeat is not included).
    pub fn power_series(&self, kind: SeriesKind) -> Vec<Subspace<F>> {
        let n = self.dim();
        let full = Subspace::full(n);
        let prod = |u: &Subspace<F>, v: &Subspace<F>| {
            self.subspace_product(u, v).expect("ambient matches algebra")
        };
        let mut terms = match kind {
            SeriesKind::Derived => vec![prod(&full, &full)],
            SeriesKind::LowerCentral | SeriesKind::Plenary => vec![full.clone()],
        };
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::Derived => prod(last, last),
                SeriesKind::LowerCentral => prod(&full, last),
                SeriesKind::Plenary => {
                    let k = terms.len() + 1;
                    let mut acc = Subspace::zero(n);
                    for i in 1..k {
                        let j = k - i;
                        if i > j {
                            break;
                        }
                        let p = prod(&terms[i - 1], &terms[j - 1]);
                        acc = acc.sum(&p).expect("ambient matches algebra");
                    }
                    acc
                }
            };
            if &next == last {
                break;
            }
            terms.push(next);
        }
        terms
    }

    pub fn series_dims(&self, kind: SeriesKind) -> Vec<usize> {
        self.power_series(kind).iter().map(Subspace::dim).collect()
    }

    pub fn structure_flags(&self) -> StructureFlags {
        let lower = self.power_series(SeriesKind::LowerCentral);
        let derived = self.power_series(SeriesKind::Derived);
        let nilpotent = lower.last().is_some_and(Subspace::is_zero);
        let solvable = derived.last().is_some_and(Subspace::is_zero);
        StructureFlags {
            nilpotent,
            nilpotency_class: nilpotent.then(|| lower.len() - 1),
            solvable,
            solvable_index: solvable.then_some(derived.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Product, Symmetry};
    use crate::exactnum::Rational;

    fn alg(n: usize, prods: &[(usize, usize, usize, i64)], sym: Symmetry) -> Algebra<Rational> {
        let ps: Vec<_> = prods
            .iter()
            .map(|&(i, j, k, c)| Product::new(i, j, k, Rational::from_i64(c)))
            .collect();
        Algebra::new(n, &ps, sym).unwrap()
    }

    #[test]
    fn n4_lower_central() {
        let n4 = alg(4, &[(1, 2, 3, 1), (1, 3, 4, 1)], Symmetry::Anticommutative);
        let series = n4.power_series(SeriesKind::LowerCentral);
        assert_eq!(series.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![4, 2, 1, 0]);
        assert_eq!(series[1], Subspace::coordinate(4, [2, 3]));
        assert_eq!(series[2], Subspace::coordinate(4, [3]));
        let flags = n4.structure_flags();
        assert!(flags.nilpotent);
        assert_eq!(flags.nilpotency_class, Some(3));
    }

    #[test]
    fn abelian_series() {
        let a = Algebra::<Rational>::abelian(3);
        assert_eq!(a.series_dims(SeriesKind::LowerCentral), vec![3, 0]);
        assert_eq!(a.series_dims(SeriesKind::Plenary), vec![3, 0]);
        assert_eq!(a.series_dims(SeriesKind::Derived), vec![0]);
        let flags = a.structure_flags();
        assert_eq!(flags.nilpotency_class, Some(1));
        assert_eq!(flags.solvable_index, Some(1));
    }

    #[test]
    fn j3_plenary() {
        let j3 = alg(3, &[(1, 2, 3, 1)], Symmetry::Commutative);
        let series = j3.power_series(SeriesKind::Plenary);
        assert_eq!(series.len(), 3);
        assert_eq!(series[1], Subspace::coordinate(3, [2]));
        assert!(series[2].is_zero());
    }

    #[test]
    fn r2_solvable_not_nilpotent() {
        let r2 = alg(2, &[(1, 2, 2, 1)], Symmetry::Anticommutative);
        let flags = r2.structure_flags();
        assert!(!flags.nilpotent);
        assert_eq!(flags.nilpotency_class, None);
        assert!(flags.solvable);
        assert_eq!(flags.solvable_index, Some(2));
        assert_eq!(r2.series_dims(SeriesKind::LowerCentral), vec![2, 1]);
    }

    #[test]
    fn plenary_powers_of_a_cubed_chain() {
        // a, a², a³ with a⁴ = 0
        let c = alg(3, &[(1, 1, 2, 1), (1, 2, 3, 1)], Symmetry::Commutative);
        assert_eq!(c.series_dims(SeriesKind::Plenary), vec![3, 2, 1, 0]);
    }
}

//! Pierce decompositions at an idempotent.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::{nullspace, Matrix, Subspace};

/// One containment rule `U · V ⊆ W` and, when it fails, a spanning vector
/// of `U · V` outside `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleCheck<F> {
    pub rule: String,
    pub holds: bool,
    pub offending: Option<Vec<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PierceSplit<F: Scalar> {
    pub idempotent: Vec<F>,
    /// Named components in a fixed order.
    pub components: Vec<(String, Subspace<F>)>,
    pub rules: Vec<RuleCheck<F>>,
}

impl<F: Scalar> PierceSplit<F> {
    pub fn component(&self, name: &str) -> Option<&Subspace<F>> {
        self.components.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|(_, s)| s.dim()).collect()
    }

    pub fn all_rules_hold(&self) -> bool {
        self.rules.iter().all(|r| r.holds)
    }
}

/// `J = P_0 ⊕ P_½ ⊕ P_1` with `P_λ = {x : x·e = λx}`, and the six
/// multiplication rules between the components.
pub fn pierce_jordan<F: Scalar>(alg: &Algebra<F>, e: &[F]) -> Result<PierceSplit<F>> {
    check_idempotent(alg, e)?;
    let n = alg.dim();
    let r_e = alg.right_mult(e);
    let half = F::ratio(1, 2);
    let p0 = eigenspace(&r_e, &F::zero());
    let ph = eigenspace(&r_e, &half);
    let p1 = eigenspace(&r_e, &F::one());
    check_complete(&[&p0, &ph, &p1], n)?;
    let prod = |u: &Subspace<F>, v: &Subspace<F>| alg.subspace_product(u, v);
    let zero = Subspace::zero(n);
    let p01 = p0.sum(&p1)?;
    let rules = vec![
        rule("P_1^2 ⊆ P_1", &prod(&p1, &p1)?, &p1),
        rule("P_1·P_0 = 0", &prod(&p1, &p0)?, &zero),
        rule("P_0^2 ⊆ P_0", &prod(&p0, &p0)?, &p0),
        rule("P_0·P_half ⊆ P_half", &prod(&p0, &ph)?, &ph),
        rule("P_1·P_half ⊆ P_half", &prod(&p1, &ph)?, &ph),
        rule("P_half^2 ⊆ P_0 + P_1", &prod(&ph, &ph)?, &p01),
    ];
    Ok(PierceSplit {
        idempotent: e.to_vec(),
        components: vec![("P_0".into(), p0), ("P_half".into(), ph), ("P_1".into(), p1)],
        rules,
    })
}

/// `A = ⊕ A_ij` with `A_ij = {x : e·x = i x, x·e = j x}`, and the sixteen
/// rules `A_ij · A_kl ⊆ δ_jk A_il`.
pub fn pierce_associative<F: Scalar>(alg: &Algebra<F>, e: &[F]) -> Result<PierceSplit<F>> {
    check_idempotent(alg, e)?;
    let n = alg.dim();
    let (l_e, r_e) = (alg.left_mult(e), alg.right_mult(e));
    let vals = [F::one(), F::zero()];
    let labels = ["1", "0"];
    let mut comps = Vec::new();
    for (i, li) in vals.iter().zip(labels) {
        for (j, lj) in vals.iter().zip(labels) {
            let s = eigenspace(&l_e, i).intersect(&eigenspace(&r_e, j))?;
            comps.push((li, lj, s));
        }
    }
    check_complete(&comps.iter().map(|(_, _, s)| s).collect::<Vec<_>>(), n)?;
    let zero = Subspace::zero(n);
    let mut rules = Vec::new();
    for (i, j, a) in &comps {
        for (k, l, b) in &comps {
            let target = if j == k {
                &comps.iter().find(|(x, y, _)| x == i && y == l).expect("all labels present").2
            } else {
                &zero
            };
            let name = if j == k {
                format!("A_{i}{j}·A_{k}{l} ⊆ A_{i}{l}")
            } else {
                format!("A_{i}{j}·A_{k}{l} = 0")
            };
            rules.push(rule(&name, &alg.left_product(a, b)?, target));
        }
    }
    Ok(PierceSplit {
        idempotent: e.to_vec(),
        components: comps.into_iter().map(|(i, j, s)| (format!("A_{i}{j}"), s)).collect(),
        rules,
    })
}

fn check_idempotent<F: Scalar>(alg: &Algebra<F>, e: &[F]) -> Result<()> {
    if e.len() != alg.dim() {
        return Err(Error::DimensionMismatch { left: alg.dim(), right: e.len() });
    }
    if alg.is_idempotent(e) {
        Ok(())
    } else {
        Err(Error::NotIdempotent)
    }
}

fn eigenspace<F: Scalar>(m: &Matrix<F>, lambda: &F) -> Subspace<F> {
    let shifted = Matrix::from_fn(m.rows(), m.cols(), |r, c| {
        if r == c {
            m.get(r, c).clone() - lambda
        } else {
            m.get(r, c).clone()
        }
    });
    nullspace(&shifted)
}

fn check_complete<F: Scalar>(parts: &[&Subspace<F>], n: usize) -> Result<()> {
    let dims: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
    if dims.iter().sum::<usize>() != n {
        return Err(Error::IncompleteSplit { dims, n });
    }
    Ok(())
}

fn rule<F: Scalar>(name: &str, product: &Subspace<F>, target: &Subspace<F>) -> RuleCheck<F> {
    let offending = product.basis().iter().find(|v| !target.contains_vector(v)).cloned();
    RuleCheck { rule: name.to_string(), holds: offending.is_none(), offending }
}

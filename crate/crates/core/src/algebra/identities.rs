use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// A variety of algebras defined by polynomial identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    Associative,
    Lie,
    Jordan,
    Commutative,
    Anticommutative,
}

impl Variety {
    pub const ALL: [Variety; 5] = [
        Variety::Associative,
        Variety::Lie,
        Variety::Jordan,
        Variety::Commutative,
        Variety::Anticommutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variety::Associative => "associative",
            Variety::Lie => "lie",
            Variety::Jordan => "jordan",
            Variety::Commutative => "commutative",
            Variety::Anticommutative => "anticommutative",
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variety {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variety::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::parse(format!("unknown variety `{s}`")))
    }
}

/// A failed identity instance: the identity's name, the 1-based basis
/// indices it was evaluated on, and the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<F> {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub residual: Vec<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyReport<F> {
    pub variety: Variety,
    pub pass: bool,
    /// Sorted by identity name, then index tuple.
    pub violations: Vec<Violation<F>>,
}

impl<F: Scalar> Algebra<F> {
    /// Checks every identity defining `variety` on basis tuples.
    ///
    /// The Jordan identity is checked through its full linearization, which is
    /// equivalent to it in characteristic zero.
    pub fn check_variety(&self, variety: Variety) -> VarietyReport<F> {
        let mut sink = Sink { violations: Vec::new(), first_only: false };
        self.run_checks(variety, &mut sink);
        let mut violations = sink.violations;
        violations.sort_by(|a, b| (a.identity, &a.indices).cmp(&(b.identity, &b.indices)));
        VarietyReport { variety, pass: violations.is_empty(), violations }
    }

    /// Like [`Algebra::check_variety`] but stops at the first violation.
    pub fn satisfies(&self, variety: Variety) -> bool {
        let mut sink = Sink { violations: Vec::new(), first_only: true };
        self.run_checks(variety, &mut sink);
        sink.violations.is_empty()
    }

    fn run_checks(&self, variety: Variety, violations: &mut Sink<F>) {
        match variety {
            Variety::Associative => self.check_associative(violations),
            Variety::Commutative => self.check_commutative(violations),
            Variety::Anticommutative => self.check_anticommutative(violations),
            Variety::Lie => {
                self.check_anticommutative(violations);
                if !violations.done() {
                    self.check_jacobi(violations);
                }
            }
            Variety::Jordan => {
                self.check_commutative(violations);
                if !violations.done() {
                    self.check_jordan(violations);
                }
            }
        }
    }

    fn check_associative(&self, out: &mut Sink<F>) {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_right_basis(ij, k);
                    let right = self.mul(&unit(n, i), self.basis_product(j, k));
                    out.push("associativity", &[i, j, k], sub(left, &right));
                    if out.done() {
                        return;
                    }
                }
            }
        }
    }

    fn check_commutative(&self, out: &mut Sink<F>) {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let r = sub(self.basis_product(i, j).to_vec(), self.basis_product(j, i));
                out.push("commutativity", &[i, j], r);
                if out.done() {
                    return;
                }
            }
        }
    }

    fn check_anticommutative(&self, out: &mut Sink<F>) {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let r = add(self.basis_product(i, j).to_vec(), self.basis_product(j, i));
                out.push("anticommutativity", &[i, j], r);
                if out.done() {
                    return;
                }
            }
        }
    }

    fn check_jacobi(&self, out: &mut Sink<F>) {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
                    let mut r = self.mul_right_basis(self.basis_product(i, j), k);
                    r = add(r, &self.mul_right_basis(self.basis_product(j, k), i));
                    r = add(r, &self.mul_right_basis(self.basis_product(k, i), j));
                    out.push("jacobi", &[i, j, k], r);
                    if out.done() {
                        return;
                    }
                }
            }
        }
    }

    fn check_jordan(&self, out: &mut Sink<F>) {
        let n = self.dim();
        // Left multiplication by each e_p e_q (p <= q), as dense rows.
        let mut left_ops: Vec<Vec<Vec<F>>> = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let m = if q < p {
                    Vec::new()
                } else {
                    let lm = self.left_mult(self.basis_product(p, q));
                    (0..n).map(|r| (0..n).map(|c| lm.get(r, c).clone()).collect()).collect()
                };
                left_ops.push(m);
            }
        }
        // (e_p e_q) e_y for p <= q.
        let mut pq_y: Vec<Vec<F>> = Vec::with_capacity(n * n * n);
        for p in 0..n {
            for q in 0..n {
                for y in 0..n {
                    pq_y.push(if q < p {
                        Vec::new()
                    } else {
                        self.mul_right_basis(self.basis_product(p, q), y)
                    });
                }
            }
        }
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let pairings = [(a, b, c), (a, c, b), (b, c, a)];
                    for y in 0..n {
                        let mut r = vec![F::zero(); n];
                        for &(p, q, s) in &pairings {
                            let left = self.mul_right_basis(&pq_y[(p * n + q) * n + y], s);
                            let right = mat_vec(&left_ops[p * n + q], self.basis_product(y, s));
                            r = add(r, &sub(left, &right));
                        }
                        out.push("jordan", &[a, b, c, y], r);
                        if out.done() {
                            return;
                        }
                    }
                }
            }
        }
    }
}

fn mat_vec<F: Scalar>(rows: &[Vec<F>], v: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); rows.len()];
    for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (o, row) in out.iter_mut().zip(rows) {
            if !row[j].is_zero() {
                *o += &(row[j].clone() * vj);
            }
        }
    }
    out
}

fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    crate::linalg::unit_vector(n, i)
}

fn add<F: Scalar>(mut u: Vec<F>, v: &[F]) -> Vec<F> {
    for (a, b) in u.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
    u
}

fn sub<F: Scalar>(mut u: Vec<F>, v: &[F]) -> Vec<F> {
    for (a, b) in u.iter_mut().zip(v) {
        if !b.is_zero() {
            *a -= b;
        }
    }
    u
}

struct Sink<F> {
    violations: Vec<Violation<F>>,
    first_only: bool,
}

impl<F: Scalar> Sink<F> {
    fn push(&mut self, identity: &'static str, indices: &[usize], residual: Vec<F>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation {
                identity,
                indices: indices.iter().map(|i| i + 1).collect(),
                residual,
            });
        }
    }

    fn done(&self) -> bool {
        self.first_only && !self.violations.is_empty()
    }
}

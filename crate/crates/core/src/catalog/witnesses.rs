use super::algebras::{block_sizes, generators, Args};
use super::{sample_params, CatalogRef, ParamKind, ParamSpec, Params, WitnessInfo, SAMPLE_VALUES};
use crate::degeneration::{Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, TPoly};
use crate::linalg::{unit_vector, Matrix};

const ABELIAN: &str = "every algebra degenerates to the abelian algebra";
const JORDAN_PROOF: &str = "Jordan level-two classification, degeneration argument";
const LIE_PROOF: &str = "Lie level-two classification, degeneration argument";
const LEVEL_ONE: &str = "level-two algebras degenerate to an algebra of level one";

fn p(name: &'static str, kind: ParamKind, doc: &'static str) -> ParamSpec {
    ParamSpec { name, kind, doc }
}

fn info(
    id: &'static str,
    source: &'static str,
    target: &'static str,
    min_n: usize,
    max_n: Option<usize>,
    params: Vec<ParamSpec>,
    citation: &'static str,
) -> WitnessInfo {
    let derived = !id.starts_with('W');
    WitnessInfo { id, source, target, min_n, max_n, params, citation, derived, note: None }
}

pub(super) fn entries() -> Vec<WitnessInfo> {
    use ParamKind::*;
    let k = |doc| p("k", Integer, doc);
    let alpha = || p("alpha", Scalar, "source parameter");
    vec![
        info("W0-abelianize", "p", "a", 2, None, vec![], ABELIAN),
        info("W1", "jordan_sym2", "J", 3, None, vec![], JORDAN_PROOF),
        info(
            "W2",
            "J",
            "J3",
            3,
            None,
            vec![p("zeta", Vector, "source parameter, zeta_2 != zeta_3")],
            JORDAN_PROOF,
        ),
        WitnessInfo {
            note: Some("an isomorphism; A(1 + A alpha2) must be nonzero"),
            ..info(
                "W3-prep",
                "jcase11_pre",
                "jcase11",
                4,
                None,
                vec![
                    k("source parameter"),
                    p("alpha2", Scalar, "source parameter"),
                    p("A", Scalar, "shear x1 + A x2"),
                ],
                JORDAN_PROOF,
            )
        },
        info(
            "W3",
            "jcase11",
            "J3",
            4,
            None,
            vec![k("source parameter"), p("gamma", Vector, "source parameter")],
            JORDAN_PROOF,
        ),
        WitnessInfo {
            note: Some("the source is a Jordan algebra only when gamma = 0"),
            ..info(
                "W4",
                "jcase12",
                "J3",
                3,
                None,
                vec![k("source parameter"), p("gamma", Vector, "source parameter")],
                JORDAN_PROOF,
            )
        },
        info(
            "W5",
            "jcase2",
            "J3",
            3,
            None,
            vec![
                p("alpha", Vector, "source parameter"),
                p("beta", Vector, "source parameter"),
                p("gamma", Vector, "source parameter"),
            ],
            JORDAN_PROOF,
        ),
        WitnessInfo {
            note: Some("an isomorphism when k = 2"),
            ..info("W6", "heis", "n51", 5, None, vec![k("source parameter, k >= 2")], LIE_PROOF)
        },
        info("W7", "nil2", "n52", 5, None, vec![p("gamma", Vector, "source parameter")], LIE_PROOF),
        info("W8", "lie_codim2", "g1fam", 4, None, vec![alpha()], LIE_PROOF),
        info(
            "W9",
            "jblock",
            "g2",
            4,
            None,
            vec![p("blocks", IntegerVector, "source block sizes, first block of size >= 2")],
            LIE_PROOF,
        ),
        info(
            "W10",
            "jblock",
            "g1fam",
            4,
            None,
            vec![
                p("blocks", IntegerVector, "source block sizes"),
                p("eigen", Vector, "source eigenvalues, not all equal"),
            ],
            LIE_PROOF,
        ),
        info(
            "W11",
            "lie_companion",
            "n52",
            5,
            None,
            vec![
                p("alpha3", Scalar, "source parameter"),
                p("alpha4", Scalar, "source parameter"),
                p("alpha5", Scalar, "source parameter"),
            ],
            LIE_PROOF,
        ),
        info("W12", "sl2", "g1fam", 3, None, vec![], LIE_PROOF),
        info("W12-rep", "sl2_rep", "g1fam", 5, Some(5), vec![], LIE_PROOF),
        info("D1", "J1", "lambda2", 2, None, vec![], LEVEL_ONE),
        info("D2", "J2", "lambda2", 2, None, vec![], LEVEL_ONE),
        info("D3", "J3", "lambda2", 3, None, vec![], LEVEL_ONE),
        info("D4", "r2a", "n3", 3, None, vec![], LEVEL_ONE),
        info("D5", "g1", "n3", 4, None, vec![alpha()], LEVEL_ONE),
        info("D5-r3", "r3", "n3", 3, Some(3), vec![alpha()], LEVEL_ONE),
        info("D6", "g2", "n3", 4, None, vec![], LEVEL_ONE),
        info("D7", "n51", "n3", 5, None, vec![], LEVEL_ONE),
        info("D8", "n52", "n3", 5, None, vec![], LEVEL_ONE),
        info("D9", "A1", "lambda2", 2, None, vec![], LEVEL_ONE),
        info("D10", "A5", "lambda2", 3, None, vec![alpha()], LEVEL_ONE),
        info("D11", "A6", "lambda2", 3, None, vec![], LEVEL_ONE),
        info("D12", "A2", "lambda2", 2, None, vec![], LEVEL_ONE),
        WitnessInfo {
            note: Some("identity map: A3 already coincides with nu(1)"),
            ..info("D12-A3", "A3", "nu", 2, None, vec![], LEVEL_ONE)
        },
        WitnessInfo {
            note: Some("identity map: A4 already coincides with nu(0)"),
            ..info("D12-A4", "A4", "nu", 2, None, vec![], LEVEL_ONE)
        },
        info("X-n4", "n4", "n3", 4, Some(4), vec![], LEVEL_ONE),
        info("X-r3_1a", "r3_1a", "n3", 4, Some(4), vec![], LEVEL_ONE),
    ]
}

/// One column of a witness matrix: terms `(basis index, coefficient, power of t)`.
type Column<F> = Vec<(usize, F, i64)>;

/// `g_t⁻¹` given by its columns; columns not listed are unit vectors.
fn inverse_cols<F: Scalar>(n: usize, cols: Vec<(usize, Column<F>)>) -> Witness<F> {
    let mut m = Matrix::from_fn(n, n, |r, c| if r == c { TPoly::one() } else { TPoly::zero() });
    for (c, terms) in cols {
        for r in 0..n {
            m.set(r, c - 1, TPoly::zero());
        }
        for (r, coeff, e) in terms {
            let v = m.get(r - 1, c - 1).clone() + TPoly::monomial(coeff, e);
            m.set(r - 1, c - 1, v);
        }
    }
    Witness::new(WitnessKind::GInverse, m).expect("square by construction")
}

fn g_diag<F: Scalar>(exps: &[i64]) -> Witness<F> {
    Witness::diagonal(WitnessKind::G, exps)
}

/// Limit-coordinate basis whose first columns are the given vectors, each
/// standing in for a unit vector, followed by the remaining unit vectors in
/// increasing order.
fn front_basis<F: Scalar>(n: usize, front: Vec<(usize, Vec<(usize, F)>)>) -> Matrix<F> {
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(n);
    for (_, terms) in &front {
        let mut v = vec![F::zero(); n];
        for (i, c) in terms {
            v[i - 1] = v[i - 1].clone() + c;
        }
        cols.push(v);
    }
    for i in 1..=n {
        if !front.iter().any(|(slot, _)| *slot == i) {
            cols.push(unit_vector(n, i - 1));
        }
    }
    Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
}

fn unit<F: Scalar>(i: usize) -> (usize, Vec<(usize, F)>) {
    (i, vec![(i, F::one())])
}

fn units<F: Scalar>(n: usize, order: &[usize]) -> Matrix<F> {
    front_basis(n, order.iter().map(|&i| unit(i)).collect())
}

fn r(name: &str, n: usize) -> CatalogRef {
    CatalogRef::new(name, n)
}

/// Builds witness `id` at dimension `n`, with its source and target set to
/// `catalog:` references carrying explicit parameter values.
pub fn witness<F: Scalar>(id: &str, n: usize, params: &Params<F>) -> Result<Witness<F>> {
    let wi = super::witness_info(id)?;
    if !wi.supports(n) {
        let constraint = match wi.max_n {
            Some(m) if m == wi.min_n => format!("n = {m}"),
            Some(m) => format!("{} <= n <= {m}", wi.min_n),
            None => format!("n >= {}", wi.min_n),
        };
        return Err(Error::DimensionConstraint { name: id.to_string(), n, constraint });
    }
    let args = Args { name: id, params };
    for key in params.keys() {
        if !wi.params.iter().any(|p| p.name == key) {
            return Err(args.domain(key, "unknown parameter"));
        }
    }
    let one = F::one;
    let t = |i: usize, c: F, e: i64| (i, c, e);
    let (w, source, target): (Witness<F>, CatalogRef, CatalogRef) = match id {
        "W0-abelianize" => (g_diag(&vec![-1; n]), r("p", n), r("a", n)),
        "W1" => {
            let mut e = vec![-1; n];
            e[0] = 0;
            let mut zeta = vec![F::zero(); n - 1];
            zeta[1] = F::ratio(1, 2);
            (g_diag(&e), r("jordan_sym2", n), r("J", n).param("zeta", &zeta))
        }
        "W2" => {
            let zeta = args.vector("zeta", n - 1, || {
                let mut z = vec![F::zero(); n - 1];
                z[0] = one();
                z
            })?;
            if zeta[0] == zeta[1] {
                return Err(args.domain("zeta", "zeta_2 and zeta_3 must differ"));
            }
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 1)]),
                    (2, vec![t(2, one(), 0), t(3, one(), 0)]),
                    (3, vec![t(2, zeta[0].clone(), 1), t(3, zeta[1].clone(), 1)]),
                ],
            );
            (w, r("J", n).param("zeta", &zeta), r("J3", n))
        }
        "W3-prep" => {
            let k = generators(&args, n, 2)?;
            let a2 = args.scalar("alpha2", one())?;
            let a = args.scalar("A", one())?;
            let d = a.clone() * (one() + a.clone() * &a2);
            let dinv =
                d.inv().ok_or_else(|| args.domain("A", "A(1 + A alpha2) must be nonzero"))?;
            let two = F::from_i64(2);
            let lead = one() + two * &a * &a2;
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 0), t(2, a.clone(), 0)]),
                    (k + 1, vec![t(k + 1, lead.clone(), 0), t(k + 2, a.clone() * &a, 0)]),
                    (k + 2, vec![t(k + 1, a2.clone(), 0), t(k + 2, a.clone(), 0)]),
                ],
            );
            let mut gamma = vec![F::zero(); n - k];
            gamma[0] = -(a2.clone() * &dinv);
            gamma[1] = lead * &dinv;
            let kk = [F::from_i64(k as i64)];
            (
                w,
                r("jcase11_pre", n).param("k", &kk).param("alpha2", &[a2]),
                r("jcase11", n).param("k", &kk).param("gamma", &gamma),
            )
        }
        "W3" => {
            let k = generators(&args, n, 2)?;
            let gamma = args.vector("gamma", n - k, || vec![one(); n - k])?;
            let mut e = vec![-3; n];
            e[0] = -2;
            e[1] = -2;
            e[k + 1] = -4;
            let half = gamma[1].clone() * F::ratio(1, 2);
            let q = front_basis(n, vec![unit(1), (2, vec![(2, one()), (1, -half)]), unit(k + 2)]);
            let kk = [F::from_i64(k as i64)];
            (
                g_diag(&e).with_post_iso(q),
                r("jcase11", n).param("k", &kk).param("gamma", &gamma),
                r("J3", n),
            )
        }
        "W4" => {
            let k = generators(&args, n, 1)?;
            let gamma = args.vector("gamma", n - k - 1, || vec![F::zero(); n - k - 1])?;
            let mut e = vec![-3; n];
            e[0] = -2;
            e[k] = -2;
            e[k + 1] = -4;
            let g = gamma.first().cloned().unwrap_or_else(F::zero);
            let half = g * F::ratio(1, 2);
            let q = front_basis(
                n,
                vec![unit(1), (k + 1, vec![(k + 1, one()), (1, -half)]), unit(k + 2)],
            );
            let kk = [F::from_i64(k as i64)];
            (
                g_diag(&e).with_post_iso(q),
                r("jcase12", n).param("k", &kk).param("gamma", &gamma),
                r("J3", n),
            )
        }
        "W5" => {
            let m = n - 3;
            let alpha = args.vector("alpha", m, || vec![one(); m])?;
            let beta = args.vector("beta", m, || vec![one(); m])?;
            let gamma = args.vector("gamma", m * (m + 1) / 2, || vec![one(); m * (m + 1) / 2])?;
            let mut e = vec![-1; n];
            e[0] = 0;
            e[1] = 0;
            e[n - 1] = 0;
            let q = units(n, &[1, 2, n]);
            (
                g_diag(&e).with_post_iso(q),
                r("jcase2", n).param("alpha", &alpha).param("beta", &beta).param("gamma", &gamma),
                r("J3", n),
            )
        }
        "W6" => {
            let k = args.integer("k", ((n - 1) / 2) as i64)?;
            if k < 2 || 2 * k as usize + 1 > n {
                return Err(args.domain("k", "need k >= 2 and n >= 2k + 1"));
            }
            let k = k as usize;
            let mut e = vec![0; n];
            for i in 3..=k {
                e[i - 1] = -1;
                e[k + i - 1] = -1;
            }
            let front = [1, 2, k + 1, k + 2, 2 * k + 1];
            let q = units(n, &front);
            (
                g_diag(&e).with_post_iso(q),
                r("heis", n).param("k", &[F::from_i64(k as i64)]),
                r("n51", n),
            )
        }
        "W7" => {
            let gamma = args.vector("gamma", 2, || vec![one(), one()])?;
            let mut e = vec![-3; n];
            e[..3].fill(-2);
            e[3] = -4;
            e[4] = -4;
            let q = front_basis(
                n,
                vec![
                    unit(1),
                    (2, vec![(2, one()), (1, -gamma[1].clone())]),
                    (3, vec![(3, one()), (1, gamma[0].clone())]),
                ],
            );
            (g_diag(&e).with_post_iso(q), r("nil2", n).param("gamma", &gamma), r("n52", n))
        }
        "W8" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            let mut e = vec![0; n];
            e[1] = -1;
            let q = units(n, &[1, 3, 2]);
            let mut target = vec![one(); n - 2];
            target[0] = F::zero();
            target[1] = a.clone();
            (
                g_diag(&e).with_post_iso(q),
                r("lie_codim2", n).param("alpha", &[a]),
                r("g1fam", n).param("alpha", &target),
            )
        }
        "W9" => {
            let blocks = block_sizes(&args, n, || vec![n as i64 - 1])?;
            if blocks[0] < 2 {
                return Err(args.domain("blocks", "first block must have size >= 2"));
            }
            let mut e = block_exponents(&blocks);
            e[1] = 2 - blocks[0] as i64;
            (g_diag(&e), r("jblock", n).param("blocks", &ints::<F>(&blocks)), r("g2", n))
        }
        "W10" => {
            let blocks = block_sizes(&args, n, || {
                let mut b = vec![1; n - 2];
                b[0] = 2;
                b
            })?;
            let eigen = args.vector("eigen", blocks.len(), || {
                let mut v = vec![one(); blocks.len()];
                v[0] = F::from_i64(2);
                v
            })?;
            if eigen.iter().all(|x| *x == eigen[0]) {
                return Err(args.domain("eigen", "eigenvalues must not all be equal"));
            }
            let diag: Vec<F> = blocks
                .iter()
                .zip(&eigen)
                .flat_map(|(&b, l)| std::iter::repeat_n(l.clone(), b))
                .collect();
            let (pos, lambda) = diag
                .iter()
                .enumerate()
                .find(|(_, l)| !l.is_zero())
                .map(|(i, l)| (i + 2, l.clone()))
                .expect("not all equal, so some eigenvalue is nonzero");
            let linv = lambda.inv().expect("nonzero");
            let q = front_basis(n, vec![(1, vec![(1, linv.clone())]), unit(pos)]);
            let target: Vec<F> =
                (2..=n).filter(|&i| i != pos).map(|i| diag[i - 2].clone() * &linv).collect();
            (
                g_diag(&block_exponents(&blocks)).with_post_iso(q),
                r("jblock", n).param("blocks", &ints::<F>(&blocks)).param("eigen", &eigen),
                r("g1fam", n).param("alpha", &target),
            )
        }
        "W11" => {
            let a3 = args.scalar("alpha3", F::from_i64(2))?;
            let a4 = args.scalar("alpha4", F::from_i64(3))?;
            let a5 = args.scalar("alpha5", F::ratio(1, 2))?;
            let mut e = vec![0; n];
            e[..5].copy_from_slice(&[-1, -1, -2, -1, -2]);
            let front = [1, 2, 4, 3, 5];
            let q = units(n, &front);
            (
                g_diag(&e).with_post_iso(q),
                r("lie_companion", n)
                    .param("alpha3", &[a3])
                    .param("alpha4", &[a4])
                    .param("alpha5", &[a5]),
                r("n52", n),
            )
        }
        "W12" | "W12-rep" => {
            let mut e = vec![-1; n];
            e[0] = 0;
            let mut target = vec![F::zero(); n - 2];
            target[0] = -one();
            let source = if id == "W12" { "sl2" } else { "sl2_rep" };
            if id == "W12-rep" {
                target[1] = F::ratio(1, 2);
                target[2] = F::ratio(-1, 2);
            }
            (g_diag(&e), r(source, n), r("g1fam", n).param("alpha", &target))
        }
        "D1" | "D9" | "D2" | "D12" => {
            let second = if matches!(id, "D1" | "D9") {
                vec![t(1, one(), 2)]
            } else {
                vec![t(1, one(), 2), t(2, F::from_i64(2), 1)]
            };
            let w = inverse_cols(n, vec![(1, vec![t(1, one(), 1), t(2, one(), 0)]), (2, second)]);
            let source = match id {
                "D1" => "J1",
                "D9" => "A1",
                "D2" => "J2",
                _ => "A2",
            };
            (w, r(source, n), r("lambda2", n))
        }
        "D3" => {
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 0), t(2, one(), 0)]),
                    (2, vec![t(3, F::from_i64(2), 0)]),
                    (3, vec![t(2, one(), 1)]),
                ],
            );
            (w, r("J3", n), r("lambda2", n))
        }
        "D4" | "D6" => {
            let third = if id == "D4" {
                vec![t(2, one(), 1)]
            } else {
                vec![t(2, one(), 1), t(3, one(), 1)]
            };
            let second = if id == "D4" {
                vec![t(2, one(), 0), t(3, one(), 0)]
            } else {
                vec![t(2, one(), 0)]
            };
            let w = inverse_cols(n, vec![(1, vec![t(1, one(), 1)]), (2, second), (3, third)]);
            let source = match (id, n) {
                ("D4", _) => "r2a",
                (_, 4) => "g42",
                _ => "g2",
            };
            (w, r(source, n), r("n3", n))
        }
        "D5" | "D5-r3" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            if a.is_one() || (id == "D5" && a.is_zero()) {
                return Err(args.domain("alpha", "outside the source's parameter domain"));
            }
            let third = if id == "D5" {
                vec![t(2, a.clone(), 1), t(3, one(), 1)]
            } else {
                vec![t(2, one(), 1), t(3, a.clone(), 1)]
            };
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 1)]),
                    (2, vec![t(2, one(), 0), t(3, one(), 0)]),
                    (3, third),
                ],
            );
            let source = match (id, n) {
                ("D5-r3", _) => "r3",
                (_, 4) => "g41",
                _ => "g1",
            };
            (w, r(source, n).param("alpha", &[a]), r("n3", n))
        }
        "D7" | "D8" => {
            let cols: Vec<(usize, Column<F>)> = if id == "D7" {
                vec![
                    (2, vec![t(3, one(), 0)]),
                    (3, vec![t(5, one(), 0)]),
                    (4, vec![t(2, one(), 1)]),
                    (5, vec![t(4, one(), 1)]),
                ]
            } else {
                vec![(3, vec![t(4, one(), 0)]), (4, vec![t(3, one(), 1)])]
            };
            let source = if id == "D7" { "n51" } else { "n52" };
            (inverse_cols(n, cols), r(source, n), r("n3", n))
        }
        "D10" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 0), t(2, one(), 0)]),
                    (2, vec![t(3, one() + &a, 0)]),
                    (3, vec![t(2, one(), 1)]),
                ],
            );
            (w, r("A5", n).param("alpha", &[a]), r("lambda2", n))
        }
        "D11" => {
            let w = inverse_cols(n, vec![(2, vec![t(3, one(), 0)]), (3, vec![t(2, one(), 1)])]);
            (w, r("A6", n), r("lambda2", n))
        }
        "D12-A3" | "D12-A4" => {
            let (source, alpha) = if id == "D12-A3" { ("A3", one()) } else { ("A4", F::zero()) };
            (Witness::identity(n), r(source, n), r("nu", n).param("alpha", &[alpha]))
        }
        "X-n4" => (g_diag(&[0, 0, 0, 1]), r("n4", n), r("n3", n)),
        "X-r3_1a" => {
            let w = inverse_cols(
                n,
                vec![
                    (1, vec![t(1, one(), 1)]),
                    (2, vec![t(2, one(), 0), t(4, one(), 0)]),
                    (3, vec![t(2, one(), 1)]),
                    (4, vec![t(3, one(), 0)]),
                ],
            );
            (w, r("r3_1a", n), r("n3", n))
        }
        _ => return Err(Error::UnknownWitness(id.to_string())),
    };
    source.build::<F>()?;
    target.build::<F>()?;
    Ok(w.with_endpoints(source.to_string(), target.to_string()))
}

/// Exponent `i - k_j` for the `i`-th vector of the `j`-th block of size
/// `k_j`, with exponent 0 on `x1`.
fn block_exponents(blocks: &[usize]) -> Vec<i64> {
    let mut e = vec![0];
    for &b in blocks {
        e.extend((1..=b).map(|i| i as i64 - b as i64));
    }
    e
}

fn ints<F: Scalar>(v: &[usize]) -> Vec<F> {
    v.iter().map(|&x| F::from_i64(x as i64)).collect()
}

/// Parameter sets for witness `id` at dimension `n`, drawn from the sample
/// sets of its source. Sets outside the witness's domain are dropped.
pub fn witness_samples<F: Scalar>(id: &str, n: usize) -> Vec<Params<F>> {
    let Ok(wi) = super::witness_info(id) else { return Vec::new() };
    if !wi.supports(n) {
        return Vec::new();
    }
    let keys: Vec<&str> = wi.params.iter().map(|p| p.name).collect();
    let mut out: Vec<Params<F>> = Vec::new();
    let source_samples = if wi.source == "J" && id == "W1" {
        vec![Params::new()]
    } else {
        sample_params::<F>(wi.source, n)
    };
    for (i, mut s) in source_samples.into_iter().enumerate() {
        s.retain(|k, _| keys.contains(&k.as_str()));
        if keys.contains(&"A") {
            let (a, b) = SAMPLE_VALUES[i % SAMPLE_VALUES.len()];
            s.insert("A".to_string(), vec![F::ratio(a, b)]);
        }
        if !out.contains(&s) && witness::<F>(id, n, &s).is_ok() {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::witness_endpoints;
    use crate::degeneration::verify_witness;
    use crate::exactnum::Rational;
    use crate::invariants::degeneration_obstructions;

    type Q = Rational;

    fn check(id: &str, n: usize, params: &Params<Q>, expect_proper: bool) {
        let w = witness::<Q>(id, n, params).unwrap();
        let (s, t) = witness_endpoints(&w).unwrap();
        let v = verify_witness(&s, &w, &t).unwrap();
        assert!(v.limit_exists, "{id}@{n} {params:?}: pole {:?}", v.pole);
        assert!(v.limit_equals_target, "{id}@{n} {params:?}: limit\n{}", v.limit.unwrap());
        if expect_proper {
            let iso = matches!(id, "W3-prep" | "D12-A3" | "D12-A4");
            assert_eq!(v.proper, !iso, "{id}@{n} {params:?}: properness");
        }
        if v.proper {
            let obstructions = degeneration_obstructions(&s, &t).unwrap();
            assert!(obstructions.is_empty(), "{id}@{n} {params:?}: {obstructions:?}");
        }
    }

    #[test]
    fn every_witness_reaches_its_target() {
        for wi in entries() {
            for n in wi.min_n..=wi.max_n.unwrap_or(8).min(8) {
                let samples = witness_samples::<Q>(wi.id, n);
                assert!(!samples.is_empty(), "{} has no valid sample at n = {n}", wi.id);
                for s in &samples {
                    check(wi.id, n, s, false);
                }
                check(wi.id, n, &Params::new(), n >= 7 || Some(n) == wi.max_n);
            }
        }
    }

    #[test]
    fn gaussian_parameters_survive_the_reference() {
        use crate::exactnum::Gaussian;
        let p = Params::from([("alpha".into(), vec![Gaussian::i()])]);
        let w = witness::<Gaussian>("D10", 3, &p).unwrap();
        let (s, t) = witness_endpoints(&w).unwrap();
        assert_eq!(s.coeff(1, 2, 3), &Gaussian::i());
        let v = verify_witness(&s, &w, &t).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn literal_scaling_for_companion_form_has_a_pole() {
        let w = g_diag::<Q>(&[-1, -1, -2, -2, 0]);
        let s = super::super::build::<Q>("lie_companion", 5, &Params::new()).unwrap();
        let t = super::super::build::<Q>("n52", 5, &Params::new()).unwrap();
        let v = verify_witness(&s, &w, &t).unwrap();
        assert!(!v.limit_exists);
        assert_eq!(v.pole, Some((1, 5, 4)));
    }

    #[test]
    fn shear_gamma_values() {
        let p = Params::from([
            ("k".into(), vec![Q::from_i64(2)]),
            ("alpha2".into(), vec![Q::from_i64(1)]),
            ("A".into(), vec![Q::from_i64(1)]),
        ]);
        let w = witness::<Q>("W3-prep", 4, &p).unwrap();
        assert_eq!(w.target.as_deref(), Some("catalog:jcase11(gamma=-1/2;3/2,k=2)@4"));
        let bad = Params::from([
            ("A".into(), vec![Q::from_i64(-1)]),
            ("alpha2".into(), vec![Q::from_i64(1)]),
        ]);
        assert!(matches!(witness::<Q>("W3-prep", 4, &bad), Err(Error::ParameterDomain { .. })));
    }
}

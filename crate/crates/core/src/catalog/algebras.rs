use super::{EntryInfo, Level, ParamKind, ParamSpec, Params, SAMPLE_VALUES};
use crate::algebra::{Algebra, Product, Symmetry, Variety};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

const LEVEL_ONE: &str = "classification of n-dimensional algebras of level one";
const JORDAN_TWO: &str = "classification of Jordan algebras of level two";
const JORDAN_PROOF: &str = "Jordan level-two classification, degeneration argument";
const LIE_SMALL: &str = "level-two Lie algebras of dimensions 3 and 4";
const LIE_TWO: &str = "level-two Lie algebras of dimension n >= 5";
const LIE_PROOF: &str = "Lie level-two classification, degeneration argument";
const ASSOC_TWO: &str = "classification of associative algebras of level two";

fn p(name: &'static str, kind: ParamKind, doc: &'static str) -> ParamSpec {
    ParamSpec { name, kind, doc }
}

fn alpha(doc: &'static str) -> ParamSpec {
    p("alpha", ParamKind::Scalar, doc)
}

#[allow(clippy::too_many_arguments)]
fn e(
    name: &'static str,
    display: &'static str,
    variety: Option<Variety>,
    level: Level,
    min_n: usize,
    max_n: Option<usize>,
    params: Vec<ParamSpec>,
    citation: &'static str,
) -> EntryInfo {
    EntryInfo { name, display, variety, level, min_n, max_n, params, citation, note: None }
}

pub(super) fn entries() -> Vec<EntryInfo> {
    use Level::*;
    use Variety::*;
    let lie = Some(Lie);
    let jordan = Some(Jordan);
    let assoc = Some(Associative);
    vec![
        e("a", "a_n", Some(Associative), Zero, 1, None, vec![], "zero multiplication"),
        e("p", "p_n", lie, One, 2, None, vec![], LEVEL_ONE),
        e("n3", "n_3 + a_{n-3}", lie, One, 3, None, vec![], LEVEL_ONE),
        e("lambda2", "lambda_2 + a_{n-2}", jordan, One, 2, None, vec![], LEVEL_ONE),
        e("nu", "nu_n(alpha)", None, One, 2, None, vec![alpha("any scalar")], LEVEL_ONE),
        e("J1", "J_1", jordan, Two, 1, None, vec![], JORDAN_TWO),
        e("J2", "J_2", jordan, Two, 2, None, vec![], JORDAN_TWO),
        e("J3", "J_3 + a_{n-3}", jordan, Two, 3, None, vec![], JORDAN_TWO),
        e(
            "J",
            "J(zeta_2..zeta_n)",
            jordan,
            Source,
            3,
            None,
            vec![p("zeta", ParamKind::Vector, "n-1 values in {0, 1/2, 1}, not all equal")],
            JORDAN_PROOF,
        ),
        EntryInfo {
            note: Some("equals J3 at n = 3"),
            ..e("T4", "T_4", jordan, Source, 3, Some(3), vec![], JORDAN_PROOF)
        },
        e("jordan_sym2", "Sym_2 + a_{n-3}", jordan, Source, 3, None, vec![], JORDAN_PROOF),
        e(
            "jcase11_pre",
            "x1x1 = x_{k+1}, x1x2 = alpha2 x_{k+1}, x2x2 = x_{k+2}",
            jordan,
            Source,
            4,
            None,
            vec![
                p("k", ParamKind::Integer, "number of generators, k >= 2, n >= k + 2"),
                p("alpha2", ParamKind::Scalar, "coefficient of x1x2"),
            ],
            JORDAN_PROOF,
        ),
        e(
            "jcase11",
            "x1x1 = x_{k+1}, x1x2 = x_{k+2}, x2x2 = sum gamma_i x_i",
            jordan,
            Source,
            4,
            None,
            vec![
                p("k", ParamKind::Integer, "number of generators, k >= 2, n >= k + 2"),
                p("gamma", ParamKind::Vector, "gamma_{k+1}..gamma_n"),
            ],
            JORDAN_PROOF,
        ),
        EntryInfo {
            note: Some("satisfies the Jordan identity only when gamma = 0"),
            ..e(
                "jcase12",
                "x1x1 = x_{k+1}, x1x_{k+1} = x_{k+2}, x_{k+1}^2 = sum gamma_i x_i",
                Some(Commutative),
                Source,
                3,
                None,
                vec![
                    p("k", ParamKind::Integer, "k >= 1, n >= k + 2"),
                    p("gamma", ParamKind::Vector, "gamma_{k+2}..gamma_n"),
                ],
                JORDAN_PROOF,
            )
        },
        e(
            "jcase2",
            "x1x2 = x_n with products of x_3..x_{n-1} into x_n",
            jordan,
            Source,
            3,
            None,
            vec![
                p("alpha", ParamKind::Vector, "x1 x_i = alpha_i x_n, 3 <= i <= n-1"),
                p("beta", ParamKind::Vector, "x2 x_i = beta_i x_n, 3 <= i <= n-1"),
                p(
                    "gamma",
                    ParamKind::Vector,
                    "x_i x_j = gamma_ij x_n, 3 <= i <= j <= n-1, row-major",
                ),
            ],
            JORDAN_PROOF,
        ),
        e("r2a", "r_2 + a_{n-2}", lie, Two, 2, None, vec![], LIE_TWO),
        EntryInfo {
            note: Some("r3(1) coincides with p_3, which has level one"),
            ..e("r3", "r_3(alpha)", lie, Two, 3, Some(3), vec![alpha("any scalar")], LIE_SMALL)
        },
        e("n4", "n_4", lie, Two, 4, Some(4), vec![], LIE_SMALL),
        e("r3_1a", "r_3(1) + a_1", lie, Two, 4, Some(4), vec![], LIE_SMALL),
        e("g41", "g_{4,1}(alpha)", lie, Two, 4, Some(4), vec![alpha("alpha != 0, 1")], LIE_SMALL),
        e("g42", "g_{4,2}", lie, Two, 4, Some(4), vec![], LIE_SMALL),
        e("n51", "n_{5,1} + a_{n-5}", lie, Two, 5, None, vec![], LIE_TWO),
        e("n52", "n_{5,2} + a_{n-5}", lie, Two, 5, None, vec![], LIE_TWO),
        e("g1", "g_{n,1}(alpha)", lie, Two, 4, None, vec![alpha("alpha != 0, 1")], LIE_TWO),
        e("g2", "g_{n,2}", lie, Two, 4, None, vec![], LIE_TWO),
        e(
            "g1fam",
            "g_{n,1}(alpha_3..alpha_n)",
            lie,
            Source,
            3,
            None,
            vec![p("alpha", ParamKind::Vector, "alpha_3..alpha_n, not all 1")],
            LIE_PROOF,
        ),
        e(
            "heis",
            "H_{2k+1} + a_{n-2k-1}",
            lie,
            Source,
            3,
            None,
            vec![p("k", ParamKind::Integer, "k >= 1, n >= 2k + 1; default floor((n-1)/2)")],
            LIE_PROOF,
        ),
        e(
            "nil2",
            "[x1,x2] = x4, [x1,x3] = x5, [x2,x3] = gamma4 x4 + gamma5 x5",
            lie,
            Source,
            5,
            None,
            vec![p("gamma", ParamKind::Vector, "(gamma4, gamma5)")],
            LIE_PROOF,
        ),
        e(
            "lie_codim2",
            "solvable, abelian nilradical of codimension 2",
            lie,
            Source,
            4,
            None,
            vec![alpha("eigenvalue of ad x1 on x4")],
            LIE_PROOF,
        ),
        e(
            "jblock",
            "solvable, abelian nilradical, ad x1 in Jordan form",
            lie,
            Source,
            2,
            None,
            vec![
                p("blocks", ParamKind::IntegerVector, "Jordan block sizes summing to n-1"),
                p("eigen", ParamKind::Vector, "one eigenvalue per block; default all 1"),
            ],
            LIE_PROOF,
        ),
        e(
            "lie_companion",
            "ad e1 in companion form on (e2,e3) and (e4,e5)",
            lie,
            Source,
            5,
            None,
            vec![
                p("alpha3", ParamKind::Scalar, "eigenvalue on the first pair"),
                p("alpha4", ParamKind::Scalar, "first eigenvalue on the second pair"),
                p("alpha5", ParamKind::Scalar, "second eigenvalue on the second pair"),
            ],
            LIE_PROOF,
        ),
        e("sl2", "sl_2 + a_{n-3}", lie, Source, 3, None, vec![], LIE_PROOF),
        e("sl2_rep", "sl_2 x C^2", lie, Source, 5, Some(5), vec![], LIE_PROOF),
        e("A1", "A_1", assoc, Two, 1, None, vec![], ASSOC_TWO),
        e("A2", "A_2", assoc, Two, 2, None, vec![], ASSOC_TWO),
        EntryInfo {
            note: Some("coincides entry by entry with nu(1), which has level one"),
            ..e("A3", "A_3", assoc, Two, 2, None, vec![], ASSOC_TWO)
        },
        EntryInfo {
            note: Some("coincides entry by entry with nu(0), which has level one"),
            ..e("A4", "A_4", assoc, Two, 2, None, vec![], ASSOC_TWO)
        },
        e(
            "A5",
            "A_5(alpha) + a_{n-3}",
            assoc,
            Two,
            3,
            None,
            vec![alpha("alpha != 1, -1")],
            ASSOC_TWO,
        ),
        e("A6", "A_6 + a_{n-3}", assoc, Two, 3, None, vec![], ASSOC_TWO),
    ]
}

struct Table<F> {
    n: usize,
    products: Vec<Product<F>>,
}

impl<F: Scalar> Table<F> {
    fn new(n: usize) -> Self {
        Table { n, products: Vec::new() }
    }

    fn add(&mut self, i: usize, j: usize, k: usize, c: F) -> &mut Self {
        if !c.is_zero() {
            self.products.push(Product::new(i, j, k, c));
        }
        self
    }

    fn one(&mut self, i: usize, j: usize, k: usize) -> &mut Self {
        self.add(i, j, k, F::one())
    }

    fn finish(&self, sym: Symmetry) -> Result<Algebra<F>> {
        Algebra::new(self.n, &self.products, sym)
    }
}

pub(super) struct Args<'a, F> {
    pub(super) name: &'a str,
    pub(super) params: &'a Params<F>,
}

impl<F: Scalar> Args<'_, F> {
    pub(super) fn domain(&self, param: &str, reason: impl Into<String>) -> Error {
        Error::ParameterDomain {
            name: self.name.to_string(),
            param: param.to_string(),
            reason: reason.into(),
        }
    }

    pub(super) fn scalar(&self, key: &str, default: F) -> Result<F> {
        match self.params.get(key) {
            None => Ok(default),
            Some(v) if v.len() == 1 => Ok(v[0].clone()),
            Some(v) => Err(self.domain(key, format!("expected one value, got {}", v.len()))),
        }
    }

    pub(super) fn integer(&self, key: &str, default: i64) -> Result<i64> {
        let v = self.scalar(key, F::from_i64(default))?;
        v.to_i64().ok_or_else(|| self.domain(key, "expected an integer"))
    }

    pub(super) fn vector(
        &self,
        key: &str,
        len: usize,
        default: impl FnOnce() -> Vec<F>,
    ) -> Result<Vec<F>> {
        let v = self.params.get(key).cloned().unwrap_or_else(default);
        if v.len() != len {
            return Err(self.domain(key, format!("expected {len} values, got {}", v.len())));
        }
        Ok(v)
    }

    pub(super) fn integers(
        &self,
        key: &str,
        default: impl FnOnce() -> Vec<i64>,
    ) -> Result<Vec<i64>> {
        match self.params.get(key) {
            None => Ok(default()),
            Some(v) => v
                .iter()
                .map(|x| x.to_i64().ok_or_else(|| self.domain(key, "expected integers")))
                .collect(),
        }
    }
}

fn constraint_text(info: &EntryInfo) -> String {
    match info.max_n {
        Some(m) if m == info.min_n => format!("n = {m}"),
        Some(m) => format!("{} <= n <= {m}", info.min_n),
        None => format!("n >= {}", info.min_n),
    }
}

/// Builds catalog algebra `name` at dimension `n`. Omitted parameters take
/// their documented defaults.
pub fn build<F: Scalar>(name: &str, n: usize, params: &Params<F>) -> Result<Algebra<F>> {
    let info = super::entry(name)?;
    if !info.supports(n) {
        return Err(Error::DimensionConstraint {
            name: name.to_string(),
            n,
            constraint: constraint_text(&info),
        });
    }
    let args = Args { name, params };
    for key in params.keys() {
        if !info.params.iter().any(|p| p.name == key) {
            return Err(args.domain(key, "unknown parameter"));
        }
    }
    let q = |a: i64, b: i64| F::ratio(a, b);
    let mut t = Table::new(n);
    use Symmetry::*;
    match name {
        "a" => t.finish(None),
        "p" => {
            for i in 2..=n {
                t.one(1, i, i);
            }
            t.finish(Anticommutative)
        }
        "n3" | "J3" | "T4" => {
            t.one(1, 2, 3);
            t.finish(if name == "n3" { Anticommutative } else { Commutative })
        }
        "lambda2" => t.one(1, 1, 2).finish(None),
        "nu" => {
            let a = args.scalar("alpha", q(1, 2))?;
            t.one(1, 1, 1);
            for i in 2..=n {
                t.add(1, i, i, a.clone()).add(i, 1, i, F::one() - &a);
            }
            t.finish(None)
        }
        "J1" | "A1" => t.one(1, 1, 1).finish(None),
        "J2" | "A2" => {
            t.one(1, 1, 1);
            for i in 2..=n {
                t.one(1, i, i).one(i, 1, i);
            }
            t.finish(None)
        }
        "A3" | "A4" => {
            t.one(1, 1, 1);
            for i in 2..=n {
                if name == "A3" {
                    t.one(1, i, i);
                } else {
                    t.one(i, 1, i);
                }
            }
            t.finish(None)
        }
        "J" => {
            let zeta = args.vector("zeta", n - 1, || {
                let mut z = vec![F::zero(); n - 1];
                z[0] = F::one();
                z
            })?;
            let allowed = [F::zero(), q(1, 2), F::one()];
            if zeta.iter().any(|z| !allowed.contains(z)) {
                return Err(args.domain("zeta", "values must lie in {0, 1/2, 1}"));
            }
            if zeta.iter().all(|z| *z == zeta[0]) {
                return Err(args.domain("zeta", "values must not all be equal"));
            }
            t.one(1, 1, 1);
            for (i, z) in zeta.into_iter().enumerate() {
                t.add(1, i + 2, i + 2, z);
            }
            t.finish(Commutative)
        }
        "jordan_sym2" => {
            t.one(1, 1, 1).one(2, 2, 2).add(1, 3, 3, q(1, 2)).add(2, 3, 3, q(1, 2));
            t.one(3, 3, 1).one(3, 3, 2).finish(Commutative)
        }
        "jcase11_pre" | "jcase11" => {
            let k = generators(&args, n, 2)?;
            t.one(1, 1, k + 1);
            if name == "jcase11_pre" {
                let a2 = args.scalar("alpha2", F::one())?;
                t.add(1, 2, k + 1, a2).one(2, 2, k + 2);
            } else {
                let gamma = args.vector("gamma", n - k, || vec![F::one(); n - k])?;
                t.one(1, 2, k + 2);
                for (off, g) in gamma.into_iter().enumerate() {
                    t.add(2, 2, k + 1 + off, g);
                }
            }
            t.finish(Commutative)
        }
        "jcase12" => {
            let k = generators(&args, n, 1)?;
            let gamma = args.vector("gamma", n - k - 1, || vec![F::zero(); n - k - 1])?;
            t.one(1, 1, k + 1).one(1, k + 1, k + 2);
            for (off, g) in gamma.into_iter().enumerate() {
                t.add(k + 1, k + 1, k + 2 + off, g);
            }
            t.finish(Commutative)
        }
        "jcase2" => {
            let m = n - 3;
            let alpha = args.vector("alpha", m, || vec![F::one(); m])?;
            let beta = args.vector("beta", m, || vec![F::one(); m])?;
            let gamma =
                args.vector("gamma", m * (m + 1) / 2, || vec![F::one(); m * (m + 1) / 2])?;
            t.one(1, 2, n);
            for i in 0..m {
                t.add(1, i + 3, n, alpha[i].clone()).add(2, i + 3, n, beta[i].clone());
            }
            let mut g = gamma.into_iter();
            for i in 0..m {
                for j in i..m {
                    t.add(i + 3, j + 3, n, g.next().expect("length checked"));
                }
            }
            t.finish(Commutative)
        }
        "r2a" => t.one(1, 2, 2).finish(Anticommutative),
        "r3" => {
            let a = args.scalar("alpha", q(1, 2))?;
            t.one(1, 2, 2).add(1, 3, 3, a).finish(Anticommutative)
        }
        "n4" => t.one(1, 2, 3).one(1, 3, 4).finish(Anticommutative),
        "r3_1a" => t.one(1, 2, 2).one(1, 3, 3).finish(Anticommutative),
        "g41" | "g1" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            if a.is_zero() || a.is_one() {
                return Err(args.domain("alpha", "must differ from 0 and 1"));
            }
            t.add(1, 2, 2, a);
            for i in 3..=n {
                t.one(1, i, i);
            }
            t.finish(Anticommutative)
        }
        "g42" | "g2" => {
            t.one(1, 2, 2).one(1, 2, 3);
            for i in 3..=n {
                t.one(1, i, i);
            }
            t.finish(Anticommutative)
        }
        "n51" => t.one(1, 3, 5).one(2, 4, 5).finish(Anticommutative),
        "n52" => t.one(1, 2, 4).one(1, 3, 5).finish(Anticommutative),
        "g1fam" => {
            let alpha = args.vector("alpha", n - 2, || {
                let mut a = vec![F::one(); n - 2];
                a[0] = F::from_i64(2);
                a
            })?;
            if alpha.iter().all(F::is_one) {
                return Err(args.domain("alpha", "must not all equal 1"));
            }
            t.one(1, 2, 2);
            for (i, a) in alpha.into_iter().enumerate() {
                t.add(1, i + 3, i + 3, a);
            }
            t.finish(Anticommutative)
        }
        "heis" => {
            let k = args.integer("k", ((n - 1) / 2) as i64)?;
            if k < 1 || 2 * k as usize + 1 > n {
                return Err(args.domain("k", "need k >= 1 and n >= 2k + 1"));
            }
            let k = k as usize;
            for i in 1..=k {
                t.one(i, k + i, 2 * k + 1);
            }
            t.finish(Anticommutative)
        }
        "nil2" => {
            let g = args.vector("gamma", 2, || vec![F::one(), F::one()])?;
            t.one(1, 2, 4).one(1, 3, 5).add(2, 3, 4, g[0].clone()).add(2, 3, 5, g[1].clone());
            if n >= 6 {
                t.one(1, 6, 4);
            }
            if n >= 7 {
                t.one(6, 7, 5);
            }
            t.finish(Anticommutative)
        }
        "lie_codim2" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            t.one(1, 3, 3).add(1, 4, 4, a).one(2, 4, 4);
            for i in 5..=n {
                t.one(1, i, i);
            }
            t.finish(Anticommutative)
        }
        "jblock" => {
            let blocks = block_sizes(&args, n, || vec![1; n - 1])?;
            let eigen = args.vector("eigen", blocks.len(), || vec![F::one(); blocks.len()])?;
            let mut pos = 2;
            for (size, lambda) in blocks.iter().zip(eigen) {
                for i in 0..*size {
                    t.add(1, pos + i, pos + i, lambda.clone());
                    if i + 1 < *size {
                        t.one(1, pos + i, pos + i + 1);
                    }
                }
                pos += size;
            }
            t.finish(Anticommutative)
        }
        "lie_companion" => {
            let a3 = args.scalar("alpha3", F::from_i64(2))?;
            let a4 = args.scalar("alpha4", F::from_i64(3))?;
            let a5 = args.scalar("alpha5", q(1, 2))?;
            t.one(1, 2, 3).add(1, 3, 2, -a3.clone()).add(1, 3, 3, F::one() + &a3);
            t.one(1, 4, 5).add(1, 5, 4, -(a4.clone() * &a5)).add(1, 5, 5, a4 + &a5);
            for i in 6..=n {
                t.one(1, i, i);
            }
            t.finish(Anticommutative)
        }
        "sl2" | "sl2_rep" => {
            t.one(1, 2, 2).add(1, 3, 3, -F::one()).add(2, 3, 1, F::from_i64(2));
            if name == "sl2_rep" {
                t.add(1, 4, 4, q(1, 2)).add(1, 5, 5, q(-1, 2)).one(2, 5, 4).one(3, 4, 5);
            }
            t.finish(Anticommutative)
        }
        "A5" => {
            let a = args.scalar("alpha", F::from_i64(2))?;
            if a.is_one() || a == -F::one() {
                return Err(args.domain("alpha", "must satisfy alpha != 1/alpha"));
            }
            t.one(2, 1, 3).add(1, 2, 3, a).finish(None)
        }
        "A6" => t.one(1, 1, 3).one(2, 1, 3).add(1, 2, 3, -F::one()).finish(None),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub(super) fn generators<F: Scalar>(args: &Args<'_, F>, n: usize, min_k: i64) -> Result<usize> {
    let k = args.integer("k", min_k)?;
    if k < min_k || k as usize + 2 > n {
        return Err(args.domain("k", format!("need k >= {min_k} and n >= k + 2")));
    }
    Ok(k as usize)
}

pub(super) fn block_sizes<F: Scalar>(
    args: &Args<'_, F>,
    n: usize,
    default: impl FnOnce() -> Vec<i64>,
) -> Result<Vec<usize>> {
    let blocks = args.integers("blocks", default)?;
    if blocks.iter().any(|&b| b < 1) || blocks.iter().sum::<i64>() != n as i64 - 1 {
        return Err(args.domain("blocks", "sizes must be positive and sum to n - 1"));
    }
    Ok(blocks.into_iter().map(|b| b as usize).collect())
}

fn samples<F: Scalar>() -> Vec<F> {
    SAMPLE_VALUES.iter().map(|&(a, b)| F::ratio(a, b)).collect()
}

/// Parameter sets used to exercise entry `name` at dimension `n`: each free
/// scalar ranges over the sample values, and vector parameters receive
/// constant and mixed vectors built from them. Some sets may fall outside the
/// entry's domain; [`build`] rejects those.
pub fn sample_params<F: Scalar>(name: &str, n: usize) -> Vec<Params<F>> {
    let s = samples::<F>();
    let one = |k: &str, v: Vec<F>| Params::from([(k.to_string(), v)]);
    let mixed = |len: usize, shift: usize| -> Vec<F> {
        (0..len).map(|i| s[(i + shift) % s.len()].clone()).collect()
    };
    let vectors = |len: usize| -> Vec<Vec<F>> {
        let mut out: Vec<Vec<F>> = s.iter().map(|x| vec![x.clone(); len]).collect();
        out.push(mixed(len, 0));
        out.push(mixed(len, 1));
        out
    };
    let ints = |v: &[usize]| v.iter().map(|&x| F::from_i64(x as i64)).collect::<Vec<F>>();
    match name {
        "nu" | "r3" | "g41" | "g1" | "A5" | "lie_codim2" => {
            s.iter().map(|a| one("alpha", vec![a.clone()])).collect()
        }
        "J" => {
            let vals = [F::zero(), F::ratio(1, 2), F::one()];
            (0..3)
                .flat_map(|shift| {
                    let v: Vec<F> = (0..n - 1).map(|i| vals[(i + shift) % 3].clone()).collect();
                    let mut w = vec![vals[shift].clone(); n - 1];
                    w[n - 2] = vals[(shift + 1) % 3].clone();
                    [one("zeta", v), one("zeta", w)]
                })
                .collect()
        }
        "g1fam" => vectors(n - 2).into_iter().map(|v| one("alpha", v)).collect(),
        "jcase11_pre" => s
            .iter()
            .flat_map(|a| {
                (2..=n.saturating_sub(2)).map(move |k| {
                    Params::from([
                        ("k".to_string(), vec![F::from_i64(k as i64)]),
                        ("alpha2".to_string(), vec![a.clone()]),
                    ])
                })
            })
            .collect(),
        "jcase11" | "jcase12" => {
            let min_k = if name == "jcase11" { 2 } else { 1 };
            let gamma_len = |k: usize| if name == "jcase11" { n - k } else { n - k - 1 };
            (min_k..=n.saturating_sub(2))
                .flat_map(|k| {
                    let mut v = vectors(gamma_len(k));
                    if name == "jcase12" {
                        v.push(vec![F::zero(); gamma_len(k)]);
                    }
                    v.into_iter().map(move |g| {
                        Params::from([
                            ("k".to_string(), vec![F::from_i64(k as i64)]),
                            ("gamma".to_string(), g),
                        ])
                    })
                })
                .collect()
        }
        "jcase2" => {
            let m = n - 3;
            (0..s.len() + 2)
                .map(|i| {
                    Params::from([
                        ("alpha".to_string(), mixed(m, i)),
                        ("beta".to_string(), mixed(m, i + 1)),
                        ("gamma".to_string(), mixed(m * (m + 1) / 2, i + 2)),
                    ])
                })
                .collect()
        }
        "heis" => (1..=(n - 1) / 2).map(|k| one("k", vec![F::from_i64(k as i64)])).collect(),
        "nil2" => vectors(2).into_iter().map(|g| one("gamma", g)).collect(),
        "jblock" => {
            let mut sigs: Vec<Vec<usize>> = vec![vec![1; n - 1], vec![n - 1]];
            for head in [2, 3] {
                if head < n {
                    let mut b = vec![head];
                    b.extend(std::iter::repeat_n(1, n - 1 - head));
                    sigs.push(b);
                }
            }
            sigs.into_iter()
                .flat_map(|b| {
                    let len = b.len();
                    vectors(len).into_iter().map(move |ev| {
                        Params::from([("blocks".to_string(), ints(&b)), ("eigen".to_string(), ev)])
                    })
                })
                .collect()
        }
        "lie_companion" => (0..s.len())
            .map(|i| {
                Params::from([
                    ("alpha3".to_string(), vec![s[i].clone()]),
                    ("alpha4".to_string(), vec![s[(i + 1) % s.len()].clone()]),
                    ("alpha5".to_string(), vec![s[(i + 2) % s.len()].clone()]),
                ])
            })
            .collect(),
        _ => vec![Params::new()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    type Q = Rational;

    fn b(name: &str, n: usize) -> Algebra<Q> {
        build(name, n, &Params::new()).unwrap()
    }

    #[test]
    fn nu_half_table() {
        let nu =
            build::<Q>("nu", 3, &Params::from([("alpha".into(), vec![Q::ratio(1, 2)])])).unwrap();
        assert_eq!(nu.coeff(1, 1, 1), &Q::from_i64(1));
        for i in 2..=3 {
            assert_eq!(nu.coeff(1, i, i), &Q::ratio(1, 2));
            assert_eq!(nu.coeff(i, 1, i), &Q::ratio(1, 2));
        }
        assert_eq!(nu.nonzero_constants().len(), 5);
    }

    #[test]
    fn j2_table() {
        let j2 = b("J2", 4);
        for i in 2..=4 {
            assert_eq!(j2.coeff(1, i, i), &Q::from_i64(1));
            assert_eq!(j2.coeff(i, 1, i), &Q::from_i64(1));
        }
        assert_eq!(j2.nonzero_constants().len(), 7);
    }

    #[test]
    fn dimension_and_domain_errors() {
        let r3 = build::<Q>("r3", 4, &Params::new());
        assert!(matches!(r3, Err(Error::DimensionConstraint { .. })));
        let a5 = build::<Q>("A5", 3, &Params::from([("alpha".into(), vec![Q::from_i64(-1)])]));
        assert!(matches!(a5, Err(Error::ParameterDomain { .. })));
        let a5 = build::<Q>("A5", 3, &Params::from([("alpha".into(), vec![Q::from_i64(0)])]));
        assert!(a5.is_ok());
        assert_eq!(build::<Q>("nope", 3, &Params::new()), Err(Error::UnknownName("nope".into())));
        let extra = build::<Q>("J3", 3, &Params::from([("alpha".into(), vec![Q::from_i64(0)])]));
        assert!(matches!(extra, Err(Error::ParameterDomain { .. })));
        let g1 = build::<Q>("g1", 5, &Params::from([("alpha".into(), vec![Q::from_i64(1)])]));
        assert!(matches!(g1, Err(Error::ParameterDomain { .. })));
    }

    #[test]
    fn coincidences() {
        let nu = |a: i64| {
            build::<Q>("nu", 4, &Params::from([("alpha".into(), vec![Q::from_i64(a)])])).unwrap()
        };
        assert_eq!(b("A3", 4), nu(1));
        assert_eq!(b("A4", 4), nu(0));
        let r3_1 =
            build::<Q>("r3", 3, &Params::from([("alpha".into(), vec![Q::from_i64(1)])])).unwrap();
        assert_eq!(r3_1, b("p", 3));
        assert_eq!(b("T4", 3), b("J3", 3));
        assert_eq!(b("J2", 5), b("A2", 5));
    }

    #[test]
    fn jordan_block_table() {
        let p = Params::from([("blocks".into(), vec![Q::from_i64(2), Q::from_i64(1)])]);
        let a = build::<Q>("jblock", 4, &p).unwrap();
        assert_eq!(a.coeff(1, 2, 2), &Q::from_i64(1));
        assert_eq!(a.coeff(1, 2, 3), &Q::from_i64(1));
        assert_eq!(a.coeff(1, 3, 3), &Q::from_i64(1));
        assert_eq!(a.coeff(1, 3, 4), &Q::from_i64(0));
        assert_eq!(a.coeff(1, 4, 4), &Q::from_i64(1));
        let bad = Params::from([("blocks".into(), vec![Q::from_i64(2), Q::from_i64(2)])]);
        assert!(build::<Q>("jblock", 4, &bad).is_err());
    }

    #[test]
    fn companion_form_is_a_basis_change_of_the_diagonal_family() {
        // e2 = x2 + x3, e3 = x2 + a3 x3, e4 = x4 + x5, e5 = a4 x4 + a5 x5
        let (a3, a4, a5) = (Q::from_i64(2), Q::from_i64(3), Q::ratio(1, 2));
        let diag = build::<Q>(
            "g1fam",
            5,
            &Params::from([("alpha".into(), vec![a3.clone(), a4.clone(), a5.clone()])]),
        )
        .unwrap();
        let z = Q::from_i64(0);
        let o = Q::from_i64(1);
        let basis = crate::linalg::Matrix::from_rows(vec![
            vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), o.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), a3.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), a4.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), a5.clone()],
        ])
        .unwrap();
        let companion = build::<Q>(
            "lie_companion",
            5,
            &Params::from([
                ("alpha3".into(), vec![a3]),
                ("alpha4".into(), vec![a4]),
                ("alpha5".into(), vec![a5]),
            ]),
        )
        .unwrap();
        assert_eq!(diag.in_basis(&basis).unwrap(), companion);
    }

    #[test]
    fn samples_cover_parameters() {
        assert_eq!(sample_params::<Q>("nu", 3).len(), 4);
        assert_eq!(sample_params::<Q>("J3", 3), vec![Params::new()]);
        for p in sample_params::<Q>("J", 4) {
            assert!(build("J", 4, &p).is_ok(), "{p:?}");
        }
    }
}

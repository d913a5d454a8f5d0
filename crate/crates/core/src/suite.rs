//! Verification suites over the catalog. Each suite expands into independent
//! checks that run on the rayon pool; the report is sorted, so it does not
//! depend on scheduling.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Variety};
use crate::catalog::{self, CatalogRef, Level, Params};
use crate::degeneration::{numeric_cross_check, verify_witness, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::invariants::{
    degeneration_obstructions, derivation_dim, invariant_profile, max_abelian_coordinate_ideal,
};
use crate::json::to_sorted_json;
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::pierce::{pierce_associative, pierce_jordan};

type Q = Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Level1,
    Jordan2,
    Lie2,
    Assoc2,
    Pierce,
    Separations,
    Chains,
    Identities,
    Witnesses,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Level1,
        Suite::Jordan2,
        Suite::Lie2,
        Suite::Assoc2,
        Suite::Pierce,
        Suite::Separations,
        Suite::Chains,
        Suite::Identities,
        Suite::Witnesses,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Level1 => "level1",
            Suite::Jordan2 => "jordan2",
            Suite::Lie2 => "lie2",
            Suite::Assoc2 => "assoc2",
            Suite::Pierce => "pierce",
            Suite::Separations => "separations",
            Suite::Chains => "chains",
            Suite::Identities => "identities",
            Suite::Witnesses => "witnesses",
            Suite::Properties => "properties",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::parse(format!("unknown suite `{s}`")))
    }
}

/// One check. `detail` explains a failure or summarizes what was compared.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SuiteItem {
    pub check: String,
    pub subject: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    fn new(
        suite: &str,
        range: &RangeInclusive<usize>,
        seed: u64,
        mut items: Vec<SuiteItem>,
    ) -> Self {
        items.sort();
        let passed = items.iter().filter(|i| i.pass).count();
        SuiteReport {
            suite: suite.to_string(),
            n_min: *range.start(),
            n_max: *range.end(),
            seed,
            total: items.len(),
            passed,
            failed: items.len() - passed,
            items,
        }
    }

    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (n = {}..{}, seed {}): {} passed, {} failed\n",
            self.suite, self.n_min, self.n_max, self.seed, self.passed, self.failed
        );
        for i in &self.items {
            let mark = if i.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{mark}  {:<14} {:<44} n={:<2} {}\n",
                i.check, i.subject, i.n, i.detail
            ));
        }
        out
    }

    /// Merges several reports into one under a combined name.
    pub fn combine(name: &str, reports: Vec<SuiteReport>) -> SuiteReport {
        let n_min = reports.iter().map(|r| r.n_min).min().unwrap_or(0);
        let n_max = reports.iter().map(|r| r.n_max).max().unwrap_or(0);
        let seed = reports.first().map_or(0, |r| r.seed);
        let items = reports
            .into_iter()
            .flat_map(|r| {
                let suite = r.suite;
                r.items.into_iter().map(move |mut i| {
                    i.check = format!("{suite}/{}", i.check);
                    i
                })
            })
            .collect();
        SuiteReport::new(name, &(n_min..=n_max), seed, items)
    }
}

type Task = Box<dyn Fn() -> Vec<SuiteItem> + Send + Sync>;

/// Runs suite `suite` for every dimension in `range`. `seed` only affects
/// the random basis changes and subspaces of the property checks.
pub fn run_suite(suite: Suite, range: RangeInclusive<usize>, seed: u64) -> SuiteReport {
    let mut tasks: Vec<Task> = Vec::new();
    for n in range.clone() {
        match suite {
            Suite::Level1 => level1(n, &mut tasks),
            Suite::Jordan2 => jordan2(n, &mut tasks),
            Suite::Lie2 => lie2(n, &mut tasks),
            Suite::Assoc2 => assoc2(n, &mut tasks),
            Suite::Pierce => pierce(n, &mut tasks),
            Suite::Separations => separations(n, &mut tasks),
            Suite::Chains => chains(n, &mut tasks),
            Suite::Identities => identities(n, &mut tasks),
            Suite::Witnesses => witnesses(n, &mut tasks),
            Suite::Properties => properties(n, seed, &mut tasks),
        }
    }
    let items: Vec<SuiteItem> = tasks.par_iter().flat_map_iter(|t| t()).collect();
    SuiteReport::new(suite.name(), &range, seed, items)
}

fn item(check: &str, subject: impl Into<String>, n: usize, r: Result<(bool, String)>) -> SuiteItem {
    let (pass, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
    SuiteItem { check: check.to_string(), subject: subject.into(), n, pass, detail }
}

fn params_text(p: &Params<Q>) -> String {
    let mut r = CatalogRef::new("", 0);
    for (k, v) in p {
        r = r.param(k, v);
    }
    let s = r.to_string();
    let inner = s.trim_start_matches("catalog:").trim_end_matches("@0");
    inner.to_string()
}

fn subject(name: &str, p: &Params<Q>) -> String {
    format!("{name}{}", params_text(p))
}

fn build(name: &str, n: usize, p: &Params<Q>) -> Result<Algebra<Q>> {
    catalog::build(name, n, p)
}

fn plain(name: &str, n: usize) -> Result<Algebra<Q>> {
    build(name, n, &Params::new())
}

fn alpha(v: Q) -> Params<Q> {
    Params::from([("alpha".to_string(), vec![v])])
}

/// Sample parameter sets of `name` at `n` that lie in its domain.
fn valid_samples(name: &str, n: usize) -> Vec<Params<Q>> {
    catalog::sample_params::<Q>(name, n).into_iter().filter(|p| build(name, n, p).is_ok()).collect()
}

fn supported(name: &str, n: usize) -> bool {
    catalog::entry(name).is_ok_and(|e| e.supports(n))
}

// ---- individual checks -------------------------------------------------

fn identity_tasks(name: &'static str, n: usize, tasks: &mut Vec<Task>) {
    if !supported(name, n) {
        return;
    }
    tasks.push(Box::new(move || {
        let info = catalog::entry(name).expect("catalog entry");
        let Some(v) = info.variety else { return Vec::new() };
        valid_samples(name, n)
            .into_iter()
            .map(|p| {
                let r = build(name, n, &p).map(|a| {
                    let report = a.check_variety(v);
                    let detail = match report.violations.first() {
                        None => format!("{v}"),
                        Some(x) => format!(
                            "{v}: {} violations, first {} at {:?}",
                            report.violations.len(),
                            x.identity,
                            x.indices
                        ),
                    };
                    (report.pass, detail)
                });
                item("identity", subject(name, &p), n, r)
            })
            .collect()
    }));
}

fn formula_task(
    check: &'static str,
    name: &'static str,
    p: Params<Q>,
    n: usize,
    expected: usize,
    compute: fn(&Algebra<Q>) -> Result<usize>,
    tasks: &mut Vec<Task>,
) {
    if !supported(name, n) {
        return;
    }
    tasks.push(Box::new(move || {
        let r = build(name, n, &p)
            .and_then(|a| compute(&a))
            .map(|got| (got == expected, format!("computed {got}, expected {expected}")));
        vec![item(check, subject(name, &p), n, r)]
    }));
}

fn der(a: &Algebra<Q>) -> Result<usize> {
    Ok(derivation_dim(a))
}

fn ab(a: &Algebra<Q>) -> Result<usize> {
    max_abelian_coordinate_ideal(a).map(|(d, _)| d)
}

/// Verification of one witness instance: the limit exists and equals the
/// target, numeric substitution agrees with the symbolic transform, every
/// variety of the source is inherited by the limit, and a proper
/// degeneration strictly raises dim Der.
fn check_witness(
    source: &Algebra<Q>,
    w: &Witness<Q>,
    target: &Algebra<Q>,
) -> Result<(bool, String)> {
    let v = verify_witness(source, w, target)?;
    if !v.limit_exists {
        let (i, j, k) = v.pole.expect("pole recorded");
        return Ok((false, format!("no limit: pole at ({i},{j},{k})")));
    }
    if !v.limit_equals_target {
        let r = &v.residuals[0];
        return Ok((
            false,
            format!(
                "limit differs from target in {} constants, first ({},{},{}): {} vs {}",
                v.residuals.len(),
                r.i,
                r.j,
                r.k,
                r.found,
                r.expected
            ),
        ));
    }
    if !numeric_cross_check(source, w, &[Q::ratio(1, 2), Q::ratio(1, 3)])? {
        return Ok((false, "numeric substitution disagrees with the symbolic transform".into()));
    }
    let limit = v.limit.as_ref().expect("limit exists");
    for var in Variety::ALL {
        if source.satisfies(var) && !limit.satisfies(var) {
            return Ok((false, format!("limit leaves the {var} variety")));
        }
    }
    if v.proper && v.source_der_dim >= v.target_der_dim {
        return Ok((
            false,
            format!("proper but dim Der {} -> {}", v.source_der_dim, v.target_der_dim),
        ));
    }
    let kind = if v.proper { "proper" } else { "isomorphism" };
    Ok((true, format!("{kind}, dim Der {} -> {}", v.source_der_dim, v.target_der_dim)))
}

fn witness_tasks(id: &'static str, n: usize, tasks: &mut Vec<Task>) {
    let Ok(info) = catalog::witness_info(id) else { return };
    if !info.supports(n) {
        return;
    }
    tasks.push(Box::new(move || {
        let mut samples = catalog::witness_samples::<Q>(id, n);
        if samples.is_empty() {
            samples.push(Params::new());
        }
        samples
            .into_iter()
            .map(|p| {
                let r = catalog::witness::<Q>(id, n, &p).and_then(|w| {
                    let (s, t) = catalog::witness_endpoints(&w)?;
                    check_witness(&s, &w, &t)
                });
                item("witness", subject(id, &p), n, r)
            })
            .collect()
    }));
}

/// The literal reading of the companion-form scaling, which has no limit.
fn literal_companion_task(n: usize, tasks: &mut Vec<Task>) {
    if n < 5 {
        return;
    }
    tasks.push(Box::new(move || {
        let mut e = vec![0; n];
        e[..5].copy_from_slice(&[-1, -1, -2, -2, 0]);
        let w = Witness::diagonal(WitnessKind::G, &e);
        let r = (|| {
            let s = plain("lie_companion", n)?;
            let t = plain("n52", n)?;
            let v = verify_witness(&s, &w, &t)?;
            Ok(match v.pole {
                Some((i, j, k)) => (true, format!("pole at ({i},{j},{k}) as expected")),
                None => (false, "expected a pole, found a limit".to_string()),
            })
        })();
        vec![item("witness-literal", "W11", n, r)]
    }));
}

fn separation_tasks(names: Vec<(&'static str, Params<Q>)>, n: usize, tasks: &mut Vec<Task>) {
    for (a, pa) in &names {
        for (b, pb) in &names {
            if a == b || !supported(a, n) || !supported(b, n) {
                continue;
            }
            let (a, b, pa, pb) = (*a, *b, pa.clone(), pb.clone());
            tasks.push(Box::new(move || {
                let r = (|| {
                    let obs = degeneration_obstructions(&build(a, n, &pa)?, &build(b, n, &pb)?)?;
                    let kinds: Vec<&str> = obs.iter().map(|o| o.kind()).collect();
                    Ok((!obs.is_empty(), kinds.join(", ")))
                })();
                vec![item(
                    "separation",
                    format!("{} -> {}", subject(a, &pa), subject(b, &pb)),
                    n,
                    r,
                )]
            }));
        }
    }
}

fn e1(n: usize) -> Vec<Q> {
    unit_vector(n, 0)
}

fn pierce_task(name: &'static str, p: Params<Q>, jordan: bool, n: usize, tasks: &mut Vec<Task>) {
    if !supported(name, n) {
        return;
    }
    tasks.push(Box::new(move || {
        let r = build(name, n, &p).and_then(|a| {
            let split =
                if jordan { pierce_jordan(&a, &e1(n))? } else { pierce_associative(&a, &e1(n))? };
            let dims = split.dims();
            let complete = dims.iter().sum::<usize>() == n;
            let failed: Vec<&str> =
                split.rules.iter().filter(|r| !r.holds).map(|r| r.rule.as_str()).collect();
            let detail = if failed.is_empty() {
                format!("dims {dims:?}, {} rules hold", split.rules.len())
            } else {
                format!("dims {dims:?}, failing rules: {}", failed.join("; "))
            };
            Ok((complete && failed.is_empty(), detail))
        });
        let kind = if jordan { "pierce-jordan" } else { "pierce-assoc" };
        vec![item(kind, subject(name, &p), n, r)]
    }));
}

// ---- suites --------------------------------------------------------------

const LEVEL_ONE: [&str; 4] = ["p", "n3", "lambda2", "nu"];
const JORDAN_TWO: [&str; 3] = ["J1", "J2", "J3"];
const LIE_FIVE: [&str; 5] = ["n51", "n52", "r2a", "g1", "g2"];

fn level1(n: usize, tasks: &mut Vec<Task>) {
    identity_tasks("a", n, tasks);
    for name in LEVEL_ONE {
        identity_tasks(name, n, tasks);
        abelianize_task(name, n, tasks);
    }
}

/// The universal scaling `t⁻¹ I` applied to each sample of `name`.
fn abelianize_task(name: &'static str, n: usize, tasks: &mut Vec<Task>) {
    if !supported(name, n) {
        return;
    }
    tasks.push(Box::new(move || {
        valid_samples(name, n)
            .into_iter()
            .map(|p| {
                let r = catalog::witness::<Q>("W0-abelianize", n, &Params::new())
                    .and_then(|w| check_witness(&build(name, n, &p)?, &w, &Algebra::abelian(n)));
                item("abelianize", subject(name, &p), n, r)
            })
            .collect()
    }));
}

fn jordan2(n: usize, tasks: &mut Vec<Task>) {
    for name in ["J1", "J2", "J3", "J", "T4", "jordan_sym2", "jcase11_pre", "jcase11", "jcase2"] {
        identity_tasks(name, n, tasks);
    }
    let sq = n * n;
    formula_task("der-dim", "J1", Params::new(), n, sq - 2 * n + 1, der, tasks);
    formula_task("der-dim", "J2", Params::new(), n, sq - 2 * n + 1, der, tasks);
    formula_task("der-dim", "J3", Params::new(), n, sq - 3 * n + 4, der, tasks);
    for id in ["W1", "W2", "W3-prep", "W3", "W4", "W5"] {
        witness_tasks(id, n, tasks);
    }
    separation_tasks(JORDAN_TWO.iter().map(|&s| (s, Params::new())).collect(), n, tasks);
}

fn lie_five(n: usize) -> Vec<(&'static str, Params<Q>)> {
    let _ = n;
    LIE_FIVE
        .iter()
        .map(|&s| (s, if s == "g1" { alpha(Q::from_i64(2)) } else { Params::new() }))
        .collect()
}

fn lie2(n: usize, tasks: &mut Vec<Task>) {
    for name in ["r2a", "r3", "n4", "r3_1a", "g41", "g42", "n51", "n52", "g1", "g2"] {
        identity_tasks(name, n, tasks);
    }
    if n >= 5 {
        let sq = n * n;
        formula_task("der-dim", "n51", Params::new(), n, sq - 5 * n + 15, der, tasks);
        formula_task("der-dim", "n52", Params::new(), n, sq - 5 * n + 13, der, tasks);
        formula_task("der-dim", "r2a", Params::new(), n, sq - 3 * n + 4, der, tasks);
        formula_task("der-dim", "g2", Params::new(), n, sq - 3 * n + 4, der, tasks);
        for a in [Q::from_i64(2), Q::from_i64(-1), Q::ratio(1, 2)] {
            formula_task("der-dim", "g1", alpha(a), n, sq - 3 * n + 4, der, tasks);
        }
        formula_task("ab-dim", "n51", Params::new(), n, n - 2, ab, tasks);
        for (name, p) in lie_five(n).into_iter().skip(1) {
            formula_task("ab-dim", name, p, n, n - 1, ab, tasks);
        }
    }
    for id in ["W6", "W7", "W8", "W9", "W10", "W11", "W12", "W12-rep"] {
        witness_tasks(id, n, tasks);
    }
    literal_companion_task(n, tasks);
}

fn assoc2(n: usize, tasks: &mut Vec<Task>) {
    for name in ["A1", "A2", "A3", "A4", "A5", "A6"] {
        identity_tasks(name, n, tasks);
    }
    for (a, nu_alpha) in [("A3", 1), ("A4", 0)] {
        if !supported(a, n) {
            continue;
        }
        tasks.push(Box::new(move || {
            let r = (|| {
                let x = plain(a, n)?;
                let y = build("nu", n, &alpha(Q::from_i64(nu_alpha)))?;
                let (px, py) = (invariant_profile(&x), invariant_profile(&y));
                Ok((
                    true,
                    format!(
                        "coincides with nu({nu_alpha}): {}; dim Der {} / {}",
                        x == y,
                        px.dim_der,
                        py.dim_der
                    ),
                ))
            })();
            vec![item("cross-reference", a, n, r)]
        }));
    }
}

fn pierce(n: usize, tasks: &mut Vec<Task>) {
    pierce_task("nu", alpha(Q::ratio(1, 2)), true, n, tasks);
    pierce_task("J1", Params::new(), true, n, tasks);
    pierce_task("J2", Params::new(), true, n, tasks);
    for name in ["A2", "A3", "A4"] {
        pierce_task(name, Params::new(), false, n, tasks);
    }
}

fn separations(n: usize, tasks: &mut Vec<Task>) {
    separation_tasks(JORDAN_TWO.iter().map(|&s| (s, Params::new())).collect(), n, tasks);
    if n >= 5 {
        separation_tasks(lie_five(n), n, tasks);
    }
}

fn chains(n: usize, tasks: &mut Vec<Task>) {
    tasks.push(Box::new(move || chain_items(n)));
    for name in LEVEL_ONE {
        abelianize_task(name, n, tasks);
    }
}

fn chain_items(n: usize) -> Vec<SuiteItem> {
    let derived: Vec<_> =
        catalog::list().witnesses.into_iter().filter(|w| w.derived && w.supports(n)).collect();
    let mut runs: Vec<(String, String, bool, SuiteItem)> = derived
        .par_iter()
        .flat_map_iter(|wi| {
            let samples = catalog::witness_samples::<Q>(wi.id, n);
            samples.into_iter().map(move |p| {
                let built = catalog::witness::<Q>(wi.id, n, &p);
                let (source, target) = match &built {
                    Ok(w) => (ref_name(w.source.as_deref()), ref_name(w.target.as_deref())),
                    Err(_) => (String::new(), String::new()),
                };
                let r = built.and_then(|w| {
                    let (s, t) = catalog::witness_endpoints(&w)?;
                    let (ok, detail) = check_witness(&s, &w, &t)?;
                    let level = catalog::entry(&target)?.level;
                    if level != Level::One {
                        return Ok((false, format!("target {target} is not of level one")));
                    }
                    Ok((ok, format!("{detail}; {source} -> {target}")))
                });
                let it = item("chain-step", subject(wi.id, &p), n, r);
                (source, target, it.pass, it)
            })
        })
        .collect();
    runs.sort_by(|a, b| a.3.cmp(&b.3));
    let mut items: Vec<SuiteItem> = Vec::new();
    for entry in catalog::list().algebras {
        if entry.level != Level::Two || !entry.supports(n) {
            continue;
        }
        let via: Vec<&str> = runs
            .iter()
            .filter(|(s, _, ok, _)| *ok && same_entry(s, entry.name, n))
            .map(|(_, _, _, it)| it.subject.as_str())
            .collect();
        let detail = if via.is_empty() {
            "no verified derived witness to a level-one algebra".to_string()
        } else {
            format!("via {}", via.join(", "))
        };
        items.push(SuiteItem {
            check: "chain".into(),
            subject: entry.name.to_string(),
            n,
            pass: !via.is_empty(),
            detail,
        });
    }
    items.extend(runs.into_iter().map(|r| r.3));
    items
}

/// g41/g42 are the n = 4 instances of g1/g2.
fn same_entry(a: &str, b: &str, n: usize) -> bool {
    let canon = |s: &str| match (s, n) {
        ("g41", 4) => "g1".to_string(),
        ("g42", 4) => "g2".to_string(),
        _ => s.to_string(),
    };
    canon(a) == canon(b)
}

fn ref_name(r: Option<&str>) -> String {
    r.and_then(|s| s.parse::<CatalogRef>().ok()).map(|c| c.name).unwrap_or_default()
}

fn identities(n: usize, tasks: &mut Vec<Task>) {
    for e in catalog::list().algebras {
        identity_tasks(e.name, n, tasks);
    }
}

fn witnesses(n: usize, tasks: &mut Vec<Task>) {
    for w in catalog::list().witnesses {
        if !w.derived {
            witness_tasks(w.id, n, tasks);
        }
    }
    literal_companion_task(n, tasks);
}

/// Upper bound on the dimension used by the random basis-change checks.
pub const PROPERTY_MAX_DIM: usize = 6;
pub const BASIS_CHANGES: usize = 5;
pub const SUBSPACE_PAIRS: usize = 20;

fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    label.hash(&mut h);
    ChaCha8Rng::seed_from_u64(seed ^ h.finish())
}

/// A random invertible matrix `L·U·D`: unit lower and upper triangular
/// factors with small integer entries and a diagonal with entries in
/// `{±1, ±2}`, so inverses stay small.
pub fn random_invertible<F: Scalar>(n: usize, rng: &mut impl Rng) -> Matrix<F> {
    let lower = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Greater => F::from_i64(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Less => F::zero(),
    });
    let upper = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Less => F::from_i64(rng.gen_range(-1..=1)),
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Greater => F::zero(),
    });
    let diag = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            F::from_i64([-2, -1, 1, 2][rng.gen_range(0..4)])
        } else {
            F::zero()
        }
    });
    let lu = lower.mul(&upper).expect("square factors");
    lu.mul(&diag).expect("square factors")
}

/// A random subspace spanned by up to `n` small integer vectors.
pub fn random_subspace<F: Scalar>(n: usize, rng: &mut impl Rng) -> Subspace<F> {
    let k = rng.gen_range(0..=n);
    let vecs = (0..k).map(|_| (0..n).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect());
    Subspace::span(n, vecs).expect("vectors have the ambient length")
}

fn properties(n: usize, seed: u64, tasks: &mut Vec<Task>) {
    if n <= PROPERTY_MAX_DIM {
        for e in catalog::list().algebras {
            let name = e.name;
            if !e.supports(n) {
                continue;
            }
            tasks.push(Box::new(move || {
                let defaults = Params::new();
                let p = if build(name, n, &defaults).is_ok() {
                    Some(defaults)
                } else {
                    valid_samples(name, n).into_iter().next()
                };
                p.into_iter()
                    .map(|p| {
                        let label = format!("{}@{n}", subject(name, &p));
                        let mut rng = rng_for(seed, &label);
                        let r = build(name, n, &p).and_then(|a| basis_invariance(&a, &mut rng));
                        item("basis-change", subject(name, &p), n, r)
                    })
                    .collect()
            }));
        }
    }
    tasks.push(Box::new(move || {
        let mut rng = rng_for(seed, &format!("grassmann@{n}"));
        let r = (|| {
            for _ in 0..SUBSPACE_PAIRS {
                let u = random_subspace::<Q>(n, &mut rng);
                let v = random_subspace::<Q>(n, &mut rng);
                let (s, i) = (u.sum(&v)?, u.intersect(&v)?);
                if s.dim() + i.dim() != u.dim() + v.dim() {
                    return Ok((
                        false,
                        format!("dims {} + {} vs {} + {}", s.dim(), i.dim(), u.dim(), v.dim()),
                    ));
                }
                if !(s.contains(&u)? && s.contains(&v)? && u.contains(&i)? && v.contains(&i)?) {
                    return Ok((false, "containment fails".to_string()));
                }
            }
            Ok((true, format!("{SUBSPACE_PAIRS} random pairs")))
        })();
        vec![item("grassmann", "subspaces", n, r)]
    }));
}

fn basis_invariance(a: &Algebra<Q>, rng: &mut impl Rng) -> Result<(bool, String)> {
    let n = a.dim();
    let d = derivation_dim(a);
    let vars: Vec<bool> = Variety::ALL.iter().map(|v| a.satisfies(*v)).collect();
    for _ in 0..BASIS_CHANGES {
        let p = random_invertible::<Q>(n, rng);
        let b = a.apply_basis_change(&p)?;
        let d2 = derivation_dim(&b);
        if d2 != d {
            return Ok((false, format!("dim Der {d} became {d2}")));
        }
        let vars2: Vec<bool> = Variety::ALL.iter().map(|v| b.satisfies(*v)).collect();
        if vars2 != vars {
            return Ok((false, "variety membership changed".to_string()));
        }
        if b.in_basis(&p)? != *a {
            return Ok((false, "in_basis does not undo apply_basis_change".to_string()));
        }
    }
    Ok((true, format!("dim Der {d} and varieties stable over {BASIS_CHANGES} changes")))
}

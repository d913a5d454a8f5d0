//! Acceptance criteria 1-10, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use degenkit::algebra::{Algebra, Variety};
use degenkit::catalog::{self, CatalogRef, Params};
use degenkit::degeneration::{numeric_cross_check, verify_witness};
use degenkit::exactnum::{Rational as Q, Scalar};
use degenkit::invariants::{
    degeneration_obstructions, derivation_dim, max_abelian_coordinate_ideal,
};
use degenkit::suite::{run_suite, Suite};

const IDENTITY_LIMIT: Duration = Duration::from_secs(5);
const DER_LIMIT: Duration = Duration::from_secs(30);
const AB_LIMIT_AT_9: Duration = Duration::from_secs(10);
const FULL_RUN_LIMIT: Duration = Duration::from_secs(120);
const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok: String) -> Self {
        match failures.first() {
            None => Outcome { pass: true, detail: ok },
            Some(first) => Outcome {
                pass: false,
                detail: format!("{} failures, first: {first}", failures.len()),
            },
        }
    }
}

fn alg(name: &str, n: usize, params: &[(&str, Q)]) -> Algebra<Q> {
    let mut r = CatalogRef::new(name, n);
    for (k, v) in params {
        r = r.param(k, std::slice::from_ref(v));
    }
    r.build().unwrap_or_else(|e| panic!("{name}@{n}: {e}"))
}

fn q(num: i64, den: i64) -> Q {
    Q::ratio(num, den)
}

fn lie_five(n: usize) -> Vec<(String, Algebra<Q>)> {
    vec![
        ("n51".into(), alg("n51", n, &[])),
        ("n52".into(), alg("n52", n, &[])),
        ("r2a".into(), alg("r2a", n, &[])),
        ("g1(2)".into(), alg("g1", n, &[("alpha", q(2, 1))])),
        ("g2".into(), alg("g2", n, &[])),
    ]
}

fn suite_outcome(suite: Suite, n: std::ops::RangeInclusive<usize>) -> Outcome {
    let report = run_suite(suite, n, SEED);
    let failures = report
        .failures()
        .map(|i| format!("{} {} n={}: {}", i.check, i.subject, i.n, i.detail))
        .collect();
    Outcome::from_failures(failures, format!("{} checks", report.total))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut out = suite_outcome(Suite::Identities, 3..=8);
    let elapsed = start.elapsed();
    if elapsed >= IDENTITY_LIMIT {
        out.pass = false;
    }
    out.detail = format!("{} in {elapsed:.2?} (limit {IDENTITY_LIMIT:?})", out.detail);
    out
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 5..=9 {
        let sq = n * n;
        let mut cases = vec![
            ("n51".to_string(), alg("n51", n, &[]), sq - 5 * n + 15),
            ("n52".to_string(), alg("n52", n, &[]), sq - 5 * n + 13),
            ("r2a".to_string(), alg("r2a", n, &[]), sq - 3 * n + 4),
            ("g2".to_string(), alg("g2", n, &[]), sq - 3 * n + 4),
        ];
        for a in [q(2, 1), q(-1, 1), q(1, 2)] {
            cases.push((format!("g1({a})"), alg("g1", n, &[("alpha", a)]), sq - 3 * n + 4));
        }
        for (name, a, expected) in cases {
            checks += 1;
            let d = derivation_dim(&a);
            if d != expected {
                failures.push(format!("{name} n={n}: dim Der {d}, expected {expected}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= DER_LIMIT {
        failures.push(format!("took {elapsed:.2?}"));
    }
    Outcome::from_failures(
        failures,
        format!("{checks} dimensions in {elapsed:.2?} (limit {DER_LIMIT:?})"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=9 {
        let sq = n * n;
        for (name, expected) in
            [("J1", sq - 2 * n + 1), ("J2", sq - 2 * n + 1), ("J3", sq - 3 * n + 4)]
        {
            let d = derivation_dim(&alg(name, n, &[]));
            if d != expected {
                failures.push(format!("{name} n={n}: dim Der {d}, expected {expected}"));
            }
        }
    }
    Outcome::from_failures(failures, "J1, J2, J3 for n = 3..9".into())
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut at_nine = Duration::ZERO;
    for n in 5..=9 {
        for (name, a) in lie_five(n) {
            let expected = if name == "n51" { n - 2 } else { n - 1 };
            let start = Instant::now();
            let got = max_abelian_coordinate_ideal(&a).map(|(d, _)| d);
            if n == 9 {
                at_nine += start.elapsed();
            }
            match got {
                Ok(d) if d == expected => {}
                Ok(d) => failures.push(format!("{name} n={n}: {d}, expected {expected}")),
                Err(e) => failures.push(format!("{name} n={n}: {e}")),
            }
        }
    }
    if at_nine >= AB_LIMIT_AT_9 {
        failures.push(format!("n = 9 searches took {at_nine:.2?}"));
    }
    Outcome::from_failures(
        failures,
        format!("n = 5..9; n = 9 searches in {at_nine:.2?} (limit {AB_LIMIT_AT_9:?})"),
    )
}

/// Verifies one catalog witness; `Err` carries a failure description.
fn check_witness(id: &str, n: usize, params: &Params<Q>) -> Result<(), String> {
    let tag = format!("{id} n={n} {params:?}");
    let w = catalog::witness::<Q>(id, n, params).map_err(|e| format!("{tag}: {e}"))?;
    let (s, t) = catalog::witness_endpoints(&w).map_err(|e| format!("{tag}: {e}"))?;
    let v = verify_witness(&s, &w, &t).map_err(|e| format!("{tag}: {e}"))?;
    if !v.pass() {
        return Err(format!(
            "{tag}: limit exists {}, equals target {}",
            v.limit_exists, v.limit_equals_target
        ));
    }
    Ok(())
}

fn block_params(blocks: &[i64]) -> Params<Q> {
    let mut p = Params::new();
    p.insert("blocks".into(), blocks.iter().map(|&b| Q::from_i64(b)).collect());
    p
}

fn signature(n: usize, first: i64) -> Vec<i64> {
    let mut b = vec![first];
    b.extend(std::iter::repeat_n(1, n - 1 - first as usize));
    b
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    let mut run = |id: &str, n: usize, p: &Params<Q>| {
        runs += 1;
        if let Err(e) = check_witness(id, n, p) {
            failures.push(e);
        }
    };
    for id in ["W1", "W2", "W3", "W4", "W5"] {
        for n in 3..=5 {
            if id == "W3" && n == 3 {
                continue;
            }
            for p in catalog::witness_samples::<Q>(id, n) {
                run(id, n, &p);
            }
        }
    }
    for (n, k) in [(5, 2), (7, 3)] {
        let mut p = Params::new();
        p.insert("k".into(), vec![Q::from_i64(k)]);
        run("W6", n, &p);
    }
    for id in ["W7", "W8", "W9", "W10", "W11"] {
        for n in 5..=6 {
            for p in catalog::witness_samples::<Q>(id, n) {
                run(id, n, &p);
            }
            if id == "W9" || id == "W10" {
                for first in [2, 3] {
                    run(id, n, &block_params(&signature(n, first)));
                }
            }
        }
    }
    for n in 3..=6 {
        run("W12", n, &Params::new());
    }
    run("W12-rep", 5, &Params::new());
    Outcome::from_failures(failures, format!("{runs} instantiations"))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    let mut both_ways = |name_a: &str, a: &Algebra<Q>, name_b: &str, b: &Algebra<Q>, n: usize| {
        pairs += 1;
        for (x, y, nx, ny) in [(a, b, name_a, name_b), (b, a, name_b, name_a)] {
            match degeneration_obstructions(x, y) {
                Ok(o) if !o.is_empty() => {}
                Ok(_) => failures.push(format!("{nx} -> {ny} n={n}: no obstruction")),
                Err(e) => failures.push(format!("{nx} -> {ny} n={n}: {e}")),
            }
        }
    };
    for n in 3..=6 {
        let trio: Vec<_> = ["J1", "J2", "J3"].iter().map(|s| (*s, alg(s, n, &[]))).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                both_ways(trio[i].0, &trio[i].1, trio[j].0, &trio[j].1, n);
            }
        }
    }
    for n in 5..=6 {
        let five = lie_five(n);
        for i in 0..five.len() {
            for j in i + 1..five.len() {
                both_ways(&five[i].0, &five[i].1, &five[j].0, &five[j].1, n);
            }
        }
    }
    Outcome::from_failures(failures, format!("{pairs} unordered pairs, both directions"))
}

fn criterion_7() -> Outcome {
    suite_outcome(Suite::Chains, 3..=7)
}

fn criterion_8() -> Outcome {
    suite_outcome(Suite::Pierce, 3..=8)
}

/// Every catalog witness at every supported `n <= 7` and sample.
fn all_witness_instances() -> Vec<(&'static str, usize, Params<Q>)> {
    let mut out = Vec::new();
    for w in catalog::list().witnesses {
        let hi = w.max_n.unwrap_or(7).min(7);
        for n in w.min_n.max(2)..=hi {
            for p in catalog::witness_samples::<Q>(w.id, n) {
                out.push((w.id, n, p));
            }
        }
    }
    out
}

fn criterion_9(instances: &[(&'static str, usize, Params<Q>)]) -> Outcome {
    let points = [q(1, 2), q(1, 3)];
    let mut failures = Vec::new();
    for (id, n, p) in instances {
        let r = catalog::witness::<Q>(id, *n, p).and_then(|w| {
            let (s, _) = catalog::witness_endpoints(&w)?;
            numeric_cross_check(&s, &w, &points)
        });
        match r {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{id} n={n} {p:?}: substitution disagrees")),
            Err(e) => failures.push(format!("{id} n={n} {p:?}: {e}")),
        }
    }
    Outcome::from_failures(
        failures,
        format!("{} witness instances at t = 1/2, 1/3", instances.len()),
    )
}

fn criterion_10(instances: &[(&'static str, usize, Params<Q>)], started: Instant) -> Outcome {
    let mut failures: Vec<String> = run_suite(Suite::Properties, 3..=6, SEED)
        .failures()
        .map(|i| format!("{} {} n={}: {}", i.check, i.subject, i.n, i.detail))
        .collect();
    for (id, n, p) in instances {
        let r = catalog::witness::<Q>(id, *n, p).and_then(|w| {
            let (s, t) = catalog::witness_endpoints(&w)?;
            verify_witness(&s, &w, &t).map(|v| (s, v.limit))
        });
        match r {
            Ok((s, Some(limit))) => {
                for var in Variety::ALL {
                    if s.satisfies(var) && !limit.satisfies(var) {
                        failures.push(format!("{id} n={n} {p:?}: limit leaves {var}"));
                    }
                }
            }
            Ok((_, None)) => failures.push(format!("{id} n={n} {p:?}: no limit")),
            Err(e) => failures.push(format!("{id} n={n} {p:?}: {e}")),
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= FULL_RUN_LIMIT {
        failures.push(format!("full run took {elapsed:.2?}"));
    }
    Outcome::from_failures(
        failures,
        format!("basis changes n <= 6, Grassmann, varieties kept by limits; full run {elapsed:.2?} (limit {FULL_RUN_LIMIT:?})"),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let instances = all_witness_instances();
    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(criterion_8)),
        (9, Box::new(|| criterion_9(&instances))),
        (10, Box::new(|| criterion_10(&instances, started))),
    ];
    let mut all = true;
    for (number, run) in criteria {
        let o = run();
        all &= o.pass;
        println!("{} criterion {number}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

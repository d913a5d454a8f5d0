use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use degenkit::algebra::{Algebra, Variety};
use degenkit::catalog::{self, CatalogRef, Params};
use degenkit::degeneration::{verify_witness, Witness};
use degenkit::exactnum::{FieldKind, Gaussian, Rational, Scalar};
use degenkit::invariants::{degeneration_obstructions, invariant_profile};
use degenkit::json::{
    algebra_from_json, algebra_to_json, field_of, to_sorted_json, witness_from_json,
    witness_to_json,
};
use degenkit::pierce::{pierce_associative, pierce_jordan, PierceSplit};
use degenkit::suite::{run_suite, Suite, SuiteReport};
use degenkit::Error;

#[derive(Parser)]
#[command(name = "degenkit", version, about = "Exact verification of algebra degenerations")]
struct Cli {
    /// Also write a machine-readable report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra against the identities of a variety.
    Check {
        /// Algebra JSON file or `catalog:` reference.
        algebra: String,
        #[arg(long)]
        variety: Variety,
    },
    /// Print the invariant profile of an algebra.
    Invariants { algebra: String },
    /// Verify a degeneration witness.
    Degenerate {
        /// Source algebra: JSON file or `catalog:` reference.
        source: String,
        /// Witness JSON file or `catalog:ID(key=value,...)@N`.
        #[arg(long)]
        witness: String,
        /// Target algebra; defaults to the witness's declared target.
        #[arg(long)]
        target: Option<String>,
    },
    /// Pierce decomposition with respect to an idempotent.
    Pierce {
        algebra: String,
        /// Comma-separated coordinates, e.g. `1,0,0`.
        #[arg(long)]
        idempotent: String,
        /// `jordan` or `associative`; chosen from the algebra's identities
        /// when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Report obstructions to degeneration in both directions.
    Separate { a: String, b: String },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Run a verification suite.
    VerifyPaper {
        /// One of level1, jordan2, lie2, assoc2, pierce, separations, chains,
        /// identities, witnesses, properties, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List all algebras and witnesses.
    List,
    /// Write the Algebra JSON of a catalog entry.
    Emit {
        name: String,
        #[arg(long)]
        n: usize,
        /// `key=value`, with `;` between vector entries. Repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Write the Witness JSON of a catalog witness.
    Witness {
        id: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

/// What a command produced: human text, the JSON report, and whether every
/// check passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

#[derive(Debug)]
enum CliError {
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("DEGENKIT_THREADS").ok().and_then(|s| s.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, to_sorted_json(&out.json)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Check { algebra, variety } => dispatch(&[&algebra], |k| match k {
            FieldKind::Q => check::<Rational>(&algebra, variety),
            FieldKind::Qi => check::<Gaussian>(&algebra, variety),
        }),
        Command::Invariants { algebra } => dispatch(&[&algebra], |k| match k {
            FieldKind::Q => invariants::<Rational>(&algebra),
            FieldKind::Qi => invariants::<Gaussian>(&algebra),
        }),
        Command::Degenerate { source, witness, target } => {
            let mut inputs = vec![source.as_str(), witness.as_str()];
            inputs.extend(target.as_deref());
            dispatch(&inputs, |k| match k {
                FieldKind::Q => degenerate::<Rational>(&source, &witness, target.as_deref()),
                FieldKind::Qi => degenerate::<Gaussian>(&source, &witness, target.as_deref()),
            })
        }
        Command::Pierce { algebra, idempotent, kind } => {
            dispatch(&[&algebra, &idempotent], |k| match k {
                FieldKind::Q => pierce::<Rational>(&algebra, &idempotent, kind.as_deref()),
                FieldKind::Qi => pierce::<Gaussian>(&algebra, &idempotent, kind.as_deref()),
            })
        }
        Command::Separate { a, b } => dispatch(&[&a, &b], |k| match k {
            FieldKind::Q => separate::<Rational>(&a, &b),
            FieldKind::Qi => separate::<Gaussian>(&a, &b),
        }),
        Command::Catalog { action } => catalog_cmd(action),
        Command::VerifyPaper { suite, n_min, n_max, seed } => verify(&suite, n_min, n_max, seed),
    }
}

/// Picks the field for a command: Gaussian if any input file declares `Qi`
/// or any inline value mentions `i`, rational otherwise.
fn dispatch(
    inputs: &[&str],
    f: impl FnOnce(FieldKind) -> CliResult<Outcome>,
) -> CliResult<Outcome> {
    let mut kind = FieldKind::Q;
    for s in inputs {
        let k = if Path::new(s).is_file() {
            field_of(&read(s)?)?
        } else if inline_gaussian(s) || vector_gaussian(s) {
            FieldKind::Qi
        } else {
            FieldKind::Q
        };
        kind = kind.max(k);
    }
    f(kind)
}

fn inline_gaussian(s: &str) -> bool {
    // parameter values follow `(`, `=`, `,` or `;`; an `i` there is imaginary
    s.strip_prefix("catalog:").and_then(|rest| rest.split_once('(')).is_some_and(|(_, args)| {
        args.split([',', ';', '=', ')']).any(|v| {
            let v = v.trim();
            v.ends_with('i') && v.parse::<Gaussian>().is_ok()
        })
    })
}

fn vector_gaussian(s: &str) -> bool {
    let parts: Result<Vec<Gaussian>, _> = s.split(',').map(|v| v.trim().parse()).collect();
    parts.is_ok_and(|v| v.iter().any(|x| x.to_rational().is_none()))
}

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

fn load_algebra<F: Scalar>(s: &str) -> CliResult<Algebra<F>> {
    if s.starts_with("catalog:") {
        Ok(catalog::build_ref(s)?)
    } else {
        Ok(algebra_from_json(&read(s)?)?)
    }
}

fn load_witness<F: Scalar>(s: &str) -> CliResult<Witness<F>> {
    if s.starts_with("catalog:") {
        let r: CatalogRef = s.parse()?;
        let mut params = Params::new();
        for (k, vs) in &r.params {
            params.insert(k.clone(), vs.iter().map(|v| v.parse()).collect::<Result<_, _>>()?);
        }
        if !r.positional.is_empty() {
            return Err(CliError::Input("witness parameters must be named".into()));
        }
        Ok(catalog::witness(&r.name, r.n, &params)?)
    } else {
        Ok(witness_from_json(&read(s)?)?)
    }
}

fn check<F: Scalar>(path: &str, variety: Variety) -> CliResult<Outcome> {
    let alg = load_algebra::<F>(path)?;
    let report = alg.check_variety(variety);
    let mut text = format!(
        "{variety}: {} ({} violations)\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.violations.len()
    );
    for v in report.violations.iter().take(20) {
        let residual: Vec<String> = v.residual.iter().map(F::to_string).collect();
        text.push_str(&format!(
            "  {} at {:?}: residual [{}]\n",
            v.identity,
            v.indices,
            residual.join(", ")
        ));
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "identity": v.identity,
                "indices": v.indices,
                "residual": v.residual.iter().map(F::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome {
        text,
        json: json!({"variety": variety.name(), "pass": report.pass, "violations": violations}),
        pass: report.pass,
    })
}

fn invariants<F: Scalar>(path: &str) -> CliResult<Outcome> {
    let alg = load_algebra::<F>(path)?;
    let profile = invariant_profile(&alg);
    let json = serde_json::to_value(&profile).expect("serializable");
    let mut text = String::new();
    if let Value::Object(map) = &json {
        for (k, v) in map {
            text.push_str(&format!("{k:<20} {v}\n"));
        }
    }
    Ok(Outcome { text, json, pass: true })
}

fn degenerate<F: Scalar>(source: &str, witness: &str, target: Option<&str>) -> CliResult<Outcome> {
    let src = load_algebra::<F>(source)?;
    let w = load_witness::<F>(witness)?;
    let target_ref = target
        .map(str::to_string)
        .or_else(|| w.target.clone())
        .ok_or_else(|| CliError::Input("no target given and the witness declares none".into()))?;
    let tgt = load_algebra::<F>(&target_ref)?;
    let v = verify_witness(&src, &w, &tgt)?;
    let mut text = format!(
        "limit exists: {}\nlimit equals target: {}\nproper: {}\ndim Der: {} -> {}\n",
        v.limit_exists, v.limit_equals_target, v.proper, v.source_der_dim, v.target_der_dim
    );
    if let Some((i, j, k)) = v.pole {
        text.push_str(&format!("pole at ({i}, {j}, {k})\n"));
    }
    if let Some(l) = &v.limit {
        text.push_str(&format!("limit:\n{l}"));
    }
    for r in v.residuals.iter().take(20) {
        text.push_str(&format!(
            "  ({}, {}, {}): found {}, expected {}\n",
            r.i, r.j, r.k, r.found, r.expected
        ));
    }
    let residuals: Vec<Value> = v
        .residuals
        .iter()
        .map(|r| json!({"i": r.i, "j": r.j, "k": r.k, "found": r.found.to_string(), "expected": r.expected.to_string()}))
        .collect();
    let limit: Option<Value> =
        v.limit.as_ref().map(|l| serde_json::from_str(&algebra_to_json(l)).expect("valid json"));
    Ok(Outcome {
        pass: v.pass(),
        json: json!({
            "limit_exists": v.limit_exists,
            "pole": v.pole.map(|(i, j, k)| vec![i, j, k]),
            "limit_equals_target": v.limit_equals_target,
            "proper": v.proper,
            "source_der_dim": v.source_der_dim,
            "target_der_dim": v.target_der_dim,
            "limit": limit,
            "residuals": residuals,
            "target": target_ref,
        }),
        text,
    })
}

fn pierce<F: Scalar>(path: &str, idempotent: &str, kind: Option<&str>) -> CliResult<Outcome> {
    let alg = load_algebra::<F>(path)?;
    let e = idempotent.split(',').map(|v| v.trim().parse()).collect::<Result<Vec<F>, _>>()?;
    if e.len() != alg.dim() {
        return Err(Error::DimensionMismatch { left: alg.dim(), right: e.len() }.into());
    }
    let jordan = match kind {
        Some("jordan") => true,
        Some("associative") => false,
        Some(other) => return Err(CliError::Input(format!("unknown decomposition `{other}`"))),
        None => !alg.satisfies(Variety::Associative) || alg.satisfies(Variety::Jordan),
    };
    let split = if jordan { pierce_jordan(&alg, &e)? } else { pierce_associative(&alg, &e)? };
    Ok(pierce_outcome(&split, if jordan { "jordan" } else { "associative" }))
}

fn vec_text<F: Scalar>(v: &[F]) -> String {
    format!("({})", v.iter().map(F::to_string).collect::<Vec<_>>().join(", "))
}

fn pierce_outcome<F: Scalar>(split: &PierceSplit<F>, kind: &str) -> Outcome {
    let mut text = format!("{kind} decomposition at e = {}\n", vec_text(&split.idempotent));
    let mut comps = Vec::new();
    for (name, s) in &split.components {
        let basis: Vec<String> = s.basis().iter().map(|b| vec_text(b)).collect();
        text.push_str(&format!("{name:<8} dim {}  {}\n", s.dim(), basis.join(" ")));
        comps.push(json!({
            "name": name,
            "dim": s.dim(),
            "basis": s.basis().iter().map(|b| b.iter().map(F::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }));
    }
    let mut rules = Vec::new();
    for r in &split.rules {
        text.push_str(&format!("{}  {}\n", if r.holds { "holds " } else { "FAILS " }, r.rule));
        rules.push(json!({
            "rule": r.rule,
            "holds": r.holds,
            "offending": r.offending.as_ref().map(|v| v.iter().map(F::to_string).collect::<Vec<_>>()),
        }));
    }
    Outcome {
        pass: split.all_rules_hold(),
        json: json!({
            "kind": kind,
            "idempotent": split.idempotent.iter().map(F::to_string).collect::<Vec<_>>(),
            "components": comps,
            "rules": rules,
        }),
        text,
    }
}

fn separate<F: Scalar>(a: &str, b: &str) -> CliResult<Outcome> {
    let (x, y) = (load_algebra::<F>(a)?, load_algebra::<F>(b)?);
    let ab = degeneration_obstructions(&x, &y)?;
    let ba = degeneration_obstructions(&y, &x)?;
    let line = |from: &str, to: &str, obs: &[degenkit::invariants::Obstruction]| {
        if obs.is_empty() {
            format!("{from} -> {to}: no obstruction found\n")
        } else {
            let kinds: Vec<String> = obs.iter().map(ToString::to_string).collect();
            format!("{from} -> {to}: {}\n", kinds.join("; "))
        }
    };
    let text = line(a, b, &ab) + &line(b, a, &ba);
    Ok(Outcome {
        pass: !ab.is_empty() && !ba.is_empty(),
        json: json!({
            "a": a,
            "b": b,
            "a_to_b": serde_json::to_value(&ab).expect("serializable"),
            "b_to_a": serde_json::to_value(&ba).expect("serializable"),
        }),
        text,
    })
}

fn parse_params<F: Scalar>(raw: &[String]) -> CliResult<Params<F>> {
    let mut out = Params::new();
    for p in raw {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("parameter `{p}` is not key=value")))?;
        let values = v
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse())
            .collect::<Result<Vec<F>, _>>()?;
        out.insert(k.trim().to_string(), values);
    }
    Ok(out)
}

fn params_are_gaussian(raw: &[String]) -> bool {
    raw.iter().any(|p| p.split_once('=').is_some_and(|(_, v)| v.contains('i')))
}

fn catalog_cmd(action: CatalogCommand) -> CliResult<Outcome> {
    match action {
        CatalogCommand::List => {
            let listing = catalog::list();
            let mut text = String::from("algebras:\n");
            for e in &listing.algebras {
                let range = match e.max_n {
                    Some(m) if m == e.min_n => format!("n = {m}"),
                    Some(m) => format!("{} <= n <= {m}", e.min_n),
                    None => format!("n >= {}", e.min_n),
                };
                let params: Vec<&str> = e.params.iter().map(|p| p.name).collect();
                text.push_str(&format!(
                    "  {:<14} {:<12} {:<9} [{}] {}\n",
                    e.name,
                    range,
                    format!("{:?}", e.level).to_lowercase(),
                    params.join(", "),
                    e.display
                ));
            }
            text.push_str("witnesses:\n");
            for w in &listing.witnesses {
                text.push_str(&format!(
                    "  {:<14} {} -> {} (n >= {})\n",
                    w.id, w.source, w.target, w.min_n
                ));
            }
            Ok(Outcome {
                text,
                json: serde_json::to_value(&listing).expect("serializable"),
                pass: true,
            })
        }
        CatalogCommand::Emit { name, n, params } => {
            let text = if params_are_gaussian(&params) {
                algebra_to_json(&catalog::build::<Gaussian>(&name, n, &parse_params(&params)?)?)
            } else {
                algebra_to_json(&catalog::build::<Rational>(&name, n, &parse_params(&params)?)?)
            };
            let json = serde_json::from_str(&text).expect("valid json");
            Ok(Outcome { text, json, pass: true })
        }
        CatalogCommand::Witness { id, n, params } => {
            let text = if params_are_gaussian(&params) {
                witness_to_json(&catalog::witness::<Gaussian>(&id, n, &parse_params(&params)?)?)
            } else {
                witness_to_json(&catalog::witness::<Rational>(&id, n, &parse_params(&params)?)?)
            };
            let json = serde_json::from_str(&text).expect("valid json");
            Ok(Outcome { text, json, pass: true })
        }
    }
}

fn verify(suite: &str, n_min: usize, n_max: usize, seed: u64) -> CliResult<Outcome> {
    if n_min == 0 || n_min > n_max {
        return Err(CliError::Input(format!("invalid dimension range {n_min}..{n_max}")));
    }
    let report = if suite == "all" {
        let reports = Suite::ALL.iter().map(|s| run_suite(*s, n_min..=n_max, seed)).collect();
        SuiteReport::combine("all", reports)
    } else {
        run_suite(suite.parse::<Suite>()?, n_min..=n_max, seed)
    };
    Ok(Outcome {
        text: report.to_text(),
        json: serde_json::to_value(&report).expect("serializable"),
        pass: report.pass(),
    })
}

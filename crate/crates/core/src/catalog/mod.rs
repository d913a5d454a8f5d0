//! Named algebras and degeneration witnesses, built at a requested dimension
//! and parameter values.
//!
//! Catalog references have the textual form `catalog:NAME@N`, optionally
//! with parameters: `catalog:nu(alpha=1/2)@3`, `catalog:J(zeta=1;0)@3`.
//! Vector values are separated by `;` and parameters by `,`. Unnamed values,
//! as in `catalog:J(1,0)@3`, are collected into the entry's first parameter.

mod algebras;
mod witnesses;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Algebra, Variety};
use crate::degeneration::Witness;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

pub use algebras::{build, sample_params};
pub use witnesses::{witness, witness_samples};

/// Parameter values by name; scalar parameters are length-one vectors.
pub type Params<F> = BTreeMap<String, Vec<F>>;

/// The sample values substituted for free scalar parameters.
pub const SAMPLE_VALUES: [(i64, i64); 4] = [(-1, 1), (0, 1), (1, 2), (2, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    Scalar,
    Integer,
    Vector,
    IntegerVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub doc: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// The zero-multiplication algebra.
    Zero,
    One,
    Two,
    /// A family used as the starting point of a degeneration argument.
    Source,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryInfo {
    pub name: &'static str,
    pub display: &'static str,
    /// `None` means no identities are imposed.
    pub variety: Option<Variety>,
    pub level: Level,
    pub min_n: usize,
    pub max_n: Option<usize>,
    pub params: Vec<ParamSpec>,
    pub citation: &'static str,
    pub note: Option<&'static str>,
}

impl EntryInfo {
    pub fn supports(&self, n: usize) -> bool {
        n >= self.min_n && self.max_n.is_none_or(|m| n <= m)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessInfo {
    pub id: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub min_n: usize,
    pub max_n: Option<usize>,
    pub params: Vec<ParamSpec>,
    pub citation: &'static str,
    /// Constructed for this catalog rather than transcribed.
    pub derived: bool,
    pub note: Option<&'static str>,
}

impl WitnessInfo {
    pub fn supports(&self, n: usize) -> bool {
        n >= self.min_n && self.max_n.is_none_or(|m| n <= m)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Listing {
    pub algebras: Vec<EntryInfo>,
    pub witnesses: Vec<WitnessInfo>,
}

/// Metadata for every algebra and witness, in a fixed order.
pub fn list() -> Listing {
    Listing { algebras: algebras::entries(), witnesses: witnesses::entries() }
}

pub fn entry(name: &str) -> Result<EntryInfo> {
    algebras::entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn witness_info(id: &str) -> Result<WitnessInfo> {
    witnesses::entries()
        .into_iter()
        .find(|w| w.id == id)
        .ok_or_else(|| Error::UnknownWitness(id.to_string()))
}

/// A parsed `catalog:` reference. Values are kept as text so one reference
/// can be built over either scalar field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRef {
    pub name: String,
    pub n: usize,
    pub params: BTreeMap<String, Vec<String>>,
    pub positional: Vec<String>,
}

impl CatalogRef {
    pub fn new(name: impl Into<String>, n: usize) -> Self {
        CatalogRef { name: name.into(), n, params: BTreeMap::new(), positional: Vec::new() }
    }

    pub fn param<F: Scalar>(mut self, key: &str, values: &[F]) -> Self {
        self.params.insert(key.to_string(), values.iter().map(F::to_string).collect());
        self
    }

    /// Named and positional values, resolved against the entry's parameter
    /// list and parsed into `F`.
    pub fn resolve<F: Scalar>(&self) -> Result<Params<F>> {
        let mut out = Params::new();
        for (k, vs) in &self.params {
            out.insert(k.clone(), vs.iter().map(|v| v.parse()).collect::<Result<_>>()?);
        }
        if !self.positional.is_empty() {
            let info = entry(&self.name)?;
            let first = info.params.first().ok_or_else(|| Error::ParameterDomain {
                name: self.name.clone(),
                param: "(positional)".into(),
                reason: "entry takes no parameters".into(),
            })?;
            let vs = self.positional.iter().map(|v| v.parse()).collect::<Result<Vec<F>>>()?;
            out.entry(first.name.to_string()).or_default().extend(vs);
        }
        Ok(out)
    }

    pub fn build<F: Scalar>(&self) -> Result<Algebra<F>> {
        build(&self.name, self.n, &self.resolve()?)
    }
}

impl fmt::Display for CatalogRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "catalog:{}", self.name)?;
        let mut items: Vec<String> =
            self.params.iter().map(|(k, vs)| format!("{k}={}", vs.join(";"))).collect();
        items.extend(self.positional.iter().cloned());
        if !items.is_empty() {
            write!(f, "({})", items.join(","))?;
        }
        write!(f, "@{}", self.n)
    }
}

impl FromStr for CatalogRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("malformed catalog reference `{s}`"));
        let body = s.trim().strip_prefix("catalog:").ok_or_else(bad)?;
        let (head, n) = body.rsplit_once('@').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let (name, args) = match head.split_once('(') {
            Some((name, rest)) => (name, Some(rest.strip_suffix(')').ok_or_else(bad)?)),
            None => (head, None),
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(bad());
        }
        let mut r = CatalogRef::new(name, n);
        for item in args.into_iter().flat_map(|a| a.split(',')).map(str::trim) {
            if item.is_empty() {
                continue;
            }
            match item.split_once('=') {
                Some((k, v)) => {
                    let vs = v.split(';').map(str::trim).filter(|x| !x.is_empty());
                    r.params.insert(k.trim().to_string(), vs.map(String::from).collect());
                }
                None => r.positional.push(item.to_string()),
            }
        }
        Ok(r)
    }
}

/// Builds the algebra named by a `catalog:` reference.
pub fn build_ref<F: Scalar>(reference: &str) -> Result<Algebra<F>> {
    reference.parse::<CatalogRef>()?.build()
}

/// The declared source and target of a catalog witness, built.
pub fn witness_endpoints<F: Scalar>(w: &Witness<F>) -> Result<(Algebra<F>, Algebra<F>)> {
    let missing = || Error::parse("witness has no declared source or target");
    let s = w.source.as_deref().ok_or_else(missing)?;
    let t = w.target.as_deref().ok_or_else(missing)?;
    Ok((build_ref(s)?, build_ref(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn reference_round_trip() {
        for s in
            ["catalog:J3@3", "catalog:nu(alpha=1/2)@3", "catalog:J(zeta=1;0)@3", "catalog:J(1,0)@3"]
        {
            let r: CatalogRef = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        let pos: CatalogRef = "catalog:J(1,0)@3".parse().unwrap();
        let named: CatalogRef = "catalog:J(zeta=1;0)@3".parse().unwrap();
        assert_eq!(pos.build::<Rational>().unwrap(), named.build::<Rational>().unwrap());
        assert!("J3@3".parse::<CatalogRef>().is_err());
        assert!("catalog:J3".parse::<CatalogRef>().is_err());
        assert!("catalog:J(1@3".parse::<CatalogRef>().is_err());
    }
}

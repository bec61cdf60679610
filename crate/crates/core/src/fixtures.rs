//! Named input documents shipped with the crate.
//!
//! Every fixture is a JSON envelope `{"name", "kind", "description",
//! "document", ...}`. The embedded copies can be replaced by files in the
//! directory named by `ORBIKIT_FIXTURES`. Loading validates the document.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abelian::{abelian_invariants, h1, QuotientMap};
use crate::alexander::{depth_table, fox_jacobian};
use crate::covers::{analyze_fiber_data, validate_rep, FiberData, PermRep};
use crate::error::{Error, Result};
use crate::fpgroup::{OrbicurveSpec, Presentation};
use crate::io::{from_json, GroupDoc, OrbicurveDoc, QuotientDoc, RepDoc};

pub const FIXTURES_ENV: &str = "ORBIKIT_FIXTURES";

const EMBEDDED: &[(&str, &str)] = &[
    ("abelianization", include_str!("../../../fixtures/abelianization.json")),
    ("ceva", include_str!("../../../fixtures/ceva.json")),
    ("degree6-map", include_str!("../../../fixtures/degree6-map.json")),
    ("elliptic", include_str!("../../../fixtures/elliptic.json")),
    ("elliptic-sigma4", include_str!("../../../fixtures/elliptic-sigma4.json")),
    ("icosahedral5", include_str!("../../../fixtures/icosahedral5.json")),
    ("namba-family", include_str!("../../../fixtures/namba-family.json")),
    ("p1-235", include_str!("../../../fixtures/p1-235.json")),
    ("p1-236", include_str!("../../../fixtures/p1-236.json")),
    ("seven-line", include_str!("../../../fixtures/seven-line.json")),
    ("seven-line-derived", include_str!("../../../fixtures/seven-line-derived.json")),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    EMBEDDED.iter().map(|(n, _)| *n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureKind {
    Presentation,
    Orbicurve,
    Rep,
    Fibers,
    Indices,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    pub description: String,
    /// For representations, the fixture holding the group acted on.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gate: Option<Value>,
    pub document: Value,
}

fn raw(name: &str) -> Result<String> {
    if let Ok(dir) = std::env::var(FIXTURES_ENV) {
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        if path.exists() {
            return std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())));
        }
    }
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

fn typed<T: serde::de::DeserializeOwned>(f: &Fixture) -> Result<T> {
    serde_json::from_value(f.document.clone())
        .map_err(|e| Error::InvalidInput(format!("fixture `{}`: {e}", f.name)))
}

/// Loads and validates a fixture.
pub fn fixture(name: &str) -> Result<Fixture> {
    let f: Fixture = from_json(&raw(name)?)?;
    match f.kind {
        FixtureKind::Presentation | FixtureKind::Orbicurve => {
            typed::<GroupDoc>(&f)?.to_presentation()?;
        }
        FixtureKind::Rep => {
            let base = f.base.as_deref().ok_or_else(|| {
                Error::InvalidInput(format!("rep fixture `{}` names no base", f.name))
            })?;
            let p = fixture_presentation(base)?;
            let rep = typed::<RepDoc>(&f)?.to_rep(&p)?;
            if let Some((relator, _)) = validate_rep(&p, &rep)?.witness {
                return Err(Error::NotHomomorphism { relator });
            }
        }
        FixtureKind::Fibers => {
            analyze_fiber_data(&typed::<FiberData>(&f)?)?;
        }
        FixtureKind::Indices => {
            for idx in typed::<Vec<Vec<u64>>>(&f)? {
                OrbicurveSpec::sphere(idx)?;
            }
        }
        FixtureKind::Quotient => {
            typed::<QuotientDoc>(&f)?;
        }
    }
    if f.name == "ceva" {
        let p = typed::<GroupDoc>(&f)?.to_presentation()?;
        let inv = abelian_invariants(&p)?;
        if inv.free_rank != 5 || !inv.torsion.is_empty() {
            return Err(Error::Inconsistent(format!("Ceva abelianization is {inv}, not Z^5")));
        }
    }
    Ok(f)
}

pub fn fixture_presentation(name: &str) -> Result<Presentation> {
    let f = fixture(name)?;
    match f.kind {
        FixtureKind::Presentation | FixtureKind::Orbicurve => typed::<GroupDoc>(&f)?.to_presentation(),
        _ => Err(Error::InvalidInput(format!("fixture `{name}` is not a group"))),
    }
}

pub fn fixture_orbicurve(name: &str) -> Result<OrbicurveSpec> {
    let f = fixture(name)?;
    match f.kind {
        FixtureKind::Orbicurve => typed::<OrbicurveDoc>(&f)?.to_spec(),
        _ => Err(Error::InvalidInput(format!("fixture `{name}` is not an orbicurve"))),
    }
}

/// A rep fixture together with the presentation of its base.
pub fn fixture_rep(name: &str) -> Result<(Presentation, PermRep)> {
    let f = fixture(name)?;
    let base = f
        .base
        .as_deref()
        .ok_or_else(|| Error::InvalidInput(format!("fixture `{name}` is not a rep")))?;
    let p = fixture_presentation(base)?;
    let rep = typed::<RepDoc>(&f)?.to_rep(&p)?;
    Ok((p, rep))
}

pub fn fixture_fibers(name: &str) -> Result<FiberData> {
    typed(&fixture(name)?)
}

pub fn fixture_indices(name: &str) -> Result<Vec<Vec<u64>>> {
    typed(&fixture(name)?)
}

/// The Ceva orbifold group with every line of index `n`, and the sum of
/// depths over all nontrivial characters of its abelianization.
pub fn ceva_depth_sum(n: u64) -> Result<usize> {
    let p = fixture_presentation("ceva")?.with_meridian_indices(&[n; 6])?;
    let q = QuotientMap::abelianization(&h1(&p)?)?;
    Ok(depth_table(&p, &fox_jacobian(&p)?, &q)?.iter().map(|e| e.depth).sum())
}

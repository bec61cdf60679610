//! Reading input documents from files or the fixture corpus.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;

use orbikit::covers::PermRep;
use orbikit::fixtures::fixture;
use orbikit::fpgroup::{OrbicurveSpec, Presentation};
use orbikit::io::{from_json, GroupDoc, OrbicurveDoc, QuotientDoc, RepDoc};
use orbikit::{Error, Result};

/// A parsed input together with the name it was given by.
pub struct Document {
    pub source: String,
    pub value: Value,
    /// File contents when the document is the whole file, so that schema
    /// errors can be reported with a position.
    text: Option<String>,
}

/// Reads `arg` as a file when it exists and as a fixture name otherwise.
/// `p1_236.json` and `p1-236` both name the fixture `p1-236`. Fixture
/// envelopes, on disk or embedded, are unwrapped to their document.
pub fn load(arg: &str) -> Result<Document> {
    let path = Path::new(arg);
    let mut text = None;
    let value = if path.exists() {
        let t = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))?;
        let v = from_json::<Value>(&t).map_err(|e| located(arg, e))?;
        text = Some(t);
        v
    } else {
        let stem = arg.strip_suffix(".json").unwrap_or(arg);
        let name = Path::new(stem)
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or(stem)
            .replace('_', "-");
        match fixture(&name) {
            Ok(f) => f.document,
            Err(Error::UnknownFixture(_)) => {
                return Err(Error::InvalidInput(format!("{arg}: no such file or fixture")))
            }
            Err(e) => return Err(e),
        }
    };
    let (value, enveloped) = unwrap_envelope(value);
    if enveloped {
        text = None;
    }
    Ok(Document {
        source: arg.to_string(),
        value,
        text,
    })
}

fn located(source: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{source}: {m}")),
        other => other,
    }
}

fn unwrap_envelope(value: Value) -> (Value, bool) {
    match value {
        Value::Object(mut map) if map.contains_key("kind") && map.contains_key("document") => {
            (map.remove("document").expect("checked above"), true)
        }
        other => (other, false),
    }
}

impl Document {
    pub fn parse<T: DeserializeOwned>(&self) -> Result<T> {
        match &self.text {
            Some(t) => from_json(t).map_err(|e| located(&self.source, e)),
            None => serde_json::from_value(self.value.clone())
                .map_err(|e| Error::Parse(format!("{}: {e}", self.source))),
        }
    }

    pub fn presentation(&self) -> Result<Presentation> {
        self.parse::<GroupDoc>()?.to_presentation()
    }

    pub fn orbicurve(&self) -> Result<OrbicurveSpec> {
        self.parse::<OrbicurveDoc>()?.to_spec()
    }

    pub fn rep(&self, p: &Presentation) -> Result<PermRep> {
        self.parse::<RepDoc>()?.to_rep(p)
    }

    pub fn quotient(&self, p: &Presentation) -> Result<orbikit::abelian::QuotientMap> {
        self.parse::<QuotientDoc>()?.to_quotient(p)
    }
}

//! JSON documents for presentations, orbicurves, permutation
//! representations, quotient maps and rationals.
//!
//! Words are written as space- or `*`-separated syllables `name` or
//! `name^e`; `1` is the empty word. Maps are keyed by generator name and
//! serialized with sorted keys.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize, Serializer};

use crate::abelian::{h1, QuotientMap};
use crate::covers::{PermRep, Permutation};
use crate::error::{Error, Result};
use crate::fpgroup::{orbicurve_group, Meridian, OrbicurveSpec, Presentation, Word};

/// Parses a JSON document, reporting the line and column of syntax errors.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        if e.line() == 0 {
            return Error::Parse(e.to_string());
        }
        let msg = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = msg.strip_suffix(&suffix).unwrap_or(&msg);
        Error::Parse(format!("line {}, column {}: {msg}", e.line(), e.column()))
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("documents serialize");
    s.push('\n');
    s
}

/// An exact rational as `{"num": a, "den": b}` with `b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: i64,
    pub den: i64,
}

impl RationalDoc {
    pub fn from_rational(q: &BigRational) -> Self {
        use num_traits::ToPrimitive;
        RationalDoc {
            num: q.numer().to_i64().expect("rational fits in 64 bits"),
            den: q.denom().to_i64().expect("rational fits in 64 bits"),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        if self.den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(BigRational::new(BigInt::from(self.num), BigInt::from(self.den)))
    }
}

pub fn serialize_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    RationalDoc::from_rational(q).serialize(s)
}

pub fn serialize_option_rational<S: Serializer>(
    q: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    q.as_ref().map(RationalDoc::from_rational).serialize(s)
}

/// Parses a word over the given generator names.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word> {
    let trimmed = text.trim();
    if trimmed == "1" || trimmed.is_empty() {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    let mut pos = 0;
    for token in text.split(|c: char| c.is_whitespace() || c == '*') {
        let column = pos + 1;
        pos += token.chars().count() + 1;
        if token.is_empty() {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e.parse().map_err(|_| {
                    Error::Parse(format!("column {column}: bad exponent in `{token}`"))
                })?;
                (n, e)
            }
            None => (token, 1),
        };
        let g = generators
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::Parse(format!("column {column}: unknown generator `{name}`")))?;
        letters.push((g, exp));
    }
    Ok(Word::from_letters(letters))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeridianDoc {
    pub index: u64,
    pub word: String,
}

/// `{"generators": [...], "relators": [...], "meridians": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub meridians: Vec<MeridianDoc>,
    #[serde(default)]
    pub relators: Vec<String>,
}

impl PresentationDoc {
    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationDoc {
            generators: p.generators().to_vec(),
            meridians: p
                .meridians()
                .iter()
                .map(|m| MeridianDoc {
                    index: m.index,
                    word: p.format_word(&m.word),
                })
                .collect(),
            relators: p.relators().iter().map(|r| p.format_word(r)).collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let relators = self
            .relators
            .iter()
            .enumerate()
            .map(|(i, r)| {
                parse_word(r, &self.generators).map_err(|e| match e {
                    Error::Parse(m) => Error::Parse(format!("relator {}, {m}", i + 1)),
                    e => e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let meridians = self
            .meridians
            .iter()
            .map(|m| {
                Ok(Meridian {
                    word: parse_word(&m.word, &self.generators)?,
                    index: m.index,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(self.generators.clone(), relators)?.with_meridians(meridians)
    }
}

/// Either an explicit presentation or an orbicurve specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Presentation(PresentationDoc),
    Orbicurve(OrbicurveDoc),
}

impl GroupDoc {
    pub fn to_presentation(&self) -> Result<Presentation> {
        match self {
            GroupDoc::Presentation(p) => p.to_presentation(),
            GroupDoc::Orbicurve(o) => Ok(orbicurve_group(&o.to_spec()?)),
        }
    }
}

/// `{"genus": g, "punctures": s, "indices": [...]}`; genus and punctures
/// default to 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbicurveDoc {
    #[serde(default)]
    pub genus: u32,
    #[serde(default)]
    pub indices: Vec<u64>,
    #[serde(default)]
    pub punctures: u32,
}

impl OrbicurveDoc {
    pub fn from_spec(s: &OrbicurveSpec) -> Self {
        OrbicurveDoc {
            genus: s.genus,
            indices: s.indices.clone(),
            punctures: s.punctures,
        }
    }

    pub fn to_spec(&self) -> Result<OrbicurveSpec> {
        OrbicurveSpec::new(self.genus, self.punctures, self.indices.clone())
    }
}

/// `{"degree": n, "images": {"x1": [2, 1, 4, 3], ...}}`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDoc {
    pub degree: usize,
    pub images: BTreeMap<String, Vec<usize>>,
}

impl RepDoc {
    pub fn from_rep(p: &Presentation, rep: &PermRep) -> Self {
        RepDoc {
            degree: rep.degree(),
            images: p
                .generators()
                .iter()
                .cloned()
                .zip(rep.images().iter().map(Permutation::one_based))
                .collect(),
        }
    }

    /// Matches images to the generators of `p` by name.
    pub fn to_rep(&self, p: &Presentation) -> Result<PermRep> {
        if let Some(name) = self.images.keys().find(|k| p.generator_index(k).is_err()) {
            return Err(Error::UnknownGenerator(name.clone()));
        }
        let images = p
            .generators()
            .iter()
            .map(|g| {
                let img = self.images.get(g).ok_or_else(|| {
                    Error::InvalidInput(format!("rep has no image for generator `{g}`"))
                })?;
                if img.len() != self.degree {
                    return Err(Error::InvalidPermutation(format!(
                        "image of `{g}` has {} entries, expected {}",
                        img.len(),
                        self.degree
                    )));
                }
                Permutation::from_one_based(img)
            })
            .collect::<Result<Vec<_>>>()?;
        PermRep::new(self.degree, images)
    }
}

/// Either `{"abelianization": true}` or
/// `{"orders": [...], "images": {"x1": [...], ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuotientDoc {
    Abelianization { abelianization: bool },
    Explicit {
        images: BTreeMap<String, Vec<i64>>,
        orders: Vec<u64>,
    },
}

impl QuotientDoc {
    pub fn from_quotient(p: &Presentation, q: &QuotientMap) -> Self {
        QuotientDoc::Explicit {
            images: p.generators().iter().cloned().zip(q.images().iter().cloned()).collect(),
            orders: q.orders().to_vec(),
        }
    }

    pub fn to_quotient(&self, p: &Presentation) -> Result<QuotientMap> {
        match self {
            QuotientDoc::Abelianization { abelianization: true } => {
                QuotientMap::abelianization(&h1(p)?)
            }
            QuotientDoc::Abelianization { abelianization: false } => Err(Error::InvalidInput(
                "`abelianization: false` does not describe a quotient".into(),
            )),
            QuotientDoc::Explicit { images, orders } => {
                if let Some(name) = images.keys().find(|k| p.generator_index(k).is_err()) {
                    return Err(Error::UnknownGenerator(name.clone()));
                }
                let imgs = p
                    .generators()
                    .iter()
                    .map(|g| {
                        images.get(g).cloned().ok_or_else(|| {
                            Error::InvalidInput(format!("quotient has no image for generator `{g}`"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                QuotientMap::new(orders.clone(), imgs)
            }
        }
    }
}

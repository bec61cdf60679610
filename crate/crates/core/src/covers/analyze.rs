use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::perm::{validate_rep, PermRep};
use crate::error::{Error, Result};
use crate::fpgroup::{orbicurve_group, OrbicurveSpec};

/// `2 − 2g − s − Σ (1 − 1/mᵢ)`.
pub fn euler_orb(spec: &OrbicurveSpec) -> BigRational {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut chi = int(2 - 2 * spec.genus as i64 - spec.punctures as i64);
    for &m in &spec.indices {
        chi -= BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(m));
    }
    chi
}

/// One point of the cover over a marked point of the base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpstairsPoint {
    /// Name of the meridian generator downstairs, e.g. `x2` or `p1`.
    pub below: String,
    pub cycle_length: usize,
    /// Orbifold index upstairs; 0 over a puncture.
    pub index: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverFlags {
    pub valid_unbranched: bool,
    pub uniformization: bool,
    pub virtually_regular: bool,
    pub regular: bool,
}

/// The cover of an orbicurve determined by one orbit of a permutation
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub degree: usize,
    pub transitive: bool,
    /// Base points of this orbit, 1-based.
    pub orbit: Vec<usize>,
    pub upstairs_points: Vec<UpstairsPoint>,
    pub genus_upstairs: u64,
    pub punctures_upstairs: u64,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub euler_orb_upstairs: BigRational,
    /// Order of the monodromy group, when it is at most the degree.
    pub image_order: Option<usize>,
    pub flags: CoverFlags,
}

impl CoverReport {
    /// The cover as an orbicurve: cone points are the upstairs points of
    /// index greater than 1, in the order of the base points.
    pub fn cover_spec(&self) -> OrbicurveSpec {
        OrbicurveSpec {
            genus: self.genus_upstairs as u32,
            punctures: self.punctures_upstairs as u32,
            indices: self
                .upstairs_points
                .iter()
                .filter(|u| u.index > 1)
                .map(|u| u.index)
                .collect(),
        }
    }
}

/// Analyzes the unbranched orbifold cover of `spec` given by `rep`. A
/// non-transitive representation yields one report per orbit.
pub fn analyze_cover(spec: &OrbicurveSpec, rep: &PermRep) -> Result<Vec<CoverReport>> {
    spec.validate()?;
    let p = orbicurve_group(spec);
    if let Some((relator, _)) = validate_rep(&p, rep)?.witness {
        return Err(Error::NotHomomorphism { relator });
    }
    let orbits = rep.orbits();
    let transitive = orbits.len() == 1;
    orbits
        .iter()
        .map(|orbit| analyze_orbit(spec, &p, &rep.restrict(orbit), orbit, transitive))
        .collect()
}

fn analyze_orbit(
    spec: &OrbicurveSpec,
    p: &crate::fpgroup::Presentation,
    rep: &PermRep,
    orbit: &[usize],
    transitive: bool,
) -> Result<CoverReport> {
    let n = rep.degree();
    let mut upstairs = Vec::new();
    let mut total_cycles = 0u64;
    let mut punctures_up = 0u64;
    let mut valid_unbranched = true;
    let mut uniformization = true;
    let mut virtually_regular = true;
    for m in p.meridians() {
        let g = m.word.letters()[0].0;
        let lengths = rep.image_of_word(&m.word).cycle_lengths();
        total_cycles += lengths.len() as u64;
        if m.index == 0 {
            punctures_up += lengths.len() as u64;
            virtually_regular &= lengths.windows(2).all(|w| w[0] == w[1]);
        } else {
            virtually_regular &= lengths.iter().all(|&c| c as u64 == m.index);
            uniformization &= lengths.iter().all(|&c| c as u64 == m.index);
        }
        for &c in &lengths {
            let index = if m.index == 0 {
                0
            } else if m.index % c as u64 == 0 {
                m.index / c as u64
            } else {
                valid_unbranched = false;
                0
            };
            upstairs.push(UpstairsPoint {
                below: p.generators()[g].clone(),
                cycle_length: c,
                index,
            });
        }
    }
    if !valid_unbranched {
        return Err(Error::Inconsistent(
            "a meridian cycle length does not divide its index".into(),
        ));
    }
    let marked = spec.punctures as i64 + spec.indices.len() as i64;
    let chi_top = n as i64 * (2 - 2 * spec.genus as i64 - marked) + total_cycles as i64;
    if chi_top % 2 != 0 || chi_top > 2 {
        return Err(Error::Inconsistent(format!("cover has Euler characteristic {chi_top}")));
    }
    let genus = ((2 - chi_top) / 2) as u64;
    let up = OrbicurveSpec {
        genus: genus as u32,
        punctures: punctures_up as u32,
        indices: upstairs.iter().filter(|u| u.index > 1).map(|u| u.index).collect(),
    };
    let euler_up = euler_orb(&up);
    let expected = euler_orb(spec) * BigRational::from_integer(BigInt::from(n));
    if euler_up != expected {
        return Err(Error::Inconsistent(format!(
            "orbifold Euler characteristic {euler_up} is not {n} times that of the base"
        )));
    }
    let elements = rep.group_elements(n);
    let regular = elements
        .as_ref()
        .is_some_and(|els| els.iter().all(|e| e.is_identity() || e.fixed_points() == 0));
    Ok(CoverReport {
        degree: n,
        transitive,
        orbit: orbit.iter().map(|i| i + 1).collect(),
        upstairs_points: upstairs,
        genus_upstairs: genus,
        punctures_upstairs: punctures_up,
        euler_orb_upstairs: euler_up,
        image_order: elements.map(|e| e.len()),
        flags: CoverFlags {
            valid_unbranched,
            uniformization,
            virtually_regular,
            regular,
        },
    })
}

/// Ramification data of a map between compact orbicurves: for each marked
/// point of the target, its index and the local degrees over it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub degree: u64,
    pub target_genus: u32,
    pub points: Vec<FiberPoint>,
    /// A source orbifold to compare against the derived one, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated_source: Option<OrbicurveSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPoint {
    pub label: String,
    pub index: u64,
    pub local_degrees: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub target: OrbicurveSpec,
    pub source: OrbicurveSpec,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub euler_target: BigRational,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub euler_source: BigRational,
    #[serde(serialize_with = "crate::io::serialize_option_rational")]
    pub euler_stated_source: Option<BigRational>,
    /// Whether the stated source satisfies `χ(source) = degree · χ(target)`.
    pub stated_source_consistent: Option<bool>,
}

/// Derives the source orbifold of an unbranched orbifold map from its fiber
/// data: a point of local degree `e` over a point of index `m` gets index
/// `m / e`, and the source genus follows from Riemann–Hurwitz.
pub fn analyze_fiber_data(data: &FiberData) -> Result<FiberReport> {
    let mut indices = Vec::new();
    let mut ramification = 0i64;
    for pt in &data.points {
        if pt.local_degrees.iter().sum::<u64>() != data.degree {
            return Err(Error::InvalidInput(format!(
                "local degrees over {} do not sum to {}",
                pt.label, data.degree
            )));
        }
        for &e in &pt.local_degrees {
            if e == 0 || pt.index % e != 0 {
                return Err(Error::InvalidInput(format!(
                    "local degree {e} over {} does not divide its index {}",
                    pt.label, pt.index
                )));
            }
            ramification += e as i64 - 1;
            if pt.index / e > 1 {
                indices.push(pt.index / e);
            }
        }
    }
    let target = OrbicurveSpec::new(
        data.target_genus,
        0,
        data.points.iter().map(|p| p.index).filter(|&m| m > 1).collect(),
    )?;
    let chi = data.degree as i64 * (2 - 2 * data.target_genus as i64) - ramification;
    if chi % 2 != 0 || chi > 2 {
        return Err(Error::InvalidInput(format!(
            "fiber data give source Euler characteristic {chi}"
        )));
    }
    let source = OrbicurveSpec::new(((2 - chi) / 2) as u32, 0, indices)?;
    let euler_target = euler_orb(&target);
    let euler_source = euler_orb(&source);
    let scaled = &euler_target * BigRational::from_integer(BigInt::from(data.degree));
    if euler_source != scaled {
        return Err(Error::Inconsistent(format!(
            "derived source has orbifold Euler characteristic {euler_source}, expected {scaled}"
        )));
    }
    let euler_stated_source = data.stated_source.as_ref().map(euler_orb);
    let stated_source_consistent = euler_stated_source.as_ref().map(|e| *e == scaled);
    Ok(FiberReport {
        target,
        source,
        euler_target,
        euler_source,
        euler_stated_source,
        stated_source_consistent,
    })
}

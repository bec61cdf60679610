use serde::Serialize;

use super::perm::PermRep;
use crate::abelian::h1;
use crate::error::{Error, Result};
use crate::fpgroup::Presentation;

/// Orders of one marked meridian, homologically and in a finite quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeridianOrders {
    pub meridian: String,
    pub declared_index: u64,
    /// `None` for infinite order.
    pub order_h1: Option<u64>,
    pub order_rep: Option<u64>,
    pub saturated: bool,
}

fn properly_divides(order: Option<u64>, index: u64) -> bool {
    order.is_some_and(|o| o < index && index.is_multiple_of(o))
}

/// For each marked meridian, its order in `H₁` and in the image of `rep`.
///
/// A cone meridian is flagged unsaturated when either order properly
/// divides its index. A puncture meridian counts as saturated when its
/// homology class has infinite order.
pub fn saturation_check(p: &Presentation, rep: Option<&PermRep>) -> Result<Vec<MeridianOrders>> {
    if let Some(r) = rep {
        if r.images().len() != p.num_generators() {
            return Err(Error::ArityMismatch {
                expected: p.num_generators(),
                found: r.images().len(),
            });
        }
    }
    let h = h1(p)?;
    Ok(p.meridians()
        .iter()
        .map(|m| {
            let order_h1 = h.element_order(&h.image_of_word(&m.word));
            let order_rep = rep.map(|r| r.image_of_word(&m.word).order());
            let saturated = if m.index == 0 {
                order_h1.is_none()
            } else {
                !properly_divides(order_h1, m.index) && !properly_divides(order_rep, m.index)
            };
            MeridianOrders {
                meridian: p.format_word(&m.word),
                declared_index: m.index,
                order_h1,
                order_rep,
                saturated,
            }
        })
        .collect())
}

/// Whether `sub` is a suborbifold structure of `sup`: every index of `sub`
/// divides the corresponding index of `sup`. An index of 0 (a puncture) is
/// divisible by everything.
pub fn is_suborbifold(sub: &[u64], sup: &[u64]) -> Result<bool> {
    if sub.len() != sup.len() {
        return Err(Error::ArityMismatch {
            expected: sup.len(),
            found: sub.len(),
        });
    }
    Ok(sub
        .iter()
        .zip(sup)
        .all(|(&d, &m)| if d == 0 { m == 0 } else { m % d == 0 }))
}

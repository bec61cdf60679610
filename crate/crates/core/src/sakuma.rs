//! First Betti numbers of finite abelian covers from character depths, the
//! genus of the abelianization cover of a sphere orbifold, and a
//! Reidemeister–Schreier oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::abelian::{abelian_invariants, lcm_of, QuotientMap};
use crate::alexander::{depth_table, fox_jacobian, DepthEntry};
use crate::covers::{euler_orb, reidemeister_schreier, PermRep, Permutation};
use crate::error::{Error, Result};
use crate::fpgroup::{OrbicurveSpec, Presentation};

/// A presented group together with a surjection onto a finite abelian
/// group; the cover is the one with deck group the quotient.
#[derive(Clone, Debug)]
pub struct AbelianCoverSpec {
    base: Presentation,
    quotient: QuotientMap,
}

impl AbelianCoverSpec {
    pub fn new(base: Presentation, quotient: QuotientMap) -> Result<Self> {
        quotient.check_homomorphism(&base)?;
        if !quotient.is_surjective() {
            return Err(Error::NotSurjective);
        }
        Ok(AbelianCoverSpec { base, quotient })
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.quotient
    }

    /// The action of the base group on the elements of the quotient by
    /// translation, elements numbered in mixed radix (last coordinate
    /// fastest).
    pub fn regular_rep(&self) -> PermRep {
        let orders = self.quotient.orders();
        let size = self.quotient.order() as usize;
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        let images = self
            .quotient
            .images()
            .iter()
            .map(|img| {
                let perm = (0..size)
                    .map(|x| {
                        orders
                            .iter()
                            .zip(&strides)
                            .zip(img)
                            .map(|((&e, &s), &a)| {
                                let digit = (x / s) as u64 % e;
                                ((digit + a as u64) % e) as usize * s
                            })
                            .sum()
                    })
                    .collect();
                Permutation::new(perm).expect("translations are bijections")
            })
            .collect();
        PermRep::new(size, images).expect("degrees agree")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SakumaReport {
    pub b1_base: usize,
    pub b1_cover: usize,
    pub depth_sum: usize,
    pub depth_table: Vec<DepthEntry>,
    pub oracle_b1: Option<usize>,
    pub quotient_order: u64,
}

impl SakumaReport {
    /// False when an oracle value is present and disagrees.
    pub fn consistent(&self) -> bool {
        self.oracle_b1.is_none_or(|b| b == self.b1_cover)
    }
}

/// `b₁(cover) = b₁(base) + Σ_{ξ ≠ 1} depth(ξ)`, optionally checked against
/// the free rank of `H₁` of the Reidemeister–Schreier presentation of the
/// kernel.
pub fn sakuma_b1(spec: &AbelianCoverSpec, with_oracle: bool, coset_limit: usize) -> Result<SakumaReport> {
    let p = &spec.base;
    let b1_base = abelian_invariants(p)?.free_rank;
    let jac = fox_jacobian(p)?;
    let table = depth_table(p, &jac, &spec.quotient)?;
    let depth_sum: usize = table.iter().map(|e| e.depth).sum();
    let oracle_b1 = if with_oracle {
        let sub = reidemeister_schreier(p, &spec.regular_rep(), 0, coset_limit)?;
        Some(abelian_invariants(&sub)?.free_rank)
    } else {
        None
    };
    Ok(SakumaReport {
        b1_base,
        b1_cover: b1_base + depth_sum,
        depth_sum,
        depth_table: table,
        oracle_b1,
        quotient_order: spec.quotient.order(),
    })
}

/// True iff every index divides the lcm of the others.
pub fn namba_uniformizing(indices: &[u64]) -> bool {
    (0..indices.len()).all(|i| {
        let others: Vec<u64> = indices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &d)| d)
            .collect();
        lcm_of(&others).is_multiple_of(indices[i])
    })
}

fn rational(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Genus data of the abelianization cover of a compact genus-0 orbicurve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianCoverGenus {
    pub degree: u64,
    pub genus: u64,
    /// `1 + (D/2d)·[Σ(1 − 1/d_k) − 1]`, the variant with `−1` in place of
    /// `−2`; it does not satisfy Riemann–Hurwitz.
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub variant_genus: BigRational,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub euler_orb: BigRational,
}

/// `degree = D/d` and `g = 1 + (D/2d)·[Σ(1 − 1/d_k) − 2]` with `D = ∏ d_k`
/// and `d = lcm d_k`; refused unless every index divides the lcm of the
/// others, since the cover is otherwise not smooth.
pub fn abelian_cover_genus(spec: &OrbicurveSpec) -> Result<AbelianCoverGenus> {
    if spec.genus != 0 || !spec.is_compact() {
        return Err(Error::InvalidInput(
            "the abelian cover genus formula needs a compact genus-0 base".into(),
        ));
    }
    spec.validate()?;
    let idx = &spec.indices;
    for (i, &m) in idx.iter().enumerate() {
        let others: Vec<u64> = idx.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &d)| d).collect();
        let l = lcm_of(&others);
        if !l.is_multiple_of(m) {
            return Err(Error::NotUniformizing { index: m, lcm: l });
        }
    }
    let product = idx.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m)).ok_or_else(|| {
        Error::InvalidInput("product of indices overflows".into())
    })?;
    let d = lcm_of(idx);
    let degree = product / d;
    let defect: BigRational = idx
        .iter()
        .map(|&m| BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(m)))
        .sum();
    let half = BigRational::new(BigInt::from(degree), BigInt::from(2));
    let genus_q = BigRational::one() + &half * (&defect - rational(2));
    let variant_genus = BigRational::one() + &half * (&defect - rational(1));
    let chi = euler_orb(spec);
    if !genus_q.is_integer() || genus_q < BigRational::from_integer(0.into()) {
        return Err(Error::Inconsistent(format!("non-integral genus {genus_q}")));
    }
    let genus = genus_q.to_integer().to_u64().expect("small genus");
    // Double entry: 2 − 2g = degree · χ_orb.
    if rational(2) - rational(2 * genus) != &chi * rational(degree) {
        return Err(Error::Inconsistent("genus violates Riemann–Hurwitz".into()));
    }
    Ok(AbelianCoverGenus {
        degree,
        genus,
        variant_genus,
        euler_orb: chi,
    })
}

/// `Σ (ℓ(ξ) − 2)` over the nontrivial characters of `H₁` of the sphere
/// orbifold with the given indices, enumerating tuples of roots of unity
/// `(ξ₁, …, ξ_k)` with `ξᵢ^{dᵢ} = 1` and `∏ ξᵢ = 1` directly.
pub fn b1_by_length_count(indices: &[u64]) -> u64 {
    let level = lcm_of(indices);
    let mut total = 0u64;
    let mut digits = vec![0u64; indices.len()];
    loop {
        let sum: u64 = digits
            .iter()
            .zip(indices)
            .map(|(&a, &d)| a * (level / d))
            .sum();
        let len = digits.iter().filter(|&&a| a != 0).count() as u64;
        if sum.is_multiple_of(level) && len > 0 {
            total += len - 2;
        }
        let mut i = indices.len();
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < indices[i] {
                break;
            }
            digits[i] = 0;
        }
    }
}

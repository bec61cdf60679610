use num_bigint::BigInt;

use super::laurent::LaurentElement;
use crate::abelian::{h1, AbelianStructure, GeneratorCharacter};
use crate::cyclotomic::{cyclotomic_level, rank_over_cyclotomic_integers, Cyclo};
use crate::error::{Error, Result};
use crate::fpgroup::Presentation;

/// Fox derivatives of every relator with respect to every generator, pushed
/// to the group ring of `H₁`.
#[derive(Clone, Debug)]
pub struct FoxJacobian {
    h1: AbelianStructure,
    num_generators: usize,
    entries: Vec<Vec<LaurentElement>>,
}

/// Computes the abelianized Fox Jacobian of a presentation.
///
/// Uses `∂(uv)/∂x = ∂u/∂x + ab(u)·∂v/∂x`, `∂x/∂x = 1` and
/// `∂x⁻¹/∂x = −ab(x)⁻¹`.
pub fn fox_jacobian(p: &Presentation) -> Result<FoxJacobian> {
    let h = h1(p)?;
    let n = p.num_generators();
    let entries = p
        .relators()
        .iter()
        .map(|r| {
            let mut row = vec![LaurentElement::zero(); n];
            let mut prefix = vec![0i64; h.dimension()];
            for (g, e) in r.unit_letters() {
                if e > 0 {
                    row[g].add_term(prefix.clone(), 1);
                    prefix = h.add(&prefix, &h.gen_images()[g]);
                } else {
                    prefix = h.add(&prefix, &h.scale(&h.gen_images()[g], -1));
                    row[g].add_term(prefix.clone(), -1);
                }
            }
            row
        })
        .collect();
    Ok(FoxJacobian {
        h1: h,
        num_generators: n,
        entries,
    })
}

impl FoxJacobian {
    pub fn h1(&self) -> &AbelianStructure {
        &self.h1
    }

    pub fn num_relators(&self) -> usize {
        self.entries.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn entry(&self, relator: usize, generator: usize) -> &LaurentElement {
        &self.entries[relator][generator]
    }

    pub fn rows(&self) -> &[Vec<LaurentElement>] {
        &self.entries
    }

    /// Checks `Σⱼ ∂r/∂xⱼ · (ab(xⱼ) − 1) = 0` for every relator.
    pub fn check_fundamental_identity(&self) -> Result<()> {
        let h = &self.h1;
        for (i, row) in self.entries.iter().enumerate() {
            let mut total = LaurentElement::zero();
            for (g, d) in row.iter().enumerate() {
                let t = LaurentElement::monomial(h, h.gen_images()[g].clone(), 1)
                    .add(&LaurentElement::one(h).neg());
                total = total.add(&d.mul(&t, h));
            }
            if !total.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "Fox identity fails for relator {i}: {total}"
                )));
            }
        }
        Ok(())
    }

    /// Exponent of `ξ(t^v)` for each basis element of `H₁`.
    fn basis_values(&self, xi: &GeneratorCharacter) -> Vec<i64> {
        let n = xi.level as i128;
        self.h1
            .basis_preimages()
            .iter()
            .map(|pre| {
                let s: i128 = pre
                    .iter()
                    .zip(&xi.exponents)
                    .map(|(&c, &k)| c as i128 * k as i128)
                    .sum();
                s.rem_euclid(n) as i64
            })
            .collect()
    }

    /// The Jacobian with every monomial evaluated at a character of the
    /// group, as a matrix over `ℤ[ζ_N]`.
    pub fn evaluate(&self, xi: &GeneratorCharacter) -> Result<Vec<Vec<Cyclo<BigInt>>>> {
        if xi.exponents.len() != self.num_generators {
            return Err(Error::ArityMismatch {
                expected: self.num_generators,
                found: xi.exponents.len(),
            });
        }
        let level = cyclotomic_level(xi.level)?;
        let vals = self.basis_values(xi);
        let n = xi.level as i128;
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| {
                        let mut counts = vec![0i64; xi.level as usize];
                        for (exp, c) in entry.terms() {
                            let s: i128 = exp
                                .iter()
                                .zip(&vals)
                                .map(|(&e, &v)| e as i128 * v as i128)
                                .sum();
                            counts[s.rem_euclid(n) as usize] += c;
                        }
                        Cyclo::from_power_counts(&level, &counts)
                    })
                    .collect()
            })
            .collect())
    }

    /// `g − 1 − rank J(ξ)` for a nontrivial character `ξ` that kills every
    /// relator of `p`, the presentation this Jacobian was built from.
    pub fn depth(&self, p: &Presentation, xi: &GeneratorCharacter) -> Result<usize> {
        if xi.is_trivial() {
            return Err(Error::TrivialCharacter);
        }
        if let Some(relator) = xi.first_violated_relator(p) {
            return Err(Error::NotHomomorphism { relator });
        }
        let rank = rank_over_cyclotomic_integers(&self.evaluate(xi)?)?;
        (self.num_generators - 1).checked_sub(rank).ok_or_else(|| {
            Error::Inconsistent(format!(
                "Jacobian rank {rank} exceeds {} at a nontrivial character",
                self.num_generators - 1
            ))
        })
    }
}

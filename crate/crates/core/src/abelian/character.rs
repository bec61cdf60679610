//! Finite-order characters of finite abelian groups and their pullbacks to
//! presentation generators.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::snf::cokernel_invariants;
use super::structure::AbelianStructure;
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

/// A character of `ℤ/e₁ ⊕ … ⊕ ℤ/eₜ` with values in `μ_N`: basis element `i`
/// goes to `ζ_N^{exponents[i]}`. `N` is the lcm of the orders of the group,
/// shared by every character of one sweep.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    pub level: u64,
    pub exponents: Vec<u64>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .fold(1, |acc, &k| acc.lcm(&(self.level / self.level.gcd(&k))))
    }

    /// Pointwise product; both characters must share a level.
    pub fn product(&self, other: &Character) -> Character {
        assert_eq!(self.level, other.level, "characters of different levels");
        Character {
            level: self.level,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| (a + b) % self.level)
                .collect(),
        }
    }

    /// Exponent of `ξ(v)` for a coordinate vector `v`.
    pub fn evaluate(&self, v: &[i64]) -> u64 {
        let n = self.level as i128;
        let s = self
            .exponents
            .iter()
            .zip(v)
            .map(|(&k, &x)| k as i128 * x as i128)
            .sum::<i128>();
        s.mod_floor(&n) as u64
    }

    /// Well-definedness on `⊕ ℤ/eᵢ`.
    pub fn is_defined_on(&self, orders: &[u64]) -> bool {
        self.exponents.len() == orders.len()
            && self
                .exponents
                .iter()
                .zip(orders)
                .all(|(&k, &e)| (k as u128 * e as u128).is_multiple_of(self.level as u128))
    }
}

/// A character given by its values on the generators of a presentation:
/// generator `j` goes to `ζ_N^{exponents[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorCharacter {
    pub level: u64,
    pub exponents: Vec<u64>,
}

impl GeneratorCharacter {
    pub fn new(level: u64, exponents: Vec<i64>) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidInput("character level must be positive".into()));
        }
        Ok(GeneratorCharacter {
            level,
            exponents: exponents
                .into_iter()
                .map(|k| k.mod_floor(&(level as i64)) as u64)
                .collect(),
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// Exponent of the value on a word.
    pub fn evaluate_word(&self, w: &Word) -> u64 {
        let s: i128 = w
            .letters()
            .iter()
            .map(|&(g, e)| e as i128 * self.exponents[g] as i128)
            .sum();
        s.mod_floor(&(self.level as i128)) as u64
    }

    /// Index of the first relator on which the character is nontrivial.
    pub fn first_violated_relator(&self, p: &Presentation) -> Option<usize> {
        let n = p.num_generators();
        p.relators().iter().position(|r| {
            let s: i128 = r
                .exponent_sums(n)
                .iter()
                .zip(&self.exponents)
                .map(|(&e, &k)| e as i128 * k as i128)
                .sum();
            s.mod_floor(&(self.level as i128)) != 0
        })
    }
}

pub fn lcm_of(orders: &[u64]) -> u64 {
    orders.iter().fold(1, |acc, e| acc.lcm(e))
}

/// Odometer over all characters of `⊕ ℤ/eᵢ`, last coordinate fastest.
#[derive(Clone, Debug)]
pub struct CharacterIter {
    orders: Vec<u64>,
    level: u64,
    counter: Vec<u64>,
    done: bool,
}

impl CharacterIter {
    pub fn new(orders: &[u64], include_trivial: bool) -> Self {
        let mut it = CharacterIter {
            orders: orders.to_vec(),
            level: lcm_of(orders),
            counter: vec![0; orders.len()],
            done: orders.contains(&0),
        };
        if !include_trivial {
            it.advance();
        }
        it
    }

    fn advance(&mut self) {
        for i in (0..self.counter.len()).rev() {
            self.counter[i] += 1;
            if self.counter[i] < self.orders[i] {
                return;
            }
            self.counter[i] = 0;
        }
        self.done = true;
    }
}

impl Iterator for CharacterIter {
    type Item = Character;

    fn next(&mut self) -> Option<Character> {
        if self.done {
            return None;
        }
        let exponents = self
            .counter
            .iter()
            .zip(&self.orders)
            .map(|(&a, &e)| a * (self.level / e))
            .collect();
        self.advance();
        Some(Character {
            level: self.level,
            exponents,
        })
    }
}

/// All characters of a finite abelian group, in odometer order.
pub fn characters(a: &AbelianStructure, include_trivial: bool) -> Result<CharacterIter> {
    if !a.is_finite() {
        return Err(Error::InfiniteGroup(a.free_rank()));
    }
    Ok(CharacterIter::new(a.torsion(), include_trivial))
}

/// A homomorphism from a presented group onto `⊕ ℤ/eᵢ`, given by the image
/// of every generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMap {
    orders: Vec<u64>,
    images: Vec<Vec<i64>>,
}

impl QuotientMap {
    pub fn new(orders: Vec<u64>, images: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(&e) = orders.iter().find(|&&e| e == 0) {
            return Err(Error::InvalidInput(format!("quotient order {e} is not positive")));
        }
        for img in &images {
            if img.len() != orders.len() {
                return Err(Error::ArityMismatch {
                    expected: orders.len(),
                    found: img.len(),
                });
            }
        }
        let images = images
            .into_iter()
            .map(|img| {
                img.iter()
                    .zip(&orders)
                    .map(|(&x, &e)| x.mod_floor(&(e as i64)))
                    .collect()
            })
            .collect();
        Ok(QuotientMap { orders, images })
    }

    /// The abelianization itself, onto the torsion part of a finite `H₁`.
    pub fn abelianization(a: &AbelianStructure) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InfiniteGroup(a.free_rank()));
        }
        QuotientMap::new(a.torsion().to_vec(), a.gen_images().to_vec())
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn level(&self) -> u64 {
        lcm_of(&self.orders)
    }

    pub fn characters(&self, include_trivial: bool) -> CharacterIter {
        CharacterIter::new(&self.orders, include_trivial)
    }

    pub fn image_of(&self, exponent_sums: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.orders.len()];
        for (img, &e) in self.images.iter().zip(exponent_sums) {
            for (x, y) in v.iter_mut().zip(img) {
                *x += e * y;
            }
        }
        for (x, &e) in v.iter_mut().zip(&self.orders) {
            *x = x.mod_floor(&(e as i64));
        }
        v
    }

    /// Every relator must map to zero.
    pub fn check_homomorphism(&self, p: &Presentation) -> Result<()> {
        if self.images.len() != p.num_generators() {
            return Err(Error::ArityMismatch {
                expected: p.num_generators(),
                found: self.images.len(),
            });
        }
        let n = p.num_generators();
        match p
            .relators()
            .iter()
            .position(|r| self.image_of(&r.exponent_sums(n)).iter().any(|&x| x != 0))
        {
            Some(relator) => Err(Error::NotHomomorphism { relator }),
            None => Ok(()),
        }
    }

    /// The images together with `eᵢ·basisᵢ` must span `ℤ^t`.
    pub fn is_surjective(&self) -> bool {
        let t = self.orders.len();
        let rows = self
            .images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .map(|(c, &x)| (c, BigInt::from(x)))
                    .collect::<Vec<_>>()
            })
            .chain(
                self.orders
                    .iter()
                    .enumerate()
                    .map(|(c, &e)| vec![(c, BigInt::from(e))]),
            );
        let inv = cokernel_invariants(t, rows);
        inv.free_rank == 0 && inv.torsion.is_empty()
    }
}

/// Composes a character of the quotient with the quotient map.
pub fn pull_back(
    xi: &Character,
    quotient: &QuotientMap,
    p: &Presentation,
) -> Result<GeneratorCharacter> {
    quotient.check_homomorphism(p)?;
    if !xi.is_defined_on(quotient.orders()) {
        return Err(Error::InvalidInput(
            "character is not defined on the quotient group".into(),
        ));
    }
    Ok(GeneratorCharacter {
        level: xi.level,
        exponents: quotient.images().iter().map(|img| xi.evaluate(img)).collect(),
    })
}

use std::collections::BTreeMap;
use std::fmt;

use crate::abelian::AbelianStructure;

/// An element of the integral group ring `ℤ[H]` of a finitely generated
/// abelian group, stored as a sparse map from coordinate vectors (in the
/// basis of an [`AbelianStructure`]) to nonzero coefficients.
///
/// Torsion coordinates are reduced, so equal group elements share a key.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentElement {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        LaurentElement::default()
    }

    pub fn monomial(h: &AbelianStructure, mut exponent: Vec<i64>, coeff: i64) -> Self {
        h.reduce(&mut exponent);
        let mut e = LaurentElement::zero();
        e.add_term(exponent, coeff);
        e
    }

    pub fn one(h: &AbelianStructure) -> Self {
        LaurentElement::monomial(h, vec![0; h.dimension()], 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff · t^exponent`; the exponent must already be reduced.
    pub(crate) fn add_term(&mut self, exponent: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (k, &v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn neg(&self) -> LaurentElement {
        LaurentElement {
            terms: self.terms.iter().map(|(k, &v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentElement, h: &AbelianStructure) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(h.add(a, b), x * y);
            }
        }
        out
    }

    /// Augmentation: the sum of all coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                if k.iter().all(|&x| x == 0) {
                    v.to_string()
                } else {
                    let mono: Vec<String> = k
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(i, &x)| if x == 1 { format!("t{}", i + 1) } else { format!("t{}^{x}", i + 1) })
                        .collect();
                    match v {
                        1 => mono.join("*"),
                        -1 => format!("-{}", mono.join("*")),
                        _ => format!("{v}*{}", mono.join("*")),
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::Matrix;
use super::snf::{cokernel_invariants, smith_normal_form};
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

/// A finitely generated abelian group `ℤ/e₁ ⊕ … ⊕ ℤ/eₜ ⊕ ℤ^b` together with
/// the images of the generators of the group it abelianizes.
///
/// Coordinates are ordered torsion first, then free. Torsion coordinates are
/// kept reduced into `[0, eᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    free_rank: usize,
    torsion: Vec<u64>,
    gen_images: Vec<Vec<i64>>,
    basis_preimages: Vec<Vec<i64>>,
}

/// Only the isomorphism type, for presentations too large for transforms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianStructure {
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of basis coordinates (torsion plus free).
    pub fn dimension(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// `None` when the group is infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Image of each generator, one coordinate vector per generator.
    pub fn gen_images(&self) -> &[Vec<i64>] {
        &self.gen_images
    }

    /// For each basis element, an exponent vector on the generators that
    /// maps to it.
    pub fn basis_preimages(&self) -> &[Vec<i64>] {
        &self.basis_preimages
    }

    pub fn invariants(&self) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
        }
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &e) in v.iter_mut().zip(&self.torsion) {
            *x = x.mod_floor(&(e as i64));
        }
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut v);
        v
    }

    pub fn scale(&self, a: &[i64], k: i64) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| x * k).collect();
        self.reduce(&mut v);
        v
    }

    pub fn image_of_word(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0; self.dimension()];
        for &(g, e) in w.letters() {
            for (x, y) in v.iter_mut().zip(&self.gen_images[g]) {
                *x += e * y;
            }
        }
        self.reduce(&mut v);
        v
    }

    /// Order of an element; `None` if it has infinite order.
    pub fn element_order(&self, v: &[i64]) -> Option<u64> {
        if v[self.torsion.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(self.torsion.iter().zip(v).fold(1u64, |acc, (&e, &x)| {
            let x = x.mod_floor(&(e as i64)) as u64;
            acc.lcm(&(e / e.gcd(&x)))
        }))
    }
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("invariant factor {v} does not fit in 64 bits")))
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::InvalidInput(format!("coefficient {v} does not fit in 64 bits")))
}

/// Abelianization of a presentation: the cokernel of its relator
/// exponent-sum matrix, in Smith basis.
pub fn h1(p: &Presentation) -> Result<AbelianStructure> {
    let n = p.num_generators();
    let rel: Matrix<BigInt> = Matrix::from_i64_rows(&p.relation_matrix(), n);
    let f = smith_normal_form(&rel);
    let diag = f.diagonal();
    let d: Vec<BigInt> = (0..n)
        .map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    // Row space of the relation matrix maps onto the row space of S under x ↦ xV.
    let v_inv = inverse_unimodular(&f.v);
    let torsion_idx: Vec<usize> = (0..n).filter(|&i| d[i] > BigInt::one()).collect();
    let free_idx: Vec<usize> = (0..n).filter(|&i| d[i].is_zero()).collect();
    let torsion: Vec<u64> = torsion_idx.iter().map(|&i| to_u64(&d[i])).collect::<Result<_>>()?;
    let kept: Vec<usize> = torsion_idx.iter().chain(&free_idx).copied().collect();
    let mut gen_images = Vec::with_capacity(n);
    for g in 0..n {
        let mut img = Vec::with_capacity(kept.len());
        for (k, &i) in kept.iter().enumerate() {
            let mut x = f.v[(g, i)].clone();
            if k < torsion.len() {
                x = x.mod_floor(&d[i]);
            }
            img.push(to_i64(&x)?);
        }
        gen_images.push(img);
    }
    let basis_preimages = kept
        .iter()
        .map(|&i| (0..n).map(|g| to_i64(&v_inv[(i, g)])).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(AbelianStructure {
        free_rank: free_idx.len(),
        torsion,
        gen_images,
        basis_preimages,
    })
}

/// Isomorphism type of the abelianization via sparse elimination.
pub fn abelian_invariants(p: &Presentation) -> Result<AbelianInvariants> {
    let n = p.num_generators();
    let rows = p.relators().iter().map(|r| {
        r.exponent_sums(n)
            .into_iter()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .map(|(c, v)| (c, BigInt::from(v)))
            .collect::<Vec<_>>()
    });
    let inv = cokernel_invariants(n, rows);
    Ok(AbelianInvariants {
        free_rank: inv.free_rank,
        torsion: inv.torsion.iter().map(to_u64).collect::<Result<_>>()?,
    })
}

fn inverse_unimodular(v: &Matrix<BigInt>) -> Matrix<BigInt> {
    // U·V·W = I because det V = ±1, hence V⁻¹ = W·U.
    let f = smith_normal_form(v);
    debug_assert!(f.diagonal().iter().all(|x| x.is_one()));
    f.v.mul(&f.u)
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|e| format!("Z/{e}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Display for AbelianStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.invariants().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{gprime_fixture, orbicurve_group, seven_line_fixture, OrbicurveSpec};

    #[test]
    fn seven_line_abelianization() {
        let a = h1(&seven_line_fixture()).unwrap();
        assert_eq!(a.free_rank(), 0);
        assert_eq!(a.torsion(), &[2; 6]);
        assert_eq!(a.order(), Some(64));
    }

    #[test]
    fn gprime_abelianization() {
        let a = h1(&gprime_fixture()).unwrap();
        assert_eq!(a.to_string(), "Z^4 + Z/4");
        assert_eq!(abelian_invariants(&gprime_fixture()).unwrap(), a.invariants());
    }

    #[test]
    fn klein_four_from_222() {
        let a = h1(&orbicurve_group(&OrbicurveSpec::sphere(vec![2, 2, 2]).unwrap())).unwrap();
        assert_eq!(a.torsion(), &[2, 2]);
    }

    #[test]
    fn generator_images_generate_and_kill_relators() {
        let p = orbicurve_group(&OrbicurveSpec::new(1, 1, vec![2, 3, 6]).unwrap());
        let a = h1(&p).unwrap();
        for r in p.relators() {
            assert!(a.image_of_word(r).iter().all(|&x| x == 0));
        }
        // Every basis element is the image of its preimage vector.
        for (k, pre) in a.basis_preimages().iter().enumerate() {
            let mut v = vec![0; a.dimension()];
            for (g, &c) in pre.iter().enumerate() {
                for (x, y) in v.iter_mut().zip(&a.gen_images()[g]) {
                    *x += c * y;
                }
            }
            a.reduce(&mut v);
            let mut e = vec![0; a.dimension()];
            e[k] = 1;
            assert_eq!(v, e);
        }
    }

    #[test]
    fn meridian_orders_in_236() {
        let p = orbicurve_group(&OrbicurveSpec::sphere(vec![2, 3, 6]).unwrap());
        let a = h1(&p).unwrap();
        assert_eq!(a.torsion(), &[6]);
        let orders: Vec<_> = (0..3).map(|g| a.element_order(&a.gen_images()[g])).collect();
        assert_eq!(orders, vec![Some(2), Some(3), Some(6)]);
    }

    #[test]
    fn display_forms() {
        let inv = AbelianInvariants { free_rank: 0, torsion: vec![] };
        assert_eq!(inv.to_string(), "0");
        let inv = AbelianInvariants { free_rank: 2, torsion: vec![2, 6] };
        assert_eq!(inv.to_string(), "Z^2 + Z/2 + Z/6");
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::level::{cyclotomic_level, CyclotomicLevel};
use crate::error::Result;
use crate::scalar::{FieldScalar, Scalar};

/// An element of `T[x]/(Φ_N)`, i.e. of `ℚ(ζ_N)` when `T` is the rationals
/// or of the ring of cyclotomic integers `ℤ[ζ_N]` when `T` is the integers.
///
/// Coefficients are in the power basis `1, ζ, …, ζ^{φ(N)−1}`, so the zero
/// test is a plain comparison. Arithmetic between elements of different
/// levels panics.
#[derive(Clone)]
pub struct Cyclo<T> {
    level: Arc<CyclotomicLevel>,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclo<T> {
    pub fn zero(level: &Arc<CyclotomicLevel>) -> Self {
        Cyclo {
            level: level.clone(),
            coeffs: vec![T::zero(); level.degree()],
        }
    }

    pub fn one(level: &Arc<CyclotomicLevel>) -> Self {
        Cyclo::from_scalar(level, T::one())
    }

    pub fn from_scalar(level: &Arc<CyclotomicLevel>, c: T) -> Self {
        let mut z = Cyclo::zero(level);
        z.coeffs[0] = c;
        z
    }

    /// `ζ_N^a`.
    pub fn root(n: u64, a: i64) -> Result<Self> {
        let level = cyclotomic_level(n)?;
        Ok(Cyclo::root_in(&level, a))
    }

    pub fn root_in(level: &Arc<CyclotomicLevel>, a: i64) -> Self {
        Cyclo {
            coeffs: level.power(a).iter().map(|&c| T::from_int(c)).collect(),
            level: level.clone(),
        }
    }

    /// `Σ_a counts[a] · ζ^a` for `a` in `0..N`.
    pub fn from_power_counts(level: &Arc<CyclotomicLevel>, counts: &[i64]) -> Self {
        let mut acc = vec![0i64; level.degree()];
        for (a, &c) in counts.iter().enumerate() {
            if c != 0 {
                for (x, &p) in acc.iter_mut().zip(level.power(a as i64)) {
                    *x += c * p;
                }
            }
        }
        Cyclo {
            level: level.clone(),
            coeffs: acc.into_iter().map(T::from_int).collect(),
        }
    }

    pub fn from_coeffs(level: &Arc<CyclotomicLevel>, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), level.degree(), "coefficient count must be φ(N)");
        Cyclo {
            level: level.clone(),
            coeffs,
        }
    }

    pub fn level(&self) -> u64 {
        self.level.n()
    }

    pub fn level_data(&self) -> &Arc<CyclotomicLevel> {
        &self.level
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn same_level(&self, other: &Self) {
        assert_eq!(self.level(), other.level(), "mixed cyclotomic levels");
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclo {
            level: self.level.clone(),
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one(&self.level);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluates an integer polynomial (lowest degree first) at `self`.
    pub fn eval_poly(&self, poly: &[i64]) -> Self {
        let mut acc = Cyclo::zero(&self.level);
        for &c in poly.iter().rev() {
            acc = &(&acc * self) + &Cyclo::from_scalar(&self.level, T::from_int(c));
        }
        acc
    }
}

impl<T: FieldScalar> Cyclo<T> {
    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_N`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<T> = self.level.phi().iter().map(|&c| T::from_int(c)).collect();
        let (g, s) = ext_gcd_left(trim(self.coeffs.clone()), modulus);
        // Φ_N is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let c = g[0].clone();
        let mut coeffs: Vec<T> = s.into_iter().map(|x| x / c.clone()).collect();
        coeffs.resize(self.level.degree(), T::zero());
        Some(Cyclo {
            level: self.level.clone(),
            coeffs,
        })
    }
}

fn trim<T: Scalar>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub_mul<T: Scalar>(a: &[T], q: &[T], b: &[T]) -> Vec<T> {
    // a − q·b
    let mut out = a.to_vec();
    let len = if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 };
    if out.len() < len {
        out.resize(len, T::zero());
    }
    for (i, x) in q.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() - x.clone() * y.clone();
        }
    }
    trim(out)
}

fn poly_divmod<T: FieldScalar>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![T::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone() / lead.clone();
        if !c.is_zero() {
            for (i, y) in b.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * y.clone();
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

/// Returns `(g, s)` with `g = gcd(a, m)` and `s·a ≡ g (mod m)`.
fn ext_gcd_left<T: FieldScalar>(a: Vec<T>, m: Vec<T>) -> (Vec<T>, Vec<T>) {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1): (Vec<T>, Vec<T>) = (Vec::new(), vec![T::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl<T: Scalar> PartialEq for Cyclo<T> {
    fn eq(&self, other: &Self) -> bool {
        self.level() == other.level() && self.coeffs == other.coeffs
    }
}

impl<T: Scalar> Add for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn add(self, rhs: &Cyclo<T>) -> Cyclo<T> {
        self.same_level(rhs);
        Cyclo {
            level: self.level.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn sub(self, rhs: &Cyclo<T>) -> Cyclo<T> {
        self.same_level(rhs);
        Cyclo {
            level: self.level.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn neg(self) -> Cyclo<T> {
        Cyclo {
            level: self.level.clone(),
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn mul(self, rhs: &Cyclo<T>) -> Cyclo<T> {
        self.same_level(rhs);
        let d = self.level.degree();
        let mut prod = vec![T::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        let phi = self.level.phi();
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[k], T::zero());
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi[..d].iter().enumerate() {
                if p != 0 {
                    prod[k - d + i] = prod[k - d + i].clone() - c.clone() * T::from_int(p);
                }
            }
        }
        prod.truncate(d);
        Cyclo {
            level: self.level.clone(),
            coeffs: prod,
        }
    }
}

impl<T: Scalar> fmt::Debug for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]{:?}", self.level(), self.coeffs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})z"),
                _ => format!("({c})z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

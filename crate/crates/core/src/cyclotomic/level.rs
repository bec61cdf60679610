use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// Default bound on cyclotomic levels.
pub const DEFAULT_LEVEL_BOUND: u64 = 360;

static LEVEL_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_LEVEL_BOUND);

pub fn set_level_bound(bound: u64) {
    LEVEL_BOUND.store(bound, Ordering::Relaxed);
}

pub fn level_bound() -> u64 {
    LEVEL_BOUND.load(Ordering::Relaxed)
}

/// Data shared by all elements of `ℚ(ζ_N)`: the cyclotomic polynomial and
/// the reduced powers of `ζ_N`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicLevel {
    n: u64,
    phi: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

impl CyclotomicLevel {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `φ(N)`, the degree of the field.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of `Φ_N`, lowest degree first; monic.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Coefficients of `ζ_N^a` in the power basis.
    pub fn power(&self, a: i64) -> &[i64] {
        &self.powers[a.rem_euclid(self.n as i64) as usize]
    }

    fn build(n: u64) -> Self {
        let phi = cyclotomic_polynomial(n);
        let d = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; d];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient with Φ_N
            let top = cur[d - 1];
            for i in (1..d).rev() {
                cur[i] = cur[i - 1] - top * phi[i];
            }
            cur[0] = -top * phi[0];
        }
        CyclotomicLevel { n, phi, powers }
    }
}

/// `Φ_N` by dividing `x^N − 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic level must be positive");
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = divide_monic(&p, &cyclotomic_polynomial_cached(d));
    }
    p
}

fn cyclotomic_polynomial_cached(n: u64) -> Vec<i64> {
    static POLYS: OnceLock<RwLock<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = POLYS.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let p = cyclotomic_polynomial(n);
    cache.write().unwrap().insert(n, p.clone());
    p
}

/// Exact quotient of integer polynomials by a monic divisor.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (n, d) = (num.len() - 1, den.len() - 1);
    let mut rem = num.to_vec();
    let mut q = vec![0i64; n - d + 1];
    for k in (0..=n - d).rev() {
        let c = rem[k + d];
        q[k] = c;
        for (i, &b) in den.iter().enumerate() {
            rem[k + i] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    q
}

/// Shared level data, built once per level and safe to read concurrently.
pub fn cyclotomic_level(n: u64) -> Result<Arc<CyclotomicLevel>> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclotomic level must be positive".into()));
    }
    let bound = level_bound();
    if n > bound {
        return Err(Error::LevelTooLarge { level: n, bound });
    }
    static LEVELS: OnceLock<RwLock<HashMap<u64, Arc<CyclotomicLevel>>>> = OnceLock::new();
    let cache = LEVELS.get_or_init(Default::default);
    if let Some(l) = cache.read().unwrap().get(&n) {
        return Ok(l.clone());
    }
    let mut w = cache.write().unwrap();
    Ok(w.entry(n)
        .or_insert_with(|| Arc::new(CyclotomicLevel::build(n)))
        .clone())
}

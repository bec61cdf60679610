//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] tracks both unimodular transforms and is meant for
//! the small relation matrices of input presentations. [`cokernel_invariants`]
//! only needs the diagonal and works on sparse rows: it first eliminates every
//! unit pivot it can find and hands the (usually tiny) remainder to the dense
//! routine. That is what makes abelianizing Reidemeister–Schreier output with
//! hundreds of generators cheap.

use std::collections::{BTreeMap, BTreeSet};


use super::matrix::Matrix;
use crate::scalar::IntScalar;

/// `s = u · a · v` with `u`, `v` unimodular and `s` diagonal, its nonzero
/// entries nonnegative, forming a divisibility chain, zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> Smith<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct Reducer<T> {
    a: Matrix<T>,
    u: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
}

impl<T: IntScalar> Reducer<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Smallest nonzero `|a[i][j]|` over `i, j ≥ t`.
    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Smallest nonzero entry in row `t` or column `t` (from `t` on).
    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut val: Option<T> = None;
        let mut consider = |i: usize, j: usize, x: &T| {
            if !x.is_zero() && val.as_ref().is_none_or(|v| x.abs() < *v) {
                val = Some(x.abs());
                best = (i, j);
            }
        };
        for i in t..self.a.rows() {
            consider(i, t, &self.a[(i, t)]);
        }
        for j in t..self.a.cols() {
            consider(t, j, &self.a[(t, j)]);
        }
        best
    }

    fn run(&mut self) {
        let (m, n) = (self.a.rows(), self.a.cols());
        let mut t = 0;
        while t < m.min(n) {
            let Some((i, j)) = self.smallest_entry(t) else {
                break;
            };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let pivot = self.a[(t, t)].clone();
                let mut dirty = false;
                for i in t + 1..m {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&pivot);
                    self.add_row(i, t, &-q);
                    dirty |= !self.a[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&pivot);
                    self.add_col(j, t, &-q);
                    dirty |= !self.a[(t, j)].is_zero();
                }
                if dirty {
                    let (i, j) = self.smallest_in_cross(t);
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &T::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

/// Smith normal form with both transforms.
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> Smith<T> {
    let mut r = Reducer {
        a: a.clone(),
        u: Some(Matrix::identity(a.rows())),
        v: Some(Matrix::identity(a.cols())),
    };
    r.run();
    Smith {
        u: r.u.unwrap(),
        s: r.a,
        v: r.v.unwrap(),
    }
}

/// Nonzero diagonal of the Smith form, without transforms.
pub fn smith_diagonal<T: IntScalar>(a: &Matrix<T>) -> Vec<T> {
    let mut r = Reducer {
        a: a.clone(),
        u: None,
        v: None,
    };
    r.run();
    (0..a.rows().min(a.cols()))
        .map(|i| r.a[(i, i)].clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Free rank and torsion (invariant factors `> 1`) of `ℤ^cols / rowspace`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelInvariants<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

/// Cokernel of a sparse integer matrix given as rows of `(column, value)`.
pub fn cokernel_invariants<T: IntScalar>(
    cols: usize,
    rows: impl IntoIterator<Item = Vec<(usize, T)>>,
) -> CokernelInvariants<T> {
    let mut rows: Vec<BTreeMap<usize, T>> = rows
        .into_iter()
        .map(|r| {
            let mut m: BTreeMap<usize, T> = BTreeMap::new();
            for (c, v) in r {
                assert!(c < cols, "column {c} out of range");
                let e = m.entry(c).or_insert_with(T::zero);
                *e = e.clone() + v;
            }
            m.retain(|_, v| !v.is_zero());
            m
        })
        .filter(|m| !m.is_empty())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (i, r) in rows.iter().enumerate() {
        for &c in r.keys() {
            col_rows[c].insert(i);
        }
    }
    let mut alive_rows: BTreeSet<usize> = (0..rows.len()).collect();
    let mut alive_cols: BTreeSet<usize> = (0..cols).collect();
    let mut unit_pivots = 0;

    loop {
        // Unit pivot in the sparsest row, ties broken by the sparsest column.
        let mut pick: Option<(usize, usize, usize, usize)> = None;
        for &i in &alive_rows {
            let len = rows[i].len();
            if pick.is_some_and(|p| len > p.2) {
                continue;
            }
            for (&c, v) in &rows[i] {
                if v.abs().is_one() {
                    let key = (i, c, len, col_rows[c].len());
                    if pick.is_none_or(|p| (len, key.3) < (p.2, p.3)) {
                        pick = Some(key);
                    }
                }
            }
        }
        let Some((pr, pc, _, _)) = pick else {
            break;
        };
        let pivot_row = rows[pr].clone();
        let pv = pivot_row[&pc].clone();
        let others: Vec<usize> = col_rows[pc].iter().copied().filter(|&i| i != pr).collect();
        for i in others {
            // pv = ±1, so the factor is exact.
            let f = -(rows[i][&pc].clone() * pv.clone());
            for (&c, v) in &pivot_row {
                let e = rows[i].entry(c).or_insert_with(T::zero);
                *e = e.clone() + f.clone() * v.clone();
                if e.is_zero() {
                    rows[i].remove(&c);
                    col_rows[c].remove(&i);
                } else {
                    col_rows[c].insert(i);
                }
            }
            if rows[i].is_empty() {
                alive_rows.remove(&i);
            }
        }
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        rows[pr].clear();
        alive_rows.remove(&pr);
        alive_cols.remove(&pc);
        unit_pivots += 1;
    }

    let col_list: Vec<usize> = alive_cols.iter().copied().collect();
    let col_pos: BTreeMap<usize, usize> = col_list.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let dense_rows: Vec<Vec<T>> = alive_rows
        .iter()
        .map(|&i| {
            let mut r = vec![T::zero(); col_list.len()];
            for (c, v) in &rows[i] {
                r[col_pos[c]] = v.clone();
            }
            r
        })
        .collect();
    let dense = Matrix::from_rows(dense_rows, col_list.len());
    let diag = smith_diagonal(&dense);
    let rank = unit_pivots + diag.len();
    CokernelInvariants {
        free_rank: cols - rank,
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

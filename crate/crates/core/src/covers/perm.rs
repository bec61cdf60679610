use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

/// A permutation of `{0, …, n−1}`; points are written 1-based in the text
/// and JSON forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as in `[2, 1, 4, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("points are numbered from 1".into()));
        }
        Permutation::new(images.iter().map(|&i| i - 1).collect())
    }

    /// From disjoint 1-based cycles, e.g. `&[&[1, 2], &[3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n || std::mem::replace(&mut moved[a - 1], true) {
                    return Err(Error::InvalidPermutation(format!("bad cycle {c:?} on {n} points")));
                }
                images[a - 1] = b - 1;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `self` followed by `other` (points are acted on from the right).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Permutation::identity(self.degree()), |acc, _| acc.then(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }

    /// Cycles (including fixed points) in order of their smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.images[i];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().iter().fold(1u64, |acc, &l| acc.lcm(&(l as u64)))
    }

    /// The action on a subset of points, relabelled `0..points.len()` in the
    /// given order. The subset must be invariant.
    pub fn restrict(&self, points: &[usize]) -> Permutation {
        let mut pos = vec![usize::MAX; self.images.len()];
        for (k, &p) in points.iter().enumerate() {
            pos[p] = k;
        }
        Permutation {
            images: points.iter().map(|&p| pos[self.images[p]]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect();
        if cycles.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", cycles.concat())
        }
    }
}

/// A permutation representation: one permutation of `{1..degree}` per
/// generator of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRep {
    degree: usize,
    images: Vec<Permutation>,
}

/// Outcome of [`validate_rep`]. The witness names the first relator that
/// does not act trivially and a (0-based) point it moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub witness: Option<(usize, usize)>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }
}

impl PermRep {
    pub fn new(degree: usize, images: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = images.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points in a rep of degree {degree}",
                p.degree()
            )));
        }
        Ok(PermRep { degree, images })
    }

    pub fn trivial(degree: usize, num_generators: usize) -> Self {
        PermRep {
            degree,
            images: vec![Permutation::identity(degree); num_generators],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    /// Where point `i` goes under a word, leftmost letter first.
    pub fn act(&self, i: usize, w: &Word) -> usize {
        w.unit_letters().fold(i, |j, (g, e)| {
            if e > 0 {
                self.images[g].apply(j)
            } else {
                self.inverse_apply(g, j)
            }
        })
    }

    fn inverse_apply(&self, g: usize, j: usize) -> usize {
        self.images[g].images().iter().position(|&k| k == j).expect("bijection")
    }

    pub fn image_of_word(&self, w: &Word) -> Permutation {
        w.letters().iter().fold(Permutation::identity(self.degree), |acc, &(g, e)| {
            acc.then(&self.images[g].pow(e))
        })
    }

    /// Orbits of the generated group, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let i = orbit[k];
                k += 1;
                for p in &self.images {
                    let j = p.apply(i);
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbits().len() == 1
    }

    pub fn restrict(&self, points: &[usize]) -> PermRep {
        PermRep {
            degree: points.len(),
            images: self.images.iter().map(|p| p.restrict(points)).collect(),
        }
    }

    /// Elements of the generated group, up to `cap` of them; `None` if the
    /// group is larger.
    pub fn group_elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        let mut elems = vec![Permutation::identity(self.degree)];
        let mut set: std::collections::HashSet<Permutation> = elems.iter().cloned().collect();
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k].clone();
            k += 1;
            for g in &self.images {
                let y = x.then(g);
                if set.insert(y.clone()) {
                    if elems.len() == cap {
                        return None;
                    }
                    elems.push(y);
                }
            }
        }
        Some(elems)
    }
}

/// Checks that every relator acts trivially, words acting on the right.
pub fn validate_rep(p: &Presentation, rep: &PermRep) -> Result<Validation> {
    if rep.images.len() != p.num_generators() {
        return Err(Error::ArityMismatch {
            expected: p.num_generators(),
            found: rep.images.len(),
        });
    }
    for (r, w) in p.relators().iter().enumerate() {
        if let Some(i) = (0..rep.degree).find(|&i| rep.act(i, w) != i) {
            return Ok(Validation {
                witness: Some((r, i)),
            });
        }
    }
    Ok(Validation { witness: None })
}

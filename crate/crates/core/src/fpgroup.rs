//! Words in free groups, finite presentations, and the standard
//! presentations of orbicurve fundamental groups.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A freely reduced word: a list of `(generator, exponent)` syllables with
/// nonzero exponents and no two adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word::power(g, 1)
    }

    pub fn power(g: usize, e: i64) -> Self {
        Word::from_letters([(g, e)])
    }

    /// Builds a word from arbitrary syllables, reducing freely.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut w = Word::empty();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length counted in single letters, i.e. the sum of `|exponent|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Freely reduced concatenation `self · other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..n.unsigned_abs() {
            w = w.multiply(&base);
        }
        w
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u * v * &u.inverse() * &v.inverse()
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by * self * &by.inverse()
    }

    /// Exponent sum of every generator (the image in the free abelian group).
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut sums = vec![0; num_generators];
        for &(g, e) in &self.letters {
            sums[g] += e;
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e != 0)
            && self.letters.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// Iterates over single letters `(generator, ±1)`, leftmost first.
    pub fn unit_letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl Mul<&Word> for Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

/// A distinguished loop around a marked point or divisor component.
///
/// `index` is the declared orbifold index; 0 marks a puncture (or an
/// unassigned index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meridian {
    pub word: Word,
    pub index: u64,
}

/// A finitely presented group with optional marked meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    meridians: Vec<Meridian>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &generators {
            if name.is_empty() {
                return Err(Error::InvalidInput("empty generator name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let p = Presentation {
            generators,
            relators,
            meridians: Vec::new(),
        };
        for w in &p.relators {
            p.check_word(w)?;
        }
        Ok(p)
    }

    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Presentation::new(names.into_iter().map(Into::into).collect(), Vec::new())
    }

    pub fn with_meridians(mut self, meridians: Vec<Meridian>) -> Result<Self> {
        for m in &meridians {
            self.check_word(&m.word)?;
        }
        self.meridians = meridians;
        Ok(self)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.generators.len() => Err(Error::GeneratorOutOfRange {
                index: g,
                count: self.generators.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridians(&self) -> &[Meridian] {
        &self.meridians
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn add_relator(&mut self, w: Word) -> Result<()> {
        self.check_word(&w)?;
        self.relators.push(w);
        Ok(())
    }

    /// Same generators with the relators in a different order or replaced.
    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        Presentation::new(self.generators.clone(), relators)?.with_meridians(self.meridians.clone())
    }

    /// Assigns an index to every marked meridian and appends the relators
    /// `meridianᵐ` for the indices `m ≥ 1`.
    pub fn with_meridian_indices(&self, indices: &[u64]) -> Result<Self> {
        if indices.len() != self.meridians.len() {
            return Err(Error::ArityMismatch {
                expected: self.meridians.len(),
                found: indices.len(),
            });
        }
        let mut out = self.clone();
        for (m, &index) in out.meridians.iter_mut().zip(indices) {
            m.index = index;
            if index >= 1 {
                out.relators.push(m.word.pow(index as i64));
            }
        }
        Ok(out)
    }

    /// Relator exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_generators();
        self.relators.iter().map(|r| r.exponent_sums(n)).collect()
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{}", self.generators[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<_> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// A compact Riemann surface of genus `genus` with `punctures` removed
/// points and cone points of the given indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbicurveSpec {
    pub genus: u32,
    pub punctures: u32,
    pub indices: Vec<u64>,
}

impl OrbicurveSpec {
    pub fn new(genus: u32, punctures: u32, indices: Vec<u64>) -> Result<Self> {
        let spec = OrbicurveSpec {
            genus,
            punctures,
            indices,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn sphere(indices: Vec<u64>) -> Result<Self> {
        OrbicurveSpec::new(0, 0, indices)
    }

    pub fn validate(&self) -> Result<()> {
        match self.indices.iter().find(|&&m| m < 2) {
            Some(m) => Err(Error::InvalidInput(format!("orbifold index {m} is below 2"))),
            None => Ok(()),
        }
    }

    pub fn is_compact(&self) -> bool {
        self.punctures == 0
    }

    pub fn num_generators(&self) -> usize {
        2 * self.genus as usize + self.punctures as usize + self.indices.len()
    }

    pub fn puncture_generator(&self, j: usize) -> usize {
        2 * self.genus as usize + j
    }

    pub fn cone_generator(&self, i: usize) -> usize {
        2 * self.genus as usize + self.punctures as usize + i
    }

    fn generator_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.num_generators());
        for i in 1..=self.genus {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        names.extend((1..=self.punctures).map(|j| format!("p{j}")));
        names.extend((1..=self.indices.len()).map(|i| format!("x{i}")));
        names
    }

    fn surface_relator(&self) -> Word {
        let mut w = Word::empty();
        for i in 0..self.genus as usize {
            w = w * &Word::commutator(&Word::generator(2 * i), &Word::generator(2 * i + 1));
        }
        for g in 2 * self.genus as usize..self.num_generators() {
            w = w * &Word::generator(g);
        }
        w
    }

    fn meridians(&self) -> Vec<Meridian> {
        let punct = (0..self.punctures as usize).map(|j| Meridian {
            word: Word::generator(self.puncture_generator(j)),
            index: 0,
        });
        let cones = self.indices.iter().enumerate().map(|(i, &m)| Meridian {
            word: Word::generator(self.cone_generator(i)),
            index: m,
        });
        punct.chain(cones).collect()
    }

    /// The fundamental group of the complement of all marked points, with
    /// the same generators as [`orbicurve_group`] and no power relators.
    pub fn open_presentation(&self) -> Presentation {
        let mut meridians = self.meridians();
        for m in &mut meridians {
            m.index = 0;
        }
        Presentation::new(self.generator_names(), vec![self.surface_relator()])
            .and_then(|p| p.with_meridians(meridians))
            .expect("orbicurve presentations are well formed")
    }
}

/// Orbifold fundamental group of an orbicurve.
///
/// Generators are `a1, b1, …, ag, bg` (handles), `p1, …, ps` (puncture
/// loops) and `x1, …, xk` (cone point meridians). Relators are `xᵢ^{mᵢ}`
/// followed by the surface relation `∏[aᵢ,bᵢ] · ∏pⱼ · ∏xᵢ`. No generator is
/// eliminated, so there are always `k + 1` relators.
pub fn orbicurve_group(spec: &OrbicurveSpec) -> Presentation {
    let mut relators: Vec<Word> = spec
        .indices
        .iter()
        .enumerate()
        .map(|(i, &m)| Word::power(spec.cone_generator(i), m as i64))
        .collect();
    relators.push(spec.surface_relator());
    Presentation::new(spec.generator_names(), relators)
        .and_then(|p| p.with_meridians(spec.meridians()))
        .expect("orbicurve presentations are well formed")
}

/// Orbifold group of the seven-line arrangement `xyz(x²−z²)(y²−z²)` with
/// every line of index 2.
pub fn seven_line_fixture() -> Presentation {
    let names = ["x1", "x2", "x3", "y1", "y2", "y3", "gz"];
    let x = |i: usize| Word::generator(i);
    let y = |j: usize| Word::generator(3 + j);
    let gz = Word::generator(6);
    let mut relators: Vec<Word> = (0..7).map(|g| Word::power(g, 2)).collect();
    for i in 0..3 {
        for j in 0..3 {
            relators.push(Word::commutator(&x(i), &y(j)));
        }
    }
    let xs = x(0) * &x(1) * &x(2);
    let ys = y(0) * &y(1) * &y(2);
    relators.push(gz.clone() * &xs * &ys);
    let meridians = (0..7)
        .map(|g| Meridian {
            word: Word::generator(g),
            index: 2,
        })
        .collect();
    Presentation::new(names.iter().map(|s| s.to_string()).collect(), relators)
        .and_then(|p| p.with_meridians(meridians))
        .expect("fixture is well formed")
}

/// Presentation of the derived subgroup of [`seven_line_fixture`]:
/// `⟨a1,a2,b1,b2,c | [aᵢ,bⱼ], [a1,a2]c⁻⁴, [b1,b2]c⁻⁴, c central⟩`.
pub fn gprime_fixture() -> Presentation {
    let names = ["a1", "a2", "b1", "b2", "c"];
    let a = |i: usize| Word::generator(i);
    let b = |j: usize| Word::generator(2 + j);
    let c = Word::generator(4);
    let mut relators = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            relators.push(Word::commutator(&a(i), &b(j)));
        }
    }
    relators.push(Word::commutator(&a(0), &a(1)) * &c.pow(-4));
    relators.push(Word::commutator(&b(0), &b(1)) * &c.pow(-4));
    for g in [a(0), a(1), b(0), b(1)] {
        relators.push(Word::commutator(&g, &c));
    }
    Presentation::new(names.iter().map(|s| s.to_string()).collect(), relators)
        .expect("fixture is well formed")
}

use rayon::prelude::*;
use serde::Serialize;

use super::fox::{fox_jacobian, FoxJacobian};
use crate::abelian::{pull_back, Character, GeneratorCharacter, QuotientMap};
use crate::error::{Error, Result};
use crate::fpgroup::Presentation;

/// Depth of a nontrivial character given on the generators of `p`.
pub fn depth(p: &Presentation, xi: &GeneratorCharacter) -> Result<usize> {
    fox_jacobian(p)?.depth(p, xi)
}

/// Number of marked meridians on which the character is nontrivial.
pub fn character_length(p: &Presentation, xi: &GeneratorCharacter) -> usize {
    p.meridians()
        .iter()
        .filter(|m| xi.evaluate_word(&m.word) != 0)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthEntry {
    pub character: Character,
    pub depth: usize,
}

/// Depth of every nontrivial character of the quotient, in enumeration
/// order. Evaluations run on the current rayon pool.
pub fn depth_table(
    p: &Presentation,
    jacobian: &FoxJacobian,
    quotient: &QuotientMap,
) -> Result<Vec<DepthEntry>> {
    quotient.check_homomorphism(p)?;
    let chars: Vec<Character> = quotient.characters(false).collect();
    chars
        .into_par_iter()
        .map(|character| {
            let xi = pull_back(&character, quotient, p)?;
            let depth = jacobian.depth(p, &xi)?;
            Ok(DepthEntry { character, depth })
        })
        .collect()
}

/// Nontrivial characters of the quotient of depth at least `k`.
pub fn charvar(p: &Presentation, quotient: &QuotientMap, k: usize) -> Result<Vec<Character>> {
    if k == 0 {
        return Err(Error::InvalidInput("charvar needs k >= 1".into()));
    }
    let jac = fox_jacobian(p)?;
    Ok(depth_table(p, &jac, quotient)?
        .into_iter()
        .filter(|e| e.depth >= k)
        .map(|e| e.character)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionRow {
    pub character: Character,
    pub depth_orbifold: usize,
    pub depth_open: usize,
    pub in_orbifold: bool,
    pub in_open: bool,
}

impl RestrictionRow {
    pub fn agrees(&self) -> bool {
        self.in_orbifold == self.in_open
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub k: usize,
    pub rows: Vec<RestrictionRow>,
}

impl RestrictionReport {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| !r.agrees()).count()
    }
}

/// Compares depths of the characters of `quotient` on an orbifold group and
/// on the open group it is a quotient of. Generators are matched by name and
/// must agree in order. Purely diagnostic: no equality is asserted.
pub fn restriction_report(
    p_orb: &Presentation,
    p_open: &Presentation,
    quotient: &QuotientMap,
    k: usize,
) -> Result<RestrictionReport> {
    if p_orb.generators() != p_open.generators() {
        return Err(Error::GeneratorMatching(format!(
            "orbifold generators {:?} differ from open generators {:?}",
            p_orb.generators(),
            p_open.generators()
        )));
    }
    let orb = depth_table(p_orb, &fox_jacobian(p_orb)?, quotient)?;
    let open = depth_table(p_open, &fox_jacobian(p_open)?, quotient)?;
    let rows = orb
        .into_iter()
        .zip(open)
        .map(|(a, b)| RestrictionRow {
            in_orbifold: a.depth >= k,
            in_open: b.depth >= k,
            depth_orbifold: a.depth,
            depth_open: b.depth,
            character: a.character,
        })
        .collect();
    Ok(RestrictionReport { k, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::h1;
    use crate::fpgroup::{orbicurve_group, OrbicurveSpec, Word};

    fn ab(p: &Presentation) -> QuotientMap {
        QuotientMap::abelianization(&h1(p).unwrap()).unwrap()
    }

    /// `⟨x₁,x₂ | x₁^d, x₂^d, (x₁x₂)^d⟩`, the third generator eliminated.
    fn triangle(d: i64) -> Presentation {
        let x12 = Word::generator(0) * &Word::generator(1);
        Presentation::new(
            vec!["x1".into(), "x2".into()],
            vec![Word::power(0, d), Word::power(1, d), x12.pow(d)],
        )
        .unwrap()
    }

    #[test]
    fn triangle_group_depths() {
        for d in [3, 5] {
            let p = triangle(d);
            let full = GeneratorCharacter::new(d as u64, vec![1, 1]).unwrap();
            assert_eq!(depth(&p, &full).unwrap(), 1);
            let short = GeneratorCharacter::new(d as u64, vec![1, -1]).unwrap();
            assert_eq!(depth(&p, &short).unwrap(), 0);
        }
    }

    #[test]
    fn free_group_depth() {
        let p = Presentation::free(["x1", "x2"]).unwrap();
        let xi = GeneratorCharacter::new(5, vec![2, 0]).unwrap();
        assert_eq!(depth(&p, &xi).unwrap(), 1);
    }

    #[test]
    fn torus_double_cover() {
        let p = orbicurve_group(&OrbicurveSpec::new(1, 0, vec![]).unwrap());
        let xi = GeneratorCharacter::new(2, vec![1, 0]).unwrap();
        assert_eq!(depth(&p, &xi).unwrap(), 0);
    }

    #[test]
    fn charvar_236() {
        let p = orbicurve_group(&OrbicurveSpec::sphere(vec![2, 3, 6]).unwrap());
        let q = ab(&p);
        let c1 = charvar(&p, &q, 1).unwrap();
        assert_eq!(c1.len(), 2);
        for c in &c1 {
            let xi = pull_back(c, &q, &p).unwrap();
            assert_eq!(character_length(&p, &xi), 3);
        }
        assert!(charvar(&p, &q, 2).unwrap().is_empty());
        assert!(charvar(&p, &q, 4).unwrap().is_empty());
    }

    #[test]
    fn restriction_222_against_open() {
        let spec = OrbicurveSpec::sphere(vec![2, 2, 2]).unwrap();
        let p = orbicurve_group(&spec);
        let q = ab(&p);
        let r = restriction_report(&p, &spec.open_presentation(), &q, 1).unwrap();
        assert_eq!(r.rows.len(), 3);
        for row in &r.rows {
            assert_eq!(row.depth_orbifold, 0);
            assert_eq!(row.depth_open, 1);
        }
        assert_eq!(r.disagreements(), 3);
        let same = restriction_report(&p, &p, &q, 1).unwrap();
        assert_eq!(same.disagreements(), 0);
    }

    #[test]
    fn restriction_needs_matching_generators() {
        let p = orbicurve_group(&OrbicurveSpec::sphere(vec![2, 2, 2]).unwrap());
        let other = Presentation::free(["y1", "y2", "y3"]).unwrap();
        assert!(matches!(
            restriction_report(&p, &other, &ab(&p), 1),
            Err(Error::GeneratorMatching(_))
        ));
    }
}

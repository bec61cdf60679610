use num_bigint::BigInt;
use num_rational::BigRational;

use orbikit::abelian::{abelian_invariants, h1, QuotientMap};
use orbikit::alexander::{character_length, charvar, fox_jacobian};
use orbikit::covers::{analyze_cover, analyze_fiber_data, reidemeister_schreier, DEFAULT_COSET_LIMIT};
use orbikit::fixtures::{
    ceva_depth_sum, fixture_fibers, fixture_indices, fixture_orbicurve, fixture_presentation,
    fixture_rep,
};
use orbikit::fpgroup::{orbicurve_group, OrbicurveSpec};
use orbikit::sakuma::{abelian_cover_genus, b1_by_length_count, sakuma_b1, AbelianCoverSpec};

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn seven_line_derived_subgroup() {
    let p = fixture_presentation("seven-line").unwrap();
    let a = h1(&p).unwrap();
    assert_eq!(a.to_string(), "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2");
    let cover = AbelianCoverSpec::new(p.clone(), QuotientMap::abelianization(&a).unwrap()).unwrap();
    let rep = cover.regular_rep();
    assert_eq!(rep.degree(), 64);
    let sub = reidemeister_schreier(&p, &rep, 0, DEFAULT_COSET_LIMIT).unwrap();
    assert_eq!(sub.num_generators(), 64 * 7 - 63);
    let got = abelian_invariants(&sub).unwrap();
    let expected = abelian_invariants(&fixture_presentation("seven-line-derived").unwrap()).unwrap();
    assert_eq!(got.to_string(), "Z^4 + Z/4");
    assert_eq!(got, expected);
}

#[test]
fn ceva_counts() {
    for n in 2..=5u64 {
        assert_eq!(ceva_depth_sum(n).unwrap() as u64, 5 * (n - 1) * (n - 2), "n = {n}");
    }
}

#[test]
fn icosahedral_cover() {
    let spec = fixture_orbicurve("p1-235").unwrap();
    let (_, rep) = fixture_rep("icosahedral5").unwrap();
    let r = &analyze_cover(&spec, &rep).unwrap()[0];
    assert_eq!(r.degree, 5);
    assert_eq!(r.cover_spec(), OrbicurveSpec::sphere(vec![2, 3, 3]).unwrap());
    assert_eq!(r.euler_orb_upstairs, q(1, 6));
    assert!(!r.flags.uniformization);
    assert!(!r.flags.regular);
}

#[test]
fn elliptic_cover() {
    let spec = fixture_orbicurve("elliptic").unwrap();
    let (_, rep) = fixture_rep("elliptic-sigma4").unwrap();
    let r = &analyze_cover(&spec, &rep).unwrap()[0];
    assert_eq!((r.degree, r.genus_upstairs), (4, 3));
    assert!(r.cover_spec().indices.is_empty());
    assert!(r.flags.virtually_regular);
    assert!(r.flags.uniformization);
    assert!(!r.flags.regular);
    assert_eq!(r.image_order, None);
    assert_eq!(r.euler_orb_upstairs, q(-4, 1));
}

#[test]
fn degree_six_map_source() {
    let r = analyze_fiber_data(&fixture_fibers("degree6-map").unwrap()).unwrap();
    assert_eq!(r.source, OrbicurveSpec::sphere(vec![2; 6]).unwrap());
    assert_eq!(r.target, OrbicurveSpec::sphere(vec![3, 2, 2, 2]).unwrap());
    assert_eq!(r.stated_source_consistent, Some(false));
}

#[test]
fn p1_236_end_to_end() {
    let spec = fixture_orbicurve("p1-236").unwrap();
    let p = orbicurve_group(&spec);
    let a = h1(&p).unwrap();
    assert_eq!(a.to_string(), "Z/6");
    let qm = QuotientMap::abelianization(&a).unwrap();
    let report = sakuma_b1(&AbelianCoverSpec::new(p.clone(), qm.clone()).unwrap(), true, 1000).unwrap();
    assert_eq!(report.b1_cover, 2);
    assert_eq!(report.oracle_b1, Some(2));
    let g = abelian_cover_genus(&spec).unwrap();
    assert_eq!((g.degree, g.genus), (6, 1));
    assert_eq!(g.variant_genus, q(4, 1));
    assert_eq!(2 * g.genus as usize, report.b1_cover);
    for c in charvar(&p, &qm, 1).unwrap() {
        let xi = orbikit::abelian::pull_back(&c, &qm, &p).unwrap();
        assert_eq!(character_length(&p, &xi), 3);
    }
}

/// The genus of the abelianization cover agrees with half of b₁ computed
/// by three independent routes.
#[test]
fn namba_family_genus_matches_betti() {
    for idx in fixture_indices("namba-family").unwrap() {
        let spec = OrbicurveSpec::sphere(idx.clone()).unwrap();
        let g = abelian_cover_genus(&spec).unwrap();
        let p = orbicurve_group(&spec);
        let a = h1(&p).unwrap();
        assert_eq!(a.order(), Some(g.degree), "{idx:?}");
        let report = sakuma_b1(
            &AbelianCoverSpec::new(p, QuotientMap::abelianization(&a).unwrap()).unwrap(),
            true,
            DEFAULT_COSET_LIMIT,
        )
        .unwrap();
        assert_eq!(report.b1_cover as u64, 2 * g.genus, "{idx:?}");
        assert_eq!(report.oracle_b1, Some(report.b1_cover), "{idx:?}");
        assert_eq!(b1_by_length_count(&idx), 2 * g.genus, "{idx:?}");
    }
}

#[test]
fn fox_identity_on_fixtures() {
    for name in ["seven-line", "seven-line-derived", "ceva"] {
        let p = fixture_presentation(name).unwrap();
        fox_jacobian(&p).unwrap().check_fundamental_identity().unwrap();
    }
    let ceva3 = fixture_presentation("ceva").unwrap().with_meridian_indices(&[3; 6]).unwrap();
    fox_jacobian(&ceva3).unwrap().check_fundamental_identity().unwrap();
}

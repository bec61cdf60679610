use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbikit::abelian::{abelian_invariants, h1, smith_normal_form, QuotientMap};
use orbikit::alexander::{charvar, depth, depth_table, fox_jacobian};
use orbikit::covers::{analyze_cover, CoverReport, euler_orb, reidemeister_schreier, PermRep, Permutation};
use orbikit::cyclotomic::{cyclotomic_level, rank_over_cyclotomic, rank_over_cyclotomic_integers};
use orbikit::fpgroup::{orbicurve_group, OrbicurveSpec, Presentation, Word};
use orbikit::io::{from_json, to_json, PresentationDoc, QuotientDoc, RepDoc};
use orbikit::sakuma::{sakuma_b1, AbelianCoverSpec};
use orbikit::{CycloField, CycloInt, IntMatrix};

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=12, 1usize..=12).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_normal_form_invariants(rows in matrix_strategy()) {
        let cols = rows[0].len();
        let a = IntMatrix::from_i64_rows(&rows, cols);
        let f = smith_normal_form(&a);
        prop_assert_eq!(f.u.mul(&a).mul(&f.v), f.s.clone());
        prop_assert!(f.u.determinant().abs().is_one());
        prop_assert!(f.v.determinant().abs().is_one());
        for i in 0..f.s.rows() {
            for j in 0..f.s.cols() {
                if i != j {
                    prop_assert!(f.s[(i, j)].is_zero());
                }
            }
        }
        let d = f.diagonal();
        prop_assert!(d.iter().all(|x| !x.is_negative()));
        for w in d.windows(2) {
            prop_assert!(
                w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()),
                "divisibility fails: {:?}", d
            );
        }
    }
}

fn cyclo_strategy(max_level: u64) -> impl Strategy<Value = (u64, Vec<Vec<i64>>)> {
    (1..=max_level).prop_flat_map(|n| {
        let deg = cyclotomic_level(n).unwrap().degree();
        (Just(n), prop::collection::vec(prop::collection::vec(-5i64..=5, deg), 3))
    })
}

fn field_elem(n: u64, c: &[i64]) -> CycloField {
    let level = cyclotomic_level(n).unwrap();
    CycloField::from_coeffs(&level, c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cyclotomic_field_axioms((n, cs) in cyclo_strategy(30)) {
        let (a, b, c) = (field_elem(n, &cs[0]), field_elem(n, &cs[1]), field_elem(n, &cs[2]));
        let level = a.level_data().clone();
        let (zero, one) = (CycloField::zero(&level), CycloField::one(&level));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn rank_is_invariant_under_row_operations(
        (n, cs) in (2u64..=12).prop_flat_map(|n| {
            let deg = cyclotomic_level(n).unwrap().degree();
            (Just(n), prop::collection::vec(prop::collection::vec(-2i64..=2, deg), 9))
        }),
        seed in any::<u64>(),
    ) {
        let level = cyclotomic_level(n).unwrap();
        let elem = |c: &[i64]| CycloInt::from_coeffs(&level, c.iter().map(|&x| BigInt::from(x)).collect());
        let mut rows: Vec<Vec<CycloInt>> = cs.chunks(3).map(|r| r.iter().map(|c| elem(c)).collect()).collect();
        let r0 = rank_over_cyclotomic(&rows).unwrap();
        prop_assert_eq!(rank_over_cyclotomic_integers(&rows).unwrap(), r0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rows.shuffle(&mut rng);
        // Scale a row by a root of unity and add a multiple of it to another.
        let u = CycloInt::root_in(&level, rng.gen_range(0..n as i64));
        rows[0] = rows[0].iter().map(|x| &u * x).collect();
        let f = CycloInt::root_in(&level, 1);
        let add: Vec<CycloInt> = rows[0].iter().zip(&rows[1]).map(|(a, b)| &(&f * a) + b).collect();
        rows[1] = add;
        // An extra dependent row does not change the rank.
        let extra: Vec<CycloInt> = rows[0].iter().zip(&rows[2]).map(|(a, b)| a + b).collect();
        rows.push(extra);
        prop_assert_eq!(rank_over_cyclotomic_integers(&rows).unwrap(), r0);
    }
}

#[test]
fn zeta_is_a_root_of_its_cyclotomic_polynomial() {
    for n in 1..=60 {
        let z = CycloInt::root(n, 1).unwrap();
        let phi = z.level_data().phi().to_vec();
        assert!(z.eval_poly(&phi).is_zero(), "level {n}");
        let zq = CycloField::root(n, 1).unwrap();
        assert!(zq.eval_poly(&phi).is_zero(), "level {n}");
    }
}

fn orbicurve_strategy(max_points: usize, max_index: u64) -> impl Strategy<Value = OrbicurveSpec> {
    (0u32..=2, 0u32..=2, prop::collection::vec(2..=max_index, 0..=max_points))
        .prop_map(|(g, s, idx)| OrbicurveSpec::new(g, s, idx).unwrap())
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| (rng.gen_range(0..gens), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fox_identity_on_orbicurves(spec in orbicurve_strategy(4, 7)) {
        let p = orbicurve_group(&spec);
        fox_jacobian(&p).unwrap().check_fundamental_identity().unwrap();
    }

    #[test]
    fn fox_identity_on_random_presentations(seed in any::<u64>(), gens in 1usize..=4, rels in 0usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let relators = (0..rels).map(|_| {
            let len = rng.gen_range(1..=10);
            random_word(&mut rng, gens, len)
        }).collect();
        let names = (1..=gens).map(|i| format!("g{i}")).collect();
        let p = Presentation::new(names, relators).unwrap();
        fox_jacobian(&p).unwrap().check_fundamental_identity().unwrap();
    }

    #[test]
    fn depth_is_invariant_under_relator_moves(
        idx in prop::collection::vec(2u64..=5, 3..=4),
        seed in any::<u64>(),
    ) {
        let p = orbicurve_group(&OrbicurveSpec::sphere(idx).unwrap());
        let q = QuotientMap::abelianization(&h1(&p).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rels = p.relators().to_vec();
        rels.shuffle(&mut rng);
        let k = rng.gen_range(0..rels.len());
        let len = rng.gen_range(1..=4);
        let by = random_word(&mut rng, p.num_generators(), len);
        rels[k] = rels[k].conjugate(&by);
        let p2 = p.with_relators(rels).unwrap();
        for c in q.characters(false) {
            let xi = orbikit::abelian::pull_back(&c, &q, &p).unwrap();
            prop_assert_eq!(depth(&p, &xi).unwrap(), depth(&p2, &xi).unwrap());
        }
    }

    #[test]
    fn characteristic_varieties_are_nested(spec in orbicurve_strategy(4, 4)) {
        let spec = OrbicurveSpec { punctures: 0, ..spec };
        let p = orbicurve_group(&spec);
        let a = h1(&p).unwrap();
        prop_assume!(a.is_finite() && a.order().unwrap() <= 128);
        let q = QuotientMap::abelianization(&a).unwrap();
        let mut prev = charvar(&p, &q, 1).unwrap();
        for k in 2..=p.num_generators() + 1 {
            let cur = charvar(&p, &q, k).unwrap();
            prop_assert!(cur.iter().all(|c| prev.contains(c)));
            prev = cur;
        }
        prop_assert!(prev.is_empty());
    }

    #[test]
    fn sakuma_is_invariant_under_permuting_cone_points(
        idx in prop::collection::vec(2u64..=4, 3..=4),
        seed in any::<u64>(),
    ) {
        let b1 = |v: Vec<u64>| {
            let p = orbicurve_group(&OrbicurveSpec::sphere(v).unwrap());
            let q = QuotientMap::abelianization(&h1(&p).unwrap()).unwrap();
            sakuma_b1(&AbelianCoverSpec::new(p, q).unwrap(), false, 0).unwrap().b1_cover
        };
        let mut shuffled = idx.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(b1(idx), b1(shuffled));
    }
}

/// A random permutation whose cycle lengths all divide `m`.
fn random_perm_of_exponent(rng: &mut ChaCha8Rng, n: usize, m: u64) -> Permutation {
    let divisors: Vec<usize> = (1..=n).filter(|&d| m.is_multiple_of(d as u64)).collect();
    let mut points: Vec<usize> = (1..=n).collect();
    points.shuffle(rng);
    let mut cycles = Vec::new();
    let mut rest = &points[..];
    while !rest.is_empty() {
        let fit: Vec<usize> = divisors.iter().copied().filter(|&d| d <= rest.len()).collect();
        let len = *fit.choose(rng).unwrap();
        cycles.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(n, &refs).unwrap()
}

/// A random rep of an orbicurve group with at least one puncture: the first
/// puncture loop is solved from the surface relation.
fn random_punctured_rep(rng: &mut ChaCha8Rng, spec: &OrbicurveSpec, n: usize) -> PermRep {
    let p = orbicurve_group(spec);
    let mut images: Vec<Permutation> = (0..spec.num_generators())
        .map(|_| {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            Permutation::new(v).unwrap()
        })
        .collect();
    for (i, &m) in spec.indices.iter().enumerate() {
        images[spec.cone_generator(i)] = random_perm_of_exponent(rng, n, m);
    }
    let p1 = spec.puncture_generator(0);
    let rel = &p.relators()[spec.indices.len()];
    let pos = rel.letters().iter().position(|&(g, _)| g == p1).unwrap();
    let before = Word::from_letters(rel.letters()[..pos].iter().copied());
    let after = Word::from_letters(rel.letters()[pos + 1..].iter().copied());
    let tmp = PermRep::new(n, images.clone()).unwrap();
    images[p1] = tmp.image_of_word(&before).inverse().then(&tmp.image_of_word(&after).inverse());
    PermRep::new(n, images).unwrap()
}

/// A regular cover sends every meridian to a product of equal-length
/// cycles. Together with uniformization this is virtual regularity.
fn check_flags(p: &Presentation, rep: &PermRep, r: &CoverReport) -> Result<(), TestCaseError> {
    if !r.flags.regular {
        return Ok(());
    }
    let points: Vec<usize> = r.orbit.iter().map(|i| i - 1).collect();
    let sub = rep.restrict(&points);
    for m in p.meridians() {
        let lens = sub.image_of_word(&m.word).cycle_lengths();
        prop_assert!(lens.windows(2).all(|w| w[0] == w[1]), "{:?}", lens);
    }
    if r.flags.uniformization {
        prop_assert!(r.flags.virtually_regular);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_characteristic_is_multiplicative(
        g in 0u32..=2,
        s in 1u32..=2,
        idx in prop::collection::vec(2u64..=6, 0..=3),
        n in 1usize..=7,
        seed in any::<u64>(),
    ) {
        let spec = OrbicurveSpec::new(g, s, idx).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_punctured_rep(&mut rng, &spec, n);
        let p = orbicurve_group(&spec);
        let reports = analyze_cover(&spec, &rep).unwrap();
        let total: usize = reports.iter().map(|r| r.degree).sum();
        prop_assert_eq!(total, n);
        for r in &reports {
            let expected = euler_orb(&spec) * BigRational::from_integer(BigInt::from(r.degree));
            prop_assert_eq!(&r.euler_orb_upstairs, &expected);
            prop_assert_eq!(euler_orb(&r.cover_spec()), expected);
            check_flags(&p, &rep, r)?;
            prop_assert!(r.flags.valid_unbranched);
        }
    }

    #[test]
    fn sphere_reps_by_rejection(
        idx in prop::collection::vec(2u64..=5, 3..=4),
        n in 2usize..=6,
        seed in any::<u64>(),
    ) {
        let spec = OrbicurveSpec::sphere(idx.clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = idx.len();
        let mut found = None;
        for _ in 0..200 {
            let mut images: Vec<Permutation> =
                idx[..k - 1].iter().map(|&m| random_perm_of_exponent(&mut rng, n, m)).collect();
            let prod = images.iter().fold(Permutation::identity(n), |acc, x| acc.then(x));
            let last = prod.inverse();
            if idx[k - 1] % last.order() == 0 {
                images.push(last);
                found = Some(PermRep::new(n, images).unwrap());
                break;
            }
        }
        prop_assume!(found.is_some());
        let rep = found.unwrap();
        let p = orbicurve_group(&spec);
        for r in analyze_cover(&spec, &rep).unwrap() {
            let expected = euler_orb(&spec) * BigRational::from_integer(BigInt::from(r.degree));
            prop_assert_eq!(&r.euler_orb_upstairs, &expected);
            check_flags(&p, &rep, &r)?;
        }
    }

    #[test]
    fn nielsen_schreier_rank(r in 1usize..=4, n in 1usize..=8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let names: Vec<String> = (1..=r).map(|i| format!("f{i}")).collect();
        let p = Presentation::free(names).unwrap();
        // A cycle through all points keeps the action transitive.
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut cyc = vec![0; n];
        for i in 0..n {
            cyc[order[i]] = order[(i + 1) % n];
        }
        let mut images = vec![Permutation::new(cyc).unwrap()];
        for _ in 1..r {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            images.push(Permutation::new(v).unwrap());
        }
        let rep = PermRep::new(n, images).unwrap();
        let sub = reidemeister_schreier(&p, &rep, rng.gen_range(0..n), 100).unwrap();
        prop_assert_eq!(sub.num_generators(), n * (r - 1) + 1);
        prop_assert_eq!(abelian_invariants(&sub).unwrap().free_rank, n * (r - 1) + 1);
    }

    #[test]
    fn documents_round_trip(spec in orbicurve_strategy(4, 6), n in 1usize..=5, seed in any::<u64>()) {
        let spec = OrbicurveSpec { punctures: spec.punctures.max(1), ..spec };
        let p = orbicurve_group(&spec);
        let doc = PresentationDoc::from_presentation(&p);
        let back: PresentationDoc = from_json(&to_json(&doc)).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_presentation().unwrap(), p.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_punctured_rep(&mut rng, &spec, n);
        let rdoc = RepDoc::from_rep(&p, &rep);
        let rback: RepDoc = from_json(&to_json(&rdoc)).unwrap();
        prop_assert_eq!(&rback, &rdoc);
        prop_assert_eq!(rback.to_rep(&p).unwrap(), rep);
        let a = h1(&p).unwrap();
        let q = QuotientMap::new(
            vec![6; a.dimension()],
            vec![vec![0; a.dimension()]; p.num_generators()],
        ).unwrap();
        let qdoc = QuotientDoc::from_quotient(&p, &q);
        let qback: QuotientDoc = from_json(&to_json(&qdoc)).unwrap();
        prop_assert_eq!(&qback, &qdoc);
        prop_assert_eq!(qback.to_quotient(&p).unwrap(), q);
    }
}

#[test]
fn depth_table_is_deterministic_across_pools() {
    let p = orbicurve_group(&OrbicurveSpec::sphere(vec![3, 3, 3, 3]).unwrap());
    let q = QuotientMap::abelianization(&h1(&p).unwrap()).unwrap();
    let jac = fox_jacobian(&p).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| depth_table(&p, &jac, &q).unwrap())
    };
    let one = run(1);
    assert_eq!(one.len(), 26);
    assert_eq!(run(4), one);
}

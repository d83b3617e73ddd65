mod common;

use common::*;
use mgauss_core::diagrams::*;
use mgauss_core::presentations::*;
use mgauss_core::realization::*;
use mgauss_core::words::{Generator, Word};
use mgauss_core::Error;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn v() -> Word {
    Word::v(1)
}

fn x(i: u32) -> Word {
    Word::x(i)
}

fn chain(ws: &[Word]) -> Presentation {
    let names = (1..=ws.len()).map(|i| format!("x{i}")).collect();
    chain_presentation(names, "v1".into(), ws).unwrap()
}

fn images_commute(p: &Presentation, g: &FiniteGroup, a: &Word, b: &Word) -> bool {
    commute_in_quotient(p, g, a, b, DEFAULT_SEARCH_LIMIT).unwrap() == Some(true)
}

/// Every homomorphism `Π_D -> g` sends `a` and `b` to the same element.
fn equal_in_quotient(p: &Presentation, g: &FiniteGroup, a: &Word, b: &Word) -> bool {
    let ctx = p.context();
    let mut ok = true;
    for_each_hom(p, g, DEFAULT_SEARCH_LIMIT, &mut |img| {
        ok = evaluate(g, ctx, img, a) == evaluate(g, ctx, img, b);
        ok
    })
    .unwrap();
    ok
}

#[test]
fn realize_single_node() {
    let rp = RealizablePresentation::new(chain(&[v().inverse()])).unwrap();
    let d = realize(&rp);
    assert_eq!(d.to_string(), "circle 1: N-");
}

#[test]
fn realize_single_chord() {
    let p = chain(&[v().inverse().mul(&x(2)), v()]);
    let rp = RealizablePresentation::new(p.clone()).unwrap();
    let d = realize(&rp);
    assert_eq!(d.to_string(), "circle 1: H1+ T1+");
    assert_eq!(presentation_of_diagram(&d).relators(), p.relators());
}

#[test]
fn realizable_conditions_are_enforced() {
    // Head without a matching tail sign.
    assert!(RealizablePresentation::new(chain(&[v().inverse().mul(&x(2)), v().inverse()])).is_err());
    // Two heads on one tail.
    let w = v().inverse().mul(&x(3));
    assert!(RealizablePresentation::new(chain(&[w.clone(), w, v()])).is_err());
    // Longer conjugator.
    assert!(RealizablePresentation::new(chain(&[v().pow(2)])).is_err());
}

#[test]
fn already_cyclic_is_unchanged() {
    let p = chain(&[v().mul(&x(2)), v().inverse()]);
    assert_eq!(to_cyclic(&p).unwrap(), p);
    let q = chain(&[v(), v().inverse(), v()]);
    assert_eq!(to_realizable(&q).unwrap().presentation(), &q);
}

#[test]
fn deficiency_two_gets_a_duplicated_edge() {
    let p = Presentation::with_default_names(2, 1, vec![x(2).inverse().mul(&x(1).conj_by(&v()))]).unwrap();
    let c = to_cyclic(&p).unwrap();
    assert_eq!(c.relators().len(), 2);
    assert_eq!(cyclic_chain(&c).unwrap(), vec![v(), v().inverse()]);
    assert_eq!(c.deficiency(), 1);
}

#[test]
fn path_graph_becomes_a_cycle() {
    let s3 = FiniteGroup::symmetric(3);
    let p = Presentation::with_default_names(
        3,
        1,
        vec![x(2).inverse().mul(&x(1).conj_by(&v().mul(&x(3)))), x(3).inverse().mul(&x(2).conj_by(&x(1)))],
    )
    .unwrap();
    let c = to_cyclic(&p).unwrap();
    assert_eq!(cyclic_chain(&c).map(|w| w.len()), Some(3));
    assert_eq!(hom_count(&p, &s3).unwrap(), hom_count(&c, &s3).unwrap());
    assert_eq!(abelianization(&p), abelianization(&c));
}

#[test]
fn to_cyclic_rejects_bad_input() {
    let two_v = Presentation::with_default_names(1, 2, vec![]).unwrap();
    assert!(matches!(to_cyclic(&two_v), Err(Error::Precondition(_))));
    let disconnected = Presentation::with_default_names(2, 1, vec![]).unwrap();
    assert!(matches!(to_cyclic(&disconnected), Err(Error::Precondition(_))));
    let not_c = Presentation::with_default_names(1, 1, vec![x(1).pow(2)]).unwrap();
    assert!(matches!(to_cyclic(&not_c), Err(Error::Precondition(_))));
}

#[test]
fn step_two_display() {
    // w_1 = x_2 on the chain x1 -> x2 -> x1 with w_2 = v.
    let p = chain(&[x(2), v()]);
    let r = to_realizable_mapped(&p).unwrap();
    let q = r.presentation.presentation();
    assert_eq!(q.x_names(), &["x1", "x5", "x2", "x3", "x4"]);
    let ws = cyclic_chain(q).unwrap();
    // x1 -v-> X_1 -(v^-1 x2)-> x2 -v-> x_{2,1} -v^-1-> x_{2,2} -v-> x1
    assert_eq!(ws, vec![v(), v().inverse().mul(&x(3)), v(), v().inverse(), v()]);
    assert_eq!(r.x_map, vec![1, 3]);
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(hom_count(&p, &s3).unwrap(), hom_count(q, &s3).unwrap());
}

#[test]
fn step_one_splits_long_conjugators() {
    // w_1 = x4 x3 v^-1 on a 4-chain.
    let p = chain(&[x(4).mul(&x(3)).mul(&v().inverse()), v(), v(), v()]);
    let s3 = FiniteGroup::symmetric(3);
    let r = to_realizable_mapped(&p).unwrap();
    let q = r.presentation.presentation();
    assert_eq!(abelianization(&p), abelianization(q));
    assert_eq!(hom_count(&p, &s3).unwrap(), hom_count(q, &s3).unwrap());
    for (i, w) in r.exprs.iter().enumerate() {
        // Every new generator is conjugate to an old one.
        assert_eq!((1..=4).map(|k| w.exponent_sum(Generator::x(k))).sum::<i64>(), 1, "x{}", i + 1);
    }
}

#[test]
fn self_conjugation_is_erased() {
    let p = chain(&[x(1).mul(&v())]);
    assert_eq!(cyclic_chain(&p).unwrap(), vec![v()]);
    let q = chain(&[Word::identity()]);
    let r = to_realizable(&q).unwrap();
    assert_eq!(realize(&r).to_string(), "circle 1: N+ N-");
}

#[test]
fn trivial_and_node_longitudes() {
    let t = MarkedGaussDiagram::trivial(1);
    let pair = meridian_longitude(&t, 0).unwrap();
    assert_eq!((pair.meridian, pair.longitude), (x(1), Word::identity()));
    let d1 = realize(&RealizablePresentation::new(chain(&[v().inverse()])).unwrap());
    assert_eq!(meridian_longitude(&d1, 0).unwrap().longitude, v().inverse());
}

#[test]
fn peripheral_examples() {
    let free = Presentation::with_default_names(2, 1, vec![]).unwrap();
    let bad = PeripheralPair { meridian: x(1), longitude: x(2) };
    let report = check_peripheral(&free, &bad).unwrap();
    assert!(!report.passed());
    assert_eq!(report.quotients[0].commute, Some(false));
    for k in -2..=3 {
        let pair = PeripheralPair { meridian: x(1), longitude: x(1).pow(k) };
        assert!(check_peripheral(&free, &pair).unwrap().passed());
    }
}

#[test]
fn realize_with_trivial_longitude() {
    let p = Presentation::with_default_names(1, 1, vec![]).unwrap();
    let out = realize_with_peripheral(&p, &Word::identity(), &Word::identity()).unwrap();
    let pd = presentation_of_diagram(&out.diagram);
    let s3 = FiniteGroup::symmetric(3);
    assert!(equal_in_quotient(&pd, &s3, &out.pair.longitude, &Word::identity()));
    assert_eq!(hom_count(&pd, &s3).unwrap(), 36);
}

#[test]
fn realize_with_peripheral_preconditions() {
    let p = Presentation::with_default_names(2, 1, vec![x(2).inverse().mul(&x(1).conj_by(&v()))]).unwrap();
    assert!(matches!(realize_with_peripheral(&p, &Word::identity(), &x(2)), Err(Error::Precondition(_))));
    // The group is free on x1, v and x2 = x1^v, so x2 x1^-1 does not commute with x1.
    assert!(matches!(
        realize_with_peripheral(&p, &Word::identity(), &x(2).mul(&x(1).inverse())),
        Err(Error::Refuted(_))
    ));
    let out = realize_with_peripheral(&p, &Word::identity(), &v().mul(&v().inverse())).unwrap();
    let pd = presentation_of_diagram(&out.diagram);
    assert!(check_peripheral(&pd, &out.pair).unwrap().passed());
    assert!(!out.warnings.is_empty());
}

#[test]
fn non_commuting_longitude_is_refuted() {
    // Both groups are free on x1, v, so v^2 does not commute with x1.
    let l = v().pow(2);
    let q = Presentation::with_default_names(2, 1, vec![x(2).inverse().mul(&x(1).conj_by(&x(2)))]).unwrap();
    assert!(matches!(realize_with_peripheral(&q, &Word::identity(), &l), Err(Error::Refuted(_))));
    let m = Presentation::with_default_names(1, 1, vec![]).unwrap();
    assert!(matches!(realize_with_peripheral(&m, &Word::identity(), &l), Err(Error::Refuted(_))));
}

#[test]
fn homomorph_in_s3() {
    let s3 = FiniteGroup::symmetric(3);
    // (1 2) and (1 2 3) in the lexicographic listing of S_3.
    let mu = 2u32;
    let nu = 3u32;
    let ws = vec![v(), v(), v()];
    let mus = [mu, s3.conj(mu, nu), s3.conj(s3.conj(mu, nu), nu)];
    let out = realize_homomorph(&ws, Some((&s3, &mus, nu))).unwrap();
    assert_eq!(out.diagram.to_string(), "circle 1: N+ N+ N+");
    assert!(out.images.is_some());
    let bad = [mu, mu, mu];
    assert!(matches!(realize_homomorph(&ws, Some((&s3, &bad, nu))), Err(Error::Refuted(_))));
}

#[test]
fn homomorph_single_node() {
    let s3 = FiniteGroup::symmetric(3);
    for mu in 0..6u32 {
        for nu in 0..6u32 {
            let r = realize_homomorph(&[v()], Some((&s3, &[mu], nu)));
            assert_eq!(r.is_ok(), s3.commute(mu, nu));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pipeline_preserves_the_group(seed in any::<u64>()) {
        let s3 = FiniteGroup::symmetric(3);
        let s4 = FiniteGroup::symmetric(4);
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_c1_presentation(&mut rng, 3, 2);
        let c = to_cyclic(&p).unwrap();
        let rp = to_realizable(&c).unwrap();
        let d = realize(&rp);
        let pd = presentation_of_diagram(&d);
        prop_assert_eq!(pd.relators(), rp.presentation().relators());
        let want = fingerprint(&p, &s3, &s4);
        prop_assert_eq!(&fingerprint(&c, &s3, &s4), &want);
        prop_assert_eq!(&fingerprint(&simplify(&pd), &s3, &s4), &want);
    }

    #[test]
    fn realized_longitudes_are_chain_products(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_c1_presentation(&mut rng, 3, 2);
        let rp = to_realizable(&to_cyclic(&p).unwrap()).unwrap();
        let d = realize(&rp);
        let pair = meridian_longitude(&d, 0).unwrap();
        let ws = rp.conjugators();
        let alpha = longitude_alpha(&d, 0);
        prop_assert_eq!(&pair.longitude, &Word::product(ws.iter()).mul(&x(1).pow(-alpha)));
        let pd = presentation_of_diagram(&d);
        let groups: Vec<_> = small_symmetric_groups().into_iter().take(2).collect();
        let report = check_peripheral_with(&pd, &pair, &groups, DEFAULT_SEARCH_LIMIT).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn longitudes_at_every_arc_commute(seed in any::<u64>()) {
        let s3 = FiniteGroup::symmetric(3);
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 1, 3, 2);
        let p = presentation_of_diagram(&d);
        let arc = rng.gen_range(0..d.arc_count());
        let pair = meridian_longitude(&d, arc).unwrap();
        prop_assert!(images_commute(&p, &s3, &pair.meridian, &pair.longitude));
    }
}

#[test]
fn peripheral_realization_matches_requested_pair() {
    let s3 = FiniteGroup::symmetric(3);
    let mut rng = StdRng::seed_from_u64(5);
    let mut done = 0;
    while done < 10 {
        let p = random_c1_presentation(&mut rng, 3, 2);
        if p.deficiency() != 2 {
            continue;
        }
        let n = p.x_count();
        let c = Word::x(rng.gen_range(1..=n)).mul(&v().pow(rng.gen_range(-1..=1)));
        let x0 = x(1).conj_by(&c);
        let l = Word::identity();
        let out = realize_with_peripheral(&p, &c, &l).unwrap();
        let pd = presentation_of_diagram(&out.diagram);
        let carry = |w: &Word| w.rename(|g| if g.is_x() { Generator::x(out.x_map[g.index as usize - 1]) } else { g });
        assert!(equal_in_quotient(&pd, &s3, &out.pair.meridian, &carry(&x0)));
        assert!(equal_in_quotient(&pd, &s3, &out.pair.longitude, &carry(&l)));
        let want = fingerprint(&p, &s3, &FiniteGroup::symmetric(4));
        assert_eq!(fingerprint(&simplify(&pd), &s3, &FiniteGroup::symmetric(4)), want);
        done += 1;
    }
}

#[test]
fn trefoil_longitude_is_realized() {
    use mgauss_core::braid_reps::{BraidLetter, BraidWord};
    let s3 = FiniteGroup::symmetric(3);
    let s4 = FiniteGroup::symmetric(4);
    let b = BraidWord::new(2, vec![BraidLetter::sigma(1); 3]).unwrap();
    let d = braid_closure(&b);
    let full = presentation_of_diagram(&d);
    // For a classical diagram one relator is redundant; dropping it gives
    // deficiency 2 on a path-shaped relation graph.
    let rels = full.relators()[..full.relators().len() - 1].to_vec();
    let p = full.with_relators(rels).unwrap();
    assert_eq!(p.deficiency(), 2);
    assert_eq!(fingerprint(&p, &s3, &s4), fingerprint(&full, &s3, &s4));
    let pair = meridian_longitude(&d, 0).unwrap();
    assert!(!pair.longitude.is_identity());
    let out = realize_with_peripheral(&p, &Word::identity(), &pair.longitude).unwrap();
    let pd = presentation_of_diagram(&out.diagram);
    let carry = |w: &Word| w.rename(|g| if g.is_x() { Generator::x(out.x_map[g.index as usize - 1]) } else { g });
    assert!(equal_in_quotient(&pd, &s3, &out.pair.longitude, &carry(&pair.longitude)));
    assert!(equal_in_quotient(&pd, &s4, &out.pair.longitude, &carry(&pair.longitude)));
    assert_eq!(fingerprint(&simplify(&pd), &s3, &s4), fingerprint(&p, &s3, &s4));
    assert!(check_peripheral(&pd, &out.pair).unwrap().passed());
}

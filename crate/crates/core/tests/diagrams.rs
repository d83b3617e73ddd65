mod common;

use common::*;
use mgauss_core::braid_reps::{get_representation, BraidLetter, BraidWord, RepName};
use mgauss_core::diagrams::*;
use mgauss_core::presentations::*;
use mgauss_core::realization::cyclic_chain;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_add_move(rng: &mut StdRng, d: &MarkedGaussDiagram) -> MoveSpec {
    let m = d.circle_count();
    let gap = |rng: &mut StdRng, c: usize| rng.gen_range(0..=d.circles()[c].len());
    if rng.gen() {
        let circle = rng.gen_range(0..m);
        MoveSpec::R1Add { circle, gap: gap(rng, circle), sign: random_sign(rng), tail_first: rng.gen() }
    } else {
        let tail_circle = rng.gen_range(0..m);
        let head_circle = rng.gen_range(0..m);
        MoveSpec::R2Add {
            tail_circle,
            tail_gap: gap(rng, tail_circle),
            head_circle,
            head_gap: gap(rng, head_circle),
            sign: random_sign(rng),
            heads_reversed: rng.gen(),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn moves_preserve_group_invariants(seed in any::<u64>()) {
        let s3 = FiniteGroup::symmetric(3);
        let s4 = FiniteGroup::symmetric(4);
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 2, 4, 3);
        let before = fingerprint(&presentation_of_diagram(&d), &s3, &s4);
        let mut moves = move_instances(&d);
        moves.push(random_add_move(&mut rng, &d));
        for m in moves {
            let e = apply_move(&d, &m).unwrap();
            prop_assert_eq!(d.node_invariants(), e.node_invariants());
            let after = fingerprint(&presentation_of_diagram(&e), &s3, &s4);
            prop_assert_eq!(&before, &after, "{:?} on {}", m, d);
        }
    }

    #[test]
    fn reverse_is_an_involution(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 3, 5, 3);
        prop_assert_eq!(d.reverse().reverse(), d.clone());
        for arc in 0..d.arc_count() {
            prop_assert_eq!(d.reverse().reversed_arc(d.reversed_arc(arc)), arc);
        }
    }

    #[test]
    fn kinks_can_be_removed_again(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 2, 3, 2);
        let circle = rng.gen_range(0..d.circle_count());
        let gap = rng.gen_range(0..=d.circles()[circle].len());
        let add = MoveSpec::R1Add { circle, gap, sign: random_sign(&mut rng), tail_first: rng.gen() };
        let e = apply_move(&d, &add).unwrap();
        let id = d.next_arrow_id();
        let back = apply_move(&e, &MoveSpec::R1Remove { arrow: id }).unwrap();
        prop_assert!(back.same_up_to_base_points(&d));
    }

    #[test]
    fn one_circle_groups_are_cyclic_chains(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 1, 4, 3);
        prop_assume!(d.event_count() > 0);
        let p = presentation_of_diagram(&d);
        prop_assert!(cyclic_chain(&p).is_some());
        let rep = classify_cm(&p);
        prop_assert!(rep.is_cm && rep.is_m_irreducible);
        prop_assert!(rep.deficiency == 1);
    }

    #[test]
    fn rebasing_keeps_the_group(seed in any::<u64>()) {
        let s3 = FiniteGroup::symmetric(3);
        let s4 = FiniteGroup::symmetric(4);
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 1, 3, 2);
        prop_assume!(d.event_count() > 0);
        let e = d.rebase(0, rng.gen_range(0..d.event_count())).unwrap();
        prop_assert!(e.same_up_to_base_points(&d));
        prop_assert_eq!(
            fingerprint(&presentation_of_diagram(&d), &s3, &s4),
            fingerprint(&presentation_of_diagram(&e), &s3, &s4)
        );
    }
}

#[test]
fn braid_closures_match_the_braid_group() {
    let s3 = FiniteGroup::symmetric(3);
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3u32);
        let len = rng.gen_range(1..=5);
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n);
                if rng.gen() {
                    BraidLetter::sigma(i)
                } else {
                    BraidLetter::sigma_inv(i)
                }
            })
            .collect();
        let b = BraidWord::new(n, letters).unwrap();
        let gs = group_of_braid(&get_representation(RepName::PhiS, n).unwrap(), &b).unwrap();
        let d = braid_closure(&b);
        let pd = presentation_of_diagram(&d);
        assert_eq!(abelianization(&gs), abelianization(&pd), "{b}");
        assert_eq!(hom_count(&gs, &s3).unwrap(), hom_count(&pd, &s3).unwrap(), "{b}");
    }
}

#[test]
fn trefoil_closure() {
    let b = BraidWord::new(2, vec![BraidLetter::sigma(1); 3]).unwrap();
    let d = braid_closure(&b);
    assert_eq!(d.to_string(), "circle 1: T1+ H2+ T3+ H1+ T2+ H3+");
    // The classical trefoil group has 12 homomorphisms to S_3 (6 abelian, 6
    // from 3-colourings); the free factor v contributes 6 more choices.
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(hom_count(&presentation_of_diagram(&d), &s3).unwrap(), 72);
}

#[test]
fn connected_sum_with_a_trivial_circle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let d = random_diagram(&mut rng, 1, 3, 2);
        let t = MarkedGaussDiagram::trivial(1);
        let e = MarkedGaussDiagram::connected_sum(&d, 0, 0, &t, 0, 0).unwrap();
        assert!(e.same_up_to_base_points(&d));
    }
}

use proptest::prelude::*;
use skeinlab::constructions::*;
use skeinlab::diagram::{random_braid, random_tangle, Axis, Closure, Event, Sign, TangleDiagram};
use skeinlab::invariants::{homflypt, jones, kauffman_f, kauffman_lambda, verify_equal, InvariantKind as K, SkeinConfig};
use skeinlab::poly::{MultiLaurent, Vars};
use skeinlab::tl::bracket;

fn cfg() -> SkeinConfig {
    SkeinConfig::with_cap(24)
}

fn closed_braid(n: usize, w: &[i32]) -> TangleDiagram {
    TangleDiagram::from_braid(n, w).unwrap().closure(&Closure::Trace).unwrap()
}

fn one_s() -> MultiLaurent {
    MultiLaurent::one(&Vars::s())
}

#[test]
fn terminal_tangles_survive_every_mutation() {
    let vertical = TangleDiagram::from_events(2, vec![]).unwrap();
    let horizontal = TangleDiagram::from_events(2, vec![Event::Cap(0), Event::Cup(0)]).unwrap();
    let crossing = TangleDiagram::from_events(2, vec![Event::Cross(0, Sign::Pos)]).unwrap();
    for seed in 0..15 {
        let m = random_marked_link(seed, 3, 6, false);
        for inner in [&vertical, &horizontal, &crossing] {
            let m = m.with_inner(inner.clone()).unwrap();
            let l = m.link().unwrap();
            for axis in [Axis::X, Axis::Y, Axis::Z] {
                let ml = mutate(&m, axis).unwrap();
                assert_eq!(bracket(&l).unwrap(), bracket(&ml).unwrap());
                assert_eq!(kauffman_lambda(&l, &cfg()).unwrap(), kauffman_lambda(&ml, &cfg()).unwrap());
            }
        }
    }
}

#[test]
fn mutants_of_unknots_look_like_unknots() {
    let mut seen = 0;
    for seed in 0..400 {
        let m = random_marked_link(seed, 4, 6, true);
        let l = m.link().unwrap();
        if l.component_count() != 1 || m.inner().word().crossing_count() == 0 || jones(&l).unwrap() != one_s() {
            continue;
        }
        seen += 1;
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            assert_eq!(jones(&mutate(&m, axis).unwrap()).unwrap(), one_s(), "seed {seed}");
        }
    }
    assert!(seen >= 10, "only {seen} unknot diagrams");
}

#[test]
fn inner_tangle_must_have_four_ends() {
    let m = random_marked_link(3, 3, 4, false);
    let wide = random_tangle(1, 3, 2, false);
    assert!(matches!(m.with_inner(wide), Err(ConstructionError::Arity(_))));
}

#[test]
fn component_preservation_follows_the_corners() {
    // One inner strand per link component: only the rotation that keeps each
    // strand on its own side preserves components.
    let below = TangleDiagram::from_events(0, vec![Event::Cup(0), Event::Cup(2)]).unwrap();
    let inner = TangleDiagram::from_events(2, vec![]).unwrap();
    let above = TangleDiagram::from_events(4, vec![Event::Cap(2), Event::Cap(0)]).unwrap();
    let m = MarkedLink::new(below, inner, 1, above).unwrap();
    assert_eq!(m.link().unwrap().component_count(), 2);
    assert!(m.component_preserving(Axis::X).unwrap());
    assert!(!m.component_preserving(Axis::Y).unwrap());
    assert!(!m.component_preserving(Axis::Z).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mutants_share_invariants(seed in any::<u64>(), axis in 0usize..3) {
        let axis = [Axis::X, Axis::Y, Axis::Z][axis];
        let m = random_marked_link(seed, 5, 8, true);
        let (l, ml) = (m.link().unwrap(), mutate(&m, axis).unwrap());
        prop_assert_eq!(bracket(&l).unwrap(), bracket(&ml).unwrap());
        if m.component_preserving(axis).unwrap() {
            prop_assert_eq!(homflypt(&l, &cfg()).unwrap(), homflypt(&ml, &cfg()).unwrap());
            prop_assert_eq!(kauffman_f(&l, &cfg()).unwrap(), kauffman_f(&ml, &cfg()).unwrap());
        }
    }

    #[test]
    fn cabling_commutes_with_component_preserving_mutation(seed in any::<u64>(), axis in 0usize..3) {
        let axis = [Axis::X, Axis::Y, Axis::Z][axis];
        let m = random_marked_link(seed, 3, 4, false);
        prop_assume!(m.component_preserving(axis).unwrap());
        let (l, ml) = (m.link().unwrap(), mutate(&m, axis).unwrap());
        prop_assert_eq!(bracket(&l.two_cable()).unwrap(), bracket(&ml.two_cable()).unwrap());
    }

    #[test]
    fn rotants_share_the_bracket(seed in any::<u64>(), n in 2usize..=5, arcs in 1usize..=2, oriented in any::<bool>()) {
        let kind = if oriented { SegmentOrientation::Oriented } else { SegmentOrientation::Unoriented };
        let r = random_rotor(seed, n, arcs, 3, kind).unwrap();
        let st = random_stator(seed ^ 0x5a5a, &r, 1 + (seed % 2) as usize, 2, kind).unwrap();
        let (l, rl) = build_rotant_pair(&r, &st).unwrap();
        prop_assert_eq!(bracket(&l).unwrap(), bracket(&rl).unwrap());
        if oriented {
            prop_assert_eq!(l.tait_number().unwrap(), rl.tait_number().unwrap());
        }
    }

    #[test]
    fn rotants_share_homflypt_up_to_four(seed in any::<u64>(), n in 2usize..=4) {
        let r = random_rotor(seed, n, 2, 3, SegmentOrientation::Oriented).unwrap();
        let st = random_stator(seed ^ 7, &r, 1, 2, SegmentOrientation::Oriented).unwrap();
        let (l, rl) = build_rotant_pair(&r, &st).unwrap();
        prop_assert_eq!(homflypt(&l, &cfg()).unwrap(), homflypt(&rl, &cfg()).unwrap());
    }

    #[test]
    fn rotants_share_lambda_up_to_three(seed in any::<u64>(), n in 2usize..=3) {
        let r = random_rotor(seed, n, 2, 3, SegmentOrientation::Unoriented).unwrap();
        let st = random_stator(seed ^ 11, &r, 1, 2, SegmentOrientation::Unoriented).unwrap();
        let (l, rl) = build_rotant_pair(&r, &st).unwrap();
        prop_assert_eq!(kauffman_lambda(&l, &cfg()).unwrap(), kauffman_lambda(&rl, &cfg()).unwrap());
    }
}

#[test]
fn symmetric_segment_gives_identical_rotant() {
    let seg = TangleDiagram::from_events(3, vec![Event::Cross(0, Sign::Pos), Event::Cross(1, Sign::Pos), Event::Cross(0, Sign::Pos)]).unwrap();
    let rot = seg.rotate(Axis::X).unwrap();
    assert_eq!(bracket(&seg.closure(&Closure::Trace).unwrap()).unwrap(), bracket(&rot.closure(&Closure::Trace).unwrap()).unwrap());
    let r = Rotor::new(TangleDiagram::from_events(2, vec![]).unwrap(), 4).unwrap();
    assert_eq!(r.arc_profile(), 1);
    let st = random_stator(5, &r, 2, 3, SegmentOrientation::Unoriented).unwrap();
    let (l, rl) = build_rotant_pair(&r, &st).unwrap();
    assert_eq!(l, rl);
}

#[test]
fn wrong_axis_breaks_rotants() {
    let mut broken = 0;
    for seed in 0..20 {
        let r = random_rotor(seed, 3, 2, 3, SegmentOrientation::Unoriented).unwrap();
        let st = random_stator(seed + 100, &r, 1, 2, SegmentOrientation::Unoriented).unwrap();
        let l = st.assemble(&r).unwrap();
        let wrong = Rotor::new(r.segment().rotate(Axis::Z).unwrap(), 3).unwrap();
        if bracket(&st.assemble(&wrong).unwrap()).unwrap() != bracket(&l).unwrap() {
            broken += 1;
        }
    }
    assert!(broken > 0);
}

#[test]
fn stator_and_rotor_must_agree() {
    let r = random_rotor(1, 3, 2, 3, SegmentOrientation::Unoriented).unwrap();
    let st = random_stator(2, &r, 1, 2, SegmentOrientation::Unoriented).unwrap();
    let r4 = random_rotor(1, 4, 2, 3, SegmentOrientation::Unoriented).unwrap();
    assert!(matches!(build_rotant_pair(&r4, &st), Err(ConstructionError::Arity(_))));
    let ro = random_rotor(1, 3, 2, 3, SegmentOrientation::Oriented).unwrap();
    assert!(random_stator(2, &ro, 1, 2, SegmentOrientation::Unoriented).is_err());
}

#[test]
fn traczyk_rotants_agree() {
    for n in [6, 7] {
        let rep = traczyk_suite(n as u64, n, 4).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert_eq!(rep.alexander.len(), 4);
    }
}

#[test]
fn lambda_beyond_the_bound_is_only_recorded() {
    let rep = rotant_suite(9, 4, &[K::KauffmanLambda], 3, &cfg()).unwrap();
    assert_eq!(rep.checks + rep.skipped, 3);
}

#[test]
fn single_letter_word() {
    for seed in 0..10 {
        let l = random_tangle(seed, 3, 5, false);
        let w = CyclicWord::new(vec![Letter::Tangle(l)]).unwrap();
        let r = rewrite_cyclic_word(&w, Rewrite::Ry).unwrap();
        assert_eq!(w.annulus_class().unwrap(), r.annulus_class().unwrap());
    }
}

#[test]
fn word_suites_pass() {
    for th in WordTheorem::ALL {
        let rep = word_suite(th, 21, 10, &cfg()).unwrap();
        assert!(rep.passed(), "{}: {:?}", rep.summary(), rep.failures.first().map(|c| &c.verdicts));
    }
}

#[test]
fn rz_needs_the_two_tangles_moved() {
    // Rotating L about z while leaving the 2-tangles where they are is not
    // an identity in the annulus.
    let mut differ = 0;
    for seed in 0..20 {
        let w = random_tl_word(seed, 4, 0, 3, 2).unwrap();
        let kept = CyclicWord::new(
            w.letters()
                .iter()
                .map(|l| match l {
                    Letter::Tangle(t) => Letter::Tangle(t.rotate(Axis::Z).unwrap()),
                    f => f.clone(),
                })
                .collect(),
        )
        .unwrap();
        if kept.annulus_class().unwrap() != w.annulus_class().unwrap() {
            differ += 1;
        }
    }
    assert!(differ > 0);
}

#[test]
fn partial_rewrite_of_xy_words_is_detected() {
    let mut differ = 0;
    for seed in 0..10 {
        let w = random_xy_word(seed, 4, [true, false, true], 3).unwrap();
        let mut letters = w.letters().to_vec();
        if let Letter::Tangle(t) = &letters[0] {
            letters[0] = Letter::Tangle(Rewrite::ORy.apply(t).unwrap());
        }
        let w2 = CyclicWord::new(letters).unwrap();
        if homflypt(&w.closure(0).unwrap(), &cfg()).unwrap() != homflypt(&w2.closure(0).unwrap(), &cfg()).unwrap() {
            differ += 1;
        }
    }
    assert!(differ > 0);
}

#[test]
fn rewriting_reports_orientation_clashes() {
    let w = random_braid_word(3, 4, 0, [true, false, true], 2, 2).unwrap();
    assert!(matches!(rewrite_cyclic_word(&w, Rewrite::ORz), Err(ConstructionError::Orientation(_))));
    // Without the reversal an upward 3-tangle turns downward and no longer
    // fits the upward 2-tangles beside it.
    let b = (0..)
        .map(|seed| random_braid_word(seed, 4, 0, [true; 3], 2, 2).unwrap())
        .find(|w| w.letters().iter().any(|l| matches!(l, Letter::Fixed { .. })))
        .unwrap();
    assert!(matches!(rewrite_cyclic_word(&b, Rewrite::Ry), Err(ConstructionError::Orientation(_))));
}

#[test]
fn full_twist_is_central_for_braids() {
    let b = random_braid(4, 3, 6);
    let t = full_twist(Some(&[true; 3]), 1).unwrap();
    let x = b.compose(&t).unwrap().closure(&Closure::Trace).unwrap();
    let y = t.compose(&b).unwrap().closure(&Closure::Trace).unwrap();
    assert_eq!(homflypt(&x, &cfg()).unwrap(), homflypt(&y, &cfg()).unwrap());
}

#[test]
fn summing_with_an_unknot_changes_nothing() {
    let tref = closed_braid(2, &[1, 1, 1]);
    let unknot = closed_braid(1, &[]);
    let (a, b) = connected_sum_pair(&tref, 0, &unknot, 0).unwrap();
    for d in [&a, &b] {
        let r = verify_equal(&tref, d, &[K::Jones, K::Homflypt, K::KauffmanF], &cfg()).unwrap();
        assert!(r.all_equal());
    }
}

#[test]
fn granny_and_square_differ() {
    let tref = closed_braid(2, &[1, 1, 1]);
    let (granny, reversed) = connected_sum_pair(&tref, 0, &tref, 0).unwrap();
    let (square, _) = connected_sum_pair(&tref, 0, &tref.mirror(), 0).unwrap();
    assert_ne!(jones(&granny).unwrap(), jones(&square).unwrap());
    // The trefoil is invertible, so both sums are the granny knot.
    assert_eq!(homflypt(&granny, &cfg()).unwrap(), homflypt(&reversed, &cfg()).unwrap());
    let prod = jones(&tref).unwrap().try_mul(&jones(&tref).unwrap()).unwrap();
    assert_eq!(jones(&granny).unwrap(), prod);
}

#[test]
fn cabled_sums_agree() {
    let hopf = closed_braid(2, &[1, 1]);
    let hopf_m = closed_braid(2, &[-1, -1]);
    for (l1, l2) in [(&hopf, &hopf), (&hopf, &hopf_m)] {
        for c1 in 0..2 {
            let (a, b) = connected_sum_pair(l1, c1, l2, 0).unwrap();
            let r = verify_equal(&a.two_cable(), &b.two_cable(), &[K::Homflypt, K::KauffmanF], &cfg()).unwrap();
            assert!(r.all_equal());
        }
    }
}

#[test]
fn bad_components_are_rejected() {
    let hopf = closed_braid(2, &[1, 1]);
    assert!(matches!(connected_sum_pair(&hopf, 5, &hopf, 0), Err(ConstructionError::Component(_))));
    assert!(matches!(connected_sum_pair(&hopf, 0, &hopf, 9), Err(ConstructionError::Component(_))));
    let unoriented = TangleDiagram::unoriented(hopf.word().clone());
    assert!(connected_sum_pair(&unoriented, 0, &hopf, 0).is_err());
}

#[test]
fn certificates() {
    let m = random_marked_link(12, 4, 6, true);
    let (l, ml) = (m.link().unwrap(), mutate(&m, Axis::X).unwrap());
    let c = certify("mutation", "1.1", (&l, &ml), &[K::Jones, K::Homflypt, K::KauffmanF], &cfg(), Some(12)).unwrap();
    assert!(c.all_equal());
    let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    for key in ["construction", "theorem", "diagrams", "invariants", "verdicts", "seed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["verdicts"].as_object().unwrap().len(), 3);
    let same = certify("identity", "-", (&l, &l), &[K::Bracket], &cfg(), None).unwrap();
    assert!(same.all_equal());
    let tref = closed_braid(2, &[1, 1, 1]);
    let diff = certify("chirality", "-", (&tref, &tref.mirror()), &[K::Jones], &cfg(), None).unwrap();
    assert!(!diff.all_equal());
}

#[test]
fn suites_are_deterministic() {
    let a = mutation_suite(4, 5, &cfg()).unwrap();
    let b = mutation_suite(4, 5, &cfg()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.passed());
}

#[test]
fn satellite_suites_pass() {
    let s = satellite_mutation_suite(3, 3, 4, &cfg()).unwrap();
    assert!(s.passed(), "{}", s.summary());
    let c = connected_sum_suite(3, 3, 4, &cfg()).unwrap();
    assert!(c.passed(), "{}", c.summary());
}

#[test]
fn alexander_report_is_logged_only() {
    let r = rotant_suite(5, 3, &[K::Bracket], 4, &cfg()).unwrap();
    let (entries, line) = conjecture_report(&[r]);
    assert_eq!(entries.len(), 4);
    assert!(line.starts_with("alexander: 4 rotant pairs"));
}

use proptest::prelude::*;
use twisted_gauss::moves::Family;
use twisted_gauss::random::{random_bounded, random_diagram, rng_from_seed};
use twisted_gauss::unknot::step_bound;
use twisted_gauss::{apply_move, canonical_key, parse_gauss_code, read_trace, unknot, verify_trace, write_trace, KindSet, MoveKind};

#[test]
fn twisted_example_certificate() {
    let d = parse_gauss_code("U1-O2-U3+O4+U2-O1-bU4+bO3+").unwrap();
    let t = unknot(&d);
    assert_eq!(t.terminal.chord_count(), 0);
    assert!(t.terminal.bar_count() <= 1);
    assert!(verify_trace(&t).is_ok());
    assert_eq!(read_trace(&write_trace(&t)).unwrap(), t);
    // the same input always yields the same trace
    assert_eq!(unknot(&d), t);
}

#[test]
fn replay_checks_keys_and_sites() {
    let d = parse_gauss_code("O1+bU2-O2-U1+b").unwrap();
    let t = unknot(&d);
    assert!(!t.is_empty());
    let mut bad = t.clone();
    bad.steps[0].pre_key = canonical_key(&parse_gauss_code("b").unwrap());
    assert_eq!(verify_trace(&bad).unwrap_err().step, Some(0));
    let mut bad = t.clone();
    bad.terminal = parse_gauss_code("bb").unwrap();
    assert_eq!(verify_trace(&bad).unwrap_err().step, None);
    let mut bad = t.clone();
    bad.initial = d.rotate_basepoint(1);
    assert!(verify_trace(&bad).is_err());
}

#[test]
fn heads_approach_their_tails() {
    // replay independently: between deletions of the current chord, the
    // forward distance from its head to its tail only shrinks
    for seed in 0..200 {
        let d = random_bounded(&mut rng_from_seed(seed), 5, 3);
        let t = unknot(&d);
        let mut cur = d.clone();
        for s in &t.steps {
            let next = apply_move(&cur, &s.step).unwrap();
            if s.macro_tag.is_none() && matches!(s.step.kind, MoveKind::F1 | MoveKind::F3) {
                let c = cur.at(s.step.site).label().unwrap();
                let dist = |x: &twisted_gauss::GaussDiagram| {
                    let n = x.len();
                    let h = x.position(c, twisted_gauss::Role::Head).unwrap();
                    let tl = x.position(c, twisted_gauss::Role::Tail).unwrap();
                    (tl + n - h) % n
                };
                assert!(dist(&next) < dist(&cur));
            }
            cur = next;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn always_trivial_and_certified(seed in any::<u64>()) {
        let d = random_bounded(&mut rng_from_seed(seed), 7, 4);
        let t = unknot(&d);
        prop_assert_eq!(t.terminal.chord_count(), 0);
        prop_assert!(t.terminal.bar_count() <= 1);
        prop_assert!(verify_trace(&t).is_ok());
        prop_assert!(t.len() <= step_bound(d.chord_count(), d.bar_count()));
    }

    #[test]
    fn bar_free_inputs_stay_classical(seed in any::<u64>(), chords in 0usize..7) {
        let d = random_diagram(&mut rng_from_seed(seed), chords, 0);
        let used = unknot(&d).kinds_used();
        let classical = KindSet::of_families(&[Family::R1, Family::R2, Family::R3, Family::F1, Family::F2]);
        prop_assert!(used.is_subset(classical), "{}", used);
    }

    #[test]
    fn terminal_bar_keeps_parity(seed in any::<u64>()) {
        // T4 deletions change the bar count by one, everything else by two or zero
        let d = random_bounded(&mut rng_from_seed(seed), 6, 4);
        let t = unknot(&d);
        let t4 = t.steps.iter().filter(|s| s.step.kind == MoveKind::T4Del).count()
            - t.steps.iter().filter(|s| s.step.kind == MoveKind::T4Ins).count();
        prop_assert_eq!(t.terminal.bar_count() % 2, (d.bar_count() + t4) % 2);
    }
}

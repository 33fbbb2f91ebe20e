use std::collections::BTreeSet;

use twisted_gauss::oracle::{enumerate_diagrams, find_unknot_path};
use twisted_gauss::random::{random_diagram, rng_from_seed};
use twisted_gauss::{
    apply_move, canonical_key, find_path, min_unknot_depth, parse_gauss_code, reachable, unknot, verify_trace, GaussDiagram, KindSet,
    MoveKind, SearchBounds, Trace,
};

fn kinds(ks: &[MoveKind]) -> KindSet {
    ks.iter().copied().collect()
}

fn gd(s: &str) -> GaussDiagram {
    parse_gauss_code(s).unwrap()
}

#[test]
fn spec_examples() {
    let b = SearchBounds::new(kinds(&[MoveKind::R1Del]));
    assert_eq!(find_path(&gd("O1+U1+"), &GaussDiagram::empty(), &b).unwrap().map(|p| p.len()), Some(1));
    let b = SearchBounds::new(kinds(&[MoveKind::T2Del]));
    assert_eq!(find_path(&gd("bb"), &gd(""), &b).unwrap().map(|p| p.len()), Some(1));
    assert_eq!(find_path(&gd("b"), &gd(""), &b).unwrap(), None);
}

#[test]
fn paths_replay() {
    let all = KindSet::all();
    let b = SearchBounds::new(all).with_depth(4).with_insertions(2);
    for seed in 0..30 {
        let d1 = random_diagram(&mut rng_from_seed(seed), 2, 1);
        let d2 = random_diagram(&mut rng_from_seed(seed + 1000), 2, 1);
        if let Some(path) = find_path(&d1, &d2, &b).unwrap() {
            let t = Trace::from_moves(&d1, &path).unwrap();
            assert!(verify_trace(&t).is_ok());
            assert_eq!(canonical_key(&t.terminal), canonical_key(&d2));
        }
    }
}

#[test]
fn bigger_bounds_reach_more() {
    let d = gd("O1+O2-U1+bU2-");
    let ks = kinds(&[MoveKind::F1, MoveKind::F2, MoveKind::F3, MoveKind::T2Ins, MoveKind::T2Del, MoveKind::T3Fwd, MoveKind::T3Bwd]);
    let mut prev: BTreeSet<_> = BTreeSet::new();
    for (depth, ins) in [(1, 0), (2, 0), (2, 2), (4, 2), (5, 4)] {
        let r: BTreeSet<_> = reachable(&d, &SearchBounds::new(ks).with_depth(depth).with_insertions(ins)).unwrap().into_keys().collect();
        assert!(prev.is_subset(&r));
        prev = r;
    }
}

#[test]
fn equal_keys_reach_equal_sets() {
    let b = SearchBounds::new(KindSet::all()).with_depth(3).with_insertions(2);
    for seed in 0..10 {
        let d = random_diagram(&mut rng_from_seed(seed), 2, 1);
        let twin = d.rotate_basepoint(seed as usize % d.len());
        assert_eq!(reachable(&d, &b).unwrap(), reachable(&twin, &b).unwrap());
    }
}

#[test]
fn depths_are_levels() {
    // every key at depth k > 0 is one move from some key at depth k - 1
    let b = SearchBounds::new(KindSet::all()).with_depth(3).with_insertions(2);
    let r = reachable(&gd("O1+bU1+"), &b).unwrap();
    for (k, depth) in &r {
        if *depth == 0 {
            continue;
        }
        let hit = r.iter().filter(|(_, d)| **d + 1 == *depth).any(|(p, _)| {
            let rep = p.representative();
            twisted_gauss::enumerate_moves(&rep, KindSet::all(), twisted_gauss::Insertions::Canonical)
                .iter()
                .any(|m| canonical_key(&apply_move(&rep, m).unwrap()) == *k)
        });
        assert!(hit, "{k} at depth {depth}");
    }
}

#[test]
fn small_diagrams_against_the_unknotter() {
    let ds = enumerate_diagrams(2, 1);
    // 1 empty, 1 bar; 1 chord: 2, with bar 4; 2 chords: 2 interleavings... counted by brute force below
    let mut brute = BTreeSet::new();
    for d in (0..4000).map(|s| random_diagram(&mut rng_from_seed(s), (s % 3) as usize, (s / 3 % 2) as usize)) {
        brute.insert(canonical_key(&d));
    }
    let listed: BTreeSet<_> = ds.iter().map(canonical_key).collect();
    assert_eq!(listed.len(), ds.len());
    assert!(brute.is_subset(&listed));
    for d in &ds {
        let steps = unknot(d).len();
        let b = SearchBounds::new(KindSet::all()).with_depth(steps).with_insertions(2);
        let depth = min_unknot_depth(d, &b).unwrap().expect("unknotter path is within bounds");
        assert!(depth <= steps);
        let p = find_unknot_path(d, &b).unwrap().unwrap();
        assert!(verify_trace(&Trace::from_moves(d, &p).unwrap()).is_ok());
    }
}

#[test]
fn trivial_depths() {
    let b = SearchBounds::new(KindSet::all());
    assert_eq!(min_unknot_depth(&gd("b"), &b).unwrap(), Some(0));
    assert_eq!(min_unknot_depth(&gd(""), &b).unwrap(), Some(0));
    assert_eq!(min_unknot_depth(&gd("U1+bO1+"), &b).unwrap(), Some(1));
    assert_eq!(min_unknot_depth(&gd("bb"), &b).unwrap(), Some(1));
}

use std::collections::BTreeMap;

use proptest::prelude::*;
use twisted_gauss::random::{random_diagram, rng_from_seed};
use twisted_gauss::{canonical_key, parse_gauss_code, print_gauss_code, Entity, GaussCodeError, GaussDiagram, Role};

fn arb_diagram() -> impl Strategy<Value = GaussDiagram> {
    (any::<u64>(), 0usize..6, 0usize..4).prop_map(|(seed, c, b)| random_diagram(&mut rng_from_seed(seed), c, b))
}

/// Brute force: some rotation plus some label bijection maps `a` onto `b`.
fn same_up_to_symmetry(a: &GaussDiagram, b: &GaussDiagram) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    if n == 0 {
        return true;
    }
    (0..n).any(|k| {
        let mut map = BTreeMap::new();
        let mut back = BTreeMap::new();
        (0..n).all(|i| match (a.at(i + k), b.at(i)) {
            (Entity::Bar, Entity::Bar) => true,
            (Entity::End { label: l1, role: r1, sign: s1 }, Entity::End { label: l2, role: r2, sign: s2 }) => {
                r1 == r2 && s1 == s2 && *map.entry(l1).or_insert(l2) == l2 && *back.entry(l2).or_insert(l1) == l1
            }
            _ => false,
        })
    })
}

#[test]
fn twisted_example() {
    let d = parse_gauss_code("U1-O2-U3+O4+U2-O1-bU4+bO3+").unwrap();
    assert_eq!(d.counts(), (4, 2));
    assert_eq!(d.len(), 10);
    assert!(d.rotate_basepoint(6).to_string().starts_with("bU4+bO3+"));
}

#[test]
fn spec_examples() {
    assert_eq!(parse_gauss_code("").unwrap().counts(), (0, 0));
    assert_eq!(parse_gauss_code("bb").unwrap().counts(), (0, 2));
    let d = parse_gauss_code("O1+U1+").unwrap();
    assert_eq!(d.entities()[0].role(), Some(Role::Tail));
    assert_eq!(d.rotate_basepoint(1).to_string(), "U1+O1+");
    assert_eq!(d.rotate_basepoint(0), d);
    assert!(matches!(parse_gauss_code("O1+U1-"), Err(GaussCodeError::SignMismatch { .. })));
    assert!(matches!(parse_gauss_code("O1+O1+"), Err(GaussCodeError::Role { .. })));
    assert!(matches!(parse_gauss_code("O1+"), Err(GaussCodeError::LabelCount { .. })));
    assert!(matches!(parse_gauss_code("+O1U1+"), Err(GaussCodeError::Lex { .. })));
    assert_eq!(canonical_key(&d), canonical_key(&parse_gauss_code("O7+U7+").unwrap()));
    assert_eq!(
        canonical_key(&parse_gauss_code("O1+U1+O2-U2-").unwrap()),
        canonical_key(&parse_gauss_code("O1-U1-O2+U2+").unwrap())
    );
}

#[test]
fn keys_agree_with_brute_force() {
    // all pairs among many small diagrams with equal counts
    let ds: Vec<GaussDiagram> = (0..200).map(|s| random_diagram(&mut rng_from_seed(s), 2, 1)).collect();
    for a in &ds {
        for b in &ds {
            assert_eq!(canonical_key(a) == canonical_key(b), same_up_to_symmetry(a, b), "{a} vs {b}");
        }
    }
}

proptest! {
    #[test]
    fn print_parse_round_trip(d in arb_diagram()) {
        prop_assert_eq!(parse_gauss_code(&print_gauss_code(&d)).unwrap(), d);
    }

    #[test]
    fn key_ignores_rotation(d in arb_diagram(), k in 0usize..20) {
        let k = k % d.len().max(1);
        prop_assert_eq!(canonical_key(&d), canonical_key(&d.rotate_basepoint(k)));
    }

    #[test]
    fn key_ignores_relabeling(d in arb_diagram(), shift in 1u32..50) {
        let map = d.labels().into_iter().rev().enumerate().map(|(i, l)| (l, i as u32 * 3 + shift)).collect();
        prop_assert_eq!(canonical_key(&d), canonical_key(&d.relabel(&map).unwrap()));
    }

    #[test]
    fn representative_has_the_key(d in arb_diagram()) {
        let k = canonical_key(&d);
        prop_assert_eq!(canonical_key(&k.representative()), k.clone());
        prop_assert!(same_up_to_symmetry(&k.representative(), &d));
    }

    #[test]
    fn different_end_multisets_differ(a in arb_diagram(), b in arb_diagram()) {
        let profile = |d: &GaussDiagram| {
            let mut v: Vec<(Option<Role>, Option<bool>)> =
                d.entities().iter().map(|e| (e.role(), e.sign().map(|s| s.symbol() == '+'))).collect();
            v.sort();
            v
        };
        if profile(&a) != profile(&b) {
            prop_assert_ne!(canonical_key(&a), canonical_key(&b));
        }
    }
}

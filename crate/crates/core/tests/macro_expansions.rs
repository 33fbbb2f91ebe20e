use proptest::prelude::*;
use twisted_gauss::macros::{check_expansion, check_trigger, minimal_host, transpose, Direction, MacroInstance, MacroKind};
use twisted_gauss::random::{random_diagram, rng_from_seed};
use twisted_gauss::{apply_move, invert, GaussDiagram, Sign};

fn sites(d: &GaussDiagram) -> Vec<MacroInstance> {
    let mut out = Vec::new();
    for kind in MacroKind::ALL {
        for direction in [Direction::Forward, Direction::Reverse] {
            for site in 0..d.len() {
                let m = MacroInstance { kind, site, direction };
                if check_trigger(d, &m).is_ok() {
                    out.push(m);
                }
            }
        }
    }
    out
}

#[test]
fn every_trigger_in_every_rotation_of_the_hosts() {
    for kind in MacroKind::ALL {
        for s1 in Sign::ALL {
            for s2 in Sign::ALL {
                let (host, _) = minimal_host(kind, s1, s2);
                for k in 0..host.len() {
                    let d = host.rotate_basepoint(k);
                    for m in sites(&d) {
                        check_expansion(&d, &m).unwrap_or_else(|e| panic!("{} {m:?} on {d}: {e}", m.kind));
                    }
                }
            }
        }
    }
}

#[test]
fn reversed_inverted_expansion_realizes_the_reverse_move() {
    let (host, site) = minimal_host(MacroKind::Fu, Sign::Positive, Sign::Negative);
    let m = MacroInstance::forward(MacroKind::Fu, site);
    let steps = twisted_gauss::expand(&host, &m).unwrap();
    let mut states = vec![host.clone()];
    for s in &steps {
        states.push(apply_move(states.last().unwrap(), s).unwrap());
    }
    let mut cur = states.last().unwrap().clone();
    assert_eq!(cur, transpose(&host, &m));
    for (i, s) in steps.iter().enumerate().rev() {
        cur = apply_move(&cur, &invert(s, &states[i + 1])).unwrap();
    }
    assert_eq!(cur, host);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]
    #[test]
    fn expansions_are_exact_on_random_hosts(seed in any::<u64>(), chords in 2usize..6, bars in 0usize..4) {
        let d = random_diagram(&mut rng_from_seed(seed), chords, bars);
        for m in sites(&d) {
            if let Err(e) = check_expansion(&d, &m) {
                return Err(TestCaseError::fail(format!("{} {m:?} on {d}: {e}", m.kind)));
            }
        }
    }
}

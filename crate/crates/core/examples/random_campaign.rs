//! Seeded random diagrams through the unknotter, with timing.
use std::time::Instant;

use twisted_gauss::random::{random_bounded, rng_from_seed};
use twisted_gauss::unknot::step_bound;
use twisted_gauss::{unknot, verify_trace};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = rng_from_seed(seed);
    let start = Instant::now();
    let (mut total, mut worst) = (0, 0.0f64);
    for _ in 0..200 {
        let d = random_bounded(&mut rng, 8, 4);
        let t = unknot(&d);
        verify_trace(&t).unwrap();
        let (c, b) = d.counts();
        worst = worst.max(t.len() as f64 / step_bound(c, b).max(1) as f64);
        total += t.len();
    }
    println!("seed {seed}: 200 diagrams, {total} moves, worst fraction of bound {worst:.4}, {:?}", start.elapsed());
}

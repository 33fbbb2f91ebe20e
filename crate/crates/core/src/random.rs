//! Seeded random diagrams: a uniform shuffle of the chord ends and bars,
//! with independent uniform signs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Entity, GaussDiagram, Role, Sign};

pub type DiagramRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> DiagramRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A diagram with exactly `chords` chords (labels `1..=chords`) and `bars` bars.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, chords: usize, bars: usize) -> GaussDiagram {
    let mut v = Vec::with_capacity(2 * chords + bars);
    for label in 1..=chords as u32 {
        let sign = if rng.gen::<bool>() { Sign::Positive } else { Sign::Negative };
        v.push(Entity::end(label, Role::Tail, sign));
        v.push(Entity::end(label, Role::Head, sign));
    }
    v.extend(std::iter::repeat_n(Entity::Bar, bars));
    v.shuffle(rng);
    GaussDiagram::from_entities(v).expect("shuffled chords stay well formed")
}

/// Chord and bar counts drawn uniformly from `0..=max_chords` and `0..=max_bars`.
pub fn random_bounded<R: Rng + ?Sized>(rng: &mut R, max_chords: usize, max_bars: usize) -> GaussDiagram {
    let chords = rng.gen_range(0..=max_chords);
    let bars = rng.gen_range(0..=max_bars);
    random_diagram(rng, chords, bars)
}

//! Rotation- and relabeling-invariant fingerprints.

use std::collections::HashMap;
use std::fmt;

use crate::code::parse_gauss_code;
use crate::diagram::{Entity, GaussCodeError, GaussDiagram, Label, Role, Sign};

/// Canonical serialization of a diagram up to basepoint rotation and chord
/// relabeling.
///
/// Each entity is encoded as a big-endian `u32`: a bar is `0`, a chord end is
/// `1 + 4*(label-1) + 2*role + sign` with labels renumbered `1, 2, ...` by
/// first occurrence, `tail < head` and `negative < positive`. The key is the
/// lexicographically least encoding over all rotations. The empty diagram
/// has the empty key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CanonicalKey {
    bytes: Vec<u8>,
}

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// The representative diagram: the minimal rotation with renumbered labels.
    pub fn representative(&self) -> GaussDiagram {
        let entities = self
            .bytes
            .chunks_exact(4)
            .map(|c| decode(u32::from_be_bytes([c[0], c[1], c[2], c[3]])))
            .collect();
        GaussDiagram::from_entities_unchecked(entities)
    }

    /// Inverse of the `Display` form. Rejects codes that are not already in
    /// canonical form.
    pub fn from_canonical_code(text: &str) -> Result<CanonicalKey, KeyParseError> {
        let d = parse_gauss_code(text).map_err(KeyParseError::Code)?;
        let key = canonical_key(&d);
        if key.to_string() != text.trim() {
            return Err(KeyParseError::NotCanonical(text.to_string()));
        }
        Ok(key)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KeyParseError {
    #[error(transparent)]
    Code(GaussCodeError),
    #[error("{0:?} is not in canonical form")]
    NotCanonical(String),
}

/// Renders as the Gauss code of the representative.
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.representative(), f)
    }
}

fn encode(e: Entity, label: Label) -> u32 {
    match e {
        Entity::Bar => 0,
        Entity::End { role, sign, .. } => {
            let r = match role {
                Role::Tail => 0,
                Role::Head => 1,
            };
            let s = match sign {
                Sign::Negative => 0,
                Sign::Positive => 1,
            };
            1 + 4 * (label - 1) + 2 * r + s
        }
    }
}

fn decode(code: u32) -> Entity {
    if code == 0 {
        return Entity::Bar;
    }
    let c = code - 1;
    let role = if c & 2 == 0 { Role::Tail } else { Role::Head };
    let sign = if c & 1 == 0 { Sign::Negative } else { Sign::Positive };
    Entity::End { label: c / 4 + 1, role, sign }
}

fn rotation_codes(entities: &[Entity], start: usize, out: &mut Vec<u32>) {
    let n = entities.len();
    let mut renumber: HashMap<Label, Label> = HashMap::new();
    out.clear();
    for k in 0..n {
        let e = entities[(start + k) % n];
        let label = match e.label() {
            Some(l) => {
                let next = renumber.len() as Label + 1;
                *renumber.entry(l).or_insert(next)
            }
            None => 0,
        };
        out.push(encode(e, label));
    }
}

pub fn canonical_key(d: &GaussDiagram) -> CanonicalKey {
    let entities = d.entities();
    if entities.is_empty() {
        return CanonicalKey::default();
    }
    let mut best: Vec<u32> = Vec::new();
    let mut cur = Vec::with_capacity(entities.len());
    for start in 0..entities.len() {
        rotation_codes(entities, start, &mut cur);
        if best.is_empty() || cur < best {
            std::mem::swap(&mut best, &mut cur);
        }
    }
    CanonicalKey { bytes: best.iter().flat_map(|c| c.to_be_bytes()).collect() }
}

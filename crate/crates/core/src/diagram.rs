//! Twisted Gauss diagrams: a basepointed cyclic word of bars and signed chord ends.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Crossing sign carried by a chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Positive => '+',
        }
    }

    pub const ALL: [Sign; 2] = [Sign::Positive, Sign::Negative];
}

/// Which end of a chord's arrow a position is.
///
/// Arrows point from the overcrossing site (tail, letter `O`) to the
/// undercrossing site (head, letter `U`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Tail,
    Head,
}

impl Role {
    pub fn opposite(self) -> Role {
        match self {
            Role::Tail => Role::Head,
            Role::Head => Role::Tail,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::Tail => 'O',
            Role::Head => 'U',
        }
    }

    pub fn from_letter(c: char) -> Option<Role> {
        match c {
            'O' => Some(Role::Tail),
            'U' => Some(Role::Head),
            _ => None,
        }
    }

    pub const ALL: [Role; 2] = [Role::Tail, Role::Head];
}

/// Chord label. Always at least 1.
pub type Label = u32;

/// One position on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entity {
    Bar,
    End { label: Label, role: Role, sign: Sign },
}

impl Entity {
    pub fn end(label: Label, role: Role, sign: Sign) -> Entity {
        Entity::End { label, role, sign }
    }

    pub fn head(label: Label, sign: Sign) -> Entity {
        Entity::end(label, Role::Head, sign)
    }

    pub fn tail(label: Label, sign: Sign) -> Entity {
        Entity::end(label, Role::Tail, sign)
    }

    pub fn is_bar(&self) -> bool {
        matches!(self, Entity::Bar)
    }

    pub fn label(&self) -> Option<Label> {
        match *self {
            Entity::End { label, .. } => Some(label),
            Entity::Bar => None,
        }
    }

    pub fn role(&self) -> Option<Role> {
        match *self {
            Entity::End { role, .. } => Some(role),
            Entity::Bar => None,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match *self {
            Entity::End { sign, .. } => Some(sign),
            Entity::Bar => None,
        }
    }

    /// True for a chord end with the given role.
    pub fn has_role(&self, r: Role) -> bool {
        self.role() == Some(r)
    }
}

impl fmt::Display for Entity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Entity::Bar => f.write_str("b"),
            Entity::End { label, role, sign } => {
                write!(f, "{}{}{}", role.letter(), label, sign.symbol())
            }
        }
    }
}

/// Violations of the chord well-formedness rules, plus lexical errors from
/// the Gauss-code reader.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussCodeError {
    #[error("unexpected {found} at byte {pos}")]
    Lex { pos: usize, found: String },
    #[error("label {label} occurs {count} time(s), expected exactly 2")]
    LabelCount { label: Label, count: usize },
    #[error("both ends of chord {label} have role {}", .role.letter())]
    Role { label: Label, role: Role },
    #[error("ends of chord {label} carry different signs")]
    SignMismatch { label: Label },
    #[error("chord label must be positive")]
    ZeroLabel,
}

/// A basepointed Gauss diagram. Index 0 sits just after the basepoint and
/// sequence order is counterclockwise traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussDiagram {
    entities: Vec<Entity>,
}

impl GaussDiagram {
    pub fn empty() -> GaussDiagram {
        GaussDiagram::default()
    }

    pub fn from_entities(entities: Vec<Entity>) -> Result<GaussDiagram, GaussCodeError> {
        check_chords(&entities)?;
        Ok(GaussDiagram { entities })
    }

    /// Wraps a sequence already known to satisfy the chord rules.
    pub(crate) fn from_entities_unchecked(entities: Vec<Entity>) -> GaussDiagram {
        debug_assert_eq!(check_chords(&entities), Ok(()));
        GaussDiagram { entities }
    }

    pub fn entities(&self) -> &[Entity] {
        &self.entities
    }

    pub fn into_entities(self) -> Vec<Entity> {
        self.entities
    }

    pub fn len(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    /// Entity at cyclic index `i`.
    pub fn at(&self, i: usize) -> Entity {
        self.entities[i % self.entities.len()]
    }

    pub fn chord_count(&self) -> usize {
        self.entities.iter().filter(|e| e.has_role(Role::Tail)).count()
    }

    pub fn bar_count(&self) -> usize {
        self.entities.iter().filter(|e| e.is_bar()).count()
    }

    /// `(chord_count, bar_count)`.
    pub fn counts(&self) -> (usize, usize) {
        (self.chord_count(), self.bar_count())
    }

    /// Chord labels in ascending order.
    pub fn labels(&self) -> Vec<Label> {
        let mut v: Vec<Label> = self
            .entities
            .iter()
            .filter(|e| e.has_role(Role::Tail))
            .filter_map(Entity::label)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn contains_label(&self, label: Label) -> bool {
        self.entities.iter().any(|e| e.label() == Some(label))
    }

    /// Smallest positive label not used by any chord.
    pub fn fresh_label(&self) -> Label {
        self.fresh_labels(1)[0]
    }

    /// The `n` smallest positive labels not in use, ascending.
    pub fn fresh_labels(&self, n: usize) -> Vec<Label> {
        let used = self.labels();
        let mut out = Vec::with_capacity(n);
        let mut candidate = 1;
        while out.len() < n {
            if used.binary_search(&candidate).is_err() {
                out.push(candidate);
            }
            candidate += 1;
        }
        out
    }

    /// Index of the end of chord `label` with role `role`.
    pub fn position(&self, label: Label, role: Role) -> Option<usize> {
        self.entities
            .iter()
            .position(|e| e.label() == Some(label) && e.role() == Some(role))
    }

    /// Sign of chord `label`.
    pub fn sign_of(&self, label: Label) -> Option<Sign> {
        self.entities
            .iter()
            .find(|e| e.label() == Some(label))
            .and_then(Entity::sign)
    }

    /// Cyclic rotation: the entity at index `k` becomes the new index 0.
    pub fn rotate_basepoint(&self, k: usize) -> GaussDiagram {
        if self.entities.is_empty() {
            return self.clone();
        }
        let mut entities = self.entities.clone();
        entities.rotate_left(k % self.entities.len());
        GaussDiagram { entities }
    }

    /// Applies a label bijection. Labels missing from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<GaussDiagram, GaussCodeError> {
        let entities = self
            .entities
            .iter()
            .map(|e| match *e {
                Entity::End { label, role, sign } => Entity::End {
                    label: *map.get(&label).unwrap_or(&label),
                    role,
                    sign,
                },
                Entity::Bar => Entity::Bar,
            })
            .collect();
        GaussDiagram::from_entities(entities)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entities {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn check_chords(entities: &[Entity]) -> Result<(), GaussCodeError> {
    let mut seen: BTreeMap<Label, Vec<(Role, Sign)>> = BTreeMap::new();
    for e in entities {
        if let Entity::End { label, role, sign } = *e {
            if label == 0 {
                return Err(GaussCodeError::ZeroLabel);
            }
            seen.entry(label).or_default().push((role, sign));
        }
    }
    for (&label, ends) in &seen {
        if ends.len() != 2 {
            return Err(GaussCodeError::LabelCount { label, count: ends.len() });
        }
        if ends[0].0 == ends[1].0 {
            return Err(GaussCodeError::Role { label, role: ends[0].0 });
        }
        if ends[0].1 != ends[1].1 {
            return Err(GaussCodeError::SignMismatch { label });
        }
    }
    Ok(())
}

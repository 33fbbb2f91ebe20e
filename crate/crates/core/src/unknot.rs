//! Reduction of any diagram to a chordless one with at most one bar, recorded
//! as a replayable trace of primitive moves.

use std::fmt;

use thiserror::Error;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::diagram::{Entity, GaussDiagram, Role};
use crate::macros::{expand, MacroInstance, MacroKind};
use crate::moves::{apply_move, KindSet, MoveError, MoveInstance, MoveKind, MoveParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub step: MoveInstance,
    pub pre_key: CanonicalKey,
    pub post_key: CanonicalKey,
    /// Derived move this step belongs to, as `NAME@ordinal`.
    pub macro_tag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub initial: GaussDiagram,
    pub steps: Vec<TraceStep>,
    pub terminal: GaussDiagram,
}

impl Trace {
    /// An empty trace sitting at `d`.
    pub fn start(d: GaussDiagram) -> Trace {
        Trace { initial: d.clone(), steps: Vec::new(), terminal: d }
    }

    /// Replays `moves` from `initial`, recording keys.
    pub fn from_moves(initial: &GaussDiagram, moves: &[MoveInstance]) -> Result<Trace, MoveError> {
        let mut t = Trace::start(initial.clone());
        for m in moves {
            t.push(*m, None)?;
        }
        Ok(t)
    }

    /// Applies `m` to the terminal diagram and records it.
    pub fn push(&mut self, m: MoveInstance, macro_tag: Option<String>) -> Result<(), MoveError> {
        let next = apply_move(&self.terminal, &m)?;
        self.steps.push(TraceStep {
            step: m,
            pre_key: canonical_key(&self.terminal),
            post_key: canonical_key(&next),
            macro_tag,
        });
        self.terminal = next;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kinds_used(&self) -> KindSet {
        self.steps.iter().map(|s| s.step.kind).collect()
    }

    pub fn moves(&self) -> Vec<MoveInstance> {
        self.steps.iter().map(|s| s.step).collect()
    }
}

/// Why a trace failed to replay.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct VerifyError {
    /// Offending step, or `None` when the replay ends at the wrong diagram.
    pub step: Option<usize>,
    pub reason: String,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => write!(f, "end of trace: {}", self.reason),
        }
    }
}

/// Replays `t` from its initial diagram, checking every key and the terminal.
pub fn verify_trace(t: &Trace) -> Result<(), VerifyError> {
    let mut cur = t.initial.clone();
    for (i, s) in t.steps.iter().enumerate() {
        let fail = |reason: String| VerifyError { step: Some(i), reason };
        let pre = canonical_key(&cur);
        if pre != s.pre_key {
            return Err(fail(format!("pre key {} does not match {pre}", s.pre_key)));
        }
        cur = apply_move(&cur, &s.step).map_err(|e| fail(e.to_string()))?;
        let post = canonical_key(&cur);
        if post != s.post_key {
            return Err(fail(format!("post key {} does not match {post}", s.post_key)));
        }
    }
    if cur != t.terminal {
        return Err(VerifyError { step: None, reason: format!("replay ends at {cur}, trace claims {}", t.terminal) });
    }
    Ok(())
}

/// Longest derived-move expansion the unknotter accepts (checked at run time).
pub const MACRO_STEP_LIMIT: usize = 40;

/// Upper bound on the length of [`unknot`]'s trace for a diagram with `chords`
/// chords and `bars` bars. Each chord's head passes at most `2(c + b)`
/// entities, each pass costing at most [`MACRO_STEP_LIMIT`] steps.
pub fn step_bound(chords: usize, bars: usize) -> usize {
    2 * MACRO_STEP_LIMIT * (chords + bars).pow(2)
}

/// True for the two end states: no chords and at most one bar.
pub fn is_trivial(d: &GaussDiagram) -> bool {
    d.chord_count() == 0 && d.bar_count() <= 1
}

/// Reduces `d` to a chordless diagram with at most one bar.
///
/// Chords are removed in ascending label order. The head of the current
/// chord walks forward towards its tail, passing whatever lies in between;
/// when the two ends meet (possibly around one bar) the chord is deleted.
pub fn unknot(d: &GaussDiagram) -> Trace {
    let mut t = Trace::start(d.clone());
    let mut ordinal = 0usize;
    while let Some(&c) = t.terminal.labels().first() {
        let mut last_distance = usize::MAX;
        loop {
            let cur = &t.terminal;
            let n = cur.len();
            let h = cur.position(c, Role::Head).expect("chord present");
            let tail = cur.position(c, Role::Tail).expect("chord present");
            let distance = (tail + n - h) % n;
            assert!(distance < last_distance, "head of chord {c} stopped approaching its tail");
            last_distance = distance;
            let sign = cur.sign_of(c).expect("chord present");
            let (next, after) = (cur.at(h + 1), cur.at(h + 2));
            let prim = |kind, params| MoveInstance::new(kind, h, params);
            let tail_of_c = |e: Entity| e.label() == Some(c);
            let step = match (next, after) {
                (e, _) if tail_of_c(e) => Step::Last(prim(MoveKind::R1Del, MoveParams::Chord { label: c, first: Role::Head, sign })),
                (Entity::Bar, e) if tail_of_c(e) => Step::Last(prim(MoveKind::T4Del, MoveParams::Chord { label: c, first: Role::Head, sign })),
                (Entity::Bar, Entity::Bar) => Step::One(MoveInstance::simple(MoveKind::T2Del, (h + 1) % n)),
                (Entity::End { role: Role::Head, .. }, _) => Step::One(MoveInstance::simple(MoveKind::F1, h)),
                (Entity::End { role: Role::Tail, sign: s, .. }, _) => {
                    Step::Macro(if s == sign { MacroKind::Fs } else { MacroKind::Fo })
                }
                (Entity::Bar, Entity::End { role: Role::Head, .. }) => Step::One(MoveInstance::simple(MoveKind::F3, h)),
                (Entity::Bar, Entity::End { role: Role::Tail, .. }) => Step::Macro(MacroKind::Fu),
            };
            match step {
                Step::Last(m) => {
                    t.push(m, None).expect("deletion pattern checked");
                    break;
                }
                Step::One(m) => t.push(m, None).expect("pattern checked"),
                Step::Macro(kind) => {
                    let steps = expand(cur, &MacroInstance::forward(kind, h))
                        .unwrap_or_else(|e| panic!("{kind} expansion on {cur}: {e}"));
                    assert!(steps.len() <= MACRO_STEP_LIMIT, "{kind} expansion of {} steps", steps.len());
                    ordinal += 1;
                    let tag = format!("{kind}@{ordinal}");
                    for m in steps {
                        t.push(m, Some(tag.clone())).expect("expansion replays");
                    }
                }
            }
        }
    }
    while t.terminal.bar_count() >= 2 {
        t.push(MoveInstance::simple(MoveKind::T2Del, 0), None).expect("only bars remain");
    }
    assert!(t.len() <= step_bound(d.chord_count(), d.bar_count()));
    t
}

enum Step {
    Last(MoveInstance),
    One(MoveInstance),
    Macro(MacroKind),
}

//! Derived moves, each realized as a fixed recipe of primitive moves.
//!
//! A recipe is replayed on the actual diagram, locating chord ends by label
//! after every step. Helpers that land in the gap at the basepoint can go on
//! either side of it; the expander tries those placements in a fixed order
//! and keeps the first one whose composite equals the direct transposition
//! exactly, basepoint included.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{Entity, GaussDiagram, Label, Role, Sign};
use crate::moves::{
    apply_move, enumerate_moves, invert, r3_instance, Family, Insertions, KindSet, MoveInstance, MoveKind, MoveParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MacroKind {
    /// Head past an adjacent tail of the same sign.
    Fs,
    /// Head past an adjacent tail of the opposite sign.
    Fo,
    /// Head past a bar and then a tail.
    Fu,
    /// Tail past a bar and then a head.
    Fv,
    /// F1 realized with F2, T2 and T3.
    F1ViaF2,
    /// F3 realized with F4, T2 and T3.
    F3ViaF4,
}

impl MacroKind {
    pub const ALL: [MacroKind; 6] =
        [MacroKind::Fs, MacroKind::Fo, MacroKind::Fu, MacroKind::Fv, MacroKind::F1ViaF2, MacroKind::F3ViaF4];

    pub fn name(self) -> &'static str {
        match self {
            MacroKind::Fs => "FS",
            MacroKind::Fo => "FO",
            MacroKind::Fu => "FU",
            MacroKind::Fv => "FV",
            MacroKind::F1ViaF2 => "F1_VIA_F2",
            MacroKind::F3ViaF4 => "F3_VIA_F4",
        }
    }

    /// Roles along the forward trigger; `None` is a bar.
    fn pattern(self) -> &'static [Option<Role>] {
        const H: Option<Role> = Some(Role::Head);
        const T: Option<Role> = Some(Role::Tail);
        match self {
            MacroKind::Fs | MacroKind::Fo => &[H, T],
            MacroKind::Fu => &[H, None, T],
            MacroKind::Fv => &[T, None, H],
            MacroKind::F1ViaF2 => &[H, H],
            MacroKind::F3ViaF4 => &[H, None, H],
        }
    }

    pub fn trigger_len(self) -> usize {
        self.pattern().len()
    }

    /// Primitive families and derived moves the recipe is built from.
    pub fn generators(self) -> (&'static [Family], &'static [MacroKind]) {
        use Family::*;
        match self {
            MacroKind::Fs | MacroKind::Fo => (&[R2, R3, F1, F2], &[]),
            MacroKind::Fu => (&[R1, T2, T3, T4, F1, F3, F4], &[MacroKind::Fs]),
            MacroKind::Fv => (&[R1, T2, T3, T4, F1, F3, F4], &[MacroKind::Fs, MacroKind::Fo]),
            MacroKind::F1ViaF2 => (&[F2, T2, T3], &[]),
            MacroKind::F3ViaF4 => (&[F4, T2, T3], &[]),
        }
    }

    /// Every primitive kind an expansion may contain.
    pub fn allowed_kinds(self) -> KindSet {
        let (families, macros) = self.generators();
        macros
            .iter()
            .fold(KindSet::of_families(families), |acc, m| acc.union(m.allowed_kinds()))
    }
}

impl fmt::Display for MacroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MacroKind {
    type Err = MacroError;
    fn from_str(s: &str) -> Result<MacroKind, MacroError> {
        MacroKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| MacroError::UnknownMacro(s.to_string()))
    }
}

/// Forward moves the first trigger entity past the rest; reverse undoes that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Reverse => "reverse",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MacroInstance {
    pub kind: MacroKind,
    /// Index of the first trigger entity.
    pub site: usize,
    pub direction: Direction,
}

impl MacroInstance {
    pub fn forward(kind: MacroKind, site: usize) -> MacroInstance {
        MacroInstance { kind, site, direction: Direction::Forward }
    }

    pub fn reverse(kind: MacroKind, site: usize) -> MacroInstance {
        MacroInstance { kind, site, direction: Direction::Reverse }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error("{kind} trigger absent at site {site}: {reason}")]
    PatternMismatch { kind: MacroKind, site: usize, reason: String },
    #[error("{kind} expansion failed: {reason}")]
    ExpansionFailure { kind: MacroKind, reason: String },
    #[error("unknown derived move {0:?}")]
    UnknownMacro(String),
}

/// Checks the trigger and returns the labels of its first and last ends.
pub fn check_trigger(d: &GaussDiagram, m: &MacroInstance) -> Result<(Label, Label), MacroError> {
    let bad = |reason: String| MacroError::PatternMismatch { kind: m.kind, site: m.site, reason };
    let pat = m.kind.pattern();
    let n = d.len();
    if m.site >= n || n < pat.len() {
        return Err(bad("site out of range".into()));
    }
    let mut roles: Vec<Option<Role>> = pat.to_vec();
    if m.direction == Direction::Reverse {
        roles.reverse();
    }
    for (k, want) in roles.iter().enumerate() {
        let e = d.at(m.site + k);
        let ok = match want {
            None => e.is_bar(),
            Some(r) => e.has_role(*r),
        };
        if !ok {
            return Err(bad(format!("unexpected {e} at offset {k}")));
        }
    }
    let first = d.at(m.site).label().expect("trigger starts with a chord end");
    let last = d.at(m.site + pat.len() - 1).label().expect("trigger ends with a chord end");
    if first == last {
        return Err(bad("both ends belong to one chord".into()));
    }
    let same = d.sign_of(first) == d.sign_of(last);
    match m.kind {
        MacroKind::Fs if !same => Err(bad("signs differ; use FO".into())),
        MacroKind::Fo if same => Err(bad("signs agree; use FS".into())),
        _ => Ok((first, last)),
    }
}

/// The declared net effect: the first and last trigger entities trade
/// places, everything else stays put.
pub fn transpose(d: &GaussDiagram, m: &MacroInstance) -> GaussDiagram {
    let n = d.len();
    let mut v = d.entities().to_vec();
    v.swap(m.site, (m.site + m.kind.trigger_len() - 1) % n);
    GaussDiagram::from_entities_unchecked(v)
}

/// Expands a derived move into primitive moves legal in sequence from `d`.
pub fn expand(d: &GaussDiagram, m: &MacroInstance) -> Result<Vec<MoveInstance>, MacroError> {
    check_trigger(d, m)?;
    match m.direction {
        Direction::Forward => search(d, m.kind, m.site),
        Direction::Reverse => {
            let start = transpose(d, m);
            let forward = search(&start, m.kind, m.site)?;
            let mut states = vec![start];
            for step in &forward {
                let next = apply_move(states.last().expect("nonempty"), step).map_err(|e| failure(m.kind, e))?;
                states.push(next);
            }
            Ok(forward.iter().enumerate().rev().map(|(i, step)| invert(step, &states[i + 1])).collect())
        }
    }
}

fn failure(kind: MacroKind, e: impl fmt::Display) -> MacroError {
    MacroError::ExpansionFailure { kind, reason: e.to_string() }
}

/// Replays the recipe under every helper placement until one is exact.
fn search(d: &GaussDiagram, kind: MacroKind, site: usize) -> Result<Vec<MoveInstance>, MacroError> {
    let target = transpose(d, &MacroInstance::forward(kind, site));
    let mut choices: Vec<usize> = Vec::new();
    let mut last_error;
    loop {
        let mut b = Builder { kind, d: d.clone(), steps: Vec::new(), plan: &choices, taken: Vec::new() };
        let run = run_recipe(&mut b, site).and_then(|()| b.settle(&target));
        match run {
            Ok(()) if b.d == target => return Ok(b.steps),
            Ok(()) => last_error = Some(format!("composite {} differs from transposition {target}", b.d)),
            Err(e) => last_error = Some(e.to_string()),
        }
        // odometer over the choice points reached in this run
        let mut taken = b.taken;
        loop {
            match taken.pop() {
                None => return Err(failure(kind, last_error.unwrap_or_default())),
                Some((c, arity)) if c + 1 < arity => {
                    taken.push((c + 1, arity));
                    break;
                }
                Some(_) => {}
            }
        }
        choices = taken.into_iter().map(|(c, _)| c).collect();
    }
}

struct Builder<'a> {
    kind: MacroKind,
    d: GaussDiagram,
    steps: Vec<MoveInstance>,
    plan: &'a [usize],
    taken: Vec<(usize, usize)>,
}

impl Builder<'_> {
    fn fail(&self, reason: impl Into<String>) -> MacroError {
        MacroError::ExpansionFailure { kind: self.kind, reason: reason.into() }
    }

    fn choose(&mut self, arity: usize) -> usize {
        let i = self.taken.len();
        let c = self.plan.get(i).copied().unwrap_or(0).min(arity - 1);
        self.taken.push((c, arity));
        c
    }

    fn push(&mut self, m: MoveInstance) -> Result<(), MacroError> {
        self.d = apply_move(&self.d, &m).map_err(|e| self.fail(format!("step {}: {e}", self.steps.len())))?;
        self.steps.push(m);
        Ok(())
    }

    fn pos(&self, label: Label, role: Role) -> Result<usize, MacroError> {
        self.d
            .position(label, role)
            .ok_or_else(|| self.fail(format!("chord {label} lost")))
    }

    fn sign(&self, label: Label) -> Sign {
        self.d.sign_of(label).expect("label is present")
    }

    /// Index of the gap just before position `p` (gaps are named by the
    /// entity they follow).
    fn before(&self, p: usize) -> usize {
        let n = self.d.len();
        (p + n - 1) % n
    }

    /// First output index of each block, for blocks of the given lengths
    /// inserted into the gaps following the given entities.
    fn place(&mut self, blocks: &[(usize, usize)]) -> Vec<usize> {
        let n = self.d.len();
        let at_marker: usize = blocks.iter().filter(|b| b.0 == n - 1).map(|b| b.1).sum();
        let keep_at_end = if at_marker > 0 { self.choose(at_marker + 1) } else { 0 };
        // None = original entity; Some((block, offset)) = inserted entity
        let mut seq: Vec<Option<(usize, usize)>> = Vec::new();
        for i in 0..n {
            seq.push(None);
            for (bi, &(gap, len)) in blocks.iter().enumerate() {
                if gap == i {
                    seq.extend((0..len).map(|k| Some((bi, k))));
                }
            }
        }
        seq.rotate_right(at_marker - keep_at_end);
        (0..blocks.len())
            .map(|bi| seq.iter().position(|x| *x == Some((bi, 0))).expect("block placed"))
            .collect()
    }

    /// Carries entities across the basepoint, one at a time, while a rotation
    /// is all that separates the composite from `target`. A bar crosses by pairing with
    /// one of two new bars inserted astride the basepoint; a chord end
    /// crosses a kink inserted astride the basepoint, which is then removed.
    fn settle(&mut self, target: &GaussDiagram) -> Result<(), MacroError> {
        let allowed = self.kind.allowed_kinds();
        for _ in 0..self.d.len() {
            let n = self.d.len();
            if self.d == *target || n < 2 {
                break;
            }
            // the last entity belongs in front, or the first at the end
            let Some(r) = (1..n).find(|&r| self.d.rotate_basepoint(r) == *target) else {
                break;
            };
            let to_front = 2 * r > n;
            let e = if to_front { self.d.at(n - 1) } else { self.d.at(0) };
            match e {
                Entity::Bar if allowed.contains(MoveKind::T2Ins) => {
                    self.push(MoveInstance::simple(MoveKind::T2Ins, n + 1))?;
                    self.t2_del(if to_front { n } else { 0 })?;
                }
                Entity::End { role, sign, .. } if allowed.contains(MoveKind::R1Ins) => {
                    let big = n + 2;
                    let label = self.d.fresh_label();
                    let first = if to_front { role } else { role.opposite() };
                    self.push(MoveInstance::new(MoveKind::R1Ins, big - 1, MoveParams::Chord { label, first, sign }))?;
                    let (swaps, del_site) = if to_front { ([big - 2, big - 1], big - 2) } else { ([0, big - 1], 0) };
                    for p in swaps {
                        self.exchange(p)?;
                    }
                    self.push(MoveInstance::new(MoveKind::R1Del, del_site, MoveParams::Chord { label, first, sign }))?;
                }
                _ => break,
            }
        }
        Ok(())
    }

    /// Exchanges the adjacent chord ends at `p` and `p + 1`.
    fn exchange(&mut self, p: usize) -> Result<(), MacroError> {
        let n = self.d.len();
        let (x, y) = (self.d.at(p), self.d.at(p + 1));
        match (x.role(), y.role()) {
            (Some(Role::Head), Some(Role::Head)) => self.push(MoveInstance::simple(MoveKind::F1, p % n)),
            (Some(Role::Tail), Some(Role::Tail)) => self.push(MoveInstance::simple(MoveKind::F2, p % n)),
            (Some(Role::Head), Some(Role::Tail)) => self.pass(x.label().unwrap(), y.label().unwrap(), Direction::Forward),
            (Some(Role::Tail), Some(Role::Head)) => self.pass(x.label().unwrap(), y.label().unwrap(), Direction::Reverse),
            _ => Err(self.fail(format!("cannot exchange {x} and {y}"))),
        }
    }

    fn swap_at(&mut self, kind: MoveKind, label: Label, role: Role) -> Result<(), MacroError> {
        let p = self.pos(label, role)?;
        self.push(MoveInstance::simple(kind, p))
    }

    fn chord_ins(&mut self, kind: MoveKind, gap: usize, first: Role, sign: Sign) -> Result<Label, MacroError> {
        let len = if kind == MoveKind::T4Ins { 3 } else { 2 };
        let label = self.d.fresh_label();
        let site = self.place(&[(gap, len)])[0];
        self.push(MoveInstance::new(kind, site, MoveParams::Chord { label, first, sign }))?;
        Ok(label)
    }

    fn t2_ins(&mut self, gap: usize) -> Result<(), MacroError> {
        let site = self.place(&[(gap, 2)])[0];
        self.push(MoveInstance::simple(MoveKind::T2Ins, site))
    }

    fn t2_del(&mut self, site: usize) -> Result<(), MacroError> {
        self.push(MoveInstance::simple(MoveKind::T2Del, site % self.d.len()))
    }

    /// Inserts chords `a` (sign `sign`) and `b` (opposite sign): their `role`
    /// ends after `gap1`, the other ends after `gap2`.
    fn r2_ins(&mut self, gap1: usize, gap2: usize, role: Role, sign: Sign, reversed: bool) -> Result<(Label, Label), MacroError> {
        let fresh = self.d.fresh_labels(2);
        let (a, b) = (fresh[0], fresh[1]);
        let sites = self.place(&[(gap1, 2), (gap2, 2)]);
        let params = MoveParams::Pair { second_site: sites[1], a, b, role, sign, reversed };
        self.push(MoveInstance::new(MoveKind::R2Ins, sites[0], params))?;
        Ok((a, b))
    }

    /// Deletes the deletion instance of `kind` removing chord `label` (and,
    /// for R2, chord `partner`).
    fn delete(&mut self, kind: MoveKind, label: Label, partner: Option<Label>) -> Result<(), MacroError> {
        let touches = |m: &MoveInstance| match m.params {
            MoveParams::Chord { label: l, .. } => l == label,
            MoveParams::Pair { a, b, .. } => {
                let p = partner.expect("R2 deletions name both chords");
                (a, b) == (label, p) || (a, b) == (p, label)
            }
            _ => false,
        };
        let m = enumerate_moves(&self.d, [kind].into_iter().collect(), Insertions::Skip)
            .into_iter()
            .find(touches)
            .ok_or_else(|| self.fail(format!("no {kind} for chord {label} in {}", self.d)))?;
        self.push(m)
    }

    fn t3(&mut self, kind: MoveKind, label: Label) -> Result<(), MacroError> {
        let tail = self.pos(label, Role::Tail)?;
        let site = if kind == MoveKind::T3Fwd { self.before(tail) } else { tail };
        self.push(MoveInstance::new(kind, site, MoveParams::Flip { label }))
    }

    fn r3(&mut self, variant: usize, top_label: Label) -> Result<(), MacroError> {
        let top = self.pos(top_label, Role::Tail)?;
        let m = r3_instance(&self.d, variant, top).ok_or_else(|| self.fail(format!("R3 case absent in {}", self.d)))?;
        self.push(m)
    }

    /// Moves the head of `x` past the adjacent tail of `y` (forward) or the
    /// tail of `x` past the adjacent head of `y` (reverse).
    fn pass(&mut self, x: Label, y: Label, direction: Direction) -> Result<(), MacroError> {
        let kind = if self.sign(x) == self.sign(y) { MacroKind::Fs } else { MacroKind::Fo };
        let role = if direction == Direction::Forward { Role::Head } else { Role::Tail };
        let site = self.pos(x, role)?;
        let steps = expand(&self.d, &MacroInstance { kind, site, direction })
            .map_err(|e| self.fail(format!("nested {kind}: {e}")))?;
        for s in steps {
            self.push(s)?;
        }
        Ok(())
    }
}

fn run_recipe(b: &mut Builder, site: usize) -> Result<(), MacroError> {
    let len = b.kind.trigger_len();
    let first = b.d.at(site).label().expect("checked trigger");
    let last = b.d.at(site + len - 1).label().expect("checked trigger");
    match b.kind {
        MacroKind::Fs | MacroKind::Fo => pass_recipe(b, first, last),
        MacroKind::Fu => fu_recipe(b, first, last),
        MacroKind::Fv => fv_recipe(b, first, last),
        MacroKind::F1ViaF2 => flip_recipe(b, first, last, MoveKind::F2),
        MacroKind::F3ViaF4 => flip_recipe(b, first, last, MoveKind::F4),
    }
}

/// `[x_h, z_t] -> [z_t, x_h]`: a clasp of two fresh chords turns the pair
/// into one corner of an R3 triangle; after R3 the clasp is untangled with
/// F1 and F2 and removed.
fn pass_recipe(b: &mut Builder, x: Label, z: Label) -> Result<(), MacroError> {
    let xt = b.pos(x, Role::Tail)?;
    if b.sign(x) == b.sign(z) {
        let zh = b.pos(z, Role::Head)?;
        let gap2 = b.before(zh);
        // x_t y_t w_t .. x_h z_t .. w_h y_h z_h
        let (y, w) = b.r2_ins(xt, gap2, Role::Tail, b.sign(x), true)?;
        b.r3(0, x)?;
        b.swap_at(MoveKind::F2, x, Role::Tail)?;
        b.swap_at(MoveKind::F1, z, Role::Head)?;
        b.delete(MoveKind::R2Del, y, Some(w))?;
    } else {
        let zh = b.pos(z, Role::Head)?;
        // x_t y_t w_t .. x_h z_t .. z_h y_h w_h
        let (y, w) = b.r2_ins(xt, zh, Role::Tail, b.sign(z), false)?;
        b.r3(1, x)?;
        b.swap_at(MoveKind::F2, x, Role::Tail)?;
        b.swap_at(MoveKind::F1, z, Role::Head)?;
        b.delete(MoveKind::R2Del, y, Some(w))?;
    }
    Ok(())
}

/// `[a_h, X, b_t] -> [b_t, X, a_h]`.
fn fu_recipe(b: &mut Builder, a: Label, t: Label) -> Result<(), MacroError> {
    if b.sign(a) == b.sign(t) {
        let eps = b.sign(t);
        let ah = b.pos(a, Role::Head)?;
        // a_h k_h k_t X b_t
        let k = b.chord_ins(MoveKind::R1Ins, ah, Role::Head, eps)?;
        let ah = b.pos(a, Role::Head)?;
        // c_t Y c_h a_h
        let gap = b.before(ah);
        let c = b.chord_ins(MoveKind::T4Ins, gap, Role::Tail, eps)?;
        b.swap_at(MoveKind::F4, k, Role::Tail)?;
        b.pass(k, t, Direction::Forward)?;
        b.delete(MoveKind::T4Del, k, None)?;
        b.pass(a, t, Direction::Forward)?;
        b.pass(c, t, Direction::Forward)?;
        b.swap_at(MoveKind::F4, c, Role::Tail)?;
        b.delete(MoveKind::R1Del, c, None)?;
    } else {
        // a pair of bars lets the far head of b flip, turning the passed
        // tail into a head that F1 can move
        let bh = b.pos(t, Role::Head)?;
        let gap = b.before(bh);
        b.t2_ins(gap)?;
        let ah = b.pos(a, Role::Head)?;
        let gap = b.before(ah);
        let c = b.chord_ins(MoveKind::T4Ins, gap, Role::Tail, Sign::Positive)?;
        b.swap_at(MoveKind::F1, c, Role::Head)?;
        b.t3(MoveKind::T3Fwd, t)?;
        b.swap_at(MoveKind::F1, c, Role::Head)?;
        b.swap_at(MoveKind::F1, a, Role::Head)?;
        b.t3(MoveKind::T3Bwd, c)?;
        b.swap_at(MoveKind::F1, c, Role::Head)?;
        b.swap_at(MoveKind::F1, c, Role::Head)?;
        b.delete(MoveKind::T4Del, c, None)?;
        b.t3(MoveKind::T3Fwd, t)?;
        let bh = b.pos(t, Role::Head)?;
        b.t2_del(bh + 1)?;
    }
    Ok(())
}

/// `[b_t, X, a_h] -> [a_h, X, b_t]`.
fn fv_recipe(b: &mut Builder, t: Label, a: Label) -> Result<(), MacroError> {
    let bt = b.pos(t, Role::Tail)?;
    // b_t k_t k_h X a_h
    let k = b.chord_ins(MoveKind::R1Ins, bt, Role::Tail, Sign::Positive)?;
    let bt = b.pos(t, Role::Tail)?;
    // c_h Y c_t b_t
    let gap = b.before(bt);
    let c = b.chord_ins(MoveKind::T4Ins, gap, Role::Head, Sign::Positive)?;
    b.swap_at(MoveKind::F3, k, Role::Head)?;
    b.pass(k, a, Direction::Reverse)?;
    b.delete(MoveKind::T4Del, k, None)?;
    b.pass(t, a, Direction::Reverse)?;
    b.pass(c, a, Direction::Reverse)?;
    b.swap_at(MoveKind::F3, c, Role::Head)?;
    b.delete(MoveKind::R1Del, c, None)?;
    Ok(())
}

/// `[a_h, (X,) b_h] -> [b_h, (X,) a_h]`: flip both chords with T3 so the
/// heads become tails, swap those with `swap`, and flip back.
fn flip_recipe(b: &mut Builder, a: Label, c: Label, swap: MoveKind) -> Result<(), MacroError> {
    for (label, role) in [(a, Role::Tail), (a, Role::Head), (c, Role::Tail)] {
        let p = b.pos(label, role)?;
        let gap = b.before(p);
        b.t2_ins(gap)?;
    }
    b.t3(MoveKind::T3Fwd, a)?;
    b.t3(MoveKind::T3Fwd, c)?;
    b.swap_at(swap, a, Role::Tail)?;
    b.t3(MoveKind::T3Bwd, a)?;
    b.t3(MoveKind::T3Bwd, c)?;
    for (label, role) in [(a, Role::Tail), (c, Role::Tail), (c, Role::Head)] {
        let p = b.pos(label, role)?;
        let n = b.d.len();
        b.t2_del(p + n - 2)?;
    }
    Ok(())
}

/// One line of the macro table check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroCheck {
    pub kind: MacroKind,
    pub signs: (Sign, Sign),
    pub direction: Direction,
    pub host: GaussDiagram,
    pub passed: bool,
    pub expansion_len: usize,
    pub kinds_used: KindSet,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MacroReport {
    pub rows: Vec<MacroCheck>,
}

impl MacroReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn rows_for(&self, kind: MacroKind) -> impl Iterator<Item = &MacroCheck> {
        self.rows.iter().filter(move |r| r.kind == kind)
    }

    /// Tab-separated table with a header row.
    pub fn to_table(&self) -> String {
        let mut out = String::from("kind\tsigns\tdirection\tresult\tlength\tkinds\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}{}\t{}\t{}\t{}\t{}\n",
                r.kind,
                r.signs.0.symbol(),
                r.signs.1.symbol(),
                r.direction,
                if r.passed { "pass" } else { "fail" },
                r.expansion_len,
                r.kinds_used
            ));
        }
        out
    }
}

impl fmt::Display for MacroReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            write!(
                f,
                "{:<10} {}{} {:<8} {} ({} steps) on {}",
                r.kind.name(),
                r.signs.0.symbol(),
                r.signs.1.symbol(),
                r.direction,
                if r.passed { "PASS" } else { "FAIL" },
                r.expansion_len,
                r.host
            )?;
            if let Some(d) = &r.detail {
                write!(f, " -- {d}")?;
            }
            writeln!(f)?;
        }
        let passed = self.rows.iter().filter(|r| r.passed).count();
        write!(f, "{passed}/{} passed", self.rows.len())
    }
}

/// Smallest diagram holding the forward trigger with the given signs for
/// its first and last chord, and the trigger's site.
pub fn minimal_host(kind: MacroKind, s1: Sign, s2: Sign) -> (GaussDiagram, usize) {
    let e = Entity::end;
    let (t, h) = (Role::Tail, Role::Head);
    let (v, site) = match kind {
        MacroKind::Fs | MacroKind::Fo => (vec![e(1, t, s1), e(1, h, s1), e(2, t, s2), e(2, h, s2)], 1),
        MacroKind::Fu => (vec![e(1, t, s1), e(1, h, s1), Entity::Bar, e(2, t, s2), e(2, h, s2)], 1),
        MacroKind::Fv => (vec![e(2, t, s2), e(1, t, s1), Entity::Bar, e(2, h, s2), e(1, h, s1)], 1),
        MacroKind::F1ViaF2 => (vec![e(1, t, s1), e(2, t, s2), e(1, h, s1), e(2, h, s2)], 2),
        MacroKind::F3ViaF4 => (vec![e(1, t, s1), e(2, t, s2), e(1, h, s1), Entity::Bar, e(2, h, s2)], 2),
    };
    (GaussDiagram::from_entities(v).expect("host is well formed"), site)
}

/// Expands `m` on `d`, replays it, and compares with the direct transposition
/// and the generating set.
pub fn check_expansion(d: &GaussDiagram, m: &MacroInstance) -> Result<(usize, KindSet), String> {
    let steps = expand(d, m).map_err(|e| e.to_string())?;
    let mut cur = d.clone();
    for (i, s) in steps.iter().enumerate() {
        cur = apply_move(&cur, s).map_err(|e| format!("step {i}: {e}"))?;
    }
    if cur != transpose(d, m) {
        return Err(format!("composite {cur} is not the transposition"));
    }
    let used: KindSet = steps.iter().map(|s| s.kind).collect();
    if !used.is_subset(m.kind.allowed_kinds()) {
        return Err(format!("uses {used}, outside {}", m.kind.allowed_kinds()));
    }
    Ok((steps.len(), used))
}

/// Checks every derived move, sign combination and direction on minimal hosts.
pub fn verify_macro_table() -> MacroReport {
    let mut rows = Vec::new();
    for kind in MacroKind::ALL {
        for s1 in Sign::ALL {
            for s2 in Sign::ALL {
                let same = s1 == s2;
                if (kind == MacroKind::Fs && !same) || (kind == MacroKind::Fo && same) {
                    continue;
                }
                let (fwd_host, site) = minimal_host(kind, s1, s2);
                for direction in [Direction::Forward, Direction::Reverse] {
                    let m = MacroInstance { kind, site, direction };
                    let host = match direction {
                        Direction::Forward => fwd_host.clone(),
                        Direction::Reverse => transpose(&fwd_host, &m),
                    };
                    let (passed, expansion_len, kinds_used, detail) = match check_expansion(&host, &m) {
                        Ok((len, used)) => (true, len, used, None),
                        Err(e) => (false, 0, KindSet::empty(), Some(e)),
                    };
                    rows.push(MacroCheck { kind, signs: (s1, s2), direction, host, passed, expansion_len, kinds_used, detail });
                }
            }
        }
    }
    MacroReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_gauss_code;

    #[test]
    fn table_passes() {
        let report = verify_macro_table();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.rows.len(), 40);
    }

    #[test]
    fn fs_on_a_small_host() {
        let d = parse_gauss_code("O1+U1+O2+U2+").unwrap();
        let m = MacroInstance::forward(MacroKind::Fs, 1);
        let steps = expand(&d, &m).unwrap();
        assert!(steps.iter().any(|s| s.kind == MoveKind::R3));
        assert_eq!(check_expansion(&d, &m).map(|r| r.0), Ok(steps.len()));
    }

    #[test]
    fn trigger_mismatch() {
        let d = parse_gauss_code("O1+U1+O2-U2-").unwrap();
        let err = expand(&d, &MacroInstance::forward(MacroKind::Fs, 1)).unwrap_err();
        assert!(matches!(err, MacroError::PatternMismatch { .. }));
        assert!(expand(&d, &MacroInstance::forward(MacroKind::Fo, 1)).is_ok());
        assert!(expand(&d, &MacroInstance::forward(MacroKind::Fu, 1)).is_err());
    }

    #[test]
    fn allowed_sets() {
        assert!(MacroKind::Fu.allowed_kinds().contains(MoveKind::R3));
        assert!(!MacroKind::F1ViaF2.allowed_kinds().contains(MoveKind::F1));
        assert!(!MacroKind::F3ViaF4.allowed_kinds().contains(MoveKind::F3));
        assert!(!MacroKind::Fu.allowed_kinds().contains(MoveKind::F2) || MacroKind::Fs.allowed_kinds().contains(MoveKind::F2));
    }
}

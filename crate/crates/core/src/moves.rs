//! Primitive moves as deterministic, invertible rewrites of the cyclic word.
//!
//! Every instance is anchored at an index (`site`) of the diagram it applies
//! to. Insertion and deletion instances of one family share their parameter
//! block: it describes the inserted (or deleted) entities and their indices in
//! the longer of the two diagrams, so inverting a move only flips its kind.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{Entity, GaussDiagram, Label, Role, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    R1Ins,
    R1Del,
    R2Ins,
    R2Del,
    R3,
    T2Ins,
    T2Del,
    T3Fwd,
    T3Bwd,
    T4Ins,
    T4Del,
    F1,
    F2,
    F3,
    F4,
}

/// Move families, i.e. kinds with the insert/delete or direction split removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    R1,
    R2,
    R3,
    T2,
    T3,
    T4,
    F1,
    F2,
    F3,
    F4,
}

impl MoveKind {
    pub const ALL: [MoveKind; 15] = [
        MoveKind::R1Ins,
        MoveKind::R1Del,
        MoveKind::R2Ins,
        MoveKind::R2Del,
        MoveKind::R3,
        MoveKind::T2Ins,
        MoveKind::T2Del,
        MoveKind::T3Fwd,
        MoveKind::T3Bwd,
        MoveKind::T4Ins,
        MoveKind::T4Del,
        MoveKind::F1,
        MoveKind::F2,
        MoveKind::F3,
        MoveKind::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Ins => "R1_INS",
            MoveKind::R1Del => "R1_DEL",
            MoveKind::R2Ins => "R2_INS",
            MoveKind::R2Del => "R2_DEL",
            MoveKind::R3 => "R3",
            MoveKind::T2Ins => "T2_INS",
            MoveKind::T2Del => "T2_DEL",
            MoveKind::T3Fwd => "T3_FWD",
            MoveKind::T3Bwd => "T3_BWD",
            MoveKind::T4Ins => "T4_INS",
            MoveKind::T4Del => "T4_DEL",
            MoveKind::F1 => "F1",
            MoveKind::F2 => "F2",
            MoveKind::F3 => "F3",
            MoveKind::F4 => "F4",
        }
    }

    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::R1Ins => MoveKind::R1Del,
            MoveKind::R1Del => MoveKind::R1Ins,
            MoveKind::R2Ins => MoveKind::R2Del,
            MoveKind::R2Del => MoveKind::R2Ins,
            MoveKind::T2Ins => MoveKind::T2Del,
            MoveKind::T2Del => MoveKind::T2Ins,
            MoveKind::T3Fwd => MoveKind::T3Bwd,
            MoveKind::T3Bwd => MoveKind::T3Fwd,
            MoveKind::T4Ins => MoveKind::T4Del,
            MoveKind::T4Del => MoveKind::T4Ins,
            k => k,
        }
    }

    pub fn family(self) -> Family {
        match self {
            MoveKind::R1Ins | MoveKind::R1Del => Family::R1,
            MoveKind::R2Ins | MoveKind::R2Del => Family::R2,
            MoveKind::R3 => Family::R3,
            MoveKind::T2Ins | MoveKind::T2Del => Family::T2,
            MoveKind::T3Fwd | MoveKind::T3Bwd => Family::T3,
            MoveKind::T4Ins | MoveKind::T4Del => Family::T4,
            MoveKind::F1 => Family::F1,
            MoveKind::F2 => Family::F2,
            MoveKind::F3 => Family::F3,
            MoveKind::F4 => Family::F4,
        }
    }

    pub fn is_insertion(self) -> bool {
        matches!(self, MoveKind::R1Ins | MoveKind::R2Ins | MoveKind::T2Ins | MoveKind::T4Ins)
    }

    /// Change in (chord count, bar count).
    pub fn count_delta(self) -> (i64, i64) {
        match self {
            MoveKind::R1Ins => (1, 0),
            MoveKind::R1Del => (-1, 0),
            MoveKind::R2Ins => (2, 0),
            MoveKind::R2Del => (-2, 0),
            MoveKind::T2Ins => (0, 2),
            MoveKind::T2Del => (0, -2),
            MoveKind::T4Ins => (1, 1),
            MoveKind::T4Del => (-1, -1),
            _ => (0, 0),
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown move kind {0:?}")]
pub struct UnknownKind(pub String);

impl FromStr for MoveKind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> Result<MoveKind, UnknownKind> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}

impl Family {
    pub fn kinds(self) -> &'static [MoveKind] {
        match self {
            Family::R1 => &[MoveKind::R1Ins, MoveKind::R1Del],
            Family::R2 => &[MoveKind::R2Ins, MoveKind::R2Del],
            Family::R3 => &[MoveKind::R3],
            Family::T2 => &[MoveKind::T2Ins, MoveKind::T2Del],
            Family::T3 => &[MoveKind::T3Fwd, MoveKind::T3Bwd],
            Family::T4 => &[MoveKind::T4Ins, MoveKind::T4Del],
            Family::F1 => &[MoveKind::F1],
            Family::F2 => &[MoveKind::F2],
            Family::F3 => &[MoveKind::F3],
            Family::F4 => &[MoveKind::F4],
        }
    }
}

/// A small set of move kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KindSet(u16);

impl KindSet {
    pub fn empty() -> KindSet {
        KindSet(0)
    }

    pub fn all() -> KindSet {
        MoveKind::ALL.into_iter().collect()
    }

    pub fn of_families(families: &[Family]) -> KindSet {
        families.iter().flat_map(|f| f.kinds().iter().copied()).collect()
    }

    pub fn contains(self, k: MoveKind) -> bool {
        self.0 & (1 << k as u16) != 0
    }

    pub fn insert(&mut self, k: MoveKind) {
        self.0 |= 1 << k as u16;
    }

    pub fn union(self, other: KindSet) -> KindSet {
        KindSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: KindSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = MoveKind> {
        MoveKind::ALL.into_iter().filter(move |k| self.contains(*k))
    }

    /// Parses a comma-separated list of kind names; a family name such as
    /// `T3` or `R2` stands for all of its kinds.
    pub fn parse_list(s: &str) -> Result<KindSet, UnknownKind> {
        let mut set = KindSet::empty();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if let Ok(k) = part.parse::<MoveKind>() {
                set.insert(k);
                continue;
            }
            let fam = MoveKind::ALL
                .into_iter()
                .map(MoveKind::family)
                .find(|f| format!("{f:?}") == part)
                .ok_or_else(|| UnknownKind(part.to_string()))?;
            set = set.union(KindSet::of_families(&[fam]));
        }
        Ok(set)
    }
}

impl FromIterator<MoveKind> for KindSet {
    fn from_iter<I: IntoIterator<Item = MoveKind>>(iter: I) -> KindSet {
        let mut s = KindSet::empty();
        for k in iter {
            s.insert(k);
        }
        s
    }
}

impl fmt::Display for KindSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(MoveKind::name).collect();
        f.write_str(&names.join(","))
    }
}

/// Kind-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveParams {
    /// T2 and F1..F4: the site says everything.
    None,
    /// R1 and T4: the chord's label, the role of its first end and its sign.
    Chord { label: Label, first: Role, sign: Sign },
    /// R2. The pair at `site` is `[a role sign, b role -sign]`; the pair at
    /// `second_site` holds the opposite roles, as `[b, a]` when `reversed`
    /// and `[a, b]` otherwise.
    Pair { second_site: usize, a: Label, b: Label, role: Role, sign: Sign, reversed: bool },
    /// R3: variant index into [`R3_VARIANTS`] and the anchors of the second
    /// and third pairs; `site` anchors the first.
    Triangle { variant: usize, second_site: usize, third_site: usize },
    /// T3: the chord passing through the two bars.
    Flip { label: Label },
}

/// A fully parameterized primitive move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub site: usize,
    pub params: MoveParams,
}

impl MoveInstance {
    pub fn new(kind: MoveKind, site: usize, params: MoveParams) -> MoveInstance {
        MoveInstance { kind, site, params }
    }

    pub fn simple(kind: MoveKind, site: usize) -> MoveInstance {
        MoveInstance::new(kind, site, MoveParams::None)
    }
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.site)?;
        let p = self.params.to_string();
        if p != "-" {
            write!(f, "[{p}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{kind} pattern absent at site {site}: {reason}")]
    PatternMismatch { kind: MoveKind, site: usize, reason: String },
    #[error("parameters {params} do not fit move kind {kind}")]
    BadParams { kind: MoveKind, params: String },
}

fn mismatch(m: &MoveInstance, reason: impl Into<String>) -> MoveError {
    MoveError::PatternMismatch { kind: m.kind, site: m.site, reason: reason.into() }
}

/// One R3 orientation case: three adjacent pairs over three chord variables.
/// Entry `(v, role)` is the end of chord variable `v` with that role; chord
/// `v`'s sign is chord 0's sign, negated when `negated[v]` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct R3Variant {
    pub name: &'static str,
    pub pairs: [[(usize, Role); 2]; 3],
    pub negated: [bool; 3],
}

/// Enabled R3 cases. Each matches either as written or with all three pairs
/// reversed, which is the same case after the move.
///
/// Variable 0 joins the top and middle strands, 1 the top and bottom, 2 the
/// middle and bottom; the top strand passes over both others.
pub const R3_VARIANTS: &[R3Variant] = &[
    // s1 s2 s1 = s2 s1 s2 with three crossings of one sign
    R3Variant {
        name: "braid-uniform",
        pairs: [
            [(0, Role::Tail), (1, Role::Tail)],
            [(0, Role::Head), (2, Role::Tail)],
            [(1, Role::Head), (2, Role::Head)],
        ],
        negated: [false, false, false],
    },
    // s1^-1 s2 s1 = s2 s1 s2^-1
    R3Variant {
        name: "braid-mixed",
        pairs: [
            [(0, Role::Tail), (1, Role::Tail)],
            [(0, Role::Head), (2, Role::Tail)],
            [(2, Role::Head), (1, Role::Head)],
        ],
        negated: [false, true, true],
    },
];

#[inline]
fn wrap(i: usize, n: usize) -> usize {
    i % n
}

/// Builds a sequence of length `base.len() + placed.len()` with `placed`
/// entities at their given indices and `base` filling the rest in order.
fn insert_at(base: &[Entity], placed: &[(usize, Entity)]) -> Vec<Entity> {
    let total = base.len() + placed.len();
    let mut slots: Vec<Option<Entity>> = vec![None; total];
    for &(i, e) in placed {
        slots[i] = Some(e);
    }
    let mut rest = base.iter();
    slots
        .into_iter()
        .map(|s| s.unwrap_or_else(|| *rest.next().expect("placement indices are distinct")))
        .collect()
}

fn remove_at(base: &[Entity], positions: &[usize]) -> Vec<Entity> {
    base.iter()
        .enumerate()
        .filter(|(i, _)| !positions.contains(i))
        .map(|(_, e)| *e)
        .collect()
}

fn all_distinct(ps: &[usize]) -> bool {
    let set: BTreeSet<usize> = ps.iter().copied().collect();
    set.len() == ps.len()
}

/// Entities and their indices, in the longer diagram, for an insert/delete
/// family instance whose longer diagram has `total` entities.
fn layout(m: &MoveInstance, total: usize) -> Result<Vec<(usize, Entity)>, MoveError> {
    let s = m.site;
    if s >= total {
        return Err(mismatch(m, format!("site out of range for length {total}")));
    }
    let fam = m.kind.family();
    let placed = match (fam, m.params) {
        (Family::R1, MoveParams::Chord { label, first, sign }) => vec![
            (s, Entity::end(label, first, sign)),
            (wrap(s + 1, total), Entity::end(label, first.opposite(), sign)),
        ],
        (Family::T4, MoveParams::Chord { label, first, sign }) => vec![
            (s, Entity::end(label, first, sign)),
            (wrap(s + 1, total), Entity::Bar),
            (wrap(s + 2, total), Entity::end(label, first.opposite(), sign)),
        ],
        (Family::T2, MoveParams::None) => vec![(s, Entity::Bar), (wrap(s + 1, total), Entity::Bar)],
        (Family::R2, MoveParams::Pair { second_site, a, b, role, sign, reversed }) => {
            if second_site >= total {
                return Err(mismatch(m, "second site out of range"));
            }
            if a == b {
                return Err(mismatch(m, "R2 needs two distinct chords"));
            }
            let q = second_site;
            let (ea, eb) = (Entity::end(a, role.opposite(), sign), Entity::end(b, role.opposite(), sign.flip()));
            let (q0, q1) = if reversed { (eb, ea) } else { (ea, eb) };
            vec![
                (s, Entity::end(a, role, sign)),
                (wrap(s + 1, total), Entity::end(b, role, sign.flip())),
                (q, q0),
                (wrap(q + 1, total), q1),
            ]
        }
        _ => {
            return Err(MoveError::BadParams { kind: m.kind, params: m.params.to_string() });
        }
    };
    let positions: Vec<usize> = placed.iter().map(|p| p.0).collect();
    if !all_distinct(&positions) {
        return Err(mismatch(m, "pattern positions overlap"));
    }
    Ok(placed)
}

fn apply_insertion(d: &GaussDiagram, m: &MoveInstance, added: usize) -> Result<Vec<Entity>, MoveError> {
    let placed = layout(m, d.len() + added)?;
    for (_, e) in &placed {
        if let Some(l) = e.label() {
            if l == 0 {
                return Err(mismatch(m, "labels must be positive"));
            }
            if d.contains_label(l) {
                return Err(mismatch(m, format!("label {l} already in use")));
            }
        }
    }
    Ok(insert_at(d.entities(), &placed))
}

fn apply_deletion(d: &GaussDiagram, m: &MoveInstance) -> Result<Vec<Entity>, MoveError> {
    let placed = layout(m, d.len())?;
    for &(i, e) in &placed {
        if d.at(i) != e {
            return Err(mismatch(m, format!("expected {e} at {i}, found {}", d.at(i))));
        }
    }
    let positions: Vec<usize> = placed.iter().map(|p| p.0).collect();
    Ok(remove_at(d.entities(), &positions))
}

fn swap(d: &GaussDiagram, i: usize, j: usize) -> Vec<Entity> {
    let mut v = d.entities().to_vec();
    v.swap(i, j);
    v
}

fn apply_transposition(d: &GaussDiagram, m: &MoveInstance) -> Result<Vec<Entity>, MoveError> {
    if m.params != MoveParams::None {
        return Err(MoveError::BadParams { kind: m.kind, params: m.params.to_string() });
    }
    let n = d.len();
    let (role, gap) = match m.kind {
        MoveKind::F1 => (Role::Head, 1),
        MoveKind::F2 => (Role::Tail, 1),
        MoveKind::F3 => (Role::Head, 2),
        MoveKind::F4 => (Role::Tail, 2),
        _ => unreachable!(),
    };
    if m.site >= n || n < gap + 1 {
        return Err(mismatch(m, "site out of range"));
    }
    let (i, j) = (m.site, wrap(m.site + gap, n));
    let (x, y) = (d.at(i), d.at(j));
    if !x.has_role(role) || !y.has_role(role) {
        return Err(mismatch(m, format!("need two {role:?} ends, found {x} and {y}")));
    }
    if gap == 2 && !d.at(m.site + 1).is_bar() {
        return Err(mismatch(m, "no bar between the two ends"));
    }
    Ok(swap(d, i, j))
}

/// Positions of chord `label`'s tail and head.
fn chord_ends(d: &GaussDiagram, label: Label) -> Option<(usize, usize)> {
    Some((d.position(label, Role::Tail)?, d.position(label, Role::Head)?))
}

fn apply_t3(d: &GaussDiagram, m: &MoveInstance) -> Result<Vec<Entity>, MoveError> {
    let MoveParams::Flip { label } = m.params else {
        return Err(MoveError::BadParams { kind: m.kind, params: m.params.to_string() });
    };
    let n = d.len();
    let (tail, head) = chord_ends(d, label).ok_or_else(|| mismatch(m, format!("no chord {label}")))?;
    let forward = m.kind == MoveKind::T3Fwd;
    // the bar sits before each end (forward) or after it (backward)
    let bar_of = |p: usize| if forward { wrap(p + n - 1, n) } else { wrap(p + 1, n) };
    let expected_site = if forward { bar_of(tail) } else { tail };
    if m.site != expected_site {
        return Err(mismatch(m, format!("chord {label} anchors at {expected_site}")));
    }
    for p in [tail, head] {
        if !d.at(bar_of(p)).is_bar() {
            return Err(mismatch(m, format!("no bar next to {}", d.at(p))));
        }
    }
    let mut v = d.entities().to_vec();
    for p in [tail, head] {
        let Entity::End { label, role, sign } = v[p] else { unreachable!() };
        let b = bar_of(p);
        v[b] = Entity::End { label, role: role.opposite(), sign: sign.flip() };
        v[p] = Entity::Bar;
    }
    Ok(v)
}

/// Binds the chord variables of `variant` against the pairs anchored at
/// `sites`, with every pair read backwards when `reversed`.
fn match_r3(d: &GaussDiagram, variant: &R3Variant, reversed: bool, sites: [usize; 3]) -> Option<[(Label, Sign); 3]> {
    let n = d.len();
    let mut positions = Vec::with_capacity(6);
    for s in sites {
        positions.push(s);
        positions.push(wrap(s + 1, n));
    }
    if !all_distinct(&positions) {
        return None;
    }
    let mut bound: [Option<(Label, Sign)>; 3] = [None; 3];
    for (k, pair) in variant.pairs.iter().enumerate() {
        for (off, &(var, role)) in pair.iter().enumerate() {
            let off = if reversed { 1 - off } else { off };
            let Entity::End { label, role: r, sign } = d.at(sites[k] + off) else {
                return None;
            };
            if r != role {
                return None;
            }
            match bound[var] {
                Some((l, s)) if l != label || s != sign => return None,
                Some(_) => {}
                None => {
                    if bound.iter().flatten().any(|&(l, _)| l == label) {
                        return None;
                    }
                    bound[var] = Some((label, sign));
                }
            }
        }
    }
    let b = bound.map(|x| x.expect("every variable occurs in the template"));
    for v in 1..3 {
        let want = if variant.negated[v] { b[0].1.flip() } else { b[0].1 };
        if b[v].1 != want {
            return None;
        }
    }
    Some(b)
}

/// Finds the second and third anchors for an R3 instance whose first pair is
/// anchored at `top`.
fn locate_r3(d: &GaussDiagram, variant: &R3Variant, reversed: bool, top: usize) -> Option<[usize; 3]> {
    let n = d.len();
    if n < 6 {
        return None;
    }
    let mut labels: [Option<Label>; 3] = [None; 3];
    let mut sites = [top, 0, 0];
    for (k, pair) in variant.pairs.iter().enumerate() {
        if k > 0 {
            let (off, &(var, role)) = pair.iter().enumerate().find(|(_, (v, _))| labels[*v].is_some())?;
            let off = if reversed { 1 - off } else { off };
            let p = d.position(labels[var]?, role)?;
            sites[k] = wrap(p + n - off, n);
        }
        for (off, &(var, _)) in pair.iter().enumerate() {
            let off = if reversed { 1 - off } else { off };
            if labels[var].is_none() {
                labels[var] = Some(d.at(sites[k] + off).label()?);
            }
        }
    }
    match_r3(d, variant, reversed, sites).map(|_| sites)
}

/// The R3 instance of `variant` whose first pair is anchored at `top`, if
/// the case is present there.
pub fn r3_instance(d: &GaussDiagram, variant: usize, top: usize) -> Option<MoveInstance> {
    let v = R3_VARIANTS.get(variant)?;
    [false, true].into_iter().find_map(|reversed| {
        let sites = locate_r3(d, v, reversed, top)?;
        let params = MoveParams::Triangle { variant, second_site: sites[1], third_site: sites[2] };
        Some(MoveInstance::new(MoveKind::R3, top, params))
    })
}

fn apply_r3(d: &GaussDiagram, m: &MoveInstance) -> Result<Vec<Entity>, MoveError> {
    let MoveParams::Triangle { variant, second_site, third_site } = m.params else {
        return Err(MoveError::BadParams { kind: m.kind, params: m.params.to_string() });
    };
    let v = R3_VARIANTS
        .get(variant)
        .ok_or_else(|| mismatch(m, format!("no R3 variant {variant}")))?;
    let n = d.len();
    let sites = [m.site, second_site, third_site];
    if sites.iter().any(|&s| s >= n) {
        return Err(mismatch(m, "site out of range"));
    }
    if match_r3(d, v, false, sites).is_none() && match_r3(d, v, true, sites).is_none() {
        return Err(mismatch(m, format!("R3 case {} absent", v.name)));
    }
    let mut out = d.entities().to_vec();
    for s in sites {
        out.swap(s, wrap(s + 1, n));
    }
    Ok(out)
}

/// Applies one primitive move.
pub fn apply_move(d: &GaussDiagram, m: &MoveInstance) -> Result<GaussDiagram, MoveError> {
    let out = match m.kind {
        MoveKind::R1Ins => apply_insertion(d, m, 2)?,
        MoveKind::R2Ins => apply_insertion(d, m, 4)?,
        MoveKind::T2Ins => apply_insertion(d, m, 2)?,
        MoveKind::T4Ins => apply_insertion(d, m, 3)?,
        MoveKind::R1Del | MoveKind::R2Del | MoveKind::T2Del | MoveKind::T4Del => apply_deletion(d, m)?,
        MoveKind::F1 | MoveKind::F2 | MoveKind::F3 | MoveKind::F4 => apply_transposition(d, m)?,
        MoveKind::T3Fwd | MoveKind::T3Bwd => apply_t3(d, m)?,
        MoveKind::R3 => apply_r3(d, m)?,
    };
    let result = GaussDiagram::from_entities_unchecked(out);
    let (dc, db) = m.kind.count_delta();
    assert_eq!(
        (result.chord_count() as i64 - d.chord_count() as i64, result.bar_count() as i64 - d.bar_count() as i64),
        (dc, db),
        "count delta violated by {m}"
    );
    Ok(result)
}

/// The instance undoing `m`, given the diagram `m` produced.
pub fn invert(m: &MoveInstance, d_after: &GaussDiagram) -> MoveInstance {
    let kind = m.kind.inverse();
    let site = match (m.kind, m.params) {
        (MoveKind::T3Fwd, MoveParams::Flip { label }) => d_after.position(label, Role::Tail).unwrap_or(m.site),
        (MoveKind::T3Bwd, MoveParams::Flip { label }) => d_after
            .position(label, Role::Tail)
            .map_or(m.site, |p| wrap(p + d_after.len() - 1, d_after.len())),
        _ => m.site,
    };
    MoveInstance { kind, site, params: m.params }
}

/// How insertion kinds are treated by [`enumerate_moves`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertions {
    /// Insertion kinds are left out.
    Skip,
    /// Every non-wrapping position, fresh minimal labels, both end orders,
    /// both signs and (for R2) both pair orders.
    Canonical,
}

/// Every applicable instance of the requested kinds, without duplicates.
pub fn enumerate_moves(d: &GaussDiagram, kinds: KindSet, insertions: Insertions) -> Vec<MoveInstance> {
    let mut out = Vec::new();
    for kind in kinds.iter() {
        if kind.is_insertion() {
            if insertions == Insertions::Canonical {
                enumerate_insertions(d, kind, &mut out);
            }
        } else {
            enumerate_kind(d, kind, &mut out);
        }
    }
    out
}

fn enumerate_insertions(d: &GaussDiagram, kind: MoveKind, out: &mut Vec<MoveInstance>) {
    let n = d.len();
    match kind {
        MoveKind::R1Ins | MoveKind::T4Ins => {
            let label = d.fresh_label();
            for site in 0..=n {
                for first in Role::ALL {
                    for sign in Sign::ALL {
                        out.push(MoveInstance::new(kind, site, MoveParams::Chord { label, first, sign }));
                    }
                }
            }
        }
        MoveKind::T2Ins => out.extend((0..=n).map(|s| MoveInstance::simple(kind, s))),
        MoveKind::R2Ins => {
            let fresh = d.fresh_labels(2);
            let total = n + 4;
            for p in 0..total - 1 {
                for q in p + 2..total - 1 {
                    for role in Role::ALL {
                        for sign in Sign::ALL {
                            for reversed in [true, false] {
                                let params = MoveParams::Pair { second_site: q, a: fresh[0], b: fresh[1], role, sign, reversed };
                                out.push(MoveInstance::new(kind, p, params));
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
}

fn enumerate_kind(d: &GaussDiagram, kind: MoveKind, out: &mut Vec<MoveInstance>) {
    let n = d.len();
    let e = d.entities();
    // on a two-entity circle both adjacencies are the same pair
    let pair_sites = if n == 2 { 1 } else { n };
    match kind {
        MoveKind::R1Del => {
            for p in 0..pair_sites.min(n) {
                if let (Entity::End { label, role, sign }, Entity::End { label: l2, .. }) = (e[p], d.at(p + 1)) {
                    if label == l2 && n >= 2 {
                        out.push(MoveInstance::new(kind, p, MoveParams::Chord { label, first: role, sign }));
                    }
                }
            }
        }
        MoveKind::T2Del => {
            for p in 0..pair_sites.min(n) {
                if n >= 2 && e[p].is_bar() && d.at(p + 1).is_bar() {
                    out.push(MoveInstance::simple(kind, p));
                }
            }
        }
        MoveKind::T4Del => {
            if n < 3 {
                return;
            }
            for p in 0..n {
                if let (Entity::End { label, role, sign }, true, Some(l2)) = (e[p], d.at(p + 1).is_bar(), d.at(p + 2).label()) {
                    if label == l2 {
                        out.push(MoveInstance::new(kind, p, MoveParams::Chord { label, first: role, sign }));
                    }
                }
            }
        }
        MoveKind::R2Del => {
            for p in 0..n {
                let (Entity::End { label: a, role, sign }, Entity::End { label: b, role: rb, sign: sb }) = (e[p], d.at(p + 1)) else {
                    continue;
                };
                if a == b || rb != role || sb == sign {
                    continue;
                }
                let other = role.opposite();
                let (Some(qa), Some(qb)) = (d.position(a, other), d.position(b, other)) else { continue };
                let (q, reversed) = if wrap(qa + 1, n) == qb {
                    (qa, false)
                } else if wrap(qb + 1, n) == qa {
                    (qb, true)
                } else {
                    continue;
                };
                if p < q {
                    let params = MoveParams::Pair { second_site: q, a, b, role, sign, reversed };
                    out.push(MoveInstance::new(kind, p, params));
                }
            }
        }
        MoveKind::R3 => {
            let mut seen = BTreeSet::new();
            for top in 0..n {
                for (vi, v) in R3_VARIANTS.iter().enumerate() {
                    for reversed in [false, true] {
                        if let Some(sites) = locate_r3(d, v, reversed, top) {
                            if seen.insert(sites) {
                                let params = MoveParams::Triangle { variant: vi, second_site: sites[1], third_site: sites[2] };
                                out.push(MoveInstance::new(kind, top, params));
                            }
                        }
                    }
                }
            }
        }
        MoveKind::T3Fwd | MoveKind::T3Bwd => {
            if n < 4 {
                return;
            }
            for label in d.labels() {
                let (tail, head) = chord_ends(d, label).expect("label is present");
                let forward = kind == MoveKind::T3Fwd;
                let bar_of = |p: usize| if forward { wrap(p + n - 1, n) } else { wrap(p + 1, n) };
                if e[bar_of(tail)].is_bar() && e[bar_of(head)].is_bar() {
                    let site = if forward { bar_of(tail) } else { tail };
                    out.push(MoveInstance::new(kind, site, MoveParams::Flip { label }));
                }
            }
        }
        MoveKind::F1 | MoveKind::F2 | MoveKind::F3 | MoveKind::F4 => {
            let (role, gap) = match kind {
                MoveKind::F1 => (Role::Head, 1),
                MoveKind::F2 => (Role::Tail, 1),
                MoveKind::F3 => (Role::Head, 2),
                _ => (Role::Tail, 2),
            };
            if n < gap + 2 {
                return;
            }
            for p in 0..n {
                if e[p].has_role(role) && d.at(p + gap).has_role(role) && (gap == 1 || d.at(p + 1).is_bar()) {
                    out.push(MoveInstance::simple(kind, p));
                }
            }
        }
        _ => unreachable!("insertions are handled separately"),
    }
}

// Canonical text for parameters, used by the trace format.

impl fmt::Display for MoveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MoveParams::None => f.write_str("-"),
            MoveParams::Chord { label, first, sign } => {
                write!(f, "label={label},first={},sign={}", first.letter(), sign.symbol())
            }
            MoveParams::Pair { second_site, a, b, role, sign, reversed } => write!(
                f,
                "second={second_site},a={a},b={b},role={},sign={},reversed={}",
                role.letter(),
                sign.symbol(),
                u8::from(reversed)
            ),
            MoveParams::Triangle { variant, second_site, third_site } => {
                write!(f, "variant={variant},second={second_site},third={third_site}")
            }
            MoveParams::Flip { label } => write!(f, "label={label}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read move parameters {0:?}")]
pub struct ParamsParseError(pub String);

impl MoveParams {
    /// Reads the canonical text of the parameter block for `kind`.
    pub fn parse(kind: MoveKind, text: &str) -> Result<MoveParams, ParamsParseError> {
        let err = || ParamsParseError(text.to_string());
        let fields: Vec<(&str, &str)> = if text == "-" {
            Vec::new()
        } else {
            text.split(',').map(|kv| kv.split_once('=').ok_or_else(err)).collect::<Result<_, _>>()?
        };
        let get = |key: &str| fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).ok_or_else(err);
        let num = |key: &str| get(key)?.parse::<u32>().map_err(|_| err());
        let idx = |key: &str| get(key)?.parse::<usize>().map_err(|_| err());
        let role = |key: &str| {
            let v = get(key)?;
            let mut cs = v.chars();
            match (cs.next().and_then(Role::from_letter), cs.next()) {
                (Some(r), None) => Ok(r),
                _ => Err(err()),
            }
        };
        let sign = |key: &str| match get(key)? {
            "+" => Ok(Sign::Positive),
            "-" => Ok(Sign::Negative),
            _ => Err(err()),
        };
        let params = match kind.family() {
            Family::T2 | Family::F1 | Family::F2 | Family::F3 | Family::F4 => MoveParams::None,
            Family::R1 | Family::T4 => MoveParams::Chord { label: num("label")?, first: role("first")?, sign: sign("sign")? },
            Family::R2 => MoveParams::Pair {
                second_site: idx("second")?,
                a: num("a")?,
                b: num("b")?,
                role: role("role")?,
                sign: sign("sign")?,
                reversed: match get("reversed")? {
                    "1" => true,
                    "0" => false,
                    _ => return Err(err()),
                },
            },
            Family::R3 => MoveParams::Triangle { variant: idx("variant")?, second_site: idx("second")?, third_site: idx("third")? },
            Family::T3 => MoveParams::Flip { label: num("label")? },
        };
        if params.to_string() != text {
            return Err(err());
        }
        Ok(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_gauss_code;

    fn gd(s: &str) -> GaussDiagram {
        parse_gauss_code(s).unwrap()
    }

    fn only(d: &GaussDiagram, kind: MoveKind) -> Vec<MoveInstance> {
        enumerate_moves(d, [kind].into_iter().collect(), Insertions::Skip)
    }

    #[test]
    fn r1_deletion_of_a_kink() {
        let d = gd("O1+U1+");
        let ms = only(&d, MoveKind::R1Del);
        assert_eq!(ms.len(), 1);
        let after = apply_move(&d, &ms[0]).unwrap();
        assert!(after.is_empty());
        let back = invert(&ms[0], &after);
        assert_eq!(back.kind, MoveKind::R1Ins);
        assert_eq!(apply_move(&after, &back).unwrap(), d);
    }

    #[test]
    fn r1_across_the_basepoint() {
        let d = gd("U1-O2+U2+O1-");
        let ms = only(&d, MoveKind::R1Del);
        assert_eq!(ms.len(), 2);
        for m in ms {
            let after = apply_move(&d, &m).unwrap();
            assert_eq!(after.counts(), (1, 0));
            assert_eq!(apply_move(&after, &invert(&m, &after)).unwrap(), d);
        }
    }

    #[test]
    fn f1_swaps_adjacent_heads() {
        let d = gd("O1-O4+U1-U4+");
        let ms = only(&d, MoveKind::F1);
        assert_eq!(ms, vec![MoveInstance::simple(MoveKind::F1, 2)]);
        let after = apply_move(&d, &ms[0]).unwrap();
        assert_eq!(after, gd("O1-O4+U4+U1-"));
        assert_eq!(invert(&ms[0], &after), ms[0]);
        assert_eq!(apply_move(&after, &ms[0]).unwrap(), d);
    }

    #[test]
    fn t4_deletes_a_curl_with_bar() {
        let d = gd("U1+bO1+");
        let ms = only(&d, MoveKind::T4Del);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, 0);
        assert!(apply_move(&d, &ms[0]).unwrap().is_empty());
    }

    #[test]
    fn t3_moves_bars_and_flips_the_chord() {
        let d = gd("bO1+bU1+");
        let fwd = only(&d, MoveKind::T3Fwd);
        assert_eq!(fwd.len(), 1);
        let after = apply_move(&d, &fwd[0]).unwrap();
        assert_eq!(after.to_string(), "U1-bO1-b");
        let back = invert(&fwd[0], &after);
        assert_eq!(back.kind, MoveKind::T3Bwd);
        assert_eq!(apply_move(&after, &back).unwrap(), d);
        // the same word also matches the backward pattern
        assert_eq!(only(&d, MoveKind::T3Bwd).len(), 1);
    }

    #[test]
    fn t3_across_the_basepoint() {
        let d = gd("O1+bU1+b");
        let fwd = only(&d, MoveKind::T3Fwd);
        assert_eq!(fwd.len(), 1);
        assert_eq!(fwd[0].site, 3);
        let after = apply_move(&d, &fwd[0]).unwrap();
        assert_eq!(after.to_string(), "bO1-bU1-");
        assert_eq!(apply_move(&after, &invert(&fwd[0], &after)).unwrap(), d);
    }

    #[test]
    fn r2_both_pair_orders() {
        // antiparallel strands: heads in reversed order
        let anti = gd("O1+O2-U2-U1+");
        let ms = only(&anti, MoveKind::R2Del);
        assert_eq!(ms.len(), 1);
        assert!(apply_move(&anti, &ms[0]).unwrap().is_empty());
        // parallel strands
        let par = gd("O1+O2-bU1+U2-");
        let ms = only(&par, MoveKind::R2Del);
        assert_eq!(ms.len(), 1);
        assert_eq!(apply_move(&par, &ms[0]).unwrap(), gd("b"));
        // equal signs are not an R2 pattern
        assert!(only(&gd("O1+O2+U2+U1+"), MoveKind::R2Del).is_empty());
    }

    #[test]
    fn r2_insertion_round_trip() {
        let d = gd("bO3+U3+");
        let ins = enumerate_moves(&d, [MoveKind::R2Ins].into_iter().collect(), Insertions::Canonical);
        assert!(!ins.is_empty());
        for m in ins {
            let after = apply_move(&d, &m).unwrap();
            assert_eq!(after.counts(), (3, 1));
            let del = invert(&m, &after);
            assert_eq!(apply_move(&after, &del).unwrap(), d);
            assert!(only(&after, MoveKind::R2Del).len() >= 1);
        }
    }

    #[test]
    fn r3_uniform_case_round_trip() {
        // top [O1 O2], middle [U1 O3], bottom [U2 U3]
        let d = gd("O1+O2+U1+O3+U2+U3+");
        let ms = only(&d, MoveKind::R3);
        assert_eq!(ms.len(), 1);
        let after = apply_move(&d, &ms[0]).unwrap();
        assert_eq!(after, gd("O2+O1+O3+U1+U3+U2+"));
        assert_eq!(invert(&ms[0], &after), ms[0]);
        assert_eq!(apply_move(&after, &ms[0]).unwrap(), d);
        assert_eq!(only(&after, MoveKind::R3).len(), 1);
        // wrong sign pattern
        assert!(only(&gd("O1+O2+U1+O3-U2+U3-"), MoveKind::R3).is_empty());
    }

    #[test]
    fn r3_mixed_case() {
        // top [O1 O2], middle [U1 O3], bottom [U3 U2], chords 2 and 3 opposite to 1
        let d = gd("O1+O2-U1+O3-U3-U2-");
        let ms = only(&d, MoveKind::R3);
        assert_eq!(ms.len(), 1);
        let after = apply_move(&d, &ms[0]).unwrap();
        assert_eq!(apply_move(&after, &ms[0]).unwrap(), d);
    }

    #[test]
    fn pattern_mismatch_is_reported() {
        let d = gd("O1+U1+");
        let bad = MoveInstance::simple(MoveKind::F1, 0);
        assert!(matches!(apply_move(&d, &bad), Err(MoveError::PatternMismatch { .. })));
        let stale = MoveInstance::new(MoveKind::R1Del, 0, MoveParams::Chord { label: 2, first: Role::Tail, sign: Sign::Positive });
        assert!(apply_move(&d, &stale).is_err());
        let used = MoveInstance::new(MoveKind::R1Ins, 0, MoveParams::Chord { label: 1, first: Role::Tail, sign: Sign::Positive });
        assert!(apply_move(&d, &used).is_err());
        let wrong = MoveInstance::new(MoveKind::T2Del, 0, MoveParams::Flip { label: 1 });
        assert!(matches!(apply_move(&d, &wrong), Err(MoveError::BadParams { .. })));
    }

    #[test]
    fn kind_names_and_params_text() {
        for k in MoveKind::ALL {
            assert_eq!(k.name().parse::<MoveKind>(), Ok(k));
            assert_eq!(k.inverse().inverse(), k);
        }
        let p = MoveParams::Pair { second_site: 5, a: 3, b: 4, role: Role::Head, sign: Sign::Negative, reversed: true };
        assert_eq!(MoveParams::parse(MoveKind::R2Del, &p.to_string()), Ok(p));
        assert_eq!(MoveParams::parse(MoveKind::F3, "-"), Ok(MoveParams::None));
        assert!(MoveParams::parse(MoveKind::R1Del, "label=1").is_err());
        assert_eq!(KindSet::parse_list("T3,F1").unwrap().to_string(), "T3_FWD,T3_BWD,F1");
    }
}

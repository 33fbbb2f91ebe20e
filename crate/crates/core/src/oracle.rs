//! Bounded breadth-first search over the move graph, with diagrams identified
//! up to rotation and relabeling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::diagram::{Entity, GaussDiagram, Label, Role, Sign};
use crate::moves::{apply_move, enumerate_moves, Insertions, KindSet, MoveInstance};
use crate::unknot::is_trivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_entities: usize,
    pub max_depth: usize,
    pub max_states: usize,
    pub kinds: KindSet,
    /// How far above the start length insertions may grow a diagram.
    pub insertion_budget: usize,
}

impl SearchBounds {
    pub fn new(kinds: KindSet) -> SearchBounds {
        SearchBounds { max_entities: 16, max_depth: 12, max_states: 200_000, kinds, insertion_budget: 0 }
    }

    pub fn with_depth(self, max_depth: usize) -> SearchBounds {
        SearchBounds { max_depth, ..self }
    }

    pub fn with_insertions(self, insertion_budget: usize) -> SearchBounds {
        SearchBounds { insertion_budget, ..self }
    }

    pub fn with_states(self, max_states: usize) -> SearchBounds {
        SearchBounds { max_states, ..self }
    }

    pub fn with_entities(self, max_entities: usize) -> SearchBounds {
        SearchBounds { max_entities, ..self }
    }
}

/// The state cap was hit; `partial` holds every key discovered so far.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("state budget of {limit} exhausted after {} keys", partial.len())]
pub struct BudgetExceeded {
    pub limit: usize,
    pub partial: BTreeMap<CanonicalKey, usize>,
}

struct Node {
    diagram: GaussDiagram,
    depth: usize,
    parent: Option<(CanonicalKey, MoveInstance)>,
}

struct Search {
    nodes: BTreeMap<CanonicalKey, Node>,
}

impl Search {
    fn depths(&self) -> BTreeMap<CanonicalKey, usize> {
        self.nodes.iter().map(|(k, n)| (k.clone(), n.depth)).collect()
    }

    fn path_to(&self, key: &CanonicalKey) -> Vec<MoveInstance> {
        let mut path = Vec::new();
        let mut cur = key;
        while let Some((parent, m)) = &self.nodes[cur].parent {
            path.push(*m);
            cur = parent;
        }
        path.reverse();
        path
    }
}

/// Level-order search from `d`; stops early at the first key satisfying `goal`.
fn bfs(
    d: &GaussDiagram,
    b: &SearchBounds,
    goal: impl Fn(&GaussDiagram) -> bool,
) -> Result<(Search, Option<CanonicalKey>), BudgetExceeded> {
    let limit = b.max_entities.min(d.len() + b.insertion_budget);
    let start = canonical_key(d);
    let mut s = Search { nodes: BTreeMap::new() };
    s.nodes.insert(start.clone(), Node { diagram: d.clone(), depth: 0, parent: None });
    if goal(d) {
        return Ok((s, Some(start)));
    }
    let insertions = if b.insertion_budget > 0 { Insertions::Canonical } else { Insertions::Skip };
    let mut queue = VecDeque::from([start]);
    while let Some(key) = queue.pop_front() {
        let node = &s.nodes[&key];
        if node.depth >= b.max_depth {
            continue;
        }
        let (here, depth) = (node.diagram.clone(), node.depth);
        for m in enumerate_moves(&here, b.kinds, insertions) {
            let next = apply_move(&here, &m).expect("enumerated moves apply");
            if next.len() > limit {
                continue;
            }
            let k = canonical_key(&next);
            if s.nodes.contains_key(&k) {
                continue;
            }
            if s.nodes.len() >= b.max_states {
                return Err(BudgetExceeded { limit: b.max_states, partial: s.depths() });
            }
            let hit = goal(&next);
            s.nodes.insert(k.clone(), Node { diagram: next, depth: depth + 1, parent: Some((key.clone(), m)) });
            if hit {
                return Ok((s, Some(k)));
            }
            queue.push_back(k);
        }
    }
    Ok((s, None))
}

/// Every key reachable from `d` within bounds, with its least depth.
pub fn reachable(d: &GaussDiagram, b: &SearchBounds) -> Result<BTreeMap<CanonicalKey, usize>, BudgetExceeded> {
    bfs(d, b, |_| false).map(|(s, _)| s.depths())
}

/// A shortest move list from `d1` to some diagram with the key of `d2`.
pub fn find_path(d1: &GaussDiagram, d2: &GaussDiagram, b: &SearchBounds) -> Result<Option<Vec<MoveInstance>>, BudgetExceeded> {
    let target = canonical_key(d2);
    let (s, hit) = bfs(d1, b, |d| canonical_key(d) == target)?;
    Ok(hit.map(|k| s.path_to(&k)))
}

/// A shortest move list from `d` to a chordless diagram with at most one bar.
pub fn find_unknot_path(d: &GaussDiagram, b: &SearchBounds) -> Result<Option<Vec<MoveInstance>>, BudgetExceeded> {
    let (s, hit) = bfs(d, b, is_trivial)?;
    Ok(hit.map(|k| s.path_to(&k)))
}

pub fn min_unknot_depth(d: &GaussDiagram, b: &SearchBounds) -> Result<Option<usize>, BudgetExceeded> {
    find_unknot_path(d, b).map(|p| p.map(|p| p.len()))
}

/// One diagram per key among all diagrams with at most the given numbers of
/// chords and bars.
pub fn enumerate_diagrams(max_chords: usize, max_bars: usize) -> Vec<GaussDiagram> {
    fn extend(word: &mut Vec<Entity>, open: &mut Vec<(Label, Role, Sign)>, next: Label, chords: usize, bars: usize, out: &mut Vec<GaussDiagram>) {
        if chords == 0 && bars == 0 && open.is_empty() {
            out.push(GaussDiagram::from_entities(word.clone()).expect("built well formed"));
            return;
        }
        if bars > 0 {
            word.push(Entity::Bar);
            extend(word, open, next, chords, bars - 1, out);
            word.pop();
        }
        if chords > 0 {
            for role in Role::ALL {
                for sign in Sign::ALL {
                    word.push(Entity::end(next, role, sign));
                    open.push((next, role, sign));
                    extend(word, open, next + 1, chords - 1, bars, out);
                    open.pop();
                    word.pop();
                }
            }
        }
        for i in 0..open.len() {
            let (label, role, sign) = open.remove(i);
            word.push(Entity::end(label, role.opposite(), sign));
            extend(word, open, next, chords, bars, out);
            word.pop();
            open.insert(i, (label, role, sign));
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for chords in 0..=max_chords {
        for bars in 0..=max_bars {
            let mut all = Vec::new();
            extend(&mut Vec::new(), &mut Vec::new(), 1, chords, bars, &mut all);
            for d in all {
                if seen.insert(canonical_key(&d)) {
                    out.push(d);
                }
            }
        }
    }
    out
}

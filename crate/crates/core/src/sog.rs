//! Sequences of GHSs and flattening.
//!
//! A SOG is a path in the move graph whose vertices are GHSs and whose
//! edges are single weak reductions or destabilizations. Its cost is the
//! multiset of keys at its maximal positions, compared as a non-increasing
//! list. Flattening searches the move graph supplied by an oracle for the
//! cheapest path; adding a step can only add peaks, so a best-first search
//! over (state, arrived-by-ascent) is exact.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};

use crate::disk_complex::{build_gamma, build_lambda, component_distance, component_edges, CappedDistance};
use crate::error::{GraphError, SogError};
use crate::ghs::{apply_move, destabilization, enumerate_moves, ghs_key, stabilize, Ghs, Move};
use crate::handlebody::{CurveCap, HeegaardDiagram};
use crate::surface::CurveClass;

/// How a step relates its two GHSs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The later GHS is obtained from the earlier one by the move.
    Down,
    /// The earlier GHS is obtained from the later one by the move.
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SogStep {
    pub direction: Direction,
    #[serde(rename = "move")]
    pub mv: Move,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SogEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub ghs: Ghs,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sog {
    pub entries: Vec<SogEntry>,
    pub steps: Vec<SogStep>,
}

impl Sog {
    pub fn single(entry: SogEntry) -> Self {
        Sog { entries: vec![entry], steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Replays every step through the GHS calculus.
    pub fn verify(&self) -> Result<(), SogError> {
        if self.entries.is_empty() || self.steps.len() + 1 != self.entries.len() {
            return Err(SogError::Shape { entries: self.entries.len(), steps: self.steps.len() });
        }
        for (k, step) in self.steps.iter().enumerate() {
            let (a, b) = (&self.entries[k].ghs, &self.entries[k + 1].ghs);
            let (from, to) = match step.direction {
                Direction::Down => (a, b),
                Direction::Up => (b, a),
            };
            let got = apply_move(from, &step.mv).map_err(|e| SogError::Replay { step: k, reason: e.to_string() })?;
            if &got != to {
                return Err(SogError::Replay { step: k, reason: format!("move gives {got}, recorded {to}") });
            }
        }
        Ok(())
    }
}

fn is_maximal(sog: &Sog, k: usize) -> bool {
    let before = k == 0 || sog.steps[k - 1].direction == Direction::Up;
    let after = k + 1 == sog.entries.len() || sog.steps[k].direction == Direction::Down;
    before && after
}

fn is_minimal(sog: &Sog, k: usize) -> bool {
    let before = k == 0 || sog.steps[k - 1].direction == Direction::Down;
    let after = k + 1 == sog.entries.len() || sog.steps[k].direction == Direction::Up;
    before && after
}

/// Positions whose neighbours are both obtained from them. An endpoint is
/// judged by its one neighbour; a single GHS is both maximal and minimal.
pub fn maximal_positions(sog: &Sog) -> Vec<usize> {
    (0..sog.entries.len()).filter(|&k| is_maximal(sog, k)).collect()
}

pub fn minimal_positions(sog: &Sog) -> Vec<usize> {
    (0..sog.entries.len()).filter(|&k| is_minimal(sog, k)).collect()
}

/// Keys of the maximal GHSs, as a non-increasing list (a multiset).
pub type MaxKey = Vec<Vec<u64>>;

fn sorted_desc(mut keys: MaxKey) -> MaxKey {
    keys.sort_unstable_by(|a, b| b.cmp(a));
    keys
}

pub fn max_key(sog: &Sog) -> MaxKey {
    sorted_desc(maximal_positions(sog).into_iter().map(|k| ghs_key(&sog.entries[k].ghs)).collect())
}

pub fn compare_sogs(a: &Sog, b: &Sog) -> Ordering {
    max_key(a).cmp(&max_key(b))
}

pub fn verify_single_maximal(sog: &Sog) -> bool {
    maximal_positions(sog).len() == 1
}

/// Supplies the move graph explored by [`flatten`].
pub trait MoveOracle {
    type State: Clone + Eq + std::hash::Hash;

    fn ghs(&self, s: &Self::State) -> Ghs;
    fn label(&self, s: &Self::State) -> Option<String>;
    /// States obtained from `s` by one move.
    fn reductions(&self, s: &Self::State) -> Vec<(Move, Self::State)>;
    /// States that `s` is obtained from by one move.
    fn expansions(&self, s: &Self::State) -> Vec<(Move, Self::State)>;
}

/// Every valid move downward, stabilizations upward (no amalgamation),
/// confined to component genus and level-count bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicOracle {
    pub max_genus: u32,
    pub max_levels: usize,
}

impl MoveOracle for SymbolicOracle {
    type State = Ghs;

    fn ghs(&self, s: &Ghs) -> Ghs {
        s.clone()
    }

    fn label(&self, _: &Ghs) -> Option<String> {
        None
    }

    fn reductions(&self, s: &Ghs) -> Vec<(Move, Ghs)> {
        enumerate_moves(s).into_iter().filter_map(|m| apply_move(s, &m).ok().map(|g| (m, g))).collect()
    }

    fn expansions(&self, s: &Ghs) -> Vec<(Move, Ghs)> {
        if s.levels().len() > self.max_levels {
            return Vec::new();
        }
        let mut out = Vec::new();
        for t in s.thick_indices() {
            let genera = s.levels()[t].genera();
            for c in 0..genera.len() {
                if (c > 0 && genera[c] == genera[c - 1]) || genera[c] >= self.max_genus {
                    continue;
                }
                let Ok(up) = stabilize(s, t, c) else { continue };
                // the stabilized component sorts to the last slot of its new genus
                let at = up.levels()[t].genera().iter().rposition(|&g| g == genera[c] + 1).unwrap();
                let m = destabilization(t, at);
                if apply_move(&up, &m).as_ref() == Ok(s) {
                    out.push((m, up));
                }
            }
        }
        out
    }
}

/// Declared Heegaard splittings by genus with their stabilizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InventoryOracle {
    genus: BTreeMap<String, u32>,
    stabilize: BTreeMap<String, String>,
    destabilize: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InventoryDoc {
    splittings: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    stabilize: BTreeMap<String, String>,
}

impl InventoryOracle {
    pub fn new(splittings: BTreeMap<u32, Vec<String>>, stabilize: BTreeMap<String, String>) -> Result<Self, SogError> {
        let mut genus = BTreeMap::new();
        for (g, labels) in splittings {
            if g == 0 {
                return Err(SogError::Oracle("genus 0 splittings are not allowed".into()));
            }
            for l in labels {
                if genus.insert(l.clone(), g).is_some() {
                    return Err(SogError::Oracle(format!("label {l} declared twice")));
                }
            }
        }
        let mut destabilize: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (from, to) in &stabilize {
            let gf = *genus.get(from).ok_or_else(|| SogError::Oracle(format!("unknown label {from}")))?;
            let gt = *genus.get(to).ok_or_else(|| SogError::Oracle(format!("unknown label {to}")))?;
            if gt != gf + 1 {
                return Err(SogError::Oracle(format!("stabilizing {from} (genus {gf}) cannot give {to} (genus {gt})")));
            }
            destabilize.entry(to.clone()).or_default().push(from.clone());
        }
        Ok(InventoryOracle { genus, stabilize, destabilize })
    }

    pub fn from_json(text: &str) -> Result<Self, SogError> {
        let doc: InventoryDoc = serde_json::from_str(text).map_err(|e| SogError::Oracle(e.to_string()))?;
        let mut splittings = BTreeMap::new();
        for (g, labels) in doc.splittings {
            let g: u32 = g.parse().map_err(|_| SogError::Oracle(format!("genus key {g:?} is not a number")))?;
            splittings.insert(g, labels);
        }
        InventoryOracle::new(splittings, doc.stabilize)
    }

    pub fn genus_of(&self, label: &str) -> Option<u32> {
        self.genus.get(label).copied()
    }

    pub fn entry(&self, label: &str) -> Result<SogEntry, SogError> {
        let g = self.genus_of(label).ok_or_else(|| SogError::UnknownState(label.into()))?;
        Ok(SogEntry { label: Some(label.into()), ghs: Ghs::splitting(g)? })
    }

    /// Checks that consecutive labels of a SOG are related by the declared
    /// stabilizations in the recorded direction.
    pub fn check_labels(&self, sog: &Sog) -> Result<(), SogError> {
        for (k, step) in sog.steps.iter().enumerate() {
            let (a, b) = (&sog.entries[k].label, &sog.entries[k + 1].label);
            let (Some(a), Some(b)) = (a, b) else {
                return Err(SogError::Replay { step: k, reason: "inventory SOGs need labels".into() });
            };
            let (low, high) = match step.direction {
                Direction::Down => (b, a),
                Direction::Up => (a, b),
            };
            if self.stabilize.get(low) != Some(high) {
                return Err(SogError::Replay { step: k, reason: format!("{high} is not the stabilization of {low}") });
            }
        }
        Ok(())
    }
}

impl MoveOracle for InventoryOracle {
    type State = String;

    fn ghs(&self, s: &String) -> Ghs {
        Ghs::splitting(self.genus[s]).expect("declared genera are positive")
    }

    fn label(&self, s: &String) -> Option<String> {
        Some(s.clone())
    }

    fn reductions(&self, s: &String) -> Vec<(Move, String)> {
        self.destabilize.get(s).map_or_else(Vec::new, |v| v.iter().map(|l| (destabilization(1, 0), l.clone())).collect())
    }

    fn expansions(&self, s: &String) -> Vec<(Move, String)> {
        self.stabilize.get(s).map_or_else(Vec::new, |l| vec![(destabilization(1, 0), l.clone())])
    }
}

#[derive(Clone)]
struct Frontier<S> {
    cost: MaxKey,
    length: usize,
    names: Vec<String>,
    finished: bool,
    arrived_up: bool,
    states: Vec<S>,
    steps: Vec<SogStep>,
}

impl<S> Frontier<S> {
    fn rank(&self) -> (&MaxKey, usize, &[String], bool) {
        (&self.cost, self.length, &self.names, !self.finished)
    }
}

impl<S> PartialEq for Frontier<S> {
    fn eq(&self, o: &Self) -> bool {
        self.rank() == o.rank()
    }
}

impl<S> Eq for Frontier<S> {}

impl<S> PartialOrd for Frontier<S> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl<S> Ord for Frontier<S> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.rank().cmp(&o.rank())
    }
}

fn with_peak(cost: &MaxKey, key: Vec<u64>) -> MaxKey {
    let mut c = cost.clone();
    c.push(key);
    sorted_desc(c)
}

/// A SOG from `start` to `end` with least MAX multiset in the oracle's move
/// graph; ties go to the shortest, then to the least sequence of serialized
/// GHSs. At most `budget` states are expanded.
pub fn flatten<O: MoveOracle>(oracle: &O, start: &O::State, end: &O::State, budget: u64) -> Result<Sog, SogError> {
    let name = |s: &O::State| -> String {
        let g = oracle.ghs(s).to_json();
        match oracle.label(s) {
            Some(l) => format!("{l}:{g}"),
            None => g,
        }
    };
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(Frontier {
        cost: Vec::new(),
        length: 1,
        names: vec![name(start)],
        finished: false,
        // the start is a peak when its first step descends
        arrived_up: true,
        states: vec![start.clone()],
        steps: Vec::new(),
    }));
    let mut settled: HashSet<(O::State, bool)> = HashSet::new();
    let mut expanded = 0u64;
    while let Some(Reverse(f)) = heap.pop() {
        let here = f.states.last().unwrap().clone();
        if f.finished {
            let entries = f
                .states
                .iter()
                .map(|s| SogEntry { label: oracle.label(s), ghs: oracle.ghs(s) })
                .collect();
            return Ok(Sog { entries, steps: f.steps });
        }
        if !settled.insert((here.clone(), f.arrived_up)) {
            continue;
        }
        expanded += 1;
        if expanded > budget {
            return Err(SogError::Budget(budget));
        }
        let key = ghs_key(&oracle.ghs(&here));
        if &here == end {
            let cost = if f.arrived_up { with_peak(&f.cost, key.clone()) } else { f.cost.clone() };
            heap.push(Reverse(Frontier { cost, finished: true, ..f.clone() }));
        }
        let mut push = |direction: Direction, mv: Move, next: O::State| {
            let up = direction == Direction::Up;
            if settled.contains(&(next.clone(), up)) {
                return;
            }
            let cost = if f.arrived_up && !up { with_peak(&f.cost, key.clone()) } else { f.cost.clone() };
            let mut g = f.clone();
            g.cost = cost;
            g.length += 1;
            g.names.push(name(&next));
            g.arrived_up = up;
            g.states.push(next);
            g.steps.push(SogStep { direction, mv });
            heap.push(Reverse(g));
        };
        for (m, next) in oracle.reductions(&here) {
            push(Direction::Down, m, next);
        }
        for (m, next) in oracle.expansions(&here) {
            push(Direction::Up, m, next);
        }
    }
    Err(SogError::Unreachable)
}

/// Distance between two splittings read off a common stabilization: the
/// curve-complex distance between the disk-complex components holding their
/// destabilizing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingDistance {
    pub distance: CappedDistance,
    pub same_component: bool,
    pub certified: bool,
}

pub fn splitting_distance(
    diagram: &HeegaardDiagram,
    e1: &(CurveClass, CurveClass),
    e2: &(CurveClass, CurveClass),
    cap: CurveCap,
    budget: u64,
) -> Result<SplittingDistance, GraphError> {
    let gamma = build_gamma(diagram, cap, budget)?;
    let mut owner = Vec::new();
    let comps = gamma.components();
    for e in [e1, e2] {
        let edge = gamma.find_edge(&e.0, &e.1).ok_or_else(|| GraphError::UnknownEdge(e.0.to_string(), e.1.to_string()))?;
        if edge.i != 1 {
            return Err(GraphError::NotDestabilizing(e.0.to_string(), e.1.to_string(), edge.i));
        }
        owner.push(comps.iter().position(|c| c.binary_search(&edge.u).is_ok()).unwrap());
    }
    if owner[0] == owner[1] {
        return Ok(SplittingDistance { distance: CappedDistance::Exact(0), same_component: true, certified: gamma.certified });
    }
    let lambda = build_lambda(diagram, cap, budget)?;
    let distance = component_distance(
        &lambda,
        &component_edges(&gamma, &comps[owner[0]]),
        &component_edges(&gamma, &comps[owner[1]]),
    )?;
    Ok(SplittingDistance { distance, same_component: false, certified: gamma.certified && lambda.certified })
}

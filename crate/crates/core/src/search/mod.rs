//! Enumeration of all ternary systems of a fixed size satisfying an axiom
//! set, with unit propagation and isomorphism deduplication.

mod canonical;
mod partial;
mod propagate;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canonical::{canonical_form, canonical_system, seatings};
pub use partial::{PartialTable, UNKNOWN};
pub use propagate::{propagate, InstanceSet, Outcome, Propagation, Propagator};

use crate::par::{ordered_map, Execution};
use crate::structures::{satisfies_all, AxiomId, TernarySystem};

pub const MAX_SEARCH_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search size must be between 2 and {MAX_SEARCH_SIZE}, got {0}")]
    SizeOutOfRange(usize),
    #[error("axiom list is empty")]
    NoAxioms,
    #[error("seed pins conflict at slot {slot}")]
    ConflictingPins { slot: usize },
}

/// Order in which unknown slots are decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlotOrder {
    /// By `(a, b, c)`.
    Lex,
    /// By `(b, a, c)`.
    MiddleFirst,
    /// `p(1, x, 0)` first, then the planes `c = 1`, `c = 0` and `a = 0`,
    /// then the rest by `(a, b, c)`.
    #[default]
    Planes,
}

impl SlotOrder {
    pub fn slots(self, n: usize) -> Vec<usize> {
        if self == SlotOrder::Planes {
            let (z, o) = (0, n - 1);
            let rank = |s: usize| {
                let (a, c) = (s / (n * n), s % n);
                match () {
                    _ if a == o && c == z => 0,
                    _ if c == o => 1,
                    _ if c == z => 2,
                    _ if a == z => 3,
                    _ => 4,
                }
            };
            let mut out: Vec<usize> = (0..n * n * n).collect();
            out.sort_by_key(|&s| (rank(s), s));
            return out;
        }
        let mut out = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for c in 0..n {
                    let (a, b) = match self {
                        SlotOrder::MiddleFirst => (y, x),
                        _ => (x, y),
                    };
                    out.push((a * n + b) * n + c);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub size: usize,
    pub axioms: Vec<AxiomId>,
    pub up_to_iso: bool,
    pub order: SlotOrder,
    /// Decisions allowed per subtree.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Decision levels expanded before handing subtrees to workers.
    pub split_depth: usize,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(size: usize, axioms: &[AxiomId]) -> SearchConfig {
        SearchConfig {
            size,
            axioms: axioms.to_vec(),
            up_to_iso: false,
            order: SlotOrder::default(),
            node_budget: None,
            time_budget: None,
            split_depth: 2,
            execution: Execution::Parallel,
        }
    }

    pub fn up_to_iso(mut self, yes: bool) -> SearchConfig {
        self.up_to_iso = yes;
        self
    }

    pub fn order(mut self, order: SlotOrder) -> SearchConfig {
        self.order = order;
        self
    }

    pub fn node_budget(mut self, budget: Option<u64>) -> SearchConfig {
        self.node_budget = budget;
        self
    }

    pub fn time_budget(mut self, budget: Option<Duration>) -> SearchConfig {
        self.time_budget = budget;
        self
    }

    pub fn execution(mut self, exec: Execution) -> SearchConfig {
        self.execution = exec;
        self
    }

    pub fn split_depth(mut self, k: usize) -> SearchConfig {
        self.split_depth = k;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if !(2..=MAX_SEARCH_SIZE).contains(&self.size) {
            return Err(SearchError::SizeOutOfRange(self.size));
        }
        if self.axioms.is_empty() {
            return Err(SearchError::NoAxioms);
        }
        Ok(())
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.size - 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Slots pinned by T1-T3 before search.
    pub pinned: u64,
    /// Decisions tried.
    pub nodes: u64,
    /// Slots fixed by propagation.
    pub propagations: u64,
    /// Decisions refuted by propagation.
    pub prunes: u64,
    /// Complete tables failing the post-hoc axiom check.
    pub rejected: u64,
    pub subtrees: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.propagations += o.propagations;
        self.prunes += o.prunes;
        self.rejected += o.rejected;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelCensus {
    pub size: usize,
    pub axioms: Vec<AxiomId>,
    pub up_to_iso: bool,
    /// False when a node or time budget cut the search short.
    pub complete: bool,
    pub total_models: u64,
    pub iso_classes: u64,
    /// Canonical representatives sorted by canonical form when `up_to_iso`,
    /// otherwise every model in search order.
    pub representatives: Vec<TernarySystem>,
    pub stats: SearchStats,
}

/// Fixes every entry determined by whichever of T1, T2, T3 are requested,
/// with `0` at index 0 and `1` at index `n - 1`.
pub fn seed_pins(cfg: &SearchConfig) -> Result<PartialTable, SearchError> {
    cfg.validate()?;
    let n = cfg.size;
    let (z, o) = (cfg.zero(), cfg.one());
    let mut t = PartialTable::new(n);
    let pin = |t: &mut PartialTable, a: usize, b: usize, c: usize, v: usize| {
        let s = t.slot(a, b, c);
        match t.get(s) {
            Some(old) if old as usize != v => Err(SearchError::ConflictingPins { slot: s }),
            Some(_) => Ok(()),
            None => {
                t.set(s, v as u8);
                Ok(())
            }
        }
    };
    let has = |ax| cfg.axioms.contains(&ax);
    for a in 0..n {
        if has(AxiomId::T1) {
            pin(&mut t, z, a, o, a)?;
        }
        for b in 0..n {
            if has(AxiomId::T2) {
                pin(&mut t, a, z, b, a)?;
                pin(&mut t, b, o, a, a)?;
            }
            if has(AxiomId::T3) {
                pin(&mut t, a, b, a, a)?;
            }
        }
    }
    Ok(t)
}

struct Worker<'a> {
    cfg: &'a SearchConfig,
    order: &'a [usize],
    deadline: Option<Instant>,
    stats: SearchStats,
    aborted: bool,
    models: Vec<TernarySystem>,
    /// Stop at this many decisions on the current path and record prefixes.
    frontier_depth: Option<usize>,
    path: Vec<(usize, u8)>,
    frontier: Vec<Vec<(usize, u8)>>,
}

impl<'a> Worker<'a> {
    fn new(cfg: &'a SearchConfig, order: &'a [usize], deadline: Option<Instant>) -> Worker<'a> {
        Worker {
            cfg,
            order,
            deadline,
            stats: SearchStats::default(),
            aborted: false,
            models: Vec::new(),
            frontier_depth: None,
            path: Vec::new(),
            frontier: Vec::new(),
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(b) = self.cfg.node_budget {
            if self.stats.nodes > b {
                self.aborted = true;
            }
        }
        if let Some(d) = self.deadline {
            if self.stats.nodes.is_multiple_of(256) && Instant::now() > d {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn leaf(&mut self, t: &PartialTable) {
        let sys = t.to_system(self.cfg.zero(), self.cfg.one()).expect("complete table is valid");
        if satisfies_all(&sys, &self.cfg.axioms) {
            self.models.push(sys);
        } else {
            self.stats.rejected += 1;
        }
    }

    fn dfs(&mut self, t: &mut PartialTable, prop: &mut Propagator, pos: usize) {
        if self.frontier_depth == Some(self.path.len()) {
            self.frontier.push(self.path.clone());
            return;
        }
        let Some(k) = (pos..self.order.len()).find(|&k| t.get(self.order[k]).is_none()) else {
            if self.frontier_depth.is_some() {
                self.frontier.push(self.path.clone());
            } else {
                self.leaf(t);
            }
            return;
        };
        let slot = self.order[k];
        for v in 0..self.cfg.size as u8 {
            self.stats.nodes += 1;
            if self.out_of_budget() {
                return;
            }
            let mark = t.mark();
            let before = prop.forced;
            let outcome = prop.assign(t, slot, v);
            self.stats.propagations += prop.forced - before;
            match outcome {
                Outcome::Consistent => {
                    self.path.push((slot, v));
                    self.dfs(t, prop, k + 1);
                    self.path.pop();
                }
                Outcome::Contradiction => self.stats.prunes += 1,
            }
            t.undo_to(mark);
            if self.aborted {
                return;
            }
        }
    }
}

struct Subtree {
    models: Vec<TernarySystem>,
    stats: SearchStats,
    aborted: bool,
}

/// Seeds, propagates and replays `prefix`; `None` if that contradicts.
fn prepared<'s>(
    cfg: &SearchConfig,
    set: &'s InstanceSet,
    prefix: &[(usize, u8)],
) -> Result<Option<(PartialTable, Propagator<'s>)>, SearchError> {
    let mut t = seed_pins(cfg)?;
    let mut prop = Propagator::new(set);
    if prop.init(&mut t) == Outcome::Contradiction {
        return Ok(None);
    }
    for &(slot, v) in prefix {
        match t.get(slot) {
            Some(x) if x == v => continue,
            Some(_) => return Ok(None),
            None => {
                if prop.assign(&mut t, slot, v) == Outcome::Contradiction {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some((t, prop)))
}

/// All models of `cfg.axioms` at `cfg.size`.
pub fn enumerate_models(cfg: &SearchConfig) -> Result<ModelCensus, SearchError> {
    let start = Instant::now();
    cfg.validate()?;
    let deadline = cfg.time_budget.map(|d| start + d);
    let set = InstanceSet::new(cfg.size, &cfg.axioms);
    let order = cfg.order.slots(cfg.size);

    let mut stats = SearchStats {
        pinned: seed_pins(cfg)?.known() as u64,
        ..SearchStats::default()
    };

    // frontier of decision prefixes
    let mut head = Worker::new(cfg, &order, deadline);
    head.frontier_depth = Some(cfg.split_depth);
    let mut complete = true;
    if let Some((mut t, mut prop)) = prepared(cfg, &set, &[])? {
        stats.propagations += prop.forced;
        head.dfs(&mut t, &mut prop, 0);
    }
    stats.absorb(&head.stats);
    complete &= !head.aborted;
    let frontier = std::mem::take(&mut head.frontier);
    stats.subtrees = frontier.len() as u64;

    let results: Vec<Result<Subtree, SearchError>> = ordered_map(cfg.execution, &frontier, |prefix| {
        let mut w = Worker::new(cfg, &order, deadline);
        if let Some((mut t, mut prop)) = prepared(cfg, &set, prefix)? {
            w.dfs(&mut t, &mut prop, 0);
        }
        Ok(Subtree {
            models: w.models,
            stats: w.stats,
            aborted: w.aborted,
        })
    });

    let mut models = Vec::new();
    for r in results {
        let sub = r?;
        stats.absorb(&sub.stats);
        models.extend(sub.models);
        let over = cfg.node_budget.is_some_and(|b| stats.nodes > b);
        if sub.aborted || over {
            complete = false;
            break;
        }
    }

    let mut classes: BTreeMap<Vec<u8>, TernarySystem> = BTreeMap::new();
    for m in &models {
        classes.entry(canonical_form(m)).or_insert_with(|| canonical_system(m));
    }
    let iso_classes = classes.len() as u64;
    let total_models = models.len() as u64;
    let representatives = if cfg.up_to_iso {
        classes.into_values().collect()
    } else {
        models
    };
    stats.elapsed = start.elapsed();
    Ok(ModelCensus {
        size: cfg.size,
        axioms: cfg.axioms.clone(),
        up_to_iso: cfg.up_to_iso,
        complete,
        total_models,
        iso_classes,
        representatives,
        stats,
    })
}

//! Unit propagation over ground instances of the axiom identities.
//!
//! Every identity is instantiated at every assignment of its variables. An
//! instance is re-examined only when a slot it watches gets a value; it then
//! either holds, fails, forces the one unknown slot at the root of a side
//! whose other side is known, or watches the first unknown slot of each
//! blocked side.

use std::collections::BTreeSet;

use super::partial::PartialTable;
use crate::structures::AxiomId;
use crate::terms::{parse_identity, Compiled};

const L3: &str = "p(c, b, a) = p(a, bar(b), c)";

/// Axioms pinned directly by [`super::seed_pins`] instead of propagated.
pub(crate) const SEEDED: [AxiomId; 3] = [AxiomId::T1, AxiomId::T2, AxiomId::T3];

/// The ground instances for one carrier size, shared read-only by workers.
#[derive(Clone, Debug)]
pub struct InstanceSet {
    n: usize,
    zero: u8,
    one: u8,
    sides: Vec<(Compiled, Compiled)>,
    /// `(identity, offset into vals)` per instance.
    inst: Vec<(u32, u32)>,
    vals: Vec<u8>,
}

impl InstanceSet {
    /// Instances for every identity of every non-seeded axiom in `axioms`,
    /// plus L3 when T1-T4 are all requested.
    pub fn new(n: usize, axioms: &[AxiomId]) -> InstanceSet {
        let wanted: BTreeSet<AxiomId> = axioms.iter().copied().collect();
        let mut idents = Vec::new();
        for ax in &wanted {
            if !SEEDED.contains(ax) {
                idents.extend(ax.identities().iter().cloned());
            }
        }
        if [AxiomId::T1, AxiomId::T2, AxiomId::T3, AxiomId::T4].iter().all(|a| wanted.contains(a)) {
            idents.push(parse_identity(L3).expect("L3 parses"));
        }

        let mut sides = Vec::new();
        let mut inst = Vec::new();
        let mut vals = Vec::new();
        for (k, id) in idents.iter().enumerate() {
            let l = Compiled::compile(&id.lhs, &id.vars).expect("axiom sides compile");
            let r = Compiled::compile(&id.rhs, &id.vars).expect("axiom sides compile");
            sides.push((l, r));
            let arity = id.vars.len();
            let mut asg = vec![0usize; arity];
            loop {
                inst.push((k as u32, vals.len() as u32));
                vals.extend(asg.iter().map(|&x| x as u8));
                if !crate::terms::odometer(&mut asg, n) {
                    break;
                }
            }
        }
        InstanceSet {
            n,
            zero: 0,
            one: (n - 1) as u8,
            sides,
            inst,
            vals,
        }
    }

    pub fn len(&self) -> usize {
        self.inst.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inst.is_empty()
    }

    /// Evaluates as far as the table allows. `Err((slot, at_root))` names the
    /// first unknown slot met.
    fn peval(&self, c: &Compiled, t: &PartialTable, vals: &[u8]) -> Result<u8, (usize, bool)> {
        match c {
            Compiled::Var(i) => Ok(vals[*i]),
            Compiled::Zero => Ok(self.zero),
            Compiled::One => Ok(self.one),
            Compiled::P(a, b, c) => {
                let inner = |e: (usize, bool)| (e.0, false);
                let x = self.peval(a, t, vals).map_err(inner)?;
                let y = self.peval(b, t, vals).map_err(inner)?;
                let z = self.peval(c, t, vals).map_err(inner)?;
                let s = t.slot(x as usize, y as usize, z as usize);
                t.get(s).ok_or((s, true))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    Contradiction,
}

/// Per-worker propagation state over a shared [`InstanceSet`].
#[derive(Clone, Debug)]
pub struct Propagator<'a> {
    set: &'a InstanceSet,
    slots: usize,
    watches: Vec<Vec<u32>>,
    watched: Vec<u64>,
    queue: Vec<usize>,
    pub forced: u64,
}

enum Step {
    Ok,
    Conflict,
}

impl<'a> Propagator<'a> {
    pub fn new(set: &'a InstanceSet) -> Propagator<'a> {
        let slots = set.n * set.n * set.n;
        Propagator {
            set,
            slots,
            watches: vec![Vec::new(); slots],
            watched: vec![0; (set.len() * slots).div_ceil(64)],
            queue: Vec::new(),
            forced: 0,
        }
    }

    fn watch(&mut self, inst: usize, slot: usize) {
        let bit = inst * self.slots + slot;
        let (w, m) = (bit / 64, 1u64 << (bit % 64));
        if self.watched[w] & m == 0 {
            self.watched[w] |= m;
            self.watches[slot].push(inst as u32);
        }
    }

    fn examine(&mut self, t: &mut PartialTable, i: usize) -> Step {
        let set = self.set;
        let (k, off) = set.inst[i];
        let (l, r) = &set.sides[k as usize];
        let vals = &set.vals[off as usize..];
        let lv = set.peval(l, t, vals);
        let rv = set.peval(r, t, vals);
        match (lv, rv) {
            (Ok(x), Ok(y)) => {
                if x == y {
                    Step::Ok
                } else {
                    Step::Conflict
                }
            }
            (Ok(x), Err((s, true))) | (Err((s, true)), Ok(x)) => {
                t.set(s, x);
                self.forced += 1;
                self.queue.push(s);
                Step::Ok
            }
            (a, b) => {
                for side in [a, b] {
                    if let Err((s, _)) = side {
                        self.watch(i, s);
                    }
                }
                Step::Ok
            }
        }
    }

    fn run(&mut self, t: &mut PartialTable) -> Outcome {
        while let Some(s) = self.queue.pop() {
            let list = std::mem::take(&mut self.watches[s]);
            let mut ok = true;
            for &i in &list {
                if let Step::Conflict = self.examine(t, i as usize) {
                    ok = false;
                    break;
                }
            }
            debug_assert!(self.watches[s].is_empty());
            self.watches[s] = list;
            if !ok {
                self.queue.clear();
                return Outcome::Contradiction;
            }
        }
        Outcome::Consistent
    }

    /// Examines every instance once, then propagates to a fixpoint.
    pub fn init(&mut self, t: &mut PartialTable) -> Outcome {
        for i in 0..self.set.len() {
            if let Step::Conflict = self.examine(t, i) {
                self.queue.clear();
                return Outcome::Contradiction;
            }
        }
        self.run(t)
    }

    /// Fixes `slot = v` and propagates. On contradiction the table is left
    /// mid-propagation; callers undo to a mark.
    pub fn assign(&mut self, t: &mut PartialTable, slot: usize, v: u8) -> Outcome {
        debug_assert!(t.get(slot).is_none());
        t.set(slot, v);
        self.queue.push(slot);
        self.run(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Propagation {
    pub outcome: Outcome,
    /// Slots fixed by propagation.
    pub forced: u64,
}

/// One-shot propagation of `axioms` on `t` to a fixpoint. T1-T3 are not
/// propagated; [`super::seed_pins`] fixes them outright.
pub fn propagate(t: &mut PartialTable, axioms: &[AxiomId]) -> Propagation {
    let set = InstanceSet::new(t.size(), axioms);
    let mut p = Propagator::new(&set);
    let outcome = p.init(t);
    Propagation { outcome, forced: p.forced }
}

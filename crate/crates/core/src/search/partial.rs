use crate::structures::{StructureError, TernarySystem};

pub const UNKNOWN: u8 = u8::MAX;

/// A ternary table under construction, with an undo trail.
///
/// Slots are indexed like [`TernarySystem`] tables: `(a * n + b) * n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTable {
    n: usize,
    cells: Vec<u8>,
    trail: Vec<(u32, u8)>,
}

impl PartialTable {
    pub fn new(n: usize) -> PartialTable {
        assert!((2..UNKNOWN as usize).contains(&n), "unsupported carrier size {n}");
        PartialTable {
            n,
            cells: vec![UNKNOWN; n * n * n],
            trail: Vec::new(),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn slot(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n + b) * self.n + c
    }

    pub fn coords(&self, slot: usize) -> (usize, usize, usize) {
        let n = self.n;
        (slot / (n * n), slot / n % n, slot % n)
    }

    #[inline]
    pub fn get(&self, slot: usize) -> Option<u8> {
        let v = self.cells[slot];
        (v != UNKNOWN).then_some(v)
    }

    #[inline]
    pub fn raw(&self, slot: usize) -> u8 {
        self.cells[slot]
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    #[inline]
    pub fn set(&mut self, slot: usize, v: u8) {
        debug_assert!((v as usize) < self.n);
        self.trail.push((slot as u32, self.cells[slot]));
        self.cells[slot] = v;
    }

    /// Current trail position, for [`PartialTable::undo_to`].
    #[inline]
    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (slot, prev) = self.trail.pop().unwrap();
            self.cells[slot as usize] = prev;
        }
    }

    pub fn known(&self) -> usize {
        self.cells.iter().filter(|&&v| v != UNKNOWN).count()
    }

    pub fn unknown(&self) -> usize {
        self.cells.len() - self.known()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&v| v != UNKNOWN)
    }

    /// Materialises a complete table.
    pub fn to_system(&self, zero: usize, one: usize) -> Result<TernarySystem, StructureError> {
        let p = self.cells.iter().map(|&v| v as usize).collect();
        TernarySystem::new(self.n, zero, one, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trail_restores_earlier_states() {
        let mut t = PartialTable::new(3);
        let m0 = t.mark();
        t.set(4, 1);
        let snapshot = t.clone();
        let m1 = t.mark();
        t.set(5, 2);
        t.set(4, 0);
        t.undo_to(m1);
        assert_eq!(t.cells(), snapshot.cells());
        t.undo_to(m0);
        assert_eq!(t.known(), 0);
    }

    #[test]
    fn slot_coordinates_round_trip() {
        let t = PartialTable::new(4);
        for s in 0..64 {
            let (a, b, c) = t.coords(s);
            assert_eq!(t.slot(a, b, c), s);
        }
    }
}

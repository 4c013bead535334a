use serde::Serialize;

use super::TernarySystem;

/// The unary and binary operations read off a ternary table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedOps {
    pub size: usize,
    pub bar: Vec<usize>,
    pub dot: Vec<usize>,
    pub circ: Vec<usize>,
    pub wedge: Vec<usize>,
    pub vee: Vec<usize>,
    pub plus: Vec<usize>,
}

/// Computes `bar a = p(1,a,0)`, `a.b = p(0,a,b)`, `a o b = p(a,b,1)`,
/// `a ^ b = p(b, bar a, 0)`, `a v b = p(1, bar b, a)` and
/// `a + b = p(a, b, bar a)` pointwise.
pub fn derive(sys: &TernarySystem) -> DerivedOps {
    let n = sys.size();
    let (zero, one) = (sys.zero(), sys.one());
    let bar: Vec<usize> = (0..n).map(|a| sys.p(one, a, zero)).collect();
    let mut dot = Vec::with_capacity(n * n);
    let mut circ = Vec::with_capacity(n * n);
    let mut wedge = Vec::with_capacity(n * n);
    let mut vee = Vec::with_capacity(n * n);
    let mut plus = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            dot.push(sys.p(zero, a, b));
            circ.push(sys.p(a, b, one));
            wedge.push(sys.p(b, bar[a], zero));
            vee.push(sys.p(one, bar[b], a));
            plus.push(sys.p(a, b, bar[a]));
        }
    }
    DerivedOps { size: n, bar, dot, circ, wedge, vee, plus }
}

impl DerivedOps {
    #[inline]
    pub fn bar(&self, a: usize) -> usize {
        self.bar[a]
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot[a * self.size + b]
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ[a * self.size + b]
    }

    #[inline]
    pub fn wedge(&self, a: usize, b: usize) -> usize {
        self.wedge[a * self.size + b]
    }

    #[inline]
    pub fn vee(&self, a: usize, b: usize) -> usize {
        self.vee[a * self.size + b]
    }

    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.plus[a * self.size + b]
    }

    /// The six tables in signature order, with their printed names.
    pub fn named_tables(&self) -> [(&'static str, &[usize]); 5] {
        [
            ("dot", &self.dot),
            ("circ", &self.circ),
            ("wedge", &self.wedge),
            ("vee", &self.vee),
            ("plus", &self.plus),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{fixtures, nearring_to_ternary};

    #[test]
    fn size_two_model_gives_boolean_operations() {
        let sys = TernarySystem::from_fn(2, 0, 1, |a, b, c| if b == 0 { a } else { c }).unwrap();
        let d = derive(&sys);
        assert_eq!(d.bar, vec![1, 0]);
        assert_eq!(d.dot, vec![0, 0, 0, 1]);
        assert_eq!(d.circ, vec![0, 1, 1, 1]);
        assert_eq!(d.plus, vec![0, 1, 1, 0]);
        assert_eq!(d.wedge, d.dot);
        assert_eq!(d.vee, d.circ);
    }

    #[test]
    fn near_ring_plus_is_the_printed_table() {
        let nr = fixtures::nearring4();
        let sys = nearring_to_ternary(&nr).unwrap();
        let d = derive(&sys);
        // printed `+`: symmetric difference on {0, u, v, 1}
        let printed = [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ];
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(d.plus(a, b), printed[a][b]);
            }
        }
        for a in 0..4 {
            assert_eq!(d.dot(sys.one(), a), a);
        }
    }

    #[test]
    fn derive_is_pure() {
        let sys = fixtures::lukasiewicz(4);
        let t = crate::classical::mv_to_ternary(&sys).unwrap();
        assert_eq!(derive(&t), derive(&t));
    }
}

use super::TernarySystem;

/// A map between carriers that preserves `0`, `1` and `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<'a> {
    pub source: &'a TernarySystem,
    pub target: &'a TernarySystem,
    pub map: Vec<usize>,
}

impl<'a> Morphism<'a> {
    /// Validates the three morphism equations for every triple.
    pub fn new(source: &'a TernarySystem, target: &'a TernarySystem, map: Vec<usize>) -> Option<Morphism<'a>> {
        is_homomorphism(source, target, &map).then_some(Morphism { source, target, map })
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && {
            let mut seen = vec![false; self.target.size()];
            self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        }
    }
}

pub fn is_homomorphism(source: &TernarySystem, target: &TernarySystem, map: &[usize]) -> bool {
    let n = source.size();
    if map.len() != n || map.iter().any(|&y| y >= target.size()) {
        return false;
    }
    if map[source.zero()] != target.zero() || map[source.one()] != target.one() {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if map[source.p(a, b, c)] != target.p(map[a], map[b], map[c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Backtracking search for a constant-preserving isomorphism `a -> b`.
pub fn find_isomorphism<'a>(a: &'a TernarySystem, b: &'a TernarySystem) -> Option<Morphism<'a>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    map[a.one()] = b.one();
    used[b.zero()] = true;
    used[b.one()] = true;
    let order: Vec<usize> = (0..n).filter(|&x| x != a.zero() && x != a.one()).collect();

    // checks every triple whose arguments are mapped
    fn consistent(a: &TernarySystem, b: &TernarySystem, map: &[usize]) -> bool {
        let n = a.size();
        for x in 0..n {
            if map[x] == UNSET {
                continue;
            }
            for y in 0..n {
                if map[y] == UNSET {
                    continue;
                }
                for z in 0..n {
                    if map[z] == UNSET {
                        continue;
                    }
                    let img = map[a.p(x, y, z)];
                    if img != UNSET && img != b.p(map[x], map[y], map[z]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn go(
        a: &TernarySystem,
        b: &TernarySystem,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if !consistent(a, b, map) {
            return false;
        }
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..b.size() {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(a, b, order, depth + 1, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = UNSET;
        }
        false
    }

    if go(a, b, &order, 0, &mut map, &mut used) {
        debug_assert!(is_homomorphism(a, b, &map));
        Some(Morphism { source: a, target: b, map })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{fixtures, nearring_to_ternary};

    fn cd(n: usize) -> TernarySystem {
        TernarySystem::from_fn(n, 0, n - 1, |a, b, c| if b == 0 { a } else if b == n - 1 { c } else { a }).unwrap()
    }

    #[test]
    fn identity_on_size_two() {
        let s = cd(2);
        let m = find_isomorphism(&s, &s).unwrap();
        assert_eq!(m.map, vec![0, 1]);
        assert!(m.is_bijective());
    }

    #[test]
    fn size_mismatch_has_no_isomorphism() {
        assert!(find_isomorphism(&cd(2), &cd(3)).is_none());
    }

    #[test]
    fn near_ring_swap_of_middle_elements() {
        let sys = nearring_to_ternary(&fixtures::nearring4()).unwrap();
        let swapped = sys.relabel(&[0, 2, 1, 3]);
        let fwd = find_isomorphism(&sys, &swapped);
        let back = find_isomorphism(&swapped, &sys);
        assert_eq!(fwd.is_some(), back.is_some());
        // the swap itself is always an isomorphism onto the relabelled table
        assert_eq!(fwd.unwrap().map, vec![0, 2, 1, 3]);
        // but the swapped table is a different table: u.v = 0 while v.u = u
        assert_ne!(sys.unlabeled(), swapped.unlabeled());
    }

    #[test]
    fn non_homomorphisms_are_rejected() {
        let s = cd(2);
        assert!(Morphism::new(&s, &s, vec![1, 0]).is_none());
        assert!(Morphism::new(&s, &s, vec![0, 1]).is_some());
    }
}

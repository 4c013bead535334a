use crate::structures::TernarySystem;

/// Every bijection seating `zero` at 0 and `one` at `n - 1`, middle elements
/// in all orders. `perm[x]` is the new index of `x`.
pub fn seatings(sys: &TernarySystem) -> Vec<Vec<usize>> {
    let n = sys.size();
    let middle: Vec<usize> = (0..n).filter(|&x| x != sys.zero() && x != sys.one()).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    perm[sys.zero()] = 0;
    perm[sys.one()] = n - 1;
    let mut used = vec![false; n];

    fn go(middle: &[usize], k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if k == middle.len() {
            out.push(perm.clone());
            return;
        }
        for target in 1..=middle.len() {
            if !used[target] {
                used[target] = true;
                perm[middle[k]] = target;
                go(middle, k + 1, perm, used, out);
                used[target] = false;
            }
        }
    }

    go(&middle, 0, &mut perm, &mut used, &mut out);
    out
}

fn serialize(sys: &TernarySystem, perm: &[usize], buf: &mut [u8]) {
    let n = sys.size();
    buf[0] = n as u8;
    let raw = sys.raw_table();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = raw[(a * n + b) * n + c] as usize;
                buf[1 + (perm[a] * n + perm[b]) * n + perm[c]] = perm[v] as u8;
            }
        }
    }
}

/// The permutation giving the smallest serialisation; ties go to the first
/// in [`seatings`] order.
fn best_seating(sys: &TernarySystem) -> (Vec<u8>, Vec<usize>) {
    let n = sys.size();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut buf = vec![0u8; 1 + n * n * n];
    for perm in seatings(sys) {
        serialize(sys, &perm, &mut buf);
        if best.as_ref().is_none_or(|(b, _)| buf < *b) {
            best = Some((buf.clone(), perm));
        }
    }
    best.expect("at least one seating")
}

/// `[n]` followed by the table, minimised over constant-preserving
/// relabellings. Equal iff the systems are isomorphic.
pub fn canonical_form(sys: &TernarySystem) -> Vec<u8> {
    best_seating(sys).0
}

/// The relabelled system whose table is the canonical form.
pub fn canonical_system(sys: &TernarySystem) -> TernarySystem {
    let (_, perm) = best_seating(sys);
    sys.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seating_count() {
        let sys = TernarySystem::from_fn(5, 2, 0, |a, _, _| a).unwrap();
        let s = seatings(&sys);
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|p| p[2] == 0 && p[0] == 4));
    }

    #[test]
    fn canonical_system_matches_form() {
        let sys = TernarySystem::from_fn(3, 1, 0, |a, b, c| if b == 0 { c } else { a }).unwrap();
        let c = canonical_system(&sys);
        assert_eq!(c.zero(), 0);
        assert_eq!(c.one(), 2);
        let mut bytes = vec![3u8];
        bytes.extend_from_slice(c.raw_table());
        assert_eq!(bytes, canonical_form(&sys));
    }
}

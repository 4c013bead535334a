//! Conversions between classical structures and ternary systems.

use super::types::{require, BooleanAlgebra, ClassicalError, DeMorganAlgebra, MVAlgebra, NearRing, Ring2};
use crate::structures::{check_axiom_set, derive, AxiomId, TernarySystem, BASE_AXIOMS, DE_MORGAN_AXIOMS, TERNARY_MV_AXIOMS};

fn build(
    size: usize,
    zero: usize,
    one: usize,
    labels: &Option<Vec<String>>,
    f: impl Fn(usize, usize, usize) -> usize,
) -> Result<TernarySystem, ClassicalError> {
    Ok(TernarySystem::from_fn(size, zero, one, f)?.with_labels_opt(labels.clone()))
}

fn precondition(sys: &TernarySystem, axioms: &[AxiomId]) -> Result<(), ClassicalError> {
    match check_axiom_set(sys, axioms, true).into_iter().find(|r| !r.holds) {
        None => Ok(()),
        Some(r) => Err(ClassicalError::Precondition {
            axiom: r.axiom,
            witness: r.witness,
        }),
    }
}

fn labels_of(sys: &TernarySystem) -> Option<Vec<String>> {
    sys.labels().map(|l| l.to_vec())
}

/// `p(a, b, c) = (bar b . a) o (b . c)`
pub fn boolean_to_ternary(b: &BooleanAlgebra) -> Result<TernarySystem, ClassicalError> {
    require("Boolean algebra", &b.check())?;
    let d = b.as_demorgan();
    build(d.size, d.zero, d.one, &d.labels, |a, b, c| {
        d.join(d.meet(d.bar[b], a), d.meet(b, c))
    })
}

/// `p(a, b, c) = (bar b . a) o (a . c) o (b . c)`
pub fn demorgan_to_ternary(d: &DeMorganAlgebra) -> Result<TernarySystem, ClassicalError> {
    require("de Morgan algebra", &d.check())?;
    build(d.size, d.zero, d.one, &d.labels, |a, b, c| {
        d.join(d.join(d.meet(d.bar[b], a), d.meet(a, c)), d.meet(b, c))
    })
}

/// Dual form `p(a, b, c) = (bar b o c) . (b o a) . (a o c)`.
pub fn demorgan_to_ternary_dual(d: &DeMorganAlgebra) -> Result<TernarySystem, ClassicalError> {
    require("de Morgan algebra", &d.check())?;
    build(d.size, d.zero, d.one, &d.labels, |a, b, c| {
        d.meet(d.meet(d.join(d.bar[b], c), d.join(b, a)), d.join(a, c))
    })
}

/// Whether the two de Morgan formulas give the same table on `d`.
pub fn demorgan_formulas_agree(d: &DeMorganAlgebra) -> Result<bool, ClassicalError> {
    Ok(demorgan_to_ternary(d)? == demorgan_to_ternary_dual(d)?)
}

/// Reads `a . b = p(0, a, b)`, `a o b = p(a, b, 1)` and `bar a = p(1, a, 0)`
/// off a system satisfying T1-T5.
pub fn ternary_to_demorgan(sys: &TernarySystem) -> Result<DeMorganAlgebra, ClassicalError> {
    precondition(sys, &DE_MORGAN_AXIOMS)?;
    let ops = derive(sys);
    let d = DeMorganAlgebra::new(
        sys.size(),
        ops.dot.clone(),
        ops.circ.clone(),
        ops.bar.clone(),
        sys.zero(),
        sys.one(),
        labels_of(sys),
    )?;
    require("de Morgan algebra", &d.check())?;
    Ok(d)
}

/// `p(a, b, c) = ((bar a o bar b) . a) o (b . c)` with MV multiplication.
pub fn mv_to_ternary(m: &MVAlgebra) -> Result<TernarySystem, ClassicalError> {
    require("MV-algebra", &m.check())?;
    build(m.size, m.zero, m.one(), &m.labels, |a, b, c| {
        m.circ(m.dot(m.circ(m.bar[a], m.bar[b]), a), m.dot(b, c))
    })
}

/// Reads `a o b = p(a, b, 1)` and `bar a = p(1, a, 0)` off a ternary
/// MV-algebra.
pub fn ternary_mv_to_mv(sys: &TernarySystem) -> Result<MVAlgebra, ClassicalError> {
    precondition(sys, &TERNARY_MV_AXIOMS)?;
    let ops = derive(sys);
    let m = MVAlgebra::new(
        sys.size(),
        ops.circ.clone(),
        ops.bar.clone(),
        sys.zero(),
        labels_of(sys),
    )?;
    require("MV-algebra", &m.check())?;
    Ok(m)
}

/// `p(a, b, c) = (bar b . a) + (b . c)` with `bar b = 1 + b`.
pub fn ring_to_ternary(r: &Ring2) -> Result<TernarySystem, ClassicalError> {
    require("ring of characteristic 2", &r.check())?;
    build(r.size, r.zero, r.one, &r.labels, |a, b, c| {
        r.add(r.mul(r.add(r.one, b), a), r.mul(b, c))
    })
}

/// `p(a, b, c) = a + b . (a + c)`
pub fn nearring_to_ternary(nr: &NearRing) -> Result<TernarySystem, ClassicalError> {
    if !nr.char2 {
        return Err(ClassicalError::NotCharacteristicTwo);
    }
    nr.validate()?;
    build(nr.size, nr.zero, nr.one, &nr.labels, |a, b, c| nr.add(a, nr.mul(b, nr.add(a, c))))
}

/// The ring formula `(1 + b) . a + b . c` applied to a near-ring. Without
/// left distributivity this need not satisfy T4.
pub fn complement_sum_ternary(nr: &NearRing) -> Result<TernarySystem, ClassicalError> {
    if !nr.char2 {
        return Err(ClassicalError::NotCharacteristicTwo);
    }
    nr.validate()?;
    build(nr.size, nr.zero, nr.one, &nr.labels, |a, b, c| {
        nr.add(nr.mul(nr.add(nr.one, b), a), nr.mul(b, c))
    })
}

/// `p(a, b, c) = a + b . (c - a)`; characteristic 2 is not required.
pub fn nearring_affine_ternary(nr: &NearRing) -> Result<TernarySystem, ClassicalError> {
    nr.validate()?;
    let neg = nr.negation().expect("validated near-ring has inverses");
    build(nr.size, nr.zero, nr.one, &nr.labels, |a, b, c| {
        nr.add(a, nr.mul(b, nr.add(c, neg[a])))
    })
}

/// Result of reading `+` and `.` off a ternary system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingLike {
    Ring(Ring2),
    NearRing(NearRing),
}

impl RingLike {
    pub fn add_table(&self) -> &[usize] {
        match self {
            RingLike::Ring(r) => &r.add,
            RingLike::NearRing(n) => &n.add,
        }
    }

    pub fn mul_table(&self) -> &[usize] {
        match self {
            RingLike::Ring(r) => &r.mul,
            RingLike::NearRing(n) => &n.mul,
        }
    }
}

/// `a + b = p(a, b, bar a)` and `a . b = p(0, a, b)`. Left distributivity
/// decides between a ring and a near-ring.
pub fn ternary_to_ring(sys: &TernarySystem) -> Result<RingLike, ClassicalError> {
    let mut pre = BASE_AXIOMS.to_vec();
    pre.push(AxiomId::PLUS_NILP);
    precondition(sys, &pre)?;
    let ops = derive(sys);
    let nr = NearRing::new(
        sys.size(),
        ops.plus.clone(),
        ops.dot.clone(),
        sys.zero(),
        sys.one(),
        true,
        labels_of(sys),
    )?;
    if nr.is_ring() {
        let r = Ring2::new(nr.size, nr.add, nr.mul, nr.zero, nr.one, nr.labels)?;
        require("ring of characteristic 2", &r.check())?;
        Ok(RingLike::Ring(r))
    } else {
        nr.validate()?;
        Ok(RingLike::NearRing(nr))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::fixtures;
    use crate::structures::{check_axiom, satisfies_all};

    fn cd2() -> TernarySystem {
        TernarySystem::from_fn(2, 0, 1, |a, b, c| if b == 1 { c } else { a }).unwrap()
    }

    #[test]
    fn two_element_inputs_give_conditioned_disjunction() {
        let b = boolean_to_ternary(&fixtures::boolean_algebra(1)).unwrap();
        assert_eq!(b.unlabeled(), cd2());
        assert_eq!(mv_to_ternary(&fixtures::lukasiewicz(2)).unwrap().unlabeled(), cd2());
        assert_eq!(ring_to_ternary(&fixtures::boolean_ring(1)).unwrap(), cd2());
        assert_eq!(nearring_affine_ternary(&fixtures::integers_mod(2)).unwrap(), cd2());
    }

    #[test]
    fn divisor_formula_value() {
        // divisors of 6: 1, 2, 3, 6 at indices 0..4; p(2, 3, 6) = 6
        let sys = demorgan_to_ternary(&fixtures::divisor_lattice(6)).unwrap();
        assert_eq!(sys.p(1, 2, 3), 3);
        assert!(satisfies_all(&sys, &DE_MORGAN_AXIOMS));
    }

    #[test]
    fn kleene_fails_complement_at_half() {
        let sys = demorgan_to_ternary(&fixtures::kleene3()).unwrap();
        assert!(satisfies_all(&sys, &DE_MORGAN_AXIOMS));
        let r = check_axiom(&sys, AxiomId::BOOL_COMPL);
        assert_eq!(r.witness.unwrap().assignment.values, vec![1]);
    }

    #[test]
    fn lukasiewicz3_value_and_axioms() {
        let sys = mv_to_ternary(&fixtures::lukasiewicz(3)).unwrap();
        assert_eq!(sys.p(1, 1, 2), 2);
        assert!(satisfies_all(&sys, &TERNARY_MV_AXIOMS));
        assert!(!check_axiom(&sys, AxiomId::T4).holds);
    }

    #[test]
    fn near_ring_value_and_recovery() {
        let nr = fixtures::nearring4();
        let sys = nearring_to_ternary(&nr).unwrap();
        // p(u, v, 1) = u + v.(u + 1) = u + v.v = u + v = 1
        assert_eq!(sys.p(1, 2, 3), 3);
        assert!(satisfies_all(&sys, &BASE_AXIOMS));
        match ternary_to_ring(&sys).unwrap() {
            RingLike::NearRing(back) => {
                assert_eq!(back.add, nr.add);
                assert_eq!(back.mul, nr.mul);
            }
            RingLike::Ring(_) => panic!("near-ring recovered as ring"),
        }
        assert_eq!(nearring_affine_ternary(&nr).unwrap(), sys);
    }

    #[test]
    fn ring_formulas_agree() {
        for r in [fixtures::gf4(), fixtures::upper_triangular_ring(), fixtures::boolean_ring(3)] {
            let a = ring_to_ternary(&r).unwrap();
            assert_eq!(a, nearring_to_ternary(&r.to_nearring()).unwrap());
            assert!(satisfies_all(&a, &BASE_AXIOMS));
        }
    }

    #[test]
    fn z3_affine_formula_satisfies_base_axioms() {
        let nr = fixtures::integers_mod(3);
        assert!(matches!(nearring_to_ternary(&nr), Err(ClassicalError::NotCharacteristicTwo)));
        let sys = nearring_affine_ternary(&nr).unwrap();
        assert!(satisfies_all(&sys, &BASE_AXIOMS));
    }

    #[test]
    fn ternary_to_demorgan_reports_failing_axiom() {
        let sys = nearring_to_ternary(&fixtures::nearring4()).unwrap();
        match ternary_to_demorgan(&sys) {
            Err(ClassicalError::Precondition { axiom, witness }) => {
                assert_eq!(axiom, AxiomId::T5DM);
                assert!(witness.is_some());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips_are_exact() {
        for n in [6, 12, 30] {
            let d = fixtures::divisor_lattice(n);
            let sys = demorgan_to_ternary(&d).unwrap();
            assert_eq!(ternary_to_demorgan(&sys).unwrap(), d);
            assert_eq!(demorgan_to_ternary(&ternary_to_demorgan(&sys).unwrap()).unwrap(), sys);
        }
        for n in 2..=5 {
            let m = fixtures::lukasiewicz(n);
            let sys = mv_to_ternary(&m).unwrap();
            assert_eq!(ternary_mv_to_mv(&sys).unwrap(), m);
        }
    }

    #[test]
    fn boolean_inputs_agree_across_formulas() {
        for k in 1..=3 {
            let b = fixtures::boolean_algebra(k);
            let t = boolean_to_ternary(&b).unwrap();
            assert_eq!(t, demorgan_to_ternary(b.as_demorgan()).unwrap());
            assert!(check_axiom(&t, AxiomId::BRING).holds);
            // p(1, a, 1) = 1
            assert!((0..t.size()).all(|a| t.p(t.one(), a, t.one()) == t.one()));
        }
    }
}

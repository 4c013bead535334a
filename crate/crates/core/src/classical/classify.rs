use std::fmt;

use serde::Serialize;

use crate::structures::{check_axiom_with, derive, satisfies_all, AxiomId, TernarySystem, TERNARY_MV_AXIOMS};

/// Class names attached to the known checkmark rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    BooleanAlgebra,
    DeMorgan,
    MvCandidate,
    RingChar2,
    NearRingChar2,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 5] = [
        ClassLabel::BooleanAlgebra,
        ClassLabel::DeMorgan,
        ClassLabel::MvCandidate,
        ClassLabel::RingChar2,
        ClassLabel::NearRingChar2,
    ];

    /// Expected `(T1-T3, T4, BC, a.a=a, LD)` row.
    pub fn row(self) -> [bool; 5] {
        match self {
            ClassLabel::BooleanAlgebra => [true, true, true, true, true],
            ClassLabel::DeMorgan => [true, true, false, true, false],
            ClassLabel::MvCandidate => [true, false, true, false, false],
            ClassLabel::RingChar2 => [true, true, false, false, true],
            ClassLabel::NearRingChar2 => [true, true, false, false, false],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::BooleanAlgebra => "Boolean algebra",
            ClassLabel::DeMorgan => "de Morgan algebra",
            ClassLabel::MvCandidate => "MV-algebra",
            ClassLabel::RingChar2 => "ring, char 2",
            ClassLabel::NearRingChar2 => "near-ring, char 2",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationMatrix {
    pub t1_t3: bool,
    pub t4: bool,
    pub bc: bool,
    pub idempotent: bool,
    pub left_dist: bool,
    pub label: Option<ClassLabel>,
}

impl ClassificationMatrix {
    pub const HEADERS: [&'static str; 5] = ["T1-T3", "T4", "BC", "a.a=a", "LD"];

    pub fn row(&self) -> [bool; 5] {
        [self.t1_t3, self.t4, self.bc, self.idempotent, self.left_dist]
    }

    /// Checkmark rendering, e.g. `✓ ✓ ✗ ✗ ✗`.
    pub fn marks(&self) -> String {
        self.row().iter().map(|&b| if b { "✓" } else { "✗" }).collect::<Vec<_>>().join(" ")
    }
}

/// Computes the five columns by exhaustive axiom checks and attaches a label
/// when the row matches a known class and that class's defining axioms hold.
pub fn classify(sys: &TernarySystem) -> ClassificationMatrix {
    let ops = derive(sys);
    let holds = |ax| check_axiom_with(sys, &ops, ax).holds;
    let m = ClassificationMatrix {
        t1_t3: holds(AxiomId::T1) && holds(AxiomId::T2) && holds(AxiomId::T3),
        t4: holds(AxiomId::T4),
        bc: holds(AxiomId::BOOL_COMPL),
        idempotent: holds(AxiomId::IDEMP_DOT),
        left_dist: holds(AxiomId::LEFT_DIST),
        label: None,
    };
    let row = m.row();
    let label = ClassLabel::ALL.into_iter().find(|l| {
        l.row() == row
            && match l {
                ClassLabel::BooleanAlgebra => true,
                ClassLabel::DeMorgan => holds(AxiomId::T5DM),
                ClassLabel::MvCandidate => satisfies_all(sys, &TERNARY_MV_AXIOMS),
                ClassLabel::RingChar2 | ClassLabel::NearRingChar2 => holds(AxiomId::PLUS_NILP),
            }
    });
    ClassificationMatrix { label, ..m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{fixtures, *};

    #[test]
    fn known_rows() {
        let b = boolean_to_ternary(&fixtures::boolean_algebra(1)).unwrap();
        assert_eq!(classify(&b).label, Some(ClassLabel::BooleanAlgebra));

        let d = demorgan_to_ternary(&fixtures::divisor_lattice(12)).unwrap();
        let c = classify(&d);
        assert_eq!(c.row(), ClassLabel::DeMorgan.row());
        assert_eq!(c.label, Some(ClassLabel::DeMorgan));

        let m = mv_to_ternary(&fixtures::lukasiewicz(3)).unwrap();
        assert_eq!(classify(&m).label, Some(ClassLabel::MvCandidate));

        let r = ring_to_ternary(&fixtures::upper_triangular_ring()).unwrap();
        assert_eq!(classify(&r).label, Some(ClassLabel::RingChar2));

        let nr = nearring_to_ternary(&fixtures::nearring4()).unwrap();
        let c = classify(&nr);
        assert_eq!(c.marks(), "✓ ✓ ✗ ✗ ✗");
        assert_eq!(c.label, Some(ClassLabel::NearRingChar2));
    }

    #[test]
    fn square_free_divisor_lattice_is_boolean() {
        let d = demorgan_to_ternary(&fixtures::divisor_lattice(6)).unwrap();
        assert_eq!(classify(&d).label, Some(ClassLabel::BooleanAlgebra));
    }
}

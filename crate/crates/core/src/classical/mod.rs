//! Boolean, de Morgan, MV, ring and near-ring structures, their law checks,
//! and conversions to and from ternary systems.

mod classify;
mod convert;
pub mod fixtures;
pub mod laws;
mod types;

pub use classify::{classify, ClassLabel, ClassificationMatrix};
pub use convert::{
    boolean_to_ternary, complement_sum_ternary, demorgan_formulas_agree, demorgan_to_ternary,
    demorgan_to_ternary_dual, mv_to_ternary, nearring_affine_ternary, nearring_to_ternary, ring_to_ternary,
    ternary_mv_to_mv, ternary_to_demorgan, ternary_to_ring, RingLike,
};
pub use laws::{LawReport, StructureReport};
pub use types::{BooleanAlgebra, ClassicalError, DeMorganAlgebra, MVAlgebra, NearRing, Ring2};

/// Any classical structure, for uniform checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalStructure {
    DeMorgan(DeMorganAlgebra),
    Mv(MVAlgebra),
    Ring(Ring2),
    NearRing(NearRing),
}

impl ClassicalStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassicalStructure::DeMorgan(_) => "de-morgan",
            ClassicalStructure::Mv(_) => "mv",
            ClassicalStructure::Ring(_) => "ring2",
            ClassicalStructure::NearRing(_) => "near-ring",
        }
    }

    /// Converts with the formula matching the structure's kind. Boolean
    /// algebras are de Morgan algebras here, and both formulas agree on them.
    pub fn to_ternary(&self) -> Result<crate::structures::TernarySystem, ClassicalError> {
        match self {
            ClassicalStructure::DeMorgan(d) => demorgan_to_ternary(d),
            ClassicalStructure::Mv(m) => mv_to_ternary(m),
            ClassicalStructure::Ring(r) => ring_to_ternary(r),
            ClassicalStructure::NearRing(nr) if nr.char2 => nearring_to_ternary(nr),
            ClassicalStructure::NearRing(nr) => nearring_affine_ternary(nr),
        }
    }
}

/// Checks every law of the structure's type exhaustively.
pub fn check_classical(s: &ClassicalStructure) -> StructureReport {
    match s {
        ClassicalStructure::DeMorgan(d) => d.check(),
        ClassicalStructure::Mv(m) => m.check(),
        ClassicalStructure::Ring(r) => r.check(),
        ClassicalStructure::NearRing(nr) => nr.check(),
    }
}

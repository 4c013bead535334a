//! Finite ternary systems, their derived operations, the axiom catalog and
//! morphisms.

mod axioms;
mod derived;
mod lemmas;
mod morphism;
mod system;

pub use axioms::{
    check_axiom, check_axiom_set, check_axiom_with, parse_axiom_list, satisfies_all, AxiomId, AxiomReport,
    AxiomWitness, UnknownAxiom, BASE_AXIOMS, DE_MORGAN_AXIOMS, TERNARY_MV_AXIOMS,
};
pub(crate) use axioms::first_failure;
pub use derived::{derive, DerivedOps};
pub use lemmas::{
    absorption_lemma, char2_lemma, complement_lemma, distributivity_lemma, lemma22_groups, lemma22_suite,
    Implication, ImplicationReport, PropertyGroup, PropertyReport, SuiteReport,
};
pub use morphism::{find_isomorphism, is_homomorphism, Morphism};
pub use system::{StructureError, TernarySystem};
pub(crate) use system::{validate_carrier, validate_table};

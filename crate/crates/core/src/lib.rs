//! Finite ternary algebras `(A, p, 0, 1)`: identity checking, axiom catalog,
//! conversions to classical structures, model enumeration and theorem
//! verification over small carriers.

pub mod classical;
pub mod cli;
pub mod io;
pub mod par;
pub mod search;
pub mod structures;
pub mod terms;
pub mod verifier;

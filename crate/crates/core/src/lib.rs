//! Knowing-whether logic: formulas, Kripke semantics, translations,
//! a tableau decision procedure and a Hilbert-style proof checker.

pub mod formula;
pub mod semantics;
pub mod translate;
pub mod decide;
pub mod proof;

//! Characteristic varieties of plane-curve complements from group
//! presentations.
//!
//! The pipeline runs from a finite presentation whose generators are labelled
//! by curve components ([`words`]), through Fox calculus ([`fox`]) to an
//! Alexander matrix over a Laurent polynomial ring, and then evaluates that
//! matrix at characters over finite and cyclotomic fields ([`charvar`]).
//! Around it sit abelian covers ([`covers`]), braid monodromy and
//! Zariski-van Kampen presentations ([`braid`]), and monomial descriptions of
//! translated subtori ([`torus`]).

pub mod algebra;
pub mod words;
pub mod fox;
pub mod charvar;
pub mod covers;
pub mod braid;
pub mod torus;
pub mod cli;

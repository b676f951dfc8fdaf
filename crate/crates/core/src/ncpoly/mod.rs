//! Noncommutative polynomials and presented algebras.
//!
//! Words are products of packed generators, polynomials are exact linear
//! combinations of words, and a [`Presentation`] turns a set of oriented
//! relations into a normal-form procedure. [`Algebra`] is a tensor product of
//! presentations, and [`Morphism`] maps between such products.

mod algebra;
mod check;
mod morphism;
mod poly;
mod presentation;
mod word;

pub use algebra::Algebra;
pub use check::{diamond_check, validate_presentation, DiamondReport, ValidationReport};
pub use morphism::Morphism;
pub use poly::NCPoly;
pub use presentation::{Generator, Presentation, Rule, Sign, DEFAULT_BUDGET};
pub use word::{gen, local_of, slot_of, Gen, Word};

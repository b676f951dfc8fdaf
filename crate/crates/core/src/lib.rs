pub mod algebras;
pub mod error;
pub mod frobenius;
pub mod gluing;
pub mod ncpoly;
pub mod poisson;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod syntax;

pub use error::{Result, SkeinError};
pub use ncpoly::{Algebra, Generator, Morphism, NCPoly, Presentation, Rule, Sign, Word};
pub use report::{Check, Report, Status};
pub use scalar::{Rational, Ring, Scalar};

/// The guide's code listings, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/rewriting.md")]
    mod rewriting {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/poisson.md")]
    mod poisson {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    mod gluing {}
    #[doc = include_str!("../../../book/src/syntax.md")]
    mod syntax {}
    #[doc = include_str!("../../../book/src/presentation-files.md")]
    mod presentation_files {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

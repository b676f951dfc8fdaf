//! Gluing triangles along boundary edges.
//!
//! A glued surface's algebra is the kernel of `Δ^L − σΔ^R` inside the tensor
//! product of its pieces. [`GluingScenario`] carries the two built-in
//! examples, computes defects and catalogued glued elements, and
//! [`truncated_kernel_solve`] finds the kernel on a filtered piece by exact
//! elimination.

mod checks;
mod kernel;
mod scenario;

pub use checks::{frobenius_glued_check, frobenius_glued_check_in, gluing_check, kernel_check, poisson_gluing_check};
pub use kernel::{truncated_kernel_solve, Echelon, KernelProblem, KernelSolution, DEFAULT_DIMENSION_CAP};
pub use scenario::{parse_states, FactorEdge, GluingScenario, Scenario, Seam};

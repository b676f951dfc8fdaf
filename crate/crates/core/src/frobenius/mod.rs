//! Chebyshev polynomials and the Frobenius map at odd roots of unity.
//!
//! At a primitive `N`-th root of unity ω with `N` odd, `g ↦ g^N` on generators
//! sends the ω = +1 algebra of the bigon or triangle into the center of the
//! quantum one. [`FrobeniusMap`] realizes that map; the checks here verify its
//! compatibility with the Hopf and comodule structures, the q-binomial theorem
//! behind it, and the Chebyshev trace identities.

mod chebyshev;
mod checks;
mod map;

pub use chebyshev::{chebyshev, chebyshev_eval, Chebyshev};
pub use checks::{
    centrality_check, chebyshev_check, det_exponent, frobenius_centrality_check, frobenius_compat_check, gaussian_binomial,
    multiplicativity, qbinomial_check, trace_identity_check,
};
pub use map::{check_order, frobenius_apply, FrobeniusMap};

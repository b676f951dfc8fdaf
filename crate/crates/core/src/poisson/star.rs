use std::sync::Arc;

use crate::algebras::{builtin, Builtin};
use crate::error::{Result, SkeinError};
use crate::ncpoly::{Algebra, NCPoly, Presentation};
use crate::scalar::{Rational, Ring, Scalar};

/// The quantum presentation whose ω = +1 specialization is `b`.
fn deformation_of(b: Builtin) -> Result<Builtin> {
    match b {
        Builtin::BigonPlus1 => Ok(Builtin::Bigon),
        Builtin::TrianglePlus1 => Ok(Builtin::Triangle),
        other => Err(SkeinError::Unsupported(format!("{other} has no built-in deformation"))),
    }
}

/// The same tensor product with every factor replaced by its deformation over `Q[ħ]/ħ²`.
fn dual_lift(alg: &Algebra) -> Result<Algebra> {
    let parts: Vec<Algebra> = alg
        .factors()
        .iter()
        .map(|p: &Arc<Presentation>| {
            let b = deformation_of(Builtin::parse(p.name())?)?;
            Ok(Algebra::single(builtin(b, Ring::Dual)?))
        })
        .collect::<Result<_>>()?;
    let refs: Vec<&Algebra> = parts.iter().collect();
    Algebra::tensor(&refs)
}

fn lift(p: &NCPoly) -> Result<NCPoly> {
    p.map_coeffs(Ring::Dual, |c| Ok(Scalar::rational(Ring::Dual, c.at_omega_one()?)))
}

/// First-order bracket `{u, v}` on an ω = +1 algebra (or a tensor product of them).
///
/// `u` and `v` are lifted word for word to the deformation at `ω = 1 − ħ/4`,
/// where `u⋆v − v⋆u = ħ{u, v} mod ħ²`.
pub fn star_bracket(alg: &Algebra, u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
    let dual = dual_lift(alg)?;
    let (u, v) = (alg.normal_form(u)?, alg.normal_form(v)?);
    let c = dual.commutator(&lift(&u)?, &lift(&v)?)?;
    let mut out = NCPoly::zero(alg.ring());
    for (w, s) in c.terms() {
        let (c0, c1) = s.dual_parts().ok_or_else(|| SkeinError::Internal("non-dual coefficient".into()))?;
        if !num_traits::Zero::is_zero(c0) {
            return Err(SkeinError::Internal(format!("commutator has a nonzero ħ⁰ part ({c0})")));
        }
        out.add_term(w.clone(), Scalar::rational(alg.ring(), Rational::clone(c1)));
    }
    alg.normal_form(&out)
}

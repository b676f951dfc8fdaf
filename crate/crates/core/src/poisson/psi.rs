use crate::algebras::{algebra, relations, Matrix2, Surface};
use crate::error::{Result, SkeinError};
use crate::ncpoly::{Morphism, Sign};
use crate::poisson::table::Orientation;
use crate::scalar::{Ring, Scalar};
use crate::syntax::format_poly;
use crate::algebras::{bigon_matrix, triangle_matrix, triangle_states, BIGON_ORDER};

/// The isomorphism from the ω = +1 skein algebra to the character variety.
#[derive(Clone, Debug)]
pub struct PsiMap {
    pub surface: Surface,
    pub orientation: Orientation,
    pub morphism: Morphism,
}

/// `Ψ(M_δ)` by the case of `(𝔬(s(δ)), 𝔬(t(δ)))`: `N`, `CNC`, `−CN` or `−NC`.
fn case(n: &Matrix2, ends: (Sign, Sign)) -> Result<Matrix2> {
    use Sign::{Minus as M, Plus as P};
    let c = Matrix2::c(&n.algebra);
    let minus = Scalar::integer(n.algebra.ring(), -1);
    Ok(match ends {
        (M, P) => n.clone(),
        (P, M) => Matrix2::product(&[c.clone(), n.clone(), c])?,
        (P, P) => c.mul(n)?.scale(&minus),
        (M, M) => n.mul(&c)?.scale(&minus),
    })
}

impl PsiMap {
    /// Build `Ψ` without checking relations; `negate` flips the sign of one generator image.
    pub fn unchecked(surface: Surface, o: &Orientation, negate: Option<usize>) -> Result<PsiMap> {
        o.fit(surface)?;
        let src = algebra(surface.plus1(), Ring::Laurent)?;
        let tgt = algebra(surface.charvar(), Ring::Laurent)?;
        let t = tgt.clone();
        let morphism = Morphism::from_fn(src, tgt, false, |_, i| {
            let (l, e, f) = match surface {
                Surface::Bigon => (0, BIGON_ORDER[i].0, BIGON_ORDER[i].1),
                Surface::Triangle => triangle_states(i),
            };
            let n = match surface {
                Surface::Bigon => bigon_matrix(&t, 0),
                Surface::Triangle => triangle_matrix(&t, 0, l),
            };
            let img = case(&n, o.ends(surface, l))?.get(e.index(), f.index()).clone();
            Ok(if negate == Some(i) { img.neg() } else { img })
        })?;
        Ok(PsiMap { surface, orientation: o.clone(), morphism })
    }

    /// First defining relation of the source not sent to zero, if any.
    pub fn relation_witness(&self) -> Result<Option<String>> {
        for rel in relations(self.surface.plus1(), Ring::Laurent)? {
            let img = self.morphism.apply(&rel)?;
            if !img.is_zero() {
                return Ok(Some(format_poly(&self.morphism.target, &img)));
            }
        }
        Ok(None)
    }
}

/// `Ψ^𝔬` for `surface`, verified to respect every defining relation.
pub fn psi_transport(surface: Surface, o: &Orientation) -> Result<PsiMap> {
    let psi = PsiMap::unchecked(surface, o, None)?;
    match psi.relation_witness()? {
        None => Ok(psi),
        Some(w) => Err(SkeinError::Degenerate(format!("Ψ for {surface} at {o} breaks a relation: {w}"))),
    }
}

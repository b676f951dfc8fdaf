use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebras::{algebra, Surface};
use crate::error::{Result, SkeinError};
use crate::ncpoly::{Algebra, Morphism, NCPoly};
use crate::scalar::{Ring, Scalar};

/// `j: S₊₁ → S_ω` at a primitive `N`-th root of unity, `g ↦ g^N` on generators.
#[derive(Clone, Debug)]
pub struct FrobeniusMap {
    pub surface: Surface,
    pub n: u32,
    morphism: Morphism,
}

/// Check that `n` is odd and greater than one.
pub fn check_order(n: u32) -> Result<Ring> {
    Ring::cyclotomic(i64::from(n))
}

impl FrobeniusMap {
    /// The map for `surface` at order `n`, shared across callers.
    ///
    /// Construction fails if some generator image is not central.
    pub fn new(surface: Surface, n: u32) -> Result<Arc<FrobeniusMap>> {
        static CACHE: OnceLock<Mutex<HashMap<(Surface, u32), Arc<FrobeniusMap>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(j) = cache.lock().expect("frobenius cache").get(&(surface, n)) {
            return Ok(j.clone());
        }
        let ring = check_order(n)?;
        let source = algebra(surface.plus1(), Ring::Laurent)?;
        let target = algebra(surface.quantum(), ring)?;
        let t = target.clone();
        let morphism = Morphism::from_fn(source, target, false, |s, i| t.pow(&t.gen(s, i), n))?;
        for g in morphism.source.generators() {
            let img = morphism.apply(&g)?;
            for h in t.generators() {
                if !t.commutator(&img, &h)?.is_zero() {
                    return Err(SkeinError::Degenerate(format!("j image of a generator is not central at N = {n}")));
                }
            }
        }
        let j = Arc::new(FrobeniusMap { surface, n, morphism });
        Ok(cache.lock().expect("frobenius cache").entry((surface, n)).or_insert(j).clone())
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn source(&self) -> &Algebra {
        &self.morphism.source
    }

    pub fn target(&self) -> &Algebra {
        &self.morphism.target
    }

    /// Image of an element of the ω = +1 algebra. Coefficients are read at ω = 1.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        let p = p.map_coeffs(Ring::Laurent, |c| Ok(Scalar::rational(Ring::Laurent, c.at_omega_one()?)))?;
        let p = self.source().normal_form(&p)?;
        self.morphism.apply(&p)
    }
}

/// `j(p)` for `surface` at order `n`.
pub fn frobenius_apply(surface: Surface, n: u32, p: &NCPoly) -> Result<NCPoly> {
    FrobeniusMap::new(surface, n)?.apply(p)
}

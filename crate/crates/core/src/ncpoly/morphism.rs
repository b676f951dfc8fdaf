use std::collections::HashMap;

use crate::error::{Result, SkeinError};
use crate::ncpoly::algebra::Algebra;
use crate::ncpoly::poly::NCPoly;
use crate::ncpoly::word::{local_of, slot_of, Gen, Word};

/// Algebra map determined by generator images.
///
/// With `anti` set the map reverses products. When the source ring is
/// Laurent and the target ring differs, coefficients are specialized.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: Algebra,
    pub target: Algebra,
    images: Vec<Vec<NCPoly>>,
    anti: bool,
}

impl Morphism {
    /// `images[slot][local]` is the image of that generator in `target`.
    pub fn new(source: Algebra, target: Algebra, images: Vec<Vec<NCPoly>>, anti: bool) -> Result<Morphism> {
        if images.len() != source.slots() {
            return Err(SkeinError::MissingImage(format!("{} slots given, {} expected", images.len(), source.slots())));
        }
        for (s, imgs) in images.iter().enumerate() {
            let n = source.factor(s)?.alphabet().len();
            if imgs.len() != n {
                return Err(SkeinError::MissingImage(format!("slot {s}: {} images for {n} generators", imgs.len())));
            }
            if let Some(p) = imgs.iter().find(|p| p.ring() != target.ring()) {
                return Err(SkeinError::RingMismatch(p.ring(), target.ring()));
            }
        }
        Ok(Morphism { source, target, images, anti })
    }

    /// Build from a function giving each generator's image.
    pub fn from_fn(
        source: Algebra,
        target: Algebra,
        anti: bool,
        mut f: impl FnMut(usize, usize) -> Result<NCPoly>,
    ) -> Result<Morphism> {
        let mut images = Vec::with_capacity(source.slots());
        for s in 0..source.slots() {
            let n = source.factor(s)?.alphabet().len();
            let mut v = Vec::with_capacity(n);
            for i in 0..n {
                v.push(f(s, i)?);
            }
            images.push(v);
        }
        Morphism::new(source, target, images, anti)
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn image(&self, g: Gen) -> &NCPoly {
        &self.images[slot_of(g)][local_of(g)]
    }

    fn apply_word(&self, w: &Word, memo: &mut HashMap<Word, NCPoly>) -> Result<NCPoly> {
        if let Some(p) = memo.get(w) {
            return Ok(p.clone());
        }
        let out = match w.len() {
            0 => self.target.one(),
            1 => self.target.normal_form(self.image(w.as_slice()[0]))?,
            n => {
                // split in halves so shared prefixes are reused
                let h = n / 2;
                let a = self.apply_word(&Word::from_slice(&w.as_slice()[..h]), memo)?;
                let b = self.apply_word(&Word::from_slice(&w.as_slice()[h..]), memo)?;
                if self.anti {
                    self.target.mul(&b, &a)?
                } else {
                    self.target.mul(&a, &b)?
                }
            }
        };
        memo.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Image of a source element, in target normal form.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        let p = self.source_coeffs(p)?;
        let mut memo = HashMap::new();
        let mut acc = self.target.zero();
        for (w, c) in p.terms() {
            let img = self.apply_word(w, &mut memo)?;
            acc.add_assign_scaled(&img, c);
        }
        Ok(acc)
    }

    fn source_coeffs(&self, p: &NCPoly) -> Result<NCPoly> {
        if p.ring() == self.target.ring() {
            Ok(p.clone())
        } else if p.ring() == self.source.ring() {
            p.specialize(self.target.ring())
        } else {
            Err(SkeinError::RingMismatch(p.ring(), self.source.ring()))
        }
    }

    /// `self ⊗ other` acting slotwise on the tensor of the sources.
    pub fn tensor(&self, other: &Morphism) -> Result<Morphism> {
        if self.anti != other.anti {
            return Err(SkeinError::Unsupported("tensor of a morphism with an anti-morphism".into()));
        }
        let source = Algebra::tensor(&[&self.source, &other.source])?;
        let target = Algebra::tensor(&[&self.target, &other.target])?;
        let offset = self.target.slots();
        let mut images = self.images.clone();
        for imgs in &other.images {
            images.push(imgs.iter().map(|p| Algebra::shift(p, offset)).collect());
        }
        Morphism::new(source, target, images, self.anti)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        let mut images = Vec::with_capacity(self.images.len());
        for imgs in &self.images {
            let mut v = Vec::with_capacity(imgs.len());
            for p in imgs {
                v.push(other.apply(p)?);
            }
            images.push(v);
        }
        Morphism::new(self.source.clone(), other.target.clone(), images, self.anti ^ other.anti)
    }

    /// Identity on an algebra.
    pub fn identity(a: &Algebra) -> Result<Morphism> {
        let b = a.clone();
        Morphism::from_fn(a.clone(), a.clone(), false, |s, i| Ok(b.gen(s, i)))
    }
}

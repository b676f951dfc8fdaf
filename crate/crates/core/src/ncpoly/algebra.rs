use std::sync::Arc;

use crate::error::{Result, SkeinError};
use crate::ncpoly::poly::NCPoly;
use crate::ncpoly::presentation::{Generator, Presentation};
use crate::ncpoly::word::{gen, local_of, slot_of, Word};
use crate::scalar::{Ring, Scalar};

/// Tensor product of presented algebras over one ring.
///
/// A single presentation is the one-slot case; zero slots give the ground
/// ring. Generators of different slots commute, and words are kept
/// slot-sorted.
#[derive(Clone, Debug)]
pub struct Algebra {
    factors: Vec<Arc<Presentation>>,
    ring: Ring,
}

impl Algebra {
    pub fn single(p: Arc<Presentation>) -> Algebra {
        let ring = p.ring();
        Algebra { factors: vec![p], ring }
    }

    /// The ground ring viewed as an algebra with no generators.
    pub fn scalars(ring: Ring) -> Algebra {
        Algebra { factors: vec![], ring }
    }

    /// Tensor product of the given algebras, slots concatenated in order.
    pub fn tensor(parts: &[&Algebra]) -> Result<Algebra> {
        let ring = parts.first().map(|a| a.ring).ok_or_else(|| SkeinError::Unsupported("empty tensor".into()))?;
        let mut factors = Vec::new();
        for a in parts {
            if a.ring != ring {
                return Err(SkeinError::RingMismatch(a.ring, ring));
            }
            factors.extend(a.factors.iter().cloned());
        }
        Ok(Algebra { factors, ring })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn slots(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, slot: usize) -> Result<&Arc<Presentation>> {
        self.factors.get(slot).ok_or(SkeinError::SlotOutOfRange { slot, slots: self.factors.len() })
    }

    pub fn factors(&self) -> &[Arc<Presentation>] {
        &self.factors
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly::zero(self.ring)
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::one(self.ring)
    }

    pub fn scalar(&self, c: Scalar) -> NCPoly {
        NCPoly::constant(c)
    }

    /// Generator by local index in a slot.
    pub fn gen(&self, slot: usize, local: usize) -> NCPoly {
        NCPoly::word(self.ring, &[gen(slot, local)])
    }

    /// Generator by name and states in a slot.
    pub fn named(&self, slot: usize, g: &Generator) -> Result<NCPoly> {
        let p = self.factor(slot)?;
        let i = p.index_of(g).ok_or_else(|| SkeinError::UnknownGenerator(format!("{g}@{slot}")))?;
        Ok(self.gen(slot, i))
    }

    /// Generator metadata of a packed generator.
    pub fn generator(&self, g: crate::ncpoly::word::Gen) -> &Generator {
        &self.factors[slot_of(g)].alphabet()[local_of(g)]
    }

    /// Every generator of every slot.
    pub fn generators(&self) -> Vec<NCPoly> {
        let mut out = Vec::new();
        for (s, p) in self.factors.iter().enumerate() {
            for i in 0..p.alphabet().len() {
                out.push(self.gen(s, i));
            }
        }
        out
    }

    /// Normal form of a slot-sorted word.
    pub fn reduce_word(&self, w: &Word) -> Result<NCPoly> {
        let mut acc = NCPoly::one(self.ring);
        for (slot, local) in w.blocks() {
            let p = self.factor(slot)?;
            let r = p.reduce_word(&local)?;
            let shifted = r.map_words(|x| x.with_slot(slot));
            acc = acc.tensor_concat_mul(&shifted);
        }
        Ok(acc)
    }

    /// Normal form of a polynomial.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        if p.ring() != self.ring {
            return Err(SkeinError::RingMismatch(p.ring(), self.ring));
        }
        if self.factors.len() == 1 {
            // fast path: a single factor reduces whole polynomials at once
            if let Some(w) = p.terms().map(|(w, _)| w).find(|w| w.as_slice().iter().any(|&g| slot_of(g) != 0)) {
                return Err(SkeinError::SlotOutOfRange { slot: slot_of(w.as_slice()[0]), slots: 1 });
            }
            return self.factors[0].normal_form(p);
        }
        let mut acc = NCPoly::zero(self.ring);
        for (w, c) in p.terms() {
            let r = self.reduce_word(w)?;
            acc.add_assign_scaled(&r, c);
        }
        Ok(acc)
    }

    pub fn add(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.add(b)
    }

    pub fn sub(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.sub(b)
    }

    /// Product followed by normal form.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        let raw = if self.factors.len() <= 1 { a.concat_mul(b) } else { a.tensor_concat_mul(b) };
        self.normal_form(&raw)
    }

    /// Product of several factors, left to right.
    pub fn product(&self, items: &[NCPoly]) -> Result<NCPoly> {
        let mut acc = self.one();
        for x in items {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `p^n` by repeated squaring.
    pub fn pow(&self, p: &NCPoly, n: u32) -> Result<NCPoly> {
        let mut result = self.one();
        let mut base = p.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(result)
    }

    /// `ab − ba`.
    pub fn commutator(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Move every slot of `p` up by `offset` (embedding into a larger tensor).
    pub fn shift(p: &NCPoly, offset: usize) -> NCPoly {
        p.map_words(|w| w.shift_slots(offset))
    }

    /// Coefficient map into this algebra's ring.
    pub fn coerce(&self, p: &NCPoly) -> Result<NCPoly> {
        if p.ring() == self.ring {
            Ok(p.clone())
        } else {
            p.specialize(self.ring)
        }
    }

    /// Highest word length that appears.
    pub fn degree(p: &NCPoly) -> usize {
        p.degree()
    }
}

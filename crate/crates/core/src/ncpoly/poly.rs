use std::collections::BTreeMap;

use crate::error::Result;
use crate::ncpoly::word::{Gen, Word};
use crate::scalar::{Rational, Ring, Scalar};

/// Finite linear combination of words with coefficients in one ring.
///
/// Zero coefficients are never stored. This type does no reduction on its
/// own; see [`crate::Algebra`] for arithmetic modulo relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    ring: Ring,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(ring: Ring) -> NCPoly {
        NCPoly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> NCPoly {
        let mut p = NCPoly::zero(c.ring());
        p.add_term(Word::empty(), c);
        p
    }

    pub fn one(ring: Ring) -> NCPoly {
        NCPoly::constant(Scalar::one(ring))
    }

    pub fn monomial(word: Word, c: Scalar) -> NCPoly {
        let mut p = NCPoly::zero(c.ring());
        p.add_term(word, c);
        p
    }

    pub fn word(ring: Ring, gens: &[Gen]) -> NCPoly {
        NCPoly::monomial(Word::from_slice(gens), Scalar::one(ring))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Length of the longest word, `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    /// Add `c·w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        debug_assert_eq!(c.ring(), self.ring);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly { ring: self.ring, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero(self.ring);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> NCPoly {
        let mut out = NCPoly::zero(self.ring);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.scale(q));
        }
        out
    }

    /// Rewrite every word; coefficients of colliding images are summed.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NCPoly {
        let mut out = NCPoly::zero(self.ring);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Apply a coefficient map into a (possibly different) ring.
    pub fn map_coeffs(&self, ring: Ring, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<NCPoly> {
        let mut out = NCPoly::zero(ring);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Specialize Laurent coefficients into another ring.
    pub fn specialize(&self, ring: Ring) -> Result<NCPoly> {
        if ring == self.ring {
            return Ok(self.clone());
        }
        self.map_coeffs(ring, |c| c.specialize(ring))
    }

    /// Free (unreduced) product under plain concatenation.
    pub fn concat_mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(&v.0), a * b);
            }
        }
        out
    }

    /// Free product in a tensor algebra (slots commute, order kept within a slot).
    pub fn tensor_concat_mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.tensor_mul(v), a * b);
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Word, Scalar)>) -> NCPoly {
        let mut out = NCPoly::zero(ring);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }
}

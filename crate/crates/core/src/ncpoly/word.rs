use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Packed generator: tensor slot in the high byte, precedence rank in the low byte.
pub type Gen = u16;

/// Pack a slot and a local generator index.
pub const fn gen(slot: usize, local: usize) -> Gen {
    ((slot as u16) << 8) | (local as u16 & 0xff)
}

/// Tensor slot of a packed generator.
pub const fn slot_of(g: Gen) -> usize {
    (g >> 8) as usize
}

/// Local (per-presentation) index of a packed generator.
pub const fn local_of(g: Gen) -> usize {
    (g & 0xff) as usize
}

/// A monomial: a finite product of generators.
///
/// Words compare by length first and then lexicographically by packed
/// generator, which is the graded-lex term order once local indices are
/// assigned by precedence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_slice(gens: &[Gen]) -> Word {
        Word(SmallVec::from_slice(gens))
    }

    pub fn single(g: Gen) -> Word {
        Word::from_slice(&[g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Gen] {
        &self.0
    }

    /// Plain concatenation (no slot sorting).
    pub fn concat(&self, other: &[Gen]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    /// `prefix · middle · suffix` where prefix/suffix come from `self`.
    pub fn splice(&self, at: usize, len: usize, middle: &[Gen]) -> Word {
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(self.len() - len + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(middle);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }

    /// Concatenate two slot-sorted words, keeping the result slot-sorted.
    ///
    /// Generators of different slots commute; within a slot the order is kept.
    pub fn tensor_mul(&self, other: &Word) -> Word {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let last = slot_of(*self.0.last().unwrap());
        let first = slot_of(other.0[0]);
        if last <= first {
            return self.concat(&other.0);
        }
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = match (self.0.get(i), other.0.get(j)) {
                (Some(&a), Some(&b)) => slot_of(a) <= slot_of(b),
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Word(v)
    }

    /// Split into maximal runs of a single slot: `(slot, local word)`.
    pub fn blocks(&self) -> Vec<(usize, Word)> {
        let mut out: Vec<(usize, Word)> = Vec::new();
        for &g in self.0.iter() {
            let s = slot_of(g);
            match out.last_mut() {
                Some((cur, w)) if *cur == s => w.0.push(gen(0, local_of(g))),
                _ => out.push((s, Word::single(gen(0, local_of(g))))),
            }
        }
        out
    }

    /// Move every generator to slot `slot`.
    pub fn with_slot(&self, slot: usize) -> Word {
        Word(self.0.iter().map(|&g| gen(slot, local_of(g))).collect())
    }

    /// Add `offset` to every generator's slot.
    pub fn shift_slots(&self, offset: usize) -> Word {
        Word(self.0.iter().map(|&g| gen(slot_of(g) + offset, local_of(g))).collect())
    }

    /// Does `needle` occur as a contiguous factor?
    pub fn contains_factor(&self, needle: &[Gen]) -> bool {
        needle.len() <= self.len() && self.0.windows(needle.len()).any(|w| w == needle)
    }
}

impl Borrow<[Gen]> for Word {
    fn borrow(&self) -> &[Gen] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|&g| format!("{}:{}", slot_of(g), local_of(g))).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex() {
        let a = Word::from_slice(&[3, 0]);
        let b = Word::from_slice(&[0, 3, 1]);
        let c = Word::from_slice(&[1, 0]);
        assert!(a < b);
        assert!(c < a);
        assert!(Word::empty() < c);
    }

    #[test]
    fn tensor_merge_keeps_slot_order() {
        let u = Word::from_slice(&[gen(0, 1), gen(1, 2)]);
        let v = Word::from_slice(&[gen(0, 3), gen(1, 0)]);
        let w = u.tensor_mul(&v);
        assert_eq!(w.as_slice(), &[gen(0, 1), gen(0, 3), gen(1, 2), gen(1, 0)]);
        let blocks = w.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[1].1.as_slice(), &[gen(0, 2), gen(0, 0)]);
    }
}

use std::collections::BTreeMap;

use crate::error::{Result, SkeinError};
use crate::gluing::scenario::GluingScenario;
use crate::ncpoly::{NCPoly, Word};
use crate::scalar::{Ring, Scalar};

/// Default cap on the number of domain words.
pub const DEFAULT_DIMENSION_CAP: usize = 5000;

/// A filtered piece of the tensor algebra on which to solve for the glued subalgebra.
#[derive(Clone, Debug)]
pub struct KernelProblem<'a> {
    pub scenario: &'a GluingScenario,
    /// Bound on the seam degree.
    pub degree: usize,
    /// Bound on the word length. Words avoiding the seam are otherwise unbounded.
    pub max_len: usize,
    pub cap: usize,
}

impl<'a> KernelProblem<'a> {
    /// Degree `d`, word length `max(d, 2)`, default cap.
    pub fn new(scenario: &'a GluingScenario, degree: usize) -> KernelProblem<'a> {
        KernelProblem { scenario, degree, max_len: degree.max(2), cap: DEFAULT_DIMENSION_CAP }
    }

    /// Normal words of the tensor algebra with length ≤ `max_len` and seam degree ≤ `degree`.
    pub fn domain(&self) -> Result<Vec<Word>> {
        let alg = &self.scenario.algebra;
        let mut per_slot = Vec::new();
        for s in 0..alg.slots() {
            let p = alg.factor(s)?;
            let mut words = Vec::new();
            for len in 0..=self.max_len {
                words.extend(p.normal_words(len)?.into_iter().map(|w| w.with_slot(s)));
            }
            per_slot.push(words);
        }
        let mut out = vec![Word::empty()];
        for words in &per_slot {
            let mut next = Vec::new();
            for prefix in &out {
                for w in words {
                    if prefix.len() + w.len() > self.max_len {
                        continue;
                    }
                    let cand = prefix.concat(w.as_slice());
                    if self.scenario.seam_degree(&cand) <= self.degree {
                        next.push(cand);
                    }
                }
            }
            if next.len() > self.cap {
                return Err(SkeinError::DimensionCap { dim: next.len(), cap: self.cap });
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }
}

/// Echelon basis keyed by leading word, every pivot monic.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<Word, NCPoly>,
}

impl Echelon {
    /// Remove leading terms that are pivots; returns the multiples subtracted
    /// alongside the remainder. Stops at the first non-pivot leading word.
    fn reduce_leading(&self, v: &mut NCPoly, track: &mut Option<(&BTreeMap<Word, NCPoly>, &mut NCPoly)>) -> Result<()> {
        while let Some((w, c)) = v.leading().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(p) = self.pivots.get(&w) else { return Ok(()) };
            v.add_assign_scaled(p, &-&c);
            if let Some((combs, acc)) = track {
                acc.add_assign_scaled(&combs[&w], &-&c);
            }
        }
        Ok(())
    }

    /// Is `v` in the span?
    pub fn contains(&self, v: &NCPoly) -> Result<bool> {
        let mut v = v.clone();
        self.reduce_leading(&mut v, &mut None)?;
        Ok(v.is_zero())
    }

    /// Fully reduce `v`: no term of the result is a pivot word.
    pub fn reduce(&self, v: &NCPoly) -> Result<NCPoly> {
        let mut v = v.clone();
        let mut out = NCPoly::zero(v.ring());
        loop {
            self.reduce_leading(&mut v, &mut None)?;
            let Some((w, c)) = v.leading().map(|(w, c)| (w.clone(), c.clone())) else { break };
            v.add_term(w.clone(), -&c);
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Add `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &NCPoly) -> Result<bool> {
        let r = self.reduce(v)?;
        let Some((w, c)) = r.leading().map(|(w, c)| (w.clone(), c.clone())) else { return Ok(false) };
        let p = r.scale(&c.invert_unit()?);
        // keep the basis reduced
        for q in self.pivots.values_mut() {
            if let Some(k) = q.coeff(&w).cloned() {
                q.add_assign_scaled(&p, &-&k);
            }
        }
        self.pivots.insert(w, p);
        Ok(true)
    }

    pub fn basis(&self) -> impl Iterator<Item = &NCPoly> {
        self.pivots.values()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
}

/// Kernel of the defect map on a filtered piece.
#[derive(Clone, Debug)]
pub struct KernelSolution {
    pub domain_dim: usize,
    pub rank: usize,
    /// Reduced echelon basis of the kernel, ascending by leading word.
    pub basis: Vec<NCPoly>,
    echelon: Echelon,
}

impl KernelSolution {
    /// Is `x` in the span of the computed kernel?
    pub fn contains(&self, x: &NCPoly) -> Result<bool> {
        self.echelon.contains(x)
    }
}

/// Exact kernel of `x ↦ Δ^L(x) − σΔ^R(x)` on the words of seam degree ≤ `d`.
///
/// Columns are reduced one at a time against the images found so far; a
/// column whose image reduces to zero contributes its recorded combination.
pub fn truncated_kernel_solve(problem: &KernelProblem) -> Result<KernelSolution> {
    let sc = problem.scenario;
    let ring = sc.algebra.ring();
    if !matches!(ring, Ring::Cyclotomic(_)) {
        return Err(SkeinError::Unsupported(format!("kernel solving needs a field, got {ring}")));
    }
    let domain = problem.domain()?;
    let one = Scalar::one(ring);
    let mut images = Echelon::default();
    let mut combs: BTreeMap<Word, NCPoly> = BTreeMap::new();
    let mut kernel = Echelon::default();
    for w in &domain {
        let x = NCPoly::monomial(w.clone(), one.clone());
        let mut v = sc.coaction_defect(&x)?;
        let mut comb = x;
        images.reduce_leading(&mut v, &mut Some((&combs, &mut comb)))?;
        match v.leading().map(|(w, c)| (w.clone(), c.clone())) {
            None => {
                kernel.insert(&comb)?;
            }
            Some((lead, c)) => {
                let inv = c.invert_unit()?;
                images.pivots.insert(lead.clone(), v.scale(&inv));
                combs.insert(lead, comb.scale(&inv));
            }
        }
    }
    let basis = kernel.basis().cloned().collect();
    Ok(KernelSolution { domain_dim: domain.len(), rank: images.dim(), basis, echelon: kernel })
}

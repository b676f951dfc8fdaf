use crate::error::Result;
use crate::ncpoly::presentation::{overlap_sides, overlaps_of_length, Presentation};

/// Outcome of checking every overlap ambiguity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondReport {
    /// Overlaps examined.
    pub checked: usize,
    /// Overlaps longer than the horizon, left unexamined.
    pub beyond_horizon: usize,
    /// `(ambiguous word, difference of resolutions)` for every failure.
    pub failures: Vec<(String, String)>,
}

impl DiamondReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Resolve every overlap of rule left-hand sides and compare the two results.
///
/// For a completing presentation only overlaps within the current horizon
/// are in scope; `max_len` caps the ambiguous-word length further.
pub fn diamond_check(p: &Presentation, max_len: Option<usize>) -> Result<DiamondReport> {
    if let Some(d) = max_len {
        p.ensure_horizon(d)?;
    }
    p.with_state(|st| {
        let cap = match (st.horizon_value(), max_len) {
            (Some(h), Some(m)) => Some(h.min(m)),
            (Some(h), None) => Some(h),
            (None, m) => m,
        };
        let mut report = DiamondReport { checked: 0, beyond_horizon: 0, failures: vec![] };
        for (l1, l2, k) in overlaps_of_length(st, None) {
            let len = l1.len() + l2.len() - k;
            if cap.map_or(false, |c| len > c) {
                report.beyond_horizon += 1;
                continue;
            }
            report.checked += 1;
            let (a, b) = overlap_sides(st, p.ring(), &l1, &l2, k);
            let diff = p.reduce_with(st, &a)?.sub(&p.reduce_with(st, &b)?);
            if !diff.is_zero() {
                let word = l1.concat(&l2.as_slice()[k..]);
                let shown: Vec<String> =
                    diff.terms().rev().map(|(w, c)| format!("({c})*{}", p.word_name(w))).collect();
                report.failures.push((p.word_name(&word), shown.join(" + ")));
            }
        }
        Ok(report)
    })
}

/// Structural sanity of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub generators: usize,
    pub rules: usize,
    /// Human-readable problems; empty when valid.
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Check that rules are oriented (every right-hand word is smaller than its
/// left-hand side), that generator names are distinct, and that right-hand
/// sides are reduced.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut problems = Vec::new();
    let alpha = p.alphabet();
    for (i, a) in alpha.iter().enumerate() {
        if alpha[..i].contains(a) {
            problems.push(format!("duplicate generator {a}"));
        }
    }
    let rules = p.rules();
    for r in &rules {
        if r.lhs.len() < 2 {
            problems.push(format!("rule {} has a left-hand side shorter than 2", p.word_name(&r.lhs)));
        }
        if r.rhs.ring() != p.ring() {
            problems.push(format!("rule {} has coefficients in {}", p.word_name(&r.lhs), r.rhs.ring()));
        }
        for (w, _) in r.rhs.terms() {
            if *w >= r.lhs {
                problems.push(format!("rule {} is not decreasing: {}", p.word_name(&r.lhs), p.word_name(w)));
            }
            if !p.is_normal(w) {
                problems.push(format!("rule {} has a reducible term {}", p.word_name(&r.lhs), p.word_name(w)));
            }
        }
    }
    ValidationReport { generators: alpha.len(), rules: rules.len(), problems }
}

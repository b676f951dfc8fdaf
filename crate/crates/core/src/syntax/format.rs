use serde::{Deserialize, Serialize};

use crate::ncpoly::{slot_of, Algebra, NCPoly, Word};
use crate::scalar::Scalar;

/// Generator atoms of a word, with `@slot` suffixes in multi-slot algebras.
pub fn word_atoms(alg: &Algebra, w: &Word) -> Vec<String> {
    w.as_slice()
        .iter()
        .map(|&g| {
            let name = alg.generator(g).to_string();
            if alg.slots() > 1 {
                format!("{name}@{}", slot_of(g))
            } else {
                name
            }
        })
        .collect()
}

/// Does the rendering of `c` start with a minus sign?
fn leads_negative(c: &Scalar) -> bool {
    c.to_string().starts_with('-')
}

fn is_single_term(c: &Scalar) -> bool {
    let s = c.to_string();
    !s[1..].contains(" + ") && !s[1..].contains(" - ")
}

/// Render a polynomial, terms in descending order.
///
/// Rational coefficients print bare (`3/2*a[+,+]`), all others in
/// parentheses (`(w^-4)*a[+,-]*a[-,+]`). A lone constant prints as its scalar.
pub fn format_poly(alg: &Algebra, p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    if p.len() == 1 {
        if let Some((w, c)) = p.leading() {
            if w.is_empty() {
                return c.to_string();
            }
        }
    }
    let mut out = String::new();
    for (w, c) in p.terms().rev() {
        let neg = leads_negative(c) && (c.as_rational().is_some() || is_single_term(c));
        let c = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let atoms = word_atoms(alg, w);
        let coeff = match c.as_rational() {
            Some(q) if q == num_traits::One::one() => None,
            Some(q) => Some(q.to_string()),
            None => Some(format!("({c})")),
        };
        match (coeff, atoms.is_empty()) {
            (None, true) => out.push('1'),
            (None, false) => out.push_str(&atoms.join("*")),
            (Some(k), true) => out.push_str(&k),
            (Some(k), false) => {
                out.push_str(&k);
                out.push('*');
                out.push_str(&atoms.join("*"));
            }
        }
    }
    out
}

/// One term of the JSON rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub word: Vec<String>,
}

/// Terms in descending order as `{coeff, word}` records.
pub fn json_terms(alg: &Algebra, p: &NCPoly) -> Vec<JsonTerm> {
    p.terms().rev().map(|(w, c)| JsonTerm { coeff: c.to_string(), word: word_atoms(alg, w) }).collect()
}

/// JSON rendering of a polynomial.
pub fn format_json(alg: &Algebra, p: &NCPoly) -> String {
    serde_json::to_string(&json_terms(alg, p)).expect("terms serialize")
}

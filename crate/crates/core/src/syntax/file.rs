use serde::{Deserialize, Serialize};

use crate::error::{Result, SkeinError};
use crate::ncpoly::{Algebra, Generator, NCPoly, Presentation, Rule, Word};
use crate::scalar::{Ring, Scalar};
use crate::syntax::format::JsonTerm;
use crate::syntax::parse::{parse_scalar, parse_syntax, Expr};

/// One rule `lhs → Σ coeff·word`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSpec {
    pub lhs: Vec<String>,
    pub rhs: Vec<JsonTerm>,
}

/// Serialized presentation.
///
/// `alphabet` lists generator atoms such as `a[+,-]` or `x`. `precedence`,
/// when present, reorders them from smallest to largest; otherwise the
/// alphabet order is the precedence. With `horizon`, the rules are read as
/// relations and overlaps are resolved lazily beyond that word length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub name: String,
    pub ring: String,
    pub alphabet: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precedence: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    pub rules: Vec<RuleSpec>,
}

fn file_err(msg: impl Into<String>) -> SkeinError {
    SkeinError::File(msg.into())
}

fn parse_generator(text: &str) -> Result<Generator> {
    match parse_syntax(text)? {
        Expr::Atom { name, states, slot: None } => Ok(Generator { name, states }),
        _ => Err(file_err(format!("`{text}` is not a generator atom"))),
    }
}

impl PresentationFile {
    /// Snapshot of a presentation's current rules.
    pub fn export(p: &Presentation) -> PresentationFile {
        let alg = Algebra::single(std::sync::Arc::new(Presentation::fixed(p.name(), p.alphabet().to_vec(), p.ring(), vec![])));
        let mut rules = p.rules();
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        let atoms = |w: &Word| w.as_slice().iter().map(|&g| alg.generator(g).to_string()).collect::<Vec<_>>();
        PresentationFile {
            name: p.name().to_string(),
            ring: p.ring().to_string(),
            alphabet: p.alphabet().iter().map(ToString::to_string).collect(),
            precedence: None,
            horizon: p.horizon(),
            rules: rules
                .iter()
                .map(|r| RuleSpec {
                    lhs: atoms(&r.lhs),
                    rhs: r.rhs.terms().rev().map(|(w, c)| JsonTerm { coeff: c.to_string(), word: atoms(w) }).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation file serializes")
    }

    pub fn from_json(text: &str) -> Result<PresentationFile> {
        serde_json::from_str(text).map_err(|e| file_err(e.to_string()))
    }

    /// Build the presentation; the ring named in the file is used unless `ring` overrides it.
    pub fn build(&self, ring: Option<Ring>) -> Result<Presentation> {
        let ring = match ring {
            Some(r) => r,
            None => Ring::parse(&self.ring)?,
        };
        let mut alphabet = self.alphabet.iter().map(|s| parse_generator(s)).collect::<Result<Vec<_>>>()?;
        if let Some(order) = &self.precedence {
            let ordered = order.iter().map(|s| parse_generator(s)).collect::<Result<Vec<_>>>()?;
            let mut a = alphabet.clone();
            let mut b = ordered.clone();
            let key = |g: &Generator| g.to_string();
            a.sort_by_key(key);
            b.sort_by_key(key);
            if a != b {
                return Err(file_err("precedence is not a permutation of the alphabet"));
            }
            alphabet = ordered;
        }
        let index = |s: &str| -> Result<u16> {
            let g = parse_generator(s)?;
            alphabet.iter().position(|h| *h == g).map(|i| i as u16).ok_or_else(|| SkeinError::UnknownGenerator(s.to_string()))
        };
        let word = |atoms: &[String]| -> Result<Word> {
            Ok(Word::from_slice(&atoms.iter().map(|s| index(s)).collect::<Result<Vec<_>>>()?))
        };
        let mut rules = Vec::new();
        for r in &self.rules {
            let lhs = word(&r.lhs)?;
            let mut rhs = NCPoly::zero(ring);
            for t in &r.rhs {
                rhs.add_term(word(&t.word)?, parse_scalar(&t.coeff, ring)?);
            }
            rules.push(Rule { lhs, rhs });
        }
        match self.horizon {
            None => Ok(Presentation::fixed(&self.name, alphabet, ring, rules)),
            Some(h) => {
                let rels = rules
                    .into_iter()
                    .map(|r| NCPoly::monomial(r.lhs, Scalar::one(ring)).sub(&r.rhs))
                    .collect();
                Presentation::from_relations(&self.name, alphabet, ring, rels, true, h)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{builtin, Builtin};

    #[test]
    fn builtin_bigon_survives_export() {
        let p = builtin(Builtin::Bigon, Ring::Laurent).unwrap();
        let f = PresentationFile::export(&p);
        let back = PresentationFile::from_json(&f.to_json()).unwrap().build(None).unwrap();
        assert_eq!(back.rules().len(), p.rules().len());
        for r in p.rules() {
            assert_eq!(back.normal_form(&NCPoly::monomial(r.lhs.clone(), Scalar::one(Ring::Laurent))).unwrap(), r.rhs);
        }
    }

    #[test]
    fn rejects_unknown_atoms() {
        let text = r#"{"name":"t","ring":"laurent","alphabet":["x","y"],"rules":[{"lhs":["y","z"],"rhs":[]}]}"#;
        let f = PresentationFile::from_json(text).unwrap();
        assert!(matches!(f.build(None), Err(SkeinError::UnknownGenerator(_))));
    }
}

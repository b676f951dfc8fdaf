//! Text syntax: rendering, parsing and presentation files.
//!
//! Precedence from tightest: `^`, `*`, `ox`, then `+` and `-`. Atoms are
//! generators `a[+,-]` with an optional slot suffix `@i`, rationals `p/r`,
//! the scalars `w`, `q = w^-4`, `A = w^-2`, `h`, and `T[n](…)`.

mod file;
mod format;
mod parse;

pub use file::{PresentationFile, RuleSpec};
pub use format::{format_json, format_poly, json_terms, word_atoms, JsonTerm};
pub use parse::{elaborate, parse_expr, parse_scalar, parse_syntax, Expr};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Result, SkeinError};
use crate::ncpoly::{diamond_check, validate_presentation, Generator, NCPoly, Presentation, Sign, Word};
use crate::scalar::{Ring, Scalar};

/// The built-in presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    QuantumPlane,
    Bigon,
    Gl2,
    Triangle,
    BigonPlus1,
    TrianglePlus1,
    /// Coordinate ring of SL₂ (commutative, `det N = 1`).
    CharvarBigon,
    /// Coordinate ring of the triangle character variety.
    CharvarTriangle,
}

impl Builtin {
    pub const ALL: [Builtin; 8] = [
        Builtin::QuantumPlane,
        Builtin::Bigon,
        Builtin::Gl2,
        Builtin::Triangle,
        Builtin::BigonPlus1,
        Builtin::TrianglePlus1,
        Builtin::CharvarBigon,
        Builtin::CharvarTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::QuantumPlane => "quantum_plane",
            Builtin::Bigon => "bigon",
            Builtin::Gl2 => "gl2",
            Builtin::Triangle => "triangle",
            Builtin::BigonPlus1 => "bigon_plus1",
            Builtin::TrianglePlus1 => "triangle_plus1",
            Builtin::CharvarBigon => "charvar_bigon",
            Builtin::CharvarTriangle => "charvar_triangle",
        }
    }

    pub fn parse(name: &str) -> Result<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.name() == name).ok_or_else(|| SkeinError::UnknownName(name.to_string()))
    }

    /// Coefficients do not involve ω (the ω = +1 and character-variety algebras).
    pub fn is_classical(self) -> bool {
        matches!(self, Builtin::BigonPlus1 | Builtin::TrianglePlus1 | Builtin::CharvarBigon | Builtin::CharvarTriangle)
    }

    /// Is the rule set extended on demand?
    fn completing(self) -> bool {
        matches!(self, Builtin::Triangle | Builtin::TrianglePlus1 | Builtin::CharvarTriangle)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bigon generator order: α₋₊ < α₊₊ < α₋₋ < α₊₋.
pub const BIGON_ORDER: [(Sign, Sign); 4] =
    [(Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus)];

/// State order used inside each triangle letter.
pub const TRIANGLE_STATE_ORDER: [(Sign, Sign); 4] =
    [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus), (Sign::Minus, Sign::Minus)];

/// Triangle letters in precedence order.
pub const TRIANGLE_LETTERS: [&str; 3] = ["a", "b", "g"];

/// Local index of `δ_{εε'}` in a triangle-shaped alphabet (`letter` is 0, 1, 2 for α, β, γ).
pub fn triangle_index(letter: usize, e: Sign, f: Sign) -> usize {
    letter * 4 + TRIANGLE_STATE_ORDER.iter().position(|&s| s == (e, f)).expect("state pair")
}

/// Local index of `α_{εε'}` in a bigon-shaped alphabet.
pub fn bigon_index(e: Sign, f: Sign) -> usize {
    BIGON_ORDER.iter().position(|&s| s == (e, f)).expect("state pair")
}

fn bigon_alphabet(name: &str) -> Vec<Generator> {
    BIGON_ORDER.iter().map(|&(e, f)| Generator::stated(name, e, f)).collect()
}

fn triangle_alphabet() -> Vec<Generator> {
    let mut v = Vec::new();
    for l in TRIANGLE_LETTERS {
        for &(e, f) in &TRIANGLE_STATE_ORDER {
            v.push(Generator::stated(l, e, f));
        }
    }
    v
}

/// Relation builder: `Σ c·word` with `c` a Laurent monomial (or zero) in ω.
struct Rel {
    ring: Ring,
    /// `ω ↦ 1` when set.
    classical: bool,
    poly: NCPoly,
}

impl Rel {
    fn new(ring: Ring, classical: bool) -> Rel {
        Rel { ring, classical, poly: NCPoly::zero(ring) }
    }

    /// Add `c·ω^k·word`.
    fn term(mut self, c: i64, k: i64, word: &[usize]) -> Rel {
        let k = if self.classical { 0 } else { k };
        let s = Scalar::monomial(self.ring, crate::scalar::int(c), k);
        let w = Word::from_slice(&word.iter().map(|&i| i as u16).collect::<Vec<_>>());
        self.poly.add_term(w, s);
        self
    }

    /// Add an arbitrary scalar times a word.
    fn scalar_term(mut self, s: Scalar, word: &[usize]) -> Rel {
        let w = Word::from_slice(&word.iter().map(|&i| i as u16).collect::<Vec<_>>());
        self.poly.add_term(w, s);
        self
    }

    fn done(self) -> NCPoly {
        self.poly
    }
}

/// Relations of the quantum plane: `yx = q·xy`.
fn quantum_plane_relations(ring: Ring) -> Vec<NCPoly> {
    vec![Rel::new(ring, false).term(1, 0, &[1, 0]).term(-1, -4, &[0, 1]).done()]
}

/// The bigon (or GL₂) relations; `q = ω⁻⁴`, or `q = 1` when classical.
fn bigon_relations(ring: Ring, classical: bool, gl2: bool) -> Vec<NCPoly> {
    use Sign::{Minus as M, Plus as P};
    let i = bigon_index;
    let (pp, pm, mp, mm) = (i(P, P), i(P, M), i(M, P), i(M, M));
    let r = || Rel::new(ring, classical);
    let mut rels = vec![
        r().term(1, 0, &[pp, pm]).term(-1, 4, &[pm, pp]).done(),
        r().term(1, 0, &[pp, mp]).term(-1, 4, &[mp, pp]).done(),
        r().term(1, 0, &[mm, pm]).term(-1, -4, &[pm, mm]).done(),
        r().term(1, 0, &[mm, mp]).term(-1, -4, &[mp, mm]).done(),
        r().term(1, 0, &[mp, pm]).term(-1, 0, &[pm, mp]).done(),
    ];
    if gl2 {
        // α₊₊α₋₋ − α₋₋α₊₊ = (q⁻¹ − q)·α₊₋α₋₊
        rels.push(
            r().term(1, 0, &[pp, mm]).term(-1, 0, &[mm, pp]).term(-1, 4, &[pm, mp]).term(1, -4, &[pm, mp]).done(),
        );
    } else {
        rels.push(r().term(1, 0, &[pp, mm]).term(-1, 0, &[]).term(-1, 4, &[pm, mp]).done());
        rels.push(r().term(1, 0, &[mm, pp]).term(-1, 0, &[]).term(-1, -4, &[pm, mp]).done());
    }
    rels
}

/// `C^{sup}_{sub}`: zero on the diagonal, `C^-_+ = −ω⁵`, `C^+_- = ω`, as `(sign, ω-exponent)`.
pub fn c_const(sup: Sign, sub: Sign) -> Option<(i64, i64)> {
    match (sup, sub) {
        (Sign::Minus, Sign::Plus) => Some((-1, 5)),
        (Sign::Plus, Sign::Minus) => Some((1, 1)),
        _ => None,
    }
}

/// The five relation families of the triangle and their two rotations.
fn triangle_relations(ring: Ring, classical: bool) -> Vec<NCPoly> {
    use Sign::{Minus as M, Plus as P};
    let (al, be, ga) = (0usize, 1usize, 2usize);
    let r = || Rel::new(ring, classical);
    let mut base: Vec<Vec<(i64, i64, Vec<(usize, Sign, Sign)>)>> = Vec::new();
    // Each entry: list of (integer coefficient, ω-exponent, word as (letter, e, f)).
    for e in Sign::BOTH {
        for f in Sign::BOTH {
            let mut eq1 = vec![(1, 0, vec![(al, M, e), (al, P, f)]), (-1, -4, vec![(al, P, e), (al, M, f)])];
            if let Some((s, k)) = c_const(e, f) {
                eq1.push((s, k - 5, vec![]));
            }
            base.push(eq1);
            let mut eq2 = vec![(1, 0, vec![(al, e, M), (al, f, P)]), (-1, -4, vec![(al, e, P), (al, f, M)])];
            if let Some((s, k)) = c_const(e, f) {
                eq2.push((s, k - 5, vec![]));
            }
            base.push(eq2);
            base.push(vec![
                (1, 0, vec![(al, M, e), (be, f, P)]),
                (-1, -4, vec![(al, P, e), (be, f, M)]),
                (1, -5, vec![(ga, e, f)]),
            ]);
            base.push(vec![
                (1, 0, vec![(al, e, M), (ga, P, f)]),
                (-1, -4, vec![(al, e, P), (ga, M, f)]),
                (-1, 1, vec![(be, f, e)]),
            ]);
        }
    }
    for m in Sign::BOTH {
        for e in Sign::BOTH {
            for m2 in Sign::BOTH {
                for e2 in Sign::BOTH {
                    let mut eq3 = vec![(1, 0, vec![(be, m, e), (al, m2, e2)]), (-1, -2, vec![(al, e, e2), (be, m, m2)])];
                    if let Some((s, k)) = c_const(e, m2) {
                        eq3.push((s, k - 4, vec![(ga, e2, m)]));
                    }
                    base.push(eq3);
                }
            }
        }
    }
    let mut out = Vec::new();
    for rel in &base {
        for rot in 0..3 {
            let mut b = r();
            for (c, k, w) in rel {
                let word: Vec<usize> = w.iter().map(|&(l, e, f)| triangle_index((l + rot) % 3, e, f)).collect();
                b = b.term(*c, *k, &word);
            }
            let p = b.done();
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out
}

/// Entries of `Π M_i` where each factor is a 2×2 matrix of linear forms.
type LinMatrix = [[Vec<(i64, usize)>; 2]; 2];

fn generic_matrix(letter: usize, triangle: bool) -> LinMatrix {
    let idx = |e: Sign, f: Sign| if triangle { triangle_index(letter, e, f) } else { bigon_index(e, f) };
    use Sign::{Minus as M, Plus as P};
    [[vec![(1, idx(P, P))], vec![(1, idx(P, M))]], [vec![(1, idx(M, P))], vec![(1, idx(M, M))]]]
}

/// Polynomial entries of a product of 2×2 matrices of linear forms.
fn matrix_product(ring: Ring, ms: &[LinMatrix]) -> [[NCPoly; 2]; 2] {
    let mut acc: [[NCPoly; 2]; 2] =
        [[NCPoly::one(ring), NCPoly::zero(ring)], [NCPoly::zero(ring), NCPoly::one(ring)]];
    for m in ms {
        let next: [[NCPoly; 2]; 2] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut p = NCPoly::zero(ring);
                for k in 0..2 {
                    for &(c, g) in &m[k][j] {
                        let w = NCPoly::monomial(Word::from_slice(&[g as u16]), Scalar::integer(ring, c));
                        p = p.add(&acc[i][k].concat_mul(&w));
                    }
                }
                p
            })
        });
        acc = next;
    }
    acc
}

/// Commutation relations `g_j g_i − g_i g_j` for `i < j`.
fn commutators(ring: Ring, n: usize) -> Vec<NCPoly> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Rel::new(ring, true).term(1, 0, &[j, i]).term(-1, 0, &[i, j]).done());
        }
    }
    out
}

fn det_relation(ring: Ring, letter: usize, triangle: bool) -> NCPoly {
    use Sign::{Minus as M, Plus as P};
    let idx = |e: Sign, f: Sign| if triangle { triangle_index(letter, e, f) } else { bigon_index(e, f) };
    Rel::new(ring, true)
        .term(1, 0, &[idx(P, P), idx(M, M)])
        .term(-1, 0, &[idx(P, M), idx(M, P)])
        .scalar_term(Scalar::integer(ring, -1), &[])
        .done()
}

fn charvar_triangle_relations(ring: Ring) -> Vec<NCPoly> {
    let mut rels = commutators(ring, 12);
    for l in 0..3 {
        rels.push(det_relation(ring, l, true));
    }
    // N_γ N_β N_α = 1
    let prod = matrix_product(ring, &[generic_matrix(2, true), generic_matrix(1, true), generic_matrix(0, true)]);
    for (i, row) in prod.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let mut p = p.clone();
            if i == j {
                p = p.sub(&NCPoly::one(ring));
            }
            rels.push(p);
        }
    }
    rels
}

fn alphabet(b: Builtin) -> Vec<Generator> {
    match b {
        Builtin::QuantumPlane => vec![Generator::plain("x"), Generator::plain("y")],
        Builtin::Bigon | Builtin::Gl2 | Builtin::BigonPlus1 => bigon_alphabet("a"),
        Builtin::CharvarBigon => bigon_alphabet("x"),
        Builtin::Triangle | Builtin::TrianglePlus1 | Builtin::CharvarTriangle => triangle_alphabet(),
    }
}

fn laurent_relations(b: Builtin) -> Vec<NCPoly> {
    let ring = Ring::Laurent;
    match b {
        Builtin::QuantumPlane => quantum_plane_relations(ring),
        Builtin::Bigon => bigon_relations(ring, false, false),
        Builtin::Gl2 => bigon_relations(ring, false, true),
        Builtin::BigonPlus1 => bigon_relations(ring, true, false),
        Builtin::Triangle => triangle_relations(ring, false),
        Builtin::TrianglePlus1 => triangle_relations(ring, true),
        Builtin::CharvarBigon => {
            let mut rels = commutators(ring, 4);
            rels.push(det_relation(ring, 0, false));
            rels
        }
        Builtin::CharvarTriangle => charvar_triangle_relations(ring),
    }
}

/// The defining relations (each `= 0`) of a builtin, with coefficients in `ring`.
pub fn relations(b: Builtin, ring: Ring) -> Result<Vec<NCPoly>> {
    laurent_relations(b).iter().map(|p| p.specialize(ring)).collect()
}

/// The bigon with `q` replaced by `q²` in its first relation (a negative control).
pub fn mutated_bigon() -> Result<Presentation> {
    let mut rels = bigon_relations(Ring::Laurent, false, false);
    use Sign::{Minus as M, Plus as P};
    let (pp, pm) = (bigon_index(P, P), bigon_index(P, M));
    rels[0] = Rel::new(Ring::Laurent, false).term(1, 0, &[pp, pm]).term(-1, 8, &[pm, pp]).done();
    Presentation::from_relations("bigon_mutated", alphabet(Builtin::Bigon), Ring::Laurent, rels, false, INITIAL_HORIZON)
}

fn construct(b: Builtin) -> Result<Presentation> {
    Presentation::from_relations(b.name(), alphabet(b), Ring::Laurent, laurent_relations(b), b.completing(), INITIAL_HORIZON)
}

/// Word length up to which overlaps are resolved when a completing builtin is first built.
pub const INITIAL_HORIZON: usize = 4;

/// Shared instance of a builtin presentation over `ring`.
///
/// The Laurent presentation is the master; other rings mirror it with
/// specialized coefficients. Fixed rule sets are checked for orientation and
/// confluence on first construction and fail loudly otherwise.
pub fn builtin(b: Builtin, ring: Ring) -> Result<Arc<Presentation>> {
    static CACHE: OnceLock<Mutex<HashMap<(Builtin, Ring), Arc<Presentation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("builtin cache").get(&(b, ring)) {
        return Ok(p.clone());
    }
    let p = if ring == Ring::Laurent {
        let p = construct(b)?;
        let v = validate_presentation(&p);
        if !v.ok() {
            return Err(SkeinError::Internal(format!("{b}: {}", v.problems.join("; "))));
        }
        if !b.completing() {
            let d = diamond_check(&p, None)?;
            if !d.ok() {
                return Err(SkeinError::Internal(format!("{b}: {} unresolved overlaps", d.failures.len())));
            }
        }
        Arc::new(p)
    } else {
        let master = builtin(b, Ring::Laurent)?;
        Arc::new(Presentation::derived(master, ring)?)
    };
    let mut c = cache.lock().expect("builtin cache");
    Ok(c.entry((b, ring)).or_insert(p).clone())
}

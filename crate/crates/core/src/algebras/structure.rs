use std::fmt;

use crate::algebras::builtin::{bigon_index, builtin, relations, triangle_index, Builtin};
use crate::algebras::matrix::Matrix2;
use crate::error::{Result, SkeinError};
use crate::ncpoly::{Algebra, Morphism, NCPoly, Sign};
use crate::scalar::{Ring, Scalar};

/// Boundary arcs of the triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    A,
    B,
    C,
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::A, Edge::B, Edge::C];

    pub fn parse(s: &str) -> Result<Edge> {
        match s {
            "a" => Ok(Edge::A),
            "b" => Ok(Edge::B),
            "c" => Ok(Edge::C),
            _ => Err(SkeinError::UnknownName(format!("edge `{s}`"))),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Edge::A => "a",
            Edge::B => "b",
            Edge::C => "c",
        })
    }
}

/// Source edge of a triangle letter (0, 1, 2 for α, β, γ).
pub fn source(letter: usize) -> Edge {
    [Edge::C, Edge::A, Edge::B][letter]
}

/// Target edge of a triangle letter.
pub fn target(letter: usize) -> Edge {
    [Edge::B, Edge::C, Edge::A][letter]
}

/// Which side a comodule map coacts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Single-slot algebra of a builtin.
pub fn algebra(b: Builtin, ring: Ring) -> Result<Algebra> {
    Ok(Algebra::single(builtin(b, ring)?))
}

fn is_bigon_like(b: Builtin) -> bool {
    matches!(b, Builtin::Bigon | Builtin::Gl2 | Builtin::BigonPlus1 | Builtin::CharvarBigon)
}

fn is_triangle_like(b: Builtin) -> bool {
    matches!(b, Builtin::Triangle | Builtin::TrianglePlus1 | Builtin::CharvarTriangle)
}

/// Bigon factor that coacts on a triangle-shaped algebra.
pub fn partner_bigon(t: Builtin) -> Result<Builtin> {
    match t {
        Builtin::Triangle => Ok(Builtin::Bigon),
        Builtin::TrianglePlus1 => Ok(Builtin::BigonPlus1),
        Builtin::CharvarTriangle => Ok(Builtin::CharvarBigon),
        other => Err(SkeinError::Unsupported(format!("{other} is not a triangle algebra"))),
    }
}

/// `α_{εε'}` in slot `slot` of a bigon-shaped factor.
pub fn bigon_gen(alg: &Algebra, slot: usize, e: Sign, f: Sign) -> NCPoly {
    alg.gen(slot, bigon_index(e, f))
}

/// `δ_{εε'}` in slot `slot` of a triangle-shaped factor.
pub fn triangle_gen(alg: &Algebra, slot: usize, letter: usize, e: Sign, f: Sign) -> NCPoly {
    alg.gen(slot, triangle_index(letter, e, f))
}

/// The matrix `M_δ = (δ_{++} δ_{+-}; δ_{-+} δ_{--})` of a triangle letter.
pub fn triangle_matrix(alg: &Algebra, slot: usize, letter: usize) -> Matrix2 {
    use Sign::{Minus as M, Plus as P};
    let g = |e, f| triangle_gen(alg, slot, letter, e, f);
    Matrix2::new(alg, [[g(P, P), g(P, M)], [g(M, P), g(M, M)]])
}

/// The matrix of bigon generators in one slot.
pub fn bigon_matrix(alg: &Algebra, slot: usize) -> Matrix2 {
    use Sign::{Minus as M, Plus as P};
    let g = |e, f| bigon_gen(alg, slot, e, f);
    Matrix2::new(alg, [[g(P, P), g(P, M)], [g(M, P), g(M, M)]])
}

/// States of a bigon-shaped generator by local index.
fn bigon_states(local: usize) -> (Sign, Sign) {
    crate::algebras::builtin::BIGON_ORDER[local]
}

/// `(letter, e, f)` of a triangle-shaped generator by local index.
pub fn triangle_states(local: usize) -> (usize, Sign, Sign) {
    let (e, f) = crate::algebras::builtin::TRIANGLE_STATE_ORDER[local % 4];
    (local / 4, e, f)
}

fn q_scalar(b: Builtin, ring: Ring, k: i64) -> Scalar {
    if b.is_classical() {
        Scalar::one(ring)
    } else {
        Scalar::omega_power(ring, -4 * k)
    }
}

/// Coproduct `Δ(α_{εε'}) = Σ_μ α_{εμ} ⊗ α_{με'}`.
pub fn coproduct(b: Builtin, ring: Ring) -> Result<Morphism> {
    if !is_bigon_like(b) {
        return Err(SkeinError::Unsupported(format!("no coproduct on {b}")));
    }
    let a = algebra(b, ring)?;
    let aa = Algebra::tensor(&[&a, &a])?;
    let t = aa.clone();
    Morphism::from_fn(a.clone(), aa, false, |_, i| {
        let (e, f) = bigon_states(i);
        let mut p = t.zero();
        for m in Sign::BOTH {
            p = p.add(&t.mul(&bigon_gen(&t, 0, e, m), &bigon_gen(&t, 1, m, f))?);
        }
        Ok(p)
    })
}

/// Counit `ε(α_{εε'}) = δ_{εε'}`.
pub fn counit(b: Builtin, ring: Ring) -> Result<Morphism> {
    if !is_bigon_like(b) {
        return Err(SkeinError::Unsupported(format!("no counit on {b}")));
    }
    let a = algebra(b, ring)?;
    let k = Algebra::scalars(ring);
    Morphism::from_fn(a, k, false, |_, i| {
        let (e, f) = bigon_states(i);
        Ok(NCPoly::constant(Scalar::integer(ring, i64::from(e == f))))
    })
}

/// Antipode: `S(α₊₊) = α₋₋`, `S(α₋₋) = α₊₊`, `S(α₊₋) = −qα₊₋`, `S(α₋₊) = −q⁻¹α₋₊`; an anti-morphism.
pub fn antipode(b: Builtin, ring: Ring) -> Result<Morphism> {
    if !is_bigon_like(b) {
        return Err(SkeinError::Unsupported(format!("no antipode on {b}")));
    }
    let a = algebra(b, ring)?;
    let t = a.clone();
    Morphism::from_fn(a.clone(), a, true, |_, i| {
        use Sign::{Minus as M, Plus as P};
        Ok(match bigon_states(i) {
            (P, P) => bigon_gen(&t, 0, M, M),
            (M, M) => bigon_gen(&t, 0, P, P),
            (P, M) => bigon_gen(&t, 0, P, M).scale(&-q_scalar(b, ring, 1)),
            (M, P) => bigon_gen(&t, 0, M, P).scale(&-q_scalar(b, ring, -1)),
        })
    })
}

/// `det_q = α₊₊α₋₋ − q⁻¹α₊₋α₋₊`.
pub fn det_q(b: Builtin, ring: Ring) -> Result<NCPoly> {
    use Sign::{Minus as M, Plus as P};
    let a = algebra(b, ring)?;
    let x = a.mul(&bigon_gen(&a, 0, P, P), &bigon_gen(&a, 0, M, M))?;
    let y = a.mul(&bigon_gen(&a, 0, P, M), &bigon_gen(&a, 0, M, P))?;
    Ok(x.sub(&y.scale(&q_scalar(b, ring, -1))))
}

/// Rotation `τ`: α ↦ β ↦ γ ↦ α, states unchanged.
pub fn rotation(t: Builtin, ring: Ring) -> Result<Morphism> {
    if !is_triangle_like(t) {
        return Err(SkeinError::Unsupported(format!("no rotation on {t}")));
    }
    let a = algebra(t, ring)?;
    let x = a.clone();
    Morphism::from_fn(a.clone(), a, false, |_, i| {
        let (l, e, f) = triangle_states(i);
        Ok(triangle_gen(&x, 0, (l + 1) % 3, e, f))
    })
}

/// Comodule map along `edge`.
///
/// Every endpoint of a generator lying on `edge` is coacted on. Left, landing in
/// bigon ⊗ triangle: `δ_{εε'} ↦ Σ_μ b_{εμ} ⊗ δ_{με'}` at a source endpoint and
/// `Σ_μ b_{ε'μ} ⊗ δ_{εμ}` at a target endpoint. Right, landing in triangle ⊗ bigon:
/// `Σ_μ δ_{εμ} ⊗ b_{με'}` at a target endpoint and `Σ_μ δ_{με'} ⊗ b_{με}` at a
/// source endpoint. On the character variety the second endpoint kind uses the
/// inverse matrix `S(X)` instead: `N ↦ X N` together with `N ↦ N S(X)`.
/// Generators away from `edge` map to `1 ⊗ δ` (or `δ ⊗ 1`).
pub fn comodule(side: Side, edge: Edge, t: Builtin, ring: Ring) -> Result<Morphism> {
    let pb = partner_bigon(t)?;
    let b = algebra(pb, ring)?;
    let tri = algebra(t, ring)?;
    let (codomain, bslot, tslot) = match side {
        Side::Left => (Algebra::tensor(&[&b, &tri])?, 0, 1),
        Side::Right => (Algebra::tensor(&[&tri, &b])?, 1, 0),
    };
    let charvar = t == Builtin::CharvarTriangle;
    let x = codomain.clone();
    // Entry (i, j) of S(X) for the classical bigon.
    let inverse = |i: Sign, j: Sign| -> NCPoly {
        let g = bigon_gen(&x, bslot, j.flip(), i.flip());
        if i == j { g } else { g.scale(&Scalar::integer(ring, -1)) }
    };
    Morphism::from_fn(tri, codomain, false, |_, i| {
        let (l, e, f) = triangle_states(i);
        let at_source = source(l) == edge;
        let at_target = target(l) == edge;
        if !at_source && !at_target {
            return Ok(triangle_gen(&x, tslot, l, e, f));
        }
        let mut p = x.zero();
        for m in Sign::BOTH {
            let (bg, tg) = match (side, at_source) {
                (Side::Left, true) => (bigon_gen(&x, bslot, e, m), triangle_gen(&x, tslot, l, m, f)),
                (Side::Left, false) => (
                    if charvar { inverse(m, f) } else { bigon_gen(&x, bslot, f, m) },
                    triangle_gen(&x, tslot, l, e, m),
                ),
                (Side::Right, false) => (bigon_gen(&x, bslot, m, f), triangle_gen(&x, tslot, l, e, m)),
                (Side::Right, true) => (
                    if charvar { inverse(e, m) } else { bigon_gen(&x, bslot, m, e) },
                    triangle_gen(&x, tslot, l, m, f),
                ),
            };
            let term = match side {
                Side::Left => x.mul(&bg, &tg)?,
                Side::Right => x.mul(&tg, &bg)?,
            };
            p = p.add(&term);
        }
        Ok(p)
    })
}

/// Images of the defining relations under `m`; `None` when all vanish, else
/// the first nonzero image as a debug string.
pub fn respects_relations(m: &Morphism, source: Builtin, ring: Ring) -> Result<Option<String>> {
    for r in relations(source, ring)? {
        let img = m.apply(&r)?;
        if !img.is_zero() {
            return Ok(Some(crate::syntax::format_poly(&m.target, &img)));
        }
    }
    Ok(None)
}

/// `m ∘ (f₀ ⊗ f₁ ⊗ …)`: apply `maps[s]` to the slot-`s` block of each word and
/// multiply the results in `target`, slot order first.
pub fn multiply_slots(p: &NCPoly, target: &Algebra, maps: &[&Morphism]) -> Result<NCPoly> {
    let mut acc = target.zero();
    for (w, c) in p.terms() {
        let mut blocks = vec![crate::ncpoly::Word::empty(); maps.len()];
        for (s, b) in w.blocks() {
            blocks[s] = b.with_slot(0);
        }
        let mut term = target.one();
        for (m, b) in maps.iter().zip(&blocks) {
            if !b.is_empty() {
                let img = m.apply(&NCPoly::monomial(b.clone(), Scalar::one(p.ring())))?;
                term = target.mul(&term, &img)?;
            }
        }
        acc.add_assign_scaled(&term, c);
    }
    Ok(acc)
}

/// The two elementary surfaces with built-in presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    Bigon,
    Triangle,
}

impl Surface {
    pub fn parse(s: &str) -> Result<Surface> {
        match s {
            "bigon" => Ok(Surface::Bigon),
            "triangle" => Ok(Surface::Triangle),
            _ => Err(SkeinError::UnknownName(format!("surface `{s}`"))),
        }
    }

    /// Presentation at generic ω.
    pub fn quantum(self) -> Builtin {
        match self {
            Surface::Bigon => Builtin::Bigon,
            Surface::Triangle => Builtin::Triangle,
        }
    }

    /// Presentation at ω = +1.
    pub fn plus1(self) -> Builtin {
        match self {
            Surface::Bigon => Builtin::BigonPlus1,
            Surface::Triangle => Builtin::TrianglePlus1,
        }
    }

    /// Coordinate ring of the character variety.
    pub fn charvar(self) -> Builtin {
        match self {
            Surface::Bigon => Builtin::CharvarBigon,
            Surface::Triangle => Builtin::CharvarTriangle,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surface::Bigon => "bigon",
            Surface::Triangle => "triangle",
        })
    }
}

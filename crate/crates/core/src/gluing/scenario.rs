use std::fmt;

use crate::algebras::{
    algebra, comodule, partner_bigon, source, target, triangle_gen, triangle_states, Builtin, Edge, Side,
};
use crate::error::{Result, SkeinError};
use crate::ncpoly::{local_of, slot_of, Algebra, Gen, Morphism, NCPoly, Sign, Word};

/// The built-in glued surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Two triangles glued along one edge.
    Square,
    /// One triangle with two of its edges glued to each other.
    Disc,
}

impl Scenario {
    pub const ALL: [Scenario; 2] = [Scenario::Square, Scenario::Disc];

    pub fn parse(s: &str) -> Result<Scenario> {
        match s {
            "square" => Ok(Scenario::Square),
            "disc" => Ok(Scenario::Disc),
            _ => Err(SkeinError::UnknownName(format!("scenario `{s}`"))),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::Square => "square",
            Scenario::Disc => "disc",
        })
    }
}

/// An edge of one tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorEdge {
    pub slot: usize,
    pub edge: Edge,
}

/// A glued pair: the left coaction acts at `left`, the right coaction at `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Seam {
    pub left: FactorEdge,
    pub right: FactorEdge,
}

/// Factor algebras, the glued pair and the two coactions into
/// `bigon ⊗ (factors)`.
#[derive(Clone, Debug)]
pub struct GluingScenario {
    pub kind: Scenario,
    pub triangle: Builtin,
    pub algebra: Algebra,
    /// `bigon ⊗ algebra`, where defects live.
    pub defect_algebra: Algebra,
    pub seam: Seam,
    left: Morphism,
    right: Morphism,
}

/// `g ↦ g` with slots renumbered by `slots`.
fn relabel(source: &Algebra, target: &Algebra, slots: &[usize]) -> Result<Morphism> {
    let t = target.clone();
    Morphism::from_fn(source.clone(), target.clone(), false, |s, i| Ok(t.gen(slots[s], i)))
}

impl GluingScenario {
    /// Build a scenario over the quantum triangle or its ω = +1 version.
    pub fn new(kind: Scenario, triangle: Builtin, ring: crate::scalar::Ring) -> Result<GluingScenario> {
        if !matches!(triangle, Builtin::Triangle | Builtin::TrianglePlus1) {
            return Err(SkeinError::Unsupported(format!("gluing over {triangle}")));
        }
        let t = algebra(triangle, ring)?;
        let b = algebra(partner_bigon(triangle)?, ring)?;
        let lco = |e| comodule(Side::Left, e, triangle, ring);
        let rco = |e| comodule(Side::Right, e, triangle, ring);
        match kind {
            Scenario::Square => {
                let tt = Algebra::tensor(&[&t, &t])?;
                let d = Algebra::tensor(&[&b, &t, &t])?;
                let seam = Seam {
                    left: FactorEdge { slot: 1, edge: Edge::C },
                    right: FactorEdge { slot: 0, edge: Edge::B },
                };
                // bigon ⊗ T2 → slots (0, 2); T1 ⊗ bigon → slots (1, 0)
                let into_l = lco(seam.left.edge)?.then(&relabel(&Algebra::tensor(&[&b, &t])?, &d, &[0, 2])?)?;
                let into_r = rco(seam.right.edge)?.then(&relabel(&Algebra::tensor(&[&t, &b])?, &d, &[1, 0])?)?;
                let dl = d.clone();
                let left = Morphism::from_fn(tt.clone(), d.clone(), false, |s, i| {
                    if s == 0 { Ok(dl.gen(1, i)) } else { Ok(into_l.image(i as Gen).clone()) }
                })?;
                let right = Morphism::from_fn(tt.clone(), d.clone(), false, |s, i| {
                    if s == 0 { Ok(into_r.image(i as Gen).clone()) } else { Ok(dl.gen(2, i)) }
                })?;
                Ok(GluingScenario { kind, triangle, algebra: tt, defect_algebra: d, seam, left, right })
            }
            Scenario::Disc => {
                let d = Algebra::tensor(&[&b, &t])?;
                let seam = Seam {
                    left: FactorEdge { slot: 0, edge: Edge::B },
                    right: FactorEdge { slot: 0, edge: Edge::A },
                };
                let left = lco(seam.left.edge)?;
                let right = rco(seam.right.edge)?.then(&relabel(&Algebra::tensor(&[&t, &b])?, &d, &[1, 0])?)?;
                Ok(GluingScenario { kind, triangle, algebra: t, defect_algebra: d, seam, left, right })
            }
        }
    }

    /// The scenario over the quantum triangle.
    pub fn quantum(kind: Scenario, ring: crate::scalar::Ring) -> Result<GluingScenario> {
        GluingScenario::new(kind, Builtin::Triangle, ring)
    }

    /// `Δ^L(x) − σΔ^R(x)` in `bigon ⊗ algebra`, reduced.
    pub fn coaction_defect(&self, x: &NCPoly) -> Result<NCPoly> {
        let x = self.algebra.normal_form(x)?;
        let l = self.left.apply(&x)?;
        let r = self.right.apply(&x)?;
        self.defect_algebra.normal_form(&l.sub(&r))
    }

    pub fn is_in_kernel(&self, x: &NCPoly) -> Result<bool> {
        Ok(self.coaction_defect(x)?.is_zero())
    }

    /// Number of endpoints of `g` lying on a glued edge.
    pub fn gen_degree(&self, g: Gen) -> usize {
        let (slot, (l, _, _)) = (slot_of(g), triangle_states(local_of(g)));
        [self.seam.left, self.seam.right]
            .iter()
            .filter(|fe| fe.slot == slot)
            .map(|fe| usize::from(source(l) == fe.edge) + usize::from(target(l) == fe.edge))
            .sum()
    }

    /// Filtration degree of a word: seam endpoints summed over its letters.
    pub fn seam_degree(&self, w: &Word) -> usize {
        w.as_slice().iter().map(|&g| self.gen_degree(g)).sum()
    }

    /// Names accepted by [`GluingScenario::glued_element`].
    pub fn catalog(&self) -> Vec<String> {
        let states = || {
            Sign::BOTH.into_iter().flat_map(|e| Sign::BOTH.into_iter().map(move |f| format!("[{},{}]", e.symbol(), f.symbol())))
        };
        match self.kind {
            Scenario::Square => {
                let mut v: Vec<String> = states().map(|s| format!("abar{s}")).collect();
                v.extend(states().map(|s| format!("gbar{s}")));
                for (slot, letter) in self.uncut_letters() {
                    let name = crate::algebras::TRIANGLE_LETTERS[letter];
                    v.extend(states().map(|s| format!("{name}{s}@{slot}")));
                }
                v
            }
            Scenario::Disc => {
                let mut v = vec!["eta".to_string()];
                v.extend(states().map(|s| format!("delta{s}")));
                v
            }
        }
    }

    /// `(slot, letter)` pairs with no endpoint on a glued edge.
    pub fn uncut_letters(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for slot in 0..self.algebra.slots() {
            for letter in 0..3 {
                let g = ((slot as Gen) << 8) | (4 * letter) as Gen;
                if self.gen_degree(g) == 0 {
                    v.push((slot, letter));
                }
            }
        }
        v
    }

    /// A catalogued element of the glued algebra, in normal form.
    ///
    /// Square: `abar[ε,ε']` joins α of the first triangle to α of the second
    /// across the seam, `gbar[ε,ε']` joins β of the second to γ of the first,
    /// and `x[ε,ε']@s` names a generator missing the seam. Disc: `eta` is the
    /// curve around the puncture, `delta[ε,ε']` the arc through the glued edge.
    pub fn glued_element(&self, name: &str) -> Result<NCPoly> {
        let unknown = || SkeinError::UnknownName(format!("glued element `{name}` in {}", self.kind));
        let a = &self.algebra;
        let g = |slot, letter, e, f| triangle_gen(a, slot, letter, e, f);
        let sum = |f: &dyn Fn(Sign) -> Result<NCPoly>| -> Result<NCPoly> {
            let mut acc = a.zero();
            for m in Sign::BOTH {
                acc = acc.add(&f(m)?);
            }
            a.normal_form(&acc)
        };
        match self.kind {
            Scenario::Square => {
                if let Some(rest) = name.strip_prefix("abar") {
                    let (e, f) = parse_states(rest).ok_or_else(unknown)?;
                    return sum(&|m| a.mul(&g(0, 0, e, m), &g(1, 0, m, f)));
                }
                if let Some(rest) = name.strip_prefix("gbar") {
                    let (e, f) = parse_states(rest).ok_or_else(unknown)?;
                    return sum(&|m| a.mul(&g(0, 2, m, f), &g(1, 1, e, m)));
                }
                let (body, slot) = name.rsplit_once('@').ok_or_else(unknown)?;
                let slot: usize = slot.parse().map_err(|_| unknown())?;
                let letter = crate::algebras::TRIANGLE_LETTERS
                    .iter()
                    .position(|l| body.starts_with(l))
                    .ok_or_else(unknown)?;
                let (e, f) = parse_states(&body[1..]).ok_or_else(unknown)?;
                if !self.uncut_letters().contains(&(slot, letter)) {
                    return Err(unknown());
                }
                Ok(g(slot, letter, e, f))
            }
            Scenario::Disc => {
                if name == "eta" {
                    return sum(&|m| Ok(g(0, 2, m, m)));
                }
                let rest = name.strip_prefix("delta").ok_or_else(unknown)?;
                let (e, f) = parse_states(rest).ok_or_else(unknown)?;
                sum(&|m| a.mul(&g(0, 1, m, f), &g(0, 0, e, m)))
            }
        }
    }

    /// The two summands of `delta[ε,ε']`, in product order.
    pub fn delta_summands(&self, e: Sign, f: Sign) -> Result<[NCPoly; 2]> {
        let a = &self.algebra;
        let term = |m| a.mul(&triangle_gen(a, 0, 1, m, f), &triangle_gen(a, 0, 0, e, m));
        Ok([term(Sign::Plus)?, term(Sign::Minus)?])
    }
}

/// `"[+,-]"` → `(+, −)`.
pub fn parse_states(s: &str) -> Option<(Sign, Sign)> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    let (e, f) = inner.split_once(',')?;
    let one = |t: &str| {
        let mut c = t.trim().chars();
        let s = Sign::parse(c.next()?)?;
        c.next().is_none().then_some(s)
    };
    Some((one(e)?, one(f)?))
}

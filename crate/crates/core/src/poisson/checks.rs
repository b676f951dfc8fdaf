use num_traits::Zero;

use crate::algebras::{algebra, bigon_gen, rotation, triangle_gen, Builtin, Surface};
use crate::error::Result;
use crate::ncpoly::{Algebra, NCPoly, Sign};
use crate::poisson::psi::{psi_transport, PsiMap};
use crate::poisson::rmatrix::{cybe, RMatrix};
use crate::poisson::star::star_bracket;
use crate::poisson::table::{r_matrix_bracket, Orientation};
use crate::report::Report;
use crate::scalar::{rat, Rational, Ring, Scalar};
use crate::syntax::format_poly;

fn plus1(surface: Surface) -> Result<Algebra> {
    algebra(surface.plus1(), Ring::Laurent)
}

fn mismatch(alg: &Algebra, got: &NCPoly, want: &NCPoly) -> Option<String> {
    let d = got.sub(want);
    (!d.is_zero()).then(|| format!("got {}, expected {}", format_poly(alg, got), format_poly(alg, want)))
}

fn q(alg: &Algebra, c: Rational, p: &NCPoly) -> NCPoly {
    p.scale(&Scalar::rational(alg.ring(), c))
}

/// The published bracket values on the bigon and the triangle.
pub fn star_examples_check() -> Report {
    use Sign::{Minus as M, Plus as P};
    let mut r = Report::new("star bracket examples");
    let bigon_anchor = "bracket on the bigon";
    let tri_anchor = "bracket on the triangle";
    // bigon-shaped formulas, for the bigon and for each triangle letter
    let shapes: Vec<(Surface, usize)> =
        vec![(Surface::Bigon, 0), (Surface::Triangle, 0), (Surface::Triangle, 1), (Surface::Triangle, 2)];
    for (surface, letter) in shapes {
        let alg = match plus1(surface) {
            Ok(a) => a,
            Err(e) => {
                r.record("setup", bigon_anchor, Some(format!("error: {e}")));
                return r.finish();
            }
        };
        let g = |e, f| match surface {
            Surface::Bigon => bigon_gen(&alg, 0, e, f),
            Surface::Triangle => triangle_gen(&alg, 0, letter, e, f),
        };
        let one = Rational::from_integer(1.into());
        let cases: Vec<((Sign, Sign), (Sign, Sign), Rational, Vec<(Sign, Sign)>)> = vec![
            ((P, P), (P, M), -one.clone(), vec![(P, M), (P, P)]),
            ((P, P), (M, P), -one.clone(), vec![(M, P), (P, P)]),
            ((M, M), (P, M), one.clone(), vec![(P, M), (M, M)]),
            ((M, M), (M, P), one.clone(), vec![(M, P), (M, M)]),
            ((P, M), (M, P), Rational::zero(), vec![]),
            ((P, P), (M, M), rat(-2, 1), vec![(P, M), (M, P)]),
        ];
        for (u, v, c, word) in cases {
            let (gu, gv) = (g(u.0, u.1), g(v.0, v.1));
            let name = format!("{{{}, {}}}", format_poly(&alg, &gu), format_poly(&alg, &gv));
            r.attempt(name, if surface == Surface::Bigon { bigon_anchor } else { tri_anchor }, || {
                let got = star_bracket(&alg, &gu, &gv)?;
                let want = if word.is_empty() {
                    alg.zero()
                } else {
                    q(&alg, c, &alg.product(&word.iter().map(|&(e, f)| g(e, f)).collect::<Vec<_>>())?)
                };
                Ok(mismatch(&alg, &got, &want))
            });
        }
    }
    // mixed letters: γ with α, and the rotated copies
    let ctx = (|| -> Result<_> { Ok((plus1(Surface::Triangle)?, rotation(Builtin::TrianglePlus1, Ring::Laurent)?)) })();
    let (alg, tau) = match ctx {
        Ok(c) => c,
        Err(e) => {
            r.record("setup", tri_anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    let (al, be, ga) = (0, 1, 2);
    let t = |l, e, f| triangle_gen(&alg, 0, l, e, f);
    let mut cases: Vec<(NCPoly, NCPoly, NCPoly)> = Vec::new();
    for m in Sign::BOTH {
        for m2 in Sign::BOTH {
            for e in Sign::BOTH {
                let (u, v) = (t(ga, e, m), t(al, m2, e));
                let want = q(&alg, rat(-1, 2), &alg.mul(&u, &v).unwrap_or_else(|_| alg.zero()));
                cases.push((u, v, want));
            }
            let (u, v) = (t(ga, M, m), t(al, m2, P));
            cases.push((u.clone(), v.clone(), q(&alg, rat(1, 2), &alg.mul(&u, &v).unwrap_or_else(|_| alg.zero()))));
            let (u, v) = (t(ga, P, m), t(al, m2, M));
            let want = q(&alg, rat(-3, 2), &alg.mul(&u, &v).unwrap_or_else(|_| alg.zero()))
                .add(&q(&alg, rat(2, 1), &t(be, m, m2)));
            cases.push((u, v, want));
        }
    }
    for rot in 0..3 {
        for (u, v, want) in &cases {
            let mut img = (u.clone(), v.clone(), want.clone());
            for _ in 0..rot {
                let ap = |p: &NCPoly| tau.apply(p);
                img = match (ap(&img.0), ap(&img.1), ap(&img.2)) {
                    (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                    _ => break,
                };
            }
            let (u, v, want) = img;
            let name = format!("{{{}, {}}}", format_poly(&alg, &u), format_poly(&alg, &v));
            r.attempt(name, tri_anchor, || Ok(mismatch(&alg, &star_bracket(&alg, &u, &v)?, &want)));
        }
    }
    r.finish()
}

/// Antisymmetry, Leibniz rule and Jacobi identity on generators.
pub fn bracket_property_check(surface: Surface) -> Report {
    let mut r = Report::new(&format!("bracket properties {surface}"));
    let anchor = "Poisson structure";
    let alg = match plus1(surface) {
        Ok(a) => a,
        Err(e) => {
            r.record("setup", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    let gens = alg.generators();
    let br = |u: &NCPoly, v: &NCPoly| star_bracket(&alg, u, v);
    r.attempt("bracket with the unit vanishes", anchor, || {
        for g in &gens {
            let b = br(g, &alg.one())?;
            if !b.is_zero() {
                return Ok(Some(format!("{{{}, 1}} = {}", format_poly(&alg, g), format_poly(&alg, &b))));
            }
        }
        Ok(None)
    });
    r.attempt("antisymmetry on all pairs", anchor, || {
        for u in &gens {
            for v in &gens {
                let s = br(u, v)?.add(&br(v, u)?);
                if !s.is_zero() {
                    return Ok(Some(format!("{} / {}: {}", format_poly(&alg, u), format_poly(&alg, v), format_poly(&alg, &s))));
                }
            }
        }
        Ok(None)
    });
    r.attempt("Leibniz rule on all triples", anchor, || {
        for u in &gens {
            for v in &gens {
                let uv = br(u, v)?;
                for w in &gens {
                    let lhs = br(u, &alg.mul(v, w)?)?;
                    let rhs = alg.mul(&uv, w)?.add(&alg.mul(v, &br(u, w)?)?);
                    let d = lhs.sub(&rhs);
                    if !d.is_zero() {
                        return Ok(Some(format!(
                            "u = {}, v = {}, w = {}: {}",
                            format_poly(&alg, u),
                            format_poly(&alg, v),
                            format_poly(&alg, w),
                            format_poly(&alg, &d)
                        )));
                    }
                }
            }
        }
        Ok(None)
    });
    r.attempt("Jacobi identity on all triples", anchor, || {
        let n = gens.len();
        let pair: Vec<Vec<NCPoly>> =
            (0..n).map(|i| (0..n).map(|j| br(&gens[i], &gens[j])).collect::<Result<_>>()).collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = br(&gens[i], &pair[j][k])?.add(&br(&gens[j], &pair[k][i])?).add(&br(&gens[k], &pair[i][j])?);
                    if !s.is_zero() {
                        return Ok(Some(format!("triple ({i}, {j}, {k}): {}", format_poly(&alg, &s))));
                    }
                }
            }
        }
        Ok(None)
    });
    r.finish()
}

/// `r⁺ − r̄⁺ = τ`, `r̄⁺ = −r̄⁻`, `(C⊗C) r^ε = r^{−ε} (C⊗C)` and the classical Yang–Baxter equation.
pub fn rmatrix_check() -> Report {
    let mut r = Report::new("classical r-matrices");
    let anchor = "classical r-matrices";
    for s in Sign::BOTH {
        let d = RMatrix::r(s).sub(&RMatrix::r_bar(s)).sub(&RMatrix::tau_sym());
        r.assert(format!("r^{} - rbar^{} = tau", s.symbol(), s.symbol()), anchor, d.is_zero(), || d.to_string());
    }
    let d = RMatrix::r_bar(Sign::Plus).add(&RMatrix::r_bar(Sign::Minus));
    r.assert("rbar^+ = -rbar^-", anchor, d.is_zero(), || d.to_string());
    let cc = RMatrix::c_tensor_c();
    for s in Sign::BOTH {
        let d = cc.mul(&RMatrix::r(s)).sub(&RMatrix::r(s.flip()).mul(&cc));
        r.assert(format!("(C⊗C) r^{} = r^{} (C⊗C)", s.symbol(), s.flip().symbol()), anchor, d.is_zero(), || d.to_string());
    }
    for s in Sign::BOTH {
        let y = cybe(&RMatrix::r(s));
        let ok = y.iter().flatten().all(Zero::is_zero);
        r.assert(format!("classical Yang-Baxter for r^{}", s.symbol()), anchor, ok, || format!("{y:?}"));
    }
    r.finish()
}

/// `Ψ` respects the defining relations.
pub fn psi_check(surface: Surface, o: &Orientation) -> Report {
    let mut r = Report::new(&format!("psi {surface} {o}"));
    r.attempt(format!("Psi^({o}) respects relations"), "character variety isomorphism", || {
        PsiMap::unchecked(surface, o, None)?.relation_witness()
    });
    r.finish()
}

/// `Ψ({u, v}ˢ) = {Ψu, Ψv}^𝔬` on every ordered pair of generators.
pub fn theorem3_check(surface: Surface, o: &Orientation) -> Report {
    let mut r = Report::new(&format!("poisson isomorphism {surface} {o}"));
    let anchor = "Poisson isomorphism with the character variety";
    let ctx = (|| -> Result<_> { Ok((plus1(surface)?, psi_transport(surface, o)?, r_matrix_bracket(surface, o)?)) })();
    let (alg, psi, table) = match ctx {
        Ok(c) => c,
        Err(e) => {
            r.record("setup", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    r.attempt(format!("{surface}, orientation {o}: all ordered generator pairs"), anchor, || {
        compare_brackets(&alg, &psi, &table)
    });
    r.finish()
}

pub(crate) fn compare_brackets(
    alg: &Algebra,
    psi: &PsiMap,
    table: &crate::poisson::table::BracketTable,
) -> Result<Option<String>> {
    let m = &psi.morphism;
    for u in alg.generators() {
        for v in alg.generators() {
            let lhs = m.apply(&star_bracket(alg, &u, &v)?)?;
            let rhs = table.bracket(&m.apply(&u)?, &m.apply(&v)?)?;
            let d = lhs.sub(&rhs);
            if !d.is_zero() {
                return Ok(Some(format!(
                    "{{{}, {}}}: {}",
                    format_poly(alg, &u),
                    format_poly(alg, &v),
                    format_poly(&m.target, &d)
                )));
            }
        }
    }
    Ok(None)
}

/// `{·,·}^{ε₁,ε₂} = −{·,·}^{−ε₁,−ε₂}` entrywise on the bigon.
pub fn orientation_flip_check() -> Report {
    let mut r = Report::new("orientation flip");
    for o in Orientation::all(Surface::Bigon) {
        r.attempt(format!("bigon {o} against {}", o.flipped()), "orientation reversal", || {
            let (t1, t2) = (r_matrix_bracket(Surface::Bigon, &o)?, r_matrix_bracket(Surface::Bigon, &o.flipped())?);
            let alg = t1.algebra.clone();
            for u in alg.generators() {
                for v in alg.generators() {
                    let d = t1.bracket(&u, &v)?.add(&t2.bracket(&u, &v)?);
                    if !d.is_zero() {
                        return Ok(Some(format_poly(&alg, &d)));
                    }
                }
            }
            Ok(None)
        });
    }
    r.finish()
}

/// Negative control: `Ψ` with one generator image negated.
///
/// Both checks are expected to FAIL with a witness.
pub fn mutated_psi_check() -> Report {
    let mut r = Report::new("mutated psi");
    let anchor = "character variety isomorphism";
    let o = Orientation::bigon(Sign::Plus, Sign::Plus);
    let psi = PsiMap::unchecked(Surface::Bigon, &o, Some(1));
    r.attempt("sign-flipped Psi respects relations", anchor, || psi.clone()?.relation_witness());
    r.attempt("sign-flipped Psi is a Poisson map", anchor, || {
        compare_brackets(&plus1(Surface::Bigon)?, &psi.clone()?, &r_matrix_bracket(Surface::Bigon, &o)?)
    });
    r.finish()
}

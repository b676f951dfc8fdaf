//! Verification suites for the built-in algebras.

use crate::algebras::builtin::{builtin, relations, Builtin};
use crate::algebras::matrix::Matrix2;
use crate::algebras::structure::*;
use crate::error::Result;
use crate::ncpoly::{diamond_check, validate_presentation, Algebra, Morphism, NCPoly, Word};
use crate::report::Report;
use crate::scalar::{Ring, Scalar};
use crate::syntax::format_poly;

fn witness(alg: &Algebra, p: &NCPoly) -> Option<String> {
    (!p.is_zero()).then(|| format_poly(alg, p))
}

fn gen_label(alg: &Algebra, slot: usize, local: usize) -> String {
    format_poly(alg, &alg.gen(slot, local))
}

/// Every defining relation reduces to zero.
pub fn relations_check(b: Builtin, ring: Ring) -> Report {
    let mut r = Report::new(&format!("relations {b} {ring}"));
    r.attempt(format!("{b}: defining relations vanish"), "presentation", || {
        let alg = algebra(b, ring)?;
        for (i, rel) in relations(b, ring)?.iter().enumerate() {
            let nf = alg.normal_form(rel)?;
            if !nf.is_zero() {
                return Ok(Some(format!("relation {i}: {}", format_poly(&alg, &nf))));
            }
        }
        Ok(None)
    });
    r.finish()
}

/// Orientation and overlap resolution of a builtin's rules.
///
/// Completing presentations are first extended to `max_len`; every overlap up
/// to that length is then resolved.
pub fn confluence_check(b: Builtin, ring: Ring, max_len: usize) -> Report {
    let mut r = Report::new(&format!("confluence {b} {ring}"));
    r.attempt(format!("{b} over {ring}: rules well oriented"), "presentation", || {
        let v = validate_presentation(&*builtin(b, ring)?);
        Ok((!v.ok()).then(|| v.problems.join("; ")))
    });
    r.attempt(format!("{b} over {ring}: overlaps resolve"), "diamond lemma", || {
        let p = builtin(b, ring)?;
        let limit = if p.is_completing() { Some(max_len) } else { None };
        let d = diamond_check(&p, limit)?;
        Ok(d.failures.first().map(|(w, diff)| format!("{w}: {diff} ({} failures)", d.failures.len())))
    });
    r.finish()
}

/// Hopf axioms of the bigon on its four generators.
///
/// On GL₂ the antipode rows become the adjugate identities
/// `m(S ⊗ id)Δ = m(id ⊗ S)Δ = det_q·ε`.
pub fn hopf_check(b: Builtin, ring: Ring) -> Report {
    let mut r = Report::new(&format!("hopf {b} {ring}"));
    let anchor = "bigon Hopf structure";
    let ctx = (|| -> Result<_> {
        let a = algebra(b, ring)?;
        let delta = coproduct(b, ring)?;
        let id = Morphism::identity(&a)?;
        let left = delta.then(&delta.tensor(&id)?)?;
        let right = delta.then(&id.tensor(&delta)?)?;
        let unit = if b == Builtin::Gl2 { det_q(b, ring)? } else { a.one() };
        Ok((a, delta, counit(b, ring)?, antipode(b, ring)?, id, left, right, unit))
    })();
    let (a, delta, eps, s, id, left, right, det) = match ctx {
        Ok(c) => c,
        Err(e) => {
            r.record("structure maps", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    for i in 0..a.factor(0).map(|p| p.alphabet().len()).unwrap_or(0) {
        let g = a.gen(0, i);
        let name = gen_label(&a, 0, i);
        r.attempt(format!("coassociativity on {name}"), anchor, || {
            let diff = left.apply(&g)?.sub(&right.apply(&g)?);
            Ok(witness(&left.target, &diff))
        });
        r.attempt(format!("left counit on {name}"), anchor, || {
            let v = multiply_slots(&delta.apply(&g)?, &a, &[&eps, &id])?;
            Ok(witness(&a, &v.sub(&g)))
        });
        r.attempt(format!("right counit on {name}"), anchor, || {
            let v = multiply_slots(&delta.apply(&g)?, &a, &[&id, &eps])?;
            Ok(witness(&a, &v.sub(&g)))
        });
        r.attempt(format!("left antipode on {name}"), anchor, || {
            let unit = det.scale(&eps.apply(&g)?.coeff(&Word::empty()).cloned().unwrap_or_else(|| Scalar::zero(ring)));
            let v = multiply_slots(&delta.apply(&g)?, &a, &[&s, &id])?;
            Ok(witness(&a, &v.sub(&unit)))
        });
        r.attempt(format!("right antipode on {name}"), anchor, || {
            let unit = det.scale(&eps.apply(&g)?.coeff(&Word::empty()).cloned().unwrap_or_else(|| Scalar::zero(ring)));
            let v = multiply_slots(&delta.apply(&g)?, &a, &[&id, &s])?;
            Ok(witness(&a, &v.sub(&unit)))
        });
    }
    r.finish()
}

/// `det_q` is central and group-like in GL₂.
pub fn det_q_check(ring: Ring) -> Report {
    let b = Builtin::Gl2;
    let mut r = Report::new(&format!("det_q {ring}"));
    let anchor = "quantum determinant";
    let ctx = (|| -> Result<_> { Ok((algebra(b, ring)?, det_q(b, ring)?, coproduct(b, ring)?)) })();
    let (a, d, delta) = match ctx {
        Ok(c) => c,
        Err(e) => {
            r.record("det_q", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    for i in 0..4 {
        r.attempt(format!("det_q commutes with {}", gen_label(&a, 0, i)), anchor, || {
            Ok(witness(&a, &a.commutator(&d, &a.gen(0, i))?))
        });
    }
    r.attempt("det_q group-like", anchor, || {
        let dd = delta.apply(&d)?;
        let t = &delta.target;
        let prod = t.mul(&d, &Algebra::shift(&d, 1))?;
        Ok(witness(t, &dd.sub(&prod)))
    });
    r.finish()
}

/// Comodule axioms for every edge and side of a triangle-shaped algebra.
pub fn comodule_check(t: Builtin, ring: Ring) -> Report {
    let mut r = Report::new(&format!("comodule {t} {ring}"));
    let anchor = "triangle comodule maps";
    for side in [Side::Left, Side::Right] {
        for edge in Edge::ALL {
            let label = format!("{side:?} coaction on {edge}");
            r.attempt(format!("{label}: respects relations"), anchor, || {
                respects_relations(&comodule(side, edge, t, ring)?, t, ring)
            });
            r.attempt(format!("{label}: coassociative"), anchor, || comodule_coassoc(side, edge, t, ring));
            r.attempt(format!("{label}: counital"), anchor, || comodule_counit(side, edge, t, ring));
        }
    }
    r.finish()
}

fn comodule_coassoc(side: Side, edge: Edge, t: Builtin, ring: Ring) -> Result<Option<String>> {
    let pb = partner_bigon(t)?;
    let c = comodule(side, edge, t, ring)?;
    let delta = coproduct(pb, ring)?;
    let id_b = Morphism::identity(&algebra(pb, ring)?)?;
    let id_t = Morphism::identity(&algebra(t, ring)?)?;
    let (one, two) = match side {
        Side::Left => (c.then(&delta.tensor(&id_t)?)?, c.then(&id_b.tensor(&c)?)?),
        Side::Right => (c.then(&id_t.tensor(&delta)?)?, c.then(&c.tensor(&id_b)?)?),
    };
    let tri = algebra(t, ring)?;
    for i in 0..12 {
        let g = tri.gen(0, i);
        let diff = one.apply(&g)?.sub(&two.apply(&g)?);
        if !diff.is_zero() {
            return Ok(Some(format!("{}: {}", gen_label(&tri, 0, i), format_poly(&one.target, &diff))));
        }
    }
    Ok(None)
}

fn comodule_counit(side: Side, edge: Edge, t: Builtin, ring: Ring) -> Result<Option<String>> {
    let pb = partner_bigon(t)?;
    let c = comodule(side, edge, t, ring)?;
    let eps = counit(pb, ring)?;
    let tri = algebra(t, ring)?;
    let id_t = Morphism::identity(&tri)?;
    for i in 0..12 {
        let g = tri.gen(0, i);
        let img = c.apply(&g)?;
        let back = match side {
            Side::Left => multiply_slots(&img, &tri, &[&eps, &id_t])?,
            Side::Right => multiply_slots(&img, &tri, &[&id_t, &eps])?,
        };
        if let Some(w) = witness(&tri, &back.sub(&g)) {
            return Ok(Some(format!("{}: {w}", gen_label(&tri, 0, i))));
        }
    }
    Ok(None)
}

/// The rotation is an automorphism of order three.
pub fn rotation_check(t: Builtin, ring: Ring) -> Report {
    let mut r = Report::new(&format!("rotation {t} {ring}"));
    let anchor = "rotation of the triangle";
    r.attempt("rotation respects relations", anchor, || respects_relations(&rotation(t, ring)?, t, ring));
    r.attempt("rotation cubed is the identity", anchor, || {
        let tau = rotation(t, ring)?;
        let cube = tau.then(&tau)?.then(&tau)?;
        let a = algebra(t, ring)?;
        for i in 0..12 {
            let g = a.gen(0, i);
            if let Some(w) = witness(&a, &cube.apply(&g)?.sub(&g)) {
                return Ok(Some(format!("{}: {w}", gen_label(&a, 0, i))));
            }
        }
        Ok(None)
    });
    r.finish()
}

/// At ω = +1 the triangle is commutative and its matrices satisfy
/// `M_γ C M_β C M_α C = 1` and `det M_δ = 1`.
pub fn plus1_triangle_check() -> Report {
    let ring = Ring::Laurent;
    let t = Builtin::TrianglePlus1;
    let mut r = Report::new("triangle at omega = +1");
    r.attempt("all generators commute", "commutative at omega = +1", || {
        let a = algebra(t, ring)?;
        for i in 0..12 {
            for j in 0..12 {
                let c = a.commutator(&a.gen(0, i), &a.gen(0, j))?;
                if let Some(w) = witness(&a, &c) {
                    return Ok(Some(format!("[{}, {}] = {w}", gen_label(&a, 0, i), gen_label(&a, 0, j))));
                }
            }
        }
        Ok(None)
    });
    r.attempt("M_g C M_b C M_a C = 1", "triangle matrix identity", || {
        let a = algebra(t, ring)?;
        let c = Matrix2::c(&a);
        let m = |l| triangle_matrix(&a, 0, l);
        let prod = Matrix2::product(&[m(2), c.clone(), m(1), c.clone(), m(0), c])?;
        let diff = prod.sub(&Matrix2::identity(&a)).normalized()?;
        Ok((!diff.is_zero()).then(|| {
            diff.entries.iter().flatten().map(|e| format_poly(&a, e)).collect::<Vec<_>>().join(", ")
        }))
    });
    r.attempt("det M_d = 1 for each letter", "triangle matrix identity", || {
        let a = algebra(t, ring)?;
        for l in 0..3 {
            let m = triangle_matrix(&a, 0, l);
            let det = a.mul(m.get(0, 0), m.get(1, 1))?.sub(&a.mul(m.get(0, 1), m.get(1, 0))?);
            if let Some(w) = witness(&a, &det.sub(&a.one())) {
                return Ok(Some(format!("letter {l}: {w}")));
            }
        }
        Ok(None)
    });
    r.finish()
}

/// Overlap resolution for a bigon whose first relation has `q` replaced by `q²`.
///
/// A negative control: the report is expected to FAIL with a witness.
pub fn mutated_bigon_check() -> Report {
    let mut r = Report::new("mutated bigon");
    r.attempt("perturbed bigon: overlaps resolve", "diamond lemma", || {
        let p = crate::algebras::builtin::mutated_bigon()?;
        let d = diamond_check(&p, None)?;
        Ok(d.failures.first().map(|(w, diff)| format!("{w}: {diff}")))
    });
    r.finish()
}

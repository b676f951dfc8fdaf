use crate::algebras::{triangle_gen, Builtin};
use crate::error::Result;
use crate::frobenius::{chebyshev_eval, check_order};
use crate::gluing::kernel::{truncated_kernel_solve, KernelProblem};
use crate::gluing::scenario::{GluingScenario, Scenario};
use crate::ncpoly::{Algebra, NCPoly, Sign};
use crate::poisson::{star_bracket, BracketTable};
use crate::report::Report;
use crate::scalar::{Ring, Scalar};
use crate::syntax::format_poly;

fn nonzero(alg: &Algebra, p: &NCPoly) -> Option<String> {
    (!p.is_zero()).then(|| format_poly(alg, p))
}

fn pairs() -> impl Iterator<Item = (Sign, Sign)> {
    Sign::BOTH.into_iter().flat_map(|e| Sign::BOTH.into_iter().map(move |f| (e, f)))
}

fn st(e: Sign, f: Sign) -> String {
    format!("[{},{}]", e.symbol(), f.symbol())
}

/// Catalogued elements have zero defect, products of them too, and the
/// negative controls do not.
pub fn gluing_check(kind: Scenario, ring: Ring) -> Report {
    let mut r = Report::new(&format!("gluing {kind} {ring}"));
    let anchor = "glued subalgebra as a coaction kernel";
    let sc = match GluingScenario::quantum(kind, ring) {
        Ok(s) => s,
        Err(e) => {
            r.record("setup", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    r.attempt("defect(1) = 0", anchor, || Ok(nonzero(&sc.defect_algebra, &sc.coaction_defect(&sc.algebra.one())?)));
    let names = sc.catalog();
    for name in &names {
        r.attempt(format!("defect({name}) = 0"), anchor, || {
            Ok(nonzero(&sc.defect_algebra, &sc.coaction_defect(&sc.glued_element(name)?)?))
        });
    }
    // products of catalogued pairs, one representative per family
    let reps: Vec<&String> = names.iter().step_by(4).collect();
    for x in &reps {
        for y in &reps {
            r.attempt(format!("defect({x} * {y}) = 0"), anchor, || {
                let p = sc.algebra.mul(&sc.glued_element(x)?, &sc.glued_element(y)?)?;
                Ok(nonzero(&sc.defect_algebra, &sc.coaction_defect(&p)?))
            });
        }
    }
    let a = &sc.algebra;
    let (control, label) = match kind {
        Scenario::Square => (triangle_gen(a, 0, 0, Sign::Plus, Sign::Plus), "a[+,+]@0"),
        Scenario::Disc => (
            a.add(
                &a.mul(&triangle_gen(a, 0, 0, Sign::Plus, Sign::Minus), &triangle_gen(a, 0, 1, Sign::Plus, Sign::Plus))
                    .unwrap_or_else(|_| a.zero()),
                &a.mul(&triangle_gen(a, 0, 0, Sign::Minus, Sign::Minus), &triangle_gen(a, 0, 1, Sign::Plus, Sign::Minus))
                    .unwrap_or_else(|_| a.zero()),
            ),
            "a[+,-]*b[+,+] + a[-,-]*b[+,-]",
        ),
    };
    r.attempt(format!("defect({label}) != 0"), anchor, || {
        let d = sc.coaction_defect(&control)?;
        Ok(d.is_zero().then(|| "defect vanishes".to_string()))
    });
    r.finish()
}

/// Exact kernel at seam degree ≤ `degree` over `cyclo:n`, with membership of
/// the catalogue and exactness of the result.
pub fn kernel_check(kind: Scenario, degree: usize, n: u32) -> Report {
    let mut r = Report::new(&format!("kernel {kind} d={degree} N={n}"));
    let anchor = "exact sequence for gluing";
    let run = || -> Result<(GluingScenario, crate::gluing::KernelSolution)> {
        let sc = GluingScenario::quantum(kind, check_order(n)?)?;
        let sol = truncated_kernel_solve(&KernelProblem::new(&sc, degree))?;
        Ok((sc, sol))
    };
    let (sc, sol) = match run() {
        Ok(x) => x,
        Err(e) => {
            r.record("solve", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    r.record(
        format!("solve: domain {}, rank {}, kernel {}", sol.domain_dim, sol.rank, sol.basis.len()),
        anchor,
        (sol.domain_dim != sol.rank + sol.basis.len()).then(|| "rank + nullity != dimension".to_string()),
    );
    r.attempt("kernel basis has zero defect", anchor, || {
        for b in &sol.basis {
            let d = sc.coaction_defect(b)?;
            if !d.is_zero() {
                return Ok(Some(format!("{}: {}", format_poly(&sc.algebra, b), format_poly(&sc.defect_algebra, &d))));
            }
        }
        Ok(None)
    });
    r.attempt("1 in kernel", anchor, || Ok((!sol.contains(&sc.algebra.one())?).then(|| "1 missing".to_string())));
    for name in sc.catalog() {
        let Ok(x) = sc.glued_element(&name) else { continue };
        let within = x.terms().all(|(w, _)| w.len() <= degree.max(2) && sc.seam_degree(w) <= degree);
        if within {
            r.attempt(format!("{name} in kernel"), anchor, || Ok((!sol.contains(&x)?).then(|| "not in span".to_string())));
        }
    }
    if kind == Scenario::Square && degree >= 1 {
        r.attempt("a[+,+]@0 not in kernel", anchor, || {
            let x = triangle_gen(&sc.algebra, 0, 0, Sign::Plus, Sign::Plus);
            Ok(sol.contains(&x)?.then(|| "a[+,+]@0 lies in the span".to_string()))
        });
    }
    r.finish()
}

/// Frobenius images of the glued generators at `cyclo:n`.
pub fn frobenius_glued_check(n: u32) -> Report {
    match check_order(n) {
        Ok(ring) => frobenius_glued_check_in(n, ring),
        Err(e) => {
            let mut r = Report::new(&format!("frobenius glued N={n}"));
            r.record("setup", "Frobenius map on glued surfaces", Some(format!("error: {e}")));
            r.finish()
        }
    }
}

/// As [`frobenius_glued_check`] over an arbitrary ring; over the Laurent ring
/// the power identities fail.
pub fn frobenius_glued_check_in(n: u32, ring: Ring) -> Report {
    let mut r = Report::new(&format!("frobenius glued N={n} {ring}"));
    let square = "Frobenius map on the square";
    let disc = "Frobenius map on the punctured disc";
    let (sq, dc) = match (GluingScenario::quantum(Scenario::Square, ring), GluingScenario::quantum(Scenario::Disc, ring)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            r.record("setup", square, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    let w8 = Scalar::omega_power(ring, 8);
    let a = &sq.algebra;
    for (e, f) in pairs() {
        let s = st(e, f);
        r.attempt(format!("square: abar{s} summands x*y = w^8*y*x"), square, || {
            let x = a.mul(&triangle_gen(a, 0, 0, e, Sign::Plus), &triangle_gen(a, 1, 0, Sign::Plus, f))?;
            let y = a.mul(&triangle_gen(a, 0, 0, e, Sign::Minus), &triangle_gen(a, 1, 0, Sign::Minus, f))?;
            Ok(nonzero(a, &a.mul(&x, &y)?.sub(&a.mul(&y, &x)?.scale(&w8))))
        });
        r.attempt(format!("square: abar{s}^{n} = sum_m a[{},m]@0^{n}*a[m,{}]@1^{n}", e.symbol(), f.symbol()), square, || {
            let lhs = a.pow(&sq.glued_element(&format!("abar{s}"))?, n)?;
            let mut rhs = a.zero();
            for m in Sign::BOTH {
                let t = a.mul(&a.pow(&triangle_gen(a, 0, 0, e, m), n)?, &a.pow(&triangle_gen(a, 1, 0, m, f), n)?)?;
                rhs = rhs.add(&t);
            }
            Ok(nonzero(a, &lhs.sub(&rhs)))
        });
    }
    let d = &dc.algebra;
    r.attempt(format!("disc: T_{n}(eta) = g[+,+]^{n} + g[-,-]^{n}"), disc, || {
        let lhs = chebyshev_eval(n, &dc.glued_element("eta")?, d)?;
        let rhs = d.pow(&triangle_gen(d, 0, 2, Sign::Plus, Sign::Plus), n)?
            .add(&d.pow(&triangle_gen(d, 0, 2, Sign::Minus, Sign::Minus), n)?);
        Ok(nonzero(d, &d.normal_form(&lhs.sub(&rhs))?))
    });
    for (e, f) in pairs() {
        let s = st(e, f);
        r.attempt(format!("disc: delta{s} summands x*y = w^8*y*x"), disc, || {
            let [x, y] = dc.delta_summands(e, f)?;
            Ok(nonzero(d, &d.mul(&x, &y)?.sub(&d.mul(&y, &x)?.scale(&w8))))
        });
        r.attempt(format!("disc: delta{s}^{n} = x^{n} + y^{n}"), disc, || {
            let [x, y] = dc.delta_summands(e, f)?;
            let lhs = d.pow(&dc.glued_element(&format!("delta{s}"))?, n)?;
            Ok(nonzero(d, &lhs.sub(&d.pow(&x, n)?.add(&d.pow(&y, n)?))))
        });
    }
    r.attempt(format!("disc: every delta^{n} commutes with the catalogue"), disc, || {
        let names = dc.catalog();
        for (e, f) in pairs() {
            let p = d.pow(&dc.glued_element(&format!("delta{}", st(e, f)))?, n)?;
            for other in &names {
                let c = d.commutator(&p, &dc.glued_element(other)?)?;
                if !c.is_zero() {
                    return Ok(Some(format!("[delta{}^{n}, {other}] = {}", st(e, f), format_poly(d, &c))));
                }
            }
        }
        Ok(None)
    });
    // the images stay glued
    let kernel = "Frobenius image of a glued element is glued";
    r.attempt(format!("square: abar[+,-]^{n} and b[+,-]@0^{n} in kernel"), kernel, || {
        for name in ["abar[+,-]", "b[+,-]@0", "g[-,+]@1"] {
            let p = a.pow(&sq.glued_element(name)?, n)?;
            if let Some(w) = nonzero(&sq.defect_algebra, &sq.coaction_defect(&p)?) {
                return Ok(Some(format!("{name}: {w}")));
            }
        }
        Ok(None)
    });
    r.attempt(format!("disc: T_{n}(eta) and delta[+,+]^{n} in kernel"), kernel, || {
        let t = chebyshev_eval(n, &dc.glued_element("eta")?, d)?;
        let p = d.pow(&dc.glued_element("delta[+,+]")?, n)?;
        for (name, x) in [("T(eta)", t), ("delta^N", p)] {
            if let Some(w) = nonzero(&dc.defect_algebra, &dc.coaction_defect(&x)?) {
                return Ok(Some(format!("{name}: {w}")));
            }
        }
        Ok(None)
    });
    r.finish()
}

/// The ω = +1 bracket on the glued algebra.
///
/// On the tensor product, the bracket assembled factorwise by Leibniz from
/// generator brackets is compared with the first-order commutator computed
/// in the deformed tensor product; brackets of glued elements stay glued.
pub fn poisson_gluing_check(kind: Scenario) -> Report {
    let mut r = Report::new(&format!("poisson gluing {kind}"));
    let anchor = "Poisson bracket on a glued surface";
    let setup = || -> Result<(GluingScenario, BracketTable)> {
        let sc = GluingScenario::new(kind, Builtin::TrianglePlus1, Ring::Laurent)?;
        let single = crate::algebras::algebra(Builtin::TrianglePlus1, Ring::Laurent)?;
        let alg = sc.algebra.clone();
        let table = BracketTable::from_generators(&alg, |g, h| {
            let (wg, _) = g.leading().expect("generator");
            let (wh, _) = h.leading().expect("generator");
            let (sg, sh) = (crate::ncpoly::slot_of(wg.as_slice()[0]), crate::ncpoly::slot_of(wh.as_slice()[0]));
            if sg != sh {
                return Ok(alg.zero());
            }
            let b = star_bracket(&single, &g.map_words(|w| w.with_slot(0)), &h.map_words(|w| w.with_slot(0)))?;
            Ok(b.map_words(|w| w.with_slot(sg)))
        })?;
        Ok((sc, table))
    };
    let (sc, table) = match setup() {
        Ok(x) => x,
        Err(e) => {
            r.record("setup", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    let names = sc.catalog();
    let reps: Vec<&String> = names.iter().step_by(2).collect();
    for (i, x) in reps.iter().enumerate() {
        for y in &reps[i..] {
            r.attempt(format!("{{{x}, {y}}}: factorwise = commutator, glued"), anchor, || {
                let (u, v) = (sc.glued_element(x)?, sc.glued_element(y)?);
                let direct = star_bracket(&sc.algebra, &u, &v)?;
                let leibniz = table.bracket(&u, &v)?;
                let diff = sc.algebra.normal_form(&direct.sub(&leibniz))?;
                if let Some(w) = nonzero(&sc.algebra, &diff) {
                    return Ok(Some(format!("routes differ by {w}")));
                }
                Ok(nonzero(&sc.defect_algebra, &sc.coaction_defect(&direct)?).map(|w| format!("defect {w}")))
            });
        }
    }
    r.finish()
}

use crate::algebras::{
    algebra, bigon_gen, bigon_matrix, comodule, coproduct, counit, det_q, Builtin, Edge, Matrix2, Side, Surface,
};
use crate::error::Result;
use crate::frobenius::chebyshev::chebyshev_eval;
use crate::frobenius::map::{check_order, FrobeniusMap};
use crate::ncpoly::{Algebra, Morphism, NCPoly, Sign, Word};
use crate::report::Report;
use crate::scalar::{Ring, Scalar};
use crate::syntax::format_poly;

fn nonzero(alg: &Algebra, p: &NCPoly) -> Option<String> {
    (!p.is_zero()).then(|| format_poly(alg, p))
}

fn label(alg: &Algebra, slot: usize, i: usize) -> String {
    format_poly(alg, &alg.gen(slot, i))
}

/// Does `element` commute with every generator of `alg`?
pub fn centrality_check(alg: &Algebra, element: &NCPoly, name: &str) -> Report {
    let mut r = Report::new(&format!("centrality of {name}"));
    for s in 0..alg.slots() {
        for i in 0..alg.factor(s).map(|p| p.alphabet().len()).unwrap_or(0) {
            r.attempt(format!("{name} commutes with {}", label(alg, s, i)), "central element", || {
                Ok(nonzero(alg, &alg.commutator(element, &alg.gen(s, i))?))
            });
        }
    }
    r.finish()
}

/// Every `g^N` is central in the surface algebra at a primitive `N`-th root of unity.
pub fn frobenius_centrality_check(surface: Surface, n: u32) -> Report {
    let mut r = Report::new(&format!("frobenius centrality {surface} N={n}"));
    let alg = match check_order(n).and_then(|ring| algebra(surface.quantum(), ring)) {
        Ok(a) => a,
        Err(e) => {
            r.record("setup", "central image", Some(format!("error: {e}")));
            return r.finish();
        }
    };
    for i in 0..alg.factor(0).map(|p| p.alphabet().len()).unwrap_or(0) {
        let name = format!("{}^{n}", label(&alg, 0, i));
        r.attempt(format!("{name} is central"), "central image", || {
            let p = alg.pow(&alg.gen(0, i), n)?;
            for h in alg.generators() {
                let c = alg.commutator(&p, &h)?;
                if !c.is_zero() {
                    return Ok(Some(format!("[{name}, {}] = {}", format_poly(&alg, &h), format_poly(&alg, &c))));
                }
            }
            Ok(None)
        });
    }
    r.finish()
}

/// Compare two morphisms with a common source on every generator.
fn agree_on_generators(one: &Morphism, two: &Morphism) -> Result<Option<String>> {
    for g in one.source.generators() {
        let d = one.apply(&g)?.sub(&two.apply(&g)?);
        if !d.is_zero() {
            return Ok(Some(format!("{}: {}", format_poly(&one.source, &g), format_poly(&one.target, &d))));
        }
    }
    Ok(None)
}

/// `α₊₊ᴺα₋₋ᴺ − α₊₋ᴺα₋₊ᴺ` in an algebra with bigon-shaped generators.
fn frobenius_det(alg: &Algebra, n: u32) -> Result<NCPoly> {
    use Sign::{Minus as M, Plus as P};
    let p = |e, f| alg.pow(&bigon_gen(alg, 0, e, f), n);
    Ok(alg.mul(&p(P, P)?, &p(M, M)?)?.sub(&alg.mul(&p(P, M)?, &p(M, P)?)?))
}

/// The exponent `m ≤ N` with `α₊₊ᴺα₋₋ᴺ − α₊₋ᴺα₋₊ᴺ = det_q^m` in GL₂ at order `N`, if any.
pub fn det_exponent(n: u32) -> Result<Option<u32>> {
    let ring = check_order(n)?;
    let alg = algebra(Builtin::Gl2, ring)?;
    let lhs = frobenius_det(&alg, n)?;
    let d = det_q(Builtin::Gl2, ring)?;
    let mut power = alg.one();
    for m in 0..=n {
        if lhs.sub(&power).is_zero() {
            return Ok(Some(m));
        }
        power = alg.mul(&power, &d)?;
    }
    Ok(None)
}

/// Compatibility of `j` with the Hopf and comodule structures at order `N`.
pub fn frobenius_compat_check(n: u32) -> Report {
    let mut r = Report::new(&format!("frobenius compatibility N={n}"));
    let hopf = "Frobenius map on the bigon";
    let comod = "Frobenius map on the triangle";
    r.attempt("coproduct: Δ∘j = (j⊗j)∘Δ", hopf, || {
        let ring = check_order(n)?;
        let jb = FrobeniusMap::new(Surface::Bigon, n)?;
        let jj = jb.morphism().tensor(jb.morphism())?;
        let one = jb.morphism().then(&coproduct(Builtin::Bigon, ring)?)?;
        let two = coproduct(Builtin::BigonPlus1, Ring::Laurent)?.then(&jj)?;
        agree_on_generators(&one, &two)
    });
    r.attempt("counit: ε∘j = ε", hopf, || {
        let ring = check_order(n)?;
        let jb = FrobeniusMap::new(Surface::Bigon, n)?;
        let one = jb.morphism().then(&counit(Builtin::Bigon, ring)?)?;
        let eps = counit(Builtin::BigonPlus1, Ring::Laurent)?;
        for g in one.source.generators() {
            let d = one.apply(&g)?.sub(&eps.apply(&g)?.specialize(ring)?);
            if !d.is_zero() {
                return Ok(Some(format!("{}: {}", format_poly(&one.source, &g), format_poly(&one.target, &d))));
            }
        }
        Ok(None)
    });
    r.attempt(format!("a[+,+]^{n}*a[-,-]^{n} - a[+,-]^{n}*a[-,+]^{n} = 1"), hopf, || {
        let alg = algebra(Builtin::Bigon, check_order(n)?)?;
        Ok(nonzero(&alg, &frobenius_det(&alg, n)?.sub(&alg.one())))
    });
    match det_exponent(n) {
        Ok(Some(m)) => r.record(format!("GL2: the same difference equals det_q^{m}"), hopf, None),
        Ok(None) => r.record("GL2: the same difference is a power of det_q", hopf, Some(format!("no exponent ≤ {n}"))),
        Err(e) => r.record("GL2: the same difference is a power of det_q", hopf, Some(format!("error: {e}"))),
    }
    for side in [Side::Left, Side::Right] {
        for edge in Edge::ALL {
            r.attempt(format!("{side:?} coaction on {edge} commutes with j"), comod, || {
                let ring = check_order(n)?;
                let jb = FrobeniusMap::new(Surface::Bigon, n)?;
                let jt = FrobeniusMap::new(Surface::Triangle, n)?;
                let pair = match side {
                    Side::Left => jb.morphism().tensor(jt.morphism())?,
                    Side::Right => jt.morphism().tensor(jb.morphism())?,
                };
                let one = comodule(side, edge, Builtin::TrianglePlus1, Ring::Laurent)?.then(&pair)?;
                let two = jt.morphism().then(&comodule(side, edge, Builtin::Triangle, ring)?)?;
                agree_on_generators(&one, &two)
            });
        }
    }
    r.finish()
}

/// Gaussian binomial `[n, k]` for `yx = q·xy`, by the recursion
/// `[n, k] = [n−1, k] + q^{n−k}[n−1, k−1]`.
pub fn gaussian_binomial(ring: Ring, n: u32, k: u32) -> Scalar {
    let q = |e: i64| Scalar::omega_power(ring, -4 * e);
    let mut row = vec![Scalar::one(ring)];
    for m in 1..=n {
        let mut next = vec![Scalar::zero(ring); m as usize + 1];
        for j in 0..=m as usize {
            let mut c = if j < row.len() { row[j].clone() } else { Scalar::zero(ring) };
            if j > 0 {
                c = &c + &(&q(i64::from(m) - j as i64) * &row[j - 1]);
            }
            next[j] = c;
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_else(|| Scalar::zero(ring))
}

/// `(x + y)^N = x^N + y^N` in the quantum plane, and the expansion
/// coefficients equal the Gaussian binomials.
pub fn qbinomial_check(n: u32, ring: Ring) -> Report {
    let mut r = Report::new(&format!("q-binomial N={n} {ring}"));
    let anchor = "q-binomial theorem";
    let ctx = (|| -> Result<_> {
        let a = algebra(Builtin::QuantumPlane, ring)?;
        let (x, y) = (a.gen(0, 0), a.gen(0, 1));
        let sum = a.pow(&x.add(&y), n)?;
        Ok((a, sum))
    })();
    let (a, sum) = match ctx {
        Ok(c) => c,
        Err(e) => {
            r.record("setup", anchor, Some(format!("error: {e}")));
            return r.finish();
        }
    };
    r.attempt("expansion coefficients are Gaussian binomials", anchor, || {
        for k in 0..=n {
            let mut w = vec![0u16; k as usize];
            w.extend(std::iter::repeat(1u16).take((n - k) as usize));
            let got = sum.coeff(&Word::from_slice(&w)).cloned().unwrap_or_else(|| Scalar::zero(ring));
            let want = gaussian_binomial(ring, n, k);
            if !(&got - &want).is_zero() {
                return Ok(Some(format!("k = {k}: engine {got}, binomial {want}")));
            }
        }
        Ok(None)
    });
    r.attempt(format!("(x+y)^{n} - x^{n} - y^{n} = 0"), anchor, || {
        let d = sum.sub(&a.pow(&a.gen(0, 0), n)?).sub(&a.pow(&a.gen(0, 1), n)?);
        Ok(nonzero(&a, &d))
    });
    r.finish()
}

/// `T_N(α₊₊ + α₋₋) = α₊₊^N + α₋₋^N` in the bigon.
pub fn chebyshev_check(n: u32, ring: Ring) -> Report {
    let mut r = Report::new(&format!("chebyshev N={n} {ring}"));
    r.attempt(format!("T_{n}(a[+,+] + a[-,-]) = a[+,+]^{n} + a[-,-]^{n}"), "cancellation in the bigon", || {
        let alg = algebra(Builtin::Bigon, ring)?;
        let (a, d) = (bigon_gen(&alg, 0, Sign::Plus, Sign::Plus), bigon_gen(&alg, 0, Sign::Minus, Sign::Minus));
        let lhs = chebyshev_eval(n, &a.add(&d), &alg)?;
        let rhs = alg.pow(&a, n)?.add(&alg.pow(&d, n)?);
        Ok(nonzero(&alg, &alg.normal_form(&lhs.sub(&rhs))?))
    });
    r.finish()
}

/// `T_N(Tr(A₁⋯A_k)) = Tr(A₁^{(N)}⋯A_k^{(N)})` over the `k`-fold tensor power of the bigon.
///
/// `A_i` is the generator matrix of slot `i`, `A^{(N)}` its entrywise `N`-th power.
pub fn trace_identity_check(k: usize, n: u32, ring: Ring) -> Report {
    let mut r = Report::new(&format!("trace identity k={k} N={n} {ring}"));
    r.attempt(format!("T_{n}(Tr(A_1...A_{k})) = Tr(A_1^({n})...A_{k}^({n}))"), "Chebyshev trace identity", || {
        let b = algebra(Builtin::Bigon, ring)?;
        let copies: Vec<&Algebra> = std::iter::repeat(&b).take(k.max(1)).collect();
        let alg = Algebra::tensor(&copies)?;
        let mats: Vec<Matrix2> = (0..k.max(1)).map(|s| bigon_matrix(&alg, s)).collect();
        let lhs = chebyshev_eval(n, &Matrix2::product(&mats)?.trace(), &alg)?;
        let powered = mats.iter().map(|m| m.entrywise_pow(n)).collect::<Result<Vec<_>>>()?;
        let rhs = Matrix2::product(&powered)?.trace();
        Ok(nonzero(&alg, &alg.normal_form(&lhs.sub(&rhs))?))
    });
    r.finish()
}

/// `j` is multiplicative on a pair of ω = +1 elements.
pub fn multiplicativity(surface: Surface, n: u32, p: &NCPoly, q: &NCPoly) -> Result<Option<String>> {
    let j = FrobeniusMap::new(surface, n)?;
    let src = j.source().clone();
    let prod = src.mul(p, q)?;
    let tgt = j.target();
    let d = j.apply(&prod)?.sub(&tgt.mul(&j.apply(p)?, &j.apply(q)?)?);
    Ok(nonzero(tgt, &d))
}


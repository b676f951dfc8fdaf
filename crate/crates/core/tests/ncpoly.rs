use std::sync::Arc;

use proptest::prelude::*;
use stated_skein::algebras::{algebra, builtin, counit, mutated_bigon, rotation, Builtin};
use stated_skein::ncpoly::{diamond_check, validate_presentation, Generator, Presentation, Rule};
use stated_skein::scalar::int;
use stated_skein::syntax::{elaborate, parse_expr, parse_syntax};
use stated_skein::{Algebra, NCPoly, Ring, Scalar, Word};

fn lit(alg: &Algebra, text: &str) -> NCPoly {
    elaborate(alg, &parse_syntax(text).unwrap()).unwrap()
}

const ENGINE: [Builtin; 6] = [
    Builtin::QuantumPlane,
    Builtin::Bigon,
    Builtin::Gl2,
    Builtin::Triangle,
    Builtin::BigonPlus1,
    Builtin::TrianglePlus1,
];

#[test]
fn bigon_reorders_the_diagonal() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    let got = b.normal_form(&lit(&b, "a[-,-]*a[+,+]")).unwrap();
    assert_eq!(got, lit(&b, "1 + q*a[-,+]*a[+,-]"));
    assert_eq!(b.normal_form(&b.one()).unwrap(), b.one());
}

#[test]
fn triangle_exchange_of_beta_and_alpha() {
    let t = algebra(Builtin::Triangle, Ring::Laurent).unwrap();
    // C with upper + and lower - is w; A = w^-2.
    let want = lit(&t, "A*a[+,+]*b[+,-] - A^2*w*g[+,+]");
    assert_eq!(t.normal_form(&lit(&t, "b[+,+]*a[-,+]")).unwrap(), want);
}

#[test]
fn products_of_normal_words() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    let x = lit(&b, "a[+,-]");
    let y = lit(&b, "a[-,+]");
    assert_eq!(b.mul(&x, &y).unwrap(), b.mul(&y, &x).unwrap());
    assert_eq!(b.mul(&x, &b.one()).unwrap(), x);
    let qp = algebra(Builtin::QuantumPlane, Ring::Laurent).unwrap();
    assert_eq!(b.ring(), qp.ring());
    assert_eq!(qp.mul(&lit(&qp, "y"), &lit(&qp, "x")).unwrap(), lit(&qp, "q*x*y"));
}

#[test]
fn builtins_validate_and_resolve_overlaps() {
    for ring in [Ring::Laurent, Ring::Cyclotomic(3)] {
        for b in ENGINE {
            let p = builtin(b, ring).unwrap();
            assert!(validate_presentation(&p).ok(), "{b:?}");
            let d = diamond_check(&p, Some(4)).unwrap();
            assert!(d.ok(), "{b:?} {ring}: {:?}", d.failures);
        }
    }
    let qp = builtin(Builtin::QuantumPlane, Ring::Laurent).unwrap();
    assert_eq!(diamond_check(&qp, None).unwrap().checked, 0);
}

#[test]
fn identity_rule_is_a_violation() {
    let alphabet = vec![Generator::plain("x"), Generator::plain("y")];
    let lhs = Word::from_slice(&[0, 1]);
    let rule = Rule { lhs: lhs.clone(), rhs: NCPoly::monomial(lhs, Scalar::one(Ring::Laurent)) };
    let p = Presentation::fixed("bad", alphabet, Ring::Laurent, vec![rule]);
    let v = validate_presentation(&p);
    assert!(!v.ok());
    assert!(v.problems.iter().any(|m| m.contains("not decreasing")), "{:?}", v.problems);
}

#[test]
fn perturbed_bigon_has_a_failing_overlap() {
    let p = mutated_bigon().unwrap();
    let d = diamond_check(&p, None).unwrap();
    assert!(!d.ok());
    assert!(!d.failures[0].1.is_empty());
}

#[test]
fn morphisms_on_words() {
    let t = algebra(Builtin::Triangle, Ring::Laurent).unwrap();
    let tau = rotation(Builtin::Triangle, Ring::Laurent).unwrap();
    assert_eq!(tau.apply(&lit(&t, "a[+,-]")).unwrap(), lit(&t, "b[+,-]"));
    let eps = counit(Builtin::Bigon, Ring::Laurent).unwrap();
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    assert!(eps.apply(&lit(&b, "a[+,+]*a[-,-]")).unwrap().sub(&NCPoly::one(Ring::Laurent)).is_zero());
}

#[test]
fn bigon_normal_words_have_the_expected_shape() {
    let p = builtin(Builtin::Bigon, Ring::Laurent).unwrap();
    let idx = |s: &str| p.index_of(&parse_generator(s)).unwrap() as u16;
    let (mp, pp, mm, pm) = (idx("a[-,+]"), idx("a[+,+]"), idx("a[-,-]"), idx("a[+,-]"));
    for d in 0..=4 {
        let words = p.normal_words(d).unwrap();
        // dimension of degree-d piece of a PBW-type basis in three letters, two choices of middle
        let expected = if d == 0 { 1 } else { (d + 1) * (d + 2) / 2 + d * (d + 1) / 2 };
        assert_eq!(words.len(), expected, "degree {d}");
        for w in words {
            let s = w.as_slice();
            let mid = s.iter().copied().find(|g| *g == pp || *g == mm).unwrap_or(pp);
            let rank = |g: u16| if g == mp { 0 } else if g == mid { 1 } else if g == pm { 2 } else { 9 };
            assert!(s.windows(2).all(|x| rank(x[0]) <= rank(x[1])), "{}", p.word_name(&w));
        }
    }
}

fn parse_generator(s: &str) -> Generator {
    match parse_syntax(s).unwrap() {
        stated_skein::syntax::Expr::Atom { name, states, .. } => Generator { name, states },
        _ => unreachable!(),
    }
}

#[test]
fn triangle_graded_dimensions_agree_at_plus_one() {
    let t = builtin(Builtin::Triangle, Ring::Laurent).unwrap();
    let t1 = builtin(Builtin::TrianglePlus1, Ring::Laurent).unwrap();
    for d in 0..=4 {
        assert_eq!(t.normal_words(d).unwrap().len(), t1.normal_words(d).unwrap().len(), "degree {d}");
    }
}

fn poly_in(b: Builtin) -> impl Strategy<Value = (Arc<Algebra>, NCPoly)> {
    let alg = Arc::new(algebra(b, Ring::Laurent).unwrap());
    let n = alg.generators().len();
    let term = (prop::collection::vec(0..n, 0..4), -3i64..=3, -4i64..=4);
    prop::collection::vec(term, 0..4).prop_map(move |terms| {
        let gens = alg.generators();
        let mut p = alg.zero();
        for (letters, c, k) in terms {
            let mut m = alg.scalar(Scalar::monomial(Ring::Laurent, int(c), k));
            for l in letters {
                m = m.concat_mul(&gens[l]);
            }
            p = p.add(&m);
        }
        (alg.clone(), p)
    })
}

fn any_builtin() -> impl Strategy<Value = Builtin> {
    prop::sample::select(ENGINE.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent((alg, p) in any_builtin().prop_flat_map(poly_in)) {
        let once = alg.normal_form(&p).unwrap();
        prop_assert_eq!(alg.normal_form(&once).unwrap(), once);
    }

    #[test]
    fn multiplication_is_associative_and_unital(
        (alg, x) in any_builtin().prop_flat_map(poly_in),
        seed in any::<u64>(),
    ) {
        let gens = alg.generators();
        let y = gens[(seed % gens.len() as u64) as usize].add(&alg.one());
        let z = gens[((seed >> 8) % gens.len() as u64) as usize].sub(&gens[((seed >> 16) % gens.len() as u64) as usize]);
        let x = alg.normal_form(&x).unwrap();
        let left = alg.mul(&alg.mul(&x, &y).unwrap(), &z).unwrap();
        let right = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(alg.mul(&x, &alg.one()).unwrap(), x.clone());
        prop_assert_eq!(alg.mul(&alg.one(), &x).unwrap(), x);
    }

    #[test]
    fn parsed_text_matches_arithmetic((alg, p) in any_builtin().prop_flat_map(poly_in)) {
        let text = stated_skein::syntax::format_poly(&alg, &alg.normal_form(&p).unwrap());
        prop_assert_eq!(parse_expr(&text, &alg).unwrap(), alg.normal_form(&p).unwrap());
    }
}

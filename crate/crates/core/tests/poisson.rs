use std::sync::Arc;

use proptest::prelude::*;
use stated_skein::algebras::{algebra, Builtin, Surface};
use stated_skein::gluing::{poisson_gluing_check, Scenario};
use stated_skein::poisson::{
    bracket_property_check, mutated_psi_check, orientation_flip_check, psi_check, r_matrix_bracket, rmatrix_check,
    star_bracket, star_examples_check, theorem3_check, BracketTable, Orientation,
};
use stated_skein::scalar::int;
use stated_skein::syntax::parse_expr;
use stated_skein::{Algebra, NCPoly, Ring, Sign};

fn plus1(s: Surface) -> Algebra {
    algebra(s.plus1(), Ring::Laurent).unwrap()
}

#[test]
fn worked_brackets() {
    let b = plus1(Surface::Bigon);
    let e = |t: &str| parse_expr(t, &b).unwrap();
    assert_eq!(star_bracket(&b, &e("a[+,+]"), &e("a[-,-]")).unwrap(), e("-2*a[+,-]*a[-,+]"));
    assert_eq!(star_bracket(&b, &e("a[+,+]"), &e("a[+,-]")).unwrap(), e("-a[+,-]*a[+,+]"));
    assert!(star_bracket(&b, &e("a[+,-]"), &e("a[-,+]")).unwrap().is_zero());
    let t = plus1(Surface::Triangle);
    let e = |s: &str| parse_expr(s, &t).unwrap();
    assert_eq!(star_bracket(&t, &e("g[+,+]"), &e("a[-,-]")).unwrap(), e("-3/2*g[+,+]*a[-,-] + 2*b[+,-]"));
    let r = star_examples_check();
    assert!(r.passed(), "{r}");
}

#[test]
fn poisson_axioms_on_generators() {
    for s in [Surface::Bigon, Surface::Triangle] {
        let r = bracket_property_check(s);
        assert!(r.passed(), "{r}");
    }
    assert!(rmatrix_check().passed());
    assert!(orientation_flip_check().passed());
}

#[test]
fn character_variety_comparison() {
    for o in Orientation::all(Surface::Bigon) {
        assert!(psi_check(Surface::Bigon, &o).passed());
        let r = theorem3_check(Surface::Bigon, &o);
        assert!(r.passed(), "{r}");
    }
    let all_plus = Orientation::triangle(Sign::Plus, Sign::Plus, Sign::Plus);
    let r = theorem3_check(Surface::Triangle, &all_plus);
    assert!(r.passed(), "{r}");
}

#[test]
fn negated_psi_is_caught() {
    let r = mutated_psi_check();
    assert!(!r.passed());
    assert!(r.failures().all(|c| c.witness.is_some()));
}

#[test]
fn orientations_parse_and_fit() {
    let o = Orientation::parse("-,+").unwrap();
    assert_eq!(o, Orientation::bigon(Sign::Minus, Sign::Plus));
    assert!(o.fit(Surface::Bigon).is_ok());
    assert!(o.fit(Surface::Triangle).is_err());
    assert!(Orientation::parse("+,x").is_err());
    assert_eq!(Orientation::all(Surface::Triangle).len(), 8);
}

#[test]
fn square_bracket_restricts_to_the_glued_subalgebra() {
    let r = poisson_gluing_check(Scenario::Square);
    assert!(r.passed(), "{r}");
}

#[test]
fn rmatrix_bracket_is_antisymmetric_on_generators() {
    let o = Orientation::bigon(Sign::Plus, Sign::Minus);
    let table = r_matrix_bracket(Surface::Bigon, &o).unwrap();
    let alg = algebra(Builtin::CharvarBigon, Ring::Laurent).unwrap();
    for x in alg.generators() {
        for y in alg.generators() {
            let s = table.bracket(&x, &y).unwrap().add(&table.bracket(&y, &x).unwrap());
            assert!(s.is_zero());
        }
    }
}

fn poly(alg: Arc<Algebra>) -> impl Strategy<Value = NCPoly> {
    let n = alg.generators().len();
    prop::collection::vec((prop::collection::vec(0..n, 1..3), -2i64..=2), 1..4).prop_map(move |terms| {
        let gens = alg.generators();
        let mut p = alg.zero();
        for (letters, c) in terms {
            let m = alg.product(&letters.iter().map(|&l| gens[l].clone()).collect::<Vec<_>>()).unwrap();
            p = p.add(&m.scale_rational(&int(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The deformation commutator and the Leibniz extension of its generator table agree.
    #[test]
    fn star_bracket_matches_its_generator_table(
        (u, v) in {
            let alg = Arc::new(plus1(Surface::Bigon));
            (poly(alg.clone()), poly(alg))
        }
    ) {
        let alg = plus1(Surface::Bigon);
        let table = BracketTable::from_generators(&alg, |x, y| star_bracket(&alg, x, y)).unwrap();
        let direct = star_bracket(&alg, &u, &v).unwrap();
        prop_assert_eq!(table.bracket(&u, &v).unwrap(), direct.clone());
        prop_assert!(direct.add(&star_bracket(&alg, &v, &u).unwrap()).is_zero());
    }
}

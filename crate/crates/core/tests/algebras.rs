use stated_skein::algebras::{
    algebra, antipode, comodule, comodule_check, coproduct, counit, det_q, det_q_check, hopf_check, plus1_triangle_check,
    relations, relations_check, rotation, rotation_check, Builtin, Edge, Side,
};
use stated_skein::syntax::{elaborate, parse_syntax};
use stated_skein::{Algebra, NCPoly, Ring};

fn lit(alg: &Algebra, text: &str) -> NCPoly {
    elaborate(alg, &parse_syntax(text).unwrap()).unwrap()
}

fn square(b: Builtin, ring: Ring) -> Algebra {
    let a = algebra(b, ring).unwrap();
    Algebra::tensor(&[&a, &a]).unwrap()
}

#[test]
fn coproduct_of_a_diagonal_generator() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    let bb = square(Builtin::Bigon, Ring::Laurent);
    let delta = coproduct(Builtin::Bigon, Ring::Laurent).unwrap();
    let got = delta.apply(&lit(&b, "a[+,+]")).unwrap();
    assert_eq!(got, bb.normal_form(&lit(&bb, "a[+,+] ox a[+,+] + a[+,-] ox a[-,+]")).unwrap());
    assert_eq!(delta.apply(&b.one()).unwrap(), bb.one());
    assert_eq!(counit(Builtin::Bigon, Ring::Laurent).unwrap().apply(&b.one()).unwrap(), NCPoly::one(Ring::Laurent));
    assert_eq!(antipode(Builtin::Bigon, Ring::Laurent).unwrap().apply(&b.one()).unwrap(), b.one());
}

#[test]
fn antipode_rows_against_columns() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    let s = antipode(Builtin::Bigon, Ring::Laurent).unwrap();
    let row = |f: &str| {
        let mut acc = b.zero();
        for mu in ["+", "-"] {
            let left = s.apply(&lit(&b, &format!("a[+,{mu}]"))).unwrap();
            acc = acc.add(&b.mul(&left, &lit(&b, &format!("a[{mu},{f}]"))).unwrap());
        }
        acc
    };
    assert!(row("-").is_zero());
    assert_eq!(row("+"), b.one());
}

#[test]
fn structure_suites_pass() {
    for ring in [Ring::Laurent, Ring::Cyclotomic(3)] {
        for b in [Builtin::Bigon, Builtin::BigonPlus1, Builtin::Gl2] {
            let r = hopf_check(b, ring);
            assert!(r.passed(), "{r}");
        }
        for b in Builtin::ALL {
            let r = relations_check(b, ring);
            assert!(r.passed(), "{r}");
        }
        assert!(det_q_check(ring).passed());
        for t in [Builtin::Triangle, Builtin::TrianglePlus1] {
            assert!(comodule_check(t, ring).passed());
            assert!(rotation_check(t, ring).passed());
        }
    }
}

#[test]
fn det_q_is_central_in_gl2() {
    let g = algebra(Builtin::Gl2, Ring::Laurent).unwrap();
    let d = det_q(Builtin::Gl2, Ring::Laurent).unwrap();
    for x in g.generators() {
        assert!(g.commutator(&d, &x).unwrap().is_zero());
    }
}

#[test]
fn rotation_has_order_three() {
    let t = algebra(Builtin::Triangle, Ring::Laurent).unwrap();
    let tau = rotation(Builtin::Triangle, Ring::Laurent).unwrap();
    let tau3 = tau.then(&tau).unwrap().then(&tau).unwrap();
    for x in t.generators() {
        assert_eq!(tau3.apply(&x).unwrap(), x);
    }
    for r in relations(Builtin::Triangle, Ring::Laurent).unwrap() {
        assert!(tau.apply(&r).unwrap().is_zero());
    }
}

#[test]
fn triangle_at_plus_one_is_commutative() {
    let t = algebra(Builtin::TrianglePlus1, Ring::Laurent).unwrap();
    let gens = t.generators();
    assert_eq!(gens.len(), 12);
    for x in &gens {
        for y in &gens {
            assert!(t.commutator(x, y).unwrap().is_zero());
        }
    }
    assert!(plus1_triangle_check().passed());
}

#[test]
fn comodule_images_follow_the_endpoint_table() {
    let ring = Ring::Laurent;
    let t = algebra(Builtin::Triangle, ring).unwrap();
    let b = algebra(Builtin::Bigon, ring).unwrap();
    let bt = Algebra::tensor(&[&b, &t]).unwrap();
    let at_c = comodule(Side::Left, Edge::C, Builtin::Triangle, ring).unwrap();
    let want = bt.normal_form(&lit(&bt, "a[+,+] ox a[+,-] + a[+,-] ox a[-,-]")).unwrap();
    assert_eq!(at_c.apply(&lit(&t, "a[+,-]")).unwrap(), want);
    let at_a = comodule(Side::Left, Edge::A, Builtin::Triangle, ring).unwrap();
    assert_eq!(at_a.apply(&lit(&t, "a[+,-]")).unwrap(), lit(&bt, "a[+,-]@1"));
    assert_eq!(at_a.apply(&t.one()).unwrap(), bt.one());
}

use std::sync::Arc;

use proptest::prelude::*;
use stated_skein::algebras::{algebra, builtin, Builtin};
use stated_skein::frobenius::check_order;
use stated_skein::scalar::int;
use stated_skein::syntax::{format_json, format_poly, parse_expr, parse_scalar, PresentationFile};
use stated_skein::{Algebra, NCPoly, Ring, Scalar, SkeinError};

#[test]
fn reduce_examples() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    let p = parse_expr("a[+,+]*a[-,-] - 1", &b).unwrap();
    assert_eq!(format_poly(&b, &p), "(w^4)*a[-,+]*a[+,-]");
    assert_eq!(parse_expr("1", &b).unwrap(), b.one());
    let b3 = algebra(Builtin::Bigon, check_order(3).unwrap()).unwrap();
    let t = parse_expr("T[3](a[+,+] + a[-,-])", &b3).unwrap();
    assert_eq!(t, parse_expr("a[+,+]^3 + a[-,-]^3", &b3).unwrap());
}

#[test]
fn rendering() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    assert_eq!(format_poly(&b, &b.zero()), "0");
    assert_eq!(format_json(&b, &b.zero()), "[]");
    assert_eq!(parse_scalar("1 + h", Ring::Dual).unwrap().to_string(), "1 + h");
    let p = parse_expr("q*a[+,-]*a[-,+]", &b).unwrap();
    assert_eq!(format_poly(&b, &p), "(w^-4)*a[-,+]*a[+,-]");
    let json: serde_json::Value = serde_json::from_str(&format_json(&b, &p)).unwrap();
    assert_eq!(json[0]["coeff"], "w^-4");
    assert_eq!(json[0]["word"], serde_json::json!(["a[-,+]", "a[+,-]"]));
}

#[test]
fn scalar_sugar() {
    let r = Ring::Laurent;
    assert_eq!(parse_scalar("q", r).unwrap(), parse_scalar("w^-4", r).unwrap());
    assert_eq!(parse_scalar("A^2", r).unwrap(), parse_scalar("q", r).unwrap());
    assert_eq!(parse_scalar("2/4", r).unwrap(), Scalar::rational(r, stated_skein::scalar::rat(1, 2)));
    assert!(parse_scalar("h", r).is_err());
}

#[test]
fn parse_errors() {
    let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
    assert!(matches!(parse_expr("a[+,+] +", &b), Err(SkeinError::Parse { pos: 8, .. })));
    assert!(matches!(parse_expr("a[+,?]", &b), Err(SkeinError::Parse { pos: 4, .. })));
    assert!(matches!(parse_expr("g[+,+]", &b), Err(SkeinError::UnknownGenerator(_))));
    assert!(matches!(parse_expr("a[+,+]@2", &b), Err(SkeinError::SlotOutOfRange { .. })));
    assert!(parse_expr("a[+,+]^-1", &b).is_err());
}

#[test]
fn presentation_files_round_trip() {
    for b in Builtin::ALL {
        let p = builtin(b, Ring::Laurent).unwrap();
        let text = PresentationFile::export(&p).to_json();
        let back = PresentationFile::from_json(&text).unwrap().build(None).unwrap();
        assert_eq!(back.alphabet(), p.alphabet());
        assert_eq!(PresentationFile::export(&back).to_json(), text, "{b:?}");
    }
}

#[test]
fn presentation_file_with_precedence_and_horizon() {
    let text = r#"{
        "name": "plane",
        "ring": "laurent",
        "alphabet": ["y", "x"],
        "precedence": ["x", "y"],
        "horizon": 4,
        "rules": [{"lhs": ["y", "x"], "rhs": [{"coeff": "q", "word": ["x", "y"]}]}]
    }"#;
    let p = Arc::new(PresentationFile::from_json(text).unwrap().build(None).unwrap());
    let alg = Algebra::single(p);
    assert_eq!(format_poly(&alg, &parse_expr("y*x*y", &alg).unwrap()), "(w^-4)*x*y*y");
}

fn normal_poly(b: Builtin, ring: Ring) -> impl Strategy<Value = (Arc<Algebra>, NCPoly)> {
    let alg = Arc::new(algebra(b, ring).unwrap());
    let n = alg.generators().len();
    let term = (prop::collection::vec(0..n, 0..4), -5i64..=5, 1i64..=3, -6i64..=6);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let gens = alg.generators();
        let ring = alg.ring();
        let mut p = alg.zero();
        for (letters, num, den, k) in terms {
            let c = Scalar::monomial(ring, int(num) / int(den), k);
            let w = alg.product(&letters.iter().map(|&l| gens[l].clone()).collect::<Vec<_>>()).unwrap();
            p = p.add(&w.scale(&c));
        }
        (alg.clone(), p)
    })
}

fn any_algebra() -> impl Strategy<Value = (Builtin, Ring)> {
    let rings = prop::sample::select(vec![Ring::Laurent, Ring::Cyclotomic(3), Ring::Cyclotomic(5)]);
    (prop::sample::select(Builtin::ALL.to_vec()), rings)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn format_then_parse_is_identity((alg, p) in any_algebra().prop_flat_map(|(b, r)| normal_poly(b, r))) {
        let text = format_poly(&alg, &p);
        prop_assert_eq!(parse_expr(&text, &alg).unwrap(), p);
    }

    #[test]
    fn dual_scalars_round_trip(a in -20i64..20, b in -20i64..20, d in 1i64..9) {
        let s = Scalar::rational(Ring::Dual, int(a) / int(d)).try_add(
            &Scalar::hbar(Ring::Dual).unwrap().scale(&(int(b) / int(d)))).unwrap();
        prop_assert_eq!(parse_scalar(&s.to_string(), Ring::Dual).unwrap(), s);
    }
}

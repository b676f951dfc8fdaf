use num_bigint::BigInt;
use stated_skein::algebras::Surface;
use stated_skein::frobenius::{
    check_order, chebyshev, chebyshev_check, frobenius_apply, frobenius_centrality_check, frobenius_compat_check,
    gaussian_binomial, qbinomial_check, trace_identity_check,
};
use stated_skein::syntax::parse_scalar;
use stated_skein::{Report, Ring};

fn failed_with_witness(r: &Report) -> bool {
    !r.passed() && r.failures().all(|c| c.witness.as_deref().is_some_and(|w| !w.is_empty()))
}

#[test]
fn chebyshev_coefficients() {
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(chebyshev(0).coeffs, ints(&[2]));
    assert_eq!(chebyshev(3).coeffs, ints(&[0, -3, 0, 1]));
    assert_eq!(chebyshev(5).coeffs, ints(&[0, 5, 0, -5, 0, 1]));
    assert_eq!(chebyshev(7).coeffs, ints(&[0, -7, 0, 14, 0, -7, 0, 1]));
    // T_n(t + 1/t) = t^n + t^-n at t = 1
    for n in 1..10 {
        assert_eq!(chebyshev(n).eval_int(&BigInt::from(2)), BigInt::from(2));
    }
}

#[test]
fn gaussian_binomials() {
    let formal = gaussian_binomial(Ring::Laurent, 3, 1);
    assert_eq!(formal, parse_scalar("1 + q + q^2", Ring::Laurent).unwrap());
    for n in [3, 5] {
        let ring = check_order(n).unwrap();
        for k in 1..n {
            assert!(gaussian_binomial(ring, n, k).is_zero(), "N={n} k={k}");
        }
    }
}

#[test]
fn frobenius_centrality_on_both_surfaces() {
    for n in [3, 5] {
        for s in [Surface::Bigon, Surface::Triangle] {
            let r = frobenius_centrality_check(s, n);
            assert!(r.passed(), "{r}");
        }
    }
    let r = frobenius_compat_check(3);
    assert!(r.passed(), "{r}");
}

#[test]
fn q_binomial_at_roots_and_formally() {
    for n in [3, 5] {
        assert!(qbinomial_check(n, check_order(n).unwrap()).passed());
    }
    assert!(failed_with_witness(&qbinomial_check(3, Ring::Laurent)));
}

#[test]
fn cancellation_in_the_bigon() {
    for n in [3, 5, 7] {
        let r = chebyshev_check(n, check_order(n).unwrap());
        assert!(r.passed(), "{r}");
    }
    assert!(failed_with_witness(&chebyshev_check(3, Ring::Laurent)));
}

#[test]
fn trace_identity_for_two_matrices() {
    let r = trace_identity_check(2, 3, check_order(3).unwrap());
    assert!(r.passed(), "{r}");
    assert!(trace_identity_check(1, 3, check_order(3).unwrap()).passed());
}

#[test]
fn frobenius_map_sends_generators_to_powers() {
    let alg = stated_skein::algebras::algebra(stated_skein::algebras::Builtin::BigonPlus1, Ring::Laurent).unwrap();
    let x = stated_skein::syntax::parse_expr("a[+,-]", &alg).unwrap();
    let img = frobenius_apply(Surface::Bigon, 3, &x).unwrap();
    let ring = check_order(3).unwrap();
    let b = stated_skein::algebras::algebra(stated_skein::algebras::Builtin::Bigon, ring).unwrap();
    assert_eq!(img, stated_skein::syntax::parse_expr("a[+,-]^3", &b).unwrap());
}

#[test]
fn orders_must_be_odd() {
    assert!(check_order(4).is_err());
    assert!(check_order(3).is_ok());
}

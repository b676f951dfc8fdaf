//! Exact coefficient rings.
//!
//! Three modes share one [`Scalar`] type:
//!
//! * [`Ring::Laurent`]: Laurent polynomials in ω with rational coefficients.
//! * [`Ring::Cyclotomic`]: `Q[ω]/Φ_N(ω)` for an odd `N > 1`, so ω is a primitive `N`-th root of unity.
//! * [`Ring::Dual`]: `Q[ħ]/ħ²`, where ω stands for `1 − ħ/4`.
//!
//! Laurent scalars specialize to the other two rings through [`Scalar::specialize`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SkeinError};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// Build a rational from a numerator and a nonzero denominator.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Build an integral rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Coefficient ring selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Laurent,
    Cyclotomic(u32),
    Dual,
}

impl Ring {
    /// Validated cyclotomic ring at odd `n > 1`.
    pub fn cyclotomic(n: i64) -> Result<Ring> {
        if n > 1 && n % 2 == 1 && n <= 4095 {
            Ok(Ring::Cyclotomic(n as u32))
        } else {
            Err(SkeinError::InvalidOrder(n))
        }
    }

    /// Parse `laurent`, `dual` or `cyclo:N`.
    pub fn parse(text: &str) -> Result<Ring> {
        match text.trim() {
            "laurent" => Ok(Ring::Laurent),
            "dual" => Ok(Ring::Dual),
            other => {
                let n = other
                    .strip_prefix("cyclo:")
                    .and_then(|n| n.parse::<i64>().ok())
                    .ok_or_else(|| SkeinError::InvalidRing(other.to_string()))?;
                Ring::cyclotomic(n)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Laurent => write!(f, "laurent"),
            Ring::Cyclotomic(n) => write!(f, "cyclo:{n}"),
            Ring::Dual => write!(f, "dual"),
        }
    }
}

/// Reduction data for `Q[x]/Φ_N(x)`.
#[derive(Debug)]
pub struct CycloTable {
    n: u32,
    /// Coefficients of Φ_N, lowest degree first.
    phi: Vec<Rational>,
    /// `powers[k]` is `x^k mod Φ_N` in the power basis, for `k < max(N, 2φ(N))`.
    powers: Vec<Vec<Rational>>,
}

impl CycloTable {
    fn new(n: u32) -> CycloTable {
        let phi = cyclotomic_poly(n as usize);
        let deg = phi.len() - 1;
        let phi: Vec<Rational> = phi.into_iter().map(|c| Rational::from_integer(BigInt::from(c))).collect();
        let count = (n as usize).max(2 * deg);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); deg];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow with Φ_N (monic)
            let top = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &phi[i];
                }
            }
        }
        CycloTable { n, phi, powers }
    }

    /// Order of the root of unity.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Degree φ(N) of the power basis.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn power(&self, k: i64) -> &[Rational] {
        let r = k.rem_euclid(self.n as i64) as usize;
        &self.powers[r]
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let qlen = rem.len() - dd;
    let mut quo = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd] / lead;
        quo[i] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    quo
}

fn table(n: u32) -> Arc<CycloTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let map = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = map.lock().expect("cyclotomic table lock");
    map.entry(n).or_insert_with(|| Arc::new(CycloTable::new(n))).clone()
}

/// Element of `Q[ω]/Φ_N` in the power basis `1, ω, …, ω^{φ(N)-1}`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    table: Arc<CycloTable>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.table.n == other.table.n && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclo {}

impl Cyclo {
    fn zero(n: u32) -> Cyclo {
        let table = table(n);
        let d = table.degree();
        Cyclo { table, coeffs: vec![Rational::zero(); d] }
    }

    /// Coefficients against the power basis.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn add_power(&mut self, k: i64, c: &Rational) {
        let table = self.table.clone();
        for (dst, src) in self.coeffs.iter_mut().zip(table.power(k)) {
            if !src.is_zero() {
                *dst += c * src;
            }
        }
    }
}

/// Exact scalar in one of the three coefficient rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Laurent(BTreeMap<i64, Rational>),
    Cyclotomic(Cyclo),
    Dual(Rational, Rational),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Scalar {
        match ring {
            Ring::Laurent => Scalar::Laurent(BTreeMap::new()),
            Ring::Cyclotomic(n) => Scalar::Cyclotomic(Cyclo::zero(n)),
            Ring::Dual => Scalar::Dual(Rational::zero(), Rational::zero()),
        }
    }

    pub fn one(ring: Ring) -> Scalar {
        Scalar::rational(ring, Rational::one())
    }

    /// Embed a rational constant.
    pub fn rational(ring: Ring, q: Rational) -> Scalar {
        match ring {
            Ring::Laurent => {
                let mut m = BTreeMap::new();
                if !q.is_zero() {
                    m.insert(0, q);
                }
                Scalar::Laurent(m)
            }
            Ring::Cyclotomic(n) => {
                let mut c = Cyclo::zero(n);
                c.coeffs[0] = q;
                Scalar::Cyclotomic(c)
            }
            Ring::Dual => Scalar::Dual(q, Rational::zero()),
        }
    }

    pub fn integer(ring: Ring, k: i64) -> Scalar {
        Scalar::rational(ring, int(k))
    }

    /// `c · ω^k`.
    pub fn monomial(ring: Ring, c: Rational, k: i64) -> Scalar {
        match ring {
            Ring::Laurent => {
                let mut m = BTreeMap::new();
                if !c.is_zero() {
                    m.insert(k, c);
                }
                Scalar::Laurent(m)
            }
            Ring::Cyclotomic(n) => {
                let mut z = Cyclo::zero(n);
                z.add_power(k, &c);
                Scalar::Cyclotomic(z)
            }
            Ring::Dual => {
                let slope = &c * rat(-k, 4);
                Scalar::Dual(c, slope)
            }
        }
    }

    /// ω^k in the given ring; in the dual ring this is `1 − (k/4)ħ`.
    pub fn omega_power(ring: Ring, k: i64) -> Scalar {
        Scalar::monomial(ring, Rational::one(), k)
    }

    /// The infinitesimal ħ; only meaningful in the dual ring.
    pub fn hbar(ring: Ring) -> Result<Scalar> {
        match ring {
            Ring::Dual => Ok(Scalar::Dual(Rational::zero(), Rational::one())),
            other => Err(SkeinError::InvalidRing(format!("`h` is only available in the dual ring, not {other}"))),
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Laurent(_) => Ring::Laurent,
            Scalar::Cyclotomic(c) => Ring::Cyclotomic(c.table.n),
            Scalar::Dual(..) => Ring::Dual,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Laurent(m) => m.is_empty(),
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(Zero::is_zero),
            Scalar::Dual(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |q| q.is_one())
    }

    /// The value as a rational constant, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Laurent(m) => match m.len() {
                0 => Some(Rational::zero()),
                1 => m.get(&0).cloned(),
                _ => None,
            },
            Scalar::Cyclotomic(c) => {
                if c.coeffs[1..].iter().all(Zero::is_zero) {
                    Some(c.coeffs[0].clone())
                } else {
                    None
                }
            }
            Scalar::Dual(a, b) => b.is_zero().then(|| a.clone()),
        }
    }

    /// `(c, k)` when the scalar is a single term `c·ω^k` (Laurent mode only).
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        match self {
            Scalar::Laurent(m) if m.len() == 1 => m.iter().next().map(|(k, c)| (c.clone(), *k)),
            _ => None,
        }
    }

    /// The two dual-number components `(c₀, c₁)`.
    pub fn dual_parts(&self) -> Option<(&Rational, &Rational)> {
        match self {
            Scalar::Dual(a, b) => Some((a, b)),
            _ => None,
        }
    }

    fn same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(SkeinError::RingMismatch(self.ring(), other.ring()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => {
                let mut m = a.clone();
                for (k, c) in b {
                    let e = m.entry(*k).or_insert_with(Rational::zero);
                    *e += c;
                    if e.is_zero() {
                        m.remove(k);
                    }
                }
                Scalar::Laurent(m)
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                Scalar::Cyclotomic(Cyclo { table: a.table.clone(), coeffs })
            }
            (Scalar::Dual(a0, a1), Scalar::Dual(b0, b1)) => Scalar::Dual(a0 + b0, a1 + b1),
            _ => unreachable!("ring equality checked above"),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => {
                let mut m: BTreeMap<i64, Rational> = BTreeMap::new();
                for (i, x) in a {
                    for (j, y) in b {
                        *m.entry(i + j).or_insert_with(Rational::zero) += x * y;
                    }
                }
                m.retain(|_, c| !c.is_zero());
                Scalar::Laurent(m)
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                let d = a.coeffs.len();
                let mut raw = vec![Rational::zero(); 2 * d];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            raw[i + j] += x * y;
                        }
                    }
                }
                let mut out = Cyclo { table: a.table.clone(), coeffs: vec![Rational::zero(); d] };
                for (k, c) in raw.into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if k < d {
                        out.coeffs[k] += c;
                    } else {
                        out.add_power(k as i64, &c);
                    }
                }
                Scalar::Cyclotomic(out)
            }
            (Scalar::Dual(a0, a1), Scalar::Dual(b0, b1)) => Scalar::Dual(a0 * b0, a0 * b1 + a1 * b0),
            _ => unreachable!("ring equality checked above"),
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Laurent(m) => Scalar::Laurent(m.iter().map(|(k, c)| (*k, -c)).collect()),
            Scalar::Cyclotomic(c) => {
                Scalar::Cyclotomic(Cyclo { table: c.table.clone(), coeffs: c.coeffs.iter().map(|x| -x).collect() })
            }
            Scalar::Dual(a, b) => Scalar::Dual(-a, -b),
        }
    }

    /// Multiply by a rational constant.
    pub fn scale(&self, q: &Rational) -> Scalar {
        match self {
            Scalar::Laurent(m) => {
                if q.is_zero() {
                    return Scalar::Laurent(BTreeMap::new());
                }
                Scalar::Laurent(m.iter().map(|(k, c)| (*k, c * q)).collect())
            }
            Scalar::Cyclotomic(c) => {
                Scalar::Cyclotomic(Cyclo { table: c.table.clone(), coeffs: c.coeffs.iter().map(|x| x * q).collect() })
            }
            Scalar::Dual(a, b) => Scalar::Dual(a * q, b * q),
        }
    }

    /// Multiplicative inverse of a unit.
    ///
    /// Units are nonzero elements (cyclotomic), monomials `c·ω^k` (Laurent)
    /// and elements with nonzero constant part (dual).
    pub fn invert_unit(&self) -> Result<Scalar> {
        match self {
            Scalar::Laurent(m) => match self.as_monomial() {
                Some((c, k)) => Ok(Scalar::Laurent(BTreeMap::from([(-k, c.recip())]))),
                None => Err(SkeinError::NonUnit {
                    ring: Ring::Laurent,
                    detail: format!("`{}` is not a monomial c*w^k with c != 0", Scalar::Laurent(m.clone())),
                }),
            },
            Scalar::Cyclotomic(c) => {
                if self.is_zero() {
                    return Err(SkeinError::NonUnit { ring: self.ring(), detail: "zero has no inverse".into() });
                }
                let inv = poly_inverse_mod(&c.coeffs, &c.table.phi);
                let mut coeffs = vec![Rational::zero(); c.coeffs.len()];
                for (i, x) in inv.into_iter().enumerate() {
                    coeffs[i] = x;
                }
                Ok(Scalar::Cyclotomic(Cyclo { table: c.table.clone(), coeffs }))
            }
            Scalar::Dual(a, b) => {
                if a.is_zero() {
                    return Err(SkeinError::NonUnit {
                        ring: Ring::Dual,
                        detail: format!("`{self}` has zero constant part"),
                    });
                }
                let ia = a.recip();
                let ib = -(b * &ia * &ia);
                Ok(Scalar::Dual(ia, ib))
            }
        }
    }

    /// Ring homomorphism out of the Laurent ring.
    pub fn specialize(&self, target: Ring) -> Result<Scalar> {
        let m = match self {
            Scalar::Laurent(m) => m,
            other => return Err(SkeinError::NotLaurent(other.ring())),
        };
        let mut out = Scalar::zero(target);
        for (k, c) in m {
            out = out.try_add(&Scalar::monomial(target, c.clone(), *k))?;
        }
        Ok(out)
    }

    /// Value of a Laurent scalar at ω = 1.
    pub fn at_omega_one(&self) -> Result<Rational> {
        match self {
            Scalar::Laurent(m) => Ok(m.values().fold(Rational::zero(), |acc, c| acc + c)),
            other => Err(SkeinError::NotLaurent(other.ring())),
        }
    }

    /// Ring homomorphism `c₀ + c₁ħ ↦ c₀`.
    pub fn constant_part(&self) -> Option<Rational> {
        self.dual_parts().map(|(a, _)| a.clone())
    }
}

/// Inverse of `a` modulo `m` over the rationals (`m` irreducible, `a ≠ 0 mod m`).
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    // extended Euclid tracking only the coefficient of `a`
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !(r1.len() == 1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    let c = r1[0].recip();
    let (_, s) = poly_divmod(&s1, &trim(m.to_vec()));
    s.into_iter().map(|x| x * &c).collect()
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim(den.to_vec());
    let mut rem = trim(num.to_vec());
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![Rational::zero()], rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - dd];
    let lead = den[dd].clone();
    for i in (0..quo.len()).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    rem.truncate(dd.max(1));
    (quo, trim(rem))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar ring mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar ring mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar ring mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// One summand `c·sym^k` of a rendered scalar.
fn push_term(out: &mut String, c: &Rational, sym: &str, k: i64) {
    let first = out.is_empty();
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    let power = match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{k}"),
    };
    if power.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(&power);
    } else {
        out.push_str(&format!("{a}*{power}"));
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self {
            Scalar::Laurent(m) => {
                for (k, c) in m.iter().rev() {
                    push_term(&mut out, c, "w", *k);
                }
            }
            Scalar::Cyclotomic(c) => {
                for (k, x) in c.coeffs.iter().enumerate().rev() {
                    if !x.is_zero() {
                        push_term(&mut out, x, "w", k as i64);
                    }
                }
            }
            Scalar::Dual(a, b) => {
                if !a.is_zero() {
                    push_term(&mut out, a, "h", 0);
                }
                if !b.is_zero() {
                    push_term(&mut out, b, "h", 1);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ring: Ring, k: i64) -> Scalar {
        Scalar::omega_power(ring, k)
    }

    #[test]
    fn laurent_unit_cancels() {
        let r = Ring::Laurent;
        assert!((&w(r, 2) * &w(r, -2)).is_one());
    }

    #[test]
    fn cube_root_identities() {
        let r = Ring::Cyclotomic(3);
        // A = w^-2; A^3 - A^-3 = w^-6 - w^6
        let diff = &w(r, -6) - &w(r, 6);
        assert!(diff.is_zero());
        assert!(w(r, 3).is_one());
        assert_eq!(w(r, 1).invert_unit().unwrap(), w(r, 2));
        // 1 + w + w^2 = 0
        let phi = &(&Scalar::one(r) + &w(r, 1)) + &w(r, 2);
        assert!(phi.is_zero());
    }

    #[test]
    fn dual_numbers() {
        let r = Ring::Dual;
        let a = Scalar::Dual(int(1), rat(-1, 4));
        let b = Scalar::Dual(int(1), rat(1, 4));
        assert!((&a * &b).is_one());
        assert_eq!(a.invert_unit().unwrap(), b);
        assert_eq!(w(r, -4), Scalar::Dual(int(1), int(1)));
        assert_eq!(w(r, 1), a);
    }

    #[test]
    fn specialization_examples() {
        let q = Scalar::omega_power(Ring::Laurent, -4);
        assert_eq!(q.specialize(Ring::Cyclotomic(3)).unwrap(), w(Ring::Cyclotomic(3), 2));
        let m5 = Scalar::omega_power(Ring::Laurent, -5);
        assert_eq!(m5.specialize(Ring::Dual).unwrap(), Scalar::Dual(int(1), rat(5, 4)));
        assert!(Scalar::one(Ring::Laurent).specialize(Ring::Cyclotomic(7)).unwrap().is_one());
    }

    #[test]
    fn laurent_non_monomial_is_not_unit() {
        let x = &w(Ring::Laurent, 2) + &Scalar::one(Ring::Laurent);
        assert!(matches!(x.invert_unit(), Err(SkeinError::NonUnit { .. })));
    }

    #[test]
    fn omega_to_the_order_is_one() {
        for n in [3, 5, 7, 9, 15] {
            assert!(w(Ring::Cyclotomic(n), n as i64).is_one());
            assert!(w(Ring::Cyclotomic(n), 0).is_one());
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Scalar::one(Ring::Laurent);
        let b = Scalar::one(Ring::Dual);
        assert!(matches!(a.try_add(&b), Err(SkeinError::RingMismatch(..))));
    }

    #[test]
    fn rendering() {
        let r = Ring::Laurent;
        assert_eq!(w(r, -4).to_string(), "w^-4");
        let x = &(&w(r, 2) + &Scalar::one(r)) - &Scalar::monomial(r, rat(3, 2), -1);
        assert_eq!(x.to_string(), "w^2 + 1 - 3/2*w^-1");
        let d = &Scalar::one(Ring::Dual) + &Scalar::hbar(Ring::Dual).unwrap();
        assert_eq!(d.to_string(), "1 + h");
        assert_eq!(Scalar::zero(Ring::Cyclotomic(5)).to_string(), "0");
    }
}

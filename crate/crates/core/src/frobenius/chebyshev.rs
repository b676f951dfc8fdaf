use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::ncpoly::{Algebra, NCPoly};
use crate::scalar::{Rational, Scalar};

/// Chebyshev polynomial of the first kind, normalized by `T₀ = 2`, `T₁ = X`,
/// `T_{n+2} = X·T_{n+1} − T_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chebyshev {
    pub n: u32,
    /// `coeffs[k]` multiplies `X^k`.
    pub coeffs: Vec<BigInt>,
}

/// `T_n`.
pub fn chebyshev(n: u32) -> Chebyshev {
    let mut prev = vec![BigInt::from(2)];
    let mut cur = vec![BigInt::zero(), BigInt::one()];
    if n == 0 {
        return Chebyshev { n, coeffs: prev };
    }
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Chebyshev { n, coeffs: cur }
}

impl Chebyshev {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Value at an integer.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `T_n(x)` for an algebra element, in normal form.
    pub fn eval(&self, alg: &Algebra, x: &NCPoly) -> Result<NCPoly> {
        let ring = alg.ring();
        let mut acc = alg.zero();
        let mut power = alg.one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = alg.mul(&power, x)?;
            }
            if !c.is_zero() {
                acc.add_assign_scaled(&power, &Scalar::rational(ring, Rational::from_integer(c.clone())));
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Chebyshev {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{a}X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "{a}X^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `T_n(x)` evaluated in `alg`.
pub fn chebyshev_eval(n: u32, x: &NCPoly, alg: &Algebra) -> Result<NCPoly> {
    chebyshev(n).eval(alg, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(n: u32) -> Vec<i64> {
        chebyshev(n).coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn low_degrees() {
        assert_eq!(coeffs(0), vec![2]);
        assert_eq!(coeffs(1), vec![0, 1]);
        assert_eq!(coeffs(2), vec![-2, 0, 1]);
        assert_eq!(coeffs(5), vec![0, 5, 0, -5, 0, 1]);
        assert_eq!(chebyshev(5).to_string(), "X^5 - 5X^3 + 5X");
    }

    #[test]
    fn matches_cosine_multiple_angle() {
        // T_n(2cos θ) = 2cos(nθ); at θ = 0, π/2 and π/3 both sides are integers.
        for n in 0..20u32 {
            let t = chebyshev(n);
            assert_eq!(t.eval_int(&BigInt::from(2)), BigInt::from(2));
            let at_zero = match n % 4 {
                0 => 2,
                2 => -2,
                _ => 0,
            };
            assert_eq!(t.eval_int(&BigInt::zero()), BigInt::from(at_zero));
            let at_one = [2, 1, -1, -2, -1, 1][(n % 6) as usize];
            assert_eq!(t.eval_int(&BigInt::one()), BigInt::from(at_one));
        }
    }
}

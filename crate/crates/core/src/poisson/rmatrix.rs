use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{rat, Rational};
use crate::ncpoly::Sign;

/// 2×2 integer matrix in the basis `(+, −)`.
pub type Mat2 = [[i64; 2]; 2];

pub const H: Mat2 = [[1, 0], [0, -1]];
pub const E: Mat2 = [[0, 1], [0, 0]];
pub const F: Mat2 = [[0, 0], [1, 0]];

/// Index of `(ε, μ)` in the tensor square: `2ε + μ` with `+ ↦ 0`, `− ↦ 1`.
pub fn pair_index(e: Sign, m: Sign) -> usize {
    2 * e.index() + m.index()
}

/// An exact 4×4 matrix on the tensor square of the standard representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub m: [[Rational; 4]; 4],
}

fn kron(a: &Mat2, b: &Mat2) -> [[Rational; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| Rational::from_integer((a[i / 2][j / 2] * b[i % 2][j % 2]).into())))
}

impl RMatrix {
    pub fn zero() -> RMatrix {
        RMatrix { m: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())) }
    }

    /// `c · a ⊗ b`.
    pub fn tensor(c: Rational, a: &Mat2, b: &Mat2) -> RMatrix {
        let k = kron(a, b);
        RMatrix { m: k.map(|row| row.map(|x| x * &c)) }
    }

    pub fn add(&self, o: &RMatrix) -> RMatrix {
        RMatrix { m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] + &o.m[i][j])) }
    }

    pub fn sub(&self, o: &RMatrix) -> RMatrix {
        RMatrix { m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] - &o.m[i][j])) }
    }

    pub fn neg(&self) -> RMatrix {
        RMatrix::zero().sub(self)
    }

    pub fn mul(&self, o: &RMatrix) -> RMatrix {
        RMatrix {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| (0..4).fold(Rational::zero(), |acc, k| acc + &self.m[i][k] * &o.m[k][j]))
            }),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.m[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    /// `r⁺ = ½H⊗H + 2E⊗F`.
    pub fn r_plus() -> RMatrix {
        RMatrix::tensor(rat(1, 2), &H, &H).add(&RMatrix::tensor(rat(2, 1), &E, &F))
    }

    /// `r⁻ = ½H⊗H + 2F⊗E`.
    pub fn r_minus() -> RMatrix {
        RMatrix::tensor(rat(1, 2), &H, &H).add(&RMatrix::tensor(rat(2, 1), &F, &E))
    }

    /// `r^ε`.
    pub fn r(sign: Sign) -> RMatrix {
        match sign {
            Sign::Plus => RMatrix::r_plus(),
            Sign::Minus => RMatrix::r_minus(),
        }
    }

    /// Skew part `r̄^ε`, with `r̄⁺ = E⊗F − F⊗E = −r̄⁻`.
    pub fn r_bar(sign: Sign) -> RMatrix {
        let p = RMatrix::tensor(Rational::one(), &E, &F).sub(&RMatrix::tensor(Rational::one(), &F, &E));
        match sign {
            Sign::Plus => p,
            Sign::Minus => p.neg(),
        }
    }

    /// Symmetric part `½H⊗H + E⊗F + F⊗E`.
    pub fn tau_sym() -> RMatrix {
        RMatrix::tensor(rat(1, 2), &H, &H)
            .add(&RMatrix::tensor(Rational::one(), &E, &F))
            .add(&RMatrix::tensor(Rational::one(), &F, &E))
    }

    /// `C ⊗ C` with `C = [[0, 1], [−1, 0]]`.
    pub fn c_tensor_c() -> RMatrix {
        let c = [[0, 1], [-1, 0]];
        RMatrix::tensor(Rational::one(), &c, &c)
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Left side of the classical Yang–Baxter equation,
/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`, as an 8×8 matrix.
pub fn cybe(r: &RMatrix) -> Vec<Vec<Rational>> {
    let idx = |a: usize, b: usize, c: usize| 4 * a + 2 * b + c;
    let embed = |pick: fn([usize; 3]) -> (usize, usize, usize)| {
        let mut out = vec![vec![Rational::zero(); 8]; 8];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for a2 in 0..2 {
                        for b2 in 0..2 {
                            for c2 in 0..2 {
                                let (i, j, k) = pick([a, b, c]);
                                let (i2, j2, k2) = pick([a2, b2, c2]);
                                if k != k2 {
                                    continue;
                                }
                                out[idx(a, b, c)][idx(a2, b2, c2)] = r.m[2 * i + j][2 * i2 + j2].clone();
                            }
                        }
                    }
                }
            }
        }
        out
    };
    // (first tensor factor, second tensor factor, spectator)
    let r12 = embed(|[a, b, c]| (a, b, c));
    let r13 = embed(|[a, b, c]| (a, c, b));
    let r23 = embed(|[a, b, c]| (b, c, a));
    let mul = |x: &Vec<Vec<Rational>>, y: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..8)
            .map(|i| (0..8).map(|j| (0..8).fold(Rational::zero(), |acc, k| acc + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    let comm = |x: &Vec<Vec<Rational>>, y: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        let (p, q) = (mul(x, y), mul(y, x));
        (0..8).map(|i| (0..8).map(|j| &p[i][j] - &q[i][j]).collect()).collect()
    };
    let terms = [comm(&r12, &r13), comm(&r12, &r23), comm(&r13, &r23)];
    (0..8).map(|i| (0..8).map(|j| terms.iter().fold(Rational::zero(), |acc, t| acc + &t[i][j])).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition() {
        for s in Sign::BOTH {
            assert_eq!(RMatrix::r(s).sub(&RMatrix::r_bar(s)), RMatrix::tau_sym());
        }
        assert_eq!(RMatrix::r_bar(Sign::Plus), RMatrix::r_bar(Sign::Minus).neg());
    }

    #[test]
    fn yang_baxter() {
        for s in Sign::BOTH {
            assert!(cybe(&RMatrix::r(s)).iter().flatten().all(Zero::is_zero));
        }
        // the symmetric part alone is not a solution
        assert!(!cybe(&RMatrix::tau_sym()).iter().flatten().all(Zero::is_zero));
    }

    #[test]
    fn conjugation_by_c_swaps_signs() {
        let cc = RMatrix::c_tensor_c();
        for s in Sign::BOTH {
            assert_eq!(cc.mul(&RMatrix::r_bar(s)), RMatrix::r_bar(s.flip()).mul(&cc));
            assert_eq!(cc.mul(&RMatrix::r(s)), RMatrix::r(s.flip()).mul(&cc));
        }
    }
}

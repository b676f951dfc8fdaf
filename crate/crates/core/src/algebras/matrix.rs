use crate::error::Result;
use crate::ncpoly::{Algebra, NCPoly};
use crate::scalar::Scalar;

/// A 2×2 matrix with entries in a (tensor) algebra.
///
/// Products keep the left-to-right order of entries, so noncommutative
/// entries multiply as written.
#[derive(Clone, Debug)]
pub struct Matrix2 {
    pub algebra: Algebra,
    pub entries: [[NCPoly; 2]; 2],
}

impl Matrix2 {
    pub fn new(algebra: &Algebra, entries: [[NCPoly; 2]; 2]) -> Matrix2 {
        Matrix2 { algebra: algebra.clone(), entries }
    }

    /// Integer matrix.
    pub fn constant(algebra: &Algebra, m: [[i64; 2]; 2]) -> Matrix2 {
        let r = algebra.ring();
        let entries = m.map(|row| row.map(|c| NCPoly::constant(Scalar::integer(r, c))));
        Matrix2::new(algebra, entries)
    }

    pub fn identity(algebra: &Algebra) -> Matrix2 {
        Matrix2::constant(algebra, [[1, 0], [0, 1]])
    }

    /// `C = [[0, 1], [−1, 0]]`.
    pub fn c(algebra: &Algebra) -> Matrix2 {
        Matrix2::constant(algebra, [[0, 1], [-1, 0]])
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &Matrix2) -> Result<Matrix2> {
        let a = &self.algebra;
        let mut out = Matrix2::constant(a, [[0, 0], [0, 0]]);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = a.zero();
                for k in 0..2 {
                    let x = &self.entries[i][k];
                    let y = &other.entries[k][j];
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&a.mul(x, y)?);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Left-to-right product of several matrices.
    pub fn product(items: &[Matrix2]) -> Result<Matrix2> {
        let mut it = items.iter();
        let first = it.next().expect("nonempty product").clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn sub(&self, other: &Matrix2) -> Matrix2 {
        let mut out = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].sub(&other.entries[i][j]);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix2 {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale(c);
            }
        }
        out
    }

    pub fn trace(&self) -> NCPoly {
        self.entries[0][0].add(&self.entries[1][1])
    }

    /// Entrywise `n`-th power.
    pub fn entrywise_pow(&self, n: u32) -> Result<Matrix2> {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = self.algebra.pow(e, n)?;
            }
        }
        Ok(out)
    }

    /// Apply a map to every entry.
    pub fn map(&self, target: &Algebra, mut f: impl FnMut(&NCPoly) -> Result<NCPoly>) -> Result<Matrix2> {
        let mut entries = self.entries.clone();
        for row in entries.iter_mut() {
            for e in row.iter_mut() {
                *e = f(e)?;
            }
        }
        Ok(Matrix2::new(target, entries))
    }

    /// Reduce every entry to normal form.
    pub fn normalized(&self) -> Result<Matrix2> {
        let a = self.algebra.clone();
        self.map(&a, |e| a.normal_form(e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(NCPoly::is_zero)
    }
}

use std::collections::HashMap;
use std::fmt;

use crate::algebras::{algebra, bigon_matrix, source, target, triangle_matrix, Edge, Matrix2, Surface};
use crate::error::{Result, SkeinError};
use crate::ncpoly::{Algebra, Gen, NCPoly, Sign, Word};
use crate::poisson::rmatrix::{pair_index, RMatrix};
use crate::scalar::{Ring, Scalar};

/// Orientation signs of the boundary arcs: `(b_L, b_R)` for the bigon,
/// `(a, b, c)` for the triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub signs: Vec<Sign>,
}

impl Orientation {
    /// Parse a comma-separated list of `+`/`-`.
    pub fn parse(text: &str) -> Result<Orientation> {
        let signs = text
            .split(',')
            .map(|s| {
                let s = s.trim();
                let mut cs = s.chars();
                match (cs.next().and_then(Sign::parse), cs.next()) {
                    (Some(x), None) => Ok(x),
                    _ => Err(SkeinError::UnknownName(format!("orientation sign `{s}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation { signs })
    }

    pub fn bigon(left: Sign, right: Sign) -> Orientation {
        Orientation { signs: vec![left, right] }
    }

    pub fn triangle(a: Sign, b: Sign, c: Sign) -> Orientation {
        Orientation { signs: vec![a, b, c] }
    }

    /// Every orientation of the surface's boundary arcs.
    pub fn all(surface: Surface) -> Vec<Orientation> {
        let n = Orientation::arity(surface);
        (0..1usize << n).map(|m| Orientation { signs: (0..n).map(|i| Sign::from_index((m >> i) & 1)).collect() }).collect()
    }

    fn arity(surface: Surface) -> usize {
        match surface {
            Surface::Bigon => 2,
            Surface::Triangle => 3,
        }
    }

    /// Reject a sign list of the wrong length.
    pub fn fit(&self, surface: Surface) -> Result<()> {
        if self.signs.len() == Orientation::arity(surface) {
            Ok(())
        } else {
            Err(SkeinError::UnknownName(format!("orientation {self} for the {surface}")))
        }
    }

    pub fn flipped(&self) -> Orientation {
        Orientation { signs: self.signs.iter().map(|s| s.flip()).collect() }
    }

    /// Sign of a triangle edge.
    pub fn edge(&self, e: Edge) -> Sign {
        self.signs[match e {
            Edge::A => 0,
            Edge::B => 1,
            Edge::C => 2,
        }]
    }

    /// `(𝔬(s(δ)), 𝔬(t(δ)))` for letter `l` of the surface.
    pub fn ends(&self, surface: Surface, l: usize) -> (Sign, Sign) {
        match surface {
            Surface::Bigon => (self.signs[0], self.signs[1]),
            Surface::Triangle => (self.edge(source(l)), self.edge(target(l))),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.signs.iter().map(|s| s.symbol().to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// 4×4 matrix with polynomial entries.
type PolyMat = Vec<Vec<NCPoly>>;

fn tensor(alg: &Algebra, a: &Matrix2, b: &Matrix2) -> Result<PolyMat> {
    (0..4)
        .map(|i| (0..4).map(|j| alg.mul(a.get(i / 2, j / 2), b.get(i % 2, j % 2))).collect())
        .collect()
}

fn scalar_mat(alg: &Algebra, r: &RMatrix) -> PolyMat {
    (0..4).map(|i| (0..4).map(|j| alg.scalar(Scalar::rational(alg.ring(), r.get(i, j).clone()))).collect()).collect()
}

fn mat_mul(alg: &Algebra, x: &PolyMat, y: &PolyMat) -> Result<PolyMat> {
    let mut out = vec![vec![alg.zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if !x[i][k].is_zero() && !y[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&alg.mul(&x[i][k], &y[k][j])?);
                }
            }
        }
    }
    Ok(out)
}

fn mat_add(x: &PolyMat, y: &PolyMat) -> PolyMat {
    (0..4).map(|i| (0..4).map(|j| x[i][j].add(&y[i][j])).collect()).collect()
}

/// Brackets of coordinate functions on a character variety, extended by Leibniz.
#[derive(Clone, Debug)]
pub struct BracketTable {
    pub algebra: Algebra,
    entries: HashMap<(Gen, Gen), NCPoly>,
}

impl BracketTable {
    /// Table filled from a bracket on pairs of generators.
    pub fn from_generators(alg: &Algebra, mut f: impl FnMut(&NCPoly, &NCPoly) -> Result<NCPoly>) -> Result<BracketTable> {
        let gens: Vec<(Gen, NCPoly)> = alg.generators().into_iter().map(|p| (single(&p), p)).collect();
        let mut entries = HashMap::new();
        for (g, p) in &gens {
            for (h, q) in &gens {
                let v = f(p, q)?;
                if !v.is_zero() {
                    entries.insert((*g, *h), v);
                }
            }
        }
        Ok(BracketTable { algebra: alg.clone(), entries })
    }

    /// `{g, h}` for generators.
    pub fn get(&self, g: Gen, h: Gen) -> NCPoly {
        self.entries.get(&(g, h)).cloned().unwrap_or_else(|| self.algebra.zero())
    }

    /// `{u, v}` through the Leibniz rule on words.
    pub fn bracket(&self, u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
        let alg = &self.algebra;
        let mut acc = alg.zero();
        for (w1, c1) in u.terms() {
            for (w2, c2) in v.terms() {
                let c = c1.try_mul(c2)?;
                for (i, &g) in w1.as_slice().iter().enumerate() {
                    for (j, &h) in w2.as_slice().iter().enumerate() {
                        let b = self.get(g, h);
                        if b.is_zero() {
                            continue;
                        }
                        let rest = |w: &Word, k: usize| {
                            let mut v = w.as_slice().to_vec();
                            v.remove(k);
                            NCPoly::word(alg.ring(), &v)
                        };
                        let t = alg.product(&[rest(w1, i), rest(w2, j), b])?;
                        acc.add_assign_scaled(&t, &c);
                    }
                }
            }
        }
        alg.normal_form(&acc)
    }
}

fn store(table: &mut HashMap<(Gen, Gen), NCPoly>, m: &PolyMat, rows: &Matrix2, cols: &Matrix2) {
    // entry [(ε, μ), (ε', μ')] is {rows_{εε'}, cols_{μμ'}}
    for e in Sign::BOTH {
        for f in Sign::BOTH {
            for m1 in Sign::BOTH {
                for m2 in Sign::BOTH {
                    let g = single(rows.get(e.index(), f.index()));
                    let h = single(cols.get(m1.index(), m2.index()));
                    let v = m[pair_index(e, m1)][pair_index(f, m2)].clone();
                    table.insert((h, g), v.neg());
                    table.insert((g, h), v);
                }
            }
        }
    }
}

fn single(p: &NCPoly) -> Gen {
    let (w, _) = p.leading().expect("generator");
    w.as_slice()[0]
}

/// The r-matrix bracket on the character variety of `surface` for orientation `o`.
///
/// Bigon: `{N ⊗ N} = r̄^{ε₁}(N⊗N) + (N⊗N)r̄^{ε₂}`. Triangle: the same formula for each
/// letter with the orientations of its source and target edge, and
/// `{N_δ ⊗ N_δ'} = −(N_δ ⊗ 1) r^{𝔬(e)} (1 ⊗ N_δ')` when `δ` ends on the edge `e`
/// where `δ'` starts.
pub fn r_matrix_bracket(surface: Surface, o: &Orientation) -> Result<BracketTable> {
    o.fit(surface)?;
    let alg = algebra(surface.charvar(), Ring::Laurent)?;
    let letters = match surface {
        Surface::Bigon => 1,
        Surface::Triangle => 3,
    };
    let mat = |l: usize| match surface {
        Surface::Bigon => bigon_matrix(&alg, 0),
        Surface::Triangle => triangle_matrix(&alg, 0, l),
    };
    let mut entries = HashMap::new();
    for l in 0..letters {
        let n = mat(l);
        let nn = tensor(&alg, &n, &n)?;
        let (s, t) = o.ends(surface, l);
        let m = mat_add(
            &mat_mul(&alg, &scalar_mat(&alg, &RMatrix::r_bar(s)), &nn)?,
            &mat_mul(&alg, &nn, &scalar_mat(&alg, &RMatrix::r_bar(t)))?,
        );
        store(&mut entries, &m, &n, &n);
    }
    if surface == Surface::Triangle {
        let id = Matrix2::identity(&alg);
        for l in 0..3 {
            // the letter starting where `l` ends
            let next = (0..3).find(|&k| source(k) == target(l)).expect("triangle letters chain");
            let (a, b) = (mat(l), mat(next));
            let r = scalar_mat(&alg, &RMatrix::r(o.edge(target(l))).neg());
            let m = mat_mul(&alg, &mat_mul(&alg, &tensor(&alg, &a, &id)?, &r)?, &tensor(&alg, &id, &b)?)?;
            store(&mut entries, &m, &a, &b);
        }
    }
    Ok(BracketTable { algebra: alg, entries })
}

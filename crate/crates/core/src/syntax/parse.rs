use crate::error::{Result, SkeinError};
use crate::frobenius::chebyshev_eval;
use crate::ncpoly::{Algebra, Generator, NCPoly, Sign};
use crate::scalar::{Rational, Ring, Scalar};

/// Surface syntax tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Rational literal.
    Number(Rational),
    /// `w`, `q`, `A` or `h`.
    Symbol(char),
    /// Generator atom with an optional slot suffix.
    Atom { name: String, states: Option<(Sign, Sign)>, slot: Option<usize> },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `T[n](x)`.
    Chebyshev(u32, Box<Expr>),
    /// `x ox y ox …`: consecutive tensor slots.
    Tensor(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Punct(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((pos, Tok::Num(chars[start..i].iter().map(|x| x.1).collect())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else if "+-*/^()[],@".contains(c) {
            out.push((pos, Tok::Punct(c)));
            i += 1;
        } else {
            return Err(SkeinError::Parse { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(SkeinError::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) { Ok(()) } else { self.err(format!("expected `{c}`")) }
    }

    fn integer(&mut self) -> Result<u64> {
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.at += 1;
                s.parse().or_else(|_| self.err("integer too large"))
            }
            _ => self.err("expected an integer"),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.tensor()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut parts = vec![self.product()?];
        while self.peek() == Some(&Tok::Ident("ox".into())) {
            self.at += 1;
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Expr::Tensor(parts) })
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let k = self.integer()? as i64;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn sign(&mut self) -> Result<Sign> {
        if self.eat('+') {
            Ok(Sign::Plus)
        } else if self.eat('-') {
            Ok(Sign::Minus)
        } else {
            self.err("expected a state `+` or `-`")
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.at += 1;
                let num: num_bigint::BigInt = s.parse().or_else(|_| self.err("bad number"))?;
                if self.eat('/') {
                    let den = self.integer()?;
                    if den == 0 {
                        return self.err("zero denominator");
                    }
                    return Ok(Expr::Number(Rational::new(num, den.into())));
                }
                Ok(Expr::Number(Rational::from_integer(num)))
            }
            Some(Tok::Punct('(')) => {
                self.at += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "T" && self.peek() == Some(&Tok::Punct('[')) {
                    self.at += 1;
                    let n = self.integer()?;
                    self.expect(']')?;
                    self.expect('(')?;
                    let e = self.sum()?;
                    self.expect(')')?;
                    return Ok(Expr::Chebyshev(n as u32, Box::new(e)));
                }
                if matches!(name.as_str(), "w" | "q" | "A" | "h") {
                    return Ok(Expr::Symbol(name.chars().next().expect("nonempty")));
                }
                if name == "ox" {
                    return self.err("`ox` needs operands on both sides");
                }
                let states = if self.eat('[') {
                    let e = self.sign()?;
                    self.expect(',')?;
                    let f = self.sign()?;
                    self.expect(']')?;
                    Some((e, f))
                } else {
                    None
                };
                let slot = if self.eat('@') { Some(self.integer()? as usize) } else { None };
                Ok(Expr::Atom { name, states, slot })
            }
            Some(Tok::Punct(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse text into a syntax tree.
pub fn parse_syntax(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.sum()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn symbol_value(ring: Ring, c: char) -> Result<Scalar> {
    match c {
        'w' => Ok(Scalar::omega_power(ring, 1)),
        'q' => Ok(Scalar::omega_power(ring, -4)),
        'A' => Ok(Scalar::omega_power(ring, -2)),
        'h' => Scalar::hbar(ring),
        _ => Err(SkeinError::InvalidRing(format!("`{c}` is not available in {ring}"))),
    }
}

fn lookup(alg: &Algebra, name: &str, states: Option<(Sign, Sign)>, slot: usize) -> Result<NCPoly> {
    let g = Generator { name: name.to_string(), states };
    let p = alg.factor(slot)?;
    if p.index_of(&g).is_none() && name == "x" && states.is_some() {
        // `x[..]` names the bigon generators
        let alt = Generator { name: "a".into(), states };
        if let Ok(found) = alg.named(slot, &alt) {
            return Ok(found);
        }
    }
    alg.named(slot, &g)
}

/// Evaluate a tree in `alg`, without reducing.
pub fn elaborate(alg: &Algebra, e: &Expr) -> Result<NCPoly> {
    eval(alg, e, 0)
}

fn eval(alg: &Algebra, e: &Expr, offset: usize) -> Result<NCPoly> {
    let ring = alg.ring();
    Ok(match e {
        Expr::Number(q) => alg.scalar(Scalar::rational(ring, q.clone())),
        Expr::Symbol(c) => alg.scalar(symbol_value(ring, *c)?),
        Expr::Atom { name, states, slot } => {
            let s = offset + slot.unwrap_or(0);
            if s >= alg.slots() {
                return Err(SkeinError::SlotOutOfRange { slot: s, slots: alg.slots() });
            }
            lookup(alg, name, *states, s)?
        }
        Expr::Add(a, b) => eval(alg, a, offset)?.add(&eval(alg, b, offset)?),
        Expr::Sub(a, b) => eval(alg, a, offset)?.sub(&eval(alg, b, offset)?),
        Expr::Mul(a, b) => alg.mul(&eval(alg, a, offset)?, &eval(alg, b, offset)?)?,
        Expr::Neg(a) => eval(alg, a, offset)?.neg(),
        Expr::Pow(a, k) => {
            let base = eval(alg, a, offset)?;
            if *k >= 0 {
                alg.pow(&base, *k as u32)?
            } else {
                let c = constant_of(&base).ok_or_else(|| {
                    SkeinError::Unsupported("negative powers are defined for scalars only".into())
                })?;
                let inv = c.invert_unit()?;
                alg.pow(&alg.scalar(inv), k.unsigned_abs() as u32)?
            }
        }
        Expr::Chebyshev(n, a) => chebyshev_eval(*n, &eval(alg, a, offset)?, alg)?,
        Expr::Tensor(parts) => {
            let mut acc = alg.one();
            for (i, p) in parts.iter().enumerate() {
                acc = alg.mul(&acc, &eval(alg, p, offset + i)?)?;
            }
            acc
        }
    })
}

fn constant_of(p: &NCPoly) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero(p.ring()));
    }
    match p.leading() {
        Some((w, c)) if p.len() == 1 && w.is_empty() => Some(c.clone()),
        _ => None,
    }
}

/// Parse and reduce to normal form in `alg`.
pub fn parse_expr(text: &str, alg: &Algebra) -> Result<NCPoly> {
    let e = parse_syntax(text)?;
    alg.normal_form(&elaborate(alg, &e)?)
}

/// Parse a scalar expression in `ring`.
pub fn parse_scalar(text: &str, ring: Ring) -> Result<Scalar> {
    let alg = Algebra::scalars(ring);
    let p = parse_expr(text, &alg)?;
    constant_of(&p).ok_or_else(|| SkeinError::Parse { pos: 0, msg: format!("`{text}` is not a scalar") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{algebra, Builtin};

    #[test]
    fn precedence() {
        let e = parse_syntax("1 + 2*3^2").unwrap();
        let alg = Algebra::scalars(Ring::Laurent);
        assert_eq!(elaborate(&alg, &e).unwrap(), alg.scalar(Scalar::integer(Ring::Laurent, 19)));
    }

    #[test]
    fn negative_scalar_power() {
        let s = parse_scalar("w^-4 * q^-1", Ring::Laurent).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn rationals_and_dual() {
        let s = parse_scalar("3/2*h + 1", Ring::Dual).unwrap();
        assert_eq!(s.to_string(), "1 + 3/2*h");
    }

    #[test]
    fn errors_carry_positions() {
        let alg = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
        match parse_expr("a[+,+] * ", &alg) {
            Err(SkeinError::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("z[+,+]", &alg), Err(SkeinError::UnknownGenerator(_))));
        assert!(matches!(parse_expr("a[+,+]@1", &alg), Err(SkeinError::SlotOutOfRange { .. })));
    }

    #[test]
    fn bigon_alias() {
        let alg = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
        assert_eq!(parse_expr("x[+,-]", &alg).unwrap(), parse_expr("a[+,-]", &alg).unwrap());
    }

    #[test]
    fn tensor_separator_places_slots() {
        let b = algebra(Builtin::Bigon, Ring::Laurent).unwrap();
        let bb = Algebra::tensor(&[&b, &b]).unwrap();
        let lhs = parse_expr("a[+,+] ox a[-,-] + 1", &bb).unwrap();
        let rhs = parse_expr("a[-,-]@1*a[+,+]@0 + 1", &bb).unwrap();
        assert_eq!(lhs, rhs);
    }
}

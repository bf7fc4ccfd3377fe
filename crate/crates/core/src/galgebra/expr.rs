//! Polynomial expression syntax: `+ - * ^`, parentheses, integer and
//! rational coefficients (`3/2*x`), identifiers `[A-Za-z_][A-Za-z0-9_]*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, BigRational),
    Pow(Box<Expr>, u32),
}

/// Something expressions can be evaluated into.
pub trait EvalTarget {
    type V: Clone;
    fn constant(&self, q: &BigRational) -> Result<Self::V>;
    fn var(&self, name: &str) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn neg(&self, a: &Self::V) -> Result<Self::V>;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn scale(&self, a: &Self::V, q: &BigRational) -> Result<Self::V>;
}

impl Expr {
    pub fn eval<T: EvalTarget>(&self, t: &T) -> Result<T::V> {
        match self {
            Expr::Num(q) => t.constant(q),
            Expr::Var(v) => t.var(v),
            Expr::Add(a, b) => t.add(&a.eval(t)?, &b.eval(t)?),
            Expr::Sub(a, b) => t.add(&a.eval(t)?, &t.neg(&b.eval(t)?)?),
            Expr::Neg(a) => t.neg(&a.eval(t)?),
            Expr::Mul(a, b) => {
                // keep scalar factors as scalings so degree bookkeeping stays simple
                if let Expr::Num(q) = a.as_ref() {
                    return t.scale(&b.eval(t)?, q);
                }
                if let Expr::Num(q) = b.as_ref() {
                    return t.scale(&a.eval(t)?, q);
                }
                t.mul(&a.eval(t)?, &b.eval(t)?)
            }
            Expr::Div(a, q) => t.scale(&a.eval(t)?, &q.recip()),
            Expr::Pow(a, n) => {
                let base = a.eval(t)?;
                if *n == 0 {
                    return t.constant(&BigRational::one());
                }
                let mut acc = base.clone();
                for _ in 1..*n {
                    acc = t.mul(&acc, &base)?;
                }
                Ok(acc)
            }
        }
    }

    /// Identifiers occurring in the expression, in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Neg(a) | Expr::Div(a, _) | Expr::Pow(a, _) => a.collect_vars(out),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let err = |m: String| Error::Parse { input: s.to_string(), message: m };
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[st..i].iter().collect();
            out.push(Tok::Num(lit.parse().map_err(|_| err(format!("bad number {lit}")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character '{c}' at position {i}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, m: &str) -> Error {
        Error::Parse { input: self.src.to_string(), message: format!("{m} (token {})", self.pos) }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                let d = self.factor()?;
                let Expr::Num(q) = d else {
                    return Err(self.err("division only by a numeric constant"));
                };
                if q.is_zero() {
                    return Err(self.err("division by zero"));
                }
                lhs = fold_div(lhs, q);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) && is_numeric(&lhs) {
                // implicit product after a coefficient: `2a3`, `3(x+y)`
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing ')'"));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            _ => Err(self.err("unexpected end or operator")),
        }
    }
}

fn is_numeric(e: &Expr) -> bool {
    matches!(e, Expr::Num(_))
}

fn fold_div(lhs: Expr, q: BigRational) -> Expr {
    match lhs {
        Expr::Num(n) => Expr::Num(n / q),
        other => Expr::Div(Box::new(other), q),
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { input: s.to_string(), message: "empty expression".into() });
    }
    let mut p = Parser { src: s, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_witness_forms() {
        let e = parse_expr("a2+2*a3+2*a5+3*a6-a8+6*a9-a10").unwrap();
        assert_eq!(e.variables().len(), 7);
        let e = parse_expr("(a2+a12)*a19").unwrap();
        assert!(matches!(e, Expr::Mul(_, _)));
        assert!(parse_expr("x^2+y*z").is_ok());
        assert!(parse_expr("3/2*x - 1/3 y").is_ok());
        assert!(parse_expr("-x").is_ok());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expr("").is_err());
        assert!(parse_expr("x +").is_err());
        assert!(parse_expr("x $ y").is_err());
        assert!(parse_expr("x/y").is_err());
        assert!(parse_expr("(x+y").is_err());
    }
}

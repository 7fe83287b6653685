//! A small arithmetic expression evaluator for user-supplied charts.
//!
//! Grammar (precedence climbing): `+ -` < `* /` < unary `-` < `^`
//! (right-associative), parentheses, the variables `u`, `v`, the constants
//! `pi`, `e`, and the functions `sin cos tan sinh cosh tanh exp ln sqrt
//! abs asin acos atan`.
//!
//! Expressions only provide positions; charts built from them use
//! finite-difference jets.

use anyhow::{anyhow, bail, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit()
                        || bytes[i] == '.'
                        || bytes[i] == 'e'
                        || bytes[i] == 'E'
                        || ((bytes[i] == '+' || bytes[i] == '-')
                            && i > start
                            && (bytes[i - 1] == 'e' || bytes[i - 1] == 'E')))
                {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                let value: f64 = text
                    .parse()
                    .map_err(|_| anyhow!("invalid number literal {text:?}"))?;
                toks.push(Tok::Num(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => bail!("unexpected character {other:?} in expression"),
        }
    }
    Ok(toks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Ln,
    Sqrt,
    Abs,
    Asin,
    Acos,
    Atan,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "tanh" => Func::Tanh,
            "exp" => Func::Exp,
            "ln" | "log" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            "asin" => Func::Asin,
            "acos" => Func::Acos,
            "atan" => Func::Atan,
            _ => return None,
        })
    }

    fn apply(self, x: f64) -> f64 {
        match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Sinh => x.sinh(),
            Func::Cosh => x.cosh(),
            Func::Tanh => x.tanh(),
            Func::Exp => x.exp(),
            Func::Ln => x.ln(),
            Func::Sqrt => x.sqrt(),
            Func::Abs => x.abs(),
            Func::Asin => x.asin(),
            Func::Acos => x.acos(),
            Func::Atan => x.atan(),
        }
    }
}

/// A parsed expression in the variables `u`, `v`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    U,
    V,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            bail!("trailing tokens after expression in {src:?}");
        }
        Ok(e)
    }

    pub fn eval(&self, u: f64, v: f64) -> f64 {
        match self {
            Expr::Num(x) => *x,
            Expr::U => u,
            Expr::V => v,
            Expr::Neg(e) => -e.eval(u, v),
            Expr::Add(a, b) => a.eval(u, v) + b.eval(u, v),
            Expr::Sub(a, b) => a.eval(u, v) - b.eval(u, v),
            Expr::Mul(a, b) => a.eval(u, v) * b.eval(u, v),
            Expr::Div(a, b) => a.eval(u, v) / b.eval(u, v),
            Expr::Pow(a, b) => a.eval(u, v).powf(b.eval(u, v)),
            Expr::Call(f, e) => f.apply(e.eval(u, v)),
        }
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            // Right-associative; the exponent may itself be signed.
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Num(x)) => Ok(Expr::Num(x)),
            Some(Tok::Ident(name)) => match name.as_str() {
                "u" => Ok(Expr::U),
                "v" => Ok(Expr::V),
                "pi" => Ok(Expr::Num(std::f64::consts::PI)),
                "e" => Ok(Expr::Num(std::f64::consts::E)),
                _ => {
                    let f = Func::from_name(&name)
                        .ok_or_else(|| anyhow!("unknown identifier {name:?}"))?;
                    match self.bump() {
                        Some(Tok::LParen) => {}
                        _ => bail!("expected '(' after function {name}"),
                    }
                    let arg = self.expr()?;
                    match self.bump() {
                        Some(Tok::RParen) => {}
                        _ => bail!("missing ')' after argument of {name}"),
                    }
                    Ok(Expr::Call(f, Box::new(arg)))
                }
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => bail!("missing closing parenthesis"),
                }
            }
            other => bail!("unexpected token {other:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn parses_arithmetic_with_precedence() {
        let e = Expr::parse("1 + 2 * 3 ^ 2 - 4 / 2").unwrap();
        assert_relative_eq!(e.eval(0.0, 0.0), 1.0 + 18.0 - 2.0);
    }

    #[test]
    fn variables_and_functions() {
        let e = Expr::parse("u^2 - v^2 + sin(pi * u)").unwrap();
        assert_relative_eq!(e.eval(2.0, 1.0), 4.0 - 1.0 + (2.0 * std::f64::consts::PI).sin(), epsilon = 1e-12);
        let e = Expr::parse("2*u*v").unwrap();
        assert_relative_eq!(e.eval(3.0, -0.5), -3.0);
    }

    #[test]
    fn unary_minus_and_right_assoc_power() {
        let e = Expr::parse("-u^2").unwrap();
        assert_relative_eq!(e.eval(3.0, 0.0), -9.0);
        let e = Expr::parse("2^3^2").unwrap();
        assert_relative_eq!(e.eval(0.0, 0.0), 512.0);
        let e = Expr::parse("2^-1").unwrap();
        assert_relative_eq!(e.eval(0.0, 0.0), 0.5);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Expr::parse("1 +").is_err());
        assert!(Expr::parse("foo(u)").is_err());
        assert!(Expr::parse("sin u").is_err());
        assert!(Expr::parse("(u").is_err());
        assert!(Expr::parse("u v").is_err());
        assert!(Expr::parse("1..2").is_err());
    }
}

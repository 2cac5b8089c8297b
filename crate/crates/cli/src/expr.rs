//! Polynomial expressions: `+ - * ^`, parentheses, integer and `a/b`
//! literals over the variables `x, y, z, t, u`.
//!
//! Precedence from tightest: `^`, unary `-`, `*`, binary `+ -`. There is no
//! implicit multiplication, so `2x` and `x y` are errors.

use std::fmt;

use germs::poly::{Polynomial, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Variables accepted in user input.
pub const INPUT_VARS: [Var; 5] = [Var::X, Var::Y, Var::Z, Var::T, Var::U];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error at {}:{}: {m}", self.line, self.col),
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable '{v}' at {}:{} (expected x, y, z, t or u)", self.line, self.col)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Num(BigRational),
    Var(Var),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

impl ExprAst {
    pub fn lower(&self) -> Polynomial {
        match self {
            ExprAst::Num(c) => Polynomial::constant(c.clone()),
            ExprAst::Var(v) => Polynomial::var(*v),
            ExprAst::Neg(a) => -a.lower(),
            ExprAst::Add(a, b) => &a.lower() + &b.lower(),
            ExprAst::Sub(a, b) => &a.lower() - &b.lower(),
            ExprAst::Mul(a, b) => &a.lower() * &b.lower(),
            ExprAst::Pow(a, e) => a.lower().pow(*e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Ident(s)
        } else if "+-*^/()".contains(c) {
            chars.next();
            col += 1;
            Tok::Op(c)
        } else {
            return Err(ParseError { kind: ParseErrorKind::Syntax(format!("unexpected character '{c}'")), line, col });
        };
        out.push(Token { tok, line: l0, col: c0 });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError { kind: ParseErrorKind::Syntax(msg.into()), line: t.line, col: t.col })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Op(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        while let Tok::Op(c @ ('+' | '-')) = *self.peek() {
            self.next();
            let rhs = self.term()?;
            lhs = if c == '+' { ExprAst::Add(lhs.into(), rhs.into()) } else { ExprAst::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Op('*') {
            self.next();
            let rhs = self.unary()?;
            lhs = ExprAst::Mul(lhs.into(), rhs.into());
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if *self.peek() == Tok::Op('-') {
            self.next();
            return Ok(ExprAst::Neg(self.unary()?.into()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.next();
        let Tok::Int(n) = self.peek().clone() else {
            return self.error(format!("expected a non-negative integer exponent, found {}", self.describe()));
        };
        let Ok(e) = u32::try_from(n) else {
            return self.error("exponent too large");
        };
        self.next();
        if *self.peek() == Tok::Op('^') {
            return self.error("chained '^' is ambiguous; use parentheses");
        }
        Ok(ExprAst::Pow(base.into(), e))
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                if *self.peek() != Tok::Op('/') {
                    return Ok(ExprAst::Num(BigRational::from_integer(n)));
                }
                self.next();
                let Tok::Int(d) = self.peek().clone() else {
                    return self.error(format!("expected a denominator, found {}", self.describe()));
                };
                if d.is_zero() {
                    return self.error("zero denominator");
                }
                self.next();
                Ok(ExprAst::Num(BigRational::new(n, d)))
            }
            Tok::Ident(name) => {
                let t = &self.toks[self.pos];
                let (line, col) = (t.line, t.col);
                match Var::from_name(&name).filter(|v| INPUT_VARS.contains(v)) {
                    Some(v) => {
                        self.next();
                        Ok(ExprAst::Var(v))
                    }
                    None => Err(ParseError { kind: ParseErrorKind::UnknownVariable(name), line, col }),
                }
            }
            Tok::Op('(') => {
                self.next();
                let e = self.expr()?;
                if *self.peek() != Tok::Op(')') {
                    return self.error(format!("expected ')', found {}", self.describe()));
                }
                self.next();
                Ok(e)
            }
            _ => self.error(format!("expected a number, variable or '(', found {}", self.describe())),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(src: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("expected an operator, found {}", p.describe()));
    }
    Ok(e)
}

pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    Ok(parse_expr(src)?.lower())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax_at(src: &str) -> (usize, usize) {
        match parse_expr(src) {
            Err(ParseError { kind: ParseErrorKind::Syntax(_), line, col }) => (line, col),
            other => panic!("{src}: {other:?}"),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_polynomial("-x^2").unwrap(), -Polynomial::var(Var::X).pow(2));
        assert_eq!(parse_polynomial("2*x+3*x").unwrap(), parse_polynomial("5*x").unwrap());
        assert_eq!(parse_polynomial("x - y - x").unwrap(), -Polynomial::var(Var::Y));
        assert_eq!(parse_polynomial("(x+y)^2 - x^2 - y^2").unwrap(), parse_polynomial("2*x*y").unwrap());
        assert_eq!(parse_polynomial("--x").unwrap(), Polynomial::var(Var::X));
    }

    #[test]
    fn literals() {
        let p = parse_polynomial("3/6*u^2").unwrap();
        assert_eq!(p.to_string(), "1/2*u^2");
        assert_eq!(parse_polynomial("y^16 + x*y^15").unwrap().len(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(syntax_at("y^^2"), (1, 3));
        assert_eq!(syntax_at("x y"), (1, 3));
        assert_eq!(syntax_at("2x"), (1, 2));
        assert_eq!(syntax_at("x +\n  * y"), (2, 3));
        assert_eq!(syntax_at("x^-1"), (1, 3));
        assert_eq!(syntax_at("(x"), (1, 3));
        assert_eq!(syntax_at("1/0"), (1, 3));
        assert!(matches!(
            parse_expr("x + w"),
            Err(ParseError { kind: ParseErrorKind::UnknownVariable(ref v), line: 1, col: 5 }) if v == "w"
        ));
        assert!(matches!(parse_expr("v"), Err(ParseError { kind: ParseErrorKind::UnknownVariable(_), .. })));
    }
}

//! Recursive-descent parser for algebra expressions.
//!
//! Grammar:
//! ```text
//! expr     := ('-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' exponent)?
//! atom     := identifier | 'q' | 't' | rational | '(' expr ')'
//! rational := integer ('/' integer)?
//! exponent := integer | '(' ('-')? integer ('/' ('2'|'4'))? ')'
//! ```
//! Products are noncommutative and order-preserving on generators; `q`, `t`
//! and rational literals are central. The same parser handles both the
//! fifteen-generator alphabet and the trace-coordinate alphabet used by the
//! character-variety module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::free::FreeElement;
use crate::gens::Gen;
use crate::qt::QTLaurent;

/// Parse failure with byte offset and the tokens that would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected {}", self.offset, self.expected)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// Resolved symbol index in the active alphabet.
    Sym(u16),
    Q,
    T,
    Rational(BigRational),
    Paren(Box<Ast>),
}

/// Exponent `num / den` with `den` one of 1, 2, 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exponent {
    pub num: i32,
    pub den: u8,
}

impl Exponent {
    /// Exponent in quarter units, when it is a multiple of 1/4.
    pub fn quarters(&self) -> i32 {
        self.num * (4 / self.den as i32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Sum(Vec<(bool, Ast)>), // sign: true = negative
    Prod(Vec<Ast>),
    Pow(Box<Atom>, Exponent, usize), // offset for error reporting
    Atom(Atom),
}

/// Symbol alphabets the parser can resolve identifiers against.
pub trait Alphabet {
    fn resolve(&self, ident: &str) -> Option<u16>;
    /// Whether bare `q` and `t` denote the ring parameters.
    fn has_parameters(&self) -> bool {
        true
    }
}

/// The fifteen `O..` generators plus `q`, `t`.
pub struct GenAlphabet;

impl Alphabet for GenAlphabet {
    fn resolve(&self, ident: &str) -> Option<u16> {
        Gen::from_name(ident).map(|g| g.0 as u16)
    }
}

/// Alphabet backed by an explicit name list, parameters disabled.
pub struct NamedAlphabet<'a>(pub &'a [&'a str]);

impl Alphabet for NamedAlphabet<'_> {
    fn resolve(&self, ident: &str) -> Option<u16> {
        self.0.iter().position(|&n| n == ident).map(|i| i as u16)
    }

    fn has_parameters(&self) -> bool {
        false
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: &'a dyn Alphabet,
}

impl<'a> Parser<'a> {
    fn err(&self, expected: &str) -> SyntaxError {
        SyntaxError { offset: self.pos, expected: expected.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), SyntaxError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn integer(&mut self) -> Result<BigInt, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        } else {
            None
        }
    }

    fn atom(&mut self) -> Result<Atom, SyntaxError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(Atom::Paren(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                self.skip_ws();
                if self.pos < self.src.len() && self.src[self.pos] == b'/' {
                    self.pos += 1;
                    let den = self.integer()?;
                    Ok(Atom::Rational(BigRational::new(num, den)))
                } else {
                    Ok(Atom::Rational(BigRational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().unwrap();
                if self.alphabet.has_parameters() {
                    if name == "q" {
                        return Ok(Atom::Q);
                    }
                    if name == "t" {
                        return Ok(Atom::T);
                    }
                }
                match self.alphabet.resolve(name) {
                    Some(i) => Ok(Atom::Sym(i)),
                    None => Err(SyntaxError {
                        offset: start,
                        expected: "known generator name".to_string(),
                    }),
                }
            }
            _ => Err(self.err("generator, 'q', 't', rational or '('")),
        }
    }

    fn exponent(&mut self) -> Result<Exponent, SyntaxError> {
        // Bounded so downstream exponent arithmetic stays far from overflow.
        const MAX_EXP: i32 = 1 << 20;
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let num: BigInt = self.integer()?;
            let mut num: i32 = num
                .try_into()
                .ok()
                .filter(|n| *n <= MAX_EXP)
                .ok_or_else(|| self.err("exponent within bounds"))?;
            if neg {
                num = -num;
            }
            let den = if self.eat(b'/') {
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b'2') => {
                        self.pos += 1;
                        2
                    }
                    Some(b'4') => {
                        self.pos += 1;
                        4
                    }
                    _ => return Err(self.err("'2' or '4'")),
                }
            } else {
                1
            };
            self.expect(b')', "')'")?;
            Ok(Exponent { num, den })
        } else {
            let num: BigInt = self.integer()?;
            let num: i32 = num
                .try_into()
                .ok()
                .filter(|n| *n <= MAX_EXP)
                .ok_or_else(|| self.err("exponent within bounds"))?;
            Ok(Exponent { num, den: 1 })
        }
    }

    fn factor(&mut self) -> Result<Ast, SyntaxError> {
        self.skip_ws();
        let at = self.pos;
        let a = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            Ok(Ast::Pow(Box::new(a), e, at))
        } else {
            Ok(Ast::Atom(a))
        }
    }

    fn term(&mut self) -> Result<Ast, SyntaxError> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(Ast::Prod(factors))
    }

    fn expr(&mut self) -> Result<Ast, SyntaxError> {
        let mut parts = Vec::new();
        let neg = self.eat(b'-');
        parts.push((neg, self.term()?));
        loop {
            if self.eat(b'+') {
                parts.push((false, self.term()?));
            } else if self.eat(b'-') {
                parts.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(Ast::Sum(parts))
    }
}

pub fn parse_ast(src: &str, alphabet: &dyn Alphabet) -> Result<Ast, SyntaxError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, alphabet };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("operator or end of input"));
    }
    Ok(ast)
}

/// Evaluation target: an algebra with scalars [`QTLaurent`] and indexed symbols.
pub trait EvalTarget: Sized {
    fn one() -> Self;
    fn sym(i: u16) -> Self;
    fn scalar(c: QTLaurent) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl EvalTarget for FreeElement {
    fn one() -> Self {
        FreeElement::one()
    }
    fn sym(i: u16) -> Self {
        FreeElement::gen(Gen(i as u8))
    }
    fn scalar(c: QTLaurent) -> Self {
        FreeElement::term(vec![], c)
    }
    fn add(&self, other: &Self) -> Self {
        FreeElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FreeElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FreeElement::mul(self, other)
    }
}

fn eval_atom<T: EvalTarget>(a: &Atom) -> Result<T, SyntaxError> {
    Ok(match a {
        Atom::Sym(i) => T::sym(*i),
        Atom::Q => T::scalar(QTLaurent::q_pow(4)),
        Atom::T => T::scalar(QTLaurent::t_pow(4)),
        Atom::Rational(r) => T::scalar(QTLaurent::monomial(0, 0, r.clone())),
        Atom::Paren(inner) => eval_ast(inner)?,
    })
}

fn eval_pow<T: EvalTarget>(a: &Atom, e: Exponent, at: usize) -> Result<T, SyntaxError> {
    let frac_err = |what: &str| SyntaxError { offset: at, expected: what.to_string() };
    match a {
        Atom::Q => Ok(T::scalar(QTLaurent::q_pow(e.quarters()))),
        Atom::T => Ok(T::scalar(QTLaurent::t_pow(e.quarters()))),
        Atom::Rational(r) => {
            if e.den != 1 {
                return Err(frac_err("integer exponent on rational"));
            }
            let mut c = BigRational::one();
            for _ in 0..e.num.unsigned_abs() {
                c *= r;
            }
            if e.num < 0 {
                c = c.recip();
            }
            Ok(T::scalar(QTLaurent::monomial(0, 0, c)))
        }
        _ => {
            if e.den != 1 || e.num < 0 {
                return Err(frac_err("nonnegative integer exponent on generator"));
            }
            if e.num > 4096 {
                return Err(frac_err("generator exponent at most 4096"));
            }
            let base: T = eval_atom(a)?;
            let mut out = T::one();
            for _ in 0..e.num {
                out = out.mul(&base);
            }
            Ok(out)
        }
    }
}

pub fn eval_ast<T: EvalTarget>(ast: &Ast) -> Result<T, SyntaxError> {
    match ast {
        Ast::Atom(a) => eval_atom(a),
        Ast::Pow(a, e, at) => eval_pow(a, *e, *at),
        Ast::Prod(fs) => {
            let mut out = T::one();
            for f in fs {
                out = out.mul(&eval_ast(f)?);
            }
            Ok(out)
        }
        Ast::Sum(parts) => {
            let mut out: Option<T> = None;
            for (neg, part) in parts {
                let v: T = eval_ast(part)?;
                out = Some(match out {
                    None => {
                        if *neg {
                            T::scalar(QTLaurent::zero()).sub(&v)
                        } else {
                            v
                        }
                    }
                    Some(acc) => {
                        if *neg {
                            acc.sub(&v)
                        } else {
                            acc.add(&v)
                        }
                    }
                });
            }
            Ok(out.unwrap())
        }
    }
}

/// Parse an expression in the fifteen generators into a free-algebra element.
pub fn parse_free(src: &str) -> Result<FreeElement, SyntaxError> {
    eval_ast(&parse_ast(src, &GenAlphabet)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::NormalMonomial;

    #[test]
    fn parses_d1_image() {
        let e = parse_free("q^(1/4)*O1*O2 - q^(1/2)*O12").unwrap();
        assert_eq!(e.terms.len(), 2);
        let w = vec![Gen::from_name("O1").unwrap(), Gen::from_name("O2").unwrap()];
        assert_eq!(e.terms.get(&w).unwrap(), &QTLaurent::q_pow(1));
    }

    #[test]
    fn power_zero_is_unit() {
        let e = parse_free("O1^0").unwrap();
        assert_eq!(e, FreeElement::one());
    }

    #[test]
    fn unknown_generator_rejected() {
        let err = parse_free("O7").unwrap_err();
        assert_eq!(err.offset, 0);
    }

    #[test]
    fn rational_literals() {
        let e = parse_free("1/3*O1 + (1/2)*O2").unwrap();
        assert_eq!(e.terms.len(), 2);
    }

    #[test]
    fn noncommutative_order_preserved() {
        let ab = parse_free("O2*O1").unwrap();
        let ba = parse_free("O1*O2").unwrap();
        assert_ne!(ab, ba);
        let w: Vec<Gen> = ab.terms.keys().next().unwrap().clone();
        assert_eq!(NormalMonomial::from_word(&w).to_string(), "O1*O2");
    }

    #[test]
    fn negative_exponents_on_parameters() {
        let e = parse_free("q^(-3/2)*t^(-1/2)").unwrap();
        let c = e.terms.get(&vec![]).unwrap();
        assert_eq!(c, &QTLaurent::monomial(-6, -2, num_rational::BigRational::one()));
    }
}

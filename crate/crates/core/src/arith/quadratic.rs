//! The real quadratic field generated by √5 over an exact ordered base field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{OrderedField, Sign};

/// `a + b·√5`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt5<T> {
    pub a: T,
    pub b: T,
}

impl<T: OrderedField> QSqrt5<T> {
    pub fn new(a: T, b: T) -> Self {
        QSqrt5 { a, b }
    }

    pub fn from_base(a: T) -> Self {
        QSqrt5 { a, b: T::zero() }
    }

    pub fn sqrt5() -> Self {
        QSqrt5 { a: T::zero(), b: T::one() }
    }

    pub fn conjugate(&self) -> Self {
        QSqrt5 { a: self.a.clone(), b: -self.b.clone() }
    }

    /// `a² − 5b²`, which lies in the base field.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_integer(5) * self.b.clone() * self.b.clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            // √5 is irrational, so the norm only vanishes at zero
            return None;
        }
        let c = self.conjugate();
        Some(QSqrt5 { a: c.a / n.clone(), b: c.b / n })
    }
}

impl<T: OrderedField> Zero for QSqrt5<T> {
    fn zero() -> Self {
        QSqrt5 { a: T::zero(), b: T::zero() }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: OrderedField> One for QSqrt5<T> {
    fn one() -> Self {
        QSqrt5 { a: T::one(), b: T::zero() }
    }
}

impl<T: OrderedField> Add for QSqrt5<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QSqrt5 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<T: OrderedField> Sub for QSqrt5<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QSqrt5 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl<T: OrderedField> Mul for QSqrt5<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let five = T::from_integer(5);
        QSqrt5 {
            a: self.a.clone() * rhs.a.clone() + five * self.b.clone() * rhs.b.clone(),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl<T: OrderedField> Div for QSqrt5<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Q(sqrt5)")
    }
}

impl<T: OrderedField> Neg for QSqrt5<T> {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt5 { a: -self.a, b: -self.b }
    }
}

impl<T: OrderedField> OrderedField for QSqrt5<T> {
    /// Decided by the signs of `a`, `b` and, when they disagree, `a²` vs `5b²`.
    fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (s, Sign::Zero) | (Sign::Zero, s) => s,
            (x, y) if x == y => x,
            _ => {
                // a and b have opposite signs: a dominates iff a² > 5b²
                let five = T::from_integer(5);
                let lhs = self.a.clone() * self.a.clone();
                let rhs = five * self.b.clone() * self.b.clone();
                match lhs.cmp_exact(&rhs) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => unreachable!("sqrt5 is irrational"),
                }
            }
        }
    }

    fn from_integer(n: i64) -> Self {
        QSqrt5::from_base(T::from_integer(n))
    }
}

impl<T: fmt::Display + OrderedField> fmt::Display for QSqrt5<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*s5", self.b),
            (false, false) => {
                if self.b.sign() == Sign::Neg {
                    write!(f, "({}-{}*s5)", self.a, -self.b.clone())
                } else {
                    write!(f, "({}+{}*s5)", self.a, self.b)
                }
            }
        }
    }
}

/// Error from [`parse_field_element`]: 0-based character offset and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFieldError {
    pub offset: usize,
    pub message: String,
}

type Q5 = QSqrt5<BigRational>;

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> ExprParser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseFieldError> {
        Err(ParseFieldError { offset: self.pos, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    // sum := term (('+'|'-') term)*
    fn sum(&mut self) -> Result<Q5, ParseFieldError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> Result<Q5, ParseFieldError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(ParseFieldError { offset: at, message: "division by zero".into() });
                    }
                    acc = acc / d;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Q5, ParseFieldError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Q5, ParseFieldError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Some('s') => {
                if self.chars.get(self.pos + 1) == Some(&'5') {
                    self.pos += 2;
                    Ok(Q5::sqrt5())
                } else {
                    self.err("expected `s5`")
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().expect("digits");
                Ok(Q5::from_base(BigRational::from_integer(n)))
            }
            Some(c) => self.err(format!("unexpected character `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses expressions such as `3`, `-2/7`, `(1+1*s5)/4` or `1/4+1/4*s5`.
///
/// Accepted: integer literals, the token `s5`, parentheses, unary sign and
/// the binary operators `+ - * /`. No whitespace inside an element.
pub fn parse_field_element(src: &str) -> Result<Q5, ParseFieldError> {
    let mut p = ExprParser { chars: src.chars().collect(), pos: 0, _src: src };
    if p.chars.is_empty() {
        return p.err("empty field element");
    }
    let v = p.sum()?;
    if p.pos != p.chars.len() {
        return p.err("trailing characters");
    }
    Ok(v)
}

impl FromStr for QSqrt5<BigRational> {
    type Err = ParseFieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_field_element(s)
    }
}

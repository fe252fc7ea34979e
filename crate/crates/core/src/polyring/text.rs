//! Textual form of polynomials.
//!
//! Terms are printed in ascending exponent order and joined by ` + `; each
//! term is `c*A^e` (or `c*t^(e/4)` for Jones polynomials, whose exponents are
//! quarter-units of `t`). A zero exponent prints the bare coefficient and the
//! zero polynomial prints `0`. The parser accepts that form and the usual
//! hand-written variants (`-A^-3 - 2/3*A`, `t^(1/2) - t^2`, `-t^(5/2)`).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPolynomial;
use crate::error::{Error, Result};

/// How exponents of the stored variable are displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    /// The bracket variable `A`, integer exponents.
    A,
    /// `t`, with stored exponents counted in quarters.
    T,
}

impl Variable {
    pub fn symbol(self) -> char {
        match self {
            Variable::A => 'A',
            Variable::T => 't',
        }
    }
}

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn render(p: &LaurentPolynomial, var: Variable) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = p
        .terms()
        .map(|(e, c)| {
            let coef = format_rational(c);
            match (e, var) {
                (0, _) => coef,
                (_, Variable::A) => format!("{coef}*A^{e}"),
                (_, Variable::T) => format!("{coef}*t^({e}/4)"),
            }
        })
        .collect();
    parts.join(" + ")
}

/// Display adapter binding a polynomial to a variable.
pub struct Rendered<'a>(pub &'a LaurentPolynomial, pub Variable);

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.0, self.1))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Variable::A))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::parse(1, format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let v: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
        Ok(if neg { -v } else { v })
    }

    /// `p` or `p/q` with unsigned `p`.
    fn unsigned_rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.eat('/') {
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn exponent(&mut self, var: Variable) -> Result<i64> {
        if !self.eat('^') {
            return Ok(match var {
                Variable::A => 1,
                Variable::T => 4,
            });
        }
        let value = if self.eat('(') {
            let v = self.signed_rational()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            v
        } else {
            BigRational::from_integer(self.integer()?)
        };
        let scaled = match var {
            Variable::A => value,
            Variable::T => value * BigRational::from_integer(4.into()),
        };
        if !scaled.is_integer() {
            return Err(self.err("exponent is not representable"));
        }
        scaled
            .numer()
            .try_into()
            .map_err(|_| self.err("exponent out of range"))
    }

    fn signed_rational(&mut self) -> Result<BigRational> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.unsigned_rational()?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses a polynomial written in the given variable.
pub fn parse(src: &str, var: Variable) -> Result<LaurentPolynomial> {
    let mut cur = Cursor::new(src);
    let sym = var.symbol();
    let mut terms: Vec<(i64, BigRational)> = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut negative = false;
        if cur.eat('-') {
            negative = true;
        } else if !cur.eat('+') && !first {
            return Err(cur.err("expected '+' or '-'"));
        }
        // `a + -b` is the canonical rendering of a negative coefficient
        while let Some(c) = cur.peek() {
            if c == '-' {
                negative = !negative;
                cur.pos += 1;
            } else if c == '+' {
                cur.pos += 1;
            } else {
                break;
            }
        }
        first = false;
        let mut coef = BigRational::one();
        let mut has_coef = false;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            coef = cur.unsigned_rational()?;
            has_coef = true;
        }
        let mut exp = 0;
        if has_coef && cur.peek() == Some('*') {
            cur.pos += 1;
            if !cur.eat(sym) {
                return Err(cur.err(&format!("expected '{sym}'")));
            }
            exp = cur.exponent(var)?;
        } else if cur.eat(sym) {
            exp = cur.exponent(var)?;
        } else if !has_coef {
            return Err(cur.err("expected a term"));
        }
        if negative {
            coef = -coef;
        }
        terms.push((exp, coef));
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_ascending_terms() {
        let p = LaurentPolynomial::from_int_terms(&[(2, -1), (10, -1)]);
        assert_eq!(render(&p, Variable::T), "-1*t^(2/4) + -1*t^(10/4)");
        assert_eq!(render(&LaurentPolynomial::one(), Variable::T), "1");
        assert_eq!(render(&LaurentPolynomial::zero(), Variable::A), "0");
        let q = LaurentPolynomial::from_terms([(-3, BigRational::new(2.into(), 3.into()))]);
        assert_eq!(render(&q, Variable::A), "2/3*A^-3");
    }

    #[test]
    fn parses_hand_written_forms() {
        let p = parse("-t^(1/2) - t^(5/2)", Variable::T).unwrap();
        assert_eq!(p, LaurentPolynomial::from_int_terms(&[(2, -1), (10, -1)]));
        let q = parse("-A^4 - A^-4", Variable::A).unwrap();
        assert_eq!(q, LaurentPolynomial::from_int_terms(&[(4, -1), (-4, -1)]));
        let r = parse("t - t^4 + t^3", Variable::T).unwrap();
        assert_eq!(r, LaurentPolynomial::from_int_terms(&[(4, 1), (12, 1), (16, -1)]));
        assert_eq!(parse("0", Variable::A).unwrap(), LaurentPolynomial::zero());
        assert!(parse("A^(1/2)", Variable::A).is_err());
        assert!(parse("t^(1/8)", Variable::T).is_err());
        assert!(parse("", Variable::A).is_err());
    }

    #[test]
    fn round_trips_rendering() {
        let p = LaurentPolynomial::from_terms([
            (-7, BigRational::new((-3).into(), 4.into())),
            (0, BigRational::from_integer(5.into())),
            (9, BigRational::from_integer((-1).into())),
        ]);
        for var in [Variable::A, Variable::T] {
            assert_eq!(parse(&render(&p, var), var).unwrap(), p);
        }
    }
}

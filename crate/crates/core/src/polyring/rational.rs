use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::text::{parse, render, Variable};
use super::{poly_gcd, LaurentPolynomial};
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials in reduced canonical form.
///
/// Numerator and denominator are coprime, the denominator has lowest
/// exponent 0 and leading coefficient 1, and zero is `0/1`. Equality of
/// canonical forms is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    numerator: LaurentPolynomial,
    denominator: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&numerator, &denominator)?;
        let mut num = numerator.div_exact(&g).expect("gcd divides numerator");
        let mut den = denominator.div_exact(&g).expect("gcd divides denominator");
        let lo = den.min_exponent().unwrap();
        num = num.shift(-lo);
        den = den.shift(-lo);
        let lead = den.leading_coefficient().unwrap().clone();
        if !lead.is_one() {
            let inv = BigRational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn zero() -> Self {
        Self {
            numerator: LaurentPolynomial::zero(),
            denominator: LaurentPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(LaurentPolynomial::one())
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        Self::new(p, LaurentPolynomial::one()).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The polynomial this function equals, if its denominator is a unit.
    pub fn as_polynomial(&self) -> Option<LaurentPolynomial> {
        (self.denominator.len() == 1).then(|| {
            let (e, c) = self.denominator.terms().next().unwrap();
            self.numerator.scale(&(BigRational::one() / c.clone())).shift(-e)
        })
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// Parses the output of [`RationalFunction::render`]: a polynomial, or
    /// `(p)/(q)`.
    pub fn parse(src: &str, var: Variable) -> Result<Self> {
        let s = src.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            if let Some((num, den)) = inner.split_once(")/(") {
                return Self::new(parse(num, var)?, parse(den, var)?);
            }
        }
        Ok(Self::from_polynomial(parse(s, var)?))
    }

    pub fn render(&self, var: Variable) -> String {
        if self.denominator.is_one() {
            render(&self.numerator, var)
        } else {
            format!(
                "({})/({})",
                render(&self.numerator, var),
                render(&self.denominator, var)
            )
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.numerator * &rhs.denominator + &rhs.numerator * &self.denominator;
        let den = &self.denominator * &rhs.denominator;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Variable::A))
    }
}

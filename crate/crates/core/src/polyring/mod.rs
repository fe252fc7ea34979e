//! Exact Laurent polynomials over the rationals and their fraction field.
//!
//! Bracket-level values live in the variable `A`. Jones-level values live in
//! `x = t^(1/4)`, so `t^(1/2)` is stored as exponent 2 and no fractional
//! exponent ever appears.

mod laurent;
mod rational;
pub mod text;

pub use laurent::LaurentPolynomial;
pub use rational::RationalFunction;
pub use text::{parse, render, Rendered, Variable};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

fn normalized(p: &LaurentPolynomial) -> LaurentPolynomial {
    let Some(lo) = p.min_exponent() else {
        return LaurentPolynomial::zero();
    };
    let shifted = p.shift(-lo);
    let lead = shifted.leading_coefficient().unwrap().clone();
    shifted.scale(&(BigRational::one() / lead))
}

/// Greatest common divisor, normalized to lowest exponent 0 and leading
/// coefficient 1.
///
/// Powers of the variable are units in the Laurent ring, so both inputs are
/// first shifted to ordinary polynomials and the Euclidean algorithm runs
/// over the rationals.
pub fn poly_gcd(a: &LaurentPolynomial, b: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let mut x = normalized(a);
    let mut y = normalized(b);
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = normalized(&r);
    }
    Ok(normalized(&x))
}

/// Kauffman function to Jones polynomial: `A -> t^(-1/4)`, so each term
/// `c*A^e` becomes `c*x^(-e)` with `x = t^(1/4)`.
pub fn substitute_jones(p: &LaurentPolynomial) -> LaurentPolynomial {
    p.mirror()
}

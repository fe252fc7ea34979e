use std::collections::BTreeMap;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in one variable with exact rational coefficients.
///
/// Stored as a map from exponent to a nonzero coefficient, so structural
/// equality is polynomial equality and zero is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn constant(c: impl Into<BigRational>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: impl Into<BigRational>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `-A^2 - A^-2`, the value of a crossing-free circle.
    pub fn delta() -> Self {
        Self::from_int_terms(&[(-2, -1), (2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigRational>,
    {
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigRational::zero) += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-exponent term.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates this polynomial at `value` by Horner's rule.
    ///
    /// Only defined when every exponent is nonnegative; returns `None` otherwise.
    pub fn substitute(&self, value: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        let (lo, hi) = match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        if lo < 0 {
            return None;
        }
        let mut acc = Self::zero();
        for e in (0..=hi).rev() {
            acc = &acc * value;
            if let Some(c) = self.terms.get(&e) {
                acc += Self::constant(c.clone());
            }
        }
        Some(acc)
    }

    /// Long division from the top: repeatedly cancels the highest term of the
    /// remainder until its highest exponent drops below the divisor's. For
    /// ordinary polynomials this is Euclidean division.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d_hi = divisor.max_exponent().unwrap();
        let lead = divisor.leading_coefficient().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some(r_hi) = rem.max_exponent() {
            if r_hi < d_hi {
                break;
            }
            let c = rem.terms.get(&r_hi).unwrap() / &lead;
            let e = r_hi - d_hi;
            rem -= divisor.shift(e).scale(&c);
            quot.insert(e, c);
        }
        (Self { terms: quot }, rem)
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_lo, a_hi) = (self.min_exponent()?, self.max_exponent()?);
        let (d_lo, d_hi) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let q_lo = a_lo - d_lo;
        let q_hi = a_hi - d_hi;
        if q_hi < q_lo {
            return None;
        }
        let lead = divisor.leading_coefficient()?;
        if self.is_integral() && divisor.is_integral() && lead.numer().abs().is_one() {
            return exact_div_integral(self, divisor, q_lo, q_hi);
        }
        let mut rem = Dense::from_poly(self);
        let dd = Dense::from_poly(divisor);
        let mut quot = BTreeMap::new();
        for e in (q_lo..=q_hi).rev() {
            let top = e + d_hi;
            let c = rem.get(top);
            if c.is_zero() {
                continue;
            }
            let q = c / lead;
            for (i, dc) in dd.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let idx = (e + dd.offset + i as i64 - rem.offset) as usize;
                    rem.coeffs[idx] -= &q * dc;
                }
            }
            quot.insert(e, q);
        }
        if rem.coeffs.iter().all(|c| c.is_zero()) {
            Some(Self { terms: quot })
        } else {
            None
        }
    }

    fn from_dense_int(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, BigRational::from_integer(c)))
            .collect();
        Self { terms }
    }
}

struct Dense {
    offset: i64,
    coeffs: Vec<BigRational>,
}

impl Dense {
    fn from_poly(p: &LaurentPolynomial) -> Self {
        let lo = p.min_exponent().unwrap_or(0);
        let hi = p.max_exponent().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e - lo) as usize] = c.clone();
        }
        Dense { offset: lo, coeffs }
    }

    fn get(&self, e: i64) -> BigRational {
        let i = e - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }
}

fn int_dense(p: &LaurentPolynomial) -> (i64, Vec<BigInt>) {
    let lo = p.min_exponent().unwrap_or(0);
    let hi = p.max_exponent().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        coeffs[(e - lo) as usize] = c.numer().clone();
    }
    (lo, coeffs)
}

fn exact_div_integral(
    a: &LaurentPolynomial,
    d: &LaurentPolynomial,
    q_lo: i64,
    q_hi: i64,
) -> Option<LaurentPolynomial> {
    let (r_off, mut rem) = int_dense(a);
    let (d_off, dd) = int_dense(d);
    let d_hi = d.max_exponent()?;
    let negative_lead = d.leading_coefficient()?.is_negative();
    let mut quot = vec![BigInt::zero(); (q_hi - q_lo + 1) as usize];
    for e in (q_lo..=q_hi).rev() {
        let top = (e + d_hi - r_off) as usize;
        if rem[top].is_zero() {
            continue;
        }
        let q = if negative_lead {
            -rem[top].clone()
        } else {
            rem[top].clone()
        };
        let base = (e + d_off - r_off) as usize;
        for (i, dc) in dd.iter().enumerate() {
            if !dc.is_zero() {
                rem[base + i] -= &q * dc;
            }
        }
        quot[(e - q_lo) as usize] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(LaurentPolynomial::from_dense_int(q_lo, quot))
    } else {
        None
    }
}

fn mul_polys(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    if a.is_zero() || b.is_zero() {
        return LaurentPolynomial::zero();
    }
    if a.len() == 1 || b.len() == 1 {
        let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        let (e, c) = single.terms().next().unwrap();
        return other.scale(c).shift(e);
    }
    let lo = a.min_exponent().unwrap() + b.min_exponent().unwrap();
    let hi = a.max_exponent().unwrap() + b.max_exponent().unwrap();
    let width = (hi - lo + 1) as usize;
    if a.is_integral() && b.is_integral() {
        let mut acc = vec![BigInt::zero(); width];
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                acc[(ea + eb - lo) as usize] += ca.numer() * cb.numer();
            }
        }
        return LaurentPolynomial::from_dense_int(lo, acc);
    }
    let mut acc = vec![BigRational::zero(); width];
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            acc[(ea + eb - lo) as usize] += ca * cb;
        }
    }
    let terms = acc
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (lo + i as i64, c))
        .collect();
    LaurentPolynomial { terms }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(&e);
            }
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
            *slot -= c;
            if slot.is_zero() {
                self.terms.remove(&e);
            }
        }
    }
}

impl MulAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn mul_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = mul_polys(self, rhs);
    }
}

macro_rules! forward_ops {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(mut self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_ops!(Add, add, add_assign);
forward_ops!(Sub, sub, sub_assign);
forward_ops!(Mul, mul, mul_assign);

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: LaurentPolynomial) {
        *self -= &rhs;
    }
}

impl MulAssign for LaurentPolynomial {
    fn mul_assign(&mut self, rhs: LaurentPolynomial) {
        *self *= &rhs;
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -(self.clone())
    }
}

impl Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a LaurentPolynomial> for LaurentPolynomial {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl Product for LaurentPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }
}

impl From<BigRational> for LaurentPolynomial {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

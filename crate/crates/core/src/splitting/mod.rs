//! Splitting matrices, their exact inverses, and verification of the
//! splitting identities on cut presentations.
//!
//! Every matrix entry is a power of `delta`, so elimination runs over the
//! integer polynomial ring in `delta` and `delta = -x^2 - x^-2` is
//! substituted at the end. `x` is `A` for the bracket matrix and `t^(1/4)`
//! for the Jones matrices; in both cases the entries are the same Laurent
//! polynomials.

pub mod linalg;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::cut::{glue, restricted_brackets, surgery, CutPresentation, Side};
use crate::diagram::{bracket_state_sum, jones, writhe, PlanarDiagram};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_all, enumerate_nc, SetPartition};
use crate::polyring::{LaurentPolynomial, RationalFunction, Variable};
use linalg::PolyMatrix;

/// Largest `n` built without an explicit override.
pub const SIZE_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// Bracket-level matrix in `A`, indexed by noncrossing partitions.
    M,
    /// Jones-level matrix in `t`, indexed by noncrossing partitions.
    D,
    /// Exponent `|A v B| - 1` in `t`, indexed by all partitions.
    Lindstrom,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::M => "M",
            MatrixKind::D => "d",
            MatrixKind::Lindstrom => "lindstrom",
        }
    }

    pub fn variable(self) -> Variable {
        match self {
            MatrixKind::M => Variable::A,
            MatrixKind::D | MatrixKind::Lindstrom => Variable::T,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(MatrixKind::M),
            "d" | "D" => Ok(MatrixKind::D),
            "lindstrom" => Ok(MatrixKind::Lindstrom),
            _ => Err(Error::parse(1, format!("unknown matrix kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingMatrix {
    n: usize,
    kind: MatrixKind,
    order: Vec<SetPartition>,
    exponents: Vec<Vec<u32>>,
}

impl SplittingMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn variable(&self) -> Variable {
        self.kind.variable()
    }

    /// Row and column labels.
    pub fn order(&self) -> &[SetPartition] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Power of `delta` at `(i, j)`.
    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        self.exponents[i][j]
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentPolynomial {
        LaurentPolynomial::delta().pow(self.exponents[i][j])
    }

    pub fn entries(&self) -> PolyMatrix {
        let max = self.exponents.iter().flatten().copied().max().unwrap_or(0);
        let powers = crate::diagram::delta_powers(max as usize);
        self.exponents
            .iter()
            .map(|row| row.iter().map(|&e| powers[e as usize].clone()).collect())
            .collect()
    }

    /// The matrix over the polynomial ring in `delta` itself.
    pub fn delta_entries(&self) -> PolyMatrix {
        self.exponents
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| LaurentPolynomial::from_int_terms(&[(e as i64, 1)]))
                    .collect()
            })
            .collect()
    }
}

/// `n - |A ^ B| + |A v B| - 1`, the exponent of the noncrossing matrices.
pub fn splitting_exponent(a: &SetPartition, b: &SetPartition) -> Result<u32> {
    let meet = a.meet(b)?.block_count();
    let join = a.join(b)?.block_count();
    Ok((a.n() + join - meet - 1) as u32)
}

pub fn build_matrix(n: usize, kind: MatrixKind) -> Result<SplittingMatrix> {
    build_matrix_with(n, kind, false)
}

/// As [`build_matrix`], with `allow_large` lifting the size guard.
pub fn build_matrix_with(n: usize, kind: MatrixKind, allow_large: bool) -> Result<SplittingMatrix> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > SIZE_LIMIT && !allow_large {
        return Err(Error::SizeGuard(n));
    }
    let order = match kind {
        MatrixKind::M | MatrixKind::D => enumerate_nc(n)?,
        MatrixKind::Lindstrom => enumerate_all(n)?,
    };
    let exponent = |a: &SetPartition, b: &SetPartition| -> Result<u32> {
        match kind {
            MatrixKind::Lindstrom => Ok(a.join(b)?.block_count() as u32 - 1),
            _ => splitting_exponent(a, b),
        }
    };
    let exponents = order
        .iter()
        .map(|a| order.iter().map(|b| exponent(a, b)).collect())
        .collect::<Result<_>>()?;
    Ok(SplittingMatrix {
        n,
        kind,
        order,
        exponents,
    })
}

fn substitute_delta(p: &LaurentPolynomial) -> LaurentPolynomial {
    p.substitute(&LaurentPolynomial::delta())
        .expect("polynomials in delta have no negative powers")
}

/// Determinant as a polynomial in `delta`.
pub fn delta_determinant(m: &SplittingMatrix) -> LaurentPolynomial {
    linalg::determinant(&m.delta_entries())
}

pub fn determinant(m: &SplittingMatrix) -> LaurentPolynomial {
    substitute_delta(&delta_determinant(m))
}

/// Exact inverse of a splitting matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inverse {
    pub determinant: LaurentPolynomial,
    /// `determinant * inverse`.
    pub adjugate: PolyMatrix,
    pub inverse: Vec<Vec<RationalFunction>>,
}

/// Determinant and adjugate without the rational inverse.
pub fn adjugate(m: &SplittingMatrix) -> Result<(LaurentPolynomial, PolyMatrix)> {
    let (det, adj) = linalg::determinant_and_adjugate(&m.delta_entries()).ok_or(Error::SingularMatrix)?;
    let adj = adj
        .iter()
        .map(|row| row.iter().map(substitute_delta).collect())
        .collect();
    Ok((substitute_delta(&det), adj))
}

pub fn invert_matrix(m: &SplittingMatrix) -> Result<Inverse> {
    let (det, adj) = adjugate(m)?;
    let inverse = adj
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| RationalFunction::new(e.clone(), det.clone()))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(Inverse {
        determinant: det,
        adjugate: adj,
        inverse,
    })
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: String,
    pub n: usize,
    pub kind: MatrixKind,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
    pub holds: bool,
    pub elapsed: Duration,
}

impl Report {
    pub fn variable(&self) -> Variable {
        self.kind.variable()
    }
}

fn report(
    identity: String,
    n: usize,
    kind: MatrixKind,
    lhs: LaurentPolynomial,
    rhs: LaurentPolynomial,
    start: Instant,
) -> Report {
    Report {
        identity,
        n,
        kind,
        holds: lhs == rhs,
        lhs,
        rhs,
        elapsed: start.elapsed(),
    }
}

/// `<L> = sum M[A][B] <L1>_A <L2>_B`.
pub fn verify_identity_one(c: &CutPresentation) -> Result<Report> {
    let start = Instant::now();
    let m = build_matrix(c.n(), MatrixKind::M)?.entries();
    let lhs = bracket_state_sum(&glue(c)?);
    let r1 = restricted_brackets(c, Side::One)?;
    let r2 = restricted_brackets(c, Side::Two)?;
    let mut rhs = LaurentPolynomial::zero();
    for (i, x) in r1.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in r2.iter().enumerate() {
            if !y.is_zero() {
                rhs += &(&m[i][j] * x) * y;
            }
        }
    }
    Ok(report(
        "identity-one".into(),
        c.n(),
        MatrixKind::M,
        lhs,
        rhs,
        start,
    ))
}

/// `<L_side^p> = sum_B M[p][B] <L_side>_B`.
pub fn verify_corollary_two(c: &CutPresentation, side: Side, p: &SetPartition) -> Result<Report> {
    let start = Instant::now();
    let matrix = build_matrix(c.n(), MatrixKind::M)?;
    let lhs = bracket_state_sum(&surgery(c, side, p)?);
    let i = matrix
        .order()
        .iter()
        .position(|q| q == p)
        .ok_or_else(|| Error::CrossingPartition(p.to_string()))?;
    let r = restricted_brackets(c, side)?;
    let rhs = r
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| matrix.entry(i, j) * x)
        .sum();
    let name = format!("corollary-two side={} partition={p}", side.number());
    Ok(report(name, c.n(), MatrixKind::M, lhs, rhs, start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Bracket,
    Jones,
}

impl Level {
    /// Bracket or Jones polynomial of `d`.
    pub fn value(self, d: &PlanarDiagram) -> LaurentPolynomial {
        match self {
            Level::Bracket => bracket_state_sum(d),
            Level::Jones => jones(d),
        }
    }

    pub fn kind(self) -> MatrixKind {
        match self {
            Level::Bracket => MatrixKind::M,
            Level::Jones => MatrixKind::D,
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bracket" => Ok(Level::Bracket),
            "jones" => Ok(Level::Jones),
            _ => Err(Error::parse(1, format!("unknown level {s:?}"))),
        }
    }
}

/// Checks that the writhe and the positive and negative crossing counts of
/// every pair of surgeries add up to those of the glued diagram.
pub fn check_crossing_additivity(c: &CutPresentation) -> Result<bool> {
    let l = glue(c)?;
    let order = enumerate_nc(c.n())?;
    let side = |s| -> Result<Vec<(i64, usize, usize)>> {
        order
            .iter()
            .map(|p| {
                let d = surgery(c, s, p)?;
                Ok((writhe(&d), d.positive_count(), d.negative_count()))
            })
            .collect()
    };
    let (one, two) = (side(Side::One)?, side(Side::Two)?);
    Ok(one.iter().all(|a| {
        two.iter().all(|b| {
            a.0 + b.0 == writhe(&l) && a.1 + b.1 == l.positive_count() && a.2 + b.2 == l.negative_count()
        })
    }))
}

/// Division-free splitting formula: `det * value(L) = v1^T adj v2`, where
/// `v_i` lists the values of the surgeries of side `i`.
pub fn verify_splitting(c: &CutPresentation, level: Level) -> Result<Report> {
    let start = Instant::now();
    let kind = level.kind();
    let name = match level {
        Level::Bracket => "splitting-bracket",
        Level::Jones => "splitting-jones",
    };
    let value = |d: &PlanarDiagram| level.value(d);
    let matrix = build_matrix(c.n(), kind)?;
    if level == Level::Jones && !check_crossing_additivity(c)? {
        let zero = LaurentPolynomial::zero();
        let mut r = report(
            format!("{name} (writhe additivity)"),
            c.n(),
            kind,
            zero.clone(),
            zero,
            start,
        );
        r.holds = false;
        return Ok(r);
    }
    let (det, adj) = adjugate(&matrix)?;
    let values = |side| -> Result<Vec<LaurentPolynomial>> {
        matrix
            .order()
            .iter()
            .map(|p| Ok(value(&surgery(c, side, p)?)))
            .collect()
    };
    let v1 = values(Side::One)?;
    let v2 = values(Side::Two)?;
    let lhs = &det * &value(&glue(c)?);
    let mut rhs = LaurentPolynomial::zero();
    for (i, x) in v1.iter().enumerate() {
        let row: LaurentPolynomial = adj[i].iter().zip(&v2).map(|(a, y)| a * y).sum();
        rhs += x * &row;
    }
    Ok(report(name.into(), c.n(), kind, lhs, rhs, start))
}

/// The terms of the splitting formula without clearing denominators:
/// `sum c[A][B] value(L1^A) value(L2^B)` as a rational function.
pub fn splitting_sum(c: &CutPresentation, level: Level) -> Result<RationalFunction> {
    let kind = level.kind();
    let matrix = build_matrix(c.n(), kind)?;
    let inv = invert_matrix(&matrix)?;
    let value = |d: &PlanarDiagram| level.value(d);
    let mut total = RationalFunction::zero();
    for (i, a) in matrix.order().iter().enumerate() {
        let x = value(&surgery(c, Side::One, a)?);
        for (j, b) in matrix.order().iter().enumerate() {
            let y = value(&surgery(c, Side::Two, b)?);
            let term = &inv.inverse[i][j] * &RationalFunction::from_polynomial(&x * &y);
            total = &total + &term;
        }
    }
    Ok(total)
}

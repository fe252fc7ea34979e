//! Exact elimination over a polynomial ring.

use crate::polyring::LaurentPolynomial;

pub type PolyMatrix = Vec<Vec<LaurentPolynomial>>;

fn exact(num: &LaurentPolynomial, den: &LaurentPolynomial) -> LaurentPolynomial {
    num.div_exact(den)
        .expect("fraction-free elimination divides exactly")
}

fn pivot_row(a: &PolyMatrix, k: usize) -> Option<usize> {
    (k..a.len()).find(|&i| !a[i][k].is_zero())
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &PolyMatrix) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        let Some(p) = pivot_row(&a, k) else {
            return LaurentPolynomial::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let num = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = exact(&num, &prev);
            }
            row[k] = LaurentPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant and adjugate by fraction-free Gauss-Jordan elimination of
/// `[m | I]`, or `None` when `m` is singular.
pub fn determinant_and_adjugate(m: &PolyMatrix) -> Option<(LaurentPolynomial, PolyMatrix)> {
    let n = m.len();
    let mut a: PolyMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    LaurentPolynomial::one()
                } else {
                    LaurentPolynomial::zero()
                }
            }));
            r
        })
        .collect();
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        let p = pivot_row(&a, k)?;
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let pivot = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let num = &row[j] * &pivot[k] - &factor * &pivot[j];
                row[j] = exact(&num, &prev);
            }
            row[k] = LaurentPolynomial::zero();
        }
        prev = pivot[k].clone();
    }
    // every row has now been scaled to the last pivot, which is +-det
    let fix = |p: LaurentPolynomial| if negate { -p } else { p };
    let det = fix(a[n - 1][n - 1].clone());
    let adj = a
        .into_iter()
        .map(|row| row.into_iter().skip(n).map(fix).collect())
        .collect();
    Some((det, adj))
}

/// Determinant by cofactor expansion along the first row. Exponential;
/// meant as an independent check for small orders.
pub fn cofactor_determinant(m: &PolyMatrix) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let cols: Vec<usize> = (0..n).collect();
    expand(m, 0, &cols)
}

fn expand(m: &PolyMatrix, row: usize, cols: &[usize]) -> LaurentPolynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = LaurentPolynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &expand(m, row + 1, &rest);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn multiply(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

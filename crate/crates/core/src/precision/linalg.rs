use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// `∏_{i<j} (a_i - a_j)`. The empty and singleton products are `unit`.
pub fn vandermonde<R: Ring>(values: &[R], unit: &R) -> R {
    let mut acc = unit.clone();
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            acc = acc.times(&a.minus(b));
        }
    }
    acc
}

/// Vandermonde product taking its unit from the first entry; `None` for an
/// empty list.
pub fn vandermonde_with<R: Ring>(values: &[R]) -> Option<R> {
    values.first().map(|v| vandermonde(values, &v.one_like()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminantMode {
    /// Partial-pivoted Gaussian elimination.
    Elimination,
    /// Laplace expansion; exact ring arithmetic, only for size <= 4.
    Cofactor,
}

fn check_square<T>(matrix: &[Vec<T>]) -> Result<usize> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::invalid("determinant of an empty matrix"));
    }
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("determinant of a non-square matrix"));
    }
    Ok(n)
}

/// Determinant by partial-pivoted elimination. A column without any
/// non-zero candidate pivot yields zero.
pub fn determinant<F: Field>(matrix: &[Vec<F>]) -> Result<F> {
    let n = check_square(matrix)?;
    let mut a: Vec<Vec<F>> = matrix.to_vec();
    let mut det = a[0][0].one_like();
    for k in 0..n {
        let mut pivot: Option<usize> = None;
        for i in k..n {
            if a[i][k].is_zero() {
                continue;
            }
            pivot = match pivot {
                Some(p) if a[p][k].magnitude() >= a[i][k].magnitude() => Some(p),
                _ => Some(i),
            };
        }
        let Some(p) = pivot else {
            return Ok(a[0][0].zero_like());
        };
        if p != k {
            a.swap(p, k);
            det = det.negate();
        }
        let inv = a[k][k].inverse().expect("pivot is non-zero");
        det = det.times(&a[k][k]);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].times(&inv);
            let (upper, lower) = a.split_at_mut(i);
            let pivot_row = &upper[k];
            for (x, y) in lower[0][k..].iter_mut().zip(&pivot_row[k..]) {
                *x = x.minus(&factor.times(y));
            }
        }
    }
    Ok(det)
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant_cofactor<R: Ring>(matrix: &[Vec<R>]) -> Result<R> {
    let n = check_square(matrix)?;
    if n > 4 {
        return Err(Error::invalid(format!(
            "cofactor mode supports size <= 4, got {n}"
        )));
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(matrix, 0, &cols))
}

fn laplace<R: Ring>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = m[row][cols[0]].zero_like();
    for (pos, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].times(&laplace(m, row + 1, &rest));
        acc = if pos % 2 == 0 {
            acc.plus(&term)
        } else {
            acc.minus(&term)
        };
    }
    acc
}

pub fn determinant_with_mode<F: Field>(matrix: &[Vec<F>], mode: DeterminantMode) -> Result<F> {
    match mode {
        DeterminantMode::Elimination => determinant(matrix),
        DeterminantMode::Cofactor => determinant_cofactor(matrix),
    }
}

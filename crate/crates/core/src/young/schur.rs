//! Schur functions, (m|n) super-Schur functions and supercharacters.
//!
//! The tableau sums are the exact ground truth; the bialternant is the fast
//! path for pairwise distinct complex arguments.

use rug::Float;

use super::{is_hook_covariant, KIndices, Partition, SuperDiagram};
use crate::error::{Error, Result};
use crate::precision::{determinant, vandermonde, BigComplex, Precision, Ring};

/// Letters `0..bosonic` are bosonic, the rest fermionic. Bosonic letters
/// weakly increase along rows and strictly down columns; fermionic letters
/// do the opposite.
fn admissible(letter: usize, left: Option<usize>, above: Option<usize>, bosonic: usize) -> bool {
    let is_bos = letter < bosonic;
    if let Some(l) = left {
        if letter < l || (letter == l && !is_bos) {
            return false;
        }
    }
    if let Some(a) = above {
        if letter < a || (letter == a && is_bos) {
            return false;
        }
    }
    true
}

struct TableauSum<'a, R> {
    shape: &'a Partition,
    cells: Vec<(usize, usize)>,
    weights: &'a [R],
    bosonic: usize,
    grid: Vec<Vec<usize>>,
}

impl<'a, R: Ring> TableauSum<'a, R> {
    fn new(shape: &'a Partition, weights: &'a [R], bosonic: usize) -> Self {
        TableauSum {
            shape,
            cells: shape.cells().collect(),
            weights,
            bosonic,
            grid: shape.rows().iter().map(|&r| vec![0; r]).collect(),
        }
    }

    fn run(&mut self, unit: &R) -> R {
        let mut acc = unit.zero_like();
        self.fill(0, unit.clone(), &mut acc);
        acc
    }

    fn fill(&mut self, idx: usize, prod: R, acc: &mut R) {
        if idx == self.cells.len() {
            *acc = acc.plus(&prod);
            return;
        }
        let (i, j) = self.cells[idx];
        let left = (j > 0).then(|| self.grid[i][j - 1]);
        let above = (i > 0).then(|| self.grid[i - 1][j]);
        let lo = left.into_iter().chain(above).max().unwrap_or(0);
        for letter in lo..self.weights.len() {
            if !admissible(letter, left, above, self.bosonic) {
                continue;
            }
            self.grid[i][j] = letter;
            let next = prod.times(&self.weights[letter]);
            self.fill(idx + 1, next, acc);
        }
        let _ = self.shape;
    }
}

/// Schur polynomial `s_p(values)` as a sum over semistandard tableaux with
/// entries in `1..=len(values)`.
pub fn schur_tableaux<R: Ring>(p: &Partition, values: &[R]) -> Result<R> {
    let unit = values
        .first()
        .ok_or_else(|| Error::invalid("schur_tableaux needs at least one value"))?
        .one_like();
    if p.num_rows() > values.len() {
        return Ok(unit.zero_like());
    }
    Ok(TableauSum::new(p, values, values.len()).run(&unit))
}

/// Weyl's bialternant `det[a_i^{k_j}] / Δ(a)`, `k_j = m + p_j - j`.
///
/// Fails with [`Error::DegenerateArguments`] when two arguments have
/// relative separation below `2^{-bits/2}`.
pub fn schur_bialternant(p: &Partition, values: &[BigComplex], prec: &Precision) -> Result<BigComplex> {
    let m = values.len();
    if m == 0 {
        return Err(Error::invalid("schur_bialternant needs at least one value"));
    }
    let k = KIndices::of(p, m)?;
    check_separation(values, prec)?;
    let matrix: Vec<Vec<BigComplex>> = values
        .iter()
        .map(|a| k.values.iter().map(|&kj| a.powi(kj as i64)).collect())
        .collect();
    let num = determinant(&matrix)?;
    let den = vandermonde(values, &values[0].one_like());
    Ok(&num / &den)
}

fn check_separation(values: &[BigComplex], prec: &Precision) -> Result<()> {
    let thr = Float::with_val(64, Float::i_exp(1, -((prec.bits / 2) as i32)));
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let diff = (&values[i] - &values[j]).abs();
            let scale = values[i].abs().max(&values[j].abs());
            if diff <= Float::with_val(64, &scale * &thr) {
                return Err(Error::DegenerateArguments { i, j });
            }
        }
    }
    Ok(())
}

/// Bialternant with automatic fallback to the tableau sum at (nearly)
/// coinciding arguments.
pub fn schur_numeric(p: &Partition, values: &[BigComplex], prec: &Precision) -> Result<BigComplex> {
    match schur_bialternant(p, values, prec) {
        Err(Error::DegenerateArguments { .. }) => schur_tableaux(p, values),
        other => other,
    }
}

/// Supercharacter of a diagonal supermatrix `diag(bos | ferm)` in the
/// covariant representation `t`, as a signed (m|n)-semistandard tableau
/// sum. Each fermionic letter contributes `-a` for its eigenvalue `a`.
/// Vanishes when `t` violates the hook condition.
pub fn super_schur_tableaux<R: Ring>(t: &Partition, bos: &[R], ferm: &[R]) -> Result<R> {
    let unit = bos
        .first()
        .or(ferm.first())
        .ok_or_else(|| Error::invalid("super_schur_tableaux needs at least one value"))?
        .one_like();
    if !is_hook_covariant(t, bos.len(), ferm.len()) {
        return Ok(unit.zero_like());
    }
    let weights: Vec<R> = bos
        .iter()
        .cloned()
        .chain(ferm.iter().map(Ring::negate))
        .collect();
    Ok(TableauSum::new(t, &weights, bos.len()).run(&unit))
}

/// `Σ(a; m, n) = ∏_{i,j} (a_i - a_{m+j})`.
pub fn cross_product<R: Ring>(bos: &[R], ferm: &[R], unit: &R) -> R {
    let mut acc = unit.clone();
    for a in bos {
        for b in ferm {
            acc = acc.times(&a.minus(b));
        }
    }
    acc
}

fn check_lengths<T>(sd: &SuperDiagram, bos: &[T], ferm: &[T]) -> Result<()> {
    if bos.len() != sd.m || ferm.len() != sd.n {
        return Err(Error::invalid(format!(
            "expected {}|{} eigenvalues, got {}|{}",
            sd.m,
            sd.n,
            bos.len(),
            ferm.len()
        )));
    }
    Ok(())
}

/// `ξ_t = (-1)^|q| Σ(a; m, n) χ_p(bos) χ_q(ferm)` for a non-degenerate
/// diagram, with the characters evaluated exactly by tableaux.
pub fn supercharacter_amu<R: Ring>(sd: &SuperDiagram, bos: &[R], ferm: &[R]) -> Result<R> {
    check_lengths(sd, bos, ferm)?;
    let chi_p = schur_tableaux(&sd.p, bos)?;
    let chi_q = schur_tableaux(&sd.q, ferm)?;
    let v = cross_product(bos, ferm, &chi_p.one_like())
        .times(&chi_p)
        .times(&chi_q);
    Ok(if sd.q.size() % 2 == 1 { v.negate() } else { v })
}

/// Numeric variant of [`supercharacter_amu`] using the bialternant.
pub fn supercharacter_amu_numeric(
    sd: &SuperDiagram,
    bos: &[BigComplex],
    ferm: &[BigComplex],
    prec: &Precision,
) -> Result<BigComplex> {
    check_lengths(sd, bos, ferm)?;
    let chi_p = schur_numeric(&sd.p, bos, prec)?;
    let chi_q = schur_numeric(&sd.q, ferm, prec)?;
    let v = &(&cross_product(bos, ferm, &chi_p.one_like()) * &chi_p) * &chi_q;
    Ok(if sd.q.size() % 2 == 1 { -v } else { v })
}

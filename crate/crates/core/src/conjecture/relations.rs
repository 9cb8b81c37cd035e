//! Exact coefficient identities behind the conjecture: the
//! Littlewood-Richardson relation between the `f` and `g` coefficients, and
//! the closed product for the coefficients reachable by the partial proof.

use std::collections::HashMap;

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::{factorial, vandermonde};
use crate::young::{lr_coefficient, Partition};

fn k_indices(p: &Partition, rows: usize) -> Result<Vec<i64>> {
    if p.num_rows() > rows {
        return Err(Error::TooManyRows { partition: p.clone(), rows });
    }
    Ok((0..rows).map(|i| (p.part(i) + rows - 1 - i) as i64).collect())
}

fn delta(k: &[i64]) -> Integer {
    let k: Vec<Integer> = k.iter().map(|&v| Integer::from(v)).collect();
    vandermonde(&k, &Integer::from(1))
}

fn factorial_squares(k: &[i64]) -> Integer {
    k.iter().fold(Integer::from(1), |acc, &v| {
        let f = factorial(v as u32);
        acc * f.square()
    })
}

/// `f_r = Δ(k) / ∏ (k_i!)²` with `k_i = r_i + N − i`.
pub fn f_coefficient(r: &Partition, n_rows: usize) -> Result<Rational> {
    let k = k_indices(r, n_rows)?;
    Ok(Rational::from((delta(&k), factorial_squares(&k))))
}

/// `g_{pq} = Δ(k^a) Δ(k^b) / ∏ (k!)² · ∏_{i,j} 1/(k^a_i + k^b_j + 1)`.
pub fn g_coefficient(p: &Partition, q: &Partition, m: usize, n: usize) -> Result<Rational> {
    let ka = k_indices(p, m)?;
    let kb = k_indices(q, n)?;
    let mut den = factorial_squares(&ka) * factorial_squares(&kb);
    for a in &ka {
        for b in &kb {
            den *= a + b + 1;
        }
    }
    Ok(Rational::from((delta(&ka) * delta(&kb), den)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LrCheck {
    pub p: Partition,
    pub q: Partition,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub terms: usize,
    pub holds: bool,
}

/// `Σ_{r ⊇ p, |r| = |p|+|q|, ≤ N rows} f_r c^r_{pq} = g_{pq}`, exactly.
pub fn lr_relation_check(p: &Partition, q: &Partition, m: usize, n: usize) -> Result<LrCheck> {
    let rows = m + n;
    let g = g_coefficient(p, q, m, n)?;
    let mut lhs = Rational::new();
    let mut terms = 0;
    for r in Partition::all_of_bounded(p.size() + q.size(), rows) {
        if !p.is_contained_in(&r) {
            continue;
        }
        let c = lr_coefficient(&r, p, q);
        if c != 0 {
            lhs += f_coefficient(&r, rows)? * c;
            terms += 1;
        }
    }
    let residual = Rational::from(&lhs - &g);
    Ok(LrCheck {
        p: p.clone(),
        q: q.clone(),
        holds: residual == 0,
        lhs: lhs.to_string(),
        rhs: g.to_string(),
        residual: residual.to_string(),
        terms,
    })
}

/// Every pair `(p, q)` with `p ≤ m` rows, `q ≤ n` rows and
/// `|p| + |q| ≤ max_boxes`, checked in parallel and returned in a fixed
/// order.
pub fn lr_sweep(m: usize, n: usize, max_boxes: usize) -> Result<Vec<LrCheck>> {
    use rayon::prelude::*;
    let mut pairs = Vec::new();
    for total in 0..=max_boxes {
        for a in 0..=total {
            for p in Partition::all_of_bounded(a, m) {
                for q in Partition::all_of_bounded(total - a, n) {
                    pairs.push((p.clone(), q));
                }
            }
        }
    }
    pairs.par_iter().map(|(p, q)| lr_relation_check(p, q, m, n)).collect()
}

/// Coefficients of `J₀ / ∏_{i ≤ m < j} (z_i − z_j)`, obtained by dividing
/// the exact `J₀` coefficients one linear factor at a time.
struct Quotient {
    n: usize,
    factors: Vec<(usize, usize)>,
    memo: Vec<HashMap<Vec<i64>, Rational>>,
}

impl Quotient {
    fn new(m: usize, n: usize) -> Self {
        let factors: Vec<_> = (0..m).flat_map(|i| (m..n).map(move |j| (i, j))).collect();
        let memo = vec![HashMap::new(); factors.len() + 1];
        Quotient { n, factors, memo }
    }

    fn j0(k: &[i64]) -> Rational {
        if k.iter().any(|&v| v < 0) {
            return Rational::new();
        }
        Rational::from((delta(k), factorial_squares(k)))
    }

    /// From `P = (z_i − z_j) Q`: `Q_k = Σ_{t=0}^{k_j} P_{k + (t+1) e_i − t e_j}`.
    fn coefficient(&mut self, level: usize, k: &[i64]) -> Rational {
        debug_assert_eq!(k.len(), self.n);
        if k.iter().any(|&v| v < 0) {
            return Rational::new();
        }
        if level == 0 {
            return Self::j0(k);
        }
        if let Some(v) = self.memo[level].get(k) {
            return v.clone();
        }
        let (i, j) = self.factors[level - 1];
        let mut acc = Rational::new();
        let mut idx = k.to_vec();
        idx[i] += 1;
        for _ in 0..=k[j] {
            acc += self.coefficient(level - 1, &idx);
            idx[i] += 1;
            idx[j] -= 1;
        }
        self.memo[level].insert(k.to_vec(), acc.clone());
        acc
    }

    fn full(&mut self, k: &[i64]) -> Rational {
        self.coefficient(self.factors.len(), k)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartialCheck {
    pub k: Vec<i64>,
    /// `c_k / (Δ(k^a) Δ(k^b))` from the series.
    pub extracted: String,
    /// The closed product at this index pattern.
    pub predicted: String,
    /// `1/∏ (k!)² · ∏ 1/(k^a_i + k^b_j + 1)` for the same `k`.
    pub general: String,
    pub holds: bool,
}

fn factorial_run(upto: i64) -> Integer {
    (1..=upto).fold(Integer::from(1), |acc, i| acc * factorial(i as u32))
}

/// Checks the coefficient of `z^k` in `J₀ / ∏_{i ≤ m < j} (z_i − z_j)` at
/// `k = (0, 1, …, m−2, k_m | 0, 1, …, N−m−2, k_N)` against the closed
/// product formula.
pub fn partial_coefficient_check(k_m: i64, k_n: i64, m: usize, n_vars: usize) -> Result<PartialCheck> {
    let mut q = Quotient::new(m, n_vars);
    partial_check_with(&mut q, k_m, k_n, m, n_vars)
}

/// The grid `k_m ∈ k_m⁰..=k_m⁰+span`, `k_N ∈ k_N⁰..=k_N⁰+span`, sharing
/// one memo table.
pub fn partial_coefficient_grid(m: usize, n_vars: usize, span: i64) -> Result<Vec<PartialCheck>> {
    let mut q = Quotient::new(m, n_vars);
    let (m0, n0) = (m as i64 - 1, (n_vars - m) as i64 - 1);
    let mut out = Vec::new();
    for k_m in m0..=m0 + span {
        for k_n in n0..=n0 + span {
            out.push(partial_check_with(&mut q, k_m, k_n, m, n_vars)?);
        }
    }
    Ok(out)
}

fn partial_check_with(q: &mut Quotient, k_m: i64, k_n: i64, m: usize, n_vars: usize) -> Result<PartialCheck> {
    if m == 0 || m >= n_vars {
        return Err(Error::invalid(format!("need 1 <= m < N, got m={m}, N={n_vars}")));
    }
    let (m0, n0) = (m as i64 - 1, (n_vars - m) as i64 - 1);
    if k_m < m0 || k_n < n0 {
        return Err(Error::invalid(format!("need k_m >= {m0} and k_N >= {n0}")));
    }
    let ka: Vec<i64> = (0..m0).chain([k_m]).collect();
    let kb: Vec<i64> = (0..n0).chain([k_n]).collect();
    let k: Vec<i64> = ka.iter().chain(&kb).copied().collect();

    let extracted = q.full(&k) / Rational::from(delta(&ka) * delta(&kb));

    let sigma0 = factorial_run(m0 + n0 - 1) * factorial_run(m0 - 1) * factorial_run(n0 - 1);
    let mut den = factorial(k_m as u32).square() * factorial(k_n as u32).square() * (k_m + k_n + 1) * sigma0;
    for i in 1..=n0 {
        den *= k_m + i;
    }
    for j in 1..=m0 {
        den *= k_n + j;
    }
    let predicted = Rational::from((1, den));

    let mut gden = factorial_squares(&k);
    for a in &ka {
        for b in &kb {
            gden *= a + b + 1;
        }
    }
    let general = Rational::from((1, gden));

    Ok(PartialCheck {
        holds: extracted == predicted && predicted == general,
        k,
        extracted: extracted.to_string(),
        predicted: predicted.to_string(),
        general: general.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn trivial_coefficients() {
        assert_eq!(f_coefficient(&Partition::empty(), 1).unwrap(), 1);
        assert_eq!(f_coefficient(&part(&[1]), 1).unwrap(), 1);
        assert_eq!(g_coefficient(&Partition::empty(), &Partition::empty(), 1, 1).unwrap(), 1);
        // N = 3, r = ∅: k = (2, 1, 0), Δ = 2, ∏ k!² = 4
        assert_eq!(f_coefficient(&Partition::empty(), 3).unwrap(), Rational::from((1, 2)));
    }

    #[test]
    fn lr_small_cases() {
        let e = Partition::empty();
        let c = lr_relation_check(&e, &e, 1, 1).unwrap();
        assert!(c.holds && c.terms == 1);
        assert!(lr_relation_check(&part(&[1]), &e, 1, 1).unwrap().holds);
    }

    #[test]
    fn smallest_partial_case() {
        let c = partial_coefficient_check(0, 0, 1, 2).unwrap();
        assert!(c.holds);
        assert_eq!(c.predicted, "1");
    }

    #[test]
    fn quotient_recovers_j0() {
        // J₀ = (z₁ − z₂) Q for N = 2; multiply back and compare a few coefficients
        let mut q = Quotient::new(1, 2);
        for a in 0..5i64 {
            for b in 0..5i64 {
                let back = q.full(&[a - 1, b]) - q.full(&[a, b - 1]);
                assert_eq!(back, Quotient::j0(&[a, b]), "at ({a}, {b})");
            }
        }
    }
}

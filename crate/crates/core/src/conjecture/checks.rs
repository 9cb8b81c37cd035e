//! Exact identity checks: the power-sum expansion of the supertrace, and
//! the three determinant theorems used to reorganize the series.

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::{determinant, inverse_factorial, vandermonde};
use crate::rng::Sampler;
use crate::young::{is_hook_covariant, sigma_coefficient, super_schur_tableaux, supercharacter_amu, Partition, SuperDiagram};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionCheck {
    pub boxes: usize,
    pub diagrams: usize,
    pub holds: bool,
}

/// `str(A)^k = Σ_{t ⊢ k} σ_t ξ_t(A)` for `A = diag(bos | ferm)`, for every
/// `k ≤ max_boxes`, summing over all hook-covariant `t` including the
/// degenerate ones.
pub fn character_expansion_check(bos: &[Rational], ferm: &[Rational], max_boxes: usize) -> Result<Vec<ExpansionCheck>> {
    if bos.is_empty() && ferm.is_empty() {
        return Err(Error::invalid("need at least one eigenvalue"));
    }
    let (m, n) = (bos.len(), ferm.len());
    let str_a = bos.iter().fold(Rational::new(), |acc, x| acc + x) - ferm.iter().fold(Rational::new(), |acc, x| acc + x);
    (1..=max_boxes)
        .map(|k| {
            let mut rhs = Rational::new();
            let mut diagrams = 0;
            for t in Partition::all_of(k) {
                if !is_hook_covariant(&t, m, n) {
                    continue;
                }
                diagrams += 1;
                rhs += super_schur_tableaux(&t, bos, ferm)? * sigma_coefficient(&t);
            }
            Ok(ExpansionCheck { boxes: k, diagrams, holds: rhs == str_a.clone().pow(k as u32) })
        })
        .collect()
}

/// For every non-degenerate (m|n) diagram up to `max_boxes`, the factorized
/// supercharacter agrees with the tableau sum.
pub fn supercharacter_consistency(bos: &[Rational], ferm: &[Rational], max_boxes: usize) -> Result<bool> {
    for sd in SuperDiagram::all_up_to(bos.len(), ferm.len(), max_boxes) {
        if supercharacter_amu(&sd, bos, ferm)? != super_schur_tableaux(&sd.assemble(), bos, ferm)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `det[1/(n_j + i − j)!] = Δ(k) / ∏ k_i!` with `k_j = n_j + N − j`.
pub fn theorem3_holds(n: &Partition, n_vars: usize) -> Result<bool> {
    if n.num_rows() > n_vars {
        return Err(Error::TooManyRows { partition: n.clone(), rows: n_vars });
    }
    let matrix: Vec<Vec<Rational>> = (0..n_vars)
        .map(|i| (0..n_vars).map(|j| inverse_factorial(n.part(j) as i64 + i as i64 - j as i64)).collect())
        .collect();
    let k: Vec<Integer> = (0..n_vars).map(|j| Integer::from(n.part(j) + n_vars - 1 - j)).collect();
    let den = k.iter().fold(Integer::from(1), |acc, v| acc * crate::precision::factorial(v.to_u32().unwrap_or(0)));
    let rhs = Rational::from((vandermonde(&k, &Integer::from(1)), den));
    Ok(determinant(&matrix)? == rhs)
}

/// Strictly decreasing `k_1 > … > k_N ≥ 0` with `k_1 ≤ k_max`.
fn ordered_indices(n_vars: usize, k_max: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, below: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (left - 1..below).rev() {
            prefix.push(k);
            go(prefix, k, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k_max + 1, n_vars, &mut out);
    out
}

fn power_det(a: &[Rational], k: &[usize]) -> Result<Rational> {
    let m: Vec<Vec<Rational>> = a.iter().map(|ai| k.iter().map(|&kj| ai.clone().pow(kj as u32)).collect()).collect();
    determinant(&m)
}

/// Rearrangement: the free sum over `[0, K]^N` of an antisymmetric array
/// equals the ordered sum against `det[a_i^{k_j}]`. The array is
/// `A_k = Δ(k) (1 + Σ k) / ∏ k_i!`, antisymmetric but not a product.
pub fn theorem1_holds(a: &[Rational], k_max: usize) -> Result<bool> {
    let n = a.len();
    let array = |k: &[usize]| {
        let ki: Vec<Integer> = k.iter().map(|&v| Integer::from(v)).collect();
        let weight: Rational = k.iter().map(|&v| inverse_factorial(v as i64)).product();
        weight * vandermonde(&ki, &Integer::from(1)) * (1 + k.iter().sum::<usize>() as u64)
    };
    let pows: Vec<Vec<Rational>> = a.iter().map(|x| (0..=k_max).map(|e| x.clone().pow(e as u32)).collect()).collect();
    let mut free = Rational::new();
    let mut k = vec![0usize; n];
    'outer: loop {
        let mono: Rational = k.iter().enumerate().map(|(i, &e)| pows[i][e].clone()).product();
        free += array(&k) * mono;
        for slot in k.iter_mut() {
            *slot += 1;
            if *slot <= k_max {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    let mut ordered = Rational::new();
    for k in ordered_indices(n, k_max) {
        ordered += array(&k) * power_det(a, &k)?;
    }
    Ok(free == ordered)
}

/// Hua's expansion `det[f_i(z_j)] = Σ_{k ordered} det[a^i_{k_j}] det[z_i^{k_j}]`
/// for `f_i(z) = Σ_{k ≤ K} z^k / (k! (k+i)!)`, the rescaled Bessel series.
pub fn theorem2_holds(z: &[Rational], k_max: usize) -> Result<bool> {
    let n = z.len();
    let coeff = |i: usize, k: usize| inverse_factorial(k as i64) * inverse_factorial((k + i) as i64);
    let lhs_matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            z.iter()
                .map(|zj| (0..=k_max).fold(Rational::new(), |acc, k| acc + coeff(i, k) * zj.clone().pow(k as u32)))
                .collect()
        })
        .collect();
    let lhs = determinant(&lhs_matrix)?;
    let mut rhs = Rational::new();
    for k in ordered_indices(n, k_max) {
        let a: Vec<Vec<Rational>> = (0..n).map(|i| k.iter().map(|&kj| coeff(i, kj)).collect()).collect();
        rhs += determinant(&a)? * power_det(z, &k)?;
    }
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub theorem1: bool,
    pub theorem2: bool,
    pub theorem3: bool,
    pub theorem3_cases: usize,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.theorem1 && self.theorem2 && self.theorem3
    }
}

fn free_sum_depth(n: usize) -> usize {
    match n {
        0..=2 => 30,
        3 => 16,
        4 => 10,
        5 => 8,
        _ => 7,
    }
}

fn hua_depth(n: usize) -> usize {
    match n {
        0..=3 => 30,
        4 => 16,
        5 => 12,
        _ => 10,
    }
}

/// All three theorems at `N` variables, with seeded rational test points
/// and 50 seeded partitions for the last one.
pub fn theorem_c_checks(n_vars: usize, seed: u64) -> Result<TheoremReport> {
    if n_vars == 0 || n_vars > 6 {
        return Err(Error::invalid(format!("N must lie in 1..=6, got {n_vars}")));
    }
    let mut s = Sampler::new(seed, n_vars as u64);
    let mut theorem3 = true;
    let cases = 50;
    for _ in 0..cases {
        theorem3 &= theorem3_holds(&s.partition(n_vars, 6), n_vars)?;
    }
    let points: Vec<Rational> = (0..n_vars).map(|_| s.nonzero_rational(1, 16)).collect();
    Ok(TheoremReport {
        n: n_vars,
        theorem1: theorem1_holds(&points, free_sum_depth(n_vars))?,
        theorem2: theorem2_holds(&points, hua_depth(n_vars))?,
        theorem3,
        theorem3_cases: cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    #[test]
    fn theorem3_small_partition() {
        assert!(theorem3_holds(&Partition::new(vec![1]).unwrap(), 2).unwrap());
        assert!(theorem3_holds(&Partition::empty(), 3).unwrap());
    }

    #[test]
    fn rearrangement_two_variables() {
        assert!(theorem1_holds(&[q(1, 2), q(-2, 3)], 12).unwrap());
    }

    #[test]
    fn hua_three_variables() {
        assert!(theorem2_holds(&[q(1, 2), q(1, 3), q(-3, 4)], 12).unwrap());
    }

    #[test]
    fn power_sums() {
        // m = n = 1, two boxes: (a − b)² = ξ_(2) + ξ_(1,1)
        let c = character_expansion_check(&[q(3, 5)], &[q(-1, 7)], 2).unwrap();
        assert!(c.iter().all(|c| c.holds));
        assert_eq!(c[1].diagrams, 2);
    }

    #[test]
    fn ordered_index_count() {
        // C(K+1, N)
        assert_eq!(ordered_indices(3, 5).len(), 20);
        assert!(ordered_indices(2, 3).iter().all(|k| k[0] > k[1]));
    }
}

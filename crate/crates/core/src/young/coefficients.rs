//! Exact integer and rational coefficients attached to Young diagrams.

use rug::{Integer, Rational};

use super::{Partition, SuperDiagram};
use crate::error::{Error, Result};
use crate::precision::{factorial, vandermonde};

/// Strictly decreasing shifted row lengths `k_i = offset + t_i - i`
/// (`i = 1..len`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KIndices {
    pub values: Vec<usize>,
    pub offset: usize,
}

impl KIndices {
    /// `k_i = len + t_i - i` over `len` rows; `t` must fit in `len` rows.
    pub fn of(t: &Partition, len: usize) -> Result<Self> {
        if t.num_rows() > len {
            return Err(Error::TooManyRows {
                partition: t.clone(),
                rows: len,
            });
        }
        Ok(KIndices {
            values: (0..len).map(|i| len + t.part(i) - i - 1).collect(),
            offset: len,
        })
    }

    /// Inverse map: recover the partition from strictly decreasing indices.
    pub fn to_partition(values: &[usize]) -> Result<Partition> {
        let len = values.len();
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::invalid("k indices must be strictly decreasing"));
        }
        if len > 0 && values[len - 1] > usize::MAX / 2 {
            return Err(Error::invalid("k index out of range"));
        }
        let rows = values
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                (k + i + 1)
                    .checked_sub(len)
                    .ok_or_else(|| Error::invalid("k indices below the staircase"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }

    pub fn as_integers(&self) -> Vec<Integer> {
        self.values.iter().map(|&k| Integer::from(k)).collect()
    }
}

fn int_vandermonde(values: &[usize]) -> Integer {
    let ints: Vec<Integer> = values.iter().map(|&v| Integer::from(v)).collect();
    vandermonde(&ints, &Integer::from(1))
}

/// `σ_t = |t|! Δ(k̂) / ∏ k̂_i!` with `k̂_i = N̂ + t_i - i` over the `N̂` rows
/// of `t`; the number of standard Young tableaux. `σ_∅ = 1`.
pub fn sigma_coefficient(t: &Partition) -> Integer {
    let rows = t.num_rows();
    if rows == 0 {
        return Integer::from(1);
    }
    let k = KIndices::of(t, rows).expect("partition fits its own row count");
    let mut den = Integer::from(1);
    for &ki in &k.values {
        den *= factorial(ki as u32);
    }
    let num = factorial(t.size() as u32) * int_vandermonde(&k.values);
    let (q, r) = num.div_rem(den);
    debug_assert_eq!(r, 0);
    q
}

/// Product of all hook lengths of `t`.
pub fn hook_product(t: &Partition) -> Integer {
    t.cells()
        .fold(Integer::from(1), |acc, (i, j)| acc * t.hook_length(i, j) as u64)
}

/// Dimension of the Gl(m) irrep with highest weight `p`:
/// `Δ(k_1..k_m) / ∏ (m-i)!`, `k_i = m + p_i - i`.
pub fn dimension_glm(p: &Partition, m: usize) -> Result<Integer> {
    let k = KIndices::of(p, m)?;
    let mut den = Integer::from(1);
    for i in 0..m {
        den *= factorial(i as u32);
    }
    let (q, r) = int_vandermonde(&k.values).div_rem(den);
    debug_assert_eq!(r, 0);
    Ok(q)
}

/// Norm of the supergroup representation:
/// `α_t = (-1)^|q| |t|!/(|p|!|q|!) σ_p σ_q / σ_t / (d_p d_q)`.
pub fn norm_alpha(sd: &SuperDiagram) -> Rational {
    let t = sd.assemble();
    let num = factorial(t.size() as u32) * sigma_coefficient(&sd.p) * sigma_coefficient(&sd.q);
    let den = factorial(sd.p.size() as u32)
        * factorial(sd.q.size() as u32)
        * sigma_coefficient(&t)
        * dimension_glm(&sd.p, sd.m).expect("validated by SuperDiagram")
        * dimension_glm(&sd.q, sd.n).expect("validated by SuperDiagram");
    let alpha = Rational::from((num, den));
    if sd.q.size() % 2 == 1 {
        -alpha
    } else {
        alpha
    }
}

/// `∏_{i<=m, j<=n} 1/(k_i + k_{m+j} + 1)`, the block factor in
/// `σ_t/|t|! = (σ_p/|p|!)(σ_q/|q|!) · factor`.
pub fn sigma_decomposition_factor(sd: &SuperDiagram) -> Rational {
    let kb = sd.bosonic_k();
    let kf = sd.fermionic_k();
    let mut den = Integer::from(1);
    for a in &kb {
        for b in &kf {
            den *= (a + b + 1) as u64;
        }
    }
    Rational::from((Integer::from(1), den))
}

/// `σ_t / |t|!` as an exact rational.
pub fn sigma_over_factorial(t: &Partition) -> Rational {
    Rational::from((sigma_coefficient(t), factorial(t.size() as u32)))
}

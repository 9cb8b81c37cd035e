//! The truncated power series `J₀` and `J_m`, all multi-indices bounded by
//! `K`, evaluated as determinants of single-variable sums.
//!
//! `Δ(k) = det[k_i^{N-1-j}]` makes `J₀` multilinear in the rows, so
//! `J₀ = det[Σ_k k^{N-1-j} z_i^k / (k!)²]`. For `J_m` the weight
//! `Δ(k_a) Δ(k_b) / ∏ (k_i + k_j + 1)` is a Cauchy-Vandermonde determinant,
//! which again splits into per-variable sums. Both forms are exact for the
//! box truncation, not approximations of it.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::precision::{determinant, inverse_factorial, vandermonde, BigComplex, Precision};
use crate::young::cross_product;

/// A determinant value with a bound on its relative sensitivity:
/// `∏ ‖row of the majorant‖ / |det|`, where the majorant is the same matrix
/// built from `|z_i|`, so every series term enters with its absolute value.
#[derive(Debug, Clone)]
pub struct Conditioned {
    pub value: BigComplex,
    pub condition: f64,
}

fn weights(k_max: usize, bits: u32) -> Vec<BigComplex> {
    (0..=k_max)
        .map(|k| {
            let r = inverse_factorial(k as i64);
            BigComplex::from_rational(&Rational::from(&r * &r), bits)
        })
        .collect()
}

fn powers(z: &BigComplex, k_max: usize, bits: u32) -> Vec<BigComplex> {
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(BigComplex::one(bits));
    for k in 1..=k_max {
        out.push(&out[k - 1] * z);
    }
    out
}

fn int_pow(k: usize, e: usize, bits: u32) -> BigComplex {
    BigComplex::from_rational(&Rational::from(Integer::from(k).pow(e as u32)), bits)
}

fn moduli(z: &[BigComplex]) -> Vec<BigComplex> {
    z.iter().map(|v| BigComplex::from_floats(v.abs(), rug::Float::new(v.precision_bits()))).collect()
}

fn conditioned_det(matrix: Vec<Vec<BigComplex>>, majorant: Vec<Vec<BigComplex>>) -> Result<Conditioned> {
    let value = determinant(&matrix)?;
    let mut log_rows = 0.0;
    for row in &majorant {
        let norm: f64 = row.iter().map(|x| x.norm_sqr().to_f64()).sum::<f64>().sqrt();
        log_rows += norm.ln();
    }
    let det_abs = value.abs().to_f64();
    let condition = if det_abs == 0.0 { f64::INFINITY } else { (log_rows - det_abs.ln()).exp().max(1.0) };
    Ok(Conditioned { value, condition })
}

fn check_args(z: &[BigComplex], k_max: usize) -> Result<()> {
    if z.is_empty() {
        return Err(Error::invalid("need at least one variable"));
    }
    if k_max == 0 {
        return Err(Error::invalid("truncation depth must be at least 1"));
    }
    Ok(())
}

/// `Σ_{0 ≤ k_i ≤ K} Δ(k) / ∏ (k_i!)² · z^k`.
pub fn j0_truncated(z: &[BigComplex], k_max: usize, prec: &Precision) -> Result<BigComplex> {
    check_args(z, k_max)?;
    determinant(&j0_matrix(z, k_max, prec.working_bits()))
}

pub fn j0_conditioned(z: &[BigComplex], k_max: usize, prec: &Precision) -> Result<Conditioned> {
    check_args(z, k_max)?;
    let bits = prec.working_bits();
    conditioned_det(j0_matrix(z, k_max, bits), j0_matrix(&moduli(z), k_max, bits))
}

fn j0_matrix(z: &[BigComplex], k_max: usize, bits: u32) -> Vec<Vec<BigComplex>> {
    let n = z.len();
    let w = weights(k_max, bits);
    z.iter()
        .map(|zi| {
            let zp = powers(&zi.with_precision(bits), k_max, bits);
            (0..n).map(|j| power_moment(&w, &zp, n - 1 - j, bits)).collect()
        })
        .collect()
}

/// `Σ_k k^e w_k z^k`.
fn power_moment(w: &[BigComplex], zp: &[BigComplex], e: usize, bits: u32) -> BigComplex {
    let mut acc = BigComplex::zero(bits);
    for (k, (wk, zk)) in w.iter().zip(zp).enumerate() {
        if e > 0 && k == 0 {
            continue;
        }
        let t = &(wk * zk) * &int_pow(k, e, bits);
        acc += &t;
    }
    acc
}

/// Sign `s` with `Δ(x) Δ(y) / ∏ (x_i + y_j + 1) = s · det M(x, y)`, where
/// `M` has columns `1/(x_i + y_j + 1)` followed by `x_i^{p-q-1}, …, x_i⁰`
/// (`p = |x| ≥ q = |y|`). Fixed by one exact evaluation.
fn cauchy_vandermonde_sign(p: usize, q: usize) -> Result<i32> {
    let x: Vec<Rational> = (0..p).map(|i| Rational::from(2 * i as i64 + 1)).collect();
    let y: Vec<Rational> = (0..q).map(|j| Rational::from(2 * j as i64)).collect();
    let one = Rational::from(1);
    let mut weight = vandermonde(&x, &one) * vandermonde(&y, &one);
    for xi in &x {
        for yj in &y {
            weight /= Rational::from(xi + yj) + 1u32;
        }
    }
    let matrix: Vec<Vec<Rational>> = x
        .iter()
        .map(|xi| {
            let mut row: Vec<Rational> = y.iter().map(|yj| Rational::from(Rational::from(xi + yj) + 1u32).recip()).collect();
            row.extend((0..p - q).map(|l| xi.clone().pow((p - q - 1 - l) as u32)));
            row
        })
        .collect();
    let det = determinant(&matrix)?;
    let s = weight / det;
    if s == 1 {
        Ok(1)
    } else if s == -1 {
        Ok(-1)
    } else {
        Err(Error::invalid(format!("Cauchy-Vandermonde normalization {s} is not a sign")))
    }
}

/// `Σ_{0 ≤ k_i ≤ K} Δ(k_a) Δ(k_b) / ∏ (k_i!)² · ∏_{i ≤ m < j} (z_i − z_j)/(k_i + k_j + 1) · z^k`.
pub fn jm_truncated(z: &[BigComplex], m: usize, k_max: usize, prec: &Precision) -> Result<BigComplex> {
    jm_conditioned(z, m, k_max, prec).map(|c| c.value)
}

pub fn jm_conditioned(z: &[BigComplex], m: usize, k_max: usize, prec: &Precision) -> Result<Conditioned> {
    check_args(z, k_max)?;
    if m == 0 || m > z.len() {
        return Err(Error::invalid(format!("m must lie in 1..={}, got {m}", z.len())));
    }
    let bits = prec.working_bits();
    let z: Vec<BigComplex> = z.iter().map(|v| v.with_precision(bits)).collect();
    let (za, zb) = z.split_at(m);
    let (p, q) = (za.len().max(zb.len()), za.len().min(zb.len()));
    let det = conditioned_det(jm_matrix(&z, m, k_max, bits), jm_matrix(&moduli(&z), m, k_max, bits))?;
    let sign = BigComplex::from_i64(i64::from(cauchy_vandermonde_sign(p, q)?), bits);
    Ok(Conditioned {
        value: &(&cross_product(za, zb, &BigComplex::one(bits)) * &sign) * &det.value,
        condition: det.condition,
    })
}

/// Rows over the larger of the two variable sets: `Σ_{a,b} w_a w_b x^a y_j^b
/// / (a+b+1)` for each `y_j` of the smaller set, then power moments.
fn jm_matrix(z: &[BigComplex], m: usize, k_max: usize, bits: u32) -> Vec<Vec<BigComplex>> {
    let (za, zb) = z.split_at(m);
    let (big, small) = if za.len() >= zb.len() { (za, zb) } else { (zb, za) };
    let (p, q) = (big.len(), small.len());
    let w = weights(k_max, bits);
    // inner[j][a] = Σ_b w_b y_j^b / (a + b + 1)
    let inner: Vec<Vec<BigComplex>> = small
        .iter()
        .map(|y| {
            let yp = powers(y, k_max, bits);
            (0..=k_max)
                .map(|a| {
                    let mut acc = BigComplex::zero(bits);
                    for (b, (wb, yb)) in w.iter().zip(&yp).enumerate() {
                        acc += &(&(wb * yb) / &BigComplex::from_i64((a + b + 1) as i64, bits));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    big.iter()
        .map(|x| {
            let xp = powers(x, k_max, bits);
            let mut row: Vec<BigComplex> = inner
                .iter()
                .map(|col| {
                    let mut acc = BigComplex::zero(bits);
                    for ((wa, xa), c) in w.iter().zip(&xp).zip(col) {
                        acc += &(&(wa * xa) * c);
                    }
                    acc
                })
                .collect();
            row.extend((0..p - q).map(|l| power_moment(&w, &xp, p - q - 1 - l, bits)));
            row
        })
        .collect()
}

/// Bounds on the terms omitted by the box truncation, for all `|z_i| ≤ R`.
///
/// With `|Δ(k)| ≤ ∏ (1 + k_i)^{N-1}` the absolute series factorizes, so the
/// omitted region is at most `N · T · S^{N-1}` where
/// `S = Σ_k (1+k)^{N-1} R^k/(k!)²` and `T` is the same sum over `k > K`.
/// For `J_m` the cross factors add at most `(2R)^{mn}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub j0: f64,
    pub jm: f64,
}

impl TailBound {
    pub fn total(&self) -> f64 {
        self.j0 + self.jm
    }
}

pub fn tail_bound(n_vars: usize, m: usize, radius: f64, k_max: usize) -> TailBound {
    let e = (n_vars - 1) as f64;
    let ln_r = radius.ln();
    let ln_term = |k: usize, ln_fact: f64| {
        if k == 0 {
            0.0
        } else {
            e * (1.0 + k as f64).ln() + k as f64 * ln_r - 2.0 * ln_fact
        }
    };
    // Σ_{k ≥ start} exp(ln_term), stopping once the term ratio is below 1/2
    let sum_from = |start: usize| {
        let mut ln_fact: f64 = (1..=start).map(|i| (i as f64).ln()).sum();
        let mut acc = 0.0;
        let mut k = start;
        loop {
            let t = ln_term(k, ln_fact).exp();
            let ratio = ((2.0 + k as f64) / (1.0 + k as f64)).powf(e) * radius / ((k + 1) as f64).powi(2);
            if ratio <= 0.5 {
                return acc + 2.0 * t;
            }
            acc += t;
            k += 1;
            ln_fact += (k as f64).ln();
        }
    };
    if radius == 0.0 {
        return TailBound { j0: 0.0, jm: 0.0 };
    }
    let s = sum_from(0);
    let t = sum_from(k_max + 1);
    let j0 = n_vars as f64 * t * s.powi(n_vars as i32 - 1);
    let mn = (m * (n_vars - m)) as i32;
    TailBound { j0, jm: j0 * (2.0 * radius).powi(mn).max(1.0) }
}

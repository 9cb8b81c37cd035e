//! Power series of the modified Bessel functions, always written in the
//! squared argument so that no square root (and no branch choice) is
//! needed:
//!
//! `λ^{-ν} I_ν(2λ) = Σ_k (λ²)^k / (k! (k+ν)!)`.
//!
//! Truncation rule: stop once the current term is below
//! `2^-(bits+guard_bits)` times the largest partial-sum magnitude seen and
//! the terms are decreasing geometrically; fail if `truncation_cap` terms
//! do not suffice.

use rug::{Float, Integer};

use super::complex::BigComplex;
use super::{binomial, Precision};
use crate::error::{Error, Result};

fn threshold(prec: &Precision) -> Float {
    Float::with_val(64, Float::i_exp(1, -((prec.bits + prec.guard_bits) as i32)))
}

fn int_to_complex(n: &Integer, bits: u32) -> BigComplex {
    BigComplex::from_complex(rug::Complex::with_val(bits, (n, 0)))
}

/// Σ_k w^k / (k! (k+ν)!), i.e. `λ^{-ν} I_ν(2λ)` at `w = λ²`.
pub fn bessel_ratio(nu: u32, w: &BigComplex, prec: &Precision) -> Result<BigComplex> {
    bessel_ratio_with_terms(nu, w, prec).map(|(v, _)| v)
}

/// [`bessel_ratio`] together with the number of terms summed.
pub fn bessel_ratio_with_terms(
    nu: u32,
    w: &BigComplex,
    prec: &Precision,
) -> Result<(BigComplex, usize)> {
    let bits = prec.working_bits();
    let eps = threshold(prec);
    let nu_fact = int_to_complex(&super::factorial(nu), bits);
    let mut term = nu_fact.recip();
    let mut sum = term.clone();
    let mut sum_max = sum.abs();
    let w_abs = w.abs();
    for k in 1..prec.truncation_cap {
        let denom = (k as i64) * (k as i64 + i64::from(nu));
        term = &(&term * w) / &BigComplex::from_i64(denom, bits);
        sum += &term;
        let sum_abs = sum.abs();
        if sum_abs > sum_max {
            sum_max = sum_abs;
        }
        // |t_{k+1}/t_k| = |w| / ((k+1)(k+1+ν)); require it below 1/2 so
        // that the discarded tail is at most the current term.
        let next_denom = ((k + 1) * (k + 1 + nu as usize)) as f64;
        let contracting = w_abs.to_f64() * 2.0 <= next_denom;
        if contracting && term.abs() <= Float::with_val(64, &sum_max * &eps) {
            return Ok((sum, k + 1));
        }
    }
    Err(Error::TruncationCapExceeded {
        cap: prec.truncation_cap,
    })
}

/// `λ^ν I_ν(2βλ) = β^ν (λ²)^ν · bessel_ratio(ν, β²λ²)`; a function of `λ²`.
pub fn scaled_bessel_entry(
    nu: u32,
    beta: &BigComplex,
    lambda_sq: &BigComplex,
    prec: &Precision,
) -> Result<BigComplex> {
    let w = &(beta * beta) * lambda_sq;
    let ratio = bessel_ratio(nu, &w, prec)?;
    if nu == 0 {
        return Ok(ratio);
    }
    let e = i64::from(nu);
    Ok(&(&beta.powi(e) * &lambda_sq.powi(e)) * &ratio)
}

/// A power series `Σ_j c_j x^j` given by its coefficient stream.
pub trait PowerSeries: Sync {
    /// First index whose coefficient may be non-zero.
    fn leading_index(&self) -> usize {
        0
    }

    fn coefficients(&self, bits: u32) -> Box<dyn Iterator<Item = BigComplex> + '_>;
}

/// `Σ_k lead · step^k / (k! (k+ν)!) · x^{offset+k}`.
///
/// Covers the three shapes used across the crate: the plain ratio series
/// (`offset = 0`), the determinant entries `β^ν x^ν ratio(ν, β²x)` and the
/// `I₀(2βλμ)` entries as series in `λ²`.
#[derive(Debug, Clone)]
pub struct BesselSeries {
    pub nu: u32,
    pub offset: usize,
    pub lead: BigComplex,
    pub step: BigComplex,
}

impl BesselSeries {
    pub fn ratio(nu: u32, bits: u32) -> Self {
        BesselSeries {
            nu,
            offset: 0,
            lead: BigComplex::one(bits),
            step: BigComplex::one(bits),
        }
    }

    /// `x ↦ β^ν x^ν · bessel_ratio(ν, β² x)`.
    pub fn scaled_entry(nu: u32, beta: &BigComplex) -> Self {
        BesselSeries {
            nu,
            offset: nu as usize,
            lead: beta.powi(i64::from(nu)),
            step: beta * beta,
        }
    }

    /// `x ↦ bessel_ratio(0, scale · x)`.
    pub fn i0_scaled(scale: &BigComplex) -> Self {
        BesselSeries {
            nu: 0,
            offset: 0,
            lead: BigComplex::one(scale.precision_bits()),
            step: scale.clone(),
        }
    }
}

impl PowerSeries for BesselSeries {
    fn leading_index(&self) -> usize {
        self.offset
    }

    fn coefficients(&self, bits: u32) -> Box<dyn Iterator<Item = BigComplex> + '_> {
        let zero = BigComplex::zero(bits);
        let first = &self.lead.with_precision(bits)
            / &int_to_complex(&super::factorial(self.nu), bits);
        let nu = i64::from(self.nu);
        let step = self.step.with_precision(bits);
        let tail = std::iter::successors(Some((0i64, first)), move |(k, c)| {
            let k1 = k + 1;
            let next = &(c * &step) / &BigComplex::from_i64(k1 * (k1 + nu), bits);
            Some((k1, next))
        })
        .map(|(_, c)| c);
        Box::new(std::iter::repeat(zero).take(self.offset).chain(tail))
    }
}

/// Taylor coefficients `f^{(d)}(x)/d!` for `d = 0..=max_order`, plus the
/// number of series terms consumed.
pub fn taylor_coefficients<S: PowerSeries + ?Sized>(
    series: &S,
    x: &BigComplex,
    max_order: usize,
    prec: &Precision,
) -> Result<(Vec<BigComplex>, usize)> {
    let bits = prec.working_bits();
    let eps = threshold(prec);
    let start = series.leading_index();
    let mut sums = vec![BigComplex::zero(bits); max_order + 1];
    let mut powers = vec![BigComplex::one(bits)];
    let mut prev_max: Option<Float> = None;
    for (j, c) in series.coefficients(bits).enumerate() {
        if j >= start + prec.truncation_cap {
            break;
        }
        while powers.len() <= j {
            let next = powers.last().expect("non-empty") * x;
            powers.push(next);
        }
        let mut term_max = Float::new(64);
        if !c.is_zero() {
            for d in 0..=max_order.min(j) {
                let b = int_to_complex(&binomial(j as u32, d as u32), bits);
                let t = &(&c * &b) * &powers[j - d];
                let a = t.abs();
                if a > term_max {
                    term_max = Float::with_val(64, &a);
                }
                sums[d] += &t;
            }
        }
        if j > start + max_order {
            let sum_max = sums
                .iter()
                .map(BigComplex::abs)
                .fold(Float::new(64), |m, a| if a > m { a } else { m });
            let small = term_max <= Float::with_val(64, &sum_max * &eps);
            let decreasing = term_max.is_zero()
                || prev_max
                    .as_ref()
                    .is_some_and(|p| Float::with_val(64, &term_max * 2u32) <= *p);
            if small && decreasing {
                return Ok((sums, j + 1 - start));
            }
        }
        prev_max = Some(term_max);
    }
    Err(Error::TruncationCapExceeded {
        cap: prec.truncation_cap,
    })
}

/// Mixed Taylor coefficient `∂_x^a ∂_y^b G(xy) / (a! b!)` of
/// `G(u) = bessel_ratio(0, β² u)`; the confluent entries of the
/// two-group integral.
pub fn bessel_i0_mixed_taylor(
    beta_sq: &BigComplex,
    x: &BigComplex,
    y: &BigComplex,
    a: u32,
    b: u32,
    prec: &Precision,
) -> Result<BigComplex> {
    let bits = prec.working_bits();
    let eps = threshold(prec);
    let start = a.max(b);
    // c_k = (β²)^k / (k!)²
    let mut c = BigComplex::one(bits);
    for k in 1..=start {
        c = &(&c * beta_sq) / &BigComplex::from_i64(i64::from(k) * i64::from(k), bits);
    }
    let mut sum = BigComplex::zero(bits);
    let mut sum_max = Float::new(64);
    let mut prev: Option<Float> = None;
    let mut xp = x.powi(i64::from(start - a));
    let mut yp = y.powi(i64::from(start - b));
    for k in start..start + prec.truncation_cap as u32 {
        let coeff = Integer::from(binomial(k, a) * binomial(k, b));
        let t = &(&(&c * &int_to_complex(&coeff, bits)) * &xp) * &yp;
        sum += &t;
        let s = sum.abs();
        if s > sum_max {
            sum_max = s;
        }
        let ta = t.abs();
        if k > start + 1 {
            let small = ta <= Float::with_val(64, &sum_max * &eps);
            let decreasing =
                ta.is_zero() || prev.as_ref().is_some_and(|p| Float::with_val(64, &ta * 2u32) <= *p);
            if small && decreasing {
                return Ok(sum);
            }
        }
        prev = Some(ta);
        let k1 = i64::from(k) + 1;
        c = &(&c * beta_sq) / &BigComplex::from_i64(k1 * k1, bits);
        xp *= x;
        yp *= y;
    }
    Err(Error::TruncationCapExceeded {
        cap: prec.truncation_cap,
    })
}

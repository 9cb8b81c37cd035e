use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use super::series::{j0_conditioned, jm_conditioned, tail_bound};
use crate::error::{Error, Result};
use crate::precision::{BigComplex, Precision};
use crate::rng::Sampler;

pub const DEFAULT_MAX_N: usize = 10;
pub const MAX_RADIUS: u32 = 4;
/// Grid denominator for sampled coordinates.
const SAMPLE_DEN: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureParams {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub samples: usize,
    pub radius: u32,
    pub seed: u64,
    pub truncation_depth: usize,
    pub max_n: usize,
}

impl ConjectureParams {
    pub fn new(n: usize, m: usize) -> Self {
        ConjectureParams {
            n,
            m,
            samples: 10,
            radius: 2,
            seed: 42,
            truncation_depth: 64,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureSample {
    pub index: usize,
    pub z: Vec<BigComplex>,
    pub j0: BigComplex,
    pub jm: BigComplex,
    pub abs_diff: String,
    pub rel_diff: String,
    pub tolerance: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub precision_bits: u32,
    pub truncation_depth: usize,
    pub radius: u32,
    pub samples: Vec<ConjectureSample>,
    pub max_rel_diff: String,
    /// Absolute bound on the truncation error of `J₀ − J_m` over the disk.
    pub tail_bound: String,
    pub pass: bool,
}

fn sci(x: f64) -> String {
    format!("{x:.6e}")
}

/// Sample `i` at `N` variables always comes from stream `(N, i)`, so every
/// `m` sees the same points.
pub fn sample_point(seed: u64, n: usize, index: usize, radius: u32, prec: &Precision) -> Vec<BigComplex> {
    let mut s = Sampler::new(seed, ((n as u64) << 32) | index as u64);
    (0..n).map(|_| s.complex(radius, SAMPLE_DEN, prec)).collect()
}

fn check(params: &ConjectureParams, prec: &Precision) -> Result<()> {
    let p = params;
    if p.n == 0 || p.n > p.max_n {
        return Err(Error::invalid(format!("N must lie in 1..={}, got {}", p.max_n, p.n)));
    }
    if p.m == 0 || p.m > p.n {
        return Err(Error::invalid(format!("m must lie in 1..={}, got {}", p.n, p.m)));
    }
    if p.samples == 0 {
        return Err(Error::invalid("need at least one sample"));
    }
    if p.radius == 0 || p.radius > MAX_RADIUS {
        return Err(Error::invalid(format!("radius must lie in 1..={MAX_RADIUS}")));
    }
    if p.truncation_depth == 0 || p.truncation_depth > prec.truncation_cap {
        return Err(Error::TruncationCapExceeded { cap: prec.truncation_cap });
    }
    Ok(())
}

/// Compares truncated `J₀` and `J_m` on seeded points of the disk.
///
/// Sample `i` passes when `|J₀ − J_m| / |J₀|` is at most the truncation
/// bound divided by `|J₀|` plus a rounding allowance
/// `(N(K+2) + N³)(κ₀ + κ_m) 2^{-w}`: the sums lose at most `K+2` units of the
/// majorant per entry and elimination about `N³`, `κ` being the majorant
/// Hadamard ratios and `w` the working precision. The run fails with
/// [`Error::TruncationCapExceeded`] when `K` exceeds the cap or the tail is
/// not small against the series scale.
pub fn verify_conjecture(params: &ConjectureParams, prec: &Precision) -> Result<ConjectureReport> {
    check(params, prec)?;
    let (n, m) = (params.n, params.m);
    let tail = tail_bound(n, m, f64::from(params.radius), params.truncation_depth);
    if !tail.total().is_finite() || tail.total() > 2f64.powi(-(prec.bits as i32) / 4) {
        return Err(Error::TruncationCapExceeded { cap: params.truncation_depth });
    }
    let bits = prec.working_bits();
    let rounding = (n * (params.truncation_depth + 2) + n * n * n) as f64 * 2f64.powi(-(bits as i32));
    let samples: Vec<ConjectureSample> = (0..params.samples)
        .into_par_iter()
        .map(|index| {
            let z = sample_point(params.seed, n, index, params.radius, prec);
            let j0 = j0_conditioned(&z, params.truncation_depth, prec)?;
            let jm = jm_conditioned(&z, m, params.truncation_depth, prec)?;
            let abs: Float = (&j0.value - &jm.value).abs();
            let scale = j0.value.abs().to_f64();
            let rel = j0.value.rel_diff(&jm.value).to_f64();
            let tolerance = tail.total() / scale + rounding * (j0.condition + jm.condition);
            Ok(ConjectureSample {
                index,
                z,
                pass: rel <= tolerance,
                abs_diff: sci(abs.to_f64()),
                rel_diff: sci(rel),
                tolerance: sci(tolerance),
                j0: j0.value,
                jm: jm.value,
            })
        })
        .collect::<Result<_>>()?;
    let max_rel = samples
        .iter()
        .map(|s| s.rel_diff.parse::<f64>().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    Ok(ConjectureReport {
        n,
        m,
        seed: params.seed,
        precision_bits: prec.bits,
        truncation_depth: params.truncation_depth,
        radius: params.radius,
        pass: samples.iter().all(|s| s.pass),
        samples,
        max_rel_diff: sci(max_rel),
        tail_bound: sci(tail.total()),
    })
}

//! Fixed inputs shared by the benchmarks.

use rug::Rational;
use supergroup::integrals::SuperEigenvalues;
use supergroup::precision::{BigComplex, Precision};
use supergroup::rng::Sampler;

pub fn precision(bits: u32) -> Precision {
    Precision::with_bits(bits).expect("bits >= 64")
}

/// Seeded eigenvalues in the unit disk with `β = 1/2`.
pub fn eigenvalues(m: usize, n: usize, prec: &Precision) -> SuperEigenvalues {
    let mut s = Sampler::new(7, (m * 8 + n) as u64);
    let all = s.distinct_complex(m + n, 1, 1 << 12, prec);
    let beta = prec.rational(&Rational::from((1, 2)));
    SuperEigenvalues::new(beta, all[..m].to_vec(), all[m..].to_vec()).expect("valid sizes")
}

pub fn points(count: usize, radius: u32, prec: &Precision) -> Vec<BigComplex> {
    Sampler::new(11, count as u64).distinct_complex(count, radius, 1 << 16, prec)
}

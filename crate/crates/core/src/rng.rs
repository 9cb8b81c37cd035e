//! Seeded, counter-based sampling. Every work item draws from its own
//! ChaCha stream `(seed, stream)`, so results do not depend on the order
//! or thread in which items are evaluated.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rug::{Integer, Rational};

use crate::precision::{BigComplex, Precision};
use crate::young::Partition;

pub struct Sampler {
    rng: ChaCha20Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    /// Uniform on the grid `{k / den : |k| ≤ radius · den}`.
    pub fn rational(&mut self, radius: u32, den: u32) -> Rational {
        let r = i64::from(radius) * i64::from(den);
        Rational::from((Integer::from(self.rng.gen_range(-r..=r)), Integer::from(den)))
    }

    /// Non-zero variant of [`Sampler::rational`].
    pub fn nonzero_rational(&mut self, radius: u32, den: u32) -> Rational {
        loop {
            let q = self.rational(radius, den);
            if q != 0 {
                return q;
            }
        }
    }

    /// Rational point in the disk `|z| ≤ radius`.
    pub fn gaussian_rational(&mut self, radius: u32, den: u32) -> (Rational, Rational) {
        let r2 = Rational::from(radius) * Rational::from(radius);
        loop {
            let (re, im) = (self.rational(radius, den), self.rational(radius, den));
            if Rational::from(&re * &re) + Rational::from(&im * &im) <= r2 {
                return (re, im);
            }
        }
    }

    pub fn complex(&mut self, radius: u32, den: u32, prec: &Precision) -> BigComplex {
        let (re, im) = self.gaussian_rational(radius, den);
        prec.complex(&re, &im)
    }

    /// `count` pairwise distinct complex points in the disk.
    pub fn distinct_complex(&mut self, count: usize, radius: u32, den: u32, prec: &Precision) -> Vec<BigComplex> {
        let mut out: Vec<BigComplex> = Vec::with_capacity(count);
        while out.len() < count {
            let z = self.complex(radius, den, prec);
            if !out.contains(&z) {
                out.push(z);
            }
        }
        out
    }

    /// Partition with at most `max_rows` rows and parts at most `max_part`.
    pub fn partition(&mut self, max_rows: usize, max_part: usize) -> Partition {
        let rows = self.range(0, max_rows);
        let mut parts: Vec<usize> = (0..rows).map(|_| self.range(0, max_part)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition::new(parts).expect("sorted, positive parts")
    }
}

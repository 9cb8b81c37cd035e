//! Multiprecision scalars and the numeric kernels shared by every other
//! module: exact factorials, Vandermonde products, determinants and the
//! power series of the modified Bessel functions written in the squared
//! variable.

mod complex;
mod gauss;
mod linalg;
mod scalar;
mod series;

pub use complex::BigComplex;
pub use gauss::GaussRational;
pub use linalg::{
    determinant, determinant_cofactor, determinant_with_mode, vandermonde, vandermonde_with,
    DeterminantMode,
};
pub use scalar::{Conjugate, Field, Ring};
pub use series::{
    bessel_i0_mixed_taylor, bessel_ratio, bessel_ratio_with_terms, scaled_bessel_entry,
    taylor_coefficients, BesselSeries, PowerSeries,
};

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rationals; always reduced with a positive denominator.
pub type BigRational = Rational;

pub const DEFAULT_BITS: u32 = 256;
pub const DEFAULT_GUARD_BITS: u32 = 32;
pub const DEFAULT_TRUNCATION_CAP: usize = 512;
pub const MIN_BITS: u32 = 64;
pub const MIN_TRUNCATION_CAP: usize = 8;

/// Working precision and series truncation policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precision {
    pub bits: u32,
    pub guard_bits: u32,
    pub truncation_cap: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            bits: DEFAULT_BITS,
            guard_bits: DEFAULT_GUARD_BITS,
            truncation_cap: DEFAULT_TRUNCATION_CAP,
        }
    }
}

impl Precision {
    pub fn new(bits: u32, guard_bits: u32, truncation_cap: usize) -> Result<Self> {
        if bits < MIN_BITS {
            return Err(Error::invalid(format!(
                "precision must be at least {MIN_BITS} bits, got {bits}"
            )));
        }
        if truncation_cap < MIN_TRUNCATION_CAP {
            return Err(Error::invalid(format!(
                "truncation cap must be at least {MIN_TRUNCATION_CAP}, got {truncation_cap}"
            )));
        }
        Ok(Precision {
            bits,
            guard_bits,
            truncation_cap,
        })
    }

    pub fn with_bits(bits: u32) -> Result<Self> {
        Precision::new(bits, DEFAULT_GUARD_BITS, DEFAULT_TRUNCATION_CAP)
    }

    /// Bits carried by intermediate values.
    pub fn working_bits(&self) -> u32 {
        self.bits + self.guard_bits
    }

    pub fn zero(&self) -> BigComplex {
        BigComplex::zero(self.working_bits())
    }

    pub fn one(&self) -> BigComplex {
        BigComplex::one(self.working_bits())
    }

    pub fn int(&self, v: i64) -> BigComplex {
        BigComplex::from_i64(v, self.working_bits())
    }

    pub fn rational(&self, r: &Rational) -> BigComplex {
        BigComplex::from_rational(r, self.working_bits())
    }

    pub fn complex(&self, re: &Rational, im: &Rational) -> BigComplex {
        BigComplex::from_rationals(re, im, self.working_bits())
    }
}

/// Exact `n!`.
pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// `1/n!` as an exact rational, with the convention that it vanishes for
/// negative `n`.
pub fn inverse_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::new()
    } else {
        Rational::from((Integer::from(1), factorial(n as u32)))
    }
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gauss::GaussRational;
use super::scalar::{Conjugate, Field, Ring};
use super::MIN_BITS;
use crate::error::{Error, Result};

/// Multiprecision complex number. Binary operations round to the smaller
/// of the two operand precisions.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    inner: Complex,
}

fn clamp_bits(bits: u32) -> u32 {
    bits.max(MIN_BITS)
}

impl BigComplex {
    pub fn zero(bits: u32) -> Self {
        BigComplex {
            inner: Complex::new(clamp_bits(bits)),
        }
    }

    pub fn one(bits: u32) -> Self {
        Self::from_i64(1, bits)
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigComplex {
            inner: Complex::with_val(clamp_bits(bits), v),
        }
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        BigComplex {
            inner: Complex::with_val(clamp_bits(bits), (re, im)),
        }
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        BigComplex {
            inner: Complex::with_val(clamp_bits(bits), (r, 0)),
        }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, bits: u32) -> Self {
        BigComplex {
            inner: Complex::with_val(clamp_bits(bits), (re, im)),
        }
    }

    pub fn from_gauss(g: &GaussRational, bits: u32) -> Self {
        Self::from_rationals(&g.re, &g.im, bits)
    }

    pub fn from_floats(re: Float, im: Float) -> Self {
        let bits = clamp_bits(re.prec().min(im.prec()));
        BigComplex {
            inner: Complex::with_val(bits, (re, im)),
        }
    }

    /// Parses decimal strings such as `"1.5"` or `"-2e-3"`, and exact
    /// fractions such as `"-1/3"`, rounded once to `bits`.
    pub fn parse(re: &str, im: &str, bits: u32) -> Result<Self> {
        let bits = clamp_bits(bits);
        let parse = |s: &str| {
            let t = s.trim();
            if t.contains('/') {
                t.parse::<Rational>()
                    .map(|q| Float::with_val(bits, &q))
                    .map_err(|e| Error::invalid(format!("cannot parse number {s:?}: {e}")))
            } else {
                Float::parse(t)
                    .map(|p| Float::with_val(bits, p))
                    .map_err(|e| Error::invalid(format!("cannot parse number {s:?}: {e}")))
            }
        };
        Ok(Self::from_floats(parse(re)?, parse(im)?))
    }

    pub fn precision_bits(&self) -> u32 {
        let (a, b) = self.inner.prec();
        a.min(b)
    }

    pub fn with_precision(&self, bits: u32) -> Self {
        BigComplex {
            inner: Complex::with_val(clamp_bits(bits), &self.inner),
        }
    }

    pub fn re(&self) -> &Float {
        self.inner.real()
    }

    pub fn im(&self) -> &Float {
        self.inner.imag()
    }

    pub fn as_complex(&self) -> &Complex {
        &self.inner
    }

    pub fn into_complex(self) -> Complex {
        self.inner
    }

    pub fn from_complex(inner: Complex) -> Self {
        BigComplex { inner }
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.precision_bits(), self.inner.abs_ref())
    }

    /// Squared modulus; cheaper than [`abs`](Self::abs) for comparisons.
    pub fn norm_sqr(&self) -> Float {
        Float::with_val(self.precision_bits(), self.inner.norm_ref())
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            inner: Complex::with_val(self.precision_bits(), self.inner.conj_ref()),
        }
    }

    pub fn recip(&self) -> Self {
        BigComplex {
            inner: Complex::with_val(self.precision_bits(), self.inner.recip_ref()),
        }
    }

    pub fn powi(&self, e: i64) -> Self {
        let bits = self.precision_bits();
        BigComplex {
            inner: Complex::with_val(bits, (&self.inner).pow(e)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.inner.real().is_zero() && self.inner.imag().is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.inner.imag().is_zero()
    }

    /// `|self - other| / max(|self|, |other|)`; zero when both vanish.
    pub fn rel_diff(&self, other: &Self) -> Float {
        let diff = (self - other).abs();
        let scale = self.abs().max(&other.abs());
        if scale.is_zero() {
            diff
        } else {
            diff / scale
        }
    }

    /// Decimal significant digits that round-trip the precision.
    pub fn decimal_digits(bits: u32) -> usize {
        (f64::from(bits) * std::f64::consts::LOG10_2).ceil() as usize + 2
    }

    pub fn to_decimal_strings(&self, bits: u32) -> (String, String) {
        let digits = Self::decimal_digits(bits);
        let fmt = |f: &Float| {
            if f.is_zero() {
                "0".to_string()
            } else {
                f.to_string_radix_round(10, Some(digits), Round::Nearest)
            }
        };
        (fmt(self.inner.real()), fmt(self.inner.imag()))
    }

    /// Lossy conversion for diagnostics.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.inner.real().to_f64(), self.inner.imag().to_f64())
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal_strings(64);
        write!(f, "({re} + {im}i)[{}b]", self.precision_bits())
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal_strings(self.precision_bits().min(96));
        if self.inner.imag().is_zero() {
            write!(f, "{re}")
        } else {
            write!(f, "{re} + {im}i")
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &'a BigComplex) -> BigComplex {
                let bits = self.precision_bits().min(rhs.precision_bits());
                BigComplex {
                    inner: Complex::with_val(bits, &self.inner $op &rhs.inner),
                }
            }
        }
        impl $trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &'a BigComplex) -> BigComplex {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { inner: -self.inner }
    }
}

impl<'a> Neg for &'a BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -self.clone()
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, rhs: &BigComplex) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, rhs: &BigComplex) {
        *self = &*self * rhs;
    }
}

impl Ring for BigComplex {
    fn zero_like(&self) -> Self {
        BigComplex::zero(self.precision_bits())
    }
    fn one_like(&self) -> Self {
        BigComplex::one(self.precision_bits())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigComplex::from_i64(v, self.precision_bits())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        BigComplex::is_zero(self)
    }
}

impl Field for BigComplex {
    type Magnitude = Float;

    fn magnitude(&self) -> Float {
        self.norm_sqr()
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        BigComplex::from_rational(r, self.precision_bits())
    }
}

impl Conjugate for BigComplex {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

/// Wire form `{"re": "...", "im": "...", "bits": N}` with decimal strings.
#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    re: String,
    #[serde(default = "zero_string")]
    im: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bits: Option<u32>,
}

fn zero_string() -> String {
    "0".to_string()
}

impl Serialize for BigComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let bits = self.precision_bits();
        let (re, im) = self.to_decimal_strings(bits);
        ComplexRepr {
            re,
            im,
            bits: Some(bits),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(d)?;
        let bits = repr.bits.unwrap_or(super::DEFAULT_BITS + super::DEFAULT_GUARD_BITS);
        BigComplex::parse(&repr.re, &repr.im, bits).map_err(D::Error::custom)
    }
}

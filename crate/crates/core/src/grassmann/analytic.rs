use std::ops::Deref;

use super::GrassmannElement;
use crate::error::{Error, Result};
use crate::precision::{taylor_coefficients, BigComplex, Field, PowerSeries, Precision, Ring};

/// Even element of the algebra: body plus a nilpotent, commuting soul.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenElement<C>(GrassmannElement<C>);

impl<C: Ring> EvenElement<C> {
    pub fn new(x: GrassmannElement<C>) -> Result<Self> {
        if !x.is_even() {
            return Err(Error::invalid("element has odd terms"));
        }
        Ok(EvenElement(x))
    }

    pub fn scalar(c: C, gens: usize) -> Self {
        EvenElement(GrassmannElement::scalar(c, gens))
    }

    pub fn into_inner(self) -> GrassmannElement<C> {
        self.0
    }

    /// Largest power of the soul that can be non-zero.
    pub fn soul_order(&self) -> usize {
        self.0.generator_count() / 2
    }

    /// `Σ_j t_j soul^j` with `t_j` the Taylor coefficients of `f` at the
    /// body; `taylor` needs at least `soul_order() + 1` entries unless the
    /// soul dies earlier.
    pub fn apply_taylor(&self, taylor: &[C]) -> Result<Self> {
        let soul = self.0.soul();
        let gens = self.0.generator_count();
        let unit = self.0.unit();
        let mut acc = GrassmannElement::zero(gens, unit);
        let mut power = GrassmannElement::one(gens, unit);
        for (j, t) in taylor.iter().enumerate() {
            if j > 0 {
                power = power.multiply(&soul)?;
            }
            if power.is_zero() {
                return Ok(EvenElement(acc));
            }
            acc = acc.add(&power.scale(t))?;
        }
        if !power.multiply(&soul)?.is_zero() {
            return Err(Error::invalid("not enough Taylor coefficients for the soul order"));
        }
        Ok(EvenElement(acc))
    }
}

impl<C: Field> EvenElement<C> {
    /// Finite Neumann series; fails when the body vanishes, which for the
    /// (1|1) eigenvalue difference is exactly the non-diagonalizable case.
    pub fn even_inverse(&self) -> Result<Self> {
        self.0.inverse().map(EvenElement)
    }
}

impl<C> Deref for EvenElement<C> {
    type Target = GrassmannElement<C>;
    fn deref(&self) -> &GrassmannElement<C> {
        &self.0
    }
}

/// `f(body + soul) = Σ_j f^{(j)}(body) soul^j / j!` for a power series `f`
/// converging at the body.
pub fn analytic_eval<S: PowerSeries + ?Sized>(
    series: &S,
    w: &EvenElement<BigComplex>,
    prec: &Precision,
) -> Result<EvenElement<BigComplex>> {
    let order = w.soul_order();
    let (taylor, _) = taylor_coefficients(series, &w.body(), order, prec)?;
    w.apply_taylor(&taylor)
}

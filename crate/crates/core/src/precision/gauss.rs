use std::fmt;

use rug::Rational;

use super::scalar::{Conjugate, Field, Ring};

/// Exact Gaussian rational `re + i·im`, used wherever a symbolic identity
/// needs the imaginary unit without rounding.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::new(),
        }
    }

    pub fn i() -> Self {
        GaussRational {
            re: Rational::new(),
            im: Rational::from(1),
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::real(Rational::from(v))
    }

    pub fn norm(&self) -> Rational {
        Rational::from(&self.re * &self.re) + Rational::from(&self.im * &self.im)
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl Ring for GaussRational {
    fn zero_like(&self) -> Self {
        GaussRational::default()
    }
    fn one_like(&self) -> Self {
        GaussRational::from_i64(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        GaussRational::from_i64(v)
    }
    fn plus(&self, rhs: &Self) -> Self {
        GaussRational {
            re: Rational::from(&self.re + &rhs.re),
            im: Rational::from(&self.im + &rhs.im),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        GaussRational {
            re: Rational::from(&self.re - &rhs.re),
            im: Rational::from(&self.im - &rhs.im),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        let rr = Rational::from(&self.re * &rhs.re);
        let ii = Rational::from(&self.im * &rhs.im);
        let ri = Rational::from(&self.re * &rhs.im);
        let ir = Rational::from(&self.im * &rhs.re);
        GaussRational {
            re: rr - ii,
            im: ri + ir,
        }
    }
    fn negate(&self) -> Self {
        GaussRational {
            re: Rational::from(-&self.re),
            im: Rational::from(-&self.im),
        }
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl Field for GaussRational {
    type Magnitude = u8;

    fn magnitude(&self) -> u8 {
        u8::from(!Ring::is_zero(self))
    }
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(GaussRational {
            re: Rational::from(&self.re / &n),
            im: Rational::from(-&self.im) / n,
        })
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        GaussRational::real(r.clone())
    }
}

impl Conjugate for GaussRational {
    fn conjugate(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: Rational::from(-&self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(i.times(&i), GaussRational::from_i64(-1));
    }

    #[test]
    fn inverse_is_exact() {
        let z = GaussRational::new(Rational::from((3, 4)), Rational::from(-2));
        let inv = z.inverse().unwrap();
        assert!(z.times(&inv).is_one());
        assert!(GaussRational::default().inverse().is_none());
    }
}

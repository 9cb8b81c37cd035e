use std::fmt::Debug;

use rug::{Integer, Rational};

/// Commutative ring operations shared by the exact and multiprecision
/// scalars. Constants are produced "like" an existing value so that
/// precision annotations travel with them.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        self == &self.one_like()
    }

    fn scale_i64(&self, k: i64) -> Self {
        self.times(&self.from_i64_like(k))
    }

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Ordering key used for pivot selection.
    type Magnitude: PartialOrd;

    fn magnitude(&self) -> Self::Magnitude;
    fn inverse(&self) -> Option<Self>;
    fn from_rational_like(&self, r: &Rational) -> Self;

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }
}

/// Complex conjugation (identity on real scalars).
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

impl Ring for Integer {
    fn zero_like(&self) -> Self {
        Integer::new()
    }
    fn one_like(&self) -> Self {
        Integer::from(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Integer::from(v)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Integer::from(self + rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Integer::from(self - rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        Integer::from(self * rhs)
    }
    fn negate(&self) -> Self {
        Integer::from(-self)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::new()
    }
    fn one_like(&self) -> Self {
        Rational::from(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rational::from(v)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn negate(&self) -> Self {
        Rational::from(-self)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
}

impl Field for Rational {
    type Magnitude = u8;

    fn magnitude(&self) -> u8 {
        u8::from(!Ring::is_zero(self))
    }
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Rational::from(self.recip_ref()))
        }
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
}

impl Conjugate for Rational {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

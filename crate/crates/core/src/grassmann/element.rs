use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::precision::{Conjugate, Field, Ring};

/// Generator subsets are bitmasks; at most this many generators.
pub const MAX_GENERATORS: usize = 64;

/// Index of `α_k` (0-based pair `k`); its partner `α_k*` is `2k + 1`.
pub fn alpha(k: usize) -> usize {
    2 * k
}

/// Index of `α_k*`.
pub fn alpha_star(k: usize) -> usize {
    2 * k + 1
}

/// Sign of `a · b` relative to the canonical order of `a ∪ b`, or `None`
/// when the subsets overlap.
fn merge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut odd = false;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j == 63 { 0 } else { a >> (j + 1) };
        odd ^= above.count_ones() % 2 == 1;
    }
    Some(odd)
}

/// Canonical subset and sign of the ordered product `g_0 g_1 ⋯`.
fn ordered_product(gens: &[usize]) -> Option<(u64, bool)> {
    let mut subset = 0u64;
    let mut odd = false;
    for &g in gens {
        let bit = 1u64 << g;
        odd ^= merge_sign(subset, bit)?;
        subset |= bit;
    }
    Some((subset, odd))
}

fn bits_of(subset: u64) -> impl Iterator<Item = usize> {
    let mut rest = subset;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(j)
    })
}

/// Element of the Grassmann algebra on `gens` generators, ordered
/// `α_1 < α_1* < α_2 < α_2* < ⋯`. Terms are keyed by the generator subset
/// in ascending order; zero coefficients are never stored.
///
/// `unit` is the scalar one, kept so that constants can be built at the
/// precision of the coefficients.
#[derive(Clone, PartialEq)]
pub struct GrassmannElement<C> {
    gens: usize,
    unit: C,
    terms: BTreeMap<u64, C>,
}

impl<C: Ring> GrassmannElement<C> {
    pub fn zero(gens: usize, unit: &C) -> Self {
        assert!(gens <= MAX_GENERATORS, "too many generators: {gens}");
        GrassmannElement {
            gens,
            unit: unit.one_like(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: C, gens: usize) -> Self {
        let mut x = Self::zero(gens, &c);
        x.insert(0, c);
        x
    }

    pub fn one(gens: usize, unit: &C) -> Self {
        Self::scalar(unit.one_like(), gens)
    }

    /// The single generator `g`.
    pub fn generator(g: usize, gens: usize, unit: &C) -> Self {
        assert!(g < gens, "generator {g} out of range");
        let mut x = Self::zero(gens, unit);
        x.insert(1 << g, unit.one_like());
        x
    }

    /// `c · g_0 g_1 ⋯` for an ordered list of generators.
    pub fn monomial(c: C, ordered: &[usize], gens: usize) -> Self {
        let mut x = Self::zero(gens, &c);
        assert!(ordered.iter().all(|&g| g < gens), "generator out of range");
        if let Some((subset, odd)) = ordered_product(ordered) {
            x.insert(subset, if odd { c.negate() } else { c });
        }
        x
    }

    fn insert(&mut self, subset: u64, c: C) {
        if !c.is_zero() {
            self.terms.insert(subset, c);
        }
    }

    fn accumulate(&mut self, subset: u64, c: C) {
        match self.terms.get_mut(&subset) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&subset);
                }
            }
            None => self.insert(subset, c),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.gens
    }

    pub fn unit(&self) -> &C {
        &self.unit
    }

    /// `(subset, coefficient)` pairs in ascending subset order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &C)> {
        self.terms.iter().map(|(&s, c)| (s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the canonical monomial with the given generators.
    pub fn coefficient(&self, gens: &[usize]) -> C {
        match ordered_product(gens) {
            Some((subset, odd)) => {
                let c = self.terms.get(&subset).cloned().unwrap_or_else(|| self.unit.zero_like());
                if odd {
                    c.negate()
                } else {
                    c
                }
            }
            None => self.unit.zero_like(),
        }
    }

    /// Coefficient of the empty monomial.
    pub fn body(&self) -> C {
        self.terms.get(&0).cloned().unwrap_or_else(|| self.unit.zero_like())
    }

    /// The element minus its body.
    pub fn soul(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&0);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|s| s.count_ones() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|s| s.count_ones() % 2 == 1)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.gens != other.gens {
            return Err(Error::GeneratorMismatch {
                left: self.gens,
                right: other.gens,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.accumulate(s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.accumulate(s, c.negate());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.negate();
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.gens, &self.unit);
        for (&s, c) in &self.terms {
            out.insert(s, c.times(k));
        }
        out
    }

    /// Grassmann product; the sign is the parity of the merge permutation.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.gens, &self.unit);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if let Some(odd) = merge_sign(a, b) {
                    let c = ca.times(cb);
                    out.accumulate(a | b, if odd { c.negate() } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Iterated Berezin integral `∫dχ_1 ⋯ dχ_k x` with `order = [χ_1, …, χ_k]`
    /// as written; the rightmost differential acts first and `∫dχ χ = 1`.
    pub fn berezin_integrate(&self, order: &[usize]) -> Result<Self> {
        let mut cur = self.clone();
        for &g in order.iter().rev() {
            if g >= self.gens {
                return Err(Error::invalid(format!("generator {g} out of range")));
            }
            cur = cur.integrate_one(g);
        }
        Ok(cur)
    }

    /// `∫dχ_g`: move `χ_g` to the front and drop it.
    fn integrate_one(&self, g: usize) -> Self {
        let bit = 1u64 << g;
        let mut out = Self::zero(self.gens, &self.unit);
        for (&s, c) in &self.terms {
            if s & bit == 0 {
                continue;
            }
            let before = (s & (bit - 1)).count_ones();
            let c = if before % 2 == 1 { c.negate() } else { c.clone() };
            out.insert(s & !bit, c);
        }
        out
    }

    /// Highest subset size present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|s| s.count_ones() as usize).max().unwrap_or(0)
    }

    /// Converts the coefficients, e.g. exact to multiprecision.
    pub fn map_coefficients<D: Ring>(&self, unit: &D, f: impl Fn(&C) -> D) -> GrassmannElement<D> {
        let mut out = GrassmannElement::zero(self.gens, unit);
        for (&s, c) in &self.terms {
            out.insert(s, f(c));
        }
        out
    }
}

impl<C: Ring + Conjugate> GrassmannElement<C> {
    /// Antilinear involution with `(χ_1 χ_2)* = χ_2* χ_1*` and `(χ*)* = χ`.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(self.gens, &self.unit);
        for (&s, c) in &self.terms {
            let mut reversed: Vec<usize> = bits_of(s).map(|g| g ^ 1).collect();
            reversed.reverse();
            assert!(reversed.iter().all(|&g| g < self.gens), "conjugate needs paired generators");
            let (subset, odd) = ordered_product(&reversed).expect("distinct generators");
            let cc = c.conjugate();
            out.accumulate(subset, if odd { cc.negate() } else { cc });
        }
        out
    }
}

impl<C: Field> GrassmannElement<C> {
    /// Multiplicative inverse via the finite Neumann series around the
    /// body; fails when the body vanishes.
    pub fn inverse(&self) -> Result<Self> {
        let body = self.body();
        let inv_body = body.inverse().ok_or(Error::NonInvertibleBody)?;
        // x = b (1 + s/b);  x⁻¹ = b⁻¹ Σ_j (-s/b)^j
        let t = self.soul().scale(&inv_body.negate());
        let mut acc = Self::one(self.gens, &self.unit);
        let mut power = acc.clone();
        for _ in 0..self.gens {
            power = power.multiply(&t)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&inv_body))
    }
}

impl<C: Ring> Ring for GrassmannElement<C> {
    fn zero_like(&self) -> Self {
        Self::zero(self.gens, &self.unit)
    }
    fn one_like(&self) -> Self {
        Self::one(self.gens, &self.unit)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Self::scalar(self.unit.from_i64_like(v), self.gens)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("generator counts agree")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs).expect("generator counts agree")
    }
    /// Only commutative on even elements, which is where the generic
    /// determinant and Vandermonde kernels are applied.
    fn times(&self, rhs: &Self) -> Self {
        self.multiply(rhs).expect("generator counts agree")
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: fmt::Debug> fmt::Debug for GrassmannElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<(Vec<usize>, &C)> = self.terms.iter().map(|(&s, c)| (bits_of(s).collect(), c)).collect();
        f.debug_struct("GrassmannElement")
            .field("gens", &self.gens)
            .field("terms", &list)
            .finish()
    }
}

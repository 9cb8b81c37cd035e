//! Limits of the (1|1) integrals at `M = [[a, α], [β, b]]` as `b → a`,
//! where `M` stops being diagonalizable. `c` is the coefficient of the
//! nilpotent product `αβ`; the result is the coefficient multiplying it
//! (the body of the limit is zero).

use crate::error::Result;
use crate::precision::{bessel_ratio, taylor_coefficients, BesselSeries, BigComplex, Precision};

/// `β c (F₁''F₀ − F₁F₀'')(a)` with `F_ν(x) = β^ν x^ν ratio(ν, β²x)` and
/// derivatives in `x = λ²`.
pub fn nondiag_limit_ls(beta: &BigComplex, a: &BigComplex, c: &BigComplex, prec: &Precision) -> Result<BigComplex> {
    let bits = prec.working_bits();
    let beta = beta.with_precision(bits);
    let a = a.with_precision(bits);
    let (f0, _) = taylor_coefficients(&BesselSeries::scaled_entry(0, &beta), &a, 2, prec)?;
    let (f1, _) = taylor_coefficients(&BesselSeries::scaled_entry(1, &beta), &a, 2, prec)?;
    // second derivative = 2 · Taylor coefficient
    let two = BigComplex::from_i64(2, bits);
    let d = &(&f1[2] * &f0[0]) - &(&f1[0] * &f0[2]);
    Ok(&(&(&beta * c) * &two) * &d)
}

/// `β² c (y₁ − y₂) [y₁ G'(a y₁) G(a y₂) + y₂ G(a y₁) G'(a y₂)]` with
/// `G(u) = ratio(0, β²u)`, for `μ² = (y₁ | y₂)`.
pub fn nondiag_limit_bk(
    beta: &BigComplex,
    a: &BigComplex,
    c: &BigComplex,
    mu: [&BigComplex; 2],
    prec: &Precision,
) -> Result<BigComplex> {
    let bits = prec.working_bits();
    let beta = beta.with_precision(bits);
    let a = a.with_precision(bits);
    let b2 = &beta * &beta;
    let [y1, y2] = mu.map(|y| y.with_precision(bits));
    let g = |u: &BigComplex| bessel_ratio(0, &(&b2 * u), prec);
    let dg = |u: &BigComplex| Ok::<_, crate::error::Error>(&b2 * &bessel_ratio(1, &(&b2 * u), prec)?);
    let (u1, u2) = (&a * &y1, &a * &y2);
    let bracket = &(&(&y1 * &dg(&u1)?) * &g(&u2)?) + &(&(&y2 * &g(&u1)?) * &dg(&u2)?);
    Ok(&(&(&b2 * c) * &(&y1 - &y2)) * &bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    #[test]
    fn zero_coupling_gives_zero() {
        let p = Precision::default();
        let half = p.rational(&Rational::from((1, 2)));
        let a = p.int(3);
        assert!(nondiag_limit_ls(&half, &a, &p.zero(), &p).unwrap().is_zero());
        let (y1, y2) = (p.int(1), p.int(-2));
        assert!(nondiag_limit_bk(&half, &a, &p.zero(), [&y1, &y2], &p).unwrap().is_zero());
    }

    #[test]
    fn ls_matches_bessel_square() {
        // at β = 1/2: β c I₁(√a)² / (2a), with I₁(√a) = (√a/2) ratio(1, a/4)
        let p = Precision::default();
        let half = p.rational(&Rational::from((1, 2)));
        let a = p.rational(&Rational::from((7, 3)));
        let c = p.rational(&Rational::from((-2, 5)));
        let r = bessel_ratio(1, &(&a / &p.int(4)), &p).unwrap();
        let expect = &(&c * &(&r * &r)) / &p.int(16);
        let got = nondiag_limit_ls(&half, &a, &c, &p).unwrap();
        assert!(got.rel_diff(&expect) < 1e-70);
    }
}

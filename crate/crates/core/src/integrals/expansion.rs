//! Truncated character expansions of both integrals, used as independent
//! oracles for the closed forms.

use rug::{Float, Rational};
use serde::Serialize;

use super::{cross_product, SuperEigenvalues};
use crate::error::{Error, Result};
use crate::integrals::c_constant;
use crate::precision::{factorial, vandermonde, BigComplex, Precision};
use crate::young::{norm_alpha, schur_numeric, sigma_over_factorial, supercharacter_amu_numeric, SuperDiagram};

/// Partial sum over all non-degenerate diagrams with at most `max_boxes`
/// boxes, with a rigorous bound on the omitted terms.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterSum {
    pub value: BigComplex,
    pub tail_bound: f64,
    pub diagrams: usize,
    pub max_boxes: usize,
}

fn require_super(ev: &SuperEigenvalues) -> Result<()> {
    if ev.m == 0 || ev.n == 0 {
        return Err(Error::invalid("character expansion needs m, n >= 1"));
    }
    Ok(())
}

fn max_abs(values: &[BigComplex]) -> f64 {
    values.iter().map(|v| v.abs().to_f64()).fold(0.0, f64::max)
}

/// `Σ_{s > L} w^s / s!` for `L = max_boxes − mn`, bounded by a geometric
/// majorant once the ratio drops below one.
fn exp_tail(w: f64, after: usize) -> f64 {
    let mut s = after + 1;
    let mut term = (1..=s).fold(1.0f64, |t, k| t * w / k as f64);
    let mut acc = 0.0;
    while w / (s + 1) as f64 >= 0.5 {
        acc += term;
        s += 1;
        term *= w / s as f64;
    }
    acc + 2.0 * term
}

/// Omitted-term bound shared by both expansions. Each (|p|, |q|) shell is
/// at most `pref · u^|p| v^|q| / (|p|! |q|!)`: the Schur polynomials are
/// bounded by their dimension times `R^|p|` and `Σ_p σ_p² = |p|!`.
fn tail_bound(pref: f64, u: f64, v: f64, free_boxes: Option<usize>) -> f64 {
    match free_boxes {
        None => f64::INFINITY,
        Some(l) => pref * exp_tail(u + v, l),
    }
}

fn rational_to_complex(r: &Rational, bits: u32) -> BigComplex {
    BigComplex::from_rational(r, bits)
}

/// `I_LS ≈ Σ_t (σ_t β^|t| / |t|!)² α_t ξ_t(λ²)`.
pub fn ls_character_sum(ev: &SuperEigenvalues, max_boxes: usize, prec: &Precision) -> Result<CharacterSum> {
    require_super(ev)?;
    let ev = ev.at_precision(prec);
    let bits = prec.working_bits();
    let beta_sq = &ev.beta * &ev.beta;
    let diagrams = SuperDiagram::all_up_to(ev.m, ev.n, max_boxes);
    let mut value = BigComplex::zero(bits);
    for sd in &diagrams {
        let s = sigma_over_factorial(&sd.assemble());
        let coeff = Rational::from(&s * &s) * norm_alpha(sd);
        let xi = supercharacter_amu_numeric(sd, &ev.bosonic, &ev.fermionic, prec)?;
        let term = &(&rational_to_complex(&coeff, bits) * &beta_sq.powi(sd.size() as i64)) * &xi;
        value += &term;
    }
    let b2 = beta_sq.abs().to_f64();
    let mn = ev.m * ev.n;
    let pref = b2.powi(mn as i32) * cross_product(&ev.bosonic, &ev.fermionic, bits).abs().to_f64();
    let u = b2 * max_abs(&ev.bosonic);
    let v = b2 * max_abs(&ev.fermionic);
    Ok(CharacterSum {
        value,
        tail_bound: tail_bound(pref, u, v, max_boxes.checked_sub(mn)),
        diagrams: diagrams.len(),
        max_boxes,
    })
}

/// `I_BK ≈ Σ_t (σ_t α_t β^|t| / |t|!)² ξ_t(λ²) ξ_t(μ²)`.
pub fn bk_character_sum(
    lam: &SuperEigenvalues,
    mu: &SuperEigenvalues,
    max_boxes: usize,
    prec: &Precision,
) -> Result<CharacterSum> {
    require_super(lam)?;
    if (lam.m, lam.n) != (mu.m, mu.n) || lam.beta != mu.beta {
        return Err(Error::invalid("λ and μ must share (m|n) and β"));
    }
    let (lam, mu) = (lam.at_precision(prec), mu.at_precision(prec));
    let bits = prec.working_bits();
    let beta_sq = &lam.beta * &lam.beta;
    let diagrams = SuperDiagram::all_up_to(lam.m, lam.n, max_boxes);
    let mut value = BigComplex::zero(bits);
    for sd in &diagrams {
        let c = sigma_over_factorial(&sd.assemble()) * norm_alpha(sd);
        let coeff = Rational::from(&c * &c);
        let xl = supercharacter_amu_numeric(sd, &lam.bosonic, &lam.fermionic, prec)?;
        let xm = supercharacter_amu_numeric(sd, &mu.bosonic, &mu.fermionic, prec)?;
        let term = &(&rational_to_complex(&coeff, bits) * &beta_sq.powi(sd.size() as i64)) * &(&xl * &xm);
        value += &term;
    }
    let b2 = beta_sq.abs().to_f64();
    let mn = lam.m * lam.n;
    let cross = cross_product(&lam.bosonic, &lam.fermionic, bits).abs()
        * cross_product(&mu.bosonic, &mu.fermionic, bits).abs();
    let pref = b2.powi(mn as i32) * Float::with_val(64, cross).to_f64();
    let u = b2 * max_abs(&lam.bosonic) * max_abs(&mu.bosonic);
    let v = b2 * max_abs(&lam.fermionic) * max_abs(&mu.fermionic);
    Ok(CharacterSum {
        value,
        tail_bound: tail_bound(pref, u, v, max_boxes.checked_sub(mn)),
        diagrams: diagrams.len(),
        max_boxes,
    })
}

/// The intermediate form summed over `(p, q)`:
/// `C_m C_n Σ Δ(k_b) Δ(k_f) / ∏ (k!)² · ∏ 1/(k_i + k_{m+j} + 1) · Σ(x) χ_p χ_q`
/// at `x = β² λ²`.
pub fn ls_hook_sum(ev: &SuperEigenvalues, max_boxes: usize, prec: &Precision) -> Result<BigComplex> {
    require_super(ev)?;
    let ev = ev.at_precision(prec);
    let bits = prec.working_bits();
    let beta_sq = &ev.beta * &ev.beta;
    let xb: Vec<BigComplex> = ev.bosonic.iter().map(|x| &beta_sq * x).collect();
    let xf: Vec<BigComplex> = ev.fermionic.iter().map(|x| &beta_sq * x).collect();
    let cross = cross_product(&xb, &xf, bits);
    let unit = rug::Integer::from(1);
    let mut sum = BigComplex::zero(bits);
    for sd in SuperDiagram::all_up_to(ev.m, ev.n, max_boxes) {
        let kb = sd.bosonic_k();
        let kf = sd.fermionic_k();
        let to_int = |v: &[usize]| v.iter().map(|&k| rug::Integer::from(k)).collect::<Vec<_>>();
        let mut den = rug::Integer::from(1);
        for &k in kb.iter().chain(&kf) {
            let f = factorial(k as u32);
            den *= f.clone() * &f;
        }
        for a in &kb {
            for b in &kf {
                den *= (a + b + 1) as u64;
            }
        }
        let num = vandermonde(&to_int(&kb), &unit) * vandermonde(&to_int(&kf), &unit);
        let coeff = rational_to_complex(&Rational::from((num, den)), bits);
        let chi = &schur_numeric(&sd.p, &xb, prec)? * &schur_numeric(&sd.q, &xf, prec)?;
        sum += &(&coeff * &chi);
    }
    let c = Rational::from(c_constant(ev.m) * c_constant(ev.n));
    Ok(&(&rational_to_complex(&c, bits) * &cross) * &sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::{bk_closed_form, ls_closed_form};

    fn q(a: i64, b: i64) -> BigComplex {
        Precision::default().rational(&Rational::from((a, b)))
    }

    fn ev(beta: &BigComplex, bos: &[BigComplex], ferm: &[BigComplex]) -> SuperEigenvalues {
        SuperEigenvalues::new(beta.clone(), bos.to_vec(), ferm.to_vec()).unwrap()
    }

    #[test]
    fn leading_term_one_one() {
        // only the single-box diagram: β² (x − y)
        let p = Precision::default();
        let beta = q(1, 2);
        let e = ev(&beta, &[q(2, 3)], &[q(-1, 5)]);
        let s = ls_character_sum(&e, 1, &p).unwrap();
        assert_eq!(s.diagrams, 1);
        let expect = &(&beta * &beta) * &(&q(2, 3) - &q(-1, 5));
        assert!(s.value.rel_diff(&expect) < 1e-70);
    }

    #[test]
    fn ls_sum_converges_to_closed_form() {
        let p = Precision::default();
        let e = ev(&q(1, 2), &[q(2, 3), q(-1, 4)], &[q(1, 5)]);
        let exact = ls_closed_form(&e, &p).unwrap().value;
        let s = ls_character_sum(&e, 14, &p).unwrap();
        let err = (&s.value - &exact).abs().to_f64();
        assert!(err <= s.tail_bound, "{err} > {}", s.tail_bound);
        assert!(s.tail_bound < 1e-12);
        let h = ls_hook_sum(&e, 14, &p).unwrap();
        assert!((&h - &exact).abs().to_f64() <= s.tail_bound);
    }

    #[test]
    fn bk_sum_converges_to_closed_form() {
        let p = Precision::default();
        let beta = q(1, 2);
        let lam = ev(&beta, &[q(3, 4)], &[q(-1, 3)]);
        let mu = ev(&beta, &[q(1, 2)], &[q(2, 7)]);
        let exact = bk_closed_form(&lam, &mu, &p).unwrap().value;
        let s = bk_character_sum(&lam, &mu, 12, &p).unwrap();
        let err = (&s.value - &exact).abs().to_f64();
        assert!(err <= s.tail_bound, "{err} > {}", s.tail_bound);
        assert!(s.tail_bound < 1e-10);
    }
}

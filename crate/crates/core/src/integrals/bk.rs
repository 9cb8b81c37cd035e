use super::{
    confluent_orders, confluent_vandermonde, cross_product, det_or_one, integer_to_complex, near_coincidences,
    Branch, IntegralResult, SuperEigenvalues,
};
use crate::error::{Error, Result};
use crate::integrals::c_constant;
use crate::precision::{bessel_i0_mixed_taylor, bessel_ratio_with_terms, BigComplex, Precision};

/// Supersymmetric Berezin-Karpelevich integral
/// `C_m² C_n² β^{(m+n)-(m-n)²} det[I₀(2βλ_iμ_j)]_m det[I₀(2βλ_{m+i}μ_{m+j})]_n / (B(λ²) B(μ²))`.
pub fn bk_closed_form(lam: &SuperEigenvalues, mu: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    check_compatible(lam, mu)?;
    let (lam, mu) = (lam.at_precision(prec), mu.at_precision(prec));
    let bits = prec.working_bits();
    for (label, ev) in [("λ", &lam), ("μ", &mu)] {
        if let Some((b, f)) = ev.boson_fermion_coincidence() {
            return Ok(IntegralResult::vanishing(
                bits,
                format!("{label}: bosonic entry {b} equals fermionic entry {f}"),
            ));
        }
    }
    evaluate(&lam, &mu, prec)
}

/// Confluent form: repeats in either set turn the matching rows (for λ) or
/// columns (for μ) into mixed Taylor coefficients in `λ²`, `μ²`, with the
/// confluent Vandermonde in the Berezinian.
pub fn bk_confluent(lam: &SuperEigenvalues, mu: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    check_compatible(lam, mu)?;
    let (lam, mu) = (lam.at_precision(prec), mu.at_precision(prec));
    if !super::ls::has_repeats(&lam) && !super::ls::has_repeats(&mu) {
        return Err(Error::invalid("no repeated eigenvalue inside a sector"));
    }
    for ev in [&lam, &mu] {
        if let Some((boson, fermion)) = ev.boson_fermion_coincidence() {
            return Err(Error::BosonFermionCoincidence { boson, fermion });
        }
    }
    evaluate(&lam, &mu, prec)
}

fn check_compatible(lam: &SuperEigenvalues, mu: &SuperEigenvalues) -> Result<()> {
    if (lam.m, lam.n) != (mu.m, mu.n) {
        return Err(Error::invalid(format!(
            "λ is ({}|{}) but μ is ({}|{})",
            lam.m, lam.n, mu.m, mu.n
        )));
    }
    if lam.beta != mu.beta {
        return Err(Error::invalid("λ and μ carry different β"));
    }
    Ok(())
}

/// `det[∂^a_x ∂^b_y G(xy) / a!b!]` for one sector, `G(u) = I₀(2β√u)`.
fn sector_determinant(
    beta_sq: &BigComplex,
    xs: &[BigComplex],
    ys: &[BigComplex],
    prec: &Precision,
    terms_used: &mut usize,
) -> Result<BigComplex> {
    let bits = prec.working_bits();
    let ox = confluent_orders(xs);
    let oy = confluent_orders(ys);
    let mut matrix = Vec::with_capacity(xs.len());
    for (x, &a) in xs.iter().zip(&ox) {
        let mut row = Vec::with_capacity(ys.len());
        for (y, &b) in ys.iter().zip(&oy) {
            if a == 0 && b == 0 {
                let (v, used) = bessel_ratio_with_terms(0, &(&(beta_sq * x) * y), prec)?;
                *terms_used = (*terms_used).max(used);
                row.push(v);
            } else {
                row.push(bessel_i0_mixed_taylor(beta_sq, x, y, a as u32, b as u32, prec)?);
            }
        }
        matrix.push(row);
    }
    det_or_one(&matrix, bits)
}

/// `1 / B(x; m, n)` with confluent Vandermondes.
fn inverse_berezinian(ev: &SuperEigenvalues, bits: u32) -> Result<BigComplex> {
    let vb = confluent_vandermonde(&ev.bosonic, &confluent_orders(&ev.bosonic), bits)?;
    let vf = confluent_vandermonde(&ev.fermionic, &confluent_orders(&ev.fermionic), bits)?;
    Ok(&cross_product(&ev.bosonic, &ev.fermionic, bits) / &(&vb * &vf))
}

fn evaluate(lam: &SuperEigenvalues, mu: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    let bits = prec.working_bits();
    let (m, n) = (lam.m, lam.n);
    let beta_sq = &lam.beta * &lam.beta;
    let mut terms_used = 0;
    let det_b = sector_determinant(&beta_sq, &lam.bosonic, &mu.bosonic, prec, &mut terms_used)?;
    let det_f = sector_determinant(&beta_sq, &lam.fermionic, &mu.fermionic, prec, &mut terms_used)?;

    let c = c_constant(m) * c_constant(n);
    let exponent = (m + n) as i64 - (m as i64 - n as i64).pow(2);
    let pref = &integer_to_complex(&(c.clone() * c), bits) * &lam.beta.powi(exponent);
    let value = &(&(&pref * &det_b) * &det_f) * &(&inverse_berezinian(lam, bits)? * &inverse_berezinian(mu, bits)?);

    let confluent = super::ls::has_repeats(lam) || super::ls::has_repeats(mu);
    let mut diagnostics = Vec::new();
    for (label, ev) in [("λ", lam), ("μ", mu)] {
        diagnostics.extend(near_coincidences(&format!("{label} bosonic"), &ev.bosonic, prec));
        diagnostics.extend(near_coincidences(&format!("{label} fermionic"), &ev.fermionic, prec));
    }
    Ok(IntegralResult {
        value,
        branch: if confluent { Branch::Confluent } else { Branch::Generic },
        terms_used,
        diagnostics,
    })
}

use super::{
    confluent_orders, confluent_vandermonde, det_or_one, integer_to_complex, near_coincidences, Branch,
    IntegralResult, SuperEigenvalues,
};
use crate::error::{Error, Result};
use crate::integrals::c_constant;
use crate::precision::{taylor_coefficients, BesselSeries, Precision};

/// Supersymmetric Leutwyler-Smilga integral
/// `C_m C_n β^{((m+n)-(m-n)²)/2} det[λ_j^{N-i} I_{N-i}(2βλ_j)] / (Δ(bos) Δ(ferm))`.
///
/// Exact repeats inside a sector go to [`ls_confluent`]; a boson equal to
/// a fermion gives the vanishing branch.
pub fn ls_closed_form(ev: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    let ev = ev.at_precision(prec);
    let bits = prec.working_bits();
    if let Some((b, f)) = ev.boson_fermion_coincidence() {
        return Ok(IntegralResult::vanishing(
            bits,
            format!("bosonic entry {b} equals fermionic entry {f}"),
        ));
    }
    evaluate(&ev, prec)
}

/// Confluent evaluation: the `d`-th repeat of a value is replaced by the
/// `d`-th Taylor coefficient column (in `λ²`) and the matching Vandermonde
/// by its confluent form.
pub fn ls_confluent(ev: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    let ev = ev.at_precision(prec);
    if !has_repeats(&ev) {
        return Err(Error::invalid("no repeated eigenvalue inside a sector"));
    }
    if let Some((boson, fermion)) = ev.boson_fermion_coincidence() {
        return Err(Error::BosonFermionCoincidence { boson, fermion });
    }
    evaluate(&ev, prec)
}

pub(crate) fn has_repeats(ev: &SuperEigenvalues) -> bool {
    confluent_orders(&ev.bosonic).iter().any(|&d| d > 0) || confluent_orders(&ev.fermionic).iter().any(|&d| d > 0)
}

fn evaluate(ev: &SuperEigenvalues, prec: &Precision) -> Result<IntegralResult> {
    let bits = prec.working_bits();
    let (m, n) = (ev.m, ev.n);
    let size = m + n;
    let ob = confluent_orders(&ev.bosonic);
    let of = confluent_orders(&ev.fermionic);
    let orders: Vec<usize> = ob.iter().chain(&of).copied().collect();
    let values = ev.all();

    let mut terms_used = 0;
    let mut matrix = vec![Vec::with_capacity(size); size];
    for (x, &d) in values.iter().zip(&orders) {
        for (i, row) in matrix.iter_mut().enumerate() {
            let nu = (size - 1 - i) as u32;
            let series = BesselSeries::scaled_entry(nu, &ev.beta);
            let (taylor, used) = taylor_coefficients(&series, x, d, prec)?;
            terms_used = terms_used.max(used);
            row.push(taylor[d].clone());
        }
    }
    let det = det_or_one(&matrix, bits)?;
    let den = &confluent_vandermonde(&ev.bosonic, &ob, bits)? * &confluent_vandermonde(&ev.fermionic, &of, bits)?;

    let exponent = (size as i64 - (m as i64 - n as i64).pow(2)) / 2;
    let pref = &integer_to_complex(&(c_constant(m) * c_constant(n)), bits) * &ev.beta.powi(exponent);
    let value = &(&pref * &det) / &den;

    let confluent = orders.iter().any(|&d| d > 0);
    let mut diagnostics = near_coincidences("bosonic", &ev.bosonic, prec);
    diagnostics.extend(near_coincidences("fermionic", &ev.fermionic, prec));
    Ok(IntegralResult {
        value,
        branch: if confluent { Branch::Confluent } else { Branch::Generic },
        terms_used,
        diagnostics,
    })
}

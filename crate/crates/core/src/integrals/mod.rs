//! Closed forms of the supersymmetric Leutwyler-Smilga and
//! Berezin-Karpelevich integrals over U(m|n), their confluent limits and
//! the (1|1) limits at non-diagonalizable arguments.
//!
//! Everything is written in the squared eigenvalues `λ²`. Both integrals
//! satisfy `I(β, λ²) = I(1, β²λ²)` exactly: the explicit `β` prefactor
//! compensates the scaling of the Vandermonde and Berezinian factors.

mod bk;
mod expansion;
mod ls;
mod nondiag;

pub use bk::{bk_closed_form, bk_confluent};
pub use expansion::{bk_character_sum, ls_character_sum, ls_hook_sum, CharacterSum};
pub use ls::{ls_closed_form, ls_confluent};
pub use nondiag::{nondiag_limit_bk, nondiag_limit_ls};

use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::{binomial, determinant, factorial, BigComplex, Precision};

/// `C_n = ∏_{k=1}^{n-1} k!`.
pub fn c_constant(n: usize) -> Integer {
    (1..n).fold(Integer::from(1), |acc, k| acc * factorial(k as u32))
}

/// Squared eigenvalues `(λ²_1..λ²_m | λ²_{m+1}..λ²_{m+n})` and the
/// coupling `β`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEigenvalues")]
pub struct SuperEigenvalues {
    pub m: usize,
    pub n: usize,
    pub beta: BigComplex,
    pub bosonic: Vec<BigComplex>,
    pub fermionic: Vec<BigComplex>,
}

#[derive(Deserialize)]
struct RawEigenvalues {
    m: usize,
    n: usize,
    beta: BigComplex,
    bosonic: Vec<BigComplex>,
    fermionic: Vec<BigComplex>,
}

impl TryFrom<RawEigenvalues> for SuperEigenvalues {
    type Error = Error;
    fn try_from(r: RawEigenvalues) -> Result<Self> {
        if r.bosonic.len() != r.m || r.fermionic.len() != r.n {
            return Err(Error::invalid(format!(
                "declared ({}|{}) but got {} bosonic and {} fermionic values",
                r.m,
                r.n,
                r.bosonic.len(),
                r.fermionic.len()
            )));
        }
        SuperEigenvalues::new(r.beta, r.bosonic, r.fermionic)
    }
}

impl SuperEigenvalues {
    pub fn new(beta: BigComplex, bosonic: Vec<BigComplex>, fermionic: Vec<BigComplex>) -> Result<Self> {
        if bosonic.is_empty() && fermionic.is_empty() {
            return Err(Error::invalid("need at least one eigenvalue"));
        }
        Ok(SuperEigenvalues {
            m: bosonic.len(),
            n: fermionic.len(),
            beta,
            bosonic,
            fermionic,
        })
    }

    /// Copy with every value carried at the working precision.
    pub fn at_precision(&self, prec: &Precision) -> Self {
        let bits = prec.working_bits();
        let lift = |v: &[BigComplex]| v.iter().map(|x| x.with_precision(bits)).collect();
        SuperEigenvalues {
            m: self.m,
            n: self.n,
            beta: self.beta.with_precision(bits),
            bosonic: lift(&self.bosonic),
            fermionic: lift(&self.fermionic),
        }
    }

    /// `λ²` values, bosonic first.
    pub fn all(&self) -> Vec<BigComplex> {
        self.bosonic.iter().chain(&self.fermionic).cloned().collect()
    }

    /// First exactly coinciding boson-fermion pair, if any.
    pub fn boson_fermion_coincidence(&self) -> Option<(usize, usize)> {
        for (i, b) in self.bosonic.iter().enumerate() {
            for (j, f) in self.fermionic.iter().enumerate() {
                if b == f {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `B(λ²; m, n) = Δ(bos) Δ(ferm) / ∏ (λ²_i − λ²_{m+j})`.
    pub fn berezinian(&self) -> Result<BigComplex> {
        if let Some((boson, fermion)) = self.boson_fermion_coincidence() {
            return Err(Error::BosonFermionCoincidence { boson, fermion });
        }
        let bits = self.beta.precision_bits();
        let unit = BigComplex::one(bits);
        let num = &crate::precision::vandermonde(&self.bosonic, &unit)
            * &crate::precision::vandermonde(&self.fermionic, &unit);
        Ok(&num / &cross_product(&self.bosonic, &self.fermionic, bits))
    }
}

/// Free-function form of [`SuperEigenvalues::berezinian`].
pub fn berezinian(ev: &SuperEigenvalues) -> Result<BigComplex> {
    ev.berezinian()
}

pub(crate) fn cross_product(bos: &[BigComplex], ferm: &[BigComplex], bits: u32) -> BigComplex {
    let mut acc = BigComplex::one(bits);
    for b in bos {
        for f in ferm {
            acc = &acc * &(b - f);
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Generic,
    Confluent,
    Vanishing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralResult {
    pub value: BigComplex,
    pub branch: Branch,
    /// Largest number of series terms used by any entry.
    pub terms_used: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl IntegralResult {
    pub(crate) fn vanishing(bits: u32, why: String) -> Self {
        IntegralResult {
            value: BigComplex::zero(bits),
            branch: Branch::Vanishing,
            terms_used: 0,
            diagnostics: vec![why],
        }
    }
}

/// Repeat order of each entry: the number of earlier, exactly equal
/// entries in the same list.
pub(crate) fn confluent_orders(values: &[BigComplex]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .map(|(j, v)| values[..j].iter().filter(|w| *w == v).count())
        .collect()
}

/// `det[∂^{d_j} x^{s-1-i} / d_j! at x_j]`, the Vandermonde with repeated
/// entries replaced by derivative columns. Reduces to `Δ(x)` when all
/// orders vanish.
pub(crate) fn confluent_vandermonde(values: &[BigComplex], orders: &[usize], bits: u32) -> Result<BigComplex> {
    let s = values.len();
    if s == 0 {
        return Ok(BigComplex::one(bits));
    }
    if orders.iter().all(|&d| d == 0) {
        return Ok(crate::precision::vandermonde(values, &BigComplex::one(bits)));
    }
    let matrix: Vec<Vec<BigComplex>> = (0..s)
        .map(|i| {
            let e = s - 1 - i;
            values
                .iter()
                .zip(orders)
                .map(|(x, &d)| {
                    if d > e {
                        BigComplex::zero(bits)
                    } else {
                        let c = BigComplex::from_rational(&Rational::from(binomial(e as u32, d as u32)), bits);
                        &c * &x.powi((e - d) as i64)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// Diagnostics for pairs within one list that are closer than the
/// bialternant threshold but not exactly equal.
pub(crate) fn near_coincidences(label: &str, values: &[BigComplex], prec: &Precision) -> Vec<String> {
    let thr = Float::with_val(64, Float::i_exp(1, -((prec.bits / 2) as i32)));
    let mut out = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                continue;
            }
            let scale = values[i].abs().max(&values[j].abs());
            if (&values[i] - &values[j]).abs() <= Float::with_val(64, &scale * &thr) {
                out.push(format!(
                    "{label} entries {i} and {j} nearly coincide; evaluated on the generic branch"
                ));
            }
        }
    }
    out
}

pub(crate) fn integer_to_complex(v: &Integer, bits: u32) -> BigComplex {
    BigComplex::from_rational(&Rational::from(v), bits)
}

pub(crate) fn det_or_one(matrix: &[Vec<BigComplex>], bits: u32) -> Result<BigComplex> {
    if matrix.is_empty() {
        Ok(BigComplex::one(bits))
    } else {
        determinant(matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> Precision {
        Precision::default()
    }

    fn ev(bos: &[i64], ferm: &[i64]) -> SuperEigenvalues {
        let p = pr();
        SuperEigenvalues::new(
            p.one(),
            bos.iter().map(|&v| p.int(v)).collect(),
            ferm.iter().map(|&v| p.int(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn c_constant_examples() {
        assert_eq!(c_constant(0), 1);
        assert_eq!(c_constant(1), 1);
        assert_eq!(c_constant(2), 1);
        assert_eq!(c_constant(3), 2);
        assert_eq!(c_constant(4), 12);
    }

    #[test]
    fn berezinian_examples() {
        assert_eq!(ev(&[5], &[]).berezinian().unwrap(), pr().one());
        // 1/(x − y)
        let b = ev(&[5], &[2]).berezinian().unwrap();
        assert!(b.rel_diff(&pr().rational(&Rational::from((1, 3)))) < 1e-70);
        // (x1 − x2)/((x1 − y)(x2 − y))
        let b = ev(&[5, 3], &[2]).berezinian().unwrap();
        assert!(b.rel_diff(&pr().rational(&Rational::from((2, 3)))) < 1e-70);
        assert_eq!(
            ev(&[5, 3], &[3]).berezinian(),
            Err(Error::BosonFermionCoincidence { boson: 1, fermion: 0 })
        );
    }

    #[test]
    fn confluent_vandermonde_matches_derivative() {
        // d/dx2 of (x1 − x2)(x1 − x3)(x2 − x3) at x2 = x1 is −(x1 − x3)²
        let p = pr();
        let bits = p.working_bits();
        let (x1, x3) = (p.int(4), p.int(-1));
        let v = confluent_vandermonde(&[x1.clone(), x1.clone(), x3.clone()], &[0, 1, 0], bits).unwrap();
        let d = &x1 - &x3;
        assert!(v.rel_diff(&-(&d * &d)) < 1e-70);
    }

    #[test]
    fn json_schema() {
        let js = r#"{"m":1,"n":1,"beta":{"re":"0.5"},"bosonic":[{"re":"1","im":"0.25"}],"fermionic":[{"re":"-2"}]}"#;
        let e: SuperEigenvalues = serde_json::from_str(js).unwrap();
        assert_eq!((e.m, e.n), (1, 1));
        let bad = r#"{"m":2,"n":1,"beta":{"re":"0.5"},"bosonic":[{"re":"1"}],"fermionic":[{"re":"-2"}]}"#;
        assert!(serde_json::from_str::<SuperEigenvalues>(bad).is_err());
    }
}

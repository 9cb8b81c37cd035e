//! Brute-force supersymmetric Leutwyler-Smilga integral over U(1|1) and
//! U(2|1) with diagonal `A`, `B`.
//!
//! `U = U_o U_g` with `U_g = exp X` (see [`exp_odd_block`]). The ordinary
//! U(m) and U(n) integrals are done in closed form on the Grassmann-even
//! eigenvalues of `Ã B̃`; what remains is a Berezin integral over the
//! `α, α*` with the measure factor `T_{m,n}`.
//!
//! Normalization: the Berezin measure is `dα_1 dα_1* ⋯ dα_k dα_k*`, the
//! rightmost differential acting first, with unit weight per pair. With
//! this ordering no further sign or constant is needed.

use super::{alpha, alpha_star, analytic_eval, exp_odd_block, odd_pair, EvenElement, GrassmannElement, ImaginaryUnit, SuperMatrix};
use crate::error::{Error, Result};
use crate::precision::{determinant_cofactor, factorial, vandermonde, BesselSeries, BigComplex, Conjugate, Field, Precision, Ring};
use rug::Rational;

/// Block dimensions for which the measure factor is known.
pub fn supported(m: usize, n: usize) -> bool {
    matches!((m, n), (1, 1) | (2, 1))
}

/// `T_{1,1} = 1`, `T_{2,1} = 1 − (α_11 α*_11 + α_21 α*_21)/3`.
pub fn measure_factor<C: Field>(m: usize, n: usize, unit: &C) -> Result<GrassmannElement<C>> {
    let gens = 2 * m * n;
    match (m, n) {
        (1, 1) => Ok(GrassmannElement::one(gens, unit)),
        (2, 1) => {
            let third = unit.from_rational_like(&Rational::from((-1, 3)));
            let mut t = GrassmannElement::one(gens, unit);
            for i in 0..2 {
                let k = odd_pair(i, 0, 1);
                t = t.add(&GrassmannElement::monomial(third.clone(), &[alpha(k), alpha_star(k)], gens))?;
            }
            Ok(t)
        }
        _ => Err(Error::invalid(format!("no measure factor for U({m}|{n})"))),
    }
}

/// Measure order `dα_1 dα_1* dα_2 dα_2* ⋯`.
pub fn measure_order(m: usize, n: usize) -> Vec<usize> {
    (0..m * n).flat_map(|k| [alpha(k), alpha_star(k)]).collect()
}

/// Boson and fermion blocks of `U_g A` and `B U_g†`.
#[derive(Debug, Clone)]
pub struct TildeBlocks<C> {
    pub a_m: Vec<Vec<GrassmannElement<C>>>,
    pub b_m: Vec<Vec<GrassmannElement<C>>>,
    pub a_n: Vec<Vec<GrassmannElement<C>>>,
    pub b_n: Vec<Vec<GrassmannElement<C>>>,
}

pub fn tilde_blocks<C: Field + ImaginaryUnit + Conjugate>(
    m: usize,
    n: usize,
    a: &[C],
    b: &[C],
) -> Result<TildeBlocks<C>> {
    if a.len() != m + n || b.len() != m + n {
        return Err(Error::invalid("A and B need m+n diagonal entries"));
    }
    let gens = 2 * m * n;
    let ug = exp_odd_block(m, n, &a[0])?;
    let ua = ug.multiply(&SuperMatrix::diagonal(m, n, a, gens))?;
    let bu = SuperMatrix::diagonal(m, n, b, gens).multiply(&ug.conjugate_transpose())?;
    Ok(TildeBlocks {
        a_m: ua.boson_block(),
        b_m: bu.boson_block(),
        a_n: ua.fermion_block(),
        b_n: bu.fermion_block(),
    })
}

fn product<C: Ring>(x: &[Vec<GrassmannElement<C>>], y: &[Vec<GrassmannElement<C>>]) -> Vec<Vec<GrassmannElement<C>>> {
    let k = x.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).fold(x[i][0].zero_like(), |acc, l| acc.plus(&x[i][l].times(&y[l][j]))))
                .collect()
        })
        .collect()
}

/// Eigenvalues of an even matrix of size 1 or 2 whose body is diagonal
/// with distinct entries; Newton iteration in the nilpotent algebra.
pub fn even_eigenvalues<C: Field>(p: &[Vec<GrassmannElement<C>>]) -> Result<Vec<EvenElement<C>>> {
    match p.len() {
        1 => Ok(vec![EvenElement::new(p[0][0].clone())?]),
        2 => {
            let tr = p[0][0].add(&p[1][1])?;
            let det = p[0][0].multiply(&p[1][1])?.sub(&p[0][1].multiply(&p[1][0])?)?;
            let two = tr.from_i64_like(2);
            let gens = tr.generator_count();
            let mut out = Vec::with_capacity(2);
            for i in 0..2 {
                let mut x = GrassmannElement::scalar(p[i][i].body(), gens);
                for _ in 0..=gens {
                    let px = x.multiply(&x)?.sub(&tr.multiply(&x)?)?.add(&det)?;
                    if px.is_zero() {
                        break;
                    }
                    let dpx = two.multiply(&x)?.sub(&tr)?;
                    x = x.sub(&px.multiply(&dpx.inverse()?)?)?;
                }
                out.push(EvenElement::new(x)?);
            }
            Ok(out)
        }
        k => Err(Error::invalid(format!("eigenvalues of {k}x{k} blocks are not supported"))),
    }
}

/// Even eigenvalues `(λ² | μ²)` of `Ã_m B̃_m` and `Ã_n B̃_n`.
pub fn super_eigenvalues<C: Field + ImaginaryUnit + Conjugate>(
    m: usize,
    n: usize,
    a: &[C],
    b: &[C],
) -> Result<(Vec<EvenElement<C>>, Vec<EvenElement<C>>)> {
    let t = tilde_blocks(m, n, a, b)?;
    Ok((
        even_eigenvalues(&product(&t.a_m, &t.b_m))?,
        even_eigenvalues(&product(&t.a_n, &t.b_n))?,
    ))
}

/// Ordinary U(k) integral `C_k β^{(k−k²)/2} det[F_{k−i}(x_j)] / Δ(x)` on
/// even arguments, `F_ν(x) = β^ν x^ν ratio(ν, β² x)`.
pub fn ordinary_ls_even(
    xs: &[EvenElement<BigComplex>],
    beta: &BigComplex,
    prec: &Precision,
) -> Result<GrassmannElement<BigComplex>> {
    let k = xs.len();
    let gens = xs[0].generator_count();
    let unit = xs[0].unit().clone();
    let mut mat = Vec::with_capacity(k);
    for i in 0..k {
        let series = BesselSeries::scaled_entry((k - 1 - i) as u32, beta);
        let row = xs
            .iter()
            .map(|x| analytic_eval(&series, x, prec).map(EvenElement::into_inner))
            .collect::<Result<Vec<_>>>()?;
        mat.push(row);
    }
    let det = determinant_cofactor(&mat)?;
    let values: Vec<GrassmannElement<BigComplex>> = xs.iter().map(|x| (**x).clone()).collect();
    let van = vandermonde(&values, &GrassmannElement::one(gens, &unit));
    let c_k = (1..k).fold(rug::Integer::from(1), |acc, j| acc * factorial(j as u32));
    let exponent = (k as i64 - (k * k) as i64) / 2;
    let pref = &BigComplex::from_rational(&Rational::from(c_k), prec.working_bits()) * &beta.powi(exponent);
    det.multiply(&van.inverse()?).map(|v| v.scale(&pref))
}

/// Brute-force `∫dμ(U) exp(β str(AU + BU†))` over U(m|n) for diagonal
/// `A = diag(a)`, `B = diag(b)`.
pub fn brute_force_ls(
    m: usize,
    n: usize,
    a: &[BigComplex],
    b: &[BigComplex],
    beta: &BigComplex,
    prec: &Precision,
) -> Result<BigComplex> {
    if !supported(m, n) {
        return Err(Error::invalid(format!("brute force is only available for U(1|1) and U(2|1), got U({m}|{n})")));
    }
    if m == 2 {
        let d0 = &a[0] * &b[0];
        let d1 = &a[1] * &b[1];
        if (&d0 - &d1).is_zero() {
            return Err(Error::invalid("a_1 b_1 = a_2 b_2: eigenvalue expansion is singular"));
        }
    }
    let bits = prec.working_bits();
    let a: Vec<BigComplex> = a.iter().map(|v| v.with_precision(bits)).collect();
    let b: Vec<BigComplex> = b.iter().map(|v| v.with_precision(bits)).collect();
    let (lam, mu) = super_eigenvalues(m, n, &a, &b)?;
    let bos = ordinary_ls_even(&lam, beta, prec)?;
    let ferm = ordinary_ls_even(&mu, &-beta.clone(), prec)?;
    let unit = BigComplex::one(bits);
    let integrand = measure_factor(m, n, &unit)?.multiply(&bos)?.multiply(&ferm)?;
    let integral = integrand.berezin_integrate(&measure_order(m, n))?;
    Ok(integral.body())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::GaussRational;

    type G = GrassmannElement<GaussRational>;

    fn gq(num: i64, den: i64) -> GaussRational {
        GaussRational::real(Rational::from((num, den)))
    }

    #[test]
    fn u11_eigenvalues() {
        // λ² = a1 b1 (1 + α*α), μ² = a2 b2 (1 − α*α)
        let (a, b) = ([gq(2, 1), gq(3, 1)], [gq(5, 1), gq(7, 1)]);
        let (lam, mu) = super_eigenvalues(1, 1, &a, &b).unwrap();
        let g = 2;
        let s = G::monomial(gq(1, 1), &[1, 0], g);
        let one = G::one(g, &gq(1, 1));
        assert_eq!(*lam[0], one.add(&s).unwrap().scale(&gq(10, 1)));
        assert_eq!(*mu[0], one.sub(&s).unwrap().scale(&gq(21, 1)));
    }

    #[test]
    fn u21_eigenvalues_match_printed_expansions() {
        let a = [gq(2, 1), gq(1, 3), gq(-3, 2)];
        let b = [gq(1, 1), gq(5, 1), gq(2, 1)];
        let x1 = gq(2, 1);
        let x2 = gq(5, 3);
        let x3 = gq(-3, 1);
        let (lam, mu) = super_eigenvalues(2, 1, &a, &b).unwrap();
        let g = 4;
        let one = G::one(g, &gq(1, 1));
        let p1 = G::monomial(gq(1, 1), &[0, 1], g); // α11 α*11
        let p2 = G::monomial(gq(1, 1), &[2, 3], g); // α21 α*21
        let p12 = p1.multiply(&p2).unwrap();
        let d = x1.minus(&x2).scale_i64(3);
        let c1 = x1.plus(&x2.scale_i64(2)).divide(&d).unwrap();
        let c2 = x1.scale_i64(2).plus(&x2).divide(&d).unwrap();
        let l1 = one.sub(&p1).unwrap().sub(&p12.scale(&c1)).unwrap().scale(&x1);
        let l2 = one.sub(&p2).unwrap().add(&p12.scale(&c2)).unwrap().scale(&x2);
        let m1 = one
            .add(&p1)
            .unwrap()
            .add(&p2)
            .unwrap()
            .add(&p12.scale(&gq(2, 3)))
            .unwrap()
            .scale(&x3);
        assert_eq!(*lam[0], l1);
        assert_eq!(*lam[1], l2);
        assert_eq!(*mu[0], m1);
    }

    /// Rational unitary 2×2 and 1×1 blocks.
    fn u_o(m: usize) -> Vec<Vec<GaussRational>> {
        let i = GaussRational::i();
        match m {
            1 => vec![vec![gq(3, 5).plus(&i.times(&gq(4, 5)))]],
            _ => vec![
                vec![gq(3, 5), i.times(&gq(4, 5))],
                vec![i.times(&gq(4, 5)), gq(3, 5)],
            ],
        }
    }

    fn lift(block: &[Vec<GaussRational>], gens: usize) -> Vec<Vec<G>> {
        block
            .iter()
            .map(|r| r.iter().map(|e| G::scalar(e.clone(), gens)).collect())
            .collect()
    }

    fn dagger(x: &[Vec<G>]) -> Vec<Vec<G>> {
        let k = x.len();
        (0..k).map(|i| (0..k).map(|j| x[j][i].conjugate()).collect()).collect()
    }

    fn trace(x: &[Vec<G>]) -> G {
        (0..x.len()).fold(x[0][0].zero_like(), |acc, i| acc.plus(&x[i][i]))
    }

    #[test]
    fn exponent_identity() {
        for (m, n) in [(1, 1), (2, 1)] {
            let gens = 2 * m * n;
            let a: Vec<_> = [gq(2, 1), gq(-1, 3), gq(7, 2)][..m + n].to_vec();
            let b: Vec<_> = [gq(1, 2), gq(5, 1), gq(-2, 1)][..m + n].to_vec();
            let (um, un) = (lift(&u_o(m), gens), lift(&u_o(n), gens));
            let zero = G::zero(gens, &gq(1, 1));
            let mut uo = vec![vec![zero.clone(); m + n]; m + n];
            for i in 0..m {
                for j in 0..m {
                    uo[i][j] = um[i][j].clone();
                }
            }
            for i in 0..n {
                for j in 0..n {
                    uo[m + i][m + j] = un[i][j].clone();
                }
            }
            let uo = SuperMatrix::new(m, n, uo).unwrap();
            let ug = exp_odd_block(m, n, &gq(1, 1)).unwrap();
            let u = uo.multiply(&ug).unwrap();
            let am = SuperMatrix::diagonal(m, n, &a, gens);
            let bm = SuperMatrix::diagonal(m, n, &b, gens);
            let lhs = am
                .multiply(&u)
                .unwrap()
                .add(&bm.multiply(&u.conjugate_transpose()).unwrap())
                .unwrap()
                .supertrace()
                .unwrap();
            let t = tilde_blocks(m, n, &a, &b).unwrap();
            let part = |at: &[Vec<G>], bt: &[Vec<G>], uu: &[Vec<G>]| {
                trace(&product(at, uu)).plus(&trace(&product(bt, &dagger(uu))))
            };
            let rhs = part(&t.a_m, &t.b_m, &um).minus(&part(&t.a_n, &t.b_n, &un));
            assert_eq!(lhs, rhs, "({m}|{n})");
        }
    }

    #[test]
    fn zero_sources_give_zero() {
        let pr = Precision::default();
        let z = vec![pr.zero(); 2];
        let beta = pr.rational(&Rational::from((1, 2)));
        let v = brute_force_ls(1, 1, &z, &z, &beta, &pr).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn rejects_unsupported_and_singular() {
        let pr = Precision::default();
        let beta = pr.rational(&Rational::from((1, 2)));
        let v = vec![pr.one(); 3];
        assert!(brute_force_ls(1, 2, &v, &v, &beta, &pr).is_err());
        assert!(brute_force_ls(2, 1, &v, &v, &beta, &pr).is_err());
    }
}

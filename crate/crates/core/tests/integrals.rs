use rug::{Float, Rational};
use supergroup::grassmann::{analytic_eval, diagonalize_1p1, EvenElement, GrassmannElement, SuperMatrix};
use supergroup::integrals::{
    bk_character_sum, bk_closed_form, bk_confluent, ls_closed_form, ls_confluent, nondiag_limit_bk, nondiag_limit_ls,
    Branch, SuperEigenvalues,
};
use supergroup::precision::{BesselSeries, BigComplex, Precision, Ring};
use supergroup::rng::Sampler;
use supergroup::young::{dimension_glm, schur_numeric, sigma_over_factorial, Partition};

fn pr() -> Precision {
    Precision::default()
}

fn q(a: i64, b: i64) -> BigComplex {
    pr().rational(&Rational::from((a, b)))
}

fn ev(beta: &BigComplex, bos: &[BigComplex], ferm: &[BigComplex]) -> SuperEigenvalues {
    SuperEigenvalues::new(beta.clone(), bos.to_vec(), ferm.to_vec()).unwrap()
}

fn random_set(s: &mut Sampler, m: usize, n: usize, beta: &BigComplex) -> SuperEigenvalues {
    let all = s.distinct_complex(m + n, 1, 1 << 12, &pr());
    ev(beta, &all[..m], &all[m..])
}

fn close(a: &BigComplex, b: &BigComplex, tol: f64) -> bool {
    a.rel_diff(b) < tol
}

#[test]
fn permutation_symmetry() {
    let p = pr();
    for (k, (m, n)) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)].into_iter().enumerate() {
        let mut s = Sampler::new(11, k as u64);
        let beta = s.complex(1, 8, &p);
        let e = random_set(&mut s, m, n, &beta);
        let mu = random_set(&mut s, m, n, &beta);
        let mut bos = e.bosonic.clone();
        let mut ferm = e.fermionic.clone();
        bos.reverse();
        ferm.rotate_left(1);
        let f = ev(&beta, &bos, &ferm);
        let a = ls_closed_form(&e, &p).unwrap().value;
        assert!(close(&a, &ls_closed_form(&f, &p).unwrap().value, 1e-60), "LS ({m}|{n})");
        let b = bk_closed_form(&e, &mu, &p).unwrap().value;
        assert!(close(&b, &bk_closed_form(&f, &mu, &p).unwrap().value, 1e-60), "BK ({m}|{n})");
    }
}

#[test]
fn beta_scaling_has_no_extra_factor() {
    let p = pr();
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n == 0 {
                continue;
            }
            let mut s = Sampler::new(12, (4 * m + n) as u64);
            let beta = s.complex(2, 16, &p);
            let e = random_set(&mut s, m, n, &beta);
            let b2 = &beta * &beta;
            let scaled = |x: &SuperEigenvalues| {
                let f = |v: &[BigComplex]| v.iter().map(|z| &b2 * z).collect::<Vec<_>>();
                ev(&p.one(), &f(&x.bosonic), &f(&x.fermionic))
            };
            let a = ls_closed_form(&e, &p).unwrap().value;
            let b = ls_closed_form(&scaled(&e), &p).unwrap().value;
            assert!(close(&a, &b, 1e-60), "LS ({m}|{n})");
            let mu = random_set(&mut s, m, n, &beta);
            let a = bk_closed_form(&e, &mu, &p).unwrap().value;
            let mu1 = ev(&p.one(), &mu.bosonic, &mu.fermionic);
            let b = bk_closed_form(&scaled(&e), &mu1, &p).unwrap().value;
            assert!(close(&a, &b, 1e-60), "BK ({m}|{n})");
        }
    }
}

/// Ordinary U(m) expansions: `Σ_p β^{2|p|} (σ_p/|p|!)² χ_p(x) / d_p` and the
/// two-group analogue with `χ_p(x) χ_p(y) / d_p²`.
fn ordinary_sums(x: &[BigComplex], y: &[BigComplex], beta: &BigComplex, boxes: usize) -> (BigComplex, BigComplex) {
    let p = pr();
    let bits = p.working_bits();
    let b2 = beta * beta;
    let (mut ls, mut bk) = (p.zero(), p.zero());
    for part in Partition::all_up_to(boxes, x.len()) {
        let s = sigma_over_factorial(&part);
        let d = Rational::from(dimension_glm(&part, x.len()).unwrap());
        let w = &BigComplex::from_rational(&Rational::from(&s * &s), bits) * &b2.powi(part.size() as i64);
        let cx = schur_numeric(&part, x, &p).unwrap();
        let cy = schur_numeric(&part, y, &p).unwrap();
        ls += &(&(&w * &cx) / &BigComplex::from_rational(&d, bits));
        let d2 = Rational::from(&d * &d);
        bk += &(&(&(&w * &cx) * &cy) / &BigComplex::from_rational(&d2, bits));
    }
    (ls, bk)
}

#[test]
fn bosonic_reduction_matches_ordinary_expansion() {
    let p = pr();
    let beta = q(1, 3);
    for m in 1..=3 {
        let mut s = Sampler::new(13, m as u64);
        let x = s.distinct_complex(m, 1, 1 << 10, &p);
        let y = s.distinct_complex(m, 1, 1 << 10, &p);
        let (ls, bk) = ordinary_sums(&x, &y, &beta, 24);
        let a = ls_closed_form(&ev(&beta, &x, &[]), &p).unwrap().value;
        assert!(close(&a, &ls, 1e-30), "LS m={m}");
        let b = bk_closed_form(&ev(&beta, &x, &[]), &ev(&beta, &y, &[]), &p).unwrap().value;
        assert!(close(&b, &bk, 1e-30), "BK m={m}");
    }
}

#[test]
fn fermionic_only_is_finite_and_normalized() {
    // n = 0 roles swapped: at vanishing sources the integral is one
    let p = pr();
    let z = [q(0, 1)];
    let r = ls_closed_form(&ev(&q(1, 2), &[], &z), &p).unwrap();
    assert!(close(&r.value, &p.one(), 1e-70));
}

fn eps(k: u32) -> BigComplex {
    pr().rational(&Rational::from((1, rug::Integer::from(rug::Integer::u_pow_u(10, k)))))
}

/// Relative gaps `|generic(ε) − confluent| / |confluent|` for ε = 10⁻⁴, 10⁻⁶, 10⁻⁸.
fn probe(generic: impl Fn(&BigComplex) -> BigComplex, confluent: &BigComplex) -> Vec<f64> {
    [4, 6, 8]
        .into_iter()
        .map(|k| generic(&eps(k)).rel_diff(confluent).to_f64())
        .collect()
}

fn assert_linear(gaps: &[f64], what: &str) {
    let ks: Vec<f64> = gaps.iter().zip([1e-4, 1e-6, 1e-8]).map(|(g, e)| g / e).collect();
    assert!(gaps[1] <= 100.0 * 1e-6, "{what}: gap {:e} at 1e-6", gaps[1]);
    let (lo, hi) = ks.iter().fold((f64::MAX, 0.0f64), |(l, h), &k| (l.min(k), h.max(k)));
    assert!(lo > 0.0 && hi / lo < 1.5, "{what}: K not stable {ks:?}");
}

#[test]
fn ls_confluent_limits() {
    let p = pr();
    let beta = q(1, 2);
    let (x, y, z) = (q(3, 4), q(-1, 3), q(1, 5));
    // bosonic double repeat, (2|1)
    let conf = ls_confluent(&ev(&beta, &[x.clone(), x.clone()], &[y.clone()]), &p).unwrap();
    assert_eq!(conf.branch, Branch::Confluent);
    let gaps = probe(
        |e| ls_closed_form(&ev(&beta, &[x.clone(), &x + e], &[y.clone()]), &p).unwrap().value,
        &conf.value,
    );
    assert_linear(&gaps, "LS (2|1)");
    // fermionic repeat, (1|2)
    let conf = ls_confluent(&ev(&beta, &[y.clone()], &[x.clone(), x.clone()]), &p).unwrap();
    let gaps = probe(
        |e| ls_closed_form(&ev(&beta, &[y.clone()], &[x.clone(), &x + e]), &p).unwrap().value,
        &conf.value,
    );
    assert_linear(&gaps, "LS (1|2)");
    // triple repeat, (3|1): the perturbed pair shares one ε so the gap stays linear
    let conf = ls_confluent(&ev(&beta, &[x.clone(), x.clone(), x.clone()], &[z.clone()]), &p).unwrap();
    let gaps = probe(
        |e| {
            let e2 = e * e;
            ls_closed_form(&ev(&beta, &[x.clone(), &x + e, &(&x - e) + &e2], &[z.clone()]), &p)
                .unwrap()
                .value
        },
        &conf.value,
    );
    assert!(gaps[2] < gaps[0], "LS (3|1) gaps {gaps:?}");
    assert!(gaps[1] <= 1e-4);
}

#[test]
fn bk_confluent_limits() {
    let p = pr();
    let beta = q(2, 3);
    let (x, y) = (q(3, 4), q(-1, 3));
    let mu = ev(&beta, &[q(1, 2), q(-2, 5)], &[q(1, 7)]);
    let conf = bk_confluent(&ev(&beta, &[x.clone(), x.clone()], &[y.clone()]), &mu, &p).unwrap();
    let gaps = probe(
        |e| bk_closed_form(&ev(&beta, &[x.clone(), &x + e], &[y.clone()]), &mu, &p).unwrap().value,
        &conf.value,
    );
    assert_linear(&gaps, "BK (2|1) λ repeat");

    // repeat in μ
    let lam = ev(&beta, &[q(1, 2), q(-2, 5)], &[q(1, 7)]);
    let conf = bk_confluent(&lam, &ev(&beta, &[x.clone(), x.clone()], &[y.clone()]), &p).unwrap();
    let gaps = probe(
        |e| bk_closed_form(&lam, &ev(&beta, &[x.clone(), &x + e], &[y.clone()]), &p).unwrap().value,
        &conf.value,
    );
    assert_linear(&gaps, "BK (2|1) μ repeat");

    // simultaneous repeats in both sets at the same positions
    let (u, w) = (q(-3, 5), q(2, 9));
    let conf = bk_confluent(
        &ev(&beta, &[x.clone(), x.clone()], &[y.clone()]),
        &ev(&beta, &[u.clone(), u.clone()], &[w.clone()]),
        &p,
    )
    .unwrap();
    let gaps = probe(
        |e| {
            bk_closed_form(
                &ev(&beta, &[x.clone(), &x + e], &[y.clone()]),
                &ev(&beta, &[u.clone(), &u + e], &[w.clone()]),
                &p,
            )
            .unwrap()
            .value
        },
        &conf.value,
    );
    assert_linear(&gaps, "BK (2|1) both repeat");
}

/// Grassmann eigenvalues of `[[a, α], [β, a + ε]]` with `c αβ` coupling,
/// from the (1|1) diagonalization.
fn eigen_pair(a: &BigComplex, e: &BigComplex, c: &BigComplex) -> (EvenElement<BigComplex>, EvenElement<BigComplex>) {
    let g = 2;
    let al = GrassmannElement::monomial(c.clone(), &[0], g);
    let be = GrassmannElement::generator(1, g, &c.one_like());
    let m = SuperMatrix::new(
        1,
        1,
        vec![
            vec![GrassmannElement::scalar(a.clone(), g), al],
            vec![be, GrassmannElement::scalar(a + e, g)],
        ],
    )
    .unwrap();
    let d = diagonalize_1p1(&m).unwrap();
    (
        EvenElement::new(d.m_d.entry(0, 0).clone()).unwrap(),
        EvenElement::new(d.m_d.entry(1, 1).clone()).unwrap(),
    )
}

#[test]
fn nondiag_ls_limit_matches_grassmann_eigenvalues() {
    let p = pr();
    let beta = q(1, 2);
    let a = q(7, 3);
    let c = q(-2, 5);
    let limit = nondiag_limit_ls(&beta, &a, &c, &p).unwrap();
    let mut gaps = Vec::new();
    for k in [6, 9] {
        let (x1, x2) = eigen_pair(&a, &eps(k), &c);
        let f = |nu: u32, x: &EvenElement<BigComplex>| analytic_eval(&BesselSeries::scaled_entry(nu, &beta), x, &p).unwrap();
        let det = f(1, &x1).multiply(&f(0, &x2)).unwrap().sub(&f(1, &x2).multiply(&f(0, &x1)).unwrap()).unwrap();
        let coeff = &det.coefficient(&[0, 1]) * &beta;
        gaps.push(coeff.rel_diff(&limit).to_f64());
        assert!(det.body().abs() < Float::with_val(64, 1e-4));
    }
    assert!(gaps[0] < 1e-5 && gaps[1] < 1e-8, "{gaps:?}");
}

#[test]
fn nondiag_bk_limit_matches_grassmann_eigenvalues() {
    let p = pr();
    let beta = q(1, 2);
    let a = q(7, 3);
    let c = q(3, 4);
    let (y1, y2) = (q(5, 4), q(-1, 2));
    let limit = nondiag_limit_bk(&beta, &a, &c, [&y1, &y2], &p).unwrap();
    let b2 = &beta * &beta;
    let mut gaps = Vec::new();
    for k in [6, 9] {
        let e = eps(k);
        let (x1, x2) = eigen_pair(&a, &e, &c);
        let g = |x: &EvenElement<BigComplex>, y: &BigComplex| {
            analytic_eval(&BesselSeries::i0_scaled(&(&b2 * y)), x, &p).unwrap()
        };
        // β² (x1 − x2)(y1 − y2) G(x1 y1) G(x2 y2)
        let diff = x1.sub(&x2).unwrap();
        let v = diff.multiply(&g(&x1, &y1).multiply(&g(&x2, &y2)).unwrap()).unwrap();
        let coeff = &(&v.coefficient(&[0, 1]) * &b2) * &(&y1 - &y2);
        gaps.push(coeff.rel_diff(&limit).to_f64());
    }
    assert!(gaps[0] < 1e-5 && gaps[1] < 1e-8, "{gaps:?}");
}

#[test]
fn bk_factorization_matches_character_sum() {
    let p = pr();
    let beta = q(1, 2);
    for k in 0..3 {
        let mut s = Sampler::new(14, k);
        let lam = random_set(&mut s, 1, 1, &beta);
        let mu = random_set(&mut s, 1, 1, &beta);
        let exact = bk_closed_form(&lam, &mu, &p).unwrap().value;
        let sum = bk_character_sum(&lam, &mu, 20, &p).unwrap();
        let err = (&sum.value - &exact).abs().to_f64();
        assert!(err <= sum.tail_bound, "set {k}: {err:e} > {:e}", sum.tail_bound);
    }
}

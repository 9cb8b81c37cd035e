use rug::Float;
use supergroup::grassmann::brute_force_ls;
use supergroup::integrals::{ls_closed_form, SuperEigenvalues};
use supergroup::precision::{BigComplex, Precision};
use supergroup::rng::Sampler;

fn closed_form(m: usize, a: &[BigComplex], b: &[BigComplex], beta: &BigComplex, p: &Precision) -> BigComplex {
    let prod: Vec<BigComplex> = a.iter().zip(b).map(|(x, y)| x * y).collect();
    let ev = SuperEigenvalues::new(beta.clone(), prod[..m].to_vec(), prod[m..].to_vec()).unwrap();
    ls_closed_form(&ev, p).unwrap().value
}

fn tolerance() -> Float {
    Float::with_val(64, Float::i_exp(1, -200))
}

fn check(m: usize, n: usize, points: u64) {
    let p = Precision::default();
    let beta = p.rational(&rug::Rational::from((1, 2)));
    for k in 0..points {
        let mut s = Sampler::new(0xE11 + m as u64, k);
        let a = s.distinct_complex(m + n, 2, 1 << 16, &p);
        let b = s.distinct_complex(m + n, 2, 1 << 16, &p);
        let bf = brute_force_ls(m, n, &a, &b, &beta, &p).unwrap();
        let cf = closed_form(m, &a, &b, &beta, &p);
        let rel = bf.rel_diff(&cf);
        assert!(rel <= tolerance(), "U({m}|{n}) point {k}: relative error {rel}");
    }
}

#[test]
fn u11_matches_closed_form() {
    check(1, 1, 10);
}

#[test]
fn u21_matches_closed_form() {
    check(2, 1, 5);
}

#[test]
fn u11_real_diagonal_values() {
    let p = Precision::default();
    let beta = p.rational(&rug::Rational::from((2, 3)));
    let a = [p.int(3), p.int(-1)];
    let b = [p.rational(&rug::Rational::from((1, 4))), p.int(2)];
    let bf = brute_force_ls(1, 1, &a, &b, &beta, &p).unwrap();
    assert!(bf.rel_diff(&closed_form(1, &a, &b, &beta, &p)) <= tolerance());
}

#[test]
fn u21_singular_expansion_rejected() {
    let p = Precision::default();
    let a = [p.int(2), p.int(1), p.int(3)];
    let b = [p.int(1), p.int(2), p.int(5)];
    assert!(brute_force_ls(2, 1, &a, &b, &p.one(), &p).is_err());
    assert!(brute_force_ls(1, 2, &a, &b, &p.one(), &p).is_err());
}

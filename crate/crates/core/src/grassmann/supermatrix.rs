use rug::Rational;

use super::{alpha, alpha_star, EvenElement, GrassmannElement};
use crate::error::{Error, Result};
use crate::precision::{determinant_cofactor, BigComplex, Conjugate, Field, GaussRational, Ring};

/// Scalars containing the imaginary unit.
pub trait ImaginaryUnit: Ring {
    fn i_like(&self) -> Self;
}

impl ImaginaryUnit for GaussRational {
    fn i_like(&self) -> Self {
        GaussRational::i()
    }
}

impl ImaginaryUnit for BigComplex {
    fn i_like(&self) -> Self {
        let bits = self.precision_bits();
        BigComplex::from_rationals(&Rational::new(), &Rational::from(1), bits)
    }
}

/// `(m+n) × (m+n)` block supermatrix over the Grassmann algebra. The
/// diagonal blocks hold even entries, the off-diagonal blocks odd ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperMatrix<C> {
    pub m: usize,
    pub n: usize,
    entries: Vec<Vec<GrassmannElement<C>>>,
}

impl<C: Ring> SuperMatrix<C> {
    pub fn new(m: usize, n: usize, entries: Vec<Vec<GrassmannElement<C>>>) -> Result<Self> {
        let size = m + n;
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::invalid(format!("supermatrix must be {size}x{size}")));
        }
        let gens = entries[0][0].generator_count();
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.generator_count() != gens {
                    return Err(Error::GeneratorMismatch {
                        left: gens,
                        right: e.generator_count(),
                    });
                }
                let diagonal_block = (i < m) == (j < m);
                let ok = if diagonal_block { e.is_even() } else { e.is_odd() };
                if !ok {
                    return Err(Error::invalid(format!("entry ({i},{j}) has the wrong parity")));
                }
            }
        }
        Ok(SuperMatrix { m, n, entries })
    }

    pub fn identity(m: usize, n: usize, gens: usize, unit: &C) -> Self {
        Self::diagonal(m, n, &vec![unit.one_like(); m + n], gens)
    }

    /// Numeric diagonal supermatrix `diag(d_1, …, d_{m+n})`.
    pub fn diagonal(m: usize, n: usize, d: &[C], gens: usize) -> Self {
        assert_eq!(d.len(), m + n, "diagonal length");
        let entries = (0..m + n)
            .map(|i| {
                (0..m + n)
                    .map(|j| {
                        if i == j {
                            GrassmannElement::scalar(d[i].clone(), gens)
                        } else {
                            GrassmannElement::zero(gens, &d[0])
                        }
                    })
                    .collect()
            })
            .collect();
        SuperMatrix { m, n, entries }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn generator_count(&self) -> usize {
        self.entries[0][0].generator_count()
    }

    pub fn entry(&self, i: usize, j: usize) -> &GrassmannElement<C> {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<GrassmannElement<C>>] {
        &self.entries
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<Vec<GrassmannElement<C>>> {
        rows.map(|i| self.entries[i][cols.clone()].to_vec()).collect()
    }

    pub fn boson_block(&self) -> Vec<Vec<GrassmannElement<C>>> {
        self.block(0..self.m, 0..self.m)
    }

    pub fn fermion_block(&self) -> Vec<Vec<GrassmannElement<C>>> {
        self.block(self.m..self.size(), self.m..self.size())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::invalid("block dimensions differ"));
        }
        let entries = matmul(&self.entries, &other.entries)?;
        Ok(SuperMatrix {
            m: self.m,
            n: self.n,
            entries,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (row, orow) in entries.iter_mut().zip(&other.entries) {
            for (e, o) in row.iter_mut().zip(orow) {
                *e = e.add(o)?;
            }
        }
        Ok(SuperMatrix {
            m: self.m,
            n: self.n,
            entries,
        })
    }

    /// `str M = tr(boson block) − tr(fermion block)`.
    pub fn supertrace(&self) -> Result<GrassmannElement<C>> {
        let mut acc = self.entries[0][0].zero_like();
        for i in 0..self.size() {
            acc = if i < self.m {
                acc.add(&self.entries[i][i])?
            } else {
                acc.sub(&self.entries[i][i])?
            };
        }
        Ok(acc)
    }
}

impl<C: Ring + Conjugate> SuperMatrix<C> {
    /// `(M†)_{ij} = (M_{ji})*` with the Grassmann conjugation.
    pub fn conjugate_transpose(&self) -> Self {
        let size = self.size();
        let entries = (0..size)
            .map(|i| (0..size).map(|j| self.entries[j][i].conjugate()).collect())
            .collect();
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries,
        }
    }
}

impl<C: Field> SuperMatrix<C> {
    /// `sdet M = det(A − B D⁻¹ C) / det D`; block sizes up to 4.
    pub fn superdeterminant(&self) -> Result<EvenElement<C>> {
        let m = self.m;
        let a = self.boson_block();
        let b = self.block(0..m, m..self.size());
        let c = self.block(m..self.size(), 0..m);
        let d = self.fermion_block();
        let d_inv = inverse(&d)?;
        let bdc = matmul(&matmul(&b, &d_inv)?, &c)?;
        let schur: Vec<Vec<_>> = a
            .iter()
            .zip(&bdc)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(y)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let num = if m == 0 {
            self.entries[0][0].one_like()
        } else {
            determinant_cofactor(&schur)?
        };
        let den = determinant_cofactor(&d)?.inverse()?;
        EvenElement::new(num.multiply(&den)?)
    }
}

fn matmul<C: Ring>(
    a: &[Vec<GrassmannElement<C>>],
    b: &[Vec<GrassmannElement<C>>],
) -> Result<Vec<Vec<GrassmannElement<C>>>> {
    let (rows, inner) = (a.len(), b.len());
    let cols = b.first().map_or(0, Vec::len);
    let zero = a
        .first()
        .and_then(|r| r.first())
        .or_else(|| b.first().and_then(|r| r.first()))
        .map(Ring::zero_like);
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut acc = zero.clone().expect("non-empty operands");
            for k in 0..inner {
                acc = acc.add(&a[i][k].multiply(&b[k][j])?)?;
            }
            row.push(acc);
        }
        out.push(row);
    }
    Ok(out)
}

/// Inverse of a square block with even entries, by cofactors.
fn inverse<C: Field>(d: &[Vec<GrassmannElement<C>>]) -> Result<Vec<Vec<GrassmannElement<C>>>> {
    let k = d.len();
    let det_inv = determinant_cofactor(d)?.inverse()?;
    if k == 1 {
        return Ok(vec![vec![det_inv]]);
    }
    let mut out = vec![Vec::with_capacity(k); k];
    for (j, row) in out.iter_mut().enumerate() {
        for i in 0..k {
            // (D⁻¹)_{ji} = (−1)^{i+j} minor_{ij} / det D
            let minor: Vec<Vec<_>> = d
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, rw)| {
                    rw.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let cof = determinant_cofactor(&minor)?.multiply(&det_inv)?;
            row.push(if (i + j) % 2 == 1 { cof.neg() } else { cof });
        }
    }
    Ok(out)
}

/// Generator pair of `α_{ij}` (row-major over the `m × n` block).
pub fn odd_pair(i: usize, j: usize, n: usize) -> usize {
    i * n + j
}

/// `U_g = exp X` with `X_{i, m+j} = i α_{ij}` and `X_{m+j, i} = i α*_{ij}`,
/// over `2mn` generators. The series stops once `X^k` vanishes.
pub fn exp_odd_block<C: Field + ImaginaryUnit>(m: usize, n: usize, unit: &C) -> Result<SuperMatrix<C>> {
    let gens = 2 * m * n;
    let size = m + n;
    let i_unit = unit.i_like();
    let mut x = vec![vec![GrassmannElement::zero(gens, unit); size]; size];
    for i in 0..m {
        for j in 0..n {
            let k = odd_pair(i, j, n);
            x[i][m + j] = GrassmannElement::monomial(i_unit.clone(), &[alpha(k)], gens);
            x[m + j][i] = GrassmannElement::monomial(i_unit.clone(), &[alpha_star(k)], gens);
        }
    }
    let x = SuperMatrix { m, n, entries: x };
    let mut acc = SuperMatrix::identity(m, n, gens, unit);
    let mut power = acc.clone();
    for k in 1..=gens + 1 {
        power = power.multiply(&x)?;
        if power.entries.iter().flatten().all(GrassmannElement::is_zero) {
            break;
        }
        let inv_k = unit.from_rational_like(&Rational::from((1, k as i64)));
        let scaled = power.clone();
        power = SuperMatrix {
            m,
            n,
            entries: scaled
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e.scale(&inv_k)).collect())
                .collect(),
        };
        acc = acc.add(&power)?;
    }
    Ok(acc)
}

/// Diagonalization `M = V⁻¹ M_D V` of a (1|1) supermatrix
/// `[[a, α], [β, b]]`, defined when `a − b` has an invertible body.
/// `M_D = diag(a + αβ/(a−b), b + αβ/(a−b))`; the off-diagonal entries of
/// `V` are `±α/(a−b)`, `∓β/(a−b)` with the signs fixed by the
/// reconstruction identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonalization<C> {
    pub v: SuperMatrix<C>,
    pub m_d: SuperMatrix<C>,
    pub v_inv: SuperMatrix<C>,
}

pub fn diagonalize_1p1<C: Field>(mat: &SuperMatrix<C>) -> Result<Diagonalization<C>> {
    if (mat.m, mat.n) != (1, 1) {
        return Err(Error::invalid("diagonalize_1p1 needs a (1|1) supermatrix"));
    }
    let (a, al, be, b) = (mat.entry(0, 0), mat.entry(0, 1), mat.entry(1, 0), mat.entry(1, 1));
    let inv = EvenElement::new(a.sub(b)?)?.even_inverse()?.into_inner();
    let inv2 = inv.multiply(&inv)?;
    let ab = al.multiply(be)?;
    let half = a.unit().from_rational_like(&Rational::from((1, 2)));
    let corr = ab.multiply(&inv2)?.scale(&half);
    let one = a.one_like();
    let shift = ab.multiply(&inv)?;
    let al_q = al.multiply(&inv)?;
    let be_q = be.multiply(&inv)?;
    let make = |e: [[GrassmannElement<C>; 2]; 2]| {
        let [[e00, e01], [e10, e11]] = e;
        SuperMatrix {
            m: 1,
            n: 1,
            entries: vec![vec![e00, e01], vec![e10, e11]],
        }
    };
    let zero = a.zero_like();
    Ok(Diagonalization {
        v: make([[one.sub(&corr)?, al_q.clone()], [be_q.neg(), one.add(&corr)?]]),
        v_inv: make([[one.sub(&corr)?, al_q.neg()], [be_q, one.add(&corr)?]]),
        m_d: make([[a.add(&shift)?, zero.clone()], [zero, b.add(&shift)?]]),
    })
}

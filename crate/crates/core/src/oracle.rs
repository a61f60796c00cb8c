//! Independent Jordan type computation on the inverse-system side.
//!
//! `A ≅ W = ⊕_e (S_{d-e} ∘ F)` as `S`-modules, with multiplication by `ℓ`
//! becoming the derivative `∂_ℓ`. This module builds an explicit basis of
//! `W`, writes `∂_ℓ` as a square matrix in that basis, and reads the Jordan
//! type of that nilpotent operator off the nullities of its powers. It shares
//! nothing with the catalecticant/Bareiss route except polynomial arithmetic,
//! and uses its own Gauss-Jordan elimination over the rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::partition::Partition;
use crate::poly::{LinearForm, Monomial, Polynomial};

type Rows = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut Rows) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

fn naive_rank(m: &Rows) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

fn mat_mul(a: &Rows, b: &Rows) -> Rows {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Jordan type of a nilpotent square matrix from `dim ker N^k`.
///
/// The `k`-th part of the conjugate partition is
/// `dim ker N^k − dim ker N^{k−1} = rk N^{k−1} − rk N^k`.
pub fn nilpotent_jordan_type(n: &[Vec<Rational>]) -> Partition {
    let size = n.len();
    let op: Rows = n.to_vec();
    let mut ranks = vec![size];
    let mut power = op.clone();
    loop {
        let r = naive_rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
        assert!(ranks.len() <= size + 2, "operator is not nilpotent");
        power = mat_mul(&power, &op);
    }
    let conjugate: Vec<usize> = ranks
        .windows(2)
        .map(|w| w[0] - w[1])
        .filter(|&c| c > 0)
        .collect();
    Partition::new(conjugate)
        .expect("positive parts")
        .conjugate()
}

/// Basis of `S_{d-e} ∘ F` in RREF over the degree-`e` monomials.
struct GradedPiece {
    monomials: Vec<Monomial>,
    basis: Rows,
    pivots: Vec<usize>,
}

impl GradedPiece {
    fn coordinates(&self, p: &Polynomial) -> Vec<Rational> {
        let coords: Vec<Rational> = self
            .pivots
            .iter()
            .map(|&c| p.coeff(&self.monomials[c]))
            .collect();
        // membership: the pivot coordinates must rebuild p exactly
        for (c, m) in self.monomials.iter().enumerate() {
            let rebuilt = coords
                .iter()
                .zip(&self.basis)
                .fold(Rational::zero(), |acc, (a, row)| acc + a * &row[c]);
            assert_eq!(rebuilt, p.coeff(m), "derivative left the inverse system");
        }
        coords
    }
}

/// Matrix of `∂_ℓ` on the inverse system of `F`, acting on coordinate columns.
pub fn derivative_operator(f: &Polynomial, ell: &LinearForm) -> Result<Vec<Vec<Rational>>> {
    let d = f.form_degree()?;
    if ell.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    if ell.nvars() != f.nvars() {
        return Err(Error::VarCountMismatch {
            left: f.nvars(),
            right: ell.nvars(),
        });
    }
    let n = f.nvars();
    let pieces: Vec<GradedPiece> = (0..=d)
        .map(|e| {
            let monomials = Monomial::basis(n, e);
            let mut rows: Rows = Monomial::basis(n, d - e)
                .into_iter()
                .map(|beta| {
                    let g = Polynomial::term(Rational::one(), beta)
                        .diff_apply(f)
                        .expect("shared nvars");
                    monomials.iter().map(|m| g.coeff(m)).collect()
                })
                .collect();
            let pivots = rref(&mut rows);
            GradedPiece {
                monomials,
                basis: rows,
                pivots,
            }
        })
        .collect();

    let offsets: Vec<usize> = pieces
        .iter()
        .scan(0, |acc, p| {
            let start = *acc;
            *acc += p.basis.len();
            Some(start)
        })
        .collect();
    let dim: usize = pieces.iter().map(|p| p.basis.len()).sum();
    let mut op = vec![vec![Rational::zero(); dim]; dim];
    for e in 1..pieces.len() {
        let src = &pieces[e];
        let dst = &pieces[e - 1];
        for (k, row) in src.basis.iter().enumerate() {
            let w =
                Polynomial::from_terms(n, src.monomials.iter().cloned().zip(row.iter().cloned()));
            let image = ell.apply(&w)?;
            for (t, c) in dst.coordinates(&image).into_iter().enumerate() {
                op[offsets[e - 1] + t][offsets[e] + k] = c;
            }
        }
    }
    Ok(op)
}

/// Jordan type of multiplication by `ℓ` on `S/Ann(F)`, computed without
/// catalecticants. Must agree with [`crate::jordan::jordan_type`].
pub fn jordan_type_oracle(f: &Polynomial, ell: &LinearForm) -> Result<Partition> {
    Ok(nilpotent_jordan_type(&derivative_operator(f, ell)?))
}

/// `dim ker ∂_ℓ` on the inverse system, i.e. the number of Jordan blocks.
pub fn block_count(f: &Polynomial, ell: &LinearForm) -> Result<usize> {
    let op = derivative_operator(f, ell)?;
    Ok(op.len() - naive_rank(&op))
}

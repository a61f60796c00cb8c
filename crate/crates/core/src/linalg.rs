//! Exact rational scalars and dense matrices.
//!
//! Every rank in the crate goes through [`Matrix::rank`], which clears
//! denominators row by row and then runs fraction-free (Bareiss) elimination
//! over the integers, so no decision ever depends on rounding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integral [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix over [`Rational`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in Matrix::from_rows"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut rows = self.integer_rows();
        bareiss_rank(&mut rows, self.cols)
    }

    /// Scales each row by the lcm of its denominators, yielding an integer matrix
    /// with the same row space.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| {
                        let scaled = q * Rational::from_integer(lcm.clone());
                        assert!(scaled.is_integer(), "denominator survived clearing");
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Fraction-free Gaussian elimination; returns the rank and leaves `a` in a
/// row echelon form whose entries are minors of the input.
fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        // smallest nonzero magnitude keeps intermediate minors short
        let pivot = (rank..nrows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by(|&r, &s| a[r][col].abs().cmp(&a[s][col].abs()));
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for c in col + 1..cols {
                let num = pv * &row[c] - &factor * &pivot_row[c];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "inexact Bareiss division");
                row[c] = q;
            }
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::zeros(0, 0).rank(), 0);
        assert_eq!(Matrix::zeros(0, 5).rank(), 0);
    }

    #[test]
    fn rational_entries() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let m = Matrix::from_rows(vec![vec![half.clone(), rat(1)], vec![rat(1), rat(2)]]);
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_rows(vec![vec![half, rat(1)], vec![rat(1), rat(3)]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn skipped_pivot_columns() {
        let m = Matrix::from_i64_rows(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[0, 3, 6, 4]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn transpose_shapes() {
        let row = Matrix::from_i64_rows(&[&[1, 2, 3]]);
        assert_eq!(row.transpose(), Matrix::from_i64_rows(&[&[1], &[2], &[3]]));
        let sym = Matrix::from_i64_rows(&[&[1, 2], &[2, 5]]);
        assert_eq!(sym.transpose(), sym);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
                Matrix::from_rows(
                    rows.into_iter()
                        .map(|row| row.into_iter().map(rat).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.transpose().transpose(), m.clone());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn rank_invariant_under_row_ops(
            m in small_matrix(),
            scales in prop::collection::vec((1i64..7, 1i64..5, any::<bool>()), 6),
            swap in (0usize..6, 0usize..6),
        ) {
            let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
            for (row, &(num, den, neg)) in rows.iter_mut().zip(&scales) {
                let s = Rational::new(BigInt::from(if neg { -num } else { num }), BigInt::from(den));
                for q in row.iter_mut() {
                    *q = &*q * &s;
                }
            }
            let n = rows.len();
            rows.swap(swap.0 % n, swap.1 % n);
            prop_assert_eq!(Matrix::from_rows(rows).rank(), m.rank());
        }
    }
}

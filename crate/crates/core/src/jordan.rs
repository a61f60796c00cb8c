//! Rank matrices, Jordan degree type matrices, Jordan types and Jordan degree
//! types of a pair `(A, ℓ)` with `A = S/Ann(F)`.
//!
//! The `k`-th diagonal of the rank matrix is the Hilbert function of
//! `S/Ann(ℓ^k ∘ F)`, so every entry is a catalecticant rank. From the rank
//! matrix:
//!
//! * `dims[k]` is the sum of the `k`-th diagonal, and its second difference
//!   `n_k = dims[k] - 2 dims[k+1] + dims[k+2]` counts strings of length `k+1`;
//! * `J[i][j] = M[i][j] + M[i-1][j+1] - M[i-1][j] - M[i][j+1]` counts strings
//!   that start in degree `i` and end in degree `j`.

use std::fmt;

use serde::Serialize;

use crate::apolar::{hilbert_or_zero, HilbertFunction};
use crate::error::{Error, Result};
use crate::partition::{IndexedPartition, JordanString, Partition};
use crate::poly::{LinearForm, Polynomial};

fn render_rows(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        f.write_str(&cells.join(" "))?;
    }
    Ok(())
}

fn check_square(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    Ok(())
}

/// `M[i][j] = rk(×ℓ^{j-i}: A_i → A_j)` for `i ≤ j`, zero below the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RankMatrix {
    rows: Vec<Vec<usize>>,
}

impl RankMatrix {
    /// Accepts any nonempty square matrix; structural validity is the job of
    /// [`crate::checks::check_rank_matrix`].
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_square(&rows)?;
        Ok(RankMatrix { rows })
    }

    /// Socle degree `d`; the matrix is `(d+1) × (d+1)`.
    pub fn socle_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry with out-of-range indices read as zero.
    fn at(&self, i: isize, j: isize) -> i64 {
        let n = self.rows.len() as isize;
        if i < 0 || j < 0 || i >= n || j >= n {
            0
        } else {
            self.rows[i as usize][j as usize] as i64
        }
    }

    /// `(M[0][i], M[1][i+1], …, M[d-i][d])`.
    pub fn diagonal(&self, i: usize) -> Result<Vec<usize>> {
        let d = self.socle_degree();
        if i > d {
            return Err(Error::DiagonalIndex {
                index: i,
                degree: d,
            });
        }
        Ok((0..=d - i).map(|r| self.rows[r][r + i]).collect())
    }

    pub fn hilbert(&self) -> HilbertFunction {
        HilbertFunction::new(self.diagonal(0).expect("main diagonal"))
    }

    /// `dim A^{(k)}` for every `k`: the diagonal sums.
    pub fn dims(&self) -> DimsVector {
        let d = self.socle_degree();
        DimsVector {
            dims: (0..=d)
                .map(|k| self.diagonal(k).expect("in range").iter().sum())
                .collect(),
        }
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_rows(&self.rows, f)
    }
}

/// `J[i][j]` = number of strings starting in degree `i` and ending in degree `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct JdtMatrix {
    rows: Vec<Vec<usize>>,
}

impl JdtMatrix {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_square(&rows)?;
        Ok(JdtMatrix { rows })
    }

    pub fn socle_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Reads off the strings: `J[i][j]` copies of a length `j-i+1` string at degree `i`.
    pub fn jordan_degree_type(&self) -> IndexedPartition {
        let d = self.socle_degree();
        let mut strings = Vec::new();
        for i in 0..=d {
            for j in i..=d {
                let s = JordanString {
                    len: j - i + 1,
                    start: i,
                };
                strings.extend(std::iter::repeat_n(s, self.rows[i][j]));
            }
        }
        IndexedPartition::new(strings)
    }

    /// Number of strings of each length: `out[k]` counts length `k+1`.
    pub fn length_counts(&self) -> Vec<usize> {
        let d = self.socle_degree();
        (0..=d)
            .map(|k| (0..=d - k).map(|j| self.rows[j][j + k]).sum())
            .collect()
    }
}

impl fmt::Display for JdtMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_rows(&self.rows, f)
    }
}

/// `(dim A^{(0)}, …, dim A^{(d)})` with `A^{(k)} = S/Ann(ℓ^k ∘ F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DimsVector {
    dims: Vec<usize>,
}

impl DimsVector {
    pub fn new(dims: Vec<usize>) -> Self {
        DimsVector { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `n_i = dims[i] + dims[i+2] - 2 dims[i+1]`, dims beyond `d` being zero.
    pub fn second_difference(&self) -> Result<Vec<usize>> {
        let at = |i: usize| self.dims.get(i).copied().unwrap_or(0) as i64;
        (0..self.dims.len())
            .map(|i| {
                let n = at(i) + at(i + 2) - 2 * at(i + 1);
                usize::try_from(n).map_err(|_| Error::NegativeMultiplicity { index: i, value: n })
            })
            .collect()
    }

    /// Jordan type with `n_i` parts equal to `i + 1`.
    pub fn jordan_type(&self) -> Result<Partition> {
        Ok(Partition::from_multiplicities(&self.second_difference()?))
    }
}

fn check_inputs(f: &Polynomial, ell: &LinearForm) -> Result<u32> {
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
    Ok(d)
}

/// The dual generators `ℓ^k ∘ F` for `k = 0..=d`.
pub fn dual_generators(f: &Polynomial, ell: &LinearForm) -> Result<Vec<Polynomial>> {
    let d = check_inputs(f, ell)?;
    let mut out = Vec::with_capacity(d as usize + 1);
    let mut g = f.clone();
    for _ in 0..=d {
        let next = ell.apply(&g)?;
        out.push(g);
        g = next;
    }
    Ok(out)
}

/// Rank matrix of `(S/Ann(F), ℓ)`, built diagonal by diagonal from
/// Hilbert functions of `ℓ^k ∘ F`.
pub fn rank_matrix(f: &Polynomial, ell: &LinearForm) -> Result<RankMatrix> {
    let gens = dual_generators(f, ell)?;
    let d = gens.len() - 1;
    let mut rows = vec![vec![0; d + 1]; d + 1];
    for (k, g) in gens.iter().enumerate() {
        let h = hilbert_or_zero(g, d - k + 1)?;
        for (i, &v) in h.values().iter().enumerate() {
            rows[i][i + k] = v;
        }
    }
    RankMatrix::from_rows(rows)
}

/// `i`-th diagonal of a rank matrix.
pub fn diagonal(m: &RankMatrix, i: usize) -> Result<Vec<usize>> {
    m.diagonal(i)
}

/// Second-difference transform of the rank matrix. Fails with the position
/// of the first negative entry when `m` is not a genuine rank matrix.
pub fn jdt_matrix(m: &RankMatrix) -> Result<JdtMatrix> {
    let d = m.socle_degree();
    let mut rows = vec![vec![0; d + 1]; d + 1];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().skip(i) {
            let v = signed_jdt_entry(m, i, j);
            *cell = usize::try_from(v).map_err(|_| Error::NegativeJdtEntry {
                row: i,
                col: j,
                value: v,
            })?;
        }
    }
    JdtMatrix::from_rows(rows)
}

pub(crate) fn signed_jdt_entry(m: &RankMatrix, i: usize, j: usize) -> i64 {
    let (i, j) = (i as isize, j as isize);
    m.at(i, j) + m.at(i - 1, j + 1) - m.at(i - 1, j) - m.at(i, j + 1)
}

/// Jordan type `P_{ℓ,A}` from the dimensions of the algebras `A^{(k)}`.
pub fn jordan_type(f: &Polynomial, ell: &LinearForm) -> Result<Partition> {
    rank_matrix(f, ell)?.dims().jordan_type()
}

/// Jordan degree type `S_{ℓ,A}`, read from the Jordan degree type matrix.
pub fn jordan_degree_type(f: &Polynomial, ell: &LinearForm) -> Result<IndexedPartition> {
    Ok(jdt_matrix(&rank_matrix(f, ell)?)?.jordan_degree_type())
}

/// Everything the pipeline derives for one `(F, ℓ)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanData {
    pub hilbert: HilbertFunction,
    pub rank_matrix: RankMatrix,
    pub jdt_matrix: JdtMatrix,
    pub jordan_type: Partition,
    pub jordan_degree_type: IndexedPartition,
}

/// Runs the full pipeline once, sharing the rank matrix between outputs.
pub fn analyze(f: &Polynomial, ell: &LinearForm) -> Result<JordanData> {
    let m = rank_matrix(f, ell)?;
    let j = jdt_matrix(&m)?;
    let p = m.dims().jordan_type()?;
    let s = j.jordan_degree_type();
    Ok(JordanData {
        hilbert: m.hilbert(),
        jordan_type: p,
        jordan_degree_type: s,
        jdt_matrix: j,
        rank_matrix: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_linear_form, parse_poly, VarTable};

    fn setup(f: &str, ell: &str, names: &[&str]) -> (Polynomial, LinearForm) {
        let v = VarTable::new(names).unwrap();
        (
            parse_poly(f, &v).unwrap(),
            parse_linear_form(ell, &v).unwrap(),
        )
    }

    #[test]
    fn small_worked_example() {
        let (f, y) = setup("X^4 + XY^2Z", "y", &["X", "Y", "Z"]);
        let m = rank_matrix(&f, &y).unwrap();
        let expected = vec![
            vec![1, 1, 1, 0, 0],
            vec![0, 3, 3, 2, 0],
            vec![0, 0, 5, 3, 1],
            vec![0, 0, 0, 3, 1],
            vec![0, 0, 0, 0, 1],
        ];
        assert_eq!(m.rows(), expected);
        assert_eq!(diagonal(&m, 1).unwrap(), [1, 3, 3, 1]);
        assert_eq!(diagonal(&m, 0).unwrap(), m.hilbert().values());
        assert_eq!(
            diagonal(&m, 5),
            Err(Error::DiagonalIndex {
                index: 5,
                degree: 4
            })
        );
        let j = jdt_matrix(&m).unwrap();
        let mut expected_j = vec![vec![0; 5]; 5];
        expected_j[0][2] = 1;
        expected_j[1][3] = 2;
        expected_j[2][2] = 1;
        expected_j[2][4] = 1;
        assert_eq!(j.rows(), expected_j);
        assert_eq!(jordan_type(&f, &y).unwrap().parts(), [3, 3, 3, 3, 1]);
        assert_eq!(
            jordan_degree_type(&f, &y).unwrap().to_string(),
            "3_0 3_1 3_1 3_2 1_2"
        );
    }

    #[test]
    fn one_variable_chain() {
        let (f, x) = setup("X^2", "x", &["X"]);
        let m = rank_matrix(&f, &x).unwrap();
        assert_eq!(m.rows(), [vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        let j = jdt_matrix(&m).unwrap();
        assert_eq!(j.rows(), [vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(jordan_type(&f, &x).unwrap().parts(), [3]);
        assert_eq!(jordan_degree_type(&f, &x).unwrap().to_string(), "3_0");
    }

    #[test]
    fn two_squares() {
        let (f, x) = setup("X^2 + Y^2", "x", &["X", "Y"]);
        let j = jdt_matrix(&rank_matrix(&f, &x).unwrap()).unwrap();
        assert_eq!(j.rows(), [vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 0]]);
        assert_eq!(jordan_type(&f, &x).unwrap().parts(), [3, 1]);
    }

    #[test]
    fn vanishing_diagonals() {
        let (f, x) = setup("X^3Y^2 + (Y+Z)^5", "x", &["X", "Y", "Z"]);
        let m = rank_matrix(&f, &x).unwrap();
        assert_eq!(m.diagonal(5).unwrap(), [0]);
        assert_eq!(m.diagonal(4).unwrap(), [0, 0]);
        assert_eq!(m.diagonal(3).unwrap(), [1, 1, 1]);
    }

    #[test]
    fn errors() {
        let (f, _) = setup("X^2 + Y^2", "x", &["X", "Y"]);
        let zero = LinearForm::from_ints(&[0, 0]);
        assert_eq!(rank_matrix(&f, &zero), Err(Error::ZeroLinearForm));
        assert_eq!(
            rank_matrix(&Polynomial::zero(2), &LinearForm::from_ints(&[1, 0])),
            Err(Error::ZeroPolynomial)
        );
        let bad = RankMatrix::from_rows(vec![vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(
            jdt_matrix(&bad),
            Err(Error::NegativeJdtEntry {
                row: 1,
                col: 1,
                value: -1
            })
        );
        assert!(RankMatrix::from_rows(vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn negative_second_difference() {
        let dims = DimsVector::new(vec![3, 3, 1]);
        assert_eq!(
            dims.jordan_type(),
            Err(Error::NegativeMultiplicity {
                index: 0,
                value: -2
            })
        );
    }
}

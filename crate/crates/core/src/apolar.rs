//! Catalecticant matrices and Hilbert functions of `A = S/Ann(F)`.
//!
//! `h_A(j)` is the rank of the pairing `S_j × S_{d-j} → K`,
//! `(α, β) ↦ (αβ) ∘ F`, so the annihilator ideal is never built.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::poly::{Monomial, Polynomial};

/// `(h_0, …, h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    values: Vec<usize>,
}

impl HilbertFunction {
    pub fn new(values: Vec<usize>) -> Self {
        HilbertFunction { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn socle_degree(&self) -> Option<usize> {
        self.values.iter().rposition(|&h| h > 0)
    }

    /// Total dimension of the algebra.
    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `Cat_j(F)`: rows indexed by the lex-descending monomial basis of `S_j`,
/// columns by that of `S_{d-j}`, entry `(αβ) ∘ F`.
pub fn catalecticant(j: usize, f: &Polynomial) -> Result<Matrix> {
    let d = f.form_degree()? as usize;
    if j > d {
        return Err(Error::CatalecticantIndex {
            index: j,
            degree: d,
        });
    }
    let n = f.nvars();
    let rows = Monomial::basis(n, j as u32);
    let cols = Monomial::basis(n, (d - j) as u32);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (u, alpha) in rows.iter().enumerate() {
        for (v, beta) in cols.iter().enumerate() {
            // (αβ) ∘ F is a constant: only the term with monomial αβ survives
            let target = alpha.mul(beta);
            let c = f.coeff(&target);
            if let Some((factor, _)) = target.differentiate(&target) {
                m.set(u, v, c * Rational::from_integer(factor));
            }
        }
    }
    Ok(m)
}

/// Hilbert function of `S/Ann(F)` for a nonzero form `F`.
pub fn hilbert(f: &Polynomial) -> Result<HilbertFunction> {
    let d = f.form_degree()? as usize;
    let values = (0..=d)
        .map(|j| catalecticant(j, f).map(|m| m.rank()))
        .collect::<Result<Vec<_>>>()?;
    let h = HilbertFunction::new(values);
    assert!(
        h.is_symmetric(),
        "Gorenstein Hilbert function {h} is not symmetric"
    );
    Ok(h)
}

/// Like [`hilbert`], but the zero polynomial gives `len` zeros. This is the
/// shape of a vanishing diagonal in a rank matrix.
pub(crate) fn hilbert_or_zero(f: &Polynomial, len: usize) -> Result<HilbertFunction> {
    if f.is_zero() {
        Ok(HilbertFunction::new(vec![0; len]))
    } else {
        hilbert(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::parse::{parse_poly, VarTable};

    fn parse(text: &str, names: &[&str]) -> Polynomial {
        parse_poly(text, &VarTable::new(names).unwrap()).unwrap()
    }

    #[test]
    fn worked_catalecticants() {
        let f = parse("X^3Y^2 + (Y+Z)^5", &["X", "Y", "Z"]);
        let cat1 = catalecticant(1, &f).unwrap();
        assert_eq!((cat1.rows(), cat1.cols()), (3, 15));
        assert_eq!(cat1.rank(), 3);
        // x-row has 12 at x^2y^2; y-row has 12 at x^3y
        assert_eq!(cat1.get(0, 3), &rat(12));
        assert_eq!(cat1.get(1, 1), &rat(12));
        // (Y+Z)^5 block: (y^{5-i} z^i) ∘ F = (5-i)! i! C(5,i) = 120
        for c in 10..15 {
            assert_eq!(cat1.get(1, c), &rat(120));
            assert_eq!(cat1.get(2, c), &rat(120));
        }
        let nonzero = (0..3)
            .flat_map(|r| (0..10).map(move |c| (r, c)))
            .filter(|&(r, c)| cat1.get(r, c) != &rat(0))
            .count();
        assert_eq!(nonzero, 2);

        let cat2 = catalecticant(2, &f).unwrap();
        assert_eq!((cat2.rows(), cat2.cols()), (6, 10));
        assert_eq!(cat2.rank(), 4);
        assert_eq!(cat2.get(0, 3), &rat(12));
        assert_eq!(cat2.get(1, 1), &rat(12));
        assert_eq!(cat2.get(3, 0), &rat(12));
        assert!((0..10).all(|c| cat2.get(2, c) == &rat(0)));
    }

    #[test]
    fn one_variable() {
        let f = parse("X^2", &["X"]);
        assert_eq!(
            catalecticant(0, &f).unwrap(),
            Matrix::from_i64_rows(&[&[2]])
        );
        assert_eq!(hilbert(&f).unwrap().values(), [1, 1, 1]);
    }

    #[test]
    fn hilbert_examples() {
        let f = parse("X^4 + XY^2Z", &["X", "Y", "Z"]);
        assert_eq!(hilbert(&f).unwrap().values(), [1, 3, 5, 3, 1]);
        let f = parse(
            "X^6Y^2 + X^3(Y+Z)^5 + XY(Y+Z)^6 + Y^8 + Z^8",
            &["X", "Y", "Z"],
        );
        assert_eq!(hilbert(&f).unwrap().values(), [1, 3, 6, 9, 9, 9, 6, 3, 1]);
    }

    #[test]
    fn errors() {
        let f = parse("X^2 + Y", &["X", "Y"]);
        assert_eq!(catalecticant(0, &f), Err(Error::NotHomogeneous));
        assert_eq!(hilbert(&Polynomial::zero(2)), Err(Error::ZeroPolynomial));
        let g = parse("X^2", &["X", "Y"]);
        assert_eq!(
            catalecticant(3, &g),
            Err(Error::CatalecticantIndex {
                index: 3,
                degree: 2
            })
        );
    }

    #[test]
    fn self_adjoint_and_essential_variables() {
        let f = parse("X^3Y - 2XYZ^2 + 3Z^4 + Y^2Z^2", &["X", "Y", "Z"]);
        for j in 0..=4 {
            assert_eq!(
                catalecticant(j, &f).unwrap(),
                catalecticant(4 - j, &f).unwrap().transpose()
            );
        }
        // (X+Y)^4 + Z^4 lives in two essential variables
        let g = parse("(X+Y)^4 + Z^4", &["X", "Y", "Z"]);
        assert_eq!(catalecticant(1, &g).unwrap().rank(), 2);
    }
}

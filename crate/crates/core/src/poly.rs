//! Multivariate polynomials over the rationals and the differentiation action
//! of the polynomial ring on its Macaulay dual ring.
//!
//! Both rings share one representation: an operator `op` is applied to a form
//! `F` by letting each variable act as the partial derivative in the matching
//! position, so `y ∘ (X⁴ + XY²Z) = 2XYZ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};

/// Exponent vector. The derived ordering is lexicographic with the first
/// variable most significant, so `x > y > z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self ∘ target` for monomials: the derivative of `target` and its
    /// falling-factorial coefficient, or `None` when it vanishes.
    pub fn differentiate(&self, target: &Monomial) -> Option<(BigInt, Monomial)> {
        let mut coeff = BigInt::one();
        let mut out = Vec::with_capacity(target.0.len());
        for (&k, &n) in self.0.iter().zip(&target.0) {
            if k > n {
                return None;
            }
            for f in (n - k + 1)..=n {
                coeff *= f;
            }
            out.push(n - k);
        }
        Some((coeff, Monomial(out)))
    }

    /// All monomials of total degree `degree` in `nvars` variables, in
    /// descending lex order (`x^d` first).
    pub fn basis(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0; nvars];
        fill_basis(&mut current, 0, degree, &mut out);
        out
    }
}

fn fill_basis(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if current.is_empty() {
        if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_basis(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Polynomial in a fixed number of variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(nvars, index))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length does not match nvars");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous form.
    pub fn form_degree(&self) -> Result<u32> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(d)
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same nvars");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same nvars");
            }
        }
        result
    }

    /// Applies `self` to `target` as a constant-coefficient differential operator.
    pub fn diff_apply(&self, target: &Polynomial) -> Result<Polynomial> {
        self.check_vars(target)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &target.terms {
                if let Some((f, r)) = m.differentiate(n) {
                    out.add_term(r, a * b * Rational::from_integer(f));
                }
            }
        }
        Ok(out)
    }

    /// Keeps only the variables listed in `keep`, in that order. Terms
    /// involving a dropped variable are discarded.
    pub fn restrict(&self, keep: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(keep.len());
        for (m, c) in &self.terms {
            let e = m.exponents();
            let dropped = (0..self.nvars).any(|i| e[i] > 0 && !keep.contains(&i));
            if !dropped {
                out.add_term(Monomial(keep.iter().map(|&i| e[i]).collect()), c.clone());
            }
        }
        out
    }

    /// Embeds into `nvars` variables, sending variable `i` to `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &p) in positions.iter().enumerate() {
                e[p] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Canonical text rendering with the given variable names: terms in
    /// descending lex order, `*` between factors, `^` for exponents above one.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars, "name count does not match nvars");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// A linear form `c₁x₁ + … + cₙxₙ`, used as the multiplication direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        LinearForm { coefficients }
    }

    pub fn from_ints(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| rat(c)).collect())
    }

    /// The coordinate form `x_index`.
    pub fn coordinate(nvars: usize, index: usize) -> Self {
        let mut c = vec![Rational::zero(); nvars];
        c[index] = Rational::one();
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(
            n,
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    /// `ℓ ∘ target`, the directional derivative.
    pub fn apply(&self, target: &Polynomial) -> Result<Polynomial> {
        if self.nvars() != target.nvars() {
            return Err(Error::VarCountMismatch {
                left: self.nvars(),
                right: target.nvars(),
            });
        }
        let mut out = Polynomial::zero(target.nvars());
        for (m, b) in &target.terms {
            for (i, c) in self.coefficients.iter().enumerate() {
                let e = m.exponents()[i];
                if c.is_zero() || e == 0 {
                    continue;
                }
                let mut r = m.clone();
                r.0[i] -= 1;
                out.add_term(r, c * b * rat(i64::from(e)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|&(c, e)| (mono(e), rat(c))))
    }

    #[test]
    fn differentiation_examples() {
        let f = poly(3, &[(1, &[4, 0, 0]), (1, &[1, 2, 1])]);
        let y = Polynomial::var(3, 1);
        assert_eq!(y.diff_apply(&f).unwrap(), poly(3, &[(2, &[1, 1, 1])]));
        assert_eq!(
            y.pow(2).diff_apply(&f).unwrap(),
            poly(3, &[(2, &[1, 0, 1])])
        );

        let x5 = poly(1, &[(1, &[5])]);
        assert_eq!(
            Polynomial::var(1, 0).pow(3).diff_apply(&x5).unwrap(),
            poly(1, &[(60, &[2])])
        );
        let y3 = poly(2, &[(1, &[0, 3])]);
        assert!(Polynomial::var(2, 0).diff_apply(&y3).unwrap().is_zero());
    }

    #[test]
    fn nvars_mismatch() {
        let err = Polynomial::var(2, 0).diff_apply(&Polynomial::var(3, 0));
        assert_eq!(err, Err(Error::VarCountMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn powers() {
        let y_plus_z = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(
            y_plus_z.pow(2),
            poly(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])])
        );
        let fifth = y_plus_z.pow(5);
        let coeffs: Vec<Rational> = (0..=5).map(|i| fifth.coeff(&mono(&[5 - i, i]))).collect();
        assert_eq!(coeffs, [1, 5, 10, 10, 5, 1].map(rat));
        assert_eq!(Polynomial::var(1, 0).pow(5), poly(1, &[(1, &[5])]));
        assert_eq!(y_plus_z.pow(0), Polynomial::one(2));
    }

    #[test]
    fn degree_and_homogeneity() {
        assert_eq!(poly(2, &[(1, &[6, 2])]).degree(), Some(8));
        assert_eq!(Polynomial::zero(2).degree(), None);
        assert!(!poly(2, &[(1, &[2, 0]), (1, &[0, 1])]).is_homogeneous());
        assert_eq!(
            Polynomial::zero(2).form_degree(),
            Err(Error::ZeroPolynomial)
        );
        let p = poly(2, &[(3, &[1, 1]), (-1, &[0, 2])]);
        assert!(p.add(&p.scale(&rat(-1))).unwrap().is_zero());
    }

    #[test]
    fn basis_order() {
        let b = Monomial::basis(3, 2);
        let exps: Vec<&[u32]> = b.iter().map(Monomial::exponents).collect();
        assert_eq!(
            exps,
            vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2]
            ]
        );
        assert!(b.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(Monomial::basis(3, 4).len(), 15);
        assert_eq!(Monomial::basis(0, 0).len(), 1);
        assert_eq!(Monomial::basis(0, 2).len(), 0);
    }

    #[test]
    fn render_canonical() {
        let names: Vec<String> = ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect();
        let p = poly(3, &[(1, &[4, 0, 0]), (-2, &[1, 2, 1]), (3, &[0, 0, 0])]);
        assert_eq!(p.render(&names), "X^4 - 2*X*Y^2*Z + 3");
        assert_eq!(Polynomial::zero(3).render(&names), "0");
        assert_eq!(poly(3, &[(-1, &[0, 1, 0])]).render(&names), "-Y");
    }

    #[test]
    fn linear_apply_matches_diff_apply() {
        let ell = LinearForm::from_ints(&[2, -1, 3]);
        let f = poly(3, &[(1, &[2, 1, 0]), (5, &[0, 1, 2]), (-2, &[1, 1, 1])]);
        assert_eq!(
            ell.apply(&f).unwrap(),
            ell.to_polynomial().diff_apply(&f).unwrap()
        );
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..4, n)), 0..5).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    n,
                    terms.into_iter().map(|(c, e)| (Monomial::new(e), rat(c))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn diff_apply_is_bilinear(a in small_poly(3), b in small_poly(3), f in small_poly(3), g in small_poly(3), c in -3i64..=3) {
            let lhs = a.add(&b.scale(&rat(c))).unwrap().diff_apply(&f).unwrap();
            let rhs = a.diff_apply(&f).unwrap().add(&b.diff_apply(&f).unwrap().scale(&rat(c))).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = a.diff_apply(&f.add(&g.scale(&rat(c))).unwrap()).unwrap();
            let rhs = a.diff_apply(&f).unwrap().add(&a.diff_apply(&g).unwrap().scale(&rat(c))).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn diff_apply_composes(a in small_poly(3), b in small_poly(3), f in small_poly(3)) {
            let nested = a.diff_apply(&b.diff_apply(&f).unwrap()).unwrap();
            let product = a.mul(&b).unwrap().diff_apply(&f).unwrap();
            prop_assert_eq!(nested, product);
        }

        #[test]
        fn high_degree_operator_annihilates(f in small_poly(2), k in 0u32..3) {
            if let Some(d) = f.degree() {
                let op = Polynomial::var(2, 0).add(&Polynomial::var(2, 1)).unwrap().pow(d + 1 + k);
                prop_assert!(op.diff_apply(&f).unwrap().is_zero());
            }
        }

        #[test]
        fn lex_order_is_total(a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3)) {
            let (a, b) = (Monomial::new(a), Monomial::new(b));
            prop_assert_eq!(a == b, a.cmp(&b) == std::cmp::Ordering::Equal);
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        }
    }
}

//! Seeded random forms and linear forms for sweeps and stress tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::rat;
use crate::poly::{LinearForm, Monomial, Polynomial};

/// A nonzero form of degree `degree` in `nvars` variables with integer
/// coefficients drawn from `-bound..=bound`. The number of terms is itself
/// random, so sparse and dense forms both occur.
pub fn random_form<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    degree: u32,
    bound: i64,
) -> Polynomial {
    assert!(bound > 0 && nvars > 0);
    let basis = Monomial::basis(nvars, degree);
    loop {
        let nterms = rng.gen_range(1..=basis.len());
        let chosen = basis.choose_multiple(rng, nterms);
        let p = Polynomial::from_terms(
            nvars,
            chosen.map(|m| (m.clone(), rat(rng.gen_range(-bound..=bound)))),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// A nonzero linear form with coefficients in `-bound..=bound`.
pub fn random_linear_form<R: Rng + ?Sized>(rng: &mut R, nvars: usize, bound: i64) -> LinearForm {
    loop {
        let c: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-bound..=bound)).collect();
        let ell = LinearForm::from_ints(&c);
        if !ell.is_zero() {
            return ell;
        }
    }
}

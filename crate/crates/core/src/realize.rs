//! Realizing a rank matrix by a dual generator, and searching pools of
//! generators for pairs with equal Jordan type but different Jordan degree
//! type.
//!
//! With `ℓ = x₁` write `F = Σ_i X₁^{d-i} G_i` where `G_i` is a form of degree
//! `i` in the remaining variables. Then `x₁^k ∘ F` only involves
//! `G_0, …, G_{d-k}`, and its Hilbert function is the `k`-th diagonal of the
//! rank matrix. The search fixes the layers one at a time, `G_0` first,
//! trying candidate forms until the next diagonal matches, and backtracks
//! when a layer runs out of candidates.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::apolar::{hilbert_or_zero, HilbertFunction};
use crate::checks::{check_rank_matrix, CheckReport};
use crate::error::Result;
use crate::jordan::{analyze, rank_matrix, RankMatrix};
use crate::linalg::{rat, Rational};
use crate::partition::{IndexedPartition, Partition};
use crate::poly::{LinearForm, Monomial, Polynomial};

/// Families of layer candidates, enumerated in the order listed in
/// [`SearchConfig::candidate_shapes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateShape {
    Zero,
    /// Monic monomials.
    Monomial,
    /// `L^i` for linear forms `L` with pool coefficients.
    LinearPower,
    /// Sums of two distinct monomials or linear powers.
    SumOfTwo,
    /// A monomial times a power of a linear form, e.g. `Y(Y+Z)^6`.
    MonomialTimesPower,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub coefficient_pool: Vec<i64>,
    pub max_trials_per_layer: usize,
    pub candidate_shapes: Vec<CandidateShape>,
    pub rng_seed: u64,
    pub time_budget: Duration,
    /// Cap on candidate evaluations across all layers and backtracking.
    pub max_total_trials: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coefficient_pool: vec![-2, -1, 0, 1, 2],
            max_trials_per_layer: 20_000,
            candidate_shapes: vec![
                CandidateShape::Zero,
                CandidateShape::Monomial,
                CandidateShape::LinearPower,
                CandidateShape::SumOfTwo,
            ],
            rng_seed: 0,
            time_budget: Duration::from_secs(120),
            max_total_trials: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizeOutcome {
    /// A generator whose rank matrix for `x₁` equals the target.
    Found(Polynomial),
    /// Budget spent; `deepest_layer` is the most layers that were ever fixed at once.
    Exhausted {
        deepest_layer: usize,
    },
    InvalidTarget(CheckReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizeResult {
    pub outcome: RealizeOutcome,
    pub trials: u64,
}

impl RealizeResult {
    pub fn found(&self) -> Option<&Polynomial> {
        match &self.outcome {
            RealizeOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Candidate layers of degree `degree` in `nvars` variables, deduplicated,
/// in shape order.
pub fn layer_candidates(
    nvars: usize,
    degree: u32,
    pool: &[i64],
    shapes: &[CandidateShape],
) -> Vec<Polynomial> {
    let monomials: Vec<Polynomial> = Monomial::basis(nvars, degree)
        .into_iter()
        .map(|m| Polynomial::term(Rational::one(), m))
        .collect();
    let linear = linear_forms(nvars, pool);
    let powers: Vec<Polynomial> = linear.iter().map(|l| l.pow(degree)).collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |p: Polynomial, out: &mut Vec<Polynomial>| {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    };
    for shape in shapes {
        match shape {
            CandidateShape::Zero => push(Polynomial::zero(nvars), &mut out),
            CandidateShape::Monomial => monomials.iter().for_each(|m| push(m.clone(), &mut out)),
            CandidateShape::LinearPower => powers.iter().for_each(|p| push(p.clone(), &mut out)),
            CandidateShape::SumOfTwo => {
                let singles: Vec<&Polynomial> = monomials.iter().chain(&powers).collect();
                for (a, p) in singles.iter().enumerate() {
                    for q in &singles[a + 1..] {
                        push(p.add(q).expect("shared nvars"), &mut out);
                    }
                }
            }
            CandidateShape::MonomialTimesPower => {
                for k in 1..degree {
                    let lower: Vec<Polynomial> = linear.iter().map(|l| l.pow(degree - k)).collect();
                    for m in Monomial::basis(nvars, k) {
                        let m = Polynomial::term(Rational::one(), m);
                        for p in &lower {
                            push(m.mul(p).expect("shared nvars"), &mut out);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Nonzero linear forms with pool coefficients, first nonzero coefficient positive.
fn linear_forms(nvars: usize, pool: &[i64]) -> Vec<Polynomial> {
    let mut pool: Vec<i64> = pool.to_vec();
    pool.sort_unstable_by_key(|v| (v.abs(), *v < 0));
    pool.dedup();
    let mut out = Vec::new();
    let mut coeffs = vec![0usize; nvars];
    if nvars == 0 {
        return out;
    }
    loop {
        let values: Vec<i64> = coeffs.iter().map(|&c| pool[c]).collect();
        if values.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0) {
            out.push(Polynomial::from_terms(
                nvars,
                values
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (Monomial::var(nvars, i), rat(v))),
            ));
        }
        let mut pos = nvars;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < pool.len() {
                break;
            }
            coeffs[pos] = 0;
        }
    }
}

/// Dense random layer with pool coefficients.
fn random_layer(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, pool: &[i64]) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        Monomial::basis(nvars, degree)
            .into_iter()
            .map(|m| (m, rat(pool[rng.gen_range(0..pool.len())]))),
    )
}

const CHUNK: usize = 64;

struct Search<'a> {
    target: &'a RankMatrix,
    nvars: usize,
    d: usize,
    cfg: &'a SearchConfig,
    others: Vec<usize>,
    trials: u64,
    deepest: usize,
    started: Instant,
    out_of_budget: bool,
}

impl Search<'_> {
    fn budget_left(&mut self) -> bool {
        if self.trials >= self.cfg.max_total_trials || self.started.elapsed() > self.cfg.time_budget
        {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    /// `x₁^k ∘ F` for `F = partial + X₁^k · G`, given `base = x₁^k ∘ partial`.
    fn derived(&self, base: &Polynomial, k: usize, layer: &Polynomial) -> Polynomial {
        let factorial: u64 = (1..=k as u64).product();
        let lifted = layer.embed(self.nvars, &self.others);
        base.add(&lifted.scale(&rat(factorial as i64)))
            .expect("shared nvars")
    }

    fn matches(&self, base: &Polynomial, k: usize, layer: &Polynomial, want: &[usize]) -> bool {
        let g = self.derived(base, k, layer);
        match hilbert_or_zero(&g, self.d - k + 1) {
            Ok(h) => h.values() == want,
            Err(_) => false,
        }
    }

    /// Fixes layer `i = d - k` on top of `partial` and recurses toward `k = 0`.
    fn layer(&mut self, partial: &Polynomial, k: usize) -> Option<Polynomial> {
        let i = self.d - k;
        let want = self.target.diagonal(k).expect("in range");
        let x1 = LinearForm::coordinate(self.nvars, 0);
        let mut base = partial.clone();
        for _ in 0..k {
            base = x1.apply(&base).expect("shared nvars");
        }
        let m = self.others.len();
        let pool = &self.cfg.coefficient_pool;
        let enumerated = layer_candidates(m, i as u32, pool, &self.cfg.candidate_shapes);
        let per_layer = self.cfg.max_trials_per_layer;
        let random_count = per_layer.saturating_sub(enumerated.len());
        let seed = self
            .cfg
            .rng_seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add((i as u64) << 32 | self.trials);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut candidates = enumerated.into_iter().take(per_layer);
        let mut random_left = if m > 0 && i > 0 { random_count } else { 0 };

        loop {
            if !self.budget_left() {
                return None;
            }
            let room = (self.cfg.max_total_trials - self.trials) as usize;
            let mut chunk: Vec<Polynomial> = candidates.by_ref().take(CHUNK.min(room)).collect();
            while chunk.len() < CHUNK.min(room) && random_left > 0 {
                chunk.push(random_layer(&mut rng, m, i as u32, pool));
                random_left -= 1;
            }
            if chunk.is_empty() {
                return None;
            }
            self.trials += chunk.len() as u64;
            let hits: Vec<bool> = chunk
                .par_iter()
                .map(|g| self.matches(&base, k, g, &want))
                .collect();
            for (g, hit) in chunk.iter().zip(hits) {
                if !hit {
                    continue;
                }
                let x_power = Polynomial::var(self.nvars, 0).pow(k as u32);
                let next = partial
                    .add(
                        &x_power
                            .mul(&g.embed(self.nvars, &self.others))
                            .expect("shared nvars"),
                    )
                    .expect("shared nvars");
                self.deepest = self.deepest.max(i + 1);
                if k == 0 {
                    if self.verify(&next) {
                        return Some(next);
                    }
                    continue;
                }
                if let Some(f) = self.layer(&next, k - 1) {
                    return Some(f);
                }
                if self.out_of_budget {
                    return None;
                }
            }
        }
    }

    fn verify(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return false;
        }
        let x1 = LinearForm::coordinate(self.nvars, 0);
        matches!(rank_matrix(f, &x1), Ok(m) if &m == self.target)
    }
}

/// Searches for `F` in `nvars` variables with `rank_matrix(F, x₁) = target`.
/// Every reported generator has been re-checked through [`rank_matrix`].
pub fn realize(target: &RankMatrix, nvars: usize, cfg: &SearchConfig) -> RealizeResult {
    let report = check_rank_matrix(target);
    if !report.passed {
        return RealizeResult {
            outcome: RealizeOutcome::InvalidTarget(report),
            trials: 0,
        };
    }
    assert!(nvars >= 1, "realize needs at least one variable");
    let d = target.socle_degree();
    let mut search = Search {
        target,
        nvars,
        d,
        cfg,
        others: (1..nvars).collect(),
        trials: 0,
        deepest: 0,
        started: Instant::now(),
        out_of_budget: false,
    };
    let found = search.layer(&Polynomial::zero(nvars), d);
    let outcome = match found {
        Some(f) => RealizeOutcome::Found(f),
        None => RealizeOutcome::Exhausted {
            deepest_layer: search.deepest,
        },
    };
    RealizeResult {
        outcome,
        trials: search.trials,
    }
}

/// How pool entries are grouped before comparing Jordan degree types.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Grouping {
    /// Same Hilbert function and same Jordan type.
    #[default]
    HilbertAndJordanType,
    /// Same Jordan type only.
    JordanType,
}

/// Two pool entries sharing a group but not a Jordan degree type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: usize,
    pub second: usize,
    pub hilbert: (HilbertFunction, HilbertFunction),
    pub jordan_type: Partition,
    pub first_jdt: IndexedPartition,
    pub second_jdt: IndexedPartition,
}

/// All unordered pairs `(i, j)`, `i < j`, that collide under `grouping`.
pub fn find_collisions(
    pool: &[(Polynomial, LinearForm)],
    grouping: Grouping,
) -> Result<Vec<Collision>> {
    let data = pool
        .par_iter()
        .map(|(f, ell)| analyze(f, ell))
        .collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<(Option<&HilbertFunction>, &Partition), Vec<usize>> = BTreeMap::new();
    for (idx, entry) in data.iter().enumerate() {
        let h = match grouping {
            Grouping::HilbertAndJordanType => Some(&entry.hilbert),
            Grouping::JordanType => None,
        };
        groups.entry((h, &entry.jordan_type)).or_default().push(idx);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if data[i].jordan_degree_type != data[j].jordan_degree_type {
                    out.push(Collision {
                        first: i,
                        second: j,
                        hilbert: (data[i].hilbert.clone(), data[j].hilbert.clone()),
                        jordan_type: data[i].jordan_type.clone(),
                        first_jdt: data[i].jordan_degree_type.clone(),
                        second_jdt: data[j].jordan_degree_type.clone(),
                    });
                }
            }
        }
    }
    out.sort_by_key(|c| (c.first, c.second));
    Ok(out)
}

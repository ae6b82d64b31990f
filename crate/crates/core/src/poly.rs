//! Multivariate polynomials with big-integer coefficients.
//!
//! Used for variable-truncated identities: Schur polynomials in finitely many
//! variables, the plethysm engine and alternant coefficient extraction.

use std::collections::HashMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::tableau::Permutation;

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: HashMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, scale: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * scale);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        out.add_scaled(self, factor);
        out
    }

    /// Exact division of every coefficient; `None` if some coefficient is
    /// not divisible.
    pub fn div_exact(&self, divisor: &BigInt) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            if !(c % divisor).is_zero() {
                return None;
            }
            out.terms.insert(e.clone(), c / divisor);
        }
        Some(out)
    }

    /// `p(x_1^k, ..., x_r^k)`.
    pub fn power_substitute(&self, k: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&a| a * k).collect(), c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &a) in point.iter().zip(e) {
                term *= num_traits::pow(x.clone(), a as usize);
            }
            total += term;
        }
        total
    }

    /// Coefficient of `s_λ` in a symmetric polynomial with `r = nvars`
    /// variables, read off the antisymmetrization: the coefficient of
    /// `x^{λ+δ}` in `p · ∏_{i<j}(x_i - x_j)`, `δ = (r-1, ..., 0)`.
    pub fn alternant_coefficient(&self, lambda: &[usize]) -> BigInt {
        self.block_alternant_coefficient(&[(self.nvars, lambda)])
    }

    /// Coefficient of `s_{λ¹}(x¹) s_{λ²}(x²) ⋯` for a polynomial symmetric
    /// in each of several consecutive variable blocks `(block size, λ)`.
    pub fn block_alternant_coefficient(&self, blocks: &[(usize, &[usize])]) -> BigInt {
        assert_eq!(blocks.iter().map(|b| b.0).sum::<usize>(), self.nvars);
        let per_block: Vec<Vec<(Vec<u32>, bool)>> = blocks
            .iter()
            .map(|&(r, lambda)| alternant_shifts(r, lambda))
            .collect();
        if per_block.iter().any(Vec::is_empty) {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        let mut idx = vec![0usize; blocks.len()];
        let mut exps = Vec::with_capacity(self.nvars);
        loop {
            exps.clear();
            let mut positive = true;
            for (b, &i) in idx.iter().enumerate() {
                let (e, pos) = &per_block[b][i];
                exps.extend_from_slice(e);
                positive ^= !pos;
            }
            if let Some(c) = self.terms.get(&exps) {
                if positive {
                    total += c;
                } else {
                    total -= c;
                }
            }
            // odometer over the blocks
            let mut b = 0;
            loop {
                if b == idx.len() {
                    return total;
                }
                idx[b] += 1;
                if idx[b] < per_block[b].len() {
                    break;
                }
                idx[b] = 0;
                b += 1;
            }
        }
    }
}

/// Exponent vectors `λ + δ - σ(δ)` with nonnegative entries, paired with
/// whether `σ` is even.
fn alternant_shifts(r: usize, lambda: &[usize]) -> Vec<(Vec<u32>, bool)> {
    if lambda.len() > r {
        return Vec::new();
    }
    Permutation::all(r)
        .into_iter()
        .filter_map(|sigma| {
            let exps: Option<Vec<u32>> = (0..r)
                .map(|i| {
                    let e = lambda.get(i).copied().unwrap_or(0) as i64 + sigma.word()[i] as i64
                        - (i as i64 + 1);
                    u32::try_from(e).ok()
                })
                .collect();
            exps.map(|e| (e, sigma.sign() > 0))
        })
        .collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

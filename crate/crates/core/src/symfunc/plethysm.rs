//! Plethysm `f[g]`.
//!
//! Two independent routes:
//!
//! * [`plethysm`] substitutes symbolically on power sums, using
//!   `p_k[p_μ] = p_{kμ}`, and reads Schur coefficients off the characters.
//! * [`plethysm_polynomial`] evaluates `f[g]` in `r` variables by expanding
//!   `f` on power sums and substituting `p_k[g](x) = g(x_1^k, ..., x_r^k)`.
//!   [`plethysm_schur_truncated`] then extracts every Schur coefficient with
//!   at most `r` rows from the alternant. With `r = 3` this handles degree
//!   42 comfortably.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{Basis, SymFunc};
use crate::characters::powersum_to_schur;
use crate::error::{capacity, domain, internal, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::Polynomial;

/// Largest output degree accepted by the symbolic route.
pub const SYMBOLIC_MAX_DEGREE: usize = 24;

/// Largest output degree accepted by the polynomial route.
pub const POLYNOMIAL_MAX_DEGREE: usize = 64;

/// `f[g]` as a Schur expansion.
pub fn plethysm(outer: &SymFunc, inner: &SymFunc) -> Result<SymFunc> {
    let degree = outer.degree() * inner.degree();
    if degree > SYMBOLIC_MAX_DEGREE {
        return capacity(format!(
            "plethysm of degree {degree} exceeds {SYMBOLIC_MAX_DEGREE}; use the variable-truncated engine"
        ));
    }
    let f = outer.to_basis(Basis::PowerSum);
    let g = inner.to_basis(Basis::PowerSum);
    let mut power_cache: BTreeMap<usize, SymFunc> = BTreeMap::new();
    let mut total = SymFunc::zero(Basis::PowerSum, degree);
    for (alpha, c) in f.terms() {
        let mut term = SymFunc::element(Basis::PowerSum, &Partition::empty());
        for &k in alpha.parts() {
            let pk = power_cache
                .entry(k)
                .or_insert_with(|| power_substitute(&g, k));
            term = term.multiply(pk);
        }
        total = total.add(&term.scale(c))?;
    }
    powersum_to_schur(&total)
}

/// `p_k[g] = Σ g_μ p_{kμ}` for `g` in the power-sum basis.
fn power_substitute(g: &SymFunc, k: usize) -> SymFunc {
    let terms = g.terms().map(|(mu, c)| {
        let parts = mu.parts().iter().map(|&m| m * k).collect();
        (Partition::from_sorted(parts), c.clone())
    });
    SymFunc::from_terms(Basis::PowerSum, g.degree() * k, terms).expect("degrees scale by k")
}

/// The polynomial `g(x_1, ..., x_r)` for `g` with integer monomial
/// coefficients.
fn monomial_polynomial(g: &SymFunc, nvars: usize) -> Result<Polynomial> {
    let m = g.to_basis(Basis::Monomial);
    let mut poly = Polynomial::zero(nvars);
    for (mu, c) in m.integer_coeffs().map_err(|_| {
        crate::error::Error::Domain(
            "the inner function must have integer monomial coefficients".into(),
        )
    })? {
        if mu.len() > nvars {
            continue;
        }
        let mut exps: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
        exps.resize(nvars, 0);
        exps.sort_unstable();
        // distinct rearrangements in lexicographic order
        loop {
            poly.add_term(exps.clone(), c.clone());
            let Some(i) = (1..exps.len()).rev().find(|&i| exps[i - 1] < exps[i]) else {
                break;
            };
            let j = (i..exps.len())
                .rev()
                .find(|&j| exps[j] > exps[i - 1])
                .unwrap();
            exps.swap(i - 1, j);
            exps[i..].reverse();
        }
    }
    Ok(poly)
}

/// `f[g](x_1, ..., x_r)` with integer coefficients.
pub fn plethysm_polynomial(outer: &SymFunc, inner: &SymFunc, nvars: usize) -> Result<Polynomial> {
    let degree = outer.degree() * inner.degree();
    if degree > POLYNOMIAL_MAX_DEGREE {
        return capacity(format!(
            "plethysm of degree {degree} exceeds {POLYNOMIAL_MAX_DEGREE}"
        ));
    }
    if nvars == 0 {
        return domain("the plethysm engine needs at least one variable");
    }
    let f = outer.to_basis(Basis::PowerSum);
    // clear denominators: L·f has integer power-sum coefficients
    let scale = f
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let g = monomial_polynomial(inner, nvars)?;
    let terms: Vec<(Partition, BigInt)> = f
        .terms()
        .map(|(alpha, c)| {
            (
                alpha.clone(),
                (c * BigRational::from_integer(scale.clone())).to_integer(),
            )
        })
        .collect();
    let powers: BTreeMap<usize, Polynomial> = terms
        .iter()
        .flat_map(|(alpha, _)| alpha.parts().iter().copied())
        .map(|k| (k, g.power_substitute(k as u32)))
        .collect();
    let pieces: Vec<Polynomial> = terms
        .par_iter()
        .map(|(alpha, c)| {
            let mut prod = Polynomial::one(nvars);
            for k in alpha.parts() {
                prod = &prod * &powers[k];
            }
            prod.scale(c)
        })
        .collect();
    let mut total = Polynomial::zero(nvars);
    for piece in &pieces {
        total.add_scaled(piece, &BigInt::one());
    }
    match total.div_exact(&scale) {
        Some(p) => Ok(p),
        None => internal("plethysm polynomial has non-integral coefficients"),
    }
}

/// Schur coefficients of `f[g]` for every `λ` with `ℓ(λ) ≤ max_len`,
/// computed in exactly `max_len` variables. Zero coefficients are omitted.
pub fn plethysm_schur_truncated(
    outer: &SymFunc,
    inner: &SymFunc,
    max_len: usize,
) -> Result<BTreeMap<Partition, BigInt>> {
    let poly = plethysm_polynomial(outer, inner, max_len)?;
    let degree = outer.degree() * inner.degree();
    let positive = schur_positive(outer) && schur_positive(inner);
    let mut out = BTreeMap::new();
    for lambda in partitions_of(degree) {
        if lambda.len() > max_len {
            continue;
        }
        let c = poly.alternant_coefficient(lambda.parts());
        if c.is_negative() && positive {
            return internal(format!("negative plethysm coefficient {c} at ({lambda})"));
        }
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// Coefficient of `s_λ` in `f[g]`, computed in `ℓ(λ)` variables.
pub fn plethysm_schur_coefficient(
    outer: &SymFunc,
    inner: &SymFunc,
    lambda: &Partition,
) -> Result<BigInt> {
    if lambda.size() != outer.degree() * inner.degree() {
        return domain(format!(
            "|({lambda})| = {} but the plethysm has degree {}",
            lambda.size(),
            outer.degree() * inner.degree()
        ));
    }
    let nvars = lambda.len().max(1);
    let poly = plethysm_polynomial(outer, inner, nvars)?;
    Ok(poly.alternant_coefficient(lambda.parts()))
}

fn schur_positive(f: &SymFunc) -> bool {
    f.to_basis(Basis::Schur)
        .terms()
        .all(|(_, c)| !c.is_negative())
}

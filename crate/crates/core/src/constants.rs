//! Structure constants: Kostka, Littlewood-Richardson, Kronecker, symmetric
//! Kronecker and plethysm coefficients.
//!
//! Every count returned here is checked to be a nonnegative integer before it
//! leaves the module; a violation is reported as [`Error::Internal`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::engine::{Engine, Limits};
use crate::error::{capacity, domain, internal, Error, Result};
use crate::partition::{partitions_in_rectangle, Composition, Partition, SkewShape};
use crate::poly::Exponents;
use crate::symfunc::plethysm::plethysm_schur_coefficient;
use crate::symfunc::{schur_polynomial_at, Basis, SymFunc};
use crate::tableau::{count_ssyt, enumerate_lr_tableaux, enumerate_ssyt};

/// Three partitions `(λ, μ, ν)`: a Kronecker triple when all sizes agree, an
/// LR triple `c^λ_{μν}` when `|λ| = |μ| + |ν|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleQuery {
    pub first: Partition,
    pub second: Partition,
    pub third: Partition,
}

impl TripleQuery {
    pub fn new(first: Partition, second: Partition, third: Partition) -> Self {
        TripleQuery {
            first,
            second,
            third,
        }
    }

    pub fn check_kronecker(&self) -> Result<usize> {
        let n = self.first.size();
        if self.second.size() != n || self.third.size() != n {
            return domain(format!(
                "Kronecker coefficients need equal sizes, got |{}|={n}, |{}|={}, |{}|={}",
                self.first,
                self.second,
                self.second.size(),
                self.third,
                self.third.size()
            ));
        }
        Ok(n)
    }

    pub fn check_lr(&self) -> Result<()> {
        if self.first.size() != self.second.size() + self.third.size() {
            return domain(format!(
                "c^λ_(μν) needs |λ| = |μ| + |ν|, got {} ≠ {} + {}",
                self.first.size(),
                self.second.size(),
                self.third.size()
            ));
        }
        Ok(())
    }

    pub fn conjugate_pair(&self) -> TripleQuery {
        TripleQuery::new(
            self.first.conjugate(),
            self.second.conjugate(),
            self.third.clone(),
        )
    }
}

impl fmt::Display for TripleQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.first, self.second, self.third)
    }
}

fn nonnegative(value: BigInt, what: impl FnOnce() -> String) -> Result<BigUint> {
    match value.to_biguint() {
        Some(v) => Ok(v),
        None => internal(format!("{} = {value} is negative", what())),
    }
}

/// `K_{λ,content}`, by enumeration up to the default threshold and by the
/// branching rule above it.
pub fn kostka(shape: &Partition, content: &Composition) -> Result<BigUint> {
    kostka_with(&Limits::default(), shape, content)
}

pub fn kostka_with(limits: &Limits, shape: &Partition, content: &Composition) -> Result<BigUint> {
    if shape.size() != content.size() {
        return domain(format!(
            "K needs |λ| = Σ content, got |{shape}| = {} and [{content}] summing to {}",
            shape.size(),
            content.size()
        ));
    }
    let skew = SkewShape::straight(shape.clone());
    if shape.size() <= limits.kostka_enumeration_max {
        let count = enumerate_ssyt(&skew, content, limits.tableau_cap)?.len();
        return Ok(BigUint::from(count));
    }
    count_ssyt(&skew, content)
}

/// `K_{λμ} > 0`, which holds exactly when `λ ⊵ μ`.
pub fn kostka_positive(shape: &Partition, content: &Partition) -> Result<bool> {
    shape.dominates(content)
}

/// `c^λ_{μν}` by counting LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, other: &Partition) -> Result<BigUint> {
    TripleQuery::new(outer.clone(), inner.clone(), other.clone()).check_lr()?;
    if !outer.contains(inner) || !outer.contains(other) {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(
        enumerate_lr_tableaux(outer, inner, other)?.len(),
    ))
}

/// `c^λ_{μν}` as the coefficient of `s_λ` in `s_μ s_ν`.
pub fn lr_via_product(outer: &Partition, inner: &Partition, other: &Partition) -> Result<BigUint> {
    TripleQuery::new(outer.clone(), inner.clone(), other.clone()).check_lr()?;
    let product = SymFunc::schur(inner)
        .multiply(&SymFunc::schur(other))
        .to_basis(Basis::Schur);
    let c = product.coeff(outer);
    if !c.is_integer() {
        return internal(format!("non-integral LR coefficient {c}"));
    }
    nonnegative(c.to_integer(), || {
        format!("c^({outer})_({inner}),({other})")
    })
}

/// The skew shape `θ / (λ_1^{ℓ-1})` and content `τ` with
/// `c^θ_{(λ_1^{ℓ-1}), τ} = K_{λμ}`, where `ℓ = ℓ(μ)`,
/// `η_i = μ_1 (ℓ - i)`, `τ = η + μ` and `θ = (λ_1 + η_1, ..., λ_1 + η_{ℓ-1}, λ)`.
pub fn kostka_lr_triple(shape: &Partition, content: &Partition) -> Result<TripleQuery> {
    if shape.size() != content.size() {
        return domain(format!("|{shape}| ≠ |{content}|"));
    }
    let len = content.len();
    if len == 0 {
        return Ok(TripleQuery::new(
            Partition::empty(),
            Partition::empty(),
            Partition::empty(),
        ));
    }
    let mu1 = content.part(0);
    let lambda1 = shape.part(0);
    let eta: Vec<usize> = (1..len).map(|i| mu1 * (len - i)).collect();
    let tau: Vec<usize> = (0..len)
        .map(|i| eta.get(i).copied().unwrap_or(0) + content.part(i))
        .collect();
    let mut theta: Vec<usize> = eta.iter().map(|e| lambda1 + e).collect();
    theta.extend_from_slice(shape.parts());
    let theta = Partition::new(theta).map_err(|e| {
        Error::Internal(format!(
            "θ for K_({shape}),({content}) is not a partition: {e}"
        ))
    })?;
    let tau = Partition::new(tau).map_err(|e| {
        Error::Internal(format!(
            "τ for K_({shape}),({content}) is not a partition: {e}"
        ))
    })?;
    Ok(TripleQuery::new(
        theta,
        Partition::rectangle(lambda1, len - 1),
        tau,
    ))
}

/// `K_{λμ}` computed as a Littlewood-Richardson coefficient.
pub fn kostka_via_lr(shape: &Partition, content: &Partition) -> Result<BigUint> {
    let q = kostka_lr_triple(shape, content)?;
    lr_coefficient(&q.first, &q.second, &q.third)
}

/// `g(λ, μ, ν) = Σ_α z_α⁻¹ χ^λ(α) χ^μ(α) χ^ν(α)` from a character table.
pub fn kronecker_from_table(table: &CharacterTable, q: &TripleQuery) -> Result<BigUint> {
    let n = q.check_kronecker()?;
    if n != table.n() {
        return internal(format!(
            "table for n={} used for a triple of size {n}",
            table.n()
        ));
    }
    let rows: Vec<&[i128]> = [&q.first, &q.second, &q.third]
        .into_iter()
        .map(|p| table.row(p).expect("partition of n"))
        .collect();
    let total = class_sum(table, |j| {
        BigInt::from(rows[0][j]) * BigInt::from(rows[1][j]) * BigInt::from(rows[2][j])
    });
    let (g, r) = total.div_rem(&factorial(n));
    if !r.is_zero() {
        return internal(format!("g{q} is not an integer"));
    }
    nonnegative(g, || format!("g{q}"))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Σ_α (n!/z_α) f(α)` over the classes of a table.
fn class_sum(table: &CharacterTable, f: impl Fn(usize) -> BigInt) -> BigInt {
    let order = factorial(table.n());
    table
        .partitions()
        .iter()
        .enumerate()
        .map(|(j, alpha)| (&order / BigInt::from(alpha.z_value())) * f(j))
        .sum()
}

impl Engine {
    /// `g(λ, μ, ν)` from the cached character table.
    pub fn kronecker(&self, q: &TripleQuery) -> Result<BigUint> {
        let n = q.check_kronecker()?;
        let table = self.character_table(n)?;
        kronecker_from_table(&table, q)
    }

    /// `sk(λ, μ)`, the multiplicity of `χ^λ` in `Sym²(χ^μ)`.
    pub fn symmetric_kronecker(&self, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
        let sk = self.square_part(lambda, mu, true)?;
        let g = self.kronecker(&TripleQuery::new(lambda.clone(), mu.clone(), mu.clone()))?;
        if sk > g {
            return internal(format!("sk({lambda}, {mu}) = {sk} exceeds g = {g}"));
        }
        Ok(sk)
    }

    /// Multiplicity of `χ^λ` in the alternating square `Λ²(χ^μ)`.
    pub fn alternating_kronecker(&self, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
        self.square_part(lambda, mu, false)
    }

    fn square_part(&self, lambda: &Partition, mu: &Partition, symmetric: bool) -> Result<BigUint> {
        let n = lambda.size();
        if mu.size() != n {
            return domain(format!("sk needs |λ| = |μ|, got |{lambda}| ≠ |{mu}|"));
        }
        let table = self.character_table(n)?;
        let chi_l = table.row(lambda).expect("partition of n");
        let chi_m = table.row(mu).expect("partition of n");
        let squares: Vec<i128> = table
            .partitions()
            .iter()
            .map(|alpha| table.value(mu, &alpha.squared_cycle_type()))
            .collect::<Result<_>>()?;
        let total = class_sum(&table, |j| {
            let sq = BigInt::from(chi_m[j]) * chi_m[j];
            let twisted = BigInt::from(squares[j]);
            let class_fn = if symmetric {
                sq + twisted
            } else {
                sq - twisted
            };
            class_fn * chi_l[j]
        });
        let (v, r) = total.div_rem(&(factorial(n) * 2));
        if !r.is_zero() {
            return internal(format!(
                "square multiplicity for ({lambda}), ({mu}) is not an integer"
            ));
        }
        nonnegative(v, || format!("square multiplicity of ({lambda}) in ({mu})"))
    }

    /// `c^λ_{μν}` and `g((n-|λ|, λ), (n-|μ|, μ), (n-|ν|, ν))` at
    /// `n = 2|λ| + 1`.
    pub fn murnaghan_sides(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<(BigUint, BigUint, usize)> {
        let q = TripleQuery::new(lambda.clone(), mu.clone(), nu.clone());
        q.check_lr()?;
        let n = 2 * lambda.size() + 1;
        if n > self.limits().max_n {
            return capacity(format!(
                "the stable point n = {n} exceeds the character-table bound {}; raise --max-n",
                self.limits().max_n
            ));
        }
        let lr = lr_coefficient(lambda, mu, nu)?;
        let pad = |p: &Partition| p.with_first_part(n - p.size());
        let padded = TripleQuery::new(pad(lambda)?, pad(mu)?, pad(nu)?);
        let g = self.kronecker(&padded)?;
        Ok((lr, g, n))
    }

    pub fn murnaghan_stable_check(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<bool> {
        let (lr, g, _) = self.murnaghan_sides(lambda, mu, nu)?;
        Ok(lr == g)
    }

    /// `a^λ_{μ,ν}`, the coefficient of `s_λ` in `s_ν[s_μ]`, within the
    /// configured variable budget.
    pub fn plethysm_coefficient(
        &self,
        lambda: &Partition,
        inner: &Partition,
        outer: &Partition,
    ) -> Result<BigUint> {
        plethysm_coefficient(lambda, inner, outer, self.limits().var_budget)
    }

    /// `a_λ(d[n]) = ⟨s_λ, h_d[h_n]⟩`.
    pub fn pleth_a(&self, lambda: &Partition, d: usize, n: usize) -> Result<BigUint> {
        pleth_a(lambda, d, n, self.limits().var_budget)
    }

    pub fn kronecker_schur_weyl(&self, q: &TripleQuery, r: usize, s: usize) -> Result<BigUint> {
        kronecker_schur_weyl(q, r, s, self.limits().schur_weyl_max_n)
    }

    pub fn kostka(&self, shape: &Partition, content: &Composition) -> Result<BigUint> {
        kostka_with(self.limits(), shape, content)
    }
}

/// `g(λ, μ, ν)` as the coefficient of `s_μ(x) s_ν(y)` in `s_λ(x_i y_j)`,
/// with `r` x-variables and `s` y-variables.
pub fn kronecker_schur_weyl(q: &TripleQuery, r: usize, s: usize, max_n: usize) -> Result<BigUint> {
    let n = q.check_kronecker()?;
    if n > max_n {
        return capacity(format!(
            "the Schur-Weyl route is limited to n ≤ {max_n}, got {n}"
        ));
    }
    if q.second.len() > r || q.third.len() > s {
        return domain(format!(
            "ℓ({}) must be ≤ r = {r} and ℓ({}) ≤ s = {s}",
            q.second, q.third
        ));
    }
    let nvars = r + s;
    let subs: Vec<Exponents> = (0..r)
        .flat_map(|i| {
            (0..s).map(move |j| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                e[r + j] = 1;
                e
            })
        })
        .collect();
    let poly = schur_polynomial_at(&q.first, &subs, nvars);
    let c = poly.block_alternant_coefficient(&[(r, q.second.parts()), (s, q.third.parts())]);
    nonnegative(c, || format!("g{q}"))
}

/// The internal product: `p_α * p_β = δ_{αβ} z_α p_α`. The result is in the
/// basis of `f`.
pub fn kronecker_product(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    if f.degree() != g.degree() {
        return domain(format!(
            "Kronecker product needs equal degrees, got {} and {}",
            f.degree(),
            g.degree()
        ));
    }
    let fp = f.to_basis(Basis::PowerSum);
    let gp = g.to_basis(Basis::PowerSum);
    let terms = fp.terms().filter_map(|(alpha, c)| {
        let d = gp.coeff(alpha);
        if d.is_zero() {
            return None;
        }
        let z = BigRational::from_integer(BigInt::from(alpha.z_value()));
        Some((alpha.clone(), c * d * z))
    });
    let product = SymFunc::from_terms(Basis::PowerSum, f.degree(), terms)?;
    Ok(product.to_basis(f.basis()))
}

/// `g(λ, n^d, n^d) = p_{λ_2}(n, d) - p_{λ_2 - 1}(n, d)` for two-row `λ`.
pub fn kronecker_two_row_rect(lambda: &Partition, n: usize, d: usize) -> Result<BigUint> {
    if n == 0 || d == 0 {
        return domain("rectangle sides must be positive");
    }
    if lambda.len() > 2 || lambda.size() != n * d {
        return domain(format!(
            "({lambda}) must have at most two rows and size {n}·{d}"
        ));
    }
    let l2 = lambda.part(1);
    let upper = BigInt::from(partitions_in_rectangle(l2, n, d));
    let lower = match l2.checked_sub(1) {
        Some(r) => BigInt::from(partitions_in_rectangle(r, n, d)),
        None => BigInt::zero(),
    };
    nonnegative(upper - lower, || format!("g(({lambda}), {n}^{d}, {n}^{d})"))
}

/// `a^λ_{μ,ν}`: the coefficient of `s_λ` in `s_ν[s_μ]`, computed in `ℓ(λ)`
/// variables.
pub fn plethysm_coefficient(
    lambda: &Partition,
    inner: &Partition,
    outer: &Partition,
    var_budget: usize,
) -> Result<BigUint> {
    if lambda.size() != inner.size() * outer.size() {
        return domain(format!(
            "|{lambda}| = {} but s_({outer})[s_({inner})] has degree {}",
            lambda.size(),
            inner.size() * outer.size()
        ));
    }
    if lambda.len() > var_budget {
        return capacity(format!(
            "ℓ({lambda}) = {} exceeds the variable budget {var_budget}; raise --var-budget",
            lambda.len()
        ));
    }
    let c = plethysm_schur_coefficient(&SymFunc::schur(outer), &SymFunc::schur(inner), lambda)?;
    nonnegative(c, || format!("a^({lambda})_(({inner}),({outer}))"))
}

/// `a_λ(d[n]) = ⟨s_λ, h_d[h_n]⟩`.
pub fn pleth_a(lambda: &Partition, d: usize, n: usize, var_budget: usize) -> Result<BigUint> {
    plethysm_coefficient(lambda, &Partition::row(n), &Partition::row(d), var_budget)
}

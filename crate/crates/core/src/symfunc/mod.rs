//! Homogeneous symmetric functions with exact rational coefficients in the
//! monomial, elementary, homogeneous, power-sum and Schur bases.
//!
//! Every basis change routes through the monomial basis. The transition
//! matrices into `m` are the classical counting functions: contingency
//! arrays for `h`, 0-1 contingency arrays for `e`, ordered set partitions
//! for `p` and Kostka numbers for `s`. The inverse transitions are exact
//! rational solves, unitriangular in the Schur case.

pub mod counts;
pub mod plethysm;
mod transition;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{capacity, domain, internal, Error, Result};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::poly::{Exponents, Polynomial};
use crate::tableau::horizontal_strip_removals;

pub use counts::{contingency01_count, contingency_count, ordered_set_partition_count};
pub use plethysm::{plethysm, plethysm_polynomial, plethysm_schur_truncated};

/// Largest `n·(r+s)` accepted by [`cauchy_check`].
pub const CAUCHY_BOUND: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    #[serde(rename = "powersum")]
    PowerSum,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::PowerSum,
        Basis::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Elementary => "elementary",
            Basis::Homogeneous => "homogeneous",
            Basis::PowerSum => "powersum",
            Basis::Schur => "schur",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" | "monomial" => Basis::Monomial,
            "e" | "elementary" => Basis::Elementary,
            "h" | "homogeneous" => Basis::Homogeneous,
            "p" | "powersum" => Basis::PowerSum,
            "s" | "schur" => Basis::Schur,
            _ => return Err(Error::Parse(format!("unknown basis {s:?}"))),
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A homogeneous symmetric function of fixed degree in a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `b_λ`.
    pub fn element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(basis, lambda.size());
        f.coeffs.insert(lambda.clone(), BigRational::one());
        f
    }

    pub fn schur(lambda: &Partition) -> Self {
        Self::element(Basis::Schur, lambda)
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut f = Self::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return domain(format!("({lambda}) does not have size {degree}"));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in descending lexicographic order of their index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum with `other`, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return domain(format!(
                "cannot add degrees {} and {}",
                self.degree, other.degree
            ));
        }
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (k, v) in other.coeffs {
            out.add_term(k, v);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigRational) -> SymFunc {
        let mut out = Self::zero(self.basis, self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v * factor);
        }
        out
    }

    /// Coefficients as integers, failing loudly if any is fractional.
    pub fn integer_coeffs(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.coeffs
            .iter()
            .map(|(k, v)| {
                if v.is_integer() {
                    Ok((k.clone(), v.to_integer()))
                } else {
                    internal(format!("coefficient {v} of ({k}) is not an integer"))
                }
            })
            .collect()
    }

    /// The same element expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let n = self.degree;
        let mut m: HashMap<usize, BigRational> = HashMap::new();
        if self.basis == Basis::Monomial {
            let t = transition::transition(Basis::Monomial, n);
            for (k, v) in &self.coeffs {
                m.insert(t.index[k], v.clone());
            }
        } else {
            let src = transition::transition(self.basis, n);
            for (k, v) in &self.coeffs {
                for (j, e) in &src.to_m[src.index[k]] {
                    *m.entry(*j).or_insert_with(BigRational::zero) += v * e;
                }
            }
        }
        let dst = transition::transition(target, n);
        let mut out = SymFunc::zero(target, n);
        let mut indices: Vec<_> = m.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        indices.sort_by_key(|(i, _)| *i);
        if target == Basis::Monomial {
            for (i, v) in indices {
                out.add_term(dst.parts[i].clone(), v);
            }
            return out;
        }
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, v) in indices {
            for (j, e) in &dst.from_m[i] {
                *acc.entry(*j).or_insert_with(BigRational::zero) += &v * e;
            }
        }
        for (j, v) in acc {
            out.add_term(dst.parts[j].clone(), v);
        }
        out
    }

    /// Product in Λ, computed on power sums and returned in the basis of
    /// `self`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_basis(Basis::PowerSum);
        let b = other.to_basis(Basis::PowerSum);
        let mut out = SymFunc::zero(Basis::PowerSum, self.degree + other.degree);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(lb.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out.to_basis(self.basis)
    }

    /// The involution ω: `e_λ ↔ h_λ`, `s_λ ↦ s_λ'`, `p_λ ↦ ±p_λ`.
    pub fn omega(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.degree);
        match self.basis {
            Basis::Elementary | Basis::Homogeneous => {
                out.coeffs = self.coeffs.clone();
                out.basis = if self.basis == Basis::Elementary {
                    Basis::Homogeneous
                } else {
                    Basis::Elementary
                };
            }
            Basis::Schur => {
                for (k, v) in &self.coeffs {
                    out.add_term(k.conjugate(), v.clone());
                }
            }
            Basis::PowerSum => {
                for (k, v) in &self.coeffs {
                    out.add_term(k.clone(), v * rational(omega_sign(k)));
                }
            }
            Basis::Monomial => {
                return self
                    .to_basis(Basis::PowerSum)
                    .omega()
                    .to_basis(Basis::Monomial)
            }
        }
        out
    }

    /// Value at `(x_1, ..., x_r, 0, 0, ...)`.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        let p = self.to_basis(Basis::PowerSum);
        let top = p
            .coeffs
            .keys()
            .filter_map(|k| k.parts().first().copied())
            .max()
            .unwrap_or(0);
        let power_sums: Vec<BigRational> = (0..=top)
            .map(|k| point.iter().map(|x| num_traits::pow(x.clone(), k)).sum())
            .collect();
        p.coeffs
            .iter()
            .map(|(k, v)| {
                k.parts()
                    .iter()
                    .fold(v.clone(), |acc, &part| acc * &power_sums[part])
            })
            .sum()
    }

    /// Hall inner product: power sums are orthogonal with `⟨p_λ, p_λ⟩ = z_λ`.
    pub fn hall_inner_product(&self, other: &SymFunc) -> Result<BigRational> {
        if self.degree != other.degree {
            return domain(format!(
                "inner product needs equal degrees, got {} and {}",
                self.degree, other.degree
            ));
        }
        let a = self.to_basis(Basis::PowerSum);
        let b = other.to_basis(Basis::PowerSum);
        let mut total = BigRational::zero();
        for (k, v) in &a.coeffs {
            if let Some(w) = b.coeffs.get(k) {
                total += v * w * BigRational::from_integer(BigInt::from(k.z_value()));
            }
        }
        Ok(total)
    }
}

pub(crate) fn omega_sign(lambda: &Partition) -> i64 {
    lambda.sign()
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms().enumerate() {
            let neg = v.is_negative();
            let abs = v.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}[{}]", self.basis.symbol(), k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn json_int(v: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

/// Wire format: `{degree, basis, terms: [[partition, numerator, denominator], ...]}`.
impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            degree: usize,
            basis: Basis,
            terms: Vec<(Partition, serde_json::Number, serde_json::Number)>,
        }
        Wire {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms()
                .map(|(k, v)| (k.clone(), json_int(v.numer()), json_int(v.denom())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            degree: usize,
            basis: Basis,
            terms: Vec<(Partition, serde_json::Number, serde_json::Number)>,
        }
        let wire = Wire::deserialize(d)?;
        let parse = |n: &serde_json::Number| {
            BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom)
        };
        let mut terms = Vec::with_capacity(wire.terms.len());
        for (k, num, den) in &wire.terms {
            let den = parse(den)?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            terms.push((k.clone(), BigRational::new(parse(num)?, den)));
        }
        SymFunc::from_terms(wire.basis, wire.degree, terms).map_err(serde::de::Error::custom)
    }
}

/// `det[h_{λ_i - μ_j - i + j}]` expanded into the homogeneous basis, with
/// `h_0 = 1` and `h_k = 0` for `k < 0`. Equals the skew Schur function
/// `s_{λ/μ}`.
pub fn jacobi_trudi(shape: &SkewShape) -> SymFunc {
    let outer = shape.outer();
    let inner = shape.inner();
    let size = outer.len();
    let entry = |i: usize, j: usize| -> i64 {
        outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64
    };
    let mut out = SymFunc::zero(Basis::Homogeneous, shape.size());
    let mut used = vec![false; size];
    let mut indices = Vec::with_capacity(size);
    expand_determinant(0, size, &entry, &mut used, &mut indices, 1, &mut out);
    out
}

fn expand_determinant(
    row: usize,
    size: usize,
    entry: &dyn Fn(usize, usize) -> i64,
    used: &mut [bool],
    indices: &mut Vec<usize>,
    sign: i64,
    out: &mut SymFunc,
) {
    if row == size {
        out.add_term(Partition::from_unsorted(indices.clone()), rational(sign));
        return;
    }
    for col in 0..size {
        if used[col] {
            continue;
        }
        let e = entry(row, col);
        if e < 0 {
            continue;
        }
        // later rows take the unused columns left of `col` as inversions
        let inversions = (0..col).filter(|&c| !used[c]).count();
        let term_sign = if inversions % 2 == 0 { sign } else { -sign };
        used[col] = true;
        indices.push(e as usize);
        expand_determinant(row + 1, size, entry, used, indices, term_sign, out);
        indices.pop();
        used[col] = false;
    }
}

/// `s_λ(1^N) = ∏ (N + c(i,j)) / h(i,j)` over the cells of `λ`.
pub fn schur_dimension(lambda: &Partition, nvars: usize) -> BigUint {
    if lambda.len() > nvars {
        return BigUint::zero();
    }
    let hooks = lambda.hook_lengths();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.cells() {
        num *= nvars + j - i;
        den *= hooks[i][j];
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `s_λ(z_1, ..., z_K)` where each `z_k` is the monomial `subs[k]` in
/// `nvars` variables, expanded by the branching rule
/// `s_λ(z_1..z_K) = Σ_{λ/μ horizontal strip} s_μ(z_1..z_{K-1}) z_K^{|λ/μ|}`.
pub fn schur_polynomial_at(lambda: &Partition, subs: &[Exponents], nvars: usize) -> Polynomial {
    let mut memo = HashMap::new();
    branch(lambda.parts(), subs, nvars, &mut memo)
}

/// `s_λ(x_1, ..., x_r)`.
pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> Polynomial {
    let subs: Vec<Exponents> = (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e
        })
        .collect();
    schur_polynomial_at(lambda, &subs, nvars)
}

fn branch(
    lambda: &[usize],
    subs: &[Exponents],
    nvars: usize,
    memo: &mut HashMap<(Vec<usize>, usize), Polynomial>,
) -> Polynomial {
    if lambda.is_empty() {
        return Polynomial::one(nvars);
    }
    if lambda.len() > subs.len() {
        return Polynomial::zero(nvars);
    }
    let key = (lambda.to_vec(), subs.len());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (last, rest) = subs.split_last().unwrap();
    let mut out = Polynomial::zero(nvars);
    let empty = Partition::empty();
    for strip in 0..=lambda[0] {
        for mu in horizontal_strip_removals(lambda, &empty, strip) {
            if mu.len() > rest.len() {
                continue;
            }
            let sub = branch(&mu, rest, nvars, memo);
            if sub.is_zero() {
                continue;
            }
            let exps: Exponents = last.iter().map(|&a| a * strip as u32).collect();
            let shift = Polynomial::monomial(exps, BigInt::one());
            out.add_scaled(&(&sub * &shift), &BigInt::one());
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Checks `Σ_{λ ⊢ d} s_λ(x) s_λ(y) = [deg d] ∏_{i,j} 1/(1 - x_i y_j)` for
/// all `d ≤ n` with `r` x-variables and `s` y-variables.
pub fn cauchy_check(n: usize, r: usize, s: usize) -> Result<bool> {
    if n * (r + s) > CAUCHY_BOUND {
        return capacity(format!("cauchy_check needs n·(r+s) ≤ {CAUCHY_BOUND}"));
    }
    let nvars = r + s;
    let unit = |i: usize| {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        e
    };
    let xs: Vec<Exponents> = (0..r).map(unit).collect();
    let ys: Vec<Exponents> = (r..nvars).map(unit).collect();
    // right side: product of truncated geometric series in x_i y_j
    let mut rhs = Polynomial::one(nvars);
    for i in 0..r {
        for j in 0..s {
            let mut series = Polynomial::zero(nvars);
            for k in 0..=n as u32 {
                let mut e = vec![0u32; nvars];
                e[i] = k;
                e[r + j] = k;
                series.add_term(e, BigInt::one());
            }
            rhs = (&rhs * &series).truncate(2 * n as u32);
        }
    }
    for d in 0..=n {
        let mut lhs = Polynomial::zero(nvars);
        for lambda in partitions_of(d) {
            let sx = schur_polynomial_at(&lambda, &xs, nvars);
            let sy = schur_polynomial_at(&lambda, &ys, nvars);
            lhs.add_scaled(&(&sx * &sy), &BigInt::one());
        }
        if lhs != rhs.component(2 * d as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(v: i64) -> BigRational {
        rational(v)
    }

    fn terms(f: &SymFunc) -> Vec<(String, String)> {
        f.terms()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn documented_expansions() {
        let e21 = SymFunc::element(Basis::Elementary, &p("2,1")).to_basis(Basis::Monomial);
        assert_eq!(e21.coeff(&p("2,1")), q(1));
        assert_eq!(e21.coeff(&p("1,1,1")), q(3));
        assert_eq!(e21.len(), 2);

        let s21 = SymFunc::schur(&p("2,1")).to_basis(Basis::Monomial);
        assert_eq!(
            terms(&s21),
            vec![("2,1".into(), "1".into()), ("1,1,1".into(), "2".into())]
        );

        let p2 = SymFunc::element(Basis::PowerSum, &p("2")).to_basis(Basis::Schur);
        assert_eq!(
            terms(&p2),
            vec![("2".into(), "1".into()), ("1,1".into(), "-1".into())]
        );
    }

    #[test]
    fn products() {
        let prod = SymFunc::schur(&p("1")).multiply(&SymFunc::schur(&p("1,1")));
        assert_eq!(
            terms(&prod),
            vec![("2,1".into(), "1".into()), ("1,1,1".into(), "1".into())]
        );
        let pp = SymFunc::element(Basis::PowerSum, &p("2"))
            .multiply(&SymFunc::element(Basis::PowerSum, &p("1")));
        assert_eq!(pp, SymFunc::element(Basis::PowerSum, &p("2,1")));
        let unit = SymFunc::schur(&Partition::empty());
        assert_eq!(
            SymFunc::schur(&p("3,1")).multiply(&unit),
            SymFunc::schur(&p("3,1"))
        );
    }

    #[test]
    fn jacobi_trudi_examples() {
        let jt = jacobi_trudi(&SkewShape::straight(p("2,1")));
        assert_eq!(
            terms(&jt),
            vec![("3".into(), "-1".into()), ("2,1".into(), "1".into())]
        );
        assert_eq!(
            jacobi_trudi(&SkewShape::straight(p("4"))),
            SymFunc::element(Basis::Homogeneous, &p("4"))
        );
        let skew = jacobi_trudi(&SkewShape::new(p("2,2"), p("1")).unwrap());
        assert_eq!(skew, jt);
        assert_eq!(skew.to_basis(Basis::Schur), SymFunc::schur(&p("2,1")));
    }

    #[test]
    fn evaluation() {
        let ones = vec![q(1); 3];
        assert_eq!(SymFunc::schur(&p("2,1")).evaluate(&ones), q(8));
        assert_eq!(SymFunc::schur(&p("2,1")).evaluate(&[q(0), q(0)]), q(0));
        assert_eq!(
            SymFunc::element(Basis::Homogeneous, &p("2")).evaluate(&[q(1), q(1)]),
            q(3)
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(schur_dimension(&p("2,1"), 3), BigUint::from(8u32));
        assert_eq!(schur_dimension(&p("1,1,1,1"), 3), BigUint::zero());
        // h_n in N variables: binomial(N+n-1, n)
        assert_eq!(schur_dimension(&p("4"), 3), BigUint::from(15u32));
    }

    #[test]
    fn inner_products() {
        let s21 = SymFunc::schur(&p("2,1"));
        assert_eq!(s21.hall_inner_product(&s21).unwrap(), q(1));
        assert_eq!(
            SymFunc::schur(&p("3")).hall_inner_product(&s21).unwrap(),
            q(0)
        );
        let h = SymFunc::element(Basis::Homogeneous, &p("2,1"));
        let m = SymFunc::element(Basis::Monomial, &p("2,1"));
        assert_eq!(h.hall_inner_product(&m).unwrap(), q(1));
        assert!(matches!(
            s21.hall_inner_product(&SymFunc::schur(&p("2"))),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(
            SymFunc::schur(&p("3,1")).omega(),
            SymFunc::schur(&p("2,1,1"))
        );
        assert_eq!(
            SymFunc::element(Basis::Elementary, &p("2,1")).omega(),
            SymFunc::element(Basis::Homogeneous, &p("2,1"))
        );
        let m = SymFunc::element(Basis::Monomial, &p("2,1"));
        assert_eq!(m.omega().omega(), m);
    }

    #[test]
    fn cauchy() {
        assert!(cauchy_check(3, 2, 2).unwrap());
        assert!(cauchy_check(0, 3, 1).unwrap());
        assert!(cauchy_check(4, 1, 1).unwrap());
        assert!(matches!(cauchy_check(40, 1, 1), Err(Error::Capacity(_))));
    }

    #[test]
    fn json_wire_format() {
        let f = SymFunc::element(Basis::PowerSum, &p("2")).to_basis(Basis::Schur);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"degree":2,"basis":"schur","terms":[[[2],1,1],[[1,1],-1,1]]}"#
        );
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let half = SymFunc::element(Basis::Monomial, &p("1,1")).to_basis(Basis::PowerSum);
        let json = serde_json::to_string(&half).unwrap();
        assert_eq!(
            json,
            r#"{"degree":2,"basis":"powersum","terms":[[[2],-1,2],[[1,1],1,2]]}"#
        );
    }

    #[test]
    fn schur_polynomials() {
        let s = schur_polynomial(&p("2,1"), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.coeff(&[1, 1, 1]), BigInt::from(2));
        assert!(schur_polynomial(&p("1,1,1"), 2).is_zero());
        assert_eq!(s.alternant_coefficient(&[2, 1]), BigInt::one());
    }
}

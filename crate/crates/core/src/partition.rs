//! Integer partitions, weak compositions and skew shapes, together with the
//! purely numeric partition functions.
//!
//! Partitions of a fixed size are always listed in descending lexicographic
//! order. Descending lex order is a linear extension of dominance order,
//! which the basis-change code relies on.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{capacity, domain, Error, Result};

/// Default cap on `n` for explicit enumeration of all partitions of `n`.
pub const DEFAULT_ENUMERATION_CAP: usize = 60;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts
    /// are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(if n == 0 { vec![] } else { vec![n] })
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![width; height])
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Self::from_sorted((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size != other.size {
            return domain(format!(
                "dominance compares partitions of equal size, got {} and {}",
                self.size, other.size
            ));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// Cells `(i, j)` of the diagram, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook lengths, one row per part.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..p).map(|j| p - j + conj.parts[j] - i - 1).collect())
            .collect()
    }

    /// Durfee square size `max{i : λ_i ≥ i}`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Hook lengths of the diagonal cells of a self-conjugate partition:
    /// `2λ_i - 2i + 1` for `i = 1..d(λ)`.
    pub fn principal_hooks(&self) -> Result<Composition> {
        if !self.is_self_conjugate() {
            return domain(format!(
                "principal hooks need a self-conjugate partition, got ({self})"
            ));
        }
        let hooks = (0..self.durfee())
            .map(|i| 2 * self.parts[i] - 2 * i - 1)
            .collect();
        Ok(Composition::new(hooks))
    }

    /// Multiplicity of each part size, keyed by part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z_value(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= part * k;
            }
        }
        z
    }

    /// Sign of the conjugacy class, `(-1)^{n - ℓ}`.
    pub fn sign(&self) -> i64 {
        if (self.size - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Entrywise (horizontal) sum of diagrams.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Self::from_sorted((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Vertical sum `(λ' + μ')'`.
    pub fn add_vertical(&self, other: &Partition) -> Partition {
        self.conjugate().add(&other.conjugate()).conjugate()
    }

    /// `(first, parts of self)`, which fails when `first < λ_1`.
    pub fn with_first_part(&self, first: usize) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Cycle type of `w²` for `w` of cycle type `self`.
    pub fn squared_cycle_type(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.len());
        for &p in &self.parts {
            if p % 2 == 0 {
                parts.push(p / 2);
                parts.push(p / 2);
            } else {
                parts.push(p);
            }
        }
        Self::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Parses the shared textual grammar: comma-separated parts, `a^k` for `k`
/// copies of `a`, whitespace ignored, empty string for the empty sequence.
fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for token in cleaned.split(',') {
        let bad = || Error::Parse(format!("malformed part {token:?} in {s:?}"));
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let base = base.parse::<usize>().map_err(|_| bad())?;
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = parse_parts(s)?;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not a partition")))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A weak composition: nonnegative parts, order significant.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sort descending and drop zeros.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition::new)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return domain(format!("({inner}) is not contained in ({outer})"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

/// All partitions of `n` in descending lex order, without a capacity check.
pub(crate) fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, usize::MAX, &mut current, &mut out);
    out
}

fn descend(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        // the remaining parts are all ≤ p
        if p.saturating_mul(max_len - current.len()) < remaining {
            break;
        }
        current.push(p);
        descend(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

/// All partitions of `n` with optional bounds on the largest part and the
/// number of parts, in descending lex order.
pub fn enumerate_partitions(
    n: usize,
    max_part: Option<usize>,
    max_len: Option<usize>,
    cap: usize,
) -> Result<Vec<Partition>> {
    if n > cap {
        return capacity(format!(
            "enumerating partitions of {n} exceeds the cap {cap}; raise the enumeration bound"
        ));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(
        n,
        max_part.unwrap_or(n),
        max_len.unwrap_or(usize::MAX),
        &mut current,
        &mut out,
    );
    Ok(out)
}

/// `p(n)` via Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut p: Vec<BigUint> = Vec::with_capacity(n + 1);
    p.push(BigUint::one());
    for m in 1..=n {
        let (mut plus, mut minus) = (BigUint::zero(), BigUint::zero());
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_plus = k % 2 == 1;
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[m - g1].clone();
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_plus {
                plus += term;
            } else {
                minus += term;
            }
        }
        p.push(plus - minus);
    }
    p.swap_remove(n)
}

/// Gaussian binomial `[a+b choose a]_q`: coefficient `r` counts partitions
/// of `r` fitting in an `a × b` box (parts ≤ a, at most b parts).
pub fn q_binomial(a: usize, b: usize) -> Vec<BigUint> {
    // box[j] holds the generating polynomial for the a' × j box, a' = current row
    let mut boxes: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]; b + 1];
    for width in 1..=a {
        let mut next: Vec<Vec<BigUint>> = Vec::with_capacity(b + 1);
        next.push(vec![BigUint::one()]);
        for height in 1..=b {
            // G(w, h) = G(w-1, h) + q^w G(w, h-1)
            let mut poly = vec![BigUint::zero(); width * height + 1];
            for (r, c) in boxes[height].iter().enumerate() {
                poly[r] += c;
            }
            for (r, c) in next[height - 1].iter().enumerate() {
                poly[r + width] += c;
            }
            next.push(poly);
        }
        boxes = next;
    }
    let mut out = boxes.swap_remove(b);
    out.resize(a * b + 1, BigUint::zero());
    out
}

/// `p_r(a, b) = #{μ ⊢ r : μ_1 ≤ a, ℓ(μ) ≤ b}`.
pub fn partitions_in_rectangle(r: usize, a: usize, b: usize) -> BigUint {
    if r > a * b {
        return BigUint::zero();
    }
    q_binomial(a, b).swap_remove(r)
}

//! Young tableaux: standard, semistandard and Littlewood-Richardson fillings,
//! the hook-length formula, and Schensted insertion.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{capacity, domain, Error, Result};
use crate::partition::{Composition, Partition, SkewShape};

/// Default cap on the number of tableaux any enumeration may return.
pub const DEFAULT_TABLEAU_CAP: usize = 1_000_000;

/// A filling of a (possibly skew) shape with positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// `rows[i]` fills the cells of row `i` that lie outside the inner shape.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let expected = shape.outer().len();
        if rows.len() != expected || (0..expected).any(|i| rows[i].len() != shape.row_len(i)) {
            return domain(format!("row lengths do not match the shape {shape}"));
        }
        Ok(Tableau { shape, rows })
    }

    /// A tableau of straight shape read off its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(outer), rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry in absolute cell `(i, j)`; `None` for cells of the inner shape
    /// or outside the diagram.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        let start = self.shape.inner().part(i);
        if j < start {
            return None;
        }
        self.rows.get(i)?.get(j - start).copied()
    }

    /// Weakly increasing along rows, strictly increasing down columns.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        rows_ok
            && (1..self.rows.len()).all(|i| {
                let start = self.shape.inner().part(i);
                (start..self.shape.outer().part(i)).all(|j| match self.entry(i - 1, j) {
                    Some(above) => above < self.entry(i, j).unwrap(),
                    None => true,
                })
            })
    }

    /// Semistandard on a straight shape with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        if !self.shape.inner().is_empty() || !self.is_semistandard() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// `content[i-1]` = number of entries equal to `i`.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        Composition::new(c)
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    fn flat(&self) -> impl Iterator<Item = &usize> {
        self.rows.iter().flatten()
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)?;
        if !self.shape.inner().is_empty() {
            write!(f, " / ({})", self.shape.inner())?;
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            rows: &'a [Vec<usize>],
            #[serde(skip_serializing_if = "Partition::is_empty")]
            inner: &'a Partition,
        }
        Wire {
            rows: &self.rows,
            inner: self.shape.inner(),
        }
        .serialize(s)
    }
}

/// See [`Tableau::reading_word`].
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.reading_word()
}

/// Every prefix holds at least as many `i`s as `(i+1)`s, for every `i`.
pub fn is_ballot(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &a in word {
        if a == 0 {
            return false;
        }
        if counts.len() < a {
            counts.resize(a, 0);
        }
        counts[a - 1] += 1;
        if a > 1 && counts[a - 1] > counts[a - 2] {
            return false;
        }
    }
    true
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `f^λ = n! / ∏ h(i,j)`.
pub fn count_syt_hlf(p: &Partition) -> BigUint {
    let hooks = p
        .hook_lengths()
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(p.size()) / hooks
}

fn check_cap(count: &BigUint, cap: usize, what: &str) -> Result<()> {
    if count.to_usize().is_none_or(|c| c > cap) {
        return capacity(format!(
            "{what} would produce {count} tableaux, above the cap {cap}; raise the tableau cap"
        ));
    }
    Ok(())
}

fn sort_by_filling(tableaux: &mut [Tableau]) {
    tableaux.sort_by(|a, b| a.flat().cmp(b.flat()));
}

/// All standard Young tableaux of shape `p`, ordered lexicographically by
/// their row-major filling.
pub fn enumerate_syt(p: &Partition, cap: usize) -> Result<Vec<Tableau>> {
    check_cap(&count_syt_hlf(p), cap, &format!("SYT({p})"))?;
    let n = p.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); p.len()];
    let mut out = Vec::new();
    place_next(p, 1, n, &mut rows, &mut out);
    sort_by_filling(&mut out);
    Ok(out)
}

fn place_next(
    p: &Partition,
    k: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if k > n {
        out.push(Tableau {
            shape: SkewShape::straight(p.clone()),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..p.len() {
        let len = rows[i].len();
        if len < p.parts()[i] && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(k);
            place_next(p, k + 1, n, rows, out);
            rows[i].pop();
        }
    }
}

/// Number of semistandard fillings of `shape` with the given content,
/// peeling off the largest letter as a horizontal strip.
pub fn count_ssyt(shape: &SkewShape, content: &Composition) -> Result<BigUint> {
    if shape.size() != content.size() {
        return domain(format!(
            "shape {shape} has {} cells but content [{content}] sums to {}",
            shape.size(),
            content.size()
        ));
    }
    let mut memo = HashMap::new();
    Ok(count_strips(
        shape.outer().parts(),
        shape.inner(),
        content.parts(),
        &mut memo,
    ))
}

fn count_strips(
    outer: &[usize],
    inner: &Partition,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    let Some((&last, rest)) = content.split_last() else {
        let equal = outer.len() == inner.len() && outer == inner.parts();
        return if equal {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    let key = (outer.to_vec(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for nu in horizontal_strip_removals(outer, inner, last) {
        total += count_strips(&nu, inner, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// All `ν` with `inner ⊆ ν ⊆ outer` such that `outer/ν` is a horizontal
/// strip of exactly `size` cells. Trailing zeros are trimmed.
pub(crate) fn horizontal_strip_removals(
    outer: &[usize],
    inner: &Partition,
    size: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(outer.len());
    strip_rows(outer, inner, 0, size, &mut nu, &mut out);
    out
}

fn strip_rows(
    outer: &[usize],
    inner: &Partition,
    i: usize,
    remaining: usize,
    nu: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == outer.len() {
        if remaining == 0 {
            let mut v = nu.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
        }
        return;
    }
    // interlacing: outer[i+1] ≤ ν_i ≤ outer[i]
    let lo = outer.get(i + 1).copied().unwrap_or(0).max(inner.part(i));
    let hi = outer[i];
    if lo > hi {
        return;
    }
    for v in (lo..=hi).rev() {
        let taken = hi - v;
        if taken > remaining {
            break;
        }
        nu.push(v);
        strip_rows(outer, inner, i + 1, remaining - taken, nu, out);
        nu.pop();
    }
}

/// All semistandard fillings of `shape` with `content[i-1]` copies of `i`,
/// ordered lexicographically by row-major filling.
pub fn enumerate_ssyt(
    shape: &SkewShape,
    content: &Composition,
    cap: usize,
) -> Result<Vec<Tableau>> {
    let count = count_ssyt(shape, content)?;
    check_cap(&count, cap, &format!("SSYT({shape}; [{content}])"))?;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.outer().len()];
    let mut remaining = content.parts().to_vec();
    let mut out = Vec::new();
    fill_row_major(shape, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill_row_major(
    shape: &SkewShape,
    row: usize,
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut [usize],
    out: &mut Vec<Tableau>,
) {
    let mut row = row;
    while row < rows.len() && rows[row].len() == shape.row_len(row) {
        row += 1;
    }
    if row == rows.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let col = shape.inner().part(row) + rows[row].len();
    let left = rows[row].last().copied().unwrap_or(1);
    let above =
        if row > 0 && col >= shape.inner().part(row - 1) && col < shape.outer().part(row - 1) {
            rows[row - 1][col - shape.inner().part(row - 1)] + 1
        } else {
            1
        };
    for v in left.max(above)..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[row].push(v);
        fill_row_major(shape, row, rows, remaining, out);
        rows[row].pop();
        remaining[v - 1] += 1;
    }
}

/// Littlewood-Richardson tableaux: semistandard fillings of `outer/inner`
/// with the given content whose reading word is a ballot sequence.
pub fn enumerate_lr_tableaux(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
) -> Result<Vec<Tableau>> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if shape.size() != content.size() {
        return domain(format!(
            "|{outer}| - |{inner}| = {} but content ({content}) has size {}",
            shape.size(),
            content.size()
        ));
    }
    let mut rows: Vec<Vec<usize>> = (0..outer.len())
        .map(|i| vec![0; shape.row_len(i)])
        .collect();
    let mut filler = LrFiller {
        shape: &shape,
        remaining: content.parts().to_vec(),
        counts: vec![0; content.len()],
        out: Vec::new(),
    };
    filler.fill(0, shape.row_len(0), &mut rows);
    let mut out = filler.out;
    sort_by_filling(&mut out);
    if cfg!(debug_assertions) {
        for t in &out {
            assert!(
                t.is_semistandard() && is_ballot(&t.reading_word()),
                "bad LR tableau {t:?}"
            );
        }
    }
    Ok(out)
}

struct LrFiller<'a> {
    shape: &'a SkewShape,
    remaining: Vec<usize>,
    counts: Vec<usize>,
    out: Vec<Tableau>,
}

impl LrFiller<'_> {
    /// Fills cells in reading order: rows top to bottom, right to left.
    /// `pos` is the number of cells of `row` still unfilled.
    fn fill(&mut self, row: usize, pos: usize, rows: &mut Vec<Vec<usize>>) {
        if row == rows.len() {
            self.out.push(Tableau {
                shape: self.shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        if pos == 0 {
            let next = row + 1;
            let len = if next < rows.len() {
                self.shape.row_len(next)
            } else {
                0
            };
            self.fill(next, len, rows);
            return;
        }
        let k = pos - 1;
        let col = self.shape.inner().part(row) + k;
        let right = rows[row].get(k + 1).copied().unwrap_or(usize::MAX);
        let above = if row > 0
            && col >= self.shape.inner().part(row - 1)
            && col < self.shape.outer().part(row - 1)
        {
            rows[row - 1][col - self.shape.inner().part(row - 1)] + 1
        } else {
            1
        };
        let top = right.min(self.remaining.len());
        for v in above..=top {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            if v > 1 && self.counts[v - 1] + 1 > self.counts[v - 2] {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.counts[v - 1] += 1;
            rows[row][k] = v;
            self.fill(row, k, rows);
            self.counts[v - 1] -= 1;
            self.remaining[v - 1] += 1;
        }
        rows[row][k] = 0;
    }
}

/// A permutation in one-line notation on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{word:?} is not a permutation of 1..{n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.word.len()];
        let mut transpositions = 0;
        for start in 0..self.word.len() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..word.len())
                .rev()
                .find(|&j| word[j] > word[i - 1])
                .unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.word)
    }
}

/// Schensted row insertion of `w_1, ..., w_n`; returns the insertion and
/// recording tableaux.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.word.iter().enumerate() {
        let mut x = value;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(pos) => {
                    std::mem::swap(&mut p[row][pos], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    let shape = SkewShape::straight(Partition::from_sorted(p.iter().map(Vec::len).collect()));
    (
        Tableau {
            shape: shape.clone(),
            rows: p,
        },
        Tableau { shape, rows: q },
    )
}

/// Inverse of [`rsk`]: reverse-bumps the cell holding the largest recording
/// entry at each step.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape != q.shape {
        return domain("insertion and recording tableaux have different shapes");
    }
    if !p.is_standard() || !q.is_standard() {
        return domain("rsk_inverse needs standard tableaux");
    }
    let n = p.size();
    let mut prows = p.rows.clone();
    let mut qrows = q.rows.clone();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let row = qrows
            .iter()
            .position(|r| r.last() == Some(&k))
            .ok_or_else(|| Error::Internal(format!("{k} is not at a corner of Q")))?;
        qrows[row].pop();
        let mut x = prows[row].pop().unwrap();
        for r in (0..row).rev() {
            let pos = prows[r].iter().rposition(|&y| y < x).unwrap();
            std::mem::swap(&mut prows[r][pos], &mut x);
        }
        word[k - 1] = x;
        if qrows.last().is_some_and(Vec::is_empty) {
            qrows.pop();
            prows.pop();
        }
    }
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn hook_length_formula() {
        assert_eq!(count_syt_hlf(&p("2,2,1")), BigUint::from(5u32));
        assert_eq!(count_syt_hlf(&p("7")), BigUint::from(1u32));
        assert_eq!(count_syt_hlf(&p("3,2")), BigUint::from(5u32));
    }

    #[test]
    fn syt_listing_matches_hand_list() {
        let tabs = enumerate_syt(&p("2,2,1"), DEFAULT_TABLEAU_CAP).unwrap();
        let rows: Vec<_> = tabs.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1, 2], vec![3, 4], vec![5]],
                vec![vec![1, 2], vec![3, 5], vec![4]],
                vec![vec![1, 3], vec![2, 4], vec![5]],
                vec![vec![1, 3], vec![2, 5], vec![4]],
                vec![vec![1, 4], vec![2, 5], vec![3]],
            ]
        );
        assert_eq!(enumerate_syt(&p("1,1,1"), 10).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&p("2,2"), 10).unwrap().len(), 2);
        assert!(matches!(
            enumerate_syt(&p("3,2"), 4),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn ssyt_examples() {
        let shape = SkewShape::straight(p("3,3,1"));
        let tabs = enumerate_ssyt(&shape, &c("2,2,2,1"), 100).unwrap();
        assert_eq!(tabs.len(), 3);
        assert!(tabs
            .iter()
            .all(|t| t.is_semistandard() && t.content() == c("2,2,2,1")));
        assert_eq!(
            enumerate_ssyt(&SkewShape::straight(p("4")), &c("4"), 10)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_ssyt(&SkewShape::straight(p("2,1")), &c("1,1,1"), 10)
                .unwrap()
                .len(),
            2
        );
        assert!(matches!(
            enumerate_ssyt(&SkewShape::straight(p("2,1")), &c("1,1"), 10),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ssyt_with_zero_content_entries() {
        let shape = SkewShape::straight(p("2,1"));
        let tabs = enumerate_ssyt(&shape, &c("1,0,1,1"), 10).unwrap();
        assert_eq!(tabs.len(), 2);
        assert_eq!(
            count_ssyt(&shape, &c("1,0,1,1")).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn empty_shape_has_one_filling() {
        let shape = SkewShape::straight(Partition::empty());
        assert_eq!(enumerate_ssyt(&shape, &c(""), 10).unwrap().len(), 1);
        let skew = SkewShape::new(p("2,1"), p("2,1")).unwrap();
        assert_eq!(count_ssyt(&skew, &c("")).unwrap(), BigUint::one());
    }

    #[test]
    fn rsk_trace() {
        let w = Permutation::new(vec![4, 1, 2, 3]).unwrap();
        let (pt, qt) = rsk(&w);
        assert_eq!(pt.rows(), &[vec![1, 2, 3], vec![4]]);
        assert_eq!(qt.rows(), &[vec![1, 3, 4], vec![2]]);
        assert_eq!(rsk_inverse(&pt, &qt).unwrap(), w);

        let id = Permutation::identity(5);
        let (pt, qt) = rsk(&id);
        assert_eq!(pt.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(qt.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(rsk_inverse(&pt, &qt).unwrap(), id);
    }

    #[test]
    fn rsk_inverse_rejects_bad_input() {
        let a = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        let b = Tableau::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(rsk_inverse(&a, &b), Err(Error::Domain(_))));
        let bad = Tableau::from_rows(vec![vec![2, 1], vec![3]]).unwrap();
        assert!(matches!(rsk_inverse(&bad, &a), Err(Error::Domain(_))));
    }

    #[test]
    fn square_shape_pairs() {
        let tabs = enumerate_syt(&p("2,2"), 10).unwrap();
        let mut words = Vec::new();
        for a in &tabs {
            for b in &tabs {
                words.push(rsk_inverse(a, b).unwrap());
            }
        }
        words.sort();
        words.dedup();
        assert_eq!(words.len(), 4);
    }

    #[test]
    fn reading_words_and_ballot() {
        let shape = SkewShape::new(p("5,4,2"), p("2,1")).unwrap();
        let t = Tableau::new(shape, vec![vec![1, 1, 2], vec![2, 3, 3], vec![1, 4]]).unwrap();
        assert_eq!(t.reading_word(), vec![2, 1, 1, 3, 3, 2, 4, 1]);
        assert!(!is_ballot(&t.reading_word()));
        assert!(is_ballot(&[1, 1, 1, 2, 2, 1, 3, 3, 2]));
        assert!(is_ballot(&[]));
        let row = Tableau::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(row.reading_word(), vec![3, 2, 1]);
        let col = Tableau::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(col.reading_word(), vec![1, 2, 3]);
    }

    #[test]
    fn lr_examples() {
        let tabs = enumerate_lr_tableaux(&p("6,4,3"), &p("3,1"), &p("4,3,2")).unwrap();
        let words: Vec<_> = tabs.iter().map(Tableau::reading_word).collect();
        assert_eq!(
            words,
            vec![
                vec![1, 1, 1, 2, 2, 1, 3, 3, 2],
                vec![1, 1, 1, 2, 2, 2, 3, 3, 1]
            ]
        );
        assert_eq!(
            enumerate_lr_tableaux(&p("5"), &p(""), &p("5"))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_lr_tableaux(&p("2,1"), &p("1"), &p("1,1"))
                .unwrap()
                .len(),
            1
        );
        assert!(matches!(
            enumerate_lr_tableaux(&p("2,1"), &p("3"), &p("")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            enumerate_lr_tableaux(&p("2,1"), &p("1"), &p("1")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn permutations_and_signs() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().map(Permutation::sign).sum::<i64>(), 0);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().sign(), -1);
        assert!(Permutation::new(vec![1, 1]).is_err());
    }
}

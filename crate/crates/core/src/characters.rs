//! Irreducible characters of the symmetric group.
//!
//! `character_mn` is the Murnaghan-Nakayama rule on beta-sets: removing a
//! border strip of length `k` moves one bead from `b` to `b - k`, with sign
//! given by the parity of the beads jumped over. `character_jt` is the
//! alternating sum of ordered set partition counts obtained by expanding the
//! Jacobi-Trudi determinant against `p_α`. The two share nothing but the
//! input types.
//!
//! Full tables are persisted one file per `n`, validated on load, and
//! recomputed when validation fails.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{capacity, domain, Error, Result};
use crate::partition::{partitions_of, Composition, Partition};
use crate::symfunc::{ordered_set_partition_count, Basis, SymFunc};
use crate::tableau::count_syt_hlf;

/// Default bound on `n` for full character tables.
pub const DEFAULT_TABLE_MAX_N: usize = 18;

/// Largest `ℓ(λ)` accepted by [`character_jt`]; its determinant has `ℓ(λ)!`
/// terms.
pub const JT_MAX_LENGTH: usize = 9;

const CACHE_VERSION: u32 = 1;

fn check_sizes(lambda: &Partition, alpha: &Composition) -> Result<()> {
    if lambda.size() != alpha.size() {
        return domain(format!(
            "χ^({lambda}) needs a class of size {}, got [{alpha}]",
            lambda.size()
        ));
    }
    Ok(())
}

/// Cycle type with zeros dropped, largest part first.
fn class_parts(alpha: &Composition) -> Vec<usize> {
    alpha.to_partition().into_parts()
}

/// `χ^λ(α)` by border-strip removal.
pub fn character_mn(lambda: &Partition, alpha: &Composition) -> Result<i128> {
    check_sizes(lambda, alpha)?;
    let mut memo = HashMap::new();
    Ok(mn(lambda.parts(), &class_parts(alpha), &mut memo))
}

/// The memo is keyed by shape alone: with positive parts, the size of the
/// remaining shape determines which suffix of `alpha` is left.
fn mn(shape: &[usize], alpha: &[usize], memo: &mut HashMap<Vec<usize>, i128>) -> i128 {
    let Some((&k, rest)) = alpha.split_first() else {
        return i128::from(shape.is_empty());
    };
    if let Some(&v) = memo.get(shape) {
        return v;
    }
    let len = shape.len();
    let betas: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i128;
    for i in 0..len {
        if betas[i] < k {
            continue;
        }
        let target = betas[i] - k;
        if betas.contains(&target) {
            continue;
        }
        let jumped = betas[i + 1..].iter().filter(|&&b| b > target).count();
        let mut moved = betas.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let mut next: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .collect();
        while next.last() == Some(&0) {
            next.pop();
        }
        let v = mn(&next, rest, memo);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    memo.insert(shape.to_vec(), total);
    total
}

/// `χ^λ(α) = Σ_{σ ∈ S_ℓ} sgn(σ) P(α, (λ_i + σ(i) - i)_i)`, with targets that
/// have a negative entry contributing zero.
pub fn character_jt(lambda: &Partition, alpha: &Composition) -> Result<i128> {
    check_sizes(lambda, alpha)?;
    if lambda.len() > JT_MAX_LENGTH {
        return capacity(format!(
            "character_jt expands ℓ(λ)! = {}! terms; ℓ(λ) ≤ {JT_MAX_LENGTH} is supported, use character_mn",
            lambda.len()
        ));
    }
    let items = Composition::new(class_parts(alpha));
    let len = lambda.len();
    let mut used = vec![false; len];
    let mut target = Vec::with_capacity(len);
    let mut memo: HashMap<Vec<usize>, BigInt> = HashMap::new();
    let total = jt_expand(lambda, &items, 0, &mut used, &mut target, true, &mut memo);
    total
        .to_i128()
        .ok_or_else(|| Error::Internal(format!("χ^({lambda})([{alpha}]) overflows i128")))
}

fn jt_expand(
    lambda: &Partition,
    items: &Composition,
    row: usize,
    used: &mut [bool],
    target: &mut Vec<usize>,
    even: bool,
    memo: &mut HashMap<Vec<usize>, BigInt>,
) -> BigInt {
    let len = used.len();
    if row == len {
        let mut key = target.clone();
        key.sort_unstable();
        let count = memo
            .entry(key)
            .or_insert_with(|| {
                BigInt::from(ordered_set_partition_count(
                    items,
                    &Composition::new(target.clone()),
                ))
            })
            .clone();
        return if even { count } else { -count };
    }
    let mut total = BigInt::zero();
    for col in 0..len {
        if used[col] {
            continue;
        }
        // entry λ_i + σ(i) - i with 0-based i, col
        let entry = lambda.part(row) as i64 + col as i64 - row as i64;
        if entry < 0 {
            continue;
        }
        let inversions = (0..col).filter(|&c| !used[c]).count();
        used[col] = true;
        target.push(entry as usize);
        total += jt_expand(
            lambda,
            items,
            row + 1,
            used,
            target,
            even == (inversions % 2 == 0),
            memo,
        );
        target.pop();
        used[col] = false;
    }
    total
}

/// `p_α = Σ_λ χ^λ(α) s_λ`.
pub fn power_sum_to_schur(alpha: &Partition) -> SymFunc {
    powersum_to_schur(&SymFunc::element(Basis::PowerSum, alpha)).expect("power sums convert")
}

/// Schur expansion of any symmetric function, computed from its power-sum
/// expansion with Murnaghan-Nakayama characters.
pub fn powersum_to_schur(f: &SymFunc) -> Result<SymFunc> {
    let f = f.to_basis(Basis::PowerSum);
    let n = f.degree();
    let shapes = partitions_of(n);
    let columns: Vec<(BigRational, Vec<i128>)> = f
        .terms()
        .map(|(alpha, c)| {
            let mut memo = HashMap::new();
            let column = shapes
                .iter()
                .map(|l| mn(l.parts(), alpha.parts(), &mut memo))
                .collect();
            (c.clone(), column)
        })
        .collect();
    let terms = shapes.iter().enumerate().map(|(i, lambda)| {
        let coeff: BigRational = columns
            .iter()
            .map(|(c, column)| c * BigRational::from_integer(BigInt::from(column[i])))
            .sum();
        (lambda.clone(), coeff)
    });
    SymFunc::from_terms(Basis::Schur, n, terms)
}

/// The full table `χ^λ(α)` for `λ, α ⊢ n`, both indexed in descending lex
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    version: u32,
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i128>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> CharacterTable {
        let partitions = partitions_of(n);
        let columns: Vec<Vec<i128>> = partitions
            .par_iter()
            .map(|alpha| {
                let mut memo = HashMap::new();
                partitions
                    .iter()
                    .map(|l| mn(l.parts(), alpha.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let values = (0..partitions.len())
            .map(|i| columns.iter().map(|col| col[i]).collect())
            .collect();
        Self::assemble(n, partitions, values)
    }

    fn assemble(n: usize, partitions: Vec<Partition>, values: Vec<Vec<i128>>) -> CharacterTable {
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        CharacterTable {
            version: CACHE_VERSION,
            n,
            partitions,
            values,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[Vec<i128>] {
        &self.values
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(α)`.
    pub fn value(&self, lambda: &Partition, alpha: &Partition) -> Result<i128> {
        match (self.index_of(lambda), self.index_of(alpha)) {
            (Some(i), Some(j)) => Ok(self.values[i][j]),
            _ => domain(format!(
                "({lambda}) and ({alpha}) must both be partitions of {}",
                self.n
            )),
        }
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i128]> {
        self.index_of(lambda).map(|i| self.values[i].as_slice())
    }

    /// Compact JSON, the exact bytes written to the cache.
    pub fn to_json(&self) -> Vec<u8> {
        serde_json::to_vec(self).expect("tables serialize")
    }

    /// Parses and validates a persisted table.
    pub fn from_json(bytes: &[u8], n: usize) -> Result<CharacterTable> {
        let raw: CharacterTable = serde_json::from_slice(bytes)
            .map_err(|e| Error::Integrity(format!("unreadable table for n={n}: {e}")))?;
        let table = Self::assemble(raw.n, raw.partitions, raw.values);
        if raw.version != CACHE_VERSION {
            return Err(Error::Integrity(format!(
                "unsupported table version {}",
                raw.version
            )));
        }
        table.validate(n)?;
        Ok(table)
    }

    /// Structural and orthogonality checks: the trivial row is all ones, the
    /// last row is the sign, the identity column lists `f^λ`, columns satisfy `Σ_λ χ^λ(α)² = z_α`, and
    /// every nontrivial row is orthogonal to the trivial one.
    pub fn validate(&self, n: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::Integrity(format!("table n={n}: {msg}")));
        if self.n != n {
            return fail(format!("header says n={}", self.n));
        }
        if self.partitions != partitions_of(n) {
            return fail("partition list is not the descending lex list".into());
        }
        let size = self.partitions.len();
        if self.values.len() != size || self.values.iter().any(|r| r.len() != size) {
            return fail("values are not a square table".into());
        }
        if self.values[0].iter().any(|&v| v != 1) {
            return fail("row (n) is not all ones".into());
        }
        let sign_row = &self.values[size - 1];
        if self
            .partitions
            .iter()
            .zip(sign_row)
            .any(|(alpha, &v)| v != i128::from(alpha.sign()))
        {
            return fail("row (1^n) is not the sign character".into());
        }
        let identity = size - 1;
        for (i, lambda) in self.partitions.iter().enumerate() {
            if BigInt::from(self.values[i][identity]) != BigInt::from(count_syt_hlf(lambda)) {
                return fail(format!("χ^({lambda})(1^n) is not f^λ"));
            }
        }
        let order: BigInt = (1..=n).map(BigInt::from).product();
        let weights: Vec<BigInt> = self
            .partitions
            .iter()
            .map(|alpha| &order / BigInt::from(alpha.z_value()))
            .collect();
        for (j, alpha) in self.partitions.iter().enumerate() {
            let squares: BigInt = self.values.iter().map(|r| BigInt::from(r[j]) * r[j]).sum();
            if squares != BigInt::from(alpha.z_value()) {
                return fail(format!("column ({alpha}) fails Σχ² = z"));
            }
        }
        for (i, lambda) in self.partitions.iter().enumerate() {
            let inner: BigInt = self.values[i]
                .iter()
                .zip(&weights)
                .map(|(&v, w)| w * v)
                .sum();
            let expected = if i == 0 {
                order.clone()
            } else {
                BigInt::zero()
            };
            if inner != expected {
                return fail(format!(
                    "row ({lambda}) is not orthogonal to the trivial row"
                ));
            }
        }
        Ok(())
    }
}

/// On-disk status of one cached table.
#[derive(Clone, Debug, Serialize)]
pub struct CacheEntry {
    pub n: usize,
    pub path: PathBuf,
    pub bytes: u64,
    pub valid: bool,
}

/// Character tables keyed by `n`: an in-memory layer over an optional cache
/// directory. Readers share tables; writes replace whole files atomically.
pub struct TableStore {
    dir: Option<PathBuf>,
    max_n: usize,
    memo: RwLock<HashMap<usize, Arc<CharacterTable>>>,
    recoveries: RwLock<Vec<usize>>,
}

impl TableStore {
    pub fn new(dir: Option<PathBuf>, max_n: usize) -> Self {
        TableStore {
            dir,
            max_n,
            memo: RwLock::default(),
            recoveries: RwLock::default(),
        }
    }

    pub fn in_memory(max_n: usize) -> Self {
        Self::new(None, max_n)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn file_name(n: usize) -> String {
        format!("chartable-v{CACHE_VERSION}-n{n}.json")
    }

    pub fn path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(Self::file_name(n)))
    }

    /// Sizes `n` whose cached file failed validation and was recomputed.
    pub fn recoveries(&self) -> Vec<usize> {
        self.recoveries.read().unwrap().clone()
    }

    pub fn get(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if n > self.max_n {
            return capacity(format!(
                "a character table for n={n} exceeds the bound {}; raise it with --max-n",
                self.max_n
            ));
        }
        if let Some(t) = self.memo.read().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let table = match self.load(n) {
            Ok(Some(t)) => t,
            Ok(None) => {
                let t = CharacterTable::compute(n);
                self.store(&t);
                t
            }
            Err(Error::Integrity(_)) => {
                self.recoveries.write().unwrap().push(n);
                let t = CharacterTable::compute(n);
                self.store(&t);
                t
            }
            Err(e) => return Err(e),
        };
        let table = Arc::new(table);
        Ok(self.memo.write().unwrap().entry(n).or_insert(table).clone())
    }

    /// Reads and validates the cached file, `None` when absent.
    pub fn load(&self, n: usize) -> Result<Option<CharacterTable>> {
        let Some(path) = self.path(n) else {
            return Ok(None);
        };
        match fs::read(&path) {
            Ok(bytes) => CharacterTable::from_json(&bytes, n).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn store(&self, table: &CharacterTable) {
        // a read-only or missing cache directory only costs recomputation
        let _ = self.write_atomic(table);
    }

    /// Writes via a temporary file in the cache directory and renames it
    /// over the target.
    pub fn write_atomic(&self, table: &CharacterTable) -> Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(table.n)) else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(&table.to_json())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    pub fn status(&self) -> Result<Vec<CacheEntry>> {
        let Some(dir) = self.dir.as_ref() else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        let entries = match fs::read_dir(dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e.into()),
        };
        for entry in entries {
            let entry = entry?;
            let name = entry.file_name().to_string_lossy().into_owned();
            let Some(n) = name
                .strip_prefix(&format!("chartable-v{CACHE_VERSION}-n"))
                .and_then(|s| s.strip_suffix(".json"))
                .and_then(|s| s.parse::<usize>().ok())
            else {
                continue;
            };
            let bytes = entry.metadata()?.len();
            let valid = fs::read(entry.path())
                .map(|b| CharacterTable::from_json(&b, n).is_ok())
                .unwrap_or(false);
            out.push(CacheEntry {
                n,
                path: entry.path(),
                bytes,
                valid,
            });
        }
        out.sort_by_key(|e| e.n);
        Ok(out)
    }

    /// Deletes every cached table file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let removed = self.status()?;
        for entry in &removed {
            fs::remove_file(&entry.path)?;
        }
        self.memo.write().unwrap().clear();
        Ok(removed.len())
    }
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
    fn murnaghan_nakayama_examples() {
        assert_eq!(character_mn(&p("5"), &c("3,2")).unwrap(), 1);
        assert_eq!(character_mn(&p("2,1"), &c("3")).unwrap(), -1);
        assert_eq!(character_mn(&p("2,1"), &c("1,1,1")).unwrap(), 2);
        assert!(matches!(
            character_mn(&p("2,1"), &c("2")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(character_jt(&p("2,1"), &c("3")).unwrap(), -1);
        assert_eq!(character_jt(&p("4"), &c("4")).unwrap(), 1);
        assert_eq!(character_jt(&p("2,2"), &c("2,1,1")).unwrap(), 0);
        assert_eq!(character_mn(&p("2,2"), &c("2,1,1")).unwrap(), 0);
        assert!(matches!(
            character_jt(&p("1^10"), &c("1^10")),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn small_tables() {
        let t = CharacterTable::compute(3);
        // columns in descending lex order: (3), (2,1), (1,1,1)
        assert_eq!(t.values(), &[vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
        assert_eq!(CharacterTable::compute(1).values(), &[vec![1]]);
        let t8 = CharacterTable::compute(8);
        let col = t8.index_of(&p("8")).unwrap();
        assert_eq!(t8.values().iter().map(|r| r[col] * r[col]).sum::<i128>(), 8);
        t8.validate(8).unwrap();
    }

    #[test]
    fn power_sum_expansions() {
        let terms = |f: SymFunc| {
            f.terms()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect::<Vec<_>>()
        };
        assert_eq!(
            terms(power_sum_to_schur(&p("1,1"))),
            vec![("2".into(), "1".into()), ("1,1".into(), "1".into())]
        );
        assert_eq!(
            terms(power_sum_to_schur(&p("2"))),
            vec![("2".into(), "1".into()), ("1,1".into(), "-1".into())]
        );
        let p5 = power_sum_to_schur(&p("5"));
        assert_eq!(p5.len(), 5);
        for k in 0..5 {
            let mut parts = vec![5 - k];
            parts.extend(std::iter::repeat_n(1, k));
            let expected = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                p5.coeff(&Partition::new(parts).unwrap()),
                BigRational::from_integer(expected.into())
            );
        }
    }

    #[test]
    fn cache_round_trip_and_recovery() {
        let dir = tempfile::tempdir().unwrap();
        let store = TableStore::new(Some(dir.path().to_path_buf()), 18);
        let t = store.get(5).unwrap();
        let path = store.path(5).unwrap();
        let bytes = fs::read(&path).unwrap();
        assert_eq!(bytes, t.to_json());

        let mut corrupted = String::from_utf8(bytes.clone()).unwrap();
        corrupted = corrupted.replacen("[1,1,1,1,1,1,1]", "[1,1,1,1,1,1,2]", 1);
        fs::write(&path, corrupted).unwrap();
        let fresh = TableStore::new(Some(dir.path().to_path_buf()), 18);
        assert_eq!(*fresh.get(5).unwrap(), *t);
        assert_eq!(fresh.recoveries(), vec![5]);
        assert_eq!(fs::read(&path).unwrap(), bytes);
        assert!(matches!(fresh.get(19), Err(Error::Capacity(_))));
    }
}

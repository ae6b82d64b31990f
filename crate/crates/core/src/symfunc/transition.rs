//! Transition matrices between each basis and the monomial basis, cached per
//! `(basis, degree)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::counts::{contingency01_count, contingency_count, ordered_set_partition_count};
use super::Basis;
use crate::partition::{partitions_of, Composition, Partition, SkewShape};
use crate::tableau::count_ssyt;

type SparseRow = Vec<(usize, BigRational)>;

pub(crate) struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `λ`: the monomial expansion of the basis element indexed by `λ`.
    pub to_m: Vec<SparseRow>,
    /// Row `μ`: the expansion of `m_μ` in this basis.
    pub from_m: Vec<SparseRow>,
}

pub(crate) fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, usize), Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let built = Arc::new(build(basis, n));
    cache
        .lock()
        .unwrap()
        .entry((basis, n))
        .or_insert(built)
        .clone()
}

fn ratio(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn build(basis: Basis, n: usize) -> Transition {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let size = parts.len();
    let entry = |lambda: &Partition, mu: &Partition| -> BigUint {
        let (l, m) = (Composition::from(lambda), Composition::from(mu));
        match basis {
            Basis::Monomial => {
                if lambda == mu {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
            Basis::Homogeneous => contingency_count(&l, &m).unwrap(),
            Basis::Elementary => contingency01_count(&l, &m).unwrap(),
            Basis::PowerSum => ordered_set_partition_count(&l, &m),
            Basis::Schur => {
                if lambda.dominates(mu).unwrap() {
                    count_ssyt(&SkewShape::straight(lambda.clone()), &m).unwrap()
                } else {
                    BigUint::zero()
                }
            }
        }
    };
    let dense: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|l| parts.iter().map(|m| ratio(entry(l, m))).collect())
        .collect();
    let inverse = match basis {
        Basis::Monomial => dense.clone(),
        // upper unitriangular: λ ⊵ μ implies λ precedes μ in descending lex order
        Basis::Schur => invert_upper_unitriangular(&dense),
        _ => invert(dense.clone()),
    };
    debug_assert_eq!(inverse.len(), size);
    Transition {
        parts,
        index,
        to_m: sparsify(dense),
        from_m: sparsify(inverse),
    }
}

fn sparsify(m: Vec<Vec<BigRational>>) -> Vec<SparseRow> {
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect()
}

fn invert_upper_unitriangular(u: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let size = u.len();
    let mut x = vec![vec![BigRational::zero(); size]; size];
    for i in 0..size {
        x[i][i] = BigRational::one();
        for j in i + 1..size {
            let mut acc = BigRational::zero();
            for k in i..j {
                if !x[i][k].is_zero() && !u[k][j].is_zero() {
                    acc += &x[i][k] * &u[k][j];
                }
            }
            x[i][j] = -acc;
        }
    }
    x
}

/// Gauss-Jordan inversion over the rationals. The transition matrices are
/// invertible, so a missing pivot is a bug.
fn invert(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let size = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is singular");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..size {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..size {
                if !a[col][j].is_zero() {
                    let t = &factor * &a[col][j];
                    a[r][j] -= t;
                }
                if !inv[col][j].is_zero() {
                    let t = &factor * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

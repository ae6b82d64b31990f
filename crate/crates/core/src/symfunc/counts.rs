//! Counting functions behind the transitions into the monomial basis.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::partition::Composition;

fn check_margins(rows: &Composition, cols: &Composition) -> Result<()> {
    if rows.size() != cols.size() {
        return domain(format!(
            "row sums [{rows}] and column sums [{cols}] have different totals"
        ));
    }
    Ok(())
}

/// Number of nonnegative integer matrices with row sums `rows` and column
/// sums `cols`. This is the coefficient of `m_cols` in `h_rows`.
pub fn contingency_count(rows: &Composition, cols: &Composition) -> Result<BigUint> {
    check_margins(rows, cols)?;
    let mut memo = HashMap::new();
    Ok(fill_rows(
        rows.parts(),
        cols.parts().to_vec(),
        false,
        &mut memo,
    ))
}

/// Number of 0-1 matrices with the given margins: the coefficient of
/// `m_cols` in `e_rows`.
pub fn contingency01_count(rows: &Composition, cols: &Composition) -> Result<BigUint> {
    check_margins(rows, cols)?;
    let mut memo = HashMap::new();
    Ok(fill_rows(
        rows.parts(),
        cols.parts().to_vec(),
        true,
        &mut memo,
    ))
}

fn fill_rows(
    rows: &[usize],
    mut cols: Vec<usize>,
    binary: bool,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) -> BigUint {
    let Some((&first, rest)) = rows.split_first() else {
        return if cols.iter().all(|&c| c == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    // the count is symmetric in the column order
    cols.sort_unstable();
    let key = (rows.len(), cols.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    distribute(first, 0, &mut cols, binary, &mut |cols| {
        total += fill_rows(rest, cols.to_vec(), binary, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Visits every way of writing `amount` as a row bounded entrywise by the
/// remaining column sums (by 1 as well when `binary`).
fn distribute(
    amount: usize,
    j: usize,
    cols: &mut Vec<usize>,
    binary: bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    if j == cols.len() {
        if amount == 0 {
            visit(cols);
        }
        return;
    }
    let capacity: usize = cols[j..]
        .iter()
        .map(|&c| if binary { c.min(1) } else { c })
        .sum();
    if capacity < amount {
        return;
    }
    let max = if binary { cols[j].min(1) } else { cols[j] }.min(amount);
    for v in 0..=max {
        cols[j] -= v;
        distribute(amount - v, j + 1, cols, binary, visit);
        cols[j] += v;
    }
}

/// `P(a, b)`: ordered tuples `(B_1, ..., B_k)` partitioning the indices of
/// `items` with `Σ_{i ∈ B_j} a_i = b_j`. Zero when the totals differ.
pub fn ordered_set_partition_count(items: &Composition, bins: &Composition) -> BigUint {
    if items.size() != bins.size() {
        return BigUint::zero();
    }
    let mut sorted_items: Vec<usize> = items.parts().to_vec();
    sorted_items.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo = HashMap::new();
    assign_items(&sorted_items, bins.parts().to_vec(), &mut memo)
}

fn assign_items(
    items: &[usize],
    mut bins: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) -> BigUint {
    let Some((&first, rest)) = items.split_first() else {
        return if bins.iter().all(|&b| b == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    bins.sort_unstable();
    let key = (items.len(), bins.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for j in 0..bins.len() {
        if bins[j] >= first {
            bins[j] -= first;
            total += assign_items(rest, bins.clone(), memo);
            bins[j] += first;
        }
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn n(v: u32) -> BigUint {
        BigUint::from(v)
    }

    /// Enumerates all matrices with entries in `0..=max` and the given margins.
    fn brute_force(rows: &[usize], cols: &[usize], max: usize) -> u32 {
        let cells = rows.len() * cols.len();
        let mut count = 0;
        let mut m = vec![0usize; cells];
        loop {
            let row_ok = (0..rows.len()).all(|i| {
                m[i * cols.len()..(i + 1) * cols.len()]
                    .iter()
                    .sum::<usize>()
                    == rows[i]
            });
            let col_ok = (0..cols.len()).all(|j| {
                (0..rows.len())
                    .map(|i| m[i * cols.len() + j])
                    .sum::<usize>()
                    == cols[j]
            });
            if row_ok && col_ok {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == cells {
                    return count;
                }
                m[k] += 1;
                if m[k] <= max {
                    break;
                }
                m[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn contingency_examples() {
        assert_eq!(contingency_count(&c("2,1"), &c("2,1")).unwrap(), n(2));
        assert_eq!(contingency_count(&c("5"), &c("5")).unwrap(), n(1));
        assert_eq!(contingency_count(&c("1,1"), &c("1,1")).unwrap(), n(2));
        assert!(contingency_count(&c("2"), &c("1")).is_err());
    }

    #[test]
    fn contingency01_examples() {
        assert_eq!(contingency01_count(&c("2,1"), &c("1,1,1")).unwrap(), n(3));
        assert_eq!(contingency01_count(&c("2,1"), &c("2,1")).unwrap(), n(1));
        assert_eq!(contingency01_count(&c("4"), &c("1,1,1,1")).unwrap(), n(1));
        assert!(contingency01_count(&c("2"), &c("1")).is_err());
    }

    #[test]
    fn contingency_matches_brute_force() {
        let cases = [
            ("3,2,1", "2,2,2"),
            ("2,2", "1,1,1,1"),
            ("3,1", "2,1,1"),
            ("2,0,2", "1,3"),
        ];
        for (r, col) in cases {
            let (r, col) = (c(r), c(col));
            let max = r.parts().iter().copied().max().unwrap_or(0);
            assert_eq!(
                contingency_count(&r, &col).unwrap(),
                n(brute_force(r.parts(), col.parts(), max)),
                "{r:?} {col:?}"
            );
            assert_eq!(
                contingency01_count(&r, &col).unwrap(),
                n(brute_force(r.parts(), col.parts(), 1)),
                "{r:?} {col:?}"
            );
        }
    }

    #[test]
    fn ordered_set_partition_examples() {
        assert_eq!(ordered_set_partition_count(&c("3"), &c("2,1")), n(0));
        assert_eq!(ordered_set_partition_count(&c("3"), &c("3,0")), n(1));
        assert_eq!(ordered_set_partition_count(&c("1,1"), &c("1,1")), n(2));
        // p_{1,1,1} = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
        assert_eq!(ordered_set_partition_count(&c("1,1,1"), &c("2,1")), n(3));
        assert_eq!(ordered_set_partition_count(&c("1,1,1"), &c("1,1,1")), n(6));
        assert_eq!(ordered_set_partition_count(&c("2,1"), &c("2")), n(0));
    }
}

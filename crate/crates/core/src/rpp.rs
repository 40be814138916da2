//! Reverse plane partitions: fillings weakly decreasing along rows and down columns
//! with entries in `0..=k`.

use std::collections::HashMap;

use crate::invdream::id_set;
use crate::invwords::Involution;
use crate::partition::{Partition, StrictPartition};
use crate::symgroup::{Cell, Diagram, Permutation};
use crate::Result;

/// Shapes with at most this many cells are counted by direct filling.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Reverse plane partitions of `D_lambda`, or of `SD_lambda` when `shifted` (then `lambda` must be strict).
pub fn rpp_count(parts: &[usize], k: usize, shifted: bool) -> Result<u128> {
    let shape = if shifted {
        StrictPartition::new(parts.to_vec())?.shifted()
    } else {
        Partition::new(parts.to_vec())?.ferrers()
    };
    Ok(rpp_count_diagram(&shape, k))
}

pub fn rpp_count_diagram(d: &Diagram, k: usize) -> u128 {
    if d.len() <= BRUTE_FORCE_LIMIT {
        rpp_brute_force(d, k)
    } else {
        rpp_transfer(d, k)
    }
}

/// Backtracking over cells in row-major order.
pub fn rpp_brute_force(d: &Diagram, k: usize) -> u128 {
    let cells: Vec<Cell> = d.iter().collect();
    let mut fill: HashMap<Cell, usize> = HashMap::new();
    fn go(cells: &[Cell], k: usize, fill: &mut HashMap<Cell, usize>) -> u128 {
        let Some((&c, rest)) = cells.split_first() else {
            return 1;
        };
        // cells above and to the left are already filled
        let mut hi = k;
        if let Some(&v) = fill.get(&Cell::new(c.row.wrapping_sub(1), c.col)) {
            hi = hi.min(v);
        }
        if let Some(&v) = fill.get(&Cell::new(c.row, c.col.wrapping_sub(1))) {
            hi = hi.min(v);
        }
        let mut total = 0;
        for v in 0..=hi {
            fill.insert(c, v);
            total += go(rest, k, fill);
        }
        fill.remove(&c);
        total
    }
    go(&cells, k, &mut fill)
}

/// Column-by-column transfer: the state is the filling of the current column.
pub fn rpp_transfer(d: &Diagram, k: usize) -> u128 {
    let Some(last) = d.iter().map(|c| c.col).max() else {
        return 1;
    };
    let mut states: HashMap<Vec<(usize, usize)>, u128> = HashMap::from([(vec![], 1)]);
    for col in 1..=last {
        let rows: Vec<usize> = d.iter().filter(|c| c.col == col).map(|c| c.row).collect();
        let mut next: HashMap<Vec<(usize, usize)>, u128> = HashMap::new();
        for (prev, count) in &states {
            let left: HashMap<usize, usize> = prev.iter().copied().collect();
            let mut column = Vec::with_capacity(rows.len());
            extend_column(&rows, &left, k, &mut column, &mut |c| {
                *next.entry(c.to_vec()).or_insert(0) += count;
            });
        }
        states = next;
    }
    states.values().sum()
}

fn extend_column(
    rows: &[usize],
    left: &HashMap<usize, usize>,
    k: usize,
    column: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let Some(&r) = rows.get(column.len()) else {
        emit(column);
        return;
    };
    let mut hi = left.get(&r).copied().unwrap_or(k);
    if let Some(&(above, v)) = column.last() {
        if above + 1 == r {
            hi = hi.min(v);
        }
    }
    for v in 0..=hi {
        column.push((r, v));
        extend_column(rows, left, k, column, emit);
        column.pop();
    }
}

/// `g_n = (1,n+1)(2,n+2)...(n,2n)`.
pub fn g(n: usize) -> Involution {
    let line = (1..=2 * n).map(|i| if i <= n { i + n } else { i - n }).collect();
    Involution::new(Permutation::new(line).expect("g_n is a permutation")).expect("g_n is an involution")
}

/// `(|ID(1^k x g_n)|, |RPP_(n,...,1)(k/2)|)`.
pub fn rpp_proposition(n: usize, k: usize) -> (u128, u128) {
    let dreams = id_set(&g(n).shifted_by(k)).len() as u128;
    let shape = Partition::staircase(n + 1).ferrers();
    (dreams, rpp_count_diagram(&shape, k / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_counts() {
        for k in 0..5 {
            assert_eq!(rpp_count(&[1], k, false).unwrap(), k as u128 + 1);
            assert_eq!(rpp_count(&[], k, false).unwrap(), 1);
        }
        assert_eq!(rpp_count(&[2, 1], 1, false).unwrap(), 5);
        // a single row or column of m cells holds C(m+k, k) fillings
        assert_eq!(rpp_count(&[4], 2, false).unwrap(), 15);
        assert_eq!(rpp_count(&[1, 1, 1, 1], 2, false).unwrap(), 15);
        // shifted (3,1) is a row of three with one cell under its middle
        assert_eq!(rpp_count(&[3, 1], 1, true).unwrap(), 6);
        assert!(rpp_count(&[2, 2], 1, true).is_err());
    }

    #[test]
    fn staircase_product_formula() {
        // |RPP_(n-1,...,1)(k)| = prod over i < j <= n of (i+j+2k-1)/(i+j-1)
        for n in 1..=5 {
            for k in 0..=3usize {
                let mut num = 1u128;
                let mut den = 1u128;
                for i in 1..=n {
                    for j in i + 1..=n {
                        num *= (i + j + 2 * k - 1) as u128;
                        den *= (i + j - 1) as u128;
                    }
                }
                let shape = Partition::staircase(n).ferrers();
                assert_eq!(rpp_transfer(&shape, k) * den, num, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn shifted_staircase_matches_conjectured_product() {
        // the product side of the staircase conjecture counts shifted fillings of (n-1, n-3, ...)
        for n in 1..=5usize {
            let parts: Vec<usize> = (0..).map(|t| n as isize - 1 - 2 * t).take_while(|&p| p > 0).map(|p| p as usize).collect();
            for k in 0..=3 {
                let count = rpp_count(&parts, k, true).unwrap();
                let product = crate::schubert::inv_staircase_product(n, k);
                assert!(product.is_integer());
                assert_eq!(product.to_integer(), count.into(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn transfer_agrees_past_the_limit() {
        let shape = Partition::new(vec![5, 4, 3, 1]).unwrap().ferrers();
        assert!(shape.len() > BRUTE_FORCE_LIMIT);
        assert_eq!(rpp_transfer(&shape, 2), rpp_brute_force(&shape, 2));
    }

    #[test]
    fn proposition_holds() {
        assert_eq!(g(2).perm().to_string(), "3412");
        for n in 1..=3 {
            for k in 0..=4 {
                let (a, b) = rpp_proposition(n, k);
                assert_eq!(a, b, "n = {n}, k = {k}");
            }
        }
    }

    fn strict_parts() -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::btree_set(1usize..6, 0..4).prop_map(|s| s.into_iter().rev().collect())
    }

    proptest! {
        #[test]
        fn both_counters_agree(parts in proptest::collection::vec(1usize..5, 0..4), k in 0usize..4, shifted in any::<bool>(), strict in strict_parts()) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let shape = if shifted {
                StrictPartition::new(strict).unwrap().shifted()
            } else {
                Partition::new(parts).unwrap().ferrers()
            };
            prop_assert_eq!(rpp_brute_force(&shape, k), rpp_transfer(&shape, k));
        }
    }
}

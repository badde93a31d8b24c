//! Kostant's partition function by bounded enumeration.

use crate::rootsys::{algebra_data, Algebra};
use crate::weightlat::Weight;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::OnceLock;

fn non_simple_roots(alg: Algebra) -> &'static [(i64, i64)] {
    static ROOTS: OnceLock<Vec<Vec<(i64, i64)>>> = OnceLock::new();
    let all = ROOTS.get_or_init(|| {
        Algebra::ALL
            .iter()
            .map(|&a| {
                algebra_data(a)
                    .positive_roots
                    .iter()
                    .filter_map(|r| r.to_ints())
                    .filter(|&(p, q)| p > 0 && q > 0)
                    .collect()
            })
            .collect()
    });
    &all[alg as usize]
}

/// Number of ways to write `xi` as a nonnegative integer combination of Φ+.
pub fn partition(alg: Algebra, xi: Weight) -> u64 {
    match xi.to_ints() {
        Some((a, b)) if a >= 0 && b >= 0 => count(non_simple_roots(alg), a, b),
        _ => 0,
    }
}

/// Enumerates multiplicities of each non-simple root; whatever is left over
/// is written uniquely in α1 and α2.
fn count(roots: &[(i64, i64)], a: i64, b: i64) -> u64 {
    let Some((&(p, q), rest)) = roots.split_first() else {
        return 1;
    };
    let mut total = 0;
    let (mut ra, mut rb) = (a, b);
    while ra >= 0 && rb >= 0 {
        total += count(rest, ra, rb);
        ra -= p;
        rb -= q;
    }
    total
}

/// ℘(nα1 + mα2) for A2.
pub fn partition_a2_closed(n: i64, m: i64) -> u64 {
    if n < 0 || m < 0 {
        0
    } else {
        n.min(m) as u64 + 1
    }
}

/// Memo table for [`partition`], meant to be confined to one worker.
#[derive(Debug)]
pub struct PartitionCache {
    alg: Algebra,
    table: HashMap<(i64, i64), u64>,
}

impl PartitionCache {
    pub fn new(alg: Algebra) -> Self {
        PartitionCache { alg, table: HashMap::new() }
    }

    pub fn algebra(&self) -> Algebra {
        self.alg
    }

    pub fn get(&mut self, xi: Weight) -> u64 {
        match xi.to_ints() {
            Some((a, b)) if a >= 0 && b >= 0 => {
                if a.is_zero() || b.is_zero() {
                    return 1;
                }
                let alg = self.alg;
                *self.table.entry((a, b)).or_insert_with(|| count(non_simple_roots(alg), a, b))
            }
            _ => 0,
        }
    }
}

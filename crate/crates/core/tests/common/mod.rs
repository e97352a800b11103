//! Brute-force oracles shared by the test suites. They share no code path
//! with the library algorithms they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use borel_core::ideal::{MonomialIdeal, StandardSet};
use borel_core::ExponentVector;

pub type Cells = BTreeSet<Vec<u32>>;

/// Every order ideal of size `l` in `n` variables, grown cell by cell with a
/// seen-set.
pub fn all_order_ideals(n: usize, l: usize) -> Vec<Cells> {
    let mut level: BTreeSet<Cells> = BTreeSet::new();
    level.insert(BTreeSet::from([vec![0; n]]));
    for _ in 1..l {
        let mut next = BTreeSet::new();
        for cells in &level {
            for c in cells {
                for t in 0..n {
                    let mut cand = c.clone();
                    cand[t] += 1;
                    if cells.contains(&cand) {
                        continue;
                    }
                    let closed = (0..n).all(|u| {
                        if cand[u] == 0 {
                            return true;
                        }
                        let mut d = cand.clone();
                        d[u] -= 1;
                        cells.contains(&d)
                    });
                    if closed {
                        let mut grown = cells.clone();
                        grown.insert(cand);
                        next.insert(grown);
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn box_points(dims: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..d).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Applies every Borel move to every ideal member inside the box spanned by
/// the pure powers and checks the result is still a member.
pub fn brute_force_strongly_stable(n: usize, cells: &Cells) -> bool {
    let mut dims = vec![0u32; n];
    for c in cells {
        for t in 0..n {
            dims[t] = dims[t].max(c[t] + 2);
        }
    }
    for p in box_points(&dims) {
        if cells.contains(&p) {
            continue;
        }
        for t in 0..n {
            for s in 0..t {
                if p[t] > 0 {
                    let mut q = p.clone();
                    q[t] -= 1;
                    q[s] += 1;
                    if cells.contains(&q) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn to_standard_set(n: usize, cells: &Cells) -> StandardSet {
    StandardSet::new(n, cells.iter().map(|c| ExponentVector::new(c.clone())).collect()).unwrap()
}

pub fn cells_of(ideal: &MonomialIdeal) -> Cells {
    ideal
        .standard_set()
        .unwrap()
        .cells()
        .iter()
        .map(|c| c.exps().to_vec())
        .collect()
}

/// Partitions of `n` into distinct parts via the classical recurrence over
/// the largest allowed part.
pub fn distinct_partitions(n: usize) -> usize {
    let mut q = vec![0usize; n + 1];
    q[0] = 1;
    for part in 1..=n {
        for total in (part..=n).rev() {
            q[total] += q[total - part];
        }
    }
    q[n]
}

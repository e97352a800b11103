//! Dimension of the tangent space `Hom(I, R/I)` at a monomial ideal.
//!
//! Two independent routes:
//!
//! * the multigraded route: a degree-`alpha` homomorphism sends each
//!   generator `a_i` to a multiple of `x^(a_i + alpha)` and the pairwise
//!   syzygies glue or kill those coefficients, so the graded piece is the
//!   number of components of a small graph;
//! * the elimination route: the `G*l` candidate coefficients subject to the
//!   full linear constraint system, whose rank is computed exactly.
//!
//! Pairwise syzygies suffice because the Taylor relations generate the
//! syzygy module of a monomial ideal.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bareiss::{IntMatrix, RankWitness};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, StandardGrid, StandardSet};
use crate::monomial::ExponentVector;

/// Inclusive box `lo[t] <= alpha[t] <= hi[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportBox {
    pub lo: Vec<i32>,
    pub hi: Vec<i32>,
}

impl SupportBox {
    pub fn contains(&self, alpha: &[i32]) -> bool {
        alpha.len() == self.lo.len()
            && alpha
                .iter()
                .zip(&self.lo)
                .zip(&self.hi)
                .all(|((a, l), h)| l <= a && a <= h)
    }

    pub fn volume(&self) -> u64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l + 1).max(0) as u64)
            .product()
    }

    /// Every point, lexicographically.
    pub fn points(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = self.lo.clone();
        loop {
            out.push(cur.clone());
            let mut t = cur.len();
            loop {
                if t == 0 {
                    return out;
                }
                t -= 1;
                if cur[t] < self.hi[t] {
                    cur[t] += 1;
                    break;
                }
                cur[t] = self.lo[t];
            }
        }
    }
}

/// `T(I)` with its multigraded decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTangentReport {
    pub ideal: MonomialIdeal,
    pub total: u64,
    /// Degrees with nonzero graded dimension, sorted lexicographically.
    pub per_alpha: Vec<(Vec<i32>, u64)>,
    /// Number of minimal generators.
    pub g: usize,
    /// Colength.
    pub l: usize,
    /// `g*l - total`
    pub zero_rank: u64,
}

/// Precomputed staircase data shared by all degrees of one ideal.
#[derive(Clone, Debug)]
pub struct TangentComputer {
    ideal: MonomialIdeal,
    standard: StandardSet,
    grid: StandardGrid,
    /// `quotients[i][j] = lcm(a_i, a_j) / a_i`
    quotients: Vec<Vec<Vec<u32>>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl TangentComputer {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let standard = ideal.standard_set()?;
        let grid = StandardGrid::new(&standard);
        let gens = ideal.generators();
        let quotients = gens
            .iter()
            .map(|a| {
                gens.iter()
                    .map(|b| {
                        a.exps()
                            .iter()
                            .zip(b.exps())
                            .map(|(&x, &y)| y.saturating_sub(x))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(TangentComputer {
            ideal: ideal.clone(),
            standard,
            grid,
            quotients,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn standard_set(&self) -> &StandardSet {
        &self.standard
    }

    /// `[-max_t, m_t - 1]` per variable, where `max_t` is the largest
    /// exponent of `x_t` among generators and `m_t` its pure-power exponent.
    pub fn support_box(&self) -> SupportBox {
        let n = self.ideal.nvars();
        let mut lo = vec![0i32; n];
        for g in self.ideal.generators() {
            for (l, &e) in lo.iter_mut().zip(g.exps()) {
                *l = (*l).min(-(e as i32));
            }
        }
        let hi = self
            .ideal
            .pure_powers()
            .iter()
            .map(|m| m.expect("artinian") as i32 - 1)
            .collect();
        SupportBox { lo, hi }
    }

    /// Counts components of the active-generator graph without a
    /// zero-forced vertex. `active` lists `(generator, image cell)`.
    fn count_components(&self, active: &[(usize, &[u32])], uf: &mut UnionFind, scratch: &mut Vec<u32>) -> u64 {
        let g = self.ideal.num_generators();
        uf.reset(active.len());
        let mut slot = vec![usize::MAX; g];
        for (k, &(i, _)) in active.iter().enumerate() {
            slot[i] = k;
        }
        let mut forced = vec![false; active.len()];
        for (k, &(i, cell)) in active.iter().enumerate() {
            for (j, (q, &sj)) in self.quotients[i].iter().zip(&slot).enumerate() {
                if j == i {
                    continue;
                }
                // image of the syzygy on (i, j) lands at cell * lcm / a_i
                scratch.clear();
                scratch.extend(cell.iter().zip(q).map(|(a, b)| a + b));
                if !self.grid.contains(scratch) {
                    continue;
                }
                match sj {
                    usize::MAX => forced[k] = true,
                    other => uf.union(k, other),
                }
            }
        }
        let mut dead = vec![false; active.len()];
        for (k, &f) in forced.iter().enumerate() {
            if f {
                let root = uf.find(k);
                dead[root] = true;
            }
        }
        (0..active.len()).filter(|&k| uf.find(k) == k && !dead[k]).count() as u64
    }

    pub fn graded_dimension(&self, alpha: &[i32]) -> Result<u64> {
        let n = self.ideal.nvars();
        if alpha.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: alpha.len(),
            });
        }
        let images: Vec<(usize, Vec<u32>)> = self
            .ideal
            .generators()
            .iter()
            .enumerate()
            .filter_map(|(i, a)| {
                let p = a.offset(alpha);
                self.grid
                    .contains_signed(&p)
                    .then(|| (i, p.iter().map(|&x| x as u32).collect()))
            })
            .collect();
        if images.is_empty() {
            return Ok(0);
        }
        let active: Vec<(usize, &[u32])> = images.iter().map(|(i, c)| (*i, c.as_slice())).collect();
        let mut uf = UnionFind { parent: Vec::new() };
        Ok(self.count_components(&active, &mut uf, &mut Vec::new()))
    }

    /// Full report. Only degrees `s - a_i` (standard `s`) can carry a nonzero
    /// piece; those are grouped by degree in lexicographic order.
    pub fn report(&self) -> GradedTangentReport {
        let gens = self.ideal.generators();
        let cells = self.standard.cells();
        let mut pairs: Vec<(Vec<i32>, usize, usize)> = Vec::with_capacity(gens.len() * cells.len());
        for (i, a) in gens.iter().enumerate() {
            for (c, s) in cells.iter().enumerate() {
                let alpha = s
                    .exps()
                    .iter()
                    .zip(a.exps())
                    .map(|(&x, &y)| x as i32 - y as i32)
                    .collect();
                pairs.push((alpha, i, c));
            }
        }
        pairs.sort_unstable();
        let mut per_alpha = Vec::new();
        let mut total = 0u64;
        let mut uf = UnionFind { parent: Vec::new() };
        let mut scratch = Vec::new();
        let mut active: Vec<(usize, &[u32])> = Vec::new();
        let mut start = 0;
        while start < pairs.len() {
            let mut end = start;
            while end < pairs.len() && pairs[end].0 == pairs[start].0 {
                end += 1;
            }
            active.clear();
            active.extend(pairs[start..end].iter().map(|(_, i, c)| (*i, cells[*c].exps())));
            let d = self.count_components(&active, &mut uf, &mut scratch);
            if d > 0 {
                total += d;
                per_alpha.push((pairs[start].0.clone(), d));
            }
            start = end;
        }
        let g = gens.len();
        let l = cells.len();
        GradedTangentReport {
            ideal: self.ideal.clone(),
            total,
            per_alpha,
            g,
            l,
            zero_rank: (g * l) as u64 - total,
        }
    }

    /// Total only, skipping the per-degree list.
    pub fn total(&self) -> u64 {
        self.report().total
    }
}

pub fn alpha_support_box(ideal: &MonomialIdeal) -> Result<SupportBox> {
    Ok(TangentComputer::new(ideal)?.support_box())
}

pub fn graded_dimension(ideal: &MonomialIdeal, alpha: &[i32]) -> Result<u64> {
    TangentComputer::new(ideal)?.graded_dimension(alpha)
}

pub fn tangent_dimension(ideal: &MonomialIdeal) -> Result<GradedTangentReport> {
    Ok(TangentComputer::new(ideal)?.report())
}

/// `G*l - T(I)`: the number of independent constraints ("zero vectors").
pub fn constraint_rank(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(tangent_dimension(ideal)?.zero_rank)
}

/// Default cap on `G*l` for the elimination route.
pub const ORACLE_DEFAULT_CAP: usize = 5000;

/// Sparse form of the constraint system on the `G*l` coordinates
/// `(generator i, standard s)`, column index `i*l + s`.
///
/// Row `(i<j, t)` for standard `t` reads `c[i, t/u_ij] - c[j, t/u_ji] = 0`,
/// where `u_ij = lcm(a_i, a_j)/a_i` and terms with a non-integral quotient
/// are absent. Empty rows are dropped.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl ConstraintSystem {
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let standard = ideal.standard_set()?;
        let gens = ideal.generators();
        let l = standard.len();
        let cols = gens.len() * l;
        if cols > cap {
            return Err(Error::ResourceCap {
                completed: 0,
                limit: cap,
            });
        }
        let mut rows = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let lcm = gens[i].lcm_unchecked(&gens[j]);
                let u_i: Vec<u32> = lcm.exps().iter().zip(gens[i].exps()).map(|(a, b)| a - b).collect();
                let u_j: Vec<u32> = lcm.exps().iter().zip(gens[j].exps()).map(|(a, b)| a - b).collect();
                for t in standard.cells() {
                    let mut row = Vec::new();
                    if let Some(s) = quotient(t, &u_i).and_then(|s| standard.index_of(&s)) {
                        row.push((i * l + s, 1));
                    }
                    if let Some(s) = quotient(t, &u_j).and_then(|s| standard.index_of(&s)) {
                        row.push((j * l + s, -1));
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        Ok(ConstraintSystem { cols, rows })
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    /// Exact rank, eliminating each block of rows and columns that share
    /// no entries with the rest separately.
    pub fn rank_witness(&self) -> RankWitness {
        let mut parent: Vec<usize> = (0..self.cols).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for row in &self.rows {
            if let Some(&(first, _)) = row.first() {
                for &(c, _) in &row[1..] {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        // block id per root column, in order of first appearance
        let mut block_of = vec![usize::MAX; self.cols];
        let mut block_cols: Vec<Vec<usize>> = Vec::new();
        for c in 0..self.cols {
            let r = find(&mut parent, c);
            if block_of[r] == usize::MAX {
                block_of[r] = block_cols.len();
                block_cols.push(Vec::new());
            }
            block_cols[block_of[r]].push(c);
        }
        let mut block_rows: Vec<Vec<usize>> = vec![Vec::new(); block_cols.len()];
        for (ri, row) in self.rows.iter().enumerate() {
            if let Some(&(first, _)) = row.first() {
                let r = find(&mut parent, first);
                block_rows[block_of[r]].push(ri);
            }
        }
        let mut rank = 0;
        let mut pivot_columns = Vec::new();
        for (cols, rows) in block_cols.iter().zip(&block_rows) {
            if rows.is_empty() {
                continue;
            }
            let mut m = IntMatrix::zeros(rows.len(), cols.len());
            for (bi, &ri) in rows.iter().enumerate() {
                for &(c, v) in &self.rows[ri] {
                    let bj = cols.binary_search(&c).unwrap();
                    m.set(bi, bj, BigInt::from(v));
                }
            }
            let w = m.into_echelon();
            rank += w.rank;
            pivot_columns.extend(w.pivot_columns.iter().map(|&bj| cols[bj]));
        }
        pivot_columns.sort_unstable();
        RankWitness { rank, pivot_columns }
    }
}

/// The constraint system as a dense matrix.
pub fn constraint_matrix(ideal: &MonomialIdeal, cap: usize) -> Result<IntMatrix> {
    Ok(ConstraintSystem::new(ideal, cap)?.to_dense())
}

fn quotient(t: &ExponentVector, u: &[u32]) -> Option<ExponentVector> {
    let mut v = Vec::with_capacity(u.len());
    for (&a, &b) in t.exps().iter().zip(u) {
        v.push(a.checked_sub(b)?);
    }
    Some(ExponentVector::new(v))
}

/// Rank witness of the elimination route.
pub fn oracle_rank(ideal: &MonomialIdeal, cap: usize) -> Result<RankWitness> {
    Ok(ConstraintSystem::new(ideal, cap)?.rank_witness())
}

/// `T(I)` as `G*l - rank` of the exact constraint matrix.
pub fn tangent_dimension_oracle(ideal: &MonomialIdeal) -> Result<u64> {
    tangent_dimension_oracle_capped(ideal, ORACLE_DEFAULT_CAP)
}

pub fn tangent_dimension_oracle_capped(ideal: &MonomialIdeal, cap: usize) -> Result<u64> {
    let sys = ConstraintSystem::new(ideal, cap)?;
    Ok((sys.cols - sys.rank_witness().rank) as u64)
}

/// Nullity of the degree-`alpha` block of the constraint matrix: the
/// elimination counterpart of [`graded_dimension`].
pub fn graded_dimension_oracle(ideal: &MonomialIdeal, alpha: &[i32], cap: usize) -> Result<u64> {
    let n = ideal.nvars();
    if alpha.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: alpha.len(),
        });
    }
    let standard = ideal.standard_set()?;
    let gens = ideal.generators();
    let l = standard.len();
    let in_degree = |col: usize| -> bool {
        let (i, s) = (col / l, col % l);
        standard.cells()[s]
            .exps()
            .iter()
            .zip(gens[i].exps())
            .zip(alpha)
            .all(|((&x, &y), &a)| x as i64 - y as i64 == a as i64)
    };
    let sys = ConstraintSystem::new(ideal, cap)?;
    let keep: Vec<usize> = (0..sys.cols).filter(|&c| in_degree(c)).collect();
    let rows: Vec<&Vec<(usize, i64)>> = sys
        .rows
        .iter()
        .filter(|r| r.iter().any(|(c, _)| keep.binary_search(c).is_ok()))
        .collect();
    let mut block = IntMatrix::zeros(rows.len(), keep.len());
    for (bi, row) in rows.iter().enumerate() {
        for &(c, v) in row.iter() {
            if let Ok(bj) = keep.binary_search(&c) {
                block.set(bi, bj, BigInt::from(v));
            }
        }
    }
    Ok((keep.len() - block.into_echelon().rank) as u64)
}

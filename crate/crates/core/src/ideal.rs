//! Monomial ideals, their staircases and pure-power data.
//!
//! Variable convention: `x_1` (index 0) is Borel-dominant. A strongly stable
//! ideal stays closed under replacing a factor `x_t` by `x_s` for `s < t`,
//! which forces `m_1 <= m_2 <= ... <= m_N` on the pure-power exponents. Some
//! texts use the opposite orientation; everything here uses this one.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::scan::k_of_l;

/// A monomial ideal given by its minimal generators.
///
/// Generators are kept as an antichain, sorted by total degree and then with
/// larger powers of earlier variables first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, dropping redundant generators.
    pub fn new(nvars: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        Self::new_reporting(nvars, gens).map(|(ideal, _)| ideal)
    }

    /// Like [`MonomialIdeal::new`], also returning how many input generators
    /// were redundant (non-minimal or duplicated).
    pub fn new_reporting(nvars: usize, gens: Vec<ExponentVector>) -> Result<(Self, usize)> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("ideal needs at least one variable".into()));
        }
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        let before = gens.len();
        let gens = minimalize(gens);
        let removed = before - gens.len();
        Ok((MonomialIdeal { nvars, gens }, removed))
    }

    /// Caller guarantees `gens` is an antichain in `nvars` variables.
    pub(crate) fn from_antichain(nvars: usize, mut gens: Vec<ExponentVector>) -> Self {
        gens.sort_by(|a, b| a.canonical_cmp(b));
        MonomialIdeal { nvars, gens }
    }

    /// The maximal ideal `(x_1, ..., x_N)` raised to the `k`-th power.
    pub fn maximal_ideal_power(nvars: usize, k: u32) -> Self {
        let mut gens = Vec::new();
        let mut cur = vec![0u32; nvars];
        compositions(&mut cur, 0, k, &mut gens);
        Self::from_antichain(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Membership of the monomial `x^a` in the ideal.
    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(a))
    }

    /// Exponents `m_t` of the pure powers `x_t^{m_t}` among the generators,
    /// `None` for variables with no pure power.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.nvars)
            .map(|t| self.gens.iter().filter_map(|g| g.pure_power_of(t)).min())
            .collect()
    }

    fn artinian_powers(&self) -> Result<Vec<u32>> {
        self.pure_powers()
            .into_iter()
            .enumerate()
            .map(|(t, m)| m.ok_or(Error::NotArtinian { missing_var: t }))
            .collect()
    }

    /// Zero-dimensional iff every variable has a pure power.
    pub fn is_artinian(&self) -> bool {
        self.pure_powers().iter().all(Option::is_some)
    }

    /// Checks closure under Borel moves `x_t -> x_s`, `s < t`. Testing the
    /// minimal generators suffices.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens
            .iter()
            .all(|g| (1..self.nvars).all(|t| (0..t).all(|s| g.shift(t, s).is_none_or(|m| self.contains(&m)))))
    }

    /// The standard monomials, i.e. the exponents outside the ideal.
    pub fn standard_set(&self) -> Result<StandardSet> {
        self.artinian_powers()?;
        let mut cells = Vec::new();
        let origin = ExponentVector::one(self.nvars);
        if !self.contains(&origin) {
            // Standard sets are divisor-closed, so a search by single
            // variable steps from the origin reaches all of them.
            let mut seen = alloc::collections::BTreeSet::new();
            let mut queue = VecDeque::new();
            seen.insert(origin.clone());
            queue.push_back(origin);
            while let Some(c) = queue.pop_front() {
                for t in 0..self.nvars {
                    let n = c.times_var(t);
                    if !self.contains(&n) && seen.insert(n.clone()) {
                        queue.push_back(n);
                    }
                }
                cells.push(c);
            }
        }
        cells.sort();
        Ok(StandardSet {
            nvars: self.nvars,
            cells,
        })
    }

    /// `dim R/I`.
    pub fn colength(&self) -> Result<usize> {
        self.standard_set().map(|s| s.len())
    }

    pub fn pure_power_profile(&self) -> Result<PurePowerProfile> {
        let m = self.artinian_powers()?;
        let l = self.colength()? as u64;
        let (k, delta) = k_of_l(self.nvars, l.max(1));
        Ok(PurePowerProfile { m, k, delta })
    }
}

fn compositions(cur: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<ExponentVector>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(ExponentVector::new(cur.clone()));
        return;
    }
    for e in (0..=rest).rev() {
        cur[pos] = e;
        compositions(cur, pos + 1, rest - e, out);
    }
    cur[pos] = 0;
}

/// Removes duplicates and non-minimal elements, returning canonical order.
fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.canonical_cmp(b));
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    // A divisor has degree at most that of its multiple, so it is already in
    // `out` when the multiple is reached.
    for g in gens {
        if !out.iter().any(|h| h.divides_unchecked(&g)) {
            out.push(g);
        }
    }
    out
}

/// A finite divisor-closed set of exponents: the basis of `R/I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardSet {
    nvars: usize,
    cells: Vec<ExponentVector>,
}

impl StandardSet {
    /// Validates divisor-closedness.
    pub fn new(nvars: usize, mut cells: Vec<ExponentVector>) -> Result<Self> {
        if cells.iter().any(|c| c.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: cells.iter().find(|c| c.nvars() != nvars).map_or(0, |c| c.nvars()),
            });
        }
        cells.sort();
        cells.dedup();
        let set = StandardSet { nvars, cells };
        let closed = set
            .cells
            .iter()
            .all(|c| (0..nvars).all(|t| c.div_var(t).is_none_or(|d| set.contains(&d))));
        if closed {
            Ok(set)
        } else {
            Err(Error::InvalidStaircase)
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Cells in ascending lexicographic order.
    pub fn cells(&self) -> &[ExponentVector] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.cells.binary_search(a).is_ok()
    }

    pub fn index_of(&self, a: &ExponentVector) -> Option<usize> {
        self.cells.binary_search(a).ok()
    }

    /// The minimal exponents outside the set. The empty set yields the unit
    /// ideal.
    pub fn minimal_generators(&self) -> MonomialIdeal {
        let n = self.nvars;
        if self.cells.is_empty() {
            return MonomialIdeal::from_antichain(n, vec![ExponentVector::one(n)]);
        }
        let mut gens = Vec::new();
        for c in &self.cells {
            for t in 0..n {
                let cand = c.times_var(t);
                if self.contains(&cand) {
                    continue;
                }
                // Emit each generator once: from its divisor along the
                // first variable it involves.
                let first = cand.exps().iter().position(|&e| e > 0).unwrap();
                if first != t {
                    continue;
                }
                if (0..n).all(|u| cand.div_var(u).is_none_or(|d| self.contains(&d))) {
                    gens.push(cand);
                }
            }
        }
        MonomialIdeal::from_antichain(n, gens)
    }
}

/// Pure-power exponents and the tetrahedral position of the colength.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PurePowerProfile {
    /// `m[t]` is the least `e` with `x_{t+1}^e` in the ideal.
    pub m: Vec<u32>,
    /// Largest `k` with `C(N-1+k, N) <= l`.
    pub k: u32,
    pub delta: u64,
}

impl PurePowerProfile {
    pub fn m1(&self) -> u32 {
        self.m[0]
    }
}

/// Dense membership table for a staircase inside its pure-power box.
#[derive(Clone, Debug)]
pub struct StandardGrid {
    dims: Vec<u32>,
    strides: Vec<usize>,
    bits: Vec<bool>,
}

impl StandardGrid {
    pub fn new(set: &StandardSet) -> Self {
        let n = set.nvars();
        let mut dims = vec![0u32; n];
        for c in set.cells() {
            for (d, &e) in dims.iter_mut().zip(c.exps()) {
                *d = (*d).max(e + 1);
            }
        }
        let mut strides = vec![0usize; n];
        let mut size = 1usize;
        for t in (0..n).rev() {
            strides[t] = size;
            size *= dims[t] as usize;
        }
        let mut bits = vec![false; if set.is_empty() { 0 } else { size }];
        for c in set.cells() {
            let idx: usize = c.exps().iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum();
            bits[idx] = true;
        }
        StandardGrid { dims, strides, bits }
    }

    /// Box extents: `dims[t]` bounds the `t`-th exponent of every cell.
    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// True iff `p` is a nonnegative standard exponent.
    #[inline]
    pub fn contains_signed(&self, p: &[i64]) -> bool {
        let mut idx = 0usize;
        for ((&x, &d), &s) in p.iter().zip(&self.dims).zip(&self.strides) {
            if x < 0 || x >= d as i64 {
                return false;
            }
            idx += x as usize * s;
        }
        !self.bits.is_empty() && self.bits[idx]
    }

    #[inline]
    pub fn contains(&self, p: &[u32]) -> bool {
        let mut idx = 0usize;
        for ((&x, &d), &s) in p.iter().zip(&self.dims).zip(&self.strides) {
            if x >= d {
                return false;
            }
            idx += x as usize * s;
        }
        !self.bits.is_empty() && self.bits[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    /// `(x, y, z^2)^2`.
    fn sturmfels() -> MonomialIdeal {
        ideal(
            3,
            &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2], &[0, 1, 2], &[0, 0, 4]],
        )
    }

    #[test]
    fn strong_stability() {
        assert!(sturmfels().is_strongly_stable());
        assert!(!ideal(2, &[&[3, 0], &[0, 1]]).is_strongly_stable());
        assert!(ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).is_strongly_stable());
    }

    #[test]
    fn standard_sets() {
        let max = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(max.standard_set().unwrap().cells(), &[ev(&[0, 0, 0])]);

        let s = sturmfels().standard_set().unwrap();
        let mut expected = vec![
            ev(&[0, 0, 0]),
            ev(&[0, 0, 1]),
            ev(&[0, 0, 2]),
            ev(&[0, 0, 3]),
            ev(&[1, 0, 0]),
            ev(&[1, 0, 1]),
            ev(&[0, 1, 0]),
            ev(&[0, 1, 1]),
        ];
        expected.sort();
        assert_eq!(s.cells(), expected.as_slice());

        let boxed = ideal(2, &[&[2, 0], &[0, 2]]).standard_set().unwrap();
        assert_eq!(boxed.cells(), &[ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0]), ev(&[1, 1])]);
    }

    #[test]
    fn colengths() {
        assert_eq!(sturmfels().colength().unwrap(), 8);
        assert_eq!(MonomialIdeal::maximal_ideal_power(3, 2).colength().unwrap(), 4);
        assert_eq!(ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).colength().unwrap(), 6);
    }

    #[test]
    fn non_artinian_is_rejected() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(i.standard_set().unwrap_err(), Error::NotArtinian { missing_var: 2 });
        assert!(i.colength().is_err());
        assert!(i.pure_power_profile().is_err());
        assert!(!i.is_artinian());
    }

    #[test]
    fn minimal_generators_examples() {
        let one = StandardSet::new(3, vec![ev(&[0, 0, 0])]).unwrap();
        assert_eq!(
            one.minimal_generators(),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        let s = sturmfels().standard_set().unwrap();
        assert_eq!(s.minimal_generators(), sturmfels());
        let empty = StandardSet::new(2, vec![]).unwrap();
        assert_eq!(empty.minimal_generators().generators(), &[ev(&[0, 0])]);
        assert_eq!(empty.minimal_generators().colength().unwrap(), 0);
    }

    #[test]
    fn staircase_must_be_divisor_closed() {
        assert_eq!(
            StandardSet::new(2, vec![ev(&[0, 0]), ev(&[1, 1])]).unwrap_err(),
            Error::InvalidStaircase
        );
    }

    #[test]
    fn profiles() {
        let p = sturmfels().pure_power_profile().unwrap();
        assert_eq!(p.m, vec![2, 2, 4]);
        assert_eq!(p.m1(), 2);

        let p = MonomialIdeal::maximal_ideal_power(3, 4).pure_power_profile().unwrap();
        assert_eq!((p.m.clone(), p.k, p.delta), (vec![4, 4, 4], 4, 0));
        let p = MonomialIdeal::maximal_ideal_power(3, 5).pure_power_profile().unwrap();
        assert_eq!((p.k, p.delta), (5, 0));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let (i, removed) =
            MonomialIdeal::new_reporting(2, vec![ev(&[1, 0]), ev(&[2, 0]), ev(&[1, 0]), ev(&[0, 3])]).unwrap();
        assert_eq!(removed, 2);
        assert_eq!(i.generators(), &[ev(&[1, 0]), ev(&[0, 3])]);
    }

    #[test]
    fn maximal_ideal_powers() {
        let m2 = MonomialIdeal::maximal_ideal_power(3, 2);
        assert_eq!(m2.num_generators(), 6);
        assert_eq!(m2.generators()[0], ev(&[2, 0, 0]));
        assert!(m2.is_strongly_stable());
    }

    #[test]
    fn grid_membership() {
        let s = sturmfels().standard_set().unwrap();
        let g = StandardGrid::new(&s);
        assert_eq!(g.dims(), &[2, 2, 4]);
        for c in s.cells() {
            assert!(g.contains(c.exps()));
        }
        assert!(!g.contains(&[1, 1, 0]));
        assert!(!g.contains_signed(&[-1, 0, 0]));
        assert!(g.contains_signed(&[0, 0, 3]));
        assert!(!g.contains_signed(&[0, 0, 4]));
    }
}

//! Enumeration of strongly stable Artinian ideals of a given colength.
//!
//! Staircases (complements of strongly stable ideals) are grown one cell at
//! a time from `{1}`. Every staircase `T` has a canonical parent: `T` minus
//! its lexicographically largest removable cell. A child is kept only when
//! the cell just added is that canonical cell, so each staircase is reached
//! exactly once and no seen-set is needed. Cells are bit-packed into `u64`
//! keys whose integer order is the lexicographic order of exponent vectors.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, StandardSet};
use crate::monomial::ExponentVector;
use crate::parse::format_ideal;

/// Restrictions applied to enumerated ideals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    /// Required exponent `m_1` of the pure power of `x_1`.
    pub m1: Option<u32>,
    /// Required number of minimal generators.
    pub num_generators: Option<usize>,
    /// Stop after this many accepted ideals.
    pub max_results: Option<usize>,
}

impl EnumFilter {
    pub fn m1(m1: u32) -> Self {
        EnumFilter {
            m1: Some(m1),
            ..Default::default()
        }
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        if self.m1 == Some(0) {
            return Err(Error::InvalidArgument("m1 filter must be at least 1".into()));
        }
        if let Some(g) = self.num_generators {
            if g < nvars {
                return Err(Error::InvalidArgument(alloc::format!(
                    "generator count filter must be at least {nvars}"
                )));
            }
        }
        Ok(())
    }

    /// Post-filter predicate (ignores `max_results`).
    pub fn accepts(&self, ideal: &MonomialIdeal) -> bool {
        if let Some(g) = self.num_generators {
            if ideal.num_generators() != g {
                return false;
            }
        }
        if let Some(m1) = self.m1 {
            if ideal.pure_powers()[0] != Some(m1) {
                return false;
            }
        }
        true
    }
}

/// Bit layout for packing exponent vectors of bounded size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Packing {
    nvars: usize,
    bits: u32,
}

impl Packing {
    /// Layout able to hold every exponent up to `max_exp`.
    pub fn new(nvars: usize, max_exp: u32) -> Result<Self> {
        let bits = (32 - max_exp.leading_zeros()).max(1);
        if nvars == 0 || nvars as u32 * bits > 64 {
            return Err(Error::InvalidArgument(alloc::format!(
                "cannot pack {nvars} variables with exponents up to {max_exp}"
            )));
        }
        Ok(Packing { nvars, bits })
    }

    #[inline]
    fn shift(&self, t: usize) -> u32 {
        (self.nvars - 1 - t) as u32 * self.bits
    }

    #[inline]
    fn unit(&self, t: usize) -> u64 {
        1u64 << self.shift(t)
    }

    #[inline]
    fn get(&self, key: u64, t: usize) -> u32 {
        ((key >> self.shift(t)) & ((1u64 << self.bits) - 1)) as u32
    }

    pub fn unpack(&self, key: u64) -> ExponentVector {
        ExponentVector::new((0..self.nvars).map(|t| self.get(key, t)).collect())
    }

    pub fn pack(&self, e: &ExponentVector) -> u64 {
        e.exps()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (t, &x)| acc | ((x as u64) << self.shift(t)))
    }
}

/// A strongly stable staircase as sorted packed cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    packing: Packing,
    cells: Vec<u64>,
}

impl Staircase {
    fn root(packing: Packing) -> Self {
        Staircase {
            packing,
            cells: alloc::vec![0],
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    #[inline]
    fn has(&self, key: u64) -> bool {
        self.cells.binary_search(&key).is_ok()
    }

    /// Length of the staircase along the `x_1` axis, i.e. `m_1`.
    pub fn m1(&self) -> u32 {
        let p = &self.packing;
        let axis_mask: u64 = (1..p.nvars).map(|t| ((1u64 << p.bits) - 1) << p.shift(t)).sum();
        self.cells.iter().filter(|&&c| c & axis_mask == 0).count() as u32
    }

    pub fn standard_set(&self) -> StandardSet {
        let cells = self.cells.iter().map(|&c| self.packing.unpack(c)).collect();
        StandardSet::new(self.packing.nvars, cells).expect("enumerated staircases are divisor-closed")
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.standard_set().minimal_generators()
    }

    /// Cells that can be added keeping the staircase strongly stable
    /// (moves toward larger variable index stay inside a staircase).
    fn addable(&self, out: &mut Vec<u64>) {
        out.clear();
        let p = &self.packing;
        let n = p.nvars;
        for &c in &self.cells {
            for t in 0..n {
                let cand = c + p.unit(t);
                // each candidate once, from its first nonzero coordinate
                if (0..t).any(|u| p.get(cand, u) > 0) || self.has(cand) {
                    continue;
                }
                let closed = (0..n).all(|u| {
                    if p.get(cand, u) == 0 {
                        return true;
                    }
                    let down = cand - p.unit(u);
                    self.has(down) && (u + 1..n).all(|v| self.has(down + p.unit(v)))
                });
                if closed {
                    out.push(cand);
                }
            }
        }
    }

    fn removable(&self, d: u64) -> bool {
        let p = &self.packing;
        let n = p.nvars;
        (0..n).all(|t| {
            if self.has(d + p.unit(t)) {
                return false;
            }
            // a cell having `d` as the image of a move x_s -> x_t
            p.get(d, t) == 0 || (0..t).all(|s| !self.has(d - p.unit(t) + p.unit(s)))
        })
    }

    /// True when `added` is the largest removable cell.
    fn is_canonical_child(&self, added: u64) -> bool {
        let pos = self.cells.binary_search(&added).unwrap();
        self.cells[pos + 1..].iter().all(|&d| !self.removable(d))
    }

    fn insert(&mut self, key: u64) {
        let pos = self.cells.binary_search(&key).unwrap_err();
        self.cells.insert(pos, key);
    }

    fn remove(&mut self, key: u64) {
        let pos = self.cells.binary_search(&key).unwrap();
        self.cells.remove(pos);
    }
}

/// Limits on how much of the search tree may be explored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<usize>,
}

struct Walker<'a, F> {
    target: usize,
    m1: Option<u32>,
    limits: SearchLimits,
    nodes: usize,
    found: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&Staircase) -> bool> Walker<'_, F> {
    /// Returns `Ok(false)` when the visitor asked to stop.
    fn descend(&mut self, st: &mut Staircase) -> Result<bool> {
        self.nodes += 1;
        if let Some(cap) = self.limits.max_nodes {
            if self.nodes > cap {
                return Err(Error::ResourceCap {
                    completed: self.found,
                    limit: cap,
                });
            }
        }
        if st.len() == self.target {
            if self.m1.is_none_or(|m| st.m1() == m) {
                self.found += 1;
                return Ok((self.visit)(st));
            }
            return Ok(true);
        }
        let mut cands = Vec::new();
        st.addable(&mut cands);
        let axis_full = self.m1.is_some_and(|m| st.m1() >= m);
        for c in cands {
            if axis_full && c >> st.packing.shift(0) << st.packing.shift(0) == c && c != 0 {
                continue;
            }
            st.insert(c);
            if st.is_canonical_child(c) && !self.descend(st)? {
                st.remove(c);
                return Ok(false);
            }
            st.remove(c);
        }
        Ok(true)
    }
}

fn packing_for(nvars: usize, l: usize) -> Result<Packing> {
    if nvars == 0 || l == 0 {
        return Err(Error::InvalidArgument("need N >= 1 and l >= 1".into()));
    }
    let max_exp = u32::try_from(l).map_err(|_| Error::InvalidArgument("colength too large".into()))?;
    Packing::new(nvars, max_exp)
}

/// Staircases of size `depth` (at most `l`) whose subtrees contain every
/// staircase of size `l`. Used to split a search into independent parts.
pub fn frontier(nvars: usize, l: usize, depth: usize, m1: Option<u32>) -> Result<Vec<Staircase>> {
    let packing = packing_for(nvars, l)?;
    let depth = depth.clamp(1, l);
    let mut out = Vec::new();
    let mut root = Staircase::root(packing);
    let mut w = Walker {
        target: depth,
        m1: None,
        limits: SearchLimits::default(),
        nodes: 0,
        found: 0,
        visit: &mut |s: &Staircase| {
            if m1.is_none_or(|m| s.m1() <= m) {
                out.push(s.clone());
            }
            true
        },
    };
    w.descend(&mut root)?;
    Ok(out)
}

/// Visits every staircase of size `l` below `start` (inclusive) in
/// deterministic order. The visitor returns `false` to stop early.
pub fn visit_subtree<F: FnMut(&Staircase) -> bool>(
    start: &Staircase,
    l: usize,
    m1: Option<u32>,
    limits: SearchLimits,
    mut visit: F,
) -> Result<usize> {
    let mut st = start.clone();
    let mut w = Walker {
        target: l,
        m1,
        limits,
        nodes: 0,
        found: 0,
        visit: &mut visit,
    };
    w.descend(&mut st)?;
    Ok(w.found)
}

/// Visits every strongly stable staircase of size `l` in `nvars` variables.
pub fn visit_strongly_stable<F: FnMut(&Staircase) -> bool>(
    nvars: usize,
    l: usize,
    m1: Option<u32>,
    limits: SearchLimits,
    visit: F,
) -> Result<usize> {
    let root = Staircase::root(packing_for(nvars, l)?);
    visit_subtree(&root, l, m1, limits, visit)
}

/// All strongly stable Artinian ideals of colength `l` passing `filter`,
/// sorted by their canonical text form.
pub fn enumerate_strongly_stable(nvars: usize, l: usize, filter: &EnumFilter) -> Result<Vec<MonomialIdeal>> {
    enumerate_with_limits(nvars, l, filter, SearchLimits::default())
}

pub fn enumerate_with_limits(
    nvars: usize,
    l: usize,
    filter: &EnumFilter,
    limits: SearchLimits,
) -> Result<Vec<MonomialIdeal>> {
    filter.validate(nvars)?;
    let mut out = Vec::new();
    visit_strongly_stable(nvars, l, filter.m1, limits, |st| {
        let ideal = st.ideal();
        if filter.accepts(&ideal) {
            out.push(ideal);
        }
        true
    })?;
    sort_canonical(&mut out);
    if let Some(cap) = filter.max_results {
        out.truncate(cap);
    }
    Ok(out)
}

/// Sorts ideals by canonical text.
pub fn sort_canonical(ideals: &mut Vec<MonomialIdeal>) {
    let mut keyed: Vec<_> = ideals.drain(..).map(|i| (format_ideal(&i), i)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    ideals.extend(keyed.into_iter().map(|(_, i)| i));
}

pub fn count_strongly_stable(nvars: usize, l: usize) -> Result<usize> {
    visit_strongly_stable(nvars, l, None, SearchLimits::default(), |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    #[test]
    fn colength_one() {
        let all = enumerate_strongly_stable(3, 1, &EnumFilter::default()).unwrap();
        assert_eq!(all, [parse_ideal("x,y,z", 3).unwrap().ideal]);
    }

    #[test]
    fn plane_colength_five() {
        assert_eq!(count_strongly_stable(2, 5).unwrap(), 3);
    }

    #[test]
    fn colength_two_is_unique() {
        for n in 1..=6 {
            let all = enumerate_strongly_stable(n, 2, &EnumFilter::default()).unwrap();
            assert_eq!(all.len(), 1);
            let cells = all[0].standard_set().unwrap();
            let mut last = alloc::vec![0u32; n];
            last[n - 1] = 1;
            assert!(cells.contains(&ExponentVector::new(last)));
        }
    }

    #[test]
    fn contains_sturmfels_ideal() {
        let target = parse_ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4", 3).unwrap().ideal;
        let all = enumerate_strongly_stable(3, 8, &EnumFilter::default()).unwrap();
        assert!(all.contains(&target));
    }

    #[test]
    fn filters_and_caps() {
        let f = EnumFilter {
            m1: Some(2),
            num_generators: Some(4),
            max_results: Some(2),
        };
        let got = enumerate_strongly_stable(3, 6, &f).unwrap();
        assert!(got.len() <= 2);
        for i in &got {
            assert_eq!(i.num_generators(), 4);
            assert_eq!(i.pure_powers()[0], Some(2));
        }
        assert!(EnumFilter::m1(0).validate(3).is_err());
        let bad = EnumFilter {
            num_generators: Some(2),
            ..Default::default()
        };
        assert!(enumerate_strongly_stable(3, 4, &bad).is_err());
    }

    #[test]
    fn node_cap_reports_partial_count() {
        let err =
            enumerate_with_limits(3, 12, &EnumFilter::default(), SearchLimits { max_nodes: Some(50) }).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { limit: 50, .. }));
    }

    #[test]
    fn bad_arguments() {
        assert!(count_strongly_stable(0, 3).is_err());
        assert!(count_strongly_stable(3, 0).is_err());
    }

    #[test]
    fn frontier_partitions_the_search() {
        let whole = count_strongly_stable(3, 11).unwrap();
        let parts = frontier(3, 11, 5, None).unwrap();
        let split: usize = parts
            .iter()
            .map(|s| visit_subtree(s, 11, None, SearchLimits::default(), |_| true).unwrap())
            .sum();
        assert_eq!(whole, split);
    }

    #[test]
    fn packing_roundtrip() {
        let p = Packing::new(3, 35).unwrap();
        let e = ExponentVector::new(alloc::vec![3, 0, 35]);
        assert_eq!(p.unpack(p.pack(&e)), e);
        assert!(Packing::new(20, 1000).is_err());
    }
}

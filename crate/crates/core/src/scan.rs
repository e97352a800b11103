//! Maxima of `T(I)` over classes of strongly stable ideals and the verdicts
//! built on them.

use alloc::vec::Vec;

use crate::enumerate::{visit_strongly_stable, SearchLimits};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::parse::format_ideal;
use crate::tangent::TangentComputer;

/// `C(N-1+k, N)`, the colength of `m^k` in `N` variables.
pub fn tetrahedral(nvars: usize, k: u32) -> u64 {
    if k == 0 {
        return 0;
    }
    // C(N-1+k, N) = C(N-1+k, k-1)
    let n = (nvars as u64) - 1 + k as u64;
    let r = (k as u64 - 1).min(nvars as u64);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Largest `k` with `tetrahedral(N, k) <= l`, and `l - tetrahedral(N, k)`.
pub fn k_of_l(nvars: usize, l: u64) -> (u32, u64) {
    let mut k = 0u32;
    while tetrahedral(nvars, k + 1) <= l {
        k += 1;
    }
    (k, l - tetrahedral(nvars, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScanKey {
    pub nvars: usize,
    pub l: usize,
    pub m1: u32,
}

impl ScanKey {
    pub fn k(&self) -> u32 {
        k_of_l(self.nvars, self.l as u64).0
    }

    pub fn delta(&self) -> u64 {
        k_of_l(self.nvars, self.l as u64).1
    }
}

/// Running maximum of `T(I)` with every ideal attaining it.
///
/// Merging is associative and commutative once [`ClassMax::finish`] sorts
/// the argmax list, so any split of the work gives the same result.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassMax {
    pub ideal_count: u64,
    pub t_max: Option<u64>,
    pub argmax: Vec<MonomialIdeal>,
}

impl ClassMax {
    pub fn observe(&mut self, ideal: MonomialIdeal, t: u64) {
        self.ideal_count += 1;
        match self.t_max {
            Some(best) if t < best => {}
            Some(best) if t == best => self.argmax.push(ideal),
            _ => {
                self.t_max = Some(t);
                self.argmax.clear();
                self.argmax.push(ideal);
            }
        }
    }

    pub fn merge(mut self, other: ClassMax) -> ClassMax {
        self.ideal_count += other.ideal_count;
        match (self.t_max, other.t_max) {
            (_, None) => {}
            (None, Some(_)) => {
                self.t_max = other.t_max;
                self.argmax = other.argmax;
            }
            (Some(a), Some(b)) if b > a => {
                self.t_max = other.t_max;
                self.argmax = other.argmax;
            }
            (Some(a), Some(b)) if a == b => self.argmax.extend(other.argmax),
            _ => {}
        }
        self.finish()
    }

    /// Puts the argmax list in canonical text order.
    pub fn finish(mut self) -> ClassMax {
        let mut keyed: Vec<_> = self.argmax.drain(..).map(|i| (format_ideal(&i), i)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        self.argmax = keyed.into_iter().map(|(_, i)| i).collect();
        self
    }
}

/// Single-threaded class maximum over strongly stable ideals of colength
/// `l` (restricted to `m1` when given).
pub fn class_max(nvars: usize, l: usize, m1: Option<u32>, limits: SearchLimits) -> Result<ClassMax> {
    let mut acc = ClassMax::default();
    visit_strongly_stable(nvars, l, m1, limits, |st| {
        let ideal = st.ideal();
        let t = TangentComputer::new(&ideal).expect("artinian").total();
        acc.observe(ideal, t);
        true
    })?;
    Ok(acc.finish())
}

/// Whether a sequence of class maxima grows with `m1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityVerdict {
    /// `(m1, t_max)` for every realized class, ascending in `m1`.
    pub sequence: Vec<(u32, u64)>,
    pub strictly_increasing: bool,
    pub weakly_increasing: bool,
}

impl MonotonicityVerdict {
    pub fn from_sequence(mut sequence: Vec<(u32, u64)>) -> Self {
        sequence.sort();
        let strictly_increasing = sequence.windows(2).all(|w| w[0].1 < w[1].1);
        let weakly_increasing = sequence.windows(2).all(|w| w[0].1 <= w[1].1);
        MonotonicityVerdict {
            sequence,
            strictly_increasing,
            weakly_increasing,
        }
    }
}

/// Whether every global maximizer has `m_1 = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryVerdict {
    pub k: u32,
    pub global_max: u64,
    /// Distinct `m1` values among global maximizers, ascending.
    pub argmax_m1: Vec<u32>,
    pub argmax: Vec<MonomialIdeal>,
    pub holds: bool,
    pub unique: bool,
}

impl NecessaryVerdict {
    /// Combines per-class maxima keyed by `m1`.
    pub fn from_classes(nvars: usize, l: usize, classes: &[(u32, ClassMax)]) -> Option<Self> {
        let k = k_of_l(nvars, l as u64).0;
        let global_max = classes.iter().filter_map(|(_, c)| c.t_max).max()?;
        let mut argmax_m1 = Vec::new();
        let mut argmax = Vec::new();
        for (m1, c) in classes {
            if c.t_max == Some(global_max) {
                argmax_m1.push(*m1);
                argmax.extend(c.argmax.iter().cloned());
            }
        }
        argmax_m1.sort();
        argmax_m1.dedup();
        let merged = ClassMax {
            ideal_count: 0,
            t_max: Some(global_max),
            argmax,
        }
        .finish();
        Some(NecessaryVerdict {
            k,
            global_max,
            holds: argmax_m1 == [k],
            unique: merged.argmax.len() == 1,
            argmax_m1,
            argmax: merged.argmax,
        })
    }
}

/// Whether `m^k` attains the global maximum at its colength.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetrahedralVerdict {
    pub k: u32,
    pub l: u64,
    pub power_t: u64,
    pub global_max: u64,
    pub attains_max: bool,
    pub unique: bool,
    pub argmax: Vec<MonomialIdeal>,
}

impl TetrahedralVerdict {
    pub fn from_global(nvars: usize, k: u32, global: &ClassMax) -> Option<Self> {
        let power = MonomialIdeal::maximal_ideal_power(nvars, k);
        let power_t = TangentComputer::new(&power).ok()?.total();
        let global_max = global.t_max?;
        let attains_max = power_t == global_max && global.argmax.contains(&power);
        Some(TetrahedralVerdict {
            k,
            l: tetrahedral(nvars, k),
            power_t,
            global_max,
            attains_max,
            unique: attains_max && global.argmax.len() == 1,
            argmax: global.argmax.clone(),
        })
    }
}

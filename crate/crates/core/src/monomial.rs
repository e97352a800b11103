//! Exponent vectors and the componentwise order on `N^N`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_N^{e_N}`, stored as its exponent sequence.
///
/// Position 0 holds the exponent of `x_1`, the Borel-dominant variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        ExponentVector(alloc::vec![0; nvars])
    }

    /// `x_t^e`, with `t` zero-based.
    pub fn pure_power(nvars: usize, t: usize, e: u32) -> Self {
        let mut v = alloc::vec![0; nvars];
        v[t] = e;
        ExponentVector(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(())
    }

    /// True iff `self` divides `other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self * x_t`.
    pub fn times_var(&self, t: usize) -> Self {
        let mut v = self.0.clone();
        v[t] += 1;
        ExponentVector(v)
    }

    /// `self / x_t`, or `None` when `x_t` does not divide.
    pub fn div_var(&self, t: usize) -> Option<Self> {
        if self.0[t] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[t] -= 1;
        Some(ExponentVector(v))
    }

    /// `x_to * self / x_from`, or `None` when `x_from` does not divide.
    pub fn shift(&self, from: usize, to: usize) -> Option<Self> {
        if self.0[from] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[from] -= 1;
        v[to] += 1;
        Some(ExponentVector(v))
    }

    /// Exponent of `x_t` if this is a pure power of `x_t` (including `1`).
    pub fn pure_power_of(&self, t: usize) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .all(|(s, &e)| s == t || e == 0)
            .then(|| self.0[t])
    }

    /// The generic ordering used for generator lists: total degree first, then
    /// lexicographic with larger powers of earlier variables first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }

    /// `self + alpha` as a signed vector.
    pub fn offset(&self, alpha: &[i32]) -> Vec<i64> {
        self.0.iter().zip(alpha).map(|(&e, &a)| e as i64 + a as i64).collect()
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Free-function form of [`ExponentVector::divides`].
pub fn divides(a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
    a.divides(b)
}

/// Free-function form of [`ExponentVector::lcm`].
pub fn lcm_exp(a: &ExponentVector, b: &ExponentVector) -> Result<ExponentVector> {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(divides(&ev(&[1, 0, 0]), &ev(&[2, 0, 0])).unwrap());
        assert!(!divides(&ev(&[0, 1, 0]), &ev(&[1, 0, 1])).unwrap());
        let a = ev(&[3, 1, 4]);
        assert!(divides(&a, &a).unwrap());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_exp(&ev(&[2, 0, 0]), &ev(&[1, 1, 0])).unwrap(), ev(&[2, 1, 0]));
        assert_eq!(lcm_exp(&ev(&[0, 3, 0]), &ev(&[0, 0, 3])).unwrap(), ev(&[0, 3, 3]));
        let a = ev(&[1, 5, 2]);
        assert_eq!(lcm_exp(&a, &a).unwrap(), a);
    }

    #[test]
    fn length_mismatch() {
        let err = divides(&ev(&[1, 0]), &ev(&[1, 0, 0])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
        assert!(lcm_exp(&ev(&[1]), &ev(&[1, 1])).is_err());
    }

    #[test]
    fn canonical_order_puts_x_first() {
        let mut gens = vec![ev(&[0, 0, 2]), ev(&[1, 1, 0]), ev(&[2, 0, 0]), ev(&[0, 1, 0])];
        gens.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(
            gens,
            vec![ev(&[0, 1, 0]), ev(&[2, 0, 0]), ev(&[1, 1, 0]), ev(&[0, 0, 2])]
        );
    }

    #[test]
    fn shifts() {
        assert_eq!(ev(&[1, 0, 2]).shift(2, 0), Some(ev(&[2, 0, 1])));
        assert_eq!(ev(&[1, 0, 2]).shift(1, 0), None);
        assert_eq!(ev(&[0, 0, 4]).pure_power_of(2), Some(4));
        assert_eq!(ev(&[1, 0, 4]).pure_power_of(2), None);
    }
}

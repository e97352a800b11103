//! Grid regions for three-variable ideals and their 6-connected components.
//!
//! For a shift `alpha`, the region is the set of standard exponents `p` such
//! that `p - alpha` is not a nonnegative standard exponent (it is either in
//! the ideal or has a negative coordinate). Components are counted subject
//! to a size threshold, by default `(x_max + y_max + z_max + 3)^2` with the
//! maxima taken over the generators.
//!
//! [`window_component_count`] additionally evaluates the same construction
//! on a full dense window around the origin, negative coordinates included,
//! where points with a negative coordinate count as outside the ideal and
//! shifted-out positions count as inside it.
//!
//! Neither count is an invariant of the ideal in general. The tangent module
//! is authoritative; this module exists to compare against it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, StandardGrid};

pub type Point = [i64; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionSlice {
    pub alpha: [i32; 3],
    /// Region cells in lexicographic order.
    pub cells: Vec<Point>,
    /// Components, each sorted, ordered by their smallest cell.
    pub components: Vec<Vec<Point>>,
    /// Components no larger than the size filter.
    pub counted: usize,
}

fn check_three(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.nvars() != 3 {
        return Err(Error::UnsupportedDimension { nvars: ideal.nvars() });
    }
    Ok(())
}

/// `(x_max + y_max + z_max + 3)^2` over the minimal generators.
pub fn default_size_filter(ideal: &MonomialIdeal) -> usize {
    let s = edge_sum(ideal);
    s * s
}

fn edge_sum(ideal: &MonomialIdeal) -> usize {
    (0..3)
        .map(|t| ideal.generators().iter().map(|g| g.exps()[t]).max().unwrap_or(0) as usize)
        .sum::<usize>()
        + 3
}

/// 6-connected components of a sorted point set.
fn components(cells: &[Point]) -> Vec<Vec<Point>> {
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let p = cells[k];
            comp.push(p);
            for t in 0..3 {
                for d in [-1i64, 1] {
                    let mut q = p;
                    q[t] += d;
                    if let Ok(j) = cells.binary_search(&q) {
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Cells of the region for shift `alpha`.
pub fn region_cells(ideal: &MonomialIdeal, alpha: [i32; 3]) -> Result<Vec<Point>> {
    check_three(ideal)?;
    let standard = ideal.standard_set()?;
    let grid = StandardGrid::new(&standard);
    let mut cells: Vec<Point> = standard
        .cells()
        .iter()
        .filter_map(|s| {
            let e = s.exps();
            let p = [e[0] as i64, e[1] as i64, e[2] as i64];
            let q = [p[0] - alpha[0] as i64, p[1] - alpha[1] as i64, p[2] - alpha[2] as i64];
            (!grid.contains_signed(&q)).then_some(p)
        })
        .collect();
    cells.sort();
    Ok(cells)
}

pub fn region_slice(ideal: &MonomialIdeal, alpha: [i32; 3], size_filter: Option<usize>) -> Result<RegionSlice> {
    let cells = region_cells(ideal, alpha)?;
    let limit = size_filter.unwrap_or_else(|| default_size_filter(ideal));
    let components = components(&cells);
    let counted = components.iter().filter(|c| c.len() <= limit).count();
    Ok(RegionSlice {
        alpha,
        cells,
        components,
        counted,
    })
}

pub fn region_component_count(ideal: &MonomialIdeal, alpha: [i32; 3], size_filter: Option<usize>) -> Result<usize> {
    Ok(region_slice(ideal, alpha, size_filter)?.counted)
}

/// Component count on the dense window `[-h, h)^3` with
/// `h = 3 * (x_max + y_max + z_max + 3)`.
pub fn window_component_count(ideal: &MonomialIdeal, alpha: [i32; 3], size_filter: Option<usize>) -> Result<usize> {
    check_three(ideal)?;
    ideal.standard_set()?;
    let half = 3 * edge_sum(ideal) as i64;
    window_component_count_with(
        ideal,
        alpha,
        half,
        size_filter.unwrap_or_else(|| default_size_filter(ideal)),
    )
}

/// Dense-window count with an explicit half-width.
pub fn window_component_count_with(ideal: &MonomialIdeal, alpha: [i32; 3], half: i64, limit: usize) -> Result<usize> {
    check_three(ideal)?;
    let side = (2 * half) as usize;
    let idx = |w: [usize; 3]| (w[0] * side + w[1]) * side + w[2];
    let in_ideal: Vec<bool> = {
        let mut v = vec![false; side * side * side];
        for g in ideal.generators() {
            let e = g.exps();
            let lo = [e[0] as i64 + half, e[1] as i64 + half, e[2] as i64 + half];
            if lo.iter().any(|&x| x >= side as i64) {
                continue;
            }
            for a in lo[0] as usize..side {
                for b in lo[1] as usize..side {
                    for c in lo[2] as usize..side {
                        v[idx([a, b, c])] = true;
                    }
                }
            }
        }
        v
    };
    let mut member = vec![false; side * side * side];
    for a in 0..side {
        for b in 0..side {
            for c in 0..side {
                let w = [a, b, c];
                if in_ideal[idx(w)] {
                    continue;
                }
                let mut src = [0usize; 3];
                let mut outside = false;
                for t in 0..3 {
                    let s = w[t] as i64 - alpha[t] as i64;
                    if s < 0 || s >= side as i64 {
                        outside = true;
                    } else {
                        src[t] = s as usize;
                    }
                }
                if outside || in_ideal[idx(src)] {
                    member[idx(w)] = true;
                }
            }
        }
    }
    let mut seen = vec![false; member.len()];
    let mut counted = 0;
    let mut queue = VecDeque::new();
    for start in 0..member.len() {
        if !member[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut size = 0usize;
        while let Some(k) = queue.pop_front() {
            size += 1;
            let w = [k / (side * side), (k / side) % side, k % side];
            for t in 0..3 {
                for d in [-1i64, 1] {
                    let x = w[t] as i64 + d;
                    if x < 0 || x >= side as i64 {
                        continue;
                    }
                    let mut q = w;
                    q[t] = x as usize;
                    let j = idx(q);
                    if member[j] && !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        if size <= limit {
            counted += 1;
        }
    }
    Ok(counted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s, 3).unwrap().ideal
    }

    #[test]
    fn maximal_ideal_regions() {
        let m = ideal("x,y,z");
        assert_eq!(region_cells(&m, [-1, 0, 0]).unwrap(), vec![[0, 0, 0]]);
        assert!(region_cells(&m, [0, 0, 0]).unwrap().is_empty());
        assert_eq!(region_component_count(&m, [-1, 0, 0], None).unwrap(), 1);
        // nonempty region although the graded piece vanishes
        assert_eq!(region_component_count(&m, [-1, -1, 0], None).unwrap(), 1);
        assert_eq!(region_component_count(&m, [0, 0, 0], None).unwrap(), 0);
    }

    #[test]
    fn far_shift_covers_everything() {
        let i = ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4");
        let s = region_slice(&i, [50, 50, 50], None).unwrap();
        assert_eq!(s.cells.len(), 8);
        assert_eq!(s.components.len(), 1);
    }

    #[test]
    fn size_filter_applies() {
        let i = ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4");
        assert_eq!(region_component_count(&i, [50, 50, 50], Some(7)).unwrap(), 0);
        assert_eq!(region_component_count(&i, [50, 50, 50], Some(8)).unwrap(), 1);
        assert_eq!(default_size_filter(&i), 121);
    }

    #[test]
    fn wrong_dimension() {
        let i = parse_ideal("x,y", 2).unwrap().ideal;
        assert_eq!(
            region_cells(&i, [0, 0, 0]).unwrap_err(),
            Error::UnsupportedDimension { nvars: 2 }
        );
    }

    #[test]
    fn window_counts_on_maximal_ideal() {
        let m = ideal("x,y,z");
        assert_eq!(window_component_count(&m, [-1, 0, 0], None).unwrap(), 1);
        assert_eq!(window_component_count(&m, [-1, -1, 0], None).unwrap(), 0);
        assert_eq!(window_component_count(&m, [0, 0, 0], None).unwrap(), 0);
    }
}

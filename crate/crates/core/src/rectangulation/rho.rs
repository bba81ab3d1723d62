use alloc::vec;
use alloc::vec::Vec;

use super::{CellGrid, GridRectangulation, Rect};
use crate::Permutation;

/// Upper-right boundary of a down-left closed union of cells.
///
/// `heights[c]` is the first row of column `c` inside the union, so an empty
/// union has every height equal to `n` and the full square has all zeros.
/// Heights never decrease from left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Staircase {
    heights: Vec<usize>,
}

impl Staircase {
    /// Only the left and bottom sides of the square.
    pub fn empty(n: usize) -> Self {
        Staircase { heights: vec![n; n] }
    }

    pub fn full(n: usize) -> Self {
        Staircase { heights: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Lattice path from the top-left corner `(0, 0)` to the bottom-right
    /// corner `(n, n)`, moving only down or right.
    pub fn path(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut path = vec![(0, 0)];
        let mut row = 0;
        for (c, &h) in self.heights.iter().enumerate() {
            while row < h {
                row += 1;
                path.push((row, c));
            }
            path.push((row, c + 1));
        }
        while row < n {
            row += 1;
            path.push((row, n));
        }
        path
    }

    /// Is lattice point `(row, col)` inside the closed union (sides included)?
    fn holds_point(&self, row: usize, col: usize) -> bool {
        col == 0 || row == self.n() || self.heights[col - 1] <= row
    }

    /// Rectangle the insertion rules draw for diagonal interval `j` (1-based).
    ///
    /// Panics if the diagonal cell of interval `j` is already covered.
    pub fn next_rect(&self, j: usize) -> Rect {
        let n = self.n();
        let c = j - 1;
        assert!(self.heights[c] > c, "interval {j} already drawn");
        // upper-left corner, from the left endpoint of the interval
        let (top, left) = if self.holds_point(c, c) {
            (if c == 0 { 0 } else { self.heights[c - 1] }, c)
        } else {
            let left = (0..=c).rev().find(|&x| self.holds_point(c, x)).unwrap_or(0);
            (c, left)
        };
        // lower-right corner, from the right endpoint
        let (bottom, right) = if self.holds_point(c + 1, c + 1) {
            let right = (c + 1..=n).rev().find(|&x| self.holds_point(c + 1, x)).unwrap();
            (c + 1, right)
        } else {
            (self.heights[c], c + 1)
        };
        Rect {
            top,
            left,
            bottom,
            right,
        }
    }

    pub fn insert(&mut self, j: usize) -> Rect {
        let rect = self.next_rect(j);
        for x in rect.left..rect.right {
            debug_assert_eq!(self.heights[x], rect.bottom);
            self.heights[x] = rect.top;
        }
        rect
    }

    /// Can `rect` be peeled off: its top side and its right side both lie
    /// on the boundary path?
    pub fn can_remove(&self, rect: &Rect) -> bool {
        (rect.left..rect.right).all(|x| self.heights[x] == rect.top)
            && (rect.right == self.n() || self.heights[rect.right] >= rect.bottom)
    }

    pub fn remove(&mut self, rect: &Rect) {
        for x in rect.left..rect.right {
            self.heights[x] = rect.bottom;
        }
    }
}

/// Draws the rectangles of `perm` one by one along the main diagonal.
pub fn rho(perm: &Permutation) -> GridRectangulation {
    let n = perm.len();
    let mut stairs = Staircase::empty(n);
    let mut labels = vec![0u8; n * n];
    for &j in perm.word() {
        let rect = stairs.insert(j as usize);
        for r in rect.top..rect.bottom {
            for c in rect.left..rect.right {
                debug_assert_eq!(labels[r * n + c], 0);
                labels[r * n + c] = j;
            }
        }
    }
    GridRectangulation::from_grid_unchecked(CellGrid::from_parts(n, n, labels))
}

/// `rho` followed by a reflection across the horizontal axis: rectangle `k`
/// then owns the `k`-th cell of the anti-diagonal counted from bottom-left.
pub fn rho_prime(perm: &Permutation) -> CellGrid {
    rho(perm).grid().reflect_horizontal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::permutations;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn two_rectangles() {
        // hand execution of the insertion rules
        assert_eq!(rho(&perm("12")), GridRectangulation::vertical_cut());
        assert_eq!(rho(&perm("21")), GridRectangulation::horizontal_cut());
        assert_eq!(rho(&perm("1")).n(), 1);
    }

    #[test]
    fn running_example_has_two_preimages() {
        assert_eq!(rho(&perm("4165372")), rho(&perm("4651372")));
    }

    #[test]
    fn always_a_valid_canonical_drawing() {
        for n in 1..=7 {
            for p in permutations(n) {
                let g = rho(&p);
                assert!(g.grid().is_valid(), "{p}");
                assert!(GridRectangulation::from_grid(g.grid().clone()).is_ok(), "{p}");
            }
        }
    }

    #[test]
    fn rho_prime_reflects() {
        assert_eq!(rho_prime(&perm("12")), *GridRectangulation::vertical_cut().grid());
        let h = rho_prime(&perm("21"));
        // rectangle 1 at the bottom
        assert_eq!(h.label(1, 0), 1);
        assert_eq!(h.label(0, 0), 2);
        for n in 1..=6 {
            for p in permutations(n) {
                assert_eq!(rho_prime(&p).reflect_horizontal(), *rho(&p).grid());
            }
        }
    }

    #[test]
    fn staircase_path_shape() {
        let n = 4;
        for s in [Staircase::empty(n), Staircase::full(n)] {
            let path = s.path();
            assert_eq!(path[0], (0, 0));
            assert_eq!(*path.last().unwrap(), (n, n));
            assert_eq!(path.len(), 2 * n + 1);
            for w in path.windows(2) {
                let (a, b) = (w[0], w[1]);
                assert!((b.0 == a.0 + 1 && b.1 == a.1) || (b.0 == a.0 && b.1 == a.1 + 1));
            }
        }
    }
}

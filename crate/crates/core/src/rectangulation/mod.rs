//! Rectangulations drawn on grids of unit cells.
//!
//! [`CellGrid`] is any partition of a `rows x cols` grid into rectangles of
//! cells. [`GridRectangulation`] is the canonical drawing of a diagonal
//! rectangulation: `n x n` cells with rectangle `i` owning diagonal cell
//! `(i - 1, i - 1)`. Two diagonal rectangulations are equal exactly when
//! their canonical label matrices are equal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

mod canonical;
mod extract;
mod geometry;
mod obstruction;
mod rho;
mod twin;

pub use canonical::{adjacency, canonicalize, canonicalize_with_map, diagonal_order, segment_signature};
pub use extract::{removable_labels, staircase_extraction, ExtractionRule};
pub use geometry::{geometry, EdgeEnd, EdgeInfo, Geometry, Segment, VertexInfo, VertexKind};
pub use obstruction::{diagonal_obstruction, Obstruction};
pub use rho::{rho, rho_prime, Staircase};
pub use twin::{twin_trees, BinaryTree, TwinTrees};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// Half-open block of cells: rows `top..bottom`, columns `left..right`.
///
/// The four numbers are also the lattice lines carrying the sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    pub top: usize,
    pub left: usize,
    pub bottom: usize,
    pub right: usize,
}

impl Rect {
    pub fn height(&self) -> usize {
        self.bottom - self.top
    }

    pub fn width(&self) -> usize {
        self.right - self.left
    }

    pub fn area(&self) -> usize {
        self.height() * self.width()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        (self.top..self.bottom).contains(&row) && (self.left..self.right).contains(&col)
    }
}

/// Identifies an interior edge by the two rectangles it separates.
///
/// Two rectangles share at most one edge, so the pair plus the orientation
/// is stable under any redrawing that keeps the adjacencies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    pub low: u8,
    pub high: u8,
    pub orientation: Orientation,
}

impl EdgeId {
    pub fn new(a: u8, b: u8, orientation: Orientation) -> Self {
        EdgeId {
            low: a.min(b),
            high: a.max(b),
            orientation,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Horizontal => 'h',
            Orientation::Vertical => 'v',
        };
        write!(f, "{}|{}:{}", self.low, self.high, o)
    }
}

impl FromStr for EdgeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidGrid(format!("bad edge id {s:?}, expected a|b:h or a|b:v"));
        let (pair, o) = s.trim().split_once(':').ok_or_else(bad)?;
        let (a, b) = pair.split_once('|').ok_or_else(bad)?;
        let a: u8 = a.trim().parse().map_err(|_| bad())?;
        let b: u8 = b.trim().parse().map_err(|_| bad())?;
        let orientation = match o {
            "h" => Orientation::Horizontal,
            "v" => Orientation::Vertical,
            _ => return Err(bad()),
        };
        if a == b {
            return Err(bad());
        }
        Ok(EdgeId::new(a, b, orientation))
    }
}

/// A partition of a `rows x cols` cell grid into labelled rectangles.
///
/// Labels are arbitrary non-zero bytes; every label must occupy one solid
/// rectangle of cells and no lattice point may touch four rectangles.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellGrid {
    rows: usize,
    cols: usize,
    labels: Vec<u8>,
}

impl CellGrid {
    /// `labels` is row-major, row 0 on top.
    pub fn new(rows: usize, cols: usize, labels: Vec<u8>) -> Result<Self, Error> {
        if labels.len() != rows * cols {
            return Err(Error::InvalidGrid(format!(
                "expected {} labels, got {}",
                rows * cols,
                labels.len()
            )));
        }
        if (rows == 0) != (cols == 0) {
            return Err(Error::InvalidGrid("degenerate grid shape".into()));
        }
        let grid = CellGrid { rows, cols, labels };
        grid.validate()?;
        Ok(grid)
    }

    pub(crate) fn from_parts(rows: usize, cols: usize, labels: Vec<u8>) -> Self {
        CellGrid { rows, cols, labels }
    }

    pub fn empty() -> Self {
        CellGrid {
            rows: 0,
            cols: 0,
            labels: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.labels.contains(&0) {
            return Err(Error::InvalidGrid("label 0 is reserved".into()));
        }
        for (label, rect) in self.rects() {
            let solid = (rect.top..rect.bottom).all(|r| (rect.left..rect.right).all(|c| self.label(r, c) == label));
            let count = self.labels.iter().filter(|&&l| l == label).count();
            if !solid || count != rect.area() {
                return Err(Error::InvalidGrid(format!("label {label} is not a rectangle")));
            }
        }
        for r in 1..self.rows {
            for c in 1..self.cols {
                let quad = [
                    self.label(r - 1, c - 1),
                    self.label(r - 1, c),
                    self.label(r, c - 1),
                    self.label(r, c),
                ];
                let distinct = (0..4).all(|i| (i + 1..4).all(|j| quad[i] != quad[j]));
                if distinct {
                    return Err(Error::InvalidGrid(format!(
                        "four rectangles meet at lattice point ({r}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn label(&self, row: usize, col: usize) -> u8 {
        self.labels[row * self.cols + col]
    }

    pub fn cells(&self) -> &[u8] {
        &self.labels
    }

    pub fn rect_count(&self) -> usize {
        self.rects().len()
    }

    /// Bounding block of every label, keyed by label.
    pub fn rects(&self) -> BTreeMap<u8, Rect> {
        let mut out: BTreeMap<u8, Rect> = BTreeMap::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let l = self.label(r, c);
                out.entry(l)
                    .and_modify(|b| {
                        b.top = b.top.min(r);
                        b.left = b.left.min(c);
                        b.bottom = b.bottom.max(r + 1);
                        b.right = b.right.max(c + 1);
                    })
                    .or_insert(Rect {
                        top: r,
                        left: c,
                        bottom: r + 1,
                        right: c + 1,
                    });
            }
        }
        out
    }

    /// Is the unit horizontal piece on row line `r` over column `c` drawn?
    pub(crate) fn drawn_h(&self, r: usize, c: usize) -> bool {
        r == 0 || r == self.rows || self.label(r - 1, c) != self.label(r, c)
    }

    /// Is the unit vertical piece on column line `c` beside row `r` drawn?
    pub(crate) fn drawn_v(&self, r: usize, c: usize) -> bool {
        c == 0 || c == self.cols || self.label(r, c - 1) != self.label(r, c)
    }

    pub fn relabel(&self, mut map: impl FnMut(u8) -> u8) -> CellGrid {
        CellGrid {
            rows: self.rows,
            cols: self.cols,
            labels: self.labels.iter().map(|&l| map(l)).collect(),
        }
    }

    /// Mirror image across the horizontal axis (top row becomes bottom row).
    pub fn reflect_horizontal(&self) -> CellGrid {
        let mut labels = Vec::with_capacity(self.labels.len());
        for r in (0..self.rows).rev() {
            labels.extend_from_slice(&self.labels[r * self.cols..(r + 1) * self.cols]);
        }
        CellGrid {
            rows: self.rows,
            cols: self.cols,
            labels,
        }
    }

    /// Mirror image across the main diagonal.
    pub fn transpose(&self) -> CellGrid {
        let mut labels = Vec::with_capacity(self.labels.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                labels.push(self.label(r, c));
            }
        }
        CellGrid {
            rows: self.cols,
            cols: self.rows,
            labels,
        }
    }

    /// Splits every cell into `k x k` cells.
    pub fn refine(&self, k: usize) -> CellGrid {
        let (rows, cols) = (self.rows * k, self.cols * k);
        let mut labels = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                labels.push(self.label(r / k, c / k));
            }
        }
        CellGrid { rows, cols, labels }
    }

    /// Drops rows (columns) identical to the previous one.
    pub fn compress(&self) -> CellGrid {
        let keep_rows: Vec<usize> = (0..self.rows)
            .filter(|&r| r == 0 || (0..self.cols).any(|c| self.label(r, c) != self.label(r - 1, c)))
            .collect();
        let keep_cols: Vec<usize> = (0..self.cols)
            .filter(|&c| c == 0 || (0..self.rows).any(|r| self.label(r, c) != self.label(r, c - 1)))
            .collect();
        let mut labels = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &r in &keep_rows {
            for &c in &keep_cols {
                labels.push(self.label(r, c));
            }
        }
        CellGrid {
            rows: keep_rows.len(),
            cols: keep_cols.len(),
            labels,
        }
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, label: u8) {
        self.labels[row * self.cols + col] = label;
    }

    pub(crate) fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

impl fmt::Debug for CellGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CellGrid {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.label(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Canonical drawing of a diagonal rectangulation with `n` rectangles.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridRectangulation {
    grid: CellGrid,
}

impl GridRectangulation {
    /// Builds from an `n x n` row-major label matrix.
    pub fn new(n: usize, labels: Vec<u8>) -> Result<Self, Error> {
        Self::from_grid(CellGrid::new(n, n, labels)?)
    }

    pub fn from_grid(grid: CellGrid) -> Result<Self, Error> {
        let n = grid.rows();
        if n == 0 || grid.cols() != n {
            return Err(Error::NotCanonical("grid must be square and non-empty".into()));
        }
        for i in 0..n {
            if grid.label(i, i) as usize != i + 1 {
                return Err(Error::NotCanonical(format!(
                    "diagonal cell ({i}, {i}) must carry label {}",
                    i + 1
                )));
            }
        }
        if grid.rect_count() != n {
            return Err(Error::NotCanonical(format!("expected {n} rectangles")));
        }
        Ok(GridRectangulation { grid })
    }

    pub(crate) fn from_grid_unchecked(grid: CellGrid) -> Self {
        GridRectangulation { grid }
    }

    pub fn n(&self) -> usize {
        self.grid.rows()
    }

    pub fn grid(&self) -> &CellGrid {
        &self.grid
    }

    pub fn into_grid(self) -> CellGrid {
        self.grid
    }

    pub fn label(&self, row: usize, col: usize) -> u8 {
        self.grid.label(row, col)
    }

    /// Rectangles indexed by `label - 1`.
    pub fn rects(&self) -> Vec<Rect> {
        self.grid.rects().into_values().collect()
    }

    pub fn rect(&self, label: u8) -> Rect {
        self.grid.rects()[&label]
    }

    pub fn geometry(&self) -> Geometry {
        geometry(&self.grid)
    }

    /// The `n = 2` drawing with a single vertical segment.
    pub fn vertical_cut() -> Self {
        GridRectangulation::from_grid_unchecked(CellGrid::from_parts(2, 2, alloc::vec![1, 2, 1, 2]))
    }

    /// The `n = 2` drawing with a single horizontal segment.
    pub fn horizontal_cut() -> Self {
        GridRectangulation::from_grid_unchecked(CellGrid::from_parts(2, 2, alloc::vec![1, 1, 2, 2]))
    }
}

impl fmt::Debug for GridRectangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.grid)
    }
}

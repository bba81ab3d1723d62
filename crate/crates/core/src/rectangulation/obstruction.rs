use core::fmt;

use super::geometry::{geometry, VertexKind};
use super::{CellGrid, Orientation};

/// A pair of vertices on one segment in an order no diagonal drawing allows.
///
/// On a vertical segment every `⊣` must sit above every `⊢`; on a horizontal
/// segment every `⊥` must sit left of every `⊤`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub orientation: Orientation,
    pub line: usize,
    /// The misplaced `⊢` (vertical) or `⊤` (horizontal) vertex.
    pub first: (usize, usize),
    /// The `⊣` below it, or the `⊥` to its right.
    pub second: (usize, usize),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = match self.orientation {
            Orientation::Vertical => ("⊢", "⊣ below it"),
            Orientation::Horizontal => ("⊤", "⊥ right of it"),
        };
        write!(f, "{a} at {:?} with {b} at {:?}", self.first, self.second)
    }
}

pub fn diagonal_obstruction(grid: &CellGrid) -> Option<Obstruction> {
    let geo = geometry(grid);
    for seg in &geo.segments {
        let (early, late) = match seg.orientation {
            Orientation::Vertical => (VertexKind::StemRight, VertexKind::StemLeft),
            Orientation::Horizontal => (VertexKind::StemDown, VertexKind::StemUp),
        };
        if let Some(i) = seg.vertices.iter().position(|v| v.kind == early) {
            if let Some(v) = seg.vertices[i + 1..].iter().find(|v| v.kind == late) {
                return Some(Obstruction {
                    orientation: seg.orientation,
                    line: seg.line,
                    first: seg.vertices[i].point,
                    second: v.point,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectangulation::GridRectangulation;
    use alloc::vec;

    #[test]
    fn cuts_are_unobstructed() {
        assert!(diagonal_obstruction(GridRectangulation::vertical_cut().grid()).is_none());
        assert!(diagonal_obstruction(GridRectangulation::horizontal_cut().grid()).is_none());
    }

    #[test]
    fn stem_right_above_stem_left() {
        // column line 1 carries a ⊢ at row 1 and a ⊣ at row 2
        let g = CellGrid::new(3, 2, vec![1, 2, 1, 3, 4, 3]).unwrap();
        let o = diagonal_obstruction(&g).unwrap();
        assert_eq!(o.orientation, Orientation::Vertical);
        assert_eq!((o.first, o.second), ((1, 1), (2, 1)));
        // the mirror order is fine
        let ok = CellGrid::new(3, 2, vec![1, 2, 3, 2, 3, 4]).unwrap();
        assert!(diagonal_obstruction(&ok).is_none());
    }

    #[test]
    fn stem_down_left_of_stem_up() {
        let g = CellGrid::new(2, 3, vec![1, 1, 2, 3, 4, 4]).unwrap();
        let o = diagonal_obstruction(&g).unwrap();
        assert_eq!(o.orientation, Orientation::Horizontal);
        assert_eq!((o.first, o.second), ((1, 1), (1, 2)));
    }
}

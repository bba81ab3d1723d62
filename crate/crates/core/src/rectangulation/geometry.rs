use alloc::vec::Vec;

use super::{CellGrid, EdgeId, Orientation};

/// Shape of a vertex, named after the direction of the stem of the T.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// One of the four corners of the square (degree 2).
    SquareCorner,
    /// `⊢`: vertical through-line, stem to the right.
    StemRight,
    /// `⊣`: vertical through-line, stem to the left.
    StemLeft,
    /// `⊤`: horizontal through-line, stem downwards.
    StemDown,
    /// `⊥`: horizontal through-line, stem upwards.
    StemUp,
}

impl VertexKind {
    pub fn glyph(self) -> char {
        match self {
            VertexKind::SquareCorner => '+',
            VertexKind::StemRight => '⊢',
            VertexKind::StemLeft => '⊣',
            VertexKind::StemDown => '⊤',
            VertexKind::StemUp => '⊥',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexInfo {
    /// Lattice point `(row, col)`.
    pub point: (usize, usize),
    pub kind: VertexKind,
}

/// Maximal interior segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub orientation: Orientation,
    /// Row line for horizontal segments, column line for vertical ones.
    pub line: usize,
    pub start: usize,
    pub end: usize,
    /// Vertices on the segment, top-to-bottom or left-to-right, endpoints included.
    pub vertices: Vec<VertexInfo>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeEnd {
    /// Top end of a vertical edge, left end of a horizontal one.
    Start,
    /// Bottom end of a vertical edge, right end of a horizontal one.
    End,
}

/// An interior edge: the whole common boundary of two adjacent rectangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeInfo {
    pub id: EdgeId,
    pub orientation: Orientation,
    pub line: usize,
    pub span: (usize, usize),
    /// Rectangle on the left (vertical edge) or above (horizontal edge).
    pub before: u8,
    /// Rectangle on the right or below.
    pub after: u8,
    pub endpoints: [VertexInfo; 2],
    /// Whether the edge continues straight through each endpoint.
    pub matched: [bool; 2],
    pub crosses_diagonal: bool,
}

impl EdgeInfo {
    pub fn matched_at(&self, end: EdgeEnd) -> bool {
        match end {
            EdgeEnd::Start => self.matched[0],
            EdgeEnd::End => self.matched[1],
        }
    }

    pub fn matched_count(&self) -> usize {
        self.matched.iter().filter(|&&m| m).count()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Geometry {
    pub vertices: Vec<VertexInfo>,
    pub segments: Vec<Segment>,
    pub edges: Vec<EdgeInfo>,
}

impl Geometry {
    pub fn edge(&self, id: EdgeId) -> Option<&EdgeInfo> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn vertex_at(&self, point: (usize, usize)) -> Option<VertexInfo> {
        self.vertices
            .binary_search_by(|v| v.point.cmp(&point))
            .ok()
            .map(|i| self.vertices[i])
    }
}

pub(crate) fn vertex_kind(grid: &CellGrid, r: usize, c: usize) -> Option<VertexKind> {
    let up = r > 0 && grid.drawn_v(r - 1, c);
    let down = r < grid.rows() && grid.drawn_v(r, c);
    let left = c > 0 && grid.drawn_h(r, c - 1);
    let right = c < grid.cols() && grid.drawn_h(r, c);
    match (up, down, left, right) {
        (true, true, false, true) => Some(VertexKind::StemRight),
        (true, true, true, false) => Some(VertexKind::StemLeft),
        (false, true, true, true) => Some(VertexKind::StemDown),
        (true, false, true, true) => Some(VertexKind::StemUp),
        (true, false, true, false)
        | (true, false, false, true)
        | (false, true, true, false)
        | (false, true, false, true) => Some(VertexKind::SquareCorner),
        _ => None,
    }
}

/// Lists vertices, interior segments and interior edges of a drawing.
pub fn geometry(grid: &CellGrid) -> Geometry {
    let (rows, cols) = (grid.rows(), grid.cols());
    if rows == 0 {
        return Geometry::default();
    }
    let mut vertices = Vec::new();
    for r in 0..=rows {
        for c in 0..=cols {
            if let Some(kind) = vertex_kind(grid, r, c) {
                vertices.push(VertexInfo { point: (r, c), kind });
            }
        }
    }
    let vertex = |p: (usize, usize)| VertexInfo {
        point: p,
        kind: vertex_kind(grid, p.0, p.1).expect("edge endpoint is a vertex"),
    };

    let mut segments = Vec::new();
    for r in 1..rows {
        let mut c = 0;
        while c < cols {
            if !grid.drawn_h(r, c) {
                c += 1;
                continue;
            }
            let start = c;
            while c < cols && grid.drawn_h(r, c) {
                c += 1;
            }
            let vs = (start..=c).filter_map(|x| vertex_kind(grid, r, x).map(|kind| VertexInfo { point: (r, x), kind }));
            segments.push(Segment {
                orientation: Orientation::Horizontal,
                line: r,
                start,
                end: c,
                vertices: vs.collect(),
            });
        }
    }
    for c in 1..cols {
        let mut r = 0;
        while r < rows {
            if !grid.drawn_v(r, c) {
                r += 1;
                continue;
            }
            let start = r;
            while r < rows && grid.drawn_v(r, c) {
                r += 1;
            }
            let vs = (start..=r).filter_map(|y| vertex_kind(grid, y, c).map(|kind| VertexInfo { point: (y, c), kind }));
            segments.push(Segment {
                orientation: Orientation::Vertical,
                line: c,
                start,
                end: r,
                vertices: vs.collect(),
            });
        }
    }

    let rects: Vec<_> = grid.rects().into_iter().collect();
    let mut edges = Vec::new();
    for &(la, a) in &rects {
        for &(lb, b) in &rects {
            if a.right == b.left {
                let (y0, y1) = (a.top.max(b.top), a.bottom.min(b.bottom));
                if y0 < y1 {
                    let x = a.right;
                    edges.push(EdgeInfo {
                        id: EdgeId::new(la, lb, Orientation::Vertical),
                        orientation: Orientation::Vertical,
                        line: x,
                        span: (y0, y1),
                        before: la,
                        after: lb,
                        endpoints: [vertex((y0, x)), vertex((y1, x))],
                        matched: [y0 > 0 && grid.drawn_v(y0 - 1, x), y1 < rows && grid.drawn_v(y1, x)],
                        // the diagonal meets column line x at height x * rows / cols
                        crosses_diagonal: y0 * cols < x * rows && x * rows < y1 * cols,
                    });
                }
            }
            if a.bottom == b.top {
                let (x0, x1) = (a.left.max(b.left), a.right.min(b.right));
                if x0 < x1 {
                    let y = a.bottom;
                    edges.push(EdgeInfo {
                        id: EdgeId::new(la, lb, Orientation::Horizontal),
                        orientation: Orientation::Horizontal,
                        line: y,
                        span: (x0, x1),
                        before: la,
                        after: lb,
                        endpoints: [vertex((y, x0)), vertex((y, x1))],
                        matched: [x0 > 0 && grid.drawn_h(y, x0 - 1), x1 < cols && grid.drawn_h(y, x1)],
                        crosses_diagonal: x0 * rows < y * cols && y * cols < x1 * rows,
                    });
                }
            }
        }
    }
    edges.sort_by_key(|e| e.id);

    Geometry {
        vertices,
        segments,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectangulation::{rho, GridRectangulation};

    #[test]
    fn vertical_cut_geometry() {
        let g = GridRectangulation::vertical_cut().geometry();
        assert_eq!(g.segments.len(), 1);
        assert_eq!(g.edges.len(), 1);
        let e = &g.edges[0];
        assert_eq!(e.id, EdgeId::new(1, 2, Orientation::Vertical));
        assert_eq!(e.matched, [false, false]);
        assert!(e.crosses_diagonal);
        assert_eq!(e.endpoints[0].kind, VertexKind::StemDown);
        assert_eq!(e.endpoints[1].kind, VertexKind::StemUp);
        // four corners plus the two ends of the cut
        assert_eq!(g.vertices.len(), 6);
    }

    #[test]
    fn single_rectangle_has_no_interior() {
        let g = rho(&"1".parse().unwrap()).geometry();
        assert!(g.edges.is_empty());
        assert!(g.segments.is_empty());
        assert_eq!(g.vertices.len(), 4);
    }

    #[test]
    fn degree_three_everywhere_inside() {
        let r = rho(&"4165372".parse().unwrap());
        let g = r.geometry();
        let n = r.n();
        for v in &g.vertices {
            let (y, x) = v.point;
            let corner = (y == 0 || y == n) && (x == 0 || x == n);
            assert_eq!(corner, v.kind == VertexKind::SquareCorner, "{v:?}");
        }
        assert_eq!(g.segments.len(), n - 1);
    }
}

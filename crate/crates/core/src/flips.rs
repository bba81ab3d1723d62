//! Classifying interior edges by how they can be flipped, and flipping them.
//!
//! Every flip re-partitions the union of the two rectangles beside an edge
//! into two other rectangles, then redraws the result canonically. Work
//! happens on a grid refined by two so that new lines never collide with
//! existing ones.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::rectangulation::{canonicalize_with_map, diagonal_obstruction, EdgeEnd, EdgeInfo, Geometry, VertexKind};
use crate::{CellGrid, EdgeId, Error, GridRectangulation, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlipClass {
    /// The two rectangles form a rectangle; the edge turns by a quarter.
    Simple,
    /// Rotation about the matched endpoint of an edge off the diagonal.
    RotationLR,
    /// Rotation about the matched endpoint of an edge crossing the diagonal.
    RotationBarcelona,
    UnflippableBothMatched,
    /// Matched at one end and rotating it breaks diagonality.
    ///
    /// Subtypes: 1 horizontal matched left, 2 horizontal matched right,
    /// 3 vertical matched top, 4 vertical matched bottom.
    UnflippableOneMatched(u8),
}

impl FlipClass {
    pub fn is_flippable(self) -> bool {
        matches!(
            self,
            FlipClass::Simple | FlipClass::RotationLR | FlipClass::RotationBarcelona
        )
    }

    pub fn is_lr(self) -> bool {
        matches!(self, FlipClass::Simple | FlipClass::RotationLR)
    }

    pub fn is_barcelona(self) -> bool {
        matches!(self, FlipClass::Simple | FlipClass::RotationBarcelona)
    }

    /// Short machine-readable name.
    pub fn as_str(self) -> &'static str {
        match self {
            FlipClass::Simple => "simple",
            FlipClass::RotationLR => "rotation_lr",
            FlipClass::RotationBarcelona => "rotation_barcelona",
            FlipClass::UnflippableBothMatched => "unflippable_both_matched",
            FlipClass::UnflippableOneMatched(1) => "unflippable_one_matched_1",
            FlipClass::UnflippableOneMatched(2) => "unflippable_one_matched_2",
            FlipClass::UnflippableOneMatched(3) => "unflippable_one_matched_3",
            FlipClass::UnflippableOneMatched(_) => "unflippable_one_matched_4",
        }
    }
}

impl fmt::Display for FlipClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of flipping edge `from`: the new drawing and the new edge there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipOutcome {
    pub from: EdgeId,
    pub class: FlipClass,
    pub rect: GridRectangulation,
    pub edge: EdgeId,
}

/// Subtype number of an edge matched only at `end`.
fn one_matched_subtype(orientation: Orientation, end: EdgeEnd) -> u8 {
    match (orientation, end) {
        (Orientation::Horizontal, EdgeEnd::Start) => 1,
        (Orientation::Horizontal, EdgeEnd::End) => 2,
        (Orientation::Vertical, EdgeEnd::Start) => 3,
        (Orientation::Vertical, EdgeEnd::End) => 4,
    }
}

/// Raw re-partitions of the union of `before` and `after` across a vertical
/// edge of `grid` (already refined by two), keeping both labels.
fn vertical_repartitions(grid: &CellGrid, before: u8, after: u8, matched: [bool; 2]) -> Vec<CellGrid> {
    let rects = grid.rects();
    let (a, b) = (rects[&before], rects[&after]);
    let mut out = Vec::new();
    match matched {
        [false, false] => {
            // a and b share their whole sides: cut the union across
            for y in (a.top + 1..a.bottom).step_by(2) {
                let mut next = grid.clone();
                for r in a.top..a.bottom {
                    for c in a.left..b.right {
                        next.set(r, c, if r < y { before } else { after });
                    }
                }
                out.push(next);
            }
        }
        [true, false] | [false, true] => {
            let at_top = matched[0];
            let y = if at_top {
                a.top.max(b.top)
            } else {
                a.bottom.min(b.bottom)
            };
            // the taller rectangle loses its part beside the edge
            let a_is_tall = if at_top { a.top < b.top } else { a.bottom > b.bottom };
            let (tall, short, short_label) = if a_is_tall { (a, b, after) } else { (b, a, before) };
            let mut cut = grid.clone();
            let rows = if at_top { y..tall.bottom } else { tall.top..y };
            for r in rows {
                for c in tall.left..tall.right {
                    cut.set(r, c, short_label);
                }
            }
            let tall_is_left = tall.left < short.left;
            let far = if tall_is_left { tall.left } else { tall.right };
            if far == 0 || far == grid.cols() || !four_way(&cut, y, far) {
                out.push(cut);
            } else {
                // the new segment runs into an existing one; nudge it off
                let cols: Vec<usize> = if tall_is_left {
                    (far..grid.cols()).take_while(|&c| cut.drawn_h(y, c)).collect()
                } else {
                    (0..far).rev().take_while(|&c| cut.drawn_h(y, c)).collect()
                };
                for down in [true, false] {
                    let mut moved = cut.clone();
                    for &c in &cols {
                        if down {
                            moved.set(y, c, cut.label(y - 1, c));
                        } else {
                            moved.set(y - 1, c, cut.label(y, c));
                        }
                    }
                    out.push(moved);
                }
            }
        }
        [true, true] => {}
    }
    out
}

fn four_way(grid: &CellGrid, r: usize, c: usize) -> bool {
    r > 0
        && r < grid.rows()
        && c > 0
        && c < grid.cols()
        && grid.drawn_v(r - 1, c)
        && grid.drawn_v(r, c)
        && grid.drawn_h(r, c - 1)
        && grid.drawn_h(r, c)
}

/// Every diagonal drawing reachable by re-partitioning around `e`.
fn attempts(g: &GridRectangulation, e: &EdgeInfo) -> Vec<FlipOutcome> {
    let fine = g.grid().refine(2);
    let raws = match e.orientation {
        Orientation::Vertical => vertical_repartitions(&fine, e.before, e.after, e.matched),
        Orientation::Horizontal => vertical_repartitions(&fine.transpose(), e.before, e.after, e.matched)
            .into_iter()
            .map(|t| t.transpose())
            .collect(),
    };
    let mut out: Vec<FlipOutcome> = Vec::new();
    for raw in raws {
        if !raw.is_valid() || diagonal_obstruction(&raw).is_some() {
            continue;
        }
        let Ok((rect, map)) = canonicalize_with_map(&raw) else {
            continue;
        };
        let edge = EdgeId::new(map[&e.before], map[&e.after], e.orientation.flipped());
        if out.iter().all(|o| o.rect != rect) {
            out.push(FlipOutcome {
                from: e.id,
                class: FlipClass::Simple,
                rect,
                edge,
            });
        }
    }
    out
}

fn classify_with_outcome(g: &GridRectangulation, e: &EdgeInfo) -> (FlipClass, Option<FlipOutcome>) {
    let class_if_flippable = match e.matched {
        [true, true] => return (FlipClass::UnflippableBothMatched, None),
        [false, false] => FlipClass::Simple,
        _ if e.crosses_diagonal => FlipClass::RotationBarcelona,
        _ => FlipClass::RotationLR,
    };
    let mut found = attempts(g, e);
    debug_assert!(found.len() <= 1, "edge {} of {g:?} flips {} ways", e.id, found.len());
    match found.pop() {
        Some(mut outcome) => {
            outcome.class = class_if_flippable;
            (class_if_flippable, Some(outcome))
        }
        None => {
            let end = if e.matched[0] { EdgeEnd::Start } else { EdgeEnd::End };
            assert!(
                class_if_flippable != FlipClass::Simple,
                "edge {} of {g:?} has no simple flip",
                e.id
            );
            (
                FlipClass::UnflippableOneMatched(one_matched_subtype(e.orientation, end)),
                None,
            )
        }
    }
}

pub fn classify_edge(g: &GridRectangulation, e: &EdgeInfo) -> FlipClass {
    classify_with_outcome(g, e).0
}

/// Every interior edge with its class, ordered by edge id.
pub fn classify_all(g: &GridRectangulation) -> Vec<(EdgeInfo, FlipClass)> {
    g.geometry()
        .edges
        .into_iter()
        .map(|e| {
            let class = classify_edge(g, &e);
            (e, class)
        })
        .collect()
}

pub fn flip_edge(g: &GridRectangulation, e: &EdgeInfo) -> Result<FlipOutcome, Error> {
    match classify_with_outcome(g, e) {
        (_, Some(outcome)) => Ok(outcome),
        (class, None) => Err(Error::Unflippable { edge: e.id, class }),
    }
}

pub fn flip(g: &GridRectangulation, id: EdgeId) -> Result<FlipOutcome, Error> {
    let geo = g.geometry();
    let e = geo.edge(id).ok_or(Error::NoSuchEdge(id))?;
    flip_edge(g, e)
}

/// One outcome per flippable edge, ordered by edge id.
pub fn neighbors(g: &GridRectangulation) -> Vec<FlipOutcome> {
    g.geometry()
        .edges
        .iter()
        .filter_map(|e| classify_with_outcome(g, e).1)
        .collect()
}

/// Edges flippable under the locking rule: at every vertex, the edge that
/// continues the through-line towards the diagonal is locked.
///
/// Computed from vertex kinds alone, without trying any flip.
pub fn lr_flippable(g: &GridRectangulation) -> BTreeSet<EdgeId> {
    let geo = g.geometry();
    let mut locked = BTreeSet::new();
    for v in &geo.vertices {
        let (r, c) = v.point;
        if r == c {
            continue;
        }
        let above = r < c;
        let through = match v.kind {
            VertexKind::StemRight | VertexKind::StemLeft => Orientation::Vertical,
            VertexKind::StemDown | VertexKind::StemUp => Orientation::Horizontal,
            VertexKind::SquareCorner => continue,
        };
        // towards the diagonal: down or left above it, up or right below it
        let toward_end = match (through, above) {
            (Orientation::Vertical, true) | (Orientation::Horizontal, false) => 0,
            (Orientation::Vertical, false) | (Orientation::Horizontal, true) => 1,
        };
        if let Some(e) = geo
            .edges
            .iter()
            .find(|e| e.orientation == through && e.endpoints[toward_end].point == v.point)
        {
            locked.insert(e.id);
        }
    }
    geo.edges
        .iter()
        .map(|e| e.id)
        .filter(|id| !locked.contains(id))
        .collect()
}

/// Vertex kinds at the corners the rotation about `e` depends on.
///
/// For an edge matched at its start (left or top), the top-left corners of
/// the rectangle that stops at the matched endpoint and of the one that
/// runs past it; for an edge matched at its end, their bottom-right corners.
pub fn rotation_corner_kinds(g: &GridRectangulation, geo: &Geometry, e: &EdgeInfo) -> Option<(VertexKind, VertexKind)> {
    let end = match e.matched {
        [true, false] => EdgeEnd::Start,
        [false, true] => EdgeEnd::End,
        _ => return None,
    };
    let (a, b) = (g.rect(e.before), g.rect(e.after));
    let extent = |r: &crate::Rect| match (e.orientation, end) {
        (Orientation::Vertical, EdgeEnd::Start) => r.top,
        (Orientation::Horizontal, EdgeEnd::Start) => r.left,
        (Orientation::Vertical, EdgeEnd::End) => usize::MAX - r.bottom,
        (Orientation::Horizontal, EdgeEnd::End) => usize::MAX - r.right,
    };
    let (stops, runs) = if extent(&a) < extent(&b) { (b, a) } else { (a, b) };
    let corner = |r: &crate::Rect| match end {
        EdgeEnd::Start => (r.top, r.left),
        EdgeEnd::End => (r.bottom, r.right),
    };
    Some((geo.vertex_at(corner(&stops))?.kind, geo.vertex_at(corner(&runs))?.kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectangulation::rho;
    use alloc::string::ToString;

    #[test]
    fn two_rectangles_flip_into_each_other() {
        let v = GridRectangulation::vertical_cut();
        let h = GridRectangulation::horizontal_cut();
        let out = flip(&v, "1|2:v".parse().unwrap()).unwrap();
        assert_eq!(out.class, FlipClass::Simple);
        assert_eq!(out.rect, h);
        assert_eq!(out.edge, "1|2:h".parse().unwrap());
        let back = flip(&h, out.edge).unwrap();
        assert_eq!(back.rect, v);
        assert_eq!(back.edge, out.from);
    }

    #[test]
    fn missing_edge() {
        let v = GridRectangulation::vertical_cut();
        assert!(matches!(flip(&v, "1|2:h".parse().unwrap()), Err(Error::NoSuchEdge(_))));
    }

    #[test]
    fn three_rectangles() {
        // a full cut with the other half split: the split and the two
        // halves of the cut all flip
        for p in crate::permutation::permutations(3) {
            let g = rho(&p);
            let classes = classify_all(&g);
            assert!(classes.iter().all(|(_, c)| c.is_flippable()), "{p}: {classes:?}");
        }
    }

    #[test]
    fn class_names() {
        assert_eq!(
            FlipClass::UnflippableOneMatched(2).to_string(),
            "unflippable_one_matched_2"
        );
        assert!(FlipClass::Simple.is_lr() && FlipClass::Simple.is_barcelona());
        assert!(!FlipClass::RotationLR.is_barcelona());
        assert!(!FlipClass::UnflippableBothMatched.is_flippable());
    }
}

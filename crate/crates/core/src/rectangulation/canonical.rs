use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::geometry::geometry;
use super::obstruction::diagonal_obstruction;
use super::{rho, CellGrid, GridRectangulation, Orientation};
use crate::{Error, Permutation};

/// Adjacent pairs `(before, after, orientation)`: `before` is left of
/// `after` across a vertical edge, or above it across a horizontal one.
pub fn adjacency(grid: &CellGrid) -> BTreeSet<(u8, u8, Orientation)> {
    geometry(grid)
        .edges
        .iter()
        .map(|e| (e.before, e.after, e.orientation))
        .collect()
}

/// For every interior segment, the sorted labels on each side of it.
///
/// Wall slides reorder the rectangles along a segment but never move a
/// rectangle to another segment, so this set is an invariant of the
/// mosaic floorplan.
pub fn segment_signature(grid: &CellGrid) -> BTreeSet<(Orientation, Vec<u8>, Vec<u8>)> {
    let side = |cells: &mut dyn Iterator<Item = u8>| {
        let set: BTreeSet<u8> = cells.collect();
        set.into_iter().collect::<Vec<_>>()
    };
    geometry(grid)
        .segments
        .iter()
        .map(|s| {
            let l = s.line;
            let (a, b) = match s.orientation {
                Orientation::Horizontal => (
                    side(&mut (s.start..s.end).map(|c| grid.label(l - 1, c))),
                    side(&mut (s.start..s.end).map(|c| grid.label(l, c))),
                ),
                Orientation::Vertical => (
                    side(&mut (s.start..s.end).map(|r| grid.label(r, l - 1))),
                    side(&mut (s.start..s.end).map(|r| grid.label(r, l))),
                ),
            };
            (s.orientation, a, b)
        })
        .collect()
}

/// Order in which a top-left to bottom-right monotone curve meets the
/// rectangles, derived from adjacencies alone.
///
/// Consecutive rectangles of a diagonal rectangulation are adjacent, so the
/// left-of/above relation has exactly one topological order.
pub fn diagonal_order(grid: &CellGrid) -> Result<Vec<u8>, Error> {
    let adj = adjacency(grid);
    let labels: Vec<u8> = grid.rects().into_keys().collect();
    let mut indegree: BTreeMap<u8, usize> = labels.iter().map(|&l| (l, 0)).collect();
    for &(_, after, _) in &adj {
        *indegree.get_mut(&after).unwrap() += 1;
    }
    let mut order = Vec::with_capacity(labels.len());
    while order.len() < labels.len() {
        let mut sources = indegree.iter().filter(|(_, &d)| d == 0).map(|(&l, _)| l);
        let (Some(next), None) = (sources.next(), sources.next()) else {
            return Err(Error::NotCanonical("rectangles have no unique diagonal order".into()));
        };
        indegree.remove(&next);
        for &(before, after, _) in &adj {
            if before == next {
                *indegree.get_mut(&after).unwrap() -= 1;
            }
        }
        order.push(next);
    }
    Ok(order)
}

/// Redraws `raw` in canonical form, keeping every adjacency.
pub fn canonicalize(raw: &CellGrid) -> Result<GridRectangulation, Error> {
    canonicalize_with_map(raw).map(|(g, _)| g)
}

/// [`canonicalize`], also returning the map from raw labels to canonical ones.
pub fn canonicalize_with_map(raw: &CellGrid) -> Result<(GridRectangulation, BTreeMap<u8, u8>), Error> {
    if raw.rows() == 0 {
        return Err(Error::NotCanonical("empty grid".into()));
    }
    if let Some(o) = diagonal_obstruction(raw) {
        return Err(Error::NotDiagonal(o));
    }
    let order = diagonal_order(raw)?;
    let to_canon: BTreeMap<u8, u8> = order.iter().enumerate().map(|(i, &l)| (l, (i + 1) as u8)).collect();
    let n = order.len();
    let adj: BTreeSet<(u8, u8, Orientation)> = adjacency(raw)
        .into_iter()
        .map(|(a, b, o)| (to_canon[&a], to_canon[&b], o))
        .collect();

    // peel with the leftmost rule: a rectangle goes once nothing remains
    // directly above it or directly to its right
    let mut present = alloc::vec![true; n + 1];
    let mut reversed = Vec::with_capacity(n);
    for _ in 0..n {
        let blocked = |x: u8| {
            adj.iter().any(|&(a, b, o)| match o {
                Orientation::Horizontal => b == x && present[a as usize],
                Orientation::Vertical => a == x && present[b as usize],
            })
        };
        let pick = (1..=n as u8)
            .rev()
            .find(|&x| present[x as usize] && !blocked(x))
            .ok_or_else(|| Error::NotCanonical("no removable rectangle".into()))?;
        present[pick as usize] = false;
        reversed.push(pick);
    }
    reversed.reverse();
    let perm = Permutation::new(reversed).expect("each label peeled once");
    let g = rho(&perm);
    if adjacency(g.grid()) != adj {
        return Err(Error::NotCanonical("redrawing changed the adjacencies".into()));
    }
    Ok((g, to_canon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::permutations;
    use crate::rectangulation::{staircase_extraction, ExtractionRule};
    use alloc::vec;

    #[test]
    fn idempotent_on_canonical_drawings() {
        for n in 1..=6 {
            for p in permutations(n) {
                let g = rho(&p);
                let left = staircase_extraction(&g, ExtractionRule::Leftmost);
                assert_eq!(rho(&left), g);
                assert_eq!(canonicalize(g.grid()).unwrap(), g, "{p}");
            }
        }
    }

    #[test]
    fn stretched_vertical_cut() {
        let raw = CellGrid::new(1, 5, vec![7, 7, 7, 3, 3]).unwrap();
        let (g, map) = canonicalize_with_map(&raw).unwrap();
        assert_eq!(g, GridRectangulation::vertical_cut());
        assert_eq!(map[&7], 1);
        assert_eq!(map[&3], 2);
    }

    #[test]
    fn obstruction_is_reported() {
        let raw = CellGrid::new(3, 2, vec![1, 2, 1, 3, 4, 3]).unwrap();
        assert!(matches!(canonicalize(&raw), Err(Error::NotDiagonal(_))));
    }

    #[test]
    fn diagonal_order_of_canonical_drawing_is_identity() {
        for p in permutations(5) {
            let g = rho(&p);
            assert_eq!(diagonal_order(g.grid()).unwrap(), (1..=5).collect::<Vec<u8>>());
        }
    }
}

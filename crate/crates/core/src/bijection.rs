//! Preimages of `rho` and the maps from rectangulations back to permutations.

use alloc::vec::Vec;

use crate::rectangulation::{
    removable_labels, rho_prime, staircase_extraction, CellGrid, ExtractionRule, GridRectangulation, Staircase,
};
use crate::{Error, Permutation, MAX_FIBER_N};

/// All permutations drawn as `rect` by `rho`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub rect: GridRectangulation,
    pub members: Vec<Permutation>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    /// Member with the fewest inversions.
    pub fn min(&self) -> &Permutation {
        self.members
            .iter()
            .min_by_key(|p| p.inversion_count())
            .expect("fibers are non-empty")
    }

    /// Member with the most inversions.
    pub fn max(&self) -> &Permutation {
        self.members
            .iter()
            .max_by_key(|p| p.inversion_count())
            .expect("fibers are non-empty")
    }
}

/// Every preimage of `g`, by trying every peeling order.
///
/// Any partial peeling can be completed, so the search never backtracks
/// out of a dead end and its cost is proportional to the output.
pub fn fiber(g: &GridRectangulation) -> Result<Fiber, Error> {
    let n = g.n();
    if n > MAX_FIBER_N {
        return Err(Error::TooLarge { n, max: MAX_FIBER_N });
    }
    let rects = g.rects();
    let mut members = Vec::new();
    let mut removed = alloc::vec![false; n];
    let mut reversed = Vec::with_capacity(n);
    peel_all(
        g,
        &rects,
        &mut Staircase::full(n),
        &mut removed,
        &mut reversed,
        &mut members,
    );
    members.sort();
    Ok(Fiber {
        rect: g.clone(),
        members,
    })
}

fn peel_all(
    g: &GridRectangulation,
    rects: &[crate::Rect],
    stairs: &mut Staircase,
    removed: &mut [bool],
    reversed: &mut Vec<u8>,
    out: &mut Vec<Permutation>,
) {
    if reversed.len() == g.n() {
        let word = reversed.iter().rev().copied().collect();
        out.push(Permutation::new(word).expect("each label peeled once"));
        return;
    }
    for label in removable_labels(g, stairs, removed) {
        let i = label as usize - 1;
        let before = stairs.clone();
        stairs.remove(&rects[i]);
        removed[i] = true;
        reversed.push(label);
        peel_all(g, rects, stairs, removed, reversed, out);
        reversed.pop();
        removed[i] = false;
        *stairs = before;
    }
}

/// The Baxter permutation of `g`: the unique Baxter member of its fiber.
///
/// Above [`MAX_FIBER_N`] rectangles the block-deletion reading
/// [`baxter_by_block_deletion`] is used instead.
pub fn baxter_of(g: &GridRectangulation) -> Permutation {
    if g.n() > MAX_FIBER_N {
        return baxter_by_block_deletion(g);
    }
    let f = fiber(g).expect("size checked");
    let mut baxter = f.members.iter().filter(|p| p.is_baxter());
    let first = baxter.next().expect("every fiber has a Baxter member").clone();
    assert!(baxter.next().is_none(), "fiber of {g:?} has two Baxter members");
    first
}

pub fn twisted_baxter_of(g: &GridRectangulation) -> Permutation {
    staircase_extraction(g, ExtractionRule::Leftmost)
}

pub fn rightmost_of(g: &GridRectangulation) -> Permutation {
    staircase_extraction(g, ExtractionRule::Rightmost)
}

/// Removes the rectangle in the bottom-left corner and lets its neighbours
/// take over the freed space.
///
/// If the right side of the removed rectangle is a whole segment, its right
/// neighbours stretch leftwards; otherwise its top side is a whole segment
/// and its top neighbours stretch downwards. The returned grid has duplicate
/// rows and columns squeezed out, and is empty after the last rectangle.
pub fn block_delete_bottom_left(grid: &CellGrid) -> Result<(u8, CellGrid), Error> {
    let (rows, cols) = (grid.rows(), grid.cols());
    if rows == 0 {
        return Err(Error::InvalidGrid("nothing left to delete".into()));
    }
    let label = grid.label(rows - 1, 0);
    let rect = grid.rects()[&label];
    if rect.top == 0 && rect.right == cols {
        return Ok((label, CellGrid::empty()));
    }
    let right_is_segment = rect.right < cols && (rect.top == 0 || !grid.drawn_v(rect.top - 1, rect.right));
    let top_is_segment = rect.top > 0 && (rect.right == cols || !grid.drawn_h(rect.top, rect.right));
    let mut next = grid.clone();
    if right_is_segment {
        for r in rect.top..rect.bottom {
            let l = grid.label(r, rect.right);
            for c in rect.left..rect.right {
                next.set(r, c, l);
            }
        }
    } else if top_is_segment {
        for c in rect.left..rect.right {
            let l = grid.label(rect.top - 1, c);
            for r in rect.top..rect.bottom {
                next.set(r, c, l);
            }
        }
    } else {
        return Err(Error::InvalidGrid(alloc::format!(
            "neither side of bottom-left rectangle {label} is a whole segment"
        )));
    }
    Ok((label, next.compress()))
}

/// Labels in the order of repeated bottom-left block deletions.
pub fn slash_order(grid: &CellGrid) -> Result<Vec<u8>, Error> {
    let mut out = Vec::with_capacity(grid.rect_count());
    let mut current = grid.clone();
    while current.rows() > 0 {
        let (label, rest) = block_delete_bottom_left(&current)?;
        out.push(label);
        current = rest;
    }
    Ok(out)
}

/// Baxter permutation read off by block deletion.
pub fn baxter_by_block_deletion(g: &GridRectangulation) -> Permutation {
    let order = slash_order(g.grid()).expect("canonical drawings always admit block deletion");
    Permutation::new(order).expect("every label deleted once")
}

/// The representative of the floorplan of `g` whose rectangles all meet the
/// bottom-left to top-right diagonal, labelled in the order that diagonal
/// meets them.
///
/// Relabel `k` to `baxter_of(g).at(k)` to recover the labels of `g`.
pub fn slash_representative(g: &GridRectangulation) -> CellGrid {
    rho_prime(&baxter_of(g).inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::permutations;
    use crate::rectangulation::rho;
    use alloc::vec;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn two_rectangle_fibers() {
        assert_eq!(
            fiber(&GridRectangulation::vertical_cut()).unwrap().members,
            vec![perm("12")]
        );
        assert_eq!(
            fiber(&GridRectangulation::horizontal_cut()).unwrap().members,
            vec![perm("21")]
        );
    }

    #[test]
    fn worked_examples() {
        let g = rho(&perm("4165372"));
        let f = fiber(&g).unwrap();
        assert!(f.contains(&perm("4165372")) && f.contains(&perm("4651372")));
        assert_eq!(baxter_of(&g), perm("4651372"));
        assert_eq!(twisted_baxter_of(&g), perm("4165372"));
        let g = rho(&perm("31426587"));
        assert_eq!(baxter_of(&g), perm("34126587"));
        assert_eq!(rightmost_of(&g), perm("34681257"));
        assert_eq!(baxter_of(&GridRectangulation::vertical_cut()), perm("12"));
        let one = rho(&perm("1"));
        assert_eq!(twisted_baxter_of(&one), perm("1"));
        assert_eq!(rightmost_of(&one), perm("1"));
    }

    #[test]
    fn fibers_partition_sn() {
        for n in 1..=6 {
            let mut seen = alloc::collections::BTreeSet::new();
            let mut total = 0;
            for p in permutations(n) {
                let g = rho(&p);
                if seen.insert(g.clone()) {
                    let f = fiber(&g).unwrap();
                    assert!(f.members.iter().all(|m| rho(m) == g));
                    total += f.len();
                }
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn block_deletion_on_cuts() {
        let v = GridRectangulation::vertical_cut();
        let (l, rest) = block_delete_bottom_left(v.grid()).unwrap();
        assert_eq!(l, 1);
        assert_eq!(rest.rows(), 1);
        assert_eq!(slash_order(v.grid()).unwrap(), vec![1, 2]);
        assert_eq!(
            slash_order(GridRectangulation::horizontal_cut().grid()).unwrap(),
            vec![2, 1]
        );
        assert!(block_delete_bottom_left(&CellGrid::empty()).is_err());
    }

    #[test]
    fn block_deletion_matches_fiber_definition() {
        for n in 1..=7 {
            for b in permutations(n).filter(|p| p.is_baxter()) {
                let g = rho(&b);
                assert_eq!(baxter_by_block_deletion(&g), baxter_of(&g), "{b}");
            }
        }
    }

    #[test]
    fn slash_representative_of_vertical_cut() {
        let v = GridRectangulation::vertical_cut();
        assert_eq!(slash_representative(&v), *v.grid());
    }

    #[test]
    fn too_large_fiber() {
        let g = rho(&Permutation::identity(11));
        assert!(matches!(fiber(&g), Err(Error::TooLarge { .. })));
        assert_eq!(baxter_of(&g), Permutation::identity(11));
    }
}

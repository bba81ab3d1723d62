use alloc::vec::Vec;

use super::{GridRectangulation, Staircase};
use crate::Permutation;

/// Tie-breaking rule for recovering a preimage of `rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtractionRule {
    /// Bottom element of the preimage; avoids `3-41-2` and `2-41-3`.
    Leftmost,
    /// Top element of the preimage; avoids `3-14-2` and `2-14-3`.
    Rightmost,
}

/// Labels of the rectangles that can be peeled off `stairs` next, ascending.
pub fn removable_labels(g: &GridRectangulation, stairs: &Staircase, removed: &[bool]) -> Vec<u8> {
    g.rects()
        .iter()
        .enumerate()
        .filter(|(i, r)| !removed[*i] && stairs.can_remove(r))
        .map(|(i, _)| (i + 1) as u8)
        .collect()
}

/// Walks the drawing order backwards, peeling one rectangle at a time off
/// the staircase.
///
/// Peeling always takes the largest (leftmost rule) or smallest (rightmost
/// rule) removable label. Late large labels mean few inversions, so the
/// leftmost rule lands on the weak-order minimum of the preimage.
pub fn staircase_extraction(g: &GridRectangulation, rule: ExtractionRule) -> Permutation {
    let n = g.n();
    let rects = g.rects();
    let mut stairs = Staircase::full(n);
    let mut removed = alloc::vec![false; n];
    let mut reversed = Vec::with_capacity(n);
    for _ in 0..n {
        let candidates = removable_labels(g, &stairs, &removed);
        let pick = match rule {
            ExtractionRule::Leftmost => candidates.last(),
            ExtractionRule::Rightmost => candidates.first(),
        };
        let label = *pick.expect("a canonical drawing always has a removable rectangle");
        let i = label as usize - 1;
        stairs.remove(&rects[i]);
        removed[i] = true;
        reversed.push(label);
    }
    reversed.reverse();
    Permutation::new(reversed).expect("each label peeled once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::{permutations, ClassName, PatternClass};
    use crate::rectangulation::rho;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let g = rho(&perm("4165372"));
        assert_eq!(staircase_extraction(&g, ExtractionRule::Leftmost), perm("4165372"));
        let g = rho(&perm("31426587"));
        assert_eq!(staircase_extraction(&g, ExtractionRule::Leftmost), perm("31426587"));
        // top of the preimage interval, found by listing the whole preimage
        assert_eq!(staircase_extraction(&g, ExtractionRule::Rightmost), perm("34681257"));
        let v = GridRectangulation::vertical_cut();
        assert_eq!(staircase_extraction(&v, ExtractionRule::Leftmost), perm("12"));
        assert_eq!(staircase_extraction(&v, ExtractionRule::Rightmost), perm("12"));
    }

    #[test]
    fn removable_means_redrawn_identically() {
        // peeling agrees with the forward insertion rule
        for n in 1..=6 {
            for p in permutations(n) {
                let g = rho(&p);
                let rects = g.rects();
                let mut stairs = Staircase::full(n);
                let mut removed = alloc::vec![false; n];
                for &label in p.word().iter().rev() {
                    let i = label as usize - 1;
                    for l in removable_labels(&g, &stairs, &removed) {
                        let r = &rects[l as usize - 1];
                        let mut without = stairs.clone();
                        without.remove(r);
                        assert_eq!(without.next_rect(l as usize), *r);
                    }
                    assert!(stairs.can_remove(&rects[i]), "{p}");
                    stairs.remove(&rects[i]);
                    removed[i] = true;
                }
            }
        }
    }

    #[test]
    fn extraction_lands_in_the_right_class() {
        let twisted = PatternClass::new(ClassName::TwistedBaxter);
        let right = PatternClass::new(ClassName::RightmostClass);
        for n in 1..=6 {
            for p in permutations(n) {
                let g = rho(&p);
                let l = staircase_extraction(&g, ExtractionRule::Leftmost);
                let r = staircase_extraction(&g, ExtractionRule::Rightmost);
                assert_eq!(rho(&l), g);
                assert_eq!(rho(&r), g);
                assert!(l.avoids(&twisted), "{l}");
                assert!(r.avoids(&right), "{r}");
            }
        }
    }
}

use proptest::prelude::*;

use diagrect::bijection::{baxter_by_block_deletion, fiber, rightmost_of, twisted_baxter_of};
use diagrect::flips::neighbors;
use diagrect::rectangulation::{canonicalize, rho, twin_trees};
use diagrect::{ClassName, GridRectangulation, PatternClass, Permutation};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn drawing_is_valid_and_canonical(p in permutation(12)) {
        let g = rho(&p);
        prop_assert!(GridRectangulation::from_grid(g.grid().clone()).is_ok());
        prop_assert_eq!(canonicalize(g.grid()).unwrap(), g);
    }

    #[test]
    fn extremes_redraw_the_same(p in permutation(12)) {
        let g = rho(&p);
        let low = twisted_baxter_of(&g);
        let high = rightmost_of(&g);
        prop_assert_eq!(rho(&low), g.clone());
        prop_assert_eq!(rho(&high), g.clone());
        prop_assert!(low.avoids(&PatternClass::new(ClassName::TwistedBaxter)));
        prop_assert!(high.avoids(&PatternClass::new(ClassName::RightmostClass)));
        prop_assert!(low.inversion_count() <= p.inversion_count());
        prop_assert!(p.inversion_count() <= high.inversion_count());
    }

    #[test]
    fn block_deletion_reads_a_baxter_preimage(p in permutation(12)) {
        let g = rho(&p);
        let b = baxter_by_block_deletion(&g);
        prop_assert!(b.is_baxter());
        prop_assert_eq!(rho(&b), g);
    }

    #[test]
    fn preimages_are_twin_tree_extensions(p in permutation(8)) {
        let g = rho(&p);
        let f = fiber(&g).unwrap();
        prop_assert!(f.contains(&p));
        prop_assert_eq!(twin_trees(&g).common_linear_extensions(), f.members);
    }

    #[test]
    fn flips_are_involutions(p in permutation(9)) {
        let g = rho(&p);
        for out in neighbors(&g) {
            let back = diagrect::flips::flip(&out.rect, out.edge).unwrap();
            prop_assert_eq!(back.rect, g.clone());
            prop_assert_eq!(back.edge, out.from);
        }
    }

    #[test]
    fn inverse_keeps_baxter(p in permutation(10)) {
        prop_assert_eq!(p.is_baxter(), p.inverse().is_baxter());
    }
}

//! The weak order on permutations and its restriction to Baxter permutations.
//!
//! `a <= b` when every inversion of `a` (a pair of values out of order) is
//! also an inversion of `b`. Covers swap two adjacent positions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::permutation::permutations;
use crate::rectangulation::rho;
use crate::{Error, GridRectangulation, Permutation};

fn is_subset(a: u128, b: u128) -> bool {
    a & !b == 0
}

pub fn weak_leq(a: &Permutation, b: &Permutation) -> bool {
    a.len() == b.len() && is_subset(a.inversion_mask(), b.inversion_mask())
}

/// Elements one adjacent position swap above `p`.
pub fn weak_upper_covers(p: &Permutation) -> Vec<Permutation> {
    (1..p.len())
        .filter(|&j| p.at(j) < p.at(j + 1))
        .map(|j| p.adjacent_position_swap(j).expect("position in range"))
        .collect()
}

/// A finite set of permutations ordered by the weak order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub elements: Vec<Permutation>,
    /// Cover pairs `(lower, upper)` as indices into `elements`.
    pub covers: BTreeSet<(usize, usize)>,
}

impl Poset {
    /// Restricts the weak order to `elements` and keeps only its covers.
    pub fn restricted(elements: Vec<Permutation>) -> Self {
        let masks: Vec<u128> = elements.iter().map(|p| p.inversion_mask()).collect();
        let mut by_height: Vec<usize> = (0..elements.len()).collect();
        by_height.sort_by_key(|&i| masks[i].count_ones());
        let mut covers = BTreeSet::new();
        for &a in &by_height {
            // minimal elements of the strict up-set of `a`: anything above
            // a smaller member is above a cover already found
            let mut found: Vec<usize> = Vec::new();
            for &b in &by_height {
                if b == a || !is_subset(masks[a], masks[b]) {
                    continue;
                }
                if found.iter().all(|&c| !is_subset(masks[c], masks[b])) {
                    found.push(b);
                }
            }
            covers.extend(found.into_iter().map(|b| (a, b)));
        }
        Poset { elements, covers }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        weak_leq(&self.elements[i], &self.elements[j])
    }

    /// Cover pairs as permutations.
    pub fn cover_pairs(&self) -> BTreeSet<(Permutation, Permutation)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect()
    }

    /// `reach[i]` lists every `j` reachable from `i` along covers, `i` included.
    pub fn reachability(&self) -> Vec<BTreeSet<usize>> {
        let mut succ = alloc::vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            succ[a].push(b);
        }
        (0..self.len())
            .map(|start| {
                let mut seen = BTreeSet::from([start]);
                let mut stack = alloc::vec![start];
                while let Some(x) = stack.pop() {
                    for &y in &succ[x] {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect()
    }
}

/// The lattice of diagonal rectangulations of size `n`: the weak order on
/// Baxter permutations.
pub fn drec(n: usize) -> Poset {
    Poset::restricted(permutations(n).filter(|p| p.is_baxter()).collect())
}

/// Cover pairs `(lower, upper)` of [`drec`].
pub fn drec_covers(n: usize) -> BTreeSet<(Permutation, Permutation)> {
    drec(n).cover_pairs()
}

/// Whether `a` and `b` are a cover pair of [`drec`], checked straight from
/// the definition: comparable, and no Baxter permutation strictly between.
///
/// Returns `Some(Less)` when `a` is covered by `b`, `Some(Greater)` when `b`
/// is covered by `a`, and `None` otherwise.
pub fn is_drec_cover(a: &Permutation, b: &Permutation) -> Result<Option<Ordering>, Error> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    for p in [a, b] {
        if !p.is_baxter() {
            return Err(Error::NotBaxter(alloc::format!("{p}")));
        }
    }
    let (low, high, dir) = if weak_leq(a, b) && a != b {
        (a, b, Ordering::Less)
    } else if weak_leq(b, a) && a != b {
        (b, a, Ordering::Greater)
    } else {
        return Ok(None);
    };
    let between = permutations(a.len())
        .any(|s| &s != low && &s != high && s.is_baxter() && weak_leq(low, &s) && weak_leq(&s, high));
    Ok(if between { None } else { Some(dir) })
}

/// Checks by brute force that every pair of permutations of size `n` has a
/// meet and a join in the weak order.
pub fn weak_order_is_lattice(n: usize) -> bool {
    let all: Vec<u128> = permutations(n).map(|p| p.inversion_mask()).collect();
    let unique_extreme = |bounds: Vec<u128>, upper: bool| {
        bounds.iter().any(|&m| {
            bounds
                .iter()
                .all(|&o| if upper { is_subset(m, o) } else { is_subset(o, m) })
        })
    };
    for (i, &x) in all.iter().enumerate() {
        for &y in &all[i + 1..] {
            let ub: Vec<u128> = all
                .iter()
                .copied()
                .filter(|&z| is_subset(x, z) && is_subset(y, z))
                .collect();
            let lb: Vec<u128> = all
                .iter()
                .copied()
                .filter(|&z| is_subset(z, x) && is_subset(z, y))
                .collect();
            if !unique_extreme(ub, true) || !unique_extreme(lb, false) {
                return false;
            }
        }
    }
    true
}

/// Groups all permutations of size `n` by their drawing.
pub fn fibers_of_size(n: usize) -> BTreeMap<GridRectangulation, Vec<Permutation>> {
    let mut out: BTreeMap<GridRectangulation, Vec<Permutation>> = BTreeMap::new();
    for p in permutations(n) {
        out.entry(rho(&p)).or_default().push(p);
    }
    out
}

/// Order on drawings induced by the weak order: `R <= R'` when some preimage
/// of `R` lies below some preimage of `R'`, closed under transitivity.
///
/// Returns the comparable pairs, including `R <= R`.
pub fn quotient_order(n: usize) -> BTreeSet<(GridRectangulation, GridRectangulation)> {
    let fibers = fibers_of_size(n);
    let keys: Vec<&GridRectangulation> = fibers.keys().collect();
    let masks: Vec<Vec<u128>> = fibers
        .values()
        .map(|f| f.iter().map(|p| p.inversion_mask()).collect())
        .collect();
    let k = keys.len();
    let mut succ = alloc::vec![Vec::new(); k];
    for i in 0..k {
        for j in 0..k {
            if i != j && masks[i].iter().any(|&x| masks[j].iter().any(|&y| is_subset(x, y))) {
                succ[i].push(j);
            }
        }
    }
    let mut out = BTreeSet::new();
    for start in 0..k {
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(x) = stack.pop() {
            for &y in &succ[x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        out.extend(seen.into_iter().map(|j| (keys[start].clone(), keys[j].clone())));
    }
    out
}

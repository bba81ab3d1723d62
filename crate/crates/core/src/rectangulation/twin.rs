use alloc::vec;
use alloc::vec::Vec;

use super::{staircase_extraction, ExtractionRule, GridRectangulation};
use crate::Permutation;

/// Binary search tree on the labels `1..=n`, children indexed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTree {
    pub root: u8,
    pub left: Vec<Option<u8>>,
    pub right: Vec<Option<u8>>,
    pub parent: Vec<Option<u8>>,
}

impl BinaryTree {
    /// Inserts the labels of `sequence` in order into an empty search tree.
    pub fn from_insertion(sequence: impl IntoIterator<Item = u8>) -> Self {
        let seq: Vec<u8> = sequence.into_iter().collect();
        let n = seq.len();
        let mut tree = BinaryTree {
            root: seq[0],
            left: vec![None; n + 1],
            right: vec![None; n + 1],
            parent: vec![None; n + 1],
        };
        for &x in &seq[1..] {
            let mut at = tree.root;
            loop {
                let slot = if x < at {
                    &mut tree.left[at as usize]
                } else {
                    &mut tree.right[at as usize]
                };
                match *slot {
                    Some(next) => at = next,
                    None => {
                        *slot = Some(x);
                        tree.parent[x as usize] = Some(at);
                        break;
                    }
                }
            }
        }
        tree
    }

    pub fn node_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn in_order(&self) -> Vec<u8> {
        fn walk(t: &BinaryTree, at: Option<u8>, out: &mut Vec<u8>) {
            if let Some(x) = at {
                walk(t, t.left[x as usize], out);
                out.push(x);
                walk(t, t.right[x as usize], out);
            }
        }
        let mut out = Vec::with_capacity(self.node_count());
        walk(self, Some(self.root), &mut out);
        out
    }

    /// `(parent, child)` pairs.
    pub fn links(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c as u8)))
    }
}

/// The two binary trees of a diagonal rectangulation.
///
/// In a preimage of `rho`, every node of `upper` comes after its children
/// and every node of `lower` comes before its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinTrees {
    pub upper: BinaryTree,
    pub lower: BinaryTree,
}

impl TwinTrees {
    /// All orders of the labels compatible with both trees, ascending.
    pub fn common_linear_extensions(&self) -> Vec<Permutation> {
        let n = self.upper.node_count();
        let mut succ: Vec<Vec<u8>> = vec![Vec::new(); n + 1];
        let mut indegree = vec![0usize; n + 1];
        let arcs = self.upper.links().map(|(p, c)| (c, p)).chain(self.lower.links());
        for (from, to) in arcs {
            succ[from as usize].push(to);
            indegree[to as usize] += 1;
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        extend(&succ, &mut indegree, &mut prefix, n, &mut out);
        out.sort();
        out
    }
}

fn extend(succ: &[Vec<u8>], indegree: &mut [usize], prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation::new(prefix.clone()).expect("linear extension"));
        return;
    }
    for x in 1..=n as u8 {
        if indegree[x as usize] != 0 || prefix.contains(&x) {
            continue;
        }
        for &y in &succ[x as usize] {
            indegree[y as usize] -= 1;
        }
        prefix.push(x);
        extend(succ, indegree, prefix, n, out);
        prefix.pop();
        for &y in &succ[x as usize] {
            indegree[y as usize] += 1;
        }
    }
}

/// Twin trees of `g`: search trees of any preimage read right-to-left
/// (`upper`) and left-to-right (`lower`).
pub fn twin_trees(g: &GridRectangulation) -> TwinTrees {
    let p = staircase_extraction(g, ExtractionRule::Leftmost);
    TwinTrees {
        upper: BinaryTree::from_insertion(p.word().iter().rev().copied()),
        lower: BinaryTree::from_insertion(p.word().iter().copied()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectangulation::rho;

    #[test]
    fn search_tree_in_order() {
        let t = BinaryTree::from_insertion([4, 1, 6, 5, 3, 7, 2]);
        assert_eq!(t.in_order(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(t.root, 4);
        assert_eq!(t.parent[2], Some(3));
    }

    #[test]
    fn two_rectangle_trees() {
        let v = twin_trees(&GridRectangulation::vertical_cut());
        assert_eq!(v.common_linear_extensions(), vec!["12".parse().unwrap()]);
        let h = twin_trees(&GridRectangulation::horizontal_cut());
        assert_eq!(h.common_linear_extensions(), vec!["21".parse().unwrap()]);
    }

    #[test]
    fn running_example_extensions() {
        let g = rho(&"4165372".parse().unwrap());
        let ext = twin_trees(&g).common_linear_extensions();
        assert!(ext.contains(&"4165372".parse().unwrap()));
        assert!(ext.contains(&"4651372".parse().unwrap()));
        assert!(ext.iter().all(|p| rho(p) == g));
    }
}

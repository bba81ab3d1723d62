//! The graph of flips between all diagonal rectangulations of one size, and
//! checks of its edges against independent descriptions.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bijection::{baxter_by_block_deletion, baxter_of, slash_order, slash_representative};
use crate::flips::neighbors;
use crate::order::{drec_covers, fibers_of_size};
use crate::permutation::{enumerate_avoiders, permutations};
use crate::rectangulation::{canonicalize, rho, segment_signature};
use crate::{ClassName, EdgeId, FlipClass, GridRectangulation, PatternClass, Permutation};

/// All flips between two drawings through edges of one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    /// Node indices, `a < b`.
    pub a: usize,
    pub b: usize,
    pub class: FlipClass,
    /// Number of distinct edges of node `a` whose flip leads to `b`.
    pub multiplicity: usize,
    /// The flipped edges of node `a`, ascending.
    pub flipped: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraph {
    pub n: usize,
    /// Baxter permutations in lexicographic order.
    pub nodes: Vec<Permutation>,
    /// Sorted by `(a, b, class)`.
    pub edges: Vec<GraphEdge>,
}

/// Builds the flip graph on the `n`-rectangle drawings.
pub fn build(n: usize) -> FlipGraph {
    let nodes: Vec<Permutation> = permutations(n).filter(|p| p.is_baxter()).collect();
    let index: BTreeMap<GridRectangulation, usize> = nodes.iter().enumerate().map(|(i, p)| (rho(p), i)).collect();
    let mut merged: BTreeMap<(usize, usize, FlipClass), Vec<EdgeId>> = BTreeMap::new();
    for (grid, &i) in &index {
        for out in neighbors(grid) {
            let j = index[&out.rect];
            if i < j {
                merged.entry((i, j, out.class)).or_default().push(out.from);
            }
        }
    }
    let edges = merged
        .into_iter()
        .map(|((a, b, class), mut flipped)| {
            flipped.sort();
            GraphEdge {
                a,
                b,
                class,
                multiplicity: flipped.len(),
                flipped,
            }
        })
        .collect();
    FlipGraph { n, nodes, edges }
}

type Pair = (Permutation, Permutation);

fn pair(a: &Permutation, b: &Permutation) -> Pair {
    if a < b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl FlipGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Unordered node pairs joined by an edge whose class passes `keep`.
    pub fn pairs(&self, keep: impl Fn(FlipClass) -> bool) -> BTreeSet<Pair> {
        self.edges
            .iter()
            .filter(|e| keep(e.class))
            .map(|e| pair(&self.nodes[e.a], &self.nodes[e.b]))
            .collect()
    }

    pub fn adjacency(&self, keep: impl Fn(FlipClass) -> bool) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.nodes.len()];
        for e in self.edges.iter().filter(|e| keep(e.class)) {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for list in &mut adj {
            list.sort();
            list.dedup();
        }
        adj
    }
}

/// Outcome of comparing two descriptions of the same set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub n: usize,
    /// Number of items compared.
    pub compared: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &'static str, n: usize) -> Self {
        Report {
            name,
            n,
            compared: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn compare_sets(&mut self, left_name: &str, left: &BTreeSet<Pair>, right_name: &str, right: &BTreeSet<Pair>) {
        self.compared += left.union(right).count();
        for (a, b) in left.difference(right) {
            self.failures
                .push(format!("{a} {b}: in {left_name}, not in {right_name}"));
        }
        for (a, b) in right.difference(left) {
            self.failures
                .push(format!("{a} {b}: in {right_name}, not in {left_name}"));
        }
    }
}

/// Baxter pairs that differ by exchanging two consecutive values.
pub fn consecutive_swap_pairs(n: usize) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for p in permutations(n).filter(|p| p.is_baxter()) {
        for k in 1..n {
            let q = p.consecutive_value_swap(k).expect("value in range");
            if q.is_baxter() {
                out.insert(pair(&p, &q));
            }
        }
    }
    out
}

fn drec_cover_pairs(n: usize) -> BTreeSet<Pair> {
    drec_covers(n).into_iter().map(|(a, b)| pair(&a, &b)).collect()
}

/// Barcelona flips are exactly the exchanges of two consecutive values
/// between Baxter permutations; the two values are the labels of the two
/// rectangles beside the flipped edge.
pub fn verify_theorem_main(fg: &FlipGraph) -> Report {
    let mut report = Report::new("main", fg.n);
    let flips = fg.pairs(FlipClass::is_barcelona);
    report.compare_sets(
        "barcelona flips",
        &flips,
        "consecutive swaps",
        &consecutive_swap_pairs(fg.n),
    );
    for e in fg.edges.iter().filter(|e| e.class.is_barcelona()) {
        let (p, q) = (&fg.nodes[e.a], &fg.nodes[e.b]);
        for id in &e.flipped {
            report.compared += 1;
            let swapped = id.high == id.low + 1 && p.consecutive_value_swap(id.low as usize).ok().as_ref() == Some(q);
            if !swapped {
                report
                    .failures
                    .push(format!("{p} {q}: flipped edge {id} does not swap its labels"));
            }
        }
    }
    report
}

/// LR flips (simple and `RotationLR`) are exactly the covers of the lattice of Baxter
/// permutations.
pub fn verify_theorem_lr(fg: &FlipGraph) -> Report {
    let mut report = Report::new("lr", fg.n);
    let flips = fg.pairs(FlipClass::is_lr);
    report.compare_sets("lr flips", &flips, "lattice covers", &drec_cover_pairs(fg.n));
    report
}

/// Simple flips are the pairs that are both lattice covers and consecutive
/// swaps; all flips together are the pairs that are either.
pub fn verify_characterization(fg: &FlipGraph) -> Report {
    let mut report = Report::new("char", fg.n);
    let covers = drec_cover_pairs(fg.n);
    let swaps = consecutive_swap_pairs(fg.n);
    let both: BTreeSet<Pair> = covers.intersection(&swaps).cloned().collect();
    let either: BTreeSet<Pair> = covers.union(&swaps).cloned().collect();
    report.compare_sets(
        "simple flips",
        &fg.pairs(|c| c == FlipClass::Simple),
        "covers and swaps",
        &both,
    );
    report.compare_sets("all flips", &fg.pairs(|_| true), "covers or swaps", &either);
    report
}

/// Node count against the Baxter count and against the number of distinct
/// drawings of all permutations.
pub fn verify_counts(fg: &FlipGraph) -> Report {
    let mut report = Report::new("counts", fg.n);
    let baxter = enumerate_avoiders(fg.n, &PatternClass::new(ClassName::Baxter)).len();
    let drawings = fibers_of_size(fg.n).len();
    report.compared = 3;
    if fg.node_count() != baxter || baxter != drawings {
        report.failures.push(format!(
            "nodes {} baxter avoiders {baxter} distinct drawings {drawings}",
            fg.node_count()
        ));
    }
    for p in &fg.nodes {
        report.compared += 1;
        if baxter_of(&rho(p)) != *p {
            report.failures.push(format!("{p}: not recovered from its drawing"));
        }
    }
    report
}

/// Checks the anti-diagonal representative of every drawing of size `n`.
///
/// With `p` the Baxter permutation of `g`, relabelling `rho_prime(p^-1)` by
/// `k -> p(k)` must give the same floorplan as `g` (same segments, same
/// rectangles on each side), block deletion on it must read `p`, and its
/// mirror image must have Baxter permutation `p^-1`.
pub fn verify_inversion(n: usize) -> Report {
    let mut report = Report::new("inversion", n);
    for p in permutations(n).filter(|p| p.is_baxter()) {
        report.compared += 1;
        let g = rho(&p);
        let slash = slash_representative(&g).relabel(|k| p.at(k as usize));
        if segment_signature(&slash) != segment_signature(g.grid()) {
            report.failures.push(format!("{p}: different floorplan"));
        }
        match slash_order(&slash) {
            Ok(order) if order == p.word() => {}
            other => report.failures.push(format!("{p}: block deletion reads {other:?}")),
        }
        let mirror = slash_representative(&g).reflect_horizontal();
        match canonicalize(&mirror) {
            Ok(m) if baxter_of(&m) == p.inverse() && baxter_by_block_deletion(&m) == p.inverse() => {}
            Ok(m) => report.failures.push(format!("{p}: mirror reads {}", baxter_of(&m))),
            Err(e) => report.failures.push(format!("{p}: mirror not diagonal: {e}")),
        }
    }
    report
}

/// Number of connected components using only simple flips.
pub fn simple_flip_components(fg: &FlipGraph) -> usize {
    components(&fg.adjacency(|c| c == FlipClass::Simple))
}

fn components(adj: &[Vec<usize>]) -> usize {
    let mut seen = alloc::vec![false; adj.len()];
    let mut count = 0;
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = alloc::vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

#[derive(Clone, Debug, PartialEq)]
pub struct Metrics {
    pub nodes: usize,
    /// Distinct adjacent node pairs.
    pub edges: usize,
    /// Longest shortest path; `None` when disconnected.
    pub diameter: Option<usize>,
    pub degree_min: usize,
    pub degree_max: usize,
    pub degree_mean: f64,
    pub connected: bool,
}

pub fn metrics(fg: &FlipGraph) -> Metrics {
    let adj = fg.adjacency(|_| true);
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let connected = components(&adj) <= 1;
    let diameter = connected.then(|| {
        (0..adj.len())
            .map(|s| {
                let mut dist = alloc::vec![usize::MAX; adj.len()];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                let mut far = 0;
                while let Some(x) = queue.pop_front() {
                    far = dist[x];
                    for &y in &adj[x] {
                        if dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                far
            })
            .max()
            .unwrap_or(0)
    });
    let total: usize = degrees.iter().sum();
    Metrics {
        nodes: adj.len(),
        edges: total / 2,
        diameter,
        degree_min: degrees.iter().copied().min().unwrap_or(0),
        degree_max: degrees.iter().copied().max().unwrap_or(0),
        degree_mean: if adj.is_empty() {
            0.0
        } else {
            total as f64 / adj.len() as f64
        },
        connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_rectangle() {
        let fg = build(1);
        assert_eq!(fg.node_count(), 1);
        assert!(fg.edges.is_empty());
        assert_eq!(simple_flip_components(&fg), 1);
        assert_eq!(metrics(&fg).diameter, Some(0));
    }

    #[test]
    fn two_rectangles() {
        let fg = build(2);
        assert_eq!(
            fg.nodes,
            alloc::vec!["12".parse().unwrap(), "21".parse::<Permutation>().unwrap()]
        );
        assert_eq!(fg.edges.len(), 1);
        assert_eq!(fg.edges[0].class, FlipClass::Simple);
        assert_eq!(fg.edges[0].multiplicity, 1);
        assert_eq!(metrics(&fg).diameter, Some(1));
        for r in [
            verify_theorem_main(&fg),
            verify_theorem_lr(&fg),
            verify_characterization(&fg),
        ] {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn corrupted_edge_is_reported() {
        let mut fg = build(3);
        let e = fg.edges.iter_mut().find(|e| e.class == FlipClass::RotationLR).unwrap();
        e.class = FlipClass::RotationBarcelona;
        let lr = verify_theorem_lr(&fg);
        assert_eq!(lr.failures.len(), 1, "{lr:?}");
        assert!(lr.failures[0].contains("in lattice covers, not in lr flips"));
        assert!(!verify_theorem_main(&fg).passed());
    }
}

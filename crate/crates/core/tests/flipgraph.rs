use diagrect::flipgraph::{
    build, metrics, simple_flip_components, verify_characterization, verify_counts, verify_inversion,
    verify_theorem_lr, verify_theorem_main,
};
use diagrect::flips::neighbors;
use diagrect::permutation::enumerate_avoiders;
use diagrect::rectangulation::rho;
use diagrect::{ClassName, FlipClass, PatternClass};

#[test]
fn node_counts() {
    let expected = [1, 2, 6, 22, 92, 422];
    for (n, &count) in (1..=6).zip(&expected) {
        let fg = build(n);
        assert_eq!(fg.node_count(), count);
        assert!(verify_counts(&fg).passed());
    }
}

#[test]
fn every_report_passes_up_to_six() {
    for n in 1..=6 {
        let fg = build(n);
        for report in [
            verify_theorem_main(&fg),
            verify_theorem_lr(&fg),
            verify_characterization(&fg),
            verify_counts(&fg),
            verify_inversion(n),
        ] {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(n == 1 || report.compared > 0, "{}", report.name);
        }
    }
}

#[test]
fn barcelona_flips_at_seven() {
    let fg = build(7);
    assert_eq!(fg.node_count(), 2074);
    let report = verify_theorem_main(&fg);
    assert!(report.passed(), "{:?}", report.failures);
}

#[test]
fn connected_with_linear_diameter() {
    for n in 1..=7 {
        let m = metrics(&build(n));
        assert!(m.connected, "n = {n}");
        let d = m.diameter.unwrap();
        assert!(d <= 8 * n, "n = {n}: diameter {d}");
    }
    let m = metrics(&build(2));
    assert_eq!((m.diameter, m.degree_min, m.degree_max), (Some(1), 1, 1));
}

#[test]
fn simple_flip_components_follow_segment_classes_one_size_down() {
    // observed: the simple-flip classes of n rectangles are as many as the
    // {3-41-2, 2-14-3} avoiders of size n - 1
    let s = PatternClass::new(ClassName::SClass);
    assert_eq!(simple_flip_components(&build(1)), 1);
    for n in 2..=7 {
        let fg = build(n);
        assert_eq!(
            simple_flip_components(&fg),
            enumerate_avoiders(n - 1, &s).len(),
            "n = {n}"
        );
    }
}

#[test]
fn parallel_flips_do_not_occur() {
    for n in 2..=6 {
        assert!(build(n)
            .edges
            .iter()
            .all(|e| e.multiplicity == 1 && e.flipped.len() == 1));
    }
}

#[test]
fn rebuilding_a_node_reproduces_its_edges() {
    let fg = build(5);
    assert_eq!(fg, build(5));
    for (i, p) in fg.nodes.iter().enumerate() {
        let mut from_graph: Vec<(String, FlipClass)> = fg
            .edges
            .iter()
            .filter(|e| e.a == i || e.b == i)
            .map(|e| (fg.nodes[e.a + e.b - i].to_string(), e.class))
            .collect();
        let mut direct: Vec<(String, FlipClass)> = neighbors(&rho(p))
            .into_iter()
            .map(|o| (diagrect::bijection::baxter_of(&o.rect).to_string(), o.class))
            .collect();
        from_graph.sort();
        direct.sort();
        assert_eq!(from_graph, direct, "{p}");
    }
}

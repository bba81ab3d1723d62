//! JSON and Graphviz exports of flip graphs.

use std::fmt::Write as _;

use diagrect::flipgraph::FlipGraph;
use diagrect::FlipClass;
use serde::Serialize;

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    nodes: Vec<String>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
struct EdgeJson {
    a: String,
    b: String,
    class: &'static str,
    multiplicity: usize,
}

pub fn to_json(fg: &FlipGraph) -> String {
    let doc = GraphJson {
        n: fg.n,
        nodes: fg.nodes.iter().map(|p| p.to_string()).collect(),
        edges: fg
            .edges
            .iter()
            .map(|e| EdgeJson {
                a: fg.nodes[e.a].to_string(),
                b: fg.nodes[e.b].to_string(),
                class: e.class.as_str(),
                multiplicity: e.multiplicity,
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph serializes");
    out.push('\n');
    out
}

pub fn class_color(class: FlipClass) -> &'static str {
    match class {
        FlipClass::Simple => "green",
        FlipClass::RotationLR => "blue",
        FlipClass::RotationBarcelona => "red",
        _ => "black",
    }
}

pub fn to_dot(fg: &FlipGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph flips_{} {{", fg.n).unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for p in &fg.nodes {
        writeln!(out, "  \"{p}\";").unwrap();
    }
    for e in &fg.edges {
        write!(
            out,
            "  \"{}\" -- \"{}\" [color={}, class=\"{}\"",
            fg.nodes[e.a],
            fg.nodes[e.b],
            class_color(e.class),
            e.class.as_str()
        )
        .unwrap();
        if e.multiplicity > 1 {
            write!(out, ", penwidth={}", e.multiplicity).unwrap();
        }
        writeln!(out, "];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagrect::flipgraph::build;

    #[test]
    fn two_rectangles() {
        let fg = build(2);
        let json: serde_json::Value = serde_json::from_str(&to_json(&fg)).unwrap();
        assert_eq!(json["nodes"], serde_json::json!(["12", "21"]));
        assert_eq!(json["edges"][0]["class"], "simple");
        let dot = to_dot(&fg);
        assert!(dot.contains("\"12\" -- \"21\" [color=green, class=\"simple\"];"));
    }
}

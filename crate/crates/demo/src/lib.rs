//! Browser demo: analyze a graph document, draw it, realize a boundary graph
//! and count isomorphism classes. Every export takes and returns JSON text.
//!
//! The `*_json` functions are plain Rust and are what the native tests call;
//! the `#[wasm_bindgen]` exports wrap them.

use std::fmt::Write as _;

use ctmgraph::automorphism::aut_group;
use ctmgraph::boundary::boundary;
use ctmgraph::enumeration::{connected_counts, euler_transform, EnumerationRequest};
use ctmgraph::fixtures::{self, Fixture};
use ctmgraph::invariants::{faces, gurau_degree, is_melon};
use ctmgraph::io::{self as gio, GraphDocument, GraphValue};
use ctmgraph::realization::realize;
use ctmgraph::DisconnectedGraph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest vertex count offered by the counting widget.
pub const MAX_DEMO_VERTICES: usize = 10;

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn load(text: &str) -> Result<GraphValue, String> {
    let t = text.trim();
    if let Some(name) = t.strip_prefix('@') {
        return match fixtures::named(name) {
            Some(Fixture::Closed(g)) => Ok(GraphValue::Closed(g)),
            Some(Fixture::Open(g)) => Ok(GraphValue::Open(g)),
            None => Err(format!("unknown fixture @{name}")),
        };
    }
    gio::parse(t).map_err(|e| e.to_string())
}

fn closed_view(v: &GraphValue) -> ctmgraph::ColoredGraph {
    match v {
        GraphValue::Open(g) => g.to_closed().unwrap_or_else(|| g.residue()),
        GraphValue::Closed(g) => g.clone(),
    }
}

/// Document text for a built-in fixture.
pub fn fixture_json(name: &str) -> Result<String, String> {
    let v = load(&format!("@{name}"))?;
    Ok(gio::serialize_value(&v))
}

/// Invariants of a document (or `@fixture`). Open graphs with legs are
/// analyzed through their colors-1..D residue.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let v = load(text)?;
    let g = closed_view(&v);
    let mut out = json!({
        "colors": g.rank(),
        "vertices": g.vertex_count(),
        "components": g.component_count(),
        "canonical": g.canonical_code().to_string(),
        "automorphisms": aut_group(&g).order.to_string(),
        "total_faces": faces(&g).total(),
    });
    if let GraphValue::Open(o) = &v {
        out["external_legs"] = json!(o.external_leg_count());
        out["boundary"] = json!(boundary(o).graph.canonical_code().to_string());
    }
    if g.rank() >= 3 && !g.is_empty() {
        let r = gurau_degree(&g).map_err(|e| e.to_string())?;
        out["degree"] = json!(r.omega.to_string());
        out["jacket_genera"] = json!(r.jackets.iter().map(|j| j.genus).collect::<Vec<_>>());
        out["melon"] = json!(is_melon(&g).map_err(|e| e.to_string())?);
    }
    Ok(out.to_string())
}

/// SVG drawing: whites on the top row, blacks below, one stroke color per
/// graph color, color-0 propagators dashed.
pub fn svg(text: &str) -> Result<String, String> {
    let v = load(text)?;
    let g = v.residue();
    let n = g.half_order();
    let (dx, top, bottom) = (70.0, 40.0, 200.0);
    let width = (n.max(1) as f64) * dx + 40.0;
    let x = |i: usize| 40.0 + i as f64 * dx;
    let mut s = String::new();
    let _ = write!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} 240" width="{width}" height="240">"#
    );
    let rank = g.rank();
    for c in 1..=rank {
        let stroke = PALETTE[(c - 1) % PALETTE.len()];
        let bend = (c as f64 - (rank as f64 + 1.0) / 2.0) * 18.0;
        for w in 0..n {
            let b = g.black_of(c, w);
            let (x1, x2) = (x(w), x(b));
            let mx = (x1 + x2) / 2.0 + bend;
            let _ = write!(
                s,
                r#"<path d="M{x1},{top} Q{mx},{mid} {x2},{bottom}" stroke="{stroke}" fill="none" stroke-width="2"><title>color {c}</title></path>"#,
                mid = (top + bottom) / 2.0
            );
        }
    }
    if let GraphValue::Open(o) = &v {
        for [w, b] in o.prop0_pairs() {
            let _ = write!(
                s,
                r##"<path d="M{},{top} C{},{} {},{} {},{bottom}" stroke="#555" stroke-dasharray="5,4" fill="none"><title>color 0</title></path>"##,
                x(w),
                x(w) - 30.0,
                top - 30.0,
                x(b) - 30.0,
                bottom + 30.0,
                x(b)
            );
        }
    }
    for i in 0..n {
        let _ = write!(
            s,
            r#"<circle cx="{}" cy="{top}" r="9" fill="white" stroke="black" stroke-width="2"><title>white {i}</title></circle>"#,
            x(i)
        );
        let _ = write!(
            s,
            r#"<circle cx="{}" cy="{bottom}" r="9" fill="black"><title>black {i}</title></circle>"#,
            x(i)
        );
    }
    s.push_str("</svg>");
    Ok(s)
}

/// Realizes a closed boundary graph as a quartic melonic Feynman graph.
pub fn realize_json(text: &str) -> Result<String, String> {
    let b = closed_view(&load(text)?);
    let d = DisconnectedGraph::from_graph(&b);
    let g = realize(&d).map_err(|e| e.to_string())?;
    let bd = boundary(&g).graph;
    Ok(json!({
        "graph": serde_json::to_value(GraphDocument::from_open(&g)).expect("documents serialize"),
        "vertices": 2 * g.half_order(),
        "external_legs": g.external_leg_count(),
        "boundary_matches": bd.canonical_code() == d.canonical_code(),
    })
    .to_string())
}

/// Connected and total class counts for `2, 4, …, max_vertices` vertices.
pub fn counts_json(colors: usize, max_vertices: usize) -> Result<String, String> {
    if max_vertices > MAX_DEMO_VERTICES {
        return Err(format!("at most {MAX_DEMO_VERTICES} vertices in the demo"));
    }
    let pmax = max_vertices / 2;
    if pmax == 0 {
        return Ok(json!({ "connected": [], "all": [] }).to_string());
    }
    EnumerationRequest::connected(colors, pmax)
        .check()
        .map_err(|e| e.to_string())?;
    let conn = connected_counts(colors, pmax, None).map_err(|e| e.to_string())?;
    let all = euler_transform(&conn);
    let strings = |v: &[u128]| v.iter().map(|x| Value::from(x.to_string())).collect::<Vec<_>>();
    Ok(json!({ "connected": strings(&conn), "all": strings(&all[1..]) }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fixture_names() -> String {
    json!(fixtures::NAMES).to_string()
}

#[wasm_bindgen]
pub fn fixture(name: &str) -> Result<String, JsError> {
    js(fixture_json(name))
}

#[wasm_bindgen]
pub fn analyze_graph(text: &str) -> Result<String, JsError> {
    js(analyze_json(text))
}

#[wasm_bindgen]
pub fn draw_svg(text: &str) -> Result<String, JsError> {
    js(svg(text))
}

#[wasm_bindgen]
pub fn realize_boundary(text: &str) -> Result<String, JsError> {
    js(realize_json(text))
}

#[wasm_bindgen]
pub fn enumerate_counts(colors: usize, max_vertices: usize) -> Result<String, JsError> {
    js(counts_json(colors, max_vertices))
}

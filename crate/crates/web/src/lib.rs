//! Browser bindings. Every export takes and returns strings; the `*_impl`
//! functions carry the logic so they can be tested natively.

use orbifano::mmp::Mode;
use orbifano::registry::Registry;
use orbifano::svg::render_vertices_svg;
use orbifano::tools::{analyze_polygon, mmp_trees, parse_vertices};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn registry() -> Result<Registry, String> {
    Registry::embedded().map_err(|e| e.to_string())
}

/// The 26 polygons of the registry as `[{id, vertices, family}]`.
pub fn polygons_impl() -> Result<String, String> {
    let reg = registry()?;
    let rows: Vec<_> = reg
        .polygons
        .iter()
        .map(|p| {
            let vs: Vec<String> = p.vertices.iter().map(|v| format!("{},{}", v[0], v[1])).collect();
            json!({ "id": p.id, "vertices": vs.join(";"), "family": p.deforms_to })
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("json"))
}

/// `{analysis, svg}` for vertices written as "x,y;x,y;...".
pub fn analyze_impl(vertices: &str) -> Result<String, String> {
    let reg = registry()?;
    let pts = parse_vertices(vertices).map_err(|e| e.to_string())?;
    let a = analyze_polygon(&reg, &pts).map_err(|e| e.to_string())?;
    let svg = render_vertices_svg(&pts).map_err(|e| e.to_string())?;
    Ok(json!({ "analysis": a, "text": a.render_text(), "svg": svg }).to_string())
}

/// Text rendering of the MMP trees with `k` points of type 1/3(1,1).
pub fn mmp_tree_impl(k: u32, mode: &str) -> Result<String, String> {
    let reg = registry()?;
    let mode: Mode = mode.parse().map_err(|e: orbifano::Error| e.to_string())?;
    let trees = mmp_trees(&reg, k, mode).map_err(|e| e.to_string())?;
    Ok(trees.iter().map(|(f, t)| format!("{}\n{}", f, t.render_text())).collect::<Vec<_>>().join("\n"))
}

#[wasm_bindgen]
pub fn polygons() -> Result<String, JsValue> {
    polygons_impl().map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(vertices: &str) -> Result<String, JsValue> {
    analyze_impl(vertices).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn mmp_tree(k: u32, mode: &str) -> Result<String, JsValue> {
    mmp_tree_impl(k, mode).map_err(|e| JsValue::from_str(&e))
}

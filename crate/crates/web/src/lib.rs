//! Browser bindings. Each operation has a plain function returning JSON text,
//! used by the tests, and a thin `wasm_bindgen` wrapper used by the page.

use mixspec::catalog::parse_named;
use mixspec::classify::{classify, forbidden_scan, in_class_g, subclass, ForbiddenWitness, Subclass};
use mixspec::dioph::{det_direct, SignPattern};
use mixspec::linalg::IntMatrix;
use mixspec::{
    expand, parse_graph6, quotient_matrix, spectral_summary, write_graph6, ExtensionType, Graph, SpectralSummary,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct GraphView {
    graph6: String,
    order: usize,
    edges: Vec<(usize, usize)>,
    /// Cell index of every vertex, when the graph came from an extension.
    cells: Vec<usize>,
}

#[derive(Serialize)]
struct Expansion {
    graph: GraphView,
    ext_type: String,
    quotient: Vec<Vec<String>>,
    spectrum: SpectralSummary,
    in_class_g: bool,
}

#[derive(Serialize)]
struct LabelView {
    family: String,
    text: String,
}

#[derive(Serialize)]
struct Classification {
    graph: GraphView,
    spectrum: SpectralSummary,
    in_class_g: bool,
    subclass: Subclass,
    labels: Vec<LabelView>,
    witnesses: Vec<ForbiddenWitness>,
}

#[derive(Serialize)]
struct PatternReport {
    pattern: String,
    params: [i64; 4],
    formula_det_q: String,
    formula_det_q_plus_i: String,
    det_q: i128,
    det_q_plus_i: i128,
    /// Determinants of the quotient matrix itself, when the extension fits in 62 vertices.
    direct: Option<(i128, i128)>,
    expansion: Option<Expansion>,
}

fn view(g: &Graph, cells: Vec<usize>) -> GraphView {
    GraphView { graph6: write_graph6(g), order: g.order(), edges: g.edges().collect(), cells }
}

fn matrix_text(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.order()).map(|i| (0..m.order()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn graph_from_text(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    parse_named(text)
        .or_else(|_| parse_graph6(text))
        .map_err(|e| format!("`{text}` is neither a graph name nor graph6: {e}"))
}

fn expansion(base: &Graph, t: &ExtensionType) -> Result<Expansion, String> {
    let g = expand(base, t).map_err(|e| e.to_string())?;
    let cells = t.cell_sizes().enumerate().flat_map(|(i, s)| std::iter::repeat_n(i, s)).collect();
    Ok(Expansion {
        quotient: matrix_text(&quotient_matrix(base, t).map_err(|e| e.to_string())?),
        spectrum: spectral_summary(&g).map_err(|e| e.to_string())?,
        in_class_g: in_class_g(&g),
        graph: view(&g, cells),
        ext_type: t.to_string(),
    })
}

/// Expands `base` (a name such as `P4` or a graph6 string) by the type `ext_type`.
pub fn expand_report(base: &str, ext_type: &str) -> Result<String, String> {
    let g = graph_from_text(base)?;
    let t: ExtensionType = ext_type.parse().map_err(|e: mixspec::Error| e.to_string())?;
    serde_json::to_string(&expansion(&g, &t)?).map_err(|e| e.to_string())
}

/// Spectrum, family labels and forbidden subgraphs of a graph given as graph6 or by name.
pub fn classify_report(graph: &str) -> Result<String, String> {
    let g = graph_from_text(graph)?;
    let report = Classification {
        spectrum: spectral_summary(&g).map_err(|e| e.to_string())?,
        in_class_g: in_class_g(&g),
        subclass: subclass(&g).map_err(|e| e.to_string())?,
        labels: classify(&g)
            .into_iter()
            .map(|l| LabelView { family: l.family.to_string(), text: l.to_string() })
            .collect(),
        witnesses: forbidden_scan(&g),
        graph: view(&g, Vec::new()),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Determinants of the quotient matrix of a path extension with the given sign pattern.
pub fn pattern_report(pattern: &str, p: i64, q: i64, r: i64, s: i64) -> Result<String, String> {
    let sp: SignPattern = pattern.parse().map_err(|e: mixspec::Error| e.to_string())?;
    let params = [p, q, r, s];
    let (f0, f1) = sp.formulas().map_err(|e| e.to_string())?;
    if params.iter().any(|&x| x < 1) {
        return Err("parameters must be positive".to_string());
    }
    let (d0, d1) = (f0.eval(params), f1.eval(params));
    let fits = params.iter().sum::<i64>() <= mixspec::MAX_ORDER as i64;
    let (direct, expansion) = if fits {
        let t = sp.extension_type(params).map_err(|e| e.to_string())?;
        let base = parse_named("P4").map_err(|e| e.to_string())?;
        (Some(det_direct(&sp, params).map_err(|e| e.to_string())?), Some(expansion(&base, &t)?))
    } else {
        (None, None)
    };
    let report = PatternReport {
        pattern: sp.to_string(),
        params,
        formula_det_q: f0.to_string(),
        formula_det_q_plus_i: f1.to_string(),
        det_q: d0,
        det_q_plus_i: d1,
        direct,
        expansion,
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Sign patterns offered by the explorer.
pub fn pattern_names() -> String {
    let names: Vec<String> = SignPattern::all().iter().map(ToString::to_string).collect();
    serde_json::to_string(&names).expect("strings serialize")
}

#[wasm_bindgen(js_name = expandReport)]
pub fn expand_report_js(base: &str, ext_type: &str) -> Result<String, JsError> {
    expand_report(base, ext_type).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classifyReport)]
pub fn classify_report_js(graph: &str) -> Result<String, JsError> {
    classify_report(graph).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = patternReport)]
pub fn pattern_report_js(pattern: &str, p: i32, q: i32, r: i32, s: i32) -> Result<String, JsError> {
    pattern_report(pattern, p.into(), q.into(), r.into(), s.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = patternNames)]
pub fn pattern_names_js() -> String {
    pattern_names()
}

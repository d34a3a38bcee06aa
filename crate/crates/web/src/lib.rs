//! Browser bindings: graph properties with a longest cycle to highlight,
//! single-vertex blow-ups and family members, all exchanged as JSON text.
//!
//! Build with `wasm-pack build --target web crates/web`, serve `crates/web`
//! over HTTP and open `www/index.html`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use htgraph::blowup::{blow_up, verify_lemma1, verify_lemma2, LemmaReport};
use htgraph::certificate::PropertyCertificate;
use htgraph::families::{cubic_family, quartic_family, SeedSet};
use htgraph::{graph6, Graph};

/// Largest graph the page will analyse; keeps the exact solvers interactive.
pub const VIEW_LIMIT: usize = 30;

/// A graph ready for drawing, with its property certificate.
#[derive(Debug, Serialize)]
pub struct GraphView {
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    pub certificate: PropertyCertificate,
}

#[derive(Debug, Serialize)]
pub struct BlowupView {
    pub view: GraphView,
    /// Labels of the new clique vertices.
    pub clique: Vec<usize>,
    pub source_circumference: usize,
    /// Lemma check for degree 3 and 4 vertices.
    pub lemma: Option<LemmaSummary>,
}

#[derive(Debug, Serialize)]
pub struct LemmaSummary {
    pub hypotheses: bool,
    pub conclusions: bool,
    pub delta: isize,
    pub v_prime: Option<usize>,
}

impl From<&LemmaReport> for LemmaSummary {
    fn from(r: &LemmaReport) -> Self {
        LemmaSummary {
            hypotheses: r.hypotheses_hold(),
            conclusions: r.conclusions_hold(),
            delta: r.delta(),
            v_prime: r.v_prime,
        }
    }
}

fn parse(text: &str) -> Result<Graph, String> {
    let g = graph6::decode_str(text.trim()).map_err(|e| e.to_string())?;
    if g.order() > VIEW_LIMIT {
        return Err(format!("order {} is above the demo limit of {VIEW_LIMIT}", g.order()));
    }
    Ok(g)
}

fn view(g: &Graph) -> GraphView {
    GraphView {
        graph6: graph6::encode(g),
        edges: g.edges().collect(),
        certificate: PropertyCertificate::compute(g),
    }
}

pub fn analyse(text: &str) -> Result<GraphView, String> {
    parse(text).map(|g| view(&g))
}

pub fn blow_up_vertex(text: &str, v: usize) -> Result<BlowupView, String> {
    let g = parse(text)?;
    g.check_vertex(v).map_err(|e| e.to_string())?;
    let report = match g.degree(v) {
        3 => Some(verify_lemma1(&g, v)),
        4 => Some(verify_lemma2(&g, v)),
        _ => None,
    }
    .transpose()
    .map_err(|e| e.to_string())?;
    let (target, map) = match &report {
        Some(r) => (r.target.clone(), r.map.clone()),
        None => blow_up(&g, v).map_err(|e| e.to_string())?,
    };
    if target.order() > VIEW_LIMIT {
        return Err(format!("the result has order {}, above the demo limit", target.order()));
    }
    Ok(BlowupView {
        view: view(&target),
        clique: map.clique,
        source_circumference: htgraph::cycle::circumference(&g).map_or(0, |w| w.len()),
        lemma: report.as_ref().map(LemmaSummary::from),
    })
}

pub fn family(name: &str, order: usize) -> Result<GraphView, String> {
    if order > VIEW_LIMIT {
        return Err(format!("order {order} is above the demo limit of {VIEW_LIMIT}"));
    }
    let trace = match name {
        "cubic" => cubic_family(order),
        "quartic" => quartic_family(order, &SeedSet::bundled()),
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(view(&trace.final_graph))
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

/// `GraphView` JSON for a graph6 string.
#[wasm_bindgen(js_name = analyse)]
pub fn analyse_js(graph6: &str) -> Result<String, JsValue> {
    to_js(analyse(graph6))
}

/// `BlowupView` JSON after replacing `vertex` by a clique.
#[wasm_bindgen(js_name = blowUp)]
pub fn blow_up_js(graph6: &str, vertex: usize) -> Result<String, JsValue> {
    to_js(blow_up_vertex(graph6, vertex))
}

/// `GraphView` JSON of the cubic or quartic family member of `order`.
#[wasm_bindgen(js_name = familyMember)]
pub fn family_js(name: &str, order: usize) -> Result<String, JsValue> {
    to_js(family(name, order))
}

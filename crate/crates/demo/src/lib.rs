//! WebAssembly bindings for `www/index.html`. Every operation takes an origami
//! as JSON text (`{"n", "h", "v"}`) and returns JSON or SVG text.

use origami_core::bicorn::origami_edge_path;
use origami_core::curve::core_curves;
use origami_core::explorer::{distance_bounds, quotient_sequence};
use origami_core::io::parse_origami;
use origami_core::render::{render_svg, RenderSpec};
use origami_core::SurfaceComplex;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn load(text: &str) -> Result<(origami_core::Origami, SurfaceComplex), String> {
    let o = parse_origami(text).map_err(|e| e.to_string())?;
    let c = SurfaceComplex::build(&o).map_err(|e| e.to_string())?;
    Ok((o, c))
}

/// Genus, cylinder counts and the canonical form.
pub fn info(text: &str) -> Result<String, String> {
    let (o, c) = load(text)?;
    let cyl = o.cylinders().map_err(|e| e.to_string())?;
    let canon = o.canonical().map_err(|e| e.to_string())?;
    let v = json!({
        "n": o.n,
        "genus": c.genus(),
        "vertices": c.vertex_count(),
        "cylinders": { "horizontal": cyl.horizontal, "vertical": cyl.vertical },
        "canonical": { "h": canon.h.images(), "v": canon.v.images() },
    });
    Ok(v.to_string())
}

/// Bicorn path between the first horizontal and first vertical cores.
pub fn core_path(text: &str) -> Result<String, String> {
    let (_, c) = load(text)?;
    let (h, v) = core_curves(&c);
    let (a, b) = (&h[0], &v[0]);
    let p = origami_edge_path(a, b, &c).map_err(|e| e.to_string())?;
    let q = quotient_sequence(&p, a, b, &c).map_err(|e| e.to_string())?;
    let bounds = distance_bounds(a, b, Some(&p), &c).map_err(|e| e.to_string())?;
    let v = json!({ "length": p.length, "arcs": p.arcs, "quotients": q, "bounds": bounds });
    Ok(v.to_string())
}

/// SVG of the origami with its first horizontal and vertical cores.
pub fn cores_svg(text: &str, unit: u32) -> Result<String, String> {
    let (o, c) = load(text)?;
    let (h, v) = core_curves(&c);
    let spec = RenderSpec { unit: unit.clamp(20, 200), ..RenderSpec::default() };
    render_svg(&o, &[h[0].clone(), v[0].clone()], &spec).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = origamiInfo)]
pub fn origami_info_js(text: &str) -> Result<String, JsError> {
    info(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = corePath)]
pub fn core_path_js(text: &str) -> Result<String, JsError> {
    core_path(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = coresSvg)]
pub fn cores_svg_js(text: &str, unit: u32) -> Result<String, JsError> {
    cores_svg(text, unit).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GENUS2: &str = r#"{"n":4,"h":[1,2,3,0],"v":[1,3,0,2]}"#;

    #[test]
    fn info_reports_genus() {
        let v: serde_json::Value = serde_json::from_str(&info(GENUS2).unwrap()).unwrap();
        assert_eq!(v["genus"], 2);
    }

    #[test]
    fn core_path_is_short() {
        let v: serde_json::Value = serde_json::from_str(&core_path(GENUS2).unwrap()).unwrap();
        assert!(v["length"].as_u64().unwrap() >= 1);
        assert_eq!(v["bounds"]["lower"], 3);
    }

    #[test]
    fn svg_and_errors() {
        assert_eq!(cores_svg(GENUS2, 60).unwrap().matches("<rect").count(), 4);
        assert!(info(r#"{"n":2,"h":[0,0],"v":[0,1]}"#).is_err());
        assert!(core_path("not json").is_err());
    }
}

//! Browser bindings. Each exported function takes the expression text typed
//! into the page and returns an SVG document or a plain-text report.

use knotobs::concordance::{bound_report, expr_upsilon, ConcordanceError, KnotExpr};
use knotobs::expr::{parse_expr, NoMatrices};
use knotobs::rational::{int, parse_rational};
use knotobs::render;
use wasm_bindgen::prelude::*;

fn parse(src: &str) -> Result<KnotExpr, String> {
    parse_expr(src, &NoMatrices).map_err(|e| e.to_string())
}

fn msg(e: ConcordanceError) -> String {
    e.to_string()
}

pub fn upsilon_svg(src: &str, grid: &str) -> Result<String, String> {
    let k = parse(src)?;
    let grid = parse_rational(grid.trim())
        .filter(|g| *g > int(0) && *g <= int(2))
        .ok_or_else(|| format!("grid step must be a rational in (0, 2], got {grid:?}"))?;
    let u = expr_upsilon(&k).map_err(msg)?;
    let mut out = render::upsilon_svg(&u, &grid, &format!("Upsilon(t)/t of {k}"));
    out.push_str("<!--\n");
    out.push_str(&render::upsilon_breakpoints(&u));
    out.push_str("-->\n");
    Ok(out)
}

pub fn signature_svg(src: &str) -> Result<String, String> {
    let k = parse(src)?;
    let steps = render::signature_steps(&k).map_err(msg)?;
    Ok(render::signature_svg(&steps, &format!("signature function of {k}")))
}

pub fn bounds_text(src: &str) -> Result<String, String> {
    let k = parse(src)?;
    Ok(render::render_bound_report(&bound_report(&k).map_err(msg)?, render::DEFAULT_DIGITS))
}

/// SVG of `Υ(t)/t` sampled every `grid` (a fraction such as `1/120`).
#[wasm_bindgen]
pub fn upsilon_plot(expr: &str, grid: &str) -> Result<String, JsValue> {
    upsilon_svg(expr, grid).map_err(|e| JsValue::from_str(&e))
}

/// SVG step plot of the signature function on the upper half circle.
#[wasm_bindgen]
pub fn signature_plot(expr: &str) -> Result<String, JsValue> {
    signature_svg(expr).map_err(|e| JsValue::from_str(&e))
}

/// Genus and double-point lower bounds as a key/value report.
#[wasm_bindgen]
pub fn bounds(expr: &str) -> Result<String, JsValue> {
    bounds_text(expr).map_err(|e| JsValue::from_str(&e))
}

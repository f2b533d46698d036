//! Browser demo: classify a gluing, draw the glued polygon and compute the
//! rank of the center for a bundled category.
//!
//! The plain functions return JSON or SVG text and are usable natively; the
//! `#[wasm_bindgen]` wrappers only convert errors into `JsValue`s.

use std::f64::consts::PI;
use std::fmt::Write as _;

use genuscenter::catalog;
use genuscenter::center;
use genuscenter::fusion;
use genuscenter::gluing::Gluing;
use serde_json::json;
use wasm_bindgen::prelude::*;

const PALETTE: &[&str] = &["#d1495b", "#00798c", "#edae49", "#66a182", "#8d5fd3", "#2e4057", "#e07a5f", "#3d405b"];

/// Bundled catalogs with their labels and modularity.
pub fn catalogs_json() -> String {
    let list: Vec<_> = catalog::keys()
        .into_iter()
        .filter_map(|k| {
            let spec = catalog::builtin(k).ok()?;
            let modular = fusion::s_matrix_and_transparency(&spec).ok().map(|s| s.modular);
            Some(json!({ "key": k, "labels": spec.labels(), "modular": modular }))
        })
        .collect();
    json!(list).to_string()
}

/// Surface type, orbits and the comm-case matrix of a gluing.
pub fn classify_json(sigma: &str) -> Result<String, String> {
    let s = Gluing::parse(sigma).map_err(|e| e.to_string())?;
    let t = s.surface_type();
    let orbits = s.orbits();
    let comm: Vec<Vec<Option<u8>>> = orbits
        .iter()
        .map(|&a| orbits.iter().map(|&b| s.comm_case(a, b).ok().map(|c| c as u8)).collect())
        .collect();
    Ok(json!({
        "sigma": s.to_string(),
        "n": s.n(),
        "surface": { "g": t.genus, "k": t.punctures, "euler": t.euler },
        "orbits": orbits.iter().map(|o| [o.low, o.high]).collect::<Vec<_>>(),
        "comm": comm,
    })
    .to_string())
}

/// The disk as a `4n`-gon whose even edges are the legs; glued legs share a
/// color and are joined by a curve. Arrows show the boundary direction, so
/// each glued pair carries opposite arrows.
pub fn gluing_svg(sigma: &str) -> Result<String, String> {
    let s = Gluing::parse(sigma).map_err(|e| e.to_string())?;
    let t = s.surface_type();
    let (cx, cy, r) = (200.0, 200.0, 150.0);
    let mut svg = String::from(
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 400 430" font-family="sans-serif">
<defs><marker id="head" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="5" markerHeight="5" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="#222"/></marker></defs>
"##,
    );
    let n = s.n();
    if n == 0 {
        let _ = writeln!(svg, r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="#f4f1ea" stroke="#888" stroke-width="2"/>"##);
    } else {
        let m = 4 * n;
        let corner = |k: usize| {
            let a = -PI / 2.0 + 2.0 * PI * (k % m) as f64 / m as f64;
            (cx + r * a.cos(), cy + r * a.sin())
        };
        let pts: Vec<String> = (0..m).map(corner).map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(svg, r##"<polygon points="{}" fill="#f4f1ea" stroke="#aaa" stroke-width="1.5"/>"##, pts.join(" "));
        let orbit_of = |leg: usize| s.orbits().iter().position(|o| o.low == leg + 1 || o.high == leg + 1).unwrap_or(0);
        for (k, o) in s.orbits().iter().enumerate() {
            let color = PALETTE[k % PALETTE.len()];
            let mid = |leg: usize| {
                let ((x0, y0), (x1, y1)) = (corner(2 * leg), corner(2 * leg + 1));
                ((x0 + x1) / 2.0, (y0 + y1) / 2.0)
            };
            let ((ax, ay), (bx, by)) = (mid(o.low - 1), mid(o.high - 1));
            let (qx, qy) = (cx + 0.25 * ((ax + bx) / 2.0 - cx), cy + 0.25 * ((ay + by) / 2.0 - cy));
            let _ = writeln!(
                svg,
                r##"<path d="M{ax:.1},{ay:.1} Q{qx:.1},{qy:.1} {bx:.1},{by:.1}" fill="none" stroke="{color}" stroke-width="2" stroke-dasharray="5 4"/>"##
            );
        }
        for leg in 0..2 * n {
            let color = PALETTE[orbit_of(leg) % PALETTE.len()];
            let ((x0, y0), (x1, y1)) = (corner(2 * leg), corner(2 * leg + 1));
            let _ = writeln!(
                svg,
                r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="{color}" stroke-width="6" stroke-linecap="round"/>"##
            );
            // arrow along the boundary on the low leg, against it on the high one
            let low = s.image(leg + 1).map(|p| leg + 1 < p).unwrap_or(true);
            let (mx, my) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
            let (dx, dy) = ((x1 - x0) * 0.15, (y1 - y0) * 0.15);
            let (sx, sy, ex, ey) = if low { (mx - dx, my - dy, mx + dx, my + dy) } else { (mx + dx, my + dy, mx - dx, my - dy) };
            let _ = writeln!(
                svg,
                r##"<line x1="{sx:.1}" y1="{sy:.1}" x2="{ex:.1}" y2="{ey:.1}" stroke="#222" stroke-width="1.5" marker-end="url(#head)"/>"##
            );
            let (lx, ly) = (cx + 1.13 * (mx - cx), cy + 1.13 * (my - cy));
            let _ = writeln!(
                svg,
                r##"<text x="{lx:.1}" y="{ly:.1}" font-size="14" text-anchor="middle" dominant-baseline="middle">{}</text>"##,
                leg + 1
            );
        }
    }
    let _ = writeln!(
        svg,
        r##"<text x="200" y="415" font-size="15" text-anchor="middle">{}: genus {}, punctures {}</text>"##,
        s,
        t.genus,
        t.punctures
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Rank and block sizes of the center for a bundled category.
pub fn center_rank_json(cat: &str, sigma: &str) -> Result<String, String> {
    let spec = catalog::builtin(cat).map_err(|e| e.to_string())?;
    let s = Gluing::parse(sigma).map_err(|e| e.to_string())?;
    let r = center::center_rank(&spec, &s).map_err(|e| e.to_string())?;
    let t = s.surface_type();
    Ok(json!({
        "category": cat,
        "sigma": s.to_string(),
        "surface": { "g": t.genus, "k": t.punctures },
        "rank": r.rank,
        "block_dims": r.block_dims,
        "total_dim": r.total_dim,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn catalogs() -> String {
    catalogs_json()
}

#[wasm_bindgen]
pub fn classify(sigma: &str) -> Result<String, JsValue> {
    classify_json(sigma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn draw_gluing(sigma: &str) -> Result<String, JsValue> {
    gluing_svg(sigma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn center_rank(cat: &str, sigma: &str) -> Result<String, JsValue> {
    center_rank_json(cat, sigma).map_err(|e| JsValue::from_str(&e))
}

//! SVG output for inspection. Nothing downstream reads these files.

use std::fmt::Write as _;

use crate::diagram::{PlanarDiagram, Sign};
use crate::geometry::Pt;
use crate::lattice::{Axis, LatticeLink};
use crate::seifert::CordRealization;

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new(width: f64, height: f64) -> Self {
        Svg { body: String::new(), width, height }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, w: f64) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="{w}" stroke-linecap="round"/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn polyline(&mut self, pts: &[(f64, f64)], color: &str, w: f64, closed: bool) {
        let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
        let tag = if closed { "polygon" } else { "polyline" };
        let _ = writeln!(
            self.body,
            r#"<{tag} points="{}" fill="none" stroke="{color}" stroke-width="{w}" stroke-linejoin="round"/>"#,
            coords.join(" ")
        );
    }

    fn circle(&mut self, c: (f64, f64), r: f64, color: &str, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{r}" stroke="{color}" fill="{fill}"/>"#,
            c.0, c.1
        );
    }

    fn text(&mut self, at: (f64, f64), s: &str) {
        let esc = s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{esc}</text>"#,
            at.0, at.1
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height
        )
    }
}

/// Projection of a lattice link onto the xy-plane. Edges are painted in
/// increasing height so over-strands hide under-strands.
pub fn render_lattice(link: &LatticeLink) -> String {
    let scale = 48.0;
    let lift = 4.0;
    let mut edges = Vec::new();
    let (mut minx, mut miny, mut maxx, mut maxy) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
    for (ci, comp) in link.components.iter().enumerate() {
        for v in &comp.vertices {
            minx = minx.min(v.x);
            miny = miny.min(v.y);
            maxx = maxx.max(v.x);
            maxy = maxy.max(v.y);
        }
        for (a, b) in comp.steps() {
            if a.step_axis(&b) != Some(Axis::Z) {
                edges.push((a.z, ci, a, b));
            }
        }
    }
    if edges.is_empty() && link.components.iter().all(|c| c.vertices.is_empty()) {
        return Svg::new(100.0, 100.0).finish();
    }
    edges.sort_by_key(|e| e.0);
    let minz = edges.first().map_or(0, |e| e.0);
    let pad = 40.0;
    let w = (maxx - minx) as f64 * scale + 2.0 * pad;
    let h = (maxy - miny) as f64 * scale + 2.0 * pad;
    let mut svg = Svg::new(w, h);
    let at = |x: i64, y: i64, z: i64| {
        let dz = (z - minz) as f64 * lift;
        (pad + (x - minx) as f64 * scale + dz, h - pad - (y - miny) as f64 * scale - dz)
    };
    for (z, ci, a, b) in edges {
        let (p, q) = (at(a.x, a.y, z), at(b.x, b.y, z));
        svg.line(p, q, "white", 10.0);
        svg.line(p, q, PALETTE[ci % PALETTE.len()], 3.0);
    }
    svg.finish()
}

fn realization_panel(svg: &mut Svg, r: &CordRealization, origin: (f64, f64), size: f64, title: &str) {
    let radius = r.polygon.iter().map(|p| p.x.abs().max(p.y.abs())).max().unwrap_or(1).max(1) as f64;
    let k = size / 2.0 / radius * 0.9;
    let map = |p: &Pt| (origin.0 + size / 2.0 + p.x as f64 * k, origin.1 + size / 2.0 - p.y as f64 * k);
    let poly: Vec<_> = r.polygon.iter().map(map).collect();
    svg.polyline(&poly, "#999999", 1.5, true);
    for (i, cord) in r.cords.iter().enumerate() {
        let pts: Vec<_> = cord.iter().map(map).collect();
        svg.polyline(&pts, PALETTE[i % PALETTE.len()], 2.0, false);
        if let Some(first) = pts.first() {
            svg.circle(*first, 3.0, PALETTE[i % PALETTE.len()], PALETTE[i % PALETTE.len()]);
        }
    }
    svg.text((origin.0 + 6.0, origin.1 + 14.0), title);
}

/// Straight-chord realizations beside their coherent replacements, one row
/// per column.
pub fn render_rewriting(before: &[CordRealization], after: &[CordRealization], labels: &[String]) -> String {
    let size = 320.0;
    let rows = before.len().max(1);
    let mut svg = Svg::new(2.0 * size, rows as f64 * size);
    for (i, (b, a)) in before.iter().zip(after).enumerate() {
        let label = labels.get(i).map(String::as_str).unwrap_or("");
        let y = i as f64 * size;
        realization_panel(&mut svg, b, (0.0, y), size, &format!("{label} before"));
        realization_panel(&mut svg, a, (size, y), size, &format!("{label} after"));
    }
    if before.is_empty() {
        svg.text((10.0, 20.0), "no multi-cord columns");
    }
    svg.finish()
}

/// Gauss diagram of a planar diagram: arcs equally spaced on a circle in
/// traversal order, one chord per crossing from its over arc to its under arc.
pub fn render_diagram(d: &PlanarDiagram) -> String {
    let size = 400.0;
    let c = (size / 2.0, size / 2.0);
    let r = size * 0.4;
    let mut svg = Svg::new(size, size);
    let arcs = d.arcs();
    let n = arcs.len().max(1) as f64;
    let pos: std::collections::BTreeMap<u32, (f64, f64)> = arcs
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let t = std::f64::consts::TAU * i as f64 / n;
            (a, (c.0 + r * t.cos(), c.1 - r * t.sin()))
        })
        .collect();
    svg.circle(c, r, "#999999", "none");
    for x in d.crossings() {
        let under = pos[&x.arcs[0]];
        let over = pos[&x.arcs[1]];
        let color = if x.sign == Sign::Pos { PALETTE[0] } else { PALETTE[1] };
        svg.line(over, under, color, 2.0);
        svg.circle(under, 4.0, color, "white");
    }
    for (&a, &p) in &pos {
        svg.text((p.0 + 4.0, p.1 - 4.0), &a.to_string());
    }
    svg.text((8.0, 16.0), &format!("crossings {}  loops {}", d.num_crossings(), d.loops()));
    svg.finish()
}

//! Deterministic SVG figures. Coordinates are rounded for display only.

use std::fmt::Write;

use crate::digraph::Digraph;
use crate::geometry::PointSet;
use crate::verify::Embedding;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 30.0;

/// Point groups and guide curves of a reduction instance.
#[derive(Clone, Debug, Default)]
pub struct Overlay {
    pub small_sets: Vec<Vec<usize>>,
    pub large_sets: Vec<Vec<usize>>,
    /// Draw the cone rays and the two ellipse arcs around the origin.
    pub guides: bool,
    /// Ray directions from the origin.
    pub rays: Vec<(f64, f64)>,
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn new(pts: &[(f64, f64)]) -> Self {
        let (mut lx, mut hx, mut ly, mut hy) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in pts {
            lx = lx.min(x);
            hx = hx.max(x);
            ly = ly.min(y);
            hy = hy.max(y);
        }
        if pts.is_empty() {
            (lx, hx, ly, hy) = (0.0, 1.0, 0.0, 1.0);
        }
        let span = (hx - lx).max(hy - ly).max(1e-9);
        Frame { min_x: lx, max_y: hy, scale: (SIZE - 2.0 * MARGIN) / span }
    }

    /// Data to screen; y grows downwards on screen.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (MARGIN + (x - self.min_x) * self.scale, MARGIN + (self.max_y - y) * self.scale)
    }
}

fn circles(out: &mut String, frame: &Frame, pts: &[(f64, f64)], idx: impl IntoIterator<Item = usize>) {
    for i in idx {
        let (x, y) = frame.map(pts[i]);
        let _ = writeln!(out, r#"    <circle cx="{x:.3}" cy="{y:.3}" r="3" data-index="{i}"/>"#);
    }
}

fn polyline(out: &mut String, frame: &Frame, class: &str, pts: impl Iterator<Item = (f64, f64)>) {
    let coords: Vec<String> = pts
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(out, r#"    <polyline class="{class}" fill="none" points="{}"/>"#, coords.join(" "));
}

/// Render `s`, optionally with the drawing of `graph` under an embedding and a
/// reduction overlay.
pub fn render_svg(s: &PointSet, drawing: Option<(&Digraph, &Embedding)>, overlay: Option<&Overlay>) -> String {
    let pts: Vec<(f64, f64)> = s.points().iter().map(|p| p.to_f64()).collect();
    let frame = Frame::new(&pts);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    out.push_str(concat!(
        "  <defs>\n",
        "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\n",
        "      <path d=\"M0,0 L10,5 L0,10 z\"/>\n",
        "    </marker>\n",
        "  </defs>\n",
    ));

    let mut grouped = vec![false; pts.len()];
    if let Some(ov) = overlay {
        if ov.guides {
            out.push_str("  <g class=\"guides\" stroke=\"#999\" stroke-dasharray=\"4 3\">\n");
            let reach = 12.0;
            for &(dx, dy) in &ov.rays {
                let norm = (dx * dx + dy * dy).sqrt();
                polyline(&mut out, &frame, "ray", [(0.0, 0.0), (reach * dx / norm, reach * dy / norm)].into_iter());
            }
            for (class, lambda) in [("ellipse-e", 1.0), ("curve-c", 2.0)] {
                let arc = (0..=64).map(|i| {
                    let phi = std::f64::consts::FRAC_PI_2 * (1.0 + i as f64 / 64.0);
                    (lambda * 5.0 * phi.cos(), lambda * 3.0 * phi.sin())
                });
                polyline(&mut out, &frame, class, arc);
            }
            out.push_str("  </g>\n");
        }
    }
    if let Some((g, e)) = drawing {
        out.push_str("  <g class=\"edges\" stroke=\"black\" marker-end=\"url(#arrow)\">\n");
        for &(u, v) in g.edges() {
            let (x1, y1) = frame.map(pts[e.point_of(u)]);
            let (x2, y2) = frame.map(pts[e.point_of(v)]);
            let _ = writeln!(out, r#"    <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
        }
        out.push_str("  </g>\n");
    }
    if let Some(ov) = overlay {
        for (class, sets, prefix, first) in
            [("small-set", &ov.small_sets, "B", 1), ("large-set", &ov.large_sets, "L", 0)]
        {
            for (k, set) in sets.iter().enumerate() {
                let _ = writeln!(out, r#"  <g class="{class}" id="{prefix}{}">"#, k + first);
                circles(&mut out, &frame, &pts, set.iter().copied());
                out.push_str("  </g>\n");
                for &i in set {
                    grouped[i] = true;
                }
            }
        }
    }
    out.push_str("  <g class=\"points\">\n");
    circles(&mut out, &frame, &pts, (0..pts.len()).filter(|&i| !grouped[i]));
    out.push_str("  </g>\n</svg>\n");
    out
}

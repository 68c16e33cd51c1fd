//! SVG and Graphviz drawings of a frieze on its polygon.
//!
//! Vertex `k` of an `n`-gon sits at angle `2πk/n` on a circle. Every
//! segment carries its label; diagonals labeled 1 are drawn heavy.

use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::frieze::Frieze;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("unsupported format \"{0}\" (expected svg or dot)")]
    UnsupportedFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Dot,
}

impl FromStr for Format {
    type Err = RenderError;

    fn from_str(s: &str) -> Result<Self, RenderError> {
        match s {
            "svg" => Ok(Format::Svg),
            "dot" => Ok(Format::Dot),
            other => Err(RenderError::UnsupportedFormat(other.into())),
        }
    }
}

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;

fn position(k: usize, n: usize) -> (f64, f64) {
    let theta = 2.0 * PI * k as f64 / n as f64;
    (SIZE / 2.0 + RADIUS * theta.cos(), SIZE / 2.0 - RADIUS * theta.sin())
}

/// Fixed two-decimal output; `-0.00` is normalized away.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

struct Segment {
    i: usize,
    j: usize,
    label: String,
    boundary: bool,
    heavy: bool,
}

fn segments(f: &Frieze) -> Vec<Segment> {
    let n = f.n();
    f.pairs()
        .map(|(i, j, c)| {
            let boundary = j == i + 1 || (i == 0 && j == n - 1);
            Segment {
                i,
                j,
                label: c.to_string(),
                boundary,
                heavy: !boundary && c.is_one(),
            }
        })
        .collect()
}

fn svg(n: usize, segs: &[Segment]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    for s in segs {
        let (x1, y1) = position(s.i, n);
        let (x2, y2) = position(s.j, n);
        let (class, width) = match (s.boundary, s.heavy) {
            (true, _) => ("segment edge", 2.0),
            (false, true) => ("segment diagonal heavy", 4.0),
            (false, false) => ("segment diagonal", 1.0),
        };
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            num(width)
        );
        let _ = writeln!(
            out,
            r#"<text class="label" x="{}" y="{}" font-size="12" text-anchor="middle" fill="darkred">{}</text>"#,
            num((x1 + x2) / 2.0),
            num((y1 + y2) / 2.0),
            s.label
        );
    }
    for k in 0..n {
        let (x, y) = position(k, n);
        let _ = writeln!(out, r#"<circle class="vertex" cx="{}" cy="{}" r="4" fill="black"/>"#, num(x), num(y));
        let (lx, ly) = (SIZE / 2.0 + (x - SIZE / 2.0) * 1.1, SIZE / 2.0 + (y - SIZE / 2.0) * 1.1);
        let _ = writeln!(
            out,
            r#"<text class="vertex-name" x="{}" y="{}" font-size="14" text-anchor="middle">{k}</text>"#,
            num(lx),
            num(ly)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn dot(n: usize, segs: &[Segment]) -> String {
    let mut out = String::from("graph frieze {\n  node [shape=circle];\n");
    for k in 0..n {
        let (x, y) = position(k, n);
        let _ = writeln!(
            out,
            "  v{k} [label=\"{k}\", pos=\"{},{}!\"];",
            num(x / 72.0),
            num((SIZE - y) / 72.0)
        );
    }
    for s in segs {
        let style = if s.heavy { ", penwidth=3" } else { "" };
        let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"{style}];", s.i, s.j, s.label);
    }
    out.push_str("}\n");
    out
}

pub fn render_frieze(f: &Frieze, format: Format) -> String {
    let segs = segments(f);
    match format {
        Format::Svg => svg(f.n(), &segs),
        Format::Dot => dot(f.n(), &segs),
    }
}

/// Draw a triangulation through the frieze it determines.
pub fn render_triangulation(t: &Triangulation, format: Format) -> String {
    let f = t.frieze().expect("a valid triangulation has a frieze");
    render_frieze(&f, format)
}

//! SVG emission for curves and coverings.
//!
//! Curves are drawn in the inset segment style: each unit segment becomes a
//! three-piece polyline that stays clear of the lattice vertices and hooks
//! toward its neighbors, so consecutive segments meet in exactly one point
//! and crossings at a vertex stay visually disjoint. Coverings are drawn
//! with one color per curve, optionally with the tile outlines associated
//! to the segments.

use crate::covering::Covering;
use crate::curve::{Curve, Vec2};

/// Visual parameters for [`render_curve`] and [`render_covering`].
#[derive(Debug, Clone)]
pub struct RenderStyle {
    /// Inset fraction; must lie in `(0, 1/4)` so the middle piece of each
    /// segment has positive length.
    pub alpha: f64,
    /// Stroke width in lattice units.
    pub stroke_width: f64,
    /// Cycle of stroke colors, one per curve.
    pub palette: Vec<String>,
    /// Draw the tile outline associated to every segment.
    pub show_tiles: bool,
    /// Overlay this many successive derivatives of each curve.
    pub show_derivatives: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            alpha: 0.15,
            stroke_width: 0.06,
            palette: [
                "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b",
                "#e377c2",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
            show_tiles: false,
            show_derivatives: 0,
        }
    }
}

type FPoint = (f64, f64);

fn fp(p: (i64, i64)) -> FPoint {
    (p.0 as f64, p.1 as f64)
}

fn fmt(v: f64) -> String {
    // Avoid "-0" so that equal geometry yields equal documents.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v}")
}

fn pt(p: FPoint) -> String {
    format!("{} {}", fmt(p.0), fmt(p.1))
}

fn left(d: Vec2) -> Vec2 {
    (-d.1, d.0)
}

fn at(a: FPoint, s: f64, d: Vec2) -> FPoint {
    (a.0 + s * d.0 as f64, a.1 + s * d.1 as f64)
}

/// Inset polyline of one curve: per segment from `a` to `b` with direction
/// `d`, the four points `a + α(d + h0)`, `a + 2αd`, `b − 2αd` and
/// `b + α(h1 − d)`, where the hook `h0` is the reverse of the previous
/// segment's direction and `h1` is the next segment's direction. With these
/// hooks the last point of a segment is the first point of its successor.
/// At the two free ends of the curve the hook turns left of the segment.
fn inset_path(c: &Curve, alpha: f64) -> String {
    let vs = c.vertices();
    let ds = c.displacements();
    let mut d_attr = String::new();
    for (i, &d) in ds.iter().enumerate() {
        let a = fp(vs[i]);
        let b = fp(vs[i + 1]);
        let h0 = if i == 0 {
            left(d)
        } else {
            (-ds[i - 1].0, -ds[i - 1].1)
        };
        let h1 = if i + 1 == ds.len() { left(d) } else { ds[i + 1] };
        let p0 = at(at(a, alpha, d), alpha, h0);
        let p1 = at(a, 2.0 * alpha, d);
        let p2 = at(b, -2.0 * alpha, d);
        let p3 = at(at(b, -alpha, d), alpha, h1);
        d_attr.push_str(&format!(
            "M{} L{} L{} L{} ",
            pt(p0),
            pt(p1),
            pt(p2),
            pt(p3)
        ));
    }
    d_attr.pop();
    d_attr
}

/// Plain polyline through the vertices, used for derivative overlays.
fn plain_path(c: &Curve) -> String {
    let vs = c.vertices();
    let mut d_attr = format!("M{}", pt(fp(vs[0])));
    for &v in &vs[1..] {
        d_attr.push_str(&format!(" L{}", pt(fp(v))));
    }
    d_attr
}

/// Tile outlines for every segment of a curve: the diamond of the segment,
/// a square bump of half-side `α` hooked at the segment's end, and a square
/// notch of the same size at its beginning (drawn dashed).
fn tile_elements(c: &Curve, alpha: f64, color: &str, width: f64) -> String {
    let vs = c.vertices();
    let ds = c.displacements();
    let mut out = String::new();
    let square = |center: FPoint, d: Vec2| -> String {
        let l = left(d);
        let corners = [
            at(at(center, alpha, d), alpha, l),
            at(at(center, -alpha, d), alpha, l),
            at(at(center, -alpha, d), -alpha, l),
            at(at(center, alpha, d), -alpha, l),
        ];
        corners.map(pt).join(" ")
    };
    for (i, &d) in ds.iter().enumerate() {
        let a = fp(vs[i]);
        let b = fp(vs[i + 1]);
        let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let l = left(d);
        let diamond = [a, at(mid, 0.5, l), b, at(mid, -0.5, l)].map(pt).join(" ");
        let h0 = if i == 0 {
            left(d)
        } else {
            (-ds[i - 1].0, -ds[i - 1].1)
        };
        let h1 = if i + 1 == ds.len() { left(d) } else { ds[i + 1] };
        let bump = square(at(at(b, -alpha, d), alpha, h1), d);
        let notch = square(at(at(a, alpha, d), alpha, h0), d);
        out.push_str(&format!(
            "<polygon points=\"{diamond}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{w}\"/>\n",
            w = fmt(width / 2.0)
        ));
        out.push_str(&format!(
            "<polygon points=\"{bump}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{w}\"/>\n",
            w = fmt(width / 2.0)
        ));
        out.push_str(&format!(
            "<polygon points=\"{notch}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{w}\" stroke-dasharray=\"{g} {g}\"/>\n",
            w = fmt(width / 2.0),
            g = fmt(alpha / 2.0)
        ));
    }
    out
}

fn color(style: &RenderStyle, i: usize) -> &str {
    &style.palette[i % style.palette.len()]
}

/// Wraps rendered elements in a complete SVG 1.1 document. The lattice is
/// y-up; a top-level flip transform maps it to SVG's y-down screen space.
fn document(curves: &[&Curve], body: &str) -> String {
    let mut xs: Vec<i64> = Vec::new();
    let mut ys: Vec<i64> = Vec::new();
    for c in curves {
        for v in c.vertices() {
            xs.push(v.0);
            ys.push(v.1);
        }
    }
    let (x0, x1) = (
        xs.iter().min().copied().unwrap_or(0) - 1,
        xs.iter().max().copied().unwrap_or(0) + 1,
    );
    let (y0, y1) = (
        ys.iter().min().copied().unwrap_or(0) - 1,
        ys.iter().max().copied().unwrap_or(0) + 1,
    );
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"{x0} {vy} {w} {h}\" width=\"{pw}\" height=\"{ph}\">\n\
         <g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\" \
         stroke-linecap=\"round\">\n{body}</g>\n</svg>\n",
        vy = -y1,
        w = x1 - x0,
        h = y1 - y0,
        pw = (x1 - x0) * 24,
        ph = (y1 - y0) * 24,
    )
}

fn curve_elements(c: &Curve, style: &RenderStyle, idx: usize, id: Option<&str>) -> String {
    let mut body = String::new();
    if style.show_tiles {
        body.push_str(&tile_elements(c, style.alpha, "#bbbbbb", style.stroke_width));
    }
    let id_attr = id.map(|i| format!(" id=\"{i}\"")).unwrap_or_default();
    body.push_str(&format!(
        "<path{id_attr} d=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
        inset_path(c, style.alpha),
        color(style, idx),
        fmt(style.stroke_width)
    ));
    let mut dc = c.clone();
    for k in 1..=style.show_derivatives {
        dc = match dc.derivative() {
            Ok(d) => d,
            Err(_) => break,
        };
        body.push_str(&format!(
            "<path d=\"{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{g} {g}\"/>\n",
            plain_path(&dc),
            color(style, idx + k as usize),
            fmt(style.stroke_width * 1.5),
            g = fmt(0.25)
        ));
    }
    body
}

/// Renders one curve (with optional derivative overlays) as an SVG document.
///
/// The output is a pure function of the inputs: identical curve and style
/// yield a byte-identical document.
pub fn render_curve(c: &Curve, style: &RenderStyle) -> String {
    document(&[c], &curve_elements(c, style, 0, None))
}

/// Renders a covering as an SVG document, one palette color per curve, in
/// the covering's curve order.
pub fn render_covering(cov: &Covering, style: &RenderStyle) -> String {
    let mut body = String::new();
    for (i, cc) in cov.curves.iter().enumerate() {
        body.push_str(&curve_elements(&cc.curve, style, i, Some(&cc.id)));
    }
    let refs: Vec<&Curve> = cov.curves.iter().map(|cc| &cc.curve).collect();
    document(&refs, &body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq;

    #[test]
    fn empty_turn_word_single_segment() {
        let c = Curve::new((0, 0), (1, 0), Vec::new());
        let svg = render_curve(&c, &RenderStyle::default());
        assert_eq!(svg.matches("M").count(), 1);
        assert_eq!(svg.matches("<path").count(), 1);
    }

    #[test]
    fn inset_coordinates_match_formulas() {
        // One left turn at (1, 0); the shared hook point of the two inset
        // segments is (1 - alpha, alpha).
        let c = Curve::new((0, 0), (1, 0), vec![1]);
        let d = inset_path(&c, 0.15);
        assert_eq!(
            d,
            "M0.15 0.15 L0.3 0 L0.7 0 L0.85 0.15 \
             M0.85 0.15 L1 0.3 L1 0.7 L0.85 0.85"
        );
    }

    #[test]
    fn deterministic_output() {
        let c = Curve::folding((0, 0), (1, 0), &seq::parse_word("+-+").unwrap());
        let s = RenderStyle {
            show_tiles: true,
            show_derivatives: 2,
            ..RenderStyle::default()
        };
        assert_eq!(render_curve(&c, &s), render_curve(&c, &s));
    }
}

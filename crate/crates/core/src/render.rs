//! Deterministic SVG pictures of an origami with curves on it.
//!
//! Each horizontal cylinder is drawn as one row of squares. Every square
//! carries its index, and its boundary edges are labelled with the square
//! glued across them.

use std::fmt::Write;

use crate::complex::SurfaceComplex;
use crate::curve::{boundary_xy, PLCurve, Rat};
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::overlay::{overlay_unchecked, perturb_off};

#[derive(Clone, Debug)]
pub struct RenderSpec {
    /// Pixels per square side.
    pub unit: u32,
    pub palette: Vec<String>,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            unit: 80,
            palette: ["#c0392b", "#1f2d3d", "#2e86c1", "#229954", "#b9770e", "#7d3c98"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            labels: true,
        }
    }
}

fn f(r: &Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Column and row of every square.
fn layout(o: &Origami) -> (Vec<(usize, usize)>, usize, usize) {
    let mut pos = vec![(0, 0); o.n];
    let mut width = 0;
    let cycles = o.h.cycles();
    for (row, cyc) in cycles.iter().enumerate() {
        for (col, &s) in cyc.iter().enumerate() {
            pos[s] = (col, row);
        }
        width = width.max(cyc.len());
    }
    (pos, width, cycles.len())
}

pub fn render_svg(o: &Origami, curves: &[PLCurve], spec: &RenderSpec) -> Result<String> {
    let complex = SurfaceComplex::build(o)?;
    for c in curves {
        c.check_on(&complex).map_err(|e| Error::InvalidCurve(format!("curve is not on this origami: {e}")))?;
    }
    let mut drawn: Vec<PLCurve> = Vec::with_capacity(curves.len());
    for c in curves {
        let mut c = c.clone();
        for prev in &drawn {
            c = perturb_off(&c, prev, &complex);
        }
        drawn.push(c);
    }

    let u = spec.unit as f64;
    let margin = u * 0.5;
    let gap = u * 0.5;
    let (pos, cols, rows) = layout(o);
    let width = 2.0 * margin + cols as f64 * u;
    let height = 2.0 * margin + rows as f64 * u + (rows.saturating_sub(1)) as f64 * gap;
    let origin = |s: usize| -> (f64, f64) {
        let (c, r) = pos[s];
        (margin + c as f64 * u, margin + r as f64 * (u + gap))
    };
    let point = |s: usize, x: f64, y: f64| -> (f64, f64) {
        let (ox, oy) = origin(s);
        (ox + x * u, oy + (1.0 - y) * u)
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r##"<g class="squares" fill="none" stroke="#888" stroke-width="1">"##);
    for s in 0..o.n {
        let (x, y) = origin(s);
        let _ = writeln!(out, r#"<rect x="{x:.3}" y="{y:.3}" width="{u:.3}" height="{u:.3}" data-square="{s}"/>"#);
    }
    let _ = writeln!(out, "</g>");

    if spec.labels {
        let fs = (u / 7.0).max(7.0);
        let _ = writeln!(
            out,
            r##"<g class="labels" font-family="monospace" font-size="{fs:.1}" text-anchor="middle" fill="#555">"##
        );
        let vinv = o.v.inverse();
        let hinv = o.h.inverse();
        for s in 0..o.n {
            let (cx, cy) = point(s, 0.5, 0.5);
            let _ = writeln!(out, r#"<text x="{cx:.3}" y="{cy:.3}" font-weight="bold">{s}</text>"#);
            let (tx, ty) = point(s, 0.5, 1.0);
            let _ = writeln!(out, r#"<text x="{tx:.3}" y="{:.3}">&#8593;{}</text>"#, ty + fs, o.v.apply(s));
            let (bx, by) = point(s, 0.5, 0.0);
            let _ = writeln!(out, r#"<text x="{bx:.3}" y="{:.3}">&#8595;{}</text>"#, by - fs * 0.3, vinv.apply(s));
            let (c, r) = pos[s];
            let right = o.h.apply(s);
            if pos[right] != (c + 1, r) {
                let (rx, ry) = point(s, 1.0, 0.5);
                let _ = writeln!(out, r#"<text x="{:.3}" y="{ry:.3}">&#8594;{right}</text>"#, rx + fs * 1.2);
            }
            let left = hinv.apply(s);
            if c == 0 || pos[left] != (c - 1, r) {
                let (lx, ly) = point(s, 0.0, 0.5);
                let _ = writeln!(out, r#"<text x="{:.3}" y="{ly:.3}">&#8592;{left}</text>"#, lx - fs * 1.2);
            }
        }
        let _ = writeln!(out, "</g>");
    }

    for (k, c) in drawn.iter().enumerate() {
        let color = &spec.palette[k % spec.palette.len().max(1)];
        let _ = writeln!(out, r#"<g class="curve" data-curve="{k}" fill="none" stroke="{color}" stroke-width="2">"#);
        let mut run: Vec<(f64, f64)> = Vec::new();
        let flush = |run: &mut Vec<(f64, f64)>, out: &mut String| {
            if run.len() >= 2 {
                let pts: Vec<String> = run.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
                let _ = writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "));
            }
            run.clear();
        };
        for ch in c.chords() {
            let (x0, y0) = boundary_xy(ch.entry_side, &ch.entry_t);
            let (x1, y1) = boundary_xy(ch.exit_side, &ch.exit_t);
            let p0 = point(ch.square, f(&x0), f(&y0));
            let p1 = point(ch.square, f(&x1), f(&y1));
            let joined = run.last().is_some_and(|q| (q.0 - p0.0).abs() < 1e-9 && (q.1 - p0.1).abs() < 1e-9);
            if !joined {
                flush(&mut run, &mut out);
                run.push(p0);
            }
            run.push(p1);
        }
        flush(&mut run, &mut out);
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r##"<g class="crossings" fill="#000">"##);
    for i in 0..drawn.len() {
        for j in i + 1..drawn.len() {
            let data = overlay_unchecked(&drawn[i], &drawn[j], o.n);
            for id in 0..data.count() {
                let (x, y) = data.point(id, &drawn[i], &drawn[j]);
                let (px, py) = point(data.crossings[id].square, f(&x), f(&y));
                let _ = writeln!(out, r#"<circle cx="{px:.3}" cy="{py:.3}" r="3"/>"#);
            }
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::core_curves;
    use crate::origami::enumerate_one_one;

    #[test]
    fn torus_with_cores() {
        let o = Origami::torus();
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, v) = core_curves(&c);
        let svg = render_svg(&o, &[h[0].clone(), v[0].clone()], &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<rect").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 1);
    }

    #[test]
    fn deterministic_and_one_rect_per_square() {
        let o = enumerate_one_one(6, None).pop().unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, v) = core_curves(&c);
        let curves = [h[0].clone(), v[0].clone()];
        let a = render_svg(&o, &curves, &RenderSpec::default()).unwrap();
        let b = render_svg(&o, &curves, &RenderSpec::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<rect").count(), 6);
        assert_eq!(a.matches("<circle").count(), 6);
    }

    #[test]
    fn foreign_curve_is_rejected() {
        let o = enumerate_one_one(4, Some(2)).remove(0);
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, _) = core_curves(&c);
        assert!(render_svg(&Origami::torus(), &h, &RenderSpec::default()).is_err());
    }
}

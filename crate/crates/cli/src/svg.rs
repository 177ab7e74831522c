//! Minimal SVG plots: curves as cubic path elements, polygons and sample dots.

use std::fmt::Write;

use casteljau::decasteljau::{cubic_segments, ControlPolygon};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;

#[derive(Default)]
pub struct Plot {
    curves: Vec<(Vec<[[f64; 2]; 4]>, &'static str)>,
    polylines: Vec<(Vec<[f64; 2]>, &'static str)>,
    dots: Vec<(Vec<[f64; 2]>, &'static str)>,
}

fn planar(p: &[f64]) -> [f64; 2] {
    [p[0], p.get(1).copied().unwrap_or(0.0)]
}

impl Plot {
    /// Adds a Bezier segment, split until each cubic piece is flat within `flatness`.
    pub fn curve(&mut self, poly: &ControlPolygon<f64>, flatness: f64, color: &'static str) {
        let mut flat = poly.clone();
        flat.points = poly.points.iter().map(|p| planar(p).to_vec()).collect();
        self.curves.push((cubic_segments(&flat, flatness), color));
    }

    pub fn polyline(&mut self, pts: &[Vec<f64>], color: &'static str) {
        self.polylines.push((pts.iter().map(|p| planar(p)).collect(), color));
    }

    pub fn dots(&mut self, pts: &[Vec<f64>], color: &'static str) {
        self.dots.push((pts.iter().map(|p| planar(p)).collect(), color));
    }

    fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        let all = self
            .curves
            .iter()
            .flat_map(|(c, _)| c.iter().flatten())
            .chain(self.polylines.iter().flat_map(|(p, _)| p.iter()))
            .chain(self.dots.iter().flat_map(|(p, _)| p.iter()));
        for p in all {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        if !lo[0].is_finite() {
            return ([0.0, 0.0], [1.0, 1.0]);
        }
        (lo, hi)
    }

    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
        let k = (SIZE - 2.0 * MARGIN) / span;
        let map = |p: &[f64; 2]| (MARGIN + (p[0] - lo[0]) * k, SIZE - MARGIN - (p[1] - lo[1]) * k);
        let mut s = String::new();
        writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
        for (pts, color) in &self.polylines {
            let coords: Vec<String> = pts.iter().map(|p| {
                let (x, y) = map(p);
                format!("{x:.3},{y:.3}")
            }).collect();
            writeln!(s, r#"<polyline fill="none" stroke="{color}" stroke-dasharray="4 3" points="{}"/>"#, coords.join(" ")).unwrap();
        }
        for (segs, color) in &self.curves {
            let mut d = String::new();
            for seg in segs {
                let (x0, y0) = map(&seg[0]);
                let [(x1, y1), (x2, y2), (x3, y3)] = [map(&seg[1]), map(&seg[2]), map(&seg[3])];
                write!(d, "M{x0:.3} {y0:.3} C{x1:.3} {y1:.3} {x2:.3} {y2:.3} {x3:.3} {y3:.3} ").unwrap();
            }
            writeln!(s, r#"<path fill="none" stroke="{color}" stroke-width="1.5" d="{}"/>"#, d.trim_end()).unwrap();
        }
        for (pts, color) in &self.dots {
            for p in pts {
                let (x, y) = map(p);
                writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{color}"/>"#).unwrap();
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

//! Float rendering of exact figures: Cartesian embedding, marching-squares
//! tracing, and SVG/CSV output. Nothing here feeds back into verification.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;
use tricurves::curves::Curve;
use tricurves::kernel::{HomPoint, RefTriangle};
use tricurves::scenarios::Figure;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid render configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderConfig {
    pub width: u32,
    pub height: u32,
    /// Marching-squares cells per viewport side.
    pub grid: usize,
    /// Padding around the figure, as a fraction of its larger extent.
    pub margin: f64,
    pub labels: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        Self { width: 800, height: 800, grid: 256, margin: 0.08, labels: true }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<(), RenderError> {
        if self.grid < 16 {
            return Err(RenderError::InvalidConfig(format!("grid must be at least 16, got {}", self.grid)));
        }
        if self.width < 64 || self.height < 64 {
            return Err(RenderError::InvalidConfig(format!(
                "width and height must be at least 64, got {}x{}",
                self.width, self.height
            )));
        }
        if !(self.margin.is_finite() && self.margin >= 0.0) {
            return Err(RenderError::InvalidConfig(format!(
                "margin must be a non-negative number, got {}",
                self.margin
            )));
        }
        Ok(())
    }
}

pub type Point = (f64, f64);

/// Integers scaled by a common power of two so the largest fits an `f64`.
pub fn scaled(v: &[BigInt]) -> Vec<f64> {
    let shift = v.iter().map(BigInt::bits).max().unwrap_or(0).saturating_sub(64);
    v.iter().map(|x| (x >> shift).to_f64().unwrap_or(0.0)).collect()
}

/// The reference triangle placed with `A = (0, 0)`, `B = (c, 0)` and `C` above the x-axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Embedding {
    pub vertices: [Point; 3],
}

impl Embedding {
    pub fn new(t: &RefTriangle) -> Self {
        let [a2, b2, c2] = t.sq_sides().clone().map(|s| s.to_f64().unwrap_or(f64::NAN));
        let c = c2.sqrt();
        let cx = (b2 + c2 - a2) / (2.0 * c);
        let cy = (b2 - cx * cx).max(0.0).sqrt();
        Self { vertices: [(0.0, 0.0), (c, 0.0), (cx, cy)] }
    }

    /// Cartesian image of a finite point.
    pub fn point(&self, p: &HomPoint) -> Option<Point> {
        if p.is_at_infinity() {
            return None;
        }
        let w = scaled(p.coords());
        let s: f64 = w.iter().sum();
        let [a, b, c] = self.vertices;
        Some(((w[0] * a.0 + w[1] * b.0 + w[2] * c.0) / s, (w[0] * a.1 + w[1] * b.1 + w[2] * c.1) / s))
    }

    /// Normalized barycentrics of a Cartesian point.
    pub fn barycentric(&self, (x, y): Point) -> [f64; 3] {
        let [_, b, c] = self.vertices;
        let w = y / c.1;
        let v = (x - w * c.0) / b.0;
        [1.0 - v - w, v, w]
    }

    pub fn circumcircle(&self) -> (Point, f64) {
        let [a, b, c] = self.vertices;
        let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
        let n = |p: Point| p.0 * p.0 + p.1 * p.1;
        let ox = (n(a) * (b.1 - c.1) + n(b) * (c.1 - a.1) + n(c) * (a.1 - b.1)) / d;
        let oy = (n(a) * (c.0 - b.0) + n(b) * (a.0 - c.0) + n(c) * (b.0 - a.0)) / d;
        let r = ((a.0 - ox).powi(2) + (a.1 - oy).powi(2)).sqrt();
        ((ox, oy), r)
    }
}

/// A curve's barycentric form with scaled float coefficients.
#[derive(Clone, Debug)]
pub struct FloatForm {
    terms: Vec<([u32; 3], f64)>,
}

impl FloatForm {
    pub fn new(c: &Curve) -> Self {
        let form = c.form();
        let (exps, ints): (Vec<[u32; 3]>, Vec<BigInt>) = form.terms().map(|(e, r)| (*e, r.to_integer())).unzip();
        Self { terms: exps.into_iter().zip(scaled(&ints)).collect() }
    }

    pub fn eval(&self, w: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * w[0].powi(e[0] as i32) * w[1].powi(e[1] as i32) * w[2].powi(e[2] as i32))
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub min: Point,
    pub max: Point,
}

impl Viewport {
    /// Square box around `pts`, padded by `margin` of its side.
    pub fn around(pts: &[Point], margin: f64) -> Self {
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for &(x, y) in pts.iter().filter(|p| p.0.is_finite() && p.1.is_finite()) {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let side = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9) * (1.0 + 2.0 * margin);
        let mid = ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0);
        Self { min: (mid.0 - side / 2.0, mid.1 - side / 2.0), max: (mid.0 + side / 2.0, mid.1 + side / 2.0) }
    }

    pub fn contains(&self, (x, y): Point) -> bool {
        (self.min.0..=self.max.0).contains(&x) && (self.min.1..=self.max.1).contains(&y)
    }
}

/// A traced polyline; closed chains repeat their first point at the end.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub points: Vec<Point>,
    pub closed: bool,
}

/// Grid edge: horizontal (`true`) from node `(i, j)` to `(i + 1, j)`, or vertical to `(i, j + 1)`.
type EdgeKey = (bool, usize, usize);

/// Zero set of `f` inside `view`, traced on a `grid` × `grid` sign grid.
/// Crossings are refined by bisection; saddle cells are resolved by the
/// sign at the cell center.
pub fn trace(f: &dyn Fn(Point) -> f64, view: &Viewport, grid: usize) -> Vec<Chain> {
    let n = grid;
    let dx = (view.max.0 - view.min.0) / n as f64;
    let dy = (view.max.1 - view.min.1) / n as f64;
    let node = |i: usize, j: usize| (view.min.0 + i as f64 * dx, view.min.1 + j as f64 * dy);
    let values: Vec<Vec<f64>> = (0..=n).map(|i| (0..=n).map(|j| f(node(i, j))).collect()).collect();
    let inside = |i: usize, j: usize| values[i][j] > 0.0;

    let mut crossings: HashMap<EdgeKey, Point> = HashMap::new();
    let mut crossing = |k: EdgeKey| -> EdgeKey {
        crossings.entry(k).or_insert_with(|| {
            let (h, i, j) = k;
            let (p, q) = if h { (node(i, j), node(i + 1, j)) } else { (node(i, j), node(i, j + 1)) };
            bisect(f, p, q)
        });
        k
    };

    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let s = [inside(i, j), inside(i + 1, j), inside(i + 1, j + 1), inside(i, j + 1)];
            let edges = [(true, i, j), (false, i + 1, j), (true, i, j + 1), (false, i, j)];
            let cut: Vec<usize> = (0..4).filter(|&e| s[e] != s[(e + 1) % 4]).collect();
            match cut.len() {
                2 => segments.push((crossing(edges[cut[0]]), crossing(edges[cut[1]]))),
                4 => {
                    let center = f((node(i, j).0 + dx / 2.0, node(i, j).1 + dy / 2.0)) > 0.0;
                    let e = edges.map(&mut crossing);
                    if center == s[0] {
                        segments.push((e[0], e[1]));
                        segments.push((e[2], e[3]));
                    } else {
                        segments.push((e[3], e[0]));
                        segments.push((e[1], e[2]));
                    }
                }
                _ => {}
            }
        }
    }
    chain(&segments, &crossings)
}

fn bisect(f: &dyn Fn(Point) -> f64, mut p: Point, mut q: Point) -> Point {
    let p_in = f(p) > 0.0;
    for _ in 0..64 {
        let m = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        if m == p || m == q {
            break;
        }
        if (f(m) > 0.0) == p_in {
            p = m;
        } else {
            q = m;
        }
    }
    ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0)
}

fn chain(segments: &[(EdgeKey, EdgeKey)], at: &HashMap<EdgeKey, Point>) -> Vec<Chain> {
    let mut incident: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (s, (a, b)) in segments.iter().enumerate() {
        incident.entry(*a).or_default().push(s);
        incident.entry(*b).or_default().push(s);
    }
    let mut used = vec![false; segments.len()];
    let mut starts: Vec<EdgeKey> = incident.iter().filter(|(_, v)| v.len() == 1).map(|(k, _)| *k).collect();
    starts.sort_unstable();
    let mut rest: Vec<EdgeKey> = incident.keys().copied().collect();
    rest.sort_unstable();
    starts.extend(rest);

    let mut chains = Vec::new();
    for start in starts {
        let mut key = start;
        let mut keys = vec![key];
        while let Some(&s) = incident[&key].iter().find(|&&s| !used[s]) {
            used[s] = true;
            let (a, b) = segments[s];
            key = if a == key { b } else { a };
            keys.push(key);
        }
        if keys.len() > 1 {
            let closed = keys.len() > 2 && keys.first() == keys.last();
            chains.push(Chain { points: keys.iter().map(|k| at[k]).collect(), closed });
        }
    }
    chains
}

/// A figure in Cartesian coordinates, ready for output.
#[derive(Clone, Debug)]
pub struct Rendering {
    pub view: Viewport,
    pub vertices: [Point; 3],
    pub curves: Vec<(String, Vec<Chain>)>,
    pub points: Vec<(String, Point)>,
}

impl Rendering {
    /// Labels of curves with no real locus in the viewport.
    pub fn empty_curves(&self) -> Vec<&str> {
        self.curves.iter().filter(|(_, c)| c.is_empty()).map(|(l, _)| l.as_str()).collect()
    }
}

pub fn render(t: &RefTriangle, figure: &Figure, cfg: &RenderConfig) -> Rendering {
    let emb = Embedding::new(t);
    let (o, r) = emb.circumcircle();
    let points: Vec<(String, Point)> =
        figure.points.iter().filter_map(|(l, p)| emb.point(p).map(|q| (l.clone(), q))).collect();

    // Points far outside the circumcircle would shrink the triangle to a dot.
    let near = |p: &Point| ((p.0 - o.0).powi(2) + (p.1 - o.1).powi(2)).sqrt() <= 4.0 * r;
    let mut frame: Vec<Point> = emb.vertices.to_vec();
    frame.extend([(o.0 - r, o.1 - r), (o.0 + r, o.1 + r)]);
    frame.extend(points.iter().map(|(_, p)| *p).filter(near));
    let view = Viewport::around(&frame, cfg.margin);

    let curves = figure
        .curves
        .iter()
        .map(|(label, c)| {
            let form = FloatForm::new(c);
            let f = |p: Point| form.eval(emb.barycentric(p));
            (label.clone(), trace(&f, &view, cfg.grid))
        })
        .collect();
    Rendering { view, vertices: emb.vertices, curves, points }
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub fn write_svg(r: &Rendering, cfg: &RenderConfig, mut out: impl io::Write) -> io::Result<()> {
    let (w, h) = (f64::from(cfg.width), f64::from(cfg.height));
    let (vw, vh) = (r.view.max.0 - r.view.min.0, r.view.max.1 - r.view.min.1);
    let scale = (w / vw).min(h / vh);
    let (ox, oy) = ((w - vw * scale) / 2.0, (h - vh * scale) / 2.0);
    let px = |(x, y): Point| (ox + (x - r.view.min.0) * scale, h - oy - (y - r.view.min.1) * scale);
    let fmt = |p: Point| {
        let (x, y) = px(p);
        format!("{x:.2},{y:.2}")
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        cfg.width, cfg.height, cfg.width, cfg.height
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let tri: Vec<String> = r.vertices.iter().map(|&p| fmt(p)).collect();
    let _ = writeln!(s, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1.2"/>"#, tri.join(" "));
    for (k, (label, chains)) in r.curves.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<g class="curve" data-label="{}" stroke="{color}" fill="none" stroke-width="1">"#,
            escape(label)
        );
        for c in chains {
            let pts: Vec<String> = c.points.iter().map(|&p| fmt(p)).collect();
            let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
    }
    for (label, p) in r.points.iter().filter(|(_, p)| r.view.contains(*p)) {
        let (x, y) = px(*p);
        let _ = writeln!(s, r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="2.5" fill="black"/>"#);
        if cfg.labels {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">{}</text>"#,
                x + 4.0,
                y - 4.0,
                escape(label)
            );
        }
    }
    s.push_str("</svg>\n");
    out.write_all(s.as_bytes())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// One row per traced sample: curve label, chain index, closedness, x, y.
pub fn write_csv(r: &Rendering, out: impl io::Write) -> Result<(), RenderError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["curve", "chain", "closed", "x", "y"])?;
    for (label, chains) in &r.curves {
        for (i, c) in chains.iter().enumerate() {
            for (x, y) in &c.points {
                w.write_record([label.clone(), i.to_string(), c.closed.to_string(), x.to_string(), y.to_string()])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_is_one_closed_loop() {
        let view = Viewport { min: (-2.0, -2.0), max: (2.0, 2.0) };
        let f = |(x, y): Point| x * x + y * y - 1.0;
        for grid in [16, 64, 512] {
            let chains = trace(&f, &view, grid);
            assert_eq!(chains.len(), 1, "grid {grid}");
            assert!(chains[0].closed);
            for &(x, y) in &chains[0].points {
                assert!((x.hypot(y) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn line_is_one_open_chain() {
        let view = Viewport { min: (-1.0, -1.0), max: (1.0, 1.0) };
        let chains = trace(&|(x, y)| y - 0.3 * x - 0.1, &view, 32);
        assert_eq!(chains.len(), 1);
        assert!(!chains[0].closed);
    }

    #[test]
    fn saddle_gives_two_branches() {
        let view = Viewport { min: (-1.0, -1.0), max: (1.0, 1.0) };
        let chains = trace(&|(x, y)| x * x - y * y - 0.01, &view, 40);
        assert_eq!(chains.len(), 2);
    }

    #[test]
    fn no_locus() {
        let view = Viewport { min: (-1.0, -1.0), max: (1.0, 1.0) };
        assert!(trace(&|(x, y)| x * x + y * y + 1.0, &view, 16).is_empty());
    }

    #[test]
    fn embedding_round_trip() {
        let t = RefTriangle::from_int_sides(6, 9, 13).unwrap();
        let e = Embedding::new(&t);
        let [_, b, c] = e.vertices;
        assert!((b.0 - 13.0).abs() < 1e-12);
        assert!((c.0.hypot(c.1) - 9.0).abs() < 1e-12);
        assert!(((c.0 - b.0).hypot(c.1) - 6.0).abs() < 1e-12);
        let w = e.barycentric((2.0, 1.5));
        let p = HomPoint::from_ints(0, 0, 1).unwrap();
        assert_eq!(e.point(&p), Some(c));
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_keeps_ratios() {
        let big: BigInt = BigInt::from(3) << 5000u32;
        let v = scaled(&[big.clone(), -(big >> 1u32)]);
        assert!(v[0].is_finite());
        assert!((v[0] / v[1] + 2.0).abs() < 1e-12);
    }

    #[test]
    fn config_bounds() {
        assert!(RenderConfig::default().validate().is_ok());
        assert!(RenderConfig { grid: 15, ..RenderConfig::default() }.validate().is_err());
        assert!(RenderConfig { width: 63, ..RenderConfig::default() }.validate().is_err());
    }
}

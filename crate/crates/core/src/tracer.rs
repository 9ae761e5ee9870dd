//! Grid contouring of polynomial lemniscates.
//!
//! Field values are sampled on the grid nodes (in parallel), sign changes
//! along cell edges are located by linear interpolation and then pulled onto
//! the curve by Newton steps along the gradient. Segments are oriented so
//! that the interior (`field < 0`) lies on their left, which makes every
//! closed contour counter-clockwise.
//!
//! Singular points of the curve (critical points of the focal polynomial that
//! lie on it, such as the double point of the Bernoulli lemniscate) cannot be
//! reached by Newton steps. Vertices within one cell diagonal of such a point
//! are snapped onto it, and a contour passing through it more than once is
//! split there into separate loops.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curves::PolynomialLemniscate;
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Newton iteration cap for [`refine`].
pub const MAX_REFINE_ITERATIONS: usize = 20;
/// Target `|field|` of a refined point, relative to `scale^(2n)`.
pub const REFINE_TOL: f64 = 1e-12;
/// Guaranteed `|field|` bound of every emitted vertex, relative to `scale^(2n)`.
pub const CONTOUR_TOL: f64 = 1e-10;
/// Gradients shorter than this are treated as singular.
const SINGULAR_GRADIENT: f64 = 1e-12;
/// Tolerance (relative to `scale^(2n)`) for a critical point to count as on the curve.
const SINGULAR_ON_CURVE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceWindow {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    /// Cell counts along x and y.
    pub nx: usize,
    pub ny: usize,
}

impl TraceWindow {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64, nx: usize, ny: usize) -> Result<Self> {
        let finite = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite());
        if !finite || !(xmax > xmin) || !(ymax > ymin) {
            return Err(Error::InvalidGeometry(format!(
                "window [{xmin}, {xmax}] x [{ymin}, {ymax}] is empty or not finite"
            )));
        }
        if nx < 8 || ny < 8 {
            return Err(Error::InvalidGeometry(format!(
                "grid needs at least 8 cells per axis, got {nx} x {ny}"
            )));
        }
        Ok(Self {
            xmin,
            xmax,
            ymin,
            ymax,
            nx,
            ny,
        })
    }

    /// Axis-aligned box around every focus disk of radius `radius`; every
    /// point of the curve is within `radius` of some focus.
    pub fn around(l: &PolynomialLemniscate, nx: usize, ny: usize) -> Result<Self> {
        let margin = 1.1 * l.radius();
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for f in l.foci() {
            xmin = xmin.min(f.x - margin);
            xmax = xmax.max(f.x + margin);
            ymin = ymin.min(f.y - margin);
            ymax = ymax.max(f.y + margin);
        }
        Self::new(xmin, xmax, ymin, ymax, nx, ny)
    }

    pub fn cell_width(&self) -> f64 {
        (self.xmax - self.xmin) / self.nx as f64
    }

    pub fn cell_height(&self) -> f64 {
        (self.ymax - self.ymin) / self.ny as f64
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.cell_width().hypot(self.cell_height())
    }

    pub fn node(&self, i: usize, j: usize) -> Point {
        Point::new(
            self.xmin + (self.xmax - self.xmin) * i as f64 / self.nx as f64,
            self.ymin + (self.ymax - self.ymin) * j as f64 / self.ny as f64,
        )
    }

    pub fn with_grid(self, nx: usize, ny: usize) -> Result<Self> {
        Self::new(self.xmin, self.xmax, self.ymin, self.ymax, nx, ny)
    }
}

/// Ordered polyline on the curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Contour {
    pub points: Vec<Point>,
    /// Closed contours implicitly join their last point back to the first.
    pub closed: bool,
    /// Largest `|field|` over the points.
    pub max_residual: f64,
}

impl Contour {
    /// Shoelace area; positive for counter-clockwise polygons.
    pub fn signed_area(&self) -> f64 {
        let n = self.points.len();
        if n < 3 {
            return 0.0;
        }
        // shoelace relative to the first vertex to limit cancellation
        let o = self.points[0];
        let mut twice = 0.0;
        for k in 1..n - 1 {
            twice += (self.points[k] - o).cross(self.points[k + 1] - o);
        }
        0.5 * twice
    }

    pub fn area(&self) -> Result<f64> {
        contour_area(self)
    }

    /// Lowest point among the leftmost ones.
    pub fn anchor(&self) -> Option<Point> {
        self.points.iter().copied().min_by(leftmost_lowest)
    }
}

fn leftmost_lowest(a: &Point, b: &Point) -> std::cmp::Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y))
}

/// Absolute shoelace area of a closed contour.
pub fn contour_area(c: &Contour) -> Result<f64> {
    if !c.closed {
        return Err(Error::OpenContour);
    }
    Ok(c.signed_area().abs())
}

/// Newton steps along the gradient until `|field| ≤ 1e-12·scale^(2n)`.
pub fn refine(l: &PolynomialLemniscate, p: Point) -> Result<Point> {
    refine_with_history(l, p).0
}

/// As [`refine`], also returning `|field|` at the start and after every step.
pub fn refine_with_history(l: &PolynomialLemniscate, p: Point) -> (Result<Point>, Vec<f64>) {
    let tol = REFINE_TOL * l.scale().powi(l.degree() as i32);
    let mut history = Vec::with_capacity(MAX_REFINE_ITERATIONS + 1);
    let mut p = p;
    for step in 0..=MAX_REFINE_ITERATIONS {
        let f = l.field(p);
        history.push(f.abs());
        let g = l.gradient(p);
        let g2 = g.norm_squared();
        if !(g2.sqrt() > SINGULAR_GRADIENT) {
            return (Err(Error::SingularPoint), history);
        }
        if f.abs() <= tol {
            return (Ok(p), history);
        }
        if step == MAX_REFINE_ITERATIONS {
            break;
        }
        p = p - g * (f / g2);
    }
    let last = *history.last().unwrap_or(&f64::NAN);
    (Err(Error::NoConvergence(last)), history)
}

/// Edge-crossing id: horizontal edges first, then vertical ones.
#[derive(Clone, Copy)]
struct EdgeIndex {
    nx: usize,
    ny: usize,
}

impl EdgeIndex {
    fn horizontal(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    fn vertical(&self, i: usize, j: usize) -> usize {
        (self.ny + 1) * self.nx + j * (self.nx + 1) + i
    }

    fn count(&self) -> usize {
        (self.ny + 1) * self.nx + self.ny * (self.nx + 1)
    }

    /// Node coordinates `(i, j)` of both ends of an edge.
    fn ends(&self, e: usize) -> ((usize, usize), (usize, usize)) {
        let h = (self.ny + 1) * self.nx;
        if e < h {
            let (i, j) = (e % self.nx, e / self.nx);
            ((i, j), (i + 1, j))
        } else {
            let e = e - h;
            let (i, j) = (e % (self.nx + 1), e / (self.nx + 1));
            ((i, j), (i, j + 1))
        }
    }
}

struct Grid<'a> {
    window: &'a TraceWindow,
    values: Vec<f64>,
}

impl Grid<'_> {
    fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * (self.window.nx + 1) + i]
    }

    fn inside(&self, i: usize, j: usize) -> bool {
        self.value(i, j) < 0.0
    }
}

/// Extracts the zero set of the lemniscate field inside the window.
///
/// Contours come back sorted by their leftmost-lowest point; closed contours
/// start at that point and run counter-clockwise.
pub fn trace(l: &PolynomialLemniscate, w: &TraceWindow) -> Result<Vec<Contour>> {
    let w = TraceWindow::new(w.xmin, w.xmax, w.ymin, w.ymax, w.nx, w.ny)?;
    let (nx, ny) = (w.nx, w.ny);
    let values: Vec<f64> = (0..=ny)
        .into_par_iter()
        .flat_map_iter(|j| (0..=nx).map(move |i| (i, j)))
        .map(|(i, j)| l.field(w.node(i, j)))
        .collect();
    let grid = Grid { window: &w, values };
    let edges = EdgeIndex { nx, ny };

    let next = link_segments(l, &grid, &edges);
    let crossing_ids: Vec<usize> = next
        .iter()
        .enumerate()
        .flat_map(|(from, to)| to.map(|to| [from, to]))
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if crossing_ids.is_empty() {
        return Err(Error::EmptyTrace);
    }

    let singular = l.singular_points(SINGULAR_ON_CURVE);
    let located: Vec<Point> = crossing_ids
        .par_iter()
        .map(|&e| locate_crossing(l, &grid, &edges, e, &singular))
        .collect();
    let mut position = vec![usize::MAX; edges.count()];
    for (k, &e) in crossing_ids.iter().enumerate() {
        position[e] = k;
    }

    let mut has_incoming = vec![false; edges.count()];
    for to in next.iter().flatten() {
        has_incoming[*to] = true;
    }
    let mut visited = vec![false; edges.count()];
    let mut chains: Vec<(Vec<usize>, bool)> = Vec::new();
    // open chains start on the window boundary
    for &e in &crossing_ids {
        if next[e].is_some() && !has_incoming[e] {
            chains.push((follow(e, &next, &mut visited), false));
        }
    }
    for &e in &crossing_ids {
        if !visited[e] {
            chains.push((follow(e, &next, &mut visited), true));
        }
    }

    let mut contours = Vec::new();
    for (chain, closed) in chains {
        let points: Vec<Point> = chain.iter().map(|&e| located[position[e]]).collect();
        for (pts, closed) in split_at_singular(dedup(points, closed), closed, &singular) {
            if let Some(c) = finish(l, pts, closed) {
                contours.push(c);
            }
        }
    }
    contours.sort_by(|a, b| match (a.anchor(), b.anchor()) {
        (Some(p), Some(q)) => leftmost_lowest(&p, &q),
        _ => std::cmp::Ordering::Equal,
    });
    if contours.is_empty() {
        return Err(Error::EmptyTrace);
    }
    Ok(contours)
}

/// Builds the successor map `edge → edge` of the oriented cell segments.
fn link_segments(l: &PolynomialLemniscate, grid: &Grid, edges: &EdgeIndex) -> Vec<Option<usize>> {
    let w = grid.window;
    let mut next = vec![None; edges.count()];
    for j in 0..w.ny {
        for i in 0..w.nx {
            // corners and edges in counter-clockwise order
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let ids = [
                edges.horizontal(i, j),
                edges.vertical(i + 1, j),
                edges.horizontal(i, j + 1),
                edges.vertical(i, j),
            ];
            let inside = corners.map(|(a, b)| grid.inside(a, b));
            // (edge id, leaves the interior)
            let mut crossings = [(0usize, false); 4];
            let mut count = 0;
            for k in 0..4 {
                let (from, to) = (inside[k], inside[(k + 1) % 4]);
                if from != to {
                    crossings[count] = (ids[k], from);
                    count += 1;
                }
            }
            match count {
                0 => {}
                2 => {
                    let (exit, entry) = if crossings[0].1 {
                        (crossings[0].0, crossings[1].0)
                    } else {
                        (crossings[1].0, crossings[0].0)
                    };
                    next[exit] = Some(entry);
                }
                4 => {
                    let center = Point::new(
                        w.xmin + (w.xmax - w.xmin) * (i as f64 + 0.5) / w.nx as f64,
                        w.ymin + (w.ymax - w.ymin) * (j as f64 + 0.5) / w.ny as f64,
                    );
                    let joined = l.field(center) < 0.0;
                    for k in 0..4 {
                        let (id, exits) = crossings[k];
                        if exits {
                            // interior connected: cut off the exterior corner that
                            // follows; otherwise the interior corner before
                            let entry = if joined {
                                crossings[(k + 1) % 4].0
                            } else {
                                crossings[(k + 3) % 4].0
                            };
                            next[id] = Some(entry);
                        }
                    }
                }
                _ => unreachable!("a cell has an even number of sign changes"),
            }
        }
    }
    next
}

fn follow(start: usize, next: &[Option<usize>], visited: &mut [bool]) -> Vec<usize> {
    let mut chain = vec![start];
    visited[start] = true;
    let mut e = start;
    while let Some(n) = next[e] {
        if visited[n] {
            break;
        }
        visited[n] = true;
        chain.push(n);
        e = n;
    }
    chain
}

/// Position of the crossing on edge `e`, on the curve.
fn locate_crossing(
    l: &PolynomialLemniscate,
    grid: &Grid,
    edges: &EdgeIndex,
    e: usize,
    singular: &[Point],
) -> Point {
    let w = grid.window;
    let ((i0, j0), (i1, j1)) = edges.ends(e);
    let (a, b) = (w.node(i0, j0), w.node(i1, j1));
    let (fa, fb) = (grid.value(i0, j0), grid.value(i1, j1));
    let t = fa / (fa - fb);
    let guess = a + (b - a) * t;
    let reach = w.cell_diagonal();
    if let Some(s) = singular.iter().find(|s| s.distance(guess) <= reach) {
        return *s;
    }
    let bound = CONTOUR_TOL * l.scale().powi(l.degree() as i32);
    match refine(l, guess) {
        Ok(p) if p.distance(guess) <= reach => p,
        _ => {
            let p = bisect_edge(l, a, fa, b);
            if l.field(p).abs() <= bound {
                p
            } else {
                // last resort: whichever of the two candidates is closer to the curve
                let newton = newton_best_effort(l, guess);
                if l.field(newton).abs() < l.field(p).abs() && newton.distance(guess) <= reach {
                    newton
                } else {
                    p
                }
            }
        }
    }
}

fn newton_best_effort(l: &PolynomialLemniscate, p: Point) -> Point {
    let mut best = p;
    let mut best_f = l.field(p).abs();
    let mut p = p;
    for _ in 0..MAX_REFINE_ITERATIONS {
        let f = l.field(p);
        let g = l.gradient(p);
        let g2 = g.norm_squared();
        if g2 == 0.0 {
            break;
        }
        p = p - g * (f / g2);
        let fp = l.field(p).abs();
        if fp < best_f {
            best = p;
            best_f = fp;
        }
    }
    best
}

/// Bisection along the segment `a → b`, on which the field changes sign.
fn bisect_edge(l: &PolynomialLemniscate, a: Point, fa: f64, b: Point) -> Point {
    let a_inside = fa < 0.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (l.field(a + (b - a) * mid) < 0.0) == a_inside {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (pl, ph) = (a + (b - a) * lo, a + (b - a) * hi);
    if l.field(pl).abs() <= l.field(ph).abs() {
        pl
    } else {
        ph
    }
}

fn dedup(points: Vec<Point>, closed: bool) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    if closed {
        while out.len() > 1 && out.first() == out.last() {
            out.pop();
        }
    }
    out
}

/// Splits a closed contour into loops at singular points it visits repeatedly.
fn split_at_singular(
    points: Vec<Point>,
    closed: bool,
    singular: &[Point],
) -> Vec<(Vec<Point>, bool)> {
    if !closed {
        return vec![(points, false)];
    }
    for s in singular {
        let hits: Vec<usize> = (0..points.len()).filter(|&k| points[k] == *s).collect();
        if hits.len() < 2 {
            continue;
        }
        let n = points.len();
        let mut loops = Vec::new();
        for (h, &start) in hits.iter().enumerate() {
            let end = hits[(h + 1) % hits.len()];
            let len = (end + n - start) % n;
            let piece: Vec<Point> = (0..len.max(1)).map(|k| points[(start + k) % n]).collect();
            loops.extend(split_at_singular(piece, true, singular));
        }
        return loops;
    }
    vec![(points, true)]
}

fn finish(l: &PolynomialLemniscate, mut points: Vec<Point>, closed: bool) -> Option<Contour> {
    if closed {
        if points.len() < 3 {
            return None;
        }
        let start = (0..points.len())
            .min_by(|&a, &b| leftmost_lowest(&points[a], &points[b]))
            .unwrap_or(0);
        points.rotate_left(start);
    } else if points.len() < 2 {
        return None;
    }
    let max_residual = points.iter().map(|p| l.field(*p).abs()).fold(0.0, f64::max);
    Some(Contour {
        points,
        closed,
        max_residual,
    })
}

/// Total absolute area of the closed contours.
pub fn total_area(contours: &[Contour]) -> f64 {
    contours.iter().filter_map(|c| contour_area(c).ok()).sum()
}

/// One `x,y` pair per line, a blank line between contours. Coordinates use
/// the shortest representation that parses back to the same value.
pub fn contours_to_csv(contours: &[Contour]) -> String {
    let mut out = String::new();
    for (k, c) in contours.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for p in &c.points {
            let _ = writeln!(out, "{:?},{:?}", p.x, p.y);
        }
    }
    out
}

/// Reads the format written by [`contours_to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<Vec<Point>>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            continue;
        }
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `x,y`", n + 1)))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))
        };
        current.push(Point::new(parse(x)?, parse(y)?));
    }
    if !current.is_empty() {
        out.push(current);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::BernoulliConfig;
    use std::f64::consts::{PI, SQRT_2};

    fn circle(radius: f64) -> PolynomialLemniscate {
        PolynomialLemniscate::new(vec![Point::ORIGIN], radius).unwrap()
    }

    fn triangle(radius: f64) -> PolynomialLemniscate {
        let foci = (0..3)
            .map(|k| {
                let a = 2.0 * PI * k as f64 / 3.0;
                Point::new(a.cos(), a.sin())
            })
            .collect();
        PolynomialLemniscate::new(foci, radius).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(TraceWindow::new(0.0, 0.0, 0.0, 1.0, 8, 8).is_err());
        assert!(TraceWindow::new(0.0, 1.0, 0.0, 1.0, 7, 8).is_err());
        assert!(TraceWindow::new(0.0, f64::INFINITY, 0.0, 1.0, 8, 8).is_err());
        let w = TraceWindow::new(-1.0, 1.0, -2.0, 2.0, 8, 16).unwrap();
        assert_eq!(w.node(4, 8), Point::ORIGIN);
        assert_eq!(w.node(8, 16), Point::new(1.0, 2.0));
    }

    #[test]
    fn edge_index_roundtrip() {
        let e = EdgeIndex { nx: 5, ny: 3 };
        assert_eq!(e.ends(e.horizontal(2, 3)), ((2, 3), (3, 3)));
        assert_eq!(e.ends(e.vertical(5, 2)), ((5, 2), (5, 3)));
        assert_eq!(e.count(), 4 * 5 + 3 * 6);
    }

    #[test]
    fn unit_circle_trace() {
        let w = TraceWindow::new(-2.0, 2.0, -2.0, 2.0, 128, 128).unwrap();
        let contours = trace(&circle(1.0), &w).unwrap();
        assert_eq!(contours.len(), 1);
        let c = &contours[0];
        assert!(c.closed);
        assert!(c.max_residual <= 1e-10);
        assert!(c.signed_area() > 0.0);
        let area = contour_area(c).unwrap();
        assert!((area - PI).abs() <= 1e-3 * PI, "{area}");
    }

    #[test]
    fn bernoulli_trace_has_two_lobes() {
        let cfg = BernoulliConfig::canonical();
        let w = TraceWindow::new(-1.6, 1.6, -0.8, 0.8, 128, 128).unwrap();
        let contours = trace(&cfg.lemniscate(), &w).unwrap();
        assert_eq!(contours.len(), 2);
        for c in &contours {
            assert!(c.closed);
            assert!(c.signed_area() > 0.0);
            assert!(c.points.contains(&Point::ORIGIN));
            assert!(c.max_residual <= 1e-10);
        }
        // left lobe first
        assert!(contours[0].anchor().unwrap().x < -1.0);
        assert!((total_area(&contours) - 2.0).abs() < 2e-3);
    }

    #[test]
    fn bernoulli_trace_off_grid_double_point() {
        // the double point is not a grid node: saddle handling plus snapping
        let cfg = BernoulliConfig::canonical();
        let w = TraceWindow::new(-1.63, 1.57, -0.77, 0.81, 101, 57).unwrap();
        let contours = trace(&cfg.lemniscate(), &w).unwrap();
        assert_eq!(contours.len(), 2);
        for c in &contours {
            assert!(c.closed);
            assert!(c.signed_area() > 0.0);
            assert!(c.points.contains(&Point::ORIGIN));
        }
        assert!((total_area(&contours) - 2.0).abs() < 1e-2);
    }

    #[test]
    fn open_contours_at_the_window_boundary() {
        let w = TraceWindow::new(0.0, 2.0, -2.0, 2.0, 32, 64).unwrap();
        let contours = trace(&circle(1.0), &w).unwrap();
        assert_eq!(contours.len(), 1);
        assert!(!contours[0].closed);
        assert_eq!(contour_area(&contours[0]), Err(Error::OpenContour));
    }

    #[test]
    fn empty_trace() {
        let w = TraceWindow::new(5.0, 6.0, 5.0, 6.0, 8, 8).unwrap();
        assert_eq!(trace(&circle(1.0), &w), Err(Error::EmptyTrace));
    }

    #[test]
    fn three_foci_connectivity_follows_centroid_sign() {
        let w = TraceWindow::new(-2.0, 2.0, -2.0, 2.0, 160, 160).unwrap();
        for (radius, expected) in [(0.8, 3), (0.95, 3), (1.05, 1), (1.2, 1)] {
            let l = triangle(radius);
            let oracle = if l.field(Point::ORIGIN) < 0.0 { 1 } else { 3 };
            assert_eq!(oracle, expected);
            let contours = trace(&l, &w).unwrap();
            assert_eq!(contours.len(), expected, "radius {radius}");
            assert!(contours.iter().all(|c| c.closed && c.signed_area() > 0.0));
        }
    }

    #[test]
    fn refine_examples() {
        let l = BernoulliConfig::canonical().lemniscate();
        let p = refine(&l, Point::new(1.42, 0.01)).unwrap();
        assert!(l.field(p).abs() <= 1e-12);
        let on = Point::new(SQRT_2, 0.0);
        assert!(refine(&l, on).unwrap().distance(on) <= 1e-12);
        assert_eq!(refine(&l, Point::ORIGIN), Err(Error::SingularPoint));
    }

    #[test]
    fn refine_converges_quadratically() {
        let cfg = BernoulliConfig::canonical();
        let l = cfg.lemniscate();
        for k in 0..20 {
            let theta = -0.7 + 0.07 * k as f64;
            let on = cfg.polar_point(theta).unwrap();
            let n = l.gradient(on).normalized().unwrap();
            let (result, history) = refine_with_history(&l, on + n * 0.05);
            assert!(result.is_ok());
            let h: Vec<f64> = history.into_iter().filter(|r| *r > 1e-13).collect();
            if h.len() >= 3 {
                let m = h.len();
                let slope = (h[m - 1].ln() - h[m - 2].ln()) / (h[m - 2].ln() - h[m - 3].ln());
                assert!(slope >= 1.9, "theta={theta} {h:?}");
            }
        }
    }

    #[test]
    fn square_area() {
        let c = Contour {
            points: vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0),
            ],
            closed: true,
            max_residual: 0.0,
        };
        assert_eq!(contour_area(&c).unwrap(), 1.0);
        let mut cw = c.clone();
        cw.points.reverse();
        assert_eq!(cw.signed_area(), -1.0);
        assert_eq!(contour_area(&cw).unwrap(), 1.0);
    }

    #[test]
    fn polygon_area_limit() {
        let n = 4096;
        let c = Contour {
            points: (0..n)
                .map(|k| {
                    let a = 2.0 * PI * k as f64 / n as f64;
                    Point::new(a.cos(), a.sin())
                })
                .collect(),
            closed: true,
            max_residual: 0.0,
        };
        assert!((contour_area(&c).unwrap() - PI).abs() <= 1e-5);
    }

    #[test]
    fn csv_roundtrip() {
        let w = TraceWindow::new(-1.6, 1.6, -0.8, 0.8, 64, 64).unwrap();
        let contours = trace(&BernoulliConfig::canonical().lemniscate(), &w).unwrap();
        let text = contours_to_csv(&contours);
        let parsed = parse_csv(&text).unwrap();
        assert_eq!(parsed.len(), contours.len());
        for (c, p) in contours.iter().zip(&parsed) {
            assert_eq!(c.points.len(), p.len());
            for (a, b) in c.points.iter().zip(p) {
                assert!(a.distance(*b) <= 1e-12);
            }
        }
        assert!(parse_csv("1.0;2.0\n").is_err());
    }

    #[test]
    fn split_at_repeated_singular_point() {
        let s = Point::ORIGIN;
        let pts = vec![
            s,
            Point::new(1.0, -1.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
            s,
            Point::new(-1.0, -1.0),
            Point::new(-2.0, 0.0),
            Point::new(-1.0, 1.0),
        ];
        let loops = split_at_singular(pts, true, &[s]);
        assert_eq!(loops.len(), 2);
        assert!(loops
            .iter()
            .all(|(l, closed)| *closed && l.len() == 4 && l[0] == s));
    }
}

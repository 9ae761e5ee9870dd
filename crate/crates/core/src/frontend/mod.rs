//! Figures, SVG/CSV/JSON emitters and the command-line driver.

pub mod cli;
mod figures;
mod numfmt;
mod report;
mod scene;
mod svg;

pub use figures::{figure_scene, FigureParams, FigurePreset};
pub use numfmt::fmt_num;
pub use report::Report;
pub use scene::{Element, Scene, Shape, Style};
pub use svg::{emit_svg, SVG_WIDTH};

use crate::curves::BernoulliConfig;
use crate::error::Result;
use crate::tracer::TraceWindow;

/// `[-1.6c, 1.6c] × [-0.8c, 0.8c]` in the configuration's local frame, as an
/// axis-aligned box in the plane.
pub fn default_window(cfg: &BernoulliConfig, nx: usize, ny: usize) -> Result<TraceWindow> {
    let c = cfg.c();
    let corners = [(-1.6, -0.8), (1.6, -0.8), (1.6, 0.8), (-1.6, 0.8)]
        .map(|(u, v)| cfg.from_local(u * c, v * c));
    let xs = corners.map(|p| p.x);
    let ys = corners.map(|p| p.y);
    let min = |v: [f64; 4]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: [f64; 4]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    TraceWindow::new(min(xs), max(xs), min(ys), max(ys), nx, ny)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn canonical_default_window() {
        let w = default_window(&BernoulliConfig::canonical(), 512, 512).unwrap();
        assert_eq!((w.xmin, w.xmax, w.ymin, w.ymax), (-1.6, 1.6, -0.8, 0.8));
    }

    #[test]
    fn rotated_window_contains_vertices() {
        let cfg = BernoulliConfig::new(Point::new(0.0, -2.0), Point::new(0.0, 2.0)).unwrap();
        let w = default_window(&cfg, 64, 64).unwrap();
        assert!(w.ymax > cfg.vertex_distance() && w.ymin < -cfg.vertex_distance());
    }
}

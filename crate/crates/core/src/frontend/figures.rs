use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::default_window;
use super::scene::{Scene, Shape, Style};
use crate::constructions::{
    maclaurin_sample, normal_by_angle, right_angle_solve, tangent_circle_at, three_bar_solve, Side,
    ThreeBarState,
};
use crate::curves::{BernoulliConfig, PolynomialLemniscate};
use crate::error::{Error, Result};
use crate::geometry::{Point, Vector};
use crate::tracer::{trace, TraceWindow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigurePreset {
    Family3,
    Lemniscate,
    ThreeBar,
    Maclaurin,
    RightAngle,
    Inversion,
    TangentCircle,
    Normal,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 8] = [
        FigurePreset::Family3,
        FigurePreset::Lemniscate,
        FigurePreset::ThreeBar,
        FigurePreset::Maclaurin,
        FigurePreset::RightAngle,
        FigurePreset::Inversion,
        FigurePreset::TangentCircle,
        FigurePreset::Normal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigurePreset::Family3 => "family3",
            FigurePreset::Lemniscate => "lemniscate",
            FigurePreset::ThreeBar => "threebar",
            FigurePreset::Maclaurin => "maclaurin",
            FigurePreset::RightAngle => "rightangle",
            FigurePreset::Inversion => "inversion",
            FigurePreset::TangentCircle => "tangentcircle",
            FigurePreset::Normal => "normal",
        }
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigurePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigurePreset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// Construction parameters shown in a figure (radians).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FigureParams {
    /// Drive angle of the three-stick linkage; also picks `X` for the
    /// inversion, tangent-circle and normal figures.
    pub theta: f64,
    /// Secant angle of the circle construction.
    pub phi: f64,
    /// Crank angle of the right-angle linkage.
    pub alpha: f64,
    /// Cells per side of the tracing grid.
    pub grid: usize,
}

impl Default for FigureParams {
    fn default() -> Self {
        Self {
            theta: FRAC_PI_2,
            phi: FRAC_PI_6,
            alpha: FRAC_PI_3,
            grid: 256,
        }
    }
}

/// Largest tangent circle (in units of `c`) the viewbox grows to hold.
const MAX_FRAMED_RADIUS: f64 = 4.0;

/// Number of levels in the three-focus family.
const FAMILY_LEVELS: i32 = 9;

struct Pen {
    thin: f64,
    thick: f64,
}

impl Pen {
    fn for_window(w: &TraceWindow) -> Self {
        let base = 0.002 * (w.xmax - w.xmin);
        Self {
            thin: base,
            thick: 2.0 * base,
        }
    }
}

/// Smallest box holding `w` and `points`, padded by `pad`.
fn enclose(w: TraceWindow, points: &[Point], pad: f64) -> Result<TraceWindow> {
    let mut b = w;
    for p in points.iter().filter(|p| p.is_finite()) {
        b.xmin = b.xmin.min(p.x - pad);
        b.xmax = b.xmax.max(p.x + pad);
        b.ymin = b.ymin.min(p.y - pad);
        b.ymax = b.ymax.max(p.y + pad);
    }
    TraceWindow::new(b.xmin, b.xmax, b.ymin, b.ymax, w.nx, w.ny)
}

fn add_curve(scene: &mut Scene, l: &PolynomialLemniscate, grid: usize, width: f64) -> Result<()> {
    let w = scene.viewbox.with_grid(grid, grid)?;
    let contours = match trace(l, &w) {
        Ok(c) => c,
        Err(Error::EmptyTrace) => return Ok(()),
        Err(e) => return Err(e),
    };
    for c in contours {
        scene.push(
            Shape::Polyline {
                points: c.points,
                closed: c.closed,
            },
            Style::solid(width),
        )?;
    }
    Ok(())
}

fn mark(scene: &mut Scene, at: Point, label: &str, pen: &Pen) {
    scene.push_visible(Shape::Marker { at }, Style::solid(pen.thin).labeled(label));
}

fn stick(scene: &mut Scene, from: Point, to: Point, width: f64) {
    scene.push_visible(Shape::Segment { from, to }, Style::solid(width));
}

fn dashed(scene: &mut Scene, from: Point, to: Point, pen: &Pen) {
    scene.push_visible(Shape::Segment { from, to }, Style::dashed(pen.thin));
}

fn foci_and_center(scene: &mut Scene, cfg: &BernoulliConfig, pen: &Pen) {
    mark(scene, cfg.f1(), "F₁", pen);
    mark(scene, cfg.f2(), "F₂", pen);
    mark(scene, cfg.center(), "O", pen);
}

/// Builds the scene for one figure preset.
pub fn figure_scene(
    preset: FigurePreset,
    cfg: &BernoulliConfig,
    params: &FigureParams,
) -> Result<Scene> {
    let grid = params.grid;
    let base = default_window(cfg, grid, grid)?;
    let c = cfg.c();
    match preset {
        FigurePreset::Family3 => family3(cfg, grid),
        FigurePreset::Lemniscate => {
            let mut s = Scene::new(base);
            let pen = Pen::for_window(&s.viewbox);
            dashed(
                &mut s,
                cfg.from_local(-1.5 * c, 0.0),
                cfg.from_local(1.5 * c, 0.0),
                &pen,
            );
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thick)?;
            foci_and_center(&mut s, cfg, &pen);
            Ok(s)
        }
        FigurePreset::ThreeBar => {
            let st = three_bar_solve(cfg, params.theta, Side::Opposite)?;
            let mut s = Scene::new(enclose(base, &[st.a, st.b], 0.15 * c)?);
            let pen = Pen::for_window(&s.viewbox);
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thin)?;
            draw_three_bar(&mut s, cfg, &st, &pen);
            Ok(s)
        }
        FigurePreset::Maclaurin => {
            let m = maclaurin_sample(cfg, params.phi)?;
            let mut s = Scene::new(base);
            let pen = Pen::for_window(&s.viewbox);
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thin)?;
            s.push_visible(
                Shape::Circle {
                    center: cfg.f1(),
                    radius: c * std::f64::consts::FRAC_1_SQRT_2,
                },
                Style::dashed(pen.thin),
            );
            dashed(&mut s, m.x_prime, m.x, &pen);
            stick(&mut s, m.a, m.b, pen.thick);
            stick(&mut s, cfg.center(), m.x, pen.thick);
            stick(&mut s, cfg.center(), m.x_prime, pen.thick);
            foci_and_center(&mut s, cfg, &pen);
            for (p, name) in [(m.a, "A"), (m.b, "B"), (m.x, "X"), (m.x_prime, "X′")] {
                mark(&mut s, p, name, &pen);
            }
            Ok(s)
        }
        FigurePreset::RightAngle => {
            let r = right_angle_solve(cfg, params.alpha)?;
            let mut s = Scene::new(enclose(base, &[r.a], 0.15 * c)?);
            let pen = Pen::for_window(&s.viewbox);
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thin)?;
            let o = cfg.center();
            stick(&mut s, cfg.f1(), r.a, pen.thick);
            stick(&mut s, r.a, r.x, pen.thick);
            stick(&mut s, r.a, r.y, pen.thick);
            stick(&mut s, o, r.mid_x, pen.thick);
            stick(&mut s, o, r.mid_y, pen.thick);
            foci_and_center(&mut s, cfg, &pen);
            for (p, name) in [(r.a, "A"), (r.x, "X"), (r.y, "Y")] {
                mark(&mut s, p, name, &pen);
            }
            Ok(s)
        }
        FigurePreset::Inversion => inversion(cfg, params, base),
        FigurePreset::TangentCircle => {
            let st = three_bar_solve(cfg, params.theta, Side::Opposite)?;
            let circle = tangent_circle_at(&st).ok();
            // frame the circle unless it has run off towards a straight line
            let frame: Vec<Point> = circle
                .iter()
                .filter(|k| k.radius() <= MAX_FRAMED_RADIUS * c)
                .flat_map(|k| {
                    let (p, r) = (k.center(), k.radius());
                    [Point::new(p.x - r, p.y - r), Point::new(p.x + r, p.y + r)]
                })
                .collect();
            let mut s = Scene::new(enclose(base, &frame, 0.1 * c)?);
            let pen = Pen::for_window(&s.viewbox);
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thin)?;
            if let Some(circle) = circle {
                let p = circle.center();
                let shown = s.push_visible(
                    Shape::Circle {
                        center: p,
                        radius: circle.radius(),
                    },
                    Style::solid(pen.thick),
                );
                if shown {
                    dashed(&mut s, p, st.x, &pen);
                    dashed(&mut s, p, cfg.center(), &pen);
                    mark(&mut s, p, "P", &pen);
                }
            }
            foci_and_center(&mut s, cfg, &pen);
            mark(&mut s, st.x, "X", &pen);
            Ok(s)
        }
        FigurePreset::Normal => {
            let st = three_bar_solve(cfg, params.theta, Side::Opposite)?;
            let mut s = Scene::new(base);
            let pen = Pen::for_window(&s.viewbox);
            add_curve(&mut s, &cfg.lemniscate(), grid, pen.thin)?;
            let o = cfg.center();
            dashed(&mut s, o, cfg.f1(), &pen);
            dashed(&mut s, o, st.x, &pen);
            match normal_by_angle(cfg, st.x) {
                Ok(n) => {
                    let d: Vector = n.direction() * (0.6 * c);
                    s.push_visible(
                        Shape::Segment {
                            from: st.x - d,
                            to: st.x + d,
                        },
                        Style::solid(pen.thick).labeled("2∠XOF₁"),
                    );
                }
                Err(Error::DoublePoint) => {}
                Err(e) => return Err(e),
            }
            foci_and_center(&mut s, cfg, &pen);
            mark(&mut s, st.x, "X", &pen);
            Ok(s)
        }
    }
}

fn draw_three_bar(s: &mut Scene, cfg: &BernoulliConfig, st: &ThreeBarState, pen: &Pen) {
    stick(s, cfg.f1(), st.a, pen.thick);
    stick(s, st.a, st.b, pen.thick);
    stick(s, cfg.f2(), st.b, pen.thick);
    if let Some(p) = st.p {
        if s.push_visible(Shape::Marker { at: p }, Style::solid(pen.thin).labeled("P")) {
            dashed(s, st.a, p, pen);
            dashed(s, st.b, p, pen);
        }
    }
    foci_and_center(s, cfg, pen);
    for (p, name) in [(st.a, "A"), (st.b, "B"), (st.x, "X")] {
        mark(s, p, name, pen);
    }
}

/// Foci at the vertices of an equilateral triangle about `O` with
/// circumradius `c`; nine radii spaced by `2^(1/8)` around the critical
/// radius `c`, where the three ovals join.
fn family3(cfg: &BernoulliConfig, grid: usize) -> Result<Scene> {
    let c = cfg.c();
    let o = cfg.center();
    let foci: Vec<Point> = (0..3)
        .map(|k| o + cfg.axis().rotated(2.0 * PI * k as f64 / 3.0) * c)
        .collect();
    let half = FAMILY_LEVELS / 2;
    let radii: Vec<f64> = (-half..=half)
        .map(|k| c * 2f64.powf(k as f64 / 8.0))
        .collect();
    let outer = PolynomialLemniscate::new(foci.clone(), radii[radii.len() - 1])?;
    let w = TraceWindow::around(&outer, grid, grid)?;
    let mut s = Scene::new(w);
    let pen = Pen::for_window(&s.viewbox);
    for r in radii {
        let l = PolynomialLemniscate::new(foci.clone(), r)?;
        let width = if r == c { pen.thick } else { pen.thin };
        add_curve(&mut s, &l, grid, width)?;
    }
    for (k, f) in foci.iter().enumerate() {
        mark(&mut s, *f, &format!("F{}", k + 1), &pen);
    }
    Ok(s)
}

fn inversion(cfg: &BernoulliConfig, params: &FigureParams, base: TraceWindow) -> Result<Scene> {
    let c = cfg.c();
    let o = cfg.center();
    let st = three_bar_solve(cfg, params.theta, Side::Opposite)?;
    let mut s = Scene::new(base);
    let pen = Pen::for_window(&s.viewbox);
    add_curve(&mut s, &cfg.lemniscate(), params.grid, pen.thick)?;
    let h = cfg.hyperbola();
    let steps = 400;
    for right in [false, true] {
        let pts: Vec<Point> = (0..=steps)
            .map(|k| h.point_at(right, -3.0 + 6.0 * k as f64 / steps as f64))
            .collect();
        s.push_clipped(&pts, Style::solid(pen.thick));
    }
    s.push_visible(
        Shape::Circle {
            center: o,
            radius: c,
        },
        Style::dashed(pen.thin),
    );
    foci_and_center(&mut s, cfg, &pen);
    mark(&mut s, st.x, "X", &pen);
    if let (Some(p), Some(q)) = (st.p, st.q) {
        if s.push_visible(Shape::Marker { at: q }, Style::solid(pen.thin).labeled("Q")) {
            dashed(&mut s, o, q, &pen);
            let product = o.distance(st.x) * o.distance(q) / (c * c);
            let v = s.viewbox;
            let note = Point::new(
                v.xmin + 0.42 * (v.xmax - v.xmin),
                v.ymin + 0.06 * (v.ymax - v.ymin),
            );
            s.push_visible(
                Shape::Text { at: note },
                Style::solid(pen.thin).labeled(format!("|OX|·|OQ| = {product:.3}")),
            );
        }
        mark(&mut s, p, "P", &pen);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::emit_svg;

    fn params() -> FigureParams {
        FigureParams {
            grid: 96,
            ..FigureParams::default()
        }
    }

    fn polylines(s: &Scene) -> usize {
        s.elements
            .iter()
            .filter(|e| matches!(e.shape, Shape::Polyline { .. }))
            .count()
    }

    fn labeled(s: &Scene, label: &str) -> Vec<Point> {
        s.elements
            .iter()
            .filter(|e| e.style.label.as_deref() == Some(label))
            .map(|e| e.shape.anchor())
            .collect()
    }

    #[test]
    fn preset_names_round_trip() {
        for p in FigurePreset::ALL {
            assert_eq!(p.name().parse::<FigurePreset>().unwrap(), p);
        }
        assert_eq!(
            "spiral".parse::<FigurePreset>(),
            Err(Error::UnknownPreset("spiral".into()))
        );
    }

    #[test]
    fn lemniscate_preset() {
        let s = figure_scene(
            FigurePreset::Lemniscate,
            &BernoulliConfig::canonical(),
            &params(),
        )
        .unwrap();
        assert_eq!(polylines(&s), 2);
        assert_eq!(labeled(&s, "O"), vec![Point::ORIGIN]);
        assert_eq!(labeled(&s, "F₁"), vec![Point::new(-1.0, 0.0)]);
        assert_eq!(labeled(&s, "F₂"), vec![Point::new(1.0, 0.0)]);
    }

    #[test]
    fn three_bar_preset() {
        let s = figure_scene(
            FigurePreset::ThreeBar,
            &BernoulliConfig::canonical(),
            &params(),
        )
        .unwrap();
        let x = labeled(&s, "X")[0];
        assert!(x.distance(Point::new(-2.0 / 3.0, 2f64.sqrt() / 3.0)) < 1e-12);
        let segments = s
            .elements
            .iter()
            .filter(|e| matches!(e.shape, Shape::Segment { .. }) && !e.style.dashed)
            .count();
        assert_eq!(segments, 3);
        s.validate().unwrap();
    }

    #[test]
    fn inversion_preset_annotates_the_product() {
        let s = figure_scene(
            FigurePreset::Inversion,
            &BernoulliConfig::canonical(),
            &params(),
        )
        .unwrap();
        assert_eq!(labeled(&s, "|OX|·|OQ| = 1.000").len(), 1);
        for name in ["X", "Q", "P"] {
            assert_eq!(labeled(&s, name).len(), 1, "{name}");
        }
        assert!(polylines(&s) >= 4);
    }

    #[test]
    fn family3_has_nine_levels() {
        let s = figure_scene(
            FigurePreset::Family3,
            &BernoulliConfig::canonical(),
            &params(),
        )
        .unwrap();
        // four levels below the critical radius give three ovals each
        assert!(polylines(&s) >= 4 * 3 + 5);
        assert_eq!(emit_svg(&s, true), emit_svg(&s, true));
    }

    #[test]
    fn all_presets_render() {
        let cfg = BernoulliConfig::new(Point::new(0.3, -1.0), Point::new(2.0, 0.5)).unwrap();
        for p in FigurePreset::ALL {
            let s = figure_scene(p, &cfg, &params()).unwrap();
            s.validate().unwrap();
            assert!(!s.elements.is_empty(), "{p}");
        }
    }
}

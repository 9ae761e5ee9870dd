//! Python bindings. Points cross the boundary as `(x, y)` tuples and angles
//! are radians.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lemniscate::constructions::{self, Side};
use lemniscate::frontend::{self, FigureParams, FigurePreset};
use lemniscate::tracer;
use lemniscate::verify::{self, VerifyOptions};
use lemniscate::{Error, Point, TraceWindow};

type Xy = (f64, f64);

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pt(p: Xy) -> Point {
    Point::new(p.0, p.1)
}

fn xy(p: Point) -> Xy {
    (p.x, p.y)
}

fn side(s: &str) -> PyResult<Side> {
    s.parse().map_err(err)
}

/// A focus pair and the lemniscate of Bernoulli through their midpoint.
#[pyclass(frozen, from_py_object, module = "pylemniscate")]
#[derive(Clone)]
struct BernoulliConfig(lemniscate::BernoulliConfig);

#[pymethods]
impl BernoulliConfig {
    #[new]
    #[pyo3(signature = (f1 = (-1.0, 0.0), f2 = (1.0, 0.0)))]
    fn new(f1: Xy, f2: Xy) -> PyResult<Self> {
        lemniscate::BernoulliConfig::new(pt(f1), pt(f2))
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn f1(&self) -> Xy {
        xy(self.0.f1())
    }

    #[getter]
    fn f2(&self) -> Xy {
        xy(self.0.f2())
    }

    #[getter]
    fn center(&self) -> Xy {
        xy(self.0.center())
    }

    #[getter]
    fn c(&self) -> f64 {
        self.0.c()
    }

    fn field(&self, p: Xy) -> f64 {
        self.0.field(pt(p))
    }

    fn gradient(&self, p: Xy) -> Xy {
        let g = self.0.gradient(pt(p));
        (g.x, g.y)
    }

    fn polar_point(&self, theta: f64) -> PyResult<Xy> {
        self.0.polar_point(theta).map(xy).map_err(err)
    }

    fn area(&self) -> f64 {
        self.0.area()
    }

    fn hyperbola_residual(&self, p: Xy) -> f64 {
        self.0.hyperbola().residual(pt(p))
    }

    fn __repr__(&self) -> String {
        let (f1, f2) = (self.0.f1(), self.0.f2());
        format!(
            "BernoulliConfig(({}, {}), ({}, {}))",
            f1.x, f1.y, f2.x, f2.y
        )
    }
}

/// Product of distances to the foci equal to `radius^n`.
#[pyclass(frozen, from_py_object, module = "pylemniscate")]
#[derive(Clone)]
struct PolynomialLemniscate(lemniscate::PolynomialLemniscate);

#[pymethods]
impl PolynomialLemniscate {
    #[new]
    fn new(foci: Vec<Xy>, radius: f64) -> PyResult<Self> {
        lemniscate::PolynomialLemniscate::new(foci.into_iter().map(pt).collect(), radius)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn foci(&self) -> Vec<Xy> {
        self.0.foci().iter().copied().map(xy).collect()
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.0.radius()
    }

    fn field(&self, p: Xy) -> f64 {
        self.0.field(pt(p))
    }

    /// Polynomial in `x`, `y` as text.
    fn expand(&self) -> PyResult<String> {
        self.0.expand().map(|t| t.to_string()).map_err(err)
    }

    /// `{(i, j): coefficient}` for the non-zero terms of `xⁱ yʲ`.
    fn coefficients(&self) -> PyResult<BTreeMap<(usize, usize), f64>> {
        let t = self.0.expand().map_err(err)?;
        Ok(t.terms().map(|(i, j, c)| ((i, j), c)).collect())
    }

    /// Closed or open contours as lists of points.
    #[pyo3(signature = (window = None, grid = 512))]
    fn trace(&self, window: Option<(f64, f64, f64, f64)>, grid: usize) -> PyResult<Vec<Contour>> {
        let w = match window {
            Some((a, b, c, d)) => TraceWindow::new(a, b, c, d, grid, grid),
            None => TraceWindow::around(&self.0, grid, grid),
        }
        .map_err(err)?;
        let contours = tracer::trace(&self.0, &w).map_err(err)?;
        Ok(contours.into_iter().map(Contour).collect())
    }
}

#[pyclass(frozen, module = "pylemniscate")]
struct Contour(tracer::Contour);

#[pymethods]
impl Contour {
    #[getter]
    fn points(&self) -> Vec<Xy> {
        self.0.points.iter().copied().map(xy).collect()
    }

    #[getter]
    fn closed(&self) -> bool {
        self.0.closed
    }

    #[getter]
    fn max_residual(&self) -> f64 {
        self.0.max_residual
    }

    fn area(&self) -> PyResult<f64> {
        self.0.area().map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.points.len()
    }
}

#[pyclass(frozen, module = "pylemniscate")]
struct ThreeBarState(constructions::ThreeBarState);

#[pymethods]
impl ThreeBarState {
    #[getter]
    fn theta(&self) -> f64 {
        self.0.theta
    }

    #[getter]
    fn a(&self) -> Xy {
        xy(self.0.a)
    }

    #[getter]
    fn b(&self) -> Xy {
        xy(self.0.b)
    }

    #[getter]
    fn x(&self) -> Xy {
        xy(self.0.x)
    }

    #[getter]
    fn p(&self) -> Option<Xy> {
        self.0.p.map(xy)
    }

    #[getter]
    fn q(&self) -> Option<Xy> {
        self.0.q.map(xy)
    }

    fn __repr__(&self) -> String {
        format!(
            "ThreeBarState(theta={}, x=({}, {}))",
            self.0.theta, self.0.x.x, self.0.x.y
        )
    }
}

#[pyfunction]
#[pyo3(signature = (cfg, theta, side = "opposite"))]
fn three_bar_solve(cfg: BernoulliConfig, theta: f64, side: &str) -> PyResult<ThreeBarState> {
    constructions::three_bar_solve(&cfg.0, theta, self::side(side)?)
        .map(ThreeBarState)
        .map_err(err)
}

/// `(A, B, X, X′)` for the secant at angle `phi` from the `O → F₁` ray.
#[pyfunction]
fn maclaurin_sample(cfg: BernoulliConfig, phi: f64) -> PyResult<(Xy, Xy, Xy, Xy)> {
    let m = constructions::maclaurin_sample(&cfg.0, phi).map_err(err)?;
    Ok((xy(m.a), xy(m.b), xy(m.x), xy(m.x_prime)))
}

/// `(A, X, Y)` for crank angle `alpha`.
#[pyfunction]
fn right_angle_solve(cfg: BernoulliConfig, alpha: f64) -> PyResult<(Xy, Xy, Xy)> {
    let r = constructions::right_angle_solve(&cfg.0, alpha).map_err(err)?;
    Ok((xy(r.a), xy(r.x), xy(r.y)))
}

#[pyfunction]
fn invert_between(cfg: BernoulliConfig, p: Xy) -> PyResult<Xy> {
    constructions::invert_between(&cfg.0, pt(p))
        .map(xy)
        .map_err(err)
}

/// Unit direction of the normal at an on-curve point.
#[pyfunction]
fn normal_by_angle(cfg: BernoulliConfig, x: Xy) -> PyResult<Xy> {
    let l = constructions::normal_by_angle(&cfg.0, pt(x)).map_err(err)?;
    let d = l.direction();
    Ok((d.x, d.y))
}

/// SVG text for a figure preset.
#[pyfunction]
#[pyo3(signature = (preset, cfg = None, theta = None, phi = None, alpha = None, grid = 256, flip_y = true))]
#[allow(clippy::too_many_arguments)]
fn figure_svg(
    preset: &str,
    cfg: Option<BernoulliConfig>,
    theta: Option<f64>,
    phi: Option<f64>,
    alpha: Option<f64>,
    grid: usize,
    flip_y: bool,
) -> PyResult<String> {
    let preset: FigurePreset = preset.parse().map_err(err)?;
    let d = FigureParams::default();
    let params = FigureParams {
        theta: theta.unwrap_or(d.theta),
        phi: phi.unwrap_or(d.phi),
        alpha: alpha.unwrap_or(d.alpha),
        grid,
    };
    let cfg = cfg.map(|c| c.0).unwrap_or_default();
    let scene = frontend::figure_scene(preset, &cfg, &params).map_err(err)?;
    Ok(frontend::emit_svg(&scene, flip_y))
}

/// `{name: (value, passed)}` for every numerical check.
#[pyfunction]
#[pyo3(signature = (cfg = None, samples = 10_000, small_samples = 1_000, grid = 512))]
fn verify_all(
    cfg: Option<BernoulliConfig>,
    samples: usize,
    small_samples: usize,
    grid: usize,
) -> PyResult<BTreeMap<String, (f64, bool)>> {
    let cfg = cfg.map(|c| c.0).unwrap_or_default();
    let opts = VerifyOptions {
        samples,
        small_samples,
        grid,
        ..VerifyOptions::default()
    };
    let checks = verify::run(&cfg, &opts).map_err(err)?;
    Ok(checks
        .into_iter()
        .map(|c| {
            let passed = c.passed();
            (c.name, (c.value, passed))
        })
        .collect())
}

#[pymodule]
mod pylemniscate {
    #[pymodule_export]
    use super::{
        figure_svg, invert_between, maclaurin_sample, normal_by_angle, right_angle_solve,
        three_bar_solve, verify_all, BernoulliConfig, Contour, PolynomialLemniscate, ThreeBarState,
    };
}

//! Numerical checks of the lemniscate identities, shared by the `verify`
//! subcommand and the acceptance suite. Residuals are scaled by the matching
//! power of `c` so thresholds do not depend on the configuration's size.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    maclaurin_angles, maclaurin_sweep, normal_by_angle, right_angle_sweep, tangent_circle_at,
    three_bar_angles, three_bar_sweep, Side,
};
use crate::curves::{
    unit_hyperbola_foci, BernoulliConfig, EquilateralHyperbola, PolynomialLemniscate,
};
use crate::error::Result;
use crate::geometry::{
    invert_line, invert_point, reflect_across_line, InversionMap, Line, Point, Vector,
};
use crate::tracer::{total_area, trace, TraceWindow};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: Bound,
}

impl Check {
    pub fn at_most(name: &str, value: f64, limit: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            bound: Bound::AtMost(limit),
        }
    }

    pub fn at_least(name: &str, value: f64, limit: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            bound: Bound::AtLeast(limit),
        }
    }

    /// NaN never passes.
    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost(l) => self.value <= l,
            Bound::AtLeast(l) => self.value >= l,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, limit) = match self.bound {
            Bound::AtMost(l) => ("<=", l),
            Bound::AtLeast(l) => (">=", l),
        };
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<28} {:.3e} {op} {limit:e}",
            self.name, self.value
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    /// Sweep length for the constructions.
    pub samples: usize,
    /// Sample count for the random and per-state checks.
    pub small_samples: usize,
    /// Cells per side for the traced area.
    pub grid: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 10_000,
            small_samples: 1_000,
            grid: 512,
            seed: 0x1e_a15c,
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |m: f64, v| {
        if v.is_nan() || m.is_nan() {
            f64::NAN
        } else {
            m.max(v)
        }
    })
}

/// `|field| / c⁴`.
fn field_residual(cfg: &BernoulliConfig, p: Point) -> f64 {
    cfg.field(p).abs() / cfg.c().powi(4)
}

/// Evenly spaced polar angles strictly inside both lobes.
pub fn polar_angles(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let t = -FRAC_PI_4 + PI / 2.0 * (k as f64 + 0.5) / n as f64;
            if k % 2 == 0 {
                t
            } else {
                t + PI
            }
        })
        .collect()
}

/// `| |XF₁|·|XF₂| - c² | / c²` over the polar parametrization.
pub fn defining_product(cfg: &BernoulliConfig, n: usize) -> Result<Check> {
    let c2 = cfg.c() * cfg.c();
    let mut worst: f64 = 0.0;
    for t in polar_angles(n) {
        worst = worst.max(cfg.product_residual(cfg.polar_point(t)?).abs() / c2);
    }
    Ok(Check::at_most("polar_product", worst, 1e-10))
}

/// Traced area relative to `|F₁F₂|²/2` on the default window.
pub fn traced_area_error(cfg: &BernoulliConfig, grid: usize) -> Result<f64> {
    let w = crate::frontend::default_window(cfg, grid, grid)?;
    let contours = trace(&cfg.lemniscate(), &w)?;
    Ok((total_area(&contours) - cfg.area()).abs() / cfg.area())
}

/// The three-stick sweep: curve membership, stick lengths, trapezoid,
/// `P`/`Q` on the hyperbola and the inversion pairing of `X` and `Q`.
pub fn three_bar_checks(cfg: &BernoulliConfig, n: usize) -> Result<Vec<Check>> {
    let (f1, f2, o) = (cfg.f1(), cfg.f2(), cfg.center());
    let c = cfg.c();
    let h = cfg.hyperbola();
    let states: Vec<_> = three_bar_sweep(cfg, &three_bar_angles(n), Side::Opposite)
        .into_iter()
        .collect::<Result<_>>()?;
    let field = max_of(states.iter().map(|s| field_residual(cfg, s.x)));
    let sticks = max_of(states.iter().map(|s| {
        let e1 = (f1.distance(s.a) - SQRT_2 * c).abs();
        let e2 = (f2.distance(s.b) - SQRT_2 * c).abs();
        let e3 = (s.a.distance(s.b) - 2.0 * c).abs();
        e1.max(e2).max(e3) / c
    }));
    let trapezoid = max_of(states.iter().map(|s| trapezoid_residual(cfg, s)));
    let with_pq: Vec<_> = states
        .iter()
        .filter_map(|s| Some((s, s.p?, s.q?)))
        .collect();
    let pq = max_of(
        with_pq
            .iter()
            .map(|(_, p, q)| h.residual(*p).abs().max(h.residual(*q).abs()) / c),
    );
    let pairing = max_of(
        with_pq
            .iter()
            .map(|(s, _, q)| (o.distance(s.x) * o.distance(*q) - c * c).abs() / (c * c)),
    );
    // Q on the ray OX: unit directions agree
    let ray = max_of(with_pq.iter().filter_map(|(s, _, q)| {
        let dx = (s.x - o).normalized()?;
        let dq = (*q - o).normalized()?;
        Some((dx - dq).norm())
    }));
    Ok(vec![
        Check::at_most("threebar_field", field, 1e-8),
        Check::at_most("threebar_sticks", sticks, 1e-10),
        Check::at_most("threebar_trapezoid", trapezoid, 1e-9),
        Check::at_most("threebar_pq_hyperbola", pq, 1e-8),
        Check::at_most("inversion_product", pairing, 1e-8),
        Check::at_most("inversion_ray", ray, 1e-8),
    ])
}

/// `F₁AF₂B` is an isosceles trapezoid: bases `AF₂ ∥ F₁B`, equal legs
/// `F₁A`, `F₂B` and equal diagonals `F₁F₂`, `AB`.
pub fn trapezoid_residual(cfg: &BernoulliConfig, s: &crate::constructions::ThreeBarState) -> f64 {
    let (f1, f2) = (cfg.f1(), cfg.f2());
    let c = cfg.c();
    let bases = match ((f2 - s.a).normalized(), (s.b - f1).normalized()) {
        (Some(u), Some(v)) => u.cross(v).abs(),
        _ => 0.0,
    };
    let legs = (f1.distance(s.a) - f2.distance(s.b)).abs() / c;
    let diagonals = (f1.distance(f2) - s.a.distance(s.b)).abs() / c;
    bases.max(legs).max(diagonals)
}

/// Hyperbola points mapped back by the inversion land on the lemniscate.
pub fn inverse_inversion(cfg: &BernoulliConfig, n: usize) -> Result<Check> {
    let h = cfg.hyperbola();
    let map = cfg.inversion();
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let t = -4.0 + 8.0 * (k as f64 + 0.5) / n as f64;
        let q = h.point_at(k % 2 == 0, t);
        let x = invert_point(&map, q)?;
        worst = worst.max(field_residual(cfg, x));
    }
    Ok(Check::at_most("inversion_inverse", worst, 1e-8))
}

pub fn maclaurin_checks(cfg: &BernoulliConfig, n: usize) -> Result<Vec<Check>> {
    let samples: Vec<_> = maclaurin_sweep(cfg, &maclaurin_angles(n))
        .into_iter()
        .collect::<Result<_>>()?;
    let field = max_of(
        samples
            .iter()
            .map(|m| field_residual(cfg, m.x).max(field_residual(cfg, m.x_prime))),
    );
    let axis = crate::constructions::maclaurin_sample(cfg, 0.0)?;
    let v = cfg.vertex_distance();
    let (f1_side, f2_side) = (cfg.from_local(-v, 0.0), cfg.from_local(v, 0.0));
    let vertex = axis.x.distance(f1_side).max(axis.x_prime.distance(f2_side)) / cfg.c();
    Ok(vec![
        Check::at_most("maclaurin_field", field, 1e-8),
        Check::at_most("maclaurin_vertices", vertex, 1e-12),
    ])
}

/// Membership of both coupler points, and `X`/`Y` staying in opposite lobes
/// (counted as the number of violations) over the open crank range.
pub fn right_angle_checks(cfg: &BernoulliConfig, n: usize) -> Result<Vec<Check>> {
    let alphas: Vec<f64> = (0..n)
        .map(|k| -PI / 2.0 + PI * (k as f64 + 0.5) / n as f64)
        .collect();
    let states: Vec<_> = right_angle_sweep(cfg, &alphas)
        .into_iter()
        .collect::<Result<_>>()?;
    let field = max_of(
        states
            .iter()
            .map(|s| field_residual(cfg, s.x).max(field_residual(cfg, s.y))),
    );
    let crossings = states
        .iter()
        .filter(|s| !(cfg.to_local(s.x).0 > 0.0 && cfg.to_local(s.y).0 < 0.0))
        .count();
    Ok(vec![
        Check::at_most("rightangle_field", field, 1e-8),
        Check::at_most("rightangle_lobe_mixing", crossings as f64, 0.0),
    ])
}

/// Smallest `|OX| / c` for the tangent-circle checks. The circle about `P`
/// also passes through `O`, so arc offsets must stay well below `|OX|`, and
/// `P` runs off to infinity as `X` approaches `O`.
pub const TANGENT_MIN_DISTANCE: f64 = 0.1;

/// Drive angles whose linkage point stays clear of the double point and
/// whose `P` exists.
fn generic_states(cfg: &BernoulliConfig, n: usize) -> Vec<crate::constructions::ThreeBarState> {
    three_bar_sweep(cfg, &three_bar_angles(n), Side::Opposite)
        .into_iter()
        .filter_map(|s| s.ok())
        .filter(|s| s.p.is_some() && s.x.distance(cfg.center()) >= TANGENT_MIN_DISTANCE * cfg.c())
        .collect()
}

/// Tangency of the circle about `P`: `P - X` parallel to the gradient, and
/// the field along the circle vanishing to second order at `X`. The contact
/// value is the smallest log-log slope over the states.
pub fn tangent_circle_checks(cfg: &BernoulliConfig, n: usize) -> Result<Vec<Check>> {
    let states = generic_states(cfg, n);
    let per_state: Vec<(f64, f64)> = states
        .par_iter()
        .map(|s| -> Result<(f64, f64)> {
            let circle = tangent_circle_at(s)?;
            let radial = (circle.center() - s.x).normalized().unwrap_or_default();
            let g = cfg.gradient(s.x).normalized().unwrap_or_default();
            let cross = radial.cross(g).abs();
            let start = (s.x - circle.center()).angle();
            let r = circle.radius();
            let offsets = [1e-2, 1e-3, 1e-4];
            let logs: Vec<(f64, f64)> = offsets
                .iter()
                .map(|ds| {
                    let q = circle.point_at(start + ds * cfg.c() / r);
                    (ds.ln(), cfg.field(q).abs().ln())
                })
                .collect();
            Ok((cross, least_squares_slope(&logs)))
        })
        .collect::<Result<_>>()?;
    let cross = max_of(per_state.iter().map(|v| v.0));
    let slope = per_state.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    Ok(vec![
        Check::at_most("tangent_circle_cross", cross, 1e-8),
        Check::at_least("tangent_contact_slope", slope, 1.9),
    ])
}

pub fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Angle between the constructed normal and the gradient (as lines).
pub fn normal_check(cfg: &BernoulliConfig, n: usize) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for t in polar_angles(n) {
        let x = cfg.polar_point(t)?;
        let line = normal_by_angle(cfg, x)?;
        let g = cfg.gradient(x).normalized().unwrap_or_default();
        let d = line.direction();
        worst = worst.max(d.cross(g).abs().min(1.0).asin());
    }
    Ok(Check::at_most("normal_angle", worst, 1e-8))
}

/// `P` is where the normal at `X` meets the perpendicular from `O` to the
/// hyperbola tangent at `Q`.
pub fn tangent_center_check(cfg: &BernoulliConfig, n: usize) -> Result<Check> {
    let h = cfg.hyperbola();
    let mut worst: f64 = 0.0;
    for s in generic_states(cfg, n) {
        let (p, q) = (s.p.expect("filtered"), s.q.expect("filtered"));
        let normal = normal_by_angle(cfg, s.x)?;
        let tangent = h.tangent_at(q)?;
        let perp = Line::new(cfg.center(), tangent.direction().perp())?;
        if let Some(meet) = crate::geometry::line_line_intersection(&normal, &perp) {
            worst = worst.max(meet.distance(p) / cfg.c().max(p.distance(cfg.center())));
        }
    }
    Ok(Check::at_most("tangent_center", worst, 1e-8))
}

/// Random lines and inversion circles: images of line samples lie on the
/// predicted circle, whose center is the image of the reflected center.
pub fn lemma_checks(n: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut on_circle, mut center): (f64, f64) = (0.0, 0.0);
    let mut done = 0;
    while done < n {
        let o = Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let r = rng.gen_range(0.2..3.0);
        let map = InversionMap::new(o, r)?;
        let anchor = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let dir = Vector::from_angle(rng.gen_range(0.0..PI));
        let line = Line::new(anchor, dir)?;
        if line.signed_distance(o).abs() < 1e-2 {
            continue;
        }
        done += 1;
        let image = invert_line(&map, &line)?;
        for k in 0..50 {
            let t = -5.0 + 10.0 * k as f64 / 49.0;
            let p = line.point_at(t);
            if p.distance(o) < 1e-9 {
                continue;
            }
            let q = invert_point(&map, p)?;
            let res = (q.distance(image.center()) - image.radius()).abs() / image.radius().max(1.0);
            on_circle = on_circle.max(res);
        }
        let predicted = invert_point(&map, reflect_across_line(&line, o))?;
        center = center.max(predicted.distance(image.center()) / image.radius().max(1.0));
    }
    Ok(vec![
        Check::at_most("lemma_image_circle", on_circle, 1e-9),
        Check::at_most("lemma_center", center, 1e-9),
    ])
}

/// Expanded polynomial against the product form for random foci, and the
/// total degree.
pub fn expansion_checks(seed: u64) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rel: f64 = 0.0;
    let mut degree_errors = 0usize;
    for n in [1usize, 2, 3, 5] {
        let foci: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let l = PolynomialLemniscate::new(foci, rng.gen_range(0.5..2.0))?;
        let table = l.expand()?;
        if table.total_degree() != 2 * n {
            degree_errors += 1;
        }
        for _ in 0..100 {
            let p = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let direct = l.field(p);
            let scale = (direct + l.level()).max(l.level());
            rel = rel.max((table.evaluate(p) - direct).abs() / scale);
        }
    }
    Ok(vec![
        Check::at_most("expansion_pointwise", rel, 1e-9),
        Check::at_most("expansion_degree_errors", degree_errors as f64, 0.0),
    ])
}

/// The hyperbola with foci `(±√2, ±√2)` is `y = 1/x`; every tangent's
/// intercepts with the axes have the touching point as midpoint.
pub fn reciprocal_checks() -> Result<Vec<Check>> {
    let (f1, f2) = unit_hyperbola_foci();
    let h = EquilateralHyperbola::new(f1, f2)?;
    let ts: Vec<f64> = (0..100).map(|k| 0.1 + 9.9 * k as f64 / 99.0).collect();
    let residual = max_of(ts.iter().map(|t| h.residual(Point::new(*t, 1.0 / t)).abs()));
    let x_axis = Line::new(Point::ORIGIN, Vector::new(1.0, 0.0))?;
    let y_axis = Line::new(Point::ORIGIN, Vector::new(0.0, 1.0))?;
    let mut midpoint: f64 = 0.0;
    for t in &ts {
        let q = Point::new(*t, 1.0 / t);
        let tangent = h.tangent_at(q)?;
        let r = crate::geometry::line_line_intersection(&tangent, &x_axis);
        let s = crate::geometry::line_line_intersection(&tangent, &y_axis);
        let err = match (r, s) {
            (Some(r), Some(s)) => r.midpoint(s).distance(q),
            _ => f64::INFINITY,
        };
        midpoint = midpoint.max(err);
    }
    Ok(vec![
        Check::at_most("reciprocal_residual", residual, 1e-9),
        Check::at_most("reciprocal_tangent_midpoint", midpoint, 1e-12),
    ])
}

/// Same-side linkage points stay on the circle about `O` of radius `c√2`
/// (a derived conjecture).
pub fn same_side_check(cfg: &BernoulliConfig, n: usize) -> Result<Check> {
    let o = cfg.center();
    let r = cfg.vertex_distance();
    let worst = max_of(
        three_bar_sweep(cfg, &three_bar_angles(n), Side::Same)
            .into_iter()
            .collect::<Result<Vec<_>>>()?
            .iter()
            .map(|s| (s.x.distance(o) - r).abs() / cfg.c()),
    );
    Ok(Check::at_most("same_side_circle", worst, 1e-8))
}

/// Largest `|field| / scale⁴` over the traced contours.
pub fn trace_residual(cfg: &BernoulliConfig, w: &TraceWindow) -> Result<Check> {
    let l = cfg.lemniscate();
    let contours = trace(&l, w)?;
    let worst = max_of(contours.iter().map(|c| c.max_residual)) / l.scale().powi(4);
    Ok(Check::at_most("trace_residual", worst, 1e-10))
}

/// Every check, in a fixed order.
pub fn run(cfg: &BernoulliConfig, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let n = opts.samples;
    let m = opts.small_samples;
    let mut checks = vec![defining_product(cfg, n)?];
    checks.extend(three_bar_checks(cfg, n)?);
    checks.push(inverse_inversion(cfg, m)?);
    checks.extend(maclaurin_checks(cfg, n)?);
    checks.extend(right_angle_checks(cfg, n)?);
    checks.extend(tangent_circle_checks(cfg, m)?);
    checks.push(tangent_center_check(cfg, m)?);
    checks.push(normal_check(cfg, m)?);
    checks.extend(lemma_checks(m, opts.seed)?);
    checks.extend(expansion_checks(opts.seed)?);
    checks.extend(reciprocal_checks()?);
    checks.push(same_side_check(cfg, n)?);
    let w = crate::frontend::default_window(cfg, opts.grid, opts.grid)?;
    checks.push(trace_residual(cfg, &w)?);
    checks.push(Check::at_most(
        "trace_area",
        traced_area_error(cfg, opts.grid)?,
        1e-3,
    ));
    Ok(checks)
}

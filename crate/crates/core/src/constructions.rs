//! Mechanical and ruler-and-compass constructions of the lemniscate of
//! Bernoulli, and the synthetic tangent circle and normal at a curve point.
//!
//! All angles are radians measured in the configuration's local frame
//! (origin at the double point `O`, `F₂` on the positive axis).

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curves::BernoulliConfig;
use crate::error::{Error, Result};
use crate::geometry::{
    angle_at, invert_point, line_circle_intersection, line_line_intersection, reflect_across_line,
    Circle, Line, Point, COINCIDENCE_EPS,
};

/// Field residual (relative to `c⁴`) accepted as "on the lemniscate".
pub const ON_CURVE_TOL: f64 = 1e-9;

/// Which intersection of the stick-constraint circles carries `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `A` and `B` on different sides of `F₁F₂` (crossed, antiparallelogram).
    Opposite,
    /// `A` and `B` on the same side (parallelogram).
    Same,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "opposite" => Ok(Side::Opposite),
            "same" => Ok(Side::Same),
            other => Err(Error::Parse(format!("unknown side `{other}`"))),
        }
    }
}

/// Three sticks `F₁A`, `AB`, `F₂B` with `|F₁A| = |F₂B| = c√2`, `|AB| = 2c`,
/// solved at one drive angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThreeBarState {
    /// Angle of stick `F₁A` from the `F₁ → F₂` direction.
    pub theta: f64,
    pub a: Point,
    pub b: Point,
    /// Midpoint of `AB`, the coupler point.
    pub x: Point,
    /// Intersection of lines `F₁A` and `F₂B`; absent when they are parallel.
    pub p: Option<Point>,
    /// Mirror image of `p` in the focal axis.
    pub q: Option<Point>,
    pub side: Side,
}

/// One secant of the construction circle through the double point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaclaurinSample {
    /// Secant direction, measured from the `O → F₁` ray.
    pub phi: f64,
    pub a: Point,
    pub b: Point,
    /// `O + |AB|·d` along the secant direction `d`.
    pub x: Point,
    /// `O - |AB|·d`.
    pub x_prime: Point,
}

/// The crank `F₁A` with `|F₁A| = |F₁O|` and two sticks `AX`, `AY` of length
/// `√2·|F₁O|`, each held at a right angle over `O` by a stick from `O` to
/// its midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RightAngleState {
    /// Crank angle at `F₁`, measured from the `F₁ → O` direction.
    pub alpha: f64,
    pub a: Point,
    /// Coupler point on the `F₂` lobe.
    pub x: Point,
    /// Coupler point on the `F₁` lobe.
    pub y: Point,
    /// Midpoint of `AX`.
    pub mid_x: Point,
    /// Midpoint of `AY`.
    pub mid_y: Point,
}

/// Solves the three-stick linkage for the drive angle `theta`.
///
/// The two positions of `B` allowed by the sticks are the crossed one (the
/// mirror of `F₁` in the perpendicular bisector of `AF₂`) and the
/// parallelogram one (`A + F₁F₂`). They are exactly the two intersections of
/// the constraint circles about `A` and `F₂`; the branch is chosen by the side
/// of the focal axis.
pub fn three_bar_solve(cfg: &BernoulliConfig, theta: f64, side: Side) -> Result<ThreeBarState> {
    if !theta.is_finite() {
        return Err(Error::NoSolution);
    }
    let (f1, f2) = (cfg.f1(), cfg.f2());
    let c = cfg.c();
    let axis_line = Line::through(f1, f2)?;
    let a = f1 + cfg.axis().rotated(theta) * (SQRT_2 * c);

    let bisector = Line::new(a.midpoint(f2), (f2 - a).perp())?;
    let crossed = reflect_across_line(&bisector, f1);
    let parallel = a + (f2 - f1);

    let side_of_a = axis_line.signed_distance(a);
    let wanted = match side {
        Side::Opposite => -side_of_a.signum(),
        Side::Same => side_of_a.signum(),
    };
    let mut candidates = [crossed, parallel];
    // ties (A on the axis): the candidate closest to the axis first
    candidates.sort_by(|p, q| {
        axis_line
            .signed_distance(*p)
            .abs()
            .total_cmp(&axis_line.signed_distance(*q).abs())
    });
    let b = candidates
        .iter()
        .copied()
        .find(|p| {
            let s = axis_line.signed_distance(*p);
            s != 0.0 && s.signum() == wanted && side_of_a != 0.0
        })
        .or_else(|| {
            candidates
                .iter()
                .copied()
                .find(|p| axis_line.signed_distance(*p).abs() <= COINCIDENCE_EPS * c.max(1.0))
        })
        .ok_or(Error::NoSolution)?;

    let x = a.midpoint(b);
    let p = match (Line::through(f1, a), Line::through(f2, b)) {
        (Ok(l1), Ok(l2)) => line_line_intersection(&l1, &l2),
        _ => None,
    };
    let q = p.map(|p| reflect_across_line(&axis_line, p));
    Ok(ThreeBarState {
        theta,
        a,
        b,
        x,
        p,
        q,
        side,
    })
}

/// Lays the chord `|AB|` cut from the circle about `F₁` of radius `|F₁O|/√2`
/// off along the secant through `O` in both directions.
pub fn maclaurin_sample(cfg: &BernoulliConfig, phi: f64) -> Result<MaclaurinSample> {
    let o = cfg.center();
    let toward_f1 = -cfg.axis();
    let secant = Line::new(o, toward_f1.rotated(phi))?;
    let circle = Circle::new(cfg.f1(), cfg.c() * FRAC_1_SQRT_2)?;
    let pts = line_circle_intersection(&secant, &circle);
    let (a, b) = match pts.as_slice() {
        [] => return Err(Error::NoChord),
        [t] => (*t, *t),
        [a, b, ..] => (*a, *b),
    };
    let chord = a.distance(b);
    let d = secant.direction();
    Ok(MaclaurinSample {
        phi,
        a,
        b,
        x: o + d * chord,
        x_prime: o - d * chord,
    })
}

/// Solves the right-angle linkage for crank angle `alpha`.
///
/// `|OB| = |AB| = |BX|` puts `O` on the circle with diameter `AX`, so `OX ⊥ OA`
/// and `|OX|² = |AX|² - |OA|²`. At `alpha = 0` the crank sits on `O` and the
/// direction of `OX` is taken as its limit, the focal axis.
pub fn right_angle_solve(cfg: &BernoulliConfig, alpha: f64) -> Result<RightAngleState> {
    if !alpha.is_finite() || alpha.cos() < -ON_CURVE_TOL {
        return Err(Error::OutOfReach);
    }
    let c = cfg.c();
    let o = cfg.center();
    let a = cfg.f1() + cfg.axis().rotated(alpha) * c;
    let oa = a - o;
    let stick = SQRT_2 * c;
    let leg = (stick * stick - oa.norm_squared()).max(0.0).sqrt();
    let toward_f2 = match oa.normalized() {
        Some(u) if oa.norm() > COINCIDENCE_EPS * c => {
            let n = u.perp();
            if n.dot(cfg.axis()) >= 0.0 {
                n
            } else {
                -n
            }
        }
        _ => cfg.axis(),
    };
    let x = o + toward_f2 * leg;
    let y = o - toward_f2 * leg;
    Ok(RightAngleState {
        alpha,
        a,
        x,
        y,
        mid_x: a.midpoint(x),
        mid_y: a.midpoint(y),
    })
}

/// Inversion in the circle about `O` of radius `|OF₁|`; exchanges the
/// lemniscate and the equilateral hyperbola with the same foci.
pub fn invert_between(cfg: &BernoulliConfig, p: Point) -> Result<Point> {
    invert_point(&cfg.inversion(), p)
}

/// Circle about `P` through `X` (and `O`), tangent to the lemniscate at `X`.
pub fn tangent_circle_at(state: &ThreeBarState) -> Result<Circle> {
    if state.side != Side::Opposite {
        return Err(Error::UndefinedCenter);
    }
    let p = state.p.ok_or(Error::UndefinedCenter)?;
    Circle::new(p, p.distance(state.x))
}

/// Normal to the lemniscate at `x`: the line `OX` turned by `2∠XOF₁`.
///
/// The turn is clockwise (in the local frame) when `x` lies above the focal
/// axis and counter-clockwise below it.
pub fn normal_by_angle(cfg: &BernoulliConfig, x: Point) -> Result<Line> {
    let o = cfg.center();
    let c = cfg.c();
    if x.distance(o) <= COINCIDENCE_EPS * c.max(1.0) {
        return Err(Error::DoublePoint);
    }
    let residual = cfg.field(x);
    if !(residual.abs() <= ON_CURVE_TOL * c.powi(4)) {
        return Err(Error::NotOnCurve(residual));
    }
    let doubled = 2.0 * angle_at(o, x, cfg.f1())?;
    let (_, v) = cfg.to_local(x);
    let turn = if v >= 0.0 { -doubled } else { doubled };
    Line::new(x, (x - o).rotated(turn))
}

/// `n` drive angles covering a full turn, offset by half a step so that the
/// on-axis tangencies are not hit exactly.
pub fn three_bar_angles(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| -PI + 2.0 * PI * (k as f64 + 0.5) / n as f64)
        .collect()
}

/// `n` secant angles spanning the valid half-turn `[-π/4, π/4]`.
pub fn maclaurin_angles(n: usize) -> Vec<f64> {
    closed_range(-FRAC_PI_4, FRAC_PI_4, n)
}

/// `n` crank angles spanning the reachable range `[-π/2, π/2]`.
pub fn right_angle_angles(n: usize) -> Vec<f64> {
    closed_range(-FRAC_PI_2, FRAC_PI_2, n)
}

fn closed_range(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// Solves the linkage at every angle in parallel; output follows input order.
pub fn three_bar_sweep(
    cfg: &BernoulliConfig,
    thetas: &[f64],
    side: Side,
) -> Vec<Result<ThreeBarState>> {
    thetas
        .par_iter()
        .map(|t| three_bar_solve(cfg, *t, side))
        .collect()
}

pub fn maclaurin_sweep(cfg: &BernoulliConfig, phis: &[f64]) -> Vec<Result<MaclaurinSample>> {
    phis.par_iter().map(|p| maclaurin_sample(cfg, *p)).collect()
}

pub fn right_angle_sweep(cfg: &BernoulliConfig, alphas: &[f64]) -> Vec<Result<RightAngleState>> {
    alphas
        .par_iter()
        .map(|a| right_angle_solve(cfg, *a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{circle_circle_intersection, Vector};
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

    fn canonical() -> BernoulliConfig {
        BernoulliConfig::canonical()
    }

    fn close(a: Point, b: Point, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    #[test]
    fn three_bar_pinned_opposite() {
        let s = three_bar_solve(&canonical(), FRAC_PI_2, Side::Opposite).unwrap();
        assert!(close(s.a, Point::new(-1.0, SQRT_2), 1e-15));
        assert!(close(s.b, Point::new(-1.0 / 3.0, -SQRT_2 / 3.0), 1e-15));
        assert!(close(s.x, Point::new(-2.0 / 3.0, SQRT_2 / 3.0), 1e-15));
        let f1 = Point::new(-1.0, 0.0);
        let f2 = Point::new(1.0, 0.0);
        let prod_sq = (s.x - f1).norm_squared() * (s.x - f2).norm_squared();
        assert!((prod_sq - 1.0).abs() < 1e-14);

        let p = s.p.unwrap();
        let q = s.q.unwrap();
        assert!(close(p, Point::new(-1.0, -FRAC_1_SQRT_2), 1e-14));
        assert!(close(q, Point::new(-1.0, FRAC_1_SQRT_2), 1e-14));
        assert!(canonical().hyperbola().residual(q).abs() < 1e-14);
        let ox_oq = s.x.to_vector().norm() * q.to_vector().norm();
        assert!((ox_oq - 1.0).abs() < 1e-14);
    }

    #[test]
    fn three_bar_pinned_same_side() {
        let s = three_bar_solve(&canonical(), FRAC_PI_2, Side::Same).unwrap();
        assert!(close(s.b, Point::new(1.0, SQRT_2), 1e-15));
        assert!(close(s.x, Point::new(0.0, SQRT_2), 1e-15));
        assert!((s.x.to_vector().norm() - SQRT_2).abs() < 1e-15);
        assert_eq!(s.p, None);
        assert_eq!(tangent_circle_at(&s), Err(Error::UndefinedCenter));
    }

    #[test]
    fn three_bar_candidates_are_the_circle_intersections() {
        let cfg = BernoulliConfig::new(Point::new(0.4, -0.3), Point::new(2.0, 1.1)).unwrap();
        let c = cfg.c();
        for theta in three_bar_angles(200) {
            let opp = three_bar_solve(&cfg, theta, Side::Opposite).unwrap();
            let same = three_bar_solve(&cfg, theta, Side::Same).unwrap();
            let about_a = Circle::new(opp.a, 2.0 * c).unwrap();
            let about_f2 = Circle::new(cfg.f2(), SQRT_2 * c).unwrap();
            let pts = circle_circle_intersection(&about_a, &about_f2).unwrap();
            assert_eq!(pts.len(), 2);
            for b in [opp.b, same.b] {
                let nearest = pts
                    .iter()
                    .map(|p| p.distance(b))
                    .fold(f64::INFINITY, f64::min);
                assert!(nearest < 1e-7, "theta={theta} nearest={nearest}");
            }
        }
    }

    #[test]
    fn three_bar_stick_lengths_and_sides() {
        let cfg = canonical();
        let axis = Line::through(cfg.f1(), cfg.f2()).unwrap();
        for theta in three_bar_angles(360) {
            for side in [Side::Opposite, Side::Same] {
                let s = three_bar_solve(&cfg, theta, side).unwrap();
                assert!((s.a.distance(cfg.f1()) - SQRT_2).abs() < 1e-10);
                assert!((s.b.distance(cfg.f2()) - SQRT_2).abs() < 1e-10);
                assert!((s.a.distance(s.b) - 2.0).abs() < 1e-10);
                let sa = axis.signed_distance(s.a);
                let sb = axis.signed_distance(s.b);
                match side {
                    Side::Opposite => assert!(sa * sb < 0.0, "theta={theta}"),
                    Side::Same => assert!(sa * sb > 0.0, "theta={theta}"),
                }
            }
        }
    }

    #[test]
    fn three_bar_on_axis_is_the_vertex() {
        let s = three_bar_solve(&canonical(), 0.0, Side::Opposite).unwrap();
        assert!(close(s.x, Point::new(SQRT_2, 0.0), 1e-15));
        assert_eq!(s.p, None);
        let s = three_bar_solve(&canonical(), PI, Side::Opposite).unwrap();
        assert!(close(s.x, Point::new(-SQRT_2, 0.0), 1e-15));
    }

    #[test]
    fn three_bar_double_point_has_no_p() {
        let s = three_bar_solve(&canonical(), FRAC_PI_4, Side::Opposite).unwrap();
        assert!(close(s.x, Point::ORIGIN, 1e-15));
        assert_eq!(s.p, None);
        assert_eq!(tangent_circle_at(&s), Err(Error::UndefinedCenter));
    }

    #[test]
    fn three_bar_rejects_non_finite() {
        assert_eq!(
            three_bar_solve(&canonical(), f64::NAN, Side::Opposite),
            Err(Error::NoSolution)
        );
    }

    #[test]
    fn maclaurin_examples() {
        let cfg = canonical();
        let s = maclaurin_sample(&cfg, 0.0).unwrap();
        assert!((s.a.distance(s.b) - SQRT_2).abs() < 1e-15);
        assert!(close(s.x, Point::new(-SQRT_2, 0.0), 1e-15));
        assert!(close(s.x_prime, Point::new(SQRT_2, 0.0), 1e-15));

        let s = maclaurin_sample(&cfg, FRAC_PI_4).unwrap();
        assert!(s.a.distance(s.b) < 1e-7);
        assert!(close(s.x, Point::ORIGIN, 1e-7));
        assert!(close(s.x_prime, Point::ORIGIN, 1e-7));

        let s = maclaurin_sample(&cfg, FRAC_PI_6).unwrap();
        assert!((s.a.distance(s.b) - 1.0).abs() < 1e-14);
        assert!((s.x.to_vector().norm() - 1.0).abs() < 1e-14);
        assert!(cfg.field(s.x).abs() <= 1e-9);
        assert!(cfg.field(s.x_prime).abs() <= 1e-9);

        assert_eq!(maclaurin_sample(&cfg, FRAC_PI_3), Err(Error::NoChord));
    }

    #[test]
    fn maclaurin_shifted_midpoint_identity() {
        // M, N midpoints of F₁A and F₁B; O' = O + (F₁ - N) lies with M on the
        // circle about F₁ of radius |F₁O|/√2
        let cfg = canonical();
        for theta in three_bar_angles(97) {
            let s = three_bar_solve(&cfg, theta, Side::Opposite).unwrap();
            let m = cfg.f1().midpoint(s.a);
            let n = cfg.f1().midpoint(s.b);
            let o_shift = cfg.center() + (cfg.f1() - n);
            let r = FRAC_1_SQRT_2 * cfg.c();
            assert!((m.distance(cfg.f1()) - r).abs() < 1e-12);
            assert!((o_shift.distance(cfg.f1()) - r).abs() < 1e-12);
            // triangle NXO is F₁MO' shifted
            assert!(((s.x - n) - (m - cfg.f1())).norm() < 1e-12);
        }
    }

    #[test]
    fn right_angle_examples() {
        let cfg = canonical();
        let s = right_angle_solve(&cfg, FRAC_PI_3).unwrap();
        assert!(close(s.a, Point::new(-0.5, 3f64.sqrt() / 2.0), 1e-15));
        assert!((s.a.to_vector().norm() - 1.0).abs() < 1e-15);
        assert!(close(s.x, Point::new(3f64.sqrt() / 2.0, 0.5), 1e-15));
        assert!(close(s.y, Point::new(-(3f64.sqrt()) / 2.0, -0.5), 1e-15));
        assert!((cfg.product_residual(s.x)).abs() < 1e-15);

        let s = right_angle_solve(&cfg, FRAC_PI_2).unwrap();
        assert!(close(s.x, Point::ORIGIN, 1e-7));
        assert!(close(s.y, Point::ORIGIN, 1e-7));

        let s = right_angle_solve(&cfg, 0.0).unwrap();
        assert_eq!(s.a, Point::ORIGIN);
        assert!(close(s.x, Point::new(SQRT_2, 0.0), 1e-15));
        assert!(close(s.y, Point::new(-SQRT_2, 0.0), 1e-15));

        assert_eq!(right_angle_solve(&cfg, 2.0), Err(Error::OutOfReach));
    }

    #[test]
    fn right_angle_linkage_lengths() {
        let cfg = BernoulliConfig::new(Point::new(1.0, 2.0), Point::new(-1.0, 3.0)).unwrap();
        let c = cfg.c();
        let o = cfg.center();
        for alpha in right_angle_angles(101) {
            let s = right_angle_solve(&cfg, alpha).unwrap();
            assert!((s.a.distance(cfg.f1()) - c).abs() < 1e-12);
            for (pt, mid) in [(s.x, s.mid_x), (s.y, s.mid_y)] {
                let ax = s.a.distance(pt);
                assert!((ax - SQRT_2 * c).abs() < 1e-7, "alpha={alpha}");
                assert!((o.distance(mid) - 0.5 * ax).abs() < 1e-7);
                let expected = (2.0 * c * c * alpha.cos()).max(0.0).sqrt();
                assert!((o.distance(pt) - expected).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn invert_between_examples() {
        let cfg = canonical();
        let v = invert_between(&cfg, Point::new(SQRT_2, 0.0)).unwrap();
        assert!(close(v, Point::new(FRAC_1_SQRT_2, 0.0), 1e-15));
        assert!(cfg.hyperbola().residual(v).abs() < 1e-15);
        let v = invert_between(&cfg, Point::new(-2.0 / 3.0, SQRT_2 / 3.0)).unwrap();
        assert!(close(v, Point::new(-1.0, FRAC_1_SQRT_2), 1e-15));
        assert!(cfg.hyperbola().residual(v).abs() < 1e-15);
        assert_eq!(
            invert_between(&cfg, Point::new(1.0, 0.0)).unwrap(),
            Point::new(1.0, 0.0)
        );
        assert_eq!(
            invert_between(&cfg, Point::ORIGIN),
            Err(Error::CenterSingular)
        );
    }

    #[test]
    fn tangent_circle_pinned() {
        let cfg = canonical();
        let s = three_bar_solve(&cfg, FRAC_PI_2, Side::Opposite).unwrap();
        let circle = tangent_circle_at(&s).unwrap();
        assert!(close(
            circle.center(),
            Point::new(-1.0, -FRAC_1_SQRT_2),
            1e-14
        ));
        assert!((circle.radius() - 1.5f64.sqrt()).abs() < 1e-14);
        assert!((circle.center().distance(Point::ORIGIN) - circle.radius()).abs() < 1e-14);
        let radial = s.x - circle.center();
        let g = cfg.gradient(s.x);
        assert!(radial.cross(g).abs() < 1e-14);
        assert!(radial.cross(Vector::new(2.0, 5.0 * SQRT_2)).abs() < 1e-14);
    }

    #[test]
    fn tangent_circle_near_axis_centers_on_axis() {
        let cfg = canonical();
        let s = three_bar_solve(&cfg, 1e-4, Side::Opposite).unwrap();
        let circle = tangent_circle_at(&s).unwrap();
        assert!(circle.center().y.abs() < 1e-3);
        assert!(s.x.distance(Point::new(SQRT_2, 0.0)) < 1e-3);
    }

    #[test]
    fn normal_examples() {
        let cfg = canonical();
        let n = normal_by_angle(&cfg, Point::new(SQRT_2, 0.0)).unwrap();
        assert!(n.direction().y.abs() < 1e-15);

        let x = Point::new(-2.0 / 3.0, SQRT_2 / 3.0);
        let n = normal_by_angle(&cfg, x).unwrap();
        let angle = angle_at(Point::ORIGIN, x, cfg.f1()).unwrap();
        assert!((angle - 0.61548).abs() < 1e-5);
        let expected = (5.0 * SQRT_2).atan2(2.0);
        let got = n.direction().angle().rem_euclid(PI);
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
        let line_ox = (x - Point::ORIGIN).angle();
        assert!((line_ox - 2.5261).abs() < 1e-4);
        assert!(((line_ox - got) - 2.0 * angle).abs() < 1e-12);

        let x = Point::new(3f64.sqrt() / 2.0, 0.5);
        let n = normal_by_angle(&cfg, x).unwrap();
        let g = cfg.gradient(x).normalized().unwrap();
        assert!(n.direction().cross(g).abs() < 1e-12);
    }

    #[test]
    fn normal_errors() {
        let cfg = canonical();
        assert_eq!(
            normal_by_angle(&cfg, Point::ORIGIN),
            Err(Error::DoublePoint)
        );
        assert!(matches!(
            normal_by_angle(&cfg, Point::new(0.5, 0.5)),
            Err(Error::NotOnCurve(_))
        ));
    }

    #[test]
    fn sweeps_preserve_order() {
        let cfg = canonical();
        let thetas = three_bar_angles(64);
        let states = three_bar_sweep(&cfg, &thetas, Side::Opposite);
        for (t, s) in thetas.iter().zip(&states) {
            assert_eq!(s.as_ref().unwrap().theta, *t);
        }
        let phis = maclaurin_angles(33);
        assert_eq!(phis[0], -FRAC_PI_4);
        assert_eq!(phis[32], FRAC_PI_4);
        assert!(maclaurin_sweep(&cfg, &phis).iter().all(|s| s.is_ok()));
        assert!(right_angle_sweep(&cfg, &right_angle_angles(33))
            .iter()
            .all(|s| s.is_ok()));
    }

    #[test]
    fn side_parses() {
        assert_eq!("opposite".parse::<Side>().unwrap(), Side::Opposite);
        assert_eq!("same".parse::<Side>().unwrap(), Side::Same);
        assert!("other".parse::<Side>().is_err());
    }
}

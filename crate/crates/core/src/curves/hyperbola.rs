use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use super::BernoulliConfig;
use crate::error::{Error, Result};
use crate::geometry::{Line, Point, Vector};

/// Residual above which a point is rejected as "not on the hyperbola".
const ON_CURVE_TOL: f64 = 1e-8;

/// The hyperbola `||F₁X| - |F₂X|| = |F₁F₂| / √2`.
///
/// Only the focus pair is stored. The quadratic form `u² - v² - a²` lives in
/// the frame centered at the foci midpoint with `F₂` on the positive `u` axis,
/// where `a = |F₁F₂| / (2√2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilateralHyperbola {
    frame: BernoulliConfig,
}

impl EquilateralHyperbola {
    pub fn new(f1: Point, f2: Point) -> Result<Self> {
        Ok(Self {
            frame: BernoulliConfig::new(f1, f2)?,
        })
    }

    pub(super) fn from_config(b: &BernoulliConfig) -> Self {
        Self { frame: *b }
    }

    pub fn f1(&self) -> Point {
        self.frame.f1()
    }

    pub fn f2(&self) -> Point {
        self.frame.f2()
    }

    pub fn center(&self) -> Point {
        self.frame.center()
    }

    /// Semi-axis (equal for both axes).
    pub fn semi_axis(&self) -> f64 {
        self.frame.c() / SQRT_2
    }

    /// `||pF₁| - |pF₂|| - |F₁F₂|/√2`.
    pub fn residual(&self, p: Point) -> f64 {
        let (f1, f2) = (self.f1(), self.f2());
        let d1 = p.distance(f1);
        let d2 = p.distance(f2);
        // d1 - d2 = (d1² - d2²)/(d1 + d2), free of cancellation far out
        let diff = (f2 - f1).dot((p - f1) + (p - f2)) / (d1 + d2);
        diff.abs() - self.frame.focal_distance() / SQRT_2
    }

    /// Value of `u² - v² - a²` at `p`.
    pub fn quadratic_form(&self, p: Point) -> f64 {
        let (u, v) = self.frame.to_local(p);
        let a = self.semi_axis();
        u * u - v * v - a * a
    }

    pub fn quadratic_gradient(&self, p: Point) -> Vector {
        let (u, v) = self.frame.to_local(p);
        let e = self.frame.axis();
        e * (2.0 * u) - e.perp() * (2.0 * v)
    }

    /// Tangent line at a point of the curve.
    pub fn tangent_at(&self, q: Point) -> Result<Line> {
        let r = self.residual(q);
        if !(r.abs() <= ON_CURVE_TOL * self.frame.c().max(1.0)) {
            return Err(Error::NotOnCurve(r));
        }
        Line::new(q, self.quadratic_gradient(q).perp())
    }

    /// Point `(±a cosh t, a sinh t)` in the local frame; `right` selects the
    /// branch around `F₂`.
    pub fn point_at(&self, right: bool, t: f64) -> Point {
        let a = self.semi_axis();
        let u = a * t.cosh();
        self.frame
            .from_local(if right { u } else { -u }, a * t.sinh())
    }
}

/// Foci of the hyperbola `y = 1/x`: `(√2, √2)` and `(-√2, -√2)`.
pub fn unit_hyperbola_foci() -> (Point, Point) {
    (Point::new(SQRT_2, SQRT_2), Point::new(-SQRT_2, -SQRT_2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::line_line_intersection;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn canonical() -> EquilateralHyperbola {
        BernoulliConfig::canonical().hyperbola()
    }

    #[test]
    fn residual_examples() {
        let h = canonical();
        assert!(h.residual(Point::new(FRAC_1_SQRT_2, 0.0)).abs() < 1e-15);
        assert!(h.residual(Point::new(-1.0, SQRT_2 / 2.0)).abs() < 1e-15);
        assert!((h.residual(Point::ORIGIN) + SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn residual_matches_direct_distances() {
        let h = EquilateralHyperbola::new(Point::new(0.3, 1.0), Point::new(-1.0, 2.0)).unwrap();
        for k in 0..40 {
            let p = Point::new(-3.0 + 0.15 * k as f64, 2.0 - 0.1 * k as f64);
            let direct =
                (p.distance(h.f1()) - p.distance(h.f2())).abs() - h.f1().distance(h.f2()) / SQRT_2;
            assert!((direct - h.residual(p)).abs() < 1e-13);
        }
    }

    #[test]
    fn quadratic_form_vanishes_on_the_curve() {
        let h = EquilateralHyperbola::new(Point::new(2.0, -1.0), Point::new(0.5, 1.0)).unwrap();
        for k in -20..=20 {
            for right in [true, false] {
                let p = h.point_at(right, 0.1 * k as f64);
                assert!(h.residual(p).abs() < 1e-12);
                assert!(h.quadratic_form(p).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn tangent_examples() {
        let h = canonical();
        let t = h.tangent_at(Point::new(FRAC_1_SQRT_2, 0.0)).unwrap();
        assert!(t.direction().x.abs() < 1e-15);
        assert!((t.anchor().x - FRAC_1_SQRT_2).abs() < 1e-15);

        let q = Point::new(-1.0, SQRT_2 / 2.0);
        let t = h.tangent_at(q).unwrap();
        let expected = Vector::new(-SQRT_2, 2.0).normalized().unwrap();
        assert!(t.direction().cross(expected).abs() < 1e-15);
        // finite-difference slope along the upper left branch y = sqrt(x² - 1/2)
        let y = |x: f64| (x * x - 0.5).sqrt();
        let slope = (y(-1.0 + 1e-6) - y(-1.0 - 1e-6)) / 2e-6;
        assert!((t.direction().y / t.direction().x - slope).abs() < 1e-8);

        assert!(matches!(
            h.tangent_at(Point::ORIGIN),
            Err(Error::NotOnCurve(_))
        ));
    }

    #[test]
    fn tangent_is_orthogonal_to_gradient() {
        let h = EquilateralHyperbola::new(Point::new(-0.7, 0.2), Point::new(1.1, 1.9)).unwrap();
        for k in -30..30 {
            let q = h.point_at(k % 2 == 0, 0.07 * k as f64);
            let t = h.tangent_at(q).unwrap();
            let g = h.quadratic_gradient(q).normalized().unwrap();
            assert!(t.direction().dot(g).abs() <= 1e-12);
        }
    }

    #[test]
    fn unit_hyperbola_exercise() {
        let (f1, f2) = unit_hyperbola_foci();
        assert_eq!(f1, Point::new(SQRT_2, SQRT_2));
        assert_eq!(f2, Point::new(-SQRT_2, -SQRT_2));
        let h = EquilateralHyperbola::new(f1, f2).unwrap();
        assert!(h.residual(Point::new(1.0, 1.0)).abs() < 1e-15);
        assert!(h.residual(Point::new(-1.0, -1.0)).abs() < 1e-15);
        for k in 0..100 {
            let t = 0.1 + 9.9 * k as f64 / 99.0;
            assert!(h.residual(Point::new(t, 1.0 / t)).abs() <= 1e-9);
        }
    }

    #[test]
    fn unit_hyperbola_tangent_midpoint() {
        // the tangent's axis intercepts R = (2x₀, 0), S = (0, 2/x₀) have midpoint q
        let (f1, f2) = unit_hyperbola_foci();
        let h = EquilateralHyperbola::new(f1, f2).unwrap();
        let x_axis = Line::new(Point::ORIGIN, Vector::new(1.0, 0.0)).unwrap();
        let y_axis = Line::new(Point::ORIGIN, Vector::new(0.0, 1.0)).unwrap();
        for x0 in [0.25, 0.5, 1.0, 2.0, 7.0] {
            let q = Point::new(x0, 1.0 / x0);
            let t = h.tangent_at(q).unwrap();
            let r = line_line_intersection(&t, &x_axis).unwrap();
            let s = line_line_intersection(&t, &y_axis).unwrap();
            assert!(r.distance(Point::new(2.0 * x0, 0.0)) < 1e-12);
            assert!(s.distance(Point::new(0.0, 2.0 / x0)) < 1e-12);
            assert!(r.midpoint(s).distance(q) < 1e-12);
        }
    }
}

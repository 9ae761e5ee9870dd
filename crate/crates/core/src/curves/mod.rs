//! Implicit and parametric curves: polynomial lemniscates, the Bernoulli
//! special case and the equilateral hyperbola sharing its foci.

mod critical;
mod expansion;
mod hyperbola;

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{InversionMap, Point, Vector, COINCIDENCE_EPS};

pub use expansion::{CoefficientTable, MAX_EXPANSION_FOCI};
pub use hyperbola::{unit_hyperbola_foci, EquilateralHyperbola};

/// Tolerance below which `cos 2θ` is still treated as the lobe boundary.
const LOBE_EDGE_EPS: f64 = 1e-12;

/// Locus where the product of distances to the foci equals `radius^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialLemniscate {
    foci: Vec<Point>,
    radius: f64,
}

impl PolynomialLemniscate {
    pub fn new(foci: Vec<Point>, radius: f64) -> Result<Self> {
        if foci.is_empty() {
            return Err(Error::InvalidGeometry(
                "a lemniscate needs at least one focus".into(),
            ));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidGeometry(format!(
                "radius must be positive, got {radius}"
            )));
        }
        if foci.iter().any(|f| !f.is_finite()) {
            return Err(Error::InvalidGeometry(
                "focus coordinates must be finite".into(),
            ));
        }
        for (i, a) in foci.iter().enumerate() {
            for b in &foci[i + 1..] {
                if a.distance(*b) <= COINCIDENCE_EPS {
                    return Err(Error::InvalidGeometry(format!("duplicate focus {a}")));
                }
            }
        }
        Ok(Self { foci, radius })
    }

    pub fn foci(&self) -> &[Point] {
        &self.foci
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Number of foci.
    pub fn order(&self) -> usize {
        self.foci.len()
    }

    /// Nominal algebraic degree, `2n`.
    pub fn degree(&self) -> usize {
        2 * self.foci.len()
    }

    /// `radius^(2n)`, the level the distance-squared product is compared to.
    pub fn level(&self) -> f64 {
        self.radius.powi(self.degree() as i32)
    }

    /// Length scale used to normalize residual thresholds:
    /// `max(1, |Fᵢ|, radius)`.
    pub fn scale(&self) -> f64 {
        self.foci
            .iter()
            .map(|f| f.to_vector().norm())
            .fold(self.radius.max(1.0), f64::max)
    }

    /// `∏ |p - Fᵢ|² - radius^(2n)`; negative strictly inside the curve.
    pub fn field(&self, p: Point) -> f64 {
        self.foci
            .iter()
            .map(|f| (p - *f).norm_squared())
            .product::<f64>()
            - self.level()
    }

    pub fn gradient(&self, p: Point) -> Vector {
        let sq: Vec<f64> = self.foci.iter().map(|f| (p - *f).norm_squared()).collect();
        // prefix/suffix products so that a vanishing factor is handled exactly
        let n = sq.len();
        let mut suffix = vec![1.0; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] * sq[i];
        }
        let mut prefix = 1.0;
        let mut grad = Vector::default();
        for (i, f) in self.foci.iter().enumerate() {
            let others = prefix * suffix[i + 1];
            grad = grad + (p - *f) * (2.0 * others);
            prefix *= sq[i];
        }
        grad
    }

    /// Exact dense expansion of the defining polynomial.
    pub fn expand(&self) -> Result<CoefficientTable> {
        CoefficientTable::expand(self)
    }

    /// Critical points of `∏ (z - Fᵢ)` in the complex plane. The curve is
    /// singular exactly where one of these lies on it.
    pub fn critical_points(&self) -> Vec<Point> {
        critical::critical_points(&self.foci)
    }

    /// Critical points lying on the curve within `tol · scale^(2n)`.
    pub fn singular_points(&self, tol: f64) -> Vec<Point> {
        let bound = tol * self.scale().powi(self.degree() as i32);
        self.critical_points()
            .into_iter()
            .filter(|c| self.field(*c).abs() <= bound)
            .collect()
    }
}

pub fn lemniscate_field(l: &PolynomialLemniscate, p: Point) -> f64 {
    l.field(p)
}

pub fn lemniscate_gradient(l: &PolynomialLemniscate, p: Point) -> Vector {
    l.gradient(p)
}

pub fn expand_coefficients(l: &PolynomialLemniscate) -> Result<CoefficientTable> {
    l.expand()
}

/// A focus pair; the lemniscate of Bernoulli through their midpoint.
///
/// Local coordinates put the midpoint `O` at the origin and `F₂` on the
/// positive first axis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BernoulliConfig {
    f1: Point,
    f2: Point,
}

impl BernoulliConfig {
    pub fn new(f1: Point, f2: Point) -> Result<Self> {
        if !f1.is_finite() || !f2.is_finite() {
            return Err(Error::InvalidGeometry(
                "focus coordinates must be finite".into(),
            ));
        }
        if f1.distance(f2) <= COINCIDENCE_EPS {
            return Err(Error::InvalidGeometry("foci coincide".into()));
        }
        Ok(Self { f1, f2 })
    }

    /// Foci at `(±1, 0)`.
    pub fn canonical() -> Self {
        Self {
            f1: Point::new(-1.0, 0.0),
            f2: Point::new(1.0, 0.0),
        }
    }

    pub fn f1(&self) -> Point {
        self.f1
    }

    pub fn f2(&self) -> Point {
        self.f2
    }

    /// The double point, midpoint of the foci.
    pub fn center(&self) -> Point {
        self.f1.midpoint(self.f2)
    }

    /// Half the focal distance, `|F₁O|`.
    pub fn c(&self) -> f64 {
        0.5 * self.f1.distance(self.f2)
    }

    pub fn focal_distance(&self) -> f64 {
        self.f1.distance(self.f2)
    }

    /// Unit vector from `O` towards `F₂`.
    pub fn axis(&self) -> Vector {
        (self.f2 - self.f1) / self.focal_distance()
    }

    pub fn to_local(&self, p: Point) -> (f64, f64) {
        let d = p - self.center();
        let e = self.axis();
        (d.dot(e), e.cross(d))
    }

    pub fn from_local(&self, u: f64, v: f64) -> Point {
        let e = self.axis();
        self.center() + e * u + e.perp() * v
    }

    /// Signed polar angle of `p` about `O`, measured from the `O → F₂` ray.
    pub fn polar_angle(&self, p: Point) -> f64 {
        let (u, v) = self.to_local(p);
        v.atan2(u)
    }

    pub fn lemniscate(&self) -> PolynomialLemniscate {
        PolynomialLemniscate {
            foci: vec![self.f1, self.f2],
            radius: self.c(),
        }
    }

    pub fn hyperbola(&self) -> EquilateralHyperbola {
        EquilateralHyperbola::from_config(self)
    }

    /// Inversion in the circle about `O` through both foci.
    pub fn inversion(&self) -> InversionMap {
        InversionMap::new(self.center(), self.c()).expect("focal distance is positive")
    }

    pub fn field(&self, p: Point) -> f64 {
        let d1 = (p - self.f1).norm_squared();
        let d2 = (p - self.f2).norm_squared();
        let c = self.c();
        d1 * d2 - c * c * c * c
    }

    pub fn gradient(&self, p: Point) -> Vector {
        let d1 = (p - self.f1).norm_squared();
        let d2 = (p - self.f2).norm_squared();
        (p - self.f1) * (2.0 * d2) + (p - self.f2) * (2.0 * d1)
    }

    /// `|XF₁| · |XF₂| - c²`, the defining relation as a residual.
    pub fn product_residual(&self, p: Point) -> f64 {
        let c = self.c();
        p.distance(self.f1) * p.distance(self.f2) - c * c
    }

    /// Point at local polar angle `theta` on `r² = 2c² cos 2θ`.
    pub fn polar_point(&self, theta: f64) -> Result<Point> {
        let cos2 = (2.0 * theta).cos();
        if cos2 < -LOBE_EDGE_EPS {
            return Err(Error::OutsideLobe);
        }
        let c = self.c();
        // cos 2θ at the lobe edge is only zero up to the rounding of 2θ
        let edge = 4.0 * f64::EPSILON * (2.0 * theta).abs().max(1.0);
        let r = if cos2 <= edge {
            0.0
        } else {
            c * (2.0 * cos2).sqrt()
        };
        let (s, co) = theta.sin_cos();
        Ok(self.from_local(r * co, r * s))
    }

    /// Area enclosed by both lobes, `|F₁F₂|² / 2`.
    pub fn area(&self) -> f64 {
        let d = self.focal_distance();
        0.5 * d * d
    }

    /// Distance from `O` to either vertex, `c√2`.
    pub fn vertex_distance(&self) -> f64 {
        SQRT_2 * self.c()
    }
}

impl Default for BernoulliConfig {
    fn default() -> Self {
        Self::canonical()
    }
}

pub fn bernoulli_polar_point(b: &BernoulliConfig, theta: f64) -> Result<Point> {
    b.polar_point(theta)
}

pub fn bernoulli_area(b: &BernoulliConfig) -> f64 {
    b.area()
}

pub fn hyperbola_residual(h: &EquilateralHyperbola, p: Point) -> f64 {
    h.residual(p)
}

pub fn hyperbola_tangent_at(h: &EquilateralHyperbola, q: Point) -> Result<crate::geometry::Line> {
    h.tangent_at(q)
}

//! Planar primitives: points, vectors, lines, circles and circle inversion.
//!
//! Every operation here is a closed-form formula. Intersection routines return
//! their points in a fixed order so that callers can pick branches
//! deterministically.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for coincidence tests (points, center-on-line).
pub const COINCIDENCE_EPS: f64 = 1e-12;

/// Relative tolerance (against the squared radius) under which a negative
/// discriminant is still treated as a tangency.
const TANGENCY_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Free vector in the plane (difference of two points).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Point) -> f64 {
        (other - self).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Position vector relative to the origin.
    pub fn to_vector(self) -> Vector {
        Vector::new(self.x, self.y)
    }
}

impl Vector {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c, s)
    }

    pub fn dot(self, other: Vector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Unit vector in the same direction, or `None` for a (near) zero vector.
    pub fn normalized(self) -> Option<Vector> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    /// Counter-clockwise rotation by a right angle.
    pub fn perp(self) -> Vector {
        Vector::new(-self.y, self.x)
    }

    pub fn rotated(self, angle: f64) -> Vector {
        let (s, c) = angle.sin_cos();
        Vector::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Polar angle in `(-π, π]`.
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign<Vector> for Point {
    fn add_assign(&mut self, rhs: Vector) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub<Vector> for Point {
    type Output = Point;
    fn sub(self, rhs: Vector) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        Vector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, rhs: f64) -> Vector {
        Vector::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Vector {
    type Output = Vector;
    fn div(self, rhs: f64) -> Vector {
        Vector::new(self.x / rhs, self.y / rhs)
    }
}

/// Infinite line through `anchor` with unit `direction`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Line {
    anchor: Point,
    direction: Vector,
}

impl Line {
    /// Builds a line; `direction` is normalized and must be non-zero.
    pub fn new(anchor: Point, direction: Vector) -> Result<Self> {
        if !anchor.is_finite() {
            return Err(Error::InvalidGeometry("line anchor is not finite".into()));
        }
        let direction = direction
            .normalized()
            .ok_or_else(|| Error::InvalidGeometry("line direction is zero".into()))?;
        Ok(Self { anchor, direction })
    }

    pub fn through(a: Point, b: Point) -> Result<Self> {
        if a.distance(b) < COINCIDENCE_EPS {
            return Err(Error::InvalidGeometry(
                "line through coincident points".into(),
            ));
        }
        Self::new(a, b - a)
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn direction(&self) -> Vector {
        self.direction
    }

    /// Unit normal, the direction rotated counter-clockwise.
    pub fn normal(&self) -> Vector {
        self.direction.perp()
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.anchor + self.direction * t
    }

    /// Parameter of the orthogonal projection of `p`.
    pub fn parameter_of(&self, p: Point) -> f64 {
        (p - self.anchor).dot(self.direction)
    }

    /// Foot of the perpendicular from `p`.
    pub fn project(&self, p: Point) -> Point {
        self.point_at(self.parameter_of(p))
    }

    /// Positive on the left of the direction.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.direction.cross(p - self.anchor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    center: Point,
    radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidGeometry(format!(
                "circle needs a finite center and positive radius, got {center} / {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `|p - center|² - radius²`.
    pub fn power(&self, p: Point) -> f64 {
        (p - self.center).norm_squared() - self.radius * self.radius
    }

    pub fn point_at(&self, angle: f64) -> Point {
        self.center + Vector::from_angle(angle) * self.radius
    }
}

/// Inversion in the circle with the given center and radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversionMap {
    center: Point,
    radius: f64,
}

impl InversionMap {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        let circle = Circle::new(center, radius)?;
        Ok(Self {
            center: circle.center,
            radius: circle.radius,
        })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn circle(&self) -> Circle {
        Circle {
            center: self.center,
            radius: self.radius,
        }
    }

    pub fn apply(&self, p: Point) -> Result<Point> {
        invert_point(self, p)
    }
}

/// Image of `p` on the ray from the center through `p`, at distance `r²/|OX|`.
pub fn invert_point(map: &InversionMap, p: Point) -> Result<Point> {
    let v = p - map.center;
    let d2 = v.norm_squared();
    if d2.sqrt() < COINCIDENCE_EPS {
        return Err(Error::CenterSingular);
    }
    Ok(map.center + v * (map.radius * map.radius / d2))
}

pub fn reflect_across_line(l: &Line, p: Point) -> Point {
    let foot = l.project(p);
    foot + (foot - p)
}

/// Image of a line that misses the center: the circle on the diameter from the
/// center to the image of the foot of the perpendicular.
pub fn invert_line(map: &InversionMap, l: &Line) -> Result<Circle> {
    if l.signed_distance(map.center).abs() <= COINCIDENCE_EPS {
        return Err(Error::LineThroughCenter);
    }
    let foot = l.project(map.center);
    let far = invert_point(map, foot)?;
    Circle::new(map.center.midpoint(far), 0.5 * map.center.distance(far))
}

/// Intersections of two circles.
///
/// Two points come back with the one on the right of the directed center line
/// `c1 → c2` first. A tangency yields a single point.
pub fn circle_circle_intersection(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    let d = c2.center - c1.center;
    let dist = d.norm();
    if dist <= COINCIDENCE_EPS {
        return Err(Error::Concentric);
    }
    let u = d / dist;
    let a = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
    let h2 = c1.radius * c1.radius - a * a;
    let tol = TANGENCY_EPS * c1.radius.max(c2.radius).powi(2);
    let base = c1.center + u * a;
    if h2 > tol {
        let right = Vector::new(u.y, -u.x) * h2.sqrt();
        Ok(vec![base + right, base - right])
    } else if h2 >= -tol {
        Ok(vec![base])
    } else {
        Ok(Vec::new())
    }
}

/// Intersections of a line and a circle, sorted by the line parameter.
pub fn line_circle_intersection(l: &Line, c: &Circle) -> Vec<Point> {
    let t0 = l.parameter_of(c.center);
    let foot = l.point_at(t0);
    let h2 = c.radius * c.radius - (c.center - foot).norm_squared();
    let tol = TANGENCY_EPS * c.radius * c.radius;
    if h2 > tol {
        let h = h2.sqrt();
        vec![l.point_at(t0 - h), l.point_at(t0 + h)]
    } else if h2 >= -tol {
        vec![foot]
    } else {
        Vec::new()
    }
}

/// Intersection of two lines, `None` when they are parallel.
pub fn line_line_intersection(l1: &Line, l2: &Line) -> Option<Point> {
    let denom = l1.direction.cross(l2.direction);
    if denom.abs() <= COINCIDENCE_EPS {
        return None;
    }
    let t = (l2.anchor - l1.anchor).cross(l2.direction) / denom;
    Some(l1.point_at(t))
}

/// Unsigned angle at `vertex` between the rays towards `a` and `b`, in `[0, π]`.
pub fn angle_at(vertex: Point, a: Point, b: Point) -> Result<f64> {
    let u = a - vertex;
    let v = b - vertex;
    if u.norm() <= COINCIDENCE_EPS || v.norm() <= COINCIDENCE_EPS {
        return Err(Error::DegenerateRay);
    }
    Ok(u.cross(v).abs().atan2(u.dot(v)))
}

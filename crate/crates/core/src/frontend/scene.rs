use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::tracer::TraceWindow;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    Polyline {
        points: Vec<Point>,
        closed: bool,
    },
    Circle {
        center: Point,
        radius: f64,
    },
    Segment {
        from: Point,
        to: Point,
    },
    Marker {
        at: Point,
    },
    /// Free text; the string is the element's style label.
    Text {
        at: Point,
    },
}

impl Shape {
    fn points(&self) -> Vec<Point> {
        match self {
            Shape::Polyline { points, .. } => points.clone(),
            Shape::Circle { center, radius } => vec![
                Point::new(center.x - radius, center.y - radius),
                Point::new(center.x + radius, center.y + radius),
            ],
            Shape::Segment { from, to } => vec![*from, *to],
            Shape::Marker { at } | Shape::Text { at } => vec![*at],
        }
    }

    /// Where an attached label is placed.
    pub fn anchor(&self) -> Point {
        match self {
            Shape::Polyline { points, .. } => points.first().copied().unwrap_or_default(),
            Shape::Circle { center, radius } => Point::new(center.x, center.y + radius),
            Shape::Segment { from, to } => from.midpoint(*to),
            Shape::Marker { at } | Shape::Text { at } => *at,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Style {
    /// Stroke width in user (plane) units.
    pub stroke_width: f64,
    pub dashed: bool,
    pub label: Option<String>,
}

impl Style {
    pub fn solid(stroke_width: f64) -> Self {
        Self {
            stroke_width,
            dashed: false,
            label: None,
        }
    }

    pub fn dashed(stroke_width: f64) -> Self {
        Self {
            dashed: true,
            ..Self::solid(stroke_width)
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Element {
    pub shape: Shape,
    pub style: Style,
}

/// Drawables over a viewbox. Geometry must stay within twice the viewbox
/// (same center, doubled extents).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scene {
    pub elements: Vec<Element>,
    pub viewbox: TraceWindow,
}

impl Scene {
    pub fn new(viewbox: TraceWindow) -> Self {
        Self {
            elements: Vec::new(),
            viewbox,
        }
    }

    fn guard_contains(&self, p: Point) -> bool {
        let v = &self.viewbox;
        let (hw, hh) = (v.xmax - v.xmin, v.ymax - v.ymin);
        let (cx, cy) = (0.5 * (v.xmin + v.xmax), 0.5 * (v.ymin + v.ymax));
        p.is_finite() && (p.x - cx).abs() <= hw && (p.y - cy).abs() <= hh
    }

    /// Adds an element, rejecting geometry outside the guard box.
    pub fn push(&mut self, shape: Shape, style: Style) -> Result<()> {
        if let Some(bad) = shape
            .points()
            .into_iter()
            .find(|p| !self.guard_contains(*p))
        {
            return Err(Error::InvalidGeometry(format!(
                "scene element at {bad} lies outside twice the viewbox"
            )));
        }
        self.elements.push(Element { shape, style });
        Ok(())
    }

    /// Adds an element when it fits the guard box; returns whether it was added.
    pub fn push_visible(&mut self, shape: Shape, style: Style) -> bool {
        self.push(shape, style).is_ok()
    }

    /// Adds the part of a polyline inside the guard box, split into runs.
    pub fn push_clipped(&mut self, points: &[Point], style: Style) {
        let mut run: Vec<Point> = Vec::new();
        let flush = |run: &mut Vec<Point>, scene: &mut Scene| {
            if run.len() >= 2 {
                scene.elements.push(Element {
                    shape: Shape::Polyline {
                        points: std::mem::take(run),
                        closed: false,
                    },
                    style: style.clone(),
                });
            }
            run.clear();
        };
        for p in points {
            if self.guard_contains(*p) {
                run.push(*p);
            } else {
                flush(&mut run, self);
            }
        }
        flush(&mut run, self);
    }

    pub fn validate(&self) -> Result<()> {
        for e in &self.elements {
            if let Some(bad) = e
                .shape
                .points()
                .into_iter()
                .find(|p| !self.guard_contains(*p))
            {
                return Err(Error::InvalidGeometry(format!(
                    "element at {bad} escapes the viewbox"
                )));
            }
        }
        Ok(())
    }
}

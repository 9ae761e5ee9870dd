use std::fmt::Write;

use super::numfmt::fmt_num;
use super::scene::{Scene, Shape, Style};
use crate::geometry::Point;

/// Pixel width of emitted documents; the height follows the viewbox aspect.
pub const SVG_WIDTH: f64 = 800.0;

struct Transform {
    xmin: f64,
    ymin: f64,
    ymax: f64,
    scale: f64,
    flip: bool,
}

impl Transform {
    fn point(&self, p: Point) -> (String, String) {
        let x = (p.x - self.xmin) * self.scale;
        let y = if self.flip {
            (self.ymax - p.y) * self.scale
        } else {
            (p.y - self.ymin) * self.scale
        };
        (fmt_num(x), fmt_num(y))
    }

    fn len(&self, v: f64) -> String {
        fmt_num(v * self.scale)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn stroke(t: &Transform, style: &Style) -> String {
    let mut s = format!(
        " stroke=\"black\" stroke-width=\"{}\"",
        t.len(style.stroke_width)
    );
    if style.dashed {
        let dash = t.len(4.0 * style.stroke_width);
        let _ = write!(s, " stroke-dasharray=\"{dash} {dash}\"");
    }
    s
}

/// Renders a scene as an SVG 1.1 document. With `flip_y` the plane's `y` axis
/// points up in the picture. Output is a pure function of the scene.
pub fn emit_svg(scene: &Scene, flip_y: bool) -> String {
    let v = &scene.viewbox;
    let scale = SVG_WIDTH / (v.xmax - v.xmin);
    let height = (v.ymax - v.ymin) * scale;
    let t = Transform {
        xmin: v.xmin,
        ymin: v.ymin,
        ymax: v.ymax,
        scale,
        flip: flip_y,
    };
    let (w, h) = (fmt_num(SVG_WIDTH), fmt_num(height));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    if scene.elements.is_empty() {
        out.push_str("</svg>\n");
        return out;
    }
    out.push('\n');
    for e in &scene.elements {
        let st = stroke(&t, &e.style);
        match &e.shape {
            Shape::Polyline { points, closed } => {
                let pts: Vec<String> = points
                    .iter()
                    .map(|p| {
                        let (x, y) = t.point(*p);
                        format!("{x},{y}")
                    })
                    .collect();
                let tag = if *closed { "polygon" } else { "polyline" };
                let _ = writeln!(
                    out,
                    "<{tag} points=\"{}\" fill=\"none\"{st}/>",
                    pts.join(" ")
                );
            }
            Shape::Circle { center, radius } => {
                let (x, y) = t.point(*center);
                let _ = writeln!(
                    out,
                    "<circle cx=\"{x}\" cy=\"{y}\" r=\"{}\" fill=\"none\"{st}/>",
                    t.len(*radius)
                );
            }
            Shape::Segment { from, to } => {
                let (x1, y1) = t.point(*from);
                let (x2, y2) = t.point(*to);
                let _ = writeln!(
                    out,
                    "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"{st}/>"
                );
            }
            Shape::Marker { at } => {
                let (x, y) = t.point(*at);
                let r = t.len(2.5 * e.style.stroke_width);
                let _ = writeln!(
                    out,
                    "<circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"black\"/>"
                );
            }
            Shape::Text { .. } => {}
        }
        if let Some(label) = &e.style.label {
            let (x, y) = t.point(e.shape.anchor());
            let size = fmt_num(14.0);
            let _ = writeln!(
                out,
                "<text x=\"{x}\" y=\"{y}\" dx=\"4\" dy=\"-4\" font-family=\"serif\" font-size=\"{size}\">{}</text>",
                escape(label)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracer::TraceWindow;

    fn scene() -> Scene {
        Scene::new(TraceWindow::new(-2.0, 2.0, -1.0, 1.0, 8, 8).unwrap())
    }

    #[test]
    fn empty_scene_is_just_the_root() {
        let doc = emit_svg(&scene(), true);
        assert_eq!(
            doc,
            "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"400\" viewBox=\"0 0 800 400\"></svg>\n"
        );
    }

    #[test]
    fn one_circle() {
        let mut s = scene();
        s.push(
            Shape::Circle {
                center: Point::ORIGIN,
                radius: 1.0,
            },
            Style::solid(0.01),
        )
        .unwrap();
        let doc = emit_svg(&s, true);
        assert_eq!(doc.matches("<circle").count(), 1);
        assert!(doc.contains("<circle cx=\"400\" cy=\"200\" r=\"200\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"));
    }

    #[test]
    fn flip_puts_positive_y_up() {
        let mut s = scene();
        s.push(
            Shape::Marker {
                at: Point::new(0.0, 0.5),
            },
            Style::solid(0.01),
        )
        .unwrap();
        assert!(emit_svg(&s, true).contains("cy=\"100\""));
        assert!(emit_svg(&s, false).contains("cy=\"300\""));
    }

    #[test]
    fn labels_are_escaped() {
        let mut s = scene();
        s.push(
            Shape::Text { at: Point::ORIGIN },
            Style::solid(0.01).labeled("a<b & c"),
        )
        .unwrap();
        let doc = emit_svg(&s, true);
        assert!(doc.contains(">a&lt;b &amp; c</text>"));
    }

    #[test]
    fn deterministic() {
        let mut s = scene();
        s.push(
            Shape::Polyline {
                points: vec![Point::new(0.1, 0.2), Point::new(0.3, -0.7)],
                closed: false,
            },
            Style::dashed(0.013).labeled("x"),
        )
        .unwrap();
        assert_eq!(emit_svg(&s, true), emit_svg(&s.clone(), true));
    }
}

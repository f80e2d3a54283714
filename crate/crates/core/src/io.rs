//! Curve files and SVG output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Circle, Point2};
use crate::scalar::Scalar;

/// `{"samples": [[x, y], ...], "closed": true}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFile {
    pub samples: Vec<[f64; 2]>,
    #[serde(default = "yes")]
    pub closed: bool,
}

fn yes() -> bool {
    true
}

impl CurveFile {
    pub fn from_points<F: Scalar>(pts: &[Point2<F>]) -> Self {
        Self {
            samples: pts.iter().map(|p| [p.x.to_f64_lossy(), p.y.to_f64_lossy()]).collect(),
            closed: true,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("curve file: {e}")))
    }

    pub fn points<F: Scalar>(&self) -> Result<Vec<Point2<F>>> {
        if !self.closed {
            return Err(Error::InvalidArgument("curve file must describe a closed curve".into()));
        }
        Ok(self
            .samples
            .iter()
            .map(|&[x, y]| Point2::new(F::lit(x), F::lit(y)))
            .collect())
    }
}

/// One polyline or polygon of an SVG drawing.
#[derive(Debug, Clone)]
pub struct SvgPath {
    pub points: Vec<Point2<f64>>,
    pub closed: bool,
    pub stroke: String,
    pub opacity: f64,
}

/// A filled dot.
#[derive(Debug, Clone)]
pub struct SvgMarker {
    pub at: Point2<f64>,
    pub fill: String,
    pub label: Option<String>,
}

/// An SVG document whose view box is `frame` padded by 10%, with `y` up.
pub fn render_svg(frame: &Circle<f64>, paths: &[SvgPath], markers: &[SvgMarker]) -> String {
    let r = frame.radius * 1.1;
    let (x0, y0) = (frame.center.x - r, -frame.center.y - r);
    let stroke = 2.0 * r / 400.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {w}" width="600" height="600">"#,
        w = 2.0 * r
    );
    for p in paths {
        let mut d = String::new();
        for (i, q) in p.points.iter().enumerate() {
            let _ = write!(d, "{}{:.6},{:.6} ", if i == 0 { "M" } else { "L" }, q.x, -q.y);
        }
        if p.closed {
            d.push('Z');
        }
        let _ = writeln!(
            s,
            r#"  <path d="{}" fill="none" stroke="{}" stroke-width="{stroke}" stroke-opacity="{:.3}"/>"#,
            d.trim_end(),
            p.stroke,
            p.opacity
        );
    }
    for m in markers {
        let _ = writeln!(
            s,
            r#"  <circle cx="{:.6}" cy="{:.6}" r="{}" fill="{}"/>"#,
            m.at.x,
            -m.at.y,
            3.0 * stroke,
            m.fill
        );
        if let Some(label) = &m.label {
            let _ = writeln!(
                s,
                r#"  <text x="{:.6}" y="{:.6}" font-size="{}">{}</text>"#,
                m.at.x + 4.0 * stroke,
                -m.at.y,
                12.0 * stroke,
                label
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_file_round_trip() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.5)];
        let text = serde_json::to_string(&CurveFile::from_points(&pts)).unwrap();
        let back: Vec<Point2<f64>> = CurveFile::parse(&text).unwrap().points().unwrap();
        assert_eq!(back, pts);
    }

    #[test]
    fn open_curves_and_garbage_are_rejected() {
        let f = CurveFile::parse(r#"{"samples": [[0,0],[1,0]], "closed": false}"#).unwrap();
        assert!(f.points::<f64>().is_err());
        assert!(CurveFile::parse("{samples: 1}").is_err());
        let f = CurveFile::parse(r#"{"samples": [[0,0]]}"#).unwrap();
        assert!(f.closed);
    }

    #[test]
    fn svg_has_one_path_per_layer() {
        let c = Circle::new(Point2::origin(), 1.0);
        let paths: Vec<_> = (0..3)
            .map(|_| SvgPath {
                points: c.sample(8),
                closed: true,
                stroke: "black".into(),
                opacity: 1.0,
            })
            .collect();
        let svg = render_svg(&c, &paths, &[]);
        assert_eq!(svg.matches("<path").count(), 3);
        assert!(svg.contains(r#"viewBox="-1.1 -1.1 2.2 2.2""#));
    }
}

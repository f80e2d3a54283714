//! Deformation of a domain to the round disk of equal area about its center.
//!
//! The conformal stage shows `h_t(B²)` with `h_t(x) = c + (f(tx) − c)/t` for
//! `t` from 1 down to `T_MIN`; below that the frame is replaced by its limit,
//! the circle of radius `|f'(0)|` about `c`. The Minkowski stage then grows
//! or shrinks that circle linearly to the equal-area radius.

use std::fmt::Write as _;

use num_complex::Complex;
use serde::Serialize;

use crate::centers::CenterKind;
use crate::conformal::{build_interior_map, ConformalMap, MapConfig};
use crate::curve::{CurveConfig, JordanCurve, JordanDomain};
use crate::enclosing::min_enclosing_circle;
use crate::error::{Error, Result};
use crate::geom::{Circle, Point2};
use crate::io::{render_svg, SvgPath};
use crate::retraction::{canonical_centers, CenterConfig};
use crate::scalar::Scalar;

/// Smallest conformal-stage parameter evaluated directly.
pub const T_MIN: f64 = 0.05;
/// Points per emitted frame.
pub const FRAME_SAMPLES: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlowStage {
    Conformal,
    Minkowski,
}

#[derive(Debug, Clone)]
pub struct FlowFrame<F> {
    /// Global clock: `[0, ½]` conformal, `[½, 1]` Minkowski.
    pub time: F,
    pub stage: FlowStage,
    pub curve: JordanCurve<F>,
}

/// Angles at which frames are sampled: half evenly spaced on `∂B²`, half the
/// preimages of points evenly spaced along `∂D`, so that neither the disk nor
/// the domain side is starved where the map crowds.
pub fn frame_angles<F: Scalar>(f: &ConformalMap<F>, m: usize) -> Vec<F> {
    let half = m / 2;
    let mut a: Vec<F> = (0..m - half)
        .map(|k| F::tau() * F::of_usize(k) / F::of_usize(m - half))
        .chain(f.boundary_angles(half))
        .collect();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    let gap = F::lit(1e-9);
    let mut out: Vec<F> = Vec::with_capacity(a.len());
    for t in a {
        if out.last().is_none_or(|&l| t - l > gap) {
            out.push(t);
        }
    }
    while out.len() > 1 && out[0] + F::tau() - out[out.len() - 1] <= gap {
        out.pop();
    }
    out
}

/// The image of `∂B²` under `h_t` at the given angles, for an already built
/// map centered at `c`.
pub fn frame_points<F: Scalar>(f: &ConformalMap<F>, t: F, angles: &[F]) -> Vec<Point2<F>> {
    let c = f.center_value();
    if t < F::lit(T_MIN) {
        let r = f.center_derivative().norm();
        return angles.iter().map(|&a| c + Point2::from_polar(r, a)).collect();
    }
    angles
        .iter()
        .map(|&a| {
            let y = Point2::from_complex(f.forward_c(Complex::from_polar(t, a)));
            c + (y - c) / t
        })
        .collect()
}

/// `∂ h_t(B²)` for `f = f_{D,c,(1,0)}`.
pub fn conformal_flow_frame<F: Scalar>(
    d: &JordanDomain<F>,
    c: Point2<F>,
    t: F,
    cfg: &MapConfig<F>,
) -> Result<JordanCurve<F>> {
    if !(t > F::zero() && t <= F::one()) {
        return Err(Error::InvalidArgument(format!(
            "flow parameter {} outside (0, 1]",
            t.to_f64_lossy()
        )));
    }
    let f = build_interior_map(d, c, Point2::new(F::one(), F::zero()), cfg)?;
    JordanCurve::build(
        &frame_points(&f, t, &frame_angles(&f, FRAME_SAMPLES)),
        &CurveConfig::default(),
    )
}

/// The disk about `c` with the area of `D`.
pub fn round_target<F: Scalar>(d: &JordanDomain<F>, c: Point2<F>) -> Circle<F> {
    Circle::new(c, (d.area() / F::PI()).sqrt())
}

/// `n` frames from `∂D` to the round target about the canonical center.
pub fn flow_frames<F: Scalar>(
    d: &JordanDomain<F>,
    kind: CenterKind,
    n: usize,
    cfg: &CenterConfig<F>,
) -> Result<Vec<FlowFrame<F>>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need at least 4 frames, got {n}")));
    }
    let c = canonical_centers(d, &[kind], cfg)?[0].point;
    flow_frames_about(d, c, n, &cfg.map)
}

/// As [`flow_frames`], about a given interior point.
pub fn flow_frames_about<F: Scalar>(
    d: &JordanDomain<F>,
    c: Point2<F>,
    n: usize,
    cfg: &MapConfig<F>,
) -> Result<Vec<FlowFrame<F>>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need at least 4 frames, got {n}")));
    }
    let f = build_interior_map(d, c, Point2::new(F::one(), F::zero()), cfg)?;
    let conformal = n.div_ceil(2);
    let minkowski = n - conformal;
    let t_min = F::lit(T_MIN);
    let angles = frame_angles(&f, FRAME_SAMPLES);
    let curve_cfg = CurveConfig::default();
    let mut frames = Vec::with_capacity(n);
    for i in 0..conformal {
        let s = F::of_usize(i) / F::of_usize(conformal - 1);
        let t = F::one() - (F::one() - t_min) * s;
        frames.push(FlowFrame {
            time: s * F::half(),
            stage: FlowStage::Conformal,
            curve: JordanCurve::build(&frame_points(&f, t, &angles), &curve_cfg)?,
        });
    }
    let r0 = f.center_derivative().norm();
    let r1 = round_target(d, c).radius;
    for j in 0..minkowski {
        let lam = F::of_usize(j) / F::of_usize(minkowski - 1);
        let r = r0 + (r1 - r0) * lam;
        frames.push(FlowFrame {
            time: F::half() + lam * F::half(),
            stage: FlowStage::Minkowski,
            curve: JordanCurve::build(&Circle::new(c, r).sample(FRAME_SAMPLES), &curve_cfg)?,
        });
    }
    Ok(frames)
}

/// `frame_index,time,x,y` rows, one per sample.
pub fn frames_to_csv<F: Scalar>(frames: &[FlowFrame<F>]) -> String {
    let mut out = String::from("frame_index,time,x,y\n");
    for (i, fr) in frames.iter().enumerate() {
        for p in fr.curve.samples() {
            let _ = writeln!(
                out,
                "{i},{},{},{}",
                fr.time.to_f64_lossy(),
                p.x.to_f64_lossy(),
                p.y.to_f64_lossy()
            );
        }
    }
    out
}

/// One path per frame, later frames more opaque.
pub fn frames_to_svg<F: Scalar>(frames: &[FlowFrame<F>]) -> String {
    let all: Vec<Point2<f64>> = frames
        .iter()
        .flat_map(|f| f.curve.samples().iter().map(|p| p.cast()))
        .collect();
    let view = min_enclosing_circle(&all);
    let k = frames.len().max(2) - 1;
    let paths: Vec<_> = frames
        .iter()
        .enumerate()
        .map(|(i, fr)| SvgPath {
            points: fr.curve.samples().iter().map(|p| p.cast()).collect(),
            closed: true,
            stroke: match fr.stage {
                FlowStage::Conformal => "#1f5fa8".into(),
                FlowStage::Minkowski => "#b8451f".into(),
            },
            opacity: 0.15 + 0.85 * i as f64 / k as f64,
        })
        .collect();
    render_svg(&view, &paths, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Shape;

    fn max_gap(a: &JordanCurve<f64>, b: &JordanCurve<f64>) -> f64 {
        let da = JordanDomain::new(a.clone());
        let db = JordanDomain::new(b.clone());
        da.hausdorff(&db)
    }

    #[test]
    fn round_target_of_ellipse() {
        let d = Shape::Ellipse { a: 2.0, b: 1.0 }
            .domain::<f64>(Point2::origin(), 512)
            .unwrap();
        let c = round_target(&d, Point2::origin());
        assert!((c.radius - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn disk_frames_do_not_move() {
        let q = Point2::new(0.5, -1.0);
        let d = Shape::Circle { r: 2.0 }.domain::<f64>(q, 512).unwrap();
        let frames = flow_frames_about(&d, q, 6, &MapConfig::default()).unwrap();
        assert_eq!(frames.len(), 6);
        for f in &frames {
            assert!(max_gap(&f.curve, d.boundary()) < 2e-3, "{}", f.time);
        }
    }

    #[test]
    fn ellipse_endpoints_and_clock() {
        let d = Shape::Ellipse { a: 2.0, b: 1.0 }
            .domain::<f64>(Point2::origin(), 512)
            .unwrap();
        let frames = flow_frames(&d, CenterKind::Centroid, 8, &CenterConfig::default()).unwrap();
        assert!(max_gap(&frames[0].curve, d.boundary()) <= 1e-3 * d.diameter());
        let target = Circle::new(Point2::origin(), 2f64.sqrt()).sample(512);
        let target = JordanCurve::build(&target, &CurveConfig::default()).unwrap();
        assert!(max_gap(&frames[7].curve, &target) <= 1e-3 * d.diameter());
        assert!(frames.windows(2).all(|w| w[0].time <= w[1].time));
        assert_eq!(frames[0].time, 0.0);
        assert_eq!(frames[7].time, 1.0);
        assert_eq!(frames[3].stage, FlowStage::Conformal);
        assert_eq!(frames[4].stage, FlowStage::Minkowski);
    }

    #[test]
    fn small_parameter_gives_the_limit_circle() {
        let d = Shape::Ellipse { a: 2.0, b: 1.0 }
            .domain::<f64>(Point2::origin(), 512)
            .unwrap();
        let f = build_interior_map(&d, Point2::origin(), Point2::new(1.0, 0.0), &MapConfig::default()).unwrap();
        let r = f.center_derivative().norm();
        let angles = frame_angles(&f, 64);
        for p in frame_points(&f, 0.05, &angles) {
            assert!((p.norm() - r).abs() <= 0.01 * r);
        }
        for p in frame_points(&f, 0.025, &angles) {
            assert!((p.norm() - r).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_and_svg_shapes() {
        let d = Shape::Circle { r: 1.0 }.domain::<f64>(Point2::origin(), 256).unwrap();
        let frames = flow_frames_about(&d, Point2::origin(), 4, &MapConfig::default()).unwrap();
        let csv = frames_to_csv(&frames);
        let rows: usize = frames.iter().map(|f| f.curve.len()).sum();
        assert_eq!(csv.lines().count(), 1 + rows);
        assert!(csv.starts_with("frame_index,time,x,y\n0,0,"));
        assert_eq!(frames_to_svg(&frames).matches("<path").count(), 4);
    }

    #[test]
    fn too_few_frames() {
        let d = Shape::Circle { r: 1.0 }.domain::<f64>(Point2::origin(), 256).unwrap();
        assert!(flow_frames_about(&d, Point2::origin(), 3, &MapConfig::default()).is_err());
    }
}

//! Deterministic boundary generators used as fixtures and by the CLI.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::curve::JordanDomain;
use crate::error::Result;
use crate::geom::Point2;
use crate::scalar::Scalar;

/// A named boundary generator with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum Shape {
    Circle {
        r: f64,
    },
    Ellipse {
        a: f64,
        b: f64,
    },
    /// Convex egg `(a cos θ, b sin θ (1 + k cos θ))`.
    Egg {
        a: f64,
        b: f64,
        k: f64,
    },
    /// Unit disk minus the disk of radius 0.85 about (0.3, 0), corners smoothed.
    LuneSmoothed,
    /// Rounded triangle `r(θ) = 1 + 0.15 cos 3θ + 0.05 sin 2θ`.
    Blob,
}

impl Shape {
    pub const FIXTURE_NAMES: [&'static str; 5] = ["circle", "ellipse", "egg", "lune-smoothed", "blob"];

    /// The frozen fixture for a generator name.
    pub fn fixture(name: &str) -> Option<Self> {
        Some(match name {
            "circle" => Shape::Circle { r: 1.0 },
            "ellipse" => Shape::Ellipse { a: 2.0, b: 1.0 },
            "egg" => Shape::Egg { a: 1.4, b: 1.0, k: 0.2 },
            "lune-smoothed" | "lune" => Shape::LuneSmoothed,
            "blob" => Shape::Blob,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Shape::Circle { .. } => "circle",
            Shape::Ellipse { .. } => "ellipse",
            Shape::Egg { .. } => "egg",
            Shape::LuneSmoothed => "lune-smoothed",
            Shape::Blob => "blob",
        }
    }

    /// `n` counterclockwise boundary samples centered at `center`.
    pub fn samples<F: Scalar>(&self, center: Point2<F>, n: usize) -> Vec<Point2<F>> {
        let raw = match *self {
            Shape::Circle { r } => ellipse_points(r, r, n),
            Shape::Ellipse { a, b } => ellipse_points(a, b, n),
            Shape::Egg { a, b, k } => (0..n)
                .map(|i| {
                    let t = TAU * i as f64 / n as f64;
                    [a * t.cos(), b * t.sin() * (1.0 + k * t.cos())]
                })
                .collect(),
            Shape::LuneSmoothed => smoothed_lune(n),
            Shape::Blob => (0..n)
                .map(|i| {
                    let t = TAU * i as f64 / n as f64;
                    let r = 1.0 + 0.15 * (3.0 * t).cos() + 0.05 * (2.0 * t).sin();
                    [r * t.cos(), r * t.sin()]
                })
                .collect(),
        };
        raw.into_iter()
            .map(|[x, y]| center + Point2::new(F::lit(x), F::lit(y)))
            .collect()
    }

    pub fn domain<F: Scalar>(&self, center: Point2<F>, n: usize) -> Result<JordanDomain<F>> {
        JordanDomain::from_samples(&self.samples(center, n))
    }
}

fn ellipse_points(a: f64, b: f64, n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let t = TAU * i as f64 / n as f64;
            [a * t.cos(), b * t.sin()]
        })
        .collect()
}

/// Radius of the inner disk and its center on the x-axis.
const LUNE_INNER: (f64, f64) = (0.85, 0.3);
/// Radius of the fillet circles rounding the two horn tips.
const LUNE_FILLET: f64 = 0.08;
/// Width of the Gaussian that evens out the curvature jumps at the fillets.
const LUNE_SMOOTHING: f64 = 0.02;

/// A circular arc traversed from `from` by the signed angle `sweep`.
struct Arc {
    center: (f64, f64),
    radius: f64,
    from: f64,
    sweep: f64,
}

impl Arc {
    fn len(&self) -> f64 {
        self.radius * self.sweep.abs()
    }

    fn at(&self, s: f64) -> [f64; 2] {
        let a = self.from + self.sweep.signum() * s / self.radius;
        [
            self.center.0 + self.radius * a.cos(),
            self.center.1 + self.radius * a.sin(),
        ]
    }
}

fn smoothed_lune(n: usize) -> Vec<[f64; 2]> {
    let (rin, cx) = LUNE_INNER;
    let rho = LUNE_FILLET;
    // Fillet center: internally tangent to the outer circle, externally to the inner one.
    let (d1, d2) = (1.0 - rho, rin + rho);
    let fx = (d1 * d1 - d2 * d2 + cx * cx) / (2.0 * cx);
    let fy = (d1 * d1 - fx * fx).sqrt();
    let top = fy.atan2(fx);
    let ccw = |a: f64| a.rem_euclid(TAU);
    let inner_top = fy.atan2(fx - cx);
    let to_inner_low = (fy).atan2(cx - fx);
    let to_inner_top = (-fy).atan2(cx - fx);
    let arcs = [
        Arc {
            center: (0.0, 0.0),
            radius: 1.0,
            from: top,
            sweep: TAU - 2.0 * top,
        },
        Arc {
            center: (fx, -fy),
            radius: rho,
            from: -top,
            sweep: ccw(to_inner_low + top),
        },
        Arc {
            center: (cx, 0.0),
            radius: rin,
            from: -inner_top,
            sweep: -(TAU - 2.0 * inner_top),
        },
        Arc {
            center: (fx, fy),
            radius: rho,
            from: to_inner_top,
            sweep: ccw(top - to_inner_top),
        },
    ];

    let dense = 8192;
    let total: f64 = arcs.iter().map(Arc::len).sum();
    let mut pts = Vec::with_capacity(dense);
    for i in 0..dense {
        let mut s = total * i as f64 / dense as f64;
        let mut k = 0;
        while k + 1 < arcs.len() && s >= arcs[k].len() {
            s -= arcs[k].len();
            k += 1;
        }
        pts.push(arcs[k].at(s));
    }

    let step = total / dense as f64;
    let half_width = (4.0 * LUNE_SMOOTHING / step).ceil() as isize;
    let weights: Vec<f64> = (-half_width..=half_width)
        .map(|k| {
            let x = k as f64 * step / LUNE_SMOOTHING;
            (-0.5 * x * x).exp()
        })
        .collect();
    let wsum: f64 = weights.iter().sum();
    let smooth: Vec<[f64; 2]> = (0..dense as isize)
        .map(|i| {
            let mut acc = [0.0, 0.0];
            for (j, w) in weights.iter().enumerate() {
                let idx = (i + j as isize - half_width).rem_euclid(dense as isize) as usize;
                acc[0] += w * pts[idx][0];
                acc[1] += w * pts[idx][1];
            }
            [acc[0] / wsum, acc[1] / wsum]
        })
        .collect();
    resample_closed(&smooth, n, PI)
}

/// Resamples a closed polyline at `n` points equally spaced in arc length,
/// starting from the point whose polar angle is closest to `start_angle`.
fn resample_closed(pts: &[[f64; 2]], n: usize, start_angle: f64) -> Vec<[f64; 2]> {
    let m = pts.len();
    let start = (0..m)
        .min_by(|&a, &b| {
            let da = angle_gap(pts[a][1].atan2(pts[a][0]), start_angle);
            let db = angle_gap(pts[b][1].atan2(pts[b][0]), start_angle);
            da.partial_cmp(&db).unwrap()
        })
        .unwrap_or(0);
    let ring: Vec<[f64; 2]> = (0..=m).map(|i| pts[(start + i) % m]).collect();
    let mut cum = vec![0.0; m + 1];
    for i in 1..=m {
        let dx = ring[i][0] - ring[i - 1][0];
        let dy = ring[i][1] - ring[i - 1][1];
        cum[i] = cum[i - 1] + dx.hypot(dy);
    }
    let total = cum[m];
    let mut out = Vec::with_capacity(n);
    let mut j = 0;
    for i in 0..n {
        let s = total * i as f64 / n as f64;
        while cum[j + 1] < s {
            j += 1;
        }
        let lam = (s - cum[j]) / (cum[j + 1] - cum[j]);
        out.push([
            ring[j][0] + lam * (ring[j + 1][0] - ring[j][0]),
            ring[j][1] + lam * (ring[j + 1][1] - ring[j][1]),
        ]);
    }
    out
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Smooth radial profile used for boundary perturbations.
pub fn perturbation_profile(theta: f64) -> f64 {
    theta.cos() + 0.5 * (2.0 * theta).sin() + 0.3 * (3.0 * theta).cos()
}

/// Moves every sample radially about `center` by the factor `1 + eps · η(θ)`.
pub fn perturb_radial<F: Scalar>(samples: &[Point2<F>], center: Point2<F>, eps: f64) -> Vec<Point2<F>> {
    samples
        .iter()
        .map(|&p| {
            let v = p - center;
            let theta = v.y.to_f64_lossy().atan2(v.x.to_f64_lossy());
            center + v * F::lit(1.0 + eps * perturbation_profile(theta))
        })
        .collect()
}

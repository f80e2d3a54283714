//! Inner medial axis, reach and inward offsets.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curve::{winding_number, JordanDomain};
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::scalar::{gauss_legendre_8, Scalar};

/// Voronoi vertices whose touching points span less than this are dropped.
const MIN_SEPARATION_DEG: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MedialVertex<F> {
    pub center: Point2<F>,
    pub radius: F,
}

/// Centers and radii of locally maximal inscribed disks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MedialAxisApprox<F> {
    pub vertices: Vec<MedialVertex<F>>,
    /// Boundary samples the diagram was computed from.
    pub resolution: usize,
}

impl<F: Scalar> MedialAxisApprox<F> {
    /// `x,y,radius` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,radius\n");
        for v in &self.vertices {
            let _ = writeln!(
                out,
                "{},{},{}",
                v.center.x.to_f64_lossy(),
                v.center.y.to_f64_lossy(),
                v.radius.to_f64_lossy()
            );
        }
        out
    }

    /// Distance from `p` to the nearest vertex.
    pub fn distance(&self, p: Point2<F>) -> F {
        self.vertices
            .iter()
            .map(|v| v.center.distance_sq(p))
            .fold(F::infinity(), F::min)
            .sqrt()
    }
}

/// Inner medial axis from the Voronoi diagram of `n` boundary samples.
pub fn medial_axis<F: Scalar>(d: &JordanDomain<F>, n: usize) -> Result<MedialAxisApprox<F>> {
    if n < 256 {
        return Err(Error::InvalidArgument(format!("medial axis needs n >= 256, got {n}")));
    }
    let samples = d.boundary().uniform_samples(n);
    let diam = d.diameter().to_f64_lossy();
    let jitter = 1e-9 * diam;
    let pts: Vec<delaunator::Point> = samples
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            delaunator::Point {
                x: p.x.to_f64_lossy() + jitter * rng.random_range(-1.0..1.0),
                y: p.y.to_f64_lossy() + jitter * rng.random_range(-1.0..1.0),
            }
        })
        .collect();
    let tri = delaunator::triangulate(&pts);
    if tri.triangles.is_empty() {
        return Err(Error::DegenerateVoronoi);
    }
    let polygon: Vec<Point2<f64>> = pts.iter().map(|p| Point2::new(p.x, p.y)).collect();
    let min_cos = MIN_SEPARATION_DEG.to_radians().cos();
    let mut vertices = Vec::new();
    for t in tri.triangles.chunks_exact(3) {
        let [a, b, c] = [polygon[t[0]], polygon[t[1]], polygon[t[2]]];
        let Some((o, r)) = circumcenter(a, b, c) else {
            continue;
        };
        if !(r < diam) || winding_number(&polygon, o) == 0 {
            continue;
        }
        let dirs = [(a - o) / r, (b - o) / r, (c - o) / r];
        let widest = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| dirs[i].dot(dirs[j]))
            .fold(f64::INFINITY, f64::min);
        if widest > min_cos {
            continue;
        }
        vertices.push(MedialVertex {
            center: o.cast(),
            radius: F::lit(r),
        });
    }
    if vertices.is_empty() {
        return Err(Error::DegenerateVoronoi);
    }
    Ok(MedialAxisApprox {
        vertices,
        resolution: n,
    })
}

fn circumcenter(a: Point2<f64>, b: Point2<f64>, c: Point2<f64>) -> Option<(Point2<f64>, f64)> {
    let b = b - a;
    let c = c - a;
    let d = 2.0 * b.cross(c);
    if d == 0.0 {
        return None;
    }
    let (b2, c2) = (b.norm_sq(), c.norm_sq());
    let o = Point2::new((c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d);
    Some((o + a, o.norm()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReachConfig {
    /// Boundary samples used for the Voronoi diagram.
    pub samples: usize,
}

impl Default for ReachConfig {
    fn default() -> Self {
        Self { samples: 2048 }
    }
}

/// The reach together with the two bounds it is the minimum of.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReachEstimate<F> {
    pub reach: F,
    /// Smallest distance from a boundary sample to the medial axis.
    pub medial_distance: F,
    /// `1 / max κ⁺`.
    pub curvature_cap: F,
}

/// `1 / max κ⁺` over the quadrature nodes of every spline segment.
pub fn curvature_cap<F: Scalar>(d: &JordanDomain<F>) -> F {
    let b = d.boundary();
    let rule = gauss_legendre_8::<F>();
    let mut kmax = F::zero();
    for s in 0..b.spline().segment_count() {
        for &(u, _) in rule.iter().chain([(F::zero(), F::zero())].iter()) {
            kmax = kmax.max(b.curvature_local(s, u));
        }
    }
    if kmax > F::zero() {
        F::one() / kmax
    } else {
        F::infinity()
    }
}

pub fn reach_estimate<F: Scalar>(d: &JordanDomain<F>, cfg: &ReachConfig) -> ReachEstimate<F> {
    let cap = curvature_cap(d);
    let medial_distance = match medial_axis(d, cfg.samples.max(256)) {
        Ok(axis) => d
            .boundary()
            .uniform_samples(cfg.samples.max(256))
            .into_iter()
            .map(|p| axis.distance(p))
            .fold(F::infinity(), F::min),
        // Without a usable diagram the curvature bound is all there is.
        Err(_) => F::infinity(),
    };
    ReachEstimate {
        reach: medial_distance.min(cap),
        medial_distance,
        curvature_cap: cap,
    }
}

/// The inner reach at the default resolution.
pub fn reach<F: Scalar>(d: &JordanDomain<F>) -> F {
    reach_estimate(d, &ReachConfig::default()).reach
}

/// The domain bounded by `γ + s N`, with `N` the inward unit normal.
pub fn inner_offset<F: Scalar>(d: &JordanDomain<F>, s: F) -> Result<JordanDomain<F>> {
    inner_offset_with_reach(d, s, reach(d))
}

pub fn inner_offset_with_reach<F: Scalar>(d: &JordanDomain<F>, s: F, reach: F) -> Result<JordanDomain<F>> {
    if !(s > F::zero()) {
        return Err(Error::InvalidArgument("offset distance must be positive".into()));
    }
    if s >= reach {
        return Err(Error::OffsetTooLarge {
            offset: s.to_f64_lossy(),
            reach: reach.to_f64_lossy(),
        });
    }
    let b = d.boundary();
    let m = b.len().max(512);
    let pts: Vec<_> = (0..m)
        .map(|i| {
            let t = F::of_usize(i) / F::of_usize(m);
            b.point(t) + b.inward_normal(t) * s
        })
        .collect();
    JordanDomain::from_samples(&pts)
}

/// `D^{1/2}`: the inward offset at half the reach.
pub fn half_reach_core<F: Scalar>(d: &JordanDomain<F>, reach: F) -> Result<JordanDomain<F>> {
    inner_offset_with_reach(d, reach * F::half(), reach)
}

/// Hausdorff distance between `∂D` and the boundary of `inner ⊕ s B²`.
pub fn minkowski_defect<F: Scalar>(d: &JordanDomain<F>, inner: &JordanDomain<F>, s: F) -> Result<F> {
    let b = inner.boundary();
    let m = b.len();
    let pts: Vec<_> = (0..m)
        .map(|i| {
            let t = F::of_usize(i) / F::of_usize(m);
            b.point(t) - b.inward_normal(t) * s
        })
        .collect();
    let envelope = JordanDomain::from_samples(&pts)?;
    Ok(d.hausdorff(&envelope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Shape;

    fn fixture(name: &str) -> JordanDomain<f64> {
        Shape::fixture(name).unwrap().domain(Point2::origin(), 512).unwrap()
    }

    #[test]
    fn disk_medial_axis_is_its_center() {
        let d = fixture("circle");
        let axis = medial_axis(&d, 512).unwrap();
        for v in &axis.vertices {
            assert!(v.center.norm() < 1e-3, "{v:?}");
            assert!((v.radius - 1.0).abs() < 1e-3);
        }
        assert!((reach(&d) - 1.0).abs() < 0.01);
    }

    #[test]
    fn ellipse_axis_and_reach() {
        let d = fixture("ellipse");
        let axis = medial_axis(&d, 2048).unwrap();
        for v in &axis.vertices {
            assert!(v.center.x.abs() <= 1.5 + 1e-3 && v.center.y.abs() < 1e-2, "{v:?}");
        }
        let r = reach(&d);
        assert!((r - 0.5).abs() < 0.01, "{r}");
    }

    #[test]
    fn too_few_samples_is_rejected() {
        assert!(matches!(
            medial_axis(&fixture("circle"), 64),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn offset_of_unit_disk() {
        let d = fixture("circle");
        let off = inner_offset(&d, 0.5).unwrap();
        for p in off.boundary().samples() {
            assert!((p.norm() - 0.5).abs() < 1e-6);
        }
        assert!(matches!(inner_offset(&d, 1.2), Err(Error::OffsetTooLarge { .. })));
    }

    #[test]
    fn reconstruction_of_fixtures() {
        for name in Shape::FIXTURE_NAMES {
            let d = fixture(name);
            let r = reach(&d);
            let core = half_reach_core(&d, r).unwrap();
            let defect = minkowski_defect(&d, &core, r / 2.0).unwrap();
            assert!(defect <= 1e-3 * d.diameter(), "{name}: {defect}");
        }
    }

    #[test]
    fn offset_of_convex_is_convex() {
        for name in ["ellipse", "egg"] {
            let d = fixture(name);
            let core = half_reach_core(&d, reach(&d)).unwrap();
            assert!(core.is_convex(), "{name}");
        }
    }

    #[test]
    fn csv_has_header_and_rows() {
        let axis = medial_axis(&fixture("ellipse"), 256).unwrap();
        let csv = axis.to_csv();
        assert!(csv.starts_with("x,y,radius\n"));
        assert_eq!(csv.lines().count(), axis.vertices.len() + 1);
    }
}

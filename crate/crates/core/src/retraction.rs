//! The retraction of the plane onto a domain along its exterior map, and the
//! canonical center built from it.

use num_complex::Complex;
use serde::Serialize;

use crate::centers::{classical_center, CenterKind};
use crate::conformal::{build_exterior_map, ExteriorMap, MapConfig};
use crate::curve::{JordanDomain, Region};
use crate::enclosing::normalizer;
use crate::error::{Error, Result};
use crate::geom::{Point2, Similarity};
use crate::medial::{half_reach_core, reach_estimate, ReachConfig};
use crate::scalar::Scalar;

/// Preimage radii are clamped here before `h_t`.
const MIN_PREIMAGE_RADIUS: f64 = 1e-8;

/// A domain with its normalizer and exterior map, for repeated retractions.
#[derive(Debug, Clone)]
pub struct RetractionContext<F> {
    domain: JordanDomain<F>,
    normalizer: Similarity<F>,
    exterior: ExteriorMap<F>,
    boundary_tol: F,
}

impl<F: Scalar> RetractionContext<F> {
    pub fn new(d: &JordanDomain<F>, cfg: &MapConfig<F>) -> Result<Self> {
        let rho = normalizer(d);
        let exterior = build_exterior_map(&d.transform(&rho), cfg)?;
        Ok(Self {
            domain: d.clone(),
            normalizer: rho,
            exterior,
            boundary_tol: F::lit(1e-9) * d.diameter(),
        })
    }

    pub fn domain(&self) -> &JordanDomain<F> {
        &self.domain
    }

    pub fn normalizer(&self) -> &Similarity<F> {
        &self.normalizer
    }

    pub fn exterior(&self) -> &ExteriorMap<F> {
        &self.exterior
    }

    /// `r_D(x, t)`: fixes the closed domain, otherwise moves `x` along the
    /// image of a ray towards `∂D`, reaching it at `t = 1`.
    pub fn retract_point(&self, x: Point2<F>, t: F) -> Result<Point2<F>> {
        if !(t >= F::zero() && t <= F::one()) {
            return Err(Error::InvalidArgument(format!(
                "time {} outside [0, 1]",
                t.to_f64_lossy()
            )));
        }
        if !x.is_finite() {
            return Err(Error::InvalidArgument("point is not finite".into()));
        }
        if t == F::zero() || self.domain.locate(x, self.boundary_tol).region != Region::Exterior {
            return Ok(x);
        }
        let y = self.normalizer.apply(x).to_complex();
        let mut z = self.exterior.inverse_c(y);
        let r = z.norm();
        if !r.is_finite() {
            return Err(Error::InverseFailed);
        }
        let floor = F::lit(MIN_PREIMAGE_RADIUS);
        if r < floor {
            z = if r == F::zero() {
                Complex::new(floor, F::zero())
            } else {
                z * (floor / r)
            };
        }
        let r = z.norm();
        let moved = z * (F::one() - t) + z * (t / r);
        let w = self.exterior.forward_c(moved);
        Ok(self.normalizer.inverse().apply(Point2::from_complex(w)))
    }
}

/// Settings for the canonical-center pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterConfig<F> {
    pub map: MapConfig<F>,
    pub reach: ReachConfig,
}

impl<F: Scalar> Default for CenterConfig<F> {
    fn default() -> Self {
        Self {
            map: MapConfig::default(),
            reach: ReachConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CenterReport<F> {
    pub kind: CenterKind,
    /// `c_f(D)`.
    pub point: Point2<F>,
    /// Signed distance from the center to `∂D`; positive inside.
    pub clearance: F,
    pub reach: F,
    /// `f(D)`.
    pub classical: Point2<F>,
    /// Whether `f(D)` was outside `D^{1/2}` and had to be retracted.
    pub retracted: bool,
}

/// `c_f(D) = r_{D^{1/2}}(f(D), 1)`.
pub fn canonical_center<F: Scalar>(d: &JordanDomain<F>, kind: CenterKind) -> Result<CenterReport<F>> {
    canonical_centers(d, &[kind], &CenterConfig::default()).map(|mut v| v.remove(0))
}

/// Canonical centers for several kinds, sharing the reach, `D^{1/2}` and its
/// exterior map.
pub fn canonical_centers<F: Scalar>(
    d: &JordanDomain<F>,
    kinds: &[CenterKind],
    cfg: &CenterConfig<F>,
) -> Result<Vec<CenterReport<F>>> {
    let reach = reach_estimate(d, &cfg.reach).reach;
    let core = half_reach_core(d, reach)?;
    let mut ctx: Option<RetractionContext<F>> = None;
    kinds
        .iter()
        .map(|&kind| {
            let f = classical_center(d, kind);
            let inside = core.locate(f, F::zero()).region != Region::Exterior;
            let point = if inside {
                f
            } else {
                if ctx.is_none() {
                    ctx = Some(RetractionContext::new(&core, &cfg.map)?);
                }
                ctx.as_ref().unwrap().retract_point(f, F::one())?
            };
            Ok(CenterReport {
                kind,
                point,
                clearance: d.locate(point, F::zero()).signed_distance,
                reach,
                classical: f,
                retracted: !inside,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Shape;

    fn unit_disk_ctx() -> RetractionContext<f64> {
        let d = Shape::Circle { r: 1.0 }.domain::<f64>(Point2::origin(), 512).unwrap();
        RetractionContext::new(&d, &MapConfig::default()).unwrap()
    }

    #[test]
    fn time_zero_and_interior_points_are_fixed() {
        let ctx = unit_disk_ctx();
        let x = Point2::new(3.0, 1.0);
        assert_eq!(ctx.retract_point(x, 0.0).unwrap(), x);
        let inside = Point2::new(0.2, -0.3);
        for t in [0.0, 0.5, 1.0] {
            assert_eq!(ctx.retract_point(inside, t).unwrap(), inside);
        }
    }

    #[test]
    fn disk_retraction_matches_reciprocal_formula() {
        let ctx = unit_disk_ctx();
        let r = ctx.retract_point(Point2::new(2.0, 0.0), 1.0).unwrap();
        assert!(r.distance(Point2::new(1.0, 0.0)) < 1e-3, "{r:?}");
        let r = ctx.retract_point(Point2::new(0.0, -3.0), 0.5).unwrap();
        assert!(r.distance(Point2::new(0.0, -1.5)) < 1e-3, "{r:?}");
    }

    #[test]
    fn far_points_retract_onto_the_boundary() {
        let ctx = unit_disk_ctx();
        let r = ctx.retract_point(Point2::new(-1e12, 1e12), 1.0).unwrap();
        assert!((r.norm() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn bad_time_is_rejected() {
        let ctx = unit_disk_ctx();
        assert!(ctx.retract_point(Point2::new(2.0, 0.0), 1.5).is_err());
    }

    #[test]
    fn convex_centers_are_not_moved() {
        let d = Shape::Ellipse { a: 2.0, b: 1.0 }
            .domain::<f64>(Point2::origin(), 512)
            .unwrap();
        for kind in CenterKind::ALL {
            let c = canonical_center(&d, kind).unwrap();
            assert!(!c.retracted);
            assert!(c.point.norm() < 1e-9);
        }
    }

    #[test]
    fn lune_centroid_is_pulled_inside() {
        let d = Shape::LuneSmoothed.domain::<f64>(Point2::origin(), 512).unwrap();
        let c = canonical_center(&d, CenterKind::Centroid).unwrap();
        assert!(c.retracted);
        assert!(c.clearance >= 0.9 * c.reach / 2.0, "{c:?}");
    }
}

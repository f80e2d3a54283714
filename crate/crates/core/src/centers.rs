//! The three classical similarity-equivariant centers and the annulus density.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curve::JordanDomain;
use crate::enclosing::circumscribing_circle;
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::medial::half_reach_core;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterKind {
    Centroid,
    Circumcenter,
    Steiner,
}

impl CenterKind {
    pub const ALL: [CenterKind; 3] = [CenterKind::Centroid, CenterKind::Circumcenter, CenterKind::Steiner];

    pub fn name(self) -> &'static str {
        match self {
            CenterKind::Centroid => "centroid",
            CenterKind::Circumcenter => "circumcenter",
            CenterKind::Steiner => "steiner",
        }
    }
}

impl fmt::Display for CenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CenterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CenterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown center kind {s:?}")))
    }
}

pub fn classical_center<F: Scalar>(d: &JordanDomain<F>, kind: CenterKind) -> Point2<F> {
    match kind {
        CenterKind::Centroid => d.area_and_centroid().1,
        CenterKind::Circumcenter => circumscribing_circle(d).center,
        CenterKind::Steiner => steiner_point(d),
    }
}

/// `∫ γ κ ds / ∫ κ ds` over the boundary.
pub fn steiner_point<F: Scalar>(d: &JordanDomain<F>) -> Point2<F> {
    let b = d.boundary();
    let sp = b.spline();
    // κ ds = (γ' × γ'') / |γ'|² dt.
    let Weighted(moment, total) = b.integrate(Weighted(Point2::origin(), F::zero()), |s, u| {
        let d1 = sp.d1_local(s, u);
        let w = d1.cross(sp.d2_local(s, u)) / d1.norm_sq();
        Weighted(sp.eval_local(s, u) * w, w)
    });
    moment / total
}

/// A point-and-weight pair that can be summed by the curve quadrature.
#[derive(Debug, Clone, Copy)]
struct Weighted<F>(Point2<F>, F);

impl<F: Scalar> std::ops::Add for Weighted<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Weighted(self.0 + o.0, self.1 + o.1)
    }
}

impl<F: Scalar> std::ops::Mul<F> for Weighted<F> {
    type Output = Self;
    fn mul(self, k: F) -> Self {
        Weighted(self.0 * k, self.1 * k)
    }
}

/// The density `δ` on `∂D^{1/2}` whose center of mass is the centroid of the
/// annulus `A = D ∖ D^{1/2}` of a convex domain.
#[derive(Debug, Clone)]
pub struct AnnulusDensity<F> {
    core: JordanDomain<F>,
    reach: F,
    annulus_area: F,
}

impl<F: Scalar> AnnulusDensity<F> {
    pub fn new(d: &JordanDomain<F>, reach: F) -> Result<Self> {
        if !d.is_convex() {
            return Err(Error::NotConvex);
        }
        let core = half_reach_core(d, reach)?;
        let annulus_area = d.area() - core.area();
        Ok(Self {
            core,
            reach,
            annulus_area,
        })
    }

    /// `D^{1/2}`.
    pub fn core(&self) -> &JordanDomain<F> {
        &self.core
    }

    pub fn annulus_area(&self) -> F {
        self.annulus_area
    }

    /// `δ(t) = (R/2 + R² κ(t) / 8) / |A|` with `κ` the curvature of `∂D^{1/2}`.
    pub fn density(&self, t: F) -> F {
        self.density_of_curvature(self.core.curvature(t))
    }

    fn density_of_curvature(&self, k: F) -> F {
        let r = self.reach;
        (r * F::half() + r * r * k / F::lit(8.0)) / self.annulus_area
    }

    /// `∫ δ ds` over `∂D^{1/2}`; equals 1 exactly in the continuum.
    pub fn total_mass(&self) -> F {
        let b = self.core.boundary();
        b.integrate(F::zero(), |s, u| {
            self.density_of_curvature(b.curvature_local(s, u)) * b.spline().d1_local(s, u).norm()
        })
    }

    /// `∫ γ δ ds` over `∂D^{1/2}`.
    pub fn weighted_centroid(&self) -> Point2<F> {
        let b = self.core.boundary();
        let sp = b.spline();
        b.integrate(Point2::origin(), |s, u| {
            let w = self.density_of_curvature(b.curvature_local(s, u)) * sp.d1_local(s, u).norm();
            sp.eval_local(s, u) * w
        })
    }
}

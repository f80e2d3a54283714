//! Canonical interior points of smooth planar Jordan domains that commute
//! with every similarity of the plane, together with the machinery they are
//! built from: periodic spline boundaries, zipper-type conformal maps of the
//! interior and exterior, reach and inward offsets, the exterior retraction
//! onto a domain, and the flow deforming a domain to a round disk.
//!
//! Every kernel is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to `f64`, which is what the accuracy
//! contracts are stated for.

// Negated comparisons are used on purpose so that NaN fails the guard.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod centers;
pub mod conformal;
pub mod curve;
pub mod enclosing;
pub mod error;
pub mod flow;
pub mod geom;
pub mod io;
pub mod medial;
pub mod retraction;
pub mod scalar;
pub mod shapes;
pub mod spline;

pub use centers::{classical_center, AnnulusDensity, CenterKind};
pub use conformal::{build_exterior_map, build_interior_map, ConformalMap, Direction, ExteriorMap, MapConfig};
pub use curve::{CurveConfig, JordanCurve, JordanDomain, Location, Region};
pub use enclosing::{circumscribing_circle, min_enclosing_circle, normalizer};
pub use error::{Error, Result};
pub use flow::{flow_frames, round_target, FlowFrame, FlowStage};
pub use geom::{Circle, Point2, Similarity};
pub use medial::{inner_offset, medial_axis, reach, MedialAxisApprox, ReachConfig};
pub use retraction::{canonical_center, canonical_centers, CenterConfig, CenterReport, RetractionContext};
pub use scalar::Scalar;
pub use shapes::Shape;

pub type Point = geom::Point2<f64>;
pub type Sim = geom::Similarity<f64>;
pub type Disk = geom::Circle<f64>;
pub type Curve = curve::JordanCurve<f64>;
pub type Domain = curve::JordanDomain<f64>;
pub type Map = conformal::ConformalMap<f64>;
pub type ExtMap = conformal::ExteriorMap<f64>;
pub type MedialAxis = medial::MedialAxisApprox<f64>;
pub type Retraction = retraction::RetractionContext<f64>;
pub type Frame = flow::FlowFrame<f64>;

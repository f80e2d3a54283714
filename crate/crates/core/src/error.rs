use thiserror::Error;

/// Everything that can go wrong while building or querying domains and maps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least {min} boundary samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("boundary sample {index} is not finite")]
    NonFinite { index: usize },

    #[error("boundary samples {index} and {next} coincide")]
    DuplicateSample { index: usize, next: usize },

    #[error("boundary is self-intersecting (segments {first} and {second})")]
    SelfIntersecting { first: usize, second: usize },

    #[error("boundary has total curvature {total}, expected 2π")]
    BadRotationIndex { total: f64 },

    #[error("point is not in the interior of the domain")]
    PointNotInterior,

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("conformal map did not converge: boundary defect {defect} above {tolerance} at {samples} samples")]
    DidNotConverge {
        defect: f64,
        tolerance: f64,
        samples: usize,
    },

    #[error("point lies outside the domain of the map")]
    OutOfDomain,

    #[error("voronoi diagram is degenerate")]
    DegenerateVoronoi,

    #[error("offset distance {offset} is not below the reach {reach}")]
    OffsetTooLarge { offset: f64, reach: f64 },

    #[error("domain is not convex")]
    NotConvex,

    #[error("could not invert the exterior map at this point")]
    InverseFailed,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

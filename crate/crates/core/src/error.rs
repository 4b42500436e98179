use thiserror::Error;

/// Errors raised by the geometry, combinatorics and packing layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coordinate vector is zero or not finite")]
    ZeroVector,
    #[error("point is not a proper (interior) point: <x,x> = {0}")]
    NotProperPoint(f64),
    #[error("pole is ideal; its polar hyperplane is tangent to the absolute")]
    IdealPole,
    #[error("hyperplane pole has vanishing self-product")]
    DegeneratePole,
    #[error("line endpoints are projectively equal")]
    DegenerateLine,
    #[error("line does not meet the interior of the model")]
    LineOutsideModel,
    #[error("transformation does not preserve the Lorentzian form (residual {0:e})")]
    NotIsometry(f64),
    #[error("horoball center is not an ideal point: <c,c> = {0}")]
    CenterNotIdeal(f64),
    #[error("horoball level {0} is not a proper horoball parameter")]
    DegenerateHoroball(f64),
    #[error("geodesic endpoint lies inside the horoball")]
    EndpointInsideHoroball,
    #[error("horoballs share their ideal center")]
    CommonCenter,
    #[error("horoballs have different ideal centers")]
    CenterMismatch,
    #[error("chord length must be non-negative, got {0}")]
    NegativeChord(f64),
    #[error("dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("distance must be positive, got {0}")]
    NonpositiveDistance(f64),
    #[error("angle {0} is outside (0, pi/2]")]
    AngleOutOfRange(f64),
    #[error("vertex pair uses the same index {0}")]
    SameIndex(usize),
    #[error("vertex index {0} is outside 1..=24")]
    IndexOutOfRange(usize),
    #[error("vertex set {0:?} is not a facet of the 24-cell")]
    NotAFacet(Vec<usize>),
    #[error("A{0}A{1} is not an edge of the 24-cell")]
    NotAnEdge(usize, usize),
    #[error("cone generators are degenerate")]
    ConeDegenerate,
    #[error("parameter {x} outside the domain [0, {max}] of family {family}")]
    DomainExceeded { family: String, x: f64, max: f64 },
    #[error("per-sector volume {0} exceeds the largest admissible horoball")]
    MaxVolumeExceeded(f64),
    #[error("volume must be positive, got {0}")]
    NonpositiveVolume(f64),
    #[error("grid must have at least 2 points, got {0}")]
    InvalidGrid(usize),
    #[error("Monte Carlo needs at least 10000 samples, got {0}")]
    InvalidSampleCount(usize),
    #[error("unknown packing family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

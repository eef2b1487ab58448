use thiserror::Error;

/// Everything that can go wrong in the geometric and counting routines.
///
/// Numeric payloads are reported in `f64` regardless of the working scalar.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("support function is not strongly convex: radius of curvature {rho} at phi = {phi}")]
    NotConvex { phi: f64, rho: f64 },

    #[error("angle {phi} outside [0, 2pi]")]
    OutOfRange { phi: f64 },

    #[error("quadrature did not settle after {samples} samples (last change {change})")]
    QuadratureDiverged { samples: usize, change: f64 },

    #[error("body is a disk centered at the reference point; equilibria are not isolated")]
    DegenerateCircle,

    #[error("evolute degenerates to the reference point")]
    DegeneratePointEvolute,

    #[error("counting integral did not round: value {value} after {samples} samples")]
    NotConverged { value: f64, samples: usize },

    #[error("direct equilibrium count {direct} disagrees with winding formula {formula}")]
    Mismatch { direct: usize, formula: i64 },

    #[error("winding number {twice_m}/2 of the evolute is positive")]
    PositiveWinding { twice_m: i64 },

    #[error("polyline vertex {index} coincides with the winding center")]
    VertexAtCenter { index: usize },

    #[error("sample count {got} is below the minimum {min}")]
    TooFewSamples { got: usize, min: usize },

    #[error("inclination {alpha} is not inside (-pi/2, pi/2)")]
    InvalidIncline { alpha: f64 },

    #[error("primitive of the oblique profile is not periodic (drift {drift} over one turn)")]
    NonPeriodic { drift: f64 },

    #[error("phi = {phi} is a stationary point of the radius of curvature")]
    NotRegularEvolutePoint { phi: f64 },

    #[error("cosine and sine coefficient lists differ in length ({cos} vs {sin})")]
    CoefficientLength { cos: usize, sin: usize },

    #[error("non-finite coefficient")]
    NonFinite,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

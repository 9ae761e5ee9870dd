use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point coincides with the inversion center")]
    CenterSingular,
    #[error("line passes through the inversion center; its image is a line")]
    LineThroughCenter,
    #[error("circles are concentric")]
    Concentric,
    #[error("ray endpoint coincides with the vertex")]
    DegenerateRay,
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("coefficient expansion supports at most 8 foci, got {0}")]
    TooManyFoci(usize),
    #[error("polar angle lies outside both lobes (cos 2θ < 0)")]
    OutsideLobe,
    #[error("point is not on the curve (residual {0:e})")]
    NotOnCurve(f64),

    #[error("linkage has no solution for the requested branch")]
    NoSolution,
    #[error("secant misses the construction circle")]
    NoChord,
    #[error("linkage point is out of reach")]
    OutOfReach,
    #[error("state has no intersection point P")]
    UndefinedCenter,
    #[error("the double point has no unique normal")]
    DoublePoint,

    #[error("no sign change of the field inside the window")]
    EmptyTrace,
    #[error("gradient vanishes at a singular point")]
    SingularPoint,
    #[error("refinement did not converge (residual {0:e})")]
    NoConvergence(f64),
    #[error("contour is not closed")]
    OpenContour,

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

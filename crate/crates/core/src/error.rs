use thiserror::Error;

/// Errors surfaced by the estimation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("distance matrix is not symmetric at ({i}, {j}): {a} vs {b}")]
    NonSymmetric { i: usize, j: usize, a: f64, b: f64 },
    #[error("negative distance at ({i}, {j}): {value}")]
    NegativeDistance { i: usize, j: usize, value: f64 },
    #[error("nonzero diagonal entry at {i}: {value}")]
    NonzeroDiagonal { i: usize, value: f64 },
    #[error(
        "triangle inequality violated: d({i},{k}) = {direct} > d({i},{j}) + d({j},{k}) = {via}"
    )]
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
        direct: f64,
        via: f64,
    },
    #[error("point index {index} out of range for space of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("mask universe {mask} does not match space size {space}")]
    MaskSizeMismatch { mask: usize, space: usize },
    #[error("exact cover solving is limited to {max} target points, got {got}")]
    ExactSizeGuard { max: usize, got: usize },
    #[error("all-subsets candidate enumeration is limited to {max} points, got {got}")]
    SubsetEnumerationGuard { max: usize, got: usize },
    #[error("exhaustive oracle is limited to {max} points, got {got}")]
    OracleSizeGuard { max: usize, got: usize },
    #[error("delta {delta} is below the sample resolution {resolution}")]
    DeltaBelowResolution { delta: f64, resolution: f64 },
    #[error("centered gauge requires ball candidates; got a plain subset")]
    CenteredGaugeOnSubset,
    #[error("gauge field length {got} does not match space size {expected}")]
    FieldLengthMismatch { got: usize, expected: usize },
    #[error("gauge exponent must be finite and nonnegative, got {0}")]
    InvalidExponent(f64),
    #[error("no bracketing exponent: log-log slope keeps its sign on [{lo}, {hi}]; widen the s grid")]
    NoBracket { lo: f64, hi: f64 },
    #[error("scaling profile needs at least {need} usable scales, got {got}")]
    TooFewScales { need: usize, got: usize },
    #[error("all cover costs are infinite; no usable scaling data")]
    AllCostsInfinite,
    #[error("generator parameter out of range: {0}")]
    GeneratorParam(String),
    #[error("metric is not normalized: diameter {0} exceeds 1")]
    NotNormalized(f64),
    #[error("io error on {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

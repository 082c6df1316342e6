use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("non-finite sample at index {index}")]
    NonFinite { index: usize },

    #[error("sample count {values} does not match grid count {grid}")]
    LengthMismatch { values: usize, grid: usize },

    #[error("grids do not match")]
    GridMismatch,

    #[error("target grid [{lo}, {hi}] extends outside the source span [{src_lo}, {src_hi}]")]
    Extrapolation {
        lo: f64,
        hi: f64,
        src_lo: f64,
        src_hi: f64,
    },

    #[error("non-finite parameter `{0}`")]
    NonFiniteParameter(&'static str),

    #[error("order a = {0} is degenerate (sin = 0); use apply_frft for identity/parity orders")]
    DegenerateOrder(f64),

    #[error("propagation time with sin(omega t) = {0:e} is degenerate for a kernel")]
    DegenerateTime(f64),

    #[error("|nu| = {0:e} is below the direct-tomogram threshold; use tomogram_via_frft")]
    SmallNu(f64),

    #[error("tomography parameters (mu, nu) must not both be zero")]
    ZeroParameters,

    #[error("signal is numerically zero")]
    ZeroSignal,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

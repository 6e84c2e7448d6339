use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter `{name}` must be strictly positive, got {value}")]
    NonPositiveParam { name: &'static str, value: f64 },

    #[error("grid needs at least 3 points, got {0}")]
    GridTooSmall(usize),

    #[error("truncation K+1 = {k_plus_1} exceeds the {n_points} grid points")]
    UnderResolved { k_plus_1: usize, n_points: usize },

    #[error("profile has {len} values but the grid has {n_points} points")]
    LengthMismatch { len: usize, n_points: usize },

    #[error("profile contains a non-finite value at node {node}")]
    NonFiniteProfile { node: usize },

    #[error("chemical concentration not strictly positive: min {min:e} at node {node}")]
    NonPositiveChemical { min: f64, node: usize },

    #[error("mode index k must be >= 1 for this quantity")]
    ZeroModeIndex,

    #[error("K_max = {k_max} too small to bracket the minimum (need >= k_star_floor + 2 = {needed})")]
    BracketTooSmall { k_max: usize, needed: usize },

    #[error("degenerate bifurcation at k0 = {k0}: {reason}")]
    DegenerateBifurcation { k0: usize, reason: String },

    #[error("branch does not exist on this side: radicand {radicand:e} < 0 at chi = {chi}")]
    WrongBranchSide { chi: f64, radicand: f64 },

    #[error("solution blow-up at t = {t}: max u = {max_u:e}, min u = {min_u:e}")]
    Blowup { t: f64, max_u: f64, min_u: f64 },

    #[error("non-finite values produced at t = {t}")]
    NonFinite { t: f64 },

    #[error("Newton stalled after {iters} iterations, residual {residual:e}")]
    NewtonStalled { iters: usize, residual: f64 },

    #[error("singular Jacobian in Newton solve")]
    SingularJacobian,

    #[error("branch seeding failed at chi = {chi}: {reason}")]
    SeedingFailed { chi: f64, reason: String },

    #[error("family must have at least {min} members, got {got}")]
    FamilyTooSmall { min: usize, got: usize },

    #[error("window half-width delta = {delta} must be >= grid spacing {dx}")]
    WindowTooNarrow { delta: f64, dx: f64 },

    #[error("{path}:{line}: {msg}")]
    Config { path: String, line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Numerical laboratory for the 1-D parabolic-elliptic chemotaxis system
//! with singular sensitivity and logistic source
//!
//! ```text
//! u_t = u_xx - chi (u/v v_x)_x + u(a - b u)      0 < x < L
//!   0 = v_xx - mu v + nu u
//! u_x = v_x = 0 at x = 0, L
//! ```
//!
//! The crate provides closed-form linear stability analysis of the constant
//! state `(a/b, nu a / (mu b))`, pitchfork normal-form coefficients from the
//! center-manifold reduction, a conservative finite-difference/RK4 time
//! integrator, a truncated cosine-Galerkin cross-validation solver, Newton
//! continuation of steady states in `chi`, and spike-layer diagnostics for
//! families of steady states.

pub mod bifurcation;
pub mod config;
pub mod continuation;
pub mod diagnostics;
pub mod elliptic;
mod error;
pub mod galerkin;
pub mod model;
pub mod pde;
pub mod preset;
pub mod stability;

pub use error::{Error, Result};
pub use model::{Grid1D, ModeVector, Params, Profile};

//! Pitchfork normal-form coefficients at each threshold `chi_k0*` from the
//! center-manifold reduction of the cosine-mode system, and the predicted
//! local branch shapes.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{Grid1D, Params, Profile};
use crate::stability::{chi_k_star, lambda_k};

/// Dead band below which the cubic coefficient is treated as degenerate and
/// the normal form as unreliable.
pub const BETA_DEAD_BAND: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `beta > 0`: branches exist for `chi > chi_k0*`.
    Supercritical,
    /// `beta < 0`: branches exist for `chi < chi_k0*`.
    Subcritical,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Direction::Supercritical => write!(f, "supercritical"),
            Direction::Subcritical => write!(f, "subcritical"),
        }
    }
}

/// Center-manifold data at the bifurcation point `chi = chi_k0*`.
///
/// On the manifold the critical amplitude `A = u_{k0}` obeys
/// `dA/dt = alpha * (chi - chi_k0*) * A - beta * A^3`, and the slaved modes
/// are `u_0 = a0 A^2`, `u_{2k0} = a2k0 A^2` to leading order.
#[derive(Debug, Clone, Copy)]
pub struct PitchforkData {
    pub k0: usize,
    pub chi_k0_star: f64,
    /// Mode-0 slaving coefficient, exactly `-b/(2a)`.
    pub a0: f64,
    /// Second-harmonic slaving coefficient.
    pub a2k0: f64,
    /// Linear coefficient `alpha_{k0} = mu k0^2 pi^2 / (mu L^2 + k0^2 pi^2)`.
    pub alpha_k0: f64,
    /// Cubic coefficient of the reduced amplitude equation.
    pub beta_k0: f64,
    pub direction: Direction,
}

impl PitchforkData {
    /// Leading branch amplitude `sqrt(alpha (chi - chi*) / beta)` on the side
    /// where the radicand is nonnegative.
    pub fn amplitude(&self, chi: f64) -> Result<f64> {
        let radicand = self.alpha_k0 * (chi - self.chi_k0_star) / self.beta_k0;
        if radicand < 0.0 {
            return Err(Error::WrongBranchSide { chi, radicand });
        }
        Ok(radicand.sqrt())
    }
}

/// Evaluates the normal-form coefficients at `chi_k0*` for `k0 >= 1`.
///
/// Requires the generic condition `lambda_{2k0}(chi_k0*) != 0`; a zero there,
/// or `|beta|` inside the dead band, is reported as a degenerate bifurcation.
pub fn pitchfork_coefficients(k0: usize, params: &Params) -> Result<PitchforkData> {
    if k0 == 0 {
        return Err(Error::ZeroModeIndex);
    }
    let Params { a, b, mu, l, .. } = *params;
    let chi_star = chi_k_star(k0, a, mu, l)?;
    let lambda_2k0 = lambda_k(2 * k0, chi_star, a, mu, l);
    if lambda_2k0.abs() < 1e-12 {
        return Err(Error::DegenerateBifurcation {
            k0,
            reason: format!("lambda_2k0(chi_k0*) = {lambda_2k0:e} vanishes"),
        });
    }

    let k0pi2 = (k0 as f64 * PI).powi(2); // k0^2 pi^2
    let k0pi4 = k0pi2 * k0pi2; //           k0^4 pi^4
    let l2 = l * l;
    let d1 = mu * l2 + k0pi2; //   mu L^2 + k0^2 pi^2
    let d2 = mu * l2 + 4.0 * k0pi2; // mu L^2 + 4 k0^2 pi^2

    let a0 = -b / (2.0 * a);
    let a2k0 = (b / 2.0 - chi_star * mu * b * k0pi4 / (a * d1 * d1)) / lambda_2k0;
    let alpha = mu * k0pi2 / d1;
    let beta = b
        * (2.0 * a0
            + a2k0
            + chi_star * mu * k0pi4 / (a * d1 * d2) * a2k0
            + chi_star * mu * mu * b * k0pi4 * l2 / (4.0 * a * a * d1 * d1 * d1));

    if beta.abs() < BETA_DEAD_BAND {
        return Err(Error::DegenerateBifurcation {
            k0,
            reason: format!("|beta| = {:e} below dead band", beta.abs()),
        });
    }
    let direction = if beta > 0.0 { Direction::Supercritical } else { Direction::Subcritical };
    Ok(PitchforkData { k0, chi_k0_star: chi_star, a0, a2k0, alpha_k0: alpha, beta_k0: beta, direction })
}

/// Predicted branch profile near the bifurcation point:
///
/// `u = a/b +- A cos(k0 pi x/L) + A^2 (a0 + a2k0 cos(2 k0 pi x/L))`
///
/// where `A = sqrt(alpha (chi - chi*)/beta)`. The quadratic term is the
/// slaved center-manifold correction, so the residual of the steady equation
/// is `O(A^3)`; this makes the profile a usable Newton seed.
pub fn local_branch_profile(
    pd: &PitchforkData,
    chi: f64,
    sign: Sign,
    params: &Params,
    grid: &Grid1D,
) -> Result<Profile> {
    let amp = sign.apply(pd.amplitude(chi)?);
    let u_const = params.u_const();
    let (k0, l) = (pd.k0 as f64, grid.length);
    let (a0, a2k0) = (pd.a0, pd.a2k0);
    Ok(Profile::from_fn(grid, |x| {
        u_const
            + amp * (k0 * PI * x / l).cos()
            + amp * amp * (a0 + a2k0 * (2.0 * k0 * PI * x / l).cos())
    }))
}

/// Branch selector for the symmetric pair of bifurcating solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(&self, x: f64) -> f64 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("expected `+` or `-`, got `{other}`")),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Right-hand side of the reduced amplitude equation on the center manifold:
/// `alpha * chi_tilde * u - beta * u^3`.
pub fn reduced_ode_rhs(u_k0: f64, chi_tilde: f64, pd: &PitchforkData) -> f64 {
    pd.alpha_k0 * chi_tilde * u_k0 - pd.beta_k0 * u_k0 * u_k0 * u_k0
}

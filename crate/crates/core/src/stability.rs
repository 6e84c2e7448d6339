//! Closed-form linear stability analysis of the constant solution:
//! mode growth rates `lambda_k`, instability thresholds `chi_k*`, the
//! critical threshold `chi* = inf_k chi_k*`, and the comparison values for
//! the regular-sensitivity variant of the model.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Growth rate of the k-th cosine mode at the constant solution:
///
/// `lambda_k = -(k^2 pi^2 + a L^2)/L^2 + chi mu k^2 pi^2 / (mu L^2 + k^2 pi^2)`.
///
/// `lambda_0 = -a` for every `chi`.
pub fn lambda_k(k: usize, chi: f64, a: f64, mu: f64, l: f64) -> f64 {
    let kpi2 = (k as f64 * PI).powi(2);
    let l2 = l * l;
    -(kpi2 + a * l2) / l2 + chi * mu * kpi2 / (mu * l2 + kpi2)
}

/// Threshold `chi_k*` at which `lambda_k` crosses zero (`k >= 1`):
///
/// `chi_k* = (mu L^2 + k^2 pi^2)/(k^2 pi^2 L^2) * (k^2 pi^2 + a L^2)/mu`.
///
/// Depends only on `a`, `mu`, `L`.
pub fn chi_k_star(k: usize, a: f64, mu: f64, l: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::ZeroModeIndex);
    }
    let kpi2 = (k as f64 * PI).powi(2);
    let l2 = l * l;
    Ok((mu * l2 + kpi2) / (kpi2 * l2) * (kpi2 + a * l2) / mu)
}

/// `floor((L/pi) (a mu)^{1/4})`, the index near which `k -> chi_k*` attains
/// its minimum.
pub fn k_star_floor(a: f64, mu: f64, l: f64) -> usize {
    (l / PI * (a * mu).powf(0.25)).floor() as usize
}

/// Minimum of `chi_k*` over `k in 1..=k_max` together with the argmin.
///
/// Requires `k_max >= k_star_floor + 2` so the minimum is bracketed
/// (`chi_k*` decreases up to `k_star` and increases after).
pub fn chi_star(a: f64, mu: f64, l: f64, k_max: usize) -> Result<(f64, usize)> {
    let needed = k_star_floor(a, mu, l) + 2;
    if k_max < needed {
        return Err(Error::BracketTooSmall { k_max, needed });
    }
    let mut best = f64::INFINITY;
    let mut arg = 1;
    for k in 1..=k_max {
        let c = chi_k_star(k, a, mu, l)?;
        if c < best {
            best = c;
            arg = k;
        }
    }
    Ok((best, arg))
}

/// Counterpart threshold for the regular-sensitivity model
/// (`chi u v_x` instead of `chi (u/v) v_x`):
///
/// `chibar_k* = (mu L^2 + k^2 pi^2)/(k^2 pi^2 L^2) * b (k^2 pi^2 + a L^2)/(a nu)`,
///
/// i.e. `chi_k* * (b mu)/(a nu)`; it depends on all five model constants.
pub fn regular_chi_k_star(k: usize, a: f64, b: f64, mu: f64, nu: f64, l: f64) -> Result<f64> {
    Ok(chi_k_star(k, a, mu, l)? * b * mu / (a * nu))
}

/// Stability verdict for the constant solution at a given `chi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Unstable,
    Critical,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Stable => write!(f, "stable"),
            Verdict::Unstable => write!(f, "unstable"),
            Verdict::Critical => write!(f, "critical"),
        }
    }
}

/// Full spectral summary of the constant solution.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    /// `lambda_k(chi)` for `k = 0..=k_max`.
    pub lambdas: Vec<f64>,
    /// `chi_k*` for `k = 1..=k_max`.
    pub chi_stars: Vec<f64>,
    /// `min_k chi_k*`.
    pub chi_star: f64,
    /// Argmin of `chi_k*`.
    pub k_star_index: usize,
    /// `floor((L/pi)(a mu)^{1/4})`.
    pub k_star_floor: usize,
    pub verdict: Verdict,
    /// The argmin sat at `k_max`, so the minimum was not bracketed.
    pub min_at_boundary: bool,
    /// Non-generic tie `chi_k* = chi_{k+1}*` at the argmin (resolved to the
    /// smaller k).
    pub tie: bool,
}

/// Evaluates the closed-form spectrum for `k = 0..=k_max` and classifies the
/// constant solution at `params.chi`.
pub fn analyze(chi: f64, a: f64, mu: f64, l: f64, k_max: usize) -> Result<StabilityReport> {
    let (cs, arg) = chi_star(a, mu, l, k_max)?;
    let lambdas = (0..=k_max).map(|k| lambda_k(k, chi, a, mu, l)).collect();
    let chi_stars: Vec<f64> = (1..=k_max)
        .map(|k| chi_k_star(k, a, mu, l))
        .collect::<Result<_>>()?;
    let tie = arg < k_max && chi_stars[arg] == cs;
    let verdict = if chi < cs {
        Verdict::Stable
    } else if chi > cs {
        Verdict::Unstable
    } else {
        Verdict::Critical
    };
    Ok(StabilityReport {
        lambdas,
        chi_stars,
        chi_star: cs,
        k_star_index: arg,
        k_star_floor: k_star_floor(a, mu, l),
        verdict,
        min_at_boundary: arg == k_max,
        tie,
    })
}

/// Default truncation for threshold scans; far beyond any argmin at the
/// parameter magnitudes this crate targets.
pub const DEFAULT_K_MAX: usize = 64;

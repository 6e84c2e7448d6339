//! Solver for the chemical equation `0 = v_xx - mu v + nu u` with
//! homogeneous Neumann conditions, discretized by second-order central
//! differences with reflected ghost nodes.

use crate::error::{Error, Result};
use crate::model::{Grid1D, Params, Profile};

/// Tridiagonal system `A v = rhs` stored by diagonals.
///
/// Assembled here as `(mu I - D2) v = nu u`, which is strictly diagonally
/// dominant for `mu > 0`.
#[derive(Debug, Clone)]
pub struct TridiagonalSystem {
    pub sub: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup: Vec<f64>,
    pub rhs: Vec<f64>,
}

impl TridiagonalSystem {
    /// Discrete chemical operator rows for the given grid and parameters.
    /// Neumann ends use reflected ghosts `v_{-1} = v_1`, `v_N = v_{N-2}`,
    /// which doubles the off-diagonal entry in the first and last rows.
    pub fn chemical(grid: &Grid1D, mu: f64, nu: f64, u: &[f64]) -> Self {
        let n = grid.n_points;
        let inv_dx2 = 1.0 / (grid.dx * grid.dx);
        let mut sub = vec![-inv_dx2; n];
        let mut sup = vec![-inv_dx2; n];
        let diag = vec![mu + 2.0 * inv_dx2; n];
        sub[0] = 0.0;
        sup[0] = -2.0 * inv_dx2;
        sub[n - 1] = -2.0 * inv_dx2;
        sup[n - 1] = 0.0;
        let rhs = u.iter().map(|&ui| nu * ui).collect();
        TridiagonalSystem { sub, diag, sup, rhs }
    }

    /// Thomas algorithm; consumes the right-hand side and returns the solution.
    pub fn solve(&self) -> Vec<f64> {
        let n = self.diag.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        c[0] = self.sup[0] / self.diag[0];
        d[0] = self.rhs[0] / self.diag[0];
        for i in 1..n {
            let m = self.diag[i] - self.sub[i] * c[i - 1];
            c[i] = self.sup[i] / m;
            d[i] = (self.rhs[i] - self.sub[i] * d[i - 1]) / m;
        }
        let mut v = d;
        for i in (0..n - 1).rev() {
            v[i] -= c[i] * v[i + 1];
        }
        v
    }

    /// Residual `A v - rhs`, used by tests to certify the solve.
    pub fn residual(&self, v: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let mut r = self.diag[i] * v[i] - self.rhs[i];
                if i > 0 {
                    r += self.sub[i] * v[i - 1];
                }
                if i + 1 < n {
                    r += self.sup[i] * v[i + 1];
                }
                r
            })
            .collect()
    }
}

/// Solves `0 = v_xx - mu v + nu u`, `v_x(0) = v_x(L) = 0` for the given
/// cell density profile. Errors if the result is non-finite.
pub fn solve_chemical(u: &Profile, params: &Params, grid: &Grid1D) -> Result<Profile> {
    debug_assert_eq!(u.len(), grid.n_points);
    let sys = TridiagonalSystem::chemical(grid, params.mu, params.nu, &u.values);
    let v = sys.solve();
    if let Some(node) = v.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFiniteProfile { node });
    }
    Ok(Profile { values: v })
}

/// Maximum of `|v_x / v|` over the grid, with one-sided differences at the
/// endpoints and central differences inside. Rejects non-positive `v`.
///
/// For stationary solutions this is bounded by `sqrt(mu)`.
pub fn log_derivative_bound_check(v: &Profile, grid: &Grid1D) -> Result<f64> {
    let vals = &v.values;
    if let Some(node) = vals.iter().position(|&x| !(x > 0.0)) {
        return Err(Error::NonPositiveChemical { min: vals[node], node });
    }
    let n = grid.n_points;
    let mut max_ratio: f64 = 0.0;
    for i in 1..n - 1 {
        let vx = (vals[i + 1] - vals[i - 1]) / (2.0 * grid.dx);
        max_ratio = max_ratio.max((vx / vals[i]).abs());
    }
    Ok(max_ratio)
}

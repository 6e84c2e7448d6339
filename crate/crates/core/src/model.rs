//! Shared domain types: physical parameters, the uniform grid, nodal
//! profiles, and cosine-mode coefficient vectors, plus the transforms
//! between nodal and modal representations.

use std::f64::consts::PI;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// The five physical constants of the system plus the domain length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Chemotaxis sensitivity coefficient `chi > 0`.
    pub chi: f64,
    /// Growth rate `a > 0` of the cell population.
    pub a: f64,
    /// Self-limitation rate `b > 0`.
    pub b: f64,
    /// Degradation rate `mu > 0` of the chemical signal.
    pub mu: f64,
    /// Production rate `nu > 0` of the chemical signal.
    pub nu: f64,
    /// Domain length `L > 0`.
    pub l: f64,
}

impl Params {
    pub fn new(chi: f64, a: f64, b: f64, mu: f64, nu: f64, l: f64) -> Result<Self> {
        let p = Params { chi, a, b, mu, nu, l };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("chi", self.chi),
            ("a", self.a),
            ("b", self.b),
            ("mu", self.mu),
            ("nu", self.nu),
            ("L", self.l),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::NonPositiveParam { name, value });
            }
        }
        Ok(())
    }

    /// u-component of the constant solution, `a/b`.
    pub fn u_const(&self) -> f64 {
        self.a / self.b
    }

    /// v-component of the constant solution, `(nu/mu)(a/b)`.
    pub fn v_const(&self) -> f64 {
        self.nu / self.mu * self.a / self.b
    }

    /// Copy with a different `chi`; other fields unchanged.
    pub fn with_chi(&self, chi: f64) -> Self {
        Params { chi, ..*self }
    }
}

/// Uniform vertex-centered grid on `[0, L]` including both endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    pub n_points: usize,
    pub dx: f64,
    pub nodes: Vec<f64>,
    pub length: f64,
}

/// Builds the uniform grid with `nodes[0] = 0` and `nodes[n-1] = L`.
pub fn make_grid(l: f64, n_points: usize) -> Result<Grid1D> {
    if !(l > 0.0) || !l.is_finite() {
        return Err(Error::NonPositiveParam { name: "L", value: l });
    }
    if n_points < 3 {
        return Err(Error::GridTooSmall(n_points));
    }
    let dx = l / (n_points - 1) as f64;
    let mut nodes: Vec<f64> = (0..n_points).map(|i| i as f64 * dx).collect();
    // pin the right endpoint exactly
    nodes[n_points - 1] = l;
    Ok(Grid1D { n_points, dx, nodes, length: l })
}

impl Grid1D {
    /// Composite trapezoid quadrature of nodal values over `[0, L]`.
    pub fn trapezoid(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.n_points);
        let n = self.n_points;
        let interior: f64 = values[1..n - 1].iter().sum();
        self.dx * (0.5 * values[0] + interior + 0.5 * values[n - 1])
    }
}

/// Nodal values of a scalar field (`u` or `v`) on a [`Grid1D`].
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub values: Vec<f64>,
}

impl Profile {
    pub fn new(values: Vec<f64>, grid: &Grid1D) -> Result<Self> {
        if values.len() != grid.n_points {
            return Err(Error::LengthMismatch { len: values.len(), n_points: grid.n_points });
        }
        if let Some(node) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteProfile { node });
        }
        Ok(Profile { values })
    }

    pub fn constant(c: f64, grid: &Grid1D) -> Self {
        Profile { values: vec![c; grid.n_points] }
    }

    /// Samples `f(x)` at the grid nodes.
    pub fn from_fn(grid: &Grid1D, f: impl Fn(f64) -> f64) -> Self {
        Profile { values: grid.nodes.iter().map(|&x| f(x)).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Sup-norm distance to another profile.
    pub fn sup_distance(&self, other: &Profile) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Reflected profile `x -> L - x` (values reversed on the uniform grid).
    pub fn reflected(&self) -> Profile {
        let mut values = self.values.clone();
        values.reverse();
        Profile { values }
    }

    /// Writes the two-column CSV `x,value` with a one-line header.
    pub fn write_csv<W: Write>(&self, grid: &Grid1D, mut w: W) -> Result<()> {
        writeln!(w, "x,value")?;
        for (x, v) in grid.nodes.iter().zip(&self.values) {
            writeln!(w, "{x},{v}")?;
        }
        Ok(())
    }

    /// Reads a profile written by [`Profile::write_csv`]; ignores the x column.
    pub fn read_csv<R: BufRead>(r: R, grid: &Grid1D) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.n_points);
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            if i == 0 || line.is_empty() || line.starts_with('#') {
                continue;
            }
            let field = line.split(',').nth(1).ok_or_else(|| Error::Config {
                path: "<profile csv>".into(),
                line: i + 1,
                msg: "expected two comma-separated columns".into(),
            })?;
            let v: f64 = field.trim().parse().map_err(|e| Error::Config {
                path: "<profile csv>".into(),
                line: i + 1,
                msg: format!("bad value `{field}`: {e}"),
            })?;
            values.push(v);
        }
        Profile::new(values, grid)
    }
}

/// Truncated cosine-series coefficients `(c_0, ..., c_K)` of the basis
/// `cos(k pi x / L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeVector {
    pub coeffs: Vec<f64>,
}

impl ModeVector {
    pub fn new(coeffs: Vec<f64>) -> Self {
        ModeVector { coeffs }
    }

    pub fn zeros(k: usize) -> Self {
        ModeVector { coeffs: vec![0.0; k + 1] }
    }

    /// Truncation order `K` (highest mode index).
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Writes the two-column CSV `k,coeff`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "k,coeff")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{k},{c}")?;
        }
        Ok(())
    }
}

/// Extracts cosine coefficients by trapezoid quadrature:
/// `c_0 = (1/L) int p dx`, `c_k = (2/L) int p cos(k pi x/L) dx`.
pub fn project_to_modes(p: &Profile, grid: &Grid1D, truncation: usize) -> Result<ModeVector> {
    if truncation + 1 > grid.n_points {
        return Err(Error::UnderResolved { k_plus_1: truncation + 1, n_points: grid.n_points });
    }
    debug_assert_eq!(p.len(), grid.n_points);
    let l = grid.length;
    let mut coeffs = Vec::with_capacity(truncation + 1);
    let mut weighted = vec![0.0; grid.n_points];
    for k in 0..=truncation {
        for (i, w) in weighted.iter_mut().enumerate() {
            *w = p.values[i] * (k as f64 * PI * grid.nodes[i] / l).cos();
        }
        let integral = grid.trapezoid(&weighted);
        coeffs.push(if k == 0 { integral / l } else { 2.0 * integral / l });
    }
    Ok(ModeVector { coeffs })
}

/// Evaluates the cosine series at the grid nodes.
pub fn synthesize_profile(m: &ModeVector, grid: &Grid1D) -> Profile {
    let l = grid.length;
    let values = grid
        .nodes
        .iter()
        .map(|&x| {
            m.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * (k as f64 * PI * x / l).cos())
                .sum()
        })
        .collect();
    Profile { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn grid_paper_spacings() {
        let g = make_grid(1.0, 101).unwrap();
        assert_abs_diff_eq!(g.dx, 0.01, epsilon = 1e-15);
        let g = make_grid(6.0, 601).unwrap();
        assert_abs_diff_eq!(g.dx, 0.01, epsilon = 1e-15);
        assert_eq!(g.nodes[0], 0.0);
        assert_eq!(g.nodes[600], 6.0);
    }

    #[test]
    fn grid_smallest_legal() {
        let g = make_grid(1.0, 3).unwrap();
        assert_eq!(g.nodes, vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(make_grid(1.0, 2).is_err());
        assert!(make_grid(0.0, 11).is_err());
        assert!(make_grid(-2.0, 11).is_err());
    }

    #[test]
    fn params_reject_nonpositive() {
        assert!(Params::new(5.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_ok());
        assert!(Params::new(-1.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(Params::new(5.0, 1.0, 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(Params::new(5.0, 1.0, 1.0, 1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn constant_projects_to_mode_zero() {
        let g = make_grid(1.0, 101).unwrap();
        let p = Profile::constant(2.5, &g);
        let m = project_to_modes(&p, &g, 8).unwrap();
        assert_abs_diff_eq!(m.coeffs[0], 2.5, epsilon = 1e-12);
        for c in &m.coeffs[1..] {
            assert_abs_diff_eq!(*c, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pure_cosine_projects_to_single_mode() {
        let g = make_grid(1.0, 401).unwrap();
        let p = Profile::from_fn(&g, |x| (PI * x).cos());
        let m = project_to_modes(&p, &g, 8).unwrap();
        assert_abs_diff_eq!(m.coeffs[1], 1.0, epsilon = 1e-8);
        for (k, c) in m.coeffs.iter().enumerate() {
            if k != 1 {
                assert_abs_diff_eq!(*c, 0.0, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn squared_cosine_splits_into_mean_and_double_mode() {
        // cos^2(2 pi x / L) = 1/2 + cos(4 pi x / L)/2
        let g = make_grid(2.0, 801).unwrap();
        let p = Profile::from_fn(&g, |x| (2.0 * PI * x / 2.0).cos().powi(2));
        let m = project_to_modes(&p, &g, 8).unwrap();
        assert_abs_diff_eq!(m.coeffs[0], 0.5, epsilon = 1e-8);
        assert_abs_diff_eq!(m.coeffs[4], 0.5, epsilon = 1e-8);
        for (k, c) in m.coeffs.iter().enumerate() {
            if k != 0 && k != 4 {
                assert_abs_diff_eq!(*c, 0.0, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn synthesize_constant_and_three_node_cosine() {
        let g = make_grid(1.0, 11).unwrap();
        let p = synthesize_profile(&ModeVector::new(vec![3.0]), &g);
        assert!(p.values.iter().all(|&v| (v - 3.0).abs() < 1e-15));

        let g3 = make_grid(1.0, 3).unwrap();
        let p = synthesize_profile(&ModeVector::new(vec![0.0, 1.0]), &g3);
        assert_abs_diff_eq!(p.values[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.values[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.values[2], -1.0, epsilon = 1e-15);
    }

    #[test]
    fn under_resolved_projection_is_rejected() {
        let g = make_grid(1.0, 5).unwrap();
        let p = Profile::constant(1.0, &g);
        assert!(project_to_modes(&p, &g, 5).is_err());
        assert!(project_to_modes(&p, &g, 4).is_ok());
    }

    #[test]
    fn profile_csv_round_trip() {
        let g = make_grid(1.0, 11).unwrap();
        let p = Profile::from_fn(&g, |x| 1.0 + 0.5 * (PI * x).cos());
        let mut buf = Vec::new();
        p.write_csv(&g, &mut buf).unwrap();
        let q = Profile::read_csv(std::io::BufReader::new(&buf[..]), &g).unwrap();
        assert_eq!(p, q);
    }

    proptest! {
        // project(synthesize(m)) recovers m for band-limited data.
        #[test]
        fn mode_round_trip(coeffs in proptest::collection::vec(-2.0f64..2.0, 1..=13)) {
            let g = make_grid(1.0, 201).unwrap();
            let m = ModeVector::new(coeffs);
            let p = synthesize_profile(&m, &g);
            let back = project_to_modes(&p, &g, m.truncation()).unwrap();
            for (a, b) in m.coeffs.iter().zip(&back.coeffs) {
                prop_assert!((a - b).abs() < 1e-8);
            }
        }

        // Parseval: (1/L) int p^2 = c_0^2 + (1/2) sum c_k^2 for band-limited p.
        #[test]
        fn parseval_identity(coeffs in proptest::collection::vec(-2.0f64..2.0, 1..=13)) {
            let g = make_grid(1.0, 201).unwrap();
            let m = ModeVector::new(coeffs);
            let p = synthesize_profile(&m, &g);
            let sq: Vec<f64> = p.values.iter().map(|v| v * v).collect();
            let lhs = g.trapezoid(&sq) / g.length;
            let rhs = m.coeffs[0].powi(2)
                + 0.5 * m.coeffs[1..].iter().map(|c| c * c).sum::<f64>();
            prop_assert!((lhs - rhs).abs() < 1e-8 * (1.0 + rhs.abs()));
        }
    }
}

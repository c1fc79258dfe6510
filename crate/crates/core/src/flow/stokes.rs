//! First-order small-amplitude wave fields over a laminar flow.
//!
//! The branch through a laminar flow at its bifurcation wavenumber is
//!
//! ```text
//! psi(x, y, t) = psi_hat(y) + t cos(tau x) gamma(y, tau) + O(t^2),
//! xi(x, t)     = -t cos(tau x) gamma(0, tau) / psi_hat_y(0) + O(t^2),
//! ```
//!
//! with the surface correction derived by linearizing psi(x, xi(x)) = 0.
//! Both psi and xi are even in x by construction.

use super::{FlowParameters, LaminarProfile, TransverseMode, WaveField};
use crate::grid::{Field2, GridSpec};
use crate::{Error, Result};

/// Sample a laminar flow onto a flattened grid as a [`WaveField`] with
/// `xi == 0`. The period is taken from the grid length.
pub fn laminar_field(laminar: &LaminarProfile, grid: GridSpec) -> WaveField {
    let d = laminar.params.d;
    let psi = Field2::from_fn(grid.clone(), |_x, yhat| laminar.psi(yhat - d));
    let mut params = laminar.params.clone();
    params.lambda = grid.length;
    WaveField { params, grid: grid.clone(), psi, xi: vec![0.0; grid.nx + 1], amplitude: 0.0 }
}

/// Build the first-order Stokes field at amplitude `t` for the transverse
/// mode `mode` (usually the output of [`super::bifurcation_tau`]). The field
/// period is `2 pi / mode.tau` and the grid spans exactly one period.
pub fn stokes_field(
    laminar: &LaminarProfile,
    mode: &TransverseMode,
    t: f64,
    nx: usize,
    ny: usize,
) -> Result<WaveField> {
    let d = laminar.params.d;
    let lambda = 2.0 * std::f64::consts::PI / mode.tau;
    let grid = GridSpec::new(nx, ny, lambda, d);
    let psi_y0 = laminar.psi_y(0.0);
    if psi_y0 >= 0.0 {
        return Err(Error::NonMonotoneSurface { value: psi_y0, x: 0.0 });
    }

    // xi_1 = -cos(tau x) gamma(0)/psi_y(0); gamma(0) = 1 by normalization
    let xi: Vec<f64> = (0..=nx)
        .map(|ix| -t * (mode.tau * grid.x(ix)).cos() / psi_y0)
        .collect();

    let mut psi = Field2::zeros(grid.clone());
    for ix in 0..=nx {
        let x = grid.x(ix);
        let cos = (mode.tau * x).cos();
        for iy in 0..=ny {
            let y = grid.yhat(iy) * (xi[ix] + d) / d - d;
            *psi.at_mut(ix, iy) = laminar.psi(y) + t * cos * mode.gamma(y);
        }
    }

    // reject if the construction lost surface monotonicity
    for ix in 0..=nx {
        let py = psi.dy_at_surface(ix) * d / (xi[ix] + d);
        if py >= 0.0 {
            return Err(Error::NonMonotoneSurface { value: py, x: grid.x(ix) });
        }
    }

    let mut params = laminar.params.clone();
    params.lambda = lambda;
    Ok(WaveField { params, grid, psi, xi, amplitude: t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::{bifurcation_tau, make_profiles, solve_laminar, ProfileDef};

    fn bench_stokes(t: f64, nx: usize, ny: usize) -> WaveField {
        let profiles = make_profiles(ProfileDef::Constant { rho0: 1.0 }).unwrap();
        let params =
            crate::flow::FlowParameters::new(1.0, 2.0, -1.0, 2.0 * std::f64::consts::PI).unwrap();
        let lam = solve_laminar(&profiles, &params).unwrap();
        let mode = bifurcation_tau(&lam, &profiles).unwrap();
        stokes_field(&lam, &mode, t, nx, ny).unwrap()
    }

    #[test]
    fn zero_amplitude_is_laminar() {
        let f = bench_stokes(0.0, 16, 8);
        assert!(f.xi.iter().all(|&v| v == 0.0));
        for ix in 0..=16 {
            for iy in 0..=8 {
                let y = f.grid.yhat(iy) - 1.0;
                assert!((f.psi.at(ix, iy) - (-y)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn field_even_in_x() {
        let f = bench_stokes(0.01, 24, 12);
        assert!(f.psi.even_defect() < 1e-14);
        for ix in 0..=24 {
            let jx = f.grid.mirror(ix);
            assert!((f.xi[ix] - f.xi[jx]).abs() < 1e-15);
        }
    }

    #[test]
    fn opposite_amplitudes_shift_by_half_period() {
        let fp = bench_stokes(0.01, 24, 12);
        let fm = bench_stokes(-0.01, 24, 12);
        // xi_{-t}(x) = xi_t(x + lambda/2) for the cos construction
        for ix in 0..24 {
            let shifted = (ix + 12) % 24;
            assert!((fm.xi[ix] - fp.xi[shifted]).abs() < 1e-15);
        }
    }

    #[test]
    fn boundary_rows() {
        let f = bench_stokes(0.01, 24, 12);
        for ix in 0..=24 {
            // bottom row exactly -p0
            assert!((f.psi.at(ix, 0) - 1.0).abs() < 1e-12);
            // surface row zero to O(t^2)
            assert!(f.psi.at(ix, 12).abs() < 5.0 * 0.01_f64.powi(2));
        }
    }
}

//! Frechet-derivative coefficients and the linearized operators in the
//! three coordinate systems (physical, partial hodograph, flattened), with
//! numerical verification of the equivalence lemmas.

mod flattening;
mod hodograph;
pub mod operators;

pub use flattening::{flattening_frechet, FlatteningCheck};
pub use hodograph::{
    apply_hodograph_frechet, hodograph_build, verify_cormi, CormiReport, HodographField,
};
pub use operators::FlatOps;

use crate::flow::{FluidProfiles, WaveField};
use crate::grid::Field2;
use crate::{Error, Result};

/// Coefficient fields of the linearized operators: the potential
/// `omega_*(x, y)` on the full rectangle and the surface coefficient
/// `sigma(x)` together with the surface traces of `grad psi`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct LinearizedCoefficients {
    pub omega_star: Field2,
    pub sigma: Vec<f64>,
    pub psi_x_s: Vec<f64>,
    pub psi_y_s: Vec<f64>,
}

/// Compute `omega_*` and `sigma` for a wave field.
///
/// `omega_* = g y rho''(-psi) - beta'(psi)` with physical `y` recovered from
/// the flattening map; `sigma = (grad psi . d_y grad psi + g rho(0)) / psi_y`
/// on the surface, with one-sided O(h^2) stencils for the y-derivatives.
pub fn coefficients(field: &WaveField, profiles: &FluidProfiles) -> Result<LinearizedCoefficients> {
    let grid = &field.grid;
    let g = field.params.g;
    let ny = grid.ny;

    let mut omega_star = Field2::zeros(grid.clone());
    for ix in 0..=grid.nx {
        for iy in 0..=ny {
            let y = field.y_phys(ix, iy);
            *omega_star.at_mut(ix, iy) = profiles.omega_star(g, y, field.psi.at(ix, iy));
        }
    }

    let ops = FlatOps::new(field);
    let psi_x = ops.dx_phys(&field.psi);
    let psi_y = ops.dy_phys(&field.psi);
    let psi_xy = ops.dy_phys(&psi_x);
    let psi_yy = ops.dy_phys(&psi_y);

    let g_rho0 = g * profiles.rho_surface();
    let mut sigma = vec![0.0; grid.nx + 1];
    let mut psi_x_s = vec![0.0; grid.nx + 1];
    let mut psi_y_s = vec![0.0; grid.nx + 1];
    for ix in 0..=grid.nx {
        let px = psi_x.at(ix, ny);
        let py = psi_y.at(ix, ny);
        if py.abs() < 1e-8 {
            return Err(Error::SingularSigma { value: py, x: grid.x(ix) });
        }
        sigma[ix] = (px * psi_xy.at(ix, ny) + py * psi_yy.at(ix, ny) + g_rho0) / py;
        psi_x_s[ix] = px;
        psi_y_s[ix] = py;
    }

    Ok(LinearizedCoefficients { omega_star, sigma, psi_x_s, psi_y_s })
}

/// Apply the linearized interior and surface operators:
/// `A u = Lap u + omega_* u` on the whole grid and
/// `B u = grad psi . grad u - sigma u` on the surface row.
pub fn apply_ab(
    coeffs: &LinearizedCoefficients,
    field: &WaveField,
    u: &Field2,
) -> (Field2, Vec<f64>) {
    let ops = FlatOps::new(field);
    let lap = ops.laplacian(u);
    let au = lap.zip(&u.zip(&coeffs.omega_star, |uv, w| uv * w), |l, p| l + p);

    let ux = ops.dx_phys(u);
    let uy = ops.dy_phys(u);
    let ny = field.grid.ny;
    let bu: Vec<f64> = (0..=field.grid.nx)
        .map(|ix| {
            coeffs.psi_x_s[ix] * ux.at(ix, ny) + coeffs.psi_y_s[ix] * uy.at(ix, ny)
                - coeffs.sigma[ix] * u.at(ix, ny)
        })
        .collect();
    (au, bu)
}

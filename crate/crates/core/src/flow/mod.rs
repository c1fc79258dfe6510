//! Background flows: fluid profiles, laminar (x-independent) solutions,
//! bifurcation wavenumbers and first-order small-amplitude wave fields.

mod laminar;
mod profiles;
mod residual;
mod stokes;

pub use laminar::{bifurcation_tau, solve_laminar, transverse_mode, LaminarProfile, TransverseMode};
pub use profiles::{make_profiles, FluidProfiles, ProfileDef};
pub use residual::{pde_residual, ResidualReport};
pub use stokes::{laminar_field, stokes_field};

use crate::grid::{Field2, GridSpec};
use crate::{Error, Result};

/// Physical parameters of a flow: channel depth `d`, gravity `g`, relative
/// pseudomass `p0 < 0` and period `lambda`. The Bernoulli constant `r` is
/// derived (filled in by the laminar solver), never chosen.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FlowParameters {
    pub d: f64,
    pub g: f64,
    pub p0: f64,
    pub lambda: f64,
    pub r: Option<f64>,
}

impl FlowParameters {
    pub fn new(d: f64, g: f64, p0: f64, lambda: f64) -> Result<Self> {
        if !(d > 0.0) {
            return Err(Error::InvalidParameter(format!("depth d must be > 0, got {d}")));
        }
        if !(g > 0.0) {
            return Err(Error::InvalidParameter(format!("gravity g must be > 0, got {g}")));
        }
        if !(p0 < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "relative pseudomass p0 must be < 0, got {p0}"
            )));
        }
        if !(lambda > 0.0) {
            return Err(Error::InvalidParameter(format!("period must be > 0, got {lambda}")));
        }
        Ok(FlowParameters { d, g, p0, lambda, r: None })
    }

    /// Quasimomentum period: tau_star = 2 pi / lambda.
    pub fn tau_star(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.lambda
    }
}

/// A background solution `(psi, xi)` stored on the flattened rectangle
/// `(x, yhat) in [-lambda/2, lambda/2] x [0, d]`, where
/// `yhat = d (y + d) / (xi(x) + d)`. Row `ny` is the free surface, row 0 the
/// bottom. Laminar flows are the `xi == 0`, `amplitude == 0` special case.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct WaveField {
    pub params: FlowParameters,
    pub grid: GridSpec,
    pub psi: Field2,
    pub xi: Vec<f64>,
    /// Amplitude tag of the construction; 0 for laminar.
    pub amplitude: f64,
}

impl WaveField {
    /// Physical y of a flattened node.
    pub fn y_phys(&self, ix: usize, iy: usize) -> f64 {
        let d = self.params.d;
        self.grid.yhat(iy) * (self.xi[ix] + d) / d - d
    }

    /// xi'(x) at the nodes by periodic centered differences.
    pub fn xi_x(&self) -> Vec<f64> {
        let nx = self.grid.nx;
        let h2 = 2.0 * self.grid.hx();
        let mut out = vec![0.0; nx + 1];
        for ix in 0..nx {
            let ip = (ix + 1) % nx;
            let im = (ix + nx - 1) % nx;
            out[ix] = (self.xi[ip] - self.xi[im]) / h2;
        }
        out[nx] = out[0];
        out
    }

    /// Serialize in the documented JSON layout (params, grid, psi row-major
    /// by y then x, xi).
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(FlowParameters::new(1.0, 2.0, -1.0, 6.28).is_ok());
        assert!(FlowParameters::new(-1.0, 2.0, -1.0, 6.28).is_err());
        assert!(FlowParameters::new(1.0, 2.0, 0.5, 6.28).is_err());
        assert!(FlowParameters::new(1.0, 0.0, -1.0, 6.28).is_err());
    }

    #[test]
    fn tau_star_matches_period() {
        let p = FlowParameters::new(1.0, 2.0, -1.0, 2.0 * std::f64::consts::PI).unwrap();
        assert!((p.tau_star() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn json_roundtrip() {
        let profiles = make_profiles(ProfileDef::Constant { rho0: 1.0 }).unwrap();
        let params = FlowParameters::new(1.0, 2.0, -1.0, 2.0 * std::f64::consts::PI).unwrap();
        let lam = solve_laminar(&profiles, &params).unwrap();
        let field = laminar_field(&lam, GridSpec::new(8, 6, params.lambda, params.d));
        let s = field.to_json().unwrap();
        let back = WaveField::from_json(&s).unwrap();
        assert_eq!(field.psi, back.psi);
        assert_eq!(field.xi, back.xi);
    }
}

//! Density and Bernoulli-function profiles.
//!
//! The density is a function of `s = -psi` on `[p0, 0]`; the Bernoulli
//! function takes `psi` itself on `[0, -p0]`. Constant and
//! linear-density/constant-beta profiles have closed-form derivatives; the
//! sampled kind derives them by second-order centered differences and
//! evaluates through cubic splines.

use crate::interp::CubicSpline;
use crate::{Error, Result};

/// Declarative profile description (serializable, used by the CLI config).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProfileDef {
    Constant { rho0: f64 },
    LinearRhoConstantBeta { rho0: f64, slope: f64, beta0: f64 },
    /// `rho` sampled uniformly on `s in [s_min, 0]`, `beta` sampled
    /// uniformly on `psi in [0, psi_max]`.
    CustomSampled { s_min: f64, rho: Vec<f64>, psi_max: f64, beta: Vec<f64> },
}

/// Density and Bernoulli profiles with first and second derivatives.
#[derive(Debug, Clone)]
pub struct FluidProfiles {
    pub def: ProfileDef,
    rho_sp: Option<[CubicSpline; 3]>,
    beta_sp: Option<[CubicSpline; 2]>,
}

fn centered_derivs(grid: &[f64], vals: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = vals.len();
    let h = grid[1] - grid[0];
    let mut d1 = vec![0.0; n];
    let mut d2 = vec![0.0; n];
    for i in 0..n {
        if i == 0 {
            d1[i] = (-3.0 * vals[0] + 4.0 * vals[1] - vals[2]) / (2.0 * h);
            d2[i] = (2.0 * vals[0] - 5.0 * vals[1] + 4.0 * vals[2] - vals[3]) / (h * h);
        } else if i == n - 1 {
            d1[i] = (3.0 * vals[n - 1] - 4.0 * vals[n - 2] + vals[n - 3]) / (2.0 * h);
            d2[i] =
                (2.0 * vals[n - 1] - 5.0 * vals[n - 2] + 4.0 * vals[n - 3] - vals[n - 4]) / (h * h);
        } else {
            d1[i] = (vals[i + 1] - vals[i - 1]) / (2.0 * h);
            d2[i] = (vals[i + 1] - 2.0 * vals[i] + vals[i - 1]) / (h * h);
        }
    }
    (d1, d2)
}

/// Build validated profiles from a definition.
pub fn make_profiles(def: ProfileDef) -> Result<FluidProfiles> {
    match &def {
        ProfileDef::Constant { rho0 } => {
            if !(*rho0 > 0.0) {
                return Err(Error::NonPositiveDensity { min: *rho0 });
            }
            Ok(FluidProfiles { def, rho_sp: None, beta_sp: None })
        }
        ProfileDef::LinearRhoConstantBeta { rho0, slope, beta0: _ } => {
            // rho(s) = rho0 + slope * s on s in [p0, 0]; positivity is
            // checked against the worst case s when the flow is built, here
            // only the surface value can be checked.
            if !(*rho0 > 0.0) {
                return Err(Error::NonPositiveDensity { min: *rho0 });
            }
            let _ = slope;
            Ok(FluidProfiles { def, rho_sp: None, beta_sp: None })
        }
        ProfileDef::CustomSampled { s_min, rho, psi_max, beta } => {
            if rho.len() < 5 || beta.len() < 5 {
                return Err(Error::InvalidParameter(
                    "sampled profiles need at least 5 points".into(),
                ));
            }
            let min = rho.iter().cloned().fold(f64::INFINITY, f64::min);
            if !(min > 0.0) {
                return Err(Error::NonPositiveDensity { min });
            }
            if !(*s_min < 0.0) || !(*psi_max > 0.0) {
                return Err(Error::InvalidParameter("sample ranges must be nontrivial".into()));
            }
            let ns = rho.len();
            let s_grid: Vec<f64> =
                (0..ns).map(|i| s_min + (0.0 - s_min) * i as f64 / (ns - 1) as f64).collect();
            let (r1, r2) = centered_derivs(&s_grid, rho);
            let nb = beta.len();
            let p_grid: Vec<f64> = (0..nb).map(|i| psi_max * i as f64 / (nb - 1) as f64).collect();
            let (b1, _) = centered_derivs(&p_grid, beta);
            let rho_sp = Some([
                CubicSpline::new(s_grid.clone(), rho.clone()),
                CubicSpline::new(s_grid.clone(), r1),
                CubicSpline::new(s_grid, r2),
            ]);
            let beta_sp = Some([
                CubicSpline::new(p_grid.clone(), beta.clone()),
                CubicSpline::new(p_grid, b1),
            ]);
            Ok(FluidProfiles { def, rho_sp, beta_sp })
        }
    }
}

impl FluidProfiles {
    /// rho(s), s = -psi.
    pub fn rho(&self, s: f64) -> f64 {
        match &self.def {
            ProfileDef::Constant { rho0 } => *rho0,
            ProfileDef::LinearRhoConstantBeta { rho0, slope, .. } => rho0 + slope * s,
            ProfileDef::CustomSampled { .. } => self.rho_sp.as_ref().unwrap()[0].eval(s),
        }
    }

    pub fn rho1(&self, s: f64) -> f64 {
        match &self.def {
            ProfileDef::Constant { .. } => 0.0,
            ProfileDef::LinearRhoConstantBeta { slope, .. } => *slope,
            ProfileDef::CustomSampled { .. } => self.rho_sp.as_ref().unwrap()[1].eval(s),
        }
    }

    pub fn rho2(&self, s: f64) -> f64 {
        match &self.def {
            ProfileDef::Constant { .. } | ProfileDef::LinearRhoConstantBeta { .. } => 0.0,
            ProfileDef::CustomSampled { .. } => self.rho_sp.as_ref().unwrap()[2].eval(s),
        }
    }

    pub fn beta(&self, psi: f64) -> f64 {
        match &self.def {
            ProfileDef::Constant { .. } => 0.0,
            ProfileDef::LinearRhoConstantBeta { beta0, .. } => *beta0,
            ProfileDef::CustomSampled { .. } => self.beta_sp.as_ref().unwrap()[0].eval(psi),
        }
    }

    pub fn beta1(&self, psi: f64) -> f64 {
        match &self.def {
            ProfileDef::Constant { .. } | ProfileDef::LinearRhoConstantBeta { .. } => 0.0,
            ProfileDef::CustomSampled { .. } => self.beta_sp.as_ref().unwrap()[1].eval(psi),
        }
    }

    /// Surface density rho(0).
    pub fn rho_surface(&self) -> f64 {
        self.rho(0.0)
    }

    /// Vorticity-like right-hand side: omega(y, psi) = -g y rho'(-psi) - beta(psi).
    pub fn omega(&self, g: f64, y: f64, psi: f64) -> f64 {
        -g * y * self.rho1(-psi) - self.beta(psi)
    }

    /// Frechet coefficient: omega_*(y, psi) = g y rho''(-psi) - beta'(psi).
    /// This equals d omega / d psi at fixed y.
    pub fn omega_star(&self, g: f64, y: f64, psi: f64) -> f64 {
        g * y * self.rho2(-psi) - self.beta1(psi)
    }

    /// d omega / d y at fixed psi.
    pub fn omega_y(&self, g: f64, _y: f64, psi: f64) -> f64 {
        -g * self.rho1(-psi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_profile_trivial() {
        let p = make_profiles(ProfileDef::Constant { rho0: 1.0 }).unwrap();
        assert_eq!(p.rho(-0.3), 1.0);
        assert_eq!(p.rho1(-0.3), 0.0);
        assert_eq!(p.rho2(-0.3), 0.0);
        assert_eq!(p.beta(0.4), 0.0);
        assert_eq!(p.omega(2.0, -0.5, 0.5), 0.0);
        assert_eq!(p.omega_star(2.0, -0.5, 0.5), 0.0);
    }

    #[test]
    fn linear_profile_second_derivs_vanish() {
        let p = make_profiles(ProfileDef::LinearRhoConstantBeta {
            rho0: 1.0,
            slope: 0.1,
            beta0: 0.5,
        })
        .unwrap();
        assert!((p.rho(-0.5) - 0.95).abs() < 1e-15);
        assert_eq!(p.rho1(-0.2), 0.1);
        assert_eq!(p.rho2(-0.2), 0.0);
        assert_eq!(p.beta1(0.3), 0.0);
        // omega_* vanishes identically, so the linearized potential is zero
        assert_eq!(p.omega_star(1.0, -0.3, 0.2), 0.0);
    }

    #[test]
    fn rejects_nonpositive_density() {
        assert!(make_profiles(ProfileDef::Constant { rho0: 0.0 }).is_err());
        let bad = ProfileDef::CustomSampled {
            s_min: -1.0,
            rho: vec![1.0, 0.5, -0.1, 0.5, 1.0],
            psi_max: 1.0,
            beta: vec![0.0; 5],
        };
        assert!(make_profiles(bad).is_err());
    }

    #[test]
    fn sampled_derivatives_match_centered_differences() {
        // rho(s) = exp(0.3 s), sampled; derivatives must agree with the
        // independent centered-difference oracle computed here on the same
        // grid to O(h^2).
        let n = 41;
        let s_min = -1.0;
        let grid: Vec<f64> =
            (0..n).map(|i| s_min + (0.0 - s_min) * i as f64 / (n - 1) as f64).collect();
        let rho: Vec<f64> = grid.iter().map(|&s| (0.3 * s).exp()).collect();
        let beta = vec![0.0, 0.0, 0.0, 0.0, 0.0];
        let p = make_profiles(ProfileDef::CustomSampled {
            s_min,
            rho: rho.clone(),
            psi_max: 1.0,
            beta,
        })
        .unwrap();
        let h = grid[1] - grid[0];
        for i in 1..n - 1 {
            let oracle1 = (rho[i + 1] - rho[i - 1]) / (2.0 * h);
            let oracle2 = (rho[i + 1] - 2.0 * rho[i] + rho[i - 1]) / (h * h);
            assert!((p.rho1(grid[i]) - oracle1).abs() < 1e-10);
            assert!((p.rho2(grid[i]) - oracle2).abs() < 1e-10);
        }
    }
}

//! Laminar (x-independent) background flows and their transverse eigenmodes.
//!
//! The stream function of a laminar flow solves the two-point boundary value
//! problem
//!
//! ```text
//! psi'' + omega(y, psi) = 0,   psi(-d) = -p0,   psi(0) = 0,
//! ```
//!
//! solved here by shooting: adaptive 5(4) stepping in y and bisection on the
//! initial slope. The transverse mode `gamma(y, tau)` solves the linearized
//! Sturm–Liouville problem and its surface condition defines the bifurcation
//! wavenumber.

use super::{FlowParameters, FluidProfiles};
use crate::interp::CubicSpline;
use crate::{ode, rootfind, Error, Result};

const FINE_N: usize = 2048;

/// 1-D background solution on `[-d, 0]` with cubic-evaluable profiles.
#[derive(Debug, Clone)]
pub struct LaminarProfile {
    pub params: FlowParameters,
    psi: CubicSpline,
    psi_y: CubicSpline,
    /// Max interior residual of psi'' + omega(y, psi) on the fine grid.
    pub residual: f64,
    /// True when psi_y < 0 on the whole depth (unidirectional flow).
    pub monotone: bool,
}

impl LaminarProfile {
    pub fn psi(&self, y: f64) -> f64 {
        self.psi.eval(y)
    }

    pub fn psi_y(&self, y: f64) -> f64 {
        self.psi_y.eval(y)
    }

    pub fn psi_yy(&self, y: f64) -> f64 {
        self.psi_y.eval_deriv(y)
    }

    /// Bernoulli constant R = psi'(0)^2 / 2 + g rho(0) d, from the surface
    /// Bernoulli relation of the flat flow.
    pub fn bernoulli_r(&self, profiles: &FluidProfiles) -> f64 {
        0.5 * self.psi_y(0.0).powi(2) + self.params.g * profiles.rho_surface() * self.params.d
    }

    /// Surface value of sigma for the laminar flow:
    /// sigma = (psi_y psi_yy + g rho(0)) / psi_y at y = 0.
    pub fn sigma_surface(&self, profiles: &FluidProfiles) -> f64 {
        let py = self.psi_y(0.0);
        (py * self.psi_yy(0.0) + self.params.g * profiles.rho_surface()) / py
    }
}

/// Solve the laminar two-point problem by shooting with bisection on the
/// initial slope.
pub fn solve_laminar(profiles: &FluidProfiles, params: &FlowParameters) -> Result<LaminarProfile> {
    let d = params.d;
    let g = params.g;
    let p0 = params.p0;

    let rhs = move |y: f64, s: [f64; 2]| -> [f64; 2] {
        [s[1], -profiles.omega(g, y, s[0])]
    };

    // terminal value psi(0) as a function of the bottom slope
    let terminal = |slope: f64| -> f64 {
        let end = ode::integrate_span(&rhs, -d, 0.0, [-p0, slope], 1e-12);
        end[0]
    };

    // bracket around the mean slope p0/d, expanding geometrically
    let s_mid = p0 / d;
    let mut half = 0.5 * s_mid.abs().max(1.0);
    let mut bracket = None;
    for _ in 0..40 {
        let (lo, hi) = (s_mid - half, s_mid + half);
        if terminal(lo) * terminal(hi) <= 0.0 {
            bracket = Some((lo, hi));
            break;
        }
        half *= 1.7;
    }
    let (lo, hi) = bracket.ok_or(Error::SolveDiverged { residual: f64::INFINITY })?;
    let slope = rootfind::bisect(terminal, lo, hi, 1e-14 * s_mid.abs().max(1.0))?;

    // final pass on the fine uniform grid
    let sol = ode::integrate_to_grid(&rhs, -d, 0.0, [-p0, slope], FINE_N, 1e-12);
    let ys: Vec<f64> = (0..=FINE_N).map(|i| -d + d * i as f64 / FINE_N as f64).collect();
    let psi_vals: Vec<f64> = sol.iter().map(|s| s[0]).collect();
    let psi_y_vals: Vec<f64> = sol.iter().map(|s| s[1]).collect();

    let end_residual = psi_vals[FINE_N].abs();
    if end_residual > 1e-9 * p0.abs().max(1.0) {
        return Err(Error::SolveDiverged { residual: end_residual });
    }

    // interior residual by centered second differences against -omega
    let h = d / FINE_N as f64;
    let mut residual = end_residual;
    for i in (1..FINE_N).step_by(16) {
        let dd = (psi_vals[i + 1] - 2.0 * psi_vals[i] + psi_vals[i - 1]) / (h * h);
        residual = residual.max((dd + profiles.omega(g, ys[i], psi_vals[i])).abs());
    }

    let monotone = psi_y_vals.iter().all(|&v| v < 0.0);
    let mut params = params.clone();
    let psi = CubicSpline::new(ys.clone(), psi_vals);
    let psi_y = CubicSpline::new(ys, psi_y_vals);
    params.r = Some(0.5 * psi_y.eval(0.0).powi(2) + g * profiles.rho_surface() * d);

    Ok(LaminarProfile { params, psi, psi_y, residual, monotone })
}

/// Transverse eigenmode `gamma(y, tau)` of the linearized problem,
/// normalized by `gamma(0) = 1`.
#[derive(Debug, Clone)]
pub struct TransverseMode {
    pub tau: f64,
    gamma: CubicSpline,
    gamma_y: CubicSpline,
    /// Surface misfit psi_y gamma'(0) - sigma gamma(0) before normalization;
    /// ~0 exactly at a bifurcation wavenumber.
    pub surface_misfit: f64,
}

impl TransverseMode {
    pub fn gamma(&self, y: f64) -> f64 {
        self.gamma.eval(y)
    }

    pub fn gamma_y(&self, y: f64) -> f64 {
        self.gamma_y.eval(y)
    }
}

fn gamma_rhs<'a>(
    laminar: &'a LaminarProfile,
    profiles: &'a FluidProfiles,
    tau: f64,
) -> impl Fn(f64, [f64; 2]) -> [f64; 2] + 'a {
    let g = laminar.params.g;
    move |y: f64, s: [f64; 2]| {
        let omega_star = profiles.omega_star(g, y, laminar.psi(y));
        [s[1], (tau * tau - omega_star) * s[0]]
    }
}

/// Surface misfit of the shot transverse mode; zero at bifurcation.
fn gamma_misfit(laminar: &LaminarProfile, profiles: &FluidProfiles, tau: f64) -> f64 {
    let d = laminar.params.d;
    let rhs = gamma_rhs(laminar, profiles, tau);
    let end = ode::integrate_span(&rhs, -d, 0.0, [0.0, 1.0], 1e-12);
    let sigma = laminar.sigma_surface(profiles);
    laminar.psi_y(0.0) * end[1] - sigma * end[0]
}

fn gamma_shoot(
    laminar: &LaminarProfile,
    profiles: &FluidProfiles,
    tau: f64,
) -> (Vec<f64>, Vec<f64>, f64) {
    let d = laminar.params.d;
    let rhs = gamma_rhs(laminar, profiles, tau);
    let sol = ode::integrate_to_grid(&rhs, -d, 0.0, [0.0, 1.0], FINE_N / 4, 1e-12);
    let gv: Vec<f64> = sol.iter().map(|s| s[0]).collect();
    let gy: Vec<f64> = sol.iter().map(|s| s[1]).collect();
    let sigma = laminar.sigma_surface(profiles);
    let misfit = laminar.psi_y(0.0) * gy[gy.len() - 1] - sigma * gv[gv.len() - 1];
    (gv, gy, misfit)
}

/// gamma(y, tau) for a caller-chosen tau (not necessarily a bifurcation
/// wavenumber), normalized so gamma(0) = 1.
pub fn transverse_mode(
    laminar: &LaminarProfile,
    profiles: &FluidProfiles,
    tau: f64,
) -> Result<TransverseMode> {
    let d = laminar.params.d;
    let (gv, gy, misfit) = gamma_shoot(laminar, profiles, tau);
    let n = gv.len() - 1;
    let g0 = gv[n];
    if g0.abs() < 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "transverse mode has gamma(0) ~ 0 at tau = {tau}; cannot normalize"
        )));
    }
    let ys: Vec<f64> = (0..=n).map(|i| -d + d * i as f64 / n as f64).collect();
    let gv: Vec<f64> = gv.iter().map(|v| v / g0).collect();
    let gy: Vec<f64> = gy.iter().map(|v| v / g0).collect();
    Ok(TransverseMode {
        tau,
        gamma: CubicSpline::new(ys.clone(), gv),
        gamma_y: CubicSpline::new(ys, gy),
        surface_misfit: misfit / g0,
    })
}

/// Smallest positive wavenumber at which the linearized surface condition
/// admits a nontrivial transverse mode. Scans `tau in (0, 60/d]` for a sign
/// change of the surface misfit, then bisects to 1e-12.
pub fn bifurcation_tau(
    laminar: &LaminarProfile,
    profiles: &FluidProfiles,
) -> Result<TransverseMode> {
    let d = laminar.params.d;
    let lo = 1e-4 / d;
    let hi = 60.0 / d;
    let misfit = |tau: f64| gamma_misfit(laminar, profiles, tau);
    let brackets = rootfind::scan_brackets(misfit, lo, hi, 1200);
    let (a, b) = *brackets.first().ok_or(Error::NoBifurcation { lo, hi })?;
    let tau = rootfind::bisect(misfit, a, b, 1e-12)?;
    transverse_mode(laminar, profiles, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::{make_profiles, ProfileDef};

    fn bench_irr(g: f64) -> (FluidProfiles, FlowParameters) {
        let profiles = make_profiles(ProfileDef::Constant { rho0: 1.0 }).unwrap();
        let params = FlowParameters::new(1.0, g, -1.0, 2.0 * std::f64::consts::PI).unwrap();
        (profiles, params)
    }

    #[test]
    fn bench_irr_linear_profile() {
        // omega == 0 forces psi(y) = -y; R = 0.5 + g d
        let (profiles, params) = bench_irr(2.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        for k in 0..=10 {
            let y = -1.0 + k as f64 * 0.1;
            assert!((lam.psi(y) + y).abs() < 1e-10, "psi({y}) = {}", lam.psi(y));
            assert!((lam.psi_y(y) + 1.0).abs() < 1e-10);
        }
        assert!((lam.params.r.unwrap() - 2.5).abs() < 1e-10);
        assert!(lam.monotone);
        assert!(lam.residual < 1e-10);

        let (profiles, params) = bench_irr(1.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        assert!((lam.params.r.unwrap() - 1.5).abs() < 1e-10);
    }

    #[test]
    fn boundary_values_exact() {
        let (profiles, params) = bench_irr(2.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        assert!((lam.psi(-1.0) - 1.0).abs() < 1e-12); // psi(-d) = -p0
        assert!(lam.psi(0.0).abs() < 1e-10);
    }

    #[test]
    fn linear_rho_constant_beta_closed_form() {
        // rho' = 0.1, beta = 0.5 make the ODE linear with closed form
        // psi(y) = g y^3 / 60 + y^2 / 4 + A y, A = -0.75 - 0.1 g / 6.
        let profiles = make_profiles(ProfileDef::LinearRhoConstantBeta {
            rho0: 1.0,
            slope: 0.1,
            beta0: 0.5,
        })
        .unwrap();
        let params = FlowParameters::new(1.0, 1.0, -1.0, 2.0 * std::f64::consts::PI).unwrap();
        let lam = solve_laminar(&profiles, &params).unwrap();
        let a = -0.75 - 0.1 / 6.0;
        let exact = |y: f64| 0.1 * y.powi(3) / 6.0 + 0.25 * y * y + a * y;
        assert!((lam.psi(-0.5) - exact(-0.5)).abs() < 1e-9, "{} vs {}", lam.psi(-0.5), exact(-0.5));
        assert!((lam.psi(-0.5) - 0.44375).abs() < 1e-9);
    }

    #[test]
    fn bifurcation_matches_transcendental_root() {
        // kappa cosh(kappa) = 2 sinh(kappa), i.e. kappa = 2 tanh(kappa)
        let (profiles, params) = bench_irr(2.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        let mode = bifurcation_tau(&lam, &profiles).unwrap();
        let oracle = rootfind::bisect(|k: f64| k - 2.0 * k.tanh(), 0.5, 3.0, 1e-13).unwrap();
        assert!((mode.tau - oracle).abs() < 1e-10, "{} vs {}", mode.tau, oracle);
        assert!((mode.tau - 1.915008).abs() < 1e-5);
        // gamma(-d) = 0 by construction, gamma(0) = 1 by normalization
        assert_eq!(mode.gamma(-1.0), 0.0);
        assert!((mode.gamma(0.0) - 1.0).abs() < 1e-12);
        // closed form gamma = sinh(kappa (y + d)) / sinh(kappa d)
        for k in 1..10 {
            let y = -1.0 + k as f64 * 0.1;
            let exact = (mode.tau * (y + 1.0)).sinh() / mode.tau.sinh();
            assert!((mode.gamma(y) - exact).abs() < 1e-8);
        }
    }

    #[test]
    fn critical_case_has_no_bifurcation() {
        // g = 1: kappa = tanh(kappa) only at 0
        let (profiles, params) = bench_irr(1.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        assert!(matches!(
            bifurcation_tau(&lam, &profiles),
            Err(Error::NoBifurcation { .. })
        ));
    }

    #[test]
    fn sigma_surface_bench() {
        let (profiles, params) = bench_irr(2.0);
        let lam = solve_laminar(&profiles, &params).unwrap();
        assert!((lam.sigma_surface(&profiles) + 2.0).abs() < 1e-9);
    }
}

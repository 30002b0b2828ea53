//! Cross-validation of the analytic solutions against numerical propagation.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use rayon::prelude::*;

use pairswap_core::closed_form::{dissipative_elements, dissipative_elements_auto, unitary_elements};
use pairswap_core::dynamics::{propagate_lindblad, Method, PropagationPlan, SpectralPropagator};
use pairswap_core::model::{build_hamiltonian, initial_state};
use pairswap_core::tensor::partial_trace_to_ab;
use pairswap_core::{DissipativeBranch, SystemConfig, XStateAB};

use crate::error::{Error, Result};
use crate::spec::{Mode, SweepSpec};
use crate::sweep::time_grid;

pub const THETAS: [f64; 6] = [0.0, PI / 8.0, PI / 6.0, FRAC_PI_4, PI / 3.0, PI / 2.0];
/// `g_aA / g_bB` on the closed-system grid.
pub const UNITARY_RATIOS: [f64; 6] = [1.0, 2.0, 3.0, 7.0, 53.0, SQRT_2];
/// `g_bB / g_aA` on the lossy grid.
pub const DISSIPATIVE_RATIOS: [f64; 4] = [1.0, 2.0, 3.0, SQRT_2];
pub const DISSIPATIVE_THETAS: [f64; 3] = [PI / 8.0, FRAC_PI_4, PI / 3.0];
/// Loss rate of the lossy grid, relative to `g_aA`.
pub const KAPPA_OVER_G: f64 = 0.1;

pub const UNITARY_TOL: f64 = 1e-8;
pub const DISSIPATIVE_TOL: f64 = 1e-6;
pub const REDUCTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    pub name: &'static str,
    /// Compared states (configurations × times).
    pub points: usize,
    /// Largest element-wise deviation over the grid.
    pub max_error: f64,
    pub tolerance: f64,
}

impl GridResult {
    pub fn passed(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub grids: Vec<GridResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.grids.iter().all(GridResult::passed)
    }
}

fn fold_max(errors: Vec<f64>) -> f64 {
    errors.into_iter().fold(0.0, f64::max)
}

/// Spectral propagation plus partial trace against the unitary elements.
pub fn unitary_grid(base: &SystemConfig, times: &[f64]) -> Result<GridResult> {
    let configs: Vec<_> = THETAS
        .iter()
        .flat_map(|&theta| {
            UNITARY_RATIOS.iter().map(move |&n| SystemConfig {
                theta,
                g_aa: n * base.g_aa,
                g_bb: base.g_aa,
                kappa_a: 0.0,
                kappa_b: 0.0,
                omega: base.omega,
            })
        })
        .collect();
    let errors = configs
        .par_iter()
        .map(|cfg| {
            let prop = SpectralPropagator::new(&build_hamiltonian(cfg)?)?;
            let psi0 = initial_state(cfg)?;
            let mut worst = 0.0_f64;
            for &t in times {
                let rho = partial_trace_to_ab(&prop.evolve(&psi0, t).projector())?;
                worst = worst.max(XStateAB::from_matrix(&rho)?.max_abs_diff(&unitary_elements(cfg, t)?));
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GridResult {
        name: "unitary",
        points: configs.len() * times.len(),
        max_error: fold_max(errors),
        tolerance: UNITARY_TOL,
    })
}

/// Runge–Kutta master-equation integration against the dissipative elements.
pub fn dissipative_grid(base: &SystemConfig, t_final: f64, samples: usize) -> Result<GridResult> {
    let kappa = KAPPA_OVER_G * base.g_aa;
    let configs: Vec<_> = DISSIPATIVE_THETAS
        .iter()
        .flat_map(|&theta| {
            DISSIPATIVE_RATIOS.iter().map(move |&n| SystemConfig {
                theta,
                g_aa: base.g_aa,
                g_bb: n * base.g_aa,
                kappa_a: kappa,
                kappa_b: kappa,
                omega: base.omega,
            })
        })
        .collect();
    let errors = configs
        .par_iter()
        .map(|cfg| {
            let plan = PropagationPlan::for_config(cfg, t_final, samples, Method::RungeKutta4)?;
            let mut worst = 0.0_f64;
            for s in propagate_lindblad(cfg, &plan)? {
                let x = XStateAB::from_matrix(&s.rho.reduced_ab())?;
                worst = worst.max(x.max_abs_diff(&dissipative_elements_auto(cfg, s.t)?));
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GridResult {
        name: "dissipative",
        points: configs.len() * samples,
        max_error: fold_max(errors),
        tolerance: DISSIPATIVE_TOL,
    })
}

/// Lossless dissipative elements against the unitary ones.
pub fn reduction_grid(base: &SystemConfig, times: &[f64]) -> Result<GridResult> {
    let mut worst = 0.0_f64;
    let mut points = 0;
    for theta in THETAS {
        for n in UNITARY_RATIOS {
            let cfg = SystemConfig { theta, g_aa: n * base.g_aa, g_bb: base.g_aa, kappa_a: 0.0, kappa_b: 0.0, ..*base };
            let equal_weights = (theta - FRAC_PI_4).abs() <= 1e-12;
            for &t in times {
                let u = unitary_elements(&cfg, t)?;
                worst = worst.max(dissipative_elements(&cfg, t, DissipativeBranch::GeneralTheta)?.max_abs_diff(&u));
                if equal_weights {
                    let x = dissipative_elements(&cfg, t, DissipativeBranch::MaximallyEntangled)?;
                    worst = worst.max(x.max_abs_diff(&u));
                }
                points += 1;
            }
        }
    }
    Ok(GridResult { name: "reduction", points, max_error: worst, tolerance: REDUCTION_TOL })
}

/// All three grids on `samples` times over `[0, t_final]`, scaled by the
/// sweep's `g_aA` and `ω`. Its θ, `g_bB` and κ are not used.
pub fn run_verify(spec: &SweepSpec) -> Result<VerifyReport> {
    if spec.mode != Mode::Verify {
        return Err(Error::InvalidSpec(format!("{} sweep given to the verify runner", spec.mode)));
    }
    spec.validate()?;
    if spec.config.g_aa <= 0.0 {
        return Err(Error::InvalidSpec("verify needs g_aA > 0".into()));
    }
    let times = time_grid(spec.t_final, spec.samples);
    Ok(VerifyReport {
        grids: vec![
            unitary_grid(&spec.config, &times)?,
            dissipative_grid(&spec.config, spec.t_final, spec.samples)?,
            reduction_grid(&spec.config, &times)?,
        ],
    })
}

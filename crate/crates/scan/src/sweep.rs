//! Time series and negativity/energy phase diagrams.

use rayon::prelude::*;

use pairswap_core::closed_form::{frontier_state, receiver_elements};
use pairswap_core::dynamics::{propagate_lindblad, Method, PropagationPlan, SpectralPropagator};
use pairswap_core::model::{build_hamiltonian, initial_state};
use pairswap_core::tensor::partial_trace_to_ab;

use crate::error::{Error, Result};
use crate::record::TrajectoryRecord;
use crate::spec::{Engine, Mode, SweepSpec};

/// `samples` equally spaced points on `[0, t_final]`.
pub fn time_grid(t_final: f64, samples: usize) -> Vec<f64> {
    let last = (samples - 1) as f64;
    (0..samples).map(|k| t_final * k as f64 / last).collect()
}

fn require_mode(spec: &SweepSpec, modes: &[Mode]) -> Result<()> {
    if !modes.contains(&spec.mode) {
        return Err(Error::InvalidSpec(format!("{} sweep given to a {} runner", spec.mode, modes[0])));
    }
    spec.validate()
}

fn trajectory(spec: &SweepSpec) -> Result<Vec<TrajectoryRecord>> {
    let cfg = &spec.config;
    let omega = cfg.omega;
    match spec.engine {
        Engine::ClosedForm => time_grid(spec.t_final, spec.samples)
            .into_par_iter()
            .map(|t| TrajectoryRecord::from_xstate(t, &receiver_elements(cfg, t)?, omega))
            .collect(),
        Engine::Exact => {
            let prop = SpectralPropagator::new(&build_hamiltonian(cfg)?)?;
            let psi0 = initial_state(cfg)?;
            time_grid(spec.t_final, spec.samples)
                .into_par_iter()
                .map(|t| {
                    let rho_ab = partial_trace_to_ab(&prop.evolve(&psi0, t).projector())?;
                    TrajectoryRecord::from_reduced(t, &rho_ab, omega)
                })
                .collect()
        }
        Engine::RungeKutta4 => {
            let plan = PropagationPlan::for_config(cfg, spec.t_final, spec.samples, Method::RungeKutta4)?;
            propagate_lindblad(cfg, &plan)?
                .iter()
                .map(|s| {
                    let mut r = TrajectoryRecord::from_reduced(s.t, &s.rho.reduced_ab(), omega)?;
                    // report the integrator's own diagnostics for the full state
                    r.trace_err = s.diagnostics.trace_err;
                    r.min_eig = s.diagnostics.min_eig;
                    Ok(r)
                })
                .collect()
        }
    }
}

/// `samples` records on `[0, t_final]`, ordered by time.
pub fn run_time_series(spec: &SweepSpec) -> Result<Vec<TrajectoryRecord>> {
    require_mode(spec, &[Mode::TimeSeries])?;
    trajectory(spec)
}

/// The trajectory followed by `samples` frontier rows with `U` evenly spaced on `[−1, 0]`.
pub fn run_phase_diagram(spec: &SweepSpec) -> Result<Vec<TrajectoryRecord>> {
    require_mode(spec, &[Mode::PhaseDiagram])?;
    let mut records = trajectory(spec)?;
    let last = (spec.samples - 1) as f64;
    for k in 0..spec.samples {
        let u = -1.0 + k as f64 / last;
        let mut r = TrajectoryRecord::from_xstate(f64::NAN, &frontier_state(u)?, 1.0)?;
        r.frontier = true;
        records.push(r);
    }
    Ok(records)
}

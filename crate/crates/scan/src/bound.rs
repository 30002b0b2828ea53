//! Randomized check of the negativity/energy bound.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;

use pairswap_core::closed_form::{bound_residual, receiver_elements};
use pairswap_core::measures::observables;
use pairswap_core::SystemConfig;

use crate::error::{Error, Result};
use crate::record::RESIDUAL_TOL;
use crate::rng::UniformSource;
use crate::spec::{Mode, SweepSpec};

/// Coupling ratios `g_bB / g_aA` are drawn log-uniformly from `[1/RATIO_SPAN, RATIO_SPAN]`.
pub const RATIO_SPAN: f64 = 64.0;
/// Loss rates are drawn uniformly from `[0, MAX_KAPPA_OVER_G · g_aA]`.
pub const MAX_KAPPA_OVER_G: f64 = 2.0;

/// One randomized point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleTuple {
    pub theta: f64,
    /// `g_bB / g_aA`.
    pub ratio: f64,
    /// `κ_A = κ_B`.
    pub kappa: f64,
    pub t: f64,
}

impl fmt::Display for SampleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta = {}, ratio = {}, kappa = {}, t = {}", self.theta, self.ratio, self.kappa, self.t)
    }
}

impl SampleTuple {
    pub fn config(&self, base: &SystemConfig) -> SystemConfig {
        SystemConfig {
            theta: self.theta,
            g_bb: self.ratio * base.g_aa,
            kappa_a: self.kappa,
            kappa_b: self.kappa,
            ..*base
        }
    }

    /// Bound residual of the analytic receiver state, measured through the eigensolver.
    pub fn residual(&self, base: &SystemConfig) -> Result<f64> {
        let cfg = self.config(base);
        let o = observables(&receiver_elements(&cfg, self.t)?.to_matrix(), cfg.omega)?;
        Ok(bound_residual(o.negativity, o.energy))
    }
}

/// Draws the sweep's tuples. Per sample, in order: θ ∈ [0, π), log-ratio, then
/// κ/g ∈ [0, 2] only when the base config is lossy, then t ∈ [0, t_final].
pub fn draw_samples(spec: &SweepSpec) -> Vec<SampleTuple> {
    let mut rng = UniformSource::new(spec.seed);
    let lossy = !spec.config.is_closed();
    let ln_span = RATIO_SPAN.ln();
    (0..spec.samples)
        .map(|_| {
            let theta = rng.range(0.0, PI);
            let ratio = rng.range(-ln_span, ln_span).exp();
            let kappa = if lossy { rng.range(0.0, MAX_KAPPA_OVER_G) * spec.config.g_aa } else { 0.0 };
            let t = rng.range(0.0, spec.t_final);
            SampleTuple { theta, ratio, kappa, t }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub samples: usize,
    /// Samples with residual below `−RESIDUAL_TOL`.
    pub violations: usize,
    pub min_residual: f64,
    /// First tuple attaining the minimum.
    pub worst: SampleTuple,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn check(&self) -> Result<()> {
        if self.passed() {
            return Ok(());
        }
        Err(Error::BoundViolation {
            count: self.violations,
            residual: self.min_residual,
            tuple: self.worst.to_string(),
        })
    }
}

pub fn run_bound_check(spec: &SweepSpec) -> Result<BoundReport> {
    if spec.mode != Mode::BoundCheck {
        return Err(Error::InvalidSpec(format!("{} sweep given to the boundcheck runner", spec.mode)));
    }
    spec.validate()?;
    let tuples = draw_samples(spec);
    let residuals: Vec<f64> = tuples.par_iter().map(|s| s.residual(&spec.config)).collect::<Result<_>>()?;
    let mut worst = 0;
    for (i, r) in residuals.iter().enumerate() {
        if *r < residuals[worst] {
            worst = i;
        }
    }
    Ok(BoundReport {
        samples: tuples.len(),
        violations: residuals.iter().filter(|&&r| r < -RESIDUAL_TOL).count(),
        min_residual: residuals[worst],
        worst: tuples[worst],
    })
}

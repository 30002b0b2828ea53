//! Sweep descriptions and their key=value configuration files.

use std::fmt;
use std::str::FromStr;

use pairswap_core::SystemConfig;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    TimeSeries,
    PhaseDiagram,
    BoundCheck,
    Verify,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::TimeSeries => "timeseries",
            Mode::PhaseDiagram => "phasediagram",
            Mode::BoundCheck => "boundcheck",
            Mode::Verify => "verify",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How receiver states are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Analytic solution (unitary or dissipative as κ dictates).
    #[default]
    ClosedForm,
    /// Spectral propagation of the pure state; closed systems only.
    Exact,
    /// Runge–Kutta integration of the master equation.
    RungeKutta4,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed",
            Engine::Exact => "exact",
            Engine::RungeKutta4 => "rk4",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "closed" => Ok(Engine::ClosedForm),
            "exact" => Ok(Engine::Exact),
            "rk4" => Ok(Engine::RungeKutta4),
            other => Err(format!("unknown engine `{other}` (expected closed, exact or rk4)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub mode: Mode,
    pub config: SystemConfig,
    pub t_final: f64,
    pub samples: usize,
    pub engine: Engine,
    pub seed: u64,
}

pub const DEFAULT_T_FINAL: f64 = 2.0 * std::f64::consts::PI;
pub const DEFAULT_SAMPLES: usize = 201;
pub const DEFAULT_SEED: u64 = 42;

impl SweepSpec {
    pub fn new(mode: Mode, config: SystemConfig) -> Self {
        Self {
            mode,
            config,
            t_final: DEFAULT_T_FINAL,
            samples: DEFAULT_SAMPLES,
            engine: Engine::ClosedForm,
            seed: DEFAULT_SEED,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        if self.samples < 2 {
            return Err(Error::InvalidSpec(format!("samples must be at least 2, got {}", self.samples)));
        }
        if !(self.t_final > 0.0 && self.t_final.is_finite()) {
            return Err(Error::InvalidSpec(format!("t_final must be positive, got {}", self.t_final)));
        }
        let trajectory = matches!(self.mode, Mode::TimeSeries | Mode::PhaseDiagram);
        if trajectory && self.engine == Engine::Exact && !self.config.is_closed() {
            return Err(Error::EngineMismatch {
                engine: self.engine,
                reason: "spectral propagation is unitary; use rk4 or closed when kappa > 0".into(),
            });
        }
        Ok(())
    }

    /// `(key, value)` pairs describing every parameter, in a fixed order.
    pub fn parameters(&self) -> Vec<(&'static str, String)> {
        let c = &self.config;
        vec![
            ("mode", self.mode.to_string()),
            ("theta", c.theta.to_string()),
            ("g-aa", c.g_aa.to_string()),
            ("g-bb", c.g_bb.to_string()),
            ("kappa-a", c.kappa_a.to_string()),
            ("kappa-b", c.kappa_b.to_string()),
            ("omega", c.omega.to_string()),
            ("t-final", self.t_final.to_string()),
            ("samples", self.samples.to_string()),
            ("engine", self.engine.to_string()),
            ("seed", self.seed.to_string()),
        ]
    }
}

/// Partially specified parameters, as read from a file or the command line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SpecOverrides {
    pub theta: Option<f64>,
    pub g_aa: Option<f64>,
    pub g_bb: Option<f64>,
    pub kappa_a: Option<f64>,
    pub kappa_b: Option<f64>,
    pub omega: Option<f64>,
    pub t_final: Option<f64>,
    pub samples: Option<usize>,
    pub engine: Option<Engine>,
    pub seed: Option<u64>,
}

impl SpecOverrides {
    /// Parses `key = value` lines. Blank lines and `#` comments are skipped;
    /// keys match the long command-line flags, with `_` accepted for `-`.
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut out = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::ConfigFile { line: i + 1, message };
            let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got `{line}`")))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            let float = || value.parse::<f64>().map_err(|e| err(format!("{key}: {e}")));
            match key.as_str() {
                "theta" => out.theta = Some(float()?),
                "g-aa" => out.g_aa = Some(float()?),
                "g-bb" => out.g_bb = Some(float()?),
                "kappa-a" => out.kappa_a = Some(float()?),
                "kappa-b" => out.kappa_b = Some(float()?),
                "omega" => out.omega = Some(float()?),
                "t-final" => out.t_final = Some(float()?),
                "samples" => out.samples = Some(value.parse().map_err(|e| err(format!("samples: {e}")))?),
                "engine" => out.engine = Some(value.parse().map_err(err)?),
                "seed" => out.seed = Some(value.parse().map_err(|e| err(format!("seed: {e}")))?),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(out)
    }

    /// Fields set in `over` win.
    pub fn merged_with(self, over: Self) -> Self {
        Self {
            theta: over.theta.or(self.theta),
            g_aa: over.g_aa.or(self.g_aa),
            g_bb: over.g_bb.or(self.g_bb),
            kappa_a: over.kappa_a.or(self.kappa_a),
            kappa_b: over.kappa_b.or(self.kappa_b),
            omega: over.omega.or(self.omega),
            t_final: over.t_final.or(self.t_final),
            samples: over.samples.or(self.samples),
            engine: over.engine.or(self.engine),
            seed: over.seed.or(self.seed),
        }
    }

    /// Fills unset fields with defaults and validates the result.
    pub fn build(&self, mode: Mode) -> Result<SweepSpec> {
        let d = SystemConfig::default();
        let config = SystemConfig {
            theta: self.theta.unwrap_or(d.theta),
            g_aa: self.g_aa.unwrap_or(d.g_aa),
            g_bb: self.g_bb.unwrap_or(d.g_bb),
            kappa_a: self.kappa_a.unwrap_or(d.kappa_a),
            kappa_b: self.kappa_b.unwrap_or(d.kappa_b),
            omega: self.omega.unwrap_or(d.omega),
        };
        let spec = SweepSpec {
            t_final: self.t_final.unwrap_or(DEFAULT_T_FINAL),
            samples: self.samples.unwrap_or(DEFAULT_SAMPLES),
            engine: self.engine.unwrap_or_default(),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
            ..SweepSpec::new(mode, config)
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_parses_and_flags_override() {
        let file = SpecOverrides::parse_config(
            "# lossy run\ntheta = 0.5\ng_aa=2\nkappa-a = 0.2\nengine = rk4\n\nsamples = 11\n",
        )
        .unwrap();
        assert_eq!(file.g_aa, Some(2.0));
        assert_eq!(file.engine, Some(Engine::RungeKutta4));
        let flags = SpecOverrides { g_aa: Some(3.0), ..Default::default() };
        let spec = file.merged_with(flags).build(Mode::TimeSeries).unwrap();
        assert_eq!(spec.config.g_aa, 3.0);
        assert_eq!(spec.config.theta, 0.5);
        assert_eq!(spec.config.kappa_a, 0.2);
        assert_eq!(spec.samples, 11);
        assert_eq!(spec.seed, DEFAULT_SEED);
    }

    #[test]
    fn config_file_errors_name_the_line() {
        let e = SpecOverrides::parse_config("theta = 1\nbogus = 2\n").unwrap_err();
        assert!(matches!(e, Error::ConfigFile { line: 2, .. }), "{e}");
        assert!(SpecOverrides::parse_config("theta 1").is_err());
        assert!(SpecOverrides::parse_config("engine = euler").is_err());
    }

    #[test]
    fn exact_engine_rejects_loss() {
        let o = SpecOverrides { kappa_a: Some(0.1), engine: Some(Engine::Exact), ..Default::default() };
        let e = o.build(Mode::TimeSeries).unwrap_err();
        assert!(matches!(e, Error::EngineMismatch { .. }));
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn rejects_degenerate_sweeps() {
        let few = SpecOverrides { samples: Some(1), ..Default::default() };
        assert!(few.build(Mode::TimeSeries).is_err());
        let empty = SpecOverrides { t_final: Some(0.0), ..Default::default() };
        assert!(empty.build(Mode::TimeSeries).is_err());
    }
}

//! Parameter sweeps over the two-pair exchange model, written as CSV.
//!
//! Four sweep modes share one [`SweepSpec`]:
//!
//! * time series of negativity, energy and receiver-state elements;
//! * phase diagrams: the same trajectory plus frontier-curve overlay rows;
//! * randomized checks of the negativity/energy bound;
//! * cross-validation of analytic and numerical solutions.
//!
//! Output is deterministic: parallel work is collected in input order and
//! randomized sweeps replay from their seed (see [`rng`]).

pub mod bound;
pub mod error;
pub mod record;
pub mod report;
pub mod rng;
pub mod spec;
pub mod sweep;
pub mod verify;

pub use bound::{run_bound_check, BoundReport, SampleTuple};
pub use error::{Error, Result};
pub use record::{parse_records, write_records, TrajectoryFile, TrajectoryRecord};
pub use spec::{Engine, Mode, SpecOverrides, SweepSpec};
pub use sweep::{run_phase_diagram, run_time_series};
pub use verify::{run_verify, VerifyReport};

/// Runs `spec` and renders its CSV output.
///
/// Returns the bytes and whether the run passed its checks (always true for
/// trajectory modes, whose failures are errors).
pub fn render(spec: &SweepSpec) -> Result<(Vec<u8>, bool)> {
    let mut buf = Vec::new();
    let passed = match spec.mode {
        Mode::TimeSeries => {
            write_records(&mut buf, spec, &run_time_series(spec)?)?;
            true
        }
        Mode::PhaseDiagram => {
            write_records(&mut buf, spec, &run_phase_diagram(spec)?)?;
            true
        }
        Mode::BoundCheck => {
            let r = run_bound_check(spec)?;
            report::write_bound_report(&mut buf, spec, &r)?;
            r.passed()
        }
        Mode::Verify => {
            let r = run_verify(spec)?;
            report::write_verify_report(&mut buf, spec, &r)?;
            r.passed()
        }
    };
    Ok((buf, passed))
}

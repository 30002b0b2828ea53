//! CSV summaries for bound checks and verification runs.

use std::io::Write;

use crate::bound::BoundReport;
use crate::error::Result;
use crate::record::write_header;
use crate::spec::SweepSpec;
use crate::verify::VerifyReport;

pub const BOUND_COLUMNS: &str = "samples,violations,min_residual,theta,ratio,kappa,t";
pub const VERIFY_COLUMNS: &str = "grid,points,max_error,tolerance,pass";

pub fn write_bound_report(w: &mut impl Write, spec: &SweepSpec, r: &BoundReport) -> Result<()> {
    write_header(w, spec)?;
    writeln!(w, "{BOUND_COLUMNS}")?;
    let s = &r.worst;
    writeln!(
        w,
        "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
        r.samples, r.violations, r.min_residual, s.theta, s.ratio, s.kappa, s.t
    )?;
    Ok(())
}

pub fn write_verify_report(w: &mut impl Write, spec: &SweepSpec, r: &VerifyReport) -> Result<()> {
    write_header(w, spec)?;
    writeln!(w, "{VERIFY_COLUMNS}")?;
    for g in &r.grids {
        writeln!(w, "{},{},{:.16e},{:.16e},{}", g.name, g.points, g.max_error, g.tolerance, u8::from(g.passed()))?;
    }
    Ok(())
}

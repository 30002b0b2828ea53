//! Trajectory records and their CSV form.
//!
//! A file starts with `# key = value` lines naming the tool version and every
//! sweep parameter, then one column-name row, then data rows. Floats are
//! written with 17 significant digits so parsing recovers them exactly.

use std::collections::BTreeMap;
use std::io::Write;

use pairswap_core::closed_form::bound_residual;
use pairswap_core::measures::{energy, negativity, validate_density};
use pairswap_core::tensor::ComplexMatrix;
use pairswap_core::XStateAB;

use crate::error::{Error, Result};
use crate::spec::SweepSpec;

pub const TOOL: &str = concat!("pairswap ", env!("CARGO_PKG_VERSION"));

pub const COLUMNS: [&str; 12] =
    ["t", "N", "U", "a", "b", "c", "d_re", "d_im", "residual", "trace_err", "min_eig", "frontier"];

/// Emitted records must satisfy `residual ≥ −RESIDUAL_TOL`.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// One row: observables, X-state elements and diagnostics of the receiver state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRecord {
    /// Time; NaN on frontier rows.
    pub t: f64,
    pub n: f64,
    pub u: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d_re: f64,
    pub d_im: f64,
    /// `(1+U)² − (N² − 2NU)`.
    pub residual: f64,
    /// `|Tr ρ_AB − 1|`.
    pub trace_err: f64,
    /// Smallest eigenvalue of `ρ_AB`.
    pub min_eig: f64,
    /// Row belongs to the overlay of the frontier curve rather than a trajectory.
    pub frontier: bool,
}

impl TrajectoryRecord {
    /// Measures a receiver density matrix. Negativity comes from the
    /// eigenvalues of the partial transpose, not from the X-state formula.
    pub fn from_reduced(t: f64, rho_ab: &ComplexMatrix, omega: f64) -> Result<Self> {
        let min_eig = validate_density(rho_ab)?;
        let n = negativity(rho_ab)?;
        let u = energy(rho_ab, omega)?;
        let x = XStateAB::from_matrix(rho_ab)?;
        let residual = bound_residual(n, u);
        if residual < -RESIDUAL_TOL {
            return Err(pairswap_core::Error::InvariantViolation(format!(
                "bound residual {residual:e} at t = {t} (N = {n}, U = {u})"
            ))
            .into());
        }
        Ok(Self {
            t,
            n,
            u,
            a: x.a,
            b: x.b,
            c: x.c,
            d_re: x.d.re,
            d_im: x.d.im,
            residual,
            trace_err: (rho_ab.trace() - 1.0).norm(),
            min_eig,
            frontier: false,
        })
    }

    pub fn from_xstate(t: f64, x: &XStateAB, omega: f64) -> Result<Self> {
        Self::from_reduced(t, &x.to_matrix(), omega)
    }

    pub fn xstate(&self) -> XStateAB {
        XStateAB::new(self.a, self.b, self.c, pairswap_core::Complex64::new(self.d_re, self.d_im))
    }

    fn floats(&self) -> [f64; 11] {
        [
            self.t,
            self.n,
            self.u,
            self.a,
            self.b,
            self.c,
            self.d_re,
            self.d_im,
            self.residual,
            self.trace_err,
            self.min_eig,
        ]
    }
}

/// Writes the `#` header block: tool version and every parameter of `spec`.
pub fn write_header(w: &mut impl Write, spec: &SweepSpec) -> Result<()> {
    writeln!(w, "# tool = {TOOL}")?;
    for (k, v) in spec.parameters() {
        writeln!(w, "# {k} = {v}")?;
    }
    Ok(())
}

pub fn write_records(w: &mut impl Write, spec: &SweepSpec, records: &[TrajectoryRecord]) -> Result<()> {
    write_header(w, spec)?;
    writeln!(w, "{}", COLUMNS.join(","))?;
    for r in records {
        for v in r.floats() {
            write!(w, "{v:.16e},")?;
        }
        writeln!(w, "{}", u8::from(r.frontier))?;
    }
    Ok(())
}

/// Header entries and records of a trajectory file.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryFile {
    pub header: BTreeMap<String, String>,
    pub records: Vec<TrajectoryRecord>,
}

pub fn parse_records(text: &str) -> Result<TrajectoryFile> {
    let mut header = BTreeMap::new();
    let mut records = Vec::new();
    let mut seen_columns = false;
    for (i, line) in text.lines().enumerate() {
        let err = |message: String| Error::Csv { line: i + 1, message };
        if let Some(entry) = line.strip_prefix('#') {
            if seen_columns {
                return Err(err("header line after the column row".into()));
            }
            let (k, v) = entry.split_once('=').ok_or_else(|| err(format!("bad header entry `{line}`")))?;
            header.insert(k.trim().to_string(), v.trim().to_string());
            continue;
        }
        if !seen_columns {
            if line != COLUMNS.join(",") {
                return Err(err(format!("unexpected column row `{line}`")));
            }
            seen_columns = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != COLUMNS.len() {
            return Err(err(format!("expected {} fields, found {}", COLUMNS.len(), fields.len())));
        }
        let mut v = [0.0; 11];
        for (slot, field) in v.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|e| err(format!("`{field}`: {e}")))?;
        }
        let frontier = match fields[11] {
            "0" => false,
            "1" => true,
            other => return Err(err(format!("frontier flag must be 0 or 1, got `{other}`"))),
        };
        records.push(TrajectoryRecord {
            t: v[0],
            n: v[1],
            u: v[2],
            a: v[3],
            b: v[4],
            c: v[5],
            d_re: v[6],
            d_im: v[7],
            residual: v[8],
            trace_err: v[9],
            min_eig: v[10],
            frontier,
        });
    }
    if !seen_columns {
        return Err(Error::Csv { line: text.lines().count(), message: "missing column row".into() });
    }
    Ok(TrajectoryFile { header, records })
}

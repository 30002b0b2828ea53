//! Entanglement and energy of the two-qubit receiver state.

use crate::closed_form::XStateAB;
use crate::error::{Error, Result};
use crate::tensor::{hermitian_eigenvalues, partial_transpose_a, ComplexMatrix, PAIR_DIM};

/// Hermiticity tolerance for input states.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Unit-trace tolerance for input states.
pub const TRACE_TOL: f64 = 1e-8;
/// Most negative eigenvalue accepted before a state is rejected (not clipped).
pub const PSD_TOL: f64 = 1e-8;

/// Negativity and energy (in units of ħω) of a receiver state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservablePair {
    pub negativity: f64,
    pub energy: f64,
}

/// Checks Hermiticity, unit trace and positivity; returns the smallest eigenvalue.
pub fn validate_density(rho: &ComplexMatrix) -> Result<f64> {
    let deviation = rho.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::InvalidState(format!("not Hermitian (deviation {deviation:e})")));
    }
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("trace {trace} differs from 1")));
    }
    let min_eig = hermitian_eigenvalues(rho)?[0];
    if min_eig < -PSD_TOL {
        return Err(Error::InvalidState(format!("negative eigenvalue {min_eig:e}")));
    }
    Ok(min_eig)
}

fn require_pair(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != PAIR_DIM {
        return Err(Error::DimensionMismatch { expected: PAIR_DIM, found: rho.dim() });
    }
    Ok(())
}

/// Twice the summed magnitude of the negative eigenvalues of `ρ^{T_A}`.
///
/// A two-qubit partial transpose has at most one negative eigenvalue, so this
/// equals `2 max(0, −λ_min)`.
pub fn negativity(rho_ab: &ComplexMatrix) -> Result<f64> {
    require_pair(rho_ab)?;
    validate_density(rho_ab)?;
    negativity_of_transpose(&partial_transpose_a(rho_ab)?)
}

pub(crate) fn negativity_of_transpose(pt: &ComplexMatrix) -> Result<f64> {
    let eigenvalues = hermitian_eigenvalues(pt)?;
    debug_assert!(
        eigenvalues.iter().filter(|&&l| l < -PSD_TOL).count() <= 1,
        "two-qubit partial transpose with more than one negative eigenvalue: {eigenvalues:?}"
    );
    Ok(2.0 * eigenvalues.iter().filter(|&&l| l < 0.0).fold(0.0, |acc, l| acc - l))
}

/// `Tr(ρ H_AB) / ω`, with `H_AB = (ω/2)(σ_z^A + σ_z^B)`.
pub fn energy(rho_ab: &ComplexMatrix, omega: f64) -> Result<f64> {
    require_pair(rho_ab)?;
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidConfig(format!("omega must be positive, got {omega}")));
    }
    validate_density(rho_ab)?;
    let diag = [-omega, 0.0, 0.0, omega];
    let tr: f64 = diag.iter().enumerate().map(|(i, h)| rho_ab[(i, i)].re * h).sum();
    Ok(tr / omega)
}

/// Negativity and energy of a receiver state, each via the general path.
pub fn observables(rho_ab: &ComplexMatrix, omega: f64) -> Result<ObservablePair> {
    Ok(ObservablePair { negativity: negativity(rho_ab)?, energy: energy(rho_ab, omega)? })
}

/// Closed-form observables of an X-state: `U = −a`, `N = √(a² + 4|d|²) − a`.
pub fn xstate_observables(x: &XStateAB) -> ObservablePair {
    ObservablePair {
        negativity: (x.a * x.a + 4.0 * x.d.norm_sqr()).sqrt() - x.a,
        energy: -x.a,
    }
}

//! Numerical propagation: exact spectral evolution, fourth-order Runge–Kutta for
//! state vectors, and fourth-order Runge–Kutta for the Lindblad master equation.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::{self, SystemConfig};
use crate::tensor::{
    hermitian_eig, hermitian_eigenvalues, partial_trace_to_ab, ComplexMatrix, HermitianSpectrum,
    PureState, FULL_DIM, I, ZERO,
};

/// Upper bound on `dt * (||H||_max + Σκ)`.
pub const STEP_GUARD: f64 = 0.1;
/// Default step is this fraction of `1 / max(ω, g_aA, g_bB, κ_A, κ_B)`.
pub const DEFAULT_STEP_FRACTION: f64 = 0.005;
/// Trace drift beyond which an integration is rejected.
pub const TRACE_DRIFT_LIMIT: f64 = 1e-6;
/// Hermiticity tolerance on recorded density matrices.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Most negative eigenvalue tolerated on recorded density matrices.
pub const MIN_EIGENVALUE_TOL: f64 = -1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    SpectralExact,
    RungeKutta4,
}

/// Which basis states the master equation is integrated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StateSpace {
    /// All sixteen basis states.
    #[default]
    Full,
    /// Only `|0000>` and the four single-excitation states. Exact for the
    /// model's initial state, since the Hamiltonian conserves excitation number
    /// and photon loss only lowers it.
    LowExcitation,
}

/// Fixed-step time grid with periodic recording.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationPlan {
    pub t_final: f64,
    pub dt: f64,
    pub method: Method,
    /// Steps between recorded samples.
    pub record_stride: usize,
}

impl PropagationPlan {
    /// `samples` equally spaced records on `[0, t_final]`, with the step no larger than `max_dt`.
    pub fn uniform(t_final: f64, samples: usize, max_dt: f64, method: Method) -> Result<Self> {
        if samples < 2 {
            return Err(Error::Domain(format!("need at least 2 samples, got {samples}")));
        }
        if !(t_final > 0.0 && t_final.is_finite()) || !(max_dt > 0.0 && max_dt.is_finite()) {
            return Err(Error::Domain(format!(
                "t_final and dt must be positive and finite (got {t_final}, {max_dt})"
            )));
        }
        let spacing = t_final / (samples - 1) as f64;
        let stride = (spacing / max_dt).ceil().max(1.0) as usize;
        Ok(Self { t_final, dt: spacing / stride as f64, method, record_stride: stride })
    }

    /// Plan with the default step for `cfg`.
    pub fn for_config(cfg: &SystemConfig, t_final: f64, samples: usize, method: Method) -> Result<Self> {
        Self::uniform(t_final, samples, default_step(cfg), method)
    }

    pub fn steps(&self) -> usize {
        (self.t_final / self.dt).round() as usize
    }

    pub fn validate(&self, h_max: f64, kappa_sum: f64) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) || !(self.t_final >= 0.0 && self.t_final.is_finite()) {
            return Err(Error::Domain(format!(
                "invalid plan: dt = {}, t_final = {}",
                self.dt, self.t_final
            )));
        }
        if self.record_stride == 0 {
            return Err(Error::Domain("record_stride must be positive".into()));
        }
        let steps = self.t_final / self.dt;
        if (steps - steps.round()).abs() > 1e-9 * steps.max(1.0) {
            return Err(Error::Domain(format!(
                "t_final = {} is not a whole number of steps of {}",
                self.t_final, self.dt
            )));
        }
        let product = self.dt * (h_max + kappa_sum);
        if product > STEP_GUARD {
            return Err(Error::StepTooLarge { product, limit: STEP_GUARD });
        }
        Ok(())
    }

    /// Step indices at which samples are recorded; always includes the first and last step.
    fn is_recorded(&self, step: usize, total: usize) -> bool {
        step.is_multiple_of(self.record_stride) || step == total
    }
}

pub fn default_step(cfg: &SystemConfig) -> f64 {
    DEFAULT_STEP_FRACTION / cfg.max_rate()
}

/// Sample diagnostics for a propagated density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    /// `|Tr ρ − 1|`.
    pub trace_err: f64,
    pub hermitian_dev: f64,
    pub min_eig: f64,
}

/// Four-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix16(ComplexMatrix);

impl DensityMatrix16 {
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        if rho.dim() != FULL_DIM {
            return Err(Error::DimensionMismatch { expected: FULL_DIM, found: rho.dim() });
        }
        Ok(Self(rho))
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self(psi.projector())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn reduced_ab(&self) -> ComplexMatrix {
        partial_trace_to_ab(&self.0).expect("16x16 by construction")
    }

    pub fn diagnostics(&self) -> Result<Diagnostics> {
        let hermitian_dev = self.0.hermitian_deviation();
        let hermitian = ComplexMatrix::from_fn(FULL_DIM, |i, j| (self.0[(i, j)] + self.0[(j, i)].conj()) * 0.5);
        Ok(Diagnostics {
            trace_err: (self.0.trace() - 1.0).norm(),
            hermitian_dev,
            min_eig: hermitian_eigenvalues(&hermitian)?[0],
        })
    }
}

/// Spectral propagator `e^{−iHt}` for a fixed Hermitian `H`.
#[derive(Debug, Clone)]
pub struct SpectralPropagator {
    spectrum: HermitianSpectrum,
}

impl SpectralPropagator {
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        Ok(Self { spectrum: hermitian_eig(h)? })
    }

    pub fn spectrum(&self) -> &HermitianSpectrum {
        &self.spectrum
    }

    /// `V e^{−iλt} V† ψ0`.
    pub fn evolve(&self, psi0: &PureState, t: f64) -> PureState {
        let v = &self.spectrum.eigenvectors;
        let n = v.dim();
        let amps = psi0.amplitudes();
        let coeffs: Vec<C64> = (0..n)
            .map(|k| {
                let overlap: C64 = (0..n).map(|i| v[(i, k)].conj() * amps[i]).sum();
                overlap * C64::from_polar(1.0, -self.spectrum.eigenvalues[k] * t)
            })
            .collect();
        let out = (0..n).map(|i| (0..n).map(|k| v[(i, k)] * coeffs[k]).sum()).collect();
        PureState::from_raw(out)
    }
}

/// Exact evolution of a pure state under a time-independent Hamiltonian.
pub fn evolve_exact(h: &ComplexMatrix, psi0: &PureState, t: f64) -> Result<PureState> {
    if h.dim() != FULL_DIM {
        return Err(Error::DimensionMismatch { expected: FULL_DIM, found: h.dim() });
    }
    Ok(SpectralPropagator::new(h)?.evolve(psi0, t))
}

/// Runge–Kutta integration of `dψ/dt = −iHψ`; returns `(t, ψ)` at each recorded step.
///
/// The norm is not restored between steps, so the amplitudes are returned raw.
pub fn propagate_state_rk4(
    h: &ComplexMatrix,
    psi0: &PureState,
    plan: &PropagationPlan,
) -> Result<Vec<(f64, Vec<C64>)>> {
    plan.validate(h.max_abs(), 0.0)?;
    let mut psi = psi0.amplitudes().to_vec();
    let total = plan.steps();
    let mut out = vec![(0.0, psi.clone())];
    let rhs = |y: &[C64]| -> Vec<C64> { h.apply(y).into_iter().map(|z| -I * z).collect() };
    let dt = plan.dt;
    for step in 1..=total {
        let k1 = rhs(&psi);
        let k2 = rhs(&axpy(&psi, dt / 2.0, &k1));
        let k3 = rhs(&axpy(&psi, dt / 2.0, &k2));
        let k4 = rhs(&axpy(&psi, dt, &k3));
        for i in 0..psi.len() {
            psi[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
        }
        if plan.is_recorded(step, total) {
            out.push((step as f64 * dt, psi.clone()));
        }
    }
    Ok(out)
}

fn axpy(y: &[C64], a: f64, x: &[C64]) -> Vec<C64> {
    y.iter().zip(x).map(|(y, x)| y + x * a).collect()
}

/// Right-hand side of the Lindblad equation (ħ = 1):
/// `−i[H, ρ] + ½ Σ_i ([V_i ρ, V_i†] + [V_i, ρ V_i†])`.
pub fn lindblad_rhs(rho: &ComplexMatrix, h: &ComplexMatrix, jumps: &[ComplexMatrix]) -> ComplexMatrix {
    let mut out = h.commutator(rho).scale(-I);
    for v in jumps {
        let vd = v.adjoint();
        let v_rho = v * rho;
        let rho_vd = rho * &vd;
        let term = &v_rho.commutator(&vd) + &v.commutator(&rho_vd);
        out = &out + &term.scale(C64::new(0.5, 0.0));
    }
    out
}

#[derive(Debug, Clone)]
struct SparseOp {
    entries: Vec<(usize, usize, C64)>,
}

impl SparseOp {
    fn from_dense(m: &ComplexMatrix) -> Self {
        let n = m.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if m[(i, j)] != ZERO {
                    entries.push((i, j, m[(i, j)]));
                }
            }
        }
        Self { entries }
    }
}

/// Lindblad generator precompiled as `−i(H_eff ρ − ρ H_eff†) + Σ V ρ V†`
/// with `H_eff = H − (i/2) Σ V†V`, using sparse operator storage.
#[derive(Debug, Clone)]
pub struct Liouvillian {
    dim: usize,
    h_eff: SparseOp,
    jumps: Vec<SparseOp>,
}

impl Liouvillian {
    pub fn new(h: &ComplexMatrix, jumps: &[ComplexMatrix]) -> Result<Self> {
        let dim = h.dim();
        if let Some(v) = jumps.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
        }
        let mut h_eff = h.clone();
        for v in jumps {
            let vdv = &v.adjoint() * v;
            h_eff = &h_eff - &vdv.scale(C64::new(0.0, 0.5));
        }
        Ok(Self {
            dim,
            h_eff: SparseOp::from_dense(&h_eff),
            jumps: jumps.iter().map(SparseOp::from_dense).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Writes `dρ/dt` for the row-major `rho` into `out`.
    pub fn apply_into(&self, rho: &[C64], out: &mut [C64]) {
        let n = self.dim;
        out.iter_mut().for_each(|z| *z = ZERO);
        for &(r, c, h) in &self.h_eff.entries {
            let mi_h = -I * h;
            let i_hc = I * h.conj();
            for j in 0..n {
                // −i (H_eff ρ)[r][j]
                out[r * n + j] += mi_h * rho[c * n + j];
                // +i (ρ H_eff†)[j][r]
                out[j * n + r] += i_hc * rho[j * n + c];
            }
        }
        for v in &self.jumps {
            for &(r1, c1, v1) in &v.entries {
                for &(r2, c2, v2) in &v.entries {
                    out[r1 * n + r2] += v1 * rho[c1 * n + c2] * v2.conj();
                }
            }
        }
    }

    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = vec![ZERO; self.dim * self.dim];
        self.apply_into(rho.as_slice(), &mut out);
        ComplexMatrix::from_vec(self.dim, out).expect("finite by construction")
    }
}

/// One recorded point of a master-equation trajectory.
#[derive(Debug, Clone)]
pub struct LindbladSample {
    pub t: f64,
    pub rho: DensityMatrix16,
    pub diagnostics: Diagnostics,
}

/// Fixed-step RK4 integrator for the master equation.
#[derive(Debug, Clone)]
pub struct LindbladPropagator {
    liouvillian: Liouvillian,
    /// Basis indices kept when integrating on a subspace.
    subspace: Option<Vec<usize>>,
    h_max: f64,
    kappa_sum: f64,
}

impl LindbladPropagator {
    pub fn new(h: &ComplexMatrix, jumps: &[ComplexMatrix], space: StateSpace) -> Result<Self> {
        if h.dim() != FULL_DIM {
            return Err(Error::DimensionMismatch { expected: FULL_DIM, found: h.dim() });
        }
        let h_max = h.max_abs();
        // V = √(2κ) σ₋ ⇒ ||V†V||_max = 2κ
        let kappa_sum = jumps.iter().map(|v| (&v.adjoint() * v).max_abs() / 2.0).sum();
        let (liouvillian, subspace) = match space {
            StateSpace::Full => (Liouvillian::new(h, jumps)?, None),
            StateSpace::LowExcitation => {
                let idx = model::low_excitation_indices();
                let hs = h.submatrix(&idx);
                let vs: Vec<_> = jumps.iter().map(|v| v.submatrix(&idx)).collect();
                (Liouvillian::new(&hs, &vs)?, Some(idx))
            }
        };
        Ok(Self { liouvillian, subspace, h_max, kappa_sum })
    }

    pub fn for_config(cfg: &SystemConfig, space: StateSpace) -> Result<Self> {
        Self::new(&model::build_hamiltonian(cfg)?, &model::jump_operators(cfg)?, space)
    }

    /// Integrates from `rho0`, recording every `plan.record_stride` steps.
    ///
    /// The state is never renormalized; trace drift beyond [`TRACE_DRIFT_LIMIT`],
    /// Hermiticity loss beyond [`HERMITIAN_TOL`] or an eigenvalue below
    /// [`MIN_EIGENVALUE_TOL`] at a recorded sample is an error.
    pub fn propagate(&self, rho0: &DensityMatrix16, plan: &PropagationPlan) -> Result<Vec<LindbladSample>> {
        if plan.method != Method::RungeKutta4 {
            return Err(Error::Domain("master-equation propagation requires RungeKutta4".into()));
        }
        plan.validate(self.h_max, self.kappa_sum)?;
        let n = self.liouvillian.dim();
        let mut y = match &self.subspace {
            None => rho0.matrix().as_slice().to_vec(),
            Some(idx) => {
                let block = rho0.matrix().submatrix(idx);
                if (&ComplexMatrix::embed(&block, idx, FULL_DIM) - rho0.matrix()).max_abs() > 0.0 {
                    return Err(Error::InvalidState(
                        "initial state has weight outside the low-excitation sector".into(),
                    ));
                }
                block.into_vec()
            }
        };

        let total = plan.steps();
        let dt = plan.dt;
        let len = n * n;
        let (mut k1, mut k2, mut k3, mut k4) =
            (vec![ZERO; len], vec![ZERO; len], vec![ZERO; len], vec![ZERO; len]);
        let mut tmp = vec![ZERO; len];

        let mut out = Vec::with_capacity(total / plan.record_stride + 2);
        out.push(self.sample(0.0, &y)?);
        for step in 1..=total {
            self.liouvillian.apply_into(&y, &mut k1);
            stage(&mut tmp, &y, dt / 2.0, &k1);
            self.liouvillian.apply_into(&tmp, &mut k2);
            stage(&mut tmp, &y, dt / 2.0, &k2);
            self.liouvillian.apply_into(&tmp, &mut k3);
            stage(&mut tmp, &y, dt, &k3);
            self.liouvillian.apply_into(&tmp, &mut k4);
            let w = dt / 6.0;
            for i in 0..len {
                y[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * w;
            }
            if plan.is_recorded(step, total) {
                out.push(self.sample(step as f64 * dt, &y)?);
            }
        }
        Ok(out)
    }

    fn sample(&self, t: f64, y: &[C64]) -> Result<LindbladSample> {
        let n = self.liouvillian.dim();
        let m = ComplexMatrix::from_vec(n, y.to_vec()).map_err(|e| {
            Error::InvariantViolation(format!("integration diverged at t = {t}: {e}"))
        })?;
        let full = match &self.subspace {
            None => m,
            Some(idx) => ComplexMatrix::embed(&m, idx, FULL_DIM),
        };
        let rho = DensityMatrix16(full);
        let diagnostics = rho.diagnostics()?;
        if diagnostics.trace_err > TRACE_DRIFT_LIMIT {
            return Err(Error::InvariantViolation(format!(
                "trace drift {:e} at t = {t} (step too coarse)",
                diagnostics.trace_err
            )));
        }
        if diagnostics.hermitian_dev > HERMITIAN_TOL {
            return Err(Error::InvariantViolation(format!(
                "Hermiticity lost at t = {t} (deviation {:e})",
                diagnostics.hermitian_dev
            )));
        }
        if diagnostics.min_eig < MIN_EIGENVALUE_TOL {
            return Err(Error::InvariantViolation(format!(
                "negative eigenvalue {:e} at t = {t}",
                diagnostics.min_eig
            )));
        }
        Ok(LindbladSample { t, rho, diagnostics })
    }
}

fn stage(out: &mut [C64], y: &[C64], h: f64, k: &[C64]) {
    for ((o, y), k) in out.iter_mut().zip(y).zip(k) {
        *o = y + k * h;
    }
}

/// Master-equation trajectory of the model, starting from its initial state.
pub fn propagate_lindblad(cfg: &SystemConfig, plan: &PropagationPlan) -> Result<Vec<LindbladSample>> {
    propagate_lindblad_in(cfg, plan, StateSpace::Full)
}

pub fn propagate_lindblad_in(
    cfg: &SystemConfig,
    plan: &PropagationPlan,
    space: StateSpace,
) -> Result<Vec<LindbladSample>> {
    let rho0 = DensityMatrix16::from_pure(&model::initial_state(cfg)?);
    LindbladPropagator::for_config(cfg, space)?.propagate(&rho0, plan)
}

//! Analytic solutions of the exchange model.
//!
//! The reduced receiver state is always an X-state
//!
//! ```text
//!     | a 0 0 0 |
//!     | 0 b d 0 |
//!     | 0 d* c 0 |
//!     | 0 0 0 0 |
//! ```
//!
//! in the `{|00>, |01>, |10>, |11>}` ordering, for both the closed system and
//! zero-temperature photon loss on the receivers.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::SystemConfig;
use crate::tensor::{basis_index, ComplexMatrix, PureState, FULL_DIM, ZERO};

/// Below this value of `|Ω| t` the damped oscillation factor switches to its Taylor series.
const SINC_TAYLOR_CUTOFF: f64 = 1e-4;
const THETA_PI_4_TOL: f64 = 1e-12;

/// Parameters `(a, b, c, d)` of the reduced receiver state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateAB {
    /// `|00>` population.
    pub a: f64,
    /// `|01>` population (B excited).
    pub b: f64,
    /// `|10>` population (A excited).
    pub c: f64,
    /// `<01|ρ|10>`.
    pub d: C64,
}

impl XStateAB {
    pub const POSITIVITY_TOL: f64 = 1e-12;

    pub fn new(a: f64, b: f64, c: f64, d: C64) -> Self {
        Self { a, b, c, d }
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d: C64::new(d, 0.0) }
    }

    /// Reads `(a, b, c, d)` off a 4x4 matrix; the remaining entries are ignored.
    pub fn from_matrix(rho: &ComplexMatrix) -> Result<Self> {
        if rho.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
        }
        Ok(Self { a: rho[(0, 0)].re, b: rho[(1, 1)].re, c: rho[(2, 2)].re, d: rho[(1, 2)] })
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4);
        m[(0, 0)] = C64::new(self.a, 0.0);
        m[(1, 1)] = C64::new(self.b, 0.0);
        m[(2, 2)] = C64::new(self.c, 0.0);
        m[(1, 2)] = self.d;
        m[(2, 1)] = self.d.conj();
        m
    }

    pub fn trace(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Populations in `[0, 1]`, unit trace within `trace_tol`, and `|d|² ≤ bc`.
    pub fn is_physical(&self, trace_tol: f64) -> bool {
        let unit = |x: f64| (-Self::POSITIVITY_TOL..=1.0 + Self::POSITIVITY_TOL).contains(&x);
        unit(self.a)
            && unit(self.b)
            && unit(self.c)
            && (self.trace() - 1.0).abs() <= trace_tol
            && self.d.norm_sqr() <= self.b * self.c + Self::POSITIVITY_TOL
    }

    /// Largest element-wise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.a - other.a).abs(),
            (self.b - other.b).abs(),
            (self.c - other.c).abs(),
            (self.d - other.d).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Damped Rabi frequencies `Ω = √(4g² − κ²)`, imaginary when overdamped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiParams {
    pub omega_aa: C64,
    pub omega_bb: C64,
}

impl RabiParams {
    pub fn new(cfg: &SystemConfig) -> Self {
        Self {
            omega_aa: damped_frequency(cfg.g_aa, cfg.kappa_a),
            omega_bb: damped_frequency(cfg.g_bb, cfg.kappa_b),
        }
    }
}

fn damped_frequency(g: f64, kappa: f64) -> C64 {
    C64::new(4.0 * g * g - kappa * kappa, 0.0).sqrt()
}

/// Which form of the dissipative solution to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DissipativeBranch {
    /// Equal donor weights; only defined for `θ = π/4`.
    #[default]
    MaximallyEntangled,
    /// Donor weights `cosθ` (aA) and `sinθ` (bB); valid for any θ.
    GeneralTheta,
}

fn require_closed(cfg: &SystemConfig) -> Result<()> {
    cfg.validate()?;
    if !cfg.is_closed() {
        return Err(Error::ClosedFormDomain(format!(
            "unitary solution requires kappa_A = kappa_B = 0 (got {}, {})",
            cfg.kappa_a, cfg.kappa_b
        )));
    }
    Ok(())
}

fn require_time(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("time must be finite, got {t}")));
    }
    Ok(())
}

/// Four-qubit state of the closed system at time `t`.
pub fn global_state(cfg: &SystemConfig, t: f64) -> Result<PureState> {
    require_closed(cfg)?;
    require_time(t)?;
    let (st, ct) = cfg.theta.sin_cos();
    let (sa, ca) = (cfg.g_aa * t).sin_cos();
    let (sb, cb) = (cfg.g_bb * t).sin_cos();
    let mut amps = vec![ZERO; FULL_DIM];
    amps[basis_index(1, 0, 0, 0)] = C64::new(ct * ca, 0.0);
    amps[basis_index(0, 0, 1, 0)] = C64::new(0.0, -ct * sa);
    amps[basis_index(0, 1, 0, 0)] = C64::new(st * cb, 0.0);
    amps[basis_index(0, 0, 0, 1)] = C64::new(0.0, -st * sb);
    PureState::new(amps)
}

/// Receiver X-state of the closed system at time `t`.
pub fn unitary_elements(cfg: &SystemConfig, t: f64) -> Result<XStateAB> {
    require_closed(cfg)?;
    require_time(t)?;
    let (st, ct) = cfg.theta.sin_cos();
    let (sa, ca) = (cfg.g_aa * t).sin_cos();
    let (sb, cb) = (cfg.g_bb * t).sin_cos();
    Ok(XStateAB::real(
        ct * ct * ca * ca + st * st * cb * cb,
        st * st * sb * sb,
        ct * ct * sa * sa,
        ct * st * sa * sb,
    ))
}

/// Receiver amplitude per unit donor amplitude: `(2g/Ω) sin(Ωt/2) e^{−κt/2}`.
///
/// Evaluated as `2g [e^{(iΩ−κ)t/2} − e^{(−iΩ−κ)t/2}] / (2iΩ)`, whose exponents
/// have non-positive real part in every regime, so the overdamped branch
/// (`Ω` imaginary) turns into the matching `sinh` form without overflow.
pub fn receiver_amplitude(g: f64, kappa: f64, t: f64) -> f64 {
    let omega_sqr = 4.0 * g * g - kappa * kappa;
    let omega = C64::new(omega_sqr, 0.0).sqrt();
    let decay = (-kappa * t / 2.0).exp();
    if omega.norm() * t < SINC_TAYLOR_CUTOFF {
        return 2.0 * g * (t / 2.0 - omega_sqr * t * t * t / 48.0) * decay;
    }
    let half = C64::new(-kappa * t / 2.0, 0.0);
    let phase = C64::i() * omega * (t / 2.0);
    let sin_damped = ((half + phase).exp() - (half - phase).exp()) / (2.0 * C64::i());
    let value = 2.0 * g * sin_damped / omega;
    debug_assert!(
        value.im.abs() <= 1e-12 * value.re.abs().max(1e-300) || value.im.abs() < 1e-280,
        "receiver amplitude must be real, got {value}"
    );
    value.re
}

/// Receiver X-state under photon loss at time `t ≥ 0`.
pub fn dissipative_elements(
    cfg: &SystemConfig,
    t: f64,
    branch: DissipativeBranch,
) -> Result<XStateAB> {
    cfg.validate()?;
    require_time(t)?;
    if t < 0.0 {
        return Err(Error::Domain(format!("dissipative solution requires t >= 0, got {t}")));
    }
    let (weight_a, weight_b) = match branch {
        DissipativeBranch::MaximallyEntangled => {
            if (cfg.theta - FRAC_PI_4).abs() > THETA_PI_4_TOL {
                return Err(Error::ClosedFormDomain(format!(
                    "equal-weight dissipative solution requires theta = pi/4, got {}",
                    cfg.theta
                )));
            }
            (SQRT_2 / 2.0, SQRT_2 / 2.0)
        }
        DissipativeBranch::GeneralTheta => (cfg.theta.cos(), cfg.theta.sin()),
    };
    let amp_a = weight_a * receiver_amplitude(cfg.g_aa, cfg.kappa_a, t);
    let amp_b = weight_b * receiver_amplitude(cfg.g_bb, cfg.kappa_b, t);
    let c = amp_a * amp_a;
    let b = amp_b * amp_b;
    Ok(XStateAB::real(1.0 - (b + c), b, c, amp_a * amp_b))
}

/// Equal-weight branch when `θ = π/4`, general-θ branch otherwise.
pub fn dissipative_elements_auto(cfg: &SystemConfig, t: f64) -> Result<XStateAB> {
    let branch = if (cfg.theta - FRAC_PI_4).abs() <= THETA_PI_4_TOL {
        DissipativeBranch::MaximallyEntangled
    } else {
        DissipativeBranch::GeneralTheta
    };
    dissipative_elements(cfg, t, branch)
}

/// Receiver X-state for any config: unitary solution when closed, dissipative otherwise.
pub fn receiver_elements(cfg: &SystemConfig, t: f64) -> Result<XStateAB> {
    if cfg.is_closed() {
        unitary_elements(cfg, t)
    } else {
        dissipative_elements_auto(cfg, t)
    }
}

/// Largest receiver negativity on `[0, t_final]`, returned as `(t, N)`.
///
/// Scans `grid` equally spaced points, then refines every local maximum of
/// the grid by golden-section search on its bracketing interval.
pub fn peak_negativity(cfg: &SystemConfig, t_final: f64, grid: usize) -> Result<(f64, f64)> {
    if grid < 3 || !(t_final > 0.0 && t_final.is_finite()) {
        return Err(Error::Domain(format!(
            "peak search needs t_final > 0 and at least 3 grid points (got {t_final}, {grid})"
        )));
    }
    let eval = |t: f64| -> Result<f64> {
        let x = receiver_elements(cfg, t)?;
        Ok((x.a * x.a + 4.0 * x.d.norm_sqr()).sqrt() - x.a)
    };
    let h = t_final / (grid - 1) as f64;
    let values = (0..grid).map(|k| eval(k as f64 * h)).collect::<Result<Vec<_>>>()?;
    let mut best = (0.0, values[0]);
    for k in 0..grid {
        let left = if k > 0 { values[k - 1] } else { f64::NEG_INFINITY };
        let right = if k + 1 < grid { values[k + 1] } else { f64::NEG_INFINITY };
        if values[k] < left || values[k] < right {
            continue;
        }
        let lo = (k as f64 - 1.0).max(0.0) * h;
        let hi = ((k + 1) as f64 * h).min(t_final);
        let (t, n) = golden_section_max(&eval, lo, hi)?;
        let candidate = if n > values[k] { (t, n) } else { (k as f64 * h, values[k]) };
        if candidate.1 > best.1 {
            best = candidate;
        }
    }
    Ok(best)
}

fn golden_section_max(f: &impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    for _ in 0..200 {
        if hi - lo <= 1e-15 * hi.abs().max(1.0) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(if f1 >= f2 { (x1, f1) } else { (x2, f2) })
}

/// Largest negativity reachable at energy `U`: the positive root of `N² − 2NU = (1+U)²`.
pub fn frontier_negativity(u: f64) -> Result<f64> {
    if !(-1.0..=0.0).contains(&u) {
        return Err(Error::Domain(format!("frontier energy must lie in [-1, 0], got {u}")));
    }
    Ok(u + (u * u + (1.0 + u) * (1.0 + u)).sqrt())
}

/// State on the frontier at energy `U`: `a = −U`, `b = c = d = (1+U)/2`.
pub fn frontier_state(u: f64) -> Result<XStateAB> {
    if !(-1.0..=0.0).contains(&u) {
        return Err(Error::Domain(format!("frontier energy must lie in [-1, 0], got {u}")));
    }
    let half = (1.0 + u) / 2.0;
    Ok(XStateAB::real(-u, half, half, half))
}

/// `(1+U)² − (N² − 2NU)`; non-negative for every physical receiver state.
pub fn bound_residual(n: f64, u: f64) -> f64 {
    (1.0 + u) * (1.0 + u) - (n * n - 2.0 * n * u)
}

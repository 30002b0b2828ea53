//! Physical objects of the two-pair exchange model, in units with ħ = 1.
//!
//! Qubits are ordered `a, b, A, B`. Pairs `aA` and `bB` are each coupled by a
//! resonant spin-exchange term `g (σ₋σ₊ + σ₊σ₋)`; the cavity-like qubits `A`
//! and `B` may leak excitations at rates `κ_A`, `κ_B`.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tensor::{basis_index, kron_all, ComplexMatrix, PureState, FULL_DIM, ONE, ZERO};

/// One of the four qubits, in tensor-product order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    /// First donor qubit.
    SmallA,
    /// Second donor qubit.
    SmallB,
    /// Receiver coupled to `a`.
    CapA,
    /// Receiver coupled to `b`.
    CapB,
}

impl Qubit {
    pub const ALL: [Qubit; 4] = [Qubit::SmallA, Qubit::SmallB, Qubit::CapA, Qubit::CapB];

    fn position(self) -> usize {
        match self {
            Qubit::SmallA => 0,
            Qubit::SmallB => 1,
            Qubit::CapA => 2,
            Qubit::CapB => 3,
        }
    }
}

/// Physical parameters. Rates share the unit of `omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    /// Initial-state angle: donors start in `sinθ|01> + cosθ|10>`.
    pub theta: f64,
    pub g_aa: f64,
    pub g_bb: f64,
    pub kappa_a: f64,
    pub kappa_b: f64,
    pub omega: f64,
}

impl Default for SystemConfig {
    fn default() -> Self {
        Self { theta: FRAC_PI_4, g_aa: 1.0, g_bb: 1.0, kappa_a: 0.0, kappa_b: 0.0, omega: 1.0 }
    }
}

impl SystemConfig {
    pub fn closed(theta: f64, g_aa: f64, g_bb: f64) -> Self {
        Self { theta, g_aa, g_bb, ..Self::default() }
    }

    pub fn open(theta: f64, g_aa: f64, g_bb: f64, kappa_a: f64, kappa_b: f64) -> Self {
        Self { theta, g_aa, g_bb, kappa_a, kappa_b, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("theta", self.theta),
            ("g_aA", self.g_aa),
            ("g_bB", self.g_bb),
            ("kappa_A", self.kappa_a),
            ("kappa_B", self.kappa_b),
            ("omega", self.omega),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} must be finite, got {v}")));
            }
        }
        for (name, v) in &fields[1..5] {
            if *v < 0.0 {
                return Err(Error::InvalidConfig(format!("{name} must be non-negative, got {v}")));
            }
        }
        if self.omega <= 0.0 {
            return Err(Error::InvalidConfig(format!("omega must be positive, got {}", self.omega)));
        }
        Ok(())
    }

    pub fn is_closed(&self) -> bool {
        self.kappa_a == 0.0 && self.kappa_b == 0.0
    }

    /// Largest rate in the problem; sets the default integration step.
    pub fn max_rate(&self) -> f64 {
        [self.omega, self.g_aa, self.g_bb, self.kappa_a, self.kappa_b]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[-1.0, 1.0])
}

/// `|1><0|`
pub fn sigma_plus() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(1, 0)] = ONE;
    m
}

/// `|0><1|`
pub fn sigma_minus() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = ONE;
    m
}

/// `|1><1|`
pub fn excited_projector() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[0.0, 1.0])
}

/// Embeds single-qubit operators into the four-qubit space; qubits not listed get the identity.
pub fn embed(ops: &[(Qubit, &ComplexMatrix)]) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let mut factors = [&id; 4];
    for (q, op) in ops {
        factors[q.position()] = op;
    }
    kron_all(factors)
}

/// Total Hamiltonian `H_aA + H_bB` on the four-qubit space.
pub fn build_hamiltonian(cfg: &SystemConfig) -> Result<ComplexMatrix> {
    cfg.validate()?;
    let sz = sigma_z();
    let (sp, sm) = (sigma_plus(), sigma_minus());
    let half_omega = C64::new(cfg.omega / 2.0, 0.0);

    let mut h = ComplexMatrix::zeros(FULL_DIM);
    for q in Qubit::ALL {
        h = &h + &embed(&[(q, &sz)]).scale(half_omega);
    }
    for (donor, receiver, g) in [
        (Qubit::SmallA, Qubit::CapA, cfg.g_aa),
        (Qubit::SmallB, Qubit::CapB, cfg.g_bb),
    ] {
        let hop = &embed(&[(donor, &sm), (receiver, &sp)]) + &embed(&[(donor, &sp), (receiver, &sm)]);
        h = &h + &hop.scale(C64::new(g, 0.0));
    }
    Ok(h)
}

/// `(ω/2)(σ_z^A + σ_z^B)` on the reduced pair: `diag(−ω, 0, 0, ω)`.
pub fn build_h_ab(cfg: &SystemConfig) -> Result<ComplexMatrix> {
    cfg.validate()?;
    Ok(ComplexMatrix::from_real_diagonal(&[-cfg.omega, 0.0, 0.0, cfg.omega]))
}

/// Donors in `sinθ|01> + cosθ|10>`, receivers in `|00>`.
pub fn initial_state(cfg: &SystemConfig) -> Result<PureState> {
    cfg.validate()?;
    let mut amps = vec![ZERO; FULL_DIM];
    amps[basis_index(0, 1, 0, 0)] = C64::new(cfg.theta.sin(), 0.0);
    amps[basis_index(1, 0, 0, 0)] = C64::new(cfg.theta.cos(), 0.0);
    PureState::new(amps)
}

/// Photon-loss operators `√(2κ) σ₋` on `A` and `B`; zero-rate channels are omitted.
pub fn jump_operators(cfg: &SystemConfig) -> Result<Vec<ComplexMatrix>> {
    cfg.validate()?;
    let sm = sigma_minus();
    let ops = [(Qubit::CapA, cfg.kappa_a), (Qubit::CapB, cfg.kappa_b)]
        .into_iter()
        .filter(|&(_, kappa)| kappa > 0.0)
        .map(|(q, kappa)| embed(&[(q, &sm)]).scale(C64::new((2.0 * kappa).sqrt(), 0.0)))
        .collect();
    Ok(ops)
}

/// Total excitation number `Σ_q |1><1|_q`.
pub fn excitation_number() -> ComplexMatrix {
    ComplexMatrix::from_fn(FULL_DIM, |i, j| {
        if i == j {
            C64::new(i.count_ones() as f64, 0.0)
        } else {
            ZERO
        }
    })
}

/// Basis indices with at most one excitation: `|0000>` followed by the four single-excitation states.
pub fn low_excitation_indices() -> Vec<usize> {
    (0..FULL_DIM).filter(|i| i.count_ones() <= 1).collect()
}

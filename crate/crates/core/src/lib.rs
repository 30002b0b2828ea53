//! Entanglement and energy transfer between two pairs of exchange-coupled qubits.
//!
//! Donor qubits `a`, `b` start in `sinθ|01> + cosθ|10>` while receivers `A`, `B`
//! start in `|00>`. Pair `aA` exchanges excitations at rate `g_aA`, pair `bB`
//! at rate `g_bB`, and the receivers may leak photons to zero-temperature
//! reservoirs. The crate provides:
//!
//! * [`tensor`]: small dense complex linear algebra (Kronecker products,
//!   Jacobi eigensolver, partial trace and partial transpose);
//! * [`model`]: Hamiltonians, initial state and jump operators;
//! * [`closed_form`]: analytic receiver states and the negativity/energy frontier;
//! * [`dynamics`]: spectral and Runge–Kutta propagation, including the
//!   Lindblad master equation;
//! * [`measures`]: negativity and energy of the receiver pair.

pub mod closed_form;
pub mod dynamics;
pub mod error;
pub mod measures;
pub mod model;
pub mod tensor;

pub use closed_form::{
    bound_residual, dissipative_elements, frontier_negativity, global_state, unitary_elements,
    DissipativeBranch, RabiParams, XStateAB,
};
pub use dynamics::{
    evolve_exact, lindblad_rhs, propagate_lindblad, DensityMatrix16, Method, PropagationPlan,
    StateSpace,
};
pub use error::{Error, Result};
pub use measures::{energy, negativity, xstate_observables, ObservablePair};
pub use model::SystemConfig;
pub use num_complex::Complex64;
pub use tensor::{ComplexMatrix, HermitianSpectrum, PureState};

//! Numerical propagation checked against the closed-form solutions.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use pairswap_core::closed_form::{
    bound_residual, dissipative_elements, peak_negativity, unitary_elements, DissipativeBranch, XStateAB,
};
use pairswap_core::dynamics::{
    default_step, propagate_lindblad, propagate_state_rk4, Method, PropagationPlan, SpectralPropagator,
};
use pairswap_core::measures::xstate_observables;
use pairswap_core::model::{build_hamiltonian, excitation_number, initial_state};
use pairswap_core::tensor::partial_trace_to_ab;
use pairswap_core::SystemConfig;

const THETAS: [f64; 6] = [0.0, PI / 8.0, PI / 6.0, FRAC_PI_4, PI / 3.0, PI / 2.0];

#[test]
fn spectral_propagation_reproduces_unitary_elements() {
    for theta in THETAS {
        for ratio in [1.0, 2.0, 3.0, 7.0, 53.0, SQRT_2] {
            let cfg = SystemConfig::closed(theta, ratio, 1.0);
            let prop = SpectralPropagator::new(&build_hamiltonian(&cfg).unwrap()).unwrap();
            let psi0 = initial_state(&cfg).unwrap();
            for k in 0..100 {
                let t = 4.0 * PI * k as f64 / 99.0;
                let rho = partial_trace_to_ab(&prop.evolve(&psi0, t).projector()).unwrap();
                let x = XStateAB::from_matrix(&rho).unwrap();
                let oracle = unitary_elements(&cfg, t).unwrap();
                assert!(x.max_abs_diff(&oracle) <= 1e-8, "theta {theta} ratio {ratio} t {t}");
                // the remaining entries of the reduced state stay zero
                let mut rest = rho.clone();
                for (i, j) in [(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)] {
                    rest[(i, j)] = pairswap_core::tensor::ZERO;
                }
                assert!(rest.max_abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn equal_coupling_maximal_entanglement_rides_the_frontier() {
    let cfg = SystemConfig::closed(FRAC_PI_4, 1.0, 1.0);
    for k in 0..1000 {
        let t = 2.0 * PI * k as f64 / 999.0;
        let o = xstate_observables(&unitary_elements(&cfg, t).unwrap());
        assert!(bound_residual(o.negativity, o.energy).abs() <= 1e-10);
    }
}

#[test]
fn complete_transfer_needs_odd_coupling_ratio() {
    let reaches_unity = |g_aa: f64, g_bb: f64| {
        let cfg = SystemConfig::closed(FRAC_PI_4, g_aa, g_bb);
        let horizon = 100.0 * PI / g_aa.min(g_bb);
        let (_, n) = peak_negativity(&cfg, horizon, 200_001).unwrap();
        n >= 1.0 - 1e-9
    };
    assert!(reaches_unity(1.0, 1.0));
    assert!(reaches_unity(3.0, 1.0));
    assert!(reaches_unity(1.0, 3.0));
    assert!(!reaches_unity(2.0, 1.0));
    assert!(!reaches_unity(SQRT_2, 1.0));
}

#[test]
fn lindblad_without_loss_matches_unitary_elements() {
    let cfg = SystemConfig::closed(FRAC_PI_4, 1.0, 1.0);
    let plan = PropagationPlan::for_config(&cfg, 4.0 * PI, 201, Method::RungeKutta4).unwrap();
    let n_exc = excitation_number();
    for s in propagate_lindblad(&cfg, &plan).unwrap() {
        let x = XStateAB::from_matrix(&s.rho.reduced_ab()).unwrap();
        assert!(x.max_abs_diff(&unitary_elements(&cfg, s.t).unwrap()) <= 1e-8);
        assert!(((s.rho.matrix() * &n_exc).trace().re - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn lindblad_matches_general_theta_dissipative_elements() {
    // The general-θ form is only trusted because it passes this check.
    for theta in THETAS {
        for (g_aa, g_bb) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0), (1.0, SQRT_2)] {
            for (kappa_a, kappa_b) in [(0.1, 0.1), (0.3, 0.05), (2.5, 0.4)] {
                let cfg = SystemConfig::open(theta, g_aa, g_bb, kappa_a, kappa_b);
                let plan = PropagationPlan::for_config(&cfg, 20.0, 81, Method::RungeKutta4).unwrap();
                for s in propagate_lindblad(&cfg, &plan).unwrap() {
                    let x = XStateAB::from_matrix(&s.rho.reduced_ab()).unwrap();
                    let oracle = dissipative_elements(&cfg, s.t, DissipativeBranch::GeneralTheta).unwrap();
                    assert!(
                        x.max_abs_diff(&oracle) <= 1e-6,
                        "theta {theta} g ({g_aa},{g_bb}) kappa ({kappa_a},{kappa_b}) t {}",
                        s.t
                    );
                }
            }
        }
    }
}

#[test]
fn critical_damping_matches_lindblad() {
    let g = 0.5;
    let cfg = SystemConfig::open(FRAC_PI_4, g, g, 2.0 * g, 2.0 * g);
    let plan = PropagationPlan::for_config(&cfg, 15.0, 61, Method::RungeKutta4).unwrap();
    for s in propagate_lindblad(&cfg, &plan).unwrap() {
        let x = XStateAB::from_matrix(&s.rho.reduced_ab()).unwrap();
        let oracle = dissipative_elements(&cfg, s.t, DissipativeBranch::MaximallyEntangled).unwrap();
        assert!(x.max_abs_diff(&oracle) <= 1e-6);
    }
}

#[test]
fn runge_kutta_error_shrinks_at_fourth_order() {
    let cfg = SystemConfig::open(FRAC_PI_4, 1.0, 1.0, 0.1, 0.1);
    // one Rabi period 2π/Ω
    let period = 2.0 * PI / (4.0f64 - 0.01).sqrt();
    let max_error = |dt: f64| {
        let plan = PropagationPlan::uniform(period, 11, dt, Method::RungeKutta4).unwrap();
        propagate_lindblad(&cfg, &plan)
            .unwrap()
            .iter()
            .map(|s| {
                let x = XStateAB::from_matrix(&s.rho.reduced_ab()).unwrap();
                x.max_abs_diff(&dissipative_elements(&cfg, s.t, DissipativeBranch::MaximallyEntangled).unwrap())
            })
            .fold(0.0, f64::max)
    };
    // coarser steps than this push the zero eigenvalue past the positivity guard
    let coarse = max_error(0.02);
    let fine = max_error(0.01);
    let ratio = coarse / fine;
    assert!((12.0..=20.0).contains(&ratio), "ratio {ratio} ({coarse:e} / {fine:e})");
}

#[test]
fn state_vector_rk4_agrees_with_spectral_over_long_horizon() {
    let cfg = SystemConfig::closed(PI / 3.0, 3.0, 1.0);
    let h = build_hamiltonian(&cfg).unwrap();
    let psi0 = initial_state(&cfg).unwrap();
    let prop = SpectralPropagator::new(&h).unwrap();
    let t_final = 20.0 * PI / 3.0;
    let plan = PropagationPlan::uniform(t_final, 41, default_step(&cfg), Method::RungeKutta4).unwrap();
    for (t, amps) in propagate_state_rk4(&h, &psi0, &plan).unwrap() {
        let exact = prop.evolve(&psi0, t);
        let err = amps.iter().zip(exact.amplitudes()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err <= 1e-8, "t {t}: {err:e}");
    }
}

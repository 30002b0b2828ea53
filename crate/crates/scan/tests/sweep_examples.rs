//! Documented behaviour of the sweep modes.

use std::f64::consts::{FRAC_PI_4, PI};

use pairswap_core::SystemConfig;
use pairswap_scan::record::{write_records, RESIDUAL_TOL};
use pairswap_scan::{
    parse_records, run_bound_check, run_phase_diagram, run_time_series, Engine, Mode, SweepSpec, TrajectoryRecord,
};
use proptest::prelude::*;

fn spec(mode: Mode, config: SystemConfig, t_final: f64, samples: usize) -> SweepSpec {
    SweepSpec { t_final, samples, ..SweepSpec::new(mode, config) }
}

fn max_n(records: &[TrajectoryRecord]) -> f64 {
    records.iter().filter(|r| !r.frontier).map(|r| r.n).fold(0.0, f64::max)
}

#[test]
fn equal_coupling_series_has_half_period_and_peaks_together() {
    let g = 1.0;
    // 401 points on [0, 2π/g]: index k + 200 lies π/g later than index k
    let s = spec(Mode::TimeSeries, SystemConfig::closed(FRAC_PI_4, g, g), 2.0 * PI / g, 401);
    let r = run_time_series(&s).unwrap();
    for k in 0..=200 {
        assert!((r[k].n - r[k + 200].n).abs() < 1e-9 && (r[k].u - r[k + 200].u).abs() < 1e-9);
    }
    let peak = r.iter().max_by(|p, q| p.n.total_cmp(&q.n)).unwrap();
    assert!((peak.n - 1.0).abs() < 1e-9 && peak.u.abs() < 1e-9);
    assert!((peak.t - PI / (2.0 * g)).abs() < 1e-9 || (peak.t - 3.0 * PI / (2.0 * g)).abs() < 1e-9);
}

#[test]
fn even_ratio_never_fully_transfers() {
    let s = spec(Mode::TimeSeries, SystemConfig::closed(FRAC_PI_4, 2.0, 1.0), 10.0 * PI, 5001);
    assert!(max_n(&run_time_series(&s).unwrap()) < 1.0 - 1e-3);
}

#[test]
fn lossy_series_decays_to_the_ground_state() {
    let kappa = 0.1;
    let cfg = SystemConfig::open(FRAC_PI_4, 1.0, 1.0, kappa, kappa);
    for engine in [Engine::ClosedForm, Engine::RungeKutta4] {
        let s = SweepSpec { engine, ..spec(Mode::TimeSeries, cfg, 50.0 / kappa, 101) };
        let last = *run_time_series(&s).unwrap().last().unwrap();
        assert!(last.n <= 1e-4 && last.u <= -1.0 + 1e-4, "{engine}: {last:?}");
    }
}

#[test]
fn equal_coupling_phase_diagram_rides_the_frontier() {
    let s = spec(Mode::PhaseDiagram, SystemConfig::closed(FRAC_PI_4, 1.0, 1.0), 2.0 * PI, 1000);
    let r = run_phase_diagram(&s).unwrap();
    assert_eq!(r.len(), 2000);
    assert!(r.iter().all(|x| x.residual.abs() <= 1e-9));
}

#[test]
fn partially_entangled_start_stays_inside() {
    let s = spec(Mode::PhaseDiagram, SystemConfig::closed(PI / 3.0, 53.0, 1.0), 4.0 * PI, 4001);
    let traj: Vec<_> = run_phase_diagram(&s).unwrap().into_iter().filter(|r| !r.frontier).collect();
    assert!(traj.iter().all(|r| r.residual >= -RESIDUAL_TOL));
    let interior = traj.iter().filter(|r| r.residual > 1e-3).count();
    assert!(interior > traj.len() / 2, "{interior} of {}", traj.len());
}

#[test]
fn less_initial_entanglement_means_lower_peak() {
    let peak = |theta| {
        let s = spec(Mode::PhaseDiagram, SystemConfig::closed(theta, 53.0, 1.0), 4.0 * PI, 4001);
        max_n(&run_phase_diagram(&s).unwrap())
    };
    assert!(peak(PI / 8.0) < peak(FRAC_PI_4));
}

#[test]
fn bound_check_finds_no_violations() {
    for kappa in [0.0, 0.3] {
        let cfg = SystemConfig { kappa_a: kappa, kappa_b: kappa, ..Default::default() };
        let s = SweepSpec { seed: 42, ..spec(Mode::BoundCheck, cfg, 20.0, 20_000) };
        let report = run_bound_check(&s).unwrap();
        assert_eq!(report.violations, 0, "{report:?}");
        assert!(report.min_residual >= -RESIDUAL_TOL);
        // the minimum is attained by one of the drawn tuples
        assert_eq!(report.worst.residual(&cfg).unwrap(), report.min_residual);
    }
}

fn finite_or_nan() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => any::<f64>().prop_filter("finite", |x| x.is_finite()),
        1 => Just(f64::NAN),
        1 => Just(-0.0),
    ]
}

proptest! {
    #[test]
    fn csv_round_trip_is_exact(
        rows in prop::collection::vec((prop::array::uniform11(finite_or_nan()), any::<bool>()), 1..20),
        theta in -10.0..10.0f64,
        seed in any::<u64>(),
    ) {
        let s = SweepSpec { seed, ..spec(Mode::PhaseDiagram, SystemConfig::closed(theta, 1.0, 2.0), 3.0, 2) };
        let records: Vec<_> = rows.iter().map(|(v, frontier)| TrajectoryRecord {
            t: v[0], n: v[1], u: v[2], a: v[3], b: v[4], c: v[5], d_re: v[6], d_im: v[7],
            residual: v[8], trace_err: v[9], min_eig: v[10], frontier: *frontier,
        }).collect();
        let mut buf = Vec::new();
        write_records(&mut buf, &s, &records).unwrap();
        let parsed = parse_records(std::str::from_utf8(&buf).unwrap()).unwrap();
        prop_assert_eq!(parsed.header["theta"].parse::<f64>().unwrap(), theta);
        prop_assert_eq!(parsed.header["seed"].parse::<u64>().unwrap(), seed);
        prop_assert_eq!(parsed.records.len(), records.len());
        for (p, r) in parsed.records.iter().zip(&records) {
            // bitwise comparison so NaN and −0 count
            let bits = |x: &TrajectoryRecord| [x.t, x.n, x.u, x.a, x.b, x.c, x.d_re, x.d_im, x.residual, x.trace_err, x.min_eig]
                .map(f64::to_bits);
            let (pb, rb) = (bits(p), bits(r));
            for (x, y) in pb.iter().zip(rb) {
                prop_assert!(*x == y || (f64::from_bits(*x).is_nan() && f64::from_bits(y).is_nan()));
            }
            prop_assert_eq!(p.frontier, r.frontier);
        }
    }

    #[test]
    fn emitted_records_respect_the_bound(
        theta in 0.0..PI,
        ratio in 0.1..10.0f64,
        kappa in 0.0..2.0f64,
    ) {
        let cfg = SystemConfig::open(theta, 1.0, ratio, kappa, kappa);
        let r = run_time_series(&spec(Mode::TimeSeries, cfg, 30.0, 64)).unwrap();
        prop_assert!(r.iter().all(|x| x.residual >= -RESIDUAL_TOL));
    }
}

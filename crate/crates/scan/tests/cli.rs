use std::fs;
use std::process::{Command, Output};

use pairswap_scan::parse_records;

fn pairswap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairswap")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn timeseries_to_stdout_parses() {
    let out = pairswap(&["timeseries", "--samples", "11", "--g-bb", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let file = parse_records(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(file.records.len(), 11);
    assert_eq!(file.header["g-bb"], "2");
    assert_eq!(file.header["mode"], "timeseries");
    assert!(file.header["tool"].starts_with("pairswap "));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    for mode in ["timeseries", "phasediagram", "boundcheck"] {
        let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("{mode}{i}.csv"))).collect();
        for p in &paths {
            let out = pairswap(&[
                mode, "--samples", "300", "--kappa-a", "0.1", "--kappa-b", "0.1", "--theta", "0.3", "--seed", "7",
                "--out", p.to_str().unwrap(),
            ]);
            assert_eq!(code(&out), 0, "{mode}: {}", String::from_utf8_lossy(&out.stderr));
        }
        assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap(), "{mode}");
    }
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# lossy run\ntheta = 0.5\nkappa_a = 0.2\nsamples = 7\nengine = rk4\n").unwrap();
    let out = pairswap(&["timeseries", "--config", cfg.to_str().unwrap(), "--samples", "5"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let file = parse_records(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(file.records.len(), 5);
    assert_eq!(file.header["engine"], "rk4");
    assert_eq!(file.header["kappa-a"], "0.2");
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(code(&pairswap(&[])), 1);
    assert_eq!(code(&pairswap(&["timeseries", "--samples", "many"])), 1);
    assert_eq!(code(&pairswap(&["timeseries", "--engine", "euler"])), 1);
    assert_eq!(code(&pairswap(&["timeseries", "--samples", "1"])), 1);
    assert_eq!(code(&pairswap(&["timeseries", "--g-aa", "-1"])), 1);
    assert_eq!(code(&pairswap(&["timeseries", "--config", "/nonexistent/file"])), 1);
    // spectral propagation cannot represent loss
    let out = pairswap(&["timeseries", "--engine", "exact", "--kappa-a", "0.1"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("engine"));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(code(&pairswap(&["--help"])), 0);
    assert_eq!(code(&pairswap(&["--version"])), 0);
}

#[test]
fn verify_and_boundcheck_report_pass() {
    let out = pairswap(&["verify", "--t-final", "6", "--samples", "31"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<_> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with(",1")), "{text}");

    let out = pairswap(&["boundcheck", "--samples", "2000", "--kappa-a", "0.5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().last().unwrap();
    assert!(row.starts_with("2000,0,"), "{row}");
}

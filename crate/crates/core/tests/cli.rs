mod common;

use std::process::Command;

use common::data_path;
use faddeeva_trapz::cli::{self, EXIT_DATA_MISMATCH, EXIT_OK, EXIT_SELFTEST_FAILED, EXIT_USAGE};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("faddeeva-trapz").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn inset() -> String {
    data_path("inset_w.csv").to_string_lossy().into_owned()
}

fn summary_field(line: &str, key: &str) -> f64 {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
        .unwrap_or_else(|| panic!("{key} missing in {line}"))
        .parse()
        .unwrap()
}

#[test]
fn eval_output_format() {
    let o = run(&["eval", "--fn", "w", "--re", "0", "--im", "0"]);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "1.0000000000000000e0 0.0000000000000000e0\n"));
    // nearest binary64 to erf(1) = 0.842700792949714869...
    let o = run(&["eval", "--fn", "erf", "--re", "1", "--im", "0"]);
    assert_eq!(o.stdout, "8.4270079294971489e-1 0\n");
    let o = run(&["eval", "--fn", "erfc", "--re", "2", "--im", "1"]);
    assert_eq!(o.stdout.split_whitespace().count(), 2);
}

#[test]
fn eval_overflow_warns_but_succeeds() {
    let o = run(&["eval", "--fn", "w", "--re", "0", "--im", "-30"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("inf "));
    assert!(o.stderr.contains("warning"));
}

#[test]
fn usage_errors() {
    for args in [
        &["params", "--eps", "0"][..],
        &["params", "--eps", "1.5"],
        &["selftest", "--h-override", "-1"],
        &["bench", "--repetitions", "0", "--nre", "2", "--nim", "2"],
        &["eval", "--fn", "gamma"],
        &["accuracy-map", "--reference", "x.csv", "--nre", "0"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}: {}", o.stderr);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn params_listing() {
    let o = run(&["params"]);
    assert_eq!(o.code, EXIT_OK);
    let get = |k: &str| -> String {
        o.stdout
            .lines()
            .find_map(|l| l.strip_prefix(k).and_then(|v| v.strip_prefix('=')))
            .unwrap_or_else(|| panic!("{k} missing"))
            .to_string()
    };
    assert_eq!(get("N"), "12");
    assert!((get("h").parse::<f64>().unwrap() - 0.5022).abs() < 1e-4);
    assert!((get("re_cut").parse::<f64>().unwrap() - 6.17).abs() < 0.01);
    assert!((get("g").parse::<f64>().unwrap() - 41.024).abs() < 1e-3);
    assert_eq!(get("use_asymptotic"), "false");
    let o = run(&["params", "--eps", "1e-8", "--use-maclaurin"]);
    assert!(o.stdout.contains("N=7\n") && o.stdout.contains("use_maclaurin=true\n"));
}

#[test]
fn accuracy_map_single_point() {
    let r = inset();
    let o = run(&["accuracy-map", "--reference", &r, "--re-min", "0", "--re-max", "0", "--im-min", "0", "--im-max", "0", "--nre", "1", "--nim", "1"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "z_re,z_im,relerr_deps,region,overflowed");
    let relerr: f64 = lines[1].split(',').nth(2).unwrap().parse().unwrap();
    assert!(relerr <= 1.0);
    assert_eq!(summary_field(lines[2], "mean"), summary_field(lines[2], "max"));
    assert_eq!(summary_field(lines[2], "n"), 1.0);
}

#[test]
fn accuracy_map_real_axis_row() {
    let r = inset();
    let o = run(&["accuracy-map", "--reference", &r, "--im-min", "0", "--im-max", "0", "--nim", "1"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let last = o.stdout.lines().last().unwrap();
    assert_eq!(summary_field(last, "n"), 241.0);
    assert!(summary_field(last, "mean") <= summary_field(last, "max"));
    assert!(summary_field(last, "max") <= 5.0, "{last}");
}

#[test]
fn accuracy_map_mismatch() {
    let r = inset();
    let o = run(&["accuracy-map", "--reference", &r, "--re-min", "0", "--re-max", "1", "--nre", "7", "--im-min", "0", "--im-max", "0", "--nim", "1"]);
    assert_eq!(o.code, EXIT_DATA_MISMATCH);
    let o = run(&["accuracy-map", "--reference", "/nonexistent/reference.csv"]);
    assert_eq!(o.code, EXIT_DATA_MISMATCH);
}

#[test]
fn accuracy_map_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("faddeeva-trapz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let r = inset();
    let mut files = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("map{k}.csv"));
        let p = path.to_string_lossy().into_owned();
        let o = run(&["accuracy-map", "--reference", &r, "--im-min", "1", "--im-max", "1", "--nim", "1", "--out", &p]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout.lines().count(), 1, "only the summary goes to stdout");
        files.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert_eq!(String::from_utf8_lossy(&files[0]).lines().count(), 1 + 241);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bench_bookkeeping_and_checksum() {
    let grid = ["--nre", "15", "--nim", "13", "--im-min", "-40", "--im-max", "40", "--re-min", "-40", "--re-max", "40"];
    let checksum = |reps: &str| {
        let mut args = vec!["bench", "--repetitions", reps];
        args.extend(grid);
        let o = run(&args);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        let total: usize = o
            .stdout
            .lines()
            .filter(|l| l.starts_with("region="))
            .map(|l| summary_field(l, "n") as usize)
            .sum();
        assert_eq!(total, 15 * 13);
        assert!(o.stdout.lines().any(|l| l.starts_with("region=") && l.contains("ns_per_call=")));
        o.stdout.lines().find(|l| l.starts_with("checksum=")).unwrap().to_string()
    };
    assert_eq!(checksum("1"), checksum("3"));
}

#[test]
fn selftest_passes_even_with_coarse_nodes() {
    let o = run(&["selftest"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o.stdout.lines().all(|l| l.contains("status=PASS")));
    for name in ["reflection", "erf_plus_erfc", "derivative_identity", "real_axis", "imag_axis", "denominator_bounds"] {
        assert!(o.stdout.contains(&format!("check={name} ")), "{name}");
    }
    let o = run(&["selftest", "--h-override", "0.9"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert_ne!(o.code, EXIT_SELFTEST_FAILED);
}

#[test]
fn coarse_nodes_degrade_the_map() {
    let r = inset();
    let args = ["accuracy-map", "--reference", &r, "--im-min", "1", "--im-max", "1", "--nim", "1"];
    let fine = run(&args);
    let mut coarse_args = args.to_vec();
    coarse_args.extend(["--h-override", "0.9"]);
    let coarse = run(&coarse_args);
    let mean = |o: &Output| summary_field(o.stdout.lines().last().unwrap(), "mean");
    assert!(mean(&coarse) > 100.0 * mean(&fine), "{} vs {}", mean(&coarse), mean(&fine));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_faddeeva-trapz");
    let status = |args: &[&str]| Command::new(exe).args(args).output().unwrap();
    let o = status(&["eval", "--fn", "w", "--re", "1", "--im", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&o.stdout).split_whitespace().count(), 2);
    assert_eq!(status(&["params", "--eps", "0"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(status(&["accuracy-map", "--reference", "/nonexistent.csv"]).status.code(), Some(EXIT_DATA_MISMATCH));
    assert_eq!(status(&["selftest"]).status.code(), Some(EXIT_OK));
    assert_eq!(status(&["--help"]).status.code(), Some(EXIT_OK));
}

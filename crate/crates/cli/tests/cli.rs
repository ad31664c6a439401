use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use canal_cli::{job_from_spine, parse_job, parse_spine, run_job, Args, Format, Target};
use canal_core::canal::make_spine;
use canal_core::{Rational, UniPoly};
use clap::Parser;
use proptest::prelude::*;

fn spine_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../spines").join(format!("{name}.toml"))
}

fn args(name: &str, extra: &[&str]) -> Args {
    let path = spine_path(name);
    let mut argv = vec!["canal", "--input", path.to_str().unwrap()];
    argv.extend_from_slice(extra);
    Args::try_parse_from(argv).unwrap()
}

fn canal(name: &str, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canal"))
        .arg("--input")
        .arg(spine_path(name))
        .args(extra)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn ellipse_job_defaults_to_canal() {
    let job = parse_job(&args("ellipse", &[])).unwrap();
    assert_eq!(job.spine.n, 2);
    assert_eq!(job.targets, BTreeSet::from([Target::Canal]));
    assert_eq!(job.d, None);
    assert_eq!(job.format, Format::Text);
    assert_eq!(job.seed, 2024);
}

#[test]
fn d_is_parsed_exactly() {
    let job = parse_job(&args("ellipse", &["--target", "offset", "--d", "1/3"])).unwrap();
    assert_eq!(job.d, Some(Rational::new(1.into(), 3.into())));
    let job = parse_job(&args("ellipse", &["--target", "offset", "--d", "-2/4"])).unwrap();
    assert_eq!(job.d, Some(Rational::new((-1).into(), 2.into())));
}

#[test]
fn offset_targets_need_d() {
    for target in ["offset", "offset-dual", "naive-d"] {
        let e = parse_job(&args("ellipse", &["--target", target])).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("d: required"), "{e}");
    }
}

#[test]
fn degree_only_excludes_equations() {
    let e = parse_job(&args("ellipse", &["--degree-only", "--target", "dual"])).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    let job = parse_job(&args("ellipse", &["--degree-only", "--target", "general-type"])).unwrap();
    assert_eq!(job.targets, BTreeSet::from([Target::DegreeOnly, Target::GeneralType]));
}

#[test]
fn malformed_coefficients_name_the_field() {
    let cases = [
        ("num = [[1], [2.5], [], []]", "num[1][0]"),
        ("num = [[1], [], [], [\"x/2\"]]", "num[3][0]"),
        ("num = [[1], [], [], [1]]\nden = [[1], [1], [1, \"1/0\"], [1]]", "den[2][1]"),
        ("num = [[1], [], []]", "num"),
        ("num = [[1], [], [], [1]]\nden = [[1], [], [1], [1]]", "den[1]"),
        ("den = [[1], [1], [1], [1]]", "num"),
        ("num = [[1], [], [], [1]]\nradius = 2", "radius"),
    ];
    for (text, field) in cases {
        let e = parse_spine(text).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains(field), "{text}: {e}");
    }
}

#[test]
fn rational_entries_are_accepted() {
    let s = parse_spine("num = [[1, 0, -1], [0, 2], [], [\"1/2\"]]\nden = [[1, 0, 1], [1, 0, 1], [1], [1]]").unwrap();
    assert_eq!(s.e[4], UniPoly::constant(Rational::new(1.into(), 2.into())) * UniPoly::from_ints(&[1, 0, 1]));
}

#[test]
fn canal_report_for_ellipse() {
    let job = parse_job(&args("ellipse", &[])).unwrap();
    let reports = run_job(&job).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r.target, "canal");
    assert_eq!(r.degree, Some(4));
    assert_eq!(r.k, Some(2));
    assert_eq!(r.mu_degrees, Some((2, 2)));
    assert!(r.equation.as_deref().unwrap().starts_with("50625*y0^4"));
}

#[test]
fn affine_drops_y0_after_canonicalization() {
    let job = parse_job(&args("ellipse", &["--target", "dual", "--affine"])).unwrap();
    let r = &run_job(&job).unwrap()[0];
    assert!(!r.equation.as_deref().unwrap().contains("y0"));
    assert_eq!(r.monomials, Some(26));
    assert_eq!(r.weighted_degree, Some(8));
}

#[test]
fn affine_early_agrees_with_affine() {
    let late = run_job(&parse_job(&args("ellipse", &["--target", "canal", "--affine"])).unwrap()).unwrap();
    let early = run_job(&parse_job(&args("ellipse", &["--target", "canal", "--affine", "--affine-early"])).unwrap()).unwrap();
    assert_eq!(late[0].equation, early[0].equation);
}

#[test]
fn degree_only_text() {
    let out = canal("ellipse", &["--degree-only"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("deg V = 6, deg Gamma = 8"));
}

#[test]
fn exit_codes() {
    let out = canal("polynomial", &["--degree-only"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not of general type"));
    assert_eq!(canal("ellipse", &["--target", "offset"]).status.code(), Some(2));
    assert_eq!(canal("missing", &[]).status.code(), Some(2));
    assert_eq!(canal("ellipse", &["--target", "sphere"]).status.code(), Some(2));
}

#[test]
fn naive_output_is_a_raw_polynomial() {
    let out = canal("torus", &["--target", "naive", "--format", "structured"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let record = &doc[0];
    assert_eq!(record["target"], "naive");
    assert!(record["k"].is_null());
    assert!(record["mu_degrees"].is_null());
    assert!(!record["equation"].as_str().unwrap().contains('('));
}

#[test]
fn structured_fields() {
    let out = canal("ellipse", &["--target", "offset-dual,general-type", "--d", "0", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys = ["target", "equation", "degree", "weighted_degree", "monomials", "k", "mu_degrees", "flags"];
    for record in doc.as_array().unwrap() {
        for key in keys {
            assert!(record.get(key).is_some(), "{key} missing");
        }
    }
    assert_eq!(doc[0]["mu_degrees"], serde_json::json!([2, 2]));
    assert_eq!(doc[0]["k"], 2);
    assert_eq!(doc[1]["flags"]["general_type"], true);
}

fn coeff_text(n: i64, d: i64) -> String {
    if d == 1 {
        n.to_string()
    } else {
        format!("\"{n}/{d}\"")
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spine_file_round_trip(
        nums in prop::array::uniform4(prop::collection::vec((-9i64..=9, 1i64..=4), 0..=3)),
        dens in prop::array::uniform4(prop::collection::vec(-5i64..=5, 1..=3)),
    ) {
        let list = |cs: Vec<String>| format!("[{}]", cs.join(", "));
        let num_text = list(nums.iter().map(|p| list(p.iter().map(|&(n, d)| coeff_text(n, d)).collect())).collect());
        let den_text = list(dens.iter().map(|p| list(p.iter().map(|&c| c.to_string()).collect())).collect());
        let text = format!("num = {num_text}\nden = {den_text}\n");
        let num_polys = nums.clone().map(|p| UniPoly::new(p.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect()));
        let den_polys = dens.clone().map(|p| UniPoly::from_ints(&p));
        match make_spine(&num_polys, &den_polys) {
            Ok(expected) => prop_assert_eq!(parse_spine(&text).unwrap(), expected),
            Err(_) => prop_assert_eq!(parse_spine(&text).unwrap_err().exit_code(), 2),
        }
    }

    #[test]
    fn rendering_is_deterministic(d in -3i64..=3) {
        let a = args("torus", &["--target", "offset,general-type", "--d", &d.to_string(), "--format", "structured"]);
        let job = job_from_spine(&a, parse_job(&a).unwrap().spine).unwrap();
        let first = canal_cli::render(&run_job(&job).unwrap(), job.format);
        let second = canal_cli::render(&run_job(&job).unwrap(), job.format);
        prop_assert_eq!(first, second);
    }
}

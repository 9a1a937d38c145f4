//! Golden CLI cases shared by the golden and acceptance targets.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `(file stem, arguments after the program name)`.
pub fn cases() -> Vec<(&'static str, Vec<String>)> {
    let gens = golden_dir().join("gens_xy.txt").display().to_string();
    let raw: Vec<(&'static str, Vec<&str>)> = vec![
        ("eval_brace", vec!["eval", "{x,y}*z"]),
        ("eval_dynkin", vec!["eval", "D(x*y*z)"]),
        ("eval_json", vec!["--format", "json", "eval", "bar(x*y*z) - 1/2*[x,y]*z"]),
        ("is_lie", vec!["is-lie", "[[x,y],z] + p(x*y*z) - x*y*z"]),
        ("is_jordan", vec!["is-jordan", "{{x,y},z}"]),
        ("skew_basis", vec!["skew-basis", "--multidegree", "2,1,1", "--alphabet", "x,y,z"]),
        ("dim_st", vec!["dim-st", "--multidegree", "1,1,1"]),
        ("mdim4", vec!["tortkara", "mdim", "-n", "4"]),
        ("scan4", vec!["tortkara", "scan", "-n", "4"]),
        ("two_gen", vec!["tortkara", "two-gen", "--max-degree", "6"]),
        ("cohn_xy", vec!["speciality", "cohn", "--gens", "GENS", "--max-total", "5"]),
        ("counterexample", vec!["speciality", "counterexample"]),
        ("counterexample_json", vec!["--format", "json", "speciality", "counterexample"]),
        ("remark1", vec!["remark1", "--cap", "12", "--trials", "20", "--seed", "3"]),
        ("verify_core", vec!["verify", "core", "--max-degree", "5", "--trials", "10", "--seed", "1"]),
    ];
    raw.into_iter()
        .map(|(name, args)| (name, args.into_iter().map(|a| if a == "GENS" { gens.clone() } else { a.to_string() }).collect()))
        .collect()
}

/// Output of an in-process run, or the error message.
pub fn run(args: &[String]) -> String {
    let mut full = vec!["zinbiel".to_string()];
    full.extend_from_slice(args);
    match zinbiel::cli::run_args(full) {
        Ok(out) => out.stdout,
        Err(e) => format!("error: {e}\n"),
    }
}

//! Pins the text of CLI reports. Set `ZINBIEL_BLESS=1` to rewrite the files.

mod common;

use std::process::Command;

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("ZINBIEL_BLESS").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in common::cases() {
        let out = common::run(&args);
        let path = common::golden_dir().join(format!("{name}.txt"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != out {
            mismatched.push(format!("{name}:\n--- expected\n{expected}--- got\n{out}"));
        }
    }
    assert!(mismatched.is_empty(), "{}", mismatched.join("\n"));
}

#[test]
fn outputs_are_deterministic() {
    for (name, args) in common::cases() {
        assert_eq!(common::run(&args), common::run(&args), "{name}");
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zinbiel"))
}

#[test]
fn help_lists_every_subcommand() {
    let out = bin().arg("--help").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in ["eval", "is-lie", "is-jordan", "skew-basis", "dim-st", "verify", "tortkara", "speciality", "remark1"] {
        assert!(text.contains(cmd), "missing {cmd} in\n{text}");
    }
    let nested = [("verify", vec!["core"]), ("tortkara", vec!["mdim", "scan", "two-gen"]), ("speciality", vec!["cohn", "counterexample"])];
    for (group, subs) in nested {
        let text = String::from_utf8(bin().args([group, "--help"]).output().unwrap().stdout).unwrap();
        for s in subs {
            assert!(text.contains(s), "missing {group} {s}");
        }
    }
}

#[test]
fn exit_codes() {
    let ok = bin().args(["dim-st", "--multidegree", "1,1,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "3\n");

    let cert = bin().args(["speciality", "counterexample"]).output().unwrap();
    assert_eq!(cert.status.code(), Some(0));

    let syntax = bin().args(["eval", "3/2 x*y"]).output().unwrap();
    assert_eq!(syntax.status.code(), Some(2));
    let err = String::from_utf8(syntax.stderr).unwrap();
    assert!(err.contains("column 5"), "{err}");

    let usage = bin().args(["dim-st"]).output().unwrap();
    assert_ne!(usage.status.code(), Some(0));

    let bad_gen = bin().args(["eval", "bar(x)"]).output().unwrap();
    assert_eq!(bad_gen.status.code(), Some(2));
}

#[test]
fn failing_cohn_check_exits_one() {
    let dir = std::env::temp_dir().join(format!("zinbiel-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cx.txt");
    std::fs::write(&path, "bar(y*y*z)\nbar(y*x*z)\nbar(y*x*y)\n").unwrap();
    let out = bin()
        .args(["speciality", "cohn", "--alphabet", "x,y,z", "--max-total", "4", "--gens"])
        .arg(&path)
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] x.y^2.z"), "{text}");
}

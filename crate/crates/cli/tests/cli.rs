use std::process::{Command, Output};

use ncatalan::text::{parse_poly, poly_from_json};

fn ncatalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncatalan")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ncatalan(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    ncatalan(args).status.code().expect("exit code")
}

#[test]
fn catalan_outputs() {
    assert_eq!(stdout(&["catalan", "--n", "2"]), "x2 + x1*x0^-1*x1");
    assert_eq!(stdout(&["catalan", "--n", "2", "--sigma"]), "x0^2*x1^2 + x0*x1*x0*x1");
    assert_eq!(stdout(&["catalan", "--n", "0"]), "x0");
    assert_eq!(stdout(&["catalan", "--n", "3", "--k", "0"]), "x3");
}

#[test]
fn binomial_outputs() {
    assert_eq!(stdout(&["binom", "--n", "2", "--k", "2", "--kind", "first"]), "x3*x2^-1*x1*x0^-1");
    assert_eq!(stdout(&["binom", "--n", "2", "--k", "5"]), "0");
    assert_eq!(stdout(&["binom", "--n", "3", "--k", "0", "--kind", "second"]), "1");
}

#[test]
fn hankel_quasideterminant() {
    assert_eq!(stdout(&["hankel", "--m", "0", "--n", "1", "--action", "quasidet", "1", "1"]), "x2");
    let factor = stdout(&["--format", "json", "hankel", "--m", "1", "--n", "2", "--action", "factor"]);
    let v: serde_json::Value = serde_json::from_str(&factor).unwrap();
    assert_eq!(v["verified"], serde_json::Value::Bool(true));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--suite", "bar-invariance", "--max-n", "8"]), 0);
    assert_eq!(code(&["verify", "--suite", "no-such-id"]), 2);
    assert_eq!(code(&["verify", "--suite", "bar-invariance", "--max-n", "1000"]), 2);
    assert_eq!(code(&["catalan"]), 2);
    assert_eq!(code(&["catalan", "--n", "2", "--k", "3"]), 2);
}

#[test]
fn verify_json_report_is_sorted_and_parallel_safe() {
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        for cell in v.as_array_mut().unwrap() {
            cell.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    let args = ["--format", "json", "verify", "--suite", "all", "--max-n", "3"];
    let serial = strip(stdout(&[&args[..], &["--jobs", "1"]].concat()));
    let parallel = strip(stdout(&[&args[..], &["--jobs", "4"]].concat()));
    assert_eq!(serial, parallel);
    let ids: Vec<&str> = serial.as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.windows(2).all(|w| w[0] <= w[1]));
    assert!(serial.as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["catalan", "--n", "6"][..],
        &["--format", "json", "hankel", "--m", "0", "--n", "2", "--action", "inverse"][..],
        &["special", "--op", "chi-q", "--object", "tilde", "--n", "5", "--k", "3"][..],
    ] {
        assert_eq!(ncatalan(args).stdout, ncatalan(args).stdout);
    }
}

#[test]
fn json_round_trips_to_text() {
    for n in 0..6 {
        let n = n.to_string();
        let text = stdout(&["catalan", "--n", &n]);
        let json = stdout(&["--format", "json", "catalan", "--n", &n]);
        let from_json = poly_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(from_json, parse_poly(&text).unwrap());
    }
}

#[test]
fn special_maps() {
    assert_eq!(stdout(&["special", "--op", "eps", "--object", "catalan", "--n", "5"]), "42");
    assert_eq!(stdout(&["special", "--op", "pi", "--object", "catalan", "--n", "2"]), "2*x1*x0^-1*x1");
    assert_eq!(stdout(&["special", "--op", "chi-q", "--object", "truncated", "--n", "2", "--k", "2"]), "1 + q");
    assert_eq!(stdout(&["special", "--op", "bar", "--expr", "x1*x0^-1*x2"]), "x2*x0^-1*x1");
}

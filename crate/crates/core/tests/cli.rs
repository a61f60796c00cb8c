use std::io::Write;
use std::process::Command;

use gorenstein_jordan::cli::run;
use tempfile::NamedTempFile;

fn agjt(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("agjt").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const SMALL: &str = "X^3Y + XY^3 + Z^4";

#[test]
fn hilbert_and_jordan() {
    assert_eq!(
        agjt(&["hilbert", SMALL]),
        (0, "1,3,3,3,1\n".into(), String::new())
    );
    let (code, out, _) = agjt(&["jordan", "X^2Y^2 + Z^4", "--ell", "x+y+z"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim()
            .split(',')
            .map(|p| p.parse::<usize>().unwrap())
            .sum::<usize>(),
        12
    );
}

#[test]
fn quartic_example() {
    let f = "X^2Y^2 + Y^2Z^2 + X^2Z^2";
    assert_eq!(agjt(&["hilbert", f]).1, "1,3,6,3,1\n");
    let (_, out, _) = agjt(&["jdt", "X^4 + Y^4", "--ell", "x"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("5_0 1_1 1_2 1_3"));
    assert_eq!(lines.next(), Some("0 0 0 0 1"));
}

#[test]
fn rank_matrix_text_and_json_agree() {
    let (code, text, _) = agjt(&["rank-matrix", "X^2 + Y^2", "--ell", "x"]);
    assert_eq!(code, 0);
    assert_eq!(text, "1 1 1\n0 2 1\n0 0 1\n");
    let (_, json, _) = agjt(&["rank-matrix", "X^2 + Y^2", "--ell", "x", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        v["rank_matrix"],
        serde_json::json!([[1, 1, 1], [0, 2, 1], [0, 0, 1]])
    );
    assert_eq!(v["hilbert"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["jordan_type"], serde_json::json!([3, 1]));
    assert_eq!(
        v["jordan_degree_type"],
        serde_json::json!([{"len": 3, "deg": 0}, {"len": 1, "deg": 1}])
    );
}

#[test]
fn explicit_variables() {
    let (code, out, _) = agjt(&["hilbert", "a^2 + b^2", "--vars", "a,b,c"]);
    assert_eq!((code, out.as_str()), (0, "1,2,1\n"));
    let (code, _, err) = agjt(&["hilbert", "a^2 + w", "--vars", "a,b"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"), "{err}");
}

#[test]
fn codim_two_reconstruction() {
    assert_eq!(
        agjt(&["codim2-jdt", "--jordan-type", "5,3,1", "--socle", "4"]).1,
        "5_0 3_1 1_2\n"
    );
    let (code, _, err) = agjt(&["codim2-jdt", "--jordan-type", "3,3,1,1", "--socle", "2"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn check_rank_matrix_file() {
    let good = file_with("# x on X^2 + Y^2\n1 1 1\n0 2 1\n\n0 0 1\n");
    let (code, out, _) = agjt(&["check-rank-matrix", good.path().to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "pass"));

    let bad = file_with("1 1 1\n0 2 0\n0 0 1\n");
    let (code, _, err) = agjt(&["check-rank-matrix", bad.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("fail"), "{err}");

    let (code, _, _) = agjt(&["check-rank-matrix", "/nonexistent/matrix"]);
    assert_eq!(code, 1);
}

#[test]
fn lefschetz_witnesses() {
    // x kills y and y^2 modulo (xy, x^3 - y^3): Jordan type 4,1,1.
    let (code, out, _) = agjt(&["lefschetz", "X^3 + Y^3", "--ell", "x"]);
    assert_eq!(code, 0);
    assert!(out.contains("jordan type: 4,1,1"), "{out}");
    assert!(out.contains("wlp witness: false"), "{out}");
    let (_, out, _) = agjt(&["lefschetz", "X^3 + Y^3", "--ell", "x+y"]);
    assert!(out.contains("conjugate: 4,2"), "{out}");
    assert!(out.contains("slp witness: true"), "{out}");
}

#[test]
fn realize_from_file() {
    let target = file_with("1 1 1\n0 2 1\n0 0 1\n");
    let path = target.path().to_str().unwrap();
    let (code, out, _) = agjt(&["realize", path, "--vars", "X,Y", "--seed", "3"]);
    assert_eq!(code, 0);
    let (_, again, _) = agjt(&["realize", path, "--vars", "X,Y", "--seed", "3"]);
    assert_eq!(out, again);
    let found = out.trim();
    let (_, m, _) = agjt(&["rank-matrix", found, "--ell", "x", "--vars", "X,Y"]);
    assert_eq!(m, "1 1 1\n0 2 1\n0 0 1\n");

    let invalid = file_with("1 1\n0 2\n");
    let (code, _, err) = agjt(&["realize", invalid.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid target"), "{err}");
}

#[test]
fn collide_pool() {
    let pool = file_with(
        "# degree-5 codim-4 reference pair\n\
         X^4Y + X^2Y^2Z + X Y^3 W + Y^3 Z W ; x\n\
         X^4Y + X^2Y^2Z + X Y Z^3 + Y^4 W ; x\n",
    );
    let (code, out, _) = agjt(&[
        "collide",
        "--pool",
        pool.path().to_str().unwrap(),
        "--vars",
        "X,Y,Z,W",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("#1 ~ #2"), "{out}");

    let single = file_with("X^2 + Y^2\n");
    let (_, out, _) = agjt(&["collide", "--pool", single.path().to_str().unwrap()]);
    assert_eq!(out.trim(), "no collisions among 1 entries");
}

#[test]
fn verify_reference_examples() {
    let (code, out, _) = agjt(&["verify-paper-examples"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with(", 0 failed"), "{out}");
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(agjt(&["frobnicate"]).0, 1);
    assert_eq!(agjt(&["jordan", "X^2"]).0, 1);
    let (code, out, _) = agjt(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("codim2-jdt"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_agjt");
    let ok = Command::new(bin)
        .args(["jordan", SMALL, "--ell", "x"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin).args(["hilbert", "X^"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn documented_examples() {
    let (code, out, _) = agjt(&["jordan", "X^4 + X*Y^2*Z", "--vars", "X,Y,Z", "--ell", "y"]);
    assert_eq!((code, out.as_str()), (0, "3,3,3,3,1\n"));
    let (_, out, _) = agjt(&["jdt", "X^2", "--vars", "X", "--ell", "x"]);
    assert_eq!(out.lines().next(), Some("3_0"));
    let (_, json, _) = agjt(&[
        "jdt",
        "X^4 + X*Y^2*Z",
        "--vars",
        "X,Y,Z",
        "--ell",
        "y",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let s: Vec<String> = v["jordan_degree_type"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| format!("{}_{}", t["len"], t["deg"]))
        .collect();
    assert_eq!(s.join(" "), "3_0 3_1 3_1 3_2 1_2");
}

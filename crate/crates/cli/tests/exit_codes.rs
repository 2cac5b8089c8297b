use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_germs")).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn code(args: &[&str]) -> i32 {
    run(args).2
}

#[test]
fn success_is_zero() {
    let (out, _, c) = run(&["minimal-form", "--m", "36", "--k", "4"]);
    assert_eq!(c, 0);
    assert!(out.contains("(u^36, u^40 + u^42 + u^43)"), "{out}");
    assert!(out.contains("µ = 1372"), "{out}");
}

#[test]
fn parse_errors_are_two() {
    assert_eq!(code(&["exponents", "--branch", "8:u^^2"]), 2);
    assert_eq!(code(&["exponents", "--branch", "8:u v"]), 2);
    assert_eq!(code(&["milnor", "--implicit", "x^2 + w"]), 2);
    assert_eq!(code(&["dpoints", "--germ", "y^2"]), 2);
}

#[test]
fn precondition_violations_are_three() {
    assert_eq!(code(&["minimal-form", "--m", "7", "--k", "3"]), 3);
    assert_eq!(code(&["minimal-form", "--m", "36", "--k", "6"]), 3);
    assert_eq!(code(&["exponents", "--branch", "4:u^6"]), 3);
    assert_eq!(code(&["crosscaps", "--germ", "y^4|y^6"]), 3);
    assert_eq!(code(&["milnor", "--curve", "/nonexistent/curve.txt"]), 3);
    assert_eq!(code(&["counterexample", "--germ", "y^2|y^3+x*y"]), 3);
}

#[test]
fn unhandled_case_is_four() {
    // gcd(m, n) = 3: no slice formula, so no counterexample construction
    let (_, err, c) = run(&["counterexample", "--germ", "y^3|y^6+x*y^4"]);
    assert_eq!(c, 4, "{err}");
    assert!(err.contains("UnhandledCase"), "{err}");
}

#[test]
fn errors_go_to_stderr_in_text_mode() {
    let (out, err, _) = run(&["exponents", "--branch", "8:u^^2"]);
    assert!(out.is_empty());
    assert!(err.starts_with("error[SyntaxError]"), "{err}");
}

#[test]
fn curve_files() {
    let dir = std::env::temp_dir().join(format!("germs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# cusp and its swap\n2:u^3\n\nswap 2:u^3").unwrap();
    let p = path.to_str().unwrap();
    let (out, _, c) = run(&["milnor", "--curve", p, "--oracle", "--json"]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // two transversal cusps: 2 + 2 + 2·4 - 1
    assert_eq!(v["result"]["mu"], 11);
    assert_eq!(v["result"]["oracle_mu"], 11);
    let (out, _, _) = run(&["check-minimal", "--curve", p]);
    assert!(out.contains("minimal: true"), "{out}");
    std::fs::write(&path, "2:u^3\n3:u^^4\n").unwrap();
    let (_, _, c) = run(&["check-minimal", "--curve", p, "--json"]);
    assert_eq!(c, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parse_error_positions_in_json() {
    let (out, _, _) = run(&["--json", "dpoints", "--germ", "y^2|y^3+2x"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "SyntaxError");
    assert_eq!(v["error"]["line"], 1);
    assert_eq!(v["error"]["col"], 10);
}

use std::process::{Command, Output};

fn homweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homweyl")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = homweyl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_goldens() {
    assert_eq!(stdout(&["eval", "--k", "1", "x * y"]), "y x + x + 1\n");
    assert_eq!(stdout(&["eval", "--k", "0", "x . y - y . x"]), "1\n");
    assert_eq!(stdout(&["eval", "--k", "3", "x . y - y . x"]), "1\n");
    assert_eq!(stdout(&["eval", "--k", "-1/2", "1 * y"]), "y - 1/2\n");
    assert_eq!(stdout(&["eval", "--k", "1", "-1/2 y^2"]), "-1/2 y^2\n");
    assert_eq!(stdout(&["eval", "--k", "0", "(y.x)^2"]), "y^2 x^2 + y x\n");
    assert_eq!(stdout(&["eval", "--k", "1", "(y.x) *^ 2"]), "y^2 x^2 + 2 y x^2 + y x + x^2 + x\n");
}

#[test]
fn eval_json() {
    assert_eq!(
        stdout(&["eval", "--k", "1/2", "-1/2 y^2 + 3 x", "--json"]),
        "{\"terms\":[{\"y\":2,\"x\":0,\"coeff\":\"-1/2\"},{\"y\":0,\"x\":1,\"coeff\":\"3\"}]}\n"
    );
    assert_eq!(stdout(&["eval", "--k", "1", "0", "--json"]), "{\"terms\":[]}\n");
}

#[test]
fn brackets_and_associators() {
    assert_eq!(stdout(&["comm", "--k", "-1", "x", "y"]), "1\n");
    assert_eq!(stdout(&["comm", "--k", "2", "x", "y^2"]), "2 y + 4\n");
    assert_eq!(stdout(&["assoc", "--k", "1", "1", "y", "y"]), "-y - 2\n");
    assert_eq!(stdout(&["assoc", "--k", "2", "y.x", "y.x", "y.x"]), "4 y x^2 + 16 x^2 + 2 x\n");
    assert_eq!(stdout(&["assoc", "--k", "0", "y.x", "y.x", "y.x"]), "0\n");
}

#[test]
fn derivation_checks() {
    assert_eq!(stdout(&["check-derivation", "--k", "1", "--c", "3", "--p", "x^2"]), "PASS\n");
    let out = homweyl(&["check-derivation", "--k", "1", "--c", "1", "--p", "y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("polynomial in x alone"));
}

#[test]
fn morphism_checks() {
    assert_eq!(stdout(&["check-morphism", "--k", "1", "--l", "2", "--fx", "2 x + 1", "--fy", "1/2 y + x^3"]), "PASS\n");
    let out = homweyl(&["check-morphism", "--k", "1", "--l", "1", "--fx", "x", "--fy", "y.x + y"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "FAIL clause (a) [f(x), f(y)] = 1: inputs [x] [y x + y] expected [1] actual [x + 1]\n"
    );
    // x -> x, y -> y from A_1^1 to A_1^2 fails only the shift clause
    let out = homweyl(&["check-morphism", "--k", "1", "--l", "2", "--fx", "x", "--fy", "y"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("FAIL clause (c)"));
}

#[test]
fn deform_check_lines() {
    let got = stdout(&["deform-check", "--order", "2", "--triple", "y.x; y^2; x"]);
    assert_eq!(got, "identity hom-associativity\norder 2 (all terms vanish beyond t^3)\nt^0 PASS\nt^1 PASS\nt^2 PASS\nPASS\n");
    let got = stdout(&["deform-check", "--order", "1", "--triple", "x;y;x", "--jacobi"]);
    assert!(got.starts_with("identity hom-Jacobi\n"));
    assert!(got.ends_with("PASS\n"));
    let out = homweyl(&["deform-check", "--order", "2", "--triple", "x;y"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let out = homweyl(&["eval", "--k", "1", "x * z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"));
    let out = homweyl(&["eval", "--k", "1", "x ^ -1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = homweyl(&["eval", "--k", "1/0", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "commuter", "--suite", "hom-assoc", "--bound", "2", "--trials", "20", "--seed", "9"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert!(a.starts_with("PASS commuter"));
    assert!(a.ends_with("2 of 2 suites passed\n"));
    let json = stdout(&["verify", "--suite", "power-assoc", "--json", "--trials", "5"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite_name"], "power-assoc");
    let out = homweyl(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

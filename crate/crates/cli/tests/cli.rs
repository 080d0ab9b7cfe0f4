use std::process::{Command, Output};

use serde_json::Value;

fn autoform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autoform")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = autoform(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = autoform(&all);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).expect("json output"))
}

#[test]
fn classify_rosenlicht() {
    assert_eq!(stdout(&["classify", "--ode", "u' = u^3-u^2"]), "general type; new (zero-divisor degree 1)\n");
}

#[test]
fn classify_types() {
    assert_eq!(stdout(&["classify", "--form", "dx"]), "exact; v = x\n");
    assert_eq!(stdout(&["classify", "--form", "dx/(3*x)"]), "exponential; c = 3, f = x\n");
}

#[test]
fn solve_regular_point() {
    let out = stdout(&["solve", "--ode", "u' = u^3-u^2", "--at", "2", "--terms", "2"]);
    assert_eq!(out, "x(z) = 2 + 4*z + 16*z^2 + O(z^3)\n");
}

#[test]
fn solve_at_infinity_is_ramified() {
    let (code, v) = json(&["solve", "--ode", "u' = u^5", "--at", "inf", "--terms", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["solutions"]["e"], 4);
    assert_eq!(v["solutions"]["chart"], "1/x");
    assert_eq!(v["solutions"]["coefficients"].as_array().unwrap().len(), 1);
}

#[test]
fn decompose_rosenlicht() {
    let out = stdout(&["decompose", "--form", "(1/(x^3-x^2)) dx"]);
    assert_eq!(out, "v = 1/x\n1 · d((x - 1)/x)/((x - 1)/x), divisor [x - 1] - [x]\n");
}

#[test]
fn decompose_sqrt2_example() {
    let form = "(1/x + sqrt2 * (6*x^5)/(x^6-1)) dx + d(x^3 + x^-6)";
    let (code, v) = json(&["decompose", "--alg", "a^2-2", "--sym", "sqrt2=a", "--form", form]);
    assert_eq!(code, 0);
    assert_eq!(v["decomposition"]["v"], "(x^9 + 1)/x^6");
    assert_eq!(v["decomposition"]["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["field"]["polynomial"], "a^2 - 2");
}

#[test]
fn pullback_along_cube() {
    let out = stdout(&["pullback", "--form", "3*x^2 dx/(x^6 - 1)", "--via", "x^3"]);
    assert_eq!(out, "pullback along x^3: dx/(x^2 - 1)\n");
}

#[test]
fn isomorphism_is_translation() {
    let out = stdout(&["isom", "--form", "dx/((x+1)^3-(x+1)^2)", "--form", "dx/(x^3-x^2)"]);
    assert_eq!(out, "x -> x + 1\n");
}

#[test]
fn divisor_and_residues() {
    let (_, v) = json(&["divisor", "--form", "dx/(x^3-x^2)"]);
    let d = v["divisor"].as_array().unwrap();
    assert_eq!(d.len(), 3);
    assert!(d.iter().any(|e| e["point"] == "inf" && e["mult"] == 1));
    let (_, v) = json(&["residues", "--form", "dx/(x^3-x^2)"]);
    let r = v["residues"].as_array().unwrap();
    assert!(r.iter().any(|e| e["point"] == "x" && e["residue"] == "-1"));
    assert!(r.iter().any(|e| e["point"] == "x - 1" && e["residue"] == "1"));
}

#[test]
fn local_normal_form() {
    let out = stdout(&["local", "--ode", "u' = 2*u + u^2", "--at", "0", "--terms", "2"]);
    assert_eq!(out, "order 1, case I: D(T) = 2*T\nT = t - 1/2*t^2 + 1/4*t^3 + O(t^4)\n");
}

#[test]
fn report_screens_isomorphisms() {
    let (code, v) = json(&["report", "--ode", "u' = u^3-u^2", "--ode", "u' = (u+1)^3-(u+1)^2", "--ode", "u' = 3*u"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    assert_eq!(v["reports"][0]["solutions"]["ramification_exponent"], 2);
    assert_eq!(v["isomorphisms"][0]["maps"][0]["map"], "x - 1");
}

#[test]
fn json_is_deterministic() {
    let args = ["report", "--ode", "u' = u^3-u^2", "--ode", "u' = u^5"];
    assert_eq!(json(&args), json(&args));
}

#[test]
fn exit_codes_and_error_codes() {
    let cases: [(&[&str], i32, &str); 7] = [
        (&["classify", "--form", "x^(1/2) dx"], 2, "non_integer_exponent"),
        (&["classify", "--form", "y dx"], 2, "undeclared_symbol"),
        (&["classify", "--form", "x +"], 2, "syntax_error"),
        (&["classify", "--form", "0 dx"], 3, "zero_form"),
        (&["isom", "--form", "dx", "--form", "dx"], 4, "not_general_type"),
        (&["classify", "--alg", "a^2-1", "--form", "dx"], 4, "reducible"),
        (&["pullback", "--form", "dx/x", "--via", "x+1"], 4, "degree_too_small"),
    ];
    let mut seen = Vec::new();
    for (args, code, name) in cases {
        let (status, v) = json(args);
        assert_eq!(status, code, "{args:?}");
        assert_eq!(v["errors"][0]["code"], name, "{args:?}");
        seen.push(name);
    }
    seen.dedup();
    assert_eq!(seen.len(), 7);
}

#[test]
fn form_and_ode_are_exclusive() {
    let out = autoform(&["classify", "--form", "dx", "--ode", "u' = 1"]);
    assert!(!out.status.success());
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qfourier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfourier"))
        .args(args)
        .env_remove("QFOURIER_BACKEND")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qfourier"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn padic_expressions() {
    let o = qfourier(&["padic", "norm", "--prime", "5", "1*5^-2+3"]);
    assert_eq!(stdout(&o).trim(), "25");
    let o = qfourier(&["padic", "char", "--prime", "2", "1*2^-1", "1"]);
    assert_eq!(stdout(&o).trim(), "zeta(2)^1");
    let o = qfourier(&["padic", "integrate", "--prime", "3", "--ball", "3^2*Zp"]);
    assert_eq!(stdout(&o).trim(), "1/9");
    let o = qfourier(&["padic", "eval", "--prime", "2", "1 + 1*2^1"]);
    assert!(stdout(&o).starts_with("1 + 1*2^1 = 3"));
}

#[test]
fn padic_parse_errors_exit_2() {
    let o = qfourier(&["padic", "eval", "--prime", "5", "7*5^0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qfourier(&["padic", "norm", "--prime", "5", "1*5^-2 +* 3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn padic_transform_of_subgroup_indicator() {
    let o = qfourier(&["fourier", "--padic", "--prime", "5", "--ball", "5^1*Zp"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["p"], 5);
    assert_eq!(v["level"], -1);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["center"], "0");
    // 5⁻¹ on 5⁻¹ℤ₅
    let integral = with_stdin(&["padic", "integrate"], &out);
    assert_eq!(stdout(&integral).trim(), "1");

    // round trip through the written file
    let back = with_stdin(&["fourier", "--inverse"], &out);
    assert!(back.status.success());
    let v: Value = json(&back);
    assert_eq!(v["level"], 1);
    assert_eq!(v["cells"].as_array().unwrap().len(), 1);
}

#[test]
fn finite_fourier_round_trip_through_pipe() {
    let o = qfourier(&["fourier", "--builtin", "Z2", "--element", "[1,0]"]);
    assert!(o.status.success());
    let back = with_stdin(&["fourier", "--inverse"], &stdout(&o));
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
    let v = json(&back);
    assert_eq!(v["text"], "[1, 0]");
    assert_eq!(v["kind"], "element");
}

#[test]
fn transform_kind_mismatch_exits_3() {
    let o = qfourier(&["fourier", "--builtin", "Z3", "--element", "[1,2,0]"]);
    // feeding a functional to the forward transform
    let again = with_stdin(&["fourier"], &stdout(&o));
    assert_eq!(again.status.code(), Some(3));
    let wrong_dim = qfourier(&["fourier", "--builtin", "Z3", "--element", "[1,2]"]);
    assert_eq!(wrong_dim.status.code(), Some(3));
}

#[test]
fn laurent_pair() {
    let o = qfourier(&["fourier", "--pair", "laurent", "--element", "e_3"]);
    assert_eq!(stdout(&o).trim(), "delta_3");
    let o = qfourier(&["fourier", "--pair", "laurent", "--inverse", "--element", "delta_-2"]);
    assert_eq!(stdout(&o).trim(), "e_-2");
}

#[test]
fn dual_of_s3_group_algebra_is_commutative() {
    let o = qfourier(&["dual", "--builtin", "S3", "--side", "group-algebra"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["dual"]["dim"], 6);
    // every product of basis vectors is diagonal: F(λ_g) F(λ_h) = [g=h] F(λ_g)
    for t in v["dual"]["mult"].as_array().unwrap() {
        assert_eq!(t[0], t[1]);
        assert_eq!(t[1], t[2]);
    }
    assert_eq!(v["pairing"].as_array().unwrap().len(), 6);
}

#[test]
fn dual_twice_reproduces_the_input() {
    let once = qfourier(&["dual", "--builtin", "Z2", "--side", "function-algebra"]);
    let f = write_temp(&stdout(&once));
    let twice = qfourier(&["dual", "--input", f.path().to_str().unwrap()]);
    assert!(twice.status.success());
    let v = json(&twice);
    // structure tensors of K(ℤ₂) in the basis δ_0, δ_1
    let expected = {
        use qfourier::fixtures::{function_algebra, FiniteGroupTable};
        use qfourier::quantum::QuantumGroupFile;
        let a = function_algebra::<qfourier::Cyclotomic>(&FiniteGroupTable::builtin("Z2").unwrap());
        serde_json::to_value(QuantumGroupFile::from(&a)).unwrap()
    };
    for key in ["mult", "comult", "counit", "antipode", "unit", "phi", "psi"] {
        assert_eq!(v["dual"][key], expected[key], "{key}");
    }
}

#[test]
fn malformed_file_exits_2_with_position() {
    let f = write_temp("{\"dim\": 2, \"labels\": [\"a\",");
    let o = qfourier(&["dual", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains(":1:"), "{err}");
}

fn corrupted_z3() -> String {
    use qfourier::fixtures::{function_algebra, FiniteGroupTable};
    use qfourier::quantum::QuantumGroupFile;
    let a = function_algebra::<qfourier::Cyclotomic>(&FiniteGroupTable::builtin("Z3").unwrap());
    let mut file = QuantumGroupFile::from(&a);
    file.mult.push((0, 1, 2, qfourier::Cyclotomic::integer(1)));
    serde_json::to_string(&file).unwrap()
}

#[test]
fn dual_rejects_non_quantum_groups_with_exit_3() {
    let f = write_temp(&corrupted_z3());
    let o = qfourier(&["dual", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    // failing records are written
    let first = stdout(&o).lines().next().unwrap().to_string();
    let rec: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(rec["status"], "fail");
}

#[test]
fn check_on_corrupted_file_fails_with_witness() {
    let f = write_temp(&corrupted_z3());
    let o = qfourier(&["check", "--suite", "axioms", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let failed: Vec<&Value> = lines.iter().filter(|r| r["status"] == "fail").collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|r| r["witness"].is_string()));
    let summary = &lines.last().unwrap()["summary"];
    assert!(summary["failed"].as_u64().unwrap() > 0);
}

#[test]
fn check_is_deterministic_and_summarised() {
    let args = ["check", "--suite", "all", "--seed", "42"];
    let a = qfourier(&args);
    let b = qfourier(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let last: Value = serde_json::from_str(stdout(&a).lines().last().unwrap()).unwrap();
    let s = &last["summary"];
    assert_eq!(s["seed"], 42);
    assert_eq!(s["backend"], "exact");
    assert_eq!(s["failed"], 0);
    let total = s["total"].as_u64().unwrap();
    assert_eq!(total as usize, stdout(&a).lines().count() - 1);
}

#[test]
fn check_padic_suite_passes() {
    let start = std::time::Instant::now();
    let o = qfourier(&["check", "--suite", "padic", "--prime", "2,3,5,7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn backend_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qfourier"))
        .args(["check", "--suite", "inversion", "--samples", "3"])
        .env("QFOURIER_BACKEND", "float")
        .output()
        .unwrap();
    assert!(o.status.success());
    let last: Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["backend"], "float");
    let bad = Command::new(env!("CARGO_BIN_EXE_qfourier"))
        .args(["check", "--suite", "inversion"])
        .env("QFOURIER_BACKEND", "quantum")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn timings_are_opt_in() {
    let o = qfourier(&["check", "--suite", "convolution"]);
    assert!(!stdout(&o).contains("\"elapsed\""));
    let o = qfourier(&["check", "--suite", "convolution", "--timings"]);
    assert!(stdout(&o).contains("\"elapsed\""));
}

#[test]
fn written_files_are_readable() {
    // a quantum group written by `dual` and a Schwartz file written by
    // `fourier` are accepted back
    let d = qfourier(&["dual", "--builtin", "sweedler"]);
    let f = write_temp(&stdout(&d));
    let o = qfourier(&["check", "--suite", "axioms", "--input", f.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let t = qfourier(&["fourier", "--padic", "--prime", "2", "--ball", "1*2^-1 + Zp"]);
    let again = with_stdin(&["fourier"], &stdout(&t));
    assert!(again.status.success());
}

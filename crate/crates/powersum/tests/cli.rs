//! End-to-end checks of the installed binary: golden stdout, exit codes,
//! environment overrides and JSON schemas.

use std::process::{Command, Output};

use powersum::cli::{BenchReport, EvalJson, GenfunCmdJson};
use powersum::closedform::FormulaJson;
use powersum::genmatrix::MatrixJson;

fn cli() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_powersum"));
    cmd.env_remove("POWERSUM_MAX_ORDER_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    cli().args(args).output().expect("binary should run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout should be UTF-8")
}

#[test]
fn formula_text_goldens() {
    let out = run(&["formula", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "n^5/5 + n^4/2 + n^3/3 - n/30\n");

    assert_eq!(stdout_of(&run(&["formula", "0"])), "n\n");
    assert_eq!(stdout_of(&run(&["formula", "2"])), "n^3/3 + n^2/2 + n/6\n");
    assert_eq!(
        stdout_of(&run(&["formula", "12"])),
        "n^13/13 + n^12/2 + n^11 - 11n^9/6 + 22n^7/7 - 33n^5/10 + 5n^3/3 - 691n/2730\n"
    );
}

#[test]
fn formula_latex_golden() {
    let out = run(&["formula", "12", "--format", "latex"]);
    assert_eq!(
        stdout_of(&out),
        "\\frac{n^{13}}{13} + \\frac{n^{12}}{2} + n^{11} - \\frac{11 n^{9}}{6} + \
         \\frac{22 n^{7}}{7} - \\frac{33 n^{5}}{10} + \\frac{5 n^{3}}{3} - \\frac{691 n}{2730}\n"
    );
}

#[test]
fn formula_json_round_trips() {
    let out = run(&["formula", "4", "--format", "json"]);
    let text = stdout_of(&out);
    let parsed: FormulaJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.power, 4);
    assert_eq!(parsed.coefficients.len(), 4); // zero terms omitted
    assert_eq!(parsed.coefficients[0].degree, 1);
    assert_eq!(parsed.coefficients[0].num, "-1");
    assert_eq!(parsed.coefficients[0].den, "30");
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
    assert_eq!(reserialized, text);
}

#[test]
fn eval_golden_values() {
    assert_eq!(stdout_of(&run(&["eval", "4", "3"])), "98\n");
    assert_eq!(stdout_of(&run(&["eval", "1", "1000000"])), "500000500000\n");
    assert_eq!(stdout_of(&run(&["eval", "12", "2"])), "4097\n");
    assert_eq!(stdout_of(&run(&["eval", "0", "7"])), "7\n");

    let verified = run(&["eval", "4", "3", "--verify"]);
    assert!(verified.status.success());
    assert_eq!(stdout_of(&verified), "98\nverify: match\n");

    let skipped = run(&["eval", "2", "2000000", "--verify"]);
    assert!(skipped.status.success());
    assert!(stdout_of(&skipped).contains("verify: skipped"));
}

#[test]
fn eval_json_schema() {
    let out = run(&["eval", "4", "3", "--verify", "--format", "json"]);
    let text = stdout_of(&out);
    let parsed: EvalJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.power, 4);
    assert_eq!(parsed.n, "3");
    assert_eq!(parsed.value, "98");
    assert_eq!(parsed.verification.as_deref(), Some("match"));
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
    assert_eq!(reserialized, text);
}

#[test]
fn matrix_text_goldens() {
    assert_eq!(stdout_of(&run(&["matrix", "1"])), "1\n");
    assert_eq!(
        stdout_of(&run(&["matrix", "4"])),
        " 0  0  0  1\n 0  0  1  6\n 0  1  3 11\n 1  1  2  6\n"
    );
    assert_eq!(
        stdout_of(&run(&["matrix", "4", "--inverse"])),
        "-1  1 -1  1\n 7 -3  1  0\n-6  1  0  0\n 1  0  0  0\n"
    );
}

#[test]
fn matrix_json_round_trips() {
    let out = run(&["matrix", "4", "--format", "json"]);
    let text = stdout_of(&out);
    let parsed: MatrixJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.order, 4);
    assert_eq!(parsed.kind, "perm");
    assert_eq!(parsed.columns[0], vec!["1"]);
    assert_eq!(parsed.columns[3], vec!["1", "6", "11", "6"]);
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
    assert_eq!(reserialized, text);

    let inv = run(&["matrix", "4", "--inverse", "--format", "json"]);
    let parsed: MatrixJson = serde_json::from_str(&stdout_of(&inv)).unwrap();
    assert_eq!(parsed.kind, "inv");
    assert_eq!(parsed.columns[0], vec!["-1", "7", "-6", "1"]);
}

#[test]
fn genfun_goldens() {
    assert_eq!(
        stdout_of(&run(&["genfun", "4"])),
        "G{k^4} = x(1+11x+11x^2+x^3)/(1-x)^5\nG{sum k^4} = x(1+11x+11x^2+x^3)/(1-x)^6\n"
    );
    assert_eq!(
        stdout_of(&run(&["genfun", "1"])),
        "G{k^1} = x/(1-x)^2\nG{sum k^1} = x/(1-x)^3\n"
    );

    let out = run(&["genfun", "12", "--format", "json"]);
    let text = stdout_of(&out);
    let parsed: GenfunCmdJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.power, 12);
    assert_eq!(parsed.power_genfun.pole_order, 13);
    assert_eq!(parsed.prefix_genfun.pole_order, 14);
    assert_eq!(parsed.power_genfun.numerator[1], "4083");
    assert_eq!(parsed.power_genfun.numerator, parsed.prefix_genfun.numerator);
    assert_eq!(parsed.power_genfun.form, "x*Q(x)/(1-x)^p");
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
    assert_eq!(reserialized, text);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["genfun", "0"]).status.code(), Some(1));
    assert_eq!(run(&["matrix", "0"]).status.code(), Some(1));
    assert_eq!(run(&["bench", "1", "10", "--repeats", "0"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "2", "-5"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "2", "xyz"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["formula", "4", "--format", "yaml"]).status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn order_cap_guards_exit_two() {
    let flag = run(&["matrix", "9", "--max-order-cap", "8"]);
    assert_eq!(flag.status.code(), Some(2));
    let stderr = String::from_utf8(flag.stderr).unwrap();
    assert!(stderr.contains("POWERSUM_MAX_ORDER_CAP"), "hint missing: {stderr}");

    let env = cli()
        .args(["matrix", "9"])
        .env("POWERSUM_MAX_ORDER_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));

    // the flag wins over the environment
    let overridden = cli()
        .args(["matrix", "9", "--max-order-cap", "16"])
        .env("POWERSUM_MAX_ORDER_CAP", "8")
        .output()
        .unwrap();
    assert!(overridden.status.success());

    let formula = run(&["formula", "9", "--max-order-cap", "8"]);
    assert_eq!(formula.status.code(), Some(2));
}

#[test]
fn bench_reports_agree_and_are_stable_modulo_timing() {
    let out = run(&["bench", "2", "100", "--repeats", "2"]);
    assert!(out.status.success());
    let reports: Vec<BenchReport> = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(reports.len(), 3);
    for report in &reports {
        assert_eq!(report.power, 2);
        assert_eq!(report.n, "100");
        assert_eq!(report.digest.head, "338350");
        assert_eq!(report.digest.digits, 6);
        assert_eq!(report.timing.repeats, 2);
    }
    assert_eq!(reports[0].method, "matrix-pipeline");
    assert_eq!(reports[1].method, "bernoulli");
    assert_eq!(reports[2].method, "naive-eval");

    // determinism modulo the timing key
    let strip = |raw: &str| -> serde_json::Value {
        let mut value: serde_json::Value = serde_json::from_str(raw).unwrap();
        for entry in value.as_array_mut().unwrap() {
            entry.as_object_mut().unwrap().remove("timing");
        }
        value
    };
    let second = run(&["bench", "2", "100", "--repeats", "2"]);
    assert_eq!(strip(&stdout_of(&out)), strip(&stdout_of(&second)));

    let subset = run(&["bench", "3", "50", "--methods", "bernoulli,naive-eval", "--repeats", "1"]);
    let reports: Vec<BenchReport> = serde_json::from_str(&stdout_of(&subset)).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].method, "bernoulli");

    // the report itself round-trips
    let text = stdout_of(&subset);
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&reports).unwrap());
    assert_eq!(reserialized, text);
}

#[test]
fn bench_large_power_all_methods_agree() {
    let out = run(&["bench", "50", "1000000", "--repeats", "1"]);
    assert!(out.status.success());
    let reports: Vec<BenchReport> = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(reports.len(), 3);
    let first = &reports[0].digest;
    assert_eq!(first.digits, 305);
    for report in &reports {
        assert_eq!(&report.digest, first, "{}", report.method);
    }
}

#[test]
fn selftest_small_bound_passes() {
    let out = run(&["selftest", "--max-power", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("ok inverse-identity\n"));
    assert!(text.contains("skip golden-formula-t12"));
    assert!(text.lines().last().unwrap().contains("0 failed"));
    assert_eq!(run(&["selftest", "--max-power", "0"]).status.code(), Some(1));
}

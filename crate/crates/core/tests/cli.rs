use std::process::Command;

use serde_json::Value;

fn dseries(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dseries"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn sl2_value_from_the_command_line() {
    let (code, out, _) = dseries(&[
        "dschar",
        "eval",
        "--datum",
        "sl2R",
        "--lambda",
        "2",
        "--theta",
        "1.5707963",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["value"]["re"].as_f64().unwrap().abs() < 1e-6);
    assert!((v["value"]["im"].as_f64().unwrap() + 0.5).abs() < 1e-6);
}

#[test]
fn singular_element_exits_with_usage_code() {
    let (code, out, err) = dseries(&[
        "dschar", "eval", "--datum", "sl2R", "--lambda", "2", "--theta", "0",
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("singular"));
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["verify", "--catalog", "--seed", "3"];
    let first = dseries(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, dseries(&args));
    let args = ["char", "weyl", "--datum", "so5", "--highest", "2,1"];
    assert_eq!(dseries(&args), dseries(&args));
}

#[test]
fn every_subcommand_emits_json() {
    let cases: &[&[&str]] = &[
        &["datum", "--datum", "sp4R"],
        &["weyl", "--datum", "su3"],
        &["weyl", "--datum", "su21", "--compact"],
        &["char", "freudenthal", "--datum", "su3", "--highest", "2,0"],
        &[
            "char",
            "eval",
            "--datum",
            "su2",
            "--highest",
            "1",
            "--theta",
            "1.0471975511965976",
        ],
        &["ktype", "--datum", "sp4R", "--lambda", "1,1"],
        &["spin", "--datum", "su21"],
        &[
            "fixedpoint",
            "index",
            "--datum",
            "sp4R",
            "--lambda",
            "2,1",
            "--theta",
            "0.5,1.7",
        ],
        &[
            "fixedpoint",
            "assembly",
            "--datum",
            "su3",
            "--highest",
            "1,1",
            "--theta",
            "0.8975979010256552,0.5711986642890533",
        ],
        &[
            "sl2",
            "coefficient",
            "--n",
            "3",
            "--t",
            "0.5",
            "--phi",
            "0.2",
        ],
        &["sl2", "formal-degree", "--n", "2"],
        &[
            "sl2",
            "orbital",
            "--n",
            "2",
            "--theta",
            "1.5707963267948966",
        ],
        &["sl2", "fgoi", "--mode", "elliptic-fgoi"],
        &["sl2", "fgoi", "--mode", "gaussian-l1"],
    ];
    for args in cases {
        let (code, out, err) = dseries(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        serde_json::from_str::<Value>(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn grid_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_dseries"))
        .args(["sl2", "formal-degree", "--n", "2"])
        .env("DSERIES_GRID", "320,32,15,0.99999")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["grid"]["radial_nodes"], 320);
    assert_eq!(v["grid"]["t_max"], 15.0);
    let bad = Command::new(env!("CARGO_BIN_EXE_dseries"))
        .args(["sl2", "formal-degree", "--n", "2"])
        .env("DSERIES_GRID", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verification_failure_exits_one_with_json() {
    let (code, out, _) = dseries(&["sl2", "fgoi", "--mode", "gaussian-l1", "--t-max", "8"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["converged"], false);
}

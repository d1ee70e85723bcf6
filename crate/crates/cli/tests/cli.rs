use std::process::{Command, Output};

use hadamard_core::bloch::trajectory;
use hadamard_core::ensembles::FamilyCurve;

fn hadamard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadamard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn rows(text: &str) -> Vec<Vec<f64>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| rec.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn gates_show_hadamard_json() {
    let o = hadamard(&["gates-show", "hadamard", "--format", "json"]);
    assert!(o.status.success());
    let e = r#"{"re":0.7071067811865476,"im":0.0}"#;
    let n = r#"{"re":-0.7071067811865476,"im":0.0}"#;
    assert_eq!(stdout(&o), format!("[[{e},{e}],[{e},{n}]]\n"));
}

#[test]
fn gates_show_csv() {
    let o = hadamard(&["gates-show", "symmetric-u", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("row,col,re,im\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn check_unitarity_reports_pass() {
    for name in [
        "hadamard",
        "polar:1.1",
        "equatorial",
        "symmetric-u",
        "unequal:0.6,0,0,0.8",
        "unequal-polar:0.6,0.8,2",
        "unequal-equatorial:0,0.6,0.8,0",
    ] {
        let o = hadamard(&["check-unitarity", name]);
        assert!(o.status.success(), "{name}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["pass"], true, "{name}");
        assert!(v["residual"].as_f64().unwrap() < 1e-12);
    }
}

#[test]
fn verify_emits_residual_report() {
    let o = hadamard(&[
        "verify",
        "--gate",
        "hadamard",
        "--template",
        "hadamard",
        "--family",
        "theorem1:0.5,+,A",
        "--tol",
        "1e-12",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.starts_with("{\"row1\":") && text.ends_with("\"pass\":true}\n"),
        "{text}"
    );

    let o = hadamard(&[
        "verify",
        "--gate",
        "polar:0",
        "--template",
        "hadamard",
        "--family",
        "theorem1:0.3,+,A",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"pass\":false"));
}

#[test]
fn trajectory_csv_rows_are_unit_and_exact() {
    let o = hadamard(&[
        "trajectory",
        "--family",
        "theorem1:+,A",
        "--samples",
        "5",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("param,x,y,z,theta,phi,gamma\n"));
    assert!(!text.contains('\r'));
    let parsed = rows(&text);
    assert_eq!(parsed.len(), 5);
    let family: FamilyCurve = "theorem1:+,A".parse().unwrap();
    for (row, want) in parsed.iter().zip(trajectory(&family, 5).unwrap()) {
        let (x, y, z) = (row[1], row[2], row[3]);
        assert!((x * x + y * y + z * z - 1.0).abs() < 1e-12);
        let p = want.point;
        for (got, exact) in row
            .iter()
            .zip([want.param, p.x, p.y, p.z, p.theta, p.phi, p.gamma])
        {
            let scale = exact.abs().max(f64::MIN_POSITIVE);
            assert!((got - exact).abs() / scale < 1e-15 || got == &exact);
        }
    }
}

#[test]
fn trajectory_json_is_an_array_of_records() {
    let o = hadamard(&[
        "trajectory",
        "--family",
        "equatorial",
        "--samples",
        "8",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 8);
    for rec in arr {
        let keys: Vec<&str> = rec
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        for k in ["param", "x", "y", "z", "theta", "phi", "gamma"] {
            assert!(keys.contains(&k));
        }
        assert!(rec["z"].as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn intersect_finds_equator_crossings() {
    let o = hadamard(&[
        "intersect",
        "--family",
        "theorem3:+,A",
        "--circle",
        "equatorial",
        "--tol",
        "1e-12",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let hits = v.as_array().unwrap();
    assert_eq!(hits.len(), 2);
    for h in hits {
        assert!(
            (h["param"].as_f64().unwrap().abs() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9
        );
        assert!(h["z"].as_f64().unwrap().abs() < 1e-12);
        assert!(h["a"]["re"].as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn derive_is_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "1", "4", "0"] {
        let path = dir.path().join(format!("d{}.csv", outputs.len()));
        let o = hadamard(&[
            "derive",
            "--gate",
            "polar:0",
            "--template",
            "polar",
            "--convention",
            "A",
            "--grid",
            "17,32,32",
            "--tol",
            "1e-6",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(outputs.remove(0)).unwrap();
    assert!(text.starts_with("theta,phi,gamma,residual,x,y,z\n"));
    assert!(text.ends_with('\n') && !text.contains('\r'));
    assert!(rows(&text).len() > 1);
}

#[test]
fn derive_empty_family() {
    let args = [
        "derive",
        "--gate",
        "hadamard",
        "--template",
        "equatorial",
        "--grid",
        "2,1,1",
        "--tol",
        "1e-9",
    ];
    let o = hadamard(&args);
    assert_eq!(stdout(&o), "theta,phi,gamma,residual,x,y,z\n");
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&hadamard(&json_args))).unwrap();
    assert_eq!(v["empty"], true);
}

#[test]
fn unknown_names_exit_2_with_one_line() {
    for args in [
        &["gates-show", "fourier"][..],
        &[
            "verify",
            "--gate",
            "hadamard",
            "--template",
            "nope",
            "--family",
            "theorem1:0,+,A",
        ],
        &["trajectory", "--family", "spiral", "--samples", "4"],
        &["intersect", "--family", "equatorial", "--circle", "tropic"],
    ] {
        let o = hadamard(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{}", stderr(&o));
    }
    let err = stderr(&hadamard(&["gates-show", "fourier"]));
    for name in [
        "hadamard",
        "polar:PHI",
        "equatorial",
        "symmetric-u",
        "unequal:",
    ] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn domain_errors_exit_1() {
    let o = hadamard(&[
        "verify",
        "--gate",
        "hadamard",
        "--template",
        "hadamard",
        "--family",
        "theorem1:0.8,+,A",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("alpha"));

    let o = hadamard(&["gates-show", "unequal:0.6,0,0.6,0"]);
    assert_eq!(o.status.code(), Some(1));

    let o = hadamard(&[
        "derive",
        "--gate",
        "hadamard",
        "--template",
        "hadamard",
        "--grid",
        "1,4,4",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unwritable_output_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = hadamard(&[
        "trajectory",
        "--family",
        "equatorial",
        "--samples",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

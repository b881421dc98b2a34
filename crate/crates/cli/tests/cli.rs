use std::io::Write;
use std::path::PathBuf;

use tjurina_cli::report::{BoundReport, ErrorReport, ScanJson, TopoReport, VerifyReport};
use tjurina_cli::{run, Status};
use tjurina_core::topology::{tau_min, validate_exponents};

fn curve(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "curves", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn temp_curve(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn topo_golden() {
    let out = run(["topo", "9,12,17"]);
    assert_eq!(out.status, Status::Success);
    assert!(out.stdout.contains("tau_min = 80"));
    assert!(out.stdout.contains("mu = 98"));
    let contributions: Vec<&str> = out
        .stdout
        .lines()
        .skip(2)
        .take(6)
        .map(|l| l.split_whitespace().last().unwrap())
        .collect();
    assert_eq!(contributions, ["15", "1", "1", "1", "0", "0"]);
}

#[test]
fn topo_json_fields() {
    let out = run(["topo", "141,142", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["mu"], "19740");
    assert_eq!(v["tau_min"], "14910");
    assert_eq!(v["dg_bound"], "14840");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"]["name"], "topo");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args.iter().copied()).status.code();
    assert_eq!(code(&["topo", "4,8"]), 2);
    assert_eq!(code(&["topo", "1"]), 2);
    assert_eq!(code(&["topo", "9,x"]), 2);
    assert_eq!(code(&["bound", "abc"]), 2);
    assert_eq!(code(&["bound", "2"]), 0);
    assert_eq!(code(&["scan", "--max-beta0", "1", "--max-beta1", "9"]), 2);
    assert_eq!(
        code(&[
            "scan",
            "--max-beta0",
            "4",
            "--max-beta1",
            "9",
            "--jobs",
            "0"
        ]),
        2
    );
    assert_eq!(code(&["scan", "--max-beta0", "6", "--max-beta1", "20"]), 0);
    assert_eq!(code(&["verify", "/nonexistent/curve"]), 2);
    assert_eq!(code(&["verify", &curve("s4.curve")]), 0);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);

    let same = temp_curve(
        "f = \"y^2 - x^3\"\nomega1.A = \"3*y\"\nomega1.B = \"-2*x\"\n\
         omega2.A = \"3*y\"\nomega2.B = \"-2*x\"\n",
    );
    assert_eq!(code(&["verify", same.path().to_str().unwrap()]), 3);

    let non_isolated = temp_curve(
        "f = \"(y^2 - x^3)^2\"\nomega1.A = \"3*y\"\nomega1.B = \"-2*x\"\n\
         omega2.A = \"-3*x^2\"\nomega2.B = \"2*y\"\n",
    );
    assert_eq!(code(&["verify", non_isolated.path().to_str().unwrap()]), 4);

    let bad = temp_curve("f = \"y^2 - 2x\"\n");
    assert_eq!(code(&["verify", bad.path().to_str().unwrap()]), 2);
    let incomplete = temp_curve("f = \"y^2 - x^3\"\nomega1.A = \"y\"\n");
    assert_eq!(code(&["verify", incomplete.path().to_str().unwrap()]), 2);
}

#[test]
fn error_messages_name_the_rule() {
    let out = run(["topo", "4,8"]);
    assert!(out.stderr.contains("gcd chain not strictly decreasing"));
    let out = run(["topo", "4,8", "--json"]);
    let e: ErrorReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((e.exit_code, e.kind.as_str()), (2, "invalid_exponents"));
    assert!(e.message.contains("gcd chain not strictly decreasing"));
}

#[test]
fn verify_lines() {
    let out = run(["verify", &curve("s3.curve")]);
    assert!(out
        .stdout
        .contains("good basis: yes; mu=40 tau=36 I(g1,g2)=4; formula 4 = 4 HOLDS"));
    let out = run(["verify", &curve("s4.curve")]);
    assert!(out.stdout.contains("good basis: no;"));
    assert!(out
        .stdout
        .contains("formula 5 ≠ 4 (expected: no good basis)"));
}

#[test]
fn verify_without_forms() {
    let f = temp_curve("# class (3,7)\nf = \"y^3 - x^7\"\n");
    let out = run(["verify", "--json", f.path().to_str().unwrap()]);
    assert_eq!(out.status, Status::Success);
    let r: VerifyReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((r.mu.as_str(), r.tau.as_str()), ("12", "12"));
    assert!(r.saito.is_none());
}

#[test]
fn scan_of_multiplicity_two() {
    let out = run([
        "scan",
        "--max-beta0",
        "2",
        "--max-beta1",
        "9",
        "--list",
        "--json",
    ]);
    let r: ScanJson = serde_json::from_str(&out.stdout).unwrap();
    let classes = r.classes.unwrap();
    let exps: Vec<Vec<String>> = classes.iter().map(|c| c.exponents.clone()).collect();
    let expect: Vec<Vec<String>> = [3, 5, 7, 9]
        .iter()
        .map(|q| vec!["2".to_string(), q.to_string()])
        .collect();
    assert_eq!(exps, expect);
    assert!(classes.iter().all(|c| c.mu == c.tau_min));
    let text = run(["scan", "--max-beta0", "12", "--max-beta1", "30"]).stdout;
    assert!(text.contains(" classes, 0 violations"));
}

#[test]
fn json_round_trips() {
    let topo = run(["--json", "topo", "9,12,17"]).stdout;
    let t: TopoReport = serde_json::from_str(&topo).unwrap();
    assert_eq!(serde_json::to_string_pretty(&t).unwrap() + "\n", topo);
    assert_eq!(t.stages.len(), 6);

    for name in [
        "cusp.curve",
        "e5_6.curve",
        "s2.curve",
        "s3.curve",
        "s4.curve",
    ] {
        let out = run(["verify", "--json", &curve(name)]).stdout;
        let r: VerifyReport = serde_json::from_str(&out).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&r).unwrap() + "\n",
            out,
            "{name}"
        );
    }

    let scan = run([
        "scan",
        "--json",
        "--max-beta0",
        "5",
        "--max-beta1",
        "12",
        "--list",
    ])
    .stdout;
    let s: ScanJson = serde_json::from_str(&scan).unwrap();
    assert_eq!(serde_json::to_string_pretty(&s).unwrap() + "\n", scan);

    let b = run(["bound", "19740", "--json"]).stdout;
    let b: BoundReport = serde_json::from_str(&b).unwrap();
    assert_eq!(b.dg_bound, "14840");
}

#[test]
fn verify_report_matches_in_memory_values() {
    let r: VerifyReport =
        serde_json::from_str(&run(["verify", "--json", &curve("s3.curve")]).stdout).unwrap();
    let s = r.saito.unwrap();
    assert_eq!((r.mu.as_str(), r.tau.as_str()), ("40", "36"));
    assert_eq!((s.i1.as_str(), s.i2.as_str()), ("2", "4"));
    assert_eq!(
        (s.lhs.as_str(), s.igg.as_str(), s.rhs.as_deref()),
        ("4", "4", Some("4"))
    );
    assert_eq!(s.unit, "-7920*x*y - 24200");
    assert_eq!(r.multiplicity_sequence.unwrap(), ["5", "5"]);
}

#[test]
fn tau_min_bounds_explicit_curves() {
    for (name, beta) in [
        ("s2.curve", [5u64, 6]),
        ("s3.curve", [5, 11]),
        ("s4.curve", [7, 8]),
    ] {
        let r: VerifyReport =
            serde_json::from_str(&run(["verify", "--json", &curve(name)]).stdout).unwrap();
        let tau: u64 = r.tau.parse().unwrap();
        let tmin = tau_min(&validate_exponents(&beta).unwrap()).unwrap();
        assert!(tmin <= tau, "{name}: tau_min {tmin} > tau {tau}");
    }
}

#[test]
fn colength_cap_is_forwarded() {
    let out = run(["verify", "--colength-cap", "4", &curve("s3.curve")]);
    assert_eq!(out.status, Status::InputError);
    assert!(out.stderr.contains("--colength-cap"));
}

use std::process::{Command, Output};

use covercensus::report::CensusRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covercensus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn verify_p1fp_over_f5() {
    let v = json(&["verify-p1fp", "--field", "5^1"]);
    assert_eq!(v["schema"], "covercensus.p1fp/1");
    assert_eq!(v["elements_checked"], 120);
    assert_eq!(v["ok"], true);
    assert_eq!(
        v["summary"],
        "120 elements checked, all satisfy 1-or-2 fixed points, order-5 \u{21d4} one fixed point"
    );
}

#[test]
fn census_examples() {
    let v = json(&["census", "--field", "2^3", "--group", "Zp^1", "--locus", "inf"]);
    assert_eq!(v["schema"], "covercensus.census/1");
    assert_eq!(v["count"], 7);
    let v = json(&["census", "--field", "5^1", "--group", "cyclic:4", "--locus", "0,inf"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["verdict"]["kind"], "finite");
    assert_eq!(v["verdict"]["bound"], 1);
    let v = json(&["census", "--field", "5^1", "--group", "cyclic:4", "--locus", "0,1,inf"]);
    assert_eq!(v["count"], 0);
}

#[test]
fn census_json_round_trips() {
    let out = run(&["census", "--field", "3^2", "--group", "Zp^1", "--locus", "1,1"]);
    assert!(out.status.success());
    let rec: CensusRecord = serde_json::from_slice(&out.stdout).unwrap();
    let report = rec.to_report().unwrap();
    assert_eq!(report.count(), 4);
    assert_eq!(CensusRecord::new(&report).unwrap(), rec);
}

#[test]
fn csv_has_header_and_quotes() {
    let out = run(&["census", "--field", "5^1", "--group", "cyclic:4", "--locus", "0,inf", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tag,order,generators,locus"));
    assert_eq!(lines.next(), Some("cyclic:4,4,\"[1,0;0,3]\",0 inf"));
    assert_eq!(lines.next(), None);

    let out = run(&["field-info", "--field", "2^2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("order,4\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["census", "--field", "2^3", "--group", "Zp^2", "--locus", "inf"],
        &["census", "--field", "3^2", "--group", "PGL2:1", "--locus", "0,0,0,1,0,2,1,0,1,1,1,2,2,0,2,1,2,2,inf", "--ext", "1"],
        &["census", "--field", "5^1", "--group", "A4", "--locus", "0,inf", "--format", "table"],
        &["verify-main", "--p", "2", "--degrees", "1,2,3"],
        &["verify-genus1", "--curve", "7^1:a=0,b=1", "--format", "csv"],
        &["build-group", "--field", "5^1", "--group", "S4"],
        &["ramification", "--field", "5^1", "--poly", "0;1;0;0;0;1;0;1"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn jobs_do_not_change_output() {
    for args in [
        vec!["census", "--field", "2^4", "--group", "Zp^2", "--locus", "inf"],
        vec!["census", "--field", "3^2", "--group", "semidirect:1:2", "--locus", "0,0,1,0,inf"],
        vec!["verify-main", "--p", "3", "--degrees", "1,2"],
    ] {
        let serial = run(&args);
        let mut par = args.clone();
        par.extend(["--jobs", "4"]);
        let parallel = run(&par);
        assert!(serial.status.success(), "{args:?}");
        assert_eq!(serial.stdout, parallel.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2_and_name_the_flag() {
    let out = run(&["census", "--field", "5^1", "--group", "cyclic:4", "--locus", "0", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bogus"));

    let out = run(&["census", "--field", "6^1", "--group", "cyclic:4", "--locus", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--field"));

    let out = run(&["census", "--field", "5^1", "--group", "octahedral", "--locus", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--group"));

    let out = run(&["census", "--field", "5^1", "--group", "cyclic:4", "--locus", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--locus"));

    let out = run(&["verify-main", "--p", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["build-group", "--field", "2^2", "--group", "Zp^1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--gamma"));
}

#[test]
fn subcommand_outputs() {
    let v = json(&["field-info", "--field", "3^2"]);
    assert_eq!(v["order"], 9);
    assert_eq!(v["subfield_degrees"], serde_json::json!([1, 2]));

    let v = json(&["fixed-points", "--field", "5^1", "--map", "[0,1;4,0]"]);
    assert_eq!(v["fixed_points"].as_array().unwrap().len(), 2);
    let v = json(&["fixed-points", "--field", "5^1", "--map", "[1,1;0,1]"]);
    assert_eq!(v["fixed_points"], serde_json::json!(["inf"]));
    assert_eq!(v["order"], 5);

    let v = json(&["build-group", "--field", "5^1", "--group", "A5"]);
    assert_eq!(v["subgroup"]["order"], 60);
    let v = json(&["build-group", "--field", "2^2", "--group", "semidirect:2:3", "--gamma", "1,0;0,1"]);
    assert_eq!(v["subgroup"]["order"], 12);
    assert_eq!(v["subgroup"]["locus"].as_array().unwrap().len(), 5);

    let v = json(&["locus", "--field", "3^1", "--gen", "[1,1;0,1]"]);
    assert_eq!(v["subgroup"]["order"], 3);
    assert_eq!(v["subgroup"]["locus"], serde_json::json!(["inf"]));

    let v = json(&[
        "conjugate", "--field", "2^2", "--a", "[1,0,1,0;0,0,1,0]", "--b", "[1,0,0,1;0,0,1,0]", "--brute-force",
    ]);
    assert_eq!(v["conjugate"], true);
    assert_eq!(v["agree"], true);

    let v = json(&["additive-subgroups", "--field", "2^4", "--rank", "2"]);
    assert_eq!(v["count"], 35);
    assert_eq!(v["gaussian_binomial"], "35");

    let v = json(&["verify-genus1", "--curve", "5^1:a=1,b=0", "--point", "O", "--point", "(0,0)"]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["finiteness"].as_array().unwrap().len(), 1);

    let v = json(&["ramification", "--field", "3^1", "--poly", "0;1;0;1;0;1"]);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 5);
    assert_eq!(pts[4]["point"], "inf");
    assert_eq!(pts[4]["index"], 5);
}

#[test]
fn help_lists_every_subcommand() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in [
        "field-info",
        "fixed-points",
        "build-group",
        "locus",
        "conjugate",
        "census",
        "additive-subgroups",
        "verify-p1fp",
        "verify-main",
        "verify-genus1",
        "ramification",
    ] {
        assert!(text.contains(cmd), "{cmd}");
    }
}

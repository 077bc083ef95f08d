use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flatcurve"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid json")
}

#[test]
fn torus_defect_pipeline() {
    let t = ok(&["gen", "torus", "3", "4"], "");
    assert_eq!(json(&ok(&["defect", "-"], &t))["polyak"], 8);
    let circle = ok(&["gen", "torus", "1", "9"], "");
    assert_eq!(json(&ok(&["defect", "-"], &circle))["polyak"], 0);
}

#[test]
fn defect_report_keys() {
    let t = ok(&["gen", "torus", "2", "3"], "");
    let r = json(&ok(&["defect", "--report", "-"], &t));
    for key in ["n", "polyak", "winding", "pairs", "lemma52_bound", "residuals"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    assert_eq!(r["winding"], 2);
}

#[test]
fn check_suites_pass() {
    let out = run(&["check", "--suite", "lemma51"], "");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok\tlemma51"));
    let out = run(&["check"], "");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "cylgrid", "2", "2"], "").status.code(), Some(2));
    assert_eq!(run(&["casson", "-", "--exhaustive", "--samples", "3"], "").status.code(), Some(2));
    let out = run(&["defect", "-"], "cmap 1\nvertices 1\nv 0 0.1 0.0\n");
    assert_eq!(out.status.code(), Some(1));
    // two strands: defect is undefined
    let link = ok(&["gen", "torus", "2", "4"], "");
    assert_eq!(run(&["defect", "-"], &link).status.code(), Some(1));
}

#[test]
fn generators_are_deterministic_and_reload() {
    for args in [["gen", "torus", "4", "5", ""], ["gen", "random", "12", "--seed", "7"]] {
        let args: Vec<&str> = args.into_iter().filter(|a| !a.is_empty()).collect();
        let a = ok(&args, "");
        assert_eq!(a, ok(&args, ""), "{args:?}");
        assert!(json(&ok(&["defect", "-"], &a))["polyak"].is_number());
    }
    for args in [["gen", "cylgrid", "2", "5"], ["gen", "grid", "3", "4"]] {
        let g = ok(&args, "");
        let back = ok(&["dual", "-"], &ok(&["dual", "-"], &g));
        assert_eq!(g.lines().nth(1), back.lines().nth(1), "{args:?}");
    }
}

#[test]
fn reduce_writes_trace() {
    let dir = std::env::temp_dir().join(format!("flatcurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("trace.json");
    let t = ok(&["gen", "torus", "2", "3"], "");
    let s = json(&ok(
        &["reduce", "-", "--family", "medial", "--trace", trace.to_str().unwrap()],
        &t,
    ));
    assert_eq!(s["moves"], 3);
    assert_eq!(s["complete"], true);
    let steps = json(&std::fs::read_to_string(&trace).unwrap());
    let steps = steps.as_array().unwrap();
    assert_eq!(steps.len(), 3);
    for step in steps {
        for key in ["kind", "face", "delta", "n_after"] {
            assert!(step.get(key).is_some());
        }
    }
    assert_eq!(steps.last().unwrap()["n_after"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn moves_list_deltas() {
    let t = ok(&["gen", "torus", "2", "3"], "");
    let rows = json(&ok(&["moves", "-", "--kinds", "1->0,2->0,3->3"], &t));
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["delta"] == -2));
}

#[test]
fn graph_commands() {
    let c3 = ok(&["gen", "cylgrid", "1", "3"], "");
    assert_eq!(json(&ok(&["ereduce", "-"], &c3))["moves"], 3);
    let b = json(&ok(&["bounds", "-"], &c3));
    assert_eq!((b["lower_bound"].as_i64(), b["achieved_moves"].as_i64()), (Some(1), Some(3)));
    let medial = ok(&["medial", "-"], &c3);
    assert_eq!(json(&ok(&["defect", "-"], &medial))["polyak"], 2);
}

#[test]
fn casson_outputs() {
    let t = ok(&["gen", "torus", "2", "3"], "");
    let e = json(&ok(&["casson", "-"], &t));
    assert_eq!((e["expected_c2_num"].as_i64(), e["expected_c2_den"].as_i64()), (Some(2), Some(8)));
    let mc = ok(&["casson", "-", "--samples", "500", "--seed", "5"], &t);
    assert_eq!(mc, ok(&["casson", "-", "--samples", "500", "--seed", "5"], &t));
    let mc = json(&mc);
    assert!(mc["mean"].is_number() && mc["stderr"].is_number());
}

#[test]
fn render_svg() {
    let t = ok(&["gen", "torus", "2", "3"], "");
    let svg = ok(&["render", "-"], &t);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<text").count(), 5);
    let mut labels: Vec<String> = svg
        .split("<text")
        .skip(1)
        .map(|s| s.split('>').nth(1).unwrap().split('<').next().unwrap().to_string())
        .collect();
    labels.sort();
    assert_eq!(labels, ["0", "1", "1", "1", "2"]);
    let circle = ok(&["render", "-"], &ok(&["gen", "torus", "1", "2"], ""));
    assert_eq!(circle.matches("<path").count(), 1);
    let big = ok(&["render", "-"], &ok(&["gen", "torus", "7", "8"], ""));
    assert_eq!(big.matches("<circle").count(), 48);
}

#[test]
fn tables() {
    let torus = ok(&["table", "torus"], "");
    assert_eq!(torus.lines().count(), 55);
    assert!(torus.lines().skip(1).all(|l| l.ends_with("\ttrue")));
    let grids = ok(&["table", "grids"], "");
    assert!(grids.lines().skip(1).all(|l| l.ends_with("\ttrue")));
}

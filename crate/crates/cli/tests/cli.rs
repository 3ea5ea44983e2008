use std::process::Command;

use serde_json::Value;

const V8: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n0 4\n1 5\n2 6\n3 7\n";
// K3,3 on u v w | x y z plus uv and yz
const SIRAN: &str = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n0 1\n4 5\n";
const K6: &str = "E~~w";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn onecross(args: &[&str], input: &str) -> Run {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.txt");
    std::fs::write(&path, input).unwrap();
    let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    if !matches!(args.first(), Some(&"corpus")) {
        full.insert(1, path.display().to_string());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_onecross")).args(&full).output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

fn endpoints(v: &Value) -> Vec<(u64, u64)> {
    v["endpoints"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            let (a, b) = (p[0].as_u64().unwrap(), p[1].as_u64().unwrap());
            (a.min(b), a.max(b))
        })
        .collect()
}

#[test]
fn decide_exit_codes() {
    let v8 = onecross(&["decide", "--verify"], V8);
    assert_eq!(v8.code, 1, "{}", v8.stderr);
    let report = json(&v8);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["verdict"], "exactly_one");
    assert_eq!(report["verified"], true);
    assert!(report.get("timing_ms").is_none());
    assert_eq!(endpoints(&report["crossing_pair"]).len(), 2);

    assert_eq!(onecross(&["decide", "--verify"], K6).code, 2);
    assert_eq!(onecross(&["decide", "--verify"], "0 1\n1 2\n").code, 0);
}

#[test]
fn reports_are_deterministic() {
    let a = onecross(&["decide"], V8);
    let b = onecross(&["decide"], V8);
    assert_eq!(a.stdout, b.stdout);
    let t = json(&onecross(&["decide", "--timing"], V8));
    assert!(t["timing_ms"].is_number());
}

#[test]
fn pairs_of_v8() {
    let r = onecross(&["pairs", "--verify"], V8);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let report = json(&r);
    let crossing: Vec<Vec<(u64, u64)>> = report["crossing_pairs"].as_array().unwrap().iter().map(endpoints).collect();
    assert!(crossing.contains(&vec![(0, 1), (4, 5)]));
    assert!(crossing.iter().all(|p| !p.contains(&(1, 5))));
    assert!(report["pairs"].as_array().unwrap().iter().all(|p| p["agree"] == true));
}

#[test]
fn pairs_of_siran() {
    let report = json(&onecross(&["pairs"], SIRAN));
    let crossing: Vec<Vec<(u64, u64)>> = report["crossing_pairs"].as_array().unwrap().iter().map(endpoints).collect();
    assert!(crossing.contains(&vec![(0, 4), (2, 5)]));
    assert!(!crossing.contains(&vec![(0, 3), (2, 5)]));
    let rejected = report["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["pair"]["e"] == 0 && p["pair"]["f"] == 8)
        .expect("ux, wz is listed");
    assert_eq!(rejected["crossing"], false);
    assert!(rejected["cond_ii"]["separation"]["Separated"].is_object());
}

#[test]
fn pairs_on_planar_input() {
    let r = onecross(&["pairs"], "0 1\n1 2\n2 0\n");
    assert_eq!(r.code, 65);
    assert!(r.stderr.contains("planar: no crossing pairs"));
}

#[test]
fn draw() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("v8.svg");
    let r = onecross(&["draw", "--pair", "0,1", "4,5", "--svg", svg.to_str().unwrap()], V8);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("graph onedrawing {"));
    assert!(r.stdout.contains("crossing=true"));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));

    let dot = dir.path().join("k33.dot");
    let k33 = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
    let r = onecross(&["draw", "--pair", "0", "4", "-o", dot.to_str().unwrap()], k33);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("--"));

    assert_eq!(onecross(&["draw", "--pair", "0,1", "1,5"], V8).code, 66);
}

#[test]
fn parse_errors() {
    assert_eq!(onecross(&["decide"], "0 x\n").code, 64);
    assert_eq!(onecross(&["decide", "--format", "graph6"], V8).code, 64);
    assert_eq!(onecross(&["decide"], "").code, 64);
}

#[test]
fn corpus() {
    let r = onecross(&["corpus", "--max-n", "6"], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(json(&r)["summary"]["inconsistencies"], 0);

    let args = ["corpus", "--count", "500", "--min-n", "8", "--max-n", "8", "--seed", "42"];
    let a = onecross(&args, "");
    let b = onecross(&args, "");
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["summary"]["graphs"], 500);

    let big = onecross(&["corpus", "--count", "1", "--min-n", "40", "--max-n", "40"], "");
    assert_eq!(big.code, 69);
    assert_eq!(onecross(&["corpus", "--max-n", "40"], "").code, 69);
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn fdense(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdense"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fdense-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn solve_linear_finds_the_clique() {
    let fig1 = data("fig1.tsv");
    let r = json_of(&fdense(&["solve", "--f", "linear", "--input", &fig1]));
    assert_eq!(r["solution"]["density_exact"], "3/2");
    assert_eq!(
        r["solution"]["subset"],
        serde_json::json!(["1", "2", "3", "4"])
    );
    assert_eq!(r["solver"], "flow-exact");
    assert_eq!(r["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn solve_convex_power_reports_corollary() {
    let fig1 = data("fig1.tsv");
    let r = json_of(&fdense(&[
        "solve",
        "--f",
        "power:1.5",
        "--input",
        &fig1,
        "--case",
        "convex",
        "--json",
    ]));
    let want = 2.0 * 8f64.powf(0.25);
    let got = r["certificate"]["corollary"]["ratio"].as_f64().unwrap();
    assert!((got - want).abs() < 1e-12);
    assert!(r["certificate"]["ratio"].as_f64().unwrap() <= want);
}

#[test]
fn solve_plateau_on_single_edge() {
    let edge = data("single_edge.tsv");
    let r = json_of(&fdense(&["solve", "--f", "table:0,1,1", "--input", &edge]));
    assert_eq!(r["solution"]["density"].as_f64().unwrap(), 5.0);
    assert_eq!(r["solution"]["density_exact"], "5");
}

#[test]
fn solve_trace_and_other_algorithms() {
    let fig1 = data("fig1.tsv");
    let r = json_of(&fdense(&[
        "solve", "--f", "sqrt", "--input", &fig1, "--trace",
    ]));
    assert!(!r["trace"].as_array().unwrap().is_empty());
    assert_eq!(r["solution"]["size"], 8);
    for algo in ["lp", "peel", "flow"] {
        let r = json_of(&fdense(&[
            "solve", "--f", "linear", "--algo", algo, "--input", &fig1,
        ]));
        assert_eq!(r["solution"]["density"].as_f64().unwrap(), 1.5, "{algo}");
    }
    let r = json_of(&fdense(&[
        "solve", "--f", "power:2", "--algo", "brute", "--k", "3", "--input", &fig1,
    ]));
    assert_eq!(r["solution"]["size"], 3);
    let out = fdense(&["solve", "--f", "linear", "--input", &fig1, "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("solver,size,weight,density,density_exact,ms\nflow-exact,4,6,1.5,3/2,")
    );
}

#[test]
fn exit_codes() {
    let fig1 = data("fig1.tsv");
    assert_eq!(
        fdense(&["solve", "--input", "/definitely/missing"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fdense(&["solve", "--input", &fig1, "--f", "cubic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fdense(&["solve", "--input", &fig1, "--algo", "lp", "--f", "power:2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fdense(&["solve", "--input", &fig1, "--case", "convex", "--f", "sqrt"])
            .status
            .code(),
        Some(3)
    );
    // neither convex nor concave on [0, 8]
    let wiggle = "table:0,1,3,4,7,8,11,12,15";
    assert_eq!(
        fdense(&["solve", "--input", &fig1, "--f", wiggle])
            .status
            .code(),
        Some(3)
    );
    assert!(
        fdense(&["solve", "--input", &fig1, "--f", wiggle, "--algo", "peel"])
            .status
            .success()
    );
    let bad = scratch("loop.tsv");
    std::fs::write(&bad, "a b\nc c\n").unwrap();
    let out = fdense(&["solve", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(fdense(&["solve", "--bogus"]).status.code(), Some(2));
}

#[test]
fn tolerance_override() {
    let fig1 = data("fig1.tsv");
    let out = Command::new(env!("CARGO_BIN_EXE_fdense"))
        .args(["solve", "--f", "sqrt", "--input", &fig1])
        .env("FDS_TOL", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_fdense"))
        .args(["solve", "--f", "sqrt", "--input", &fig1])
        .env("FDS_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn weighted_input_uses_epsilon_search() {
    let path = scratch("weighted.tsv");
    std::fs::write(&path, "a b 2.5\nb c 1/3\na c 1\nc d 4\n").unwrap();
    let r = json_of(&fdense(&[
        "solve",
        "--f",
        "sqrt",
        "--input",
        path.to_str().unwrap(),
        "--epsilon",
        "0.001",
    ]));
    assert_eq!(r["solver"], "flow-approx");
    assert_eq!(r["epsilon"].as_f64().unwrap(), 0.001);
}

#[test]
fn frontier_of_fig1() {
    let r = json_of(&fdense(&["frontier", "--input", &data("fig1.tsv")]));
    assert_eq!(r["sizes"], serde_json::json!([0, 4, 7, 8]));
    assert_eq!(r["weights"], serde_json::json!(["0", "6", "10", "11"]));
    assert_eq!(
        r["points"][2]["witness"],
        serde_json::json!(["1", "2", "3", "4", "5", "6", "7"])
    );
}

#[test]
fn peel_emits_order() {
    let r = json_of(&fdense(&[
        "peel",
        "--input",
        &data("fig1.tsv"),
        "--f",
        "power:1.5",
        "--emit-order",
    ]));
    assert_eq!(r["order"].as_array().unwrap().len(), 8);
    assert_eq!(r["order"][0], "8");
    assert!(r["solution"]["density"].as_f64().unwrap() > 0.0);
}

#[test]
fn oracle_and_its_guard() {
    let r = json_of(&fdense(&[
        "oracle",
        "--input",
        &data("fig1.tsv"),
        "--f",
        "linear",
    ]));
    assert_eq!(r["solution"]["density_exact"], "3/2");
    assert_eq!(r["frontier"].as_array().unwrap().len(), 4);

    let big = scratch("n30.tsv");
    let out = fdense(&[
        "gen",
        "gnp",
        "--n",
        "30",
        "--p",
        "0.3",
        "--seed",
        "1",
        "--output",
        big.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        fdense(&["oracle", "--input", big.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn gen_is_deterministic_and_readable() {
    let a = fdense(&["gen", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    let b = fdense(&["gen", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g = fdense::parse_graph(std::str::from_utf8(&a.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 8);
    let j = fdense(&[
        "gen",
        "planted",
        "--n",
        "12",
        "--k",
        "4",
        "--seed",
        "3",
        "--weighted",
        "--json",
    ]);
    let g = fdense::parse_graph(std::str::from_utf8(&j.stdout).unwrap()).unwrap();
    assert!(!g.is_unweighted());
}

#[test]
fn bench_rows() {
    let out = fdense(&["bench", "--seeds", ""]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "instance,n,m,family,solver,value,oracle,ratio,ms\n"
    );

    let out = fdense(&[
        "bench", "--n", "10", "--p", "0.4", "--seeds", "0..100", "--f", "sqrt", "--solver", "peel",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 100);
    for row in &rows {
        let ratio: f64 = row.split(',').nth(7).unwrap().parse().unwrap();
        assert!((1.0 - 1e-12..=3.0).contains(&ratio), "{row}");
    }

    let out = fdense(&[
        "bench", "--n", "9", "--seeds", "0..20", "--f", "linear", "--f", "log1p", "--solver",
        "flow", "--solver", "lp",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 80);
    for pair in rows.chunks(2) {
        assert_eq!((pair[0][4], pair[1][4]), ("flow", "lp"));
        let (a, b): (f64, f64) = (pair[0][5].parse().unwrap(), pair[1][5].parse().unwrap());
        assert!((a - b).abs() <= 1e-9 * a.abs(), "{pair:?}");
    }
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclesat")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclesat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn construct(args: &[&str]) -> String {
    let o = run(&[&["construct"], args].concat());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

#[test]
fn construct_d22() {
    let o = run(&["construct", "--family", "d", "--a", "2", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let g = cyclesat::graph6::parse(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (7, 11));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n=7 m=11 family=d"));
}

#[test]
fn construct_snark_and_mrn() {
    let j5 = construct(&["--family", "snark", "--k", "5"]);
    assert_eq!(cyclesat::graph6::parse(&j5).unwrap().order(), 20);
    let dir = std::env::temp_dir().join(format!("cyclesat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let base = dir.join("j5.g6");
    std::fs::write(&base, format!("{j5}\n")).unwrap();
    let m = construct(&["--family", "mrn", "--r", "20", "--n", "45", "--base", base.to_str().unwrap()]);
    let g = cyclesat::graph6::parse(&m).unwrap();
    assert_eq!((g.order(), g.size()), (45, 60));
    let recipe = dir.join("recipe.json");
    std::fs::write(&recipe, r#"{"family": "cactus", "blocks": [{"block": "k3"}, {"block": "k4"}]}"#).unwrap();
    let t = cyclesat::graph6::parse(&construct(&["--recipe", recipe.to_str().unwrap()])).unwrap();
    assert_eq!((t.order(), t.size()), (6, 9));
}

#[test]
fn construct_errors_name_the_problem() {
    let o = run(&["construct", "--family", "snark", "--k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd k >= 3"));
    let o = run(&["construct", "--family", "d", "--a", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--b"));
}

#[test]
fn verify_exit_codes() {
    let d22 = construct(&["--family", "d", "--a", "2", "--b", "2"]);
    let o = run(&["verify", "--r", "6", "--cross-check", &d22]);
    assert_eq!(o.status.code(), Some(0));
    let cert = json(&o);
    assert_eq!(cert["verdict"], "saturated");
    assert_eq!(cert["schema_version"], 1);
    assert_eq!(cert["cross_checked"], true);

    let o = run(&["verify", "--r", "5", "Dhc"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "not_free");

    let o = run(&["verify", "--r", "5", "garbage!"]);
    assert_eq!(o.status.code(), Some(2));

    let j7 = construct(&["--family", "snark", "--k", "7"]);
    let o = run(&["verify", "--r", "28", "--budget", "50", &j7]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn verify_reads_stdin_lines() {
    let o = run_stdin(&["verify", "--r", "3"], "Bw\n\nCF\n");
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let docs: Vec<Value> = serde_json::Deserializer::from_str(&text)
        .into_iter::<Value>()
        .map(Result::unwrap)
        .collect();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["verdict"], "not_free");
    assert_eq!(docs[1]["verdict"], "saturated");
}

#[test]
fn sat_search_values() {
    for (n, r, want) in [("6", "6", 9), ("4", "3", 3), ("7", "5", 9)] {
        let o = run(&["sat-search", "--n", n, "--r", r]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["sat_value"], want, "n={n} r={r}");
    }
}

#[test]
fn sat_search_is_deterministic_across_jobs() {
    let one = stdout(&run(&["sat-search", "--n", "7", "--r", "6", "--jobs", "1"]));
    let four = stdout(&run(&["sat-search", "--n", "7", "--r", "6", "--jobs", "4"]));
    assert_eq!(one, four);
}

#[test]
fn sat_search_cap() {
    let o = run(&["sat-search", "--n", "10", "--r", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["sat-search", "--n", "6", "--r", "6", "--max-edges", "8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn analyze_reports() {
    let m6 = construct(&["--family", "m6", "--n", "11"]);
    let a = json(&run(&["analyze", "--r", "6", &m6]));
    assert_eq!(a["saturated"], true);
    assert_eq!(a["all_asserted_hold"], true);
    assert_eq!(a["c6_characterization"]["components_are_cacti"], true);

    let d22 = construct(&["--family", "d", "--a", "2", "--b", "2"]);
    let a = json(&run(&["analyze", "--r", "6", &d22]));
    assert!(a["flagged"].as_array().unwrap().iter().any(|f| f == "vi_average_degree"));

    let j5 = construct(&["--family", "snark", "--k", "5"]);
    let a = json(&run(&["analyze", "--r", "20", &j5]));
    assert_eq!(a["good"], true);
    assert_eq!(a["three_regular"], true);

    let o = run(&["analyze", "--r", "6", "C`"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
}

#[test]
fn bounds_table() {
    let o = run(&["bounds", "--n-range", "6..100", "--r-range", "6..60", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("n,r,lower,upper,exact,source"));
    assert!(text.lines().any(|l| l.starts_with("100,60,130,130,130,")));
    assert!(text.lines().any(|l| l.starts_with("8,6,12,12,12,")));

    let v = json(&run(&["bounds", "--n-range", "100", "--r-range", "60"]));
    assert_eq!(v["rows"][0]["exact"], 130);

    let o = run(&["bounds", "--n-range", "9..3", "--r-range", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plot_g_samples() {
    let v = json(&run(&["bounds", "--plot-g", "100"]));
    let s = v["samples"].as_array().unwrap();
    assert_eq!(s.len(), 100);
    assert_eq!(s[99]["x"], "1");
    assert_eq!(s[99]["g"], "3/2");
    assert_eq!(s[49]["g"], "5/4");
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("cyclesat-out-{}.json", std::process::id()));
    let o = run(&["--out", path.to_str().unwrap(), "sat-search", "--n", "5", "--r", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["sat_value"], 5);
}

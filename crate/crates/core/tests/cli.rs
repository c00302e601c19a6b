use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
}

fn fairgraph(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fairgraph"))
        .args(args)
        .env_remove("FAIRGRAPH_JOBS")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fairgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn jcs_has_no_cutset() {
    let r = fairgraph(&["cutset", "find", "fixture:jcs", "--max-cut", "6", "--json"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["certificates"].as_array().unwrap().len(), 0);
    assert_eq!(v["complete"], Value::Bool(true));
}

#[test]
fn graph_iv_oracle_says_no() {
    let r = fairgraph(&["oracle", "fixture:graph_iv", "--agents", "3", "--weights", "paper"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("no connected EF1 allocation"), "{}", r.stdout);
}

#[test]
fn star_spectrum() {
    let r = fairgraph(&["spectrum", "fixture:star_5", "--class", "CA", "--n-max", "6"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("<yes, no, no, no, YES, YES>"), "{}", r.stdout);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(fairgraph(&["cutset", "find"]).code, 64);
    assert_eq!(fairgraph(&["oracle", "fixture:nope", "--agents", "2"]).code, 64);
    assert_eq!(fairgraph(&["--help"]).code, 0);
}

#[test]
fn budget_exhaustion_exits_2() {
    let r = fairgraph(&["--node-budget", "1", "cutset", "find", "fixture:graph_vii"]);
    assert_eq!(r.code, 2);
}

#[test]
fn json_certificates_reverify() {
    for fixture in ["graph_iv", "graph_v", "graph_vi", "graph_vii", "lstar", "star_4"] {
        let graph = format!("fixture:{fixture}");
        let r = fairgraph(&["cutset", "find", &graph, "--all", "--json"]);
        assert_eq!(r.code, 0, "{fixture}");
        let report: Value = serde_json::from_str(&r.stdout).unwrap();
        assert!(!report["certificates"].as_array().unwrap().is_empty());
        let path = scratch(&format!("{fixture}.json"));
        std::fs::write(&path, &r.stdout).unwrap();
        let v = fairgraph(&["cutset", "verify", &graph, "--cert", path.to_str().unwrap()]);
        assert_eq!(v.code, 0, "{fixture}: {}", v.stdout);
    }
}

#[test]
fn exit_codes_ignore_job_count() {
    let commands: [&[&str]; 4] = [
        &["cutset", "find", "fixture:graph_vi"],
        &["oracle", "fixture:graph_vii", "--agents", "4"],
        &["spectrum", "fixture:lstar", "--n-max", "8"],
        &["analyze", "fixture:jcs"],
    ];
    for cmd in commands {
        let outputs: Vec<(i32, String)> = ["1", "2", "4"]
            .iter()
            .map(|jobs| {
                let mut args = vec!["--jobs", jobs, "--json"];
                args.extend_from_slice(cmd);
                let r = fairgraph(&args);
                (r.code, r.stdout)
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd:?}");
    }
}

#[test]
fn reduce_writes_edge_list_and_sidecar() {
    let input = scratch("instance.txt");
    std::fs::write(&input, "4 4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    let prefix = scratch("reduced");
    let prefix = prefix.to_str().unwrap();
    let r = fairgraph(&["reduce", input.to_str().unwrap(), "--h", "3", "--out", prefix]);
    assert_eq!(r.code, 0);
    let edges = std::fs::read_to_string(format!("{prefix}.edges")).unwrap();
    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(format!("{prefix}.json")).unwrap()).unwrap();
    assert_eq!(sidecar["target_valence"], 6);
    let header: Vec<usize> = edges
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    // 4 v-vertices, 4 e-vertices, 3 universal dummies, 4 pendant dummies.
    assert_eq!(header[0], 15);
    assert_eq!(sidecar["vertex_count"], 15);
    let found = fairgraph(&["cutset", "find", &format!("{prefix}.edges"), "--elementary", "--max-cut", "6"]);
    assert_eq!(found.code, 0);
}

#[test]
fn fixtures_list_names_every_figure() {
    let r = fairgraph(&["fixtures", "list"]);
    assert_eq!(r.code, 0);
    for name in ["graph_i", "graph_iv", "graph_vii", "jcs", "lstar", "star_"] {
        assert!(r.stdout.contains(name), "{name}");
    }
}

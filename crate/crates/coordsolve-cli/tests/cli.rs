//! Golden-file checks of every subcommand's `--json` output, exit codes,
//! and fixture fidelity. Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use coordsolve::{catalog, Payoff, PlayerSet, StageGame};
use coordsolve_cli::document::{emit_game, load_game, parse_game};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coordsolve"))
        .args(args)
        .env_remove("COORDSOLVE_BUDGET")
        .output()
        .expect("binary runs")
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("check", &["check", "--game", "mixed_pledge.json"]),
    ("ne", &["ne", "--game", "twin_triangles.json"]),
    (
        "tau",
        &[
            "tau",
            "--game",
            "clique_with_fan.json",
            "--target",
            "5,6,7,8,9",
        ],
    ),
    ("phi", &["phi", "--game", "dominant.json", "--t", "1"]),
    (
        "outcomes",
        &["outcomes", "--game", "twin_triangles.json", "--t", "2"],
    ),
    ("treedepth", &["treedepth", "--game", "square.json"]),
    (
        "design",
        &[
            "design",
            "--game",
            "two_stage_design.json",
            "--t",
            "2",
            "--lenient",
        ],
    ),
    (
        "async_solve",
        &[
            "async-solve",
            "--game",
            "two_stage_design.json",
            "--partition",
            "1,4;2,3,5,6,7",
            "--lenient",
        ],
    ),
    ("centrality", &["centrality", "--game", "cliques_2_3.json"]),
    ("horizons", &["horizons", "--game", "cliques_2_3.json"]),
    (
        "intervene",
        &[
            "intervene",
            "--game",
            "clique_with_fan.json",
            "--subsidize",
            "1",
            "--t",
            "1",
        ],
    ),
    ("ordered", &["ordered", "--game", "nested_split.json"]),
    (
        "oracle",
        &[
            "oracle",
            "--game",
            "square.json",
            "--schedule",
            "sync:2",
            "--mode",
            "spne",
        ],
    ),
];

#[test]
fn json_output_matches_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in GOLDEN {
        let mut full: Vec<String> = args.iter().map(|a| a.to_string()).collect();
        let game = full.iter().position(|a| a == "--game").unwrap() + 1;
        full[game] = fixture(&full[game]);
        full.push("--json".into());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let out = run(&refs);
        assert!(
            out.status.success(),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let got = String::from_utf8(out.stdout).unwrap();
        serde_json::from_str::<serde_json::Value>(&got).expect("stdout is JSON");
        let path = dir("golden").join(format!("{name}.json"));
        if update {
            std::fs::write(&path, &got).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(got.as_str()) {
            mismatched.push(format!("{name}:\n{got}"));
        }
    }
    assert!(
        mismatched.is_empty(),
        "golden mismatch:\n{}",
        mismatched.join("\n")
    );
}

#[test]
fn documented_examples() {
    let out = run(&[
        "tau",
        "--game",
        &fixture("clique_with_fan.json"),
        "--target",
        "5,6,7,8,9",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4\n");
    let out = run(&[
        "outcomes",
        "--game",
        &fixture("twin_triangles.json"),
        "--t",
        "2",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["outcomes"],
        serde_json::json!([[], [1, 2, 3], [4, 5, 6], [1, 2, 3, 4, 5, 6, 7, 8]])
    );
    let out = run(&["phi", "--game", &fixture("dominant.json"), "--t", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{1,2,3}\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(
        run(&["tau", "--game", "/nonexistent.json"]).status.code(),
        Some(1)
    );
    let pledge = fixture("mixed_pledge.json");
    assert_eq!(run(&["tau", "--game", &pledge]).status.code(), Some(2));
    let design = fixture("two_stage_design.json");
    assert_eq!(
        run(&["tau", "--game", &design, "--lenient", "--budget", "1"])
            .status
            .code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_coordsolve"))
        .args(["tau", "--game", &design, "--lenient", "--json"])
        .env("COORDSOLVE_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "resource");
}

#[test]
fn seeded_random_games_are_reproducible() {
    let a = run(&[
        "phi", "--game", "random:6", "--seed", "9", "--t", "2", "--json",
    ]);
    let b = run(&[
        "phi", "--game", "random:6", "--seed", "9", "--t", "2", "--json",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

fn same_payoffs(a: &StageGame, b: &StageGame) -> bool {
    a.n() == b.n()
        && PlayerSet::full(a.n())
            .subsets()
            .all(|x| (0..a.n()).all(|i| a.payoff(i, x).unwrap() == b.payoff(i, x).unwrap()))
}

#[test]
fn fixtures_match_reference_games() {
    let pairs = [
        ("twin_triangles.json", catalog::twin_triangles()),
        ("clique_with_fan.json", catalog::clique_with_fan()),
        ("square.json", catalog::square_weakest_link()),
        ("star.json", catalog::star(6)),
        ("cliques_2_3.json", catalog::disjoint_cliques(&[2, 3])),
        ("mixed_pledge.json", catalog::mixed_pledge_game()),
        ("nested_split.json", catalog::nested_split_example()),
        ("two_stage_design.json", catalog::two_stage_design_game()),
        (
            "spillover_half.json",
            catalog::spillover_game(Payoff::new(1, 2)),
        ),
        (
            "aggregative.json",
            StageGame::aggregative(vec![2, 2, 2]).unwrap(),
        ),
    ];
    for (file, game) in pairs {
        let loaded = load_game(&dir("fixtures").join(file)).unwrap();
        assert!(same_payoffs(&loaded, &game), "{file}");
        assert!(
            same_payoffs(&parse_game(&emit_game(&loaded)).unwrap(), &game),
            "{file} round trip"
        );
    }
}

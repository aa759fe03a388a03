use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use termcut::{parse_graph, write_edge_list};
use termcut_core::generate;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn termcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_termcut")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mincut_on_path() {
    let o = termcut(&["mincut", &data("p3.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lambda=1\n"));
}

#[test]
fn enumerate_json_schema() {
    let o = termcut(&["enumerate", "--alpha", "1", "--output", "json", &data("k3.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["lambda", "alpha", "cuts", "witness", "stats"] {
        assert!(keys.contains(&k), "missing key {k}");
    }
    assert_eq!(v["lambda"], 2);
    assert_eq!(v["alpha"], "1");
    let cuts = v["cuts"].as_array().unwrap();
    assert_eq!(cuts.len(), 3);
    for c in cuts {
        assert_eq!(c["value"], 2);
        assert!(!c["side"].as_array().unwrap().contains(&serde_json::json!(0)));
    }
}

#[test]
fn enumerate_text_on_path() {
    let o = termcut(&["enumerate", "--alpha", "2", &data("p3.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lambda=1\n"));
    assert!(text.contains("cuts=3\n"));
}

#[test]
fn witness_on_sixteen_cycle() {
    let o = termcut(&["witness", "--cut", "1,2,5,6,9,10,13,14", "--output", "json", &data("c16.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"]["S"].as_array().unwrap().len(), 8);
    assert_eq!(v["witness"]["T"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_matches() {
    let o = termcut(&["verify", "--alpha", "2", &data("c8.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("MATCH"));
}

#[test]
fn check_lemma_runs() {
    let o = termcut(&["check-lemma", "--target", "10", "--seed", "3", &data("c16.txt")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = dir.path().join("disc.txt");
    std::fs::write(&disconnected, "4 2\n0 1 1\n2 3 1\n").unwrap();
    let malformed = dir.path().join("bad.txt");
    std::fs::write(&malformed, "3 1\n0 1 -1\n").unwrap();

    for args in [
        vec!["mincut".to_string(), dir.path().join("missing.txt").to_string_lossy().into_owned()],
        vec!["mincut".to_string(), disconnected.to_string_lossy().into_owned()],
        vec!["mincut".to_string(), malformed.to_string_lossy().into_owned()],
        vec!["enumerate".into(), "--alpha".into(), "1/2".into(), data("k3.txt")],
        vec!["witness".into(), "--cut".into(), "0,1,2".into(), data("k3.txt")],
        vec!["witness".into(), "--cut".into(), "7".into(), data("k3.txt")],
    ] {
        let o = termcut(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn budget_refusal_exit_3() {
    let o = termcut(&["enumerate", "--budget", "10", &data("c8.txt")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    let forced = termcut(&["enumerate", "--budget", "10", "--force", &data("c8.txt")]);
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn fixtures_parse() {
    for (name, n, lambda) in [("p3.txt", 3, 1), ("k3.txt", 3, 2), ("c8.txt", 8, 2), ("c16.txt", 16, 2)] {
        let g = parse_graph(&std::fs::read_to_string(data(name)).unwrap()).unwrap().graph;
        assert_eq!(g.vertex_count(), n);
        assert_eq!(termcut_core::global_min_cut(&g).unwrap().lambda.get(), lambda);
    }
}

proptest! {
    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 2usize..=20, scale_exp in 0u32..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = generate::random_connected_graph(&mut rng, n, 40, 1000);
        let scale = 10u64.pow(scale_exp);
        let text = write_edge_list(&g, scale);
        let parsed = parse_graph(&text).unwrap();
        // Re-scaling by the parsed scale recovers the original weights.
        prop_assert_eq!(parsed.graph.edge_count(), g.edge_count());
        for (a, b) in g.edges().iter().zip(parsed.graph.edges()) {
            prop_assert_eq!((a.u, a.v), (b.u, b.v));
            prop_assert_eq!(a.weight.get() * parsed.scale, b.weight.get() * scale);
        }
        prop_assert_eq!(write_edge_list(&parsed.graph, parsed.scale), text);
    }
}

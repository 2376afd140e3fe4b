use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sfnet::harness::output::REPLICATE_HEADER;
use sfnet::Graph;

fn sfnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sfnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generate_writes_an_edge_list_and_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("ba.txt");
    let out = sfnet(&[
        "generate",
        "--algorithm",
        "ba",
        "--n",
        "50",
        "--m",
        "2",
        "--seed",
        "4",
        "--out",
        p(&graph),
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "algorithm,seed,n,edges,target_sum,realized_sum,discarded_stubs,rejected_pairs,shortfall"
    );
    assert!(lines[1].starts_with("BA,4,50,97,"), "{}", lines[1]);
    let g = Graph::read_edge_list(fs::read_to_string(&graph).unwrap().as_bytes()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (50, 97));

    let again = dir.path().join("again.txt");
    sfnet(&[
        "generate",
        "--algorithm",
        "ba",
        "--n",
        "50",
        "--m",
        "2",
        "--seed",
        "4",
        "--out",
        p(&again),
    ]);
    assert_eq!(fs::read(&graph).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn generate_from_a_degree_file() {
    let dir = tempfile::tempdir().unwrap();
    let degseq = dir.path().join("deg.txt");
    fs::write(&degseq, "3\n2\n2\n1\n1\n1\n").unwrap();
    for alg in ["mr", "kalisky", "ma", "mb"] {
        let graph = dir.path().join(format!("{alg}.txt"));
        let out = sfnet(&[
            "generate",
            "--algorithm",
            alg,
            "--degseq",
            p(&degseq),
            "--seed",
            "1",
            "--out",
            p(&graph),
        ]);
        assert_eq!(code(&out), 0, "{alg}: {out:?}");
        let g = Graph::read_edge_list(fs::read_to_string(&graph).unwrap().as_bytes()).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(stdout(&out).lines().nth(1).unwrap().contains(",6,"));
    }
}

#[test]
fn metrics_prints_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("star.txt");
    let knn = dir.path().join("knn.csv");
    fs::write(&graph, "# n=5\n0,1\n0,2\n0,3\n0,4\n").unwrap();
    let out = sfnet(&["metrics", "--graph", p(&graph), "--knn-out", p(&knn)]);
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![REPLICATE_HEADER, "NA,NA,NA,NA,5,4,1,100,0,1,0.7,-1"]
    );
    assert_eq!(fs::read_to_string(&knn).unwrap(), "k,knn_mean\n1,4\n4,1\n");
}

#[test]
fn metrics_writes_na_for_undefined_values() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k3.txt");
    fs::write(&graph, "# n=3\n0,1\n1,2\n0,2\n").unwrap();
    let out = sfnet(&["metrics", "--graph", p(&graph)]);
    assert!(stdout(&out).lines().nth(1).unwrap().ends_with(",NA"));
}

#[test]
fn experiment_writes_every_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("results");
    let out = sfnet(&[
        "experiment",
        "--n",
        "60",
        "--m-values",
        "1",
        "--replicates",
        "2",
        "--algorithms",
        "ba,mb",
        "--seed",
        "7",
        "--out-dir",
        p(&results),
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("No. components"));
    let replicates = fs::read_to_string(results.join("replicates.csv")).unwrap();
    assert_eq!(replicates.lines().count(), 1 + 4);
    assert_eq!(replicates.lines().next().unwrap(), REPLICATE_HEADER);
    let knn = fs::read_to_string(results.join("knn_long.csv")).unwrap();
    assert_eq!(
        knn.lines().next().unwrap(),
        "algorithm,m,replicate,k,knn_mean"
    );
    let table = fs::read_to_string(results.join("table1.csv")).unwrap();
    assert_eq!(table.lines().next().unwrap(), "row,BA m=1,MB m=1");
    let meta = fs::read_to_string(results.join("run_metadata.txt")).unwrap();
    for key in [
        "n=60",
        "master_seed=7",
        "rng=",
        "quartile_rule=",
        "class_boundaries=",
    ] {
        assert!(meta.contains(key), "{key}");
    }
    assert!(results.join("table1.txt").exists());
}

#[test]
fn experiment_reads_a_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.cfg");
    let results = dir.path().join("out");
    fs::write(
        &config,
        format!(
            "# tiny\nn=40\nm_values=2\nreplicates=1\nalgorithms=ma\nout_dir={}\n",
            p(&results)
        ),
    )
    .unwrap();
    let out = sfnet(&["experiment", "--config", p(&config)]);
    assert_eq!(code(&out), 0, "{out:?}");
    let replicates = fs::read_to_string(results.join("replicates.csv")).unwrap();
    assert!(replicates.lines().nth(1).unwrap().starts_with("MA,2,0,"));
}

#[test]
fn validation_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let deg = dir.path().join("deg.txt");
    fs::write(&deg, "1\n1\n").unwrap();
    let bad_graph = dir.path().join("bad.txt");
    fs::write(&bad_graph, "# n=3\n0,7\n").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "generate",
            "--algorithm",
            "ba",
            "--n",
            "5",
            "--m",
            "5",
            "--out",
            p(&graph),
        ],
        vec![
            "generate",
            "--algorithm",
            "ba",
            "--degseq",
            p(&deg),
            "--out",
            p(&graph),
        ],
        vec!["generate", "--algorithm", "xx", "--out", p(&graph)],
        vec!["metrics", "--graph", p(&bad_graph)],
        vec![
            "experiment",
            "--algorithms",
            "ba,zz",
            "--out-dir",
            p(dir.path()),
        ],
        vec![
            "experiment",
            "--replicates",
            "0",
            "--out-dir",
            p(dir.path()),
        ],
        vec![
            "experiment",
            "--mode",
            "sideways",
            "--out-dir",
            p(dir.path()),
        ],
        vec!["frobnicate"],
    ];
    for args in cases {
        let out = sfnet(&args);
        assert_eq!(code(&out), 1, "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn io_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    let under_file = blocker.join("out");
    let cases: Vec<Vec<&str>> = vec![
        vec!["metrics", "--graph", p(&missing)],
        vec![
            "generate",
            "--algorithm",
            "mr",
            "--degseq",
            p(&missing),
            "--out",
            p(&blocker),
        ],
        vec![
            "generate",
            "--algorithm",
            "ba",
            "--n",
            "10",
            "--out",
            p(&under_file),
        ],
        vec![
            "experiment",
            "--n",
            "20",
            "--replicates",
            "1",
            "--out-dir",
            p(&under_file),
        ],
        vec!["experiment", "--config", p(&missing)],
    ];
    for args in cases {
        let out = sfnet(&args);
        assert_eq!(code(&out), 2, "{args:?}: {out:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = sfnet(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("experiment"));
}

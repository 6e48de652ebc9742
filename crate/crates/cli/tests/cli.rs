use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use simdim::families::is_member_b;
use simdim::format::{parse_family, parse_graph};
use simdim::VertexSet;
use tempfile::TempDir;

fn simdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simdim")).args(args).output().expect("spawn simdim")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn core_file(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/suites").join(name).to_str().unwrap().to_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn graph_text(name: &str, n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("graph {name}\nn {n}\n");
    for (u, v) in edges {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s + "end\n"
}

fn cycle(n: usize) -> String {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph_text(&format!("C{n}"), n, &edges)
}

#[test]
fn dim_golden_lines() {
    let dir = TempDir::new().unwrap();
    let c8 = write(&dir, "c8.graph", &cycle(8));
    let p6 = write(&dir, "p6.graph", &graph_text("P6", 6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]));
    assert_eq!(stdout(&simdim(&["dim", &c8, "--metric", "adj"])), "dim=3 basis={0,2,4}\n");
    assert_eq!(stdout(&simdim(&["dim", &p6, "--metric", "full"])), "dim=1 basis={0}\n");
    assert_eq!(stdout(&simdim(&["dim", &p6, "--metric", "t=1"])), "dim=5 basis={0,1,2,3,4}\n");
}

#[test]
fn sdim_of_three_graph_family() {
    let f = core_file("three_graphs.graphs");
    assert_eq!(stdout(&simdim(&["sdim", &f])), "sdim=5 basis={0,2,6,7,8}\n");
    assert_eq!(stdout(&simdim(&["sdim", &f, "--metric", "full"])), "sdim=4 basis={0,5,6,7}\n");
    let dir = TempDir::new().unwrap();
    let c8 = write(&dir, "c8.graph", &cycle(8));
    assert_eq!(stdout(&simdim(&["sdim", &c8])), "sdim=3 basis={0,2,4}\n");
}

#[test]
fn gamma_variants() {
    let dir = TempDir::new().unwrap();
    let k5: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    let k5 = write(&dir, "k5.graph", &graph_text("K5", 5, &k5));
    let p2 = write(&dir, "p2.graph", &graph_text("P2", 2, &[(0, 1)]));
    assert_eq!(stdout(&simdim(&["gamma", &k5])), "gamma=1\n");
    assert_eq!(stdout(&simdim(&["gamma", &p2, "--variant", "gamma-prime"])), "gamma=1\n");
    assert_eq!(stdout(&simdim(&["gamma", &k5, "--variant", "sgamma"])), "gamma=1\n");
}

#[test]
fn corona_of_c4_with_k1_and_k2() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.graph", &cycle(4));
    let h = write(&dir, "h.graph", &graph_text("K1uK2", 3, &[(1, 2)]));
    let out = dir.path().join("prod.graph");
    let o = simdim(&["product", "--op", "corona", &c4, &h, "--out", out.to_str().unwrap(), "--ascii"]);
    assert!(o.status.success(), "{o:?}");
    let g = parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.order(), 16);
    assert_eq!(g.name(), "C4_odot_K1uK2");
    assert_eq!(g.edge_count(), 4 + 4 * (1 + 3));
    assert!((0..4).all(|v| g.degree(v) == 5));
}

#[test]
fn join_of_isolated_vertices_is_k2() {
    let dir = TempDir::new().unwrap();
    let n1 = write(&dir, "n1.graph", "graph N1\nn 1\nend\n");
    let o = simdim(&["product", "--op", "join", &n1, &n1]);
    assert_eq!(stdout(&o), "graph N1+N1\nn 2\ne 0 1\nend\n");
}

#[test]
fn family_generation_is_seed_stable() {
    let dir = TempDir::new().unwrap();
    let c8 = write(&dir, "c8.graph", &cycle(8));
    let args = ["family", "gen", &c8, "--basis", "{0,2,6}", "--mode", "free-outside", "--seed", "9", "--count", "5"];
    let a = simdim(&args);
    let b = simdim(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let fam = parse_family(&stdout(&a)).unwrap();
    assert_eq!(fam.len(), 5);
    let g = &fam.members()[0];
    let basis = VertexSet::parse(8, "{0,2,6}").unwrap();
    assert!(fam.iter().all(|h| is_member_b(h, g, &basis).unwrap().is_some()));

    let one = simdim(&["family", "gen", &c8, "--count", "1"]);
    assert_eq!(parse_family(&stdout(&one)).unwrap().len(), 1);
    let bad = simdim(&["family", "gen", &c8, "--basis", "{0,1}"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = simdim(&["verify", &core_file("desk.suite")]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).lines().all(|l| l.starts_with("PASS") || l.starts_with("INAPPLICABLE")));

    let dir = TempDir::new().unwrap();
    let suite = write(&dir, "bad.suite", "scenario wrong ADIM_FORMULA n=7 expect=P7:4,C7:4\n");
    let bad = simdim(&["verify", &suite]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("FAIL wrong"));

    let missing = simdim(&["verify", "/nonexistent/x.suite"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let split = write(&dir, "n2.graph", "graph N2\nn 2\nend\n");
    assert_eq!(simdim(&["dim", &split, "--metric", "full"]).status.code(), Some(3));
    let garbage = write(&dir, "bad.graph", "graph x\nn 2\ne 0 x\nend\n");
    assert_eq!(simdim(&["dim", &garbage]).status.code(), Some(2));
    assert_eq!(simdim(&["dim", "/nonexistent/g"]).status.code(), Some(2));
    let k: Vec<_> =
        (0..30).flat_map(|u| (u + 1..30).filter(move |v| (u * 7 + v * 3) % 5 < 2).map(move |v| (u, v))).collect();
    let big = write(&dir, "big.graph", &graph_text("big", 30, &k));
    assert_eq!(simdim(&["dim", &big, "--budget", "100"]).status.code(), Some(4));
}

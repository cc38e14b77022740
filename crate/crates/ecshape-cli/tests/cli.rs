//! End-to-end tests of the `ecshape` binary: each one shells out to the
//! compiled executable and checks files, stdout, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ecshape::stats::kde::GridSpec2D;
use ecshape::stats::matrix::SquareMatrix;
use ecshape::synth::sample_gaussian_timeseries;
use ecshape::PointCloud2D;
use ecshape_cli::{csvio, ecf1};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecshape"))
        .args(args)
        .output()
        .expect("failed to launch the ecshape binary")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(out.status.code(), Some(code));
    assert!(
        !out.stderr.is_empty(),
        "a failing command must explain itself on stderr"
    );
}

fn stdout_number(out: &Output) -> f64 {
    String::from_utf8_lossy(&out.stdout)
        .trim()
        .parse()
        .expect("stdout is not a number")
}

struct Dir(PathBuf);

impl Dir {
    fn new(name: &str) -> Self {
        let path = std::env::temp_dir().join(format!("ecshape-cli-{name}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&path);
        std::fs::create_dir_all(&path).unwrap();
        Dir(path)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K3: &str = "0,0.2,0.5\n0.2,0,0.9\n0.5,0.9,0\n";

#[test]
fn edge_matrix_curve_counts_triangle_edges() {
    let dir = Dir::new("k3");
    let input = dir.file("k3.csv", K3);
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-graph",
        "--input",
        s(&input),
        "--thresholds",
        "0:1:4",
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(
        table.header.as_deref(),
        Some(&["threshold", "chi", "beta0", "beta1"].map(String::from)[..])
    );
    assert_eq!(table.column(1), vec![3.0, 2.0, 1.0, 0.0]);
    assert_eq!(table.column(2), vec![3.0, 2.0, 1.0, 1.0]);
    assert_eq!(table.column(3), vec![0.0, 0.0, 0.0, 1.0]);
}

#[test]
fn edge_matrix_without_edges_keeps_chi_at_node_count() {
    let dir = Dir::new("identity");
    let input = dir.file("eye.csv", "1,0,0\n0,1,0\n0,0,1\n");
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-graph",
        "--input",
        s(&input),
        "--thresholds",
        "0:1:3",
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.column(1), vec![3.0, 3.0, 3.0]);
}

#[test]
fn node_mode_filters_the_path_graph() {
    let dir = Dir::new("node");
    let input = dir.file("weights.csv", "1\n3\n2\n");
    let thresholds = dir.file("levels.txt", "1\n2\n3\n");
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-graph",
        "--input",
        s(&input),
        "--mode",
        "node",
        "--thresholds",
        s(&thresholds),
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.column(0), vec![1.0, 2.0, 3.0]);
    assert_eq!(table.column(1), vec![1.0, 2.0, 1.0]);
}

#[test]
fn missing_input_exits_2_with_a_message() {
    let dir = Dir::new("missing");
    let out = run(&[
        "ec-graph",
        "--input",
        "/no/such/file.csv",
        "--thresholds",
        "4",
        "--output",
        s(&dir.path("curve.csv")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn asymmetric_edge_matrix_exits_2() {
    let dir = Dir::new("asym");
    let input = dir.file("bad.csv", "0,0.2\n0.3,0\n");
    let out = run(&[
        "ec-graph",
        "--input",
        s(&input),
        "--thresholds",
        "0:1:2",
        "--output",
        s(&dir.path("curve.csv")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn field_curve_from_a_csv_row() {
    let dir = Dir::new("field1d");
    let input = dir.file("field.csv", "0,2,1,3,0\n");
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-field",
        "--input",
        s(&input),
        "--direction",
        "superlevel",
        "--thresholds",
        "0.5:2.5:3",
        "--betti",
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.column(0), vec![2.5, 1.5, 0.5]);
    assert_eq!(table.column(1), vec![1.0, 2.0, 1.0]);
    assert_eq!(table.column(2), vec![1.0, 2.0, 1.0]);
    assert_eq!(table.column(3), vec![0.0, 0.0, 0.0]);
}

#[test]
fn constant_field_above_its_level_is_one_block() {
    let dir = Dir::new("ones");
    let input = dir.file("ones.csv", "1,1\n1,1\n");
    let thresholds = dir.file("level.txt", "1\n");
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-field",
        "--input",
        s(&input),
        "--thresholds",
        s(&thresholds),
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.column(1), vec![1.0]);
}

#[test]
fn ring_field_has_one_component_and_one_loop() {
    let dir = Dir::new("ring");
    let input = dir.file("ring.csv", "1,1,1\n1,0,1\n1,1,1\n");
    let thresholds = dir.file("level.txt", "0.5\n");
    let output = dir.path("curve.csv");
    let out = run(&[
        "ec-field",
        "--input",
        s(&input),
        "--thresholds",
        s(&thresholds),
        "--betti",
        "--output",
        s(&output),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.rows[0], vec![0.5, 0.0, 1.0, 1.0]);
}

#[test]
fn precision_recovers_the_chain_sign_pattern() {
    let prec = SquareMatrix::new(
        3,
        vec![2.0, -0.8, 0.0, -0.8, 2.0, -0.8, 0.0, -0.8, 2.0],
    )
    .unwrap();
    let ts = sample_gaussian_timeseries(&prec, 20_000, 7).unwrap();
    let mut csv = String::new();
    for r in 0..ts.rows() {
        let row: Vec<String> = (0..ts.cols()).map(|c| ts.get(r, c).to_string()).collect();
        csv.push_str(&row.join(","));
        csv.push('\n');
    }

    let dir = Dir::new("precision");
    let input = dir.file("series.csv", &csv);
    let output = dir.path("graph.csv");
    let out = run(&["precision", "--input", s(&input), "--output", s(&output)]);
    assert_ok(&out);

    let table = csvio::read_table(&output).unwrap();
    assert_eq!(table.rows.len(), 3);
    assert_eq!(table.width(), 3);
    for i in 0..3 {
        assert_eq!(table.rows[i][i], 0.0);
        for j in 0..3 {
            assert_eq!(table.rows[i][j], table.rows[j][i]);
        }
    }
    // True partial correlations: 0.4 on the chain links, 0 across them.
    assert!((table.rows[0][1] - 0.4).abs() < 0.05, "w01 {}", table.rows[0][1]);
    assert!((table.rows[1][2] - 0.4).abs() < 0.05, "w12 {}", table.rows[1][2]);
    assert!(table.rows[0][2] < 0.05, "w02 {}", table.rows[0][2]);
}

#[test]
fn precision_needs_at_least_two_rows() {
    let dir = Dir::new("onerow");
    let input = dir.file("series.csv", "1,2\n");
    let out = run(&[
        "precision",
        "--input",
        s(&input),
        "--output",
        s(&dir.path("graph.csv")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn precision_without_ridge_on_singular_input_exits_3() {
    let mut csv = String::new();
    for i in 0..20 {
        csv.push_str(&format!("{0},{0}\n", i as f64 * 0.1));
    }
    let dir = Dir::new("singular");
    let input = dir.file("series.csv", &csv);
    let out = run(&[
        "precision",
        "--input",
        s(&input),
        "--ridge",
        "0",
        "--output",
        s(&dir.path("graph.csv")),
    ]);
    assert_exit(&out, 3);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ridge"), "stderr should advise a ridge: {stderr}");
}

#[test]
fn kde_mass_is_one_and_the_field_reads_back() {
    let dir = Dir::new("kde");
    let input = dir.file("points.csv", "0,0\n1,0\n0.5,0.8\n");
    let density = dir.path("density.ecf1");
    let out = run(&[
        "kde",
        "--input",
        s(&input),
        "--bandwidth",
        "0.3",
        "--grid",
        "64,48",
        "--output",
        s(&density),
    ]);
    assert_ok(&out);

    let field = ecf1::read_field(&density).unwrap();
    assert_eq!(field.dims(), &[64, 48]);
    let cloud = PointCloud2D::new(vec![(0.0, 0.0), (1.0, 0.0), (0.5, 0.8)]).unwrap();
    let grid = GridSpec2D::covering(&cloud, 0.3, 64, 48).unwrap();
    let (dx, dy) = grid.cell_size();
    let mass: f64 = field.values().iter().sum::<f64>() * dx * dy;
    assert!((mass - 1.0).abs() <= 1e-2, "mass {mass}");

    // The ECF1 output feeds straight back into ec-field by content sniffing.
    let curve = dir.path("curve.csv");
    let out = run(&[
        "ec-field",
        "--input",
        s(&density),
        "--thresholds",
        "5",
        "--output",
        s(&curve),
    ]);
    assert_ok(&out);
    assert!(csvio::read_table(&curve).unwrap().rows.len() == 5);
}

#[test]
fn kde_of_two_far_points_splits_at_a_high_level() {
    let dir = Dir::new("kde2");
    let input = dir.file("points.csv", "0,0\n4,0\n");
    let density = dir.path("density.ecf1");
    let out = run(&[
        "kde",
        "--input",
        s(&input),
        "--bandwidth",
        "0.3",
        "--grid",
        "96,32",
        "--output",
        s(&density),
    ]);
    assert_ok(&out);

    let thresholds = dir.file("level.txt", "0.4\n");
    let curve = dir.path("curve.csv");
    let out = run(&[
        "ec-field",
        "--input",
        s(&density),
        "--thresholds",
        s(&thresholds),
        "--betti",
        "--output",
        s(&curve),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&curve).unwrap();
    assert_eq!(table.rows[0][1], 2.0, "chi");
    assert_eq!(table.rows[0][2], 2.0, "beta0");
    assert_eq!(table.rows[0][3], 0.0, "beta1");
}

#[test]
fn kde_of_one_point_peaks_at_the_center_cell() {
    let dir = Dir::new("kde1");
    let input = dir.file("points.csv", "0.5,-0.25\n");
    let density = dir.path("density.ecf1");
    let out = run(&[
        "kde",
        "--input",
        s(&input),
        "--bandwidth",
        "0.2",
        "--grid",
        "33,33",
        "--output",
        s(&density),
    ]);
    assert_ok(&out);

    let field = ecf1::read_field(&density).unwrap();
    let argmax = field
        .values()
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap()
        .0;
    assert_eq!(argmax, 16 * 33 + 16);
}

#[test]
fn rdsim_is_deterministic_and_conserves_mass_without_reaction() {
    let dir = Dir::new("rdsim");
    let first = dir.path("u1.ecf1");
    let second = dir.path("u2.ecf1");
    for output in [&first, &second] {
        let out = run(&[
            "rdsim", "--D", "3", "--R", "0", "--n", "16", "--T", "4", "--seed", "5",
            "--output", s(output),
        ]);
        assert_ok(&out);
    }
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    let field = ecf1::read_field(&first).unwrap();
    assert_eq!(field.dims(), &[16, 16, 4]);
    let values = field.values();
    let mut means = [0.0; 4];
    for cell in 0..16 * 16 {
        for (t, mean) in means.iter_mut().enumerate() {
            *mean += values[cell * 4 + t] / 256.0;
        }
    }
    for t in 1..4 {
        assert!(
            (means[t] - means[0]).abs() < 1e-10,
            "snapshot {t} mean drifted: {} vs {}",
            means[t],
            means[0]
        );
    }
}

#[test]
fn rdsim_with_paper_parameters_stays_finite() {
    let dir = Dir::new("rdpaper");
    let output = dir.path("u.ecf1");
    let out = run(&[
        "rdsim", "--D", "3", "--R", "0.8", "--n", "16", "--T", "4",
        "--output", s(&output),
    ]);
    assert_ok(&out);
    // read_field re-validates finiteness of every value.
    let field = ecf1::read_field(&output).unwrap();
    assert_eq!(field.len(), 16 * 16 * 4);
}

#[test]
fn rdsim_rejects_an_unstable_step() {
    let dir = Dir::new("unstable");
    let out = run(&[
        "rdsim", "--D", "3", "--R", "0", "--n", "16", "--T", "4", "--dt", "0.1",
        "--output", s(&dir.path("u.ecf1")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn project_maps_identical_curves_to_zero_scores() {
    let dir = Dir::new("project");
    let curves = dir.path("curves");
    std::fs::create_dir(&curves).unwrap();
    for name in ["a.csv", "b.csv", "c.csv"] {
        std::fs::write(curves.join(name), "0,3\n0.5,2\n1,0\n").unwrap();
    }
    let scores = dir.path("scores.csv");
    let svg = dir.path("scores.svg");
    let out = run(&[
        "project",
        "--input",
        s(&curves),
        "--output",
        s(&scores),
        "--svg",
        s(&svg),
    ]);
    assert_ok(&out);

    let table = csvio::read_table(&scores).unwrap();
    assert_eq!(
        table.header.as_deref(),
        Some(&["pc1", "pc2"].map(String::from)[..])
    );
    assert_eq!(table.rows.len(), 3);
    for row in &table.rows {
        for &v in row {
            assert!(v.abs() < 1e-9, "score {v} should vanish");
        }
    }

    let doc = std::fs::read_to_string(&svg).unwrap();
    assert!(doc.starts_with("<svg"));
    assert_eq!(doc.matches("<circle").count(), 3);
    assert!(doc.contains(">a<"), "dots carry filename labels");
}

#[test]
fn project_with_too_many_components_exits_2() {
    let dir = Dir::new("bigk");
    let curves = dir.path("curves");
    std::fs::create_dir(&curves).unwrap();
    for name in ["a.csv", "b.csv", "c.csv"] {
        std::fs::write(curves.join(name), "0,3\n0.5,2\n1,0\n").unwrap();
    }
    let out = run(&[
        "project",
        "--input",
        s(&curves),
        "--k",
        "5",
        "--output",
        s(&dir.path("scores.csv")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn project_rejects_mismatched_thresholds() {
    let dir = Dir::new("mismatch");
    let curves = dir.path("curves");
    std::fs::create_dir(&curves).unwrap();
    std::fs::write(curves.join("a.csv"), "0,3\n0.5,2\n1,0\n").unwrap();
    std::fs::write(curves.join("b.csv"), "0,3\n0.6,2\n1,0\n").unwrap();
    let out = run(&[
        "project",
        "--input",
        s(&curves),
        "--output",
        s(&dir.path("scores.csv")),
    ]);
    assert_exit(&out, 2);
}

#[test]
fn classify_scores_a_separable_set_perfectly() {
    let dir = Dir::new("classify");
    let features = dir.file("x.csv", "-2\n-1\n1\n2\n");
    let labels = dir.file("y.csv", "-1\n-1\n1\n1\n");
    let pair = format!("{},{}", s(&features), s(&labels));
    let out = run(&["classify", "--train", &pair, "--test", &pair]);
    assert_ok(&out);
    assert_eq!(stdout_number(&out), 1.0);
}

#[test]
fn dist_is_zero_on_itself_and_euclidean_between_curves() {
    let dir = Dir::new("dist");
    let a = dir.file("a.csv", "0,1\n1,2\n");
    let b = dir.file("b.csv", "0,1\n1,0\n");
    let out = run(&["dist", "--a", s(&a), "--b", s(&a)]);
    assert_ok(&out);
    assert_eq!(stdout_number(&out), 0.0);

    let out = run(&["dist", "--a", s(&a), "--b", s(&b)]);
    assert_ok(&out);
    assert_eq!(stdout_number(&out), 2.0);

    let c = dir.file("c.csv", "0,1\n2,2\n");
    let out = run(&["dist", "--a", s(&a), "--b", s(&c)]);
    assert_exit(&out, 2);
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gmq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmq"))
        .args(args)
        .env("GMQ_THREADS", "2")
        .output()
        .expect("gmq runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .collect()
}

#[test]
fn nodes_with_empty_allocation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("n.csv");
    let o = gmq(&["nodes", "--n", "2", "--a", "1", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("nodes: 0"));
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv, "dim,x1,weight\n");
}

#[test]
fn nodes_respects_budget_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = |p: &Path| {
        vec![
            "nodes", "--n", "256", "--a", "1.8", "--delta", "1", "--base", "midpoint", "--psi",
            "--out",
        ]
        .into_iter()
        .map(String::from)
        .chain([path_str(p).to_string()])
        .collect::<Vec<_>>()
    };
    for p in [&a, &b] {
        let argv = args(p);
        let o = gmq(&argv.iter().map(String::as_str).collect::<Vec<_>>());
        assert!(o.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    let rows = data_rows(&text);
    assert!(!rows.is_empty() && rows.len() <= 256);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let sum: f64 = rows
        .iter()
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((sum - 1.0).abs() < 0.05);
}

#[test]
fn nodes_two_dimensional_fibonacci() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.csv");
    let o = gmq(&[
        "nodes",
        "--n",
        "3000",
        "--s",
        "2",
        "--dim",
        "2",
        "--base",
        "fibonacci",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("dim,x1,x2,weight\n"));
    let rows = data_rows(&text);
    assert!(rows.len() <= 3000);
    assert!(rows.iter().all(|l| l.starts_with("2,")));
}

#[test]
fn nodes_requires_a_rate() {
    let o = gmq(&["nodes", "--n", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gmq(&["nodes", "--n", "100", "--a", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("n.csv");
    let o = gmq(&["nodes", "--n", "64", "--a", "1", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing"));
}

#[test]
fn sweep_rows_and_slope_comment() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = gmq(&[
        "sweep",
        "--s",
        "1.8",
        "--grid",
        "32,64,128",
        "--m",
        "1000",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("n_requested,n_actual,s,m,err\n"));
    assert_eq!(data_rows(&text).len(), 3);
    let slopes: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("# slope s=1.8: "))
        .collect();
    assert_eq!(slopes.len(), 1);
    for row in data_rows(&text) {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[2], "1.8");
        assert_eq!(f[3], "1000");
        assert!(f[1].parse::<u64>().unwrap() <= f[0].parse::<u64>().unwrap());
    }
}

#[test]
fn sweep_is_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let out = dir.path().join(format!("t{threads}.csv"));
        let o = Command::new(env!("CARGO_BIN_EXE_gmq"))
            .args([
                "sweep",
                "--s",
                "1.1,2.7",
                "--grid",
                "32,64,128,256",
                "--m",
                "2000",
                "--out",
                path_str(&out),
            ])
            .env("GMQ_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        outputs.push(fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn sweep_rejects_bad_grids() {
    let o = gmq(&["sweep", "--s", "1.1", "--grid", "64,32,128"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gmq(&["sweep", "--s", "0.4", "--grid", "32,64,128"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_low_smoothness_errors_decrease() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("low.csv");
    let o = gmq(&["sweep", "--s", "0.6,0.8,1.0", "--out", path_str(&out)]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    for s in ["0.6", "0.8", "1"] {
        let errs: Vec<f64> = data_rows(&text)
            .iter()
            .map(|l| l.split(',').collect::<Vec<_>>())
            .filter(|f| f[2] == s)
            .map(|f| f[4].parse().unwrap())
            .collect();
        assert_eq!(errs.len(), 8);
        for w in errs.windows(2) {
            assert!(w[1] < w[0], "s={s}: {errs:?}");
        }
    }
}

#[test]
fn kernel_check_passes_and_is_reproducible() {
    let a = gmq(&["kernel-check", "--seed", "42", "--samples", "200"]);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    let b = gmq(&["kernel-check", "--seed", "42", "--samples", "200"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    for name in ["lower_bound", "upper_bound", "close_pair", "eigen"] {
        assert!(text.contains(name), "{text}");
    }
}

#[test]
fn kernel_check_rejects_zero_samples() {
    let o = gmq(&["kernel-check", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plot_one_block_per_s() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let gp = dir.path().join("p.gp");
    let o = gmq(&[
        "sweep",
        "--s",
        "1.1,2.8",
        "--grid",
        "32,64,128",
        "--m",
        "500",
        "--out",
        path_str(&csv),
    ]);
    assert!(o.status.success());
    let o = gmq(&["plot", path_str(&csv), "--out", path_str(&gp)]);
    assert!(o.status.success());
    let script = fs::read_to_string(&gp).unwrap();
    assert_eq!(script.matches("<< EOD").count(), 2);
    assert!(script.contains("$data0") && script.contains("$data1") && !script.contains("$data2"));
    assert!(script.contains("x**(-1.1)") && script.contains("x**(-2.8)"));
    assert!(script.contains("set logscale xy"));
}

#[test]
fn plot_reports_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    fs::write(&empty, "n_requested,n_actual,s,m,err\n").unwrap();
    let o = gmq(&[
        "plot",
        path_str(&empty),
        "--out",
        path_str(&dir.path().join("p.gp")),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no data rows"));

    let bad = dir.path().join("bad.csv");
    fs::write(
        &bad,
        "n_requested,n_actual,s,m,err\n32,32,1.1,100,1e-2\n64,abc,1.1,100,1e-3\n",
    )
    .unwrap();
    let o = gmq(&[
        "plot",
        path_str(&bad),
        "--out",
        path_str(&dir.path().join("q.gp")),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("line 3"),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    let o = gmq(&["plot", path_str(&dir.path().join("nope.csv"))]);
    assert_eq!(o.status.code(), Some(3));
}

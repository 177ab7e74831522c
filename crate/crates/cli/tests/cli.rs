use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casteljau")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("casteljau-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn cubic_csv() -> PathBuf {
    scratch("cubic.csv", "# x,y\n0,0\n1,3\n3,3\n4,0\n")
}

#[test]
fn eval_exact_and_float() {
    let pts = cubic_csv();
    let p = pts.to_str().unwrap();
    let o = bin(&["eval", "--degree", "3", "--points", p, "--t", "1/2", "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2,9/4\n");
    let o = bin(&["eval", "--points", p, "--t", "0.5"]);
    assert_eq!(stdout(&o), "2.0000000000000000e0,2.2500000000000000e0\n");
}

#[test]
fn exit_codes() {
    let pts = cubic_csv();
    let p = pts.to_str().unwrap();
    assert_eq!(bin(&["eval", "--degree", "2", "--points", p, "--t", "0"]).status.code(), Some(1));
    assert_eq!(bin(&["eval", "--points", p, "--t", "abc"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "--t", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["meneard", "--n", "0"]).status.code(), Some(1));
    assert_eq!(bin(&["roots", "--coeffs", "1,-2,1"]).status.code(), Some(1));
    assert_eq!(bin(&["smooth", "--n", "5", "--c", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    let bad = scratch("bad.csv", "0,0\n1,x\n");
    assert_eq!(bin(&["eval", "--points", bad.to_str().unwrap(), "--t", "0"]).status.code(), Some(1));
}

#[test]
fn subdivide_and_blossom() {
    let pts = cubic_csv();
    let p = pts.to_str().unwrap();
    let o = stdout(&bin(&["subdivide", "--points", p, "--t", "1/2", "--exact"]));
    assert_eq!(o, "# left [0, 1/2]\n0,0\n1/2,3/2\n5/4,9/4\n2,9/4\n# right [1/2, 1]\n2,9/4\n11/4,9/4\n7/2,3/2\n4,0\n");
    let o = stdout(&bin(&["blossom", "--points", p, "--args", "0,1/2,1", "--exact"]));
    assert_eq!(o, "2,3\n");
}

#[test]
fn svg_uses_cubic_paths() {
    let pts = cubic_csv();
    let svg = scratch("curve.svg", "");
    let o = bin(&["eval", "--points", pts.to_str().unwrap(), "--t", "0.3", "--svg", svg.to_str().unwrap(), "--flatness", "0.01"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains("<path") && text.contains(" C"));
}

#[test]
fn roots_example() {
    let o = stdout(&bin(&["roots", "--coeffs", "1,-2,-1,1"]));
    assert!(o.contains("root 2: interval (1, 2)  cf [1; 1, 4, 20, 2, 3, 1, 6, 10, 5, 2, 2, ...]"), "{o}");
    let o = stdout(&bin(&["roots", "--coeffs", "1,-5,6,-1", "--depth", "3"]));
    assert!(o.contains("interval (5, 6)"), "{o}");
    let o = stdout(&bin(&["roots", "--coeffs", "1,-2,-1,1", "--all", "--depth", "4"]));
    assert_eq!(o.matches("root ").count(), 3);
    let o = stdout(&bin(&["roots", "--coeffs", "1,-2,-1,1", "--tables", "1"]));
    assert!(o.contains("  2  1 6 5 1"), "{o}");
}

#[test]
fn smoothing_matrix_and_restitution() {
    let o = stdout(&bin(&["smooth", "--q", "6", "--s", "3"]));
    assert!(o.starts_with("characteristic (5,3,3)"));
    assert!(o.contains("1/240 x columns [-2, -1, 0, 1, 2, 3]"));
    assert!(o.contains("c2                     0   -20   168   108   -16     0"));
    // samples of (t, t^3 - 2t); every output point lies on the quintic form of the cubic
    let rows: String = (0..8).map(|i: i64| format!("{i},{}\n", i * i * i - 2 * i)).collect();
    let samples = scratch("samples.csv", &rows);
    let o = stdout(&bin(&["smooth", "--n", "5", "--c", "3", "--r", "3", "--samples", samples.to_str().unwrap(), "--exact"]));
    let lines: Vec<&str> = o.lines().collect();
    assert_eq!(lines.len(), 5 * 3 + 1);
    assert_eq!(lines[0], "2,4");
    assert_eq!(lines[5], "3,21");
    assert_eq!(lines[15], "5,115");
}

#[test]
fn tolerance_report() {
    let o = stdout(&bin(&["tol", "--d0", "1", "--d1", "1"]));
    assert!(o.contains("max deviation     2.5000000000000000e-1"), "{o}");
    let o = bin(&["tol", "--d0", "1", "--d1", "1", "--variant", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = stdout(&bin(&["tol", "--d0", "0.01", "--d1", "-0.02", "--geodesic", "0.1,0.2", "--radius", "5", "--budget", "1,1,1,1"]));
    assert!(o.ends_with("budget              admitted\n"), "{o}");
}

#[test]
fn intersect_unit_circles() {
    let o = stdout(&bin(&["intersect", "--f", "1,1,-1,0,0,0", "--g", "1,1,0,0,-1,0", "--start", "0.4,0.8", "--cycles", "3"]));
    assert!(o.starts_with("step,x,y,w,residual\n0,"));
    let last = o.lines().last().unwrap();
    let xy: Vec<f64> = last.trim_start_matches("# point ").split(',').map(|s| s.parse().unwrap()).collect();
    assert!((xy[0] - 0.5).abs() < 1e-12 && (xy[1] - 3f64.sqrt() / 2.0).abs() < 1e-12);
    let o = stdout(&bin(&["intersect", "--f", "1,1,-1,0,0,0", "--g", "1,1,0,0,-1,0", "--start", "1/2,1", "--cycles", "1", "--exact"]));
    assert!(o.lines().nth(2).unwrap().starts_with("1,1/2,6/7,1,"), "{o}");
}

#[test]
fn golden_euclid_quat_meneard() {
    let o = stdout(&bin(&["golden", "--n", "3", "--k", "6"]));
    assert!(o.starts_with("M^6\n14 25 31\n25 45 56\n31 56 70\n"));
    let o = stdout(&bin(&["euclid", "99", "70"]));
    assert!(o.contains("quotients [1; 2, 2, 2, 2, 2]\nremainders 29,12,5,2,1,0\ngcd 1\n"));
    let o = stdout(&bin(&["euclid", "3", "2", "1", "--exact"]));
    assert!(o.starts_with("step,op,values\n0,,3,2,1\n"), "{o}");
    let o = stdout(&bin(&["quat", "rotate", "--q", "1,1,0,0", "--v", "0,1,0", "--exact"]));
    assert!(o.starts_with("vector 0,0,1\n"));
    let o = stdout(&bin(&["quat", "mul", "--a", "0,1,0,0", "--b", "0,0,1,0", "--exact"]));
    assert_eq!(o, "product 0,0,0,1\nnorm 1\n");
    let o = stdout(&bin(&["meneard", "--n", "1"]));
    assert!(o.starts_with("12^3 - 10^3 = 9^3 - 1 = 6^3 + 8^3\n") && o.ends_with("holds true\n"));
}

#[test]
fn reproduce_matches_golden() {
    let report = scratch("report.txt", "");
    let o = bin(&["reproduce-paper", "--out", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).matches("ok ").count(), 6);
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("S 0 1 1 3 7 17 41 99 239"));
    assert!(text.contains(" 5    29   41   12    1"));
}

#[test]
fn reproduce_detects_drift() {
    let dir = std::env::temp_dir().join(format!("casteljau-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden");
    for entry in std::fs::read_dir(&golden).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.join(entry.file_name())).unwrap();
    }
    let m6 = dir.join("golden_m6.txt");
    let text = std::fs::read_to_string(&m6).unwrap().replace("31 56 70", "31 56 71");
    std::fs::write(&m6, text).unwrap();
    let o = bin(&["reproduce-paper", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("FAIL golden_m6.txt") && err.contains("-  14: 31 56 71"), "{err}");
}

#[test]
fn output_is_deterministic() {
    let args = ["intersect", "--f", "1,2,-3,0,1,0", "--g", "2,1,-2,1,0,0", "--start", "0.5,0.6"];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
    let args = ["reproduce-paper"];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
}

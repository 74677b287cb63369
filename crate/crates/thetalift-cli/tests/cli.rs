use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetalift")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value(out: &str, key: &str) -> Option<String> {
    out.split_whitespace().find_map(|t| t.strip_prefix(&format!("{key}=")).map(str::to_string))
}

#[test]
fn orbits_of_discriminant_five() {
    let o = run(&["orbits", "-N", "1", "-D", "5", "-h", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "COUNT").as_deref(), Some("1"));
}

#[test]
fn orbits_with_genus_character() {
    let o = run(&["orbits", "-N", "1", "-D", "-15", "-h", "1", "--delta", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    // two form classes, each positive and negative definite
    assert_eq!(value(&out, "COUNT").as_deref(), Some("4"));
    let chis: Vec<_> = out.lines().filter_map(|l| value(l, "CHI")).collect();
    assert_eq!(chis.len(), 4);
    assert!(chis.iter().all(|c| c == "1" || c == "-1"));
}

#[test]
fn phi_vanishes_for_negative_n0() {
    let f = data("vanishing.vvmf");
    let o = run(&["phi", "-z", "0.1,0.9", "-f", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "PHI_RE").unwrap().parse::<f64>().unwrap(), 0.0);
    assert_eq!(value(&out, "PHI_IM").unwrap().parse::<f64>().unwrap(), 0.0);
}

#[test]
fn phi_reports_chamber_terms() {
    let f = data("example.vvmf");
    let o = run(&["phi", "-z", "0.1,0.9", "-f", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(value(&out, "WALLS").unwrap().parse::<usize>().unwrap() > 0);
    let re = value(&out, "PHI_RE").unwrap();
    // 15 significant digits
    assert_eq!(re.split('e').next().unwrap().trim_start_matches('-').replace('.', "").len(), 15);
    assert_eq!(stdout(&run(&["phi", "-z", "0.1,0.9", "-f", f.to_str().unwrap()])), out);
}

#[test]
fn flag_errors_exit_two() {
    let f = data("example.vvmf");
    assert_eq!(run(&["phi", "-z", "0.1,-0.9", "-f", f.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["phi", "-z", "0.1", "-f", f.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["orbits", "-N", "1", "-D", "5"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["shimura", "-f", f.to_str().unwrap(), "-m", "0"]).status.code(), Some(2));
}

#[test]
fn input_format_errors_exit_three() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "VVMF N=1 K=2 DELTA=5 R=1\nCP 1 -5 four 1.0 0.0").unwrap();
    let o = run(&["phi", "-z", "0.1,0.9", "-f", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let mut asym = tempfile::NamedTempFile::new().unwrap();
    writeln!(asym, "VVMF N=1 K=1 DELTA=5 R=1\nCP 0 0 1 1.0 0.0").unwrap();
    assert_eq!(run(&["phi", "-z", "0.1,0.9", "-f", asym.path().to_str().unwrap()]).status.code(), Some(3));

    let mut cusp = tempfile::NamedTempFile::new().unwrap();
    writeln!(cusp, "CUSP N=1\nA 1 1.0 0.0").unwrap();
    assert_eq!(run(&["shintani", "-g", cusp.path().to_str().unwrap(), "-m", "-5/4", "-h", "1"]).status.code(), Some(3));
    assert_eq!(run(&["phi", "-z", "0.1,0.9", "-f", "/nonexistent/input.vvmf"]).status.code(), Some(3));
}

#[test]
fn shimura_matches_xi_coefficients() {
    let f = data("weight1_level2.vvmf");
    let o = run(&["shimura", "-f", f.to_str().unwrap(), "-m", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().filter(|l| l.starts_with("M=")).collect();
    assert_eq!(lines.len(), 7);
    for l in &lines[1..] {
        assert!(value(l, "XI_REL_DIFF").unwrap().parse::<f64>().unwrap() < 1e-12);
    }
}

#[test]
fn shintani_of_delta() {
    let g = data("delta.cusp");
    let o = run(&["shintani", "-g", g.to_str().unwrap(), "-m", "-5/4", "-h", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "ORBITS").as_deref(), Some("1"));
    assert!(value(&out, "ERROR").unwrap().parse::<f64>().unwrap() < 1e-8);
    // the index must be negative
    assert_eq!(run(&["shintani", "-g", g.to_str().unwrap(), "-m", "1/4", "-h", "1"]).status.code(), Some(1));
}

#[test]
fn verify_single_suite_and_all() {
    let o = run(&["verify", "--suite", "gamma62"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SUITE=gamma62"));
    let o = run(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("SUITE=")).count(), 11);
    assert_eq!(value(&out, "FAILED").as_deref(), Some("0"));
}

#[test]
fn verify_with_input_file() {
    let f = data("example.vvmf");
    let o = run(&["verify", "--suite", "wallcross", "-f", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn plot_writes_svg_with_oriented_walls() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("walls.svg");
    let f = data("example.vvmf");
    let o = run(&["plot", "-f", f.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"version="1.1""#) && svg.trim_end().ends_with("</svg>"));
    let walls = value(&stdout(&o), "WALLS").unwrap().parse::<usize>().unwrap();
    assert!(walls > 0);
    assert_eq!(svg.matches(r#"marker-end="url(#arrow)""#).count(), walls);
    assert!(svg.contains(" A "), "semicircular walls are drawn as arcs");
    // empty principal part
    let mut empty = tempfile::NamedTempFile::new().unwrap();
    writeln!(empty, "VVMF N=1 K=2 DELTA=5 R=1").unwrap();
    let o = run(&["plot", "-f", empty.path().to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(value(&stdout(&o), "WALLS").as_deref(), Some("0"));
    assert_eq!(run(&["plot", "-f", f.to_str().unwrap(), "-o", out.to_str().unwrap(), "--ymax", "0"]).status.code(), Some(2));
}

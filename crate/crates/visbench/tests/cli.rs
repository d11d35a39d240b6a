//! End-to-end tests of the command-line surface, run against the real
//! binary so exit codes and streams behave as shipped.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

fn visbench(args: &[&str]) -> Output {
    visbench_env(args, &[])
}

fn visbench_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_visbench"));
    cmd.args(args).env_remove("VISBENCH_PRECISION");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn entropy_command() {
    let out = visbench(&["entropy", "--pmf", fixture("pmf/mip_q.csv").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0.628\n");
}

#[test]
fn divergence_command_prints_published_value() {
    let out = visbench(&[
        "divergence",
        "--measure",
        "js",
        "--p",
        fixture("pmf/mip_pa.csv").to_str().unwrap(),
        "--q",
        fixture("pmf/mip_q.csv").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0.758\n");
}

#[test]
fn divergence_of_identical_files_is_zero() {
    let q = fixture("pmf/mip_q.csv");
    let out = visbench(&["divergence", "--measure", "js", "--p", q.to_str().unwrap(), "--q", q.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0.000\n");
}

#[test]
fn divergence_decomposition_and_svg() {
    let p = fixture("pmf/mip_pa.csv");
    let q = fixture("pmf/mip_q.csv");
    let out = visbench(&[
        "divergence", "--measure", "ncm:1", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap(), "--decompose",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("letter,ncm:1\n"));
    assert!(text.contains("total,0.926"));

    let out = visbench(&[
        "divergence", "--measure", "js", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap(),
        "--format", "svg-bars",
    ]);
    assert!(out.status.success());
    let svg = stdout_of(&out);
    assert!(svg.starts_with("<svg"));
    // per-letter values embedded in the bars sum to the reported total
    let mut sum = 0.0;
    for part in svg.split("data-value=\"").skip(1) {
        sum += part.split('"').next().unwrap().parse::<f64>().unwrap();
    }
    assert!((sum - 0.758).abs() < 1.5e-3, "{sum}");
}

#[test]
fn benefit_command_reads_manifest() {
    let out = visbench(&[
        "benefit",
        fixture("benefit/mip_b.manifest").to_str().unwrap(),
        "--measure",
        "js",
        "--cost",
        "9.27",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("benefit,0.500"), "{text}");
    assert!(text.contains("cost-benefit ratio (bits/seconds),0.054"), "{text}");
}

#[test]
fn scenario_list_and_run() {
    let out = visbench(&["scenario", "list"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "good-bad\nabcd\nmip-arteries\nmip-arteries-qprime\nisosurface\nlondon\n"
    );

    let out = visbench(&["scenario", "run", "london", "--xi", "20", "--measure", "new:2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("spot-on,0.287"), "{text}");
    assert!(text.contains("close,0.033"), "{text}");
    assert!(text.contains("wild-guess,-0.017"), "{text}");

    let out = visbench(&["scenario", "run", "mip-arteries"]);
    let text = stdout_of(&out);
    assert!(text.contains("A,0.758,0.909,0.833,0.926,0.856"), "{text}");
    assert!(text.contains("B,0.500,0.302,0.586,0.296,0.585"), "{text}");

    let out = visbench(&["scenario", "run", "good-bad", "--format", "markdown"]);
    let text = stdout_of(&out);
    assert!(text.contains("| UC | 0.010 |"), "{text}");

    let out = visbench(&["scenario", "run", "unknown-name"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn survey_analyze_london() {
    let out = visbench(&[
        "survey", "analyze", "--kind", "london",
        "--file", fixture("survey/london_kcl.csv").to_str().unwrap(),
        "--overrides", fixture("survey/overrides.csv").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("Q1,19.250,8,30,9.270"), "{text}");
    assert!(text.contains("Q1,4,5,3,"), "{text}");
    assert!(text.contains("P2 wild-guess->close"), "{text}"); // Q2 deviation note
    assert!(text.contains("P9,"), "{text}");
}

#[test]
fn survey_analyze_volvis() {
    let out = visbench(&[
        "survey", "analyze", "--kind", "volvis",
        "--file", fixture("survey/volvis.csv").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("Q5,B:1 a:8 D:1,1,8,1"), "{text}");
    assert!(text.contains("S3,4,4-5"), "{text}");
}

#[test]
fn mcda_command() {
    let out = visbench(&["mcda"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("winner,new:2"), "{text}");
    assert!(text.contains("sum 6-9 (1-9),,15 (39),,12 (32),17 (41),15 (35),13 (37),,"), "{text}");

    let out = visbench(&["mcda", "--weights", "critical=4,important=2,helpful=1", "--precision", "0"]);
    let text = stdout_of(&out);
    assert!(text.contains("new:2,76"), "{text}");

    let out = visbench(&["mcda", "--table", fixture("mcda/criteria.csv").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("winner,new:2"));
}

#[test]
fn grid_paths_command() {
    let out = visbench(&["grid-paths", "--n", "2", "--list"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "3\nE,E\nNE,SE\nSE,NE\n");

    let out = visbench(&["grid-paths", "--n", "4"]);
    assert_eq!(stdout_of(&out), "19\n");

    let out = visbench(&["grid-paths", "--n", "4", "--max-sharp-turns", "1"]);
    assert_eq!(stdout_of(&out), "15\n");

    let out = visbench(&["grid-paths", "--n", "2", "--max-turn", "45"]);
    assert_eq!(stdout_of(&out), "1\n");

    let out = visbench(&["grid-paths", "--n", "2", "--directions", "e,up"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reproduce_writes_reports_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("reports");
    let run = |p: &Path| visbench(&["reproduce", "--out", p.to_str().unwrap()]);
    let out = run(&out_dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let log = stdout_of(&out);
    assert!(log.contains("worked_example.csv"));
    assert!(log.ends_with("failures\n") || log.contains("total:"), "{log}");
    let summary = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert!(summary.lines().last().unwrap().ends_with(",0"), "{summary}");

    // byte-identical on a second run
    let mip = std::fs::read_to_string(out_dir.join("mip_divergence.csv")).unwrap();
    let out = run(&out_dir);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(out_dir.join("mip_divergence.csv")).unwrap(), mip);

    // corrupted fixtures flag failing rows and exit non-zero
    let fixdir = dir.path().join("fixtures");
    std::fs::create_dir_all(&fixdir).unwrap();
    let kcl = std::fs::read_to_string(fixture("survey/london_kcl.csv")).unwrap();
    std::fs::write(fixdir.join("london_kcl.csv"), kcl.replace("P1,KCL,8,", "P1,KCL,80,")).unwrap();
    std::fs::copy(fixture("survey/london_ou.csv"), fixdir.join("london_ou.csv")).unwrap();
    std::fs::copy(fixture("survey/volvis.csv"), fixdir.join("volvis.csv")).unwrap();
    let bad_out = dir.path().join("bad_reports");
    let out = visbench(&[
        "reproduce",
        "--out", bad_out.to_str().unwrap(),
        "--fixtures", fixdir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stats = std::fs::read_to_string(bad_out.join("survey_stats.csv")).unwrap();
    assert!(stats.contains("FAIL"), "{stats}");
}

#[test]
fn precision_flag_and_environment_variable() {
    let q = fixture("pmf/mip_q.csv");
    let out = visbench(&["entropy", "--pmf", q.to_str().unwrap(), "--precision", "5"]);
    assert_eq!(stdout_of(&out), "0.62781\n");

    let out = visbench_env(&["entropy", "--pmf", q.to_str().unwrap()], &[("VISBENCH_PRECISION", "2")]);
    assert_eq!(stdout_of(&out), "0.63\n");

    // the flag wins over the environment
    let out = visbench_env(
        &["entropy", "--pmf", q.to_str().unwrap(), "--precision", "4"],
        &[("VISBENCH_PRECISION", "2")],
    );
    assert_eq!(stdout_of(&out), "0.6278\n");

    let out = visbench(&["entropy", "--pmf", q.to_str().unwrap(), "--precision", "13"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    // unknown flag: usage on stderr, exit 1
    let out = visbench(&["entropy", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert!(out.stdout.is_empty());

    // validation error: exit 1
    let out = visbench(&["divergence", "--measure", "frob", "--p", "x", "--q", "y"]);
    assert_eq!(out.status.code(), Some(1));

    // missing file: exit 2
    let out = visbench(&["entropy", "--pmf", "/nonexistent/q.csv"]);
    assert_eq!(out.status.code(), Some(2));

    // help goes to stdout with exit 0
    let out = visbench(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("Usage"));
}

#[test]
fn outputs_are_deterministic() {
    let args = ["scenario", "run", "isosurface"];
    let a = stdout_of(&visbench(&args));
    let b = stdout_of(&visbench(&args));
    assert_eq!(a, b);
    assert!(a.contains("entropy,0.850"));
}

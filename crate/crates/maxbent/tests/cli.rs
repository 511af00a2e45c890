//! End-to-end checks of the command-line interface and the emitted report
//! files, including the golden-file comparison of the m = 4 CSV.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxbent"))
}

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn survey_m4_csv_matches_the_golden_file() {
    let (stdout, _, code) = run(&["survey", "--m", "4", "--r", "1", "--format", "csv"]);
    assert_eq!(code, Some(0));
    let golden_path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/survey_m4_r1.csv");
    let golden = std::fs::read_to_string(golden_path).expect("golden file present");
    assert_eq!(stdout, golden);
}

#[test]
fn survey_text_output_echoes_field_conventions() {
    let (stdout, _, code) = run(&["survey", "--m", "3", "--r", "1"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("modulus 0xb"));
    assert!(stdout.contains("modulus 0x43"));
    assert!(stdout.contains("members: 24 (expected 24)"));
    assert!(stdout.contains("# certificates violated: 0"));
}

#[test]
fn survey_workers_do_not_change_the_bytes() {
    let a = run(&["survey", "--m", "4", "--format", "json", "--workers", "1"]);
    let b = run(&["survey", "--m", "4", "--format", "json", "--workers", "3"]);
    assert_eq!(a.2, Some(0));
    assert_eq!(a.0, b.0);
}

#[test]
fn survey_out_dir_writes_all_three_reports() {
    let dir = std::env::temp_dir().join(format!("maxbent-cli-{}", std::process::id()));
    let (_, stderr, code) = run(&["survey", "--m", "3", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, Some(0), "{stderr}");
    for name in ["survey.csv", "survey.json", "survey.txt"] {
        let p = dir.join(name);
        assert!(p.is_file(), "{} missing", p.display());
        assert!(std::fs::metadata(&p).unwrap().len() > 0);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_file_is_read_and_overridden_by_flags() {
    let dir = std::env::temp_dir().join(format!("maxbent-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("survey.conf");
    std::fs::write(&cfg, "# comment\nm=3\nr=2\nformat=csv\n").unwrap();

    let (from_file, _, code) = run(&["survey", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    let (from_flags, _, _) = run(&["survey", "--m", "3", "--r", "2", "--format", "csv"]);
    assert_eq!(from_file, from_flags);

    // a flag beats the file
    let (overridden, _, _) = run(&[
        "survey",
        "--config",
        cfg.to_str().unwrap(),
        "--r",
        "1",
        "--format",
        "csv",
    ]);
    assert_ne!(overridden, from_file);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    let (_, _, code) = run(&["survey"]);
    assert_eq!(code, Some(2), "missing --m is a usage error");
    let (_, _, code) = run(&["monomial-scan", "--n", "7"]);
    assert_eq!(code, Some(2), "odd n is a usage error");
    let (_, _, code) = run(&["no-such-command"]);
    assert_eq!(code, Some(2));
    let (_, stderr, code) = run(&["survey", "--m", "4", "--modulus", "0x11"]);
    assert_eq!(
        code,
        Some(2),
        "reducible modulus is a config error: {stderr}"
    );
}

#[test]
fn member_subcommand_analyzes_the_canonical_member() {
    let (stdout, _, code) = run(&["member", "--m", "4", "--r", "1", "--lambda", "1:0"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("bent components: 240 of 240"));
    assert!(stdout.contains("(4^10, 6^5)"));
    assert!(stdout.contains("{0, 2}_240"));
    assert!(stdout.contains("{0, 16}_15"));
    assert!(stdout.contains("nonlinearity:    64"));
}

#[test]
fn member_accepts_generator_power_syntax() {
    // one of the dimension-12 members; under the canonical generator this
    // coefficient vector is singular, and the analysis must say so rather
    // than fail
    let (stdout, _, code) = run(&[
        "member",
        "--m",
        "6",
        "--r",
        "1",
        "--lambda",
        "g^52:5,g^40:4,g^35:3,g^52:2,g^58:1",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("L permutation:   false"));
    assert!(stdout.contains("of 4032"));

    // the same member under the witness generator g^13 (exponents scaled
    // by 13 mod 63) is a permutation with the full bent count
    let (stdout, _, code) = run(&[
        "member",
        "--m",
        "6",
        "--r",
        "1",
        "--lambda",
        "g^46:5,g^16:4,g^14:3,g^46:2,g^61:1",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("L permutation:   true"));
    assert!(stdout.contains("bent components: 4032 of 4032"));
    assert!(stdout.contains("(6^26, 8^35, 10^2)"));
    assert!(stdout.contains("{0, 2}_2624, {0, 4}_960, {0, 8}_448"));
}

#[test]
fn bino_rejects_cubes_and_builds_non_cubes() {
    let (stdout, _, code) = run(&["bino", "--m", "6", "--r", "1", "--beta", "g^3"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("rejected: 3th power"));

    let (stdout, _, code) = run(&["bino", "--m", "6", "--r", "1", "--beta", "g"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("walsh [(8, 63)]"));
}

#[test]
fn monomial_scan_cli_reports_the_attaining_exponents() {
    let (stdout, _, code) = run(&["monomial-scan", "--n", "6"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("d=9"));
    assert!(stdout.contains("d=18"));
    assert!(stdout.contains("holds for every attaining exponent"));
}

#[test]
fn examples_subcommand_documents_the_findings() {
    let (stdout, _, code) = run(&["examples"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("named-example-dim12"));
    assert!(stdout.contains("named-example-h64"));
    assert!(stdout.contains("h64:   witness"));
}

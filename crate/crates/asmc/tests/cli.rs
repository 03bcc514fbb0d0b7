use std::path::Path;
use std::process::Command;

use asmc_core::{enumerate_asm, neutralize, one_minus_stats, AsmMatrix, EnumFilter};

const T3: &str = "0 1 0\n1 -1 1\n0 1 0\n";
const G0: &str = "10; 0 0 2 2 0 0 1 5 0 3 6 6; 4 5\n";

/// Runs the CLI in-process and returns `(status, stdout, stderr)`.
fn asmc(args: &[&str], stdin: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("asmc").chain(args.iter().copied());
    let code = asmc::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = asmc(args, stdin);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn params_of_t3() {
    assert_eq!(ok(&["params"], T3), "r=1 s=1 i=2 E=0 B=0 J=1\n");
    assert_eq!(ok(&["params"], "1 0\n0 1\n"), "r=0 s=0 i=0\n");
    let json: serde_json::Value = serde_json::from_str(&ok(&["params", "-f", "json"], T3)).unwrap();
    assert_eq!(
        json,
        serde_json::json!({"r": 1, "s": 1, "i": 2, "E": 0, "B": 0, "J": 1})
    );
}

#[test]
fn neutralize_then_restore_is_identity() {
    for a in enumerate_asm(EnumFilter::with_minus(5, 1), 7).unwrap() {
        let text = a.to_string();
        let pair = ok(&["neutralize"], &text);
        assert_eq!(ok(&["restore"], &pair), text);
        let pair_json = ok(&["neutralize", "-f", "json"], &text);
        assert_eq!(ok(&["restore"], &pair_json), text);
    }
}

#[test]
fn example_table_through_the_tool() {
    let pair = ok(&["from-table"], G0);
    assert_eq!(ok(&["params"], &pair), "r=6 s=1 i=30 E=3 B=-1 J=7\n");
    assert_eq!(ok(&["table"], &pair), G0);
    let dual = ok(&["dual"], G0);
    assert_eq!(dual, "10; 0 1 0 1 4 5 5 2 1 6 4 5; 2 1\n");
    assert_eq!(ok(&["dual"], &dual), G0);
}

#[test]
fn outputs_equal_library_calls() {
    for a in enumerate_asm(EnumFilter::with_minus(4, 1), 7).unwrap() {
        let s = one_minus_stats(&a).unwrap();
        let want = format!("r={} s=1 i={} E={} B={} J={}\n", s.r, s.i, s.e, s.b, s.j);
        assert_eq!(ok(&["params"], &a.to_string()), want);
        assert_eq!(
            ok(&["prime"], &ok(&["prime"], &a.to_string())),
            a.to_string()
        );
        let table = asmc_core::gen_table(&neutralize(&a).unwrap());
        assert_eq!(ok(&["table"], &a.to_string()), format!("{table}\n"));
    }
}

#[test]
fn discharge_round_trip_and_negative_class() {
    let a = "0 1 0 0\n1 -1 1 0\n0 0 0 1\n0 1 0 0\n";
    let tuple = ok(&["discharge"], a);
    assert!(tuple.starts_with("k=1 c=0 E=0\n"), "{tuple}");
    assert_eq!(ok(&["recharge"], &tuple), a);
    let neg = AsmMatrix::new(&[[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, -1, 1], [0, 0, 1, 0]]).unwrap();
    let (code, _, err) = asmc(&["discharge"], &neg.to_string());
    assert_eq!(code, 2);
    assert!(err.starts_with("error: NegativeClass"), "{err}");
}

#[test]
fn paths_in_every_format() {
    assert_eq!(ok(&["paths"], T3), "(0,1):\n(0,2): NF\n(0,3): ES\n");
    let svg = ok(&["paths", "-f", "svg", "--shifted"], T3);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let json = ok(&["paths", "-f", "json"], T3);
    assert_eq!(ok(&["restore"], &json), T3);
    assert_eq!(
        ok(&["dual"], &ok(&["paths"], T3)),
        ok(&["paths"], &ok(&["reflect"], T3))
    );
}

#[test]
fn ascii_render_matches_golden_file() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let input = std::fs::read_to_string(golden.join("t3.txt")).unwrap();
    let want = std::fs::read(golden.join("t3_paths.ascii")).unwrap();
    let got = ok(&["paths", "-f", "ascii"], &input);
    assert_eq!(got.as_bytes(), want.as_slice());
    assert_eq!(got.lines().count(), 4);
    assert_eq!(ok(&["paths", "-f", "ascii"], &input), got);
}

#[test]
fn domain_errors_name_the_position() {
    let (code, _, err) = asmc(&["validate"], "1 0\n1 0\n");
    assert_eq!(code, 2);
    assert_eq!(
        err,
        "error: AlternationViolation: column 1 has two consecutive 1\n"
    );
    let (code, _, err) = asmc(&["validate"], "1 0 0\n0 1\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error: NotSquare"), "{err}");
    let (code, _, err) = asmc(&["restore"], "E=9\n0 1 0\n1 -1 1\n0 1 0\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error: InvalidPair"), "{err}");
    let (code, _, err) = asmc(&["recharge"], T3);
    assert_eq!(code, 2);
    assert!(err.contains("expected a discharge tuple"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(asmc(&["frobnicate"], "").0, 1);
    assert_eq!(asmc(&["enumerate"], "").0, 1);
    assert_eq!(asmc(&["dist", "-n", "3", "--keys", "q"], "").0, 1);
    assert_eq!(asmc(&["params", "-f", "svg"], T3).0, 1);
    let (code, out, _) = asmc(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn enumerate_and_dist() {
    assert_eq!(ok(&["enumerate", "-n", "4", "--count"], ""), "42\n");
    assert_eq!(ok(&["enumerate", "-n", "3", "-s", "1"], ""), T3);
    assert_eq!(
        ok(
            &[
                "enumerate",
                "-n",
                "5",
                "--class",
                "neutral",
                "--count",
                "-j",
                "2"
            ],
            ""
        ),
        "120\n"
    );
    assert_eq!(
        ok(&["enumerate", "-n", "5", "-s", "1", "--count"], ""),
        "200\n"
    );
    let lines = ok(&["enumerate", "-n", "3", "-f", "json"], "");
    assert_eq!(lines.lines().count(), 7);
    assert_eq!(
        ok(&["dist", "-n", "3", "--keys", "r"], ""),
        "r count\n0 2\n1 3\n2 2\n"
    );
    assert_eq!(
        ok(&["dist", "-n", "3", "--keys", "E"], ""),
        "E count\n0 1\n"
    );
    let (code, _, err) = asmc(&["enumerate", "-n", "8", "--count"], "");
    assert_eq!(code, 2);
    assert!(err.starts_with("error: CapExceeded"));
}

#[test]
fn verify_exit_status() {
    let (code, out, _) = asmc(&["verify", "--n-max", "4"], "");
    assert_eq!(code, 0);
    assert!(out.contains("0 failed"));
    let (code, out, _) = asmc(&["verify", "--n-max", "4", "--mutate-xi"], "");
    assert_eq!(code, 3);
    assert!(out.contains("FAIL xi-involution"));
    assert!(out.contains("counterexample (n=3)"));
}

#[test]
fn pipeline_bundle() {
    let out = ok(&["pipeline", "-f", "json"], T3);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["table"],
        serde_json::json!({"k": 3, "a": [0, 0, 1], "b": 0, "beta": 0})
    );
    assert_eq!(v["params"]["J"], 1);
    let (code, _, err) = asmc(&["pipeline"], "1 0\n0 1\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error: NotOneMinus"));
}

#[test]
fn binary_reads_files_env_and_writes_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t3.txt");
    let output = dir.path().join("pair.json");
    std::fs::write(&input, T3).unwrap();
    let bin = env!("CARGO_BIN_EXE_asmc");

    let status = Command::new(bin)
        .args(["neutralize", "-f", "json", "-o"])
        .arg(&output)
        .arg(&input)
        .status()
        .unwrap();
    assert!(status.success());
    let restored = Command::new(bin)
        .arg("restore")
        .arg(&output)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(restored.stdout).unwrap(), T3);

    let capped = Command::new(bin)
        .args(["enumerate", "-n", "5", "--count"])
        .env("ASMC_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let missing = Command::new(bin)
        .args(["params", "/nonexistent/file"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));
}

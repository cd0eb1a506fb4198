//! Golden-file acceptance test for the CLI: every subcommand, byte-exact
//! stdout and exit codes, over the corpus in tests/golden/cases.json.

use std::process::Command;
use std::time::Instant;

#[derive(serde::Deserialize)]
struct Case {
    name: String,
    args: Vec<String>,
    stdout: String,
    exit: i32,
}

#[test]
fn criterion_8_cli_golden_corpus() {
    let started = Instant::now();
    let corpus = include_str!("golden/cases.json");
    let cases: Vec<Case> = serde_json::from_str(corpus).expect("corpus parses");
    assert!(cases.len() >= 30, "corpus must cover at least 30 cases");

    for case in &cases {
        let output = Command::new(env!("CARGO_BIN_EXE_bsn1"))
            .args(&case.args)
            .output()
            .expect("binary runs");
        let stdout = String::from_utf8(output.stdout).expect("utf8 stdout");
        assert_eq!(
            stdout, case.stdout,
            "stdout mismatch in case '{}' (args {:?})",
            case.name, case.args
        );
        assert_eq!(
            output.status.code(),
            Some(case.exit),
            "exit code mismatch in case '{}' (args {:?}); stderr: {}",
            case.name,
            case.args,
            String::from_utf8_lossy(&output.stderr)
        );
    }
    println!(
        "acceptance 8 (CLI golden corpus, {} cases): PASS ({:.2?})",
        cases.len(),
        started.elapsed()
    );
}

/// JSON witnesses round-trip: re-parse the emitted witness and re-verify
/// it through the CLI itself, never through the decision path.
#[test]
fn json_witnesses_reparse_and_reverify() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_bsn1"))
            .args(args)
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "command {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        String::from_utf8(out.stdout).expect("utf8")
    };
    let witness_of = |args: &[&str]| -> String {
        let stdout = run(args);
        let value: serde_json::Value = serde_json::from_str(stdout.trim()).expect("json");
        assert_eq!(value["answer"], "yes");
        value["witness"]
            .as_str()
            .expect("witness string")
            .to_string()
    };

    // cp: v = g u g^-1, recomposed textually and renormalized
    let g = witness_of(&["--n", "2", "--output", "json", "cp", "a t^2", "a^2 t^2"]);
    let g_inv = run(&["--n", "2", "inv", &g]);
    let recomposed = run(&[
        "--n",
        "2",
        "normalize",
        &format!("{} a t^2 {}", g, g_inv.trim()),
    ]);
    assert_eq!(recomposed, run(&["--n", "2", "normalize", "a^2 t^2"]));

    // od: the witness automorphism maps u to v
    let f = witness_of(&["--n", "2", "--output", "json", "od", "a t", "a^5 t"]);
    let image = run(&["--n", "2", "aut-apply", &f, "a t"]);
    assert_eq!(image, run(&["--n", "2", "normalize", "a^5 t"]));

    // tcp: v = (g f)^-1 u g for the returned twisted conjugator
    let f_text = "phi(4; 1)";
    let g = witness_of(&[
        "--n", "2", "--output", "json", "tcp", "a t", "a t", "--aut", f_text,
    ]);
    let g_image = run(&["--n", "2", "aut-apply", f_text, &g]);
    let g_image_inv = run(&["--n", "2", "inv", g_image.trim()]);
    let recomposed = run(&[
        "--n",
        "2",
        "normalize",
        &format!("{} a t {}", g_image_inv.trim(), g),
    ]);
    assert_eq!(recomposed, run(&["--n", "2", "normalize", "a t"]));
}

//! Canonical outputs of the fixed command list. Regenerate with
//! `UPDATE_GOLDEN=1 cargo test -p weylkit-cli --test golden`.

mod support;

use support::{golden_dir, json_transcript, run_all, text_transcript, validate};

fn check(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).expect("write golden file");
        return;
    }
    let expected = std::fs::read_to_string(&path).expect("golden file exists");
    assert!(
        expected == actual,
        "{name} differs from the golden copy\n--- expected\n{expected}\n--- actual\n{actual}"
    );
}

#[test]
fn text_output_matches_golden() {
    check("expected.txt", &text_transcript(&run_all(false)));
}

#[test]
fn json_output_matches_golden_and_schema() {
    let runs = run_all(true);
    validate(&runs).unwrap();
    check("expected.jsonl", &json_transcript(&runs).unwrap());
}

#[test]
fn polynomial_payloads_are_checked() {
    let runs = run_all(true);
    let checked: usize = runs
        .iter()
        .map(|r| support::reparse(&serde_json::from_str::<serde_json::Value>(&r.stdout).unwrap()["payload"]).unwrap())
        .sum();
    assert!(checked >= 50, "only {checked} polynomial strings checked");
}

#[test]
fn schema_rejects_malformed_reports() {
    let bad = [
        r#"{"verb":"eval","outcome":"value","payload":{},"millis":0}"#,
        r#"{"verb":"membership","outcome":"not-found-up-to","payload":{},"bound":null,"millis":0}"#,
        r#"{"verb":"eval","outcome":"error","payload":{"message":"x"},"bound":null,"millis":0}"#,
        r#"{"verb":"frobnicate","outcome":"value","payload":{},"bound":null,"millis":0}"#,
    ];
    for text in bad {
        let run = support::Run {
            line: text.to_string(),
            stdout: text.to_string(),
            // Matching exit code, so only the schema can reject it.
            code: support::expected_code(&serde_json::from_str(text).unwrap()),
        };
        assert!(validate(std::slice::from_ref(&run)).is_err(), "accepted {text}");
    }
}

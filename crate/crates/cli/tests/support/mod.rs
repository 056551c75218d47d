//! Runs the fixed command list against the built binary and renders the
//! transcripts that are compared with the files in `tests/golden`.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use weylkit::parse::{parse_comm, parse_univariate, parse_weyl};

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn commands() -> Vec<String> {
    let text = std::fs::read_to_string(golden_dir().join("commands.txt")).expect("command list");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

pub struct Run {
    pub line: String,
    pub stdout: String,
    pub code: i32,
}

/// Runs one command line; `json` inserts `--format json` after the verb.
pub fn run(line: &str, json: bool) -> Run {
    let mut args = shlex::split(line).expect("balanced quotes");
    if json {
        args.splice(1..1, ["--format".to_string(), "json".to_string()]);
    }
    let out = Command::new(env!("CARGO_BIN_EXE_weylkit"))
        .args(&args)
        .env_remove("WEYLKIT_MAX_DEGREE")
        .output()
        .expect("binary runs");
    Run {
        line: line.to_string(),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        code: out.status.code().expect("exit code"),
    }
}

/// Runs every command, several at a time, keeping list order.
pub fn run_all(json: bool) -> Vec<Run> {
    let cmds = commands();
    std::thread::scope(|s| {
        let handles: Vec<_> = cmds.iter().map(|c| s.spawn(move || run(c, json))).collect();
        handles.into_iter().map(|h| h.join().expect("runner thread")).collect()
    })
}

pub fn text_transcript(runs: &[Run]) -> String {
    runs.iter()
        .map(|r| format!("$ {}\n{}[exit {}]\n", r.line, r.stdout, r.code))
        .collect()
}

/// JSON reports with timing zeroed, one per line.
pub fn json_transcript(runs: &[Run]) -> Result<String, String> {
    let mut out = String::new();
    for r in runs {
        let mut v: Value = serde_json::from_str(r.stdout.trim_end())
            .map_err(|e| format!("`{}`: not one JSON value: {e}", r.line))?;
        v["millis"] = 0.into();
        out.push_str(&v.to_string());
        out.push('\n');
    }
    Ok(out)
}

/// Exit code implied by a report's outcome.
pub fn expected_code(report: &Value) -> i32 {
    match report["outcome"].as_str() {
        Some("error") => 1,
        Some("not-found-up-to") => 2,
        _ => 0,
    }
}

pub fn validate(runs: &[Run]) -> Result<(), String> {
    let schema: Value = serde_json::from_str(weylkit_cli::SCHEMA).map_err(|e| e.to_string())?;
    let location = schema["$id"].as_str().expect("schema has an id").to_string();
    let mut schemas = boon::Schemas::new();
    let mut compiler = boon::Compiler::new();
    compiler.add_resource(&location, schema).map_err(|e| e.to_string())?;
    let index = compiler.compile(&location, &mut schemas).map_err(|e| e.to_string())?;
    for r in runs {
        let v: Value = serde_json::from_str(r.stdout.trim_end()).map_err(|e| format!("`{}`: {e}", r.line))?;
        if let Err(e) = schemas.validate(&v, index) {
            return Err(format!("`{}`: schema violation: {e}", r.line));
        }
        if expected_code(&v) != r.code {
            return Err(format!("`{}`: exit {} for outcome {}", r.line, r.code, v["outcome"]));
        }
        if v["outcome"] != "error" {
            reparse(&v["payload"]).map_err(|e| format!("`{}`: {e}", r.line))?;
        }
    }
    Ok(())
}

/// Checks that every polynomial string in a payload parses back to itself.
/// Returns how many strings were checked.
pub fn reparse(v: &Value) -> Result<usize, String> {
    match v {
        Value::String(s) => reparse_str(s),
        Value::Array(items) => items.iter().map(reparse).sum(),
        Value::Object(m) => m.values().map(reparse).sum(),
        _ => Ok(0),
    }
}

fn reparse_str(s: &str) -> Result<usize, String> {
    let letters: String = s.replace("sqrt2", "").chars().filter(char::is_ascii_alphabetic).collect();
    let only = |set: &str| letters.chars().all(|c| set.contains(c));
    let round = |printed: Result<String, weylkit::Error>| match printed {
        Ok(p) if p == s => Ok(1),
        Ok(p) => Err(format!("`{s}` re-prints as `{p}`")),
        Err(e) => Err(format!("`{s}` does not re-parse: {e}")),
    };
    if s.is_empty() || !s.chars().any(|c| c.is_ascii_alphanumeric()) {
        Ok(0)
    } else if only("XY") {
        round(parse_weyl(s).map(|p| p.to_string()))
    } else if only("xy") {
        round(parse_comm(s).map(|p| p.to_string()))
    } else if letters.chars().all(|c| c == 't') {
        round(parse_univariate(s).map(|p| p.to_string()))
    } else {
        Ok(0)
    }
}

//! Output envelopes, text rendering and batch runs.

use crate::commands::{canonical_input, run, Command, Options, VERSION_STAMP};
use crate::error::CliError;
use crate::parse::parse;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A finished run: the JSON envelope and its exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub envelope: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope).expect("serialisable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                flatten(&self.envelope, "", &mut out);
                out
            }
        }
    }
}

fn error_value(e: &CliError) -> Value {
    let mut v = json!({ "kind": e.kind(), "message": e.to_string() });
    if let CliError::Parse { line, col, .. } = e {
        v["line"] = json!(line);
        v["column"] = json!(col);
    }
    v
}

fn error_report(command: &str, e: &CliError) -> Report {
    Report {
        envelope: json!({
            "version": VERSION_STAMP,
            "command": command,
            "status": "error",
            "error": error_value(e),
        }),
        exit_code: e.exit_code(),
    }
}

/// Parses `text` and runs `cmd` on it. A `command:` line in the document
/// must agree with `cmd`.
pub fn run_text(cmd: Command, text: &str, opts: &Options) -> Report {
    let go = || -> Result<Report, CliError> {
        let doc = parse(text)?;
        if let Some(c) = &doc.command {
            if c != cmd.name() {
                return Err(CliError::Input(format!(
                    "document is for `{c}` but `{}` was requested",
                    cmd.name()
                )));
            }
        }
        let out = run(cmd, &doc, opts)?;
        let (status, code) = if out.inconclusive {
            ("inconclusive", 2)
        } else {
            ("ok", 0)
        };
        Ok(Report {
            envelope: json!({
                "version": VERSION_STAMP,
                "command": cmd.name(),
                "input": canonical_input(&doc),
                "result": out.result,
                "status": status,
            }),
            exit_code: code,
        })
    };
    go().unwrap_or_else(|e| error_report(cmd.name(), &e))
}

fn run_document(text: &str, opts: &Options) -> Report {
    let cmd = match parse(text) {
        Err(e) => return error_report("batch", &e),
        Ok(doc) => match doc.command.as_deref() {
            None => {
                return error_report("batch", &CliError::Input("missing `command` line".into()))
            }
            Some(c) => match Command::from_name(c) {
                Some(Command::Batch) | None => {
                    return error_report(
                        "batch",
                        &CliError::Input(format!("unknown command `{c}`")),
                    )
                }
                Some(cmd) => cmd,
            },
        },
    };
    run_text(cmd, text, opts)
}

/// Runs every regular file of `dir`, in name order, each under the
/// command named by its `command:` line. The exit code is the largest
/// one seen.
pub fn run_batch(dir: &Path, opts: &Options) -> Report {
    let listing = std::fs::read_dir(dir).and_then(|rd| {
        rd.map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<Vec<_>>>()
    });
    let mut files = match listing {
        Ok(f) => f,
        Err(e) => return error_report("batch", &CliError::Io(format!("{}: {e}", dir.display()))),
    };
    files.retain(|p| p.is_file());
    files.sort();
    let reports: Vec<(String, Report)> = files
        .par_iter()
        .map(|p| {
            let name = p
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let r = match std::fs::read_to_string(p) {
                Ok(text) => run_document(&text, opts),
                Err(e) => error_report("batch", &CliError::Io(format!("{name}: {e}"))),
            };
            (name, r)
        })
        .collect();
    let exit_code = reports.iter().map(|(_, r)| r.exit_code).max().unwrap_or(0);
    let results: Vec<Value> = reports
        .into_iter()
        .map(|(name, r)| {
            let mut v = r.envelope;
            v["file"] = json!(name);
            v["exit_code"] = json!(r.exit_code);
            v
        })
        .collect();
    Report {
        envelope: json!({
            "version": VERSION_STAMP,
            "command": "batch",
            "results": results,
            "status": if exit_code == 0 { "ok" } else { "mixed" },
        }),
        exit_code,
    }
}

/// Renders `v` as `path: value` lines.
fn flatten(v: &Value, path: &str, out: &mut String) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(x, &join(k), out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, &format!("{path}[{i}]"), out);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{path}: [{}]", items.join(", "));
        }
        _ => {
            let _ = writeln!(out, "{path}: {}", scalar_text(v));
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_nested() {
        let v = json!({ "a": { "b": [1, 2] }, "c": [{ "d": "x" }], "e": null });
        let mut out = String::new();
        flatten(&v, "", &mut out);
        assert_eq!(out, "a.b: [1, 2]\nc[0].d: x\ne: null\n");
    }
}

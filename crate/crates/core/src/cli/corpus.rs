use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};

use super::{render, run_with, Outcome, MAX_SEARCH_ENV};

/// A golden case: command words, the input document and optional scale
/// override. The recorded output sits next to it with extension `.out`; its
/// first line is `# exit <code>`, followed by the exact stdout bytes.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusCase {
    pub args: Vec<String>,
    #[serde(default)]
    pub input: Option<Value>,
    /// Literal input text, for cases exercising malformed input.
    #[serde(default)]
    pub input_raw: Option<String>,
    #[serde(default)]
    pub max_search_env: Option<String>,
}

impl CorpusCase {
    fn execute(&self, inherited_env: Option<&str>) -> Outcome {
        let mut argv = vec!["pseudohiggs".to_string()];
        argv.extend(self.args.iter().cloned());
        argv.push("-".into());
        let text = match (&self.input_raw, &self.input) {
            (Some(raw), _) => raw.clone(),
            (None, Some(v)) => serde_json::to_string(v).expect("values render"),
            (None, None) => String::new(),
        };
        let env = self.max_search_env.as_deref().or(inherited_env);
        run_with(&argv, env, Some(text))
    }
}

fn recorded(outcome: &Outcome) -> String {
    format!("# exit {}\n{}", outcome.code, outcome.stdout)
}

fn case_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Replays every `*.json` case in `dir` twice, requiring both runs to be
/// byte-identical to each other and to the recorded `.out` file. With
/// `bless`, the recorded files are rewritten instead.
pub fn run_corpus(dir: &Path, bless: bool, env_max_search: Option<&str>) -> Outcome {
    let files = match case_files(dir) {
        Ok(f) => f,
        Err(e) => return super::malformed(format!("cannot list {}: {e}", dir.display())),
    };
    if files.is_empty() {
        return Outcome {
            code: 1,
            stdout: render(&json!({"error": "EmptyCorpus", "detail": "no *.json cases found"})),
        };
    }
    let mut cases = Vec::with_capacity(files.len());
    let mut failed = 0usize;
    for path in &files {
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("?")
            .to_string();
        let (status, exit) = replay(path, bless, env_max_search);
        if status != "pass" && status != "blessed" {
            failed += 1;
        }
        cases.push(json!({"name": name, "status": status, "exit": exit}));
    }
    let summary = json!({
        "result": {"cases": cases, "total": files.len(), "failed": failed, "passed": files.len() - failed},
        "audit": {"command": "corpus run", "version": env!("CARGO_PKG_VERSION"), "bless": bless,
                  "env": MAX_SEARCH_ENV, "runs_per_case": 2},
    });
    Outcome {
        code: if failed == 0 { 0 } else { 1 },
        stdout: render(&summary),
    }
}

fn replay(path: &Path, bless: bool, env: Option<&str>) -> (String, Option<i32>) {
    let case: CorpusCase = match std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => return (format!("unreadable case: {e}"), None),
    };
    if case.args.first().is_some_and(|a| a == "corpus") {
        return ("nested corpus runs are not allowed".into(), None);
    }
    let first = case.execute(env);
    let second = case.execute(env);
    if first != second {
        return ("nondeterministic output".into(), Some(first.code));
    }
    let out_path = path.with_extension("out");
    let text = recorded(&first);
    if bless {
        return match std::fs::write(&out_path, &text) {
            Ok(()) => ("blessed".into(), Some(first.code)),
            Err(e) => (
                format!("cannot write {}: {e}", out_path.display()),
                Some(first.code),
            ),
        };
    }
    match std::fs::read_to_string(&out_path) {
        Ok(expected) if expected == text => ("pass".into(), Some(first.code)),
        Ok(_) => ("output differs from recording".into(), Some(first.code)),
        Err(_) => ("missing recording".into(), Some(first.code)),
    }
}

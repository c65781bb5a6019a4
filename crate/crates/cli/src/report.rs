use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use confspace::connectivity::Prediction;
use confspace::graph::Graph;
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Failures that map to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub type CmdResult = Result<Outcome, InputError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub file: String,
    pub sha256: String,
}

pub fn read_input(path: &Path) -> Result<(String, InputInfo), InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let sha256 = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    Ok((text, InputInfo { file: path.display().to_string(), sha256 }))
}

pub fn load_graph(path: &Path) -> Result<(Graph, InputInfo), InputError> {
    let (text, info) = read_input(path)?;
    let g = Graph::from_json_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((g, info))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let (text, _) = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct Breakdown {
    pub beta1: usize,
    pub n1: i64,
    pub n2: i64,
    pub n3: usize,
    pub n3_prime: usize,
    pub n3_double_prime: usize,
}

impl From<&Prediction> for Breakdown {
    fn from(p: &Prediction) -> Self {
        Breakdown {
            beta1: p.beta1,
            n1: p.n1,
            n2: p.n2,
            n3: p.n3,
            n3_prime: p.n3_prime,
            n3_double_prime: p.n3_double_prime,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_particles: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Breakdown>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    /// Only filled when timing is requested, so JSON output stays reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(flatten)]
    pub details: Map<String, Value>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        RunReport {
            command,
            input: None,
            n_particles: None,
            group: None,
            predicted: None,
            breakdown: None,
            verdict: None,
            elapsed_ms: None,
            details: Map::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("report values serialize"));
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Output {
    pub json: bool,
    pub timing: bool,
}

impl Output {
    pub fn finish(&self, mut report: RunReport, started: Instant) {
        let elapsed = started.elapsed().as_millis();
        if self.timing || !self.json {
            report.elapsed_ms = Some(elapsed);
        }
        if self.json {
            write_stdout(&(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"));
        } else {
            write_stdout(&human(&report));
        }
    }

    pub fn notice(&self, message: &str) {
        eprintln!("note: {message}");
    }
}

/// Writes to stdout, ignoring a closed pipe.
pub fn write_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Two-column text rendering; nested values are shown as compact JSON.
pub fn human(r: &RunReport) -> String {
    let mut rows: Vec<(String, String)> = vec![("command".into(), r.command.into())];
    if let Some(i) = &r.input {
        rows.push(("input".into(), i.file.clone()));
    }
    if let Some(n) = r.n_particles {
        rows.push(("particles".into(), n.to_string()));
    }
    if let Some(b) = &r.breakdown {
        rows.push((
            "breakdown".into(),
            format!(
                "beta1={} N1={} N2={} N3={} N3'={} N3''={}",
                b.beta1, b.n1, b.n2, b.n3, b.n3_prime, b.n3_double_prime
            ),
        ));
    }
    if let Some(p) = &r.predicted {
        rows.push(("predicted".into(), p.clone()));
    }
    if let Some(g) = &r.group {
        rows.push(("H1".into(), g.clone()));
    }
    for (k, v) in &r.details {
        match v {
            Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                rows.push((k.clone(), format!("{} entries", items.len())));
                for (i, item) in items.iter().enumerate() {
                    rows.push((format!("  [{i}]"), item.to_string()));
                }
            }
            _ => rows.push((k.clone(), scalar(v))),
        }
    }
    if let Some(v) = r.verdict {
        rows.push(("verdict".into(), scalar(&serde_json::to_value(v).unwrap())));
    }
    if let Some(ms) = r.elapsed_ms {
        rows.push(("time".into(), format!("{ms} ms")));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

/// Graph files in a directory, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, InputError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| InputError(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

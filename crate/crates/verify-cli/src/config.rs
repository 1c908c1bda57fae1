use std::collections::BTreeMap;
use std::path::Path;

/// Runtime settings shared by the verification commands. Defaults first, then
/// the optional key=value config file, then command-line flags — later layers
/// override earlier ones.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    /// Comparison tolerance for spectral boundaries.
    pub tol: f64,
    /// Worker-pool size; 0 means one worker per available core.
    pub jobs: usize,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings { tol: 1e-8, jobs: 0 }
    }
}

impl Settings {
    /// Applies a parsed config file; unknown keys are rejected so typos do
    /// not silently fall back to defaults.
    pub fn apply_file(&mut self, kv: &BTreeMap<String, String>) -> Result<(), String> {
        for (key, value) in kv {
            match key.as_str() {
                "tol" => {
                    self.tol = value
                        .parse()
                        .map_err(|e| format!("config key tol: {e}"))?;
                }
                "jobs" => {
                    self.jobs = value
                        .parse()
                        .map_err(|e| format!("config key jobs: {e}"))?;
                }
                other => return Err(format!("unknown config key {other:?}")),
            }
        }
        Ok(())
    }

    pub fn apply_flags(&mut self, tol: Option<f64>, jobs: Option<usize>) {
        if let Some(t) = tol {
            self.tol = t;
        }
        if let Some(j) = jobs {
            self.jobs = j;
        }
    }
}

/// Parses a `key=value` text file: one pair per line, `#` starts a comment,
/// blank lines ignored.
pub fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    parse_config_text(&text)
}

pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut kv = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value, got {raw:?}", idx + 1))?;
        kv.insert(key.trim().to_owned(), value.trim().to_owned());
    }
    Ok(kv)
}

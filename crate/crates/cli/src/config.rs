//! Session configuration: either a JSON file, command-line flags, or both
//! (flags win field by field).

use serde::Deserialize;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Fully resolved configuration for one invocation.
#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub vars: Vec<String>,
    pub f: String,
    pub weights: Vec<String>,
    pub k: Vec<u32>,
    pub degree_bound: u32,
    pub seed: u64,
    pub format: OutputFormat,
}

/// The JSON file shape; every field optional so files can be partial.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub vars: Option<Vec<String>>,
    pub f: Option<String>,
    pub weights: Option<Vec<String>>,
    pub k: Option<Vec<u32>>,
    pub degree_bound: Option<u32>,
    pub seed: Option<u64>,
    pub format: Option<String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("config {} is not valid: {e}", path.display()))
    }
}

/// Values given on the command line; each one beats its config-file
/// counterpart.
#[derive(Debug, Default)]
pub struct Overrides {
    pub vars: Option<Vec<String>>,
    pub f: Option<String>,
    pub weights: Option<Vec<String>>,
    pub k: Option<Vec<u32>>,
    pub degree_bound: Option<u32>,
    pub seed: Option<u64>,
    pub format: Option<String>,
}

/// Merges the config file (if any) with the flag values; flags override.
/// Validates the invariants that do not need parsing: variables nonempty
/// and distinct, weight count matching, known format.
pub fn resolve(file: Option<ConfigFile>, flags: Overrides) -> Result<SessionConfig, String> {
    let file = file.unwrap_or_default();
    let vars = flags
        .vars
        .or(file.vars)
        .ok_or("no variables given (flag --vars or config key \"vars\")")?;
    let f = flags.f.or(file.f).ok_or("no divisor given (flag --f or config key \"f\")")?;
    let weights = flags
        .weights
        .or(file.weights)
        .ok_or("no weights given (flag --weights or config key \"weights\")")?;
    let k = flags.k.or(file.k).unwrap_or_else(|| vec![1, 2, 3]);
    let degree_bound = flags.degree_bound.or(file.degree_bound).unwrap_or(8);
    let seed = flags.seed.or(file.seed).unwrap_or(0);
    let format = match flags.format.or(file.format).as_deref() {
        None | Some("text") => OutputFormat::Text,
        Some("json") => OutputFormat::Json,
        Some(other) => return Err(format!("unknown format `{other}` (use text or json)")),
    };

    if vars.is_empty() {
        return Err("variable list is empty".into());
    }
    for (i, v) in vars.iter().enumerate() {
        if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
            return Err(format!("variable name `{v}` must start with a letter"));
        }
        if vars[..i].contains(v) {
            return Err(format!("variable `{v}` appears twice"));
        }
    }
    if weights.len() != vars.len() {
        return Err(format!(
            "{} weights for {} variables",
            weights.len(),
            vars.len()
        ));
    }
    Ok(SessionConfig { vars, f, weights, k, degree_bound, seed, format })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_values() {
        let file = ConfigFile {
            vars: Some(vec!["x".into(), "y".into()]),
            f: Some("x".into()),
            weights: Some(vec!["1/2".into(), "1/2".into()]),
            k: Some(vec![5]),
            degree_bound: Some(4),
            seed: Some(9),
            format: Some("json".into()),
        };
        let flags = Overrides {
            f: Some("x^3 - y^2".into()),
            seed: Some(11),
            ..Overrides::default()
        };
        let cfg = resolve(Some(file), flags).unwrap();
        assert_eq!(cfg.f, "x^3 - y^2");
        assert_eq!(cfg.k, vec![5]);
        assert_eq!(cfg.seed, 11);
        assert_eq!(cfg.format, OutputFormat::Json);
    }

    #[test]
    fn validation_catches_bad_inputs() {
        let base = || ConfigFile {
            vars: Some(vec!["x".into(), "x".into()]),
            f: Some("x".into()),
            weights: Some(vec!["1".into(), "1".into()]),
            ..Default::default()
        };
        assert!(resolve(Some(base()), Overrides::default()).unwrap_err().contains("twice"));
        let mut missing = base();
        missing.vars = None;
        assert!(resolve(Some(missing), Overrides::default())
            .unwrap_err()
            .contains("no variables"));
        let cfg = resolve(
            Some(base()),
            Overrides {
                vars: Some(vec!["x".into()]),
                weights: Some(vec!["1".into(), "2".into()]),
                ..Overrides::default()
            },
        );
        assert!(cfg.unwrap_err().contains("weights"));
    }
}

//! Flat `key = value` configuration files.
//!
//! Blank lines and lines starting with `#` are ignored. Lists are comma
//! separated. Recognised keys are listed in [`KEYS`].

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{AppError, Result};

pub const KEYS: &[&str] = &[
    "method",
    "distances",
    "alphas",
    "n_radial",
    "lebedev",
    "stiffness",
    "size_adjust",
    "units",
    "format",
    "out",
    "emit_plot_script",
    "strict_limits",
    "normalized_primitives",
];

#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    origin: String,
    entries: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(AppError::Config(format!("{origin}:{}: expected key = value", i + 1)));
            };
            let k = k.trim().replace('-', "_");
            if !KEYS.contains(&k.as_str()) {
                return Err(AppError::Config(format!("{origin}:{}: unknown key `{k}`", i + 1)));
            }
            entries.insert(k, (i + 1, v.trim().to_string()));
        }
        Ok(Self {
            origin: origin.to_string(),
            entries,
        })
    }

    fn bad(&self, line: usize, key: &str, value: &str) -> AppError {
        AppError::Config(format!("{}:{line}: invalid value `{value}` for `{key}`", self.origin))
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some((line, v)) => v.parse().map(Some).map_err(|_| self.bad(*line, key, v)),
        }
    }

    pub fn get_list(&self, key: &str) -> Result<Option<Vec<f64>>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some((line, v)) => parse_list(v).map(Some).map_err(|_| self.bad(*line, key, v)),
        }
    }

    pub fn get_enum<T: clap::ValueEnum>(&self, key: &str) -> Result<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some((line, v)) => T::from_str(v, true).map(Some).map_err(|_| self.bad(*line, key, v)),
        }
    }
}

/// Comma-separated reals; an empty string is an empty list.
pub fn parse_list(s: &str) -> std::result::Result<Vec<f64>, std::num::ParseFloatError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

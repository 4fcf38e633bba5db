// SPDX-License-Identifier: Apache-2.0 OR MIT

//! `key=value` configuration files mirroring the command-line flags.
//!
//! Lines are trimmed; empty lines and `#` comments are skipped. `ext=` may
//! be given several times and accumulates in order. Command-line flags
//! override configuration values.

use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
    extensions: Vec<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "line {}: expected key=value, got {raw:?}",
                    lineno + 1
                ));
            };
            let key = key.trim();
            let value = value.trim();
            if key == "ext" {
                cfg.extensions.push(value.to_string());
            } else if cfg
                .values
                .insert(key.to_string(), value.to_string())
                .is_some()
            {
                return Err(format!("line {}: duplicate key {key:?}", lineno + 1));
            }
        }
        Ok(cfg)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn extensions(&self) -> &[String] {
        &self.extensions
    }
}

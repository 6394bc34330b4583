use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{CliError, CliResult};

/// Version stamped into every JSON document this tool writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Record of one invocation, enough to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub command: String,
    /// Subcommand arguments as given, without global flags.
    pub args: Vec<String>,
    pub config: Config,
    pub versions: BTreeMap<String, String>,
    pub seed: u64,
    pub outputs: Vec<PathBuf>,
    pub verdicts: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str, args: Vec<String>, config: &Config) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("scrollar".into(), env!("CARGO_PKG_VERSION").into());
        versions.insert("schema".into(), SCHEMA_VERSION.to_string());
        RunManifest {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            args,
            config: config.clone(),
            versions,
            seed: config.seed,
            outputs: Vec::new(),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl ToString) {
        self.verdicts.insert(key.into(), value.to_string());
    }
}

/// Writes into the output directory through a temporary file and rename.
pub struct Writer {
    dir: PathBuf,
    pub written: Vec<PathBuf>,
}

impl Writer {
    pub fn new(dir: &Path) -> CliResult<Self> {
        std::fs::create_dir_all(dir).map_err(|source| io_err(dir, source))?;
        Ok(Writer { dir: dir.to_path_buf(), written: Vec::new() })
    }

    pub fn write(&mut self, name: &str, contents: &[u8]) -> CliResult<PathBuf> {
        let target = self.dir.join(name);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|source| io_err(&self.dir, source))?;
        tmp.write_all(contents).map_err(|source| io_err(&target, source))?;
        tmp.persist(&target).map_err(|e| io_err(&target, e.error))?;
        self.written.push(target.clone());
        Ok(target)
    }

    /// `value` with `schema_version` prepended, pretty-printed.
    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> CliResult<PathBuf> {
        let text = versioned_json(value)?;
        self.write(name, text.as_bytes())
    }

    pub fn finish(mut self, mut manifest: RunManifest) -> CliResult<RunManifest> {
        manifest.outputs = self.written.clone();
        let name = format!("{}-manifest.json", manifest.command);
        let text = serde_json::to_string_pretty(&manifest)? + "\n";
        let path = self.write(&name, text.as_bytes())?;
        manifest.outputs.push(path);
        Ok(manifest)
    }
}

pub fn versioned_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), SCHEMA_VERSION.into());
    match serde_json::to_value(value)? {
        serde_json::Value::Object(fields) => doc.extend(fields),
        other => {
            doc.insert("data".into(), other);
        }
    }
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

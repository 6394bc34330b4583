use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use scrollar::construct::BuildOptions;
use scrollar::exactmath::{CoeffField, DEFAULT_PRIME};
use scrollar::rng::DEFAULT_SEED;
use scrollar::Convention;

use crate::error::{usage, CliError, CliResult};

/// Environment variable naming the output directory.
pub const OUT_DIR_ENV: &str = "SCROLLAR_OUT_DIR";

/// Settings read from `--config`; every field may be omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub rationals: Option<bool>,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    pub retries: Option<u32>,
    pub convention: Option<Convention>,
    pub out_dir: Option<PathBuf>,
}

/// Fully resolved settings: flags over config file over environment over
/// defaults (the environment only supplies the output directory).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub field: CoeffField,
    pub seed: u64,
    pub retries: u32,
    pub convention: Convention,
    pub out_dir: PathBuf,
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub rationals: bool,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    pub retries: Option<u32>,
    pub convention: Option<Convention>,
    pub out_dir: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }
}

impl Config {
    pub fn resolve(file: ConfigFile, flags: &Overrides, env_out: Option<PathBuf>) -> CliResult<Self> {
        let rationals = flags.rationals || file.rationals.unwrap_or(false);
        let prime = flags.prime.or(file.prime).unwrap_or(DEFAULT_PRIME);
        if rationals && flags.prime.is_some() {
            return usage("--rationals and --prime are exclusive");
        }
        let field = if rationals { CoeffField::Rationals } else { CoeffField::prime(prime, 2)? };
        let retries = flags.retries.or(file.retries).unwrap_or(5);
        if retries == 0 {
            return usage("retry limit must be at least 1");
        }
        Ok(Config {
            field,
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            retries,
            convention: flags.convention.or(file.convention).unwrap_or_default(),
            out_dir: flags
                .out_dir
                .clone()
                .or(file.out_dir)
                .or(env_out)
                .unwrap_or_else(|| PathBuf::from("scrollar-out")),
        })
    }

    pub fn build_options(&self) -> BuildOptions {
        BuildOptions { field: self.field, seed: self.seed, retries: self.retries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_file() {
        let file = ConfigFile { seed: Some(1), retries: Some(2), ..Default::default() };
        let flags = Overrides { seed: Some(9), ..Default::default() };
        let c = Config::resolve(file, &flags, Some("env".into())).unwrap();
        assert_eq!((c.seed, c.retries), (9, 2));
        assert_eq!(c.out_dir, PathBuf::from("env"));
        assert_eq!(c.field, CoeffField::PrimeField(DEFAULT_PRIME));
    }

    #[test]
    fn rejects_bad_settings() {
        let zero = Overrides { retries: Some(0), ..Default::default() };
        assert!(Config::resolve(ConfigFile::default(), &zero, None).is_err());
        let composite = Overrides { prime: Some(10008), ..Default::default() };
        assert!(Config::resolve(ConfigFile::default(), &composite, None).is_err());
    }
}

//! Run settings, overridable from a `key=value` file.

use std::path::{Path, PathBuf};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Precision cap for certified comparisons, in bits.
    pub cap_bits: u64,
    /// Default number of decimal digits for `xi` and `cf`.
    pub digits: u64,
    pub xmax: u64,
    pub hmax: u64,
    /// Directory that relative output paths are resolved against.
    pub out_dir: PathBuf,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { cap_bits: 1 << 16, digits: 50, xmax: 1_000_000, hmax: 10_000, out_dir: PathBuf::from("."), workers: 0 }
    }
}

fn positive(key: &str, v: &str) -> Result<u64, CliError> {
    match v.parse::<u64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(CliError::Config(format!("{key} must be a positive integer, got {v:?}"))),
    }
}

impl RunConfig {
    /// Applies `key=value` lines; `#` starts a comment.
    pub fn apply(&mut self, text: &str, origin: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = || format!("{origin}:{}", n + 1);
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("{}: expected key=value, got {line:?}", at())))?;
            let (k, v) = (k.trim(), v.trim());
            let wrap = |e: CliError| CliError::Config(format!("{}: {e}", at()));
            match k {
                "cap_bits" => self.cap_bits = positive(k, v).map_err(wrap)?,
                "digits" => self.digits = positive(k, v).map_err(wrap)?,
                "xmax" => self.xmax = positive(k, v).map_err(wrap)?,
                "hmax" => self.hmax = positive(k, v).map_err(wrap)?,
                "out_dir" => self.out_dir = PathBuf::from(v),
                "workers" => {
                    self.workers = v.parse().map_err(|_| CliError::Config(format!("{}: bad worker count {v:?}", at())))?
                }
                _ => return Err(CliError::Config(format!("{}: unknown key {k:?}", at()))),
            }
        }
        self.validate()
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = RunConfig::default();
        cfg.apply(&text, &path.display().to_string())?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.cap_bits < 128 {
            return Err(CliError::Config(format!("cap_bits must be at least 128, got {}", self.cap_bits)));
        }
        Ok(())
    }

    pub fn output(&self, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.out_dir.join(p)
        }
    }
}

//! Runtime configuration with the precedence: command-line flags, then
//! `AFL_`-prefixed environment variables, then a `key=value` config file,
//! then built-in defaults.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug)]
pub struct Config {
    /// Global arity/order cap override; `None` keeps each suite's default.
    pub max_n: Option<usize>,
    /// Seed for the pseudo-random test vector field.
    pub seed: u64,
    /// Directory for the basis cache; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
    /// Whether data-parallel loops are enabled.
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: None,
            seed: 23,
            cache_dir: None,
            parallel: true,
        }
    }
}

/// Unresolved option values from one source; `None` means "not set here".
#[derive(Clone, Debug, Default)]
pub struct ConfigLayer {
    pub max_n: Option<usize>,
    pub seed: Option<u64>,
    pub cache_dir: Option<PathBuf>,
    pub parallel: Option<bool>,
}

impl ConfigLayer {
    fn apply(&self, onto: &mut Config) {
        if let Some(v) = self.max_n {
            onto.max_n = Some(v);
        }
        if let Some(v) = self.seed {
            onto.seed = v;
        }
        if let Some(v) = &self.cache_dir {
            onto.cache_dir = Some(v.clone());
        }
        if let Some(v) = self.parallel {
            onto.parallel = v;
        }
    }
}

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim() {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        other => bail!("cannot parse {other:?} as a boolean"),
    }
}

pub fn layer_from_env() -> Result<ConfigLayer> {
    let mut layer = ConfigLayer::default();
    if let Ok(v) = std::env::var("AFL_MAX_N") {
        layer.max_n = Some(v.trim().parse().context("AFL_MAX_N")?);
    }
    if let Ok(v) = std::env::var("AFL_SEED") {
        layer.seed = Some(v.trim().parse().context("AFL_SEED")?);
    }
    if let Ok(v) = std::env::var("AFL_CACHE_DIR") {
        layer.cache_dir = Some(PathBuf::from(v));
    }
    if let Ok(v) = std::env::var("AFL_PARALLEL") {
        layer.parallel = Some(parse_bool(&v).context("AFL_PARALLEL")?);
    }
    Ok(layer)
}

/// Parses a `key = value` file; `#` starts a comment, blank lines are
/// ignored. Recognized keys: max-n, seed, cache-dir, parallel.
pub fn layer_from_file(path: &Path) -> Result<ConfigLayer> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config file {}", path.display()))?;
    let mut layer = ConfigLayer::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!(
                "{}:{}: expected key = value, got {raw:?}",
                path.display(),
                lineno + 1
            );
        };
        let value = value.trim();
        match key.trim() {
            "max-n" => layer.max_n = Some(value.parse().context("max-n")?),
            "seed" => layer.seed = Some(value.parse().context("seed")?),
            "cache-dir" => layer.cache_dir = Some(PathBuf::from(value)),
            "parallel" => layer.parallel = Some(parse_bool(value)?),
            other => bail!("{}: unknown config key {other:?}", path.display()),
        }
    }
    Ok(layer)
}

/// Resolves the configuration from the three layers over the defaults.
pub fn resolve(
    flags: ConfigLayer,
    config_file: Option<&Path>,
) -> Result<Config> {
    let mut config = Config::default();
    if let Some(path) = config_file {
        layer_from_file(path)?.apply(&mut config);
    }
    layer_from_env()?.apply(&mut config);
    flags.apply(&mut config);
    Ok(config)
}

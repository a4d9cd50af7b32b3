//! Run configuration: budgets and output format.
//!
//! Sources are layered: built-in defaults, then the `WQO_BIT_BUDGET`
//! environment variable, then a `key=value` file, then command-line flags.

use std::str::FromStr;

use wqo_core::Budget;

use crate::formats::ParseError;

pub const BIT_BUDGET_ENV: &str = "WQO_BIT_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Tsv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "tsv" => Ok(OutputFormat::Tsv),
            _ => Err(format!("unknown format `{s}` (plain|tsv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_bits: u64,
    pub max_steps: u64,
    /// Cap on enumerated tree or term sizes.
    pub max_nodes: usize,
    /// Cap on sequence lengths accepted or searched.
    pub max_seq_len: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        let b = Budget::default();
        RunConfig {
            max_bits: b.max_bits,
            max_steps: b.max_steps,
            max_nodes: 9,
            max_seq_len: 64,
            format: OutputFormat::Plain,
        }
    }
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget::new(self.max_bits, self.max_steps)
    }

    /// Applies the bit budget from the environment, if set.
    pub fn with_env(mut self, value: Option<&str>) -> Result<Self, ParseError> {
        if let Some(v) = value {
            self.max_bits = positive(v.trim()).ok_or_else(|| ParseError {
                line: 1,
                col: 1,
                msg: format!("{BIT_BUDGET_ENV}: expected a positive integer"),
            })?;
        }
        Ok(self)
    }

    /// Applies `key=value` lines. Blank lines and `#` comments are skipped.
    pub fn with_file(mut self, text: &str) -> Result<Self, ParseError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| ParseError { line: i + 1, col: 1, msg };
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key=value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let num = || positive(value).ok_or_else(|| err(format!("`{key}` needs a positive integer")));
            match key {
                "max_bits" => self.max_bits = num()?,
                "max_steps" => self.max_steps = num()?,
                "max_nodes" => self.max_nodes = num()? as usize,
                "max_seq_len" => self.max_seq_len = num()? as usize,
                "format" => self.format = value.parse().map_err(err)?,
                _ => return Err(err(format!("unknown key `{key}`"))),
            }
        }
        Ok(self)
    }
}

fn positive(s: &str) -> Option<u64> {
    s.parse::<u64>().ok().filter(|&v| v > 0)
}

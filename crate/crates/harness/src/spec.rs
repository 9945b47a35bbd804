//! Experiment description: a flat `key = value` file plus overrides.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use bro_core::problems::{FunctionId, ShiftMode};
use bro_core::Algorithm;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub algorithms: BTreeSet<Algorithm>,
    pub functions: BTreeSet<FunctionId>,
    /// Dimension for F1..F13 instead of their default 30.
    pub dimension_override: Option<usize>,
    pub runs: usize,
    pub pop_size: usize,
    pub max_iter: usize,
    pub damage_threshold: u32,
    pub master_seed: u64,
    pub output_path: PathBuf,
    pub emit_traces: bool,
    pub shift_mode: ShiftMode,
    /// Record wall-clock time; when off, elapsed columns are written as 0.
    pub timing: bool,
}

impl Default for ExperimentSpec {
    /// 25 runs of population 100 for 500 iterations, damage threshold 3,
    /// M-BRO and BRO on all nineteen functions.
    fn default() -> Self {
        ExperimentSpec {
            algorithms: [Algorithm::Mbro, Algorithm::Bro].into_iter().collect(),
            functions: FunctionId::ALL.into_iter().collect(),
            dimension_override: None,
            runs: 25,
            pop_size: 100,
            max_iter: 500,
            damage_threshold: 3,
            master_seed: 0,
            output_path: PathBuf::from("results"),
            emit_traces: false,
            shift_mode: ShiftMode::Printed,
            timing: true,
        }
    }
}

pub fn parse_algorithms(value: &str) -> Result<BTreeSet<Algorithm>> {
    let set = split_list(value)
        .map(|item| {
            item.parse::<Algorithm>()
                .map_err(|_| HarnessError::config("algorithms", format!("unknown algorithm `{item}`")))
        })
        .collect::<Result<BTreeSet<_>>>()?;
    if set.is_empty() {
        return Err(HarnessError::config("algorithms", "at least one algorithm is required"));
    }
    Ok(set)
}

/// Accepts `f3`, `3`, ranges like `f1-f7`, and `all`.
pub fn parse_functions(value: &str) -> Result<BTreeSet<FunctionId>> {
    let bad = |item: &str| HarnessError::config("functions", format!("unknown function `{item}`"));
    let mut set = BTreeSet::new();
    for item in split_list(value) {
        if item.eq_ignore_ascii_case("all") {
            set.extend(FunctionId::ALL);
        } else if let Some((a, b)) = item.split_once('-') {
            let a: FunctionId = a.parse().map_err(|_| bad(item))?;
            let b: FunctionId = b.parse().map_err(|_| bad(item))?;
            if a > b {
                return Err(bad(item));
            }
            set.extend(FunctionId::ALL.into_iter().filter(|f| (a..=b).contains(f)));
        } else {
            set.insert(item.parse().map_err(|_| bad(item))?);
        }
    }
    if set.is_empty() {
        return Err(HarnessError::config("functions", "at least one function is required"));
    }
    Ok(set)
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty())
}

fn parse_number<T: std::str::FromStr>(field: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| HarnessError::config(field, format!("`{value}` is not a valid number")))
}

fn parse_bool(field: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(HarnessError::config(field, format!("`{value}` is not a boolean"))),
    }
}

impl ExperimentSpec {
    /// Reads a spec file on top of the defaults.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(HarnessError::io(path))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = ExperimentSpec::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| HarnessError::config(format!("line {}", n + 1), "expected `key = value`"))?;
            spec.set(key.trim(), value.trim())?;
        }
        Ok(spec)
    }

    /// Sets one field by its file key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "algorithms" | "algorithm" => self.algorithms = parse_algorithms(value)?,
            "functions" | "function" => self.functions = parse_functions(value)?,
            "dimension" => {
                self.dimension_override =
                    if value.eq_ignore_ascii_case("default") { None } else { Some(parse_number("dimension", value)?) }
            }
            "runs" => self.runs = parse_number(key, value)?,
            "pop_size" => self.pop_size = parse_number(key, value)?,
            "max_iter" => self.max_iter = parse_number(key, value)?,
            "damage_threshold" => self.damage_threshold = parse_number(key, value)?,
            "seed" | "master_seed" => self.master_seed = parse_number("seed", value)?,
            "output" | "output_path" => self.output_path = PathBuf::from(value),
            "traces" | "emit_traces" => self.emit_traces = parse_bool("traces", value)?,
            "shifts" => {
                self.shift_mode =
                    value.parse().map_err(|_| HarnessError::config("shifts", "expected printed, raw or none"))?
            }
            "timing" => self.timing = parse_bool(key, value)?,
            _ => return Err(HarnessError::config(key, "unknown key")),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(HarnessError::config("algorithms", "at least one algorithm is required"));
        }
        if self.functions.is_empty() {
            return Err(HarnessError::config("functions", "at least one function is required"));
        }
        if self.runs < 1 {
            return Err(HarnessError::config("runs", "must be at least 1"));
        }
        if self.pop_size < 2 {
            return Err(HarnessError::config("pop_size", "must be at least 2"));
        }
        if self.max_iter < 1 {
            return Err(HarnessError::config("max_iter", "must be at least 1"));
        }
        if self.damage_threshold < 1 {
            return Err(HarnessError::config("damage_threshold", "must be at least 1"));
        }
        if let Some(d) = self.dimension_override {
            if let Some(f) = self.functions.iter().find(|f| !f.is_scalable()) {
                return Err(HarnessError::config("dimension", format!("{f} has a fixed dimension")));
            }
            let min = if self.functions.contains(&FunctionId::F5) { 2 } else { 1 };
            if d < min {
                return Err(HarnessError::config("dimension", format!("must be at least {min}")));
            }
        }
        Ok(())
    }
}

//! Replication plan and its flat `key=value` file format.

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::{Algorithm, Attachment, ModelBOrder};

/// Where the non-BA generators get their target degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SequenceMode {
    /// The BA network's own degree sequence.
    #[default]
    ExactReuse,
    /// `n` i.i.d. draws from the BA network's empirical distribution.
    Resample,
}

impl SequenceMode {
    pub fn name(self) -> &'static str {
        match self {
            SequenceMode::ExactReuse => "exact",
            SequenceMode::Resample => "resample",
        }
    }
}

impl FromStr for SequenceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" | "exact_reuse" => Ok(SequenceMode::ExactReuse),
            "resample" => Ok(SequenceMode::Resample),
            other => Err(Error::Config(format!("unknown sequence mode `{other}`"))),
        }
    }
}

impl FromStr for ModelBOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "descending" => Ok(ModelBOrder::DescendingDegree),
            "shuffled" | "random" => Ok(ModelBOrder::Shuffled),
            other => Err(Error::Config(format!("unknown model B order `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub m_values: Vec<usize>,
    pub replicates: usize,
    pub algorithms: Vec<Algorithm>,
    pub master_seed: u64,
    pub sequence_mode: SequenceMode,
    pub mb_order: ModelBOrder,
    pub ba_attachment: Attachment,
    pub output_dir: PathBuf,
    /// Worker threads; 0 lets the pool decide. Never affects outputs.
    pub threads: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n: 1000,
            m_values: vec![1, 2],
            replicates: 100,
            algorithms: Algorithm::ALL.to_vec(),
            master_seed: 20130515,
            sequence_mode: SequenceMode::ExactReuse,
            mb_order: ModelBOrder::DescendingDegree,
            ba_attachment: Attachment::InDegreePlusOne,
            output_dir: PathBuf::from("results"),
            threads: 0,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| {
        Error::Config(format!(
            "`{key}` expects a non-negative integer, got `{value}`"
        ))
    })
}

pub fn parse_m_values(value: &str) -> Result<Vec<usize>> {
    value
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_num("m_values", s))
        .collect()
}

pub fn parse_algorithms(value: &str) -> Result<Vec<Algorithm>> {
    value
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

impl ExperimentConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim() {
            "n" => self.n = parse_num(key, value)?,
            "m" | "m_values" => self.m_values = parse_m_values(value)?,
            "replicates" => self.replicates = parse_num(key, value)?,
            "seed" | "master_seed" => self.master_seed = parse_num(key, value)?,
            "algorithms" => self.algorithms = parse_algorithms(value)?,
            "mode" | "sequence_mode" => self.sequence_mode = value.parse()?,
            "mb_order" => self.mb_order = value.parse()?,
            "ba_kernel" => self.ba_attachment = value.parse()?,
            "out_dir" | "output_dir" => self.output_dir = PathBuf::from(value.trim()),
            "threads" => self.threads = parse_num(key, value)?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Reads a flat `key=value` file over the defaults. `#` starts a comment.
    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut cfg = Self::default();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let text = line.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let (key, value) = text.split_once('=').ok_or_else(|| {
                Error::parse(idx + 1, format!("expected key=value, got `{text}`"))
            })?;
            cfg.set(key, value).map_err(|e| match e {
                Error::Config(msg) => Error::parse(idx + 1, msg),
                other => other,
            })?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::Config("replicates must be at least 1".into()));
        }
        if self.m_values.is_empty() {
            return Err(Error::Config("m_values is empty".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        if let Some(&m) = self.m_values.iter().find(|&&m| m == 0 || m >= self.n) {
            return Err(Error::Config(format!(
                "m={m} must satisfy 1 <= m < n={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Deduplicated, canonically ordered algorithms and m values.
    pub(crate) fn cells(&self) -> Vec<(Algorithm, usize)> {
        let mut algs = self.algorithms.clone();
        algs.sort();
        algs.dedup();
        let mut ms = self.m_values.clone();
        ms.sort_unstable();
        ms.dedup();
        algs.iter()
            .flat_map(|&a| ms.iter().map(move |&m| (a, m)))
            .collect()
    }

    /// Settings that determine outputs, one `key=value` per line.
    pub fn echo(&self) -> String {
        let algs: Vec<&str> = self.algorithms.iter().map(|a| a.tag()).collect();
        let ms: Vec<String> = self.m_values.iter().map(usize::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "m_values={}", ms.join(","));
        let _ = writeln!(out, "replicates={}", self.replicates);
        let _ = writeln!(out, "algorithms={}", algs.join(","));
        let _ = writeln!(out, "master_seed={}", self.master_seed);
        let _ = writeln!(out, "mode={}", self.sequence_mode.name());
        let _ = writeln!(out, "mb_order={}", self.mb_order.name());
        let _ = writeln!(out, "ba_kernel={}", self.ba_attachment.name());
        out
    }
}

//! Degree sequences, empirical degree distributions, and their file formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RandomSource;

/// Target degree per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(targets: Vec<usize>) -> Self {
        Self(targets)
    }

    pub fn of(g: &Graph) -> Self {
        Self(g.degrees())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Even stub total; an odd total forces stub-based generators to drop one.
    pub fn is_pairable(&self) -> bool {
        self.sum().is_multiple_of(2)
    }

    /// Count of vertices per degree, ascending by degree.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &k in &self.0 {
            *h.entry(k).or_insert(0) += 1;
        }
        h
    }

    /// Parses one non-negative integer per line; blank lines are skipped.
    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut targets = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            let k = text.parse().map_err(|_| {
                Error::parse(
                    idx + 1,
                    format!("expected a non-negative integer, got `{text}`"),
                )
            })?;
            targets.push(k);
        }
        Ok(Self(targets))
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for k in &self.0 {
            let _ = writeln!(out, "{k}");
        }
        out
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

pub fn degrees_of(g: &Graph) -> DegreeSequence {
    DegreeSequence::of(g)
}

/// Probability mass over a finite degree support, support ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    support: Vec<usize>,
    probability: Vec<f64>,
}

const MASS_TOLERANCE: f64 = 1e-9;

impl DegreeDistribution {
    pub fn new(support: Vec<usize>, probability: Vec<f64>) -> Result<Self> {
        if support.is_empty() || support.len() != probability.len() {
            return Err(Error::invalid(
                "support and probabilities must be non-empty and equal length",
            ));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("support must be strictly ascending"));
        }
        if probability.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::invalid(
                "probabilities must be finite and non-negative",
            ));
        }
        let total: f64 = probability.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::invalid(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self {
            support,
            probability,
        })
    }

    /// Empirical P(k) = count(k) / n.
    pub fn from_sequence(s: &DegreeSequence) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::invalid("empty degree sequence"));
        }
        let n = s.len() as f64;
        let (support, probability) = s
            .histogram()
            .into_iter()
            .map(|(k, c)| (k, c as f64 / n))
            .unzip();
        Ok(Self {
            support,
            probability,
        })
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probability
    }

    pub fn probability_of(&self, k: usize) -> f64 {
        self.support
            .binary_search(&k)
            .map(|i| self.probability[i])
            .unwrap_or(0.0)
    }

    pub fn mean(&self) -> f64 {
        self.support
            .iter()
            .zip(&self.probability)
            .map(|(&k, &p)| k as f64 * p)
            .sum()
    }

    /// `n` i.i.d. draws.
    pub fn sample(&self, n: usize, rng: &mut RandomSource) -> Result<DegreeSequence> {
        if n == 0 {
            return Err(Error::invalid("cannot sample an empty sequence"));
        }
        let targets = (0..n)
            .map(|_| {
                let i = rng
                    .weighted_index(&self.probability)
                    .expect("validated distribution has positive mass");
                self.support[i]
            })
            .collect();
        Ok(DegreeSequence(targets))
    }

    /// CSV with header `k,probability`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,probability\n");
        for (k, p) in self.support.iter().zip(&self.probability) {
            let _ = writeln!(out, "{k},{p}");
        }
        out
    }

    pub fn read_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut support = Vec::new();
        let mut probability = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let text = line.trim();
            if text.is_empty() || (idx == 0 && text == "k,probability") {
                continue;
            }
            let bad = || Error::parse(idx + 1, format!("expected `k,probability`, got `{text}`"));
            let (k, p) = text.split_once(',').ok_or_else(bad)?;
            support.push(k.trim().parse().map_err(|_| bad())?);
            probability.push(p.trim().parse().map_err(|_| bad())?);
        }
        Self::new(support, probability)
    }
}

pub fn distribution_from_sequence(s: &DegreeSequence) -> Result<DegreeDistribution> {
    DegreeDistribution::from_sequence(s)
}

pub fn sample_sequence(
    d: &DegreeDistribution,
    n: usize,
    rng: &mut RandomSource,
) -> Result<DegreeSequence> {
    d.sample(n, rng)
}

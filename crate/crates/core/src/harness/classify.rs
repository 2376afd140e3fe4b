//! Categorical labels for global efficiency and central point dominance.
//!
//! A value equal to a threshold falls into the lower class.

use std::fmt;

use crate::error::{Error, Result};

pub const BOUNDARY_RULE: &str = "values equal to a class threshold are assigned to the lower class";

/// Efficiency classes with thresholds 0.12 / 0.05 / 0.01.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeClass {
    VeryLow,
    Low,
    Medium,
    High,
}

/// Dependence classes with thresholds 0.7 / 0.4 / 0.2 / 0.1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CpdClass {
    VeryLow,
    Low,
    Medium,
    High,
    VeryHigh,
}

fn unit_interval(name: &str, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::invalid(format!("{name} {x} outside [0, 1]")));
    }
    Ok(())
}

pub fn classify_ge(ge: f64) -> Result<GeClass> {
    unit_interval("global efficiency", ge)?;
    Ok(if ge > 0.12 {
        GeClass::High
    } else if ge > 0.05 {
        GeClass::Medium
    } else if ge > 0.01 {
        GeClass::Low
    } else {
        GeClass::VeryLow
    })
}

pub fn classify_cpd(cpd: f64) -> Result<CpdClass> {
    unit_interval("central point dominance", cpd)?;
    Ok(if cpd > 0.7 {
        CpdClass::VeryHigh
    } else if cpd > 0.4 {
        CpdClass::High
    } else if cpd > 0.2 {
        CpdClass::Medium
    } else if cpd > 0.1 {
        CpdClass::Low
    } else {
        CpdClass::VeryLow
    })
}

impl fmt::Display for GeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeClass::VeryLow => "Very low",
            GeClass::Low => "Low",
            GeClass::Medium => "Medium",
            GeClass::High => "High",
        })
    }
}

impl fmt::Display for CpdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CpdClass::VeryLow => "Very low",
            CpdClass::Low => "Low",
            CpdClass::Medium => "Medium",
            CpdClass::High => "High",
            CpdClass::VeryHigh => "Very high",
        })
    }
}

//! Location statistics for replicate samples.

/// Quartile convention written into run metadata.
pub const QUARTILE_RULE: &str =
    "linear interpolation between order statistics at position (n-1)*p (Hyndman-Fan type 7); median is the midpoint rule";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
}

impl Stats {
    pub fn iqr(&self) -> f64 {
        self.q3 - self.q1
    }
}

/// Summary of one sample; undefined entries are counted, not used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    /// Defined values that entered the statistics.
    pub count: usize,
    pub excluded: usize,
    /// `None` when every entry was undefined.
    pub stats: Option<Stats>,
}

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn summarize(values: &[Option<f64>]) -> Summary {
    let mut defined: Vec<f64> = values.iter().flatten().copied().collect();
    let excluded = values.len() - defined.len();
    if defined.is_empty() {
        return Summary {
            count: 0,
            excluded,
            stats: None,
        };
    }
    defined.sort_by(f64::total_cmp);
    let mean = defined.iter().sum::<f64>() / defined.len() as f64;
    Summary {
        count: defined.len(),
        excluded,
        stats: Some(Stats {
            mean,
            median: quantile(&defined, 0.5),
            q1: quantile(&defined, 0.25),
            q3: quantile(&defined, 0.75),
        }),
    }
}

/// `summarize` for samples without undefined entries.
pub fn summarize_defined(values: &[f64]) -> Summary {
    let wrapped: Vec<Option<f64>> = values.iter().map(|&v| Some(v)).collect();
    summarize(&wrapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stats(v: &[f64]) -> Stats {
        summarize_defined(v).stats.unwrap()
    }

    #[test]
    fn small_samples() {
        assert_eq!(stats(&[1.0, 2.0, 3.0, 4.0, 5.0]).median, 3.0);
        let s = stats(&[2.0, 2.0, 2.0, 2.0]);
        assert_eq!((s.mean, s.q1, s.q3), (2.0, 2.0, 2.0));
        assert_eq!(stats(&[1.0, 1.0, 3.0, 5.0]).mean, 2.5);
        assert_eq!(stats(&[4.0, 1.0, 3.0, 2.0]).median, 2.5);
        let s = stats(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!((s.q1, s.q3), (2.0, 4.0));
    }

    #[test]
    fn undefined_entries_are_counted() {
        let s = summarize(&[Some(1.0), None, Some(3.0), None]);
        assert_eq!((s.count, s.excluded), (2, 2));
        assert_eq!(s.stats.unwrap().median, 2.0);
        let none = summarize(&[None, None]);
        assert_eq!(none.stats, None);
        assert_eq!(none.excluded, 2);
    }

    proptest! {
        #[test]
        fn quartiles_are_ordered(v in proptest::collection::vec(-1e6f64..1e6, 1..60)) {
            let s = stats(&v);
            prop_assert!(s.q1 <= s.median && s.median <= s.q3);
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(lo <= s.q1 && s.q3 <= hi);
        }
    }
}

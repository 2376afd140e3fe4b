//! CSV and text artifacts of an experiment run.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::classify::BOUNDARY_RULE;
use super::config::ExperimentConfig;
use super::experiment::{replicate_seed, ReplicateRow, SummaryTable};
use super::summary::{Summary, QUARTILE_RULE};
use crate::error::Result;
use crate::generators::{Algorithm, GenerationReport};
use crate::metrics::MetricRecord;
use crate::rng::RNG_IDENTITY;

pub const NA: &str = "NA";

pub const REPLICATE_HEADER: &str =
    "algorithm,m,replicate,seed,n,edges,components,giant_pct,cc,cpd,ge,r";
pub const KNN_HEADER: &str = "algorithm,m,replicate,k,knn_mean";

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| NA.to_string(), |x| x.to_string())
}

/// Metric columns after `algorithm,m,replicate,seed`.
pub fn metric_fields(rec: &MetricRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        rec.vertex_count,
        rec.edge_count,
        rec.component_count,
        rec.giant_size_pct,
        rec.cc_global,
        fmt_opt(rec.cpd),
        fmt_opt(rec.global_efficiency),
        fmt_opt(rec.degree_correlation_r),
    )
}

pub fn replicate_csv(rows: &[ReplicateRow]) -> String {
    let mut out = format!("{REPLICATE_HEADER}\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.algorithm,
            r.m,
            r.replicate,
            r.seed,
            metric_fields(&r.record)
        );
    }
    out
}

pub fn knn_long_csv(rows: &[ReplicateRow]) -> String {
    let mut out = format!("{KNN_HEADER}\n");
    for r in rows {
        for (k, v) in &r.record.knn_by_degree {
            let _ = writeln!(out, "{},{},{},{},{}", r.algorithm, r.m, r.replicate, k, v);
        }
    }
    out
}

pub fn report_csv(rows: &[ReplicateRow]) -> String {
    let mut out = format!("algorithm,m,replicate,{}\n", GenerationReport::CSV_HEADER);
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.algorithm,
            r.m,
            r.replicate,
            r.report.csv_row()
        );
    }
    out
}

fn summary_fields(s: &Summary) -> String {
    match s.stats {
        Some(st) => format!(
            "{},{},{},{},{},{}",
            s.count, s.excluded, st.mean, st.median, st.q1, st.q3
        ),
        None => format!("{},{},{NA},{NA},{NA},{NA}", s.count, s.excluded),
    }
}

pub fn summary_csv(table: &SummaryTable) -> String {
    let mut out = String::from("algorithm,m,metric,count,excluded,mean,median,q1,q3\n");
    for c in &table.cells {
        for (name, s) in c.metrics() {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                c.algorithm,
                c.m,
                name,
                summary_fields(s)
            );
        }
    }
    out
}

pub fn knn_pooled_csv(table: &SummaryTable) -> String {
    let mut out = String::from("algorithm,m,k,count,excluded,mean,median,q1,q3\n");
    for ((a, m), points) in &table.knn {
        for p in points {
            let _ = writeln!(out, "{},{},{},{}", a, m, p.k, summary_fields(&p.summary));
        }
    }
    out
}

/// Table columns in canonical (algorithm, m) order.
fn columns(cfg: &ExperimentConfig) -> Vec<(Algorithm, usize)> {
    cfg.cells()
}

/// Rows of the comparison table, each a label plus one cell per column.
pub fn table1_rows(
    cfg: &ExperimentConfig,
    table: &SummaryTable,
) -> (Vec<String>, Vec<Vec<String>>) {
    let cols = columns(cfg);
    let header: Vec<String> = cols.iter().map(|(a, m)| format!("{a} m={m}")).collect();
    let mean = |s: &Summary| {
        s.stats
            .map_or_else(|| NA.to_string(), |st| format!("{:.2}", st.mean))
    };
    let mut rows: Vec<Vec<String>> = vec![
        vec!["No. components".into()],
        vec!["GC size (%)".into()],
        vec!["Efficiency (GE)".into()],
        vec!["Dependence (CPD)".into()],
    ];
    for &(a, m) in &cols {
        let cell = table.cell(a, m);
        rows[0].push(cell.map_or_else(|| NA.into(), |c| mean(&c.components)));
        rows[1].push(cell.map_or_else(|| NA.into(), |c| mean(&c.giant_pct)));
        rows[2].push(
            cell.and_then(|c| c.ge_class)
                .map_or_else(|| NA.into(), |g| g.to_string()),
        );
        rows[3].push(
            cell.and_then(|c| c.cpd_class)
                .map_or_else(|| NA.into(), |g| g.to_string()),
        );
    }
    (header, rows)
}

pub fn table1_csv(cfg: &ExperimentConfig, table: &SummaryTable) -> String {
    let (header, rows) = table1_rows(cfg, table);
    let mut out = format!("row,{}\n", header.join(","));
    for row in rows {
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn table1_text(cfg: &ExperimentConfig, table: &SummaryTable) -> String {
    let (header, rows) = table1_rows(cfg, table);
    let label_width = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i + 1].len())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:label_width$}", "");
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(out, "  {h:>w$}");
    }
    out.push('\n');
    for row in &rows {
        let _ = write!(out, "{:label_width$}", row[0]);
        for (v, w) in row[1..].iter().zip(&widths) {
            let _ = write!(out, "  {v:>w$}");
        }
        out.push('\n');
    }
    out.push_str(
        "\nComponent rows are replicate means; classes are assigned to the cell median.\n",
    );
    out
}

pub fn run_metadata(cfg: &ExperimentConfig) -> String {
    let mut out = cfg.echo();
    let _ = writeln!(out, "rng={RNG_IDENTITY}");
    let _ = writeln!(
        out,
        "seed_rule=replicate seed = splitmix64 fold of (master_seed, algorithm code BA=1 MR=2 KALISKY=3 MA=4 MB=5, m, replicate); non-BA cells grow their source BA network from the BA seed of the same (m, replicate)"
    );
    let _ = writeln!(
        out,
        "example_seed=MB,m=1,replicate=17 -> {}",
        replicate_seed(cfg.master_seed, Algorithm::Mb, 1, 17)
    );
    let _ = writeln!(out, "quartile_rule={QUARTILE_RULE}");
    let _ = writeln!(out, "class_boundaries={BOUNDARY_RULE}");
    let _ = writeln!(
        out,
        "ge_classes=High >0.12; Medium (0.05,0.12]; Low (0.01,0.05]; Very low <=0.01"
    );
    let _ = writeln!(
        out,
        "cpd_classes=Very high >0.7; High (0.4,0.7]; Medium (0.2,0.4]; Low (0.1,0.2]; Very low <=0.1"
    );
    let _ = writeln!(out, "classified_statistic=cell median");
    let _ = writeln!(out, "undefined_value={NA}");
    out
}

pub fn write_all(
    cfg: &ExperimentConfig,
    rows: &[ReplicateRow],
    table: &SummaryTable,
) -> Result<()> {
    let dir: &Path = &cfg.output_dir;
    fs::write(dir.join("replicates.csv"), replicate_csv(rows))?;
    fs::write(dir.join("knn_long.csv"), knn_long_csv(rows))?;
    fs::write(dir.join("knn_pooled.csv"), knn_pooled_csv(table))?;
    fs::write(dir.join("generation_reports.csv"), report_csv(rows))?;
    fs::write(dir.join("summary.csv"), summary_csv(table))?;
    fs::write(dir.join("table1.csv"), table1_csv(cfg, table))?;
    fs::write(dir.join("table1.txt"), table1_text(cfg, table))?;
    fs::write(dir.join("run_metadata.txt"), run_metadata(cfg))?;
    Ok(())
}

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sfnet::generators::{
    generate_ba, Algorithm, Attachment, GenerationReport, GeneratorParams, ModelBOrder,
};
use sfnet::harness::output::{metric_fields, REPLICATE_HEADER};
use sfnet::harness::{run_experiment, ExperimentConfig, SequenceMode};
use sfnet::metrics::full_record;
use sfnet::{DegreeSequence, Error, Graph, RandomSource};

#[derive(Parser)]
#[command(
    name = "sfnet",
    version,
    about = "Scale-free networks sharing one degree distribution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Ba,
    Mr,
    Kalisky,
    Ma,
    Mb,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Ba => Algorithm::Ba,
            AlgorithmArg::Mr => Algorithm::Mr,
            AlgorithmArg::Kalisky => Algorithm::Kalisky,
            AlgorithmArg::Ma => Algorithm::Ma,
            AlgorithmArg::Mb => Algorithm::Mb,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Descending,
    Shuffled,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one network and write it as an edge list.
    Generate {
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Target degrees (one per line); without it a BA network supplies them.
        #[arg(long)]
        degseq: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "descending")]
        mb_order: OrderArg,
        /// BA attachment weight: `indegree` (+1) or `degree` (+1).
        #[arg(long, default_value = "indegree")]
        ba_kernel: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure an edge-list graph; prints one CSV row.
    Metrics {
        #[arg(long)]
        graph: PathBuf,
        /// Write nearest-neighbour degree per degree class here.
        #[arg(long)]
        knn_out: Option<PathBuf>,
    },
    /// Run the replicated comparison and write all CSV artifacts.
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated, e.g. `1,2`.
        #[arg(long)]
        m_values: Option<String>,
        #[arg(long)]
        replicates: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated subset of ba,mr,kalisky,ma,mb.
        #[arg(long)]
        algorithms: Option<String>,
        /// `exact` or `resample`.
        #[arg(long)]
        mode: Option<String>,
        /// `descending` or `shuffled`.
        #[arg(long)]
        mb_order: Option<String>,
        /// `indegree` or `degree`.
        #[arg(long)]
        ba_kernel: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[allow(clippy::too_many_arguments)]
fn generate(
    algorithm: Algorithm,
    n: usize,
    m: usize,
    degseq: Option<PathBuf>,
    seed: u64,
    mb_order: ModelBOrder,
    attachment: Attachment,
    out: PathBuf,
) -> sfnet::Result<()> {
    let mut rng = RandomSource::new(seed);
    let params = |n, m| GeneratorParams::new(n, m).map(|p| p.with_attachment(attachment));
    let (graph, report) = match (algorithm, degseq) {
        (Algorithm::Ba, Some(_)) => {
            return Err(Error::InvalidArgument("BA does not take --degseq".into()));
        }
        (Algorithm::Ba, None) => generate_ba(&params(n, m)?, &mut rng)?,
        (alg, Some(path)) => {
            let targets = DegreeSequence::read(BufReader::new(File::open(path)?))?;
            alg.from_sequence(&targets, mb_order, &mut rng)?
        }
        (alg, None) => {
            let (_, ba) = generate_ba(&params(n, m)?, &mut rng)?;
            alg.from_sequence(&ba.realized, mb_order, &mut rng)?
        }
    };
    graph.write_edge_list(File::create(out)?)?;
    let mut stdout = io::stdout().lock();
    writeln!(stdout, "algorithm,seed,{}", GenerationReport::CSV_HEADER)?;
    writeln!(stdout, "{algorithm},{seed},{}", report.csv_row())?;
    Ok(())
}

fn metrics(graph: PathBuf, knn_out: Option<PathBuf>) -> sfnet::Result<()> {
    let g = Graph::read_edge_list(BufReader::new(File::open(graph)?))?;
    let rec = full_record(&g);
    if let Some(path) = knn_out {
        let mut text = String::from("k,knn_mean\n");
        for (k, v) in &rec.knn_by_degree {
            text.push_str(&format!("{k},{v}\n"));
        }
        fs::write(path, text)?;
    }
    let mut stdout = io::stdout().lock();
    writeln!(stdout, "{REPLICATE_HEADER}")?;
    writeln!(stdout, "NA,NA,NA,NA,{}", metric_fields(&rec))?;
    Ok(())
}

fn run(cli: Cli) -> sfnet::Result<()> {
    match cli.command {
        Command::Generate {
            algorithm,
            n,
            m,
            degseq,
            seed,
            mb_order,
            ba_kernel,
            out,
        } => {
            let order = match mb_order {
                OrderArg::Descending => ModelBOrder::DescendingDegree,
                OrderArg::Shuffled => ModelBOrder::Shuffled,
            };
            let attachment = ba_kernel.parse()?;
            generate(algorithm.into(), n, m, degseq, seed, order, attachment, out)
        }
        Command::Metrics { graph, knn_out } => metrics(graph, knn_out),
        Command::Experiment {
            config,
            n,
            m_values,
            replicates,
            seed,
            algorithms,
            mode,
            mb_order,
            ba_kernel,
            threads,
            out_dir,
        } => {
            let mut cfg = match config {
                Some(path) => ExperimentConfig::read(BufReader::new(File::open(path)?))?,
                None => ExperimentConfig::default(),
            };
            let overrides = [
                ("n", n.map(|v| v.to_string())),
                ("m_values", m_values),
                ("replicates", replicates.map(|v| v.to_string())),
                ("seed", seed.map(|v| v.to_string())),
                ("algorithms", algorithms),
                ("mode", mode),
                ("mb_order", mb_order),
                ("ba_kernel", ba_kernel),
                ("threads", threads.map(|v| v.to_string())),
            ];
            for (key, value) in overrides {
                if let Some(v) = value {
                    cfg.set(key, &v)?;
                }
            }
            if let Some(dir) = out_dir {
                cfg.output_dir = dir;
            }
            let (_, _) = run_experiment(&cfg)?;
            let text = fs::read_to_string(cfg.output_dir.join("table1.txt"))?;
            print!("{text}");
            if cfg.sequence_mode == SequenceMode::Resample {
                eprintln!("note: non-BA generators used resampled degree sequences");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are validation errors
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 internal invariant
//! violation, 3 training diverged.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::dataio::{self, CsvOptions, DataError, ProblemFileSet};
use crate::decision::{DecisionError, DecisionProblem, Stage, WeightPolicy};
use crate::mlp::{self, CriterionWeight, ImportanceReport, MlpError, NetworkDocument, TrainConfig, TrainReport};
use crate::report::{RankReportDocument, ReportError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "aploco", version, about = "Rank alternatives with logarithmic-concept scoring and MLP-derived weights")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the alternatives of a decision problem.
    Rank(RankArgs),
    /// Train the perceptron on a dataset and write criterion weights.
    Weights(WeightsArgs),
    /// Write the distance of each alternative from the optimal score.
    ReportDistances(DistanceArgs),
    /// Derive weights from a dataset, then rank with them.
    Pipeline(PipelineArgs),
    /// Descriptive statistics of a dataset's numeric variables.
    Describe(DescribeArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Output directory.
    #[arg(long, env = "APLOCO_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    /// Input CSVs use `;` separators and `,` decimals.
    #[arg(long)]
    pub decimal_comma: bool,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Matrix CSV: `criterion_id,<alternative ids...>`.
    #[arg(long)]
    pub matrix: PathBuf,
    /// Criteria CSV: `id,name,direction,weight`.
    #[arg(long)]
    pub criteria: PathBuf,
    /// Divide the weights by their sum instead of requiring a sum of 1.
    #[arg(long)]
    pub normalize_weights: bool,
    /// Also print the SPC, LC and WLC matrices.
    #[arg(long)]
    pub stages: bool,
    /// Decimals for printed stage matrices.
    #[arg(long, default_value_t = 2)]
    pub precision: usize,
    /// Decimals for printed scores.
    #[arg(long, default_value_t = 3)]
    pub score_precision: usize,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Weights CSV `criterion_id,weight` replacing the criteria file's weights.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Dataset CSV with a header row.
    #[arg(long)]
    pub data: PathBuf,
    /// Schema JSON declaring factors, covariates and the target.
    #[arg(long)]
    pub schema: PathBuf,
    /// Mapping CSV `predictor,criterion_id`.
    #[arg(long)]
    pub mapping: PathBuf,
    /// Seed for the train/test split and weight initialization.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Full-batch gradient descent steps.
    #[arg(long, default_value_t = 1000)]
    pub epochs: usize,
    /// Learning rate.
    #[arg(long, default_value_t = 0.1)]
    pub lr: f64,
    /// Hidden tanh units.
    #[arg(long, default_value_t = 5)]
    pub hidden: usize,
    /// Initial weights are drawn from U(-s, s).
    #[arg(long, default_value_t = 0.5)]
    pub init_scale: f64,
    /// Share of rows used for training.
    #[arg(long, default_value_t = 0.71)]
    pub train_fraction: f64,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub train: TrainArgs,
    /// Criteria CSV fixing the set and order of criterion ids (defaults to the mapping's order).
    #[arg(long)]
    pub criteria: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    /// A `rank_report.json` written by `rank` or `pipeline`.
    #[arg(long)]
    pub report: PathBuf,
    /// Also write `distances.svg`.
    #[arg(long)]
    pub svg: bool,
    #[arg(long, env = "APLOCO_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub train: TrainArgs,
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Skip training and rank with this weights CSV.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct DescribeArgs {
    /// Dataset CSV with a header row.
    #[arg(long)]
    pub data: PathBuf,
    /// Schema JSON declaring factors, covariates and the target.
    #[arg(long)]
    pub schema: PathBuf,
    /// Input CSVs use `;` separators and `,` decimals.
    #[arg(long)]
    pub decimal_comma: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<MlpError> for CliError {
    fn from(e: MlpError) -> Self {
        CliError::Data(DataError::Mlp(e))
    }
}

impl From<DecisionError> for CliError {
    fn from(e: DecisionError) -> Self {
        CliError::Data(DataError::Decision(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Data(DataError::Mlp(MlpError::NonFiniteLoss { .. })) => EXIT_DIVERGED,
            CliError::Internal(_) | CliError::Report(ReportError::Inconsistent(_)) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(stderr, "{}", e.render());
            return EXIT_INPUT;
        }
        Err(e) => {
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Rank(args) => cmd_rank(args, out),
        Command::Weights(args) => cmd_weights(args, out),
        Command::ReportDistances(args) => cmd_report_distances(args, out),
        Command::Pipeline(args) => cmd_pipeline(args, out),
        Command::Describe(args) => cmd_describe(args, out),
    }
}

fn csv_options(common: &CommonArgs) -> CsvOptions {
    CsvOptions { decimal_comma: common.decimal_comma }
}

fn policy(args: &ProblemArgs) -> WeightPolicy {
    if args.normalize_weights {
        WeightPolicy::Normalize
    } else {
        WeightPolicy::Strict
    }
}

/// RFC 3339 UTC time, or `SOURCE_DATE_EPOCH` when set.
pub fn timestamp() -> String {
    let now = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .and_then(|secs| chrono::DateTime::from_timestamp(secs, 0))
        .unwrap_or_else(chrono::Utc::now);
    now.to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Writes every file or none: contents go to temporary files in `dir` first
/// and are renamed into place only after all of them were written.
pub fn write_all_atomic(dir: &Path, files: &[(&str, String)]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
    let mut staged = Vec::with_capacity(files.len());
    for (name, contents) in files {
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        tmp.write_all(contents.as_bytes()).map_err(|e| CliError::Io(name.to_string(), e))?;
        staged.push((tmp, dir.join(name)));
    }
    for (tmp, path) in staged {
        tmp.persist(&path).map_err(|e| CliError::Io(path.display().to_string(), e.error))?;
    }
    Ok(())
}

struct RankOutput {
    document: RankReportDocument,
    text: String,
}

fn rank_problem(problem: &DecisionProblem, args: &ProblemArgs) -> Result<RankOutput, CliError> {
    let document = RankReportDocument::build(problem, timestamp())?;
    document.check().map_err(|e| CliError::Internal(e.to_string()))?;
    let mut text = String::new();
    if args.stages {
        for stage in [Stage::Spc, Stage::Lc, Stage::Wlc] {
            text.push_str(&document.stage_table(stage, args.precision));
            text.push('\n');
        }
    }
    text.push_str(&document.beta_table(args.score_precision));
    text.push('\n');
    text.push_str(&document.score_table(args.score_precision));
    Ok(RankOutput { document, text })
}

fn rank_files(output: &RankOutput) -> Vec<(&'static str, String)> {
    vec![("rank_report.json", output.document.to_json()), ("rank_table.txt", output.text.clone())]
}

fn print(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io("stdout".into(), e))
}

pub fn cmd_rank(args: &RankArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let files = ProblemFileSet {
        matrix: args.problem.matrix.clone(),
        criteria: args.problem.criteria.clone(),
        weights: args.weights.clone(),
    };
    let problem = dataio::load_problem(&files, csv_options(&args.common), policy(&args.problem))?;
    let output = rank_problem(&problem, &args.problem)?;
    write_all_atomic(&args.common.out_dir, &rank_files(&output))?;
    print(out, &output.text)
}

/// Training results as written to `weights_report.json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightsReport {
    pub train: TrainReport,
    pub importance: ImportanceReport,
    pub weights: Vec<CriterionWeight>,
}

struct WeightsOutput {
    report: WeightsReport,
    files: Vec<(&'static str, String)>,
}

fn derive_weights(args: &TrainArgs, criteria: Option<Vec<String>>, options: CsvOptions) -> Result<WeightsOutput, CliError> {
    let (records, schema) = dataio::load_raw_dataset(&args.data, &args.schema, options)?;
    let mapping = dataio::load_mapping(&args.mapping, options)?;
    let criteria = criteria.unwrap_or_else(|| {
        let mut ids: Vec<String> = Vec::new();
        for (_, c) in &mapping {
            if !ids.contains(c) {
                ids.push(c.clone());
            }
        }
        ids
    });

    let config = TrainConfig {
        hidden_units: args.hidden,
        epochs: args.epochs,
        learning_rate: args.lr,
        seed: args.seed,
        init_scale: args.init_scale,
    };
    let dataset = mlp::partition(mlp::encode(&records, &schema)?, args.train_fraction, args.seed)?;
    let (net, train) = mlp::train(&dataset, &config)?;
    let importance = mlp::importance(&net, &dataset)?;
    let weights = mlp::importances_to_weights(&importance, &mapping, &criteria)?;

    let weights_csv =
        dataio::write_weights(&weights.iter().map(|w| (w.criterion.clone(), w.weight)).collect::<Vec<_>>());
    let network = NetworkDocument::new(&net, dataset.schema_hash().map(String::from), dataset.rescale().cloned(), &config);
    let report = WeightsReport { train, importance, weights };
    let files = vec![
        ("weights.csv", weights_csv),
        ("weights_report.json", serde_json::to_string_pretty(&report).expect("report serializes")),
        ("network.json", network.to_json()),
    ];
    Ok(WeightsOutput { report, files })
}

fn weights_summary(report: &WeightsReport) -> String {
    use crate::rounding::round_half_up;
    let t = &report.train;
    let pct = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{}%", round_half_up(100.0 * v, 1)));
    let mut s = format!(
        "train/test split: {}/{}\nrelative error: train {}, test {}\nSSE: train {}, test {}\n\n",
        t.n_train,
        t.n_test,
        pct(t.train_relative_error),
        pct(t.test_relative_error),
        round_half_up(t.train_sse, 3),
        round_half_up(t.test_sse, 3),
    );
    s.push_str("predictor\timportance\tnormalized\trank\n");
    for p in &report.importance.predictors {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            p.name,
            round_half_up(p.importance, 3),
            round_half_up(p.normalized, 3),
            p.rank
        ));
    }
    s.push_str("\ncriterion_id\tweight\n");
    for w in &report.weights {
        s.push_str(&format!("{}\t{}\n", w.criterion, round_half_up(w.weight, 6)));
    }
    s
}

pub fn cmd_weights(args: &WeightsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let options = csv_options(&args.common);
    let criteria = args.criteria.as_deref().map(|p| dataio::load_criteria_ids(p, options)).transpose()?;
    let output = derive_weights(&args.train, criteria, options)?;
    write_all_atomic(&args.common.out_dir, &output.files)?;
    print(out, &weights_summary(&output.report))
}

pub fn cmd_report_distances(args: &DistanceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.report).map_err(|e| CliError::Io(args.report.display().to_string(), e))?;
    let doc = RankReportDocument::from_json(&text).map_err(|e| match e {
        // a hand-edited or foreign file is bad input, not a bug
        ReportError::Inconsistent(m) => ReportError::Malformed(m),
        other => other,
    })?;
    let tsv = doc.distances_tsv();
    let mut files = vec![("distances.tsv", tsv.clone())];
    if args.svg {
        files.push(("distances.svg", doc.distances_svg()));
    }
    write_all_atomic(&args.out_dir, &files)?;
    print(out, &tsv)
}

pub fn cmd_pipeline(args: &PipelineArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let options = csv_options(&args.common);
    let mut files = Vec::new();
    let mut text = String::new();

    let weights: Vec<(String, f64)> = match &args.weights {
        Some(path) => dataio::load_weights(path, options)?,
        None => {
            let criteria = dataio::load_criteria_ids(&args.problem.criteria, options)?;
            let derived = derive_weights(&args.train, Some(criteria), options)?;
            text.push_str(&weights_summary(&derived.report));
            text.push('\n');
            files.extend(derived.files);
            derived.report.weights.iter().map(|w| (w.criterion.clone(), w.weight)).collect()
        }
    };

    let inputs = ProblemFileSet { matrix: args.problem.matrix.clone(), criteria: args.problem.criteria.clone(), weights: None };
    let problem = dataio::load_problem_with_weights(&inputs, Some(&weights), options, policy(&args.problem))?;
    let ranked = rank_problem(&problem, &args.problem)?;
    files.extend(rank_files(&ranked));
    text.push_str(&ranked.text);

    write_all_atomic(&args.common.out_dir, &files)?;
    print(out, &text)
}

pub fn cmd_describe(args: &DescribeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let options = CsvOptions { decimal_comma: args.decimal_comma };
    let (records, schema) = dataio::load_raw_dataset(&args.data, &args.schema, options)?;
    let stats = dataio::describe(&records, &schema)?;
    print(out, &(serde_json::to_string_pretty(&stats).expect("stats serialize") + "\n"))
}

//! Command-line surface: single distances, matrices, rankings, and the
//! reproduction bundle.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::fuzzy::{AlphaGrid, FuzzySet};
use crate::ingest::{Dataset, FuzzifyMode, IngestError, ML100K_RECORDS};
use crate::metrics::{
    d_cr, d_cr_nonnormal, d_crf, d_crf_trace, d_rr, CrfTrace, CutResolution, DistanceReport,
    Measure, MeasureParams, MetricError, FILM_CUT_POINTS,
};
use crate::samples;

/// Environment variable naming the default MovieLens 100k directory.
pub const DATA_ENV: &str = "FUZZDIST_DATA";
pub const DEFAULT_DATA_DIR: &str = "data/ml-100k";
pub const FETCH_SCRIPT: &str = "scripts/fetch_movielens.sh";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Measure(#[from] MetricError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Measure(_) => 3,
        }
    }
}

impl From<IngestError> for CliError {
    fn from(e: IngestError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzdist",
    version,
    about = "Directional Hausdorff distances between fuzzy sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two operands.
    Distance(DistanceArgs),
    /// All ordered pairs of N operands as a matrix.
    Matrix(ListArgs),
    /// Operands sorted by signed distance from a reference (the first operand).
    Rank(ListArgs),
    /// Regenerate the reference tables as CSV files.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Normalization {
    Peak,
    Proportion,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct MeasureOpts {
    #[arg(long, default_value = "cr", value_parser = parse_measure)]
    pub measure: Measure,
    /// Signed (directional) interval kernel; the default.
    #[arg(long, overrides_with = "unsigned")]
    pub signed: bool,
    /// Conventional unsigned interval kernel.
    #[arg(long, overrides_with = "signed")]
    pub unsigned: bool,
    /// Number of equally spaced alpha levels over [0, 1].
    #[arg(long, default_value_t = 51)]
    pub alpha_cuts: usize,
    /// Explicit levels `start:stop:step`; overrides --alpha-cuts.
    #[arg(long)]
    pub levels: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// x-samples for the vertical-slice measure and the epsilon term.
    #[arg(long, default_value_t = 51)]
    pub x_points: usize,
    /// `exact`, or the number of x-grid points cut endpoints snap to.
    #[arg(long, default_value_t = CutResolution::Grid(FILM_CUT_POINTS), value_parser = parse_resolution)]
    pub cut_resolution: CutResolution,
    /// Defaults to peak for rr/cr/alphacut and proportion otherwise; files
    /// default to none.
    #[arg(long, value_enum)]
    pub normalization: Option<Normalization>,
    /// MovieLens 100k directory containing u.data and u.item.
    #[arg(long, env = DATA_ENV)]
    pub data: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse()
}

fn parse_resolution(s: &str) -> Result<CutResolution, String> {
    s.parse()
}

#[derive(Debug, Clone, Args)]
pub struct DistanceArgs {
    #[command(flatten)]
    pub opts: MeasureOpts,
    /// Two operands: set files, film titles/aliases, or appendix:SMB / appendix:SW.
    #[arg(required = true, num_args = 2)]
    pub operands: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ListArgs {
    #[command(flatten)]
    pub opts: MeasureOpts,
    #[arg(required = true, num_args = 2..)]
    pub operands: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    #[arg(long, env = DATA_ENV)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value = "reproduction")]
    pub out: PathBuf,
    #[arg(long, default_value_t = CutResolution::Grid(FILM_CUT_POINTS), value_parser = parse_resolution)]
    pub cut_resolution: CutResolution,
}

impl MeasureOpts {
    pub fn params(&self) -> Result<MeasureParams, CliError> {
        let grid = match &self.levels {
            Some(spec) => parse_levels(spec)?,
            None => AlphaGrid::uniform(self.alpha_cuts)
                .map_err(|e| CliError::Usage(format!("--alpha-cuts: {e}")))?,
        };
        let params = MeasureParams::new(grid)
            .signed(!self.unsigned)
            .with_epsilon(self.epsilon)
            .with_x_grid_count(self.x_points)
            .with_cut_resolution(self.cut_resolution);
        params
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(params)
    }

    fn data_dir(&self) -> PathBuf {
        self.data
            .clone()
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DATA_DIR))
    }
}

/// Parses `start:stop:step`.
pub fn parse_levels(spec: &str) -> Result<AlphaGrid, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || CliError::Usage(format!("--levels expects start:stop:step, got {spec:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums = parts
        .iter()
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    AlphaGrid::stepped(nums[0], nums[1], nums[2])
        .map_err(|e| CliError::Usage(format!("--levels: {e}")))
}

/// Lazily loaded dataset plus operand resolution.
struct Resolver {
    dir: PathBuf,
    dataset: Option<Dataset>,
}

impl Resolver {
    fn new(dir: PathBuf) -> Self {
        Self { dir, dataset: None }
    }

    fn dataset(&mut self) -> Result<&Dataset, CliError> {
        if self.dataset.is_none() {
            self.dataset = Some(load_dataset(&self.dir)?);
        }
        Ok(self.dataset.as_ref().expect("loaded"))
    }

    fn resolve(
        &mut self,
        operand: &str,
        measure: Measure,
        norm: Option<Normalization>,
    ) -> Result<FuzzySet, CliError> {
        let dataset_default = if measure.requires_normal() {
            Normalization::Peak
        } else {
            Normalization::Proportion
        };
        if let Some(set) = samples::builtin(operand) {
            return match norm.unwrap_or(dataset_default) {
                Normalization::Peak => Ok(set
                    .peak_normalize()
                    .map_err(|e| CliError::Data(e.to_string()))?),
                _ => Ok(set),
            };
        }
        let path = Path::new(operand);
        if path.is_file() {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Data(format!("{operand}: {e}")))?;
            let set = FuzzySet::parse_text(&text)
                .map_err(|e| CliError::Data(format!("{operand}: {e}")))?;
            let label = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| operand.to_string());
            let set = set.with_label(label);
            let scaled = match norm.unwrap_or(Normalization::None) {
                Normalization::None => Ok(set),
                Normalization::Peak => set.peak_normalize(),
                Normalization::Proportion => set.proportion_rescale(),
            };
            return scaled.map_err(|e| CliError::Data(format!("{operand}: {e}")));
        }
        let mode = match norm.unwrap_or(dataset_default) {
            Normalization::Peak => FuzzifyMode::Peak,
            Normalization::Proportion => FuzzifyMode::Proportion,
            Normalization::None => {
                return Err(CliError::Usage(format!(
                    "{operand}: film histograms need --normalization peak or proportion"
                )))
            }
        };
        Ok(self.dataset()?.film_set(operand, mode)?)
    }
}

fn load_dataset(dir: &Path) -> Result<Dataset, CliError> {
    if !dir.join("u.data").is_file() || !dir.join("u.item").is_file() {
        return Err(CliError::Data(format!(
            "MovieLens 100k not found in {} (expected u.data and u.item); run {FETCH_SCRIPT} \
             or point --data / {DATA_ENV} at the extracted ml-100k directory",
            dir.display()
        )));
    }
    Ok(Dataset::load(dir)?)
}

fn resolve_all(opts: &MeasureOpts, operands: &[String]) -> Result<Vec<FuzzySet>, CliError> {
    let mut resolver = Resolver::new(opts.data_dir());
    operands
        .iter()
        .map(|o| resolver.resolve(o, opts.measure, opts.normalization))
        .collect()
}

/// Rounds to three decimals and clears negative zero.
pub fn fmt3(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    format!("{:.3}", if r == 0.0 { 0.0 } else { r })
}

pub fn cmd_distance(args: &DistanceArgs) -> Result<DistanceReport, CliError> {
    let params = args.opts.params()?;
    let sets = resolve_all(&args.opts, &args.operands)?;
    Ok(DistanceReport::compute(
        args.opts.measure,
        &sets[0],
        &sets[1],
        &params,
    )?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceMatrix {
    pub measure: Measure,
    pub params: MeasureParams,
    pub labels: Vec<String>,
    /// `values[i][j] = d(operand i, operand j)`.
    pub values: Vec<Vec<f64>>,
}

pub fn cmd_matrix(args: &ListArgs) -> Result<DistanceMatrix, CliError> {
    let params = args.opts.params()?;
    let sets = resolve_all(&args.opts, &args.operands)?;
    let mut values = vec![vec![0.0; sets.len()]; sets.len()];
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j {
                values[i][j] = args.opts.measure.evaluate(a, b, &params)?;
            }
        }
    }
    Ok(DistanceMatrix {
        measure: args.opts.measure,
        params,
        labels: args.operands.clone(),
        values,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub label: String,
    pub distance: f64,
}

/// Ranks `operands[1..]` by distance from `operands[0]`, largest first; ties
/// by label.
pub fn cmd_rank(args: &ListArgs) -> Result<Vec<RankEntry>, CliError> {
    let params = args.opts.params()?;
    let sets = resolve_all(&args.opts, &args.operands)?;
    let reference = &sets[0];
    let mut entries = sets[1..]
        .iter()
        .zip(&args.operands[1..])
        .map(|(s, label)| {
            Ok(RankEntry {
                label: label.clone(),
                distance: args.opts.measure.evaluate(reference, s, &params)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    entries.sort_by(|a, b| {
        b.distance
            .total_cmp(&a.distance)
            .then_with(|| a.label.cmp(&b.label))
    });
    Ok(entries)
}

/// Film pairs in table column order.
pub const FILM_PAIRS: [(&str, &str); 6] = [
    ("SMB", "MA"),
    ("SMB", "SW"),
    ("MA", "SW"),
    ("MA", "SMB"),
    ("SW", "SMB"),
    ("SW", "MA"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub values: Vec<f64>,
}

/// Peak-normalised film table: rr and cr, each unsigned then signed.
pub fn film_table(ds: &Dataset, params: &MeasureParams) -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    type Normal = fn(&FuzzySet, &FuzzySet, &MeasureParams) -> Result<f64, MetricError>;
    let measures: [(&str, Normal); 2] = [("rr", d_rr), ("cr", d_cr)];
    for (name, f) in measures {
        for signed in [false, true] {
            let p = params.clone().signed(signed);
            let values = FILM_PAIRS
                .iter()
                .map(|(a, b)| {
                    let a = ds.film_set(a, FuzzifyMode::Peak)?;
                    let b = ds.film_set(b, FuzzifyMode::Peak)?;
                    Ok(f(&a, &b, &p)?)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let kind = if signed { "signed" } else { "unsigned" };
            rows.push(TableRow {
                name: format!("{name}-{kind}"),
                values,
            });
        }
    }
    Ok(rows)
}

/// Proportion-scaled film table: non-normal cr and crf, signed.
pub fn nonnormal_table(ds: &Dataset, params: &MeasureParams) -> Result<Vec<TableRow>, CliError> {
    let p = params.clone().signed(true);
    let mut rows = Vec::new();
    type NonNormal = fn(&FuzzySet, &FuzzySet, &MeasureParams) -> Result<f64, MetricError>;
    let measures: [(&str, NonNormal); 2] = [("cr-nonnormal", d_cr_nonnormal), ("crf", d_crf)];
    for (name, f) in measures {
        let values = FILM_PAIRS
            .iter()
            .map(|(a, b)| {
                let a = ds.film_set(a, FuzzifyMode::Proportion)?;
                let b = ds.film_set(b, FuzzifyMode::Proportion)?;
                Ok(f(&a, &b, &p)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        rows.push(TableRow {
            name: format!("{name}-signed"),
            values,
        });
    }
    Ok(rows)
}

/// The worked example: SMB vs SW frequencies over levels 0.1..0.5.
pub fn appendix_trace(resolution: CutResolution) -> Result<CrfTrace, CliError> {
    let params = MeasureParams::new(AlphaGrid::stepped(0.1, 0.5, 0.1).expect("grid"))
        .with_cut_resolution(resolution);
    Ok(d_crf_trace(
        &samples::appendix_smb(),
        &samples::appendix_sw(),
        &params,
    )?)
}

/// `(d_rr, d_cr)` for each step of the concavity family against its
/// reference set, with exact cuts.
pub fn concavity_table() -> Result<Vec<(f64, f64, f64)>, CliError> {
    let params = MeasureParams::default();
    let b = samples::concavity_reference();
    samples::CONCAVITY_DIPS
        .iter()
        .map(|&dip| {
            let a = samples::dipped_set(dip);
            Ok((dip, d_rr(&a, &b, &params)?, d_cr(&a, &b, &params)?))
        })
        .collect()
}

fn write_table(path: &Path, rows: &[TableRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path)?;
    let mut header = vec!["measure".to_string()];
    header.extend(FILM_PAIRS.iter().map(|(a, b)| format!("({a}, {b})")));
    w.write_record(&header)?;
    for row in rows {
        let mut rec = vec![row.name.clone()];
        rec.extend(row.values.iter().map(|v| fmt3(*v)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn cut_text(c: &crate::fuzzy::AlphaCutSet) -> String {
    if c.is_empty() {
        return "empty".into();
    }
    c.segments
        .iter()
        .map(|s| format!("[{}, {}]", fmt3(s.l), fmt3(s.r)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes the reproduction bundle into `args.out`, returning the files
/// written. The dataset-free parts are written before the dataset is loaded.
pub fn cmd_reproduce(args: &ReproduceArgs, log: &mut dyn Write) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(&args.out)?;
    let mut written = Vec::new();

    let trace = appendix_trace(args.cut_resolution)?;
    let path = args.out.join("appendix_trace.csv");
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record(["level", "smb_cut", "sw_cut", "kernel", "substituted"])?;
    for (k, (_, a, b)) in trace.kernels.iter().zip(&trace.cuts) {
        w.write_record([
            fmt3(k.level),
            cut_text(a),
            cut_text(b),
            fmt3(k.value),
            k.substituted.to_string(),
        ])?;
    }
    w.write_record(["crf", "", "", &fmt3(trace.value), ""])?;
    w.flush()?;
    writeln!(log, "appendix trace: d_crf(SMB, SW) = {}", fmt3(trace.value))?;
    written.push(path);

    let path = args.out.join("concavity.csv");
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record(["dip", "rr", "cr"])?;
    for (dip, rr, cr) in concavity_table()? {
        w.write_record([format!("{dip}"), fmt3(rr), fmt3(cr)])?;
    }
    w.flush()?;
    written.push(path);

    let dir = args
        .data
        .clone()
        .unwrap_or_else(|| PathBuf::from(DEFAULT_DATA_DIR));
    let ds = load_dataset(&dir)?;
    if ds.records.len() != ML100K_RECORDS {
        writeln!(
            log,
            "warning: {} ratings loaded, expected {ML100K_RECORDS}",
            ds.records.len()
        )?;
    }
    let params = MeasureParams::film_protocol().with_cut_resolution(args.cut_resolution);

    let path = args.out.join("film_results.csv");
    write_table(&path, &film_table(&ds, &params)?)?;
    written.push(path);

    let path = args.out.join("nonnormal_results.csv");
    write_table(&path, &nonnormal_table(&ds, &params)?)?;
    written.push(path);

    for p in &written {
        writeln!(log, "wrote {}", p.display())?;
    }
    Ok(written)
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Data(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Distance(args) => {
            let report = cmd_distance(args)?;
            match args.opts.format {
                OutputFormat::Json => write_json(out, &report)?,
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["measure", "signed", "first", "second", "value"])?;
                    w.write_record([
                        report.measure.name(),
                        &report.params.signed.to_string(),
                        &report.operands.0,
                        &report.operands.1,
                        &fmt3(report.value),
                    ])?;
                    w.flush()?;
                }
            }
        }
        Command::Matrix(args) => {
            let m = cmd_matrix(args)?;
            match args.opts.format {
                OutputFormat::Json => write_json(out, &m)?,
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    let mut header = vec![String::new()];
                    header.extend(m.labels.iter().cloned());
                    w.write_record(&header)?;
                    for (label, row) in m.labels.iter().zip(&m.values) {
                        let mut rec = vec![label.clone()];
                        rec.extend(row.iter().map(|v| fmt3(*v)));
                        w.write_record(&rec)?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Rank(args) => {
            let entries = cmd_rank(args)?;
            match args.opts.format {
                OutputFormat::Json => write_json(out, &entries)?,
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["rank", "label", "distance"])?;
                    for (i, e) in entries.iter().enumerate() {
                        w.write_record([(i + 1).to_string(), e.label.clone(), fmt3(e.distance)])?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Reproduce(args) => {
            cmd_reproduce(args, out)?;
        }
    }
    Ok(())
}

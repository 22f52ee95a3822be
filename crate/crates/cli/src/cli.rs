//! Argument parsing and subcommand handlers.
//!
//! Handlers return the standard-output payload and a standard-error summary
//! instead of printing, so they can be driven from tests.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use crlh_core::{
    Axis, CalibrationAnchor, CothConvention, CrossingTolerance, Grid, PhysicalConstants, Preset, ScanConfig,
    SeriesOverride, Spacing,
};
use serde_json::{json, Value};

use crate::config::{CliConfig, ParamsLayer, ResolvedConfig, StateLayer};
use crate::engine::run_sweep_parallel;
use crate::figure::run_figure;
use crate::output::{to_csv, to_gnuplot, to_json, Format};
use crate::{CliError, Result};

/// Thermal-quantum response of a CRLH transmission-line cell.
#[derive(Debug, Parser)]
#[command(name = "crlh", version)]
pub struct Cli {
    /// Subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ε, μ and handedness at one point.
    Eval(EvalArgs),
    /// Sweep frequency or temperature and write CSV, JSON or gnuplot.
    Sweep(SweepArgs),
    /// Find frequencies where ε changes sign.
    Bands(BandsArgs),
    /// Find temperatures where ε changes sign.
    Threshold(ThresholdArgs),
    /// Solve for the cell length that puts ε = 0 at an anchor.
    Calibrate(CalibrateArgs),
    /// Reproduce a built-in parameter study.
    Figure(FigureArgs),
}

/// Preset names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    /// ω sweep at four temperatures.
    Fig2,
    /// T sweep at four photon numbers.
    Fig3,
    /// T sweep at four current variances.
    Fig4,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Preset {
        match p {
            PresetArg::Fig2 => Preset::Fig2,
            PresetArg::Fig3 => Preset::Fig3,
            PresetArg::Fig4 => Preset::Fig4,
        }
    }
}

/// `coth` argument conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// ħω/k_BT.
    Direct,
    /// ħω/2k_BT.
    Tfd,
}

impl From<ConventionArg> for CothConvention {
    fn from(c: ConventionArg) -> CothConvention {
        match c {
            ConventionArg::Direct => CothConvention::Direct,
            ConventionArg::Tfd => CothConvention::Tfd,
        }
    }
}

/// Sweep axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    /// Angular frequency.
    Omega,
    /// Temperature.
    Temperature,
}

/// Grid spacings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    /// Equal steps.
    Linear,
    /// Equal ratios.
    Log,
}

/// Cell, state and model flags shared by every analysis command.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// JSON configuration file; flags override its values.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Built-in preset supplying elements, state and a calibrated z0.
    #[arg(long)]
    pub preset: Option<PresetArg>,
    /// Series capacitor C_l, F.
    #[arg(long, allow_hyphen_values = true)]
    pub c_l: Option<f64>,
    /// Shunt inductance L_l, H.
    #[arg(long, allow_hyphen_values = true)]
    pub l_l: Option<f64>,
    /// Shunt capacitor C_r, F.
    #[arg(long, allow_hyphen_values = true)]
    pub c_r: Option<f64>,
    /// Series inductance L_r, H.
    #[arg(long, allow_hyphen_values = true)]
    pub l_r: Option<f64>,
    /// Cell length z0, m (skips preset calibration).
    #[arg(long, allow_hyphen_values = true)]
    pub z0: Option<f64>,
    /// Photon number.
    #[arg(long)]
    pub n: Option<u32>,
    /// Current variance ⟨(Δi)²⟩, A².
    #[arg(long, allow_hyphen_values = true)]
    pub fluct: Option<f64>,
    /// Temperature, K.
    #[arg(long, allow_hyphen_values = true)]
    pub temp: Option<f64>,
    /// Angular frequency in units of 1e9 rad/s.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "omega_rad_s")]
    pub omega_ghz: Option<f64>,
    /// Angular frequency, rad/s.
    #[arg(long, allow_hyphen_values = true)]
    pub omega_rad_s: Option<f64>,
    /// Argument convention of the coth factor.
    #[arg(long)]
    pub convention: Option<ConventionArg>,
    /// Reduced Planck constant, J·s.
    #[arg(long, allow_hyphen_values = true)]
    pub hbar: Option<f64>,
    /// Boltzmann constant, J/K.
    #[arg(long, allow_hyphen_values = true)]
    pub k_b: Option<f64>,
}

impl ModelArgs {
    fn layer(&self) -> CliConfig {
        CliConfig {
            preset: self.preset.map(Into::into),
            params: ParamsLayer { c_l: self.c_l, l_l: self.l_l, c_r: self.c_r, l_r: self.l_r, z0: self.z0 },
            state: StateLayer { n: self.n, temperature: self.temp, current_fluctuation: self.fluct },
            omega: ghz_or_rad(self.omega_ghz, self.omega_rad_s),
            convention: self.convention.map(Into::into),
            ..CliConfig::default()
        }
    }

    /// File layer with these flags on top.
    pub fn merged(&self) -> Result<CliConfig> {
        let file = match &self.config {
            Some(path) => CliConfig::load(path)?,
            None => CliConfig::default(),
        };
        let base = file.constants.unwrap_or_default();
        let mut merged = file.overlay(self.layer());
        if self.hbar.is_some() || self.k_b.is_some() {
            merged.constants =
                Some(PhysicalConstants { hbar: self.hbar.unwrap_or(base.hbar), k_b: self.k_b.unwrap_or(base.k_b) });
        }
        Ok(merged)
    }
}

/// Crossing-scan flags.
#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Scan grid points before bisection.
    #[arg(long, default_value_t = crlh_core::crossing::DEFAULT_GRID_POINTS)]
    pub points: usize,
    /// Absolute bisection tolerance in the search variable (default: 1e-10 of the grid cell).
    #[arg(long)]
    pub tol: Option<f64>,
}

impl ScanArgs {
    fn config(&self) -> Result<ScanConfig> {
        if self.points < 2 {
            return Err(CliError::Usage("--points must be at least 2".into()));
        }
        let tolerance = match self.tol {
            Some(t) if t.is_finite() && t > 0.0 => CrossingTolerance::Absolute(t),
            Some(t) => return Err(CliError::Usage(format!("--tol must be positive, got {t}"))),
            None => ScanConfig::default().tolerance,
        };
        Ok(ScanConfig { points: self.points, tolerance, ..ScanConfig::default() })
    }
}

/// `eval` flags.
#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    model: ModelArgs,
}

/// `sweep` flags.
#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Abscissa variable.
    #[arg(long)]
    axis: Option<AxisArg>,
    /// First grid point (rad/s or K).
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<f64>,
    /// Last grid point (rad/s or K).
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<f64>,
    /// Points per series.
    #[arg(long)]
    count: Option<usize>,
    /// Grid spacing.
    #[arg(long)]
    spacing: Option<SpacingArg>,
    /// One curve per temperature, K (omega axis only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    series_temp: Vec<f64>,
    /// One curve per photon number.
    #[arg(long, value_delimiter = ',')]
    series_n: Vec<u32>,
    /// One curve per current variance, A².
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    series_fluct: Vec<f64>,
    /// Output file; standard output when absent.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Output format (default: from the file extension, else CSV).
    #[arg(long)]
    format: Option<Format>,
}

/// `bands` flags.
#[derive(Debug, Args)]
pub struct BandsArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Lower search bound in units of 1e9 rad/s.
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    from_ghz: f64,
    /// Upper search bound in units of 1e9 rad/s.
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    to_ghz: f64,
    #[command(flatten)]
    scan: ScanArgs,
}

/// `threshold` flags.
#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Lower search bound, K.
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    t_lo: f64,
    /// Upper search bound, K.
    #[arg(long, default_value_t = 300.0, allow_hyphen_values = true)]
    t_hi: f64,
    #[command(flatten)]
    scan: ScanArgs,
}

/// `calibrate` flags.
#[derive(Debug, Args)]
pub struct CalibrateArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Anchor temperature, K (default: preset anchor, else --temp).
    #[arg(long, allow_hyphen_values = true)]
    anchor_temp: Option<f64>,
    /// Anchor frequency in units of 1e9 rad/s.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "anchor_omega_rad_s")]
    anchor_omega_ghz: Option<f64>,
    /// Anchor frequency, rad/s (default: preset anchor, else the evaluation frequency).
    #[arg(long, allow_hyphen_values = true)]
    anchor_omega_rad_s: Option<f64>,
}

/// `figure` flags.
#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Study to reproduce.
    pub name: PresetArg,
    /// Output file.
    #[arg(short, long, value_name = "PATH")]
    pub output: PathBuf,
    /// Output format (default: from the file extension, else CSV).
    #[arg(long)]
    pub format: Option<Format>,
    /// Argument convention of the coth factor.
    #[arg(long)]
    pub convention: Option<ConventionArg>,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    /// Machine-readable payload for standard output.
    pub stdout: Vec<u8>,
    /// Summary for standard error.
    pub stderr: String,
}

fn json_bytes(v: &Value) -> Vec<u8> {
    let mut b = serde_json::to_vec_pretty(v).expect("serializing a Value cannot fail");
    b.push(b'\n');
    b
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.into(), source })
}

fn ghz_or_rad(ghz: Option<f64>, rad: Option<f64>) -> Option<f64> {
    rad.or(ghz.map(|g| g * 1e9))
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Eval(a) => eval(&a.model.merged()?.resolve()?),
        Command::Sweep(a) => sweep(a),
        Command::Bands(a) => bands(a),
        Command::Threshold(a) => threshold(a),
        Command::Calibrate(a) => calibrate(a),
        Command::Figure(a) => figure(a),
    }
}

fn eval(cfg: &ResolvedConfig) -> Result<Outcome> {
    let r = cfg.model.evaluate(&cfg.params, &cfg.state, cfg.omega)?;
    let v = json!({
        "epsilon_eff": r.epsilon_eff,
        "mu_eff": r.mu_eff,
        "handedness": r.handedness,
        "config": cfg.echo(),
    });
    Ok(Outcome { stdout: json_bytes(&v), stderr: String::new() })
}

fn sweep(a: SweepArgs) -> Result<Outcome> {
    let mut layer = a.model.merged()?;
    if let Some(axis) = a.axis {
        layer.axis = Some(match axis {
            AxisArg::Omega => Axis::Omega,
            AxisArg::Temperature => Axis::Temperature,
        });
    }
    if a.lo.is_some() || a.hi.is_some() || a.count.is_some() || a.spacing.is_some() {
        let axis = layer.axis.or(layer.preset.map(Preset::axis)).unwrap_or(Axis::Omega);
        let base = layer.grid.unwrap_or_else(|| axis.default_grid());
        layer.grid = Some(Grid {
            lo: a.lo.unwrap_or(base.lo),
            hi: a.hi.unwrap_or(base.hi),
            count: a.count.unwrap_or(base.count),
            spacing: match a.spacing {
                Some(SpacingArg::Linear) => Spacing::Linear,
                Some(SpacingArg::Log) => Spacing::Log,
                None => base.spacing,
            },
        });
    }
    let series: Vec<SeriesOverride> = a
        .series_temp
        .iter()
        .map(|&t| SeriesOverride::Temperature(t))
        .chain(a.series_n.iter().map(|&n| SeriesOverride::PhotonNumber(n)))
        .chain(a.series_fluct.iter().map(|&f| SeriesOverride::Fluctuation(f)))
        .collect();
    if !series.is_empty() {
        layer.series = Some(series);
    }
    if a.output.is_some() {
        layer.output.path = a.output;
    }
    if a.format.is_some() {
        layer.output.format = a.format;
    }

    let cfg = layer.resolve()?;
    let result = run_sweep_parallel(&cfg.sweep_spec())?;
    let path = cfg.output.path.clone();
    let format = cfg.output.format.or(path.as_deref().map(Format::from_path)).unwrap_or(Format::Csv);
    let stderr = format!("{} records in {} series\n", result.records.len(), cfg.series.len());
    let payload = match format {
        Format::Csv => to_csv(&result),
        Format::Json => to_json(&result, Some(&cfg.echo())),
        Format::Gnuplot => {
            let path = path.as_deref().ok_or_else(|| CliError::Usage("gnuplot output needs -o PATH".into()))?;
            return write_gnuplot(path, &result).map(|()| Outcome { stdout: vec![], stderr });
        }
    };
    match path {
        Some(p) => {
            write_file(&p, &payload)?;
            Ok(Outcome { stdout: vec![], stderr })
        }
        None => Ok(Outcome { stdout: payload, stderr }),
    }
}

fn write_gnuplot(path: &Path, result: &crlh_core::SweepResult) -> Result<()> {
    let csv_path = path.with_extension("csv");
    if csv_path == path {
        return Err(CliError::Usage(format!("{}: gnuplot script would overwrite its CSV data", path.display())));
    }
    let csv_name = csv_path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    write_file(&csv_path, &to_csv(result))?;
    write_file(path, to_gnuplot(result, &csv_name).as_bytes())
}

fn crossings_outcome(
    cfg: &ResolvedConfig,
    variable: &str,
    lo: f64,
    hi: f64,
    found: Vec<crlh_core::CrossingResult>,
) -> Outcome {
    let summary = format!("{} crossing(s) of epsilon_eff in {variable} over [{lo:e}, {hi:e}]\n", found.len());
    let v = json!({
        "variable": variable,
        "lo": lo,
        "hi": hi,
        "crossings": found,
        "config": cfg.echo(),
    });
    Outcome { stdout: json_bytes(&v), stderr: summary }
}

fn bands(a: BandsArgs) -> Result<Outcome> {
    let cfg = a.model.merged()?.resolve()?;
    let scan = a.scan.config()?;
    let (lo, hi) = (a.from_ghz * 1e9, a.to_ghz * 1e9);
    let found = cfg.model.find_epsilon_zero_in_omega(&cfg.params, &cfg.state, lo, hi, &scan)?;
    Ok(crossings_outcome(&cfg, "omega", lo, hi, found))
}

fn threshold(a: ThresholdArgs) -> Result<Outcome> {
    let cfg = a.model.merged()?.resolve()?;
    let scan = a.scan.config()?;
    let found =
        cfg.model.find_epsilon_zero_in_temperature(&cfg.params, &cfg.state, cfg.omega, a.t_lo, a.t_hi, &scan)?;
    Ok(crossings_outcome(&cfg, "temperature", a.t_lo, a.t_hi, found))
}

fn calibrate(a: CalibrateArgs) -> Result<Outcome> {
    let cfg = a.model.merged()?.resolve()?;
    let default_anchor = match cfg.preset {
        Some(p) => p.anchor(),
        None => CalibrationAnchor { omega: cfg.omega, temperature: cfg.state.temperature },
    };
    let anchor = CalibrationAnchor {
        omega: ghz_or_rad(a.anchor_omega_ghz, a.anchor_omega_rad_s).unwrap_or(default_anchor.omega),
        temperature: a.anchor_temp.unwrap_or(default_anchor.temperature),
    };
    let z0 = cfg.model.calibrate_z0(&cfg.params, &cfg.state, anchor)?;
    let at_anchor = crlh_core::ThermalFockState { temperature: anchor.temperature, ..cfg.state };
    let residual = cfg.model.epsilon_eff(&cfg.params.with_z0(z0), &at_anchor, anchor.omega)?;
    let v = json!({
        "z0": z0,
        "anchor": anchor,
        "epsilon_at_anchor": residual,
        "config": cfg.echo(),
    });
    Ok(Outcome { stdout: json_bytes(&v), stderr: format!("z0 = {z0:.6e} m\n") })
}

fn figure(a: FigureArgs) -> Result<Outcome> {
    let model = crlh_core::ResponseModel::with_convention(a.convention.map(Into::into).unwrap_or_default());
    let run = run_figure(a.name.into(), &model)?;
    let format = a.format.unwrap_or_else(|| Format::from_path(&a.output));
    match format {
        Format::Csv => write_file(&a.output, &to_csv(&run.sweep))?,
        Format::Json => {
            let (lo, hi) = run.search_range();
            let echo = json!({
                "preset": run.definition.preset,
                "params": run.definition.params,
                "anchor": run.definition.anchor,
                "crossing_search": { "lo": lo, "hi": hi },
                "crossings": run.crossings,
            });
            write_file(&a.output, &to_json(&run.sweep, Some(&echo)))?
        }
        Format::Gnuplot => write_gnuplot(&a.output, &run.sweep)?,
    }
    Ok(Outcome { stdout: vec![], stderr: run.summary() })
}

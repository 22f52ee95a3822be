//! Layered run configuration: command-line flags over a JSON file over
//! preset or built-in defaults.
//!
//! Every field is optional at every layer. [`CliConfig::overlay`] merges two
//! layers field by field and [`CliConfig::resolve`] turns the merged layer
//! into concrete inputs. The JSON schema lives in
//! `docs/config.schema.json`.

use std::path::{Path, PathBuf};

use crlh_core::cell::DEFAULT_Z0;
use crlh_core::{
    Axis, CothConvention, Grid, PhysicalConstants, Preset, ResponseModel, SeriesOverride, SweepSpec, ThermalFockState,
    UnitCellParams,
};
use serde::{Deserialize, Serialize};

use crate::output::Format;
use crate::{CliError, Result};

/// Element values; any subset may be given.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsLayer {
    /// Series capacitor, F.
    pub c_l: Option<f64>,
    /// Shunt inductance, H.
    pub l_l: Option<f64>,
    /// Shunt capacitor, F.
    pub c_r: Option<f64>,
    /// Series inductance, H.
    pub l_r: Option<f64>,
    /// Cell length, m. Omitted means "calibrate" with a preset, 1 μm without.
    pub z0: Option<f64>,
}

/// Thermal state; any subset may be given.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateLayer {
    /// Photon number.
    pub n: Option<u32>,
    /// Temperature, K.
    pub temperature: Option<f64>,
    /// Current variance, A².
    pub current_fluctuation: Option<f64>,
}

/// Output destination.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputLayer {
    /// File to write; standard output when absent.
    pub path: Option<PathBuf>,
    /// Format; guessed from the extension when absent.
    pub format: Option<Format>,
}

/// One configuration layer.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    /// Built-in preset supplying defaults.
    pub preset: Option<Preset>,
    /// Element values.
    #[serde(default)]
    pub params: ParamsLayer,
    /// Thermal state.
    #[serde(default)]
    pub state: StateLayer,
    /// Angular frequency, rad/s.
    pub omega: Option<f64>,
    /// Sweep axis.
    pub axis: Option<Axis>,
    /// Sweep grid.
    pub grid: Option<Grid>,
    /// Sweep curves.
    pub series: Option<Vec<SeriesOverride>>,
    /// `coth` convention.
    pub convention: Option<CothConvention>,
    /// Physical constants.
    pub constants: Option<PhysicalConstants>,
    /// Output destination.
    #[serde(default)]
    pub output: OutputLayer,
}

fn pick<T>(top: Option<T>, bottom: Option<T>) -> Option<T> {
    top.or(bottom)
}

impl CliConfig {
    /// Reads a JSON layer from `path`.
    pub fn load(path: &Path) -> Result<CliConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        serde_json::from_str(&text).map_err(|source| CliError::Config { path: path.into(), source })
    }

    /// Merges `top` over `self`; fields set in `top` win.
    pub fn overlay(self, top: CliConfig) -> CliConfig {
        CliConfig {
            preset: pick(top.preset, self.preset),
            params: ParamsLayer {
                c_l: pick(top.params.c_l, self.params.c_l),
                l_l: pick(top.params.l_l, self.params.l_l),
                c_r: pick(top.params.c_r, self.params.c_r),
                l_r: pick(top.params.l_r, self.params.l_r),
                z0: pick(top.params.z0, self.params.z0),
            },
            state: StateLayer {
                n: pick(top.state.n, self.state.n),
                temperature: pick(top.state.temperature, self.state.temperature),
                current_fluctuation: pick(top.state.current_fluctuation, self.state.current_fluctuation),
            },
            omega: pick(top.omega, self.omega),
            axis: pick(top.axis, self.axis),
            grid: pick(top.grid, self.grid),
            series: pick(top.series, self.series),
            convention: pick(top.convention, self.convention),
            constants: pick(top.constants, self.constants),
            output: OutputLayer {
                path: pick(top.output.path, self.output.path),
                format: pick(top.output.format, self.output.format),
            },
        }
    }

    /// Element values with presets and explicit fields applied, and a
    /// placeholder `z₀` when none was given. Errors name the missing or
    /// invalid field.
    pub fn elements(&self) -> Result<UnitCellParams> {
        let base = self.preset.map(Preset::elements);
        let get = |name: &str, own: Option<f64>, from_preset: Option<f64>| {
            own.or(from_preset).ok_or_else(|| {
                CliError::Usage(format!("missing element `{name}` (give --preset or all four elements)"))
            })
        };
        let p = UnitCellParams {
            c_l: get("c_l", self.params.c_l, base.map(|b| b.c_l))?,
            l_l: get("l_l", self.params.l_l, base.map(|b| b.l_l))?,
            c_r: get("c_r", self.params.c_r, base.map(|b| b.c_r))?,
            l_r: get("l_r", self.params.l_r, base.map(|b| b.l_r))?,
            z0: self.params.z0.unwrap_or(DEFAULT_Z0),
        };
        p.validate()?;
        Ok(p)
    }

    /// Constants and convention.
    pub fn model(&self) -> Result<ResponseModel> {
        let model = ResponseModel {
            constants: self.constants.unwrap_or_default(),
            convention: self.convention.unwrap_or_default(),
            ..ResponseModel::default()
        };
        for (name, value) in [("hbar", model.constants.hbar), ("k_b", model.constants.k_b)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(crlh_core::Error::InvalidParameter { name, value }.into());
            }
        }
        Ok(model)
    }

    /// Fully resolves this layer into a runnable configuration.
    pub fn resolve(&self) -> Result<ResolvedConfig> {
        let model = self.model()?;
        let mut params = self.elements()?;
        let z0_calibrated = self.params.z0.is_none() && self.preset.is_some();
        if let (None, Some(preset)) = (self.params.z0, self.preset) {
            params.z0 = preset.calibrate(&params, &model)?;
        }

        let preset_state = self.preset.map(Preset::default_state);
        let state = ThermalFockState {
            n: self.state.n.or(preset_state.map(|s| s.n)).unwrap_or(1),
            temperature: self.state.temperature.or(preset_state.map(|s| s.temperature)).unwrap_or(300.0),
            current_fluctuation: self
                .state
                .current_fluctuation
                .or(preset_state.map(|s| s.current_fluctuation))
                .unwrap_or(1.0),
        };
        state.validate()?;

        let omega = self.omega.or(self.preset.map(|p| p.anchor().omega)).unwrap_or(crlh_core::preset::STUDY_OMEGA);
        crlh_core::cell::classical_epsilon(&params, omega)?;

        let preset_axis = self.preset.map(Preset::axis);
        let axis = self.axis.or(preset_axis).unwrap_or(Axis::Omega);
        let same_axis_as_preset = preset_axis == Some(axis);
        let grid = self.grid.unwrap_or_else(|| axis.default_grid());
        let series = match (&self.series, self.preset) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) if same_axis_as_preset => p.series(),
            (None, _) => vec![SeriesOverride::PhotonNumber(state.n)],
        };

        Ok(ResolvedConfig {
            preset: self.preset,
            params,
            z0_calibrated,
            state,
            omega,
            axis,
            grid,
            series,
            model,
            output: self.output.clone(),
        })
    }
}

/// Concrete inputs after merging every layer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedConfig {
    /// Preset the defaults came from.
    pub preset: Option<Preset>,
    /// Elements and cell length.
    pub params: UnitCellParams,
    /// Whether `z₀` was calibrated at the preset anchor.
    pub z0_calibrated: bool,
    /// Base state.
    pub state: ThermalFockState,
    /// Angular frequency, rad/s.
    pub omega: f64,
    /// Sweep axis.
    pub axis: Axis,
    /// Sweep grid.
    pub grid: Grid,
    /// Sweep curves.
    pub series: Vec<SeriesOverride>,
    /// Constants, convention, tolerances.
    pub model: ResponseModel,
    /// Output destination.
    pub output: OutputLayer,
}

impl ResolvedConfig {
    /// Sweep described by this configuration.
    pub fn sweep_spec(&self) -> SweepSpec {
        SweepSpec {
            params: self.params,
            state: self.state,
            omega: self.omega,
            axis: self.axis,
            grid: self.grid,
            series: self.series.clone(),
            model: self.model,
        }
    }

    /// JSON echo recorded in output metadata.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("resolved config is always representable")
    }
}

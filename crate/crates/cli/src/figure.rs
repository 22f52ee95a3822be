//! Preset reproduction: calibrated sweep, crossings and a text summary.

use std::fmt::Write as _;

use crlh_core::{
    builtin_preset, preset_crossings, Axis, CrossingResult, Preset, PresetDefinition, ResponseModel, ScanConfig,
    SweepResult,
};

use crate::engine::run_sweep_parallel;

/// Frequency range searched for fig2 crossings, rad/s.
pub const OMEGA_SEARCH: (f64, f64) = (1e7, 1e11);
/// Temperature range searched for fig3/fig4 crossings, K.
pub const TEMPERATURE_SEARCH: (f64, f64) = (1.0, 5000.0);

/// Everything a preset run produces.
#[derive(Debug, Clone)]
pub struct FigureRun {
    /// Resolved preset with calibrated `z₀`.
    pub definition: PresetDefinition,
    /// Sweep over the default grid.
    pub sweep: SweepResult,
    /// `ε` zero crossings, one list per series.
    pub crossings: Vec<Vec<CrossingResult>>,
}

impl FigureRun {
    /// Number of records with `μ < 0`.
    pub fn negative_mu_count(&self) -> usize {
        self.sweep.records.iter().filter(|r| r.mu_eff < 0.0).count()
    }

    /// Search range used for the crossings.
    pub fn search_range(&self) -> (f64, f64) {
        search_range(self.definition.axis)
    }

    /// Human-readable summary for standard error.
    pub fn summary(&self) -> String {
        let def = &self.definition;
        let (unit, var) = match def.axis {
            Axis::Omega => ("rad/s", "omega*"),
            Axis::Temperature => ("K", "T*"),
        };
        let (lo, hi) = self.search_range();
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}: z0 = {:.6e} m (calibrated at omega = {:e} rad/s, T = {} K)",
            def.preset.as_str(),
            def.params.z0,
            def.anchor.omega,
            def.anchor.temperature
        );
        for (series, found) in def.series.iter().zip(&self.crossings) {
            let list: Vec<String> = found.iter().map(|c| format!("{:.6e}", c.location)).collect();
            let shown = if list.is_empty() { "none".to_string() } else { list.join(", ") };
            let _ = writeln!(s, "  {}: {var} = {shown} {unit} (searched [{lo:e}, {hi:e}])", series.label());
        }
        let total = self.sweep.records.len();
        let neg = self.negative_mu_count();
        let verdict = if neg == total { "mu < 0 at every record" } else { "mu >= 0 at some records" };
        let _ = writeln!(s, "  {verdict} ({neg}/{total})");
        s
    }
}

/// Crossing search range for an axis.
pub fn search_range(axis: Axis) -> (f64, f64) {
    match axis {
        Axis::Omega => OMEGA_SEARCH,
        Axis::Temperature => TEMPERATURE_SEARCH,
    }
}

/// Runs `preset` with `model`.
pub fn run_figure(preset: Preset, model: &ResponseModel) -> crlh_core::Result<FigureRun> {
    let definition = builtin_preset(preset, model)?;
    let sweep = run_sweep_parallel(&definition.sweep_spec(*model))?;
    let (lo, hi) = search_range(definition.axis);
    let crossings = preset_crossings(&definition, model, lo, hi, &ScanConfig::default())?;
    Ok(FigureRun { definition, sweep, crossings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig4_summary_reports_negative_mu() {
        let run = run_figure(Preset::Fig4, &ResponseModel::default()).unwrap();
        assert_eq!(run.negative_mu_count(), 4 * 256);
        let s = run.summary();
        assert!(s.contains("mu < 0 at every record (1024/1024)"), "{s}");
        assert!(s.contains("fluct=4.5"));
    }

    #[test]
    fn fig3_crossing_near_anchor() {
        let run = run_figure(Preset::Fig3, &ResponseModel::default()).unwrap();
        assert_eq!(run.crossings[0].len(), 1);
        assert!((run.crossings[0][0].location - 170.0).abs() < 1e-6);
    }
}

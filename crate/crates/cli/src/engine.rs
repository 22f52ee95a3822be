//! Parallel sweep runner.
//!
//! Every `(series, point)` pair is evaluated independently with
//! [`SweepSpec::evaluate_point`], the same routine the serial
//! [`crlh_core::run_sweep`] uses, and collected in index order. The output
//! is therefore identical to the serial result.

use crlh_core::sweep::SweepMetadata;
use crlh_core::{SweepResult, SweepSpec};
use rayon::prelude::*;

/// Runs `spec` on the rayon thread pool.
pub fn run_sweep_parallel(spec: &SweepSpec) -> crlh_core::Result<SweepResult> {
    spec.validate()?;
    let points = spec.grid.points()?;
    let labels = spec.labels();
    let per_series = points.len();
    let records = (0..labels.len() * per_series)
        .into_par_iter()
        .map(|k| {
            let series = k / per_series;
            spec.evaluate_point(series, &labels[series], points[k % per_series])
        })
        .collect::<crlh_core::Result<Vec<_>>>()?;
    Ok(SweepResult { spec: spec.clone(), records, metadata: SweepMetadata::for_model(&spec.model) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crlh_core::{builtin_preset, run_sweep, Preset, ResponseModel};

    #[test]
    fn parallel_matches_serial_bitwise() {
        let model = ResponseModel::default();
        for p in Preset::ALL {
            let spec = builtin_preset(p, &model).unwrap().sweep_spec(model);
            let a = run_sweep(&spec).unwrap();
            let b = run_sweep_parallel(&spec).unwrap();
            assert_eq!(a.records.len(), b.records.len());
            for (x, y) in a.records.iter().zip(&b.records) {
                assert_eq!(x.series, y.series);
                assert_eq!(x.abscissa.to_bits(), y.abscissa.to_bits());
                assert_eq!(x.epsilon_eff.to_bits(), y.epsilon_eff.to_bits());
                assert_eq!(x.mu_eff.to_bits(), y.mu_eff.to_bits());
                assert_eq!(x.handedness, y.handedness);
            }
        }
    }

    #[test]
    fn invalid_spec_is_rejected() {
        let model = ResponseModel::default();
        let mut spec = builtin_preset(Preset::Fig3, &model).unwrap().sweep_spec(model);
        spec.series.clear();
        assert!(run_sweep_parallel(&spec).is_err());
    }
}

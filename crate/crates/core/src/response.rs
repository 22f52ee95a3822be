//! Effective permittivity and permeability of the cell in a thermal Fock
//! state, handedness classification, and the zero-crossing searches built on
//! them.
//!
//! With `B = ħ (1+2n) coth(x) / (C z₀³ ⟨(Δi)²⟩)` the thermal response is
//!
//! ```text
//! ε = C_r − 2^(−2/5) [B / L_l^(5/2)]^(2/5)
//! μ = L_r − 2^(−2/5) [B / C_l^(5/2)]^(2/5)
//! ```
//!
//! Substituting the thermal-state current variance for `⟨(Δi)²⟩` collapses
//! both back to the classical `C_r − 1/(ω² L_l)` and `L_r − 1/(ω² C_l)`.

use alloc::vec::Vec;

use crate::cell::{derive_cell_quantities, UnitCellParams};
use crate::constants::PhysicalConstants;
use crate::crossing::{check_interval, find_crossings, CrossingResult, ScanConfig};
use crate::error::{positive, Error, Result};
use crate::thermal::{thermal_factor, CothConvention, ThermalFockState};

/// Default classification dead zone, relative to `C_r` (for `ε`) and `L_r`
/// (for `μ`).
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-12;
/// Maximum allowed `|ε|` after calibration, relative to `C_r`.
const CALIBRATION_CHECK_TOL: f64 = 1e-9;

/// Sign class of the `(ε, μ)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Handedness {
    /// `ε < 0` and `μ < 0`.
    LeftHanded,
    /// `ε > 0` and `μ > 0`.
    RightHanded,
    /// `ε < 0`, `μ > 0`.
    EpsilonNegativeOnly,
    /// `ε > 0`, `μ < 0`.
    MuNegativeOnly,
    /// Either value within its dead zone around zero.
    OnBoundary,
}

impl Handedness {
    /// All variants, in declaration order.
    pub const ALL: [Handedness; 5] = [
        Handedness::LeftHanded,
        Handedness::RightHanded,
        Handedness::EpsilonNegativeOnly,
        Handedness::MuNegativeOnly,
        Handedness::OnBoundary,
    ];

    /// Classifies `(ε, μ)` with absolute dead zones `tol_eps`, `tol_mu`.
    pub fn classify(epsilon: f64, mu: f64, tol_eps: f64, tol_mu: f64) -> Handedness {
        if epsilon.abs() <= tol_eps || mu.abs() <= tol_mu {
            return Handedness::OnBoundary;
        }
        match (epsilon < 0.0, mu < 0.0) {
            (true, true) => Handedness::LeftHanded,
            (false, false) => Handedness::RightHanded,
            (true, false) => Handedness::EpsilonNegativeOnly,
            (false, true) => Handedness::MuNegativeOnly,
        }
    }

    /// Stable lowercase name used in every output format.
    pub fn as_str(self) -> &'static str {
        match self {
            Handedness::LeftHanded => "left_handed",
            Handedness::RightHanded => "right_handed",
            Handedness::EpsilonNegativeOnly => "epsilon_negative_only",
            Handedness::MuNegativeOnly => "mu_negative_only",
            Handedness::OnBoundary => "on_boundary",
        }
    }
}

/// `ε`, `μ` and their sign class at one evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MaterialResponse {
    /// Effective permittivity, farads.
    pub epsilon_eff: f64,
    /// Effective permeability, henries.
    pub mu_eff: f64,
    /// Sign class.
    pub handedness: Handedness,
}

/// Anchor point at which `ε` is required to vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CalibrationAnchor {
    /// Angular frequency, rad/s.
    pub omega: f64,
    /// Temperature, kelvin.
    pub temperature: f64,
}

/// Constants, `coth` convention and classification tolerances shared by
/// every response evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResponseModel {
    /// Physical constants.
    pub constants: PhysicalConstants,
    /// Argument convention of the `coth` factor.
    pub convention: CothConvention,
    /// Dead zone for `ε`, relative to `C_r`.
    pub epsilon_tol_rel: f64,
    /// Dead zone for `μ`, relative to `L_r`.
    pub mu_tol_rel: f64,
}

impl Default for ResponseModel {
    fn default() -> Self {
        ResponseModel {
            constants: PhysicalConstants::CODATA,
            convention: CothConvention::Direct,
            epsilon_tol_rel: DEFAULT_CLASSIFY_TOL,
            mu_tol_rel: DEFAULT_CLASSIFY_TOL,
        }
    }
}

impl ResponseModel {
    /// Default tolerances and constants with the given convention.
    pub fn with_convention(convention: CothConvention) -> Self {
        ResponseModel { convention, ..Self::default() }
    }

    /// The quantity subtracted from `C_r` (pass `L_l`) or from `L_r`
    /// (pass `C_l`).
    fn subtrahend(&self, params: &UnitCellParams, state: &ThermalFockState, omega: f64, element: f64) -> Result<f64> {
        let derived = derive_cell_quantities(params)?;
        state.validate()?;
        let factor = thermal_factor(state.n, omega, state.temperature, self.convention, &self.constants)?;
        let z0 = params.z0;
        let bracket = self.constants.hbar * factor
            / (derived.c_total * z0 * z0 * z0)
            / state.current_fluctuation
            / libm::pow(element, 2.5);
        if !(bracket.is_finite() && bracket > 0.0) {
            return Err(Error::Overflow { what: "response bracket" });
        }
        Ok(libm::pow(0.5 * bracket, 0.4))
    }

    /// Effective permittivity in the thermal Fock state, farads.
    pub fn epsilon_eff(&self, params: &UnitCellParams, state: &ThermalFockState, omega: f64) -> Result<f64> {
        Ok(params.c_r - self.subtrahend(params, state, omega, params.l_l)?)
    }

    /// Effective permeability in the thermal Fock state, henries.
    pub fn mu_eff(&self, params: &UnitCellParams, state: &ThermalFockState, omega: f64) -> Result<f64> {
        Ok(params.l_r - self.subtrahend(params, state, omega, params.c_l)?)
    }

    /// Sign class with this model's dead zones scaled to `params`.
    pub fn classify(&self, params: &UnitCellParams, epsilon: f64, mu: f64) -> Handedness {
        Handedness::classify(epsilon, mu, self.epsilon_tol_rel * params.c_r, self.mu_tol_rel * params.l_r)
    }

    /// `ε`, `μ` and handedness at `omega`.
    pub fn evaluate(&self, params: &UnitCellParams, state: &ThermalFockState, omega: f64) -> Result<MaterialResponse> {
        let epsilon_eff = self.epsilon_eff(params, state, omega)?;
        let mu_eff = self.mu_eff(params, state, omega)?;
        Ok(MaterialResponse { epsilon_eff, mu_eff, handedness: self.classify(params, epsilon_eff, mu_eff) })
    }

    /// Frequencies in `[omega_lo, omega_hi]` where `ε` changes sign.
    pub fn find_epsilon_zero_in_omega(
        &self,
        params: &UnitCellParams,
        state: &ThermalFockState,
        omega_lo: f64,
        omega_hi: f64,
        scan: &ScanConfig,
    ) -> Result<Vec<CrossingResult>> {
        params.validate()?;
        state.validate()?;
        check_interval(omega_lo, omega_hi)?;
        find_crossings(omega_lo, omega_hi, scan, |w| self.epsilon_eff(params, state, w))
    }

    /// Temperatures in `[t_lo, t_hi]` where `ε` changes sign at fixed `omega`.
    ///
    /// `state_template` supplies `n` and `⟨(Δi)²⟩`; its temperature is
    /// ignored. `ε` falls monotonically with temperature, so the list holds
    /// at most one crossing.
    pub fn find_epsilon_zero_in_temperature(
        &self,
        params: &UnitCellParams,
        state_template: &ThermalFockState,
        omega: f64,
        t_lo: f64,
        t_hi: f64,
        scan: &ScanConfig,
    ) -> Result<Vec<CrossingResult>> {
        params.validate()?;
        positive("omega", omega)?;
        positive("current_fluctuation", state_template.current_fluctuation)?;
        check_interval(t_lo, t_hi)?;
        find_crossings(t_lo, t_hi, scan, |t| {
            let state = ThermalFockState { temperature: t, ..*state_template };
            self.epsilon_eff(params, &state, omega)
        })
    }

    /// Cell length `z₀` at which `ε` vanishes at the anchor.
    ///
    /// Uses `state.n` and `state.current_fluctuation`; the anchor supplies
    /// frequency and temperature and `params.z0` is ignored. Solving
    /// `ε = 0` gives `z₀³ = ħ(1+2n)coth(x) / (2 C ⟨(Δi)²⟩ (L_l C_r)^(5/2))`.
    pub fn calibrate_z0(
        &self,
        params: &UnitCellParams,
        state: &ThermalFockState,
        anchor: CalibrationAnchor,
    ) -> Result<f64> {
        let params = params.with_z0(1.0);
        let derived = derive_cell_quantities(&params)?;
        let fluct = positive("current_fluctuation", state.current_fluctuation)?;
        let factor = thermal_factor(state.n, anchor.omega, anchor.temperature, self.convention, &self.constants)?;
        let numerator = libm::cbrt(self.constants.hbar * factor / (2.0 * derived.c_total * fluct));
        let z0 = numerator / libm::pow(params.l_l * params.c_r, 5.0 / 6.0);
        if !(z0.is_finite() && z0 > 0.0) {
            return Err(Error::NoSolution { what: "z0 calibration" });
        }
        let check_state = ThermalFockState { temperature: anchor.temperature, ..*state };
        let residual = self.epsilon_eff(&params.with_z0(z0), &check_state, anchor.omega)?;
        if residual.abs() > CALIBRATION_CHECK_TOL * params.c_r {
            return Err(Error::NoSolution { what: "z0 calibration (residual check)" });
        }
        Ok(z0)
    }
}

/// Free-function form of [`ResponseModel::calibrate_z0`].
pub fn calibrate_z0(
    model: &ResponseModel,
    params: &UnitCellParams,
    state: &ThermalFockState,
    anchor: CalibrationAnchor,
) -> Result<f64> {
    model.calibrate_z0(params, state, anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::{classical_epsilon, classical_mu};
    use crate::thermal::current_fluctuation_thermal;

    fn fig3() -> UnitCellParams {
        UnitCellParams::new(250e-6, 6.50e-3, 9.0e-3, 350e-12, 1.711_583_232_377_679_3e-6).unwrap()
    }

    #[test]
    fn classification_table() {
        use Handedness::*;
        assert_eq!(Handedness::classify(-1.0, -1.0, 0.0, 0.0), LeftHanded);
        assert_eq!(Handedness::classify(1.0, 1.0, 0.0, 0.0), RightHanded);
        assert_eq!(Handedness::classify(-1.0, 1.0, 0.0, 0.0), EpsilonNegativeOnly);
        assert_eq!(Handedness::classify(1.0, -1.0, 0.0, 0.0), MuNegativeOnly);
        assert_eq!(Handedness::classify(1e-13, -1.0, 1e-12, 0.0), OnBoundary);
        assert_eq!(Handedness::classify(1.0, 0.0, 0.0, 0.0), OnBoundary);
    }

    #[test]
    fn huge_fluctuation_recovers_bare_elements() {
        let m = ResponseModel::default();
        let p = fig3();
        let s = ThermalFockState::new(1, 170.0, 1e30).unwrap();
        let e = m.epsilon_eff(&p, &s, 2.9e9).unwrap();
        assert!((e - p.c_r).abs() < 1e-9 * p.c_r);
        let s = ThermalFockState::new(1, 170.0, 1e60).unwrap();
        let mu = m.mu_eff(&p, &s, 2.9e9).unwrap();
        assert!((mu - p.l_r).abs() < 1e-6 * p.l_r);
    }

    #[test]
    fn substituting_thermal_variance_gives_classical_values() {
        let p = fig3();
        for conv in [CothConvention::Direct, CothConvention::Tfd] {
            let m = ResponseModel::with_convention(conv);
            for (n, t, w) in [(1, 170.0, 2.9e9), (4, 3.0, 1e11), (0, 1000.0, 50.0)] {
                let d = derive_cell_quantities(&p).unwrap();
                let fl = current_fluctuation_thermal(n, w, t, d.c_total, p.z0, conv, &m.constants).unwrap();
                let s = ThermalFockState::new(n, t, fl).unwrap();
                let e = m.epsilon_eff(&p, &s, w).unwrap();
                let ec = classical_epsilon(&p, w).unwrap();
                let scale = p.c_r.max(1.0 / (w * w * p.l_l));
                assert!((e - ec).abs() < 1e-9 * scale, "{conv:?} {n} {t} {w}: {e} vs {ec}");
                let mu = m.mu_eff(&p, &s, w).unwrap();
                let mc = classical_mu(&p, w).unwrap();
                let scale = p.l_r.max(1.0 / (w * w * p.c_l));
                assert!((mu - mc).abs() < 1e-9 * scale);
            }
        }
    }

    #[test]
    fn subtrahend_ratio_is_l_l_over_c_l() {
        let m = ResponseModel::default();
        let p = fig3();
        let s = ThermalFockState::new(3, 40.0, 2.0).unwrap();
        let se = p.c_r - m.epsilon_eff(&p, &s, 1e9).unwrap();
        let sm = p.l_r - m.mu_eff(&p, &s, 1e9).unwrap();
        assert!(((sm / se) / (p.l_l / p.c_l) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn calibration_round_trip_and_scaling() {
        let m = ResponseModel::default();
        let p = fig3();
        let s = ThermalFockState::new(1, 1.0, 1.0).unwrap();
        let anchor = CalibrationAnchor { omega: 2.9e9, temperature: 170.0 };
        let z0 = m.calibrate_z0(&p, &s, anchor).unwrap();
        // mpmath root of ε(z0) = 0
        assert!((z0 / 1.711_583_232_377_679_3e-6 - 1.0).abs() < 1e-12);
        let at = ThermalFockState::new(1, 170.0, 1.0).unwrap();
        assert!(m.epsilon_eff(&p.with_z0(z0), &at, 2.9e9).unwrap().abs() < 1e-9 * p.c_r);

        let s2 = ThermalFockState::new(1, 1.0, 2.0).unwrap();
        let z2 = m.calibrate_z0(&p, &s2, anchor).unwrap();
        assert!(((z0 * z0 * z0) / (z2 * z2 * z2) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn calibration_rejects_bad_inputs() {
        let m = ResponseModel::default();
        let s = ThermalFockState { n: 1, temperature: 1.0, current_fluctuation: 0.0 };
        let anchor = CalibrationAnchor { omega: 2.9e9, temperature: 170.0 };
        assert!(m.calibrate_z0(&fig3(), &s, anchor).is_err());
        let s = ThermalFockState::new(1, 1.0, 1.0).unwrap();
        assert!(m.calibrate_z0(&fig3(), &s, CalibrationAnchor { omega: -1.0, temperature: 1.0 }).is_err());
    }

    #[test]
    fn temperature_threshold_near_anchor() {
        let m = ResponseModel::default();
        let s = ThermalFockState::new(1, 1.0, 1.0).unwrap();
        let c = m.find_epsilon_zero_in_temperature(&fig3(), &s, 2.9e9, 5.0, 300.0, &ScanConfig::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0].location - 170.0).abs() < 1e-6);
        assert_eq!(c[0].side, crate::crossing::CrossingSide::PositiveToNegative);
        let none = m.find_epsilon_zero_in_temperature(&fig3(), &s, 2.9e9, 5.0, 150.0, &ScanConfig::default()).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn positive_everywhere_gives_no_band_edge() {
        let m = ResponseModel::default();
        let s = ThermalFockState::new(1, 5.0, 1.0).unwrap();
        let c = m.find_epsilon_zero_in_omega(&fig3(), &s, 1e9, 1e10, &ScanConfig::default()).unwrap();
        assert!(c.is_empty());
        assert!(m.find_epsilon_zero_in_omega(&fig3(), &s, 1e10, 1e9, &ScanConfig::default()).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let m = ResponseModel::default();
        let p = fig3().with_z0(1e-200);
        let s = ThermalFockState::new(1, 170.0, 1e-300).unwrap();
        assert_eq!(m.epsilon_eff(&p, &s, 2.9e9), Err(Error::Overflow { what: "response bracket" }));
    }

    #[test]
    fn handedness_names() {
        let names: std::vec::Vec<&str> = Handedness::ALL.iter().map(|h| h.as_str()).collect();
        assert_eq!(names, ["left_handed", "right_handed", "epsilon_negative_only", "mu_negative_only", "on_boundary"]);
    }
}

//! Thermal-state bookkeeping for the quantized current field.
//!
//! A thermal Fock state `|n ñ⟩_T` is the zero-temperature Fock state dressed
//! by the thermal Bogoliubov rotation `T(θ) = exp[−θ(a ã − a† ã†)]`. The
//! rotation angle is fixed by the Bose–Einstein occupation
//! `n₀ = 1/(exp(ħω/k_BT) − 1)` through `sinh²θ = n₀`, so that
//! `cosh 2θ = 1 + 2n₀ = coth(ħω/2k_BT)`.
//!
//! The relation is sometimes written `n₀ = sinh θ`. That form contradicts
//! the Bose–Einstein occupation above and the `coth` factor of the thermal
//! permittivity, so `sinh²θ = n₀` is used throughout.
//!
//! With the current operator `î = (ω²/z₀) η̂` and `ñ = n`, the variance of
//! the current in `|n ñ⟩_T` is
//!
//! ```text
//! ⟨(Δi)²⟩ = ħ ω⁵ (1 + 2n) coth(x) / (2 C z₀³)
//! ```
//!
//! where the `coth` argument `x` depends on the [`CothConvention`].

use crate::constants::PhysicalConstants;
use crate::error::{positive, Error, Result};

/// Below this `ħω/k_BT` the occupation uses `1/x − 1/2`.
const PHOTON_SERIES_CUTOFF: f64 = 1e-8;
/// Below this argument `coth` uses its Laurent series.
const COTH_SERIES_CUTOFF: f64 = 1e-4;
/// Above this argument `coth` uses `1 + 2e^{−2x}`.
const COTH_ASYMPTOTIC_CUTOFF: f64 = 20.0;

/// Which argument the `coth` factor receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CothConvention {
    /// `coth(ħω/k_BT)`, the form used for the published parameter studies.
    #[default]
    Direct,
    /// `coth(ħω/2k_BT)`, the textbook thermo-field-dynamics form.
    Tfd,
}

impl CothConvention {
    /// The `coth` argument for this convention.
    pub fn argument(self, constants: &PhysicalConstants, omega: f64, temperature: f64) -> f64 {
        let x = constants.quantum_ratio(omega, temperature);
        match self {
            CothConvention::Direct => x,
            CothConvention::Tfd => 0.5 * x,
        }
    }

    /// Stable wire name.
    pub fn as_str(self) -> &'static str {
        match self {
            CothConvention::Direct => "direct",
            CothConvention::Tfd => "tfd",
        }
    }
}

impl core::str::FromStr for CothConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(CothConvention::Direct),
            "tfd" => Ok(CothConvention::Tfd),
            _ => Err(Error::InvalidSweep { reason: "unknown coth convention (expected `direct` or `tfd`)" }),
        }
    }
}

/// Photon number, temperature and current variance of the field.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThermalFockState {
    /// Field photon number `n`.
    pub n: u32,
    /// Temperature, kelvin.
    pub temperature: f64,
    /// Current variance `⟨(Δi)²⟩`, A².
    pub current_fluctuation: f64,
}

impl ThermalFockState {
    /// Builds a validated state.
    pub fn new(n: u32, temperature: f64, current_fluctuation: f64) -> Result<Self> {
        let s = ThermalFockState { n, temperature, current_fluctuation };
        s.validate()?;
        Ok(s)
    }

    /// Temperature and variance must be strictly positive and finite.
    pub fn validate(&self) -> Result<()> {
        positive("temperature", self.temperature)?;
        positive("current_fluctuation", self.current_fluctuation)?;
        Ok(())
    }

    /// `1 + 2n` as a float.
    pub fn prefactor(&self) -> f64 {
        1.0 + 2.0 * f64::from(self.n)
    }
}

/// Parameters of the thermal Bogoliubov rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BogoliubovParams {
    /// Rotation angle `θ`, with `sinh²θ = n₀`.
    pub theta: f64,
    /// Thermal photon number of the vacuum.
    pub n0: f64,
    /// `cosh 2θ = 1 + 2n₀`.
    pub cosh2theta: f64,
}

impl BogoliubovParams {
    /// `cosh θ`, the coefficient of `a` in the rotated operator.
    pub fn cosh_theta(&self) -> f64 {
        libm::sqrt(1.0 + self.n0)
    }

    /// `sinh θ`, the coefficient of `ã†` in the rotated operator.
    pub fn sinh_theta(&self) -> f64 {
        libm::sqrt(self.n0)
    }
}

/// Hyperbolic cotangent, accurate to a few ulp over the whole positive axis.
///
/// Negative arguments use odd symmetry. `coth(0)` is `+∞`.
pub fn coth(x: f64) -> f64 {
    if x < 0.0 {
        return -coth(-x);
    }
    if x < COTH_SERIES_CUTOFF {
        let x2 = x * x;
        1.0 / x + x / 3.0 - x * x2 / 45.0
    } else if x > COTH_ASYMPTOTIC_CUTOFF {
        1.0 + 2.0 * libm::exp(-2.0 * x)
    } else {
        1.0 / libm::tanh(x)
    }
}

/// Bose–Einstein occupation `1/(exp(ħω/k_BT) − 1)`.
pub fn thermal_photon_number(omega: f64, temperature: f64, constants: &PhysicalConstants) -> Result<f64> {
    let omega = positive("omega", omega)?;
    let temperature = positive("temperature", temperature)?;
    constants.validate()?;
    let x = constants.quantum_ratio(omega, temperature);
    if x < PHOTON_SERIES_CUTOFF {
        Ok(1.0 / x - 0.5)
    } else {
        Ok(1.0 / libm::expm1(x))
    }
}

/// Rotation angle and occupation of the thermal vacuum at `(ω, T)`.
pub fn bogoliubov_params(omega: f64, temperature: f64, constants: &PhysicalConstants) -> Result<BogoliubovParams> {
    let n0 = thermal_photon_number(omega, temperature, constants)?;
    Ok(BogoliubovParams { theta: libm::asinh(libm::sqrt(n0)), n0, cosh2theta: 1.0 + 2.0 * n0 })
}

/// The thermal enhancement `(1 + 2n) coth(x)`.
pub fn thermal_factor(
    n: u32,
    omega: f64,
    temperature: f64,
    convention: CothConvention,
    constants: &PhysicalConstants,
) -> Result<f64> {
    let omega = positive("omega", omega)?;
    let temperature = positive("temperature", temperature)?;
    constants.validate()?;
    let x = convention.argument(constants, omega, temperature);
    let factor = (1.0 + 2.0 * f64::from(n)) * coth(x);
    if factor.is_finite() {
        Ok(factor)
    } else {
        Err(Error::Overflow { what: "thermal factor" })
    }
}

/// Current variance `ħω⁵(1+2n)coth(x)/(2 C z₀³)` in the thermal Fock state.
pub fn current_fluctuation_thermal(
    n: u32,
    omega: f64,
    temperature: f64,
    c_total: f64,
    z0: f64,
    convention: CothConvention,
    constants: &PhysicalConstants,
) -> Result<f64> {
    let c_total = positive("c_total", c_total)?;
    let z0 = positive("z0", z0)?;
    let factor = thermal_factor(n, omega, temperature, convention, constants)?;
    let w2 = omega * omega;
    let value = constants.hbar * (w2 * w2 * omega) * factor / (2.0 * c_total * z0 * z0 * z0);
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Overflow { what: "current fluctuation" })
    }
}

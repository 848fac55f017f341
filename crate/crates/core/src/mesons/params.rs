use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// ħ in MeV·s.
pub const HBAR_MEV_S: f64 = 6.582_119_569e-22;
/// Speed of light in mm/s.
pub const SPEED_OF_LIGHT_MM_PER_S: f64 = 2.997_924_58e11;

/// Mixing data of one meson species. Rates are in s⁻¹.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MesonParams {
    pub name: String,
    /// `ΔΓ = Γ_H − Γ_L`.
    pub delta_gamma: f64,
    /// `ΔM = M_H − M_L`.
    pub delta_m: f64,
    /// `Γ = (Γ_H + Γ_L)/2`.
    pub gamma_mean: f64,
    /// `|q/p|`.
    pub r: f64,
    /// `arg(q/p)` in radians.
    pub zeta: f64,
}

impl MesonParams {
    pub fn new(
        name: impl Into<String>,
        delta_gamma: f64,
        delta_m: f64,
        gamma_mean: f64,
        r: f64,
        zeta: f64,
    ) -> Result<Self> {
        let params = Self {
            name: name.into(),
            delta_gamma,
            delta_m,
            gamma_mean,
            r,
            zeta,
        };
        params.validate()?;
        Ok(params)
    }

    /// Rates and mass difference in MeV, `zeta` in degrees.
    pub fn from_mev(
        name: impl Into<String>,
        delta_gamma_mev: f64,
        delta_m_mev: f64,
        gamma_mean_mev: f64,
        r: f64,
        zeta_deg: f64,
    ) -> Result<Self> {
        Self::new(
            name,
            delta_gamma_mev / HBAR_MEV_S,
            delta_m_mev / HBAR_MEV_S,
            gamma_mean_mev / HBAR_MEV_S,
            r,
            zeta_deg.to_radians(),
        )
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [
            self.delta_gamma,
            self.delta_m,
            self.gamma_mean,
            self.r,
            self.zeta,
        ]
        .iter()
        .all(|x| x.is_finite());
        if !all_finite {
            return Err(Error::InvalidParameter(format!(
                "{}: parameters must be finite",
                self.name
            )));
        }
        if !(self.gamma_mean > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "{}: mean width must be positive",
                self.name
            )));
        }
        if self.gamma_heavy() < 0.0 || self.gamma_light() < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "{}: |ΔΓ| = {:e} exceeds 2Γ = {:e}, giving a negative eigenstate width",
                self.name,
                self.delta_gamma.abs(),
                2.0 * self.gamma_mean
            )));
        }
        if !(self.r > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "{}: r = |q/p| must be positive",
                self.name
            )));
        }
        Ok(())
    }

    pub fn gamma_heavy(&self) -> f64 {
        self.gamma_mean + self.delta_gamma / 2.0
    }

    pub fn gamma_light(&self) -> f64 {
        self.gamma_mean - self.delta_gamma / 2.0
    }

    /// `λ = ΔM/ΔΓ`, undefined when `ΔΓ = 0`.
    pub fn lambda(&self) -> Option<f64> {
        (self.delta_gamma != 0.0).then(|| self.delta_m / self.delta_gamma)
    }

    /// Mean lifetime `1/Γ` in seconds.
    pub fn mean_lifetime(&self) -> f64 {
        1.0 / self.gamma_mean
    }

    /// Proper time for `z = Γt` lifetimes.
    pub fn time_from_z(&self, z: f64) -> f64 {
        z / self.gamma_mean
    }

    pub fn z_from_time(&self, t: f64) -> f64 {
        t * self.gamma_mean
    }

    /// `c·t` in mm at `z` lifetimes.
    pub fn ct_mm(&self, z: f64) -> f64 {
        SPEED_OF_LIGHT_MM_PER_S * self.time_from_z(z)
    }

    pub fn q_over_p(&self) -> Complex64 {
        Complex64::from_polar(self.r, self.zeta)
    }

    pub fn mixing(&self) -> Result<MixingCoefficients> {
        mixing_from_params(self)
    }
}

/// `|M_L⟩ = p|M⟩ + q|M̄⟩`, `|M_H⟩ = p|M⟩ − q|M̄⟩` (α = 0), with
/// `|p|² + |q|² = 1` and `q/p = r e^{iζ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixingCoefficients {
    pub p: Complex64,
    pub q: Complex64,
}

impl MixingCoefficients {
    /// `p = cos β`, `q = sin β e^{iζ}` with `tan β = r`.
    pub fn from_ratio(r: f64, zeta: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() || !zeta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mixing ratio needs finite r > 0, got r = {r}"
            )));
        }
        let beta = r.atan();
        Ok(Self {
            p: Complex64::new(beta.cos(), 0.0),
            q: Complex64::from_polar(beta.sin(), zeta),
        })
    }

    pub fn q_over_p(&self) -> Complex64 {
        self.q / self.p
    }

    pub fn p_over_q(&self) -> Complex64 {
        self.p / self.q
    }
}

pub fn mixing_from_params(params: &MesonParams) -> Result<MixingCoefficients> {
    MixingCoefficients::from_ratio(params.r, params.zeta)
}

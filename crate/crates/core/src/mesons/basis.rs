use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::functions::g_functions;
use super::params::{MesonParams, MixingCoefficients};
use crate::qlinalg::{ComplexOperator, StateVector};
use crate::{Error, Result};

/// One-particle states. `M` and `M̄` form the flavour basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MesonState {
    M,
    MBar,
    M1,
    M2,
    ML,
    MH,
}

impl MesonState {
    pub const ALL: [MesonState; 6] = [
        MesonState::M,
        MesonState::MBar,
        MesonState::M1,
        MesonState::M2,
        MesonState::ML,
        MesonState::MH,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            MesonState::M => "M",
            MesonState::MBar => "M̄",
            MesonState::M1 => "M₁",
            MesonState::M2 => "M₂",
            MesonState::ML => "M_L",
            MesonState::MH => "M_H",
        }
    }

    /// ASCII name accepted by [`FromStr`].
    pub fn ascii(self) -> &'static str {
        match self {
            MesonState::M => "M",
            MesonState::MBar => "Mbar",
            MesonState::M1 => "M1",
            MesonState::M2 => "M2",
            MesonState::ML => "ML",
            MesonState::MH => "MH",
        }
    }
}

impl fmt::Display for MesonState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MesonState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" => Ok(MesonState::M),
            "Mbar" | "M̄" | "anti-M" => Ok(MesonState::MBar),
            "M1" | "M₁" => Ok(MesonState::M1),
            "M2" | "M₂" => Ok(MesonState::M2),
            "ML" | "M_L" => Ok(MesonState::ML),
            "MH" | "M_H" => Ok(MesonState::MH),
            other => Err(Error::UnsupportedEvent(format!(
                "unknown meson state `{other}`"
            ))),
        }
    }
}

/// Joint outcome `(particle2, particle1)` of a pair measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MesonEvent {
    pub particle2: MesonState,
    pub particle1: MesonState,
}

impl MesonEvent {
    pub fn new(particle2: MesonState, particle1: MesonState) -> Self {
        Self {
            particle2,
            particle1,
        }
    }
}

impl fmt::Display for MesonEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}⁽²⁾, {}⁽¹⁾}}", self.particle2, self.particle1)
    }
}

/// Basis vector in the flavour basis `(M, M̄)` with CP phase `alpha`.
pub fn basis_vector(state: MesonState, mix: &MixingCoefficients, alpha: f64) -> StateVector {
    let one = Complex64::new(1.0, 0.0);
    let phase = Complex64::from_polar(1.0, alpha);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let amps = match state {
        MesonState::M => vec![one, Complex64::new(0.0, 0.0)],
        MesonState::MBar => vec![Complex64::new(0.0, 0.0), one],
        MesonState::M1 => vec![one * h, phase * h],
        MesonState::M2 => vec![one * h, -phase * h],
        MesonState::ML => vec![mix.p, phase * mix.q],
        MesonState::MH => vec![mix.p, -phase * mix.q],
    };
    StateVector::new(amps).expect("finite two-component amplitudes")
}

/// `(|M⟩|M̄⟩ − |M̄⟩|M⟩)/√2`.
pub fn bell_state() -> StateVector {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    StateVector::from_real(&[0.0, h, -h, 0.0]).expect("finite amplitudes")
}

/// One-particle evolution over proper time `tau` in the flavour basis:
/// `|M⟩ → g₊|M⟩ − e^{iα}(q/p)g₋|M̄⟩`, `|M̄⟩ → g₊|M̄⟩ − e^{−iα}(p/q)g₋|M⟩`.
/// Not unitary: both mass eigenstates decay.
pub fn flavour_evolution(
    tau: f64,
    params: &MesonParams,
    mix: &MixingCoefficients,
    alpha: f64,
) -> Result<ComplexOperator> {
    let (gp, gm) = g_functions(tau, params)?;
    let phase = Complex64::from_polar(1.0, alpha);
    ComplexOperator::from_rows(vec![
        vec![gp, -gm * mix.p_over_q() / phase],
        vec![-gm * mix.q_over_p() * phase, gp],
    ])
}

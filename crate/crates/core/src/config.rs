//! Meson parameter files.
//!
//! A parameter file is TOML with one table per named scenario:
//!
//! ```toml
//! [scenario.Bs]
//! note = "Table values, figure phase"
//! delta_gamma = -6.0e-11   # MeV, Γ_H − Γ_L
//! delta_m = 1.2e-8         # MeV, M_H − M_L
//! gamma_mean = 4.3533e-10  # MeV
//! r = 1.004                # |q/p|
//! zeta_deg = 185.0         # arg(q/p)
//! ```
//!
//! `delta_gamma` uses `Γ_H − Γ_L`, which is the negative of the PDG
//! quantity. Every scenario is validated when the file is loaded.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::mesons::MesonParams;
use crate::{Error, Result};

const BUILTIN: &str = include_str!("../data/mesons.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioEntry {
    #[serde(default)]
    pub note: String,
    pub delta_gamma: f64,
    pub delta_m: f64,
    pub gamma_mean: f64,
    pub r: f64,
    pub zeta_deg: f64,
}

impl ScenarioEntry {
    pub fn to_params(&self, name: &str) -> Result<MesonParams> {
        MesonParams::from_mev(
            name,
            self.delta_gamma,
            self.delta_m,
            self.gamma_mean,
            self.r,
            self.zeta_deg,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterFile {
    #[serde(rename = "scenario")]
    pub scenarios: BTreeMap<String, ScenarioEntry>,
}

impl ParameterFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: ParameterFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if file.scenarios.is_empty() {
            return Err(Error::Config("no scenarios defined".into()));
        }
        for (name, entry) in &file.scenarios {
            entry
                .to_params(name)
                .map_err(|e| Error::Config(format!("scenario `{name}`: {e}")))?;
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The shipped scenarios: `Bs`, `K`, `D` and `D-figure`.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("shipped parameter file is valid")
    }

    pub fn names(&self) -> Vec<&str> {
        self.scenarios.keys().map(String::as_str).collect()
    }

    pub fn entry(&self, name: &str) -> Result<&ScenarioEntry> {
        self.scenarios.get(name).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown scenario `{name}`; available: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn get(&self, name: &str) -> Result<MesonParams> {
        self.entry(name)?.to_params(name)
    }
}

/// Shipped scenario by name.
pub fn builtin_scenario(name: &str) -> Result<MesonParams> {
    ParameterFile::builtin().get(name)
}

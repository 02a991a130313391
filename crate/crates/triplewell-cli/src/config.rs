//! JSON run configuration. Unknown keys are rejected; every validation
//! failure names the offending field.

use serde::{Deserialize, Serialize};
use triplewell::dynamics::{PacketSpec, Well};
use triplewell::{GridSpec, Model, ModelParams};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    #[serde(default = "default_omega")]
    pub omega: f64,
    pub nu: f64,
    pub mu: f64,
    #[serde(default = "default_one")]
    pub lambda: f64,
    #[serde(default = "default_one")]
    pub lambda1: f64,
}

fn default_omega() -> f64 {
    1.0
}

fn default_one() -> f64 {
    1.0
}

impl Default for ModelConfig {
    fn default() -> Self {
        // the symmetric triple-well showcase parameters
        ModelConfig {
            omega: 1.0,
            nu: -0.02,
            mu: -1.0,
            lambda: 1.0,
            lambda1: 1.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub xi_min: f64,
    pub xi_max: f64,
    pub points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            xi_min: -10.0,
            xi_max: 10.0,
            points: 2001,
        }
    }
}

/// Packet placement: either a named well or an explicit center.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub well: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<f64>,
    pub squeeze: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub model: ModelConfig,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packet: Option<PacketConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<String>,
}

fn default_n_max() -> usize {
    40
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            model: ModelConfig::default(),
            grid: GridConfig::default(),
            packet: None,
            times: None,
            n_max: default_n_max(),
            outputs: None,
        }
    }
}

impl RunConfig {
    pub fn model_params(&self) -> ModelParams {
        ModelParams {
            omega: self.model.omega,
            nu: self.model.nu,
            mu: self.model.mu,
            lambda: self.model.lambda,
            lambda1: self.model.lambda1,
        }
    }

    pub fn grid_spec(&self) -> Result<GridSpec, triplewell::Error> {
        GridSpec::new(self.grid.xi_min, self.grid.xi_max, self.grid.points)
    }

    /// Resolves the packet config against the model's well geometry.
    pub fn packet_spec(&self, model: &Model) -> Result<PacketSpec, String> {
        let p = self
            .packet
            .as_ref()
            .ok_or_else(|| "packet: required for this command".to_string())?;
        if !p.squeeze.is_finite() {
            return Err(format!("packet.squeeze: {} is not finite", p.squeeze));
        }
        match (&p.well, p.center) {
            (Some(_), Some(_)) => {
                Err("packet: specify either 'well' or 'center', not both".into())
            }
            (None, None) => Err("packet: one of 'well' or 'center' is required".into()),
            (None, Some(c)) => Ok(PacketSpec::new(c, p.squeeze)),
            (Some(w), None) => {
                let well = match w.as_str() {
                    "left" => Well::Left,
                    "center" => Well::Center,
                    "right" => Well::Right,
                    other => {
                        return Err(format!(
                            "packet.well: '{other}' is not one of left|center|right"
                        ))
                    }
                };
                let part = model
                    .well_partition(8.0, 4001)
                    .map_err(|e| format!("packet.well: {e}"))?;
                Ok(PacketSpec::at_well(&part, well, p.squeeze))
            }
        }
    }

    pub fn times(&self) -> Result<Vec<f64>, String> {
        let ts = self
            .times
            .clone()
            .ok_or_else(|| "times: required for this command".to_string())?;
        if ts.is_empty() {
            return Err("times: must not be empty".into());
        }
        for t in &ts {
            if !t.is_finite() || *t < 0.0 {
                return Err(format!("times: {t} must be finite and >= 0"));
            }
        }
        Ok(ts)
    }
}

pub fn load(path: Option<&str>) -> Result<RunConfig, String> {
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("config {p}: {e}"))?;
            serde_json::from_str(&text).map_err(|e| format!("config {p}: {e}"))
        }
    }
}

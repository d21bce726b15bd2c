//! Network configuration and its flat key-value file format.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("bad value for `{key}`: {msg}")]
    BadValue { key: String, msg: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("malformed line {0}: expected `key = value`")]
    Malformed(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// All physical and algorithmic parameters of a network instance.
///
/// Defaults follow the evaluation setup: 2 W HAP, devices at 5 m, 2 dB SIC
/// threshold, the 24 mW saturating harvester, 20 MHz bandwidth at a noise
/// density of 1e-13 W/Hz, and downlink weight 0.4. Quantities the literature
/// leaves open (slot duration, device transmit power, initial energy) get
/// explicit defaults here and are plain config keys like everything else.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    pub n_devices: usize,
    pub horizon_t: usize,
    /// Slot duration in seconds.
    pub slot_tau: f64,
    /// Distance of each device to the HAP, metres. Length == n_devices.
    pub distances: Vec<f64>,
    pub pathloss_beta: f64,
    /// Maximum HAP transmit power P0, watts.
    pub hap_power_max: f64,
    /// Maximum device transmit power p0, watts.
    pub device_power_max: f64,
    /// SINR threshold in dB (linear value via [`NetworkConfig::gamma_linear`]).
    pub sinr_threshold_db: f64,
    /// Noise density, W/Hz.
    pub noise_density: f64,
    /// Channel bandwidth, Hz.
    pub bandwidth: f64,
    /// Harvester saturation power M, watts.
    pub eh_m: f64,
    /// Harvester steepness a, 1/watt.
    pub eh_a: f64,
    /// Harvester turn-on midpoint b, watts.
    pub eh_b: f64,
    /// Battery capacity, joules.
    pub battery_capacity: f64,
    /// Weight of downlink messages in the objective; uplink weight is 1 - this.
    pub downlink_weight: f64,
    /// Initial device energy E0, joules.
    pub initial_energy: f64,
    /// Piecewise-linear harvester segments used by the MILP.
    pub harvest_segments: usize,
    pub rng_seed: u64,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig {
            n_devices: 2,
            horizon_t: 10,
            slot_tau: 1e-3,
            distances: vec![5.0, 5.0],
            pathloss_beta: 2.0,
            hap_power_max: 2.0,
            device_power_max: 0.01,
            sinr_threshold_db: 2.0,
            noise_density: 1e-13,
            bandwidth: 20e6,
            eh_m: 0.024,
            eh_a: 150.0,
            eh_b: 0.014,
            battery_capacity: 10_800.0,
            downlink_weight: 0.4,
            initial_energy: 0.0,
            harvest_segments: 16,
            rng_seed: 1,
        }
    }
}

impl NetworkConfig {
    /// SINR threshold as a linear power ratio.
    pub fn gamma_linear(&self) -> f64 {
        10f64.powf(self.sinr_threshold_db / 10.0)
    }

    /// Noise power N0 = density x bandwidth, watts.
    pub fn noise_power(&self) -> f64 {
        self.noise_density * self.bandwidth
    }

    pub fn uplink_weight(&self) -> f64 {
        1.0 - self.downlink_weight
    }

    /// Resize device count, replicating the first distance for new devices.
    pub fn with_devices(mut self, n: usize) -> Self {
        let d = self.distances.first().copied().unwrap_or(5.0);
        self.distances.resize(n, d);
        self.n_devices = n;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let err = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.n_devices == 0 {
            return err("n_devices must be positive");
        }
        if self.horizon_t == 0 {
            return err("horizon_T must be positive");
        }
        if self.distances.len() != self.n_devices {
            return err("distances length must equal n_devices");
        }
        if self.distances.iter().any(|&d| !(d > 0.0)) {
            return err("distances must be positive");
        }
        for (name, v) in [
            ("slot_tau", self.slot_tau),
            ("hap_power_max", self.hap_power_max),
            ("device_power_max", self.device_power_max),
            ("noise_density", self.noise_density),
            ("bandwidth", self.bandwidth),
            ("eh_M", self.eh_m),
            ("eh_a", self.eh_a),
            ("eh_b", self.eh_b),
            ("battery_capacity", self.battery_capacity),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::Invalid(format!("{name} must be positive")));
            }
        }
        if !(0.0..=1.0).contains(&self.downlink_weight) {
            return err("downlink_weight must lie in [0, 1]");
        }
        if !(self.gamma_linear() > 0.0) {
            return err("SINR threshold must convert to a positive linear ratio");
        }
        if !(self.noise_power() > 0.0) {
            return err("noise power must be positive");
        }
        if self.initial_energy < 0.0 || self.initial_energy > self.battery_capacity {
            return err("initial_energy must lie in [0, battery_capacity]");
        }
        if self.harvest_segments == 0 {
            return err("harvest_segments must be positive");
        }
        Ok(())
    }

    /// Parse the flat `key = value` config format. Unknown keys are errors.
    pub fn from_str(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = NetworkConfig::default();
        let mut explicit_uplink: Option<f64> = None;
        let mut distances_set = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Malformed(lineno + 1));
            };
            let key = key.trim();
            let value = value.trim();
            let fparse = |v: &str| -> Result<f64, ConfigError> {
                v.parse::<f64>().map_err(|e| ConfigError::BadValue {
                    key: key.to_string(),
                    msg: e.to_string(),
                })
            };
            let uparse = |v: &str| -> Result<usize, ConfigError> {
                v.parse::<usize>().map_err(|e| ConfigError::BadValue {
                    key: key.to_string(),
                    msg: e.to_string(),
                })
            };
            match key {
                "n_devices" => cfg.n_devices = uparse(value)?,
                "horizon_T" => cfg.horizon_t = uparse(value)?,
                "slot_tau" => cfg.slot_tau = fparse(value)?,
                "distances" => {
                    cfg.distances = value
                        .split(',')
                        .map(|p| fparse(p.trim()))
                        .collect::<Result<_, _>>()?;
                    distances_set = true;
                }
                "pathloss_beta" => cfg.pathloss_beta = fparse(value)?,
                "hap_power_max" => cfg.hap_power_max = fparse(value)?,
                "device_power_max" => cfg.device_power_max = fparse(value)?,
                "sinr_threshold_db" => cfg.sinr_threshold_db = fparse(value)?,
                "noise_density" => cfg.noise_density = fparse(value)?,
                "bandwidth" => cfg.bandwidth = fparse(value)?,
                "eh_M" => cfg.eh_m = fparse(value)?,
                "eh_a" => cfg.eh_a = fparse(value)?,
                "eh_b" => cfg.eh_b = fparse(value)?,
                "battery_capacity" => cfg.battery_capacity = fparse(value)?,
                "downlink_weight" => cfg.downlink_weight = fparse(value)?,
                "uplink_weight" => explicit_uplink = Some(fparse(value)?),
                "initial_energy" => cfg.initial_energy = fparse(value)?,
                "harvest_segments" => cfg.harvest_segments = uparse(value)?,
                "rng_seed" => {
                    cfg.rng_seed = value.parse::<u64>().map_err(|e| ConfigError::BadValue {
                        key: key.to_string(),
                        msg: e.to_string(),
                    })?
                }
                other => return Err(ConfigError::UnknownKey(other.to_string())),
            }
        }
        if !distances_set {
            let d = cfg.distances.first().copied().unwrap_or(5.0);
            cfg.distances = vec![d; cfg.n_devices];
        }
        if let Some(wu) = explicit_uplink {
            if (wu - cfg.uplink_weight()).abs() > 1e-12 {
                return Err(ConfigError::Invalid(
                    "uplink_weight must equal 1 - downlink_weight".to_string(),
                ));
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        Self::from_str(&std::fs::read_to_string(path)?)
    }

    /// Render in the same flat format accepted by [`NetworkConfig::from_str`].
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let d: Vec<String> = self.distances.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "n_devices = {}", self.n_devices);
        let _ = writeln!(s, "horizon_T = {}", self.horizon_t);
        let _ = writeln!(s, "slot_tau = {}", self.slot_tau);
        let _ = writeln!(s, "distances = {}", d.join(","));
        let _ = writeln!(s, "pathloss_beta = {}", self.pathloss_beta);
        let _ = writeln!(s, "hap_power_max = {}", self.hap_power_max);
        let _ = writeln!(s, "device_power_max = {}", self.device_power_max);
        let _ = writeln!(s, "sinr_threshold_db = {}", self.sinr_threshold_db);
        let _ = writeln!(s, "noise_density = {}", self.noise_density);
        let _ = writeln!(s, "bandwidth = {}", self.bandwidth);
        let _ = writeln!(s, "eh_M = {}", self.eh_m);
        let _ = writeln!(s, "eh_a = {}", self.eh_a);
        let _ = writeln!(s, "eh_b = {}", self.eh_b);
        let _ = writeln!(s, "battery_capacity = {}", self.battery_capacity);
        let _ = writeln!(s, "downlink_weight = {}", self.downlink_weight);
        let _ = writeln!(s, "initial_energy = {}", self.initial_energy);
        let _ = writeln!(s, "harvest_segments = {}", self.harvest_segments);
        let _ = writeln!(s, "rng_seed = {}", self.rng_seed);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        NetworkConfig::default().validate().unwrap();
    }

    #[test]
    fn gamma_conversion() {
        let cfg = NetworkConfig::default();
        assert!((cfg.gamma_linear() - 10f64.powf(0.2)).abs() < 1e-15);
        assert!((cfg.noise_power() - 2e-6).abs() < 1e-18);
    }

    #[test]
    fn roundtrip_through_text() {
        let mut cfg = NetworkConfig::default();
        cfg.distances = vec![4.0, 7.5];
        cfg.rng_seed = 99;
        let text = cfg.to_config_string();
        let back = NetworkConfig::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn unknown_key_rejected() {
        let err = NetworkConfig::from_str("n_devices = 2\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, ConfigError::UnknownKey(k) if k == "bogus"));
    }

    #[test]
    fn inconsistent_uplink_weight_rejected() {
        let err =
            NetworkConfig::from_str("downlink_weight = 0.4\nuplink_weight = 0.5\n").unwrap_err();
        assert!(matches!(err, ConfigError::Invalid(_)));
    }

    #[test]
    fn distances_must_match_device_count() {
        let err = NetworkConfig::from_str("n_devices = 3\ndistances = 5,5\n").unwrap_err();
        assert!(matches!(err, ConfigError::Invalid(_)));
    }
}

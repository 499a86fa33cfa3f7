//! Runtime configuration: key=value file format plus the `W2A_SEED`
//! environment override.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("io error reading config: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {0}: expected key=value, got {1:?}")]
    Malformed(usize, String),
    #[error("key {0}: invalid value {1:?}")]
    BadValue(&'static str, String),
}

/// All tunable knobs with their desk-scale defaults. Field names double as
/// the config-file keys.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Global seed; `W2A_SEED` env var overrides it.
    pub seed: u64,

    // sensor
    pub render_resolution: usize,
    pub cloud_points: usize,
    pub camera_fov_deg: f64,
    pub camera_distance: f64,

    // backbone
    pub sa_centers: [usize; 2],
    pub sa_neighbors: [usize; 2],
    pub sa_widths: [usize; 2],
    pub fp_width: usize,
    pub feature_width: usize,

    // training
    pub batch_size: usize,
    pub stage1_steps: usize,
    pub stage2_steps: usize,
    pub learning_rate: f64,
    pub proposals_per_point: usize,
    pub actionability_loss_weight: f64,
    /// Use geodesic angle between recovered rotations (true) or raw 6D L2
    /// (false) as the proposal-loss distance.
    pub geodesic_proposal_loss: bool,
    /// Steps between online collection trials during training (0 disables).
    pub online_every: usize,
    /// Steps before online collection starts.
    pub online_warmup: usize,
    pub softmax_temperature: f64,

    // collector
    pub offline_positive_target: usize,
    pub queue_capacity: usize,
    pub cloud_cache_capacity: usize,
    pub collect_workers: usize,

    // evaluation
    pub eval_trials: usize,
    pub eval_shapes: usize,

    // retained simulation constants (format compatibility; the quasi-static
    // oracle does not consume them)
    pub gravity: f64,
    pub restitution: f64,
    pub joint_stiffness: f64,
    pub joint_damping: f64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0,
            render_resolution: 168,
            cloud_points: 2048,
            camera_fov_deg: 35.0,
            camera_distance: 5.0,
            sa_centers: [512, 128],
            sa_neighbors: [16, 16],
            sa_widths: [64, 128],
            fp_width: 128,
            feature_width: 128,
            batch_size: 32,
            stage1_steps: 3000,
            stage2_steps: 6000,
            learning_rate: 1e-3,
            proposals_per_point: 100,
            actionability_loss_weight: 100.0,
            geodesic_proposal_loss: true,
            online_every: 2,
            online_warmup: 200,
            softmax_temperature: 1.0,
            offline_positive_target: 500,
            queue_capacity: 2048,
            cloud_cache_capacity: 2048,
            collect_workers: 0, // 0 = rayon default
            eval_trials: 1000,
            eval_shapes: 40,
            gravity: 9.81,
            restitution: 0.01,
            joint_stiffness: 0.0,
            joint_damping: 10.0,
        }
    }
}

impl Config {
    /// Reduced budget used by the acceptance suite and quick experiments:
    /// coarser renders, 512-point clouds, a narrower backbone and a short
    /// two-stage schedule. Sized for a laptop CPU.
    pub fn desk_small() -> Self {
        Self {
            render_resolution: 128,
            cloud_points: 512,
            sa_centers: [128, 32],
            sa_neighbors: [8, 8],
            sa_widths: [32, 64],
            fp_width: 64,
            batch_size: 16,
            stage1_steps: 500,
            stage2_steps: 1000,
            online_warmup: 100,
            ..Self::default()
        }
    }

    /// Applies the `W2A_SEED` environment override if present.
    pub fn apply_env(mut self) -> Result<Self, ConfigError> {
        if let Ok(v) = std::env::var("W2A_SEED") {
            self.seed = v
                .trim()
                .parse()
                .map_err(|_| ConfigError::BadValue("seed", v))?;
        }
        Ok(self)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    /// Parses `key=value` lines; `#` starts a comment, blank lines ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Malformed(lineno + 1, raw.to_string()));
            };
            self.set(key.trim(), value.trim())
                .map_err(|k| ConfigError::BadValue(k, value.trim().to_string()))?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), &'static str> {
        fn p<T: std::str::FromStr>(v: &str, k: &'static str) -> Result<T, &'static str> {
            v.parse().map_err(|_| k)
        }
        match key {
            "seed" => self.seed = p(value, "seed")?,
            "render_resolution" => self.render_resolution = p(value, "render_resolution")?,
            "cloud_points" => self.cloud_points = p(value, "cloud_points")?,
            "camera_fov_deg" => self.camera_fov_deg = p(value, "camera_fov_deg")?,
            "camera_distance" => self.camera_distance = p(value, "camera_distance")?,
            "sa_centers_1" => self.sa_centers[0] = p(value, "sa_centers_1")?,
            "sa_centers_2" => self.sa_centers[1] = p(value, "sa_centers_2")?,
            "sa_neighbors_1" => self.sa_neighbors[0] = p(value, "sa_neighbors_1")?,
            "sa_neighbors_2" => self.sa_neighbors[1] = p(value, "sa_neighbors_2")?,
            "sa_width_1" => self.sa_widths[0] = p(value, "sa_width_1")?,
            "sa_width_2" => self.sa_widths[1] = p(value, "sa_width_2")?,
            "fp_width" => self.fp_width = p(value, "fp_width")?,
            "feature_width" => self.feature_width = p(value, "feature_width")?,
            "batch_size" => self.batch_size = p(value, "batch_size")?,
            "stage1_steps" => self.stage1_steps = p(value, "stage1_steps")?,
            "stage2_steps" => self.stage2_steps = p(value, "stage2_steps")?,
            "learning_rate" => self.learning_rate = p(value, "learning_rate")?,
            "proposals_per_point" => self.proposals_per_point = p(value, "proposals_per_point")?,
            "actionability_loss_weight" => {
                self.actionability_loss_weight = p(value, "actionability_loss_weight")?
            }
            "geodesic_proposal_loss" => {
                self.geodesic_proposal_loss = p(value, "geodesic_proposal_loss")?
            }
            "online_every" => self.online_every = p(value, "online_every")?,
            "online_warmup" => self.online_warmup = p(value, "online_warmup")?,
            "softmax_temperature" => self.softmax_temperature = p(value, "softmax_temperature")?,
            "offline_positive_target" => {
                self.offline_positive_target = p(value, "offline_positive_target")?
            }
            "queue_capacity" => self.queue_capacity = p(value, "queue_capacity")?,
            "cloud_cache_capacity" => {
                self.cloud_cache_capacity = p(value, "cloud_cache_capacity")?
            }
            "collect_workers" => self.collect_workers = p(value, "collect_workers")?,
            "eval_trials" => self.eval_trials = p(value, "eval_trials")?,
            "eval_shapes" => self.eval_shapes = p(value, "eval_shapes")?,
            "gravity" => self.gravity = p(value, "gravity")?,
            "restitution" => self.restitution = p(value, "restitution")?,
            "joint_stiffness" => self.joint_stiffness = p(value, "joint_stiffness")?,
            "joint_damping" => self.joint_damping = p(value, "joint_damping")?,
            _ => return Err("unknown key"),
        }
        Ok(())
    }

    /// Serializes every knob as key=value lines (the parseable inverse of
    /// [`Config::apply_text`]).
    pub fn to_text(&self) -> String {
        let mut kv: BTreeMap<&'static str, String> = BTreeMap::new();
        kv.insert("seed", self.seed.to_string());
        kv.insert("render_resolution", self.render_resolution.to_string());
        kv.insert("cloud_points", self.cloud_points.to_string());
        kv.insert("camera_fov_deg", self.camera_fov_deg.to_string());
        kv.insert("camera_distance", self.camera_distance.to_string());
        kv.insert("sa_centers_1", self.sa_centers[0].to_string());
        kv.insert("sa_centers_2", self.sa_centers[1].to_string());
        kv.insert("sa_neighbors_1", self.sa_neighbors[0].to_string());
        kv.insert("sa_neighbors_2", self.sa_neighbors[1].to_string());
        kv.insert("sa_width_1", self.sa_widths[0].to_string());
        kv.insert("sa_width_2", self.sa_widths[1].to_string());
        kv.insert("fp_width", self.fp_width.to_string());
        kv.insert("feature_width", self.feature_width.to_string());
        kv.insert("batch_size", self.batch_size.to_string());
        kv.insert("stage1_steps", self.stage1_steps.to_string());
        kv.insert("stage2_steps", self.stage2_steps.to_string());
        kv.insert("learning_rate", self.learning_rate.to_string());
        kv.insert("proposals_per_point", self.proposals_per_point.to_string());
        kv.insert(
            "actionability_loss_weight",
            self.actionability_loss_weight.to_string(),
        );
        kv.insert(
            "geodesic_proposal_loss",
            self.geodesic_proposal_loss.to_string(),
        );
        kv.insert("online_every", self.online_every.to_string());
        kv.insert("online_warmup", self.online_warmup.to_string());
        kv.insert("softmax_temperature", self.softmax_temperature.to_string());
        kv.insert(
            "offline_positive_target",
            self.offline_positive_target.to_string(),
        );
        kv.insert("queue_capacity", self.queue_capacity.to_string());
        kv.insert(
            "cloud_cache_capacity",
            self.cloud_cache_capacity.to_string(),
        );
        kv.insert("collect_workers", self.collect_workers.to_string());
        kv.insert("eval_trials", self.eval_trials.to_string());
        kv.insert("eval_shapes", self.eval_shapes.to_string());
        kv.insert("gravity", self.gravity.to_string());
        kv.insert("restitution", self.restitution.to_string());
        kv.insert("joint_stiffness", self.joint_stiffness.to_string());
        kv.insert("joint_damping", self.joint_damping.to_string());
        let mut out = String::new();
        for (k, v) in kv {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_text() {
        let mut cfg = Config::default();
        cfg.batch_size = 7;
        cfg.geodesic_proposal_loss = false;
        let mut back = Config::default();
        back.apply_text(&cfg.to_text()).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn rejects_malformed_lines() {
        let mut cfg = Config::default();
        assert!(matches!(
            cfg.apply_text("batch_size 3"),
            Err(ConfigError::Malformed(1, _))
        ));
        assert!(matches!(
            cfg.apply_text("batch_size=oops"),
            Err(ConfigError::BadValue(_, _))
        ));
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let mut cfg = Config::default();
        cfg.apply_text("# a comment\n\nbatch_size=4\n").unwrap();
        assert_eq!(cfg.batch_size, 4);
    }
}

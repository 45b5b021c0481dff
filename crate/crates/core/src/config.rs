use serde::{Deserialize, Serialize};

use crate::error::{Result, SamkdError};

/// How masking thresholds are interpreted against an attention map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdMode {
    /// Threshold is a multiplier on the mean of the attention map.
    Relative,
    /// Threshold is compared against attention entries directly.
    Absolute,
}

/// Direction of the KL term in logit distillation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KlDirection {
    /// KL(teacher || student): the standard distillation direction.
    Forward,
    /// KL(student || teacher).
    Reverse,
}

/// Every scalar hyperparameter of the distillation objective.
///
/// Defaults are the best-performing values reported for the method:
/// `lambda`/`mu` = 0.45/0.55, `omega_s`/`omega_c` = 0.95/0.50,
/// `alpha` = 2.0e-3, `beta` = 6.0e-6.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DistillConfig {
    /// Attention distribution temperature.
    pub tau: f64,
    /// Spatial masking threshold.
    pub omega_s: f64,
    /// Channel masking threshold.
    pub omega_c: f64,
    /// Weight of the convolution-reconstructed branch.
    pub lambda: f64,
    /// Weight of the perceptron-reconstructed branch.
    pub mu: f64,
    /// Feature-distillation tradeoff weight.
    pub alpha: f64,
    /// Logit-distillation tradeoff weight.
    pub beta: f64,
    /// Softmax temperature for the pooled-logit KL term.
    pub logit_temperature: f64,
    /// Pyramid grid sizes, ascending; the full method uses [1, 2, 4].
    pub grid_sizes: Vec<usize>,
    /// Enable spatially hierarchical feature masking distillation.
    pub enable_sfd: bool,
    /// Enable spatial-aware adaptive logit distillation.
    pub enable_sld: bool,
    /// Masking threshold semantics.
    pub threshold_mode: ThresholdMode,
    /// KL direction for the logit loss.
    pub kl_direction: KlDirection,
    /// Weight pooled-logit KL terms by teacher-student feature difference.
    /// Disabling this gives conventional (uniformly weighted) logit distillation.
    pub adaptive_weights: bool,
}

impl Default for DistillConfig {
    fn default() -> Self {
        DistillConfig {
            tau: 1.0,
            omega_s: 0.95,
            omega_c: 0.50,
            lambda: 0.45,
            mu: 0.55,
            alpha: 2.0e-3,
            beta: 6.0e-6,
            logit_temperature: 1.0,
            grid_sizes: vec![1, 2, 4],
            enable_sfd: true,
            enable_sld: true,
            threshold_mode: ThresholdMode::Relative,
            kl_direction: KlDirection::Forward,
            adaptive_weights: true,
        }
    }
}

impl DistillConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau > 0.0) {
            return Err(SamkdError::InvalidHyperparameter(format!(
                "tau must be positive, got {}",
                self.tau
            )));
        }
        if !(self.omega_s > 0.0) || !(self.omega_c > 0.0) {
            return Err(SamkdError::InvalidHyperparameter(format!(
                "masking thresholds must be positive, got omega_s={} omega_c={}",
                self.omega_s, self.omega_c
            )));
        }
        if self.lambda < 0.0 || self.mu < 0.0 {
            return Err(SamkdError::InvalidHyperparameter(format!(
                "lambda/mu must be non-negative, got {}/{}",
                self.lambda, self.mu
            )));
        }
        if self.alpha < 0.0 || self.beta < 0.0 {
            return Err(SamkdError::InvalidHyperparameter(format!(
                "alpha/beta must be non-negative, got {}/{}",
                self.alpha, self.beta
            )));
        }
        if !(self.logit_temperature > 0.0) {
            return Err(SamkdError::InvalidHyperparameter(format!(
                "logit temperature must be positive, got {}",
                self.logit_temperature
            )));
        }
        if self.grid_sizes.is_empty() {
            return Err(SamkdError::InvalidConfig(
                "grid_sizes must not be empty".into(),
            ));
        }
        if self.grid_sizes.iter().any(|&g| g == 0) {
            return Err(SamkdError::InvalidConfig("grid sizes must be positive".into()));
        }
        if self.grid_sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SamkdError::InvalidConfig(
                "grid sizes must be strictly ascending".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid_and_match_reported_best_values() {
        let c = DistillConfig::default();
        c.validate().unwrap();
        assert_eq!(c.lambda, 0.45);
        assert_eq!(c.mu, 0.55);
        assert_eq!(c.omega_s, 0.95);
        assert_eq!(c.omega_c, 0.50);
        assert_eq!(c.alpha, 2.0e-3);
        assert_eq!(c.beta, 6.0e-6);
        assert_eq!(c.grid_sizes, vec![1, 2, 4]);
    }

    #[test]
    fn rejects_bad_hyperparameters() {
        let mut c = DistillConfig::default();
        c.tau = 0.0;
        assert!(c.validate().is_err());

        let mut c = DistillConfig::default();
        c.grid_sizes = vec![2, 2];
        assert!(c.validate().is_err());

        let mut c = DistillConfig::default();
        c.omega_s = -0.1;
        assert!(c.validate().is_err());
    }
}

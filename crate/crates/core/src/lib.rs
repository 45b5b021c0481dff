//! Spatial-aware adaptive masking knowledge distillation (SAMKD) for dense
//! object detection, implemented at desk scale.
//!
//! The crate provides the full loss machinery — spatial-pyramid region
//! partitioning, dual teacher attention, attention-guided binary masking,
//! dual-block feature reconstruction, and adaptively weighted region-pooled
//! logit distillation — together with a toy teacher/student detector pair,
//! a synthetic shapes dataset, and a deterministic training/evaluation loop
//! so the ablation axes of the method can be exercised end to end on a CPU.
//!
//! Layout:
//! - [`pyramid`]: coarse-to-fine region tiling of feature maps
//! - [`attention`]: spatial/channel attention from teacher features
//! - [`masking`]: binary masks and their application to student features
//! - [`reconstruction`]: dual reconstruction blocks and the feature loss
//! - [`logitdistill`]: region-pooled, difference-weighted KL logit loss
//! - [`trainer`]: toy detectors, synthetic data, combined objective, training
//! - [`oracle`]: slow scalar-loop references used to certify every kernel
//! - [`nn`]: the minimal reverse-mode tape the trainer differentiates with

pub mod attention;
pub mod config;
pub mod data;
pub mod detector;
pub mod detloss;
pub mod distill;
pub mod error;
pub mod eval;
pub mod logitdistill;
pub mod masking;
pub mod nn;
pub mod oracle;
pub mod pyramid;
pub mod reconstruction;
pub mod trainer;

pub use config::{DistillConfig, KlDirection, ThresholdMode};
pub use error::{Result, SamkdError};
pub use pyramid::{PyramidPartition, Region};

/// Dense rank-3 feature tensor, height x width x channels.
pub type FeatureMap = ndarray::Array3<f64>;
/// Dense per-location class scores, height x width x classes.
pub type LogitMap = ndarray::Array3<f64>;

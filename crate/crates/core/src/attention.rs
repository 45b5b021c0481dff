//! Dual attention maps derived from teacher features.
//!
//! For a region of shape H_R x W_R x C, the spatial map scores each pixel by
//! the squared L2 norm of its channel embedding scaled by 1/(tau*C), and the
//! channel vector scores each channel by its pixel mean scaled by 1/tau; both
//! pass through a sigmoid, so entries live strictly inside (0, 1).

use ndarray::{Array3, ArrayView3};

use crate::error::{Result, SamkdError};

/// Spatial (H_R x W_R x 1) and channel (1 x 1 x C) attention for one region.
#[derive(Debug, Clone, PartialEq)]
pub struct AttentionPair {
    pub spatial: Array3<f64>,
    pub channel: Array3<f64>,
}

pub(crate) fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0) {
        return Err(SamkdError::InvalidHyperparameter(format!(
            "attention temperature must be positive, got {}",
            tau
        )));
    }
    Ok(())
}

/// Per-pixel attention: sigmoid of squared channel-embedding norms / (tau * C).
pub fn spatial_attention(region: ArrayView3<'_, f64>, tau: f64) -> Result<Array3<f64>> {
    check_tau(tau)?;
    let (h, w, c) = region.dim();
    if c == 0 {
        return Err(SamkdError::InvalidShape("region has zero channels".into()));
    }
    let scale = 1.0 / (tau * c as f64);
    let mut out = Array3::zeros((h, w, 1));
    for i in 0..h {
        for j in 0..w {
            let mut sq = 0.0;
            for k in 0..c {
                let v = region[[i, j, k]];
                sq += v * v;
            }
            out[[i, j, 0]] = sigmoid(sq * scale);
        }
    }
    Ok(out)
}

/// Per-channel attention: sigmoid of the pixel mean of each channel / tau.
pub fn channel_attention(region: ArrayView3<'_, f64>, tau: f64) -> Result<Array3<f64>> {
    check_tau(tau)?;
    let (h, w, c) = region.dim();
    if h * w == 0 {
        return Err(SamkdError::InvalidShape("region has zero pixels".into()));
    }
    let scale = 1.0 / (tau * (h * w) as f64);
    let mut out = Array3::zeros((1, 1, c));
    for k in 0..c {
        let mut sum = 0.0;
        for i in 0..h {
            for j in 0..w {
                sum += region[[i, j, k]];
            }
        }
        out[[0, 0, k]] = sigmoid(sum * scale);
    }
    Ok(out)
}

/// Both attention maps of one teacher region.
pub fn attention_pair(region: ArrayView3<'_, f64>, tau: f64) -> Result<AttentionPair> {
    Ok(AttentionPair {
        spatial: spatial_attention(region, tau)?,
        channel: channel_attention(region, tau)?,
    })
}
